#include "doctest.h"

#include "torsorlab/group.hpp"
#include "torsorlab/subset.hpp"

#include <algorithm>
#include <stdexcept>

using namespace torsorlab;

TEST_CASE("subset basics and formatting") {
    GroupRef z6 = make_cyclic(6);
    Subset s = Subset::of(z6, {0, 2, 4});
    CHECK(s.size() == 3);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(1));
    CHECK(format_subset(s) == "0,2,4");
    CHECK(format_subset(Subset::empty(z6)) == "-");

    CHECK(parse_subset(z6, "0,2,4") == s);
    CHECK(parse_subset(z6, "4,2,0,2") == s);  // order and repeats are immaterial
    CHECK(parse_subset(z6, "-") == Subset::empty(z6));
    CHECK(parse_subset(z6, "") == Subset::empty(z6));
    CHECK_THROWS_AS(parse_subset(z6, "0,9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subset(z6, "0,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subset(z6, "two"), std::invalid_argument);

    CHECK(s.mask64() == 0b010101u);
    CHECK(Subset::from_mask64(z6, 0b010101u) == s);

    Subset t = Subset::of(z6, {0, 1, 2});
    CHECK((s & t) == Subset::of(z6, {0, 2}));
    CHECK((s | t) == Subset::of(z6, {0, 1, 2, 4}));
    CHECK(Subset::of(z6, {0, 2}).is_subset_of(s));
    CHECK_FALSE(t.is_subset_of(s));
}

TEST_CASE("sumset, negate, translates") {
    GroupRef z6 = make_cyclic(6);
    Subset a = Subset::of(z6, {0, 3});
    Subset b = Subset::of(z6, {0, 2, 4});
    CHECK(sumset(a, b) == Subset::full(z6));
    CHECK(sumset(a, Subset::empty(z6)) == Subset::empty(z6));
    CHECK(negate(Subset::of(z6, {1, 2})) == Subset::of(z6, {5, 4}));
    CHECK(left_translate(1, b) == Subset::of(z6, {1, 3, 5}));
    CHECK(right_translate(b, 1) == Subset::of(z6, {1, 3, 5}));

    GroupRef s3 = make_symmetric(3);
    // In a nonabelian group sumsets of general subsets need not commute.
    bool found_noncommuting = false;
    for (const Subset& x : all_subsets(s3))
        for (const Subset& y : all_subsets(s3))
            if (sumset(x, y) != sumset(y, x)) found_noncommuting = true;
    CHECK(found_noncommuting);
}

TEST_CASE("subgroup predicate and grassmannian") {
    GroupRef z4 = make_cyclic(4);
    CHECK(is_subgroup(Subset::of(z4, {0, 2})));
    CHECK_FALSE(is_subgroup(Subset::of(z4, {0, 1})));
    CHECK_FALSE(is_subgroup(Subset::of(z4, {1, 3})));
    CHECK_FALSE(is_subgroup(Subset::empty(z4)));

    CHECK(grassmannian(z4).size() == 3);
    CHECK(grassmannian(make_klein_four()).size() == 5);
    CHECK(grassmannian(make_symmetric(3)).size() == 6);
    CHECK(grassmannian(make_cyclic(6)).size() == 4);
    CHECK(grassmannian(make_dihedral(4)).size() == 10);
    CHECK(grassmannian(make_quaternion()).size() == 6);

    // Every reported subgroup passes the predicate and the list is sorted.
    auto gras = grassmannian(make_dihedral(4));
    for (const Subset& h : gras) CHECK(is_subgroup(h));
    CHECK(std::is_sorted(gras.begin(), gras.end(), subset_less));
}

TEST_CASE("transversality") {
    GroupRef z4 = make_cyclic(4);
    Subset b = Subset::of(z4, {0, 2});
    CHECK(is_left_transversal(Subset::of(z4, {0, 1}), b));
    CHECK(is_left_transversal(Subset::of(z4, {1, 2}), b));
    CHECK_FALSE(is_left_transversal(b, b));
    CHECK_FALSE(is_left_transversal(Subset::of(z4, {0, 1, 2}), b));  // sizes must multiply to 4

    auto sections = left_transversal_set(z4, b);
    REQUIRE(sections.size() == 4);
    CHECK(sections[0] == Subset::of(z4, {0, 1}));
    CHECK(sections[1] == Subset::of(z4, {0, 3}));
    CHECK(sections[2] == Subset::of(z4, {1, 2}));
    CHECK(sections[3] == Subset::of(z4, {2, 3}));
    for (const Subset& x : sections) CHECK(is_left_transversal(x, b));

    // General (non subgroup) second factor via exact cover: {0,1} works too.
    auto general = left_transversal_set(z4, Subset::of(z4, {0, 1}));
    CHECK(general.size() == 2);  // {0,2} and {1,3}
    for (const Subset& x : general) CHECK(is_left_transversal(x, Subset::of(z4, {0, 1})));

    GroupRef s3 = make_symmetric(3);
    for (const Subset& h : grassmannian(s3)) {
        auto xs = left_transversal_set(s3, h);
        size_t expected = 1;
        for (int i = 0; i < 6 / h.size(); ++i) expected *= static_cast<size_t>(h.size());
        CHECK(xs.size() == expected);  // |b|^[G:b] sections
    }
}

TEST_CASE("map graphs round trip through transversals") {
    GroupRef z4 = make_cyclic(4);
    Subset b = Subset::of(z4, {0, 2});
    Subset y = Subset::of(z4, {0, 1});
    Subset x = Subset::of(z4, {2, 3});

    MapGraph f = map_from_transversal(x, y, b);
    CHECK(f.domain == y);
    CHECK(f.codomain == b);
    CHECK(f(0) == 2);
    CHECK(f(1) == 2);
    CHECK(graph_of_map(f, GraphSide::left) == x);

    // Every section of b arises from exactly one map y -> b.
    for (const Subset& s : left_transversal_set(z4, b)) {
        MapGraph g = map_from_transversal(s, y, b);
        CHECK(graph_of_map(g, GraphSide::left) == s);
    }

    CHECK_THROWS_AS(map_from_transversal(Subset::of(z4, {0, 2}), y, b), std::invalid_argument);

    MapGraph id_y(y, y);
    id_y.set(0, 0);
    id_y.set(1, 1);
    CHECK(compose(f, id_y) == f);

    MapGraph partial(Subset::of(z4, {0}), b);
    partial.set(0, 0);
    CHECK_THROWS_AS(compose(partial, f), std::domain_error);  // f(0)=2 is outside the domain
}
