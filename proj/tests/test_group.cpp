#include "doctest.h"

#include "torsorlab/group.hpp"
#include "torsorlab/subset.hpp"

#include <set>
#include <vector>

using namespace torsorlab;

TEST_CASE("cyclic groups") {
    GroupRef z1 = make_cyclic(1);
    CHECK(z1->order() == 1);
    CHECK(z1->add(0, 0) == 0);
    CHECK(z1->identity() == 0);

    GroupRef z4 = make_cyclic(4);
    CHECK(z4->order() == 4);
    CHECK(z4->add(1, 3) == 0);
    CHECK(z4->add(2, 3) == 1);
    CHECK(z4->neg(1) == 3);
    CHECK(z4->neg(0) == 0);
    CHECK(z4->is_abelian());

    GroupRef z6 = make_cyclic(6);
    std::vector<Element> inv;
    for (Element g = 0; g < 6; ++g) inv.push_back(z6->neg(g));
    CHECK(inv == std::vector<Element>{0, 5, 4, 3, 2, 1});
}

TEST_CASE("direct products") {
    GroupRef z2 = make_cyclic(2);
    GroupRef k = make_direct_product(z2, z2);
    CHECK(k->order() == 4);
    for (Element g = 0; g < 4; ++g) CHECK(k->add(g, g) == k->identity());

    // Coprime orders give a cyclic product.
    GroupRef z3 = make_cyclic(3);
    GroupRef z2xz3 = make_direct_product(z2, z3);
    CHECK(z2xz3->order() == 6);
    CHECK(is_isomorphic(z2xz3, make_cyclic(6)));

    GroupRef s3 = make_symmetric(3);
    GroupRef big = make_direct_product(s3, z2);
    CHECK(big->order() == 12);
    CHECK_FALSE(big->is_abelian());
    CHECK(big->name() == "s3xz2");
}

TEST_CASE("symmetric and dihedral groups") {
    CHECK(make_symmetric(1)->order() == 1);
    GroupRef s3 = make_symmetric(3);
    CHECK(s3->order() == 6);
    CHECK_FALSE(s3->is_abelian());
    CHECK(make_symmetric(4)->order() == 24);

    CHECK(is_isomorphic(make_dihedral(2), make_klein_four()));
    CHECK(is_isomorphic(make_dihedral(3), s3));

    GroupRef d4 = make_dihedral(4);
    CHECK(d4->order() == 8);
    CHECK_FALSE(d4->is_abelian());
    CHECK(d4->center_elements().size() == 2);

    GroupRef q8 = make_quaternion();
    CHECK(q8->order() == 8);
    CHECK(q8->center_elements().size() == 2);
    CHECK_FALSE(is_isomorphic(q8, d4));
}

TEST_CASE("explicit Cayley tables are validated") {
    GroupRef z2 = FiniteGroup::from_cayley_table("swap", {{0, 1}, {1, 0}});
    CHECK(z2->order() == 2);
    CHECK(z2->add(1, 1) == 0);

    // Second row repeats 1, so right translation by column 1 is not a bijection.
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table("bad", {{0, 1}, {1, 1}}),
                    CayleyValidationError);
    // Latin square that is not associative.
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table("loop",
                                                   {{0, 1, 2, 3, 4},
                                                    {1, 0, 3, 4, 2},
                                                    {2, 4, 0, 1, 3},
                                                    {3, 2, 4, 0, 1},
                                                    {4, 3, 1, 2, 0}}),
                    CayleyValidationError);
    CHECK_THROWS_AS(make_symmetric(6), CorpusLimitError);
}

TEST_CASE("opposite group") {
    GroupRef z6 = make_cyclic(6);
    GroupRef z6op = opposite(z6);
    for (Element g = 0; g < 6; ++g)
        for (Element h = 0; h < 6; ++h) CHECK(z6op->add(g, h) == z6->add(g, h));

    GroupRef s3 = make_symmetric(3);
    GroupRef op = opposite(s3);
    bool differs = false;
    for (Element g = 0; g < 6; ++g)
        for (Element h = 0; h < 6; ++h) {
            CHECK(op->add(g, h) == s3->add(h, g));
            if (op->add(g, h) != s3->add(g, h)) differs = true;
        }
    CHECK(differs);
    CHECK(is_isomorphic(s3, op));  // inversion is an isomorphism onto the opposite

    GroupRef opop = opposite(op);
    for (Element g = 0; g < 6; ++g)
        for (Element h = 0; h < 6; ++h) CHECK(opop->add(g, h) == s3->add(g, h));
}

TEST_CASE("element order and cosets") {
    GroupRef z6 = make_cyclic(6);
    CHECK(z6->element_order(0) == 1);
    CHECK(z6->element_order(1) == 6);
    CHECK(z6->element_order(2) == 3);
    CHECK(z6->element_order(3) == 2);

    GroupRef z4 = make_cyclic(4);
    Subset b = Subset::of(z4, {0, 2});
    auto cosets = left_cosets(z4, b);
    REQUIRE(cosets.size() == 2);
    CHECK(cosets[0] == Subset::of(z4, {0, 2}));
    CHECK(cosets[1] == Subset::of(z4, {1, 3}));

    GroupRef s3 = make_symmetric(3);
    // Any order-2 subgroup has three left cosets of size 2.
    for (const Subset& h : grassmannian(s3)) {
        if (h.size() != 2) continue;
        auto cs = left_cosets(s3, h);
        CHECK(cs.size() == 3);
        for (const Subset& c : cs) CHECK(c.size() == 2);
        std::set<Element> seen;
        for (const Subset& c : cs)
            for (Element e : c.elements()) seen.insert(e);
        CHECK(seen.size() == 6);
    }
}
