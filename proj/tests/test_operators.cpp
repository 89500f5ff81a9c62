#include "doctest.h"

#include "torsorlab/group.hpp"
#include "torsorlab/operators.hpp"
#include "torsorlab/structure_maps.hpp"
#include "torsorlab/subset.hpp"

#include <set>
#include <stdexcept>

using namespace torsorlab;

namespace {

bool maps_bijectively(const MapGraph& f) {
    std::set<Element> image;
    for (Element e : f.domain.elements()) {
        if (!f.codomain.contains(f(e))) return false;
        image.insert(f(e));
    }
    return static_cast<int>(image.size()) == f.domain.size() &&
           static_cast<int>(image.size()) == f.codomain.size();
}

}  // namespace

TEST_CASE("projections extract decomposition components") {
    GroupRef z4 = make_cyclic(4);
    Subset a = Subset::of(z4, {0, 2});
    Subset x = Subset::of(z4, {0, 1});

    ElementMap second = proj(a, x, Side::left);   // x-part
    ElementMap first = proj(a, x, Side::right);   // a-part
    CHECK(second.value == std::vector<Element>{0, 1, 0, 1});
    CHECK(first.value == std::vector<Element>{0, 0, 2, 2});
    for (Element w = 0; w < 4; ++w) {
        CHECK(z4->add(first(w), second(w)) == w);
        CHECK(a.contains(first(w)));
        CHECK(x.contains(second(w)));
    }

    CHECK_THROWS_AS(proj(a, a, Side::left), std::invalid_argument);
    CHECK_THROWS_AS(proj(Subset::of(z4, {0, 1}), Subset::of(z4, {0, 1}), Side::left),
                    std::invalid_argument);

    // Idempotency of the component extractors.
    CHECK(compose(second, second) == second);
    CHECK(compose(first, first) == first);
}

TEST_CASE("transvections move sections of a common subgroup") {
    GroupRef z4 = make_cyclic(4);
    Subset b = Subset::of(z4, {0, 2});
    Subset x = Subset::of(z4, {0, 1});
    Subset y = Subset::of(z4, {2, 3});

    ElementMap t = transvection(b, x, y);
    // On y the transvection lands in x: it carries section to section.
    for (Element w : y.elements()) CHECK(x.contains(t(w)));
    CHECK(transvection(b, x, x) == identity_map(z4));
    // Composition law along a chain of sections.
    Subset z = Subset::of(z4, {0, 3});
    CHECK(compose(transvection(b, x, y), transvection(b, y, z)) == transvection(b, x, z));
    // Inverse pair.
    CHECK(compose(transvection(b, x, y), transvection(b, y, x)) == identity_map(z4));

    // The three pointwise forms coincide as ordered sums.
    ElementMap id = identity_map(z4);
    ElementMap pxb = proj(x, b, Side::left), pyb = proj(y, b, Side::left);
    ElementMap cxb = proj(x, b, Side::right), cyb = proj(y, b, Side::right);
    ElementMap form1 = pointwise_add(pointwise_add(id, pointwise_neg(pxb)), pyb);
    ElementMap form2 = pointwise_add(cxb, pyb);
    ElementMap form3 = pointwise_add(pointwise_add(cxb, pointwise_neg(cyb)), id);
    CHECK(form1 == t);
    CHECK(form2 == t);
    CHECK(form3 == t);
}

TEST_CASE("mirror transvections for a left subgroup") {
    GroupRef s3 = make_symmetric(3);
    for (const Subset& a : grassmannian(s3)) {
        auto sections = right_transversal_set(s3, a);
        for (const Subset& x : sections)
            for (const Subset& y : sections) {
                ElementMap t = transvection_check(a, x, y);
                for (Element w : y.elements()) CHECK(x.contains(t(w)));

                ElementMap id = identity_map(s3);
                ElementMap pax = proj(a, x, Side::left), pay = proj(a, y, Side::left);
                ElementMap cax = proj(a, x, Side::right), cay = proj(a, y, Side::right);
                ElementMap form1 = pointwise_add(pointwise_add(cay, pointwise_neg(cax)), id);
                ElementMap form2 = pointwise_add(cay, pax);
                ElementMap form3 = pointwise_add(pointwise_add(id, pointwise_neg(pay)), pax);
                CHECK(form1 == t);
                CHECK(form2 == t);
                CHECK(form3 == t);
            }
    }
}

TEST_CASE("multiplication operators realize the balanced map pointwise") {
    GroupRef z4 = make_cyclic(4);
    Subset x = Subset::of(z4, {0, 1});
    Subset a = Subset::of(z4, {0, 2});
    Subset b = Subset::of(z4, {0, 2});
    Subset z = Subset::of(z4, {0, 1});
    Subset unused = Subset::empty(z4);

    ElementMap m = mult_operator(MultKind::middle, x, a, unused, b, z);
    for (Element eta = 0; eta < 4; ++eta)
        CHECK(gamma(x, a, Subset::singleton(z4, eta), b, z) == Subset::singleton(z4, m(eta)));

    // Left operator: second factor enters negated, so y must be transversal to -b.
    Subset bl = Subset::of(z4, {0, 1});
    Subset yl = Subset::of(z4, {0, 2});
    ElementMap l = mult_operator(MultKind::left, x, a, yl, bl, unused);
    CHECK(l(1) == 3);
    for (Element zeta = 0; zeta < 4; ++zeta)
        CHECK(gamma(x, a, yl, bl, Subset::singleton(z4, zeta)) == Subset::singleton(z4, l(zeta)));

    // Right operator mirrors it: the first factor enters negated.
    Subset ar = Subset::of(z4, {0, 3});
    Subset yr = Subset::of(z4, {0, 2});
    Subset br = Subset::of(z4, {0, 2});
    Subset zr = Subset::of(z4, {0, 1});
    ElementMap r = mult_operator(MultKind::right, unused, ar, yr, br, zr);
    for (Element xi = 0; xi < 4; ++xi)
        CHECK(gamma(Subset::singleton(z4, xi), ar, yr, br, zr) == Subset::singleton(z4, r(xi)));

    CHECK_THROWS_AS(mult_operator(MultKind::middle, x, x, unused, b, z), std::invalid_argument);
}

TEST_CASE("canonical kernel pair") {
    GroupRef z4 = make_cyclic(4);
    Subset a = Subset::of(z4, {0, 2});
    Subset x = Subset::of(z4, {0, 1});
    Subset b = Subset::of(z4, {0, 2});

    // a is transversal to y: K is a bijection y -> x.
    Subset y = Subset::of(z4, {0, 3});
    CanonicalKernel ker = canonical_kernel(a, x, y, b);
    CHECK(ker.K.domain == y);
    CHECK(ker.K.codomain == x);
    CHECK(ker.K(0) == 0);
    CHECK(ker.K(3) == 1);
    CHECK(maps_bijectively(ker.K));
    CHECK(maps_bijectively(ker.B));

    // a fails to be transversal to y: the restricted projection collapses.
    Subset ybad = Subset::of(z4, {0, 2});
    MapGraph flat = restrict_map(proj(a, x, Side::left), ybad, x);
    CHECK(flat(0) == flat(2));
    CHECK_FALSE(maps_bijectively(flat));

    // K is bijective exactly when a is transversal to the domain, over every
    // subset of the group.
    for (const Subset& dom : all_subsets(z4)) {
        MapGraph K = restrict_map(proj(a, x, Side::left), dom, x);
        CHECK(maps_bijectively(K) == is_left_transversal(a, dom));
    }
    // B is bijective exactly when a is transversal to x; sections of {0,1}
    // supply the failing side, sections of {0,2} the passing side.
    for (const Subset& bb : {Subset::of(z4, {0, 2}), Subset::of(z4, {0, 1})})
        for (const Subset& xx : left_transversal_set(z4, bb)) {
            CanonicalKernel k = canonical_kernel(a, xx, y, bb);
            CHECK(maps_bijectively(k.B) == is_left_transversal(a, xx));
        }
}

TEST_CASE("element map algebra") {
    GroupRef s3 = make_symmetric(3);
    ElementMap id = identity_map(s3);
    Subset b = grassmannian(s3)[1];  // an order-2 subgroup
    REQUIRE(b.size() == 2);
    auto sections = left_transversal_set(s3, b);
    ElementMap f = transvection(b, sections[0], sections[1]);
    ElementMap g = transvection(b, sections[1], sections[2]);
    ElementMap h = transvection(b, sections[2], sections[3]);

    CHECK(compose(f, id) == f);
    CHECK(compose(id, f) == f);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));

    ElementMap zero = pointwise_add(f, pointwise_neg(f));
    for (Element w = 0; w < 6; ++w) CHECK(zero(w) == s3->identity());
}
