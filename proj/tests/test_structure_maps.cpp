#include "doctest.h"

#include "torsorlab/group.hpp"
#include "torsorlab/structure_maps.hpp"
#include "torsorlab/subset.hpp"

#include <random>
#include <string>

using namespace torsorlab;

namespace {

Subset random_subset(const GroupRef& g, std::mt19937& rng) {
    std::uniform_int_distribution<uint64_t> dist(0, (uint64_t(1) << g->order()) - 1);
    return Subset::from_mask64(g, dist(rng));
}

}  // namespace

TEST_CASE("balanced map on explicit configurations") {
    GroupRef z6 = make_cyclic(6);
    Subset x = Subset::of(z6, {0, 3});
    Subset a = Subset::of(z6, {0, 2, 4});
    CHECK(gamma(x, a, x, a, x) == x);

    // Singleton y pins the middle: only w with alpha + w + beta = eta survive.
    GroupRef z4 = make_cyclic(4);
    Subset omega4 = Subset::full(z4);
    for (Element xi = 0; xi < 4; ++xi)
        for (Element eta = 0; eta < 4; ++eta)
            for (Element zeta = 0; zeta < 4; ++zeta) {
                Subset got = gamma(Subset::singleton(z4, xi), omega4, Subset::singleton(z4, eta),
                                   omega4, Subset::singleton(z4, zeta));
                Element expect = z4->add(z4->add(xi, z4->neg(eta)), zeta);
                CHECK(got == Subset::singleton(z4, expect));
            }

    // Empty quantified subsets kill the map; empty x only constrains x-membership.
    CHECK(gamma(x, Subset::empty(z6), x, a, x) == Subset::empty(z6));
    CHECK(gamma(x, a, x, Subset::empty(z6), x) == Subset::empty(z6));
    CHECK(gamma(Subset::empty(z6), a, x, a, x) == Subset::empty(z6));
}

TEST_CASE("first slot is a union of singleton evaluations") {
    GroupRef s3 = make_symmetric(3);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Subset x = random_subset(s3, rng), a = random_subset(s3, rng), y = random_subset(s3, rng);
        Subset b = random_subset(s3, rng), z = random_subset(s3, rng);
        Subset whole = gamma(x, a, y, b, z);
        Subset u = Subset::empty(s3);
        for (Element xi : x.elements()) u = u | gamma(Subset::singleton(s3, xi), a, y, b, z);
        CHECK(whole == u);
    }
}

TEST_CASE("fast maps agree with the tuple-space oracles") {
    std::mt19937 rng(23);
    for (GroupRef g : {make_symmetric(3), make_direct_product(make_cyclic(2), make_cyclic(4))}) {
        for (int trial = 0; trial < 150; ++trial) {
            Subset x = random_subset(g, rng), a = random_subset(g, rng), y = random_subset(g, rng);
            Subset b = random_subset(g, rng), z = random_subset(g, rng);
            CHECK(gamma(x, a, y, b, z) == gamma_oracle(x, a, y, b, z));
            CHECK(gamma_check(x, a, y, b, z) == gamma_check_oracle(x, a, y, b, z));
            CHECK(sigma(b, x, y, z) == sigma_oracle(b, x, y, z));
            CHECK(sigma_check(b, x, y, z) == sigma_check_oracle(b, x, y, z));
        }
    }
}

TEST_CASE("mirror maps and the opposite group") {
    GroupRef z6 = make_cyclic(6);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Subset x = random_subset(z6, rng), a = random_subset(z6, rng), y = random_subset(z6, rng);
        Subset b = random_subset(z6, rng), z = random_subset(z6, rng);
        CHECK(gamma(x, a, y, b, z) == gamma_check(x, a, y, b, z));
        CHECK(sigma(b, x, y, z) == sigma_check(b, x, y, z));
    }

    GroupRef s3 = make_symmetric(3);
    GroupRef op = opposite(s3);
    bool differs = false;
    for (int trial = 0; trial < 100; ++trial) {
        Subset x = random_subset(s3, rng), a = random_subset(s3, rng), y = random_subset(s3, rng);
        Subset b = random_subset(s3, rng), z = random_subset(s3, rng);
        Subset mirrored = gamma_check(x, a, y, b, z);
        if (mirrored != gamma(x, a, y, b, z)) differs = true;
        // The mirror map is the plain map computed in the opposite group.
        Subset viaop = gamma(Subset::from_mask64(op, x.mask64()), Subset::from_mask64(op, a.mask64()),
                             Subset::from_mask64(op, y.mask64()), Subset::from_mask64(op, b.mask64()),
                             Subset::from_mask64(op, z.mask64()));
        CHECK(mirrored.mask64() == viaop.mask64());
    }
    CHECK(differs);
}

TEST_CASE("unbalanced map torsor identity on a section pair") {
    GroupRef z4 = make_cyclic(4);
    Subset b = Subset::of(z4, {0, 2});
    Subset x = Subset::of(z4, {0, 1});
    Subset z = Subset::of(z4, {2, 3});
    CHECK(sigma(b, x, x, z) == z);
    CHECK(sigma(b, z, z, x) == x);
    CHECK(sigma(b, x, z, z) == x);
}

TEST_CASE("structure space membership and size") {
    GroupRef z4 = make_cyclic(4);
    StructureTuple t;
    t[Letter::xi] = 1;
    t[Letter::zeta] = 2;
    t[Letter::alpha] = 1;
    t[Letter::beta] = 0;
    t[Letter::eta] = 2;
    t[Letter::omega] = 1;
    CHECK(structure_member(z4, t));

    t[Letter::eta] = 3;  // breaks eta = alpha + omega + beta
    CHECK_FALSE(structure_member(z4, t));

    GroupRef z3 = make_cyclic(3);
    long long count = 0;
    for_each_structure_tuple(z3, [&](const StructureTuple& p) {
        ++count;
        CHECK(structure_member(z3, p));
    });
    CHECK(count == 27);  // alpha, beta, omega free; the rest determined
}

TEST_CASE("sign vectors") {
    auto all = SignVector::all();
    CHECK(all.size() == 64);
    CHECK(all[0].str() == "(+,+;+,+;+,+)");
    CHECK(all[63].str() == "(-,-;-,-;-,-)");

    GroupRef z4 = make_cyclic(4);
    StructureTuple t;
    t[Letter::xi] = 1;
    t[Letter::zeta] = 2;
    t[Letter::alpha] = 1;
    t[Letter::beta] = 0;
    t[Letter::eta] = 2;
    t[Letter::omega] = 1;
    for (const SignVector& s : all) {
        StructureTuple twice = apply_signs(z4, s, apply_signs(z4, s, t));
        CHECK(twice == t);  // coordinatewise negation is an involution
        CHECK(signed_member(z4, s, apply_signs(z4, s, t)) == structure_member(z4, t));
    }
    CHECK(signed_member(z4, all[0], t) == structure_member(z4, t));
}

TEST_CASE("equivalent letter systems") {
    CHECK(equivalent_systems().size() == 16);

    GroupRef z3 = make_cyclic(3);
    SystemsCheckResult res = equivalent_systems_check(z3);
    CHECK(res.equivalent);
    CHECK(res.tuples_checked == 729);  // 3^6 tuples scanned

    // A deliberately corrupted system is caught by direct comparison.
    LetterSystem bad = equivalent_systems()[0];
    bad.label = "corrupted";
    bad.equations[0].rhs = {{+1, Letter::omega}, {+1, Letter::alpha}};  // claims alpha = omega + alpha
    bool witness_found = false;
    for (Element a = 0; a < 3 && !witness_found; ++a)
        for (Element b = 0; b < 3 && !witness_found; ++b)
            for (Element w = 0; w < 3 && !witness_found; ++w) {
                StructureTuple p;
                p[Letter::alpha] = a;
                p[Letter::beta] = b;
                p[Letter::omega] = w;
                p[Letter::zeta] = z3->add(a, w);
                p[Letter::eta] = z3->add3(a, w, b);
                p[Letter::xi] = z3->add(w, b);
                if (system_holds(z3, bad, p) != structure_member(z3, p)) witness_found = true;
            }
    CHECK(witness_found);
}
