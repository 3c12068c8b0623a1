#include <doctest.h>

#include <random>

#include "yb/rack.hpp"
#include "yb/sampling.hpp"

using namespace yb;

TEST_CASE("built-in rack tables satisfy the axioms") {
    for (long n : {1L, 3L, 4L}) CHECK(verify_finite_rack(trivial_rack(n)).ok());
    for (long n : {3L, 4L, 5L, 7L}) CHECK(verify_finite_rack(dihedral_rack(n)).ok());
    const FiniteRack s3 = s3_conjugation_rack();
    const auto rep = verify_finite_rack(s3);
    CHECK(rep.ok());
    CHECK(rep.cases == 6 + 216);  // 6 column-bijectivity cases + 6^3 distributivity

    // Conjugation anchors: identity is fixed by everything, x <| id = x.
    for (long y = 0; y < 6; ++y) CHECK(s3.apply(0, y) == 0);
    for (long x = 0; x < 6; ++x) CHECK(s3.apply(x, 0) == x);
    CHECK(s3.apply(1, 2) == 3);  // conjugating one transposition by another
}

TEST_CASE("built-in ternary rack tables satisfy the axioms") {
    CHECK(verify_finite_3rack(trivial_3rack(2)).ok());
    CHECK(verify_finite_3rack(z4_module_3rack()).ok());
    const Finite3Rack s3 = s3_conjugation_3rack();
    CHECK(verify_finite_3rack(s3).ok());
    CHECK(s3.apply(1, 4, 0) == 2);  // conjugation by a 3-cycle moves transpositions
    CHECK(s3.apply(2, 3, 5) == 3);

    const Finite3Rack z4 = z4_module_3rack();
    CHECK(z4.apply(1, 1, 1) == 1);  // 1+2+2 = 5 = 1 mod 4
    CHECK(z4.apply(0, 1, 2) == 2);  // 0+2+4 = 6 = 2 mod 4
}

TEST_CASE("a binary rack induces a ternary rack by feeding y <| z") {
    for (const FiniteRack& r : {dihedral_rack(5), s3_conjugation_rack(), trivial_rack(3)}) {
        const Finite3Rack t = rack_to_3rack(r);
        CHECK(verify_finite_3rack(t).ok());
    }
    // Dihedral anchor: T(x,y,z) = 2(2z-y)-x mod n.
    const Finite3Rack t = rack_to_3rack(dihedral_rack(5));
    CHECK(t.apply(1, 2, 3) == 2);  // 4*3 - 2*2 - 1 = 7 = 2 mod 5
}

TEST_CASE("a ternary rack induces a binary rack on ordered pairs") {
    for (const Finite3Rack& t :
         {z4_module_3rack(), s3_conjugation_3rack(), trivial_3rack(2)}) {
        const FiniteRack pairs = threerack_to_rack(t);
        CHECK(pairs.size == t.size * t.size);
        CHECK(verify_finite_rack(pairs).ok());
    }
    // Component formula: (x1,x2) <| (y1,y2) = (T(x1,y1,y2), T(x2,y1,y2)).
    const Finite3Rack z4 = z4_module_3rack();
    const FiniteRack pairs = threerack_to_rack(z4);
    for (long x1 : {0L, 3L})
        for (long x2 : {1L, 2L})
            CHECK(pairs.apply(x1 * 4 + x2, 2 * 4 + 1) ==
                  z4.apply(x1, 2, 1) * 4 + z4.apply(x2, 2, 1));

    // Round trip: the induced ternary structure of the pair rack is again a
    // ternary rack, but on n^2 points; no inverse passage is claimed.
    CHECK(verify_finite_3rack(rack_to_3rack(pairs)).ok());
}

TEST_CASE("the pair swap-and-act map is a braid bijection exactly for racks") {
    // Positive direction on every built-in rack.
    for (const FiniteRack& r :
         {trivial_rack(4), dihedral_rack(3), dihedral_rack(5), s3_conjugation_rack()}) {
        CHECK(verify_finite_rack(r).ok());
        CHECK(verify_set_braid(set_ybe_solution(r)).ok());
    }

    // Both directions across 20 deterministic single-entry mutations of the
    // conjugation table: mutating any one cell must break the rack axioms and
    // the braid property together (the equivalence, not just one side).
    std::mt19937 gen(0);
    long mutations = 0, broken = 0;
    while (mutations < 20) {
        FiniteRack m = s3_conjugation_rack();
        const long cell = static_cast<long>(gen() % 36);
        const long value = static_cast<long>(gen() % 6);
        if (m.table[cell] == value) continue;
        m.table[cell] = value;
        ++mutations;
        const bool is_rack = verify_finite_rack(m).ok();
        const bool is_braid = verify_set_braid(set_ybe_solution(m)).ok();
        CHECK(is_rack == is_braid);
        if (!is_rack) ++broken;
    }
    CHECK(mutations == 20);
    CHECK(broken == 20);  // a single wrong cell never survives as a rack

    // One pinned mutation with its witness kind: overwriting (1,2) collides
    // with an existing column value, so R stops being a bijection.
    FiniteRack m = s3_conjugation_rack();
    m.cell(1, 2) = m.apply(4, 2);
    const auto rep = verify_set_braid(set_ybe_solution(m));
    CHECK_FALSE(rep.ok());
    CHECK(rep.violations.front().rule == "bijectivity");
}

TEST_CASE("exponential rack of a nilpotent right multiplication") {
    // Variant 3: [e2,e2] = e1, all right multiplications nilpotent.
    ExpRack e3(two_dim_leibniz(3));
    std::vector<Scalar> b1(2), b2(2);
    b1[0] = Scalar(1);
    b2[1] = Scalar(1);
    CHECK(sparse_str(sparse_of(kinyon_apply(e3, b2, b2))) == "1*b1 + 1*b2");  // e2<|e2
    CHECK(sparse_str(sparse_of(kinyon_apply(e3, b1, b2))) == "1*b1");         // e1<|e2

    // Self-distributivity on deterministic samples.
    SmallIntSampler s(0);
    for (int i = 0; i < 50; ++i) {
        const auto x = s.vector(2), y = s.vector(2), z = s.vector(2);
        const auto lhs = kinyon_apply(e3, kinyon_apply(e3, x, y), z);
        const auto rhs = kinyon_apply(e3, kinyon_apply(e3, x, z), kinyon_apply(e3, y, z));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("non-nilpotent right multiplication is rejected, not approximated") {
    // Variant 4: ad e2 fixes e1, so exp would be an infinite series.
    ExpRack e4(two_dim_leibniz(4));
    std::vector<Scalar> b1(2), b2(2);
    b1[0] = Scalar(1);
    b2[1] = Scalar(1);
    try {
        kinyon_apply(e4, b1, b2);
        FAIL("expected NotNilpotent");
    } catch (const NotNilpotent& err) {
        CHECK(err.tried_power == 2);
    }
}

TEST_CASE("ternary exponential rack branches and its exact inverse") {
    const ThreeLeibnizAlgebra nil = nilpotent_3leibniz();
    ExpRack e(nil);
    std::vector<Scalar> b1(3), b2(3), b3(3);
    b1[0] = Scalar(1);
    b2[1] = Scalar(1);
    b3[2] = Scalar(1);
    CHECK(sparse_str(sparse_of(exp3_apply(e, b3, b3, b3))) == "1/2*b1 + 1*b2 + 1*b3");
    CHECK(sparse_str(sparse_of(exp3_apply(e, b2, b3, b3))) == "1*b1 + 1*b2");
    CHECK(sparse_str(sparse_of(exp3_apply(e, b1, b3, b3))) == "1*b1");

    // T(.,y,z) = exp(ad_{y,z}) is inverted exactly by exp(-ad_{y,z}).
    SmallIntSampler s(1);
    for (int i = 0; i < 40; ++i) {
        const auto x = s.vector(3), y = s.vector(3), z = s.vector(3);
        const Mat back = exp_nilpotent(ad_right3(nil, y, z).scaled(Scalar(-1)));
        CHECK(back.apply(exp3_apply(e, x, y, z)) == x);
    }

    // Ternary self-distributivity on samples.
    SmallIntSampler s2(2);
    for (int i = 0; i < 30; ++i) {
        const auto x = s2.vector(3), y = s2.vector(3), z = s2.vector(3), u = s2.vector(3),
                   v = s2.vector(3);
        const auto lhs = exp3_apply(e, exp3_apply(e, x, y, z), u, v);
        const auto rhs = exp3_apply(e, exp3_apply(e, x, u, v), exp3_apply(e, y, u, v),
                                    exp3_apply(e, z, u, v));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pair exponential rack intertwines with the tensor-square rack") {
    const ThreeLeibnizAlgebra nil = nilpotent_3leibniz();
    SmallIntSampler sampler(0);
    std::vector<VecSample4> samples;
    for (int i = 0; i < 100; ++i) {
        VecSample4 s;
        for (auto& v : s) v = sampler.vector(nil.dim);
        samples.push_back(std::move(s));
    }
    const auto rep = phi_intertwine_check(nil, samples);
    CHECK(rep.ok());
    CHECK(rep.cases == 200);
}
