#include <doctest.h>

#include "yb/algebra.hpp"

using namespace yb;

namespace {

std::string bb(const LeibnizAlgebra& e, long i, long j) {
    return sparse_str(e.bracket_basis(i, j));
}
std::string bb3(const ThreeLeibnizAlgebra& l, long i, long j, long k) {
    return sparse_str(l.bracket_basis(i, j, k));
}

}  // namespace

TEST_CASE("two-dimensional algebra variants satisfy the right Leibniz identity") {
    for (int v = 1; v <= 4; ++v) {
        const LeibnizAlgebra e = two_dim_leibniz(v);
        CHECK(e.dim == 2);
        const auto rep = verify_leibniz(e);
        CHECK(rep.ok());
        CHECK(rep.cases == 8);
    }
    CHECK(bb(two_dim_leibniz(2), 0, 1) == "1*b2");
    CHECK(bb(two_dim_leibniz(2), 1, 0) == "-1*b2");
    CHECK(bb(two_dim_leibniz(3), 1, 1) == "1*b1");
    CHECK(bb(two_dim_leibniz(4), 0, 1) == "1*b1");
    CHECK(bb(two_dim_leibniz(4), 1, 1) == "1*b1");
    CHECK_THROWS_AS(two_dim_leibniz(5), UnknownVariant);
    CHECK_THROWS_AS(two_dim_leibniz(0), UnknownVariant);
}

TEST_CASE("a corrupted structure constant is caught with a witness") {
    LeibnizAlgebra e = two_dim_leibniz(2);
    e.c[(0 * 2 + 0) * 2 + 0] = Scalar(1);  // force [e1,e1] = e1
    const auto rep = verify_leibniz(e);
    CHECK_FALSE(rep.ok());
    CHECK(rep.violations.front().rule == "right-leibniz-identity");
}

TEST_CASE("three-dimensional nilpotent ternary algebra") {
    const ThreeLeibnizAlgebra l = nilpotent_3leibniz();
    CHECK(l.dim == 3);
    CHECK(bb3(l, 1, 2, 2) == "1*b1");  // [e2,e3,e3] = e1
    CHECK(bb3(l, 2, 2, 2) == "1*b2");  // [e3,e3,e3] = e2
    CHECK(bb3(l, 0, 1, 2) == "0");
    const auto rep = verify_3_leibniz(l);
    CHECK(rep.ok());
    CHECK(rep.cases == 243);
}

TEST_CASE("two-dimensional ternary algebra with a sign-split bracket") {
    const ThreeLeibnizAlgebra l = two_dim_3leibniz();
    CHECK(l.dim == 2);
    CHECK(bb3(l, 0, 0, 1) == "1*b2");   // [e1,e1,e2] = e2
    CHECK(bb3(l, 0, 1, 0) == "-1*b2");  // [e1,e2,e1] = -e2
    CHECK(verify_3_leibniz(l).ok());
}

TEST_CASE("a corrupted ternary constant is caught at the first violating tuple") {
    ThreeLeibnizAlgebra l = nilpotent_3leibniz();
    l.c[(((0 * 3 + 1) * 3 + 2) * 3) + 2] = Scalar(2);  // force [e1,e2,e3] = 2*e3
    const auto rep = verify_3_leibniz(l);
    CHECK_FALSE(rep.ok());
    CHECK(rep.violations.front().rule == "ternary-right-leibniz-identity");
    CHECK(rep.violations.front().where == std::vector<long>{1, 2, 1, 2, 3});
}

TEST_CASE("octonion-derived ternary algebra") {
    const ThreeLeibnizAlgebra l = octonion_3leibniz();
    CHECK(l.dim == 8);
    CHECK(bb3(l, 1, 2, 3) == "-2*b7");  // [e1,e2,e3] = -2*e6
    CHECK(bb3(l, 1, 1, 2) == "-4*b3");  // [e1,e1,e2] = -4*e2
    CHECK(bb3(l, 0, 1, 2) == "0");      // e0 in the left slot is inert

    long nonzero = 0;
    for (long i = 0; i < 8; ++i)
        for (long j = 0; j < 8; ++j)
            for (long k = 0; k < 8; ++k)
                if (!l.bracket_basis(i, j, k).empty()) ++nonzero;
    CHECK(nonzero == 252);

    const auto rep = verify_3_leibniz(l);
    CHECK(rep.ok());
    CHECK(rep.cases == 32768);
}

TEST_CASE("matrix-on-vector algebra is a non-antisymmetric Leibniz algebra") {
    for (long d : {1L, 2L}) {
        const LeibnizAlgebra e = omni_lie_leibniz(d);
        CHECK(e.dim == d * d + d);
        CHECK(verify_leibniz(e).ok());
        CHECK(verify_3_leibniz(omni_lie_3leibniz(d)).ok());
    }
    const LeibnizAlgebra o1 = omni_lie_leibniz(1);
    CHECK(bb(o1, 1, 0) == "1*b2");  // [v, E] = E v = v
    CHECK(bb(o1, 0, 1) == "0");     // but [E, v] = 0: not antisymmetric
}

TEST_CASE("pair bracket of a ternary algebra satisfies the right Leibniz identity") {
    // On L(x)L: {x1(x)x2, y1(x)y2} = [x1,y1,y2](x)x2 + x1(x)[x2,y1,y2].
    const ThreeLeibnizAlgebra nil = nilpotent_3leibniz();
    const LeibnizAlgebra fun = fundamental_leibniz(nil);
    CHECK(fun.dim == 9);
    CHECK(bb(fun, 5, 8) == "1*b3 + 1*b5");  // {e2(x)e3, e3(x)e3} = e1(x)e3 + e2(x)e2
    CHECK(verify_leibniz(fun).ok());

    const LeibnizAlgebra fun2 = fundamental_leibniz(two_dim_3leibniz());
    CHECK(fun2.dim == 4);
    CHECK(bb(fun2, 1, 2) == "-1*b4");  // {e1(x)e2, e2(x)e1} = -e2(x)e2
    CHECK(verify_leibniz(fun2).ok());

    CHECK(verify_leibniz(fundamental_leibniz(omni_lie_3leibniz(1))).ok());
}

TEST_CASE("nesting a Leibniz bracket yields a ternary Leibniz bracket") {
    // [x,y,z] := [x,[y,z]] passes the ternary identity for every corpus algebra.
    for (int v = 1; v <= 4; ++v)
        CHECK(verify_3_leibniz(leibniz_to_3leibniz(two_dim_leibniz(v))).ok());
    CHECK(verify_3_leibniz(leibniz_to_3leibniz(omni_lie_leibniz(1))).ok());
    CHECK(verify_3_leibniz(leibniz_to_3leibniz(omni_lie_leibniz(2))).ok());

    // Anchor: in variant 2, [e2,e1,e2] = [e2,[e1,e2]] = [e2,e2] = 0 and
    // [e1,e1,e2] = [e1,e2] = e2.
    const ThreeLeibnizAlgebra t = leibniz_to_3leibniz(two_dim_leibniz(2));
    CHECK(bb3(t, 1, 0, 1) == "0");
    CHECK(bb3(t, 0, 0, 1) == "1*b2");
}

TEST_CASE("centrality of elements") {
    const LeibnizAlgebra ext = central_extension(two_dim_leibniz(2), Mat(2, 2));
    CHECK(is_central(ext, extension_one(3)));
    CentralWitness e2(3);
    e2[2] = Scalar(1);
    CHECK_FALSE(is_central(ext, e2));

    // Ternary version: the adjoined element of a trivial extension is central.
    const ThreeLeibnizAlgebra ext3 = trivial_central_extension_3(nilpotent_3leibniz());
    CHECK(ext3.dim == 4);
    CHECK(is_central(ext3, extension_one(4)));
    CHECK(sparse_str(ext3.bracket_basis(2, 3, 3)) == "1*b2");  // shifted [e2,e3,e3] = e1
}

TEST_CASE("cocycle check, defect witnesses, and the typed throw") {
    const LeibnizAlgebra e2 = two_dim_leibniz(2);
    Mat printed(2, 2);  // slot pattern (b1, b2; 0, 0) with b1=2, b2=3
    printed.at(0, 0) = Scalar(2);
    printed.at(0, 1) = Scalar(3);
    const auto rep = check_2cocycle(e2, printed);
    CHECK_FALSE(rep.ok());
    CHECK(rep.cases == 8);
    CHECK(rep.violations.size() == 2);
    CHECK(rep.violations.front().rule == "cocycle-condition");
    CHECK(rep.violations.front().where == std::vector<long>{1, 1, 2});
    CHECK(rep.violations.front().detail.find("-3") != std::string::npos);

    try {
        central_extension(e2, printed);
        FAIL("expected NotACocycle");
    } catch (const NotACocycle& err) {
        CHECK(err.x == 1);
        CHECK(err.y == 1);
        CHECK(err.z == 2);
        CHECK(err.defect == "-3");
    }

    // The antisymmetric completion is a genuine cocycle.
    Mat good = printed;
    good.at(1, 0) = Scalar(-3);
    CHECK(check_2cocycle(e2, good).ok());
    CHECK_NOTHROW(central_extension(e2, good));
}

TEST_CASE("coboundaries are cocycles and shift extensions by a basis change") {
    const LeibnizAlgebra e = two_dim_leibniz(3);
    std::vector<Scalar> f = {Scalar(5), Scalar(7)};
    const Mat df = coboundary(e, f);
    // (df)(x,y) = -f([x,y]); only [e2,e2] = e1 is nonzero here.
    CHECK(df.at(0, 0) == Scalar(0));
    CHECK(df.at(1, 1) == Scalar(-5));
    CHECK(check_2cocycle(e, df).ok());
}

TEST_CASE("central extension layout") {
    const LeibnizAlgebra e = two_dim_leibniz(3);
    Mat omega(2, 2);
    omega.at(1, 0) = Scalar(0);
    omega.at(1, 1) = Scalar(3);
    omega.at(0, 1) = Scalar(2);
    const LeibnizAlgebra ext = central_extension(e, omega);
    CHECK(ext.dim == 3);
    CHECK(verify_leibniz(ext).ok());
    // Adjoined generator is b1; original e_i sits at b_{i+1}.
    CHECK(bb(ext, 2, 2) == "3*b1 + 1*b2");  // [e2,e2] = w(e2,e2)*1 + e1
    CHECK(bb(ext, 1, 2) == "2*b1");         // [e1,e2] = w(e1,e2)*1
    CHECK(bb(ext, 0, 1) == "0");            // the adjoined element is central
    CHECK_THROWS_AS(central_extension(e, Mat(3, 3)), ShapeMismatch);
}

TEST_CASE("right multiplications and the derivation identity") {
    const ThreeLeibnizAlgebra nil = nilpotent_3leibniz();
    std::vector<Scalar> e3(3);
    e3[2] = Scalar(1);
    const Mat ad = ad_right3(nil, e3, e3);
    CHECK(ad.at(0, 1) == Scalar(1));  // e2 |-> e1
    CHECK(ad.at(1, 2) == Scalar(1));  // e3 |-> e2
    CHECK(nilpotency_index(ad) == 3);
    CHECK(verify_derivation(nil, ad).ok());

    // The identity map is not a derivation: the right side triples the output.
    const auto rep = verify_derivation(nil, Mat::identity(3));
    CHECK_FALSE(rep.ok());
    CHECK(rep.violations.front().rule == "derivation-identity");
    CHECK(rep.violations.front().where == std::vector<long>{2, 3, 3});

    const LeibnizAlgebra e2 = two_dim_leibniz(2);
    std::vector<Scalar> y(2);
    y[1] = Scalar(1);
    const Mat adr = ad_right(e2, y);
    CHECK(adr.at(1, 0) == Scalar(1));  // [e1,e2] = e2
    CHECK(adr.at(1, 1) == Scalar(0));  // [e2,e2] = 0
}

TEST_CASE("homomorphism checks in both arities") {
    // Identity is a homomorphism; a scaling by 2 is not (quadratic right side).
    const LeibnizAlgebra e = two_dim_leibniz(2);
    CHECK(verify_hom(Mat::identity(2), e, e).ok());
    const auto bad = verify_hom(Mat::identity(2).scaled(Scalar(2)), e, e);
    CHECK_FALSE(bad.ok());
    CHECK(bad.violations.front().rule == "hom-identity");

    const ThreeLeibnizAlgebra l = two_dim_3leibniz();
    CHECK(verify_hom(Mat::identity(2), l, l).ok());

    // The block embedding of K+(L(x)L) into (K+L)(x)(K+L) is a homomorphism
    // of the associated binary brackets.
    const Mat s = embedding_s(l);
    CHECK(s.rows == 9);
    CHECK(s.cols == 5);
    const LeibnizAlgebra src =
        central_extension(fundamental_leibniz(l), Mat(fundamental_leibniz(l).dim,
                                                      fundamental_leibniz(l).dim));
    const LeibnizAlgebra dst = fundamental_leibniz(trivial_central_extension_3(l));
    const auto rep = verify_hom(s, src, dst);
    CHECK(rep.ok());
    CHECK(rep.cases == 25);
}
