#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "yb/algebra.hpp"
#include "yb/errors.hpp"
#include "yb/matrix.hpp"
#include "yb/report.hpp"

namespace yb {

// ---------------------------------------------------------------------------
// Finite set-theoretic structures on {0..n-1}.

// Binary self-distributive table: table[x*n+y] = x <| y.
// Invariants (checked by verify_finite_rack, not the constructor):
// (x<|y)<|z = (x<|z)<|(y<|z), and x |-> x<|y is a bijection for each y.
struct FiniteRack {
    long size = 0;
    std::vector<long> table;

    FiniteRack() = default;
    explicit FiniteRack(long n) : size(n), table(static_cast<size_t>(n) * n, 0) {}

    long apply(long x, long y) const { return table[x * size + y]; }
    long& cell(long x, long y) { return table[x * size + y]; }
};

// Ternary table: table[(x*n+y)*n+z] = T(x,y,z). Invariants: ternary
// self-distributivity on all 5-tuples and bijectivity of T(.,y,z).
struct Finite3Rack {
    long size = 0;
    std::vector<long> table;

    Finite3Rack() = default;
    explicit Finite3Rack(long n) : size(n), table(static_cast<size_t>(n) * n * n, 0) {}

    long apply(long x, long y, long z) const { return table[(x * size + y) * size + z]; }
    long& cell(long x, long y, long z) { return table[(x * size + y) * size + z]; }
};

inline VerificationReport verify_finite_rack(const FiniteRack& r) {
    const long n = r.size;
    VerificationReport rep;
    rep.subject = "rack axioms";
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            if (r.apply(x, y) < 0 || r.apply(x, y) >= n) {
                rep.add("table-range", {x + 1, y + 1},
                        "entry " + std::to_string(r.apply(x, y)) + " outside 0.." +
                            std::to_string(n - 1));
                return rep;
            }
    for (long y = 0; y < n; ++y) {
        ++rep.cases;
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (long x = 0; x < n; ++x) seen[r.apply(x, y)] = 1;
        for (long v = 0; v < n; ++v)
            if (!seen[v]) {
                rep.add("column-bijectivity", {y + 1},
                        "x |-> x<|" + std::to_string(y + 1) + " misses value " +
                            std::to_string(v + 1));
                break;
            }
    }
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z) {
                ++rep.cases;
                const long lhs = r.apply(r.apply(x, y), z);
                const long rhs = r.apply(r.apply(x, z), r.apply(y, z));
                if (lhs != rhs)
                    rep.add("self-distributivity", {x + 1, y + 1, z + 1},
                            "(x<|y)<|z = " + std::to_string(lhs + 1) + " but (x<|z)<|(y<|z) = " +
                                std::to_string(rhs + 1));
            }
    return rep;
}

inline VerificationReport verify_finite_3rack(const Finite3Rack& t) {
    const long n = t.size;
    VerificationReport rep;
    rep.subject = "ternary rack axioms";
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z)
                if (t.apply(x, y, z) < 0 || t.apply(x, y, z) >= n) {
                    rep.add("table-range", {x + 1, y + 1, z + 1},
                            "entry " + std::to_string(t.apply(x, y, z)) + " outside 0.." +
                                std::to_string(n - 1));
                    return rep;
                }
    for (long y = 0; y < n; ++y)
        for (long z = 0; z < n; ++z) {
            ++rep.cases;
            std::vector<char> seen(static_cast<size_t>(n), 0);
            for (long x = 0; x < n; ++x) seen[t.apply(x, y, z)] = 1;
            for (long v = 0; v < n; ++v)
                if (!seen[v]) {
                    rep.add("column-bijectivity", {y + 1, z + 1},
                            "T(.,y,z) misses value " + std::to_string(v + 1));
                    break;
                }
        }
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z)
                for (long u = 0; u < n; ++u)
                    for (long v = 0; v < n; ++v) {
                        ++rep.cases;
                        const long lhs = t.apply(t.apply(x, y, z), u, v);
                        const long rhs = t.apply(t.apply(x, u, v), t.apply(y, u, v),
                                                 t.apply(z, u, v));
                        if (lhs != rhs)
                            rep.add("ternary-self-distributivity",
                                    {x + 1, y + 1, z + 1, u + 1, v + 1},
                                    "T(T(x,y,z),u,v) = " + std::to_string(lhs + 1) +
                                        " but T(T(x,u,v),T(y,u,v),T(z,u,v)) = " +
                                        std::to_string(rhs + 1));
                    }
    return rep;
}

// ---------------------------------------------------------------------------
// Built-in tables.

inline FiniteRack trivial_rack(long n) {
    FiniteRack r(n);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) r.cell(x, y) = x;
    return r;
}

inline Finite3Rack trivial_3rack(long n) {
    Finite3Rack t(n);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z) t.cell(x, y, z) = x;
    return t;
}

// x <| y = 2y - x mod n (reflections of a regular n-gon).
inline FiniteRack dihedral_rack(long n) {
    FiniteRack r(n);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) r.cell(x, y) = ((2 * y - x) % n + n) % n;
    return r;
}

// Cayley table of the symmetric group on three letters, embedded as data.
// Element order: 0 = id, then the two 3-cycles, then the three transpositions
// (any fixed order works; only the group structure matters downstream).
struct S3Table {
    std::array<std::array<int, 6>, 6> mul;
    std::array<int, 6> inv;

    static const S3Table& get() {
        static const S3Table t = make();
        return t;
    }

private:
    static S3Table make() {
        S3Table t;
        const int m[6][6] = {{0, 1, 2, 3, 4, 5}, {1, 0, 5, 4, 3, 2}, {2, 4, 0, 5, 1, 3},
                             {3, 5, 4, 0, 2, 1}, {4, 2, 3, 1, 5, 0}, {5, 3, 1, 2, 0, 4}};
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) t.mul[i][j] = m[i][j];
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (t.mul[i][j] == 0) t.inv[i] = j;
        return t;
    }
};

// x <| y = y^{-1} x y.
inline FiniteRack s3_conjugation_rack() {
    const auto& g = S3Table::get();
    FiniteRack r(6);
    for (long x = 0; x < 6; ++x)
        for (long y = 0; y < 6; ++y) r.cell(x, y) = g.mul[g.mul[g.inv[y]][x]][y];
    return r;
}

// T(g1,g2,g3) = g3^{-1} g2^{-1} g1 g2 g3, i.e. conjugation by g2*g3.
inline Finite3Rack s3_conjugation_3rack() {
    const auto& g = S3Table::get();
    Finite3Rack t(6);
    for (long x = 0; x < 6; ++x)
        for (long y = 0; y < 6; ++y)
            for (long z = 0; z < 6; ++z) {
                const int w = g.mul[y][z];
                t.cell(x, y, z) = g.mul[g.mul[g.inv[w]][x]][w];
            }
    return t;
}

// T(m1,m2,m3) = m1 + 2 m2 + 2 m3 on Z/4.
inline Finite3Rack z4_module_3rack() {
    Finite3Rack t(4);
    for (long x = 0; x < 4; ++x)
        for (long y = 0; y < 4; ++y)
            for (long z = 0; z < 4; ++z) t.cell(x, y, z) = (x + 2 * y + 2 * z) % 4;
    return t;
}

// ---------------------------------------------------------------------------
// Passages between binary and ternary tables.

// T(x,y,z) = x <| (y <| z).
inline Finite3Rack rack_to_3rack(const FiniteRack& r) {
    Finite3Rack t(r.size);
    for (long x = 0; x < r.size; ++x)
        for (long y = 0; y < r.size; ++y)
            for (long z = 0; z < r.size; ++z) t.cell(x, y, z) = r.apply(x, r.apply(y, z));
    return t;
}

// Rack on ordered pairs (lexicographic index x1*n+x2):
//   (x1,x2) <| (y1,y2) = (T(x1,y1,y2), T(x2,y1,y2)).
inline FiniteRack threerack_to_rack(const Finite3Rack& t) {
    const long n = t.size;
    FiniteRack r(n * n);
    for (long x1 = 0; x1 < n; ++x1)
        for (long x2 = 0; x2 < n; ++x2)
            for (long y1 = 0; y1 < n; ++y1)
                for (long y2 = 0; y2 < n; ++y2)
                    r.cell(x1 * n + x2, y1 * n + y2) =
                        t.apply(x1, y1, y2) * n + t.apply(x2, y1, y2);
    return r;
}

// ---------------------------------------------------------------------------
// Set-theoretic braid solutions.

// The map R(x,y) = (y, x <| y) on X x X, stored as a permutation candidate:
// perm[x*n+y] = flat index of R(x,y).
struct SetSolution {
    long n = 0;
    std::vector<long> perm;
};

inline SetSolution set_ybe_solution(const FiniteRack& r) {
    SetSolution s;
    s.n = r.size;
    s.perm.resize(static_cast<size_t>(r.size) * r.size);
    for (long x = 0; x < r.size; ++x)
        for (long y = 0; y < r.size; ++y) s.perm[x * r.size + y] = y * r.size + r.apply(x, y);
    return s;
}

// Exhaustive set-level braid check:
//   (R x id)(id x R)(R x id) = (id x R)(R x id)(id x R) on X^3,
// plus bijectivity of R itself.
inline VerificationReport verify_set_braid(const SetSolution& s) {
    const long n = s.n;
    VerificationReport rep;
    rep.subject = "set-theoretic braid relation";
    {
        ++rep.cases;
        std::vector<char> seen(static_cast<size_t>(n) * n, 0);
        for (long f = 0; f < n * n; ++f) seen[s.perm[f]] = 1;
        for (long f = 0; f < n * n; ++f)
            if (!seen[f]) {
                rep.add("bijectivity", {f / n + 1, f % n + 1},
                        "R never outputs the pair (" + std::to_string(f / n + 1) + "," +
                            std::to_string(f % n + 1) + ")");
                break;
            }
    }
    auto r12 = [&](long x, long y, long z) {
        const long f = s.perm[x * n + y];
        return std::array<long, 3>{f / n, f % n, z};
    };
    auto r23 = [&](long x, long y, long z) {
        const long f = s.perm[y * n + z];
        return std::array<long, 3>{x, f / n, f % n};
    };
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z) {
                ++rep.cases;
                auto a = r12(x, y, z);
                a = r23(a[0], a[1], a[2]);
                a = r12(a[0], a[1], a[2]);
                auto b = r23(x, y, z);
                b = r12(b[0], b[1], b[2]);
                b = r23(b[0], b[1], b[2]);
                if (a != b)
                    rep.add("braid-relation", {x + 1, y + 1, z + 1},
                            "left side lands on (" + std::to_string(a[0] + 1) + "," +
                                std::to_string(a[1] + 1) + "," + std::to_string(a[2] + 1) +
                                "), right side on (" + std::to_string(b[0] + 1) + "," +
                                std::to_string(b[1] + 1) + "," + std::to_string(b[2] + 1) + ")");
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Exponential racks on (3-)Leibniz algebras with nilpotent right
// multiplications: x <| y = exp(ad_y)(x), T(x,y,z) = exp(ad_{y,z})(x).
// exp is exact because nilpotency truncates the series; non-nilpotent
// arguments raise NotNilpotent instead of being approximated.

struct ExpRack {
    std::variant<LeibnizAlgebra, ThreeLeibnizAlgebra> algebra;

    explicit ExpRack(LeibnizAlgebra e) : algebra(std::move(e)) {}
    explicit ExpRack(ThreeLeibnizAlgebra l) : algebra(std::move(l)) {}

    long dim() const {
        return std::holds_alternative<LeibnizAlgebra>(algebra)
                   ? std::get<LeibnizAlgebra>(algebra).dim
                   : std::get<ThreeLeibnizAlgebra>(algebra).dim;
    }

    // Certified exponentials, keyed by the right-multiplication arguments.
    const Mat& certified_exp(const std::string& key, const Mat& ad) const {
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, exp_nilpotent(ad)).first;
        return it->second;
    }

private:
    mutable std::map<std::string, Mat> cache_;
};

namespace detail {
inline std::string vec_key(const std::vector<Scalar>& v) {
    std::string k;
    for (const auto& s : v) {
        k += s.str();
        k += ',';
    }
    return k;
}
}  // namespace detail

inline std::vector<Scalar> kinyon_apply(const ExpRack& e, const std::vector<Scalar>& x,
                                        const std::vector<Scalar>& y) {
    const auto& alg = std::get<LeibnizAlgebra>(e.algebra);
    const Mat& ex = e.certified_exp(detail::vec_key(y), ad_right(alg, y));
    return ex.apply(x);
}

inline std::vector<Scalar> exp3_apply(const ExpRack& e, const std::vector<Scalar>& x,
                                      const std::vector<Scalar>& y,
                                      const std::vector<Scalar>& z) {
    const auto& alg = std::get<ThreeLeibnizAlgebra>(e.algebra);
    const Mat& ex = e.certified_exp(detail::vec_key(y) + "|" + detail::vec_key(z),
                                    ad_right3(alg, y, z));
    return ex.apply(x);
}

// ---------------------------------------------------------------------------
// The pair-rack / tensor-rack intertwiner phi(x1,x2) = x1 (x) x2.
//
// For a ternary algebra L with nilpotent right multiplications, the pair set
// L x L carries (x1,x2) <| (y1,y2) = (T(x1,y1,y2), T(x2,y1,y2)) with
// T = exp3_apply, and L (x) L carries the exponential rack of the induced
// binary bracket. phi intertwines the two actions and the associated braid
// maps R(p,q) = (q, p <| q); both identities are checked on each sample.

using VecSample4 = std::array<std::vector<Scalar>, 4>;

inline VerificationReport phi_intertwine_check(const ThreeLeibnizAlgebra& alg,
                                               const std::vector<VecSample4>& samples) {
    VerificationReport rep;
    rep.subject = "pair-to-tensor rack intertwiner";
    const long n = alg.dim;
    ExpRack e3(alg);
    ExpRack e2(fundamental_leibniz(alg));
    auto phi = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        std::vector<Scalar> out(static_cast<size_t>(n) * n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) out[i * n + j] = a[i] * b[j];
        return out;
    };
    // The braid maps of the two racks, each built from its own action.
    // R_pair((x1,x2),(y1,y2)) = ((y1,y2), (T(x1,y1,y2), T(x2,y1,y2))),
    // R_tensor(u, v) = (v, u <| v).
    auto r_pair = [&](const VecSample4& s) {
        return VecSample4{s[2], s[3], exp3_apply(e3, s[0], s[2], s[3]),
                          exp3_apply(e3, s[1], s[2], s[3])};
    };
    auto r_tensor = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
        return std::array<std::vector<Scalar>, 2>{v, kinyon_apply(e2, u, v)};
    };
    long idx = 0;
    for (const auto& s : samples) {
        ++idx;
        const auto& [x1, x2, y1, y2] = s;
        // Rack morphism: phi((x1,x2) <| (y1,y2)) = phi(x1,x2) <| phi(y1,y2).
        ++rep.cases;
        std::vector<Scalar> lhs =
            phi(exp3_apply(e3, x1, y1, y2), exp3_apply(e3, x2, y1, y2));
        std::vector<Scalar> rhs = kinyon_apply(e2, phi(x1, x2), phi(y1, y2));
        if (lhs != rhs)
            rep.add("phi-rack-morphism", {idx},
                    "phi(pair action) = " + sparse_str(sparse_of(lhs)) +
                        " but tensor action of phi = " + sparse_str(sparse_of(rhs)));
        // Braid-map intertwiner: (phi x phi) R_pair = R_tensor (phi x phi),
        // compared on both output slots.
        ++rep.cases;
        VecSample4 rp = r_pair(s);
        auto rt = r_tensor(phi(x1, x2), phi(y1, y2));
        if (phi(rp[0], rp[1]) != rt[0] || phi(rp[2], rp[3]) != rt[1])
            rep.add("phi-braid-intertwiner", {idx},
                    "(phi x phi) after the pair braid map disagrees with the tensor braid map "
                    "after (phi x phi)");
    }
    return rep;
}

}  // namespace yb
