#pragma once

#include <array>
#include <string>
#include <vector>

#include "yb/errors.hpp"
#include "yb/matrix.hpp"
#include "yb/parallel.hpp"
#include "yb/report.hpp"
#include "yb/scalar.hpp"

namespace yb {

// ---------------------------------------------------------------------------
// Algebras are given by structure constants in a fixed basis. Indices are
// 0-based in code; reports and file formats use 1-based basis labels.

// Binary bracket: [e_i, e_j] = sum_k c[(i*n+j)*n+k] e_k.
// The invariant of interest is the right Leibniz identity
//   [[x,y],z] = [[x,z],y] + [x,[y,z]]
// checked by verify_leibniz, not enforced at construction (deliberately:
// negative-control tests build broken algebras on purpose).
struct LeibnizAlgebra {
    long dim = 0;
    std::vector<Scalar> c;

    LeibnizAlgebra() = default;
    explicit LeibnizAlgebra(long n) : dim(n), c(static_cast<size_t>(n) * n * n) {}

    Scalar& coeff(long i, long j, long k) { return c[(static_cast<size_t>(i) * dim + j) * dim + k]; }
    const Scalar& coeff(long i, long j, long k) const {
        return c[(static_cast<size_t>(i) * dim + j) * dim + k];
    }

    SparseVec bracket_basis(long i, long j) const {
        SparseVec out;
        for (long k = 0; k < dim; ++k)
            if (!coeff(i, j, k).is_zero()) out.push_back({k, coeff(i, j, k)});
        return out;
    }

    SparseVec bracket(const SparseVec& x, const SparseVec& y) const {
        SparseAccum acc;
        for (const auto& [i, s] : x)
            for (const auto& [j, t] : y) {
                const Scalar st = s * t;
                for (long k = 0; k < dim; ++k)
                    if (!coeff(i, j, k).is_zero()) acc.add_mul(k, st, coeff(i, j, k));
            }
        return acc.normalized();
    }

    std::vector<Scalar> bracket_vec(const std::vector<Scalar>& x,
                                    const std::vector<Scalar>& y) const {
        return dense_of(bracket(sparse_of(x), sparse_of(y)), dim);
    }

    friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
        return a.dim == b.dim && a.c == b.c;
    }
};

// Ternary bracket: [e_i, e_j, e_k] = sum_l c[((i*n+j)*n+k)*n+l] e_l.
// Invariant (checked by verify_3_leibniz): the right multiplications
// [., y1, y2] are derivations of the ternary bracket,
//   [[x1,x2,x3],y1,y2] = [[x1,y1,y2],x2,x3] + [x1,[x2,y1,y2],x3] + [x1,x2,[x3,y1,y2]].
struct ThreeLeibnizAlgebra {
    long dim = 0;
    std::vector<Scalar> c;

    ThreeLeibnizAlgebra() = default;
    explicit ThreeLeibnizAlgebra(long n)
        : dim(n), c(static_cast<size_t>(n) * n * n * n) {}

    Scalar& coeff(long i, long j, long k, long l) {
        return c[((static_cast<size_t>(i) * dim + j) * dim + k) * dim + l];
    }
    const Scalar& coeff(long i, long j, long k, long l) const {
        return c[((static_cast<size_t>(i) * dim + j) * dim + k) * dim + l];
    }

    SparseVec bracket_basis(long i, long j, long k) const {
        SparseVec out;
        for (long l = 0; l < dim; ++l)
            if (!coeff(i, j, k, l).is_zero()) out.push_back({l, coeff(i, j, k, l)});
        return out;
    }

    SparseVec bracket(const SparseVec& x, const SparseVec& y, const SparseVec& z) const {
        SparseAccum acc;
        for (const auto& [i, s] : x)
            for (const auto& [j, t] : y)
                for (const auto& [k, u] : z) {
                    const Scalar stu = s * t * u;
                    if (stu.is_zero()) continue;
                    for (long l = 0; l < dim; ++l)
                        if (!coeff(i, j, k, l).is_zero()) acc.add_mul(l, stu, coeff(i, j, k, l));
                }
        return acc.normalized();
    }

    std::vector<Scalar> bracket_vec(const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                                    const std::vector<Scalar>& z) const {
        return dense_of(bracket(sparse_of(x), sparse_of(y), sparse_of(z)), dim);
    }

    friend bool operator==(const ThreeLeibnizAlgebra& a, const ThreeLeibnizAlgebra& b) {
        return a.dim == b.dim && a.c == b.c;
    }
};

// A claimed central element, as a coefficient vector. Validated by is_central.
using CentralWitness = std::vector<Scalar>;

namespace detail {

// Cache of all basis brackets, so the verification loops do sparse
// composition instead of rescanning dense structure constants.
inline std::vector<SparseVec> basis_table(const LeibnizAlgebra& e) {
    std::vector<SparseVec> t(static_cast<size_t>(e.dim) * e.dim);
    for (long i = 0; i < e.dim; ++i)
        for (long j = 0; j < e.dim; ++j) t[i * e.dim + j] = e.bracket_basis(i, j);
    return t;
}

inline std::vector<SparseVec> basis_table(const ThreeLeibnizAlgebra& l) {
    std::vector<SparseVec> t(static_cast<size_t>(l.dim) * l.dim * l.dim);
    for (long i = 0; i < l.dim; ++i)
        for (long j = 0; j < l.dim; ++j)
            for (long k = 0; k < l.dim; ++k)
                t[(i * l.dim + j) * l.dim + k] = l.bracket_basis(i, j, k);
    return t;
}

// [v, e_j] for sparse v against a cached table.
inline SparseVec mul_right_basis(const std::vector<SparseVec>& table, long n, const SparseVec& v,
                                 long j) {
    SparseAccum acc;
    for (const auto& [i, s] : v) acc.add_scaled(table[i * n + j], s);
    return acc.normalized();
}

// [v, e_j, e_k] for sparse v against a cached ternary table.
inline SparseVec mul_right_basis3(const std::vector<SparseVec>& table, long n, const SparseVec& v,
                                  long j, long k) {
    SparseAccum acc;
    for (const auto& [i, s] : v) acc.add_scaled(table[(i * n + j) * n + k], s);
    return acc.normalized();
}

inline SparseVec sparse_sub(const SparseVec& a, const SparseVec& b) {
    SparseAccum acc;
    acc.add_scaled(a, Scalar(1));
    acc.add_scaled(b, Scalar(-1));
    return acc.normalized();
}

}  // namespace detail

// Exhaustive right-Leibniz-identity check over all basis triples.
inline VerificationReport verify_leibniz(const LeibnizAlgebra& e) {
    const long n = e.dim;
    VerificationReport rep;
    rep.subject = "right Leibniz identity";
    const auto table = detail::basis_table(e);
    const long workers = thread_count();
    std::vector<VerificationReport> parts(static_cast<size_t>(std::min(workers, std::max(n, 1L))));
    parallel_chunks(n, workers, [&](long chunk, long lo, long hi) {
        VerificationReport& part = parts[chunk];
        for (long i = lo; i < hi; ++i)
            for (long j = 0; j < n; ++j) {
                const SparseVec& bij = table[i * n + j];
                for (long k = 0; k < n; ++k) {
                    ++part.cases;
                    SparseVec lhs = detail::mul_right_basis(table, n, bij, k);
                    SparseAccum rhs;
                    rhs.add_scaled(detail::mul_right_basis(table, n, table[i * n + k], j),
                                   Scalar(1));
                    for (const auto& [m, s] : table[j * n + k])
                        rhs.add_scaled(table[i * n + m], s);
                    SparseVec r = rhs.normalized();
                    if (lhs != r)
                        part.add("right-leibniz-identity", {i + 1, j + 1, k + 1},
                                 "[[x,y],z] = " + sparse_str(lhs) + " but [[x,z],y]+[x,[y,z]] = " +
                                     sparse_str(r));
                }
            }
    });
    for (const auto& p : parts) rep.absorb(p);
    return rep;
}

// Exhaustive ternary-derivation-identity check over all basis 5-tuples.
inline VerificationReport verify_3_leibniz(const ThreeLeibnizAlgebra& l) {
    const long n = l.dim;
    VerificationReport rep;
    rep.subject = "ternary right Leibniz identity";
    const auto table = detail::basis_table(l);
    const long workers = thread_count();
    std::vector<VerificationReport> parts(static_cast<size_t>(std::min(workers, std::max(n, 1L))));
    parallel_chunks(n, workers, [&](long chunk, long lo, long hi) {
        VerificationReport& part = parts[chunk];
        for (long x1 = lo; x1 < hi; ++x1)
            for (long x2 = 0; x2 < n; ++x2)
                for (long x3 = 0; x3 < n; ++x3) {
                    const SparseVec& b123 = table[(x1 * n + x2) * n + x3];
                    for (long y1 = 0; y1 < n; ++y1)
                        for (long y2 = 0; y2 < n; ++y2) {
                            ++part.cases;
                            SparseVec lhs = detail::mul_right_basis3(table, n, b123, y1, y2);
                            SparseAccum rhs;
                            // [[x1,y1,y2],x2,x3]
                            for (const auto& [m, s] : table[(x1 * n + y1) * n + y2])
                                rhs.add_scaled(table[(m * n + x2) * n + x3], s);
                            // [x1,[x2,y1,y2],x3]
                            for (const auto& [m, s] : table[(x2 * n + y1) * n + y2])
                                rhs.add_scaled(table[(x1 * n + m) * n + x3], s);
                            // [x1,x2,[x3,y1,y2]]
                            for (const auto& [m, s] : table[(x3 * n + y1) * n + y2])
                                rhs.add_scaled(table[(x1 * n + x2) * n + m], s);
                            SparseVec r = rhs.normalized();
                            if (lhs != r)
                                part.add("ternary-right-leibniz-identity",
                                         {x1 + 1, x2 + 1, x3 + 1, y1 + 1, y2 + 1},
                                         "[[x1,x2,x3],y1,y2] = " + sparse_str(lhs) +
                                             " but the three-term expansion = " + sparse_str(r));
                        }
                }
    });
    for (const auto& p : parts) rep.absorb(p);
    return rep;
}

// ---------------------------------------------------------------------------
// Constructions between the two kinds of algebra.

// Binary bracket on L(x)L induced by a ternary bracket:
//   {x1(x)x2, y1(x)y2} = [x1,y1,y2](x)x2 + x1(x)[x2,y1,y2].
inline LeibnizAlgebra fundamental_leibniz(const ThreeLeibnizAlgebra& l) {
    const long n = l.dim;
    LeibnizAlgebra out(n * n);
    for (long i1 = 0; i1 < n; ++i1)
        for (long i2 = 0; i2 < n; ++i2)
            for (long j1 = 0; j1 < n; ++j1)
                for (long j2 = 0; j2 < n; ++j2) {
                    const long row = i1 * n + i2, colp = j1 * n + j2;
                    for (const auto& [m, s] : l.bracket_basis(i1, j1, j2))
                        out.coeff(row, colp, m * n + i2) += s;
                    for (const auto& [m, s] : l.bracket_basis(i2, j1, j2))
                        out.coeff(row, colp, i1 * n + m) += s;
                }
    return out;
}

// Ternary bracket induced by a binary one: [x,y,z] = [x,[y,z]].
inline ThreeLeibnizAlgebra leibniz_to_3leibniz(const LeibnizAlgebra& e) {
    const long n = e.dim;
    ThreeLeibnizAlgebra out(n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k)
                for (const auto& [m, s] : e.bracket_basis(j, k))
                    for (long l = 0; l < n; ++l)
                        if (!e.coeff(i, m, l).is_zero()) out.coeff(i, j, k, l).add_mul(s, e.coeff(i, m, l));
    return out;
}

// ---------------------------------------------------------------------------
// Built-in example algebras.

// The four 2-dimensional Leibniz algebras (up to isomorphism), numbered 1..4:
//   1: abelian; 2: [e1,e2] = e2 = -[e2,e1]; 3: [e2,e2] = e1;
//   4: [e1,e2] = [e2,e2] = e1.
inline LeibnizAlgebra two_dim_leibniz(int variant) {
    LeibnizAlgebra e(2);
    switch (variant) {
        case 1: break;
        case 2:
            e.coeff(0, 1, 1) = Scalar(1);
            e.coeff(1, 0, 1) = Scalar(-1);
            break;
        case 3: e.coeff(1, 1, 0) = Scalar(1); break;
        case 4:
            e.coeff(0, 1, 0) = Scalar(1);
            e.coeff(1, 1, 0) = Scalar(1);
            break;
        default:
            throw UnknownVariant("two_dim_leibniz variant " + std::to_string(variant) +
                                 " (valid: 1..4)");
    }
    return e;
}

// 3-dimensional nilpotent ternary algebra: [e2,e3,e3] = e1, [e3,e3,e3] = e2.
inline ThreeLeibnizAlgebra nilpotent_3leibniz() {
    ThreeLeibnizAlgebra l(3);
    l.coeff(1, 2, 2, 0) = Scalar(1);
    l.coeff(2, 2, 2, 1) = Scalar(1);
    return l;
}

// 2-dimensional ternary algebra: [e1,e1,e2] = e2 = -[e1,e2,e1].
inline ThreeLeibnizAlgebra two_dim_3leibniz() {
    ThreeLeibnizAlgebra l(2);
    l.coeff(0, 0, 1, 1) = Scalar(1);
    l.coeff(0, 1, 0, 1) = Scalar(-1);
    return l;
}

// Octonion multiplication table: product[i][j] = signed basis index of e_i*e_j.
// Embedded as data; the ternary structure constants are derived from it
// programmatically rather than hand-entered.
struct OctonionTable {
    std::array<std::array<int, 8>, 8> idx;
    std::array<std::array<int, 8>, 8> sgn;

    static const OctonionTable& get() {
        static const OctonionTable t = make();
        return t;
    }

    // e_i * e_j as (sign, index).
    std::pair<int, int> mul(int i, int j) const { return {sgn[i][j], idx[i][j]}; }

private:
    static OctonionTable make() {
        OctonionTable t;
        const int index[8][8] = {
            {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 4, 7, 2, 6, 5, 3}, {2, 4, 0, 5, 1, 3, 7, 6},
            {3, 7, 5, 0, 6, 2, 4, 1}, {4, 2, 1, 6, 0, 7, 3, 5}, {5, 6, 3, 2, 7, 0, 1, 4},
            {6, 5, 7, 4, 3, 1, 0, 2}, {7, 3, 6, 1, 5, 4, 2, 0}};
        const int sign[8][8] = {
            {+1, +1, +1, +1, +1, +1, +1, +1}, {+1, -1, +1, +1, -1, +1, -1, -1},
            {+1, -1, -1, +1, +1, -1, +1, -1}, {+1, -1, -1, -1, +1, +1, -1, +1},
            {+1, +1, -1, -1, -1, +1, +1, -1}, {+1, -1, +1, -1, -1, -1, +1, +1},
            {+1, +1, -1, +1, -1, -1, -1, +1}, {+1, +1, +1, -1, +1, -1, -1, -1}};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                t.idx[i][j] = index[i][j];
                t.sgn[i][j] = sign[i][j];
            }
        return t;
    }
};

// Ternary algebra on the octonions:
//   [x,y,z] = z(yx) - y(zx) + (xy)z - (xz)y + (yx)z - y(xz).
inline ThreeLeibnizAlgebra octonion_3leibniz() {
    const auto& t = OctonionTable::get();
    ThreeLeibnizAlgebra l(8);
    auto mul2 = [&](std::pair<int, int> a, int b) {
        auto [s, i] = t.mul(a.second, b);
        return std::pair<int, int>{a.first * s, i};
    };
    auto mul2l = [&](int a, std::pair<int, int> b) {
        auto [s, i] = t.mul(a, b.second);
        return std::pair<int, int>{b.first * s, i};
    };
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
            for (int z = 0; z < 8; ++z) {
                const std::pair<int, int> terms[6] = {
                    mul2l(z, t.mul(y, x)),          // z(yx)
                    {-mul2l(y, t.mul(z, x)).first, mul2l(y, t.mul(z, x)).second},  // -y(zx)
                    mul2(t.mul(x, y), z),           // (xy)z
                    {-mul2(t.mul(x, z), y).first, mul2(t.mul(x, z), y).second},    // -(xz)y
                    mul2(t.mul(y, x), z),           // (yx)z
                    {-mul2l(y, t.mul(x, z)).first, mul2l(y, t.mul(x, z)).second},  // -y(xz)
                };
                for (const auto& [s, i] : terms) l.coeff(x, y, z, i) += Scalar(s);
            }
    return l;
}

// Leibniz algebra on gl(V) + V: {(A,u),(B,v)} = (-[A,B], Bu).
// Basis order: matrix units E_ab (index a*d+b) first, then vectors v_c.
inline LeibnizAlgebra omni_lie_leibniz(long d) {
    const long g = d * d, n = g + d;
    LeibnizAlgebra e(n);
    auto unit = [&](long a, long b) { return a * d + b; };
    // -[E_ab, E_cd] = delta_{da} E_cb - delta_{bc} E_ad
    for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b)
            for (long cc = 0; cc < d; ++cc)
                for (long dd = 0; dd < d; ++dd) {
                    if (dd == a) e.coeff(unit(a, b), unit(cc, dd), unit(cc, b)) += Scalar(1);
                    if (b == cc) e.coeff(unit(a, b), unit(cc, dd), unit(a, dd)) += Scalar(-1);
                }
    // {v_c, E_ab} = (0, E_ab v_c) = delta_{bc} v_a
    for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b) e.coeff(g + b, unit(a, b), g + a) += Scalar(1);
    return e;
}

// The ternary version of the same carrier: [x,y,z] = [x,{y,z}] specialized to
// the omni bracket, i.e. [(A,u),(B,v),(C,w)] = ([A,[B,C]], -[B,C]u).
inline ThreeLeibnizAlgebra omni_lie_3leibniz(long d) {
    return leibniz_to_3leibniz(omni_lie_leibniz(d));
}

// ---------------------------------------------------------------------------
// Central elements, 2-cocycles, central extensions.

inline bool is_central(const LeibnizAlgebra& e, const CentralWitness& v) {
    const SparseVec sv = sparse_of(v);
    for (long j = 0; j < e.dim; ++j) {
        if (!e.bracket(sv, sparse_unit(j)).empty()) return false;
        if (!e.bracket(sparse_unit(j), sv).empty()) return false;
    }
    return true;
}

inline bool is_central(const ThreeLeibnizAlgebra& l, const CentralWitness& v) {
    const SparseVec sv = sparse_of(v);
    for (long j = 0; j < l.dim; ++j)
        for (long k = 0; k < l.dim; ++k) {
            if (!l.bracket(sv, sparse_unit(j), sparse_unit(k)).empty()) return false;
            if (!l.bracket(sparse_unit(j), sv, sparse_unit(k)).empty()) return false;
            if (!l.bracket(sparse_unit(j), sparse_unit(k), sv).empty()) return false;
        }
    return true;
}

// omega evaluated on (sparse, basis j).
namespace detail {
inline Scalar omega_eval(const Mat& omega, const SparseVec& x, long j) {
    Scalar out;
    for (const auto& [i, s] : x) out.add_mul(s, omega.at(i, j));
    return out;
}
}  // namespace detail

// 2-cocycle condition omega([x,y],z) - omega([x,z],y) - omega(x,[y,z]) = 0
// on all basis triples.
inline VerificationReport check_2cocycle(const LeibnizAlgebra& e, const Mat& omega) {
    if (omega.rows != e.dim || omega.cols != e.dim)
        throw ShapeMismatch("2-cocycle matrix " + omega.shape_str() + " on dim " +
                            std::to_string(e.dim));
    VerificationReport rep;
    rep.subject = "2-cocycle condition";
    const long n = e.dim;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) {
                ++rep.cases;
                Scalar defect = detail::omega_eval(omega, e.bracket_basis(i, j), k);
                defect -= detail::omega_eval(omega, e.bracket_basis(i, k), j);
                for (const auto& [m, s] : e.bracket_basis(j, k)) defect -= s * omega.at(i, m);
                if (!defect.is_zero())
                    rep.add("cocycle-condition", {i + 1, j + 1, k + 1},
                            "omega([x,y],z) - omega([x,z],y) - omega(x,[y,z]) = " + defect.str());
            }
    return rep;
}

// Degree-1 coboundary: (df)(x,y) = -f([x,y]), rendered as an n x n matrix.
inline Mat coboundary(const LeibnizAlgebra& e, const std::vector<Scalar>& f) {
    if (static_cast<long>(f.size()) != e.dim)
        throw ShapeMismatch("coboundary input length " + std::to_string(f.size()) + " on dim " +
                            std::to_string(e.dim));
    Mat out(e.dim, e.dim);
    for (long i = 0; i < e.dim; ++i)
        for (long j = 0; j < e.dim; ++j)
            for (const auto& [m, s] : e.bracket_basis(i, j)) out.at(i, j) -= s * f[m];
    return out;
}

// Twisted bracket on K + E (index 0 is the K-component):
//   [(a,x),(b,y)] = (omega(x,y), [x,y]).
// No cocycle check here: the iff-direction tests and the printed-matrix
// reproduction pipelines need the bracket even for non-cocycles.
inline LeibnizAlgebra central_extension_unchecked(const LeibnizAlgebra& e, const Mat& omega) {
    if (omega.rows != e.dim || omega.cols != e.dim)
        throw ShapeMismatch("extension matrix " + omega.shape_str() + " on dim " +
                            std::to_string(e.dim));
    LeibnizAlgebra out(e.dim + 1);
    for (long i = 0; i < e.dim; ++i)
        for (long j = 0; j < e.dim; ++j) {
            if (!omega.at(i, j).is_zero()) out.coeff(1 + i, 1 + j, 0) = omega.at(i, j);
            for (const auto& [m, s] : e.bracket_basis(i, j)) out.coeff(1 + i, 1 + j, 1 + m) = s;
        }
    return out;
}

// Checked variant: throws NotACocycle (with the first failing basis triple
// and its defect) unless omega satisfies the 2-cocycle condition.
inline LeibnizAlgebra central_extension(const LeibnizAlgebra& e, const Mat& omega) {
    VerificationReport rep = check_2cocycle(e, omega);
    if (!rep.ok()) {
        const Violation& v = rep.violations.front();
        // The violation detail reads "... = <defect>"; the exception carries
        // just the defect value.
        const size_t eq = v.detail.rfind(" = ");
        throw NotACocycle(v.where[0], v.where[1], v.where[2],
                          eq == std::string::npos ? v.detail : v.detail.substr(eq + 3));
    }
    return central_extension_unchecked(e, omega);
}

inline CentralWitness extension_one(long extended_dim) {
    CentralWitness v(static_cast<size_t>(extended_dim));
    v[0] = Scalar(1);
    return v;
}

// K + L with [(a,x),(b,y),(c,z)] = (0, [x,y,z]); (1,0,...,0) is central.
inline ThreeLeibnizAlgebra trivial_central_extension_3(const ThreeLeibnizAlgebra& l) {
    ThreeLeibnizAlgebra out(l.dim + 1);
    for (long i = 0; i < l.dim; ++i)
        for (long j = 0; j < l.dim; ++j)
            for (long k = 0; k < l.dim; ++k)
                for (const auto& [m, s] : l.bracket_basis(i, j, k))
                    out.coeff(1 + i, 1 + j, 1 + k, 1 + m) = s;
    return out;
}

// ---------------------------------------------------------------------------
// Right multiplications, derivations, homomorphisms.

// Matrix of x |-> [x, y].
inline Mat ad_right(const LeibnizAlgebra& e, const std::vector<Scalar>& y) {
    Mat out(e.dim, e.dim);
    const SparseVec sy = sparse_of(y);
    for (long i = 0; i < e.dim; ++i) out.set_col(i, dense_of(e.bracket(sparse_unit(i), sy), e.dim));
    return out;
}

// Matrix of x |-> [x, y, z].
inline Mat ad_right3(const ThreeLeibnizAlgebra& l, const std::vector<Scalar>& y,
                     const std::vector<Scalar>& z) {
    Mat out(l.dim, l.dim);
    const SparseVec sy = sparse_of(y), sz = sparse_of(z);
    for (long i = 0; i < l.dim; ++i)
        out.set_col(i, dense_of(l.bracket(sparse_unit(i), sy, sz), l.dim));
    return out;
}

// D[x,y,z] = [Dx,y,z] + [x,Dy,z] + [x,y,Dz] on all basis triples.
inline VerificationReport verify_derivation(const ThreeLeibnizAlgebra& l, const Mat& d) {
    if (d.rows != l.dim || d.cols != l.dim)
        throw ShapeMismatch("derivation candidate " + d.shape_str() + " on dim " +
                            std::to_string(l.dim));
    VerificationReport rep;
    rep.subject = "ternary derivation identity";
    const long n = l.dim;
    const SparseCols dc(d);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) {
                ++rep.cases;
                SparseVec lhs = dc.apply(l.bracket_basis(i, j, k));
                SparseAccum rhs;
                rhs.add_scaled(l.bracket(dc.column[i], sparse_unit(j), sparse_unit(k)), Scalar(1));
                rhs.add_scaled(l.bracket(sparse_unit(i), dc.column[j], sparse_unit(k)), Scalar(1));
                rhs.add_scaled(l.bracket(sparse_unit(i), sparse_unit(j), dc.column[k]), Scalar(1));
                SparseVec r = rhs.normalized();
                if (lhs != r)
                    rep.add("derivation-identity", {i + 1, j + 1, k + 1},
                            "D[x,y,z] = " + sparse_str(lhs) + " but the Leibniz-rule expansion = " +
                                sparse_str(r));
            }
    return rep;
}

// f([x,y]) = [f(x),f(y)] on all basis pairs.
inline VerificationReport verify_hom(const Mat& f, const LeibnizAlgebra& src,
                                     const LeibnizAlgebra& dst) {
    if (f.rows != dst.dim || f.cols != src.dim)
        throw ShapeMismatch("homomorphism candidate " + f.shape_str() + " between dims " +
                            std::to_string(src.dim) + " -> " + std::to_string(dst.dim));
    VerificationReport rep;
    rep.subject = "bracket homomorphism";
    const SparseCols fc(f);
    for (long i = 0; i < src.dim; ++i)
        for (long j = 0; j < src.dim; ++j) {
            ++rep.cases;
            SparseVec lhs = fc.apply(src.bracket_basis(i, j));
            SparseVec rhs = dst.bracket(fc.column[i], fc.column[j]);
            if (lhs != rhs)
                rep.add("hom-identity", {i + 1, j + 1},
                        "f([x,y]) = " + sparse_str(lhs) + " but [f(x),f(y)] = " + sparse_str(rhs));
        }
    return rep;
}

// f([x,y,z]) = [f(x),f(y),f(z)] on all basis triples.
inline VerificationReport verify_hom(const Mat& f, const ThreeLeibnizAlgebra& src,
                                     const ThreeLeibnizAlgebra& dst) {
    if (f.rows != dst.dim || f.cols != src.dim)
        throw ShapeMismatch("homomorphism candidate " + f.shape_str() + " between dims " +
                            std::to_string(src.dim) + " -> " + std::to_string(dst.dim));
    VerificationReport rep;
    rep.subject = "ternary bracket homomorphism";
    const SparseCols fc(f);
    for (long i = 0; i < src.dim; ++i)
        for (long j = 0; j < src.dim; ++j)
            for (long k = 0; k < src.dim; ++k) {
                ++rep.cases;
                SparseVec lhs = fc.apply(src.bracket_basis(i, j, k));
                SparseVec rhs = dst.bracket(fc.column[i], fc.column[j], fc.column[k]);
                if (lhs != rhs)
                    rep.add("hom-identity", {i + 1, j + 1, k + 1},
                            "f([x,y,z]) = " + sparse_str(lhs) + " but [f(x),f(y),f(z)] = " +
                                sparse_str(rhs));
            }
    return rep;
}

// The injection s : K + (L(x)L) -> (K+L)(x)(K+L),
//   (a, x(x)y) |-> a(1,0)(x)(1,0) + (0,x)(x)(0,y),
// as an (n+1)^2 x (1+n^2) matrix in the fixed bases.
inline Mat embedding_s(const ThreeLeibnizAlgebra& l) {
    const long n = l.dim, m = n + 1;
    Mat out(m * m, 1 + n * n);
    out.at(0, 0) = Scalar(1);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out.at((1 + i) * m + (1 + j), 1 + i * n + j) = Scalar(1);
    return out;
}

}  // namespace yb
