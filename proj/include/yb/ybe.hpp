#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yb/algebra.hpp"
#include "yb/coalgebra.hpp"
#include "yb/errors.hpp"
#include "yb/matrix.hpp"
#include "yb/parallel.hpp"
#include "yb/report.hpp"

namespace yb {

// ---------------------------------------------------------------------------
// An invertible endomorphism R of V (x) V intended to satisfy the braid
// identity (R(x)I)(I(x)R)(R(x)I) = (I(x)R)(R(x)I)(I(x)R).
//
// Columns are the primary representation (column flat(i,j) = R(e_i (x) e_j));
// every builder also attaches the closed-formula inverse. A dense matrix view
// is materialized lazily so that large carriers (base_dim² in the thousands)
// never allocate n² x n² storage unless a caller genuinely needs it.
struct YbeOperator {
    long base_dim = 0;
    SparseCols fwd;
    SparseCols inv;
    std::string provenance;

    YbeOperator() = default;
    YbeOperator(long n, SparseCols f, SparseCols i, std::string prov)
        : base_dim(n), fwd(std::move(f)), inv(std::move(i)), provenance(std::move(prov)) {}

    const Mat& matrix() const {
        if (!dense_) dense_ = to_dense(fwd);
        return *dense_;
    }
    const Mat& inverse_matrix() const {
        if (!dense_inv_) dense_inv_ = to_dense(inv);
        return *dense_inv_;
    }

    static Mat to_dense(const SparseCols& s) {
        Mat m(s.rows, s.cols);
        for (long c = 0; c < s.cols; ++c)
            for (const auto& [r, v] : s.column[c]) m.at(r, c) = v;
        return m;
    }

private:
    mutable std::optional<Mat> dense_;
    mutable std::optional<Mat> dense_inv_;
};

namespace detail {

// Apply R to the leading pair of tensor slots of a sparse vector on
// V (x) V (x) V (flat index f = (i*n + j)*n + k, left most significant).
inline SparseVec apply_r12(const SparseCols& r, long n, const SparseVec& v) {
    SparseAccum acc;
    for (const auto& [f, c] : v) {
        const long pr = f / n, k = f % n;
        for (const auto& [pq, s] : r.column[pr]) acc.add_mul(pq * n + k, c, s);
    }
    return acc.normalized();
}

// Apply R to the trailing pair of tensor slots.
inline SparseVec apply_r23(const SparseCols& r, long n, const SparseVec& v) {
    SparseAccum acc;
    for (const auto& [f, c] : v) {
        const long i = f / (n * n), jk = f % (n * n);
        for (const auto& [pq, s] : r.column[jk]) acc.add_mul(i * n * n + pq, c, s);
    }
    return acc.normalized();
}

inline void check_braid_columns(const SparseCols& r, long n, VerificationReport& rep) {
    const long workers = thread_count();
    std::vector<VerificationReport> parts(static_cast<size_t>(std::min(workers, std::max(n, 1L))));
    parallel_chunks(n, workers, [&](long chunk, long lo, long hi) {
        VerificationReport& part = parts[chunk];
        for (long i = lo; i < hi; ++i)
            for (long j = 0; j < n; ++j)
                for (long k = 0; k < n; ++k) {
                    ++part.cases;
                    const SparseVec start = sparse_unit((i * n + j) * n + k);
                    SparseVec lhs = apply_r12(r, n, apply_r23(r, n, apply_r12(r, n, start)));
                    SparseVec rhs = apply_r23(r, n, apply_r12(r, n, apply_r23(r, n, start)));
                    if (lhs != rhs)
                        part.add("braid-relation", {i + 1, j + 1, k + 1},
                                 "(R(x)I)(I(x)R)(R(x)I) maps the basis vector to " +
                                     sparse_str(lhs) + " but (I(x)R)(R(x)I)(I(x)R) gives " +
                                     sparse_str(rhs));
                }
    });
    for (const auto& p : parts) rep.absorb(p);
}

inline void check_two_sided_inverse(const SparseCols& fwd, const SparseCols& inv,
                                    VerificationReport& rep) {
    for (long c = 0; c < fwd.cols; ++c) {
        ++rep.cases;
        if (fwd.apply(inv.column[c]) != sparse_unit(c))
            rep.add("inverse-right", {c + 1},
                    "R(R^{-1}(e_c)) = " + sparse_str(fwd.apply(inv.column[c])));
        ++rep.cases;
        if (inv.apply(fwd.column[c]) != sparse_unit(c))
            rep.add("inverse-left", {c + 1},
                    "R^{-1}(R(e_c)) = " + sparse_str(inv.apply(fwd.column[c])));
    }
}

// Dense cross-check of the same identity through explicit Kronecker
// products; affordable only for small carriers, where it independently
// validates the column-wise evaluation path.
inline void check_braid_dense(const Mat& r, long n, VerificationReport& rep) {
    ++rep.cases;
    const Mat id = Mat::identity(n);
    const Mat a = kron(r, id), b = kron(id, r);
    const Mat lhs = a * b * a, rhs = b * a * b;
    if (lhs != rhs)
        for (long i = 0; i < lhs.rows; ++i)
            for (long j = 0; j < lhs.cols; ++j)
                if (lhs.at(i, j) != rhs.at(i, j)) {
                    rep.add("braid-relation-dense", {i + 1, j + 1},
                            "left side entry " + lhs.at(i, j).str() + " vs right side " +
                                rhs.at(i, j).str());
                    return;
                }
}

constexpr long kDenseCrossCheckMaxBase = 6;

}  // namespace detail

// Exhaustive braid-identity and invertibility check for an operator with an
// attached formula inverse.
inline VerificationReport verify_ybe(const YbeOperator& op) {
    VerificationReport rep;
    rep.subject = "Yang-Baxter relation";
    const long n = op.base_dim;
    detail::check_braid_columns(op.fwd, n, rep);
    detail::check_two_sided_inverse(op.fwd, op.inv, rep);
    if (n <= detail::kDenseCrossCheckMaxBase) detail::check_braid_dense(op.matrix(), n, rep);
    return rep;
}

// Same check for a bare matrix; the inverse comes from elimination, and a
// singular matrix is itself a reported violation.
inline VerificationReport verify_ybe(const Mat& r, long n) {
    VerificationReport rep;
    rep.subject = "Yang-Baxter relation";
    if (r.rows != n * n || r.cols != n * n)
        throw ShapeMismatch("operator " + r.shape_str() + " on base dim " + std::to_string(n));
    const SparseCols fwd(r);
    detail::check_braid_columns(fwd, n, rep);
    ++rep.cases;
    try {
        const Mat inv = invert(r);
        detail::check_two_sided_inverse(fwd, SparseCols(inv), rep);
    } catch (const Singular& e) {
        rep.add("invertibility", {e.pivot_col},
                "no pivot available for column " + std::to_string(e.pivot_col));
    }
    if (n <= detail::kDenseCrossCheckMaxBase) detail::check_braid_dense(r, n, rep);
    return rep;
}

// ---------------------------------------------------------------------------
// Builders.

// R(x (x) y) = y (x) x + 1 (x) [x,y], for a Leibniz algebra with a central
// element 1; inverse R^{-1}(u (x) v) = v (x) u - [v,u] (x) 1.
inline YbeOperator solution_from_central_leibniz(const LeibnizAlgebra& e,
                                                 const CentralWitness& one,
                                                 std::string provenance =
                                                     "solution_from_central_leibniz") {
    if (static_cast<long>(one.size()) != e.dim)
        throw ShapeMismatch("central witness length " + std::to_string(one.size()) +
                            " on dim " + std::to_string(e.dim));
    if (!is_central(e, one))
        throw NotCentral("the distinguished element is not central: some bracket with it is "
                         "nonzero");
    const long n = e.dim;
    const SparseVec sone = sparse_of(one);
    SparseCols fwd(n * n, n * n), inv(n * n, n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            SparseAccum f, b;
            f.add(j * n + i, Scalar(1));
            b.add(j * n + i, Scalar(1));
            for (const auto& [m, c] : e.bracket_basis(i, j))
                for (const auto& [o, ov] : sone) f.add_mul(o * n + m, c, ov);
            for (const auto& [m, c] : e.bracket_basis(j, i))
                for (const auto& [o, ov] : sone) b.add_mul(m * n + o, -c, ov);
            fwd.column[i * n + j] = f.normalized();
            inv.column[i * n + j] = b.normalized();
        }
    return YbeOperator(n, std::move(fwd), std::move(inv), std::move(provenance));
}

// R(u (x) v) = v1 (x) (u <| v2); inverse (v ~<| u2) (x) u1.
inline YbeOperator solution_from_linear_rack(const LinearRackStruct& lr,
                                             std::string provenance =
                                                 "solution_from_linear_rack") {
    if (!is_cocommutative(lr.coalg))
        throw NotCocommutative("braid operator from a linear rack needs a cocommutative "
                               "coalgebra");
    const long n = lr.coalg.dim;
    const SparseCols opc(lr.op), tic(lr.tilde), dc(lr.coalg.delta);
    SparseCols fwd(n * n, n * n), inv(n * n, n * n);
    for (long u = 0; u < n; ++u)
        for (long v = 0; v < n; ++v) {
            SparseAccum f, b;
            for (const auto& [p, a] : dc.column[v]) {
                const long v1 = p / n, v2 = p % n;
                for (const auto& [m, s] : opc.column[u * n + v2]) f.add_mul(v1 * n + m, a, s);
            }
            for (const auto& [p, a] : dc.column[u]) {
                const long u1 = p / n, u2 = p % n;
                for (const auto& [m, s] : tic.column[v * n + u2]) b.add_mul(m * n + u1, a, s);
            }
            fwd.column[u * n + v] = f.normalized();
            inv.column[u * n + v] = b.normalized();
        }
    return YbeOperator(n, std::move(fwd), std::move(inv), std::move(provenance));
}

// Operator on (C (x) C) (x) (C (x) C) from a trilinear rack:
//   R((u(x)v) (x) (m(x)w)) = (m1 (x) w1) (x) (T(u,m2,w2) (x) T(v,m3,w3)),
// with the left-nested iterated coproducts; the inverse is the printed
// twist-inverse of the induced tensor-square rack,
//   R^{-1}((u(x)v) (x) (m(x)w)) = (Ttilde(m,v21,u21) (x) Ttilde(w,v22,u22)) (x) (u1 (x) v1).
inline YbeOperator solution_from_trilinear_rack(const TrilinearRackStruct& tr,
                                                std::string provenance =
                                                    "solution_from_trilinear_rack") {
    if (!is_cocommutative(tr.coalg))
        throw NotCocommutative("braid operator from a trilinear rack needs a cocommutative "
                               "coalgebra");
    const long n = tr.coalg.dim, m = n * n;
    const SparseCols tc(tr.t), ttc(tr.ttilde), dc(tr.coalg.delta);
    std::vector<SparseVec> d3(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) d3[j] = detail::delta3_col(dc, n, j);
    SparseCols fwd(m * m, m * m), inv(m * m, m * m);
    for (long u = 0; u < n; ++u)
        for (long v = 0; v < n; ++v)
            for (long mm = 0; mm < n; ++mm)
                for (long w = 0; w < n; ++w) {
                    const long col = (u * n + v) * m + (mm * n + w);
                    SparseAccum f;
                    for (const auto& [pm, a] : d3[mm]) {
                        const long m1 = pm / (n * n), m2 = pm / n % n, m3 = pm % n;
                        for (const auto& [pw, b] : d3[w]) {
                            const long w1 = pw / (n * n), w2 = pw / n % n, w3 = pw % n;
                            const Scalar ab = a * b;
                            if (ab.is_zero()) continue;
                            for (const auto& [p, s] : tc.column[(u * n + m2) * n + w2])
                                for (const auto& [q, t] : tc.column[(v * n + m3) * n + w3])
                                    f.add_mul((m1 * n + w1) * m + (p * n + q), ab * s, t);
                        }
                    }
                    fwd.column[col] = f.normalized();
                    SparseAccum bk;
                    for (const auto& [pu, a] : d3[u]) {
                        const long u1 = pu / (n * n), u2 = pu / n % n, u3 = pu % n;
                        for (const auto& [pv, b] : d3[v]) {
                            const long v1 = pv / (n * n), v2 = pv / n % n, v3 = pv % n;
                            const Scalar ab = a * b;
                            if (ab.is_zero()) continue;
                            for (const auto& [p, s] : ttc.column[(mm * n + v2) * n + u2])
                                for (const auto& [q, t] : ttc.column[(w * n + v3) * n + u3])
                                    bk.add_mul((p * n + q) * m + (u1 * n + v1), ab * s, t);
                        }
                    }
                    inv.column[col] = bk.normalized();
                }
    return YbeOperator(m, std::move(fwd), std::move(inv), std::move(provenance));
}

// Operator on the tensor square of K + L for a ternary Leibniz algebra L:
// the braid map of the induced binary bracket on (K+L) (x) (K+L), whose
// distinguished central element is (1,0) (x) (1,0):
//   R(X (x) Y) = Y (x) X + (1,0)(x)(1,0) (x) {X,Y},
//   {(a1,x1)(x)(a2,x2), (b1,y1)(x)(b2,y2)} =
//       (0,[x1,y1,y2]) (x) (a2,x2) + (a1,x1) (x) (0,[x2,y1,y2]).
inline YbeOperator solution_3lei_tensor_square(const ThreeLeibnizAlgebra& l) {
    const LeibnizAlgebra f = fundamental_leibniz(trivial_central_extension_3(l));
    CentralWitness one(static_cast<size_t>(f.dim));
    one[0] = Scalar(1);
    return solution_from_central_leibniz(f, one, "solution_3lei_tensor_square");
}

// Operator on K + (L (x) L):
//   R((a, x1(x)x2) (x) (b, y1(x)y2)) = (b, y1(x)y2) (x) (a, x1(x)x2)
//     + (1,0) (x) (0, [x1,y1,y2](x)x2 + x1(x)[x2,y1,y2]).
inline YbeOperator solution_3lei_fundamental(const ThreeLeibnizAlgebra& l) {
    const LeibnizAlgebra fun = fundamental_leibniz(l);
    const LeibnizAlgebra ext = central_extension_unchecked(fun, Mat(fun.dim, fun.dim));
    CentralWitness one(static_cast<size_t>(ext.dim));
    one[0] = Scalar(1);
    return solution_from_central_leibniz(ext, one, "solution_3lei_fundamental");
}

// ---------------------------------------------------------------------------
// Relations between solutions.

// (theta (x) theta) R1 = R2 (theta (x) theta), exactly; theta may be
// rectangular (solution homomorphisms such as the K+(L(x)L) embedding).
inline VerificationReport equivalence_check(const YbeOperator& r1, const YbeOperator& r2,
                                            const Mat& theta) {
    const long d1 = r1.base_dim, d2 = r2.base_dim;
    if (theta.rows != d2 || theta.cols != d1)
        throw ShapeMismatch("intertwiner " + theta.shape_str() + " between base dims " +
                            std::to_string(d1) + " -> " + std::to_string(d2));
    VerificationReport rep;
    rep.subject = "solution intertwiner";
    const SparseCols tc(theta);
    auto theta2 = [&](const SparseVec& v) {
        SparseAccum acc;
        for (const auto& [pq, c] : v) {
            const long p = pq / d1, q = pq % d1;
            for (const auto& [a, s] : tc.column[p])
                for (const auto& [b, t] : tc.column[q]) acc.add_mul(a * d2 + b, c * s, t);
        }
        return acc.normalized();
    };
    for (long i = 0; i < d1; ++i)
        for (long j = 0; j < d1; ++j) {
            ++rep.cases;
            SparseVec lhs = theta2(r1.fwd.column[i * d1 + j]);
            SparseVec rhs = r2.fwd.apply(theta2(sparse_unit(i * d1 + j)));
            if (lhs != rhs)
                rep.add("solution-intertwiner", {i + 1, j + 1},
                        "(theta(x)theta)R1(e_i(x)e_j) = " + sparse_str(lhs) +
                            " but R2(theta(x)theta)(e_i(x)e_j) = " + sparse_str(rhs));
        }
    return rep;
}

// Cell-level diff of a built operator against a printed reference table.
// Never throws on content differences; each differing cell carries the
// computed column (exact image of the corresponding basis pair under the
// defining formula) as its justification note.
inline DiffReport compare_to_reference(const YbeOperator& r, const Mat& reference) {
    const long n = r.base_dim, dim = n * n;
    if (reference.rows != dim || reference.cols != dim)
        throw ShapeMismatch("reference " + reference.shape_str() + " vs operator " +
                            std::to_string(dim) + "x" + std::to_string(dim));
    DiffReport diff;
    diff.rows = dim;
    diff.cols = dim;
    for (long c = 0; c < dim; ++c) {
        const std::vector<Scalar> col = dense_of(r.fwd.column[c], dim);
        for (long row = 0; row < dim; ++row)
            if (col[row] != reference.at(row, c)) {
                DiffCell cell;
                cell.row = row + 1;
                cell.col = c + 1;
                cell.computed = col[row].str();
                cell.reference = reference.at(row, c).str();
                cell.note = "formula gives R(b" + std::to_string(c / n + 1) + " (x) b" +
                            std::to_string(c % n + 1) + ") = " + sparse_str(r.fwd.column[c]) +
                            "; the reference column disagrees at position " +
                            std::to_string(row + 1);
                diff.cells.push_back(std::move(cell));
            }
    }
    return diff;
}

inline DiffReport compare_to_reference(const Mat& computed, const Mat& reference) {
    if (computed.rows != reference.rows || computed.cols != reference.cols)
        throw ShapeMismatch("computed " + computed.shape_str() + " vs reference " +
                            reference.shape_str());
    DiffReport diff;
    diff.rows = computed.rows;
    diff.cols = computed.cols;
    for (long c = 0; c < computed.cols; ++c)
        for (long row = 0; row < computed.rows; ++row)
            if (computed.at(row, c) != reference.at(row, c)) {
                DiffCell cell;
                cell.row = row + 1;
                cell.col = c + 1;
                cell.computed = computed.at(row, c).str();
                cell.reference = reference.at(row, c).str();
                diff.cells.push_back(std::move(cell));
            }
    return diff;
}

// The flip u (x) v |-> v (x) u as a solution (the braid map of any trivial
// structure); useful as a baseline and for scaled sanity checks.
inline YbeOperator flip_solution(long n) {
    SparseCols fwd(n * n, n * n), inv(n * n, n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            fwd.column[i * n + j] = sparse_unit(j * n + i);
            inv.column[i * n + j] = sparse_unit(j * n + i);
        }
    return YbeOperator(n, std::move(fwd), std::move(inv), "flip_solution");
}

}  // namespace yb
