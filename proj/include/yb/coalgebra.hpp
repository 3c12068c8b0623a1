#pragma once

#include <string>
#include <vector>

#include "yb/algebra.hpp"
#include "yb/errors.hpp"
#include "yb/matrix.hpp"
#include "yb/parallel.hpp"
#include "yb/rack.hpp"
#include "yb/report.hpp"

namespace yb {

// ---------------------------------------------------------------------------
// Coassociative counital coalgebras, stored as explicit matrices:
// delta is n² x n (column j = Delta(e_j) in the tensor basis, left factor
// most significant), counit is 1 x n.
struct Coalgebra {
    long dim = 0;
    Mat delta;
    Mat counit;

    Coalgebra() = default;
    Coalgebra(long n, Mat d, Mat e) : dim(n), delta(std::move(d)), counit(std::move(e)) {}
};

namespace detail {

// Delta(e_j) iterated once more on the left factor:
// (Delta (x) id) Delta(e_j), as a sparse vector over flat (i,j,k) indices.
inline SparseVec delta3_col(const SparseCols& dc, long n, long j) {
    SparseAccum acc;
    for (const auto& [pq, a] : dc.column[j]) {
        const long p = pq / n, q = pq % n;
        for (const auto& [rs, b] : dc.column[p]) acc.add_mul(rs * n + q, a, b);
    }
    return acc.normalized();
}

// Image of a sparse pair under a binary operation given column-wise.
inline SparseVec op_pair(const SparseCols& opc, long n, const SparseVec& x, const SparseVec& y) {
    SparseAccum acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            const Scalar ab = a * b;
            if (!ab.is_zero()) acc.add_scaled(opc.column[i * n + j], ab);
        }
    return acc.normalized();
}

// Image of a sparse triple under a ternary operation given column-wise.
inline SparseVec op_triple(const SparseCols& tc, long n, const SparseVec& x, const SparseVec& y,
                           const SparseVec& z) {
    SparseAccum acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            for (const auto& [k, c] : z) {
                const Scalar abc = a * b * c;
                if (!abc.is_zero()) acc.add_scaled(tc.column[(i * n + j) * n + k], abc);
            }
    return acc.normalized();
}

inline Scalar counit_of(const Mat& counit, const SparseVec& v) {
    Scalar out;
    for (const auto& [i, a] : v) out.add_mul(a, counit.at(0, i));
    return out;
}

// Tensor product of two sparse vectors, flattened (left most significant).
inline SparseVec sparse_tensor(const SparseVec& x, long ydim, const SparseVec& y) {
    SparseAccum acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) acc.add_mul(i * ydim + j, a, b);
    return acc.normalized();
}

}  // namespace detail

inline VerificationReport verify_coalgebra(const Coalgebra& c) {
    VerificationReport rep;
    rep.subject = "coalgebra axioms";
    const long n = c.dim;
    if (c.delta.rows != n * n || c.delta.cols != n || c.counit.rows != 1 || c.counit.cols != n) {
        rep.add("shape", {1},
                "delta is " + c.delta.shape_str() + ", counit is " + c.counit.shape_str() +
                    ", expected " + std::to_string(n * n) + "x" + std::to_string(n) + " and 1x" +
                    std::to_string(n));
        return rep;
    }
    const SparseCols dc(c.delta);
    for (long j = 0; j < n; ++j) {
        // Coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta.
        ++rep.cases;
        SparseVec lhs = detail::delta3_col(dc, n, j);
        SparseAccum racc;
        for (const auto& [pq, a] : dc.column[j]) {
            const long p = pq / n, q = pq % n;
            for (const auto& [rs, b] : dc.column[q]) racc.add_mul(p * n * n + rs, a, b);
        }
        SparseVec rhs = racc.normalized();
        if (lhs != rhs)
            rep.add("coassociativity", {j + 1},
                    "(Delta(x)id)Delta(e_j) = " + sparse_str(lhs) + " but (id(x)Delta)Delta = " +
                        sparse_str(rhs));
        // Counit: (eps (x) id) Delta = id = (id (x) eps) Delta.
        ++rep.cases;
        SparseAccum left, right;
        for (const auto& [pq, a] : dc.column[j]) {
            left.add_mul(pq % n, a, c.counit.at(0, pq / n));
            right.add_mul(pq / n, a, c.counit.at(0, pq % n));
        }
        SparseVec lv = left.normalized(), rv = right.normalized();
        if (lv != sparse_unit(j))
            rep.add("left-counit", {j + 1}, "(eps(x)id)Delta(e_j) = " + sparse_str(lv));
        if (rv != sparse_unit(j))
            rep.add("right-counit", {j + 1}, "(id(x)eps)Delta(e_j) = " + sparse_str(rv));
    }
    return rep;
}

inline bool is_cocommutative(const Coalgebra& c) {
    const long n = c.dim;
    const SparseCols dc(c.delta);
    for (long j = 0; j < n; ++j) {
        SparseAccum sw;
        for (const auto& [pq, a] : dc.column[j]) sw.add(pq % n * n + pq / n, a);
        if (sw.normalized() != dc.column[j]) return false;
    }
    return true;
}

// Coalgebra on V (x) W: Delta(x (x) y) = (x1 (x) y1) (x) (x2 (x) y2),
// eps(x (x) y) = eps(x) eps(y).
inline Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d) {
    const long nc = c.dim, nd = d.dim, m = nc * nd;
    Mat delta(m * m, m), counit(1, m);
    const SparseCols cc(c.delta), dd(d.delta);
    for (long i = 0; i < nc; ++i)
        for (long j = 0; j < nd; ++j) {
            const long col = i * nd + j;
            for (const auto& [pq, a] : cc.column[i]) {
                const long p = pq / nc, q = pq % nc;
                for (const auto& [rs, b] : dd.column[j]) {
                    const long r = rs / nd, s = rs % nd;
                    delta.at((p * nd + r) * m + (q * nd + s), col).add_mul(a, b);
                }
            }
            counit.at(0, col) = c.counit.at(0, i) * d.counit.at(0, j);
        }
    return Coalgebra(m, std::move(delta), std::move(counit));
}

// Delta(e_i) = e_i (x) e_i, eps = 1 (linearization of a set).
inline Coalgebra grouplike_coalgebra(long n) {
    Mat delta(n * n, n), counit(1, n);
    for (long i = 0; i < n; ++i) {
        delta.at(i * n + i, i) = Scalar(1);
        counit.at(0, i) = Scalar(1);
    }
    return Coalgebra(n, std::move(delta), std::move(counit));
}

// Coalgebra on K + V (dim = base_dim + 1, index 0 is the K-unit):
// Delta(e_0) = e_0 (x) e_0, Delta(x) = x (x) e_0 + e_0 (x) x for x in V,
// i.e. Delta(a,x) = (a,x)(x)(1,0) + (1,0)(x)(0,x); eps(a,x) = a.
inline Coalgebra primitive_coalgebra(long base_dim) {
    const long n = base_dim + 1;
    Mat delta(n * n, n), counit(1, n);
    delta.at(0, 0) = Scalar(1);
    counit.at(0, 0) = Scalar(1);
    for (long i = 1; i < n; ++i) {
        delta.at(i * n + 0, i) = Scalar(1);
        delta.at(0 * n + i, i) = Scalar(1);
    }
    return Coalgebra(n, std::move(delta), std::move(counit));
}

// ---------------------------------------------------------------------------
// Linear and trilinear rack structures. op/tilde (t/ttilde) are stored as
// n x n² (n x n³) matrices whose column flat(i,j[,k]) is the image of the
// corresponding basis tuple.

struct LinearRackStruct {
    Coalgebra coalg;
    Mat op;
    Mat tilde;
};

struct TrilinearRackStruct {
    Coalgebra coalg;
    Mat t;
    Mat ttilde;
};

// Both morphism identities Delta' f = (f (x) f) Delta and eps' f = eps.
inline VerificationReport coalgebra_morphism_check(const Mat& f, const Coalgebra& src,
                                                   const Coalgebra& dst) {
    if (f.rows != dst.dim || f.cols != src.dim)
        throw ShapeMismatch("coalgebra morphism candidate " + f.shape_str() + " between dims " +
                            std::to_string(src.dim) + " -> " + std::to_string(dst.dim));
    VerificationReport rep;
    rep.subject = "coalgebra morphism";
    const SparseCols fc(f), ds(src.delta), dd(dst.delta);
    for (long j = 0; j < src.dim; ++j) {
        ++rep.cases;
        SparseVec lhs = dd.apply(fc.column[j]);
        SparseAccum racc;
        for (const auto& [pq, a] : ds.column[j]) {
            const long p = pq / src.dim, q = pq % src.dim;
            for (const auto& [r, b] : fc.column[p])
                for (const auto& [s, cc] : fc.column[q]) racc.add_mul(r * dst.dim + s, a * b, cc);
        }
        SparseVec rhs = racc.normalized();
        if (lhs != rhs)
            rep.add("comultiplication-morphism", {j + 1},
                    "Delta'(f(e_j)) = " + sparse_str(lhs) + " but (f(x)f)Delta(e_j) = " +
                        sparse_str(rhs));
        ++rep.cases;
        Scalar le = detail::counit_of(dst.counit, fc.column[j]);
        if (le != src.counit.at(0, j))
            rep.add("counit-morphism", {j + 1},
                    "eps'(f(e_j)) = " + le.str() + " but eps(e_j) = " + src.counit.at(0, j).str());
    }
    return rep;
}

// All defining identities of a linear rack:
// - op and tilde are coalgebra morphisms C (x) C -> C,
// - self-distributivity (u<|v)<|w = (u<|w1)<|(v<|w2),
// - twist-inverse (u<|v2) ~<| v1 = eps(v) u = (u ~<| v2) <| v1.
inline VerificationReport verify_linear_rack(const LinearRackStruct& lr) {
    VerificationReport rep;
    rep.subject = "linear rack axioms";
    const long n = lr.coalg.dim;
    if (lr.op.rows != n || lr.op.cols != n * n || lr.tilde.rows != n || lr.tilde.cols != n * n) {
        rep.add("shape", {1},
                "op is " + lr.op.shape_str() + ", tilde is " + lr.tilde.shape_str() +
                    ", expected " + std::to_string(n) + "x" + std::to_string(n * n));
        return rep;
    }
    const SparseCols opc(lr.op), tic(lr.tilde), dc(lr.coalg.delta);
    auto morphism = [&](const SparseCols& mc, const std::string& name) {
        for (long u = 0; u < n; ++u)
            for (long v = 0; v < n; ++v) {
                ++rep.cases;
                SparseVec lhs = dc.apply(mc.column[u * n + v]);
                SparseAccum racc;
                for (const auto& [p, a] : dc.column[u]) {
                    const long p1 = p / n, p2 = p % n;
                    for (const auto& [q, b] : dc.column[v]) {
                        const long q1 = q / n, q2 = q % n;
                        const Scalar ab = a * b;
                        racc.add_scaled(detail::sparse_tensor(mc.column[p1 * n + q1], n,
                                                              mc.column[p2 * n + q2]),
                                        ab);
                    }
                }
                SparseVec rhs = racc.normalized();
                if (lhs != rhs)
                    rep.add(name + "-comultiplication-morphism", {u + 1, v + 1},
                            "Delta(u op v) = " + sparse_str(lhs) + " but the Sweedler expansion "
                                "= " + sparse_str(rhs));
                ++rep.cases;
                Scalar e = detail::counit_of(lr.coalg.counit, mc.column[u * n + v]);
                Scalar ref = lr.coalg.counit.at(0, u) * lr.coalg.counit.at(0, v);
                if (e != ref)
                    rep.add(name + "-counit-morphism", {u + 1, v + 1},
                            "eps(u op v) = " + e.str() + " but eps(u)eps(v) = " + ref.str());
            }
    };
    morphism(opc, "op");
    morphism(tic, "tilde");
    for (long u = 0; u < n; ++u)
        for (long v = 0; v < n; ++v) {
            const SparseVec& uv = opc.column[u * n + v];
            for (long w = 0; w < n; ++w) {
                ++rep.cases;
                SparseVec lhs = detail::op_pair(opc, n, uv, sparse_unit(w));
                SparseAccum racc;
                for (const auto& [p, a] : dc.column[w]) {
                    const long w1 = p / n, w2 = p % n;
                    racc.add_scaled(detail::op_pair(opc, n, opc.column[u * n + w1],
                                                    opc.column[v * n + w2]),
                                    a);
                }
                SparseVec rhs = racc.normalized();
                if (lhs != rhs)
                    rep.add("self-distributivity", {u + 1, v + 1, w + 1},
                            "(u<|v)<|w = " + sparse_str(lhs) + " but (u<|w1)<|(v<|w2) = " +
                                sparse_str(rhs));
            }
        }
    for (long u = 0; u < n; ++u)
        for (long v = 0; v < n; ++v) {
            SparseVec ref = sparse_of([&] {
                std::vector<Scalar> x(static_cast<size_t>(n));
                x[u] = lr.coalg.counit.at(0, v);
                return x;
            }());
            ++rep.cases;
            SparseAccum acc1;
            for (const auto& [p, a] : dc.column[v]) {
                const long v1 = p / n, v2 = p % n;
                acc1.add_scaled(detail::op_pair(tic, n, opc.column[u * n + v2], sparse_unit(v1)),
                                a);
            }
            SparseVec got1 = acc1.normalized();
            if (got1 != ref)
                rep.add("twist-inverse-1", {u + 1, v + 1},
                        "(u<|v2)~<|v1 = " + sparse_str(got1) + " but eps(v)u = " + sparse_str(ref));
            ++rep.cases;
            SparseAccum acc2;
            for (const auto& [p, a] : dc.column[v]) {
                const long v1 = p / n, v2 = p % n;
                acc2.add_scaled(detail::op_pair(opc, n, tic.column[u * n + v2], sparse_unit(v1)),
                                a);
            }
            SparseVec got2 = acc2.normalized();
            if (got2 != ref)
                rep.add("twist-inverse-2", {u + 1, v + 1},
                        "(u~<|v2)<|v1 = " + sparse_str(got2) + " but eps(v)u = " + sparse_str(ref));
        }
    return rep;
}

// All defining identities of a trilinear rack:
// - t and ttilde are coalgebra morphisms C (x) C (x) C -> C,
// - ternary self-distributivity with left-nested iterated coproducts,
//   T(T(x,y,z),u,v) = T(T(x,u1,v1),T(y,u2,v2),T(z,u3,v3)),
// - reversibility Ttilde(T(x,y2,z2),z1,y1) = eps(y)eps(z)x
//   = T(Ttilde(x,y2,z2),z1,y1).
inline VerificationReport verify_trilinear_rack(const TrilinearRackStruct& tr) {
    VerificationReport rep;
    rep.subject = "trilinear rack axioms";
    const long n = tr.coalg.dim;
    if (tr.t.rows != n || tr.t.cols != n * n * n || tr.ttilde.rows != n ||
        tr.ttilde.cols != n * n * n) {
        rep.add("shape", {1},
                "t is " + tr.t.shape_str() + ", ttilde is " + tr.ttilde.shape_str() +
                    ", expected " + std::to_string(n) + "x" + std::to_string(n * n * n));
        return rep;
    }
    const SparseCols tc(tr.t), ttc(tr.ttilde), dc(tr.coalg.delta);
    auto morphism = [&](const SparseCols& mc, const std::string& name) {
        for (long x = 0; x < n; ++x)
            for (long y = 0; y < n; ++y)
                for (long z = 0; z < n; ++z) {
                    ++rep.cases;
                    SparseVec lhs = dc.apply(mc.column[(x * n + y) * n + z]);
                    SparseAccum racc;
                    for (const auto& [p, a] : dc.column[x])
                        for (const auto& [q, b] : dc.column[y])
                            for (const auto& [r, cc] : dc.column[z]) {
                                const Scalar co = a * b * cc;
                                if (co.is_zero()) continue;
                                racc.add_scaled(
                                    detail::sparse_tensor(
                                        mc.column[(p / n * n + q / n) * n + r / n], n,
                                        mc.column[(p % n * n + q % n) * n + r % n]),
                                    co);
                            }
                    SparseVec rhs = racc.normalized();
                    if (lhs != rhs)
                        rep.add(name + "-comultiplication-morphism", {x + 1, y + 1, z + 1},
                                "Delta(T(x,y,z)) = " + sparse_str(lhs) +
                                    " but the Sweedler expansion = " + sparse_str(rhs));
                    ++rep.cases;
                    Scalar e = detail::counit_of(tr.coalg.counit, mc.column[(x * n + y) * n + z]);
                    Scalar ref = tr.coalg.counit.at(0, x) * tr.coalg.counit.at(0, y) *
                                 tr.coalg.counit.at(0, z);
                    if (e != ref)
                        rep.add(name + "-counit-morphism", {x + 1, y + 1, z + 1},
                                "eps(T(x,y,z)) = " + e.str() + " but eps(x)eps(y)eps(z) = " +
                                    ref.str());
                }
    };
    morphism(tc, "t");
    morphism(ttc, "ttilde");
    std::vector<SparseVec> d3(static_cast<size_t>(n));
    for (long u = 0; u < n; ++u) d3[u] = detail::delta3_col(dc, n, u);
    const long workers = thread_count();
    std::vector<VerificationReport> parts(static_cast<size_t>(std::min(workers, std::max(n, 1L))));
    parallel_chunks(n, workers, [&](long chunk, long lo, long hi) {
        VerificationReport& part = parts[chunk];
        for (long x = lo; x < hi; ++x)
            for (long y = 0; y < n; ++y)
                for (long z = 0; z < n; ++z) {
                    const SparseVec& txyz = tc.column[(x * n + y) * n + z];
                    for (long u = 0; u < n; ++u) {
                        const SparseVec& d3u = d3[u];
                        for (long v = 0; v < n; ++v) {
                            ++part.cases;
                            SparseVec lhs =
                                detail::op_triple(tc, n, txyz, sparse_unit(u), sparse_unit(v));
                            SparseAccum racc;
                            for (const auto& [pu, a] : d3u) {
                                const long u1 = pu / (n * n), u2 = pu / n % n, u3 = pu % n;
                                for (const auto& [pv, b] : d3[v]) {
                                    const long v1 = pv / (n * n), v2 = pv / n % n, v3 = pv % n;
                                    const Scalar ab = a * b;
                                    if (ab.is_zero()) continue;
                                    racc.add_scaled(
                                        detail::op_triple(
                                            tc, n, tc.column[(x * n + u1) * n + v1],
                                            tc.column[(y * n + u2) * n + v2],
                                            tc.column[(z * n + u3) * n + v3]),
                                        ab);
                                }
                            }
                            SparseVec rhs = racc.normalized();
                            if (lhs != rhs)
                                part.add("ternary-self-distributivity",
                                         {x + 1, y + 1, z + 1, u + 1, v + 1},
                                         "T(T(x,y,z),u,v) = " + sparse_str(lhs) +
                                             " but the Sweedler expansion = " + sparse_str(rhs));
                        }
                    }
                }
    });
    for (const auto& p : parts) rep.absorb(p);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z) {
                SparseVec ref = sparse_of([&] {
                    std::vector<Scalar> w(static_cast<size_t>(n));
                    w[x] = tr.coalg.counit.at(0, y) * tr.coalg.counit.at(0, z);
                    return w;
                }());
                ++rep.cases;
                SparseAccum acc1, acc2;
                for (const auto& [py, a] : dc.column[y]) {
                    const long y1 = py / n, y2 = py % n;
                    for (const auto& [pz, b] : dc.column[z]) {
                        const long z1 = pz / n, z2 = pz % n;
                        const Scalar ab = a * b;
                        if (ab.is_zero()) continue;
                        acc1.add_scaled(
                            detail::op_triple(ttc, n, tc.column[(x * n + y2) * n + z2],
                                              sparse_unit(z1), sparse_unit(y1)),
                            ab);
                        acc2.add_scaled(
                            detail::op_triple(tc, n, ttc.column[(x * n + y2) * n + z2],
                                              sparse_unit(z1), sparse_unit(y1)),
                            ab);
                    }
                }
                SparseVec got1 = acc1.normalized();
                if (got1 != ref)
                    rep.add("reversibility-1", {x + 1, y + 1, z + 1},
                            "Ttilde(T(x,y2,z2),z1,y1) = " + sparse_str(got1) +
                                " but eps(y)eps(z)x = " + sparse_str(ref));
                ++rep.cases;
                SparseVec got2 = acc2.normalized();
                if (got2 != ref)
                    rep.add("reversibility-2", {x + 1, y + 1, z + 1},
                            "T(Ttilde(x,y2,z2),z1,y1) = " + sparse_str(got2) +
                                " but eps(y)eps(z)x = " + sparse_str(ref));
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Builders.

// Linear rack on K + E for a Leibniz algebra E, with the case table
//   1<|1 = 1,  1<|x = 0,  x<|1 = x,  x<|y = [x,y]   (x,y in E)
// and tilde identical except x~<|y = -[x,y].
inline LinearRackStruct leibniz_linear_rack(const LeibnizAlgebra& e) {
    const long n = e.dim + 1;
    LinearRackStruct lr;
    lr.coalg = primitive_coalgebra(e.dim);
    lr.op = Mat(n, n * n);
    lr.tilde = Mat(n, n * n);
    lr.op.at(0, 0) = Scalar(1);
    lr.tilde.at(0, 0) = Scalar(1);
    for (long i = 1; i < n; ++i) {
        lr.op.at(i, i * n + 0) = Scalar(1);
        lr.tilde.at(i, i * n + 0) = Scalar(1);
        for (long j = 1; j < n; ++j)
            for (const auto& [m, s] : e.bracket_basis(i - 1, j - 1)) {
                lr.op.at(1 + m, i * n + j) = s;
                lr.tilde.at(1 + m, i * n + j) = -s;
            }
    }
    return lr;
}

// Grouplike linearization of a finite rack; tilde columns are the inverse
// permutations of x |-> x<|y (so that (x<|y)~<|y = x), to be verified by
// the caller rather than assumed.
inline LinearRackStruct linearize_rack(const FiniteRack& r) {
    const long n = r.size;
    LinearRackStruct lr;
    lr.coalg = grouplike_coalgebra(n);
    lr.op = Mat(n, n * n);
    lr.tilde = Mat(n, n * n);
    for (long y = 0; y < n; ++y) {
        std::vector<long> inv(static_cast<size_t>(n));
        for (long x = 0; x < n; ++x) inv[r.apply(x, y)] = x;
        for (long x = 0; x < n; ++x) {
            lr.op.at(r.apply(x, y), x * n + y) = Scalar(1);
            lr.tilde.at(inv[x], x * n + y) = Scalar(1);
        }
    }
    return lr;
}

// Grouplike linearization of a finite 3-rack; Ttilde(., z, y) is the inverse
// permutation of T(., y, z), matching the printed reversibility ordering.
inline TrilinearRackStruct linearize_3rack(const Finite3Rack& t) {
    const long n = t.size;
    TrilinearRackStruct tr;
    tr.coalg = grouplike_coalgebra(n);
    tr.t = Mat(n, n * n * n);
    tr.ttilde = Mat(n, n * n * n);
    for (long y = 0; y < n; ++y)
        for (long z = 0; z < n; ++z) {
            std::vector<long> inv(static_cast<size_t>(n));
            for (long x = 0; x < n; ++x) inv[t.apply(x, y, z)] = x;
            for (long x = 0; x < n; ++x) {
                tr.t.at(t.apply(x, y, z), (x * n + y) * n + z) = Scalar(1);
                tr.ttilde.at(inv[x], (x * n + z) * n + y) = Scalar(1);
            }
        }
    return tr;
}

// Trilinear rack on K + L for a ternary Leibniz algebra L:
//   T((a,x),(b,y),(c,z)) = (abc, bc x + [x,y,z]),
//   Ttilde((a,x),(b,y),(c,z)) = (abc, bc x - [x,z,y]).
inline TrilinearRackStruct threeleibniz_trilinear_rack(const ThreeLeibnizAlgebra& l) {
    const long n = l.dim + 1;
    TrilinearRackStruct tr;
    tr.coalg = primitive_coalgebra(l.dim);
    tr.t = Mat(n, n * n * n);
    tr.ttilde = Mat(n, n * n * n);
    tr.t.at(0, 0) = Scalar(1);
    tr.ttilde.at(0, 0) = Scalar(1);
    for (long i = 1; i < n; ++i) {
        tr.t.at(i, (i * n + 0) * n + 0) = Scalar(1);
        tr.ttilde.at(i, (i * n + 0) * n + 0) = Scalar(1);
        for (long j = 1; j < n; ++j)
            for (long k = 1; k < n; ++k) {
                for (const auto& [m, s] : l.bracket_basis(i - 1, j - 1, k - 1))
                    tr.t.at(1 + m, (i * n + j) * n + k) = s;
                for (const auto& [m, s] : l.bracket_basis(i - 1, k - 1, j - 1))
                    tr.ttilde.at(1 + m, (i * n + j) * n + k) = -s;
            }
    }
    return tr;
}

// Linear rack on C (x) C induced by a trilinear rack on C:
//   (u (x) v) <| (m (x) w) = T(u,m1,w1) (x) T(v,m2,w2),
//   (u (x) v) ~<| (m (x) w) = Ttilde(u,w1,m1) (x) Ttilde(v,w2,m2).
// Requires cocommutativity (the proof of the induced self-distributivity
// reorders Sweedler legs).
inline LinearRackStruct trilinear_to_linear(const TrilinearRackStruct& tr) {
    if (!is_cocommutative(tr.coalg))
        throw NotCocommutative("trilinear-to-linear passage needs a cocommutative coalgebra");
    const long n = tr.coalg.dim, m = n * n;
    LinearRackStruct lr;
    lr.coalg = tensor_coalgebra(tr.coalg, tr.coalg);
    lr.op = Mat(m, m * m);
    lr.tilde = Mat(m, m * m);
    const SparseCols tc(tr.t), ttc(tr.ttilde), dc(tr.coalg.delta);
    for (long u = 0; u < n; ++u)
        for (long v = 0; v < n; ++v)
            for (long mm = 0; mm < n; ++mm)
                for (long w = 0; w < n; ++w) {
                    const long col = (u * n + v) * m + (mm * n + w);
                    for (const auto& [pm, a] : dc.column[mm]) {
                        const long m1 = pm / n, m2 = pm % n;
                        for (const auto& [pw, b] : dc.column[w]) {
                            const long w1 = pw / n, w2 = pw % n;
                            const Scalar ab = a * b;
                            if (ab.is_zero()) continue;
                            for (const auto& [p, s] : tc.column[(u * n + m1) * n + w1])
                                for (const auto& [q, ss] : tc.column[(v * n + m2) * n + w2])
                                    lr.op.at(p * n + q, col).add_mul(ab * s, ss);
                            for (const auto& [p, s] : ttc.column[(u * n + w1) * n + m1])
                                for (const auto& [q, ss] : ttc.column[(v * n + w2) * n + m2])
                                    lr.tilde.at(p * n + q, col).add_mul(ab * s, ss);
                        }
                    }
                }
    return lr;
}

// f(u <| v) = f(u) <|' f(v) (and the same for the tilde operations) on all
// basis pairs; f must already be a coalgebra morphism for the rack-morphism
// notion to make sense, so callers typically pair this with
// coalgebra_morphism_check.
inline VerificationReport linear_rack_morphism_check(const Mat& f, const LinearRackStruct& src,
                                                     const LinearRackStruct& dst) {
    const long ns = src.coalg.dim, nd = dst.coalg.dim;
    if (f.rows != nd || f.cols != ns)
        throw ShapeMismatch("rack morphism candidate " + f.shape_str() + " between dims " +
                            std::to_string(ns) + " -> " + std::to_string(nd));
    VerificationReport rep;
    rep.subject = "linear rack morphism";
    const SparseCols fc(f), so(src.op), st(src.tilde), dop(dst.op), dt(dst.tilde);
    for (long u = 0; u < ns; ++u)
        for (long v = 0; v < ns; ++v) {
            ++rep.cases;
            SparseVec lhs = fc.apply(so.column[u * ns + v]);
            SparseVec rhs = detail::op_pair(dop, nd, fc.column[u], fc.column[v]);
            if (lhs != rhs)
                rep.add("op-morphism", {u + 1, v + 1},
                        "f(u<|v) = " + sparse_str(lhs) + " but f(u)<|'f(v) = " + sparse_str(rhs));
            ++rep.cases;
            SparseVec lht = fc.apply(st.column[u * ns + v]);
            SparseVec rht = detail::op_pair(dt, nd, fc.column[u], fc.column[v]);
            if (lht != rht)
                rep.add("tilde-morphism", {u + 1, v + 1},
                        "f(u~<|v) = " + sparse_str(lht) + " but f(u)~<|'f(v) = " +
                            sparse_str(rht));
        }
    return rep;
}

// The commuting square tying the pair rack to the tensor-square rack:
// phi(a (x1,x2)) = a x1 (x) x2 is checked to be a coalgebra morphism and a
// linear rack morphism from linearize_rack(threerack_to_rack(t)) to
// trilinear_to_linear(linearize_3rack(t)).
inline VerificationReport varphi_check(const Finite3Rack& t) {
    const long n = t.size;
    LinearRackStruct src = linearize_rack(threerack_to_rack(t));
    LinearRackStruct dst = trilinear_to_linear(linearize_3rack(t));
    Mat phi(n * n, n * n);
    for (long x1 = 0; x1 < n; ++x1)
        for (long x2 = 0; x2 < n; ++x2) phi.at(x1 * n + x2, x1 * n + x2) = Scalar(1);
    VerificationReport rep;
    rep.subject = "pair-to-tensor linearized commuting square";
    rep.absorb(coalgebra_morphism_check(phi, src.coalg, dst.coalg));
    rep.absorb(linear_rack_morphism_check(phi, src, dst));
    return rep;
}

}  // namespace yb
