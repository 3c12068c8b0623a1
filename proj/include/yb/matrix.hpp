#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "yb/errors.hpp"
#include "yb/scalar.hpp"

namespace yb {

// Dense row-major matrix of exact rationals. Row/column indices are 0-based in
// code; reports and file formats that talk to humans render them 1-based.
//
// Operator convention used across the project: column j of an operator matrix
// is the image of basis vector j.
struct Mat {
    long rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static Mat identity(long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    Scalar& at(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    Mat operator+(const Mat& o) const {
        require_same_shape(o, "+");
        Mat out = *this;
        for (size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
        return out;
    }

    Mat operator-(const Mat& o) const {
        require_same_shape(o, "-");
        Mat out = *this;
        for (size_t i = 0; i < a.size(); ++i) out.a[i] -= o.a[i];
        return out;
    }

    // Zero-skipping product: the operators in this project are permutation-like
    // (a handful of nonzeros per column), so skipping zero left entries makes
    // the triple products that show up in braid checks effectively linear.
    Mat operator*(const Mat& o) const {
        if (cols != o.rows)
            throw ShapeMismatch("matrix product " + shape_str() + " * " + o.shape_str());
        Mat out(rows, o.cols);
        for (long i = 0; i < rows; ++i) {
            for (long k = 0; k < cols; ++k) {
                const Scalar& lik = at(i, k);
                if (lik.is_zero()) continue;
                const Scalar* orow = &o.a[static_cast<size_t>(k) * o.cols];
                Scalar* trow = &out.a[static_cast<size_t>(i) * o.cols];
                for (long j = 0; j < o.cols; ++j) {
                    if (!orow[j].is_zero()) trow[j].add_mul(lik, orow[j]);
                }
            }
        }
        return out;
    }

    Mat scaled(const Scalar& s) const {
        Mat out = *this;
        for (auto& x : out.a) x *= s;
        return out;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (static_cast<long>(v.size()) != cols)
            throw ShapeMismatch("matrix-vector product " + shape_str() + " * vec(" +
                                std::to_string(v.size()) + ")");
        std::vector<Scalar> out(rows);
        for (long j = 0; j < cols; ++j) {
            if (v[j].is_zero()) continue;
            for (long i = 0; i < rows; ++i) {
                const Scalar& m = at(i, j);
                if (!m.is_zero()) out[i].add_mul(m, v[j]);
            }
        }
        return out;
    }

    std::vector<Scalar> col(long j) const {
        std::vector<Scalar> out(rows);
        for (long i = 0; i < rows; ++i) out[i] = at(i, j);
        return out;
    }

    void set_col(long j, const std::vector<Scalar>& v) {
        for (long i = 0; i < rows; ++i) at(i, j) = v[i];
    }

    std::string shape_str() const {
        return std::to_string(rows) + "x" + std::to_string(cols);
    }

private:
    void require_same_shape(const Mat& o, const char* op) const {
        if (!same_shape(o))
            throw ShapeMismatch(std::string("matrix ") + op + " on " + shape_str() + " vs " +
                                o.shape_str());
    }
};

// ---------------------------------------------------------------------------
// Tensor index bookkeeping.
//
// Basis of V_1 (x) ... (x) V_k is ordered lexicographically with the LEFT
// factor most significant: flat(i_1..i_k) = sum_m i_m * prod_{j>m} dim_j.
struct TensorShape {
    std::vector<long> dims;

    explicit TensorShape(std::vector<long> d) : dims(std::move(d)) {}

    long total() const {
        long t = 1;
        for (long d : dims) t *= d;
        return t;
    }

    long flat(const std::vector<long>& idx) const {
        long f = 0;
        for (size_t m = 0; m < dims.size(); ++m) f = f * dims[m] + idx[m];
        return f;
    }

    std::vector<long> unflat(long f) const {
        std::vector<long> idx(dims.size());
        for (size_t m = dims.size(); m-- > 0;) {
            idx[m] = f % dims[m];
            f /= dims[m];
        }
        return idx;
    }
};

inline long flat2(long i, long j, long dim2) { return i * dim2 + j; }
inline long flat3(long i, long j, long k, long dim2, long dim3) {
    return (i * dim2 + j) * dim3 + k;
}

// Kronecker product in the same basis order: (A(x)B)[(ia,ib),(ja,jb)] =
// A[ia,ja] * B[ib,jb] with row index ia*B.rows+ib.
inline Mat kron(const Mat& x, const Mat& y) {
    Mat out(x.rows * y.rows, x.cols * y.cols);
    for (long ia = 0; ia < x.rows; ++ia)
        for (long ja = 0; ja < x.cols; ++ja) {
            const Scalar& s = x.at(ia, ja);
            if (s.is_zero()) continue;
            for (long ib = 0; ib < y.rows; ++ib)
                for (long jb = 0; jb < y.cols; ++jb) {
                    const Scalar& t = y.at(ib, jb);
                    if (!t.is_zero()) out.at(ia * y.rows + ib, ja * y.cols + jb).add_mul(s, t);
                }
        }
    return out;
}

// The flip V(x)W -> W(x)V: e_i(x)f_j |-> f_j(x)e_i. Square permutation matrix
// of size n*m.
inline Mat swap_operator(long n, long m) {
    Mat out(m * n, n * m);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < m; ++j) out.at(j * n + i, i * m + j) = Scalar(1);
    return out;
}

// tau on V(x)V for dim V = n.
inline Mat swap_operator(long n) { return swap_operator(n, n); }

// Exact inverse by rational Gauss-Jordan elimination with zero-skipping.
// Throws Singular naming the first column (1-based) without a pivot.
inline Mat invert(const Mat& m) {
    if (m.rows != m.cols) throw ShapeMismatch("inverse of non-square " + m.shape_str());
    const long n = m.rows;
    Mat w = m, inv = Mat::identity(n);
    for (long c = 0; c < n; ++c) {
        long p = -1;
        for (long r = c; r < n; ++r)
            if (!w.at(r, c).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) throw Singular(c + 1);
        if (p != c) {
            for (long j = 0; j < n; ++j) {
                std::swap(w.at(p, j), w.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        }
        const Scalar piv = w.at(c, c);
        if (!piv.is_one()) {
            for (long j = 0; j < n; ++j) {
                if (!w.at(c, j).is_zero()) w.at(c, j) /= piv;
                if (!inv.at(c, j).is_zero()) inv.at(c, j) /= piv;
            }
        }
        for (long r = 0; r < n; ++r) {
            if (r == c) continue;
            const Scalar f = w.at(r, c);
            if (f.is_zero()) continue;
            for (long j = 0; j < n; ++j) {
                if (!w.at(c, j).is_zero()) w.at(r, j).add_mul(-f, w.at(c, j));
                if (!inv.at(c, j).is_zero()) inv.at(r, j).add_mul(-f, inv.at(c, j));
            }
        }
    }
    return inv;
}

inline bool is_invertible(const Mat& m) {
    if (m.rows != m.cols) return false;
    try {
        invert(m);
        return true;
    } catch (const Singular&) {
        return false;
    }
}

// Smallest k >= 1 with m^k = 0, or -1 when m is not nilpotent. A nilpotent
// operator on an n-dim space has index <= n, so the search is bounded.
inline long nilpotency_index(const Mat& m) {
    if (m.rows != m.cols) throw ShapeMismatch("nilpotency of non-square " + m.shape_str());
    if (m.is_zero()) return 1;
    Mat power = m;
    for (long k = 1; k <= m.rows; ++k) {
        if (power.is_zero()) return k;
        power = power * m;
    }
    return power.is_zero() ? m.rows + 1 : -1;
}

// exp(m) = sum m^k / k!, which terminates exactly when m is nilpotent.
// Throws NotNilpotent (with the surviving entry of m^n as witness) otherwise.
inline Mat exp_nilpotent(const Mat& m) {
    if (m.rows != m.cols) throw ShapeMismatch("exp of non-square " + m.shape_str());
    const long n = m.rows;
    Mat out = Mat::identity(n);
    Mat power = Mat::identity(n);
    Scalar factorial(1);
    for (long k = 1; k <= n && true; ++k) {
        power = power * m;
        if (power.is_zero()) return out;
        factorial *= Scalar(k);
        const Scalar inv_fact = Scalar(1) / factorial;
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                if (!power.at(i, j).is_zero()) out.at(i, j).add_mul(power.at(i, j), inv_fact);
    }
    // power now holds m^n; nilpotency index of an n-dim operator is <= n, so a
    // nonzero m^n proves non-nilpotency.
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (!power.at(i, j).is_zero())
                throw NotNilpotent(n, "entry (" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + ") = " + power.at(i, j).str());
    return out;  // unreachable
}

// ---------------------------------------------------------------------------
// Sparse columns: the verification engine walks operators column-by-column,
// and every column in sight has a handful of nonzeros.

// Sorted-by-index list of (index, value) with no explicit zeros.
using SparseVec = std::vector<std::pair<long, Scalar>>;

inline SparseVec sparse_unit(long idx) { return {{idx, Scalar(1)}}; }

// Order-insensitive accumulator; normalize() merges duplicates and drops zeros.
struct SparseAccum {
    std::vector<std::pair<long, Scalar>> terms;

    void add(long idx, const Scalar& s) {
        if (!s.is_zero()) terms.push_back({idx, s});
    }
    void add_mul(long idx, const Scalar& x, const Scalar& y) {
        if (x.is_zero() || y.is_zero()) return;
        terms.push_back({idx, x * y});
    }
    void add_scaled(const SparseVec& v, const Scalar& s) {
        if (s.is_zero()) return;
        for (const auto& [i, x] : v) terms.push_back({i, x * s});
    }

    SparseVec normalized() {
        std::sort(terms.begin(), terms.end(),
                  [](const auto& p, const auto& q) { return p.first < q.first; });
        SparseVec out;
        for (auto& [i, x] : terms) {
            if (!out.empty() && out.back().first == i)
                out.back().second += x;
            else
                out.push_back({i, x});
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const auto& p) { return p.second.is_zero(); }),
                  out.end());
        return out;
    }
};

inline std::string sparse_str(const SparseVec& v) {
    if (v.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " + ";
        s += v[i].second.str() + "*b" + std::to_string(v[i].first + 1);
    }
    return s;
}

// Column-major sparse view of a dense operator, built once per verification.
struct SparseCols {
    long rows = 0, cols = 0;
    std::vector<SparseVec> column;

    SparseCols() = default;
    SparseCols(long r, long c) : rows(r), cols(c), column(static_cast<size_t>(c)) {}
    explicit SparseCols(const Mat& m) : rows(m.rows), cols(m.cols), column(m.cols) {
        for (long i = 0; i < m.rows; ++i)
            for (long j = 0; j < m.cols; ++j)
                if (!m.at(i, j).is_zero()) column[j].push_back({i, m.at(i, j)});
    }

    // Image of a sparse vector under the operator.
    SparseVec apply(const SparseVec& v) const {
        SparseAccum acc;
        for (const auto& [j, s] : v) acc.add_scaled(column[j], s);
        return acc.normalized();
    }
};

inline std::vector<Scalar> dense_of(const SparseVec& v, long n) {
    std::vector<Scalar> out(n);
    for (const auto& [i, s] : v) out[i] = s;
    return out;
}

inline SparseVec sparse_of(const std::vector<Scalar>& v) {
    SparseVec out;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({static_cast<long>(i), v[i]});
    return out;
}

}  // namespace yb
