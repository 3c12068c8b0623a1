#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "yb/errors.hpp"

namespace yb {

// Exact rational scalar over an arbitrary-precision integer backend (GMP).
// Invariants: always in lowest terms, denominator > 0. Both are maintained by
// canonicalizing on every constructor that takes raw numerator/denominator
// data; GMP keeps arithmetic results canonical from there.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(static_cast<signed long>(n)) {}  // implicit: integer literals are scalars
    Scalar(long num, long den) {
        if (den == 0) throw ParseError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Scalar(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with optional whitespace padding. Anything else
    // is a ParseError.
    static Scalar parse(std::string_view text) {
        size_t b = 0, e = text.size();
        while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
        std::string s(text.substr(b, e - b));
        if (s.empty()) throw ParseError("empty rational literal");
        const auto ok_int = [](const std::string& t) {
            if (t.empty()) return false;
            size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
            return true;
        };
        const size_t slash = s.find('/');
        mpq_class v;
        if (slash == std::string::npos) {
            if (!ok_int(s)) throw ParseError("bad rational literal '" + s + "'");
            v = mpq_class(s);
        } else {
            const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
            if (!ok_int(num) || !ok_int(den)) throw ParseError("bad rational literal '" + s + "'");
            if (mpz_class(den) == 0) throw ParseError("zero denominator in '" + s + "'");
            v = mpq_class(s);
        }
        v.canonicalize();
        return Scalar(std::move(v), already_canonical{});
    }

    // Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    Scalar operator-() const { return Scalar(mpq_class(-v_), already_canonical{}); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw Error("division by zero scalar");
        v_ /= o.v_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    // *this += a * b without building an operator-expression temporary; this is
    // the workhorse of every structure-constant contraction.
    void add_mul(const Scalar& a, const Scalar& b) {
        mpq_mul(scratch_.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
        mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), scratch_.get_mpq_t());
    }

    const mpq_class& raw() const { return v_; }

private:
    struct already_canonical {};
    Scalar(mpq_class v, already_canonical) : v_(std::move(v)) {}

    mpq_class v_;
    static thread_local mpq_class scratch_;
};

inline thread_local mpq_class Scalar::scratch_{};

}  // namespace yb
