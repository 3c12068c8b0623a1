#pragma once

#include <random>
#include <vector>

#include "yb/matrix.hpp"
#include "yb/scalar.hpp"

namespace yb {

// Deterministic small-integer sampler for randomized identity checks.
//
// Values are drawn from {-2,...,2} by reducing raw mt19937 output directly
// (std::uniform_int_distribution is not pinned down by the standard, so its
// output could differ across standard libraries; gen() % 5 is reproducible
// everywhere). Same seed => same stream on every platform.
class SmallIntSampler {
public:
    explicit SmallIntSampler(unsigned seed = 0) : gen_(seed) {}

    long next_int() { return static_cast<long>(gen_() % 5) - 2; }

    Scalar next() { return Scalar(next_int()); }

    std::vector<Scalar> vector(long n) {
        std::vector<Scalar> v(static_cast<size_t>(n));
        for (auto& x : v) x = next();
        return v;
    }

    Mat matrix(long rows, long cols) {
        Mat m(rows, cols);
        for (auto& x : m.a) x = next();
        return m;
    }

private:
    std::mt19937 gen_;
};

}  // namespace yb
