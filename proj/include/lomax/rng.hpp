#pragma once

#include <cstdint>
#include <random>

#include "lomax/rational.hpp"

namespace lomax {

// Deterministic sampling helpers shared by the equivalence checker and the
// property tests. All draws go through explicit modulo arithmetic on the
// standardized mt19937_64 stream, so a (seed, index) pair pins each value.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on [lo, hi].
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Grid point p/denom with p/denom in [-bound, bound].
    Rational next_rational(long bound, long denom = 16) {
        long num = next_int(-bound * denom, bound * denom);
        Rational q(num, denom);
        q.canonicalize();
        return q;
    }

    // A point of the 1/denom grid inside the box [-2^box_exp, 2^box_exp]^n.
    Point next_point(int n, int box_exp, long denom = 16) {
        Point x;
        x.reserve(n);
        long bound = 1L << box_exp;
        for (int i = 0; i < n; ++i) x.push_back(next_rational(bound, denom));
        return x;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace lomax
