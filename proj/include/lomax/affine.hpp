#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lomax/errors.hpp"
#include "lomax/rational.hpp"

namespace lomax {

// Affine map R^n -> R: x |-> <gradient, x> + constant.
struct AffineFunc {
    std::vector<Rational> gradient;
    Rational constant;

    AffineFunc() = default;
    AffineFunc(std::vector<Rational> grad, Rational c)
        : gradient(std::move(grad)), constant(std::move(c)) {}

    int n() const { return static_cast<int>(gradient.size()); }

    static AffineFunc zero(int n) {
        return AffineFunc(std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)),
                          Rational(0));
    }

    // Unit coordinate function x_i (0-based index).
    static AffineFunc coordinate(int n, int i) {
        AffineFunc f = zero(n);
        f.gradient[static_cast<std::size_t>(i)] = 1;
        return f;
    }

    Rational eval(const Point& x) const {
        if (static_cast<int>(x.size()) != n())
            throw DimensionError("affine evaluation: point has dimension " +
                                 std::to_string(x.size()) + ", function expects " +
                                 std::to_string(n()));
        Rational acc = constant;
        for (std::size_t i = 0; i < gradient.size(); ++i) acc += gradient[i] * x[i];
        return acc;
    }

    friend bool operator==(const AffineFunc& a, const AffineFunc& b) {
        return a.gradient == b.gradient && a.constant == b.constant;
    }

    // Total canonical order: lexicographic on (gradient, constant).
    friend bool operator<(const AffineFunc& a, const AffineFunc& b) {
        if (a.gradient.size() != b.gradient.size())
            return a.gradient.size() < b.gradient.size();
        for (std::size_t i = 0; i < a.gradient.size(); ++i) {
            int c = cmp(a.gradient[i], b.gradient[i]);
            if (c != 0) return c < 0;
        }
        return cmp(a.constant, b.constant) < 0;
    }

    friend AffineFunc operator+(const AffineFunc& a, const AffineFunc& b) {
        if (a.n() != b.n()) throw DimensionError("affine sum: dimension mismatch");
        AffineFunc r = a;
        for (std::size_t i = 0; i < r.gradient.size(); ++i) r.gradient[i] += b.gradient[i];
        r.constant += b.constant;
        return r;
    }

    friend AffineFunc operator*(const Rational& c, const AffineFunc& f) {
        AffineFunc r = f;
        for (auto& g : r.gradient) g *= c;
        r.constant *= c;
        return r;
    }

    friend AffineFunc operator-(const AffineFunc& f) { return Rational(-1) * f; }
};

}  // namespace lomax
