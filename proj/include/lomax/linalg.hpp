#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lomax/affine.hpp"
#include "lomax/rng.hpp"

namespace lomax {

class RatMatrix {
public:
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                   Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return entries_[index(r, c)]; }
    const Rational& at(int r, int c) const { return entries_[index(r, c)]; }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_, cols_;
    std::vector<Rational> entries_;
};

// Integer vector in the kernel of its source matrix; gcd of the entries is 1
// and the first nonzero entry is positive, which makes downstream sign
// decisions reproducible.
using KernelVector = std::vector<Rational>;

struct RrefResult {
    RatMatrix matrix;
    std::vector<int> pivot_cols;
};

// Gauss-Jordan with exact rational arithmetic; pivot on the first nonzero
// entry of each column.
inline RrefResult rref(RatMatrix m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols(); ++c) swap(m.at(piv, c), m.at(row, c));
        Rational inv = m.at(row, col);
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) /= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rational f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(m), std::move(pivots)};
}

// Clear denominators, divide by the gcd, flip so the first nonzero entry is
// positive. Input must not be the zero vector.
inline KernelVector normalize_kernel_vector(std::vector<Rational> v) {
    mpz_class den(1);
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    mpz_class g(0);
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    for (const auto& q : v) {
        mpz_class z = q.get_num() * (den / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        ints.push_back(std::move(z));
    }
    if (g == 0) throw InternalError("normalize_kernel_vector: zero vector");
    int flip = 1;
    for (const auto& z : ints)
        if (z != 0) {
            flip = sgn(z);
            break;
        }
    KernelVector out;
    out.reserve(ints.size());
    for (auto& z : ints) out.emplace_back(z * flip / g);
    return out;
}

// Basis of ker(m), one normalized vector per free column of the rref,
// ordered by free column. Empty when the kernel is trivial.
inline std::vector<KernelVector> kernel_basis(const RatMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : rr.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<KernelVector> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(m.cols()), Rational(0));
        v[static_cast<std::size_t>(free_col)] = 1;
        for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
            v[static_cast<std::size_t>(rr.pivot_cols[r])] =
                -rr.matrix.at(static_cast<int>(r), free_col);
        basis.push_back(normalize_kernel_vector(std::move(v)));
    }
    return basis;
}

enum class KernelStrategy { First, Last, Random };

struct StrategySpec {
    KernelStrategy kind = KernelStrategy::First;
    std::uint64_t seed = 0;

    std::string name() const {
        switch (kind) {
            case KernelStrategy::First: return "first";
            case KernelStrategy::Last: return "last";
            case KernelStrategy::Random: return "random:" + std::to_string(seed);
        }
        return "?";
    }
};

// Called with a non-empty kernel basis, returns the vector to split on.
using KernelChooser = std::function<KernelVector(const std::vector<KernelVector>&)>;

inline KernelChooser make_chooser(const StrategySpec& spec) {
    switch (spec.kind) {
        case KernelStrategy::First:
            return [](const std::vector<KernelVector>& basis) { return basis.front(); };
        case KernelStrategy::Last:
            return [](const std::vector<KernelVector>& basis) { return basis.back(); };
        case KernelStrategy::Random: {
            auto rng = std::make_shared<SampleRng>(spec.seed);
            return [rng](const std::vector<KernelVector>& basis) {
                for (;;) {
                    std::vector<Rational> v(basis.front().size(), Rational(0));
                    bool nonzero = false;
                    for (const auto& b : basis) {
                        long c = rng->next_int(-3, 3);
                        if (c == 0) continue;
                        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
                    }
                    for (const auto& x : v)
                        if (x != 0) {
                            nonzero = true;
                            break;
                        }
                    if (nonzero) return normalize_kernel_vector(std::move(v));
                }
            };
        }
    }
    throw InternalError("make_chooser: unknown strategy");
}

// Chooser that ignores the basis and hands back a fixed vector; used to
// replay a published run or to test a specific split.
inline KernelChooser injected_chooser(KernelVector alpha) {
    return [alpha = std::move(alpha)](const std::vector<KernelVector>&) { return alpha; };
}

inline std::optional<KernelVector> pick_kernel_vector(const std::vector<KernelVector>& basis,
                                                      const KernelChooser& chooser) {
    if (basis.empty()) return std::nullopt;
    return chooser(basis);
}

}  // namespace lomax
