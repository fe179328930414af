#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "lomax/affine.hpp"

namespace lomax {

// Pointwise maximum of a finite non-empty set of affine functions.
// Constituents are kept sorted in canonical order with duplicates removed,
// so structural equality is set equality.
class MaxTerm {
public:
    explicit MaxTerm(std::vector<AffineFunc> constituents)
        : constituents_(std::move(constituents)) {
        if (constituents_.empty()) throw Error("max term needs at least one constituent");
        int dim = constituents_.front().n();
        for (const auto& f : constituents_)
            if (f.n() != dim)
                throw DimensionError("max term: constituents have mixed dimensions");
        std::sort(constituents_.begin(), constituents_.end());
        constituents_.erase(std::unique(constituents_.begin(), constituents_.end()),
                            constituents_.end());
    }

    const std::vector<AffineFunc>& constituents() const { return constituents_; }
    int n() const { return constituents_.front().n(); }
    std::size_t size() const { return constituents_.size(); }

    Rational eval(const Point& x) const {
        Rational best = constituents_.front().eval(x);
        for (std::size_t i = 1; i < constituents_.size(); ++i) {
            Rational v = constituents_[i].eval(x);
            if (v > best) best = v;
        }
        return best;
    }

    friend bool operator==(const MaxTerm& a, const MaxTerm& b) {
        return a.constituents_ == b.constituents_;
    }

    friend bool operator<(const MaxTerm& a, const MaxTerm& b) {
        return std::lexicographical_compare(a.constituents_.begin(), a.constituents_.end(),
                                            b.constituents_.begin(), b.constituents_.end());
    }

private:
    std::vector<AffineFunc> constituents_;
};

// Among constituents sharing a gradient only the one with the largest
// constant can ever attain the maximum; drop the rest.
inline MaxTerm prune_dominated(const MaxTerm& t) {
    std::map<std::vector<Rational>, Rational> best;
    for (const auto& f : t.constituents()) {
        auto it = best.find(f.gradient);
        if (it == best.end() || f.constant > it->second)
            best.insert_or_assign(it, f.gradient, f.constant);
    }
    std::vector<AffineFunc> kept;
    kept.reserve(best.size());
    for (auto& [grad, c] : best) kept.emplace_back(grad, c);
    return MaxTerm(std::move(kept));
}

// Pointwise sum of two max terms: max(R) + max(Q) = max{u+v : u in R, v in Q}.
inline MaxTerm pairwise_sum(const MaxTerm& a, const MaxTerm& b) {
    if (a.n() != b.n()) throw DimensionError("pairwise sum: dimension mismatch");
    std::vector<AffineFunc> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& u : a.constituents())
        for (const auto& v : b.constituents()) sums.push_back(u + v);
    return MaxTerm(std::move(sums));
}

// max(c R) = c max(R) for c > 0.
inline MaxTerm scale_positive(const Rational& c, const MaxTerm& t) {
    if (sign(c) <= 0) throw Error("scale_positive requires a positive factor");
    std::vector<AffineFunc> scaled;
    scaled.reserve(t.size());
    for (const auto& f : t.constituents()) scaled.push_back(c * f);
    return MaxTerm(std::move(scaled));
}

}  // namespace lomax
