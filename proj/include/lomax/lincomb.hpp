#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "lomax/maxterm.hpp"

namespace lomax {

struct LinTerm {
    Rational coeff;
    MaxTerm term;
};

// Linear combination of max terms: x |-> sum_i coeff_i * term_i(x).
// Always held in canonical form: terms sorted, no duplicates, no zero
// coefficients. The canonicalizing constructor is the spec's canonicalize.
class LinComb {
public:
    explicit LinComb(int n) : n_(n) {}

    LinComb(int n, std::vector<LinTerm> raw_terms) : n_(n) {
        std::map<MaxTerm, Rational> acc;
        for (auto& lt : raw_terms) {
            if (lt.term.n() != n_)
                throw DimensionError("linear combination: term dimension mismatch");
            acc[std::move(lt.term)] += lt.coeff;
        }
        for (auto& [term, coeff] : acc)
            if (coeff != 0) terms_.push_back(LinTerm{coeff, term});
    }

    int n() const { return n_; }
    const std::vector<LinTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational eval(const Point& x) const {
        if (static_cast<int>(x.size()) != n_)
            throw DimensionError("linear combination evaluation: dimension mismatch");
        Rational acc(0);
        for (const auto& lt : terms_) acc += lt.coeff * lt.term.eval(x);
        return acc;
    }

    // Largest constituent count minus one; 0 for the empty combination.
    // An upper bound for the height of the denoted function.
    int height() const {
        std::size_t widest = 1;
        for (const auto& lt : terms_) widest = std::max(widest, lt.term.size());
        return static_cast<int>(widest) - 1;
    }

    LinComb scaled(const Rational& c) const {
        if (c == 0) return LinComb(n_);
        LinComb r(n_);
        r.terms_ = terms_;
        for (auto& lt : r.terms_) lt.coeff *= c;
        return r;
    }

    friend LinComb operator+(const LinComb& a, const LinComb& b) {
        if (a.n_ != b.n_) throw DimensionError("linear combination sum: dimension mismatch");
        std::vector<LinTerm> all = a.terms_;
        all.insert(all.end(), b.terms_.begin(), b.terms_.end());
        return LinComb(a.n_, std::move(all));
    }

    friend bool operator==(const LinComb& a, const LinComb& b) {
        if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].term == b.terms_[i].term))
                return false;
        return true;
    }

private:
    int n_;
    std::vector<LinTerm> terms_;  // sorted by map insertion above
};

inline LinComb canonicalize(int n, std::vector<LinTerm> raw_terms) {
    return LinComb(n, std::move(raw_terms));
}

}  // namespace lomax
