#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "lomax/expr.hpp"
#include "lomax/lincomb.hpp"

namespace lomax {

// max over blocks of (min over the block): the lattice normal form every
// nested min/max expression is brought into before the inclusion-exclusion
// rewrite. Blocks are sorted sets in canonical order and absorption-reduced
// (no block contains another block).
struct MaxMinForm {
    int n = 0;
    std::vector<std::vector<AffineFunc>> blocks;

    Rational eval(const Point& x) const {
        Rational best;
        bool have = false;
        for (const auto& block : blocks) {
            Rational m = block.front().eval(x);
            for (std::size_t i = 1; i < block.size(); ++i)
                m = std::min(m, block[i].eval(x));
            if (!have || m > best) {
                best = m;
                have = true;
            }
        }
        return best;
    }
};

namespace expand_detail {

inline std::vector<AffineFunc> sorted_unique(std::vector<AffineFunc> fs) {
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    return fs;
}

// min over a superset is everywhere <= min over the subset, so superset
// blocks never contribute to the max and are dropped.
inline std::vector<std::vector<AffineFunc>> absorb(std::vector<std::vector<AffineFunc>> blocks) {
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    std::vector<std::vector<AffineFunc>> kept;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        bool superset = false;
        for (std::size_t j = 0; j < blocks.size() && !superset; ++j) {
            if (i == j || blocks[j].size() >= blocks[i].size()) continue;
            superset = std::includes(blocks[i].begin(), blocks[i].end(), blocks[j].begin(),
                                     blocks[j].end());
        }
        if (!superset) kept.push_back(std::move(blocks[i]));
    }
    return kept;
}

}  // namespace expand_detail

// Structural recursion into the normal form:
//   affine leaf          -> one singleton block
//   max                  -> union of the children's blocks
//   min                  -> one block per choice of a block from each child
//   sum                  -> pairwise sums of blocks, folded left
//   scale by c > 0       -> scale every entry
//   scale by 0           -> the zero function
//   scale by c < 0       -> scaled form is a min of maxes; redistribute back
//                           to max-of-min via choice functions
// Absorption runs after every rule.
inline MaxMinForm to_maxmin(const ExprNode& e) {
    using expand_detail::absorb;
    using expand_detail::sorted_unique;
    MaxMinForm out;
    out.n = e.n();
    switch (e.kind) {
        case ExprNode::Kind::Affine:
            out.blocks.push_back({e.affine});
            return out;
        case ExprNode::Kind::Max: {
            for (const auto& child : e.children) {
                MaxMinForm sub = to_maxmin(*child);
                for (auto& b : sub.blocks) out.blocks.push_back(std::move(b));
            }
            out.blocks = absorb(std::move(out.blocks));
            return out;
        }
        case ExprNode::Kind::Min: {
            std::vector<MaxMinForm> subs;
            subs.reserve(e.children.size());
            for (const auto& child : e.children) subs.push_back(to_maxmin(*child));
            std::vector<std::size_t> idx(subs.size(), 0);
            for (;;) {
                std::vector<AffineFunc> merged;
                for (std::size_t i = 0; i < subs.size(); ++i) {
                    const auto& b = subs[i].blocks[idx[i]];
                    merged.insert(merged.end(), b.begin(), b.end());
                }
                out.blocks.push_back(sorted_unique(std::move(merged)));
                std::size_t i = 0;
                while (i < idx.size() && ++idx[i] == subs[i].blocks.size()) idx[i++] = 0;
                if (i == idx.size()) break;
            }
            out.blocks = absorb(std::move(out.blocks));
            return out;
        }
        case ExprNode::Kind::Sum: {
            MaxMinForm acc = to_maxmin(*e.children.front());
            for (std::size_t k = 1; k < e.children.size(); ++k) {
                MaxMinForm rhs = to_maxmin(*e.children[k]);
                std::vector<std::vector<AffineFunc>> blocks;
                for (const auto& bl : acc.blocks)
                    for (const auto& br : rhs.blocks) {
                        std::vector<AffineFunc> sums;
                        sums.reserve(bl.size() * br.size());
                        for (const auto& u : bl)
                            for (const auto& v : br) sums.push_back(u + v);
                        blocks.push_back(sorted_unique(std::move(sums)));
                    }
                acc.blocks = absorb(std::move(blocks));
            }
            return acc;
        }
        case ExprNode::Kind::Scale: {
            const Rational& c = e.scale;
            if (c == 0) {
                out.blocks.push_back({AffineFunc::zero(out.n)});
                return out;
            }
            MaxMinForm sub = to_maxmin(*e.children.front());
            std::vector<std::vector<AffineFunc>> scaled;
            scaled.reserve(sub.blocks.size());
            for (const auto& b : sub.blocks) {
                std::vector<AffineFunc> sb;
                sb.reserve(b.size());
                for (const auto& f : b) sb.push_back(c * f);
                scaled.push_back(sorted_unique(std::move(sb)));
            }
            if (sign(c) > 0) {
                out.blocks = absorb(std::move(scaled));
                return out;
            }
            // c < 0: `scaled` now reads min over blocks of max(block).
            std::vector<std::size_t> idx(scaled.size(), 0);
            for (;;) {
                std::vector<AffineFunc> choice;
                choice.reserve(scaled.size());
                for (std::size_t i = 0; i < scaled.size(); ++i) choice.push_back(scaled[i][idx[i]]);
                out.blocks.push_back(sorted_unique(std::move(choice)));
                std::size_t i = 0;
                while (i < idx.size() && ++idx[i] == scaled[i].size()) idx[i++] = 0;
                if (i == idx.size()) break;
            }
            out.blocks = absorb(std::move(out.blocks));
            return out;
        }
    }
    throw InternalError("to_maxmin: unknown node kind");
}

namespace expand_detail {

// max(X, min({u} + B')) = max(X, u) + max(X, min B') - max(X, u, min B'),
// applied to the canonically first non-singleton block, splitting off its
// smallest element. Terminates: sum over blocks of (size - 1) drops in
// every branch.
inline void to_lincomb_rec(int n, std::vector<std::vector<AffineFunc>> blocks, const Rational& coeff,
                           std::map<MaxTerm, Rational>& acc) {
    blocks = absorb(std::move(blocks));
    std::size_t split_idx = blocks.size();
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].size() > 1) {
            split_idx = i;
            break;
        }
    if (split_idx == blocks.size()) {
        std::vector<AffineFunc> constituents;
        constituents.reserve(blocks.size());
        for (const auto& b : blocks) constituents.push_back(b.front());
        acc[MaxTerm(std::move(constituents))] += coeff;
        return;
    }
    std::vector<AffineFunc> block = std::move(blocks[split_idx]);
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(split_idx));
    AffineFunc u = block.front();
    std::vector<AffineFunc> rest(block.begin() + 1, block.end());

    auto with = [&](std::initializer_list<std::vector<AffineFunc>> extra) {
        std::vector<std::vector<AffineFunc>> bs = blocks;
        for (const auto& b : extra) bs.push_back(b);
        return bs;
    };
    to_lincomb_rec(n, with({{u}}), coeff, acc);
    to_lincomb_rec(n, with({rest}), coeff, acc);
    to_lincomb_rec(n, with({{u}, rest}), -coeff, acc);
}

}  // namespace expand_detail

inline LinComb to_lincomb(const MaxMinForm& form) {
    std::map<MaxTerm, Rational> acc;
    expand_detail::to_lincomb_rec(form.n, form.blocks, Rational(1), acc);
    std::vector<LinTerm> terms;
    terms.reserve(acc.size());
    for (auto& [term, coeff] : acc) terms.push_back(LinTerm{coeff, term});
    return LinComb(form.n, std::move(terms));
}

inline LinComb expand(const ExprNode& e) { return to_lincomb(to_maxmin(e)); }

}  // namespace lomax
