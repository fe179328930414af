#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "lomax/affine.hpp"

namespace lomax {

// AST for nested min/max/sum/scalar-multiple expressions over affine leaves.
// Nodes are immutable once built; construction goes through the make_*
// helpers, which fold purely affine subtrees into Affine leaves.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Affine, Max, Min, Sum, Scale };

    Kind kind;
    AffineFunc affine;             // Kind::Affine
    std::vector<ExprPtr> children; // Max/Min/Sum (Scale: single child)
    Rational scale;                // Kind::Scale

    int n() const {
        if (kind == Kind::Affine) return affine.n();
        return children.front()->n();
    }
};

inline ExprPtr make_affine(AffineFunc f) {
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Affine;
    node->affine = std::move(f);
    return node;
}

namespace detail {

inline void check_children(const std::vector<ExprPtr>& children, const char* what) {
    if (children.empty()) throw Error(std::string(what) + " needs at least one argument");
    int dim = children.front()->n();
    for (const auto& c : children)
        if (c->n() != dim)
            throw DimensionError(std::string(what) + ": arguments have mixed dimensions");
}

}  // namespace detail

inline ExprPtr make_max(std::vector<ExprPtr> children) {
    detail::check_children(children, "max");
    if (children.size() == 1) return children.front();
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Max;
    node->children = std::move(children);
    return node;
}

inline ExprPtr make_min(std::vector<ExprPtr> children) {
    detail::check_children(children, "min");
    if (children.size() == 1) return children.front();
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Min;
    node->children = std::move(children);
    return node;
}

// Nested sums are flattened and affine children merged, so a sum of affine
// leaves collapses to a single leaf.
inline ExprPtr make_sum(std::vector<ExprPtr> children) {
    detail::check_children(children, "sum");
    std::vector<ExprPtr> flat;
    for (auto& c : children) {
        if (c->kind == ExprNode::Kind::Sum)
            flat.insert(flat.end(), c->children.begin(), c->children.end());
        else
            flat.push_back(std::move(c));
    }
    std::vector<ExprPtr> folded;
    std::optional<AffineFunc> affine_part;
    for (auto& c : flat) {
        if (c->kind == ExprNode::Kind::Affine) {
            if (affine_part)
                affine_part = *affine_part + c->affine;
            else
                affine_part = c->affine;
        } else {
            folded.push_back(std::move(c));
        }
    }
    if (affine_part) folded.push_back(make_affine(std::move(*affine_part)));
    if (folded.size() == 1) return folded.front();
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Sum;
    node->children = std::move(folded);
    return node;
}

inline ExprPtr make_scale(Rational c, ExprPtr child) {
    if (child->kind == ExprNode::Kind::Affine) return make_affine(c * child->affine);
    if (c == 1) return child;
    if (child->kind == ExprNode::Kind::Scale)
        return make_scale(c * child->scale, child->children.front());
    auto node = std::make_shared<ExprNode>();
    node->kind = ExprNode::Kind::Scale;
    node->scale = std::move(c);
    node->children.push_back(std::move(child));
    return node;
}

inline bool expr_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprNode::Kind::Affine:
            return a.affine == b.affine;
        case ExprNode::Kind::Scale:
            if (a.scale != b.scale) return false;
            [[fallthrough]];
        default: {
            if (a.children.size() != b.children.size()) return false;
            for (std::size_t i = 0; i < a.children.size(); ++i)
                if (!expr_equal(*a.children[i], *b.children[i])) return false;
            return true;
        }
    }
}

// Direct recursive evaluation of the AST; the reference semantics every
// rewrite is checked against.
inline Rational eval_expr(const ExprNode& e, const Point& x) {
    switch (e.kind) {
        case ExprNode::Kind::Affine:
            return e.affine.eval(x);
        case ExprNode::Kind::Max: {
            Rational best = eval_expr(*e.children.front(), x);
            for (std::size_t i = 1; i < e.children.size(); ++i)
                best = std::max(best, eval_expr(*e.children[i], x));
            return best;
        }
        case ExprNode::Kind::Min: {
            Rational best = eval_expr(*e.children.front(), x);
            for (std::size_t i = 1; i < e.children.size(); ++i)
                best = std::min(best, eval_expr(*e.children[i], x));
            return best;
        }
        case ExprNode::Kind::Sum: {
            Rational acc(0);
            for (const auto& c : e.children) acc += eval_expr(*c, x);
            return acc;
        }
        case ExprNode::Kind::Scale:
            return e.scale * eval_expr(*e.children.front(), x);
    }
    throw InternalError("eval_expr: unknown node kind");
}

}  // namespace lomax
