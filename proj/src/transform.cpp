#include "ctab/transform.hpp"

#include <algorithm>

#include "ctab/errors.hpp"

namespace ctab {

FinPartialTransform FinPartialTransform::of(std::vector<VarPair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i - 1].first == pairs[i].first)
            throw ConstructionError("relation is not functional: " +
                                    pairs[i].first.name() +
                                    " has two images");
    }
    FinPartialTransform t;
    t.pairs_ = std::move(pairs);
    return t;
}

FinPartialTransform FinPartialTransform::local_identity(const VarSet& X) {
    std::vector<VarPair> pairs;
    pairs.reserve(X.size());
    for (Variable x : X) pairs.emplace_back(x, x);
    return of(std::move(pairs));
}

FinPartialTransform FinPartialTransform::global_identity() {
    FinPartialTransform t;
    t.global_ = true;
    return t;
}

const std::vector<VarPair>& FinPartialTransform::pairs() const {
    if (global_)
        throw DomainError("the global identity has no finite graph");
    return pairs_;
}

std::optional<Variable> FinPartialTransform::apply(Variable x) const {
    if (global_) return x;
    auto it = std::lower_bound(
        pairs_.begin(), pairs_.end(), x,
        [](const VarPair& p, const Variable& v) { return p.first < v; });
    if (it == pairs_.end() || it->first != x) return std::nullopt;
    return it->second;
}

VarSet FinPartialTransform::preimage(const VarSet& Y) const {
    if (global_) return Y;
    std::vector<Variable> out;
    for (const auto& [x, y] : pairs_)
        if (Y.contains(y)) out.push_back(x);
    return VarSet(std::move(out));
}

VarSet FinPartialTransform::domain() const {
    std::vector<Variable> out;
    out.reserve(pairs().size());
    for (const auto& [x, y] : pairs_) out.push_back(x);
    return VarSet(std::move(out));
}

std::string FinPartialTransform::to_string() const {
    if (global_) return "pi_var";
    std::string out = "{";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i > 0) out += ", ";
        out += "(" + pairs_[i].first.name() + "," + pairs_[i].second.name() + ")";
    }
    out += "}";
    return out;
}

std::ostream& operator<<(std::ostream& os, const FinPartialTransform& t) {
    return os << t.to_string();
}

FinPartialTransform fpt_compose(const FinPartialTransform& lambda,
                                const FinPartialTransform& mu) {
    if (lambda.is_global_identity()) return mu;
    if (mu.is_global_identity()) return lambda;
    std::vector<VarPair> pairs;
    for (const auto& [x, y] : mu.pairs()) {
        if (auto z = lambda.apply(y)) pairs.emplace_back(x, *z);
    }
    return FinPartialTransform::of(std::move(pairs));
}

Mapping restrict_to(const FinPartialTransform& lambda, const VarSet& Y) {
    if (lambda.is_global_identity()) return Mapping::identity(Y);
    VarSet dom = lambda.preimage(Y);
    std::vector<VarPair> graph;
    graph.reserve(dom.size());
    for (Variable x : dom) graph.emplace_back(x, *lambda.apply(x));
    return Mapping::make(std::move(dom), Y, std::move(graph));
}

Table act(const Table& u, const FinPartialTransform& lambda,
          const DiagonalFn& diag, const FreshScheme& scheme) {
    if (u.is_empty()) return u;
    if (lambda.is_global_identity()) return u;
    return outer_compose(u, restrict_to(lambda, u.columns()), diag, scheme);
}

Table act(const Table& u, const FinPartialTransform& lambda,
          const TableAlgebra& alg, const FreshScheme& scheme) {
    if (u.is_empty()) return u;
    if (lambda.is_global_identity()) return u;
    return act(u, lambda, standard_diagonal(alg), scheme);
}

}  // namespace ctab
