#include "ctab/mapping.hpp"

#include <algorithm>
#include <map>

#include "ctab/errors.hpp"

namespace ctab {

Mapping Mapping::make(VarSet dom, VarSet cod, std::vector<VarPair> graph) {
    std::sort(graph.begin(), graph.end());
    graph.erase(std::unique(graph.begin(), graph.end()), graph.end());
    if (graph.size() != dom.size())
        throw ConstructionError("mapping graph is not total on " +
                                dom.to_string());
    for (const auto& [x, y] : graph) {
        if (!dom.contains(x))
            throw ConstructionError("mapping graph mentions " + x.name() +
                                    " outside the domain " + dom.to_string());
        if (!cod.contains(y))
            throw ConstructionError("mapping sends " + x.name() + " to " +
                                    y.name() + " outside the codomain " +
                                    cod.to_string());
    }
    for (std::size_t i = 1; i < graph.size(); ++i) {
        if (graph[i - 1].first == graph[i].first)
            throw ConstructionError("mapping graph assigns " +
                                    graph[i].first.name() + " twice");
    }
    return Mapping(std::move(dom), std::move(cod), std::move(graph));
}

Mapping Mapping::identity(const VarSet& X) {
    std::vector<VarPair> graph;
    graph.reserve(X.size());
    for (Variable x : X) graph.emplace_back(x, x);
    return Mapping(X, X, std::move(graph));
}

Mapping Mapping::inclusion(const VarSet& X, const VarSet& Y) {
    if (!X.subset_of(Y))
        throw ConstructionError("inclusion needs " + X.to_string() +
                                " contained in " + Y.to_string());
    std::vector<VarPair> graph;
    graph.reserve(X.size());
    for (Variable x : X) graph.emplace_back(x, x);
    return Mapping(X, Y, std::move(graph));
}

Variable Mapping::operator()(Variable x) const {
    auto it = std::lower_bound(
        graph_.begin(), graph_.end(), x,
        [](const VarPair& p, const Variable& v) { return p.first < v; });
    if (it == graph_.end() || it->first != x)
        throw DomainError("mapping is not defined on " + x.name());
    return it->second;
}

VarSet Mapping::image() const {
    std::vector<Variable> out;
    out.reserve(graph_.size());
    for (const auto& [x, y] : graph_) out.push_back(y);
    return VarSet(std::move(out));
}

bool Mapping::is_inclusion() const {
    if (!dom_.subset_of(cod_)) return false;
    return std::all_of(graph_.begin(), graph_.end(),
                       [](const VarPair& p) { return p.first == p.second; });
}

bool Mapping::is_bijection() const {
    return image().size() == dom_.size() && image() == cod_;
}

bool Mapping::is_folding() const {
    if (!cod_.subset_of(dom_)) return false;
    for (Variable y : cod_)
        if ((*this)(y) != y) return false;
    return true;
}

Mapping Mapping::inverse() const {
    if (!is_bijection())
        throw ComposeError("cannot invert the non-bijective mapping " +
                           to_string());
    std::vector<VarPair> graph;
    graph.reserve(graph_.size());
    for (const auto& [x, y] : graph_) graph.emplace_back(y, x);
    return Mapping::make(cod_, dom_, std::move(graph));
}

std::string Mapping::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < graph_.size(); ++i) {
        if (i > 0) out += ", ";
        out += graph_[i].first.name() + "->" + graph_[i].second.name();
    }
    out += "}: " + dom_.to_string() + " -> " + cod_.to_string();
    return out;
}

std::ostream& operator<<(std::ostream& os, const Mapping& m) {
    return os << m.to_string();
}

Mapping compose(const Mapping& nu, const Mapping& mu) {
    if (mu.cod() != nu.dom())
        throw ComposeError("cannot compose: codomain " + mu.cod().to_string() +
                           " differs from domain " + nu.dom().to_string());
    std::vector<VarPair> graph;
    graph.reserve(mu.dom().size());
    for (Variable x : mu.dom()) graph.emplace_back(x, nu(mu(x)));
    return Mapping::make(mu.dom(), nu.cod(), std::move(graph));
}

Decomposition decompose(const Mapping& lambda) {
    const VarSet& X = lambda.dom();
    VarSet Z2 = lambda.image();

    // Minimum-id representative of each fiber.
    std::map<Variable, Variable> rep;
    for (Variable x : X) {
        Variable y = lambda(x);
        auto it = rep.find(y);
        if (it == rep.end() || x < it->second) rep.insert_or_assign(y, x);
    }
    std::vector<Variable> z1_items;
    z1_items.reserve(rep.size());
    for (const auto& [y, r] : rep) z1_items.push_back(r);
    VarSet Z1(std::move(z1_items));

    std::vector<VarPair> delta_graph;
    delta_graph.reserve(X.size());
    for (Variable x : X) delta_graph.emplace_back(x, rep.at(lambda(x)));
    Mapping delta = Mapping::make(X, Z1, std::move(delta_graph));

    std::vector<VarPair> xi_graph;
    xi_graph.reserve(Z1.size());
    for (Variable z : Z1) xi_graph.emplace_back(z, lambda(z));
    Mapping xi = Mapping::make(Z1, Z2, std::move(xi_graph));

    return Decomposition{delta, xi, Mapping::inclusion(Z2, lambda.cod())};
}

Table table_compose(const Table& T, const Mapping& lambda) {
    if (T.is_empty()) return T;
    if (lambda.cod() != T.columns())
        throw SchemaError("outer composition needs codomain " +
                          lambda.cod().to_string() + " equal to the schema " +
                          T.columns().to_string());
    std::vector<NamedTuple> rows;
    rows.reserve(T.row_count());
    for (const NamedTuple& t : T.rows()) {
        std::vector<NamedTuple::Entry> entries;
        entries.reserve(lambda.dom().size());
        for (Variable x : lambda.dom()) entries.emplace_back(x, t.at(lambda(x)));
        rows.push_back(NamedTuple::of(std::move(entries)));
    }
    return Table::make(lambda.dom(), std::move(rows));
}

FreshScheme FreshScheme::with_offset(std::size_t offset) {
    FreshScheme s;
    s.offset_ = offset;
    return s;
}

Mapping FreshScheme::fresh_bijection(const VarSet& X, const VarSet& Y) const {
    std::vector<Variable> zs =
        fresh_variables(X.unioned(Y), Y.size(), offset_);
    VarSet Z(zs);
    std::vector<VarPair> graph;
    graph.reserve(zs.size());
    auto y = Y.begin();
    for (Variable z : Z) graph.emplace_back(z, *y++);
    return Mapping::make(std::move(Z), Y, std::move(graph));
}

DiagonalFn standard_diagonal(const TableAlgebra& alg) {
    return [alg](Variable x, Variable y) { return alg.equality_table(x, y); };
}

Table equality_join(std::span<const VarPair> pairs, const DiagonalFn& diag) {
    Table out = Table::unit();
    for (const auto& [x, y] : pairs) out = join(out, diag(x, y));
    return out;
}

namespace {

void require_outer_pre(const Table& u, const Mapping& lambda) {
    if (u.is_empty())
        throw SchemaError("outer composition is defined on nonempty tables");
    if (u.columns() != lambda.cod())
        throw SchemaError("outer composition needs codomain " +
                          lambda.cod().to_string() + " equal to the schema " +
                          u.columns().to_string());
}

}  // namespace

Table outer_compose_direct(const Table& u, const Mapping& lambda,
                           const DiagonalFn& diag) {
    require_outer_pre(u, lambda);
    return delete_columns(lambda.cod(),
                          join(u, equality_join(lambda.graph(), diag)));
}

Table outer_compose_staged(const Table& u, const Mapping& lambda,
                           const DiagonalFn& diag, const FreshScheme& scheme) {
    require_outer_pre(u, lambda);
    Mapping xi = scheme.fresh_bijection(lambda.dom(), lambda.cod());
    Table v = outer_compose_direct(u, xi, diag);
    return outer_compose_direct(v, compose(xi.inverse(), lambda), diag);
}

Table outer_compose(const Table& u, const Mapping& lambda,
                    const DiagonalFn& diag, const FreshScheme& scheme) {
    require_outer_pre(u, lambda);
    if (lambda.is_domain_disjoint()) return outer_compose_direct(u, lambda, diag);
    return outer_compose_staged(u, lambda, diag, scheme);
}

Table outer_compose(const Table& u, const Mapping& lambda,
                    const TableAlgebra& alg, const FreshScheme& scheme) {
    return outer_compose(u, lambda, standard_diagonal(alg), scheme);
}

}  // namespace ctab
