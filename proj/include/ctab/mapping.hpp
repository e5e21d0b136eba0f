#pragma once

#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ctab/algebra.hpp"
#include "ctab/table.hpp"

namespace ctab {

/// A total function between two finite variable sets. The classifier
/// predicates are derived from the graph, never stored.
class Mapping {
public:
    /// Validates that the graph is total on dom and lands in cod.
    static Mapping make(VarSet dom, VarSet cod, std::vector<VarPair> graph);

    static Mapping identity(const VarSet& X);

    /// The natural inclusion of X into Y; requires X ⊆ Y.
    static Mapping inclusion(const VarSet& X, const VarSet& Y);

    const VarSet& dom() const { return dom_; }
    const VarSet& cod() const { return cod_; }

    Variable operator()(Variable x) const;
    VarSet image() const;

    /// The graph as pairs (x, λ(x)), sorted by source.
    std::span<const VarPair> graph() const { return graph_; }

    bool is_inclusion() const;
    bool is_bijection() const;
    bool is_folding() const;
    bool is_domain_disjoint() const { return dom_.intersected(cod_).empty(); }

    /// Inverse of a bijection; ComposeError otherwise.
    Mapping inverse() const;

    /// "{x2->x1, x3->x1}: {x2, x3} -> {x1}".
    std::string to_string() const;

    bool operator==(const Mapping&) const = default;

private:
    Mapping(VarSet dom, VarSet cod, std::vector<VarPair> graph)
        : dom_(std::move(dom)), cod_(std::move(cod)), graph_(std::move(graph)) {}

    VarSet dom_;
    VarSet cod_;
    std::vector<VarPair> graph_;  // sorted by source; one pair per dom element
};

std::ostream& operator<<(std::ostream&, const Mapping&);

/// ν ∘ μ, pointwise x ↦ ν(μ(x)). Requires cod(μ) = dom(ν) exactly.
Mapping compose(const Mapping& nu, const Mapping& mu);

/// λ = inclusion ∘ bijection ∘ folding. The folding maps each λ-fiber to its
/// minimum-id element; the bijection carries those representatives onto the
/// image; the inclusion embeds the image into the codomain.
struct Decomposition {
    Mapping folding;
    Mapping bijection;
    Mapping inclusion;
};
Decomposition decompose(const Mapping& lambda);

/// T ∘ λ = {t ∘ λ | t ∈ T}: column x of the result copies column λ(x).
/// A nonempty T requires cod(λ) = schema(T); the empty table maps to itself.
Table table_compose(const Table& T, const Mapping& lambda);

/// Deterministic supply of fresh-variable bijections: for each (X, Y) the
/// default scheme takes the |Y| smallest-id variables outside X ∪ Y and
/// pairs them with Y in enumeration order. Alternate instances skip a fixed
/// number of candidates first (used to test choice-independence).
class FreshScheme {
public:
    FreshScheme() = default;
    static FreshScheme with_offset(std::size_t offset);

    /// A bijection ξ : Z -> Y with Z ∩ (X ∪ Y) = ∅ and |Z| = |Y|.
    Mapping fresh_bijection(const VarSet& X, const VarSet& Y) const;

private:
    std::size_t offset_ = 0;
};

/// Supplies the equality table for a variable pair; the hook that lets the
/// law harness swap in alternate diagonals.
using DiagonalFn = std::function<Table(Variable, Variable)>;

DiagonalFn standard_diagonal(const TableAlgebra& alg);

/// The join of diag(x, y) over all pairs ({<>} for the empty pair set).
Table equality_join(std::span<const VarPair> pairs, const DiagonalFn& diag);

/// C_Y(u ∧ e_λ) for domain-disjoint λ : X -> Y.
Table outer_compose_direct(const Table& u, const Mapping& lambda,
                           const DiagonalFn& diag);

/// The two-stage route through a fresh bijection, u ⊙ ξ ⊙ (ξ⁻¹ ∘ λ),
/// regardless of whether λ is domain-disjoint.
Table outer_compose_staged(const Table& u, const Mapping& lambda,
                           const DiagonalFn& diag, const FreshScheme& scheme);

/// Outer composition on tables through the algebraic route: the direct form
/// when λ is domain-disjoint, the two-stage route otherwise. Requires u
/// nonempty with schema(u) = cod(λ); always equals table_compose(u, λ).
Table outer_compose(const Table& u, const Mapping& lambda,
                    const DiagonalFn& diag, const FreshScheme& scheme = {});
Table outer_compose(const Table& u, const Mapping& lambda,
                    const TableAlgebra& alg, const FreshScheme& scheme = {});

}  // namespace ctab
