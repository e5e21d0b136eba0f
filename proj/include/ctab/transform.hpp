#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ctab/mapping.hpp"

namespace ctab {

/// A finite partial transformation of the variable pool: a finite functional
/// relation, plus the distinguished global identity adjoined symbolically to
/// turn the composition semigroup into a monoid.
class FinPartialTransform {
public:
    /// The empty relation (also the local identity on no variables).
    FinPartialTransform() = default;

    /// Builds from pairs (x, λ(x)); duplicate pairs collapse, conflicting
    /// assignments are rejected.
    static FinPartialTransform of(std::vector<VarPair> pairs);

    /// π_X = {(x, x) | x ∈ X}.
    static FinPartialTransform local_identity(const VarSet& X);

    /// π_var, the symbolic global identity.
    static FinPartialTransform global_identity();

    bool is_global_identity() const { return global_; }

    /// Defined pairs; must not be called on the global identity.
    const std::vector<VarPair>& pairs() const;

    std::optional<Variable> apply(Variable x) const;

    /// λ⁻¹(Y) (= Y for the global identity).
    VarSet preimage(const VarSet& Y) const;

    /// Source variables; must not be called on the global identity.
    VarSet domain() const;

    std::string to_string() const;

    bool operator==(const FinPartialTransform&) const = default;

private:
    bool global_ = false;
    std::vector<VarPair> pairs_;  // sorted by source, functional
};

std::ostream& operator<<(std::ostream&, const FinPartialTransform&);

/// λ ∘ μ as relation composition: {(x, z) | ∃y. (x, y) ∈ μ and (y, z) ∈ λ}.
/// Acting with the result matches acting with μ after λ, i.e.
/// (u · λ) · μ = u · (λ ∘ μ). Worked example: λ = {(x2, x1)} pulls column x1
/// to x2, μ = {(x3, x2)} pulls x2 to x3, and λ ∘ μ = {(x3, x1)} pulls x1 to
/// x3 in one step.
FinPartialTransform fpt_compose(const FinPartialTransform& lambda,
                                const FinPartialTransform& mu);

/// λ∥^Y : λ⁻¹(Y) -> Y, the function restriction used to act on a table with
/// schema Y. Satisfies (λ∘μ)∥^Y = λ∥^Y ∘ μ∥^{λ⁻¹(Y)}.
Mapping restrict_to(const FinPartialTransform& lambda, const VarSet& Y);

/// The monoid action: the empty table is fixed, and a nonempty u over Y maps
/// to u ⊙ λ∥^Y (schema λ⁻¹(Y)). The global identity acts as the identity.
Table act(const Table& u, const FinPartialTransform& lambda,
          const DiagonalFn& diag, const FreshScheme& scheme = {});
Table act(const Table& u, const FinPartialTransform& lambda,
          const TableAlgebra& alg, const FreshScheme& scheme = {});

}  // namespace ctab
