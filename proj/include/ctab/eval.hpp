#pragma once

#include "ctab/algebra.hpp"
#include "ctab/formula.hpp"
#include "ctab/structure.hpp"

namespace ctab {

/// Evaluates a formula to its result table over the structure's base by
/// structural recursion: equality atoms become equality tables, conjunction
/// becomes the natural join, existential quantification becomes column
/// deletion, relation atoms become named tables over their distinct argument
/// variables (a positional tuple contributes a row iff repeated variables
/// receive consistent values). The algebra's base must equal the structure's.
Table evaluate(const Formula& f, const Structure& structure,
               const TableAlgebra& alg);

/// The direct semantics: enumerates every assignment of base values to the
/// free variables and keeps those the structure satisfies, deciding
/// satisfaction recursively (existentials try all witnesses).
Table evaluate_oracle(const Formula& f, const Structure& structure);

}  // namespace ctab
