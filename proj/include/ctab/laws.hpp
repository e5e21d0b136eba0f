#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ctab/algebra.hpp"
#include "ctab/mapping.hpp"
#include "ctab/transform.hpp"

namespace ctab::laws {

/// Deterministic per-case random stream (splitmix64). Identical seeds give
/// identical cases on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
    bool chance(std::uint64_t num, std::uint64_t den);

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[below(items.size())];
    }

private:
    std::uint64_t state_;
};

/// Derives the isolated stream for one case of one law.
std::uint64_t case_seed(std::uint64_t suite_seed, std::string_view law_id,
                        int case_index);

/// The default generation pool x1..x5.
const VarSet& default_pool();

// Random input generators. All draw schemas of at most four columns.
Table gen_table(Rng& rng, const VarSet& pool, const Base& base,
                int max_rows = 5);
Table gen_table_over(Rng& rng, const VarSet& schema, const Base& base,
                     int max_rows = 5);
VarSet gen_subset(Rng& rng, const VarSet& pool, std::size_t max_size = 4);
Variable gen_var(Rng& rng, const VarSet& pool);
Mapping gen_mapping(Rng& rng, const VarSet& pool);
Mapping gen_domain_disjoint(Rng& rng, const VarSet& pool);
Mapping gen_dd_bijection(Rng& rng, const VarSet& pool);
Mapping gen_folding(Rng& rng, const VarSet& pool);
FinPartialTransform gen_fpt(Rng& rng, const VarSet& pool);

/// The algebra a law suite runs against: the standard table operations over
/// some base, or one of the two counterexample models (the bogus diagonal
/// d_xy := E_xx over a singleton base, and the degenerate empty base).
class Model {
public:
    enum class Kind { Standard, BogusDiagonal, EmptyBase };

    static Model standard(Base base);
    static Model bogus_diagonal();
    static Model bogus_diagonal(Base singleton);
    static Model empty_base();

    Kind kind() const { return kind_; }
    const TableAlgebra& algebra() const { return alg_; }
    const Base& base() const { return alg_.base(); }

    /// The model's diagonal element d_xy.
    Table diag(Variable x, Variable y) const;
    DiagonalFn diag_fn() const;

    std::string name() const;

private:
    Model(Kind kind, Base base) : kind_(kind), alg_(std::move(base)) {}

    Kind kind_;
    TableAlgebra alg_;
};

enum class Verdict { Pass, Fail, SideUnmet };

/// One executed instantiation of a law.
struct LawCase {
    std::string law_id;
    std::uint64_t seed;        // reproduces the case exactly
    Verdict verdict;
    std::string witness;       // bound inputs and both sides, on failure
};

struct Law {
    std::string id;         // e.g. "PS7", "A6", "Prop3.iv"
    std::string statement;  // human-readable form of the checked law
    std::function<Verdict(const Model&, Rng&, std::string& witness)> check;
};

/// The full registry in report order: PS0–PS12, A1–A13, PSE1–PSE2, the
/// derived propositions, the interdefinability identities, the
/// decomposition round-trip and the fresh-scheme independence check.
const std::vector<Law>& registry();
const Law* find_law(std::string_view id);

/// Re-runs a single case from its seed; verdicts are reproducible.
LawCase run_case(const Law& law, const Model& model, std::uint64_t seed);

/// Runs `cases` instantiations of one law. Throws LawError for unknown ids.
std::vector<LawCase> check_law(std::string_view id, const Model& model,
                               int cases, std::uint64_t seed);

struct LawSummary {
    std::string id;
    int cases = 0;
    int passes = 0;
    int failures = 0;
    int side_unmet = 0;
    std::uint64_t first_fail_seed = 0;
    std::string first_witness;
};

LawSummary summarize(const Law& law, const Model& model, int cases,
                     std::uint64_t seed);

/// Runs every registered law.
std::vector<LawSummary> check_all(const Model& model, int cases,
                                  std::uint64_t seed);

/// Law ids that legitimately fail on the given model (empty for Standard):
/// the counterexample models break exactly the laws whose derivations use
/// diagonal symmetry or d_xx != 0.
const std::vector<std::string>& expected_failures(Model::Kind kind);

/// One line per law: id, cases, passes, failures, side-condition-unmet,
/// first witness ("-" if none), tab-separated.
std::string report_lines(const std::vector<LawSummary>& summaries);

}  // namespace ctab::laws
