#pragma once

#include "cgdl/model.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgdl {

/// Metavariable assignment: programs pi, pi' and formulas rho, rho'.
struct Binding {
  std::vector<ProgramPtr> programs;
  std::vector<FormulaPtr> formulas;

  std::string describe() const;
};

enum class SchemeKind {
  /// A formula scheme, checked pointwise: lhs = rhs or lhs <= rhs.
  formula,
  /// (rho -> rho') is top exactly where rho <= rho'.
  order_residuum,
  /// (rho <-> rho') is top exactly where rho = rho'.
  order_equivalence,
  /// A property of the lattice alone.
  lattice,
};

enum class Polarity { equivalence, implication };

struct AxiomScheme {
  std::string id;
  std::string text;
  SchemeKind kind = SchemeKind::formula;
  Polarity polarity = Polarity::equivalence;
  std::size_t programs = 0;
  std::size_t formulas = 0;
  /// pi must be an atomic program.
  bool atomic_only = false;
  /// Only models whose interpretation of pi has singleton supports count.
  bool singleton_supports = false;
  /// False for probes outside the claimed setting; their failures are
  /// reported but do not count as counterexamples.
  bool claimed = true;

  FormulaPtr lhs(const Binding& b) const;
  FormulaPtr rhs(const Binding& b) const;
  /// lhs <-> rhs or lhs -> rhs.
  FormulaPtr instance(const Binding& b) const;
};

/// 2.1, 2.1/all, 2.2 ... 2.7, L1.1, L1.2, L3.1, L3.2, L3.3 in that order.
const std::vector<AxiomScheme>& axiom_catalogue();
const AxiomScheme& find_scheme(std::string_view id);

struct Verdict {
  std::string axiom;
  Binding binding;
  std::shared_ptr<const CgdlModel> model;
  /// Position of the model in the enumeration or sample sequence.
  std::uint64_t model_index = 0;
  Modes modes;
  /// Value of the instance at every state; for L1 schemes the value of the
  /// implication or equivalence.
  std::vector<Value> values;
  std::vector<Value> lhs;
  std::vector<Value> rhs;
  bool passed = true;
  /// False when the model falls outside the scheme's restriction.
  bool applicable = true;
  std::optional<StateId> witness;
  /// Lattice schemes: the offending carrier tuple.
  std::vector<Value> lattice_witness;
};

/// Evaluates one instance on one model. Throws SemanticError for a binding
/// that does not fit the scheme.
Verdict check_axiom(const std::shared_ptr<const CgdlModel>& model, std::string_view id,
                    const Binding& binding, Modes modes);
/// Same, reusing an evaluator over the model with the given modes.
Verdict check_axiom(Evaluator& evaluator, const std::shared_ptr<const CgdlModel>& model,
                    const AxiomScheme& scheme, const Binding& binding);

/// Lattice schemes (L3.x) do not depend on a model.
Verdict check_lattice_scheme(const ActionLattice& lattice, const AxiomScheme& scheme);

struct SearchConfig {
  LatticePtr lattice;
  std::size_t min_states = 1;
  std::size_t max_states = 2;
  /// Atomic programs a, b, c, ... in this order.
  std::size_t programs = 2;
  std::vector<std::string> props{"p", "q"};
  /// Largest support of a target fuzzy set; 0 means |W|.
  std::size_t max_support = 0;
  /// Pairs per source state in an atomic interpretation; 0 means unbounded.
  std::size_t max_pairs_per_state = 0;
  /// Membership and valuation values; empty means the whole carrier.
  /// Zero is always allowed in valuations and never stored in fuzzy sets.
  std::vector<Value> value_grid;
  std::vector<SeqMode> seq_modes{SeqMode::support_guarded, SeqMode::literal};
  std::vector<DiamondMode> diamond_modes{DiamondMode::definition, DiamondMode::proof_form};
  /// Scheme ids; empty means the whole catalogue.
  std::vector<std::string> axioms;
  /// Program instantiations; empty means the atomics plus a ; b and a*.
  std::vector<std::string> program_pool;
  /// Formula instantiations; empty means the propositions.
  std::vector<std::string> formula_pool;
  bool exhaustive = false;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  /// Failing verdicts kept per (axiom, modes) cell.
  std::size_t max_witnesses = 3;
  /// Exhaustive runs larger than this are refused.
  std::uint64_t max_models = 50'000'000;
};

struct CellSummary {
  std::string axiom;
  Modes modes;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t not_applicable = 0;
  bool claimed = true;
  std::vector<Verdict> witnesses;
};

struct SearchReport {
  SearchConfig config;
  std::uint64_t models = 0;
  /// "exhaustive" or "sampled"; a sampled run never proves anything.
  std::string coverage;
  std::vector<CellSummary> cells;

  /// Failures in claimed cells.
  std::uint64_t counterexamples() const;
};

/// Number of models an exhaustive run visits.
std::uint64_t enumeration_size(const SearchConfig& config);

/// The model at position `index` of the exhaustive enumeration.
std::shared_ptr<const CgdlModel> enumerate_model(const SearchConfig& config, std::uint64_t index);
/// A random model for sample `index`; depends only on (config, index).
std::shared_ptr<const CgdlModel> sample_model(const SearchConfig& config, std::uint64_t index);

SearchReport search_counterexamples(const SearchConfig& config);

} // namespace cgdl
