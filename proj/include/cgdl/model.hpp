#pragma once

#include "cgdl/fuzzy.hpp"
#include "cgdl/syntax.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cgdl {

enum class DiamondMode {
  /// sum over (w, phi) of prod over u in supp(phi) of phi(u) ; (u |= f)
  definition,
  /// sum over (w, phi) of sum over u in supp(phi) of phi(u) ; (u |= f)
  proof_form,
};

std::string_view to_string(DiamondMode mode);
SeqMode parse_seq_mode(std::string_view text);
DiamondMode parse_diamond_mode(std::string_view text);

struct Modes {
  SeqMode seq = SeqMode::support_guarded;
  DiamondMode diamond = DiamondMode::definition;
  friend bool operator==(const Modes&, const Modes&) = default;
};

/// States, a valuation and one fuzzy multirelation per atomic program.
class CgdlModel {
public:
  CgdlModel(LatticePtr lattice, std::vector<std::string> states);
  /// States named "w0", "w1", ...
  CgdlModel(LatticePtr lattice, std::size_t states);

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<std::string>& states() const { return states_; }
  std::size_t state_count() const { return states_.size(); }
  std::optional<StateId> state_index(std::string_view name) const;

  /// Declares `prop` with value 0 everywhere, if not yet declared.
  void declare_prop(const std::string& prop);
  void set_value(const std::string& prop, StateId state, Value value);
  bool has_prop(const std::string& prop) const { return valuation_.contains(prop); }
  /// Throws SemanticError for an undeclared proposition.
  const std::vector<Value>& prop_values(const std::string& prop) const;
  const std::map<std::string, std::vector<Value>>& valuation() const { return valuation_; }

  void set_program(const std::string& name, FuzzyMultirelation rel);
  /// nullptr when undeclared.
  const FuzzyMultirelation* program(const std::string& name) const;
  const std::map<std::string, FuzzyMultirelation>& programs() const { return programs_; }

private:
  LatticePtr lattice_;
  std::vector<std::string> states_;
  std::map<std::string, std::vector<Value>> valuation_;
  std::map<std::string, FuzzyMultirelation> programs_;
};

struct Interpretation {
  FuzzyMultirelation rel;
  /// False if some star inside the program hit its iteration bound.
  bool converged = true;
};

/// Graded satisfaction over one model with fixed modes.
///
/// Results are memoised per (hash-consed) sub-formula and sub-program, and a
/// formula is evaluated at all states at once.
class Evaluator {
public:
  /// `star_iterations` = 0 selects |W|^2 + 2. Evaluators over different
  /// models may share one interner, so formulas are interned only once.
  Evaluator(const CgdlModel& model, Modes modes, std::size_t star_iterations = 0,
            std::shared_ptr<Interner> interner = nullptr);

  const CgdlModel& model() const { return model_; }
  Modes modes() const { return modes_; }

  const Interpretation& interpret(const ProgramPtr& p);
  /// Value at every state, indexed by StateId. The span stays valid for the
  /// lifetime of the evaluator.
  std::span<const Value> values(const FormulaPtr& f);
  Value sat(StateId w, const FormulaPtr& f) { return values(f)[w]; }

  /// Distinct sub-formulas of f in evaluation order (children first), with
  /// their values.
  std::vector<std::pair<FormulaPtr, std::vector<Value>>> trace(const FormulaPtr& f);

  /// Drops cached formula values but keeps program interpretations, which do
  /// not depend on the valuation. Call after changing the model's valuation.
  void invalidate_formulas();

  /// False once any star evaluated so far failed to converge.
  bool converged() const { return converged_; }

  Interner& interner() { return *interner_; }

private:
  const Interpretation& interpret_interned(const ProgramPtr& p);
  std::span<const Value> values_interned(const FormulaPtr& f);
  void collect(const FormulaPtr& f, std::vector<FormulaPtr>& order,
               std::unordered_map<const Formula*, bool>& seen);

  const CgdlModel& model_;
  Modes modes_;
  std::size_t star_iterations_;
  std::shared_ptr<Interner> interner_;
  std::unordered_map<const Program*, Interpretation> programs_;
  // Formula values by interned node id, stored in fixed blocks so spans
  // handed out earlier never move.
  std::vector<const Value*> formulas_;
  std::vector<std::unique_ptr<Value[]>> blocks_;
  std::size_t block_used_ = 0;
  bool converged_ = true;
};

Interpretation interpret_program(const CgdlModel& model, const ProgramPtr& p, SeqMode mode);

struct SatResult {
  Value value;
  std::vector<std::pair<FormulaPtr, std::vector<Value>>> trace;
  bool converged = true;
};

SatResult sat(const CgdlModel& model, StateId w, const FormulaPtr& f, Modes modes,
              bool with_trace = false);

struct Validity {
  std::vector<Value> values;
  bool valid = false;
  bool converged = true;
};

/// Valid iff the value is top at every state.
Validity validity(const CgdlModel& model, const FormulaPtr& f, Modes modes);

/// Throws SemanticError naming the first undeclared program or proposition.
void check_signature(const CgdlModel& model, const Formula& f);

} // namespace cgdl
