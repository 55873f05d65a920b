#pragma once

#include "cgdl/matrix.hpp"
#include "cgdl/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace cgdl {

/// Matrix semantics: one |W| x |W| matrix per atomic program.
class GdlModel {
public:
  GdlModel(LatticePtr lattice, std::vector<std::string> states);

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<std::string>& states() const { return states_; }
  std::size_t state_count() const { return states_.size(); }

  void declare_prop(const std::string& prop);
  void set_value(const std::string& prop, StateId state, Value value);
  const std::vector<Value>& prop_values(const std::string& prop) const;
  const std::map<std::string, std::vector<Value>>& valuation() const { return valuation_; }

  void set_matrix(const std::string& name, LatticeMatrix m);
  const LatticeMatrix* matrix(const std::string& name) const;
  const std::map<std::string, LatticeMatrix>& matrices() const { return matrices_; }

private:
  LatticePtr lattice_;
  std::vector<std::string> states_;
  std::map<std::string, std::vector<Value>> valuation_;
  std::map<std::string, LatticeMatrix> matrices_;
};

/// Same states and valuation; the matrix of a program has entry (w, u) equal
/// to the join of phi(u) over its pairs (w, phi).
GdlModel flatten(const CgdlModel& model);

/// Structural recursion onto mat_mul, mat_add and mat_star. A parallel
/// composition raises SemanticError.
LatticeMatrix gdl_interpret(const GdlModel& model, const ProgramPtr& p);

/// Values at every state. Diamond: sum over u of A(w, u) ; (u |= f).
/// Box: product over u of A(w, u) -> (u |= f).
std::vector<Value> gdl_values(const GdlModel& model, const FormulaPtr& f);
Value gdl_sat(const GdlModel& model, StateId w, const FormulaPtr& f);

} // namespace cgdl
