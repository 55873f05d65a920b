#include "cgdl/gdl.hpp"

#include "cgdl/error.hpp"

#include <unordered_map>

namespace cgdl {

GdlModel::GdlModel(LatticePtr lattice, std::vector<std::string> states)
    : lattice_(std::move(lattice)), states_(std::move(states)) {}

void GdlModel::declare_prop(const std::string& prop) {
  valuation_.try_emplace(prop, std::vector<Value>(states_.size(), lattice_->zero()));
}

void GdlModel::set_value(const std::string& prop, StateId state, Value value) {
  if (state >= states_.size())
    throw DimensionError("state " + std::to_string(state) + " outside W");
  if (!lattice_->contains(value))
    throw LatticeError("value outside " + lattice_->name());
  declare_prop(prop);
  valuation_[prop][state] = value;
}

const std::vector<Value>& GdlModel::prop_values(const std::string& prop) const {
  auto it = valuation_.find(prop);
  if (it == valuation_.end())
    throw SemanticError("undeclared proposition '" + prop + "'");
  return it->second;
}

void GdlModel::set_matrix(const std::string& name, LatticeMatrix m) {
  if (!m.is_square() || m.dimension() != states_.size())
    throw DimensionError("matrix for '" + name + "' must be " + std::to_string(states_.size()) +
                         "x" + std::to_string(states_.size()));
  if (!same_lattice(*m.lattice(), *lattice_))
    throw LatticeError("matrix for '" + name + "' is over " + m.lattice()->name());
  matrices_.insert_or_assign(name, std::move(m));
}

const LatticeMatrix* GdlModel::matrix(const std::string& name) const {
  auto it = matrices_.find(name);
  return it == matrices_.end() ? nullptr : &it->second;
}

GdlModel flatten(const CgdlModel& model) {
  GdlModel out(model.lattice(), model.states());
  const ActionLattice& l = *model.lattice();
  for (const auto& [prop, values] : model.valuation()) {
    out.declare_prop(prop);
    for (std::size_t w = 0; w < values.size(); ++w)
      out.set_value(prop, static_cast<StateId>(w), values[w]);
  }
  for (const auto& [name, rel] : model.programs()) {
    LatticeMatrix m(model.lattice(), model.state_count());
    for (const auto& pair : rel.pairs())
      for (const auto& e : pair.target)
        m.set(pair.source, e.state, l.join(m(pair.source, e.state), e.value));
    out.set_matrix(name, std::move(m));
  }
  return out;
}

LatticeMatrix gdl_interpret(const GdlModel& model, const ProgramPtr& p) {
  switch (p->kind) {
  case Program::Kind::atomic: {
    const LatticeMatrix* m = model.matrix(p->name);
    if (!m)
      throw SemanticError("undeclared program '" + p->name + "'");
    return *m;
  }
  case Program::Kind::seq:
    return mat_mul(gdl_interpret(model, p->left), gdl_interpret(model, p->right));
  case Program::Kind::choice:
    return mat_add(gdl_interpret(model, p->left), gdl_interpret(model, p->right));
  case Program::Kind::star: return mat_star(gdl_interpret(model, p->left));
  case Program::Kind::par:
    throw SemanticError("parallel composition '" + render(*p) +
                        "' has no matrix semantics");
  }
  throw SemanticError("unknown program constructor");
}

namespace {

class GdlEvaluator {
public:
  explicit GdlEvaluator(const GdlModel& model) : model_(model) {}

  std::vector<Value> values(const FormulaPtr& f) {
    const ActionLattice& l = *model_.lattice();
    const std::size_t n = model_.state_count();
    std::vector<Value> out(n);
    using K = Formula::Kind;
    switch (f->kind) {
    case K::top: std::fill(out.begin(), out.end(), l.top()); break;
    case K::bot: std::fill(out.begin(), out.end(), l.bottom()); break;
    case K::prop: out = model_.prop_values(f->name); break;
    case K::disj:
    case K::conj:
    case K::implies:
    case K::iff: {
      const auto a = values(f->left);
      const auto b = values(f->right);
      for (std::size_t w = 0; w < n; ++w) {
        if (f->kind == K::disj)
          out[w] = l.join(a[w], b[w]);
        else if (f->kind == K::conj)
          out[w] = l.meet(a[w], b[w]);
        else if (f->kind == K::implies)
          out[w] = l.residuum(a[w], b[w]);
        else
          out[w] = l.seq(l.residuum(a[w], b[w]), l.residuum(b[w], a[w]));
      }
      break;
    }
    case K::diamond:
    case K::box: {
      const auto v = values(f->left);
      const LatticeMatrix& m = matrix(f->program);
      for (std::size_t w = 0; w < n; ++w) {
        Value acc = f->kind == K::box ? l.one() : l.zero();
        for (std::size_t u = 0; u < n; ++u) {
          if (f->kind == K::box)
            acc = l.seq(acc, l.residuum(m(w, u), v[u]));
          else
            acc = l.join(acc, l.seq(m(w, u), v[u]));
        }
        out[w] = acc;
      }
      break;
    }
    }
    return out;
  }

private:
  const LatticeMatrix& matrix(const ProgramPtr& p) {
    const std::string key = render(*p);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, gdl_interpret(model_, p)).first;
    return it->second;
  }

  const GdlModel& model_;
  std::unordered_map<std::string, LatticeMatrix> cache_;
};

} // namespace

std::vector<Value> gdl_values(const GdlModel& model, const FormulaPtr& f) {
  return GdlEvaluator(model).values(f);
}

Value gdl_sat(const GdlModel& model, StateId w, const FormulaPtr& f) {
  if (w >= model.state_count())
    throw DimensionError("state " + std::to_string(w) + " outside W");
  return gdl_values(model, f)[w];
}

} // namespace cgdl
