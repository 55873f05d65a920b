#include "cgdl/model.hpp"

#include "cgdl/error.hpp"

#include <algorithm>

namespace cgdl {

std::string_view to_string(DiamondMode mode) {
  return mode == DiamondMode::definition ? "definition" : "proof-form";
}

SeqMode parse_seq_mode(std::string_view text) {
  if (text == "literal")
    return SeqMode::literal;
  if (text == "support-guarded" || text == "guarded")
    return SeqMode::support_guarded;
  throw ParseError("unknown seq mode '" + std::string(text) +
                       "' (expected literal or support-guarded)",
                   0);
}

DiamondMode parse_diamond_mode(std::string_view text) {
  if (text == "definition")
    return DiamondMode::definition;
  if (text == "proof-form" || text == "proof")
    return DiamondMode::proof_form;
  throw ParseError("unknown diamond mode '" + std::string(text) +
                       "' (expected definition or proof-form)",
                   0);
}

CgdlModel::CgdlModel(LatticePtr lattice, std::vector<std::string> states)
    : lattice_(std::move(lattice)), states_(std::move(states)) {
  if (states_.size() > 65535)
    throw DimensionError("too many states");
  std::vector<std::string> sorted = states_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw SemanticError("duplicate state name");
}

CgdlModel::CgdlModel(LatticePtr lattice, std::size_t states) : lattice_(std::move(lattice)) {
  for (std::size_t i = 0; i < states; ++i)
    states_.push_back("w" + std::to_string(i));
}

std::optional<StateId> CgdlModel::state_index(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end())
    return std::nullopt;
  return static_cast<StateId>(it - states_.begin());
}

void CgdlModel::declare_prop(const std::string& prop) {
  if (!valuation_.contains(prop))
    valuation_.emplace(prop, std::vector<Value>(states_.size(), lattice_->zero()));
}

void CgdlModel::set_value(const std::string& prop, StateId state, Value value) {
  if (state >= states_.size())
    throw DimensionError("state " + std::to_string(state) + " outside W");
  if (!lattice_->contains(value))
    throw LatticeError("value outside " + lattice_->name());
  auto it = valuation_.find(prop);
  if (it == valuation_.end())
    it = valuation_.emplace(prop, std::vector<Value>(states_.size(), lattice_->zero())).first;
  it->second[state] = value;
}

const std::vector<Value>& CgdlModel::prop_values(const std::string& prop) const {
  auto it = valuation_.find(prop);
  if (it == valuation_.end())
    throw SemanticError("undeclared proposition '" + prop + "'");
  return it->second;
}

void CgdlModel::set_program(const std::string& name, FuzzyMultirelation rel) {
  if (rel.states() != states_.size())
    throw DimensionError("program '" + name + "' is over " + std::to_string(rel.states()) +
                         " states, model has " + std::to_string(states_.size()));
  if (!same_lattice(*rel.lattice(), *lattice_))
    throw LatticeError("program '" + name + "' is over " + rel.lattice()->name());
  programs_.insert_or_assign(name, std::move(rel));
}

const FuzzyMultirelation* CgdlModel::program(const std::string& name) const {
  auto it = programs_.find(name);
  return it == programs_.end() ? nullptr : &it->second;
}

Evaluator::Evaluator(const CgdlModel& model, Modes modes, std::size_t star_iterations,
                     std::shared_ptr<Interner> interner)
    : model_(model), modes_(modes),
      star_iterations_(star_iterations ? star_iterations
                                       : default_star_iterations(model.state_count())),
      interner_(interner ? std::move(interner) : std::make_shared<Interner>()) {}

const Interpretation& Evaluator::interpret(const ProgramPtr& p) {
  return interpret_interned(interner_->intern(p));
}

const Interpretation& Evaluator::interpret_interned(const ProgramPtr& p) {
  if (auto it = programs_.find(p.get()); it != programs_.end())
    return it->second;
  Interpretation result{FuzzyMultirelation(model_.lattice(), model_.state_count()), true};
  switch (p->kind) {
  case Program::Kind::atomic: {
    const FuzzyMultirelation* rel = model_.program(p->name);
    if (!rel)
      throw SemanticError("undeclared program '" + p->name + "'");
    result.rel = *rel;
    break;
  }
  case Program::Kind::star: {
    const Interpretation& inner = interpret_interned(p->left);
    StarResult star = mrel_star(inner.rel, modes_.seq, star_iterations_);
    result = {std::move(star.rel), inner.converged && star.converged};
    break;
  }
  default: {
    const Interpretation& l = interpret_interned(p->left);
    const Interpretation& r = interpret_interned(p->right);
    const bool ok = l.converged && r.converged;
    if (p->kind == Program::Kind::seq)
      result = {mrel_seq(l.rel, r.rel, modes_.seq), ok};
    else if (p->kind == Program::Kind::par)
      result = {mrel_parallel(l.rel, r.rel), ok};
    else
      result = {mrel_union(l.rel, r.rel), ok};
  }
  }
  converged_ = converged_ && result.converged;
  return programs_.emplace(p.get(), std::move(result)).first->second;
}

void Evaluator::invalidate_formulas() {
  std::fill(formulas_.begin(), formulas_.end(), nullptr);
  if (blocks_.size() > 1)
    blocks_.erase(blocks_.begin(), blocks_.end() - 1);
  block_used_ = 0;
}

std::span<const Value> Evaluator::values(const FormulaPtr& f) {
  return values_interned(interner_->intern(f));
}

std::span<const Value> Evaluator::values_interned(const FormulaPtr& f) {
  const std::size_t n = model_.state_count();
  const std::uint32_t id = interner_->id(f.get());
  if (id < formulas_.size() && formulas_[id])
    return {formulas_[id], n};
  const ActionLattice& l = *model_.lattice();
  using K = Formula::Kind;
  // Children first: evaluating them may open a new block.
  std::span<const Value> a, b;
  const FuzzyMultirelation* rel = nullptr;
  if (f->left)
    a = values_interned(f->left);
  if (f->right)
    b = values_interned(f->right);
  if (f->program)
    rel = &interpret_interned(f->program).rel;

  constexpr std::size_t kBlock = 4096;
  if (blocks_.empty() || block_used_ + n > std::max(kBlock, n)) {
    blocks_.push_back(std::make_unique_for_overwrite<Value[]>(std::max(kBlock, n)));
    block_used_ = 0;
  }
  Value* out = blocks_.back().get() + block_used_;
  block_used_ += n;

  switch (f->kind) {
  case K::top: std::fill(out, out + n, l.top()); break;
  case K::bot: std::fill(out, out + n, l.bottom()); break;
  case K::prop: {
    const auto& v = model_.prop_values(f->name);
    std::copy(v.begin(), v.end(), out);
    break;
  }
  case K::disj:
  case K::conj:
  case K::implies:
  case K::iff: {
    for (std::size_t w = 0; w < n; ++w) {
      switch (f->kind) {
      case K::disj: out[w] = l.join(a[w], b[w]); break;
      case K::conj: out[w] = l.meet(a[w], b[w]); break;
      case K::implies: out[w] = l.residuum(a[w], b[w]); break;
      default: out[w] = l.seq(l.residuum(a[w], b[w]), l.residuum(b[w], a[w])); break;
      }
    }
    break;
  }
  case K::diamond:
  case K::box: {
    const bool box = f->kind == K::box;
    for (std::size_t w = 0; w < n; ++w)
      out[w] = box ? l.one() : l.zero();
    for (const auto& pair : rel->pairs()) {
      Value inner = box || modes_.diamond == DiamondMode::definition ? l.one() : l.zero();
      for (const auto& e : pair.target) {
        if (box)
          inner = l.seq(inner, l.residuum(e.value, a[e.state]));
        else if (modes_.diamond == DiamondMode::definition)
          inner = l.seq(inner, l.seq(e.value, a[e.state]));
        else
          inner = l.join(inner, l.seq(e.value, a[e.state]));
      }
      Value& acc = out[pair.source];
      acc = box ? l.seq(acc, inner) : l.join(acc, inner);
    }
    break;
  }
  }
  if (formulas_.size() <= id)
    formulas_.resize(std::max<std::size_t>(id + 1, interner_->size()), nullptr);
  formulas_[id] = out;
  return {out, n};
}

void Evaluator::collect(const FormulaPtr& f, std::vector<FormulaPtr>& order,
                        std::unordered_map<const Formula*, bool>& seen) {
  if (!f || seen[f.get()])
    return;
  seen[f.get()] = true;
  collect(f->left, order, seen);
  collect(f->right, order, seen);
  order.push_back(f);
}

std::vector<std::pair<FormulaPtr, std::vector<Value>>> Evaluator::trace(const FormulaPtr& f) {
  const FormulaPtr root = interner_->intern(f);
  std::vector<FormulaPtr> order;
  std::unordered_map<const Formula*, bool> seen;
  collect(root, order, seen);
  std::vector<std::pair<FormulaPtr, std::vector<Value>>> out;
  for (const auto& g : order) {
    const auto v = values_interned(g);
    out.emplace_back(g, std::vector<Value>(v.begin(), v.end()));
  }
  return out;
}

Interpretation interpret_program(const CgdlModel& model, const ProgramPtr& p, SeqMode mode) {
  Evaluator ev(model, Modes{mode, DiamondMode::definition});
  return ev.interpret(p);
}

SatResult sat(const CgdlModel& model, StateId w, const FormulaPtr& f, Modes modes,
              bool with_trace) {
  if (w >= model.state_count())
    throw DimensionError("state " + std::to_string(w) + " outside W");
  Evaluator ev(model, modes);
  SatResult result{ev.sat(w, f), {}, true};
  if (with_trace)
    result.trace = ev.trace(f);
  result.converged = ev.converged();
  return result;
}

Validity validity(const CgdlModel& model, const FormulaPtr& f, Modes modes) {
  Evaluator ev(model, modes);
  const auto v = ev.values(f);
  Validity result{std::vector<Value>(v.begin(), v.end()), false, true};
  result.valid = std::all_of(result.values.begin(), result.values.end(),
                             [&](Value v) { return v == model.lattice()->top(); });
  result.converged = ev.converged();
  return result;
}

void check_signature(const CgdlModel& model, const Formula& f) {
  std::vector<std::string> names;
  collect_atomics(f, names);
  for (const auto& name : names)
    if (!model.program(name))
      throw SemanticError("undeclared program '" + name + "'");
  names.clear();
  collect_props(f, names);
  for (const auto& name : names)
    if (!model.has_prop(name))
      throw SemanticError("undeclared proposition '" + name + "'");
}

} // namespace cgdl
