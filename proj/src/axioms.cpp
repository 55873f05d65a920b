#include "cgdl/axioms.hpp"

#include "cgdl/audit.hpp"
#include "cgdl/error.hpp"
#include "cgdl/parallel.hpp"
#include "cgdl/rng.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

namespace cgdl {

namespace {

using namespace ast;

FormulaPtr rho(const Binding& b, std::size_t i) { return b.formulas.at(i); }
ProgramPtr pi(const Binding& b, std::size_t i) { return b.programs.at(i); }

AxiomScheme scheme(std::string id, std::string text, Polarity polarity, std::size_t programs,
                   std::size_t formulas) {
  AxiomScheme s;
  s.id = std::move(id);
  s.text = std::move(text);
  s.polarity = polarity;
  s.programs = programs;
  s.formulas = formulas;
  return s;
}

std::vector<AxiomScheme> build_catalogue() {
  std::vector<AxiomScheme> out;
  auto s21 = scheme("2.1", "<pi0>(rho | rho') <-> <pi0>rho | <pi0>rho'", Polarity::equivalence, 1, 2);
  s21.atomic_only = true;
  s21.singleton_supports = true;
  out.push_back(s21);
  auto s21all = s21;
  s21all.id = "2.1/all";
  s21all.singleton_supports = false;
  s21all.claimed = false;
  out.push_back(s21all);
  out.push_back(scheme("2.2", "<pi>(rho & rho') -> <pi>rho & <pi>rho'", Polarity::implication, 1, 2));
  out.push_back(scheme("2.3", "<pi + pi'>rho <-> <pi>rho | <pi'>rho", Polarity::equivalence, 2, 1));
  out.push_back(scheme("2.4", "<pi>false <-> false", Polarity::equivalence, 1, 0));
  out.push_back(scheme("2.5", "<pi & pi'>rho <-> <pi>rho & <pi'>rho", Polarity::equivalence, 2, 1));
  out.push_back(scheme("2.6", "[pi + pi']rho <-> [pi]rho & [pi']rho", Polarity::equivalence, 2, 1));
  out.push_back(scheme("2.7", "[pi](rho & rho') -> [pi]rho & [pi]rho'", Polarity::implication, 1, 2));
  auto l11 = scheme("L1.1", "(rho -> rho') = top iff rho <= rho'", Polarity::equivalence, 0, 2);
  l11.kind = SchemeKind::order_residuum;
  out.push_back(l11);
  auto l12 = scheme("L1.2", "(rho <-> rho') = top iff rho = rho'", Polarity::equivalence, 0, 2);
  l12.kind = SchemeKind::order_equivalence;
  out.push_back(l12);
  for (auto [id, text] : {std::pair{"L3.1", "a <= b & c <= d => a + c <= b + d"},
                          std::pair{"L3.2", "a;(b . c) <= (a;b) . (a;c)"},
                          std::pair{"L3.3", "sum(a_i . b_i) <= sum(a_i) . sum(b_i), lists up to 3"}}) {
    auto l = scheme(id, text, Polarity::implication, 0, 0);
    l.kind = SchemeKind::lattice;
    out.push_back(l);
  }
  return out;
}

std::vector<Value> nonzero(const std::vector<Value>& grid) {
  std::vector<Value> out;
  for (Value v : grid)
    if (v != Value{})
      out.push_back(v);
  return out;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i)
    r = sat_mul(r, base);
  return r;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n)
    return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral; guard the multiplication.
    const std::uint64_t m = sat_mul(r, n - k + i);
    if (m == std::numeric_limits<std::uint64_t>::max())
      return m;
    r = m / i;
  }
  return r;
}

/// Everything about models with a fixed number of states.
struct Shape {
  std::size_t states = 0;
  std::vector<FuzzySet> sets;
  /// Sets of pairs per source, as indices into `sets`; empty when too many.
  std::vector<std::vector<std::uint32_t>> rows;
  std::uint64_t row_count = 0;
  std::uint64_t models = 0;
};

class Space {
public:
  explicit Space(const SearchConfig& c) : config_(c) {
    if (!c.lattice)
      throw Error("search config has no lattice");
    if (c.min_states < 1 || c.max_states < c.min_states)
      throw Error("bad state bounds");
    if (c.max_states > 16)
      throw Error("search supports at most 16 states");
    grid_ = c.value_grid.empty() ? c.lattice->carrier() : c.value_grid;
    for (Value v : grid_)
      if (!c.lattice->contains(v))
        throw LatticeError("value grid leaves " + c.lattice->name());
    grid_.push_back(Value{});
    std::sort(grid_.begin(), grid_.end());
    grid_.erase(std::unique(grid_.begin(), grid_.end()), grid_.end());
    weights_ = nonzero(grid_);
    for (std::size_t i = 0; i < c.programs; ++i)
      names_.push_back(program_name(i));
    for (std::size_t n = c.min_states; n <= c.max_states; ++n)
      shapes_.push_back(make_shape(n));
    for (const auto& s : shapes_)
      total_ = sat_add(total_, s.models);
  }

  static std::string program_name(std::size_t i) {
    std::string name(1, static_cast<char>('a' + i % 26));
    if (i >= 26)
      name += std::to_string(i / 26);
    return name;
  }

  std::uint64_t total() const { return total_; }
  const std::vector<std::string>& names() const { return names_; }

  std::shared_ptr<const CgdlModel> decode(std::uint64_t index) const {
    for (const auto& s : shapes_) {
      if (index >= s.models) {
        index -= s.models;
        continue;
      }
      if (s.rows.empty() && s.row_count > 0)
        throw Error("enumeration too large to index");
      auto model = std::make_shared<CgdlModel>(config_.lattice, s.states);
      // Least significant digits are the valuation, last proposition last.
      std::vector<std::uint64_t> digits;
      const std::size_t val_digits = config_.props.size() * s.states;
      for (std::size_t i = 0; i < val_digits; ++i) {
        digits.push_back(index % grid_.size());
        index /= grid_.size();
      }
      std::vector<std::uint64_t> row_digits;
      for (std::size_t i = 0; i < names_.size() * s.states; ++i) {
        row_digits.push_back(index % s.row_count);
        index /= s.row_count;
      }
      std::reverse(digits.begin(), digits.end());
      std::reverse(row_digits.begin(), row_digits.end());
      for (std::size_t p = 0; p < names_.size(); ++p) {
        FuzzyMultirelation rel(config_.lattice, s.states);
        for (std::size_t w = 0; w < s.states; ++w)
          for (std::uint32_t set : s.rows[row_digits[p * s.states + w]])
            rel.insert(static_cast<StateId>(w), s.sets[set]);
        model->set_program(names_[p], std::move(rel));
      }
      for (std::size_t q = 0; q < config_.props.size(); ++q) {
        model->declare_prop(config_.props[q]);
        for (std::size_t w = 0; w < s.states; ++w)
          model->set_value(config_.props[q], static_cast<StateId>(w),
                           grid_[digits[q * s.states + w]]);
      }
      return model;
    }
    throw Error("model index beyond the enumeration");
  }

  std::shared_ptr<const CgdlModel> sample(std::uint64_t index) const {
    auto rng = substream(config_.seed, index);
    const Shape& s = shapes_[uniform_below(rng, shapes_.size())];
    auto model = std::make_shared<CgdlModel>(config_.lattice, s.states);
    const std::size_t cap = config_.max_pairs_per_state
                                ? config_.max_pairs_per_state
                                : std::min<std::size_t>(s.sets.size(), 3);
    for (const auto& name : names_) {
      FuzzyMultirelation rel(config_.lattice, s.states);
      for (std::size_t w = 0; w < s.states; ++w) {
        const auto k = uniform_below(rng, cap + 1);
        for (std::uint64_t j = 0; j < k && !s.sets.empty(); ++j)
          rel.insert(static_cast<StateId>(w), s.sets[uniform_below(rng, s.sets.size())]);
      }
      model->set_program(name, std::move(rel));
    }
    for (const auto& prop : config_.props) {
      model->declare_prop(prop);
      for (std::size_t w = 0; w < s.states; ++w)
        model->set_value(prop, static_cast<StateId>(w), grid_[uniform_below(rng, grid_.size())]);
    }
    return model;
  }

private:
  Shape make_shape(std::size_t n) const {
    Shape s;
    s.states = n;
    const std::size_t support = config_.max_support ? std::min(config_.max_support, n) : n;
    std::uint64_t expected = 0;
    for (std::size_t k = 1; k <= support; ++k)
      expected = sat_add(expected, sat_mul(choose(n, k), sat_pow(weights_.size(), k)));
    if (expected > (1u << 20))
      throw Error("more than 2^20 target fuzzy sets on " + std::to_string(n) +
                  " states; lower the support bound or the value grid");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      const auto k = static_cast<std::size_t>(std::popcount(mask));
      if (k > support || weights_.empty())
        continue;
      std::vector<std::size_t> digit(k, 0);
      for (;;) {
        std::vector<FuzzySet::Entry> entries;
        std::size_t d = 0;
        for (std::uint32_t m = mask; m != 0; m &= m - 1)
          entries.push_back({static_cast<StateId>(std::countr_zero(m)), weights_[digit[d++]]});
        s.sets.emplace_back(std::move(entries));
        std::size_t i = k;
        while (i > 0 && ++digit[i - 1] == weights_.size())
          digit[--i] = 0;
        if (i == 0)
          break;
      }
    }
    const std::uint64_t f = s.sets.size();
    const std::uint64_t m = config_.max_pairs_per_state ? config_.max_pairs_per_state : f;
    for (std::uint64_t j = 0; j <= std::min(m, f); ++j)
      s.row_count = sat_add(s.row_count, choose(f, j));
    s.models = sat_mul(sat_pow(s.row_count, names_.size() * n),
                       sat_pow(grid_.size(), config_.props.size() * n));
    if (s.row_count <= (1u << 16)) {
      // Subsets by size, then lexicographically.
      for (std::uint64_t j = 0; j <= std::min(m, f); ++j) {
        std::vector<std::uint32_t> pick(j);
        for (std::uint32_t i = 0; i < j; ++i)
          pick[i] = i;
        for (;;) {
          s.rows.push_back(pick);
          std::size_t i = j;
          while (i > 0 && pick[i - 1] == f - j + i - 1)
            --i;
          if (i == 0)
            break;
          ++pick[i - 1];
          for (std::size_t t = i; t < j; ++t)
            pick[t] = pick[t - 1] + 1;
        }
      }
    }
    return s;
  }

  const SearchConfig& config_;
  std::vector<Value> grid_;
  std::vector<Value> weights_;
  std::vector<std::string> names_;
  std::vector<Shape> shapes_;
  std::uint64_t total_ = 0;
};


void validate_binding(const AxiomScheme& s, const Binding& binding) {
  if (binding.programs.size() != s.programs || binding.formulas.size() != s.formulas)
    throw SemanticError("axiom " + s.id + " binds " + std::to_string(s.programs) +
                        " program(s) and " + std::to_string(s.formulas) + " formula(s)");
  for (const auto& p : binding.programs)
    if (!p)
      throw SemanticError("null program in binding");
  for (const auto& f : binding.formulas)
    if (!f)
      throw SemanticError("null formula in binding");
  if (s.atomic_only && binding.programs[0]->kind != Program::Kind::atomic)
    throw SemanticError("axiom " + s.id + " needs an atomic program, got '" +
                        render(*binding.programs[0]) + "'");
  if (s.kind == SchemeKind::lattice)
    throw SemanticError("axiom " + s.id + " is a lattice property");
}

bool applicable(const CgdlModel& model, const AxiomScheme& s, const Binding& binding) {
  if (!s.singleton_supports)
    return true;
  const FuzzyMultirelation* rel = model.program(binding.programs[0]->name);
  if (!rel)
    throw SemanticError("undeclared program '" + binding.programs[0]->name + "'");
  return std::all_of(rel->pairs().begin(), rel->pairs().end(),
                     [](const auto& p) { return p.target.size() == 1; });
}

// First state where the instance fails, if any.
std::optional<StateId> first_failure(Evaluator& ev, const AxiomScheme& s, const FormulaPtr& lhs,
                                     const FormulaPtr& rhs, const FormulaPtr& inst) {
  const ActionLattice& l = *ev.model().lattice();
  const auto left = ev.values(lhs);
  const auto right = ev.values(rhs);
  const auto value = s.kind == SchemeKind::formula ? std::span<const Value>() : ev.values(inst);
  for (std::size_t w = 0; w < left.size(); ++w) {
    bool ok;
    switch (s.kind) {
    case SchemeKind::order_residuum:
      ok = (value[w] == l.top()) == l.leq(left[w], right[w]);
      break;
    case SchemeKind::order_equivalence:
      ok = (value[w] == l.top()) == (left[w] == right[w]);
      break;
    default:
      ok = s.polarity == Polarity::equivalence ? left[w] == right[w] : l.leq(left[w], right[w]);
    }
    if (!ok)
      return static_cast<StateId>(w);
  }
  return std::nullopt;
}

Verdict judge(Evaluator& ev, const std::shared_ptr<const CgdlModel>& model, const AxiomScheme& s,
              const Binding& binding, const FormulaPtr& lhs, const FormulaPtr& rhs,
              const FormulaPtr& inst) {
  Verdict v;
  v.axiom = s.id;
  v.binding = binding;
  v.model = model;
  v.modes = ev.modes();
  v.applicable = applicable(*model, s, binding);
  v.witness = first_failure(ev, s, lhs, rhs, inst);
  v.passed = !v.witness;
  auto copy = [](std::span<const Value> x) { return std::vector<Value>(x.begin(), x.end()); };
  v.lhs = copy(ev.values(lhs));
  v.rhs = copy(ev.values(rhs));
  v.values = copy(ev.values(inst));
  return v;
}

struct Instance {
  const AxiomScheme* scheme;
  Binding binding;
  FormulaPtr lhs, rhs, inst;
};

std::vector<Instance> instances(const SearchConfig& c, const std::vector<const AxiomScheme*>& schemes,
                                const std::vector<std::string>& names) {
  std::vector<ProgramPtr> pool;
  if (c.program_pool.empty()) {
    for (const auto& n : names)
      pool.push_back(atomic(n));
    if (names.size() >= 2)
      pool.push_back(seq(atomic(names[0]), atomic(names[1])));
    if (!names.empty())
      pool.push_back(star(atomic(names[0])));
  } else {
    for (const auto& text : c.program_pool)
      pool.push_back(parse_program(text));
  }
  for (const auto& p : pool) {
    std::vector<std::string> used;
    collect_atomics(*p, used);
    for (const auto& u : used)
      if (std::find(names.begin(), names.end(), u) == names.end())
        throw SemanticError("program pool uses undeclared program '" + u + "'");
  }
  std::vector<FormulaPtr> formulas;
  if (c.formula_pool.empty()) {
    for (const auto& p : c.props)
      formulas.push_back(prop(p));
  } else {
    for (const auto& text : c.formula_pool)
      formulas.push_back(parse_formula(text));
  }
  for (const auto& f : formulas) {
    std::vector<std::string> used;
    collect_props(*f, used);
    for (const auto& u : used)
      if (std::find(c.props.begin(), c.props.end(), u) == c.props.end())
        throw SemanticError("formula pool uses undeclared proposition '" + u + "'");
    used.clear();
    collect_atomics(*f, used);
    for (const auto& u : used)
      if (std::find(names.begin(), names.end(), u) == names.end())
        throw SemanticError("formula pool uses undeclared program '" + u + "'");
  }

  std::vector<Instance> out;
  for (const AxiomScheme* s : schemes) {
    if (s->kind == SchemeKind::lattice)
      continue;
    std::vector<ProgramPtr> progs;
    for (const auto& p : pool)
      if (!s->atomic_only || p->kind == Program::Kind::atomic)
        progs.push_back(p);
    const std::size_t slots = s->programs + s->formulas;
    std::vector<std::size_t> digit(slots, 0);
    auto radix = [&](std::size_t i) { return i < s->programs ? progs.size() : formulas.size(); };
    bool empty = false;
    for (std::size_t i = 0; i < slots; ++i)
      empty = empty || radix(i) == 0;
    if (empty)
      continue;
    for (;;) {
      Binding b;
      for (std::size_t i = 0; i < s->programs; ++i)
        b.programs.push_back(progs[digit[i]]);
      for (std::size_t i = 0; i < s->formulas; ++i)
        b.formulas.push_back(formulas[digit[s->programs + i]]);
      FormulaPtr lhs = s->lhs(b), rhs = s->rhs(b), inst = s->instance(b);
      out.push_back({s, std::move(b), std::move(lhs), std::move(rhs), std::move(inst)});
      std::size_t i = slots;
      while (i > 0 && ++digit[i - 1] == radix(i - 1))
        digit[--i] = 0;
      if (i == 0)
        break;
    }
  }
  return out;
}

} // namespace

std::string Binding::describe() const {
  static const char* program_names[] = {"pi", "pi'"};
  static const char* formula_names[] = {"rho", "rho'"};
  std::string out;
  for (std::size_t i = 0; i < programs.size(); ++i) {
    if (!out.empty())
      out += ", ";
    out += std::string(i < 2 ? program_names[i] : "pi?") + " = " + render(*programs[i]);
  }
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (!out.empty())
      out += ", ";
    out += std::string(i < 2 ? formula_names[i] : "rho?") + " = " + render(*formulas[i]);
  }
  return out;
}

FormulaPtr AxiomScheme::lhs(const Binding& b) const {
  if (kind != SchemeKind::formula)
    return rho(b, 0);
  const std::string& s = id;
  if (s == "2.1" || s == "2.1/all")
    return diamond(pi(b, 0), disj(rho(b, 0), rho(b, 1)));
  if (s == "2.2")
    return diamond(pi(b, 0), conj(rho(b, 0), rho(b, 1)));
  if (s == "2.3")
    return diamond(choice(pi(b, 0), pi(b, 1)), rho(b, 0));
  if (s == "2.4")
    return diamond(pi(b, 0), bot());
  if (s == "2.5")
    return diamond(par(pi(b, 0), pi(b, 1)), rho(b, 0));
  if (s == "2.6")
    return box(choice(pi(b, 0), pi(b, 1)), rho(b, 0));
  if (s == "2.7")
    return box(pi(b, 0), conj(rho(b, 0), rho(b, 1)));
  throw Error("no formula for scheme " + id);
}

FormulaPtr AxiomScheme::rhs(const Binding& b) const {
  if (kind != SchemeKind::formula)
    return rho(b, 1);
  const std::string& s = id;
  if (s == "2.1" || s == "2.1/all")
    return disj(diamond(pi(b, 0), rho(b, 0)), diamond(pi(b, 0), rho(b, 1)));
  if (s == "2.2")
    return conj(diamond(pi(b, 0), rho(b, 0)), diamond(pi(b, 0), rho(b, 1)));
  if (s == "2.3")
    return disj(diamond(pi(b, 0), rho(b, 0)), diamond(pi(b, 1), rho(b, 0)));
  if (s == "2.4")
    return bot();
  if (s == "2.5")
    return conj(diamond(pi(b, 0), rho(b, 0)), diamond(pi(b, 1), rho(b, 0)));
  if (s == "2.6")
    return conj(box(pi(b, 0), rho(b, 0)), box(pi(b, 1), rho(b, 0)));
  if (s == "2.7")
    return conj(box(pi(b, 0), rho(b, 0)), box(pi(b, 0), rho(b, 1)));
  throw Error("no formula for scheme " + id);
}

FormulaPtr AxiomScheme::instance(const Binding& b) const {
  const bool equivalence =
      kind == SchemeKind::order_equivalence ||
      (kind == SchemeKind::formula && polarity == Polarity::equivalence);
  return equivalence ? iff(lhs(b), rhs(b)) : implies(lhs(b), rhs(b));
}

const std::vector<AxiomScheme>& axiom_catalogue() {
  static const std::vector<AxiomScheme> catalogue = build_catalogue();
  return catalogue;
}

const AxiomScheme& find_scheme(std::string_view id) {
  for (const auto& s : axiom_catalogue())
    if (s.id == id)
      return s;
  throw ParseError("unknown axiom '" + std::string(id) + "'", 0);
}

Verdict check_axiom(const std::shared_ptr<const CgdlModel>& model, std::string_view id,
                    const Binding& binding, Modes modes) {
  const AxiomScheme& s = find_scheme(id);
  if (s.kind == SchemeKind::lattice) {
    Verdict v = check_lattice_scheme(*model->lattice(), s);
    v.model = model;
    v.modes = modes;
    return v;
  }
  Evaluator ev(*model, modes);
  return check_axiom(ev, model, s, binding);
}

Verdict check_axiom(Evaluator& ev, const std::shared_ptr<const CgdlModel>& model,
                    const AxiomScheme& s, const Binding& binding) {
  validate_binding(s, binding);
  return judge(ev, model, s, binding, s.lhs(binding), s.rhs(binding), s.instance(binding));
}

Verdict check_lattice_scheme(const ActionLattice& lattice, const AxiomScheme& s) {
  if (s.kind != SchemeKind::lattice)
    throw SemanticError("axiom " + s.id + " is not a lattice property");
  const AuditReport report = lattice_property_check(lattice, lattice.carrier(), 3);
  Verdict v;
  v.axiom = s.id;
  for (const auto& e : report.entries) {
    const bool mine = (s.id == "L3.1" && e.law == "join-monotone") ||
                      (s.id == "L3.2" && e.law == "seq-subdistributes-meet") ||
                      (s.id == "L3.3" && e.law.starts_with("sum-of-meets-"));
    if (mine && !e.passed && v.passed) {
      v.passed = false;
      v.lattice_witness = e.witness;
    }
  }
  return v;
}

std::uint64_t SearchReport::counterexamples() const {
  std::uint64_t n = 0;
  for (const auto& c : cells)
    if (c.claimed)
      n += c.failures;
  return n;
}

std::uint64_t enumeration_size(const SearchConfig& config) { return Space(config).total(); }

std::shared_ptr<const CgdlModel> enumerate_model(const SearchConfig& config, std::uint64_t index) {
  return Space(config).decode(index);
}

std::shared_ptr<const CgdlModel> sample_model(const SearchConfig& config, std::uint64_t index) {
  return Space(config).sample(index);
}

SearchReport search_counterexamples(const SearchConfig& config) {
  const Space space(config);
  std::vector<const AxiomScheme*> schemes;
  if (config.axioms.empty()) {
    for (const auto& s : axiom_catalogue())
      schemes.push_back(&s);
  } else {
    for (const auto& id : config.axioms)
      schemes.push_back(&find_scheme(id));
  }
  std::vector<Modes> modes;
  for (SeqMode sm : config.seq_modes)
    for (DiamondMode dm : config.diamond_modes)
      modes.push_back({sm, dm});
  if (modes.empty())
    throw Error("no mode combination selected");

  const std::vector<Instance> work = instances(config, schemes, space.names());

  SearchReport report;
  report.config = config;
  report.coverage = config.exhaustive ? "exhaustive" : "sampled";
  if (config.exhaustive) {
    report.models = space.total();
    if (report.models > config.max_models)
      throw Error("exhaustive enumeration has " +
                  (report.models == std::numeric_limits<std::uint64_t>::max()
                       ? std::string("more than 2^64")
                       : std::to_string(report.models)) +
                  " models, above the limit of " + std::to_string(config.max_models));
  } else {
    report.models = config.samples;
  }

  // One cell per (scheme, modes); lattice schemes get a single cell.
  std::vector<CellSummary> cells;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> cell_of;
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    const std::size_t combos = schemes[i]->kind == SchemeKind::lattice ? 1 : modes.size();
    for (std::size_t m = 0; m < combos; ++m) {
      cell_of[{i, m}] = cells.size();
      CellSummary c;
      c.axiom = schemes[i]->id;
      c.modes = modes[m];
      c.claimed = schemes[i]->claimed;
      cells.push_back(std::move(c));
    }
  }
  std::map<const AxiomScheme*, std::size_t> scheme_index;
  for (std::size_t i = 0; i < schemes.size(); ++i)
    scheme_index[schemes[i]] = i;
  // cell_index[i * modes + m]: the cell of work item i under modes[m].
  std::vector<std::size_t> cell_index;
  for (const auto& inst : work)
    for (std::size_t m = 0; m < modes.size(); ++m)
      cell_index.push_back(cell_of.at({scheme_index.at(inst.scheme), m}));

  for (std::size_t i = 0; i < schemes.size(); ++i) {
    if (schemes[i]->kind != SchemeKind::lattice)
      continue;
    CellSummary& c = cells[cell_of[{i, 0}]];
    Verdict v = check_lattice_scheme(*config.lattice, *schemes[i]);
    c.checked = 1;
    if (!v.passed) {
      c.failures = 1;
      c.witnesses.push_back(std::move(v));
    }
  }

  constexpr std::uint64_t kChunk = 256;
  const std::uint64_t chunks = (report.models + kChunk - 1) / kChunk;
  const std::uint64_t batch = std::max<std::uint64_t>(1, config.jobs) * 16;
  for (std::uint64_t first = 0; first < chunks; first += batch) {
    const std::uint64_t count = std::min(batch, chunks - first);
    std::vector<std::vector<CellSummary>> partial(count);
    parallel_for(count, config.jobs, [&](std::size_t k) {
      std::vector<CellSummary> local(cells.size());
      auto interner = std::make_shared<Interner>();
      const std::uint64_t lo = (first + k) * kChunk;
      const std::uint64_t hi = std::min(report.models, lo + kChunk);
      for (std::uint64_t index = lo; index < hi; ++index) {
        auto model = config.exhaustive ? space.decode(index) : space.sample(index);
        for (std::size_t m = 0; m < modes.size(); ++m) {
          Evaluator ev(*model, modes[m], 0, interner);
          for (std::size_t i = 0; i < work.size(); ++i) {
            const Instance& inst = work[i];
            CellSummary& c = local[cell_index[i * modes.size() + m]];
            if (!applicable(*model, *inst.scheme, inst.binding)) {
              ++c.not_applicable;
              continue;
            }
            ++c.checked;
            if (first_failure(ev, *inst.scheme, inst.lhs, inst.rhs, inst.inst)) {
              ++c.failures;
              if (c.witnesses.size() < config.max_witnesses) {
                Verdict v = judge(ev, model, *inst.scheme, inst.binding, inst.lhs, inst.rhs,
                                  inst.inst);
                v.model_index = index;
                c.witnesses.push_back(std::move(v));
              }
            }
          }
        }
      }
      partial[k] = std::move(local);
    });
    for (auto& local : partial)
      for (std::size_t i = 0; i < cells.size(); ++i) {
        CellSummary& c = cells[i];
        c.checked += local[i].checked;
        c.failures += local[i].failures;
        c.not_applicable += local[i].not_applicable;
        for (auto& v : local[i].witnesses)
          if (c.witnesses.size() < config.max_witnesses)
            c.witnesses.push_back(std::move(v));
      }
  }
  report.cells = std::move(cells);
  return report;
}

} // namespace cgdl
