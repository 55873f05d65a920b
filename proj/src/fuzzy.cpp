#include "cgdl/fuzzy.hpp"

#include "cgdl/error.hpp"

#include <algorithm>
#include <bit>

namespace cgdl {

namespace {

void require_compatible(const FuzzyMultirelation& r, const FuzzyMultirelation& s) {
  if (r.states() != s.states())
    throw DimensionError("multirelations over " + std::to_string(r.states()) + " and " +
                         std::to_string(s.states()) + " states");
  if (!same_lattice(*r.lattice(), *s.lattice()))
    throw LatticeError("multirelations over " + r.lattice()->name() + " and " +
                       s.lattice()->name());
}

FuzzySet from_dense(const std::vector<Value>& dense) {
  std::vector<FuzzySet::Entry> entries;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (dense[c] != Value{})
      entries.push_back({static_cast<StateId>(c), dense[c]});
  return FuzzySet(std::move(entries));
}

void require_binary_states(std::size_t states) {
  if (states > kMaxBinaryStates)
    throw DimensionError("binary multirelations support at most 32 states");
}

void require_same_states(const BinaryMultirelation& r, const BinaryMultirelation& s) {
  if (r.states != s.states)
    throw DimensionError("multirelations over " + std::to_string(r.states) + " and " +
                         std::to_string(s.states) + " states");
}

std::uint32_t full_mask(std::size_t states) {
  return states >= 32 ? 0xffffffffu : (1u << states) - 1;
}

} // namespace

FuzzySet::FuzzySet(std::initializer_list<Entry> entries)
    : FuzzySet(std::vector<Entry>(entries)) {}

FuzzySet::FuzzySet(std::vector<Entry> entries) {
  std::erase_if(entries, [](const Entry& e) { return e.value == Value{}; });
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].state == entries[i - 1].state)
      throw Error("state " + std::to_string(entries[i].state) + " listed twice in a fuzzy set");
  entries_ = std::move(entries);
}

Value FuzzySet::at(StateId state) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), state,
                             [](const Entry& e, StateId s) { return e.state < s; });
  return it != entries_.end() && it->state == state ? it->value : Value{};
}

void FuzzySet::set(StateId state, Value value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), state,
                             [](const Entry& e, StateId s) { return e.state < s; });
  const bool present = it != entries_.end() && it->state == state;
  if (value == Value{}) {
    if (present)
      entries_.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    entries_.insert(it, Entry{state, value});
  }
}

bool FuzzySet::contains(StateId state) const { return at(state) != Value{}; }

std::vector<StateId> FuzzySet::support() const {
  std::vector<StateId> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_)
    out.push_back(e.state);
  return out;
}

FuzzySet fs_union(const ActionLattice& lattice, const FuzzySet& phi, const FuzzySet& psi) {
  std::vector<FuzzySet::Entry> out;
  auto a = phi.begin();
  auto b = psi.begin();
  while (a != phi.end() || b != psi.end()) {
    if (b == psi.end() || (a != phi.end() && a->state < b->state)) {
      out.push_back(*a++);
    } else if (a == phi.end() || b->state < a->state) {
      out.push_back(*b++);
    } else {
      out.push_back({a->state, lattice.join(a->value, b->value)});
      ++a;
      ++b;
    }
  }
  return FuzzySet(std::move(out));
}

FuzzyMultirelation::FuzzyMultirelation(LatticePtr lattice, std::size_t states)
    : lattice_(std::move(lattice)), states_(states) {
  if (states > 65535)
    throw DimensionError("too many states");
}

void FuzzyMultirelation::insert(StateId source, FuzzySet target) {
  if (source >= states_)
    throw DimensionError("source state " + std::to_string(source) + " outside W");
  for (const auto& e : target) {
    if (e.state >= states_)
      throw DimensionError("target state " + std::to_string(e.state) + " outside W");
    if (!lattice_->contains(e.value))
      throw LatticeError("membership value outside " + lattice_->name());
  }
  if (target.empty())
    return;
  Pair pair{source, std::move(target)};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), pair);
  if (it == pairs_.end() || *it != pair)
    pairs_.insert(it, std::move(pair));
}

bool FuzzyMultirelation::contains(const Pair& pair) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), pair);
}

std::pair<const FuzzyMultirelation::Pair*, const FuzzyMultirelation::Pair*>
FuzzyMultirelation::from(StateId source) const {
  auto lo = std::lower_bound(pairs_.begin(), pairs_.end(), source,
                             [](const Pair& p, StateId s) { return p.source < s; });
  auto hi = std::upper_bound(lo, pairs_.end(), source,
                             [](StateId s, const Pair& p) { return s < p.source; });
  return {pairs_.data() + (lo - pairs_.begin()), pairs_.data() + (hi - pairs_.begin())};
}

bool FuzzyMultirelation::subset_of(const FuzzyMultirelation& other) const {
  return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

bool operator==(const FuzzyMultirelation& a, const FuzzyMultirelation& b) {
  return a.states_ == b.states_ && a.pairs_ == b.pairs_ && same_lattice(*a.lattice_, *b.lattice_);
}

std::string_view to_string(SeqMode mode) {
  return mode == SeqMode::literal ? "literal" : "support-guarded";
}

FuzzyMultirelation mrel_union(const FuzzyMultirelation& r, const FuzzyMultirelation& s) {
  require_compatible(r, s);
  FuzzyMultirelation out = r;
  for (const auto& p : s.pairs())
    out.insert(p);
  return out;
}

FuzzyMultirelation mrel_seq(const FuzzyMultirelation& r, const FuzzyMultirelation& s,
                            SeqMode mode) {
  require_compatible(r, s);
  const ActionLattice& l = *r.lattice();
  const std::size_t n = r.states();
  FuzzyMultirelation out(r.lattice(), n);

  std::vector<Value> phi(n);
  std::vector<Value> term(n);
  const auto& pairs = r.pairs();
  for (std::size_t i = 0; i < pairs.size();) {
    const StateId a = pairs[i].source;
    std::fill(phi.begin(), phi.end(), l.zero());
    for (; i < pairs.size() && pairs[i].source == a; ++i) {
      const FuzzySet& phi_a = pairs[i].target;
      std::fill(term.begin(), term.end(), l.one());
      auto absorb = [&](const FuzzyMultirelation::Pair& q) {
        const Value weight = phi_a.at(q.source);
        for (std::size_t c = 0; c < n; ++c)
          term[c] = l.seq(term[c], l.seq(weight, q.target.at(static_cast<StateId>(c))));
      };
      if (mode == SeqMode::literal) {
        for (const auto& q : s.pairs())
          absorb(q);
      } else {
        bool covered = true;
        for (const auto& e : phi_a) {
          auto [lo, hi] = s.from(e.state);
          if (lo == hi) {
            covered = false;
            break;
          }
          for (auto q = lo; q != hi; ++q)
            absorb(*q);
        }
        if (!covered)
          continue;
      }
      for (std::size_t c = 0; c < n; ++c)
        phi[c] = l.join(phi[c], term[c]);
    }
    out.insert(a, from_dense(phi));
  }
  return out;
}

FuzzyMultirelation mrel_parallel(const FuzzyMultirelation& r, const FuzzyMultirelation& s) {
  require_compatible(r, s);
  FuzzyMultirelation out(r.lattice(), r.states());
  for (const auto& p : r.pairs()) {
    auto [lo, hi] = s.from(p.source);
    for (auto q = lo; q != hi; ++q)
      out.insert(p.source, fs_union(*r.lattice(), p.target, q->target));
  }
  return out;
}

FuzzyMultirelation mrel_identity(LatticePtr lattice, std::size_t states) {
  FuzzyMultirelation out(lattice, states);
  for (std::size_t w = 0; w < states; ++w)
    out.insert(static_cast<StateId>(w), FuzzySet{{static_cast<StateId>(w), lattice->top()}});
  return out;
}

StarResult mrel_star(const FuzzyMultirelation& r, SeqMode mode, std::size_t max_iterations) {
  if (max_iterations < 1)
    throw Error("star needs at least one iteration");
  StarResult result{mrel_union(mrel_identity(r.lattice(), r.states()), r), false, 1};
  std::vector<FuzzyMultirelation> powers{r};
  if (r.empty()) {
    result.converged = true;
    return result;
  }
  while (result.iterations < max_iterations) {
    FuzzyMultirelation next = mrel_seq(powers.back(), r, mode);
    ++result.iterations;
    if (next.empty() || std::find(powers.begin(), powers.end(), next) != powers.end()) {
      result.converged = true;
      return result;
    }
    result.rel = mrel_union(result.rel, next);
    powers.push_back(std::move(next));
  }
  return result;
}

StarResult mrel_star(const FuzzyMultirelation& r, SeqMode mode) {
  return mrel_star(r, mode, default_star_iterations(r.states()));
}

BinaryMultirelation::BinaryMultirelation(std::size_t states) : states(states) {
  require_binary_states(states);
}

BinaryMultirelation::BinaryMultirelation(std::size_t states, std::initializer_list<Pair> init)
    : BinaryMultirelation(states) {
  for (const auto& p : init)
    insert(p.source, p.targets);
}

void BinaryMultirelation::insert(StateId source, std::uint32_t targets) {
  if (source >= states || (targets & ~full_mask(states)) != 0)
    throw DimensionError("multirelation pair outside W");
  Pair pair{source, targets};
  auto it = std::lower_bound(pairs.begin(), pairs.end(), pair);
  if (it == pairs.end() || *it != pair)
    pairs.insert(it, pair);
}

BinaryMultirelation bin_union(const BinaryMultirelation& r, const BinaryMultirelation& s) {
  require_same_states(r, s);
  BinaryMultirelation out = r;
  for (const auto& p : s.pairs)
    out.insert(p.source, p.targets);
  return out;
}

BinaryMultirelation bin_peleg_seq(const BinaryMultirelation& r, const BinaryMultirelation& s) {
  require_same_states(r, s);
  BinaryMultirelation out(r.states);
  std::vector<std::vector<std::uint32_t>> options(r.states);
  for (const auto& q : s.pairs)
    options[q.source].push_back(q.targets);
  for (const auto& p : r.pairs) {
    std::vector<const std::vector<std::uint32_t>*> slots;
    bool feasible = true;
    for (std::uint32_t m = p.targets; m != 0; m &= m - 1) {
      const auto& o = options[std::countr_zero(m)];
      if (o.empty()) {
        feasible = false;
        break;
      }
      slots.push_back(&o);
    }
    if (!feasible)
      continue;
    // Odometer over one choice per intermediate state.
    std::vector<std::size_t> digit(slots.size(), 0);
    for (;;) {
      std::uint32_t a = 0;
      for (std::size_t k = 0; k < slots.size(); ++k)
        a |= (*slots[k])[digit[k]];
      out.insert(p.source, a);
      std::size_t k = 0;
      while (k < slots.size() && ++digit[k] == slots[k]->size())
        digit[k++] = 0;
      if (k == slots.size())
        break;
    }
  }
  return out;
}

BinaryMultirelation bin_parikh_seq(const BinaryMultirelation& r, const BinaryMultirelation& s) {
  require_same_states(r, s);
  BinaryMultirelation out(r.states);
  for (const auto& p : r.pairs) {
    if (p.targets == 0) {
      if (r.states > 20)
        throw DimensionError("vacuous Parikh composition enumerates every subset of W; W > 20");
      for (std::uint64_t a = 0; a <= full_mask(r.states); ++a)
        out.insert(p.source, static_cast<std::uint32_t>(a));
      continue;
    }
    const auto first = static_cast<StateId>(std::countr_zero(p.targets));
    for (const auto& candidate : s.pairs) {
      if (candidate.source != first)
        continue;
      bool all = true;
      for (std::uint32_t m = p.targets; m != 0 && all; m &= m - 1) {
        const BinaryMultirelation::Pair q{static_cast<StateId>(std::countr_zero(m)),
                                          candidate.targets};
        all = std::binary_search(s.pairs.begin(), s.pairs.end(), q);
      }
      if (all)
        out.insert(p.source, candidate.targets);
    }
  }
  return out;
}

BinaryMultirelation bin_parallel(const BinaryMultirelation& r, const BinaryMultirelation& s) {
  require_same_states(r, s);
  BinaryMultirelation out(r.states);
  for (const auto& p : r.pairs)
    for (const auto& q : s.pairs)
      if (p.source == q.source)
        out.insert(p.source, p.targets | q.targets);
  return out;
}

const LatticePtr& boolean_lattice() {
  static const LatticePtr instance = std::make_shared<const ActionLattice>(ActionLattice::boolean());
  return instance;
}

FuzzyMultirelation embed_boolean(const BinaryMultirelation& b) {
  const LatticePtr& l = boolean_lattice();
  FuzzyMultirelation out(l, b.states);
  for (const auto& p : b.pairs) {
    std::vector<FuzzySet::Entry> entries;
    for (std::uint32_t m = p.targets; m != 0; m &= m - 1)
      entries.push_back({static_cast<StateId>(std::countr_zero(m)), l->top()});
    out.insert(p.source, FuzzySet(std::move(entries)));
  }
  return out;
}

BinaryMultirelation strip(const FuzzyMultirelation& r) {
  BinaryMultirelation out(r.states());
  for (const auto& p : r.pairs()) {
    std::uint32_t mask = 0;
    for (const auto& e : p.target)
      mask |= 1u << e.state;
    out.insert(p.source, mask);
  }
  return out;
}

} // namespace cgdl
