#pragma once

// Test oracle: Boolean concurrent PDL on explicit sets.
//
// Programs denote sets of (state, target-set) pairs with targets as bit
// masks; formulas denote the set of states where they hold. Nothing here
// uses the library's lattice, multirelation or evaluator code.

#include "cgdl/syntax.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using Rel = std::set<std::pair<int, Mask>>;

struct BoolModel {
  int states = 0;
  std::map<std::string, Rel> programs;
  std::map<std::string, Mask> props;
  // Optional precomputed program denotations; they do not depend on props.
  const std::map<const cgdl::Program*, Rel>* cache = nullptr;
};

inline Mask all_states(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Sequential composition, support-guarded reading on {0,1}: each pair (a, A)
// contributes the intersection of every S-target leaving A, or nothing when
// some state of A has no S-pair; the contributions for one source are merged.
inline Rel seq_guarded(const Rel& r, const Rel& s, int n) {
  std::map<int, Mask> out;
  for (const auto& [a, A] : r) {
    Mask term = all_states(n);
    bool alive = true;
    for (int b = 0; b < n && alive; ++b) {
      if (!(A >> b & 1))
        continue;
      bool has_pair = false;
      for (const auto& [src, B] : s)
        if (src == b) {
          has_pair = true;
          term &= B;
        }
      alive = has_pair;
    }
    if (alive)
      out[a] |= term;
  }
  Rel result;
  for (const auto& [a, m] : out)
    if (m)
      result.insert({a, m});
  return result;
}

// Literal reading: the product runs over every pair of S, so a pair (a, A)
// contributes only if A contains every source of S.
inline Rel seq_literal(const Rel& r, const Rel& s, int n) {
  Mask common = all_states(n);
  Mask sources = 0;
  for (const auto& [src, B] : s) {
    common &= B;
    sources |= Mask{1} << src;
  }
  std::map<int, Mask> out;
  for (const auto& [a, A] : r)
    if ((sources & ~A) == 0)
      out[a] |= common;
  Rel result;
  for (const auto& [a, m] : out)
    if (m)
      result.insert({a, m});
  return result;
}

inline Rel parallel(const Rel& r, const Rel& s) {
  Rel out;
  for (const auto& [a, A] : r)
    for (const auto& [b, B] : s)
      if (a == b)
        out.insert({a, A | B});
  return out;
}

inline Rel identity(int n) {
  Rel out;
  for (int w = 0; w < n; ++w)
    out.insert({w, Mask{1} << w});
  return out;
}

// Union of all powers R^0, R^1, ...; the power sequence is eventually
// periodic, so it is followed until a power repeats.
inline Rel star(const Rel& r, int n, bool literal = false) {
  Rel acc = identity(n);
  std::set<Rel> seen;
  Rel power = r;
  while (seen.insert(power).second) {
    acc.insert(power.begin(), power.end());
    power = literal ? seq_literal(power, r, n) : seq_guarded(power, r, n);
  }
  return acc;
}

inline Rel interpret(const BoolModel& m, const cgdl::Program& p) {
  if (m.cache)
    if (auto it = m.cache->find(&p); it != m.cache->end())
      return it->second;
  using K = cgdl::Program::Kind;
  switch (p.kind) {
  case K::atomic: {
    auto it = m.programs.find(p.name);
    if (it == m.programs.end())
      throw std::runtime_error("oracle: undeclared program " + p.name);
    return it->second;
  }
  case K::seq: return seq_guarded(interpret(m, *p.left), interpret(m, *p.right), m.states);
  case K::par: return parallel(interpret(m, *p.left), interpret(m, *p.right));
  case K::choice: {
    Rel out = interpret(m, *p.left);
    const Rel right = interpret(m, *p.right);
    out.insert(right.begin(), right.end());
    return out;
  }
  case K::star: return star(interpret(m, *p.left), m.states);
  }
  return {};
}

enum class Diamond { all_targets, some_target };

// States where f holds. Diamond: some pair whose targets all satisfy f
// (or, in the some_target reading, meet f). Box: every target of every pair
// satisfies f.
inline Mask holds(const BoolModel& m, const cgdl::Formula& f, Diamond mode = Diamond::all_targets) {
  using K = cgdl::Formula::Kind;
  const Mask all = all_states(m.states);
  switch (f.kind) {
  case K::top: return all;
  case K::bot: return 0;
  case K::prop: {
    auto it = m.props.find(f.name);
    return it == m.props.end() ? 0 : it->second;
  }
  case K::disj: return holds(m, *f.left, mode) | holds(m, *f.right, mode);
  case K::conj: return holds(m, *f.left, mode) & holds(m, *f.right, mode);
  case K::implies: return (~holds(m, *f.left, mode) | holds(m, *f.right, mode)) & all;
  case K::iff: return ~(holds(m, *f.left, mode) ^ holds(m, *f.right, mode)) & all;
  case K::diamond:
  case K::box: {
    const Mask inner = holds(m, *f.left, mode);
    const Rel* cached = nullptr;
    if (m.cache)
      if (auto it = m.cache->find(f.program.get()); it != m.cache->end())
        cached = &it->second;
    const Rel computed = cached ? Rel{} : interpret(m, *f.program);
    const Rel& rel = cached ? *cached : computed;
    Mask out = f.kind == K::box ? all : 0;
    for (const auto& [w, A] : rel) {
      const bool inside = (A & ~inner) == 0;
      if (f.kind == K::box) {
        if (!inside)
          out &= ~(Mask{1} << w);
      } else if (mode == Diamond::all_targets ? inside : (A & inner) != 0) {
        out |= Mask{1} << w;
      }
    }
    return out;
  }
  }
  return 0;
}

// Plain relations as adjacency matrices.
using Adj = std::vector<std::vector<bool>>;

inline Adj compose(const Adj& x, const Adj& y) {
  const std::size_t n = x.size();
  Adj out(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (x[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (y[k][j])
            out[i][j] = true;
  return out;
}

// Warshall, then add the diagonal.
inline Adj closure(Adj x) {
  const std::size_t n = x.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (x[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (x[k][j])
            x[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    x[i][i] = true;
  return x;
}

} // namespace oracle
