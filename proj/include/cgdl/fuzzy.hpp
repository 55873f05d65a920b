#pragma once

#include "cgdl/lattice.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <utility>
#include <vector>

namespace cgdl {

using StateId = std::uint16_t;

/// A finite fuzzy set over states, stored by support: entries are sorted by
/// state and never carry the zero value. Unlisted states have membership 0.
class FuzzySet {
public:
  struct Entry {
    StateId state;
    Value value;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  FuzzySet() = default;
  /// Zero entries are dropped; a state listed twice is an error.
  FuzzySet(std::initializer_list<Entry> entries);
  explicit FuzzySet(std::vector<Entry> entries);

  Value at(StateId state) const;
  /// Setting zero removes the state from the support.
  void set(StateId state, Value value);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool contains(StateId state) const;
  std::vector<StateId> support() const;

  friend auto operator<=>(const FuzzySet&, const FuzzySet&) = default;
  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;

private:
  std::vector<Entry> entries_;
};

/// Pointwise join (Zadeh union).
FuzzySet fs_union(const ActionLattice& lattice, const FuzzySet& phi, const FuzzySet& psi);

/// A finite set of (source, fuzzy set) pairs over states 0..states-1.
///
/// Pairs are kept sorted and unique; pairs whose fuzzy set is empty are not
/// stored.
class FuzzyMultirelation {
public:
  struct Pair {
    StateId source;
    FuzzySet target;
    friend auto operator<=>(const Pair&, const Pair&) = default;
    friend bool operator==(const Pair&, const Pair&) = default;
  };

  FuzzyMultirelation(LatticePtr lattice, std::size_t states);

  /// Validates states and values; empty targets are ignored.
  void insert(StateId source, FuzzySet target);
  void insert(Pair pair) { insert(pair.source, std::move(pair.target)); }

  const LatticePtr& lattice() const { return lattice_; }
  std::size_t states() const { return states_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  bool contains(const Pair& pair) const;
  /// Pairs with the given source, as a contiguous range of `pairs()`.
  std::pair<const Pair*, const Pair*> from(StateId source) const;

  /// Pairwise inclusion.
  bool subset_of(const FuzzyMultirelation& other) const;

  friend bool operator==(const FuzzyMultirelation& a, const FuzzyMultirelation& b);

private:
  LatticePtr lattice_;
  std::size_t states_;
  std::vector<Pair> pairs_;
};

enum class SeqMode {
  /// The product ranges over every pair of the right operand.
  literal,
  /// The product ranges over pairs whose source lies in the support of the
  /// left target; a support state without any such pair annihilates the term.
  support_guarded,
};

std::string_view to_string(SeqMode mode);

FuzzyMultirelation mrel_union(const FuzzyMultirelation& r, const FuzzyMultirelation& s);
/// One output pair per source of r:
///   phi(c) = sum over (a, phi_a) in r of prod over (b, phi_b) in s of phi_a(b) ; phi_b(c)
FuzzyMultirelation mrel_seq(const FuzzyMultirelation& r, const FuzzyMultirelation& s,
                            SeqMode mode);
/// (a, phi_r union phi_s) for every pair of pairs sharing a source.
FuzzyMultirelation mrel_parallel(const FuzzyMultirelation& r, const FuzzyMultirelation& s);
/// {(w, {w -> top})}.
FuzzyMultirelation mrel_identity(LatticePtr lattice, std::size_t states);

struct StarResult {
  FuzzyMultirelation rel;
  bool converged = false;
  /// Highest power computed.
  std::size_t iterations = 0;
};

inline std::size_t default_star_iterations(std::size_t states) { return states * states + 2; }

/// identity + R + R^2 + ..., with R^(n+1) = mrel_seq(R^n, R, mode). The
/// iteration stops once a power is empty or equal to an earlier power, after
/// which no later power can add pairs. Otherwise it stops after
/// `max_iterations` powers with `converged = false`.
StarResult mrel_star(const FuzzyMultirelation& r, SeqMode mode, std::size_t max_iterations);
StarResult mrel_star(const FuzzyMultirelation& r, SeqMode mode);

// Classical multirelations, W <= 32, target sets as bit masks.

struct BinaryMultirelation {
  struct Pair {
    StateId source;
    std::uint32_t targets;
    friend auto operator<=>(const Pair&, const Pair&) = default;
  };

  explicit BinaryMultirelation(std::size_t states = 0);
  BinaryMultirelation(std::size_t states, std::initializer_list<Pair> pairs);

  void insert(StateId source, std::uint32_t targets);

  std::size_t states;
  std::vector<Pair> pairs;

  friend bool operator==(const BinaryMultirelation&, const BinaryMultirelation&) = default;
};

inline constexpr std::size_t kMaxBinaryStates = 32;

BinaryMultirelation bin_union(const BinaryMultirelation& r, const BinaryMultirelation& s);
/// Choice-function composition: (a, union f(B)) for (a, B) in r and every f
/// picking one s-pair (b, f(b)) per b in B.
BinaryMultirelation bin_peleg_seq(const BinaryMultirelation& r, const BinaryMultirelation& s);
/// (a, A) such that some (a, B) in r has (b, A) in s for every b in B. An
/// empty B relates a to every subset of W, so W is limited to 20 states here.
BinaryMultirelation bin_parikh_seq(const BinaryMultirelation& r, const BinaryMultirelation& s);
/// (a, A union B) for (a, A) in r and (a, B) in s.
BinaryMultirelation bin_parallel(const BinaryMultirelation& r, const BinaryMultirelation& s);

/// Shared instance of the two-element lattice.
const LatticePtr& boolean_lattice();

/// Characteristic fuzzy sets over the Boolean lattice; (a, {}) pairs vanish.
FuzzyMultirelation embed_boolean(const BinaryMultirelation& b);
/// Forgets the weights, keeping supports.
BinaryMultirelation strip(const FuzzyMultirelation& r);

} // namespace cgdl
