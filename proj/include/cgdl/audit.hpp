#pragma once

#include "cgdl/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cgdl {

/// Outcome of checking one law over every tuple drawn from a sample.
/// A failing entry always carries the first offending tuple.
struct AuditEntry {
  std::string law;
  bool passed = true;
  std::uint64_t checked = 0;
  std::vector<Value> witness;
};

struct AuditReport {
  std::string lattice;
  std::size_t sample_size = 0;
  std::vector<AuditEntry> entries;

  bool all_passed() const;
  const AuditEntry* find(std::string_view law) const;
};

/// Checks the action-lattice axioms (join monoid, seq monoid, distributivity,
/// annihilation, residuation, both star axioms, one = top) and the three
/// auxiliary order properties over all tuples from `sample`.
/// Iterated-sum lists are bounded by `max_list_len`.
AuditReport audit_axioms(const ActionLattice& lattice, const std::vector<Value>& sample,
                         std::size_t max_list_len = 3);
AuditReport audit_axioms(const ActionLattice& lattice);

/// The three order properties only:
///   a <= b & c <= d  =>  a + c <= b + d
///   a;(b . c)  <=  (a;b) . (a;c)
///   sum(a_i . b_i)  <=  sum(a_i) . sum(b_i)      for lists up to max_list_len
AuditReport lattice_property_check(const ActionLattice& lattice, const std::vector<Value>& sample,
                                   std::size_t max_list_len = 3);

/// `count` carrier values drawn with replacement, deterministic in `seed`.
std::vector<Value> sample_values(const ActionLattice& lattice, std::size_t count,
                                 std::uint64_t seed);

} // namespace cgdl
