#pragma once

#include "cgdl/lattice.hpp"

#include <string>

namespace testing {

inline cgdl::LatticePtr lattice(const std::string& name) { return cgdl::parse_lattice_flag(name); }

inline cgdl::Value v(const cgdl::ActionLattice& l, const std::string& literal) {
  return l.parse(literal);
}

} // namespace testing
