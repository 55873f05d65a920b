#pragma once

#include "cgdl/fuzzy.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace cgdl {

/// The four sequential compositions compared on Boolean multirelations.
enum class Composition { peleg, parikh, literal, support_guarded };
inline constexpr std::array<Composition, 4> kCompositions{
    Composition::peleg, Composition::parikh, Composition::literal, Composition::support_guarded};

std::string_view to_string(Composition c);

struct ComparisonWitness {
  std::size_t sample = 0;
  BinaryMultirelation r;
  BinaryMultirelation s;
  BinaryMultirelation first;
  BinaryMultirelation second;
};

struct ComparisonReport {
  std::size_t states = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// agree[i][j]: samples on which compositions i and j give the same result.
  std::array<std::array<std::size_t, 4>, 4> agree{};
  /// First disagreement for each pair i < j, in sample order.
  std::array<std::array<std::optional<ComparisonWitness>, 4>, 4> witness{};

  double percent(Composition a, Composition b) const;
};

/// Random samples have up to two pairs per source and no empty target sets,
/// since the fuzzy embedding cannot represent (a, {}).
BinaryMultirelation random_binary(std::size_t states, std::mt19937_64& rng);

BinaryMultirelation compose(Composition c, const BinaryMultirelation& r,
                            const BinaryMultirelation& s);

/// Sample i draws from its own substream of `seed`, so the report does not
/// depend on `jobs`.
ComparisonReport compare_seq(std::size_t states, std::size_t count, std::uint64_t seed,
                             unsigned jobs = 1);

} // namespace cgdl
