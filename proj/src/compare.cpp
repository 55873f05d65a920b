#include "cgdl/compare.hpp"

#include "cgdl/error.hpp"
#include "cgdl/parallel.hpp"
#include "cgdl/rng.hpp"

namespace cgdl {

std::string_view to_string(Composition c) {
  switch (c) {
  case Composition::peleg: return "peleg";
  case Composition::parikh: return "parikh";
  case Composition::literal: return "literal";
  case Composition::support_guarded: return "support-guarded";
  }
  return "?";
}

double ComparisonReport::percent(Composition a, Composition b) const {
  if (samples == 0)
    return 100.0;
  return 100.0 * static_cast<double>(agree[static_cast<int>(a)][static_cast<int>(b)]) /
         static_cast<double>(samples);
}

BinaryMultirelation random_binary(std::size_t states, std::mt19937_64& rng) {
  BinaryMultirelation out(states);
  if (states == 0)
    return out;
  const std::uint64_t masks = (std::uint64_t{1} << states) - 1;
  for (std::size_t a = 0; a < states; ++a) {
    const auto count = uniform_below(rng, 3);
    for (std::uint64_t k = 0; k < count; ++k)
      out.insert(static_cast<StateId>(a), static_cast<std::uint32_t>(1 + uniform_below(rng, masks)));
  }
  return out;
}

BinaryMultirelation compose(Composition c, const BinaryMultirelation& r,
                            const BinaryMultirelation& s) {
  switch (c) {
  case Composition::peleg: return bin_peleg_seq(r, s);
  case Composition::parikh: return bin_parikh_seq(r, s);
  case Composition::literal:
    return strip(mrel_seq(embed_boolean(r), embed_boolean(s), SeqMode::literal));
  case Composition::support_guarded:
    return strip(mrel_seq(embed_boolean(r), embed_boolean(s), SeqMode::support_guarded));
  }
  throw Error("unknown composition");
}

ComparisonReport compare_seq(std::size_t states, std::size_t count, std::uint64_t seed,
                             unsigned jobs) {
  if (count < 1)
    throw Error("compare needs at least one sample");
  if (states > 16)
    throw DimensionError("compare supports at most 16 states");
  struct Sample {
    BinaryMultirelation r, s;
    std::array<BinaryMultirelation, 4> out;
  };
  std::vector<Sample> samples(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    auto rng = substream(seed, i);
    Sample& x = samples[i];
    x.r = random_binary(states, rng);
    x.s = random_binary(states, rng);
    for (std::size_t k = 0; k < 4; ++k)
      x.out[k] = compose(kCompositions[k], x.r, x.s);
  });

  ComparisonReport report;
  report.states = states;
  report.samples = count;
  report.seed = seed;
  for (std::size_t i = 0; i < count; ++i) {
    const Sample& x = samples[i];
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        if (x.out[a] == x.out[b]) {
          ++report.agree[a][b];
        } else if (a < b && !report.witness[a][b]) {
          report.witness[a][b] = ComparisonWitness{i, x.r, x.s, x.out[a], x.out[b]};
        }
      }
  }
  return report;
}

} // namespace cgdl
