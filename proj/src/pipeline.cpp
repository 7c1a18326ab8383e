#include "cauchywell/pipeline.hpp"

#include <algorithm>
#include <string>

#include "cauchywell/error.hpp"

namespace cauchywell {

std::vector<EigenPair> solve_parity(Parity parity, std::size_t block_size, std::size_t count,
                                    bool with_vectors, const PipelineOptions& opts) {
  if (count < 1 || count > block_size) {
    throw ConfigError("solve_parity: count must lie in [1, block_size]");
  }
  const GalerkinBlock block = assemble(parity, block_size, opts.assembly);
  if (!with_vectors) return lowest_pairs(block, count, opts.eigen);
  EigenSolveOptions eig = opts.eigen;
  eig.compute_vectors = true;
  std::vector<EigenPair> pairs = eigh(block, eig);
  pairs.resize(count);
  return pairs;
}

SpectrumReport solve_spectrum(std::size_t block_size, std::size_t levels,
                              std::optional<Parity> parity, const PipelineOptions& opts) {
  if (block_size < 1) throw ConfigError("block size must be >= 1");
  if (levels < 1) throw ConfigError("levels must be >= 1");
  if (parity) {
    if (levels > block_size) {
      throw ConfigError("levels (" + std::to_string(levels) + ") exceed the block size for one parity");
    }
    return single_parity_report(solve_parity(*parity, block_size, levels, false, opts), levels);
  }
  if (levels > 2 * block_size) {
    throw ConfigError("levels (" + std::to_string(levels) + ") exceed 2 x block size");
  }
  // One spare value per parity keeps the interleave honest at the cut.
  const std::size_t per_parity = std::min(block_size, levels / 2 + 2);
  const auto even = solve_parity(Parity::Even, block_size, per_parity, false, opts);
  const auto odd = solve_parity(Parity::Odd, block_size, per_parity, false, opts);
  return merge(even, odd, levels);
}

SpectrumReport solve_spectrum(std::size_t block_size, std::size_t levels,
                              const PipelineOptions& opts) {
  return solve_spectrum(block_size, levels, std::nullopt, opts);
}

EigenPair eigenpair_for_level(std::size_t block_size, int level, const PipelineOptions& opts) {
  if (level < 1 || static_cast<std::size_t>(level) > 2 * block_size) {
    throw ConfigError("level " + std::to_string(level) + " is not available at block size " +
                      std::to_string(block_size));
  }
  // Merged levels alternate in parity, starting from even at level 1.
  const Parity parity = (level % 2 == 1) ? Parity::Even : Parity::Odd;
  const std::size_t index = static_cast<std::size_t>((level - 1) / 2);
  auto pairs = solve_parity(parity, block_size, index + 1, true, opts);
  return pairs[index];
}

}  // namespace cauchywell
