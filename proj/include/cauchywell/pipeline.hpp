#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cauchywell/eigensolver.hpp"
#include "cauchywell/galerkin.hpp"
#include "cauchywell/spectrum.hpp"

namespace cauchywell {

struct PipelineOptions {
  AssemblyOptions assembly{};
  EigenSolveOptions eigen{};
};

/// Assemble one parity block and return its `count` lowest pairs. With
/// `with_vectors` the full decomposition is computed and trimmed.
std::vector<EigenPair> solve_parity(Parity parity, std::size_t block_size, std::size_t count,
                                    bool with_vectors, const PipelineOptions& opts = {});

/// Both parities at `block_size`, merged into `levels` labelled levels.
SpectrumReport solve_spectrum(std::size_t block_size, std::size_t levels,
                              const PipelineOptions& opts = {});

/// As solve_spectrum, but restricted to one parity (std::nullopt = both).
SpectrumReport solve_spectrum(std::size_t block_size, std::size_t levels,
                              std::optional<Parity> parity, const PipelineOptions& opts = {});

/// Eigenpair (with vector) of merged level `level` (1-based).
EigenPair eigenpair_for_level(std::size_t block_size, int level, const PipelineOptions& opts = {});

}  // namespace cauchywell
