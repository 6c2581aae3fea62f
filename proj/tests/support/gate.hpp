#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locnil/field.hpp"

namespace locnil::testing {

// One determinant criterion compared against a brute-force search.
struct GateTally {
  std::string criterion;
  std::uint64_t checked = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t undecided = 0;
  std::string first_disagreement;
};

struct GateSizes {
  std::size_t diagonal_pairs = 400;  // exhaustive when the pair count is at most this
  std::size_t monomial_pairs = 200;
  std::size_t delta_pairs = 200;
  std::size_t primitivity_samples = 120;
  std::size_t primitive_pairs = 40;
};

std::vector<GateTally> run_gate(unsigned q, const Field& f, std::uint64_t seed, const GateSizes& sizes = {});

}  // namespace locnil::testing
