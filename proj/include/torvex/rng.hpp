// Seeded random specializations: distinct small primes / prime ratios per
// variable, rejectable and reproducible.
#pragma once

#include "torvex/poly.hpp"

#include <random>

namespace torvex {

class SpecDraw {
 public:
  explicit SpecDraw(uint64_t seed) : rng_(seed) {}

  // Fresh assignment for the given variables (others get 1).
  std::array<Rat, NVAR> draw(const std::vector<int>& vars);
  // Convenience: T1, T2, Q plus A1..Ar (and optionally Aaux / Z).
  std::array<Rat, NVAR> draw_params(int rank, bool with_aaux = false, bool with_z = false);

  uint64_t next() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace torvex
