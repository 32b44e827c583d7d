// Rational reconstruction from truncated series over exact rationals.
#pragma once

#include "torvex/series.hpp"

namespace torvex {

struct PadeResult {
  bool ok = false;
  std::vector<Rat> p;  // numerator, degree <= m
  std::vector<Rat> q;  // denominator, q[0] = 1, degree <= n
  // Expands p/q to the given order.
  SeriesQ expand(int order) const;
  std::string str() const;
};

// Fits p/q with deg p <= m, deg q <= n, q(0)=1, matching s through order m+n.
// Requires s.order() >= m+n (InsufficientOrder otherwise). Returns ok=false
// when the linear system is inconsistent.
struct InsufficientOrder : std::runtime_error {
  InsufficientOrder() : std::runtime_error("series order too small for requested degrees") {}
};
PadeResult pade_reconstruct(const SeriesQ& s, int m, int n);

}  // namespace torvex
