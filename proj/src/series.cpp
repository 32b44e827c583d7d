#include "torvex/series.hpp"

namespace torvex {

SeriesQ specialize_series(const SeriesF& s, const std::array<Rat, NVAR>& vals) {
  SeriesQ r(s.order());
  for (int d = 0; d <= s.order(); ++d) r.c[d] = s.c[d].specialize(vals);
  return r;
}

}  // namespace torvex
