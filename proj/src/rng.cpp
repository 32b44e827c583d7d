#include "torvex/rng.hpp"

#include <algorithm>

namespace torvex {

namespace {
constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                           47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107};
}

std::array<Rat, NVAR> SpecDraw::draw(const std::vector<int>& vars) {
  std::array<Rat, NVAR> vals;
  vals.fill(Rat(1));
  std::vector<int> pool(std::begin(kPrimes), std::end(kPrimes));
  std::shuffle(pool.begin(), pool.end(), rng_);
  size_t i = 0;
  for (int v : vars) {
    // prime ratio p/q, guaranteed != 0, +-1, distinct across variables
    Rat val(pool[2 * i], pool[2 * i + 1]);
    vals[v] = val;
    ++i;
    if (2 * i + 1 >= pool.size()) {
      std::shuffle(pool.begin(), pool.end(), rng_);
      i = 0;
    }
  }
  return vals;
}

std::array<Rat, NVAR> SpecDraw::draw_params(int rank, bool with_aaux, bool with_z) {
  std::vector<int> vars = {VT1, VT2, VQ};
  for (int i = 1; i <= rank; ++i) vars.push_back(var_a(i));
  if (with_aaux) vars.push_back(VAAUX);
  if (with_z) vars.push_back(VZ);
  return draw(vars);
}

}  // namespace torvex
