// Truncated power series in the Kähler variable z. The coefficient type is
// either RatFun (symbolic mode) or Rat (specialized-exact mode); truncation
// order is tracked conservatively through arithmetic.
#pragma once

#include "torvex/ratfun.hpp"

namespace torvex {

template <class C>
struct Series {
  std::vector<C> c;  // c[d] = coefficient of z^d; order = c.size()-1

  Series() = default;
  explicit Series(int order) : c(order + 1) {}
  int order() const { return (int)c.size() - 1; }

  static Series constant(const C& v, int order) {
    Series s(order);
    s.c[0] = v;
    return s;
  }

  Series operator+(const Series& o) const {
    Series r(std::min(order(), o.order()));
    for (int d = 0; d <= r.order(); ++d) r.c[d] = c[d] + o.c[d];
    return r;
  }
  Series operator-(const Series& o) const {
    Series r(std::min(order(), o.order()));
    for (int d = 0; d <= r.order(); ++d) r.c[d] = c[d] - o.c[d];
    return r;
  }
  Series operator*(const Series& o) const {
    Series r(std::min(order(), o.order()));
    for (int d = 0; d <= r.order(); ++d)
      for (int j = 0; j <= d; ++j) r.c[d] = r.c[d] + c[j] * o.c[d - j];
    return r;
  }
  Series scale(const C& v) const {
    Series r = *this;
    for (auto& x : r.c) x = x * v;
    return r;
  }
  // z -> gamma*z : multiplies the z^d coefficient by gamma^d.
  Series shift_z(const C& gamma) const {
    Series r = *this;
    C g = gamma;
    for (int d = 1; d <= order(); ++d) {
      r.c[d] = r.c[d] * g;
      if (d < order()) g = g * gamma;
    }
    return r;
  }
  // Multiplicative inverse; c[0] must be invertible.
  Series inverse() const {
    Series r(order());
    r.c[0] = inv_of(c[0]);
    for (int d = 1; d <= order(); ++d) {
      C acc{};
      for (int j = 1; j <= d; ++j) acc = acc + c[j] * r.c[d - j];
      r.c[d] = C{} - acc * r.c[0];
    }
    return r;
  }

 private:
  static C inv_of(const C& v);
};

template <>
inline RatFun Series<RatFun>::inv_of(const RatFun& v) {
  return v.inv();
}
template <>
inline Rat Series<Rat>::inv_of(const Rat& v) {
  if (v == 0) throw std::domain_error("Series: constant term is zero");
  return 1 / v;
}

using SeriesF = Series<RatFun>;
using SeriesQ = Series<Rat>;

// Specializes every coefficient.
SeriesQ specialize_series(const SeriesF& s, const std::array<Rat, NVAR>& vals);

}  // namespace torvex
