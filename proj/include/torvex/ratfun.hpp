// Exact rational functions in the square-root parameter ring.
//
// Values are kept in multiplicative normal form
//     c * x^m * prod_i f_i^{e_i},   e_i in Z \ {0},
// where each factor f_i is a canonical polynomial (monomial content stripped,
// lexicographically-leading coefficient 1, factors sorted and distinct).
// Products, inverses and a->0 leading terms are cheap in this form; sums
// expand only the non-shared residue factors. No multivariate gcd is ever
// computed: cancellation is monomial content plus trial division, and value
// identity is decided by exact subtraction (or randomized specialization for
// large objects).
#pragma once

#include "torvex/poly.hpp"

namespace torvex {

struct DenominatorVanishes : std::runtime_error {
  DenominatorVanishes() : std::runtime_error("denominator vanishes at specialization") {}
};
struct ZeroInput : std::runtime_error {
  ZeroInput() : std::runtime_error("zero input") {}
};

class RatFun {
 public:
  RatFun() : c_(0) {}
  explicit RatFun(const Rat& c) : c_(c) {}
  explicit RatFun(long c) : c_(c) {}

  static RatFun zero() { return RatFun(); }
  static RatFun one() { return RatFun(Rat(1)); }
  static RatFun monomial(const Mono& m, const Rat& c = Rat(1));
  static RatFun variable(int v, int k = 1) { return monomial(Mono::var(v, k)); }
  static RatFun from_poly(const Poly& p);

  bool is_zero() const { return c_ == 0; }
  bool is_one() const { return c_ == 1 && m_.is_one() && f_.empty(); }
  // True when the value is a pure monomial c*x^m.
  bool is_monomial() const { return f_.empty(); }
  const Rat& coeff() const { return c_; }
  const Mono& mono() const { return m_; }
  const std::vector<std::pair<Poly, int>>& factors() const { return f_; }

  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const { return *this * o.inv(); }
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun inv() const;
  RatFun pow(int k) const;

  // Exact value identity (expands the difference).
  bool equals(const RatFun& o) const { return (*this - o).is_zero(); }

  // Multiplies out; requires all factor exponents >= 0.
  Poly expand() const;
  // (numerator, denominator): denominator is a canonical polynomial with
  // content 0 and leading coefficient 1; numerator may be Laurent.
  std::pair<Poly, Poly> num_den() const;

  // Exact evaluation; throws DenominatorVanishes when a denominator factor
  // vanishes at the assignment.
  Rat specialize(const std::array<Rat, NVAR>& vals) const;

  // f = var^e * (g + O(var)) with g free of var; returns (e, g).
  // Throws ZeroInput on 0.
  std::pair<int, RatFun> lowest_term(int v) const;

  // Monomial substitution applied to every factor (used for the splitting
  // substitution a_j -> a*a_j and Kähler shifts z -> c*z).
  RatFun remap(const std::array<Mono, NVAR>& images) const;

  // Power-series expansion in Z to order D; requires the denominator to be
  // nonvanishing at Z=0. Coefficients are Z-free.
  std::vector<RatFun> series_in_z(int order) const;

  bool depends_on(int v) const;

  std::string str() const;

 private:
  void push_factor(Poly p, int e);
  void cancel();

  Rat c_;
  Mono m_;
  std::vector<std::pair<Poly, int>> f_;
};

inline RatFun operator*(const Rat& c, const RatFun& f) { return RatFun(c) * f; }

}  // namespace torvex
