// Sparse multivariate Laurent polynomials over arbitrary-precision rationals.
//
// All equivariant parameters live in square-root variables so that every
// half-integer power appearing in the localization formulas becomes an
// integer exponent here:
//   T1 = t1^{1/2}, T2 = t2^{1/2}, Q = q^{1/2}, Ai = a_i^{1/2},
//   Aaux = a^{1/2} (splitting-torus parameter), Z = the Kähler variable.
// hbar is not a variable: hbar^{1/2} = T1*T2 identically.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace torvex {

using Rat = mpq_class;

std::string rat_str(const Rat& r);

enum Var : int {
  VT1 = 0,
  VT2 = 1,
  VQ = 2,
  VA1 = 3,  // A1..A8 occupy indices 3..10
  VAAUX = 11,
  VZ = 12,
};
constexpr int NVAR = 13;
constexpr int MAX_RANK = 8;

inline int var_a(int i) {
  if (i < 1 || i > MAX_RANK) throw std::out_of_range("framing index out of range");
  return VA1 + (i - 1);
}
std::string var_name(int v);

// Exponent vector of a Laurent monomial.
struct Mono {
  std::array<int32_t, NVAR> e{};

  static Mono one() { return Mono{}; }
  static Mono var(int v, int k = 1) {
    Mono m;
    m.e[v] = k;
    return m;
  }
  bool is_one() const {
    for (int v = 0; v < NVAR; ++v)
      if (e[v]) return false;
    return true;
  }
  Mono operator*(const Mono& o) const {
    Mono m;
    for (int v = 0; v < NVAR; ++v) m.e[v] = e[v] + o.e[v];
    return m;
  }
  Mono operator/(const Mono& o) const {
    Mono m;
    for (int v = 0; v < NVAR; ++v) m.e[v] = e[v] - o.e[v];
    return m;
  }
  Mono inv() const {
    Mono m;
    for (int v = 0; v < NVAR; ++v) m.e[v] = -e[v];
    return m;
  }
  Mono pow(int k) const {
    Mono m;
    for (int v = 0; v < NVAR; ++v) m.e[v] = e[v] * k;
    return m;
  }
  // Exact square root; exponents must all be even.
  Mono halve() const {
    Mono m;
    for (int v = 0; v < NVAR; ++v) {
      if (e[v] % 2 != 0) throw std::domain_error("Mono::halve: odd exponent");
      m.e[v] = e[v] / 2;
    }
    return m;
  }
  auto operator<=>(const Mono& o) const = default;
  std::string str() const;
};

// Canonical form: no zero coefficients, terms ordered lexicographically on
// exponent vectors (the fixed term order of the whole library).
class Poly {
 public:
  using Terms = std::map<Mono, Rat>;

  Poly() = default;
  explicit Poly(const Rat& c) {
    if (c != 0) t_[Mono::one()] = c;
  }
  explicit Poly(long c) : Poly(Rat(c)) {}
  static Poly monomial(const Mono& m, const Rat& c = Rat(1)) {
    Poly p;
    if (c != 0) p.t_[m] = c;
    return p;
  }
  static Poly variable(int v, int k = 1) { return monomial(Mono::var(v, k)); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_.begin()->first.is_one() && t_.begin()->second == 1; }
  bool is_monomial() const { return t_.size() == 1; }
  size_t size() const { return t_.size(); }

  void add_term(const Mono& m, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return t_ == o.t_; }

  Poly mul_mono(const Mono& m, const Rat& c = Rat(1)) const;
  Poly pow(int k) const;  // k >= 0

  // Lexicographically largest term.
  const std::pair<const Mono, Rat>& leading() const;
  // Componentwise minimum of exponent vectors over all terms.
  Mono content_mono() const;
  int min_exp(int v) const;
  int max_exp(int v) const;
  bool depends_on(int v) const;

  // Exact division; returns false if o does not divide *this.
  bool try_divide(const Poly& o, Poly& quotient) const;

  // Slice of terms with exponent k in variable v (exponent removed).
  Poly coeff_of(int v, int k) const;

  // Substitute variable v by the rational value val (v must have
  // non-negative... any integer exponents are fine since val != 0).
  Poly eval_var(int v, const Rat& val) const;
  // Full evaluation. vals[v] must be nonzero for every variable present.
  Rat eval(const std::array<Rat, NVAR>& vals) const;

  // Monomial substitution: each variable v picks up extra exponents
  // shift[v] * (its own exponent); used e.g. for a_j -> a*a_j and z -> c*z.
  Poly remap(const std::array<Mono, NVAR>& images) const;

  // Total ordering for canonical factor lists.
  static int cmp(const Poly& a, const Poly& b);

  std::string str() const;

 private:
  Terms t_;
};

Poly operator*(const Rat& c, const Poly& p);

inline Rat rat_pow(const Rat& b, int e) {
  Rat r;
  if (e >= 0) {
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
  } else {
    if (b == 0) throw std::domain_error("rat_pow: 0^negative");
    mpz_pow_ui(r.get_num_mpz_t(), b.get_den_mpz_t(), -e);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_num_mpz_t(), -e);
  }
  r.canonicalize();
  return r;
}

}  // namespace torvex
