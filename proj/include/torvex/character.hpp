// Virtual T-module characters: finite formal sums of weight monomials with
// integer multiplicities. Weights are Laurent monomials in t1,t2,q,a_i, i.e.
// even exponent vectors in the square-root variables.
#pragma once

#include "torvex/partition.hpp"
#include "torvex/ratfun.hpp"

namespace torvex {

struct ConstantTermPresent : std::runtime_error {
  ConstantTermPresent() : std::runtime_error("roof function of a character with constant term") {}
};

class Character {
 public:
  using Terms = std::map<Mono, int>;

  Character() = default;
  static Character weight(const Mono& m, int mult = 1) {
    Character c;
    c.add(m, mult);
    return c;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  void add(const Mono& m, int mult);

  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character operator*(const Character& o) const;  // tensor product
  Character& operator+=(const Character& o) { return *this = *this + o; }
  Character& operator-=(const Character& o) { return *this = *this - o; }
  bool operator==(const Character& o) const { return t_ == o.t_; }

  // K-theoretic dual: inverts every weight.
  Character dual() const;
  Character mul_mono(const Mono& m) const;
  Character scale(int k) const;

  bool has_constant_term() const { return t_.count(Mono::one()) > 0; }
  // Sum of multiplicities (virtual dimension).
  int dim() const;

  std::string str() const;

 private:
  Terms t_;
};

// Multiplicative roof: a-hat(w)^m over terms, a-hat(x) = 1/(x^{1/2}-x^{-1/2}).
// Requires no constant term (each weight must have even exponents).
RatFun roof_hat(const Character& c);

}  // namespace torvex
