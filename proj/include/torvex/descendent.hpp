// Descendent insertions: symmetric Laurent polynomials in the tautological
// Chern roots, built from power sums, elementary symmetric functions, Schur
// polynomials and the constant 1.
//
// Grammar:  tau := "1" | "p[" int "]" | "e[" int "]" | "s[" partition "]"
//                | tau "*" tau | tau "+" tau | "-" tau | "(" tau ")"
#pragma once

#include "torvex/partition.hpp"
#include "torvex/ratfun.hpp"

#include <memory>

namespace torvex {

struct SyntaxError : std::runtime_error {
  size_t position;
  SyntaxError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

class Descendent {
 public:
  enum class Kind { One, P, E, S, Mul, Add, Neg };

  static Descendent one();
  static Descendent p(int k);
  static Descendent e(int k);
  static Descendent s(Partition lambda);
  static Descendent mul(Descendent a, Descendent b);
  static Descendent add(Descendent a, Descendent b);
  static Descendent neg(Descendent a);

  Kind kind() const { return kind_; }
  // True when no negative powers of the roots occur (polynomial descendent).
  bool is_polynomial() const;

  // Exact evaluation at the given root values (each value an invertible
  // monomial-valued RatFun).
  RatFun eval(const std::vector<RatFun>& roots) const;

  std::string str() const;

 private:
  Kind kind_ = Kind::One;
  int index_ = 0;
  Partition lambda_;
  std::vector<std::shared_ptr<const Descendent>> child_;
};

Descendent parse_descendent(const std::string& text);

}  // namespace torvex
