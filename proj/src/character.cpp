#include "torvex/character.hpp"

namespace torvex {

void Character::add(const Mono& m, int mult) {
  if (!mult) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, mult);
  } else {
    it->second += mult;
    if (!it->second) t_.erase(it);
  }
}

Character Character::operator+(const Character& o) const {
  Character r = *this;
  for (const auto& [m, k] : o.t_) r.add(m, k);
  return r;
}

Character Character::operator-(const Character& o) const {
  Character r = *this;
  for (const auto& [m, k] : o.t_) r.add(m, -k);
  return r;
}

Character Character::operator*(const Character& o) const {
  Character r;
  for (const auto& [m1, k1] : t_)
    for (const auto& [m2, k2] : o.t_) r.add(m1 * m2, k1 * k2);
  return r;
}

Character Character::dual() const {
  Character r;
  for (const auto& [m, k] : t_) r.t_.emplace(m.inv(), k);
  return r;
}

Character Character::mul_mono(const Mono& m) const {
  Character r;
  for (const auto& [tm, k] : t_) r.t_.emplace(tm * m, k);
  return r;
}

Character Character::scale(int k) const {
  Character r;
  if (!k) return r;
  for (const auto& [m, mult] : t_) r.t_.emplace(m, mult * k);
  return r;
}

int Character::dim() const {
  int s = 0;
  for (const auto& [m, k] : t_) s += k;
  return s;
}

std::string Character::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [m, k] : t_) {
    if (!s.empty()) s += " + ";
    if (k != 1) s += std::to_string(k) + "*";
    s += m.str();
  }
  return s;
}

RatFun roof_hat(const Character& c) {
  if (c.has_constant_term()) throw ConstantTermPresent();
  RatFun r = RatFun::one();
  for (const auto& [m, mult] : c.terms()) {
    Mono h = m.halve();
    Poly edge = Poly::monomial(h) - Poly::monomial(h.inv());
    r *= RatFun::from_poly(edge).pow(-mult);
  }
  return r;
}

}  // namespace torvex
