#include "torvex/poly.hpp"

#include <sstream>

namespace torvex {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

std::string var_name(int v) {
  switch (v) {
    case VT1: return "T1";
    case VT2: return "T2";
    case VQ: return "Q";
    case VAAUX: return "Aaux";
    case VZ: return "Z";
    default: return "A" + std::to_string(v - VA1 + 1);
  }
}

std::string Mono::str() const {
  std::string s;
  for (int v = 0; v < NVAR; ++v) {
    if (!e[v]) continue;
    if (!s.empty()) s += "*";
    s += var_name(v) + "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly operator*(const Rat& c, const Poly& p) {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, pc] : p.terms()) r.add_term(m, c * pc);
  return r;
}

Poly Poly::mul_mono(const Mono& m, const Rat& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [tm, tc] : t_) r.add_term(tm * m, tc * c);
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::domain_error("Poly::pow: negative exponent");
  Poly r(Rat(1));
  Poly b = *this;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

const std::pair<const Mono, Rat>& Poly::leading() const {
  if (t_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
  return *t_.rbegin();
}

Mono Poly::content_mono() const {
  if (t_.empty()) return Mono::one();
  Mono m = t_.begin()->first;
  for (const auto& [tm, c] : t_)
    for (int v = 0; v < NVAR; ++v) m.e[v] = std::min(m.e[v], tm.e[v]);
  return m;
}

int Poly::min_exp(int v) const {
  if (t_.empty()) return 0;
  int r = t_.begin()->first.e[v];
  for (const auto& [m, c] : t_) r = std::min(r, (int)m.e[v]);
  return r;
}

int Poly::max_exp(int v) const {
  if (t_.empty()) return 0;
  int r = t_.begin()->first.e[v];
  for (const auto& [m, c] : t_) r = std::max(r, (int)m.e[v]);
  return r;
}

bool Poly::depends_on(int v) const {
  for (const auto& [m, c] : t_)
    if (m.e[v]) return true;
  return false;
}

bool Poly::try_divide(const Poly& o, Poly& quotient) const {
  if (o.is_zero()) throw std::domain_error("Poly::try_divide: zero divisor");
  if (is_zero()) {
    quotient = Poly();
    return true;
  }
  // As Laurent polynomials, divisibility only concerns the polynomial parts:
  // strip monomial content from both sides and reattach the difference.
  Mono cf = content_mono(), co = o.content_mono();
  Poly f = mul_mono(cf.inv());
  Poly d = o.mul_mono(co.inv());
  Poly rem = f, q;
  const auto& [lm, lc] = d.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    Mono qm = rm / lm;
    for (int v = 0; v < NVAR; ++v)
      if (qm.e[v] < 0) return false;
    Rat qc = rc / lc;
    q.add_term(qm, qc);
    rem -= d.mul_mono(qm, qc);
  }
  quotient = q.mul_mono(cf / co);
  return true;
}

Poly Poly::coeff_of(int v, int k) const {
  Poly r;
  for (const auto& [m, c] : t_) {
    if (m.e[v] == k) {
      Mono m2 = m;
      m2.e[v] = 0;
      r.add_term(m2, c);
    }
  }
  return r;
}

Poly Poly::eval_var(int v, const Rat& val) const {
  Poly r;
  for (const auto& [m, c] : t_) {
    Mono m2 = m;
    m2.e[v] = 0;
    r.add_term(m2, c * rat_pow(val, m.e[v]));
  }
  return r;
}

Rat Poly::eval(const std::array<Rat, NVAR>& vals) const {
  Rat r = 0;
  for (const auto& [m, c] : t_) {
    Rat term = c;
    for (int v = 0; v < NVAR; ++v)
      if (m.e[v]) term *= rat_pow(vals[v], m.e[v]);
    r += term;
  }
  return r;
}

Poly Poly::remap(const std::array<Mono, NVAR>& images) const {
  Poly r;
  for (const auto& [m, c] : t_) {
    Mono m2 = Mono::one();
    for (int v = 0; v < NVAR; ++v)
      if (m.e[v]) m2 = m2 * images[v].pow(m.e[v]);
    r.add_term(m2, c);
  }
  return r;
}

int Poly::cmp(const Poly& a, const Poly& b) {
  auto ia = a.t_.begin(), ib = b.t_.begin();
  for (; ia != a.t_.end() && ib != b.t_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = ::cmp(ia->second, ib->second);
    if (c) return c < 0 ? -1 : 1;
  }
  if (ia != a.t_.end()) return 1;
  if (ib != b.t_.end()) return -1;
  return 0;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : t_) {
    if (!s.empty()) s += " + ";
    s += rat_str(c);
    if (!m.is_one()) s += "*" + m.str();
  }
  return s;
}

}  // namespace torvex
