#include "torvex/ratfun.hpp"

#include <algorithm>

namespace torvex {

RatFun RatFun::monomial(const Mono& m, const Rat& c) {
  RatFun r(c);
  if (c != 0) r.m_ = m;
  return r;
}

RatFun RatFun::from_poly(const Poly& p) {
  RatFun r;
  if (p.is_zero()) return r;
  r.c_ = 1;
  r.push_factor(p, 1);
  return r;
}

// Canonicalizes p (content and leading coefficient pulled into c_/m_) and
// merges it into the factor list.
void RatFun::push_factor(Poly p, int e) {
  if (e == 0) return;
  Mono cm = p.content_mono();
  if (!cm.is_one()) p = p.mul_mono(cm.inv());
  Rat lc = p.leading().second;
  if (lc != 1) p = Rat(1 / lc) * p;
  c_ *= rat_pow(lc, e);
  m_ = m_ * cm.pow(e);
  if (p.is_one()) return;
  auto it = std::lower_bound(
      f_.begin(), f_.end(), p,
      [](const std::pair<Poly, int>& a, const Poly& b) { return Poly::cmp(a.first, b) < 0; });
  if (it != f_.end() && Poly::cmp(it->first, p) == 0) {
    it->second += e;
    if (it->second == 0) f_.erase(it);
  } else {
    f_.insert(it, {std::move(p), e});
  }
}

// Trial-division cancellation between numerator and denominator factors.
void RatFun::cancel() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < f_.size() && !changed; ++i) {
      if (f_[i].second <= 0) continue;
      for (size_t j = 0; j < f_.size() && !changed; ++j) {
        if (f_[j].second >= 0) continue;
        Poly q;
        if (f_[i].first.try_divide(f_[j].first, q)) {
          Poly num = f_[i].first, den = f_[j].first;
          int k = std::min(f_[i].second, -f_[j].second);
          // replace num^k/den^k by q^k
          f_[i].second -= k;
          f_[j].second += k;
          std::erase_if(f_, [](const auto& pe) { return pe.second == 0; });
          push_factor(q, k);
          changed = true;
        }
      }
    }
  }
}

RatFun RatFun::operator*(const RatFun& o) const {
  RatFun r;
  if (is_zero() || o.is_zero()) return r;
  r.c_ = c_ * o.c_;
  r.m_ = m_ * o.m_;
  r.f_ = f_;
  for (const auto& [p, e] : o.f_) r.push_factor(p, e);
  r.cancel();
  return r;
}

RatFun RatFun::inv() const {
  if (is_zero()) throw std::domain_error("RatFun::inv: zero");
  RatFun r;
  r.c_ = 1 / c_;
  r.m_ = m_.inv();
  r.f_ = f_;
  for (auto& [p, e] : r.f_) e = -e;
  return r;
}

RatFun RatFun::pow(int k) const {
  if (k == 0) return one();
  if (is_zero()) {
    if (k < 0) throw std::domain_error("RatFun::pow: zero to negative power");
    return zero();
  }
  RatFun r;
  r.c_ = rat_pow(c_, k);
  r.m_ = m_.pow(k);
  r.f_ = f_;
  for (auto& [p, e] : r.f_) e *= k;
  return r;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.c_ = -r.c_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // Shared part: min of exponents per factor, componentwise min of monomials.
  RatFun common;
  common.c_ = 1;
  for (int v = 0; v < NVAR; ++v) common.m_.e[v] = std::min(m_.e[v], o.m_.e[v]);
  std::vector<std::pair<Poly, int>> ra, rb;
  size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    int c = i == f_.size() ? 1 : j == o.f_.size() ? -1 : Poly::cmp(f_[i].first, o.f_[j].first);
    if (c < 0) {
      if (f_[i].second < 0) {
        // a's denominator factor: goes to the common denominator, and the
        // other summand picks up the compensating positive power.
        common.f_.push_back(f_[i]);
        rb.push_back({f_[i].first, -f_[i].second});
      } else {
        ra.push_back(f_[i]);
      }
      ++i;
    } else if (c > 0) {
      if (o.f_[j].second < 0) {
        common.f_.push_back(o.f_[j]);
        ra.push_back({o.f_[j].first, -o.f_[j].second});
      } else {
        rb.push_back(o.f_[j]);
      }
      ++j;
    } else {
      int mn = std::min(f_[i].second, o.f_[j].second);
      common.f_.push_back({f_[i].first, mn});
      if (f_[i].second > mn) ra.push_back({f_[i].first, f_[i].second - mn});
      if (o.f_[j].second > mn) rb.push_back({o.f_[j].first, o.f_[j].second - mn});
      ++i, ++j;
    }
  }
  auto expand_residue = [](const Rat& c, const Mono& m, const std::vector<std::pair<Poly, int>>& fs) {
    Poly p = Poly::monomial(m, c);
    for (const auto& [f, e] : fs) p *= f.pow(e);
    return p;
  };
  Poly s = expand_residue(c_, m_ / common.m_, ra) + expand_residue(o.c_, o.m_ / common.m_, rb);
  if (s.is_zero()) return zero();
  RatFun r = common;
  r.push_factor(s, 1);
  r.cancel();
  return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

Poly RatFun::expand() const {
  Poly p = Poly::monomial(m_, c_);
  for (const auto& [f, e] : f_) {
    if (e < 0) throw std::domain_error("RatFun::expand: negative factor exponent");
    p *= f.pow(e);
  }
  return p;
}

std::pair<Poly, Poly> RatFun::num_den() const {
  Poly num = Poly::monomial(m_, c_);
  Poly den(Rat(1));
  for (const auto& [f, e] : f_) {
    if (e > 0)
      num *= f.pow(e);
    else
      den *= f.pow(-e);
  }
  return {num, den};
}

Rat RatFun::specialize(const std::array<Rat, NVAR>& vals) const {
  if (is_zero()) return Rat(0);
  for (const auto& [f, e] : f_)
    if (e < 0 && f.eval(vals) == 0) throw DenominatorVanishes();
  Rat r = c_;
  for (int v = 0; v < NVAR; ++v)
    if (m_.e[v]) {
      if (vals[v] == 0 && m_.e[v] < 0) throw DenominatorVanishes();
      r *= rat_pow(vals[v], m_.e[v]);
    }
  for (const auto& [f, e] : f_) r *= rat_pow(f.eval(vals), e);
  return r;
}

std::pair<int, RatFun> RatFun::lowest_term(int v) const {
  if (is_zero()) throw ZeroInput();
  // Factors are content-free, so each has a nonzero v^0 slice; the valuation
  // is carried entirely by the monomial part.
  RatFun g;
  g.c_ = c_;
  g.m_ = m_;
  g.m_.e[v] = 0;
  for (const auto& [f, e] : f_) {
    if (!f.depends_on(v))
      g.push_factor(f, e);
    else
      g.push_factor(f.coeff_of(v, 0), e);
  }
  g.cancel();
  return {m_.e[v], g};
}

RatFun RatFun::remap(const std::array<Mono, NVAR>& images) const {
  if (is_zero()) return zero();
  RatFun r;
  r.c_ = c_;
  r.m_ = Mono::one();
  r.push_factor(Poly::monomial(m_).remap(images), 1);
  for (const auto& [f, e] : f_) r.push_factor(f.remap(images), e);
  r.cancel();
  return r;
}

bool RatFun::depends_on(int v) const {
  if (m_.e[v]) return true;
  for (const auto& [f, e] : f_)
    if (f.depends_on(v)) return true;
  return false;
}

std::vector<RatFun> RatFun::series_in_z(int order) const {
  auto [num, den] = num_den();
  int dmin = den.min_exp(VZ);
  // make den(0) the valuation slice
  num = num.mul_mono(Mono::var(VZ, -dmin));
  den = den.mul_mono(Mono::var(VZ, -dmin));
  if (num.min_exp(VZ) < 0 && !num.is_zero())
    throw std::domain_error("series_in_z: pole at z=0");
  RatFun d0 = from_poly(den.coeff_of(VZ, 0));
  if (d0.is_zero()) throw std::domain_error("series_in_z: denominator vanishes at z=0");
  std::vector<RatFun> s(order + 1, RatFun::zero());
  for (int k = 0; k <= order; ++k) {
    RatFun acc = from_poly(num.coeff_of(VZ, k));
    for (int j = 1; j <= k; ++j) {
      RatFun dj = from_poly(den.coeff_of(VZ, j));
      if (!dj.is_zero() && !s[k - j].is_zero()) acc -= dj * s[k - j];
    }
    s[k] = acc / d0;
  }
  return s;
}

std::string RatFun::str() const {
  auto [num, den] = num_den();
  if (den.is_one()) return num.str();
  return "(" + num.str() + ") / (" + den.str() + ")";
}

}  // namespace torvex
