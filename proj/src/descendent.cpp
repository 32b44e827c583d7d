#include "torvex/descendent.hpp"

namespace torvex {

Descendent Descendent::one() { return Descendent(); }

Descendent Descendent::p(int k) {
  if (k == 0) throw std::invalid_argument("p[0] is not a generator");
  Descendent d;
  d.kind_ = Kind::P;
  d.index_ = k;
  return d;
}

Descendent Descendent::e(int k) {
  if (k < 0) throw std::invalid_argument("e[k] needs k >= 0");
  Descendent d;
  d.kind_ = Kind::E;
  d.index_ = k;
  return d;
}

Descendent Descendent::s(Partition lambda) {
  Descendent d;
  d.kind_ = Kind::S;
  d.lambda_ = std::move(lambda);
  return d;
}

Descendent Descendent::mul(Descendent a, Descendent b) {
  Descendent d;
  d.kind_ = Kind::Mul;
  d.child_.push_back(std::make_shared<Descendent>(std::move(a)));
  d.child_.push_back(std::make_shared<Descendent>(std::move(b)));
  return d;
}

Descendent Descendent::add(Descendent a, Descendent b) {
  Descendent d;
  d.kind_ = Kind::Add;
  d.child_.push_back(std::make_shared<Descendent>(std::move(a)));
  d.child_.push_back(std::make_shared<Descendent>(std::move(b)));
  return d;
}

Descendent Descendent::neg(Descendent a) {
  Descendent d;
  d.kind_ = Kind::Neg;
  d.child_.push_back(std::make_shared<Descendent>(std::move(a)));
  return d;
}

bool Descendent::is_polynomial() const {
  switch (kind_) {
    case Kind::P: return index_ > 0;
    case Kind::One:
    case Kind::E:
    case Kind::S: return true;
    default:
      for (const auto& c : child_)
        if (!c->is_polynomial()) return false;
      return true;
  }
}

namespace {

// Complete homogeneous h_0..h_max of the given values via the generating
// recurrence prod 1/(1-x_i t).
std::vector<RatFun> complete_homogeneous(const std::vector<RatFun>& x, int max) {
  std::vector<RatFun> h(max + 1, RatFun::zero());
  h[0] = RatFun::one();
  for (int m = 1; m <= max; ++m) {
    // Newton-style recurrence m*h_m = sum_{k=1}^{m} p_k h_{m-k}
    RatFun acc;
    for (int k = 1; k <= m; ++k) {
      RatFun pk;
      for (const auto& v : x) pk += v.pow(k);
      acc += pk * h[m - k];
    }
    h[m] = Rat(1, m) * acc;
  }
  return h;
}

}  // namespace

RatFun Descendent::eval(const std::vector<RatFun>& roots) const {
  switch (kind_) {
    case Kind::One:
      return RatFun::one();
    case Kind::P: {
      RatFun r;
      for (const auto& v : roots) r += v.pow(index_);
      return r;
    }
    case Kind::E: {
      int k = index_;
      if (k > (int)roots.size()) return RatFun::zero();
      // DP over prod (1 + x_i t), tracking coefficients up to t^k
      std::vector<RatFun> ek(k + 1, RatFun::zero());
      ek[0] = RatFun::one();
      for (const auto& v : roots)
        for (int j = std::min<int>(k, 1 + (&v - roots.data())); j >= 1; --j) ek[j] += v * ek[j - 1];
      return ek[k];
    }
    case Kind::S: {
      // Jacobi-Trudi: det(h_{lambda_i - i + j}).
      int l = lambda_.length();
      if (l == 0) return RatFun::one();
      int maxh = lambda_.parts[0] + l;
      auto h = complete_homogeneous(roots, maxh);
      auto hval = [&](int m) { return m < 0 ? RatFun::zero() : m <= maxh ? h[m] : RatFun::zero(); };
      // dense determinant by expansion (l <= ~4 in practice)
      std::vector<std::vector<RatFun>> M(l, std::vector<RatFun>(l));
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) M[i][j] = hval(lambda_.parts[i] - (i + 1) + (j + 1));
      // Laplace expansion
      std::vector<int> cols(l);
      for (int j = 0; j < l; ++j) cols[j] = j;
      auto det = [&](auto&& self, std::vector<int>& cs, int row) -> RatFun {
        if (cs.empty()) return RatFun::one();
        RatFun acc;
        for (size_t i = 0; i < cs.size(); ++i) {
          int c = cs[i];
          std::vector<int> rest;
          for (size_t j = 0; j < cs.size(); ++j)
            if (j != i) rest.push_back(cs[j]);
          RatFun sub = M[row][c] * self(self, rest, row + 1);
          if (i % 2)
            acc -= sub;
          else
            acc += sub;
        }
        return acc;
      };
      return det(det, cols, 0);
    }
    case Kind::Mul:
      return child_[0]->eval(roots) * child_[1]->eval(roots);
    case Kind::Add:
      return child_[0]->eval(roots) + child_[1]->eval(roots);
    case Kind::Neg:
      return -child_[0]->eval(roots);
  }
  throw std::logic_error("unreachable");
}

std::string Descendent::str() const {
  switch (kind_) {
    case Kind::One:
      return "1";
    case Kind::P:
      return "p[" + std::to_string(index_) + "]";
    case Kind::E:
      return "e[" + std::to_string(index_) + "]";
    case Kind::S:
      return "s[" + lambda_.str() + "]";
    case Kind::Mul:
      return child_[0]->str() + "*" + child_[1]->str();
    case Kind::Add:
      return "(" + child_[0]->str() + "+" + child_[1]->str() + ")";
    case Kind::Neg:
      return "-" + child_[0]->str();
  }
  return "?";
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  void ws() {
    while (i < s.size() && isspace((unsigned char)s[i])) ++i;
  }
  bool peek(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", i);
  }
  int integer() {
    ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && isdigit((unsigned char)s[i])) ++i;
    if (i == start) throw SyntaxError("expected integer", i);
    return std::stoi(s.substr(start, i - start));
  }

  // sum := product (('+'|'-') product)*
  Descendent sum() {
    Descendent acc = product();
    while (true) {
      if (eat('+')) {
        acc = Descendent::add(std::move(acc), product());
      } else if (peek('-')) {
        // binary minus: a - b == a + (-b)
        ++i;
        acc = Descendent::add(std::move(acc), Descendent::neg(product()));
      } else {
        break;
      }
    }
    return acc;
  }
  // product := atom ('*' atom)*
  Descendent product() {
    Descendent acc = atom();
    while (eat('*')) acc = Descendent::mul(std::move(acc), atom());
    return acc;
  }
  Descendent atom() {
    ws();
    if (i >= s.size()) throw SyntaxError("unexpected end of input", i);
    char c = s[i];
    if (c == '-') {
      ++i;
      return Descendent::neg(atom());
    }
    if (c == '(') {
      ++i;
      Descendent d = sum();
      expect(')');
      return d;
    }
    if (c == '1') {
      ++i;
      return Descendent::one();
    }
    if (c == 'p' || c == 'e') {
      ++i;
      expect('[');
      int k = integer();
      expect(']');
      return c == 'p' ? Descendent::p(k) : Descendent::e(k);
    }
    if (c == 's') {
      ++i;
      expect('[');
      ws();
      size_t start = i;
      int depth = 1;
      expect('[');
      ++depth;
      // scan matching bracket of the partition literal
      while (i < s.size() && depth > 1) {
        if (s[i] == '[') ++depth;
        if (s[i] == ']') --depth;
        ++i;
      }
      if (depth != 1) throw SyntaxError("unterminated partition literal", i);
      Partition lam = parse_partition(s.substr(start, i - start));
      expect(']');
      return Descendent::s(std::move(lam));
    }
    throw SyntaxError("unexpected character", i);
  }
};

}  // namespace

Descendent parse_descendent(const std::string& text) {
  Parser p{text};
  Descendent d = p.sum();
  p.ws();
  if (p.i != text.size()) throw SyntaxError("trailing characters", p.i);
  return d;
}

}  // namespace torvex
