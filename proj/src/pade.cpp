#include "torvex/pade.hpp"

#include <sstream>

namespace torvex {

SeriesQ PadeResult::expand(int order) const {
  SeriesQ num(order), den(order);
  for (size_t i = 0; i < p.size() && (int)i <= order; ++i) num.c[i] = p[i];
  for (size_t i = 0; i < q.size() && (int)i <= order; ++i) den.c[i] = q[i];
  return num * den.inverse();
}

std::string PadeResult::str() const {
  auto poly = [](const std::vector<Rat>& v) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!first) os << " + ";
      os << rat_str(v[i]) << "*Z^" << i;
      first = false;
    }
    if (first) os << "0";
    return os.str();
  };
  return "(" + poly(p) + ") / (" + poly(q) + ")";
}

PadeResult pade_reconstruct(const SeriesQ& s, int m, int n) {
  if (s.order() < m + n) throw InsufficientOrder();
  PadeResult r;
  // Unknowns q_1..q_n from sum_{j=0}^{n} q_j s_{k-j} = 0 for m < k <= m+n.
  // Dense Gaussian elimination over Q.
  int rows = n, cols = n;
  std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(cols + 1, Rat(0)));
  auto sc = [&](int i) { return i >= 0 && i <= s.order() ? s.c[i] : Rat(0); };
  for (int r_ = 0; r_ < rows; ++r_) {
    int k = m + 1 + r_;
    for (int j = 1; j <= n; ++j) A[r_][j - 1] = sc(k - j);
    A[r_][cols] = -sc(k);
  }
  // eliminate
  std::vector<int> pivot_col(rows, -1);
  int prow = 0;
  for (int col = 0; col < cols && prow < rows; ++col) {
    int sel = -1;
    for (int i = prow; i < rows; ++i)
      if (A[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(A[prow], A[sel]);
    Rat inv = 1 / A[prow][col];
    for (int j = col; j <= cols; ++j) A[prow][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == prow || A[i][col] == 0) continue;
      Rat f = A[i][col];
      for (int j = col; j <= cols; ++j) A[i][j] -= f * A[prow][j];
    }
    pivot_col[prow] = col;
    ++prow;
  }
  // inconsistent?
  for (int i = prow; i < rows; ++i)
    if (A[i][cols] != 0) return r;  // ok = false
  std::vector<Rat> q(n + 1, Rat(0));
  q[0] = 1;
  for (int i = 0; i < prow; ++i) q[pivot_col[i] + 1] = A[i][cols];
  // p_k = sum_j q_j s_{k-j}, k <= m
  std::vector<Rat> p(m + 1, Rat(0));
  for (int k = 0; k <= m; ++k)
    for (int j = 0; j <= std::min(k, n); ++j) p[k] += q[j] * sc(k - j);
  // verify the fit through m+n (free variables may have been set to zero)
  PadeResult cand;
  cand.ok = true;
  cand.p = p;
  cand.q = q;
  SeriesQ chk = cand.expand(m + n);
  for (int k = 0; k <= m + n; ++k)
    if (chk.c[k] != sc(k)) return r;
  return cand;
}

}  // namespace torvex
