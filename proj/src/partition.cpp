#include "torvex/partition.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace torvex {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

bool Partition::dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  size_t n = std::max(a.parts.size(), b.parts.size());
  for (size_t i = 0; i < n; ++i) {
    sa += i < a.parts.size() ? a.parts[i] : 0;
    sb += i < b.parts.size() ? b.parts[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

int MultiPartition::size() const {
  int s = 0;
  for (const auto& p : comp) s += p.size();
  return s;
}

std::string MultiPartition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < comp.size(); ++i) {
    if (i) s += ",";
    s += comp[i].str();
  }
  return s + "]";
}

std::vector<Box> boxes_of(const MultiPartition& mp) {
  std::vector<Box> out;
  for (int n = 0; n < mp.rank(); ++n)
    for (int y = 0; y < mp.comp[n].length(); ++y)
      for (int x = 0; x < mp.comp[n].parts[y]; ++x) out.push_back({n, x, y});
  return out;
}

bool contains(const MultiPartition& mp, const Box& b) {
  if (b.n < 0 || b.n >= mp.rank() || b.y < 0 || b.x < 0) return false;
  return b.x < mp.comp[b.n].row(b.y);
}

DegreeData DegreeData::zero(const MultiPartition& mp) {
  DegreeData dd;
  dd.d.resize(mp.rank());
  for (int n = 0; n < mp.rank(); ++n) {
    dd.d[n].resize(mp.comp[n].length());
    for (int y = 0; y < mp.comp[n].length(); ++y) dd.d[n][y].assign(mp.comp[n].parts[y], 0);
  }
  return dd;
}

int DegreeData::total() const {
  int s = 0;
  for (const auto& c : d)
    for (const auto& row : c)
      for (int v : row) s += v;
  return s;
}

std::string DegreeData::str() const {
  std::string s = "[";
  for (size_t n = 0; n < d.size(); ++n) {
    if (n) s += ",";
    s += "[";
    for (size_t y = 0; y < d[n].size(); ++y) {
      if (y) s += ",";
      s += "[";
      for (size_t x = 0; x < d[n][y].size(); ++x) {
        if (x) s += ",";
        s += std::to_string(d[n][y][x]);
      }
      s += "]";
    }
    s += "]";
  }
  return s + "]";
}

bool is_plane_partition(const std::vector<std::vector<int>>& f) {
  for (size_t y = 0; y < f.size(); ++y)
    for (size_t x = 0; x < f[y].size(); ++x) {
      if (f[y][x] < 0) return false;
      if (x + 1 < f[y].size() && f[y][x] < f[y][x + 1]) return false;
      if (y + 1 < f.size() && x < f[y + 1].size() && f[y][x] < f[y + 1][x]) return false;
    }
  return true;
}

namespace {
void enum_parts(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    enum_parts(n - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  enum_parts(n, n == 0 ? 1 : n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto pk = enumerate_partitions(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

std::vector<MultiPartition> enumerate_multipartitions(int n, int r) {
  if (n < 0 || r < 1) throw std::invalid_argument("enumerate_multipartitions: bad arguments");
  std::vector<MultiPartition> out;
  std::vector<Partition> cur;
  // distribute n over r components, lexicographic in the composition
  auto rec = [&](auto&& self, int comp, int rest) -> void {
    if (comp == r - 1) {
      for (const auto& p : enumerate_partitions(rest)) {
        cur.push_back(p);
        out.push_back(MultiPartition(cur));
        cur.pop_back();
      }
      return;
    }
    for (int k = 0; k <= rest; ++k)
      for (const auto& p : enumerate_partitions(k)) {
        cur.push_back(p);
        self(self, comp + 1, rest - k);
        cur.pop_back();
      }
  };
  rec(rec, 0, n);
  return out;
}

namespace {
// Row-wise enumeration of one component filling: each entry bounded by the
// entry above and the previous entry in the row, weakly decreasing away from
// the corner.
void enum_fill(const Partition& shape, int y, int x, int budget,
               std::vector<std::vector<int>>& cur,
               const std::function<void(int)>& emit) {
  if (y == shape.length()) {
    emit(budget);
    return;
  }
  int nx = x + 1, ny = y;
  if (nx >= shape.parts[y]) {
    nx = 0;
    ny = y + 1;
  }
  int cap = budget;
  if (x > 0) cap = std::min(cap, cur[y][x - 1]);
  if (y > 0 && x < (int)cur[y - 1].size()) cap = std::min(cap, cur[y - 1][x]);
  for (int v = 0; v <= cap; ++v) {
    cur[y][x] = v;
    enum_fill(shape, ny, nx, budget - v, cur, emit);
  }
  cur[y][x] = 0;
}
}  // namespace

std::vector<DegreeData> enumerate_degree_data(const MultiPartition& mp, int dtotal) {
  if (dtotal < 0) throw std::invalid_argument("enumerate_degree_data: d < 0");
  std::vector<DegreeData> out;
  DegreeData cur = DegreeData::zero(mp);
  auto rec = [&](auto&& self, int compidx, int rest) -> void {
    if (compidx == mp.rank()) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    const Partition& shape = mp.comp[compidx];
    if (shape.empty()) {
      self(self, compidx + 1, rest);
      return;
    }
    std::function<void(int)> emit = [&](int left) { self(self, compidx + 1, left); };
    enum_fill(shape, 0, 0, rest, cur.d[compidx], emit);
  };
  rec(rec, 0, dtotal);
  return out;
}

int64_t partition_count(int n) {
  static std::vector<int64_t> memo{1};
  for (int m = (int)memo.size(); m <= n; ++m) {
    int64_t s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      int64_t sign = (k % 2) ? 1 : -1;
      if (g1 <= m) s += sign * memo[m - g1];
      if (g2 <= m) s += sign * memo[m - g2];
    }
    memo.push_back(s);
  }
  return n < 0 ? 0 : memo[n];
}

namespace {
int parse_int(const std::string& s, size_t& i) {
  size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && isdigit((unsigned char)s[i])) ++i;
  if (i == start) throw std::invalid_argument("expected integer in partition literal");
  return std::stoi(s.substr(start, i - start));
}
void expect(const std::string& s, size_t& i, char c) {
  if (i >= s.size() || s[i] != c)
    throw std::invalid_argument(std::string("expected '") + c + "' in partition literal");
  ++i;
}
void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && isspace((unsigned char)s[i])) ++i;
}
Partition parse_partition_at(const std::string& s, size_t& i) {
  skip_ws(s, i);
  expect(s, i, '[');
  std::vector<int> parts;
  skip_ws(s, i);
  if (i < s.size() && s[i] == ']') {
    ++i;
    return Partition{};
  }
  while (true) {
    skip_ws(s, i);
    parts.push_back(parse_int(s, i));
    skip_ws(s, i);
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    expect(s, i, ']');
    break;
  }
  return Partition(parts);
}
}  // namespace

Partition parse_partition(const std::string& text) {
  size_t i = 0;
  Partition p = parse_partition_at(text, i);
  skip_ws(text, i);
  if (i != text.size()) throw std::invalid_argument("trailing characters in partition literal");
  return p;
}

MultiPartition parse_multipartition(const std::string& text) {
  size_t i = 0;
  skip_ws(text, i);
  expect(text, i, '[');
  std::vector<Partition> comps;
  skip_ws(text, i);
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      comps.push_back(parse_partition_at(text, i));
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(text, i, ']');
      break;
    }
  }
  skip_ws(text, i);
  if (i != text.size()) throw std::invalid_argument("trailing characters in multipartition literal");
  return MultiPartition(comps);
}

}  // namespace torvex
