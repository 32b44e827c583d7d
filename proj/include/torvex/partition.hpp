// Partitions, r-tuples of partitions, box coordinates, and stable degree
// data (plane-partition fillings) indexing quasimap fixed points.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace torvex {

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return (int)parts.size(); }
  bool empty() const { return parts.empty(); }
  // number of boxes in row y (0-based)
  int row(int y) const { return y < length() ? parts[y] : 0; }

  auto operator<=>(const Partition& o) const = default;
  std::string str() const;

  // lambda dominates mu (same size assumed)
  static bool dominates(const Partition& a, const Partition& b);
};

struct MultiPartition {
  std::vector<Partition> comp;

  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> c) : comp(std::move(c)) {}

  int rank() const { return (int)comp.size(); }
  int size() const;
  int boxes() const { return size(); }
  auto operator<=>(const MultiPartition& o) const = default;
  std::string str() const;
};

// 0-based box: component n (0-based internally), column x, row y.
struct Box {
  int n = 0, x = 0, y = 0;
  auto operator<=>(const Box& o) const = default;
};

// All boxes of a multipartition in deterministic order
// (component, then row, then column).
std::vector<Box> boxes_of(const MultiPartition& mp);
bool contains(const MultiPartition& mp, const Box& b);

// Non-negative filling, weakly decreasing along rows and columns of each
// component (a plane partition on the shape).
struct DegreeData {
  // d[i] is a row-major filling of component i: d[i][y][x]
  std::vector<std::vector<std::vector<int>>> d;

  static DegreeData zero(const MultiPartition& mp);
  int at(const Box& b) const { return d[b.n][b.y][b.x]; }
  int total() const;
  bool is_zero() const { return total() == 0; }
  std::string str() const;
  auto operator<=>(const DegreeData& o) const = default;
};

// Monotonicity predicate, isolated so the convention can be flipped:
// weakly decreasing away from the corner.
bool is_plane_partition(const std::vector<std::vector<int>>& filling);

// All partitions of n, deterministic order.
std::vector<Partition> enumerate_partitions(int n);
// All partitions of size <= n.
std::vector<Partition> partitions_up_to(int n);
// All r-tuples with total size n.
std::vector<MultiPartition> enumerate_multipartitions(int n, int r);
// All stable fillings of shape mp with total degree d.
std::vector<DegreeData> enumerate_degree_data(const MultiPartition& mp, int dtotal);

// Independent count oracle: Euler's pentagonal-number recurrence.
int64_t partition_count(int n);

Partition parse_partition(const std::string& text);          // "[3,1,1]"
MultiPartition parse_multipartition(const std::string& text);  // "[[3,1],[2]]"

}  // namespace torvex
