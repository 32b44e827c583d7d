#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "torvex/partition.hpp"

#include <algorithm>

using namespace torvex;

namespace {

// Brute-force oracle: all functions boxes -> {0..d} with sum d, keep monotone.
std::vector<DegreeData> brute_degree_data(const MultiPartition& mp, int dtotal) {
  auto bs = boxes_of(mp);
  std::vector<DegreeData> out;
  std::vector<int> vals(bs.size(), 0);
  auto rec = [&](auto&& self, size_t i, int rest) -> void {
    if (i == bs.size()) {
      if (rest != 0) return;
      DegreeData dd = DegreeData::zero(mp);
      for (size_t j = 0; j < bs.size(); ++j) dd.d[bs[j].n][bs[j].y][bs[j].x] = vals[j];
      for (const auto& comp : dd.d)
        if (!is_plane_partition(comp)) return;
      out.push_back(dd);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      vals[i] = v;
      self(self, i + 1, rest - v);
    }
    vals[i] = 0;
  };
  rec(rec, 0, dtotal);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("partition enumeration") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0)[0].empty());
  CHECK(enumerate_partitions(4).size() == 5);
  // independent oracle: pentagonal recurrence
  CHECK(enumerate_partitions(10).size() == 42);
  for (int n = 0; n <= 12; ++n)
    CHECK((int64_t)enumerate_partitions(n).size() == partition_count(n));
  // each exactly once
  auto p6 = enumerate_partitions(6);
  std::sort(p6.begin(), p6.end());
  CHECK(std::adjacent_find(p6.begin(), p6.end()) == p6.end());
}

TEST_CASE("multipartition enumeration matches convolution of counts") {
  auto t = enumerate_multipartitions(1, 2);
  REQUIRE(t.size() == 2);
  CHECK(t[0].str() == "[[],[1]]");
  CHECK(t[1].str() == "[[1],[]]");
  CHECK(enumerate_multipartitions(2, 2).size() == 5);
  CHECK(enumerate_multipartitions(0, 3).size() == 1);
  for (int n = 0; n <= 5; ++n) {
    int64_t conv = 0;
    for (int k = 0; k <= n; ++k) conv += partition_count(k) * partition_count(n - k);
    CHECK((int64_t)enumerate_multipartitions(n, 2).size() == conv);
  }
}

TEST_CASE("degree data enumeration") {
  SUBCASE("single box, d=3") {
    MultiPartition mp({Partition({1})});
    auto dd = enumerate_degree_data(mp, 3);
    REQUIRE(dd.size() == 1);
    CHECK(dd[0].at({0, 0, 0}) == 3);
  }
  SUBCASE("row shape (2), d=1: only (1,0)") {
    MultiPartition mp({Partition({2})});
    auto dd = enumerate_degree_data(mp, 1);
    REQUIRE(dd.size() == 1);
    CHECK(dd[0].d[0][0] == std::vector<int>{1, 0});
  }
  SUBCASE("column shape (1,1), d=2: (2,0) and (1,1)") {
    MultiPartition mp({Partition({1, 1})});
    auto dd = enumerate_degree_data(mp, 2);
    REQUIRE(dd.size() == 2);
  }
  SUBCASE("agrees with brute force for shapes <= 5 boxes, d <= 5") {
    std::vector<MultiPartition> shapes;
    for (int n = 0; n <= 5; ++n)
      for (const auto& mp : enumerate_multipartitions(n, 2)) shapes.push_back(mp);
    for (const auto& mp : shapes)
      for (int d = 0; d <= 5; ++d) {
        auto fast = enumerate_degree_data(mp, d);
        auto slow = brute_degree_data(mp, d);
        auto sorted = fast;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == slow);
      }
  }
  SUBCASE("deterministic order across runs") {
    MultiPartition mp({Partition({2, 1}), Partition({1})});
    auto a = enumerate_degree_data(mp, 3);
    auto b = enumerate_degree_data(mp, 3);
    CHECK(a == b);
  }
}

TEST_CASE("literal parsing round-trips") {
  CHECK(parse_partition("[3,1,1]").str() == "[3,1,1]");
  CHECK(parse_partition("[]").empty());
  CHECK(parse_multipartition("[[3,1],[2]]").str() == "[[3,1],[2]]");
  CHECK(parse_multipartition("[[],[]]").rank() == 2);
  CHECK_THROWS(parse_partition("[1,3]"));
  CHECK_THROWS(parse_partition("[0]"));
  CHECK_THROWS(parse_partition("[2,1] junk"));
}

TEST_CASE("box containment") {
  MultiPartition mp = parse_multipartition("[[2,1],[1]]");
  CHECK(contains(mp, {0, 1, 0}));
  CHECK_FALSE(contains(mp, {0, 1, 1}));
  CHECK(contains(mp, {1, 0, 0}));
  CHECK_FALSE(contains(mp, {1, 1, 0}));
  CHECK(boxes_of(mp).size() == 4);
}

TEST_CASE("dominance order") {
  Partition a({3}), b({2, 1}), c({1, 1, 1});
  CHECK(Partition::dominates(a, b));
  CHECK(Partition::dominates(b, c));
  CHECK(Partition::dominates(a, c));
  CHECK_FALSE(Partition::dominates(c, a));
}
