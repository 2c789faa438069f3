#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lie/parabolic.h"

using namespace lie;

namespace {

// Enumerates all dominant weights with coordinates <= bound (semisimple part).
std::vector<Weight> weight_grid(const RootSystem& rs, long bound) {
  std::vector<Weight> out;
  std::vector<long> c(rs.rank, 0);
  for (;;) {
    out.push_back(weight_from(c));
    int i = 0;
    while (i < rs.rank) {
      if (++c[i] <= bound) break;
      c[i] = 0;
      ++i;
    }
    if (i == rs.rank) break;
  }
  return out;
}

std::vector<std::set<int>> all_subsets(int rank) {
  std::vector<std::set<int>> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    std::set<int> s;
    for (int i = 0; i < rank; ++i)
      if (mask & (1 << i)) s.insert(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("make_parabolic partitions the positive roots") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  ParabolicTheta borel = make_parabolic(a2, {});
  CHECK(borel.nilradical.size() == 3);
  CHECK(borel.levi_positive.empty());
  ParabolicTheta p1 = make_parabolic(a2, {0});
  CHECK(p1.levi_positive.size() == 1);
  CHECK(p1.nilradical.size() == 2);
  ParabolicTheta full = make_parabolic(a2, {0, 1});
  CHECK(full.nilradical.empty());
  CHECK_THROWS_AS(make_parabolic(a2, {7}), std::out_of_range);

  for (const char* name : {"A3", "B3", "C3", "D4", "G2"}) {
    RootSystem rs = build_root_system(CartanType::parse(name));
    for (const auto& theta : all_subsets(rs.rank)) {
      ParabolicTheta p = make_parabolic(rs, theta);
      CHECK(static_cast<long>(p.levi_positive.size() + p.nilradical.size()) == rs.num_positive());
      // levi = Delta+ intersect Z-span(theta)
      for (int k : p.levi_positive) {
        for (int j = 0; j < rs.rank; ++j)
          if (rs.positive_roots[k](j) != 0) CHECK(theta.count(j));
      }
    }
  }
}

TEST_CASE("irr_pq_member") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  ParabolicTheta p = make_parabolic(a2, {0});
  CHECK(irr_pq_member(p, weight_from({0, 3})));
  CHECK_FALSE(irr_pq_member(p, weight_from({1, 0})));
  // Borel: every dominant weight admits a highest-line vector
  for (const char* name : {"A2", "B2", "C3"}) {
    RootSystem rs = build_root_system(CartanType::parse(name));
    ParabolicTheta borel = make_parabolic(rs, {});
    for (const Weight& w : weight_grid(rs, 2)) CHECK(irr_pq_member(borel, w));
  }
  CHECK_THROWS(irr_pq_member(p, weight_from({-1, 0})));
}

TEST_CASE("d_q examples") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  // derived: the alpha_1-string through (1,1) inside the Levi A1 has 2 weights
  CHECK(d_q(make_parabolic(a2, {0}), weight_from({1, 1})) == 2);
  CHECK(d_q(make_parabolic(a2, {}), weight_from({1, 1})) == 1);
  CHECK(d_q(make_parabolic(a2, {0, 1}), weight_from({1, 1})) == 8);
}

TEST_CASE("d_q = 1 iff irr_pq_member, and duality, rank <= 4 grids") {
  for (const char* name : {"A2", "B2", "A3", "B3", "C3", "A1+A1", "D4"}) {
    RootSystem rs = build_root_system(CartanType::parse(name));
    long bound = rs.rank >= 4 ? 2 : 3;
    for (const auto& theta : all_subsets(rs.rank)) {
      ParabolicTheta p = make_parabolic(rs, theta);
      ParabolicTheta pdual = make_parabolic(rs, dual_theta(rs, theta));
      for (const Weight& w : weight_grid(rs, bound)) {
        BigInt d = d_q(p, w);
        CHECK((d == 1) == irr_pq_member(p, w));
        CHECK(d == d_q(pdual, dual_weight(rs, w)));
        CHECK(d <= weyl_dimension(rs, w));
      }
    }
  }
}

TEST_CASE("monotonicity of Irr(P;q)_f under enlarging the parabolic") {
  for (const char* name : {"A3", "B3"}) {
    RootSystem rs = build_root_system(CartanType::parse(name));
    auto subsets = all_subsets(rs.rank);
    for (const auto& t1 : subsets) {
      for (const auto& t2 : subsets) {
        bool contained = std::includes(t2.begin(), t2.end(), t1.begin(), t1.end());
        if (!contained) continue;
        ParabolicTheta small = make_parabolic(rs, t1), big = make_parabolic(rs, t2);
        for (const Weight& w : weight_grid(rs, 2)) {
          if (irr_pq_member(big, w)) CHECK(irr_pq_member(small, w));
        }
      }
    }
  }
}

TEST_CASE("flag_dimension") {
  RootSystem a2 = build_root_system(CartanType::parse("A2"));
  CHECK(make_parabolic(a2, {}).flag_dimension() == 3);
  RootSystem a3 = build_root_system(CartanType::parse("A3"));
  CHECK(make_parabolic(a3, {1, 2}).flag_dimension() == 3);
  RootSystem b2 = build_root_system(CartanType::parse("B2"));
  CHECK(make_parabolic(b2, {1}).flag_dimension() == 3);
}

TEST_CASE("theta parsing") {
  CHECK(parse_theta("1,3", 4) == std::set<int>{0, 2});
  CHECK(parse_theta("", 4).empty());
  CHECK_THROWS_AS(parse_theta("5", 4), std::out_of_range);
  CHECK(theta_str({0, 2}) == "1,3");
}
