#include "doctest.h"

#include <cmath>

#include "winding/loops.hpp"
#include "winding/oracle.hpp"

using namespace winding;

TEST_CASE("loop generating functions leading coefficients") {
  Series odd1 = loop_gf({1, LoopClass::Odd, 8});
  CHECK(odd1.t_coeff(3) == 0);
  CHECK(odd1.t_coeff(4) == 1);  // four rooted diamonds at weight 1/4 each
  Series both1 = loop_gf({1, LoopClass::Both, 8});
  CHECK(both1.t_coeff(4) == 1);
  Series odd2 = loop_gf({2, LoopClass::Odd, 10});
  CHECK(odd2.t_coeff(7) == 0);
  CHECK(odd2.t_coeff(8) == Rat(1, 2));
  CHECK_THROWS_AS(loop_gf({0, LoopClass::Both, 8}), DomainError);
}

TEST_CASE("loop generating functions match the exhaustive counts") {
  LoopCounts odd = count_loops(1, LoopParity::Odd, 10);
  LoopCounts even = count_loops(1, LoopParity::Even, 12);
  Series go = loop_gf({1, LoopClass::Odd, 10});
  Series ge = loop_gf({1, LoopClass::Even, 12});
  for (int len = 1; len <= 10; ++len) {
    INFO("odd len " << len);
    CHECK(go.t_coeff(len) == odd.biased[len]);
  }
  for (int len = 1; len <= 12; ++len) {
    INFO("even len " << len);
    CHECK(ge.t_coeff(len) == even.biased[len]);
  }
}

TEST_CASE("loop classes add up and are index symmetric") {
  for (long n : {1L, 2L}) {
    Series both = loop_gf({n, LoopClass::Both, 20}).truncated(40);
    Series sum = (loop_gf({n, LoopClass::Odd, 20}) +
                  loop_gf({n, LoopClass::Even, 20}))
                     .truncated(40);
    CHECK(sum.agrees_with(both));
    CHECK(loop_gf({-n, LoopClass::Both, 12})
              .truncated(24)
              .agrees_with(loop_gf({n, LoopClass::Both, 12}).truncated(24)));
  }
}

TEST_CASE("cluster expectations match the exhaustive enumeration") {
  CHECK(cluster_expectation(1, 2, ClusterKind::Area) == Rat(1, 9));
  CHECK(cluster_expectation(2, 2, ClusterKind::Area) == 0);
  CHECK(cluster_expectation(1, 1, ClusterKind::Area) == 0);
  for (int l : {2, 3}) {
    ClusterStats cs = cluster_stats(l);
    for (long n : {1L, 2L, -1L}) {
      INFO("l=" << l << " n=" << n);
      CHECK(cluster_expectation(n, l, ClusterKind::Area) ==
            cs.area_expectation(static_cast<int>(n)));
      CHECK(cluster_expectation(n, l, ClusterKind::Boundary) ==
            cs.boundary_expectation(static_cast<int>(n)));
    }
  }
  CHECK(cluster_expectation(-1, 3, ClusterKind::Boundary) ==
        cluster_expectation(1, 3, ClusterKind::Boundary));
  CHECK_THROWS_AS(cluster_expectation(0, 2, ClusterKind::Area), DomainError);
  CHECK_THROWS_AS(cluster_expectation(1, 401, ClusterKind::Area),
                  BudgetExceeded);
}

TEST_CASE("cluster growth approaches the predicted asymptotics slowly") {
  // The corrections decay like 1/log^2(l), so only loose bands and trends
  // are assertable at l <= 400.
  auto a1 = cluster_asymptotics_diag(1, ClusterKind::Area, 200);
  REQUIRE(a1.size() == 2);
  CHECK(a1[1].ratio > 0.8);
  CHECK(a1[1].ratio < 1.3);
  auto a2 = cluster_asymptotics_diag(2, ClusterKind::Area, 200);
  CHECK(std::fabs(a2[1].ratio - 1) < std::fabs(a2[0].ratio - 1));
  auto b1 = cluster_asymptotics_diag(1, ClusterKind::Boundary, 200);
  CHECK(b1[0].ratio > 0);
  CHECK(b1[1].ratio > b1[0].ratio);
}
