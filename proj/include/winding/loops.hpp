#pragma once

// Closed-form generating functions for rooted loops weighted inversely by
// their size, classified by winding index and sublattice parity, and the
// derived expectation formulas for the percolation-style clusters cut out
// by a conditioned walk.

#include <vector>

#include "winding/series.hpp"

namespace winding {

enum class LoopClass { Even, Odd, Both };

struct LoopQuery {
  long n_index = 1;  // winding index of the loop around the marked point
  LoopClass parity = LoopClass::Both;
  int order = 10;  // t-order of the returned series
};

// Inverse-size-biased loop generating function:
//   even:  (1/|n|) q^(4|n|) / (1 - q^(4|n|))
//   odd:   (1/|n|) q^(2|n|) / (1 - q^(4|n|))
//   both:  (1/|n|) q^(2|n|) / (1 - q^(2|n|))
// as exact series in s = sqrt(k). Throws DomainError for n_index = 0.
Series loop_gf(const LoopQuery& q);

enum class ClusterKind { Area, Boundary };

// Expected total area of index-n clusters, resp. expected total boundary
// length minus two per cluster, cut out by a 2l-step walk conditioned to
// return to the origin:
//   area:     (4^(2l) / C(2l,l)^2) (2l/n) [k^(2l)] q^(2n)/(1 - q^(4n))
//   boundary: (4^(2l) / C(2l,l)^2) (4l/n) [k^(2l)] q^(2n)/(1 + q^(2n))
// Requires n != 0, l >= 1; guard l <= 400.
Rat cluster_expectation(long n, int l, ClusterKind kind);

struct ClusterAsympRow {
  int l;
  double ratio;  // exact expectation / asymptotic prediction
};

// Trend of the exact expectations against the predicted asymptotics
// area ~ l/(2 pi n^2) and boundary - 2 ~ 2 pi^3 l / log^2 l, reported at
// l = L/2 and l = L. Guard: 4 <= L <= 400.
std::vector<ClusterAsympRow> cluster_asymptotics_diag(long n, ClusterKind kind,
                                                      int L);

}  // namespace winding
