#pragma once

// Brute-force ground truth: exact dynamic programming over
// (position, octant-winding index) for simple diagonal walks avoiding the
// origin. All angle bookkeeping is integer-only: the index W encodes
// theta = W*pi/4 exactly when the position lies on an axis or diagonal
// (on-grid), and theta in (W*pi/4, (W+1)*pi/4) otherwise.

#include <map>
#include <utility>
#include <vector>

#include "winding/grid.hpp"
#include "winding/rat.hpp"

namespace winding {

struct OriginHit : std::domain_error {
  OriginHit() : std::domain_error("step lands on the origin") {}
};

struct WindingPos {
  int x = 1;
  int y = 0;
  long w = 0;  // octant-winding index of the current winding angle
};

// True iff (x,y) lies on an axis or a main diagonal (where the winding
// angle is an exact multiple of pi/4).
bool on_grid(int x, int y);

// Octant label 0..7 of a nonzero lattice point: on-grid points get the index
// of their ray (0 = +x axis, 1 = x==y>0 diagonal, ...), off-grid points the
// lower ray of their open octant.
int octant_label(int x, int y);

// Applies one diagonal step (dx, dy in {-1,+1}); throws OriginHit if the
// target is the origin.
WindingPos winding_step(const WindingPos& s, int dx, int dy);

// General move between nonzero lattice points whose angular sweep is at most
// pi/2 in absolute value (covers diagonal steps, unit axis steps, and the
// half-steps used for segment midpoints in doubled coordinates).
WindingPos winding_move(const WindingPos& s, int nx, int ny);

// Counts per length 0..q.order of walks from (q.p, 0) to an axis point at
// distance q.l with full winding angle q.alpha (quarter units) and all
// intermediate winding angles in (q.beta_minus, q.beta_plus)*pi/4.
// Handles any interval (no reduction preconditions). Guard: order <= 24.
std::vector<Int> count_walks(const WalkQuery& q);

// Counts per length 0..order of excursions (origin to origin, no
// intermediate return) with full winding angle alpha (quarter units) and the
// whole winding sequence in the open interval; first step fixed to (1,1)
// when fixed_first_step, otherwise all four first steps. The winding
// convention gives the first and last step no contribution.
std::vector<Int> count_excursions(long alpha, long beta_minus, long beta_plus,
                                  int order, bool fixed_first_step);

// Like count_walks but a single DP pass harvesting every axis endpoint:
// result[(l, alpha)][len] counts walks from (p,0) of the given length ending
// on an axis at distance l with full winding alpha, intermediate winding in
// (bm, bp). The empty walk appears under (p, 0) at length 0. Guard: order
// <= 24.
std::map<std::pair<int, long>, std::vector<Int>> count_walks_all(int p, long bm,
                                                                 long bp,
                                                                 int order);

// ---------------------------------------------------------------------------
// Loops

enum class LoopParity { Even, Odd };

struct LoopCounts {
  std::vector<Int> counts;  // counts[len]: rooted loops of length len
  std::vector<Rat> biased;  // counts[len] / len  (len >= 1)
};

// Rooted loops of winding index n_index (full winding angle 2*pi*n_index):
// closed simple diagonal walks avoiding the origin, rooted at a vertex of the
// requested parity of x+y. Guard: max_len <= 20, n_index != 0.
LoopCounts count_loops(int n_index, LoopParity parity, int max_len);

// ---------------------------------------------------------------------------
// Free walks bucketed by the winding of the last-step midpoint

// Counts for walks of n = 1..max_len diagonal steps, bucketed by the exact
// winding angle of the midpoint of their final step (computed in doubled
// coordinates, where the midpoint is a lattice point). atom[w] counts walks
// whose midpoint winding is exactly w*pi/4; octant[w] those with midpoint
// winding strictly inside (w, w+1)*pi/4.
//
// Square mode (origin_mode = false): walks start at (p,0) with no origin
// visits before the final vertex (for odd p this is automatic; for even p the
// final step may end at the origin and is still bucketed). Winding is
// measured from the start.
//
// Origin mode: walks start at the origin; the winding reference is the first
// step (whose midpoint has winding 0). Walks that return to the origin
// before the final step are absorbed: absorbed carries their count scaled so
// that atoms + octants + absorbed = 4^n.
struct FreeBuckets {
  std::map<long, Int> atom;
  std::map<long, Int> octant;
  Int absorbed{0};
};

std::vector<FreeBuckets> free_walk_buckets(int p, bool origin_mode,
                                           int max_len);

// ---------------------------------------------------------------------------
// Clusters of rectilinear closed walks

// Exhaustive statistics over all closed rectilinear walks of length 2l from
// the origin (there are C(2l,l)^2). Each unit cell carries the winding index
// of the walk around its center; cells of equal nonzero index connected
// through edges not traversed by the walk form clusters. area/boundary
// expectations are per-walk averages of the total cluster area and of
// (perimeter - 2), keyed by the winding index n != 0. Per component the
// identity perimeter = 2*area - 2*interior_points + 2 is asserted, where
// interior points are unvisited lattice points of index n surrounded by
// cluster cells. Finite index-0 components are reported separately
// (exploratory; no closed form is claimed for them). Guard: l <= 4.
struct ClusterStats {
  int l = 0;
  Int total_walks{0};               // C(2l, l)^2
  std::map<int, Int> cluster_count;  // n -> number of clusters over all walks
  std::map<int, Int> area_sum;       // n -> sum of cluster areas
  std::map<int, Int> boundary_sum;   // n -> sum of (perimeter - 2)
  Int zero_count{0};                 // finite index-0 components
  Int zero_area{0};

  Rat area_expectation(int n) const;
  Rat boundary_expectation(int n) const;
};

ClusterStats cluster_stats(int l);

// ---------------------------------------------------------------------------
// Monte Carlo cross-check

enum class PointKind { Square, Origin };

// Empirical distribution over the disjoint winding buckets of width pi/2:
// for the square point the buckets are centered at odd quarter-angles (the
// exact midpoint windings that occur as atoms), for the origin point at even
// quarter-angles. The overlapping width-pi windows centered two quarters
// apart are recovered as bucket(c-1) + bucket(c+1).
struct SimResult {
  std::map<long, double> bucket;    // center (quarter units) -> probability
  std::map<long, double> stderror;  // matching standard errors
  double infinity = 0;              // origin point: returned before the end
  double infinity_stderror = 0;
  long long samples = 0;
  unsigned long long seed = 0;
};

// geometric_time: the number of full steps is geometric with parameter k
// (P[j] = k^j (1-k)); otherwise exactly fixed_j full steps. The walk is then
// observed at the midpoint of the following step. Deterministic for a given
// seed via a counter-based generator (independent of call interleaving).
SimResult simulate_winding(PointKind point, bool geometric_time, double k,
                           int fixed_j, long long samples,
                           unsigned long long seed);

}  // namespace winding
