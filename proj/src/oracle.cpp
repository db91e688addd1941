#include "winding/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

namespace winding {

namespace {

using u128 = unsigned __int128;

Int to_int(u128 v) {
  Int hi(static_cast<unsigned long>(v >> 64));
  Int lo(static_cast<unsigned long>(v));
  mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 64);
  return hi + lo;
}

// Dense DP table over (x, y, w) with |x|,|y| <= r and |w| <= wm.
struct Table {
  int r;
  long wm;
  std::vector<u128> c;
  Table(int r_, long wm_)
      : r(r_), wm(wm_),
        c(static_cast<size_t>(2 * r_ + 1) * (2 * r_ + 1) * (2 * wm_ + 1)) {}
  u128& at(int x, int y, long w) {
    return c[(static_cast<size_t>(x + r) * (2 * r + 1) + (y + r)) * (2 * wm + 1) +
             (w + wm)];
  }
  void clear() { std::fill(c.begin(), c.end(), u128(0)); }
};

bool in_interval(long w, bool grid, long bm, long bp) {
  // On-grid: theta = w*pi/4 exactly; off-grid: theta in (w, w+1)*pi/4.
  if (grid) return bm < w && w < bp;
  return bm <= w && w + 1 <= bp;
}

}  // namespace

bool on_grid(int x, int y) { return x == 0 || y == 0 || std::abs(x) == std::abs(y); }

int octant_label(int x, int y) {
  if (x == 0 && y == 0) throw DomainError("octant_label: origin");
  int ax = std::abs(x), ay = std::abs(y);
  if (y == 0) return x > 0 ? 0 : 4;
  if (x == 0) return y > 0 ? 2 : 6;
  if (x > 0 && y > 0) return ay < ax ? 0 : 1;
  if (x < 0 && y > 0) return ax < ay ? 2 : 3;
  if (x < 0 && y < 0) return ay < ax ? 4 : 5;
  return ax < ay ? 6 : 7;
}

WindingPos winding_move(const WindingPos& s, int nx, int ny) {
  if (s.x == 0 && s.y == 0) throw DomainError("winding_move: start at origin");
  if (nx == 0 && ny == 0) throw OriginHit();
  long cross = static_cast<long>(s.x) * ny - static_cast<long>(s.y) * nx;
  int u = octant_label(s.x, s.y), nu = octant_label(nx, ny);
  int d = ((nu - u) % 8 + 8) % 8;
  long delta;
  if (cross == 0) {
    delta = 0;
  } else if (cross > 0) {
    if (d > 2) throw std::logic_error("winding_move: ccw jump exceeds pi/2");
    delta = d;
  } else {
    if (d != 0 && d < 6) throw std::logic_error("winding_move: cw jump exceeds pi/2");
    delta = d == 0 ? 0 : d - 8;
  }
  return WindingPos{nx, ny, s.w + delta};
}

WindingPos winding_step(const WindingPos& s, int dx, int dy) {
  if ((dx != 1 && dx != -1) || (dy != 1 && dy != -1))
    throw DomainError("winding_step: step must be diagonal");
  return winding_move(s, s.x + dx, s.y + dy);
}

std::vector<Int> count_walks(const WalkQuery& q) {
  if (q.order > 24) throw BudgetExceeded("count_walks: order > 24");
  if (q.l < 1 || q.p < 1 || q.order < 0)
    throw InvalidQuery("count_walks: bad query");
  int n = q.order;
  int r = q.p + n;
  long wm = 2L * n + 10;
  std::vector<Int> out(n + 1, Int(0));
  if (q.l == q.p && q.alpha == 0) out[0] = 1;  // empty walk
  if (n == 0) return out;

  Table cur(r, wm), nxt(r, wm);
  cur.at(q.p, 0, 0) = 1;  // time 0; theta_0 = 0 on the +x axis
  for (int i = 1; i <= n; ++i) {
    nxt.clear();
    for (int x = -r; x <= r; ++x)
      for (int y = -r; y <= r; ++y) {
        if (x == 0 && y == 0) continue;
        for (long w = -wm; w <= wm; ++w) {
          u128 c = cur.at(x, y, w);
          if (c == 0) continue;
          WindingPos s{x, y, w};
          for (int dx : {-1, 1})
            for (int dy : {-1, 1}) {
              int nx = x + dx, ny = y + dy;
              if (nx == 0 && ny == 0) continue;
              WindingPos t = winding_step(s, dx, dy);
              // Harvest: endpoint on an axis at distance l with theta = alpha.
              if (t.w == q.alpha && on_grid(nx, ny) && (nx == 0 || ny == 0) &&
                  std::abs(nx) + std::abs(ny) == q.l)
                out[i] += to_int(c);
              // Extend only through states valid as intermediate positions.
              if (i < n &&
                  in_interval(t.w, on_grid(nx, ny), q.beta_minus, q.beta_plus) &&
                  std::labs(t.w) < wm)
                nxt.at(nx, ny, t.w) += c;
            }
        }
      }
    std::swap(cur, nxt);
  }
  return out;
}

std::vector<Int> count_excursions(long alpha, long beta_minus, long beta_plus,
                                  int order, bool fixed_first_step) {
  if (order > 24) throw BudgetExceeded("count_excursions: order > 24");
  int n = order;
  std::vector<Int> out(std::max(n + 1, 1), Int(0));
  if (n < 2) return out;
  int r = n;
  long wm = 2L * n + 10;
  Table cur(r, wm), nxt(r, wm);
  // First step to (1,1); theta_1 = 0 by convention (first step contributes
  // nothing), and (1,1) lies on a grid ray, so the index starts at 0.
  cur.at(1, 1, 0) = 1;
  // theta_0 = theta_1 = 0 must lie in the interval for any excursion to exist.
  bool feasible = beta_minus < 0 && 0 < beta_plus;
  for (int i = 2; feasible && i <= n; ++i) {
    nxt.clear();
    for (int x = -r; x <= r; ++x)
      for (int y = -r; y <= r; ++y) {
        if (x == 0 && y == 0) continue;
        for (long w = -wm; w <= wm; ++w) {
          u128 c = cur.at(x, y, w);
          if (c == 0) continue;
          WindingPos s{x, y, w};
          for (int dx : {-1, 1})
            for (int dy : {-1, 1}) {
              int nx = x + dx, ny = y + dy;
              if (nx == 0 && ny == 0) {
                // Termination: last step contributes no winding; the final
                // angle is theta_{i-1} = w (position (x,y) is a diagonal
                // point, hence on-grid).
                if (w == alpha) out[i] += to_int(c);
                continue;
              }
              WindingPos t = winding_step(s, dx, dy);
              if (i < n &&
                  in_interval(t.w, on_grid(nx, ny), beta_minus, beta_plus) &&
                  std::labs(t.w) < wm)
                nxt.at(nx, ny, t.w) += c;
            }
        }
      }
    std::swap(cur, nxt);
  }
  if (!fixed_first_step)
    for (Int& v : out) v *= 4;
  return out;
}

std::map<std::pair<int, long>, std::vector<Int>> count_walks_all(int p, long bm,
                                                                 long bp,
                                                                 int order) {
  if (order > 24) throw BudgetExceeded("count_walks_all: order > 24");
  if (p < 1 || order < 0) throw InvalidQuery("count_walks_all: bad query");
  int n = order;
  int r = p + n;
  long wm = 2L * n + 10;
  std::map<std::pair<int, long>, std::vector<Int>> out;
  auto harvest = [&](int l, long a, int len, const Int& c) {
    auto& v = out[{l, a}];
    if (v.empty()) v.assign(n + 1, Int(0));
    v[len] += c;
  };
  harvest(p, 0, 0, Int(1));  // empty walk
  if (n == 0) return out;
  Table cur(r, wm), nxt(r, wm);
  cur.at(p, 0, 0) = 1;
  for (int i = 1; i <= n; ++i) {
    nxt.clear();
    for (int x = -r; x <= r; ++x)
      for (int y = -r; y <= r; ++y) {
        if (x == 0 && y == 0) continue;
        for (long w = -wm; w <= wm; ++w) {
          u128 c = cur.at(x, y, w);
          if (c == 0) continue;
          WindingPos s{x, y, w};
          for (int dx : {-1, 1})
            for (int dy : {-1, 1}) {
              int nx = x + dx, ny = y + dy;
              if (nx == 0 && ny == 0) continue;
              WindingPos t = winding_step(s, dx, dy);
              if (nx == 0 || ny == 0)
                harvest(std::abs(nx) + std::abs(ny), t.w, i, to_int(c));
              if (i < n && in_interval(t.w, on_grid(nx, ny), bm, bp) &&
                  std::labs(t.w) < wm)
                nxt.at(nx, ny, t.w) += c;
            }
        }
      }
    std::swap(cur, nxt);
  }
  return out;
}

LoopCounts count_loops(int n_index, LoopParity parity, int max_len) {
  if (max_len > 20) throw BudgetExceeded("count_loops: max_len > 20");
  if (n_index == 0) throw DomainError("count_loops: winding index must be nonzero");
  int N = std::max(max_len, 0);
  LoopCounts out;
  out.counts.assign(N + 1, Int(0));
  out.biased.assign(N + 1, Rat(0));
  long target = 8L * n_index;
  int h = N / 2;
  long wm = 2L * N + 10;
  int want = parity == LoopParity::Odd ? 1 : 0;
  if (h >= 1 && std::labs(target) <= wm) {
    Table cur(h, wm), nxt(h, wm);
    for (int rx = -(h - 1); rx <= h - 1; ++rx)
      for (int ry = -(h - 1); ry <= h - 1; ++ry) {
        if ((std::abs(rx + ry) & 1) != want) continue;
        if (rx == 0 && ry == 0) continue;
        // A loop of winding index != 0 must enclose the origin strictly in
        // both coordinates; each step changes each coordinate by exactly 1.
        int need_x = rx != 0 ? 2 * (std::abs(rx) + 1) : 4;
        int need_y = ry != 0 ? 2 * (std::abs(ry) + 1) : 4;
        if (need_x > N || need_y > N) continue;
        cur.clear();
        cur.at(0, 0, 0) = 1;  // coordinates relative to the root
        for (int i = 1; i <= N; ++i) {
          nxt.clear();
          for (int ux = -h; ux <= h; ++ux)
            for (int uy = -h; uy <= h; ++uy) {
              int x = rx + ux, y = ry + uy;
              if (x == 0 && y == 0) continue;
              for (long w = -wm; w <= wm; ++w) {
                u128 c = cur.at(ux, uy, w);
                if (c == 0) continue;
                WindingPos s{x, y, w};
                for (int dx : {-1, 1})
                  for (int dy : {-1, 1}) {
                    int vx = ux + dx, vy = uy + dy;
                    if (std::abs(vx) > h || std::abs(vy) > h) continue;
                    int nx = x + dx, ny = y + dy;
                    if (nx == 0 && ny == 0) continue;
                    WindingPos t = winding_step(s, dx, dy);
                    if (vx == 0 && vy == 0 && t.w == target)
                      out.counts[i] += to_int(c);
                    if (i < N && std::labs(t.w) < wm)
                      nxt.at(vx, vy, t.w) += c;
                  }
              }
            }
          std::swap(cur, nxt);
        }
      }
  }
  for (int len = 1; len <= N; ++len)
    out.biased[len] = Rat(out.counts[len]) / len;
  return out;
}

std::vector<FreeBuckets> free_walk_buckets(int p, bool origin_mode,
                                           int max_len) {
  if (max_len > 63) throw BudgetExceeded("free_walk_buckets: max_len > 63");
  if (max_len < 1 || (!origin_mode && p < 1))
    throw InvalidQuery("free_walk_buckets: bad query");
  int N = max_len;
  std::vector<FreeBuckets> out(N + 1);
  int r = origin_mode ? N : p + N;
  long wm = 2L * N + 10;
  Table cur(r, wm), nxt(r, wm);
  int first = 1;  // first harvested length driven by the DP below
  u128 absorbed_scaled = 0;
  if (origin_mode) {
    // All four first steps give winding 0 at the first midpoint (the
    // reference direction); by symmetry the continuation counts from (1,1)
    // stand for all four starts, so everything is seeded with weight 4.
    out[1].atom[0] = 4;
    cur.at(1, 1, 0) = 4;
    first = 2;
  } else {
    cur.at(p, 0, 0) = 1;
  }
  for (int n = first; n <= N; ++n) {
    // States in `cur` hold n-1 full steps; harvest the midpoint of step n,
    // then extend by the full step.
    nxt.clear();
    u128 newly_absorbed = 0;
    for (int x = -r; x <= r; ++x)
      for (int y = -r; y <= r; ++y) {
        if (x == 0 && y == 0) continue;
        for (long w = -wm; w <= wm; ++w) {
          u128 c = cur.at(x, y, w);
          if (c == 0) continue;
          WindingPos doubled{2 * x, 2 * y, w};
          for (int dx : {-1, 1})
            for (int dy : {-1, 1}) {
              WindingPos m = winding_move(doubled, 2 * x + dx, 2 * y + dy);
              if (std::abs(2 * x + dx) == std::abs(2 * y + dy))
                out[n].atom[m.w] += to_int(c);
              else
                out[n].octant[m.w] += to_int(c);
              int nx = x + dx, ny = y + dy;
              if (nx == 0 && ny == 0) {
                newly_absorbed += c;
                continue;
              }
              if (n < N) {
                WindingPos t = winding_step(WindingPos{x, y, w}, dx, dy);
                if (std::labs(t.w) < wm) nxt.at(nx, ny, t.w) += c;
              }
            }
        }
      }
    if (origin_mode) {
      out[n].absorbed = to_int(absorbed_scaled * 4);
      absorbed_scaled = absorbed_scaled * 4 + newly_absorbed;
    }
    std::swap(cur, nxt);
  }
  return out;
}

Rat ClusterStats::area_expectation(int n) const {
  auto it = area_sum.find(n);
  return it == area_sum.end() ? Rat(0) : Rat(it->second) / Rat(total_walks);
}

Rat ClusterStats::boundary_expectation(int n) const {
  auto it = boundary_sum.find(n);
  return it == boundary_sum.end() ? Rat(0)
                                  : Rat(it->second) / Rat(total_walks);
}

namespace {

// Analysis of one closed rectilinear walk for cluster_stats. Works on a
// cell grid indexed by the lower-left lattice corner, cells in
// [-l-1, l]^2; the outer ring always has winding index 0.
struct ClusterScratch {
  int l;
  int D;   // vertices per side, 2l+1, coords in [-l, l]
  int C;   // cells per side, 2l+2, lower-left corners in [-l-1, l]
  std::vector<int> netv, usedv;  // vertical edge (a, j)-(a, j+1)
  std::vector<int> usedh;        // horizontal edge (i, b)-(i+1, b)
  std::vector<int> visited;      // lattice vertices
  std::vector<int> index, comp;  // cells

  explicit ClusterScratch(int l_)
      : l(l_), D(2 * l_ + 1), C(2 * l_ + 2),
        netv(static_cast<size_t>(D) * D, 0), usedv(netv.size(), 0),
        usedh(netv.size(), 0), visited(netv.size(), 0),
        index(static_cast<size_t>(C) * C, 0), comp(index.size(), -1) {}

  int vtx(int x, int y) const { return (x + l) * D + (y + l); }
  int cell(int i, int j) const { return (i + l + 1) * C + (j + l + 1); }
  bool cell_ok(int i, int j) const {
    return i >= -l - 1 && i <= l && j >= -l - 1 && j <= l;
  }
  int cell_index(int i, int j) const {
    return cell_ok(i, j) ? index[cell(i, j)] : 0;
  }
  // Edge between horizontally adjacent cells (i,j),(i+1,j) is the vertical
  // edge at (i+1, j); between vertical neighbors (i,j),(i,j+1) the
  // horizontal edge at (i, j+1). Edges outside the vertex box are unused.
  bool v_used(int a, int j) const {
    if (a < -l || a > l || j < -l || j > l - 1) return false;
    return usedv[vtx(a, j)] != 0;
  }
  bool h_used(int i, int b) const {
    if (i < -l || i > l - 1 || b < -l || b > l) return false;
    return usedh[vtx(i, b)] != 0;
  }
};

}  // namespace

ClusterStats cluster_stats(int l) {
  if (l > 4) throw BudgetExceeded("cluster_stats: l > 4");
  if (l < 1) throw InvalidQuery("cluster_stats: l < 1");
  ClusterStats st;
  st.l = l;
  st.total_walks = binomial(2 * l, l) * binomial(2 * l, l);
  int steps = 2 * l;
  ClusterScratch g(l);
  std::vector<int> dir(steps, 0);  // 0:+x 1:+y 2:-x 3:-y
  static const int DX[4] = {1, 0, -1, 0};
  static const int DY[4] = {0, 1, 0, -1};
  Int seen_walks = 0;

  auto analyze = [&]() {
    std::fill(g.netv.begin(), g.netv.end(), 0);
    std::fill(g.usedv.begin(), g.usedv.end(), 0);
    std::fill(g.usedh.begin(), g.usedh.end(), 0);
    std::fill(g.visited.begin(), g.visited.end(), 0);
    std::fill(g.index.begin(), g.index.end(), 0);
    std::fill(g.comp.begin(), g.comp.end(), -1);
    int x = 0, y = 0;
    g.visited[g.vtx(0, 0)] = 1;
    for (int s = 0; s < steps; ++s) {
      int nx = x + DX[dir[s]], ny = y + DY[dir[s]];
      if (dir[s] == 1) {  // up along (x, y)-(x, y+1)
        g.netv[g.vtx(x, y)] += 1;
        g.usedv[g.vtx(x, y)] = 1;
      } else if (dir[s] == 3) {
        g.netv[g.vtx(x, ny)] -= 1;
        g.usedv[g.vtx(x, ny)] = 1;
      } else {
        g.usedh[g.vtx(std::min(x, nx), y)] = 1;
      }
      x = nx;
      y = ny;
      g.visited[g.vtx(x, y)] = 1;
    }
    // Winding index of cell (i, j): signed crossings of the rightward ray
    // from the cell center with vertical walk edges.
    for (int j = -l; j <= l - 1; ++j) {
      int suffix = 0;
      for (int i = l; i >= -l - 1; --i) {
        if (i + 1 <= l) suffix += g.netv[g.vtx(i + 1, j)];
        g.index[g.cell(i, j)] = suffix;
      }
    }
    // Components: equal index, connected through unused edges.
    int ncomp = 0;
    std::vector<int> comp_index, comp_area, comp_perim, comp_interior,
        comp_infinite;
    std::vector<std::pair<int, int>> stack;
    for (int i0 = -l - 1; i0 <= l; ++i0)
      for (int j0 = -l - 1; j0 <= l; ++j0) {
        if (g.comp[g.cell(i0, j0)] >= 0) continue;
        int id = ncomp++;
        int n = g.index[g.cell(i0, j0)];
        comp_index.push_back(n);
        comp_area.push_back(0);
        comp_perim.push_back(0);
        comp_interior.push_back(0);
        comp_infinite.push_back(0);
        stack.clear();
        stack.emplace_back(i0, j0);
        g.comp[g.cell(i0, j0)] = id;
        while (!stack.empty()) {
          auto [i, j] = stack.back();
          stack.pop_back();
          comp_area[id] += 1;
          if (i == -l - 1 || i == l || j == -l - 1 || j == l)
            comp_infinite[id] = 1;
          struct Nb {
            int ni, nj;
            bool used;
          };
          Nb nbs[4] = {{i + 1, j, g.v_used(i + 1, j)},
                       {i - 1, j, g.v_used(i, j)},
                       {i, j + 1, g.h_used(i, j + 1)},
                       {i, j - 1, g.h_used(i, j)}};
          for (const Nb& nb : nbs) {
            bool same = !nb.used && g.cell_ok(nb.ni, nb.nj) &&
                        g.cell_index(nb.ni, nb.nj) == n;
            if (!same) {
              comp_perim[id] += 1;
              continue;
            }
            int cc = g.cell(nb.ni, nb.nj);
            if (g.comp[cc] < 0) {
              g.comp[cc] = id;
              stack.emplace_back(nb.ni, nb.nj);
            }
          }
        }
      }
    // Interior lattice points: unvisited, surrounded by four cells of one
    // component.
    for (int zx = -l; zx <= l; ++zx)
      for (int zy = -l; zy <= l; ++zy) {
        if (g.visited[g.vtx(zx, zy)]) continue;
        int c0 = g.comp[g.cell(zx, zy)];
        if (g.comp[g.cell(zx - 1, zy)] == c0 &&
            g.comp[g.cell(zx, zy - 1)] == c0 &&
            g.comp[g.cell(zx - 1, zy - 1)] == c0)
          comp_interior[c0] += 1;
      }
    for (int id = 0; id < ncomp; ++id) {
      if (comp_infinite[id]) continue;
      if (comp_perim[id] != 2 * comp_area[id] - 2 * comp_interior[id] + 2)
        throw std::logic_error("cluster_stats: perimeter identity violated");
      int n = comp_index[id];
      if (n == 0) {
        st.zero_count += 1;
        st.zero_area += comp_area[id];
      } else {
        st.cluster_count[n] += 1;
        st.area_sum[n] += comp_area[id];
        st.boundary_sum[n] += comp_perim[id] - 2;
      }
    }
  };

  // Enumerate closed walks: depth-first over step sequences with the
  // return-feasibility prune |x| + |y| <= remaining steps.
  struct Frame {
    int x, y;
  };
  std::vector<Frame> pos(steps + 1);
  pos[0] = {0, 0};
  int depth = 0;
  dir.assign(steps, 0);
  std::vector<int> choice(steps, -1);
  while (depth >= 0) {
    if (depth == steps) {
      seen_walks += 1;
      analyze();
      --depth;
      continue;
    }
    int& ch = choice[depth];
    ++ch;
    bool advanced = false;
    for (; ch < 4; ++ch) {
      int nx = pos[depth].x + DX[ch], ny = pos[depth].y + DY[ch];
      if (std::abs(nx) + std::abs(ny) > steps - depth - 1) continue;
      dir[depth] = ch;
      pos[depth + 1] = {nx, ny};
      ++depth;
      if (depth < steps) choice[depth] = -1;
      advanced = true;
      break;
    }
    if (!advanced) {
      choice[depth] = -1;
      --depth;
    }
  }
  if (seen_walks != st.total_walks)
    throw std::logic_error("cluster_stats: closed-walk count mismatch");
  return st;
}

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}

// Counter-based generator: the stream is a pure function of (seed, sample,
// counter), so runs are reproducible regardless of interleaving.
inline std::uint64_t rng_at(std::uint64_t seed, std::uint64_t sample,
                            std::uint64_t ctr) {
  return mix64(mix64(seed + 0x9e3779b97f4a7c15ULL * (sample + 1)) ^
               (0xda942042e4dd58b5ULL * (ctr + 1)));
}

inline double rng_uniform(std::uint64_t v) {
  return static_cast<double>(v >> 11) * 0x1.0p-53;
}

}  // namespace

SimResult simulate_winding(PointKind point, bool geometric_time, double k,
                           int fixed_j, long long samples,
                           unsigned long long seed) {
  if (samples < 1) throw InvalidQuery("simulate_winding: samples < 1");
  if (geometric_time && !(k > 0 && k < 1))
    throw DomainError("simulate_winding: k must be in (0,1)");
  if (!geometric_time && fixed_j < 0)
    throw InvalidQuery("simulate_winding: negative time");
  std::map<long, long long> hits;
  long long infinite_hits = 0;
  for (long long s = 0; s < samples; ++s) {
    std::uint64_t ctr = 0;
    int j = fixed_j;
    if (geometric_time) {
      double u = rng_uniform(rng_at(seed, s, ctr++));
      if (u <= 0) u = 0x1.0p-60;
      j = static_cast<int>(std::log(u) / std::log(k));
    }
    int x, y;
    long w = 0;
    bool absorbed = false;
    if (point == PointKind::Square) {
      x = 1;
      y = 0;
    } else {
      std::uint64_t b = rng_at(seed, s, ctr++);
      x = (b & 1) ? 1 : -1;
      y = (b & 2) ? 1 : -1;
    }
    int full = point == PointKind::Square ? j : j - 1;  // steps still to take
    for (int i = 0; i < full; ++i) {
      std::uint64_t b = rng_at(seed, s, ctr++);
      int dx = (b & 1) ? 1 : -1;
      int dy = (b & 2) ? 1 : -1;
      if (x + dx == 0 && y + dy == 0) {
        absorbed = true;  // origin point only: odd-parity walks never hit 0
        break;
      }
      WindingPos t = winding_step(WindingPos{x, y, w}, dx, dy);
      x = t.x;
      y = t.y;
      w = t.w;
    }
    if (absorbed) {
      ++infinite_hits;
      continue;
    }
    long center;
    if (point == PointKind::Origin && j == 0) {
      center = 0;  // midpoint of the very first step: winding exactly 0
    } else {
      std::uint64_t b = rng_at(seed, s, ctr++);
      int dx = (b & 1) ? 1 : -1;
      int dy = (b & 2) ? 1 : -1;
      WindingPos m = winding_move(WindingPos{2 * x, 2 * y, w}, 2 * x + dx,
                                  2 * y + dy);
      bool atom = std::abs(2 * x + dx) == std::abs(2 * y + dy);
      long parity = point == PointKind::Square ? 1 : 0;
      if (atom) {
        center = m.w;
      } else {
        center = ((m.w % 2 + 2) % 2) == parity ? m.w : m.w + 1;
      }
      if (((center % 2 + 2) % 2) != parity)
        throw std::logic_error("simulate_winding: bucket parity violated");
    }
    hits[center] += 1;
  }
  SimResult res;
  res.samples = samples;
  res.seed = seed;
  double n = static_cast<double>(samples);
  for (auto& [c, h] : hits) {
    double p = static_cast<double>(h) / n;
    res.bucket[c] = p;
    res.stderror[c] = std::sqrt(p * (1 - p) / n);
  }
  res.infinity = static_cast<double>(infinite_hits) / n;
  res.infinity_stderror =
      std::sqrt(res.infinity * (1 - res.infinity) / n);
  return res;
}

}  // namespace winding
