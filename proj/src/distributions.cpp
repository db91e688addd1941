#include "winding/distributions.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "winding/elliptic_float.hpp"
#include "winding/elliptic_series.hpp"
#include "winding/rat.hpp"
#include "winding/spectral.hpp"

namespace winding {

namespace {

// Largest step count whose exact counts fit the DP's unsigned 128-bit
// accumulators (4^(n+1) < 2^128).
constexpr int kMaxMixSteps = 62;

// Parity of the atom grid: odd quarters for the square point, even for the
// origin point.
int atom_parity(PointKind point) { return point == PointKind::Square ? 1 : 0; }

bool has_parity(long c, int parity) { return ((c % 2) + 2) % 2 == parity; }

// Shared exact bucket tables, grown on demand: the DP is by far the most
// expensive part of the mixing oracle and is reused across windows and
// tails at the same point kind.
const std::vector<FreeBuckets>& bucket_table(PointKind point, int steps) {
  static std::mutex mu;
  static std::vector<FreeBuckets> cache[2];
  std::lock_guard<std::mutex> lock(mu);
  std::vector<FreeBuckets>& slot = cache[point == PointKind::Origin ? 1 : 0];
  if (static_cast<int>(slot.size()) <= steps)
    slot = free_walk_buckets(1, point == PointKind::Origin, steps);
  return slot;
}

// Number of mixed geometric terms: smallest J with k^(J+1) <= tail, capped
// by the exact-count budget.
int mix_terms(double k, double tail) {
  int J = 0;
  while (std::pow(k, J + 1) > tail && J + 1 < kMaxMixSteps) ++J;
  return J;
}

// Mass of the open width-pi window centered at even/odd quarter c among the
// n-step buckets: the two interior atoms and the four interior octants.
double window_mass(const FreeBuckets& fb, long c) {
  Int total = 0;
  for (long a : {c - 1, c + 1}) {
    auto it = fb.atom.find(a);
    if (it != fb.atom.end()) total += it->second;
  }
  for (long o = c - 2; o <= c + 1; ++o) {
    auto it = fb.octant.find(o);
    if (it != fb.octant.end()) total += it->second;
  }
  return to_double(Rat(total));
}

}  // namespace

Series g_alpha_series(int p, long alpha_quarter, int order) {
  if (p < 1 || p > 8) throw BudgetExceeded("g_alpha_series: need 1 <= p <= 8");
  if (order < 0 || order > 30)
    throw BudgetExceeded("g_alpha_series: need order <= 30");
  if (alpha_quarter % 2 == 0)
    throw InvalidBucket(
        "g_alpha_series: bucket centers lie on the odd quarter grid");
  long aq = std::labs(alpha_quarter);
  long S = 2L * order;
  long work = S + 2L * p + 8;
  int max_m = static_cast<int>(work / (aq + 1)) + 3;
  EllipticSeriesPack pack = build_series_pack(work);
  BasisCoeffTable table = basis_table(p, max_m, work);
  Series one = Series::constant(Rat(1), S);
  Series sum = Series::zero(S);
  int zero_run = 0;
  for (int m = 1; m <= max_m; ++m) {
    const Series& c = table.at(p, m);
    if (c.known_zero()) continue;  // <e_p, f_m> vanishes unless p == m mod 2
    // The table stores f_m with the extra sign (-1)^ceil(m/2); multiply it
    // back in together with the (-1)^m of the alternating eigen-sum.
    long sign = (m % 2 == 0 ? 1 : -1) * ((m + 1) / 2 % 2 == 0 ? 1 : -1);
    Series denom = (one + pack.q4_pow(2 * m).truncated(S)).inverse();
    Series term = pack.q4_pow(m * (aq + 1)).truncated(S) * denom *
                  c.truncated(S) * Rat(sign, m);
    if (term.known_zero()) {
      if (++zero_run == 2) break;
    } else {
      zero_run = 0;
      sum += term;
    }
  }
  // Prefactor k/(1-k) = s^2/(1-s^2).
  Series pref =
      Series::monomial(Rat(1), 2).truncated(S) * (one - Series::monomial(Rat(1), 2).truncated(S)).inverse();
  return (pref * sum).truncated(S);
}

double secant_law(PointKind point, double k, long alpha_quarter) {
  if (!(k > 0 && k < 1)) throw DomainError("secant_law: need 0 < k < 1");
  FloatEval ev = agm_eval(k);
  double r = M_PI * ev.K_prime / (4 * ev.K);  // sech argument per quarter
  if (point == PointKind::Square) {
    if (alpha_quarter % 2 != 0)
      throw DomainError("secant_law: square windows center on even quarters");
    double v = M_PI / (2 * k * ev.K) / std::cosh(r * alpha_quarter);
    if (alpha_quarter == 0) v += (k - 1) / k;
    return v;
  }
  if (alpha_quarter % 2 == 0)
    throw DomainError("secant_law: origin windows center on odd quarters");
  double C = M_PI * std::sinh(2 * r) / (2 * ev.K);
  return C / (std::cosh(r * (alpha_quarter - 1)) *
              std::cosh(r * (alpha_quarter + 1)));
}

MixResult geometric_mix_dp(PointKind point, double k, long alpha_quarter,
                           double tail) {
  if (!(k > 0 && k < 1))
    throw DomainError("geometric_mix_dp: need 0 < k < 1");
  if (has_parity(alpha_quarter, atom_parity(point)))
    throw DomainError(
        "geometric_mix_dp: window center must lie off the atom grid");
  int J = mix_terms(k, tail);
  const std::vector<FreeBuckets>& fb = bucket_table(point, J + 1);
  double prob = 0;
  for (int j = 0; j <= J; ++j)
    prob += std::pow(k, j) * (1 - k) * window_mass(fb[j + 1], alpha_quarter) /
            std::ldexp(1.0, 2 * (j + 1));
  return {prob, std::pow(k, J + 1)};
}

Distribution geometric_mix_distribution(PointKind point, double k,
                                        double tail) {
  if (!(k > 0 && k < 1))
    throw DomainError("geometric_mix_distribution: need 0 < k < 1");
  int J = mix_terms(k, tail);
  const std::vector<FreeBuckets>& fb = bucket_table(point, J + 1);
  int parity = atom_parity(point);
  Distribution d;
  double assigned = 0;
  for (int j = 0; j <= J; ++j) {
    double w = std::pow(k, j) * (1 - k) / std::ldexp(1.0, 2 * (j + 1));
    const FreeBuckets& b = fb[j + 1];
    for (const auto& [a, cnt] : b.atom)
      d.buckets[a] += w * to_double(Rat(cnt));
    for (const auto& [o, cnt] : b.octant) {
      long center = has_parity(o, parity) ? o : o + 1;
      d.buckets[center] += w * to_double(Rat(cnt));
    }
    d.infinity_mass += w * to_double(Rat(b.absorbed));
  }
  for (const auto& [c, p] : d.buckets) assigned += p;
  d.tail_bound = std::pow(k, J + 1);
  d.normalization_defect =
      assigned + d.infinity_mass + d.tail_bound - 1;
  return d;
}

CharfunResult charfun(CharVariant variant, double k, double b) {
  if (!(k > 0 && k < 1)) throw DomainError("charfun: need 0 < k < 1");
  FloatEval ev = agm_eval(k);
  double sum = 0;
  if (variant == CharVariant::Cn) {
    // Rounding theta at time zeta + 1/2 to pi Z + pi/2 partitions the line
    // into the disjoint width-pi windows centered at quarters 2 mod 4.
    for (long c = 2;; c += 4) {
      double w = secant_law(PointKind::Square, k, c);
      sum += 2 * std::cos(b * c * M_PI / 4) * w;
      if (w < 1e-18 || c > 100000) break;
    }
  } else {
    // Time zeta - 1/2: a fresh geometric clock contributes the (1-k) atom
    // at zero, then one deterministic step shifts to the zeta + 1/2 law.
    sum = (1 - k) + k * secant_law(PointKind::Square, k, 0);
    for (long c = 4;; c += 4) {
      double w = k * secant_law(PointKind::Square, k, c);
      sum += 2 * std::cos(b * c * M_PI / 4) * w;
      if (w < 1e-18 || c > 100000) break;
    }
  }
  SnCnDn j = jacobi_sn_cn_dn(ev.K * b, k);
  return {sum, variant == CharVariant::Cn ? j.cn : j.dn};
}

}  // namespace winding
