#include "winding/elliptic_float.hpp"

#include <cmath>
#include <vector>

#include "winding/rat.hpp"

namespace winding {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kQCutoff = 0.999999;

double agm_K_of(double m_sin)  // K as function of the modulus value
{
  double a = 1.0, b = std::sqrt(1.0 - m_sin * m_sin);
  for (int it = 0; it < 60 && std::fabs(a - b) > 1e-17 * a; ++it) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}
}  // namespace

FloatEval agm_eval(double k) {
  if (!(k > 0.0 && k < 1.0)) throw DomainError("agm_eval: k must be in (0,1)");
  FloatEval f;
  f.k = k;
  double kp = std::sqrt((1.0 - k) * (1.0 + k));
  f.K = agm_K_of(k);
  f.K_prime = agm_K_of(kp);
  // E from the AGM side sums: E = K (1 - sum 2^{n-1} c_n^2).
  double a = 1.0, b = kp, c = k, sum = 0.5 * c * c;
  int n = 0;
  while (std::fabs(c) > 1e-17 && n < 60) {
    double an = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    ++n;
    sum += std::ldexp(c * c, n - 1);
  }
  f.E = f.K * (1.0 - sum);
  f.q = std::exp(-kPi * f.K_prime / f.K);
  return f;
}

namespace {
void check_q(double q) {
  if (!(q > 0.0 && q < kQCutoff))
    throw DomainError("theta: q outside (0, 0.999999)");
}
}  // namespace

double theta1(double z, double q) {
  check_q(q);
  double s = 0.0;
  for (int n = 0;; ++n) {
    double term = 2.0 * std::pow(q, (n + 0.5) * (n + 0.5)) *
                  std::sin((2 * n + 1) * z);
    s += (n % 2 == 0) ? term : -term;
    if (std::fabs(term) < 1e-16 * (std::fabs(s) + 1e-300) && n > 2) break;
  }
  return s;
}

double theta1_dz(double z, double q) {
  check_q(q);
  double s = 0.0;
  for (int n = 0;; ++n) {
    double term = 2.0 * (2 * n + 1) * std::pow(q, (n + 0.5) * (n + 0.5)) *
                  std::cos((2 * n + 1) * z);
    s += (n % 2 == 0) ? term : -term;
    if (std::fabs(term) < 1e-16 * (std::fabs(s) + 1e-300) && n > 2) break;
  }
  return s;
}

double theta4(double z, double q) {
  check_q(q);
  double s = 1.0;
  for (int n = 1;; ++n) {
    double term = 2.0 * std::pow(q, double(n) * n) * std::cos(2 * n * z);
    s += (n % 2 == 0) ? term : -term;
    if (std::fabs(term) < 1e-16 * (std::fabs(s) + 1e-300) && n > 2) break;
  }
  return s;
}

double theta4_dz(double z, double q) {
  check_q(q);
  double s = 0.0;
  for (int n = 1;; ++n) {
    double term = -4.0 * n * std::pow(q, double(n) * n) * std::sin(2 * n * z);
    s += (n % 2 == 0) ? term : -term;
    if (std::fabs(term) < 1e-16 * (std::fabs(s) + 1e-300) && n > 4) break;
  }
  return s;
}

SnCnDn jacobi_sn_cn_dn(double u, double k) {
  if (!(k > 0.0 && k < 1.0)) throw DomainError("jacobi_sn_cn_dn: k in (0,1)");
  // Descending AGM (Abramowitz & Stegun 16.4).
  std::vector<double> av, cv;
  double a = 1.0, b = std::sqrt(1.0 - k * k), c = k;
  av.push_back(a);
  cv.push_back(c);
  while (std::fabs(c) > 1e-17 * a && av.size() < 60) {
    double an = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    av.push_back(a);
    cv.push_back(c);
  }
  int N = static_cast<int>(av.size()) - 1;
  // back-recurrence: sin(2 phi_{n-1} - phi_n) = (c_n/a_n) sin(phi_n)
  double phi = std::ldexp(av[N] * u, N);
  for (int n = N; n >= 1; --n) {
    double s = cv[n] / av[n] * std::sin(phi);
    s = std::fmin(1.0, std::fmax(-1.0, s));
    phi = 0.5 * (std::asin(s) + phi);
  }
  SnCnDn r;
  r.sn = std::sin(phi);
  r.cn = std::cos(phi);
  // dn from the algebraic identity; the quotient form is ill-conditioned near K
  r.dn = std::sqrt(std::fmax(0.0, 1.0 - k * k * r.sn * r.sn));
  return r;
}

double jacobi_zeta(double u, double k) {
  FloatEval f = agm_eval(k);
  double v = kPi * u / (2.0 * f.K);
  return kPi / (2.0 * f.K) * theta4_dz(v, f.q) / theta4(v, f.q);
}

double digamma(double x) {
  // recurrence up, then asymptotic series
  double r = 0.0;
  while (x < 10.0) {
    r -= 1.0 / x;
    x += 1.0;
  }
  double ix = 1.0 / x, ix2 = ix * ix;
  r += std::log(x) - 0.5 * ix;
  // Bernoulli tail: sum B_2n/(2n) x^{-2n}
  static const double c[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                             1.0 / 132, -691.0 / 32760, 1.0 / 12};
  double p = ix2;
  for (double coef : c) {
    r -= coef * p;
    p *= ix2;
  }
  return r;
}

}  // namespace winding
