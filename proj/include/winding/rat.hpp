#pragma once

// Exact rational scalars. Everything downstream (series coefficients, DP
// accounting, closed-form coefficient checks) is mpq-based; floats only
// appear at the evaluation boundary in elliptic_float / verify reports.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace winding {

using Int = mpz_class;
using Rat = mpq_class;

// C(n, k) with the usual convention: zero for k < 0 or k > n.
Int binomial(long n, long k);

// Exact power of an arbitrary rational; e negative inverts (x must be nonzero).
Rat rat_pow(const Rat& x, long e);

// "num/den" (den omitted when 1). Round-trips through parse_rat.
std::string rat_str(const Rat& x);
Rat parse_rat(const std::string& s);

double to_double(const Rat& x);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace winding
