#include "dioph/continued_fraction.hpp"

#include <stdexcept>

namespace dioph {

namespace {

void check_non_square(const Int& D) {
  if (D < 2 || is_perfect_square(D))
    throw std::invalid_argument("expected a non-square integer >= 2");
}

}  // namespace

ContinuedFraction cf_sqrt(const Int& D) {
  check_non_square(D);
  // Standard recurrence: m_{k+1} = d_k a_k - m_k, d_{k+1} = (D - m^2)/d_k,
  // a_{k+1} = floor((a0 + m_{k+1}) / d_{k+1}); the period closes at a_k = 2 a0.
  ContinuedFraction cf;
  cf.a0 = isqrt(D);
  Int m = 0, d = 1, a = cf.a0;
  while (true) {
    m = d * a - m;
    d = (D - m * m) / d;
    a = (cf.a0 + m) / d;
    cf.period.push_back(a);
    if (a == 2 * cf.a0) break;
  }
  return cf;
}

std::pair<Int, Int> pell_fundamental(const Int& D) {
  check_non_square(D);
  ContinuedFraction cf = cf_sqrt(D);
  // Convergents h_k/k_k of the infinite expansion; the first one solving
  // t^2 - D u^2 = 1 is the fundamental solution (reached within two periods).
  Int h_prev = 1, k_prev = 0;
  Int h = cf.a0, k = 1;
  if (h * h - D == 1) return {h, k};
  std::size_t i = 0;
  while (true) {
    const Int& a = cf.period[i % cf.period.size()];
    Int h_next = a * h + h_prev;
    Int k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    if (h * h - D * k * k == 1) return {h, k};
    ++i;
    if (i > 4 * cf.period.size() + 8)
      throw std::logic_error("pell_fundamental: convergent scan did not close");
  }
}

}  // namespace dioph
