#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracwave {

// Raised when an integral cannot be resolved to the requested accuracy.
class accuracy_error : public std::runtime_error {
public:
  accuracy_error(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved) + ")"),
        achieved_error(achieved) {}
  double achieved_error;
};

enum class TailPolicy { Envelope, PowerExtrapolate };

struct QuadratureSpec {
  double tolerance = 1e-9;        // relative
  int max_subdivisions = 8000;
  double frequency_cutoff = 1e4;
  TailPolicy tail_policy = TailPolicy::PowerExtrapolate;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

// Gauss(7)-Kronrod(15) panel. Nodes/weights for [-1,1], positive half.
template <class F>
QuadResult quad_gk15(const F& f, double a, double b) {
  static const double xk[8] = {
      0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
      0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
  static const double wk[8] = {
      0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
      0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
  static const double wg[4] = {
      0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double f0 = f(c);
  double k15 = wk[0] * f0;
  double g7 = wg[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = h * xk[i];
    const double fi = f(c + dx) + f(c - dx);
    k15 += wk[i] * fi;
    if (i % 2 == 0) g7 += wg[i / 2] * fi;
  }
  k15 *= h;
  g7 *= h;
  double err = std::abs(k15 - g7);
  err = 200.0 * err * std::sqrt(200.0 * err);  // standard (200|d|)^{3/2} sharpening
  return {k15, err};
}

// Adaptive bisection on [a,b]. Throws accuracy_error if the subdivision budget
// is exhausted before the requested tolerance is met.
template <class F>
QuadResult integrate_adaptive(const F& f, double a, double b, double rel_tol,
                              double abs_tol = 1e-300, int max_subdivisions = 8000) {
  struct Interval {
    double a, b, value, error;
  };
  QuadResult whole = quad_gk15(f, a, b);
  std::vector<Interval> work{{a, b, whole.value, whole.error}};
  double sum = whole.value;
  double err = whole.error;
  int used = 1;
  while (err > rel_tol * std::abs(sum) + abs_tol) {
    // split the interval with the largest error estimate
    std::size_t worst = 0;
    for (std::size_t i = 1; i < work.size(); ++i)
      if (work[i].error > work[worst].error) worst = i;
    if (used >= max_subdivisions || work[worst].error <= 0.0)
      throw accuracy_error("adaptive quadrature did not converge", err);
    Interval iv = work[worst];
    const double mid = 0.5 * (iv.a + iv.b);
    QuadResult left = quad_gk15(f, iv.a, mid);
    QuadResult right = quad_gk15(f, mid, iv.b);
    sum += left.value + right.value - iv.value;
    err += left.error + right.error - iv.error;
    work[worst] = {iv.a, mid, left.value, left.error};
    work.push_back({mid, iv.b, right.value, right.error});
    ++used;
  }
  return {sum, err};
}

// Fixed-width panels (for oscillatory integrands the width should resolve the
// shortest half-period), each panel refined adaptively.
template <class F>
QuadResult integrate_chunked(const F& f, double a, double b, double chunk,
                             double rel_tol, int max_subdivisions_per_chunk = 64) {
  double sum = 0.0, err = 0.0;
  double x = a;
  while (x < b) {
    const double x2 = std::min(x + chunk, b);
    QuadResult r = quad_gk15(f, x, x2);
    if (r.error > rel_tol * (std::abs(sum) + std::abs(r.value)) + 1e-300)
      r = integrate_adaptive(f, x, x2, rel_tol, 1e-300, max_subdivisions_per_chunk);
    sum += r.value;
    err += r.error;
    x = x2;
  }
  return {sum, err};
}

// Exact tail of a pure power law: int_X^inf x^p dx, p < -1.
inline double power_law_tail(double X, double p) {
  if (p >= -1.0) throw std::domain_error("power_law_tail requires exponent < -1");
  return -std::pow(X, p + 1.0) / (p + 1.0);
}

// Two integration-by-parts terms of int_X^inf cos(u x + phase) x^p dx (p < 0,
// u > 0), with the magnitude of the next term as the error estimate.
inline QuadResult oscillatory_cos_tail(double X, double p, double u, double phase = 0.0) {
  if (u <= 0.0) throw std::domain_error("oscillatory_cos_tail requires u > 0");
  const double t1 = -std::sin(u * X + phase) * std::pow(X, p) / u;
  const double t2 = -p * std::cos(u * X + phase) * std::pow(X, p - 1.0) / (u * u);
  const double rem = std::abs(p * (p - 1.0)) * std::pow(X, p - 2.0) / (u * u * u);
  return {t1 + t2, rem};
}

// Nodes/weights of n-point Gauss-Legendre on [0,1] (Newton on P_n).
std::vector<std::pair<double, double>> gauss_legendre_01(int n);

}  // namespace fracwave
