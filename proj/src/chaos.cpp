#include "fracwave/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fracwave/greens.hpp"
#include "fracwave/rng.hpp"

namespace fracwave {

std::vector<std::pair<double, double>> gauss_legendre_01(int n) {
  // Newton iteration on P_n; nodes mapped from [-1,1] to [0,1]
  std::vector<std::pair<double, double>> out(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    out[i] = {0.5 * (1.0 - x), 0.5 * w};
    out[n - 1 - i] = {0.5 * (1.0 + x), 0.5 * w};
  }
  return out;
}

std::complex<double> chaos_kernel_hat(const std::vector<double>& s,
                                      const std::vector<double>& xi, double t,
                                      double x, double kappa) {
  const std::size_t n = s.size();
  if (n == 0 || xi.size() != n)
    throw std::invalid_argument("chaos_kernel_hat needs matching nonempty s and xi");
  for (std::size_t j = 0; j < n; ++j) {
    const double lo = j == 0 ? 0.0 : s[j - 1];
    if (!(s[j] > lo) || !(s[j] < t))
      throw std::invalid_argument("chaos_kernel_hat requires 0 < s_1 < ... < s_n < t");
  }
  double prod = 1.0, sum_xi = 0.0, log_fact = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    sum_xi += xi[j];
    const double gap = (j + 1 < n ? s[j + 1] : t) - s[j];
    prod *= green_hat(gap, sum_xi, kappa);
    log_fact += std::log(double(j + 1));
  }
  const double amp = prod * std::exp(-log_fact);
  return {amp * std::cos(x * sum_xi), -amp * std::sin(x * sum_xi)};
}

double J_integral(int a, const ValidatedParams& p, const QuadratureSpec& q) {
  if (a < 0 || a > 2) throw std::domain_error("J_integral letter must be 0, 1 or 2");
  const double k = p.params.kappa;
  const double H = p.params.hurst_space;
  const double alpha = 3.0 - (2.0 / k) * a * (1.0 - 2.0 * H) - 2.0 / k;
  if (!(alpha > 1.0) || !(alpha < 3.0))
    throw std::domain_error("J_integral diverges: exponent " + std::to_string(alpha) +
                            " outside (1,3)");
  auto f = [alpha](double x) { return std::sin(x) * std::sin(x) * std::pow(x, -alpha); };
  const double X = 400.0;
  QuadResult head = integrate_adaptive(f, 0.0, M_PI, q.tolerance, 1e-300, q.max_subdivisions);
  QuadResult body = integrate_chunked(f, M_PI, X, M_PI, q.tolerance);
  // sin^2 x = (1 - cos 2x)/2
  double tail = 0.5 * power_law_tail(X, -alpha);
  QuadResult osc = oscillatory_cos_tail(X, -alpha, 2.0);
  tail -= 0.5 * osc.value;
  return 2.0 * (head.value + body.value + tail);
}

// ---------------------------------------------------------------------------
// Triangle-time primitives over {u, v > 0, u + v < t}.
//
// D(m,n) = int u^m v^n du dv = m! n! t^{m+n+2} / (m+n+2)!
static double triangle_moment(int m, int n, double t) {
  return std::exp(std::lgamma(m + 1.0) + std::lgamma(n + 1.0) +
                  (m + n + 2.0) * std::log(t) - std::lgamma(m + n + 3.0));
}

// T(A) = int cos(Au) du dv = (1 - cos(At)) / A^2
static double triangle_cos(double A, double t) {
  const double z = A * t;
  if (std::abs(z) < 1e-2) {
    // (1 - cos z)/A^2 = t^2 (1/2 - z^2/24 + z^4/720)
    const double z2 = z * z;
    return t * t * (0.5 - z2 / 24.0 + z2 * z2 / 720.0);
  }
  return (1.0 - std::cos(z)) / (A * A);
}

// U(A,B) = int cos(Au) cos(Bv) du dv
//        = (cos(At) - cos(Bt)) / (B^2 - A^2), stabilized near A = B.
static double triangle_coscos(double A, double B, double t) {
  const double M = 0.5 * (A + B);
  if (std::abs(A - B) < 1e-6 * M) {
    // -f'(M)/(2M) with f(x) = cos(xt)
    return t * std::sin(M * t) / (2.0 * M);
  }
  return (std::cos(A * t) - std::cos(B * t)) / ((B - A) * (B + A));
}

// M_m(b) = int u^m sin^2(vb) du dv
static double triangle_um_sin2(int m, double b, double t) {
  const double z = 2.0 * b * t;
  if (z <= 4.0) {
    // sin^2(x) = sum_{j>=1} (-1)^{j+1} 2^{2j-1} x^{2j} / (2j)!
    double sum = 0.0, coef = 0.5;
    for (int j = 1; j <= 24; ++j) {
      coef *= 4.0 / ((2.0 * j) * (2.0 * j - 1.0));  // 2^{2j-1}/(2j)! stepwise
      const double term = (j % 2 ? coef : -coef) * std::pow(b, 2 * j) *
                          triangle_moment(m, 2 * j, t);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
  }
  // 1/2 [D(m,0) - V_m(2b)], V_m(B) = m! * IL_{m+1}(B) with
  // IL_k = L^{-1}[1/(s^k (s^2+B^2))], IL_k = (t^{k-1}/(k-1)! - IL_{k-2}) / B^2
  const double B = 2.0 * b;
  const double B2 = B * B;
  double il0 = std::sin(B * t) / B;               // k = 0
  double il1 = (1.0 - std::cos(B * t)) / B2;      // k = 1
  for (int k = 2; k <= m + 1; ++k) {
    const double tk = std::exp((k - 1.0) * std::log(t) - std::lgamma(double(k)));
    const double il = (tk - il0) / B2;
    il0 = il1;
    il1 = il;
  }
  const double Vm = std::exp(std::lgamma(m + 1.0)) * il1;
  return 0.5 * (triangle_moment(m, 0, t) - Vm);
}

// W(a,b) = int_{u+v<t} sin^2(ua) sin^2(vb) du dv, branch-stabilized.
double triangle_sin2_sin2(double a, double b, double t) {
  a = std::abs(a);
  b = std::abs(b);
  const double za = a * t, zb = b * t;
  if (za < 0.02 && zb < 0.02) {
    const double a2 = a * a, b2 = b * b;
    return a2 * b2 *
           (triangle_moment(2, 2, t) -
            (a2 * triangle_moment(4, 2, t) + b2 * triangle_moment(2, 4, t)) / 3.0 +
            a2 * b2 * triangle_moment(4, 4, t) / 9.0 +
            2.0 * (a2 * a2 * triangle_moment(6, 2, t) +
                   b2 * b2 * triangle_moment(2, 6, t)) / 45.0);
  }
  if (za < 0.02)
    return a * a * triangle_um_sin2(2, b, t) -
           a * a * a * a / 3.0 * triangle_um_sin2(4, b, t);
  if (zb < 0.02) {
    // mirror: swap roles of u and v (the domain is symmetric)
    return b * b * triangle_um_sin2(2, a, t) -
           b * b * b * b / 3.0 * triangle_um_sin2(4, a, t);
  }
  const double area = 0.5 * t * t;
  return 0.25 * (area - triangle_cos(2.0 * a, t) - triangle_cos(2.0 * b, t) +
                 triangle_coscos(2.0 * a, 2.0 * b, t));
}

// ---------------------------------------------------------------------------
// Geometric panel integration for smooth, slowly decaying integrands.
template <class F>
static QuadResult integrate_geometric(const F& f, double a, double b, double rel_tol) {
  double sum = 0.0, err = 0.0;
  double lo = a;
  const double start = std::max(a, 1e-3);
  if (a < start) {
    QuadResult r = integrate_adaptive(f, a, start, rel_tol, 1e-300, 2000);
    sum += r.value;
    err += r.error;
    lo = start;
  }
  while (lo < b) {
    const double hi = std::min(2.0 * lo, b);
    QuadResult r = integrate_adaptive(f, lo, hi, rel_tol, 1e-300, 2000);
    sum += r.value;
    err += r.error;
    lo = hi;
  }
  return {sum, err};
}

// ---------------------------------------------------------------------------
// chaos_norm_white

// t/2 - sin(2tw)/(4w), the exact time integral int_0^t sin^2((t-s) w) ds,
// cancellation-safe for small tw.
static double sin2_time_average(double t, double w) {
  const double z = 2.0 * t * w;
  if (z < 1e-3) {
    const double t3 = t * t * t;
    return t3 * w * w / 3.0 - t3 * t * t * w * w * w * w / 15.0;
  }
  return 0.5 * t - std::sin(z) / (4.0 * w);
}

static ChaosOrderResult chaos_norm_white_order1(double t, const ValidatedParams& p,
                                                const QuadratureSpec& q) {
  const double k = p.params.kappa;
  const double H = p.params.hurst_space;
  const double qexp = 1.0 - 2.0 * H - k;
  auto f = [&](double xi) {
    return std::pow(xi, qexp) * sin2_time_average(t, std::pow(xi, 0.5 * k));
  };
  const double X = std::max(q.frequency_cutoff, 100.0);
  QuadResult head = integrate_adaptive(f, 0.0, 1.0, q.tolerance, 1e-300, q.max_subdivisions);
  QuadResult body = integrate_chunked(f, 1.0, X, M_PI / (2.0 * t), q.tolerance);
  // tail: (t/2) xi^q analytic; - sin(2 t xi^{k/2})/(4 xi^{k/2}) xi^q by parts
  double tail = 0.5 * t * power_law_tail(X, qexp);
  const double py = (2.0 / k) * (qexp - 0.5 * k + 1.0) - 1.0;
  QuadResult osc =
      oscillatory_cos_tail(std::pow(X, 0.5 * k), py, 2.0 * t, -0.5 * M_PI);
  tail -= 0.25 * (2.0 / k) * osc.value;
  ChaosOrderResult out;
  out.order = 1;
  out.value = 2.0 * (head.value + body.value + tail);
  out.error_estimate = 2.0 * (head.error + body.error + 0.25 * (2.0 / k) * osc.error) +
                       1e-12 * std::abs(out.value);
  out.method = ChaosMethod::Quadrature;
  return out;
}

static ChaosOrderResult chaos_norm_white_order2(double t, const ValidatedParams& p,
                                                const QuadratureSpec& q) {
  const double k = p.params.kappa;
  const double H = p.params.hurst_space;
  const double rel = std::max(q.tolerance, 1e-7);
  const double X1 = std::max(q.frequency_cutoff, 2000.0);
  const double X2 = X1;

  // inner(e1) = int_R |e2|^{-k} |e2 - e1|^{1-2H} W(e1^{k/2}, |e2|^{k/2}) de2
  auto inner = [&](double e1) {
    const double a = std::pow(e1, 0.5 * k);
    auto g = [&](double e2) {
      const double ab = std::abs(e2);
      return std::pow(ab, -k) * std::pow(std::abs(e2 - e1), 1.0 - 2.0 * H) *
             triangle_sin2_sin2(a, std::pow(ab, 0.5 * k), t);
    };
    double sum = 0.0;
    // negative side, [0, e1], [e1, X2]; the |e2 - e1| kink gets its own endpoint
    sum += integrate_geometric([&](double y) { return g(-y); }, 0.0, X2, rel).value;
    sum += integrate_geometric(g, 0.0, std::min(e1, X2), rel).value;
    if (e1 < X2)
      sum += integrate_geometric([&](double y) { return g(e1 + y); }, 0.0, X2 - e1, rel).value;
    // both tails: |e2 - e1|^{1-2H} ~ |e2|^{1-2H}, W ~ its large-b asymptote
    const double Winf = triangle_sin2_sin2(a, 1e9, t);
    sum += 2.0 * Winf * power_law_tail(X2, 1.0 - 2.0 * H - k);
    return sum;
  };

  auto outer = [&](double e1) { return std::pow(e1, 1.0 - 2.0 * H - k) * inner(e1); };
  QuadResult main = integrate_geometric(outer, 0.0, X1, rel);

  // e1 tail: inner(e1) ~ e1^{1-2H} C0 with C0 = int |e2|^{-k} W(inf, |e2|^{k/2}) de2
  auto c0f = [&](double y) {
    return std::pow(y, -k) * triangle_sin2_sin2(1e9, std::pow(y, 0.5 * k), t);
  };
  double C0 = 2.0 * (integrate_geometric(c0f, 0.0, X2, rel).value +
                     0.25 * (0.5 * t * t) * power_law_tail(X2, -k));
  const double tail = C0 * power_law_tail(X1, 2.0 * (1.0 - 2.0 * H) - k);

  ChaosOrderResult out;
  out.order = 2;
  out.value = 2.0 * (main.value + tail);
  // dominate by the modelling error of the two tail approximations
  out.error_estimate = 2.0 * (main.error + 0.1 * std::abs(tail)) + 0.002 * std::abs(out.value);
  out.method = ChaosMethod::Quadrature;
  return out;
}

ChaosOrderResult chaos_norm_white_mc(int n, double t, const ValidatedParams& p,
                                     std::uint64_t seed, std::size_t samples) {
  if (n < 1 || n > 4) throw std::domain_error("chaos_norm_white_mc supports n in 1..4");
  if (p.params.temporal_kind != TemporalKind::White)
    throw std::domain_error("chaos_norm_white_mc requires white temporal kind");
  const double k = p.params.kappa;
  const double H = p.params.hurst_space;
  CounterRng rng(seed);
  double mean = 0.0, m2 = 0.0;
  double log_simplex = n * std::log(t) - std::lgamma(n + 1.0);
  // symmetric Pareto proposals with tail index matched to the integrand's
  // coordinate-wise decay (inner coordinates decay like |eta|^{-(k-2(1-2H))},
  // the last like |eta|^{-(k-(1-2H))}); halving the margin keeps the
  // importance weight bounded at infinity, so the variance is benign.
  std::vector<double> tau(n);
  for (int j = 0; j < n; ++j) {
    const double decay = k - (j + 1 < n ? 2.0 : 1.0) * (1.0 - 2.0 * H);
    tau[j] = 1.0 + 0.5 * (decay - 1.0);
  }
  std::vector<double> s(n), eta(n);
  for (std::size_t i = 1; i <= samples; ++i) {
    for (int j = 0; j < n; ++j) s[j] = t * rng.uniform();
    std::sort(s.begin(), s.end());
    double f = std::exp(log_simplex);
    double prev = 0.0;
    for (int j = 0; j < n; ++j) {
      const double u = rng.uniform();
      const double mag = std::pow(std::max(u, 1e-300), -1.0 / (tau[j] - 1.0)) - 1.0;
      eta[j] = rng.uniform() < 0.5 ? mag : -mag;
      // density (tau-1)/2 (1+|eta|)^{-tau}
      const double inv_density =
          2.0 / (tau[j] - 1.0) * std::pow(1.0 + mag, tau[j]);
      const double gap = (j + 1 < n ? s[j + 1] : t) - s[j];
      const double w = std::pow(std::abs(eta[j]), 0.5 * k);
      const double sn = std::sin(gap * w);
      f *= sn * sn * std::pow(std::abs(eta[j]), -k) *
           std::pow(std::abs(eta[j] - prev), 1.0 - 2.0 * H) * inv_density;
      prev = eta[j];
    }
    const double d = f - mean;
    mean += d / double(i);
    m2 += d * (f - mean);
  }
  const double var = m2 / (double(samples) - 1.0);
  ChaosOrderResult out;
  out.order = n;
  out.value = mean;
  out.error_estimate = 3.0 * std::sqrt(var / double(samples));
  out.method = ChaosMethod::MonteCarlo;
  return out;
}

ChaosOrderResult chaos_norm_white(int n, double t, const ValidatedParams& p,
                                  const QuadratureSpec& q, std::uint64_t seed,
                                  std::size_t mc_samples) {
  if (p.params.temporal_kind != TemporalKind::White)
    throw std::domain_error("chaos_norm_white requires white temporal kind");
  if (p.regime != Regime::WaveSolvable)
    throw std::domain_error("chaos_norm_white requires the WaveSolvable regime");
  if (n < 1 || n > 4) throw std::domain_error("chaos_norm_white supports n in 1..4");
  if (t == 0.0) return {n, 0.0, 0.0, ChaosMethod::Quadrature};
  if (t < 0.0) throw std::domain_error("chaos_norm_white requires t >= 0");
  if (n == 1) return chaos_norm_white_order1(t, p, q);
  if (n == 2) return chaos_norm_white_order2(t, p, q);
  return chaos_norm_white_mc(n, t, p, seed, mc_samples);
}

// ---------------------------------------------------------------------------
// explicit upper bound

std::vector<double> chaos_norm_upper_bound_logs(int n_max, double t,
                                                const ValidatedParams& p,
                                                const QuadratureSpec& q) {
  if (p.regime != Regime::WaveSolvable)
    throw std::domain_error("chaos_norm_upper_bound requires the WaveSolvable regime");
  if (n_max < 1) throw std::domain_error("n_max must be >= 1");
  const double ninf = -std::numeric_limits<double>::infinity();
  std::vector<double> out(n_max + 1, ninf);
  if (t == 0.0) return out;
  if (t < 0.0) throw std::domain_error("chaos_norm_upper_bound requires t >= 0");
  const double k = p.params.kappa;
  const double H0 = p.params.hurst_time;
  const double twoH0 = 2.0 * H0;
  double log_w[3];
  for (int a = 0; a <= 2; ++a) {
    const double beta_a = beta_of_letter(a, p.params);
    log_w[a] = std::log(J_integral(a, p, q)) / twoH0 + std::lgamma(1.0 + beta_a);
  }
  std::vector<double> log_sums = alpha_weight_log_sums(n_max, log_w);
  const double beta1 = beta_of_letter(1, p.params);
  for (int n = 1; n <= n_max; ++n) {
    const double beta = n * beta1;  // sum alpha_j = n makes beta independent of alpha
    const double bracket = (n / twoH0) * std::log(2.0 / k) + log_sums[n] +
                           (n + beta) * std::log(t) - std::lgamma(n + 1.0 + beta);
    out[n] = (twoH0 - 1.0) * std::lgamma(n + 1.0) + twoH0 * bracket;
  }
  return out;
}

double chaos_norm_upper_bound_log(int n, double t, const ValidatedParams& p,
                                  const QuadratureSpec& q) {
  return chaos_norm_upper_bound_logs(n, t, p, q)[n];
}

double chaos_norm_upper_bound(int n, double t, const ValidatedParams& p,
                              const QuadratureSpec& q) {
  return std::exp(chaos_norm_upper_bound_log(n, t, p, q));
}

// ---------------------------------------------------------------------------
// divergence probe

static double probe_region(double kappa, double H, double t, double a1, double b1,
                           double a2, double b2) {
  // int_{a1}^{b1} e1^{2(1-2H)-k} int_{a2}^{b2} e2^{-k} W(e1^{k/2}, e2^{k/2}) de2 de1
  const double rel = 1e-6;
  const double p1 = 2.0 * (1.0 - 2.0 * H) - kappa;
  auto outer = [&](double e1) {
    const double a = std::pow(e1, 0.5 * kappa);
    auto g = [&](double e2) {
      return std::pow(e2, -kappa) *
             triangle_sin2_sin2(a, std::pow(e2, 0.5 * kappa), t);
    };
    return std::pow(e1, p1) * integrate_geometric(g, a2, b2, rel).value;
  };
  return integrate_geometric(outer, a1, b1, rel).value;
}

DivergenceProbeResult second_chaos_divergence_probe(double kappa, double H, double t,
                                                    std::vector<double> cutoffs) {
  if (!(H > 0.0) || !(H < 0.5))
    throw std::domain_error("divergence probe requires H in (0, 1/2)");
  // the probe is a pure integral diagnostic, so kappa may exceed the model's
  // upper limit 2 (needed to bracket the threshold from the convergent side)
  if (!(kappa > 0.0) || !(kappa < 3.0))
    throw std::domain_error("divergence probe requires kappa in (0, 3)");
  if (cutoffs.empty()) cutoffs = {1e2, 4e2, 1.6e3, 6.4e3, 2.56e4};
  if (cutoffs.size() < 3 || !std::is_sorted(cutoffs.begin(), cutoffs.end()))
    throw std::invalid_argument("cutoffs must be at least 3 increasing values");

  DivergenceProbeResult out;
  out.cutoffs = cutoffs;
  double I = probe_region(kappa, H, t, 0.0, cutoffs[0], 0.0, cutoffs[0]);
  out.values.push_back(I);
  for (std::size_t kk = 1; kk < cutoffs.size(); ++kk) {
    const double lo = cutoffs[kk - 1], hi = cutoffs[kk];
    // L-shaped shell between the square cutoffs
    const double d = probe_region(kappa, H, t, lo, hi, 0.0, hi) +
                     probe_region(kappa, H, t, 0.0, lo, lo, hi);
    out.increments.push_back(d);
    I += d;
    out.values.push_back(I);
    out.ratios.push_back(out.values[kk] / out.values[kk - 1]);
  }

  const std::size_t m = out.increments.size();
  bool positive = true;
  for (std::size_t i = m >= 2 ? m - 2 : 0; i < m; ++i)
    if (!(out.increments[i] > 0.0)) positive = false;
  if (!positive) {
    out.verdict = ProbeVerdict::Convergent;
    return out;
  }
  // least-squares slope of log(increment) vs log(upper cutoff)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(out.increments[i] > 0.0)) continue;
    const double x = std::log(cutoffs[i + 1]);
    const double y = std::log(out.increments[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  out.increment_slope = (used * sxy - sx * sy) / (used * sxx - sx * sx);
  out.slope_defined = true;
  out.verdict =
      out.increment_slope >= -0.035 ? ProbeVerdict::Divergent : ProbeVerdict::Convergent;
  return out;
}

}  // namespace fracwave
