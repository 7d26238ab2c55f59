#include "fracwave/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracwave/chaos.hpp"
#include "fracwave/rng.hpp"

namespace fracwave {

static const double kNegInf = -std::numeric_limits<double>::infinity();

static double log_add(double x, double y) {
  if (x == kNegInf) return y;
  if (y == kNegInf) return x;
  const double m = std::max(x, y);
  return m + std::log1p(std::exp(std::min(x, y) - m));
}

SlopeFit least_squares_fit(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 2) throw std::invalid_argument("fit needs at least 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(pts.size());
  for (auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  SlopeFit f;
  f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  f.intercept = (sy - f.slope * sx) / n;
  for (auto& [x, y] : pts)
    f.max_residual = std::max(f.max_residual, std::abs(y - f.slope * x - f.intercept));
  f.points = pts;
  f.points_fitted = int(pts.size());
  return f;
}

static MomentSeries assemble_series(const std::vector<double>& log_terms_1based, int N) {
  MomentSeries s;
  s.orders_used = N;
  s.terms.assign(N + 1, 0.0);
  s.log_terms.assign(N + 1, kNegInf);
  s.terms[0] = 1.0;
  s.log_terms[0] = 0.0;
  double log_sum = 0.0;
  for (int n = 1; n <= N; ++n) {
    s.log_terms[n] = log_terms_1based[n];
    s.terms[n] = std::exp(log_terms_1based[n]);
    log_sum = log_add(log_sum, log_terms_1based[n]);
  }
  s.log_partial_sum = log_sum;
  s.partial_sum = std::exp(log_sum);
  if (N >= 2 && s.log_terms[N] != kNegInf) {
    const double r = std::exp(s.log_terms[N] - s.log_terms[N - 1]);
    s.last_ratio = r;
    if (r < 0.5) {
      s.tail_bound = std::exp(s.log_terms[N]) * r / (1.0 - r);
      s.tail_controlled = true;
    } else {
      s.tail_controlled = false;
    }
  } else if (s.log_terms.back() == kNegInf) {
    s.tail_bound = 0.0;
  }
  return s;
}

MomentSeries second_moment_upper(double t, const ValidatedParams& p, int N,
                                 const QuadratureSpec& q) {
  if (p.regime != Regime::WaveSolvable)
    throw std::domain_error("second_moment_upper requires the WaveSolvable regime");
  if (N < 1 || N > 400) throw std::domain_error("second_moment_upper supports N in 1..400");
  if (t < 0.0) throw std::domain_error("t must be >= 0");
  if (t == 0.0) return assemble_series(std::vector<double>(N + 1, kNegInf), N);
  return assemble_series(chaos_norm_upper_bound_logs(N, t, p, q), N);
}

double lower_c_constant(const ValidatedParams& p, const QuadratureSpec& q) {
  if (!p.solvable()) throw std::domain_error("lower_c_constant requires a solvable regime");
  const double k = p.params.kappa;
  const double H = p.params.hurst_space;
  auto f = [k, H](double e) {
    const double d = 1.0 + std::pow(e, k);
    return std::pow(e, 1.0 - 2.0 * H) / (d * d);
  };
  const double X = 1e5;
  QuadResult r = integrate_adaptive(f, 0.0, 1.0, q.tolerance, 1e-300, q.max_subdivisions);
  QuadResult r2 = integrate_adaptive(f, 1.0, X, q.tolerance, 1e-300, q.max_subdivisions);
  return r.value + r2.value + power_law_tail(X, 1.0 - 2.0 * H - 2.0 * k);
}

static std::vector<double> lower_log_terms(double t, const ValidatedParams& p, int N,
                                           const QuadratureSpec& q) {
  const double k = p.params.kappa;
  const double H = p.params.hurst_space;
  const double H0 = p.params.hurst_time;
  const double c = lower_c_constant(p, q);
  const double texp = 2.0 * H0 + 2.0 - (4.0 - 4.0 * H) / k;
  const double gexp = 4.0 * (1.0 - (1.0 - H) / k);
  std::vector<double> lt(N + 1, kNegInf);
  if (t <= 0.0) return lt;
  for (int n = 1; n <= N; ++n)
    lt[n] = n * std::log(c) + std::lgamma(n + 1.0) + n * texp * std::log(t) -
            std::lgamma(gexp * n + 1.0);
  return lt;
}

MomentSeries second_moment_lower(double t, const ValidatedParams& p, int N,
                                 const QuadratureSpec& q) {
  if (p.regime != Regime::WaveSolvable)
    throw std::domain_error("second_moment_lower requires the WaveSolvable regime");
  if (N < 1 || N > 400) throw std::domain_error("second_moment_lower supports N in 1..400");
  if (t < 0.0) throw std::domain_error("t must be >= 0");
  return assemble_series(lower_log_terms(t, p, N, q), N);
}

double second_moment_lower_max_log(double t, const ValidatedParams& p, int N,
                                   const QuadratureSpec& q) {
  std::vector<double> lt = lower_log_terms(t, p, N, q);
  double best = kNegInf;
  for (int n = 1; n <= N; ++n) best = std::max(best, lt[n]);
  return log_add(0.0, best);  // 1 + max term
}

ScalingCheck a1_scaling_check(double t, const ValidatedParams& p, const QuadratureSpec& q) {
  if (!p.solvable()) throw std::domain_error("a1_scaling_check requires a solvable regime");
  const double k = p.params.kappa;
  const double H = p.params.hurst_space;
  const double pe = 1.0 - 2.0 * H - 2.0 * k;
  auto A1 = [&](double tt) {
    auto f = [&](double e) {
      const double c = 1.0 - std::cos(tt * std::pow(e, 0.5 * k));
      return c * c * std::pow(e, pe);
    };
    const double X = std::max(q.frequency_cutoff, 100.0);
    QuadResult head = integrate_adaptive(f, 0.0, 1.0, q.tolerance, 1e-300, q.max_subdivisions);
    QuadResult body = integrate_chunked(f, 1.0, X, M_PI / (2.0 * tt), q.tolerance);
    // (1-cos y)^2 = 3/2 - 2 cos y + cos(2y)/2
    double tail = 1.5 * power_law_tail(X, pe);
    const double Xk = std::pow(X, 0.5 * k);
    const double py = (2.0 / k) * (pe + 1.0) - 1.0;
    tail += (2.0 / k) * (-2.0 * oscillatory_cos_tail(Xk, py, tt).value +
                         0.5 * oscillatory_cos_tail(Xk, py, 2.0 * tt).value);
    return head.value + body.value + tail;
  };
  ScalingCheck out;
  out.ratio = A1(t) / A1(1.0);
  out.predicted = std::pow(t, 4.0 * (1.0 - (1.0 - H) / k));
  return out;
}

LaplaceCheck laplace_sine_product_check(const ValidatedParams& p,
                                        const std::vector<double>& eta,
                                        const QuadratureSpec& q, std::uint64_t seed,
                                        std::size_t samples) {
  const int n = int(eta.size());
  if (n < 1 || n > 3)
    throw std::domain_error("laplace_sine_product_check supports 1 to 3 frequencies");
  const double k = p.params.kappa;
  std::vector<double> w(n);
  double rhs = 1.0;
  for (int j = 0; j < n; ++j) {
    w[j] = std::pow(std::abs(eta[j]), 0.5 * k);
    rhs *= w[j] / (1.0 + w[j] * w[j]);
  }
  LaplaceCheck out;
  out.rhs = rhs;
  if (n == 1) {
    // inner time integral is (1 - cos(t w))/w exactly
    auto f = [&](double t) { return std::exp(-t) * (1.0 - std::cos(t * w[0])) / w[0]; };
    const double T = 40.0;
    QuadResult r = integrate_chunked(f, 0.0, T, M_PI / std::max(w[0], 1.0), q.tolerance);
    out.lhs = r.value;
    out.lhs_error = r.error + 2.0 * std::exp(-T) / w[0];
    return out;
  }
  CounterRng rng(seed);
  double mean = 0.0, m2 = 0.0;
  std::vector<double> s(n);
  for (std::size_t i = 1; i <= samples; ++i) {
    const double t = rng.exponential();
    for (int j = 0; j < n; ++j) s[j] = t * rng.uniform();
    std::sort(s.begin(), s.end());
    double f = std::pow(t, n) / std::exp(std::lgamma(n + 1.0));
    for (int j = 0; j < n; ++j) {
      const double gap = (j + 1 < n ? s[j + 1] : t) - s[j];
      f *= std::sin(gap * w[j]);
    }
    const double d = f - mean;
    mean += d / double(i);
    m2 += d * (f - mean);
  }
  out.lhs = mean;
  out.lhs_error = 3.0 * std::sqrt(m2 / (double(samples) - 1.0) / double(samples));
  return out;
}

SlopeFit lyapunov_fit(const std::vector<std::pair<double, double>>& series) {
  if (series.size() < 4) throw std::invalid_argument("lyapunov_fit needs >= 4 horizons");
  std::vector<std::pair<double, double>> pts;
  for (auto& [t, logm] : series) {
    if (!(logm > 0.0))
      throw std::domain_error("lyapunov_fit requires moments > 1 (log log undefined)");
    pts.emplace_back(std::log(t), std::log(logm));
  }
  const std::size_t m = pts.size();
  const std::size_t tail_count = std::max<std::size_t>((m + 1) / 2, 2);
  std::vector<std::pair<double, double>> tail(pts.end() - tail_count, pts.end());
  SlopeFit f = least_squares_fit(tail);
  f.points = pts;
  f.points_fitted = int(tail_count);
  return f;
}

double p_moment_upper_log(double t, double p_order, const ValidatedParams& p,
                          const QuadratureSpec& q) {
  if (!(p_order >= 2.0)) throw std::domain_error("p_moment_upper_log requires p >= 2");
  const int N = 400;
  std::vector<double> lb = chaos_norm_upper_bound_logs(N, t, p, q);
  double log_sum = 0.0;  // n = 0 term
  for (int n = 1; n <= N; ++n) {
    const double lt = 0.5 * n * std::log(p_order - 1.0) + 0.5 * lb[n];
    log_sum = log_add(log_sum, lt);
    if (n > 4 && lt < log_sum - 60.0 && lb[n] < lb[n - 1]) break;
  }
  return log_sum;
}

IntermittencyReport weak_intermittency_report(const ValidatedParams& p, double horizon,
                                              const QuadratureSpec& q) {
  const ExponentSet ex = exponents(p);
  IntermittencyReport rep;
  rep.growth_exponent = ex.growth;
  rep.horizon = horizon;
  const double rate = std::pow(horizon, ex.growth);
  rep.lower_rate_p2 = second_moment_lower(horizon, p, 400, q).log_partial_sum / rate;
  for (double pp : {2.0, 4.0, 8.0})
    rep.upper_rates.emplace_back(pp, pp * p_moment_upper_log(horizon, pp, p, q) / rate);
  bool finite = true;
  for (auto& [pp, r] : rep.upper_rates)
    if (!std::isfinite(r)) finite = false;
  rep.weakly_intermittent = rep.lower_rate_p2 > 0.0 && finite;
  return rep;
}

}  // namespace fracwave
