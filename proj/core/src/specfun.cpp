#include "kgbound/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace kgbound {

namespace {

// Lanczos approximation, g = 7, 9 coefficients. Relative error on the real
// half-line is a few 1e-15, comfortably inside the 1e-12 contract.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double ln_gamma_lanczos(double x) {
  // valid for x >= 0.5
  double a = kLanczos[0];
  double t = x + 6.5;  // x + g - 0.5
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i - 1.0);
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return half_log_two_pi + (x - 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
  // Push small arguments up with ln Gamma(x) = ln Gamma(x+1) - ln x to stay
  // in the Lanczos sweet spot.
  if (x < 0.5) return ln_gamma_lanczos(x + 1.0) - std::log(x);
  return ln_gamma_lanczos(x);
}

double hyp2f1_terminating(int n, double bb, double cc, double s) {
  if (n < 0) throw std::domain_error("hyp2f1_terminating: requires n >= 0");
  if (cc <= 0.0 && cc == std::floor(cc))
    throw std::domain_error("hyp2f1_terminating: cc must not be a nonpositive integer");
  // sum_{k=0}^{n} (-n)_k (bb)_k / ((cc)_k k!) s^k, accumulated term by term:
  // term_{k+1} = term_k * (k-n)(bb+k) / ((cc+k)(k+1)) * s.
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (static_cast<double>(k) - n) * (bb + k) / ((cc + k) * (k + 1.0)) * s;
    sum += term;
  }
  return sum;
}

double jacobi_p(int n, double a, double b, double x) {
  if (n < 0) throw std::domain_error("jacobi_p: requires n >= 0");
  if (a <= -1.0 || b <= -1.0)
    throw std::domain_error("jacobi_p: requires a, b > -1");
  if (n == 0) return 1.0;
  double p_prev = 1.0;
  double p = 0.5 * (a - b + (a + b + 2.0) * x);
  for (int m = 2; m <= n; ++m) {
    // standard three-term recurrence:
    // c1 P_m = (c2 + c3 x) P_{m-1} - c4 P_{m-2}
    const double m2ab = 2.0 * m + a + b;
    const double c1 = 2.0 * m * (m + a + b) * (m2ab - 2.0);
    const double c2 = (m2ab - 1.0) * (a * a - b * b);
    const double c3 = (m2ab - 2.0) * (m2ab - 1.0) * m2ab;
    const double c4 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * m2ab;
    const double p_next = ((c2 + c3 * x) * p - c4 * p_prev) / c1;
    p_prev = p;
    p = p_next;
  }
  return p;
}

namespace {

// Gauss-Kronrod (7,15) nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double kronrod = 0.0;
  double gauss = 0.0;
  double err() const { return std::abs(kronrod - gauss); }
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double fsum = f(c - dx) + f(c + dx);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  return {resk * h, resg * h};
}

struct Panel {
  double a, b, value, err;
  int depth;
};

// Wynn epsilon acceleration of a partial-sum sequence; returns the best
// even-column estimate. Sums tail series whose terms shrink geometrically
// (the endpoint-panel case) to near machine precision in ~10 terms.
double wynn_epsilon(const std::vector<double>& partial) {
  const std::size_t n = partial.size();
  std::vector<double> prev_col(n, 0.0);  // epsilon_{-1} = 0
  std::vector<double> col(partial);      // epsilon_0 = S_j
  double best = col.back();
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<double> next(n - k, 0.0);
    for (std::size_t j = 0; j + k < n; ++j) {
      const double diff = col[j + 1] - col[j];
      if (std::abs(diff) < 1e-15 * std::max(1.0, std::abs(col[j + 1]))) {
        // column has converged; its entries are already the limit
        return col[j + 1];
      }
      next[j] = prev_col[j + 1] + 1.0 / diff;
    }
    prev_col.swap(col);
    col.swap(next);
    if (k % 2 == 0 && !col.empty()) best = col.back();
  }
  return best;
}

// Integrates f over the stretch between `endpoint` and `far`, where f may
// have an integrable power singularity at `endpoint`: panel boundaries
// shrink geometrically toward the endpoint (each panel is singularity-free,
// one GK15 apiece) and the partial sums, whose increments decay
// geometrically for x^p integrands, are epsilon-accelerated.
IntegrationResult tail_integral(const std::function<double(double)>& f,
                                double endpoint, double far, bool endpoint_is_lo,
                                double tol, int max_levels) {
  std::vector<double> partial;
  double sum = 0.0;
  double panel_err = 0.0;
  double last_inc = 0.0;
  double outer = far;
  double prev_est = std::numeric_limits<double>::quiet_NaN();
  double est = 0.0, est_err = 0.0;
  int stable = 0;
  for (int j = 0; j < max_levels; ++j) {
    // Halving below the rounding scale of `endpoint` would place quadrature
    // nodes on the endpoint itself; an integrable singularity always
    // converges far above this floor.
    if (std::abs(outer - endpoint) <=
        32.0 * std::numeric_limits<double>::epsilon() *
            std::max(1.0, std::abs(endpoint)))
      break;
    const double inner = endpoint + 0.5 * (outer - endpoint);
    const PanelEstimate pe =
        endpoint_is_lo ? gk15(f, inner, outer) : gk15(f, outer, inner);
    sum += pe.kronrod;
    panel_err += pe.err();
    last_inc = pe.kronrod;
    partial.push_back(sum);
    outer = inner;
    if (partial.size() >= 4) {
      est = wynn_epsilon(partial);
      est_err = std::abs(est - (std::isnan(prev_est) ? sum : prev_est));
      if (!std::isnan(prev_est) && est_err <= 0.25 * tol) {
        if (++stable >= 2) return {est, est_err + panel_err, true};
      } else {
        stable = 0;
      }
      prev_est = est;
    }
  }
  // Not converged: hand back the best estimate available, with the last
  // panel contribution folded into the error as a proxy for the unresolved
  // remainder.
  return {partial.size() >= 4 ? est : sum,
          est_err + panel_err + std::abs(last_inc), false};
}

}  // namespace

IntegrationResult integrate(const std::function<double(double)>& f, double lo,
                            double hi, const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_depth < 1)
    throw std::invalid_argument("integrate: bad QuadratureSpec");
  if (lo == hi) return {0.0, 0.0, true};
  double sgn = 1.0;
  if (lo > hi) {
    std::swap(lo, hi);
    sgn = -1.0;
  }
  const auto tol_of = [&spec](double total) {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
  };

  // Phase 1: plain adaptive bisection, worst panel first. A few hundred
  // panels resolve anything without an endpoint singularity; past that,
  // bisecting toward a power singularity stalls and phase 2 is both faster
  // and more accurate.
  const PanelEstimate first = gk15(f, lo, hi);
  std::vector<Panel> panels{{lo, hi, first.kronrod, first.err(), 0}};
  const std::size_t panel_budget = 512;
  while (true) {
    double total = 0.0, err = 0.0;
    for (const Panel& p : panels) {
      total += p.value;
      err += p.err;
    }
    // A non-finite sample means bisection walked into an endpoint at rounding
    // scale; only phase 2 handles that correctly (inf <= inf would otherwise
    // satisfy the tolerance test below).
    if (!std::isfinite(total) || !std::isfinite(err)) break;
    if (err <= tol_of(total)) return {sgn * total, err, true};
    auto worst = std::max_element(
        panels.begin(), panels.end(),
        [](const Panel& a, const Panel& b) { return a.err < b.err; });
    const bool splittable =
        worst->b - worst->a > 64.0 * std::numeric_limits<double>::epsilon() *
                                  std::max({1.0, std::abs(worst->a),
                                            std::abs(worst->b)});
    if (panels.size() >= panel_budget || worst->depth >= spec.max_depth ||
        !splittable)
      break;
    const Panel split = *worst;
    const double mid = 0.5 * (split.a + split.b);
    const PanelEstimate left_half = gk15(f, split.a, mid);
    const PanelEstimate right_half = gk15(f, mid, split.b);
    *worst = {split.a, mid, left_half.kronrod, left_half.err(), split.depth + 1};
    panels.push_back(
        {mid, split.b, right_half.kronrod, right_half.err(), split.depth + 1});
  }

  // Phase 2: integrable endpoint singularities. Core on the middle half via
  // a recursive phase-1 call, geometric panels + epsilon acceleration on the
  // outer quarters.
  const double q1 = lo + 0.25 * (hi - lo);
  const double q3 = hi - 0.25 * (hi - lo);
  QuadratureSpec core_spec = spec;
  core_spec.abs_tol = 0.25 * spec.abs_tol;
  const IntegrationResult core = integrate(f, q1, q3, core_spec);
  const double tail_tol =
      std::max(0.5 * spec.abs_tol, 0.5 * spec.rel_tol * std::abs(core.value));
  const IntegrationResult left =
      tail_integral(f, lo, q1, true, tail_tol, spec.max_depth);
  const IntegrationResult right =
      tail_integral(f, hi, q3, false, tail_tol, spec.max_depth);

  const double total = core.value + left.value + right.value;
  const double err = core.error + left.error + right.error;
  const bool ok = std::isfinite(total) && core.converged && left.converged &&
                  right.converged &&
                  err <= std::max(tol_of(total),
                                  16.0 * std::numeric_limits<double>::epsilon() *
                                      std::abs(total));
  return {sgn * total, err, ok};
}

}  // namespace kgbound
