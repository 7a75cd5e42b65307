// Shared scan/bracket/bisect/polish machinery for the transcendental
// quantization residuals (used by both the direct solver and the
// shape-invariance solver so the two follow the same contract).
// Not installed; internal to the library.
#pragma once

#include <cmath>
#include <vector>

namespace kgbound::detail {

struct ScanPoint {
  double f = 0.0;
  bool usable = false;  // defined (discriminant ok) and on the requested branch
};

// Scans fres over (-M + xi0, M - xi0), xi0 = 1e-9 M, on a 4001-point uniform
// grid; brackets sign changes between consecutive usable points; bisects each
// bracket to |dE| <= 1e-12 and then polishes with a few secant steps (the
// residual slope can reach ~1e3 at small delta, so bare bisection leaves
// |f| ~ 1e-9). Returns root energies, ascending.
template <typename F>
std::vector<double> scan_roots(double M, F&& fres) {
  constexpr int kPoints = 4001;
  const double xi0 = 1e-9 * M;
  const double lo = -M + xi0;
  const double hi = M - xi0;
  const double step = (hi - lo) / (kPoints - 1);

  std::vector<double> roots;
  ScanPoint prev;
  double prev_E = lo;
  for (int i = 0; i < kPoints; ++i) {
    const double E = (i == kPoints - 1) ? hi : lo + i * step;
    const ScanPoint cur = fres(E);
    if (cur.usable && cur.f == 0.0) {
      roots.push_back(E);
    } else if (prev.usable && cur.usable && std::signbit(prev.f) != std::signbit(cur.f)) {
      // bisect [prev_E, E]
      double a = prev_E, b = E;
      double fa = prev.f;
      while (b - a > 1e-12) {
        const double m = 0.5 * (a + b);
        const ScanPoint pm = fres(m);
        if (!pm.usable) break;  // validity boundary inside the bracket
        if (pm.f == 0.0) {
          a = b = m;
          break;
        }
        if (std::signbit(pm.f) == std::signbit(fa)) {
          a = m;
          fa = pm.f;
        } else {
          b = m;
        }
      }
      double root = 0.5 * (a + b);
      // secant polish, best-|f| wins, clamped to the original bracket
      double x0 = a, x1 = b;
      double f0 = fres(x0).f, f1 = fres(x1).f;
      double best_x = root;
      double best_f = std::abs(fres(root).f);
      for (int it = 0; it < 12 && f1 != f0; ++it) {
        double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 >= prev_E && x2 <= E)) break;
        const ScanPoint p2 = fres(x2);
        if (!p2.usable) break;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = p2.f;
        if (std::abs(f1) < best_f) {
          best_f = std::abs(f1);
          best_x = x1;
        }
        if (f1 == 0.0) break;
      }
      roots.push_back(best_x);
    }
    prev = cur;
    prev_E = E;
  }

  // collapse duplicates from exact-zero grid hits adjacent to a bracket
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() || std::abs(r - unique.back()) > 1e-11) unique.push_back(r);
  }
  return unique;
}

}  // namespace kgbound::detail
