#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace omq::detail {

/// A narrow spectral line at |center| with the given half width, used to
/// concentrate quadrature nodes.
struct SpectralLine {
  double center;
  double half_width;
};

struct QuadOptions {
  double rel_tol = 1e-6;    // stop when a full refinement changes nothing more
  int max_refine = 10;
  double scale_floor = 1e-6;  // integrals below this magnitude count as converged
  int max_window_growth = 8;
};

struct QuadReport {
  int evaluations = 0;
  int refinements = 0;
  double window = 0.0;
  double last_delta = 0.0;  // max relative change of the final refinement
};

/// Panelization of [0, W] with node spacing tied to line widths and to the
/// shortest oscillation period of the integrand.
class PanelGrid {
 public:
  PanelGrid(std::vector<SpectralLine> lines, std::vector<double> osc_periods, double window)
      : lines_(std::move(lines)), periods_(std::move(osc_periods)), window_(window) {
    for (auto& l : lines_) l.center = std::abs(l.center);
    rebuild();
  }

  double window() const { return window_; }

  void grow_window(double factor) {
    window_ *= factor;
    rebuild();
  }

  /// Composite Simpson over all panels at the given refinement level.
  /// F maps omega >= 0 to an Eigen matrix (or any type supporting +,*).
  template <class F, class M>
  M integrate(F&& f, int level, int* evals) const {
    M total = M();
    bool first = true;
    for (const auto& p : panels_) {
      const int n = p.base_points << level;  // even by construction
      const double h = (p.hi - p.lo) / n;
      M acc = f(p.lo);
      acc += f(p.hi);
      for (int i = 1; i < n; ++i) {
        const double w = (i % 2 == 1) ? 4.0 : 2.0;
        acc += w * f(p.lo + i * h);
      }
      if (evals) *evals += n + 1;
      acc *= h / 3.0;
      if (first) {
        total = acc;
        first = false;
      } else {
        total += acc;
      }
    }
    return total;
  }

  /// Integral over just the outermost decade of the window; used to decide
  /// whether the window must grow.
  template <class F, class M>
  M tail_estimate(F&& f, int* evals) const {
    const double lo = window_ * 0.75;
    const int n = std::max(16, static_cast<int>(std::ceil((window_ - lo) / max_step(lo))));
    const double h = (window_ - lo) / (2 * ((n + 1) / 2));
    M acc = f(lo);
    acc += f(window_);
    const int m = 2 * ((n + 1) / 2);
    for (int i = 1; i < m; ++i) acc += ((i % 2 == 1) ? 4.0 : 2.0) * f(lo + i * h);
    if (evals) *evals += m + 1;
    acc *= h / 3.0;
    return acc;
  }

 private:
  double max_step(double omega) const {
    double h = window_ / 64.0;
    for (const auto& p : periods_) h = std::min(h, p / 8.0);
    for (const auto& l : lines_) {
      const double dist = std::abs(omega - l.center);
      if (dist < 8.0 * l.half_width) {
        h = std::min(h, l.half_width / 4.0);
      } else {
        h = std::min(h, dist / 8.0);
      }
    }
    return h;
  }

  void rebuild() {
    std::vector<double> cuts{0.0, window_};
    static constexpr double spread[] = {-40.0, -16.0, -8.0, -3.0, -1.0, 0.0,
                                        1.0,   3.0,   8.0,  16.0, 40.0};
    for (const auto& l : lines_) {
      for (double s : spread) {
        const double x = l.center + s * l.half_width;
        if (x > 0.0 && x < window_) cuts.push_back(x);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [this](double a, double b) { return b - a < 1e-12 * window_; }),
               cuts.end());

    panels_.clear();
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double lo = cuts[i];
      const double hi = cuts[i + 1];
      const double h = max_step((lo + hi) / 2.0);
      int n = static_cast<int>(std::ceil((hi - lo) / h));
      n = std::max(4, n + (n % 2));
      panels_.push_back({lo, hi, n});
    }
  }

  struct Panel {
    double lo, hi;
    int base_points;
  };

  std::vector<SpectralLine> lines_;
  std::vector<double> periods_;
  double window_;
  std::vector<Panel> panels_;
};

/// Adaptive driver: refines node density until the integral stops moving and
/// grows the window until the outer tail is negligible. The integrand must
/// decay at large omega.
template <class M, class F>
M integrate_adaptive(F&& f, std::vector<SpectralLine> lines, std::vector<double> osc_periods,
                     double initial_window, const QuadOptions& opt = {},
                     QuadReport* report = nullptr) {
  PanelGrid grid(std::move(lines), std::move(osc_periods), initial_window);
  QuadReport rep;

  auto scale_of = [](const M& m) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      for (Eigen::Index i = 0; i < m.rows(); ++i) s = std::max(s, std::abs(m(i, j)));
    }
    return s;
  };

  for (int growth = 0;; ++growth) {
    M prev = grid.template integrate<F&, M>(f, 0, &rep.evaluations);
    M cur = prev;
    rep.refinements = 0;
    for (int level = 1; level <= opt.max_refine; ++level) {
      cur = grid.template integrate<F&, M>(f, level, &rep.evaluations);
      rep.refinements = level;
      const double scale = std::max(scale_of(cur), opt.scale_floor);
      rep.last_delta = scale_of(M(cur - prev)) / scale;
      if (rep.last_delta < opt.rel_tol) break;
      prev = cur;
    }
    const M tail = grid.template tail_estimate<F&, M>(f, &rep.evaluations);
    const double scale = std::max(scale_of(cur), opt.scale_floor);
    if (scale_of(tail) < 0.1 * opt.rel_tol * scale || growth >= opt.max_window_growth) {
      rep.window = grid.window();
      if (report) *report = rep;
      return cur;
    }
    grid.grow_window(2.0);
  }
}

}  // namespace omq::detail
