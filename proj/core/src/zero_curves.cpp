// Copyright 2026 The bosonlaw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "bosonlaw/zero_curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include <Eigen/Dense>

#include "bosonlaw/errors.hpp"
#include "bosonlaw/root_scan.hpp"
#include "bosonlaw/tolerances.hpp"

namespace bosonlaw {

namespace {

constexpr double kThetaMin = -kPi;
constexpr double kThetaMax = kPi;
constexpr int kNewtonIterations = 50;
constexpr double kDamping = 0.5;
constexpr double kFiniteStep = 1e-7;

struct Refined {
  double tau, theta, residual;
};

template <typename Body>
void parallel_rows(int rows, int threads, const Body& body) {
  const int workers = std::max(1, std::min(threads, rows));
  if (workers == 1) {
    for (int r = 0; r < rows; ++r) body(r);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int r = w; r < rows; r += workers) body(r);
    });
  }
  for (auto& t : pool) t.join();
}

Refined refine(const PlaneFunction& f, double tau, double theta, double tau_lo, double tau_hi,
               double th_lo, double th_hi) {
  // Newton stays within one cell of the candidate so it cannot drift onto the trivial zeros.
  const double reach_tau = tau_hi - tau_lo, reach_th = th_hi - th_lo;
  const double t_min = std::max(0.0, tau_lo - reach_tau), t_max = std::min(1.0, tau_hi + reach_tau);
  auto clamp_tau = [&](double t) { return std::clamp(t, t_min, t_max); };
  auto clamp_th = [&](double y) { return std::clamp(y, th_lo - reach_th, th_hi + reach_th); };
  Complex v = f(tau, theta);
  double best = std::abs(v);
  for (int it = 0; it < kNewtonIterations && best > 1e-15; ++it) {
    const double ht = std::min(kFiniteStep, std::max(1e-12, std::min(tau, 1.0 - tau)));
    const Complex dt = (f(clamp_tau(tau + ht), theta) - f(clamp_tau(tau - ht), theta)) /
                       (clamp_tau(tau + ht) - clamp_tau(tau - ht));
    const Complex dth = (f(tau, theta + kFiniteStep) - f(tau, theta - kFiniteStep)) / (2 * kFiniteStep);
    Eigen::Matrix2d j;
    j << dt.real(), dth.real(), dt.imag(), dth.imag();
    const Eigen::Vector2d step =
        j.completeOrthogonalDecomposition().solve(Eigen::Vector2d(-v.real(), -v.imag()));
    if (!step.allFinite()) break;
    double lambda = 1.0;
    bool improved = false;
    for (int k = 0; k < 40; ++k) {
      const double nt = clamp_tau(tau + lambda * step(0));
      const double nth = clamp_th(theta + lambda * step(1));
      const Complex nv = f(nt, nth);
      if (std::abs(nv) < best) {
        tau = nt;
        theta = nth;
        v = nv;
        best = std::abs(nv);
        improved = true;
        break;
      }
      lambda *= kDamping;
    }
    if (!improved) break;
  }
  if (best >= tol::kCurveResidual) {
    // Alternating golden-section searches inside the cell.
    double t = std::clamp(tau, tau_lo, tau_hi), th = std::clamp(theta, th_lo, th_hi);
    for (int round = 0; round < 8; ++round) {
      t = golden_minimize([&](double x) { return std::abs(f(x, th)); }, tau_lo, tau_hi);
      th = golden_minimize([&](double y) { return std::abs(f(t, y)); }, th_lo, th_hi);
    }
    const double r = std::abs(f(t, th));
    if (r < best) {
      tau = t;
      theta = th;
      best = r;
    }
  }
  return {tau, theta, best};
}

}  // namespace

int default_thread_count() {
  if (const char* env = std::getenv("BOSONLAW_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<CurvePoint> scan_zero_points(const PlaneFunction& f, const ScanGrid& grid, int threads) {
  const int nt = grid.tau_steps, nth = grid.theta_steps;
  const double htau = 1.0 / nt, hth = (kThetaMax - kThetaMin) / nth;
  auto tau_at = [&](int i) { return i == nt ? 1.0 : i * htau; };
  auto th_at = [&](int j) { return j == nth ? kThetaMax : kThetaMin + j * hth; };

  std::vector<Complex> values(static_cast<std::size_t>((nt + 1) * (nth + 1)));
  auto at = [&](int i, int j) -> Complex& { return values[static_cast<std::size_t>(j * (nt + 1) + i)]; };
  parallel_rows(nth + 1, threads, [&](int j) {
    for (int i = 0; i <= nt; ++i) at(i, j) = f(tau_at(i), th_at(j));
  });
  double scale = 0.0;
  for (const auto& v : values) scale = std::max(scale, std::abs(v));
  const double negligible = 1e-12 * std::max(scale, 1.0);

  std::vector<std::vector<Refined>> per_row(static_cast<std::size_t>(nth));
  parallel_rows(nth, threads, [&](int j) {
    for (int i = 0; i < nt; ++i) {
      const Complex c[4] = {at(i, j), at(i + 1, j), at(i, j + 1), at(i + 1, j + 1)};
      double re_lo = c[0].real(), re_hi = re_lo, im_lo = c[0].imag(), im_hi = im_lo, small = std::abs(c[0]);
      for (const auto& z : c) {
        re_lo = std::min(re_lo, z.real());
        re_hi = std::max(re_hi, z.real());
        im_lo = std::min(im_lo, z.imag());
        im_hi = std::max(im_hi, z.imag());
        small = std::min(small, std::abs(z));
      }
      const bool crosses = re_lo <= 0.0 && re_hi >= 0.0 && im_lo <= 0.0 && im_hi >= 0.0;
      if (!crosses && small > negligible) continue;
      const double t0 = tau_at(i) + 0.5 * htau, th0 = th_at(j) + 0.5 * hth;
      const Refined r = refine(f, t0, th0, tau_at(i), tau_at(i + 1), th_at(j), th_at(j + 1));
      if (r.residual >= tol::kCurveResidual || is_trivial_tau(r.tau)) continue;
      // Keep only points that stay near their cell; far jumps belong to another cell.
      if (std::abs(r.tau - t0) > 2 * htau || std::abs(r.theta - th0) > 2 * hth) continue;
      per_row[static_cast<std::size_t>(j)].push_back(r);
    }
  });

  std::vector<CurvePoint> points;
  for (const auto& row : per_row) {
    for (const auto& r : row) points.push_back({r.tau, r.theta, r.residual});
  }
  std::sort(points.begin(), points.end(), [](const CurvePoint& a, const CurvePoint& b) {
    return a.theta != b.theta ? a.theta < b.theta : a.tau < b.tau;
  });
  std::vector<CurvePoint> unique;
  for (const auto& p : points) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const CurvePoint& q) {
      return std::abs(p.tau - q.tau) < 1e-7 && std::abs(p.theta - q.theta) < 1e-7;
    });
    if (!dup) unique.push_back(p);
  }
  return unique;
}

std::vector<std::vector<CurvePoint>> link_points(std::vector<CurvePoint> points, const ScanGrid& grid) {
  const double htau = 1.0 / grid.tau_steps, hth = (kThetaMax - kThetaMin) / grid.theta_steps;
  auto dist = [&](const CurvePoint& a, const CurvePoint& b) {
    return std::hypot((a.tau - b.tau) / htau, (a.theta - b.theta) / hth);
  };
  std::vector<bool> used(points.size(), false);
  std::vector<std::vector<CurvePoint>> curves;
  for (std::size_t start = 0; start < points.size(); ++start) {
    if (used[start]) continue;
    std::vector<CurvePoint> curve{points[start]};
    used[start] = true;
    while (true) {
      std::size_t best = points.size();
      double best_d = 2.0;
      for (std::size_t k = 0; k < points.size(); ++k) {
        if (used[k]) continue;
        const double d = dist(curve.back(), points[k]);
        if (d <= best_d) {
          best_d = d;
          best = k;
        }
      }
      if (best == points.size()) break;
      used[best] = true;
      curve.push_back(points[best]);
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::vector<ZeroCurve> scan_zero_curves(TritterFamily family, InputFamily input, OutputFamily output,
                                        int size, const ScanGrid& grid, int threads) {
  if (grid.tau_steps < 64 || grid.theta_steps < 64) {
    throw ContractError("zero-curve scans need at least a 64 x 64 grid");
  }
  if (threads <= 0) threads = default_thread_count();
  const PlaneFunction f = [&](double tau, double theta) {
    return tritter_suppression_value(family, input, output, tau, theta, size);
  };
  std::vector<ZeroCurve> out;
  for (auto& pts : link_points(scan_zero_points(f, grid, threads), grid)) {
    out.push_back({family, input, output, size, std::move(pts)});
  }
  return out;
}

}  // namespace bosonlaw
