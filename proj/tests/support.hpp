#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "carnot/group.hpp"
#include "carnot/rng.hpp"

namespace carnot::testing {

inline ValidatedSpec heis() { return validate_spec(builtin_heisenberg()); }

inline ValidatedSpec rank2() {
  GroupSpec g;
  g.name = "rank2";
  g.n = 3;
  g.m = 2;
  Matrix b1 = Matrix::Zero(3, 3);
  b1(0, 1) = 1;
  b1(1, 0) = -1;
  Matrix b2 = Matrix::Zero(3, 3);
  b2(0, 2) = 1;
  b2(2, 0) = -1;
  g.B = {b1, b2};
  return validate_spec(g);
}

/// Random valid spec with n in [2, max_n] and m <= min(3, n(n-1)/2).
inline ValidatedSpec random_spec(Xoshiro256& rng, int max_n = 4) {
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (;;) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    const int max_m = std::min(3, n * (n - 1) / 2);
    const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_m));
    GroupSpec g;
    g.name = "random";
    g.n = n;
    g.m = m;
    for (int k = 0; k < m; ++k) {
      Matrix b = Matrix::Zero(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          b(i, j) = coef(rng);
          b(j, i) = -b(i, j);
        }
      }
      g.B.push_back(b);
    }
    try {
      return validate_spec(g);
    } catch (const Error&) {
    }
  }
}

inline Point random_point(Xoshiro256& rng, int n, int m, double box) {
  std::uniform_real_distribution<double> u(-box, box);
  Point p = Point::origin(n, m);
  for (int i = 0; i < n; ++i) p.x(i) = u(rng);
  for (int k = 0; k < m; ++k) p.z(k) = u(rng);
  return p;
}

/// Largest value of v^T S v on the unit sphere by a hyperspherical-angle grid
/// that is repeatedly re-centred and shrunk around the best node.
inline double sphere_grid_max(const Matrix& S) {
  const int d = static_cast<int>(S.rows());
  if (d == 1) return S(0, 0);
  const int a = d - 1;
  auto unit = [&](const std::vector<double>& th) {
    Vector v(d);
    double sin_prod = 1.0;
    for (int i = 0; i < a; ++i) {
      v(i) = sin_prod * std::cos(th[static_cast<std::size_t>(i)]);
      sin_prod *= std::sin(th[static_cast<std::size_t>(i)]);
    }
    v(a) = sin_prod;
    return v;
  };
  auto value = [&](const std::vector<double>& th) {
    const Vector v = unit(th);
    return v.dot(S * v);
  };
  const int grid = a == 1 ? 64 : (a == 2 ? 24 : 12);
  std::vector<double> best(static_cast<std::size_t>(a), 0.0);
  std::vector<double> span(static_cast<std::size_t>(a), M_PI);
  std::vector<double> lo(static_cast<std::size_t>(a), 0.0);
  double best_val = -1e300;
  for (int round = 0; round < 60; ++round) {
    std::vector<int> idx(static_cast<std::size_t>(a), 0);
    std::vector<double> round_best = best;
    for (;;) {
      std::vector<double> th(static_cast<std::size_t>(a));
      for (int i = 0; i < a; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        th[ui] = lo[ui] + span[ui] * (idx[ui] + 0.5) / grid;
      }
      const double v = value(th);
      if (v > best_val) {
        best_val = v;
        round_best = th;
      }
      int i = 0;
      while (i < a && ++idx[static_cast<std::size_t>(i)] == grid) idx[static_cast<std::size_t>(i++)] = 0;
      if (i == a) break;
    }
    best = round_best;
    for (int i = 0; i < a; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      span[ui] *= 0.5;
      lo[ui] = best[ui] - 0.5 * span[ui];
    }
  }
  return best_val;
}

}  // namespace carnot::testing
