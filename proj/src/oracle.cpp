// Copyright 2026 The varbounds Authors
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

#include "varbounds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "varbounds/errors.hpp"

namespace varbounds {
namespace {

using Grid = std::vector<std::vector<Complex>>;

Grid to_grid(const Matrix& m) {
  Grid g(m.dim(), std::vector<Complex>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) g[i][j] = m(i, j);
  }
  return g;
}

Grid product(const Grid& a, const Grid& b) {
  const std::size_t n = a.size();
  Grid c(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Grid density_of(const QuantumState& state) {
  const std::size_t n = state.dim();
  Grid rho(n, std::vector<Complex>(n));
  if (state.is_pure()) {
    const auto& psi = state.vector();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rho[i][j] = psi[i] * std::conj(psi[j]);
    }
    return rho;
  }
  return to_grid(state.density_matrix().matrix());
}

// Tr(rho M)
Complex trace_with(const Grid& rho, const Grid& m) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    for (std::size_t j = 0; j < rho.size(); ++j) t += rho[i][j] * m[j][i];
  }
  return t;
}

Grid centered(const Grid& m, double mean) {
  Grid c = m;
  for (std::size_t i = 0; i < c.size(); ++i) c[i][i] -= mean;
  return c;
}

std::vector<Complex> dominant_vector(const QuantumState& state) {
  if (state.is_pure()) {
    const auto e = state.vector().entries();
    return {e.begin(), e.end()};
  }
  const auto spec = hermitian_eig(state.density_matrix());
  if (spec.eigenvalues.back() < 1.0 - 1e-8) {
    throw PurityError("oracle: mixed state", spec.eigenvalues.back());
  }
  const auto e = spec.eigenvectors.back().entries();
  return {e.begin(), e.end()};
}

// Literal partial Cauchy-Schwarz sum with one-based k.
double literal_partial(const std::vector<double>& x, const std::vector<double>& y,
                       std::size_t k) {
  const std::size_t n = x.size();
  double first = 0.0;
  double second = 0.0;
  double third = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const double xi = x[i - 1], xj = x[j - 1], yi = y[i - 1], yj = y[j - 1];
      if (j <= k) {
        first += 2.0 * xi * xj * yj * yi;
      } else {
        second += xi * xi * yj * yj + xj * xj * yi * yi;
      }
    }
    third += x[i - 1] * x[i - 1] * y[i - 1] * y[i - 1];
  }
  return first + second + third;
}

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

double best_pairing(const std::vector<double>& x, const std::vector<double>& y,
                    bool maximize) {
  std::vector<std::size_t> sigma = iota_vec(x.size());
  double best = maximize ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[sigma[i]];
    best = maximize ? std::max(best, s) : std::min(best, s);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

double newton_gaussian_peak(const std::vector<double>& e) {
  const double lo = *std::min_element(e.begin(), e.end());
  const double hi = *std::max_element(e.begin(), e.end());
  const auto g = [&](double t) {
    double s = 0.0;
    for (double v : e) s += std::exp(-(v - t) * (v - t));
    return s;
  };
  // g'(t) up to a positive factor.
  const auto slope = [&](double t) {
    double s = 0.0;
    for (double v : e) s += (v - t) * std::exp(-(v - t) * (v - t));
    return s;
  };
  if (!(hi > lo)) return g(lo);
  constexpr int kGrid = 2000;
  const double h = (hi - lo) / kGrid;
  std::vector<double> grid(kGrid + 1);
  for (int i = 0; i <= kGrid; ++i) grid[i] = g(lo + h * i);
  double best = *std::max_element(grid.begin(), grid.end());
  for (int i = 0; i <= kGrid; ++i) {
    if ((i > 0 && grid[i] < grid[i - 1]) || (i < kGrid && grid[i] < grid[i + 1])) {
      continue;
    }
    double a = std::max(lo, lo + h * (i - 1));
    double b = std::min(hi, lo + h * (i + 1));
    if (!(slope(a) > 0.0 && slope(b) < 0.0)) continue;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      (slope(mid) > 0.0 ? a : b) = mid;
    }
    best = std::max(best, g(0.5 * (a + b)));
  }
  return best;
}

double merged_entropy(const Grid& rho, const SpectralDecomposition& spec) {
  std::vector<std::pair<double, double>> outcomes;
  for (std::size_t i = 0; i < spec.dim(); ++i) {
    const auto& v = spec.eigenvectors[i];
    Complex p = 0.0;
    for (std::size_t j = 0; j < v.dim(); ++j) {
      for (std::size_t k = 0; k < v.dim(); ++k) p += std::conj(v[j]) * rho[j][k] * v[k];
    }
    outcomes.emplace_back(spec.eigenvalues[i], std::max(p.real(), 0.0));
  }
  std::sort(outcomes.begin(), outcomes.end());
  double h = 0.0;
  std::size_t i = 0;
  while (i < outcomes.size()) {
    double p = outcomes[i].second;
    std::size_t j = i + 1;
    while (j < outcomes.size() && outcomes[j].first - outcomes[j - 1].first <= 1e-10) {
      p += outcomes[j].second;
      ++j;
    }
    if (p > 0.0) h -= p * std::log(p);
    i = j;
  }
  return h;
}

void add(OracleReport& report, const std::string& name, double module_value,
         double oracle_value) {
  double d = 0.0;
  if (std::isinf(module_value) || std::isinf(oracle_value)) {
    d = module_value == oracle_value ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    d = std::abs(module_value - oracle_value) / std::max(1.0, std::abs(oracle_value));
  }
  report.entries.push_back({name, module_value, oracle_value, d});
  if (report.worst.empty() || d > report.max_discrepancy) {
    report.max_discrepancy = d;
    report.worst = name;
  }
}

}  // namespace

double oracle_exhaustive_perm(const CoefficientPair& pair, std::size_t k) {
  const std::size_t n = pair.n();
  if (n > kMaxOracleDim) throw ValidationError("oracle enumeration needs n <= 5");
  if (k > n) throw std::out_of_range("k out of range");
  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> p1 = iota_vec(n);
  do {
    std::vector<std::size_t> p2 = iota_vec(n);
    do {
      std::vector<double> x(n);
      std::vector<double> y(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = pair.x[p1[i]];
        y[i] = pair.y[p2[i]];
      }
      best = std::max(best, literal_partial(x, y, k));
    } while (std::next_permutation(p2.begin(), p2.end()));
  } while (std::next_permutation(p1.begin(), p1.end()));
  return best;
}

OracleReport oracle_bound_check(const QuantumState& state, const Observable& a,
                                const Observable& b, const BoundConfig& config) {
  ReportOptions options;
  options.config = config;
  return oracle_bound_check(state, a, b, config,
                            compute_report(state, a, b, options));
}

OracleReport oracle_bound_check(const QuantumState& state, const Observable& a,
                                const Observable& b, const BoundConfig& config,
                                const BoundReport& report) {
  OracleReport out;
  const std::size_t n = state.dim();
  const Grid rho = density_of(state);
  const Grid ga = to_grid(a.matrix().matrix());
  const Grid gb = to_grid(b.matrix().matrix());

  const double mean_a = trace_with(rho, ga).real();
  const double mean_b = trace_with(rho, gb).real();
  const double var_a = std::max(trace_with(rho, product(ga, ga)).real() - mean_a * mean_a, 0.0);
  const double var_b = std::max(trace_with(rho, product(gb, gb)).real() - mean_b * mean_b, 0.0);
  add(out, "v_a", report.v_a, var_a);
  add(out, "v_b", report.v_b, var_b);
  add(out, "product", report.product, var_a * var_b);
  add(out, "sum", report.sum, var_a + var_b);

  const Grid ca = centered(ga, mean_a);
  const Grid cb = centered(gb, mean_b);

  // Coefficient vectors.
  std::vector<double> x(n);
  std::vector<double> y(n);
  const auto spec_a = hermitian_eig(a.matrix());
  const auto spec_b = hermitian_eig(b.matrix());
  if (config.construction == Construction::FidelityWeighted) {
    for (std::size_t i = 0; i < n; ++i) {
      for (int which = 0; which < 2; ++which) {
        const auto& spec = which == 0 ? spec_a : spec_b;
        const double mean = which == 0 ? mean_a : mean_b;
        const auto& v = spec.eigenvectors[i];
        Complex f = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) f += std::conj(v[j]) * rho[j][k] * v[k];
        }
        const double coeff =
            std::abs(spec.eigenvalues[i] - mean) * std::sqrt(std::max(f.real(), 0.0));
        (which == 0 ? x : y)[i] = coeff;
      }
    }
  } else {
    const std::vector<Complex> psi = dominant_vector(state);
    Grid frame;
    switch (config.basis) {
      case BasisChoice::Computational: frame = to_grid(Matrix::identity(n)); break;
      case BasisChoice::EigenA: frame = to_grid(spec_a.eigenvector_matrix()); break;
      case BasisChoice::EigenB: frame = to_grid(spec_b.eigenvector_matrix()); break;
      case BasisChoice::Explicit: frame = to_grid(config.explicit_basis->columns()); break;
    }
    std::vector<Complex> a_psi(n);
    std::vector<Complex> b_psi(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a_psi[i] += ca[i][j] * psi[j];
        b_psi[i] += cb[i][j] * psi[j];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex alpha = 0.0;
      Complex beta = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        alpha += std::conj(frame[k][i]) * a_psi[k];
        beta += std::conj(frame[k][i]) * b_psi[k];
      }
      x[i] = std::abs(alpha);
      y[i] = std::abs(beta);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    add(out, "x[" + std::to_string(i) + "]", report.x[i], x[i]);
    add(out, "y[" + std::to_string(i) + "]", report.y[i], y[i]);
  }

  // Product bounds.
  for (std::size_t k = 0; k <= n; ++k) {
    add(out, "I_" + std::to_string(k), report.chain[k], literal_partial(x, y, k));
  }
  if (n <= kMaxOracleDim && report.permuted_chain_strategy == "exhaustive") {
    const CoefficientPair raw = CoefficientPair::from_vectors(x, y);
    for (std::size_t k = 0; k <= n; ++k) {
      add(out, "max_perm_I_" + std::to_string(k), report.permuted_chain[k],
          oracle_exhaustive_perm(raw, k));
    }
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < n; ++i) dot += x[i] * y[i];
  add(out, "mondal_in", report.mondal_in, dot * dot);
  if (report.l1) add(out, "l1", *report.l1, literal_partial(x, y, n - 1));
  if (n <= 8) {
    const double best = best_pairing(x, y, true);
    add(out, "max_perm_in", report.max_perm_in, best * best);
  }

  const Grid ab = product(ga, gb);
  const Grid ba = product(gb, ga);
  Grid comm = ab;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) comm[i][j] -= ba[i][j];
  }
  const Grid cab = product(ca, cb);
  const Grid cba = product(cb, ca);
  Grid anti = cab;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) anti[i][j] += cba[i][j];
  }
  add(out, "schrodinger", report.schrodinger,
      std::norm(0.5 * trace_with(rho, comm)) + std::norm(0.5 * trace_with(rho, anti)));
  add(out, "expectation_product", report.expectation_product,
      std::norm(trace_with(rho, cab)));

  {
    std::vector<double> xs;
    std::vector<double> ys;
    double dx = 0.0;
    double dy = 0.0;
    bool one_sided = false;
    for (std::size_t i = 0; i < n; ++i) {
      const bool zx = x[i] <= 1e-12;
      const bool zy = y[i] <= 1e-12;
      if (zx && zy) {
        dx += x[i] * x[i];
        dy += y[i] * y[i];
      } else if (zx || zy) {
        one_sided = true;
      } else {
        xs.push_back(x[i]);
        ys.push_back(y[i]);
      }
    }
    double u1 = std::numeric_limits<double>::infinity();
    if (!one_sided && !xs.empty() && xs.size() <= 8) {
      const double sx = *std::min_element(xs.begin(), xs.end());
      const double bx = *std::max_element(xs.begin(), xs.end());
      const double sy = *std::min_element(ys.begin(), ys.end());
      const double by = *std::max_element(ys.begin(), ys.end());
      const double m = best_pairing(xs, ys, false);
      u1 = (sx * sy + bx * by) * (sx * sy + bx * by) / (4.0 * sx * sy * bx * by) * m * m;
      double kx = 0.0;
      double ky = 0.0;
      for (double v : xs) kx += v * v;
      for (double v : ys) ky += v * v;
      u1 += dx * (ky + dy) + kx * dy;
    }
    if (xs.size() <= 8) add(out, "u1", report.u1.value, u1);
  }

  // Sum bounds.
  std::vector<double> plus(n);
  std::vector<double> minus(n);
  double u2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    plus[i] = x[i] + y[i];
    minus[i] = std::abs(x[i] - y[i]);
    u2 += plus[i] * plus[i];
  }
  std::sort(plus.rbegin(), plus.rend());
  std::sort(minus.rbegin(), minus.rend());
  double half_plus = 0.0;
  double half_minus = 0.0;
  double cyclic = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    half_plus += 0.5 * plus[i] * plus[i];
    half_minus += 0.5 * minus[i] * minus[i];
    cyclic += 0.5 * minus[i] * minus[(i + 1) % n];
  }
  add(out, "parallelogram_plus", report.parallelogram_plus, half_plus);
  add(out, "parallelogram_minus", report.parallelogram_minus, half_minus);
  add(out, "mondal_sum", report.mondal_sum, half_plus);
  add(out, "l2", report.l2, half_plus + cyclic);
  add(out, "u2", report.u2, u2);

  // Entropic bounds.
  const double h_a = merged_entropy(rho, spec_a);
  const double h_b = merged_entropy(rho, spec_b);
  const double c = -std::log(newton_gaussian_peak(spec_a.eigenvalues)) -
                   std::log(newton_gaussian_peak(spec_b.eigenvalues));
  add(out, "entropic_sum", report.entropic_sum.value, h_a + h_b + c);

  if (report.entropic_product && config.construction == Construction::BasisExpansion) {
    const double xn = x[n - 1];
    const double yn = y[n - 1];
    double value = 0.0;
    if (xn <= 1e-12 || yn <= 1e-12) {
      value = literal_partial(x, y, n - 1);
    } else {
      const double r = yn / xn;
      std::vector<double> scaled = spec_a.eigenvalues;
      for (double& e : scaled) e *= r;
      const double c_r = -std::log(newton_gaussian_peak(scaled)) -
                         std::log(newton_gaussian_peak(spec_b.eigenvalues));
      double head = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) head += r * x[i] * y[i];
      const double xr = r * xn;
      value = (head * head + xr * xr * (h_a + h_b + c_r) - xr * xr * yn * yn) / (r * r);
    }
    add(out, "entropic_product", report.entropic_product->value, value);
  }
  return out;
}

}  // namespace varbounds
