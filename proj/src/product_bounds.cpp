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

#include "varbounds/product_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "varbounds/errors.hpp"
#include "varbounds/random.hpp"

namespace varbounds {
namespace {

using PairValue = std::pair<double, double>;  // (x_i, y_i)

// I_k over explicit (x, y) pairs; the first k are the Cauchy-Schwarz block.
double evaluate_partial(std::vector<PairValue> pairs, std::size_t k) {
  std::sort(pairs.begin(), pairs.begin() + static_cast<long>(k));
  std::sort(pairs.begin() + static_cast<long>(k), pairs.end());
  const std::size_t n = pairs.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [xi, yi] = pairs[i];
    total += xi * xi * yi * yi;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto [xj, yj] = pairs[j];
      if (j < k) {
        total += 2.0 * xi * xj * yi * yj;
      } else {
        total += xi * xi * yj * yj + xj * xj * yi * yi;
      }
    }
  }
  return total;
}

void require_k(const CoefficientPair& pair, std::size_t k) {
  if (k > pair.n()) {
    std::ostringstream msg;
    msg << "k = " << k << " out of range [0, " << pair.n() << "]";
    throw std::out_of_range(msg.str());
  }
}

std::vector<std::size_t> argsort_descending(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return order;
}

// A configuration of the permuted problem: x_i is paired with y_{sigma[i]}
// and pair i sits in the Cauchy-Schwarz block iff in_block[i].
struct Configuration {
  std::vector<std::size_t> sigma;
  std::vector<bool> in_block;
};

double evaluate(const CoefficientPair& pair, const Configuration& c,
                std::size_t k) {
  std::vector<PairValue> pairs;
  pairs.reserve(pair.n());
  for (std::size_t i = 0; i < pair.n(); ++i) {
    if (c.in_block[i]) pairs.emplace_back(pair.x[i], pair.y[c.sigma[i]]);
  }
  for (std::size_t i = 0; i < pair.n(); ++i) {
    if (!c.in_block[i]) pairs.emplace_back(pair.x[i], pair.y[c.sigma[i]]);
  }
  return evaluate_partial(std::move(pairs), k);
}

PermutationPair to_permutations(const Configuration& c) {
  const std::size_t n = c.sigma.size();
  std::vector<std::size_t> first;
  first.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (c.in_block[i]) first.push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!c.in_block[i]) first.push_back(i);
  }
  std::vector<std::size_t> second(n);
  for (std::size_t pos = 0; pos < n; ++pos) second[pos] = c.sigma[first[pos]];
  return {Permutation(std::move(first)), Permutation(std::move(second))};
}

Configuration identity_configuration(std::size_t n, std::size_t k) {
  Configuration c;
  c.sigma.resize(n);
  std::iota(c.sigma.begin(), c.sigma.end(), 0);
  c.in_block.assign(n, false);
  for (std::size_t i = 0; i < k; ++i) c.in_block[i] = true;
  return c;
}

PermutedMax exhaustive_max(const CoefficientPair& pair, std::size_t k) {
  const std::size_t n = pair.n();
  PermutedMax best;
  best.value = -std::numeric_limits<double>::infinity();
  Configuration c = identity_configuration(n, k);
  Configuration best_config = c;
  Permutation sigma = Permutation::identity(n);
  do {
    c.sigma.assign(sigma.images().begin(), sigma.images().end());
    // k-subsets in lexicographic order.
    std::vector<std::size_t> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      std::fill(c.in_block.begin(), c.in_block.end(), false);
      for (std::size_t s : subset) c.in_block[s] = true;
      const double value = evaluate(pair, c, k);
      if (value > best.value) {
        best.value = value;
        best_config = c;
      }
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  } while (sigma.next());
  best.perms = to_permutations(best_config);
  return best;
}

void hill_climb(const CoefficientPair& pair, std::size_t k, Configuration& c,
                double& value) {
  const std::size_t n = pair.n();
  while (true) {
    double best_value = value;
    Configuration best = c;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        Configuration trial = c;
        std::swap(trial.sigma[a], trial.sigma[b]);
        const double v = evaluate(pair, trial, k);
        if (v > best_value) {
          best_value = v;
          best = std::move(trial);
        }
        if (c.in_block[a] != c.in_block[b]) {
          Configuration exchange = c;
          std::swap(exchange.in_block[a], exchange.in_block[b]);
          const double w = evaluate(pair, exchange, k);
          if (w > best_value) {
            best_value = w;
            best = exchange;
          }
          // Moves x_a and x_b together with their block membership.
          std::swap(exchange.sigma[a], exchange.sigma[b]);
          const double u = evaluate(pair, exchange, k);
          if (u > best_value) {
            best_value = u;
            best = std::move(exchange);
          }
        }
      }
    }
    if (!(best_value > value)) return;
    value = best_value;
    c = std::move(best);
  }
}

PermutedMax local_search_max(const CoefficientPair& pair, std::size_t k,
                             const LocalSearchOptions& options) {
  const std::size_t n = pair.n();
  std::vector<Configuration> starts;

  Configuration sorted;
  sorted.sigma.resize(n);
  sorted.in_block.assign(n, false);
  const auto ox = argsort_descending(pair.x);
  const auto oy = argsort_descending(pair.y);
  for (std::size_t r = 0; r < n; ++r) {
    sorted.sigma[ox[r]] = oy[r];
    if (r < k) sorted.in_block[ox[r]] = true;
  }
  starts.push_back(std::move(sorted));
  starts.push_back(identity_configuration(n, k));

  for (int r = 0; r < options.random_restarts; ++r) {
    Rng rng(options.seed, static_cast<std::uint64_t>(r));
    Configuration c = identity_configuration(n, 0);
    for (std::size_t i = n; i > 1; --i) {
      std::swap(c.sigma[i - 1], c.sigma[rng.below(i)]);
    }
    std::vector<std::size_t> slots(n);
    std::iota(slots.begin(), slots.end(), 0);
    for (std::size_t i = n; i > 1; --i) {
      std::swap(slots[i - 1], slots[rng.below(i)]);
    }
    for (std::size_t i = 0; i < k; ++i) c.in_block[slots[i]] = true;
    starts.push_back(std::move(c));
  }

  PermutedMax best;
  best.value = -std::numeric_limits<double>::infinity();
  Configuration best_config;
  for (auto& start : starts) {
    double value = evaluate(pair, start, k);
    hill_climb(pair, k, start, value);
    if (value > best.value) {
      best.value = value;
      best_config = start;
    }
  }
  best.perms = to_permutations(best_config);
  return best;
}

}  // namespace

double partial_cs_bound(const CoefficientPair& pair, std::size_t k) {
  require_k(pair, k);
  std::vector<PairValue> pairs(pair.n());
  for (std::size_t i = 0; i < pair.n(); ++i) pairs[i] = {pair.x[i], pair.y[i]};
  return evaluate_partial(std::move(pairs), k);
}

ChainResult partial_cs_chain(const CoefficientPair& pair) {
  ChainResult chain;
  chain.values.reserve(pair.n() + 1);
  for (std::size_t k = 0; k <= pair.n(); ++k) {
    chain.values.push_back(partial_cs_bound(pair, k));
  }
  return chain;
}

double permuted_partial_cs_bound(const CoefficientPair& pair, std::size_t k,
                                 const PermutationPair& perms) {
  require_k(pair, k);
  if (perms.first.size() != pair.n() || perms.second.size() != pair.n()) {
    throw ValidationError("permutation size does not match coefficient length");
  }
  CoefficientPair relabeled = pair;
  relabeled.x = perms.first.apply(std::span<const double>(pair.x));
  relabeled.y = perms.second.apply(std::span<const double>(pair.y));
  return partial_cs_bound(relabeled, k);
}

const char* to_string(PermutationStrategy s) {
  switch (s) {
    case PermutationStrategy::Exhaustive: return "exhaustive";
    case PermutationStrategy::SortExact: return "sort";
    case PermutationStrategy::LocalSearch: return "local";
  }
  return "?";
}

PermutedMax max_permuted_partial_cs(const CoefficientPair& pair, std::size_t k,
                                    PermutationStrategy strategy,
                                    const LocalSearchOptions& options) {
  require_k(pair, k);
  const std::size_t n = pair.n();
  switch (strategy) {
    case PermutationStrategy::Exhaustive:
      if (n > kMaxExhaustiveDim) {
        throw ValidationError("exhaustive permutation search needs n <= 6");
      }
      return exhaustive_max(pair, k);
    case PermutationStrategy::SortExact: {
      if (k != n) throw ValidationError("sort-exact strategy needs k == n");
      PermutationPair perms{Permutation(argsort_descending(pair.x)),
                            Permutation(argsort_descending(pair.y))};
      return {permuted_partial_cs_bound(pair, k, perms), std::move(perms)};
    }
    case PermutationStrategy::LocalSearch:
      return local_search_max(pair, k, options);
  }
  throw ValidationError("unknown permutation strategy");
}

double l1_bound(const CoefficientPair& pair) {
  if (pair.n() < 2) throw ValidationError("L1 needs n >= 2");
  return partial_cs_bound(pair, pair.n() - 1);
}

double mondal_product_bound(const CoefficientPair& pair) {
  double s = 0.0;
  for (std::size_t i = 0; i < pair.n(); ++i) s += pair.x[i] * pair.y[i];
  return s * s;
}

double expectation_product_bound(const QuantumState& state, const Observable& a,
                                 const Observable& b) {
  const auto ca = center(state, a);
  const auto cb = center(state, b);
  return std::norm(expectation(state, ca.centered.matrix() * cb.centered.matrix()));
}

double operator_pairing_bound(const QuantumState& state, const Observable& a,
                              const Observable& b, const Basis& basis,
                              std::size_t terms) {
  const QuantumState pure = extract_pure(state);
  const Matrix a_bar = center(pure, a).centered.matrix();
  const Matrix b_bar = center(pure, b).centered.matrix();
  const std::size_t count = std::min(terms, basis.dim());
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const ComplexVector psi_i = basis.vector(i);
    const Matrix b_i = Matrix::outer(psi_i, psi_i) * b_bar;
    total += std::abs(expectation(pure, commutator(a_bar, b_i)) +
                      expectation(pure, anticommutator(a_bar, b_i)));
  }
  return 0.25 * total * total;
}

double l1_operator_form(const QuantumState& state, const Observable& a,
                        const Observable& b, const Basis& basis) {
  const std::size_t n = basis.dim();
  if (n < 2) throw ValidationError("L1 needs n >= 2");
  const QuantumState pure = extract_pure(state);
  const ComplexVector& psi = pure.vector();
  const ComplexVector a_psi = matvec(center(pure, a).centered, psi);
  const ComplexVector b_psi = matvec(center(pure, b).centered, psi);
  double var_a = 0.0;
  double var_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    var_a += std::norm(inner(a_psi, basis.vector(i)));
    var_b += std::norm(inner(b_psi, basis.vector(i)));
  }
  const double an = std::norm(inner(a_psi, basis.vector(n - 1)));
  const double bn = std::norm(inner(b_psi, basis.vector(n - 1)));
  return operator_pairing_bound(pure, a, b, basis, n - 1) + an * var_b +
         bn * var_a - an * bn;
}

double schrodinger_bound(const QuantumState& state, const Observable& a,
                         const Observable& b) {
  const Complex comm =
      expectation(state, commutator(a.matrix(), b.matrix()));
  const auto ca = center(state, a);
  const auto cb = center(state, b);
  const Complex anti = expectation(
      state, anticommutator(ca.centered.matrix(), cb.centered.matrix()));
  return std::norm(0.5 * comm) + std::norm(0.5 * anti);
}

UpperBound u1_bound(const CoefficientPair& pair, PermutationStrategy strategy) {
  if (strategy == PermutationStrategy::LocalSearch) {
    throw ValidationError("U1 supports the exhaustive and sort strategies");
  }
  UpperBound out;
  std::vector<double> xs;
  std::vector<double> ys;
  double dropped_x = 0.0;
  double dropped_y = 0.0;
  for (std::size_t i = 0; i < pair.n(); ++i) {
    const bool x_zero = pair.x[i] <= kSupportEpsilon;
    const bool y_zero = pair.y[i] <= kSupportEpsilon;
    if (x_zero && y_zero) {
      ++out.dropped;
      dropped_x += pair.x[i] * pair.x[i];
      dropped_y += pair.y[i] * pair.y[i];
      continue;
    }
    if (x_zero != y_zero) {
      std::ostringstream msg;
      msg << "component " << i << " has exactly one vanishing entry (x = "
          << pair.x[i] << ", y = " << pair.y[i]
          << "); the reverse Cauchy-Schwarz factor is unbounded";
      out.diagnostic = msg.str();
      return out;
    }
    xs.push_back(pair.x[i]);
    ys.push_back(pair.y[i]);
  }
  if (xs.empty()) throw EmptySupportError("U1: every component vanishes");

  const auto [x_min, x_max] = std::minmax_element(xs.begin(), xs.end());
  const auto [y_min, y_max] = std::minmax_element(ys.begin(), ys.end());
  const double lo = *x_min * *y_min;
  const double hi = *x_max * *y_max;
  const double factor = (lo + hi) * (lo + hi) / (4.0 * lo * hi);

  double min_pairing = 0.0;
  if (strategy == PermutationStrategy::SortExact) {
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end(), std::greater<>());
    for (std::size_t i = 0; i < xs.size(); ++i) min_pairing += xs[i] * ys[i];
  } else {
    if (xs.size() > 8) throw ValidationError("exhaustive U1 needs n <= 8");
    min_pairing = std::numeric_limits<double>::infinity();
    Permutation sigma = Permutation::identity(xs.size());
    do {
      double s = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) s += xs[i] * ys[sigma(i)];
      min_pairing = std::min(min_pairing, s);
    } while (sigma.next());
  }

  out.value = factor * min_pairing * min_pairing;
  if (out.dropped > 0) {
    // Dropped components are not covered by the factor; add back exactly what
    // they contribute to |x|^2 |y|^2.
    double kept_x = 0.0;
    double kept_y = 0.0;
    for (double v : xs) kept_x += v * v;
    for (double v : ys) kept_y += v * v;
    out.value += dropped_x * (kept_y + dropped_y) + kept_x * dropped_y;
    std::ostringstream msg;
    msg << out.dropped << " vanishing component(s) dropped";
    out.diagnostic = msg.str();
  }
  out.certified = true;
  return out;
}

bool ProductInterval::contains(double rel_tol) const {
  const double slack = scaled_tolerance(rel_tol, std::abs(product));
  if (lower.value > product + slack) return false;
  if (upper.certified && product > upper.value + slack) return false;
  return true;
}

ProductInterval product_interval(const QuantumState& state, const Observable& a,
                                 const Observable& b, const BoundConfig& config) {
  return product_interval(state, a, b, coefficients(state, a, b, config));
}

ProductInterval product_interval(const QuantumState& state, const Observable& a,
                                 const Observable& b, const CoefficientPair& pair) {
  ProductInterval out;
  out.product = variance(state, a) * variance(state, b);
  out.candidates.push_back({"schrodinger", schrodinger_bound(state, a, b)});
  out.candidates.push_back({"mondal_in", mondal_product_bound(pair)});
  if (pair.n() >= 2) out.candidates.push_back({"l1", l1_bound(pair)});
  out.candidates.push_back(
      {"max_perm_in",
       max_permuted_partial_cs(pair, pair.n(), PermutationStrategy::SortExact)
           .value});
  out.lower = out.candidates.front();
  for (const auto& c : out.candidates) {
    if (c.value > out.lower.value) out.lower = c;
  }
  try {
    out.upper = u1_bound(pair);
  } catch (const EmptySupportError& e) {
    out.upper = UpperBound{};
    out.upper.diagnostic = e.what();
  }
  return out;
}

}  // namespace varbounds
