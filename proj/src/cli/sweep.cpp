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


#include "varbounds/cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <thread>

#include "varbounds/cli/report_io.hpp"
#include "varbounds/report.hpp"

namespace varbounds::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_real(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() ||
      !std::isfinite(v)) {
    throw RangeError("invalid angle \"" + std::string(whole) + "\"");
  }
  return v;
}

std::size_t parse_count(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw RangeError("invalid step count in \"" + std::string(whole) + "\"");
  }
  return v;
}

SweepRow make_row(double theta, const BoundReport& r) {
  SweepRow row;
  row.theta = theta;
  row.v_a = r.v_a;
  row.v_b = r.v_b;
  row.product = r.product;
  row.sum = r.sum;
  row.l1 = r.l1.value_or(std::numeric_limits<double>::quiet_NaN());
  row.mondal_in = r.mondal_in;
  row.schrodinger = r.schrodinger;
  row.max_perm_in = r.max_perm_in;
  row.u1 = r.u1.value;
  row.l2 = r.l2;
  row.mondal_sum = r.mondal_sum;
  row.u2 = r.u2;
  row.entropic_product = r.entropic_product
                             ? r.entropic_product->value
                             : std::numeric_limits<double>::quiet_NaN();
  row.entropic_sum = r.entropic_sum.value;
  row.entropic_premise =
      r.entropic_sum.premise_holds &&
      (!r.entropic_product || r.entropic_product->premise_holds);
  return row;
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+03C0 in UTF-8
    if (text.substr(i, 2) == "\xCF\x80") {
      s += "pi";
      ++i;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
    }
  }
  auto pos = s.find("pi");
  if (pos == std::string::npos) return parse_real(s, text);
  if (s.find("pi", pos + 2) != std::string::npos) {
    throw RangeError("invalid angle \"" + std::string(text) + "\"");
  }
  std::string_view coef(s.data(), pos);
  std::string_view rest(s.data() + pos + 2, s.size() - pos - 2);
  if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
  double factor = 1.0;
  if (coef.empty() || coef == "+") {
    factor = 1.0;
  } else if (coef == "-") {
    factor = -1.0;
  } else {
    factor = parse_real(coef, text);
  }
  double value = factor * std::numbers::pi;
  if (!rest.empty()) {
    if (rest.front() != '/') {
      throw RangeError("invalid angle \"" + std::string(text) + "\"");
    }
    double den = parse_real(rest.substr(1), text);
    if (den == 0.0) throw RangeError("division by zero in \"" + std::string(text) + "\"");
    value /= den;
  }
  return value;
}

std::vector<double> ThetaRange::samples() const {
  std::vector<double> out(steps);
  const double span = stop - start;
  for (std::size_t i = 0; i < steps; ++i) {
    out[i] = start + span * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  out.back() = stop;
  return out;
}

ThetaRange parse_theta_range(std::string_view text) {
  auto first = text.find(':');
  auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos ||
      text.find(':', second + 1) != std::string_view::npos) {
    throw RangeError("theta range must look like start:stop:steps, got \"" +
                     std::string(text) + "\"");
  }
  ThetaRange r;
  r.start = parse_angle(text.substr(0, first));
  r.stop = parse_angle(text.substr(first + 1, second - first - 1));
  r.steps = parse_count(text.substr(second + 1), text);
  if (r.steps < 2) throw RangeError("theta range needs at least 2 steps");
  return r;
}

ScenarioKind parse_scenario(const std::string& name) {
  if (name == "spin1") return ScenarioKind::Spin1LxLy;
  if (name == "spinhalf") return ScenarioKind::SpinHalfSxSz;
  if (name == "custom") return ScenarioKind::Custom;
  throw std::invalid_argument("unknown scenario \"" + name +
                              "\" (expected spin1, spinhalf or custom)");
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
  const std::vector<double> thetas = options.range.samples();
  std::vector<SweepRow> rows(thetas.size());
  std::vector<std::exception_ptr> errors(thetas.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < thetas.size(); i = next++) {
      try {
        ScenarioSpec spec{options.kind, thetas[i], options.config, options.custom};
        ScenarioInstance inst = instantiate(spec);
        ReportOptions ro;
        ro.config = options.config;
        BoundReport report = compute_report(inst.state, inst.a, inst.b, ro);
        if (!report.product_contained(options.tolerance) ||
            !report.sum_contained(options.tolerance)) {
          throw ContainmentError(
              "containment violated at theta=" + format_number(thetas[i]) +
              ": product " + format_number(report.product_lower.value) + " <= " +
              format_number(report.product) + " <= " +
              format_number(report.u1.value) + ", sum " +
              format_number(report.sum_lower.value) + " <= " +
              format_number(report.sum) + " <= " + format_number(report.u2));
        }
        rows[i] = make_row(thetas[i], report);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned threads = std::max(
      1u, std::min<unsigned>(options.threads, static_cast<unsigned>(thetas.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    for (double v : {r.theta, r.v_a, r.v_b, r.product, r.sum, r.l1, r.mondal_in,
                     r.schrodinger, r.max_perm_in, r.u1, r.l2, r.mondal_sum,
                     r.u2, r.entropic_product, r.entropic_sum}) {
      out << format_number(v) << ',';
    }
    out << (r.entropic_premise ? "true" : "false") << '\n';
  }
}

nlohmann::json to_json(const std::vector<SweepRow>& rows) {
  auto num = [](double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  };
  nlohmann::json out = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    out.push_back({{"theta", num(r.theta)},
                   {"v_a", num(r.v_a)},
                   {"v_b", num(r.v_b)},
                   {"product", num(r.product)},
                   {"sum", num(r.sum)},
                   {"l1", num(r.l1)},
                   {"mondal_in", num(r.mondal_in)},
                   {"schrodinger", num(r.schrodinger)},
                   {"max_perm_in", num(r.max_perm_in)},
                   {"u1", num(r.u1)},
                   {"l2", num(r.l2)},
                   {"mondal_sum", num(r.mondal_sum)},
                   {"u2", num(r.u2)},
                   {"entropic_product", num(r.entropic_product)},
                   {"entropic_sum", num(r.entropic_sum)},
                   {"entropic_premise", r.entropic_premise}});
  }
  return out;
}

}  // namespace varbounds::cli
