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


#include "varbounds/cli/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "varbounds/cli/problem_file.hpp"

namespace varbounds::cli {
namespace {

using nlohmann::json;

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json labeled(const LabeledBound& b) {
  return json{{"label", b.label}, {"value", num(b.value)}};
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(std::string("report: missing field \"") + key + "\"");
  }
  return *it;
}

double get_num(const json& obj, const char* key,
               double null_value = std::numeric_limits<double>::quiet_NaN()) {
  const json& v = field(obj, key);
  if (v.is_null()) return null_value;
  if (!v.is_number()) {
    throw SchemaError(std::string("report: \"") + key + "\" is not a number");
  }
  return v.get<double>();
}

template <typename T>
T get(const json& obj, const char* key) {
  try {
    return field(obj, key).get<T>();
  } catch (const json::type_error&) {
    throw SchemaError(std::string("report: \"") + key + "\" has the wrong type");
  }
}

std::vector<double> get_vec(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array()) {
    throw SchemaError(std::string("report: \"") + key + "\" is not an array");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& e : v) {
    if (!e.is_number()) {
      throw SchemaError(std::string("report: \"") + key + "\" has a non-number");
    }
    out.push_back(e.get<double>());
  }
  return out;
}

LabeledBound get_labeled(const json& obj, const char* key) {
  const json& v = field(obj, key);
  return LabeledBound{get<std::string>(v, "label"), get_num(v, "value")};
}

CConstant c_from_json(const json& v) {
  CConstant c;
  c.value = get_num(v, "value");
  c.a0_star = get_num(v, "a0_star");
  c.b0_star = get_num(v, "b0_star");
  c.grid_points = get<std::size_t>(v, "grid_points");
  c.refinement_tol = get_num(v, "refinement_tol");
  return c;
}

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const CConstant& c) {
  return json{{"value", num(c.value)},
              {"a0_star", num(c.a0_star)},
              {"b0_star", num(c.b0_star)},
              {"grid_points", c.grid_points},
              {"refinement_tol", num(c.refinement_tol)}};
}

json to_json(const BoundReport& r) {
  json out;
  out["construction"] = r.construction;
  out["basis"] = r.basis;
  out["x"] = r.x;
  out["y"] = r.y;
  out["v_a"] = num(r.v_a);
  out["v_b"] = num(r.v_b);
  out["product"] = num(r.product);
  out["sum"] = num(r.sum);
  out["chain"] = r.chain;
  out["permuted_chain"] = r.permuted_chain;
  out["permuted_chain_strategy"] = r.permuted_chain_strategy;
  out["schrodinger"] = num(r.schrodinger);
  out["mondal_in"] = num(r.mondal_in);
  out["l1"] = r.l1 ? num(*r.l1) : json(nullptr);
  out["max_perm_in"] = num(r.max_perm_in);
  out["expectation_product"] = num(r.expectation_product);
  out["u1"] = num(r.u1.value);
  out["u1_certified"] = r.u1.certified;
  out["u1_dropped"] = r.u1.dropped;
  out["u1_diagnostic"] = r.u1.diagnostic;
  out["parallelogram"] = json{{"plus", num(r.parallelogram_plus)},
                              {"minus", num(r.parallelogram_minus)}};
  out["l2"] = num(r.l2);
  out["mondal_sum"] = num(r.mondal_sum);
  out["u2"] = num(r.u2);
  out["entropic_sum"] = json{{"value", num(r.entropic_sum.value)},
                             {"entropy_a", num(r.entropic_sum.entropy_a)},
                             {"entropy_b", num(r.entropic_sum.entropy_b)},
                             {"c", to_json(r.entropic_sum.c)},
                             {"premise_holds", r.entropic_sum.premise_holds}};
  if (r.entropic_product) {
    const auto& e = *r.entropic_product;
    out["entropic_product"] =
        json{{"value", num(e.value)},
             {"value_with_quarter", num(e.value_with_quarter)},
             {"scale", num(e.scale)},
             {"fallback", e.fallback},
             {"premise_holds", e.premise_holds},
             {"entropic_sum", num(e.entropic_sum)}};
  } else {
    out["entropic_product"] = nullptr;
  }
  out["product_interval"] = json{{"lower", labeled(r.product_lower)},
                                 {"upper", num(r.u1.value)},
                                 {"upper_certified", r.u1.certified},
                                 {"product", num(r.product)},
                                 {"contained", r.product_contained()}};
  out["sum_interval"] = json{{"lower", labeled(r.sum_lower)},
                             {"upper", num(r.u2)},
                             {"sum", num(r.sum)},
                             {"contained", r.sum_contained()}};
  return out;
}

BoundReport report_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("report: expected an object");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  BoundReport r;
  r.construction = get<std::string>(doc, "construction");
  r.basis = get<std::string>(doc, "basis");
  r.x = get_vec(doc, "x");
  r.y = get_vec(doc, "y");
  r.v_a = get_num(doc, "v_a");
  r.v_b = get_num(doc, "v_b");
  r.product = get_num(doc, "product");
  r.sum = get_num(doc, "sum");
  r.chain = get_vec(doc, "chain");
  r.permuted_chain = get_vec(doc, "permuted_chain");
  r.permuted_chain_strategy = get<std::string>(doc, "permuted_chain_strategy");
  r.schrodinger = get_num(doc, "schrodinger");
  r.mondal_in = get_num(doc, "mondal_in");
  if (!field(doc, "l1").is_null()) r.l1 = get_num(doc, "l1");
  r.max_perm_in = get_num(doc, "max_perm_in");
  r.expectation_product = get_num(doc, "expectation_product");
  r.u1.certified = get<bool>(doc, "u1_certified");
  r.u1.value = get_num(doc, "u1", kInf);
  r.u1.dropped = get<std::size_t>(doc, "u1_dropped");
  r.u1.diagnostic = get<std::string>(doc, "u1_diagnostic");
  const json& par = field(doc, "parallelogram");
  r.parallelogram_plus = get_num(par, "plus");
  r.parallelogram_minus = get_num(par, "minus");
  r.l2 = get_num(doc, "l2");
  r.mondal_sum = get_num(doc, "mondal_sum");
  r.u2 = get_num(doc, "u2");
  const json& es = field(doc, "entropic_sum");
  r.entropic_sum.value = get_num(es, "value");
  r.entropic_sum.entropy_a = get_num(es, "entropy_a");
  r.entropic_sum.entropy_b = get_num(es, "entropy_b");
  r.entropic_sum.c = c_from_json(field(es, "c"));
  r.entropic_sum.premise_holds = get<bool>(es, "premise_holds");
  const json& ep = field(doc, "entropic_product");
  if (!ep.is_null()) {
    EntropicProductBound e;
    e.value = get_num(ep, "value");
    e.value_with_quarter = get_num(ep, "value_with_quarter");
    e.scale = get_num(ep, "scale");
    e.fallback = get<bool>(ep, "fallback");
    e.premise_holds = get<bool>(ep, "premise_holds");
    e.entropic_sum = get_num(ep, "entropic_sum");
    r.entropic_product = e;
  }
  r.product_lower = get_labeled(field(doc, "product_interval"), "lower");
  r.sum_lower = get_labeled(field(doc, "sum_interval"), "lower");
  return r;
}

}  // namespace varbounds::cli
