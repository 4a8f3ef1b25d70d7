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


#include "varbounds/cli/problem_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "varbounds/errors.hpp"

namespace varbounds::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) fail(where, "non-finite number");
  return d;
}

std::vector<double> real_row(const json& v, std::size_t n,
                             const std::string& where) {
  if (!v.is_array() || v.size() != n) {
    fail(where, "expected an array of length " + std::to_string(n));
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = number(v[i], where + "[" + std::to_string(i) + "]");
  }
  return out;
}

ComplexVector parse_vector(const json& v, std::size_t n,
                           const std::string& where) {
  auto re = real_row(require(v, "real", where), n, where + ".real");
  std::vector<double> im(n, 0.0);
  if (v.contains("imag")) im = real_row(v["imag"], n, where + ".imag");
  std::vector<Complex> entries(n);
  for (std::size_t i = 0; i < n; ++i) entries[i] = Complex(re[i], im[i]);
  return ComplexVector(std::move(entries));
}

Matrix parse_matrix(const json& v, std::size_t n, const std::string& where) {
  const json& re = require(v, "real", where);
  if (!re.is_array() || re.size() != n) {
    fail(where + ".real", "expected " + std::to_string(n) + " rows");
  }
  const json* im = v.contains("imag") ? &v["imag"] : nullptr;
  if (im && (!im->is_array() || im->size() != n)) {
    fail(where + ".imag", "expected " + std::to_string(n) + " rows");
  }
  std::vector<Complex> data;
  data.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::string row = "[" + std::to_string(r) + "]";
    auto rr = real_row(re[r], n, where + ".real" + row);
    std::vector<double> ir(n, 0.0);
    if (im) ir = real_row((*im)[r], n, where + ".imag" + row);
    for (std::size_t c = 0; c < n; ++c) data.emplace_back(rr[c], ir[c]);
  }
  return Matrix(n, std::move(data));
}

Observable parse_observable(const json& v, std::size_t n,
                            const std::string& where) {
  try {
    return Observable(HermitianMatrix(parse_matrix(v, n, where)));
  } catch (const ValidationError& e) {
    fail(where, e.what());
  }
}

std::size_t parse_header(const json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  const json& schema = require(doc, "schema", "document");
  if (!schema.is_number_integer() || schema.get<long long>() != 1) {
    fail("schema", "unsupported schema version (expected 1)");
  }
  const json& dim = require(doc, "dimension", "document");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) {
    fail("dimension", "expected a positive integer");
  }
  return dim.get<std::size_t>();
}

BoundConfig parse_config(const json& doc, std::size_t n) {
  BoundConfig config;
  if (doc.contains("construction")) {
    const json& c = doc["construction"];
    if (!c.is_string()) fail("construction", "expected a string");
    config.construction = parse_construction(c.get<std::string>());
  }
  if (doc.contains("basis")) {
    const json& b = doc["basis"];
    if (b.is_string()) {
      config.basis = parse_basis_choice(b.get<std::string>());
    } else {
      config.basis = BasisChoice::Explicit;
      try {
        config.explicit_basis = Basis::from_columns(parse_matrix(b, n, "basis"));
      } catch (const ValidationError& e) {
        fail("basis", e.what());
      }
    }
  }
  return config;
}

}  // namespace

Construction parse_construction(const std::string& name) {
  if (name == "basis") return Construction::BasisExpansion;
  if (name == "fidelity") return Construction::FidelityWeighted;
  fail("construction", "unknown construction \"" + name +
                           "\" (expected basis or fidelity)");
}

BasisChoice parse_basis_choice(const std::string& name) {
  if (name == "computational") return BasisChoice::Computational;
  if (name == "eigen_a") return BasisChoice::EigenA;
  if (name == "eigen_b") return BasisChoice::EigenB;
  fail("basis", "unknown basis \"" + name +
                    "\" (expected computational, eigen_a or eigen_b)");
}

Problem parse_problem(const json& doc) {
  const std::size_t n = parse_header(doc);
  Observable a = parse_observable(require(doc, "observable_a", "document"), n,
                                  "observable_a");
  Observable b = parse_observable(require(doc, "observable_b", "document"), n,
                                  "observable_b");
  const json& st = require(doc, "state", "document");
  const json& type = require(st, "type", "state");
  const json& data = require(st, "data", "state");
  if (!type.is_string()) fail("state.type", "expected a string");
  std::optional<QuantumState> state;
  try {
    if (type == "pure") {
      state = QuantumState::pure(parse_vector(data, n, "state.data"));
    } else if (type == "density") {
      state = QuantumState::density(
          HermitianMatrix(parse_matrix(data, n, "state.data")));
    } else {
      fail("state.type", "expected pure or density");
    }
  } catch (const ValidationError& e) {
    fail("state", e.what());
  }
  return Problem{*std::move(state), std::move(a), std::move(b),
                 parse_config(doc, n)};
}

CustomProblem parse_custom_family(const json& doc) {
  const std::size_t n = parse_header(doc);
  if (n < 2) fail("dimension", "a custom family needs dimension >= 2");
  Observable a = parse_observable(require(doc, "observable_a", "document"), n,
                                  "observable_a");
  Observable b = parse_observable(require(doc, "observable_b", "document"), n,
                                  "observable_b");
  const json& fam = require(doc, "family", "document");
  ComplexVector u = parse_vector(require(fam, "cos", "family"), n, "family.cos");
  ComplexVector v = parse_vector(require(fam, "sin", "family"), n, "family.sin");
  if (u.norm() == 0.0 || v.norm() == 0.0) {
    fail("family", "components must be nonzero");
  }
  return CustomProblem{
      CustomFamily{std::move(a), std::move(b), std::move(u), std::move(v)},
      parse_config(doc, n)};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": invalid JSON: " + e.what());
  }
}

Problem load_problem(const std::string& path) {
  return parse_problem(read_json_file(path));
}

CustomProblem load_custom_family(const std::string& path) {
  return parse_custom_family(read_json_file(path));
}

}  // namespace varbounds::cli
