// Copyright 2026 The stochan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "stochan/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "stochan/errors.hpp"
#include "stochan/random.hpp"
#include "stochan/stochastic.hpp"

namespace stochan::io {

namespace {

using nlohmann::json;

Index read_dim(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("expected an object with integer field \"dim\"");
  }
  const auto d = j["dim"].get<long long>();
  if (d < 1) throw ParseError("\"dim\" must be positive");
  return static_cast<Index>(d);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError("not a finite number: '" + text + "'");
  }
  return value;
}

long long parse_integer(const std::string& text) {
  long long value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("not an integer: '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<double> parse_list(const std::string& args, const std::string& key) {
  if (args.empty()) throw ParseError(key + ": missing arguments");
  std::vector<double> out;
  for (const auto& item : split(args, ',')) out.push_back(parse_double(item));
  return out;
}

void expect_count(const std::vector<double>& v, size_t lo, size_t hi,
                  const std::string& key) {
  if (v.size() < lo || v.size() > hi) {
    throw ParseError(key + ": wrong number of arguments");
  }
}

Index as_dim(double v, const std::string& key) {
  if (v != std::floor(v) || v < 1.0 || v > 64.0) {
    throw ParseError(key + ": dimension must be a positive integer");
  }
  return static_cast<Index>(v);
}

bool looks_like_key(const std::string& spec, const std::string& name) {
  return spec == name || spec.rfind(name + ":", 0) == 0;
}

std::string args_of(const std::string& spec, const std::string& name) {
  return spec.size() > name.size() ? spec.substr(name.size() + 1) : std::string();
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    throw DimensionError("matrix: expected " + std::to_string(rows) + " rows");
  }
  ComplexMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[size_t(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw DimensionError("matrix: row " + std::to_string(r) + " should have " +
                           std::to_string(cols) + " entries");
    }
    for (Index c = 0; c < cols; ++c) {
      const json& e = row[size_t(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ParseError("matrix: entries must be [re, im] number pairs");
      }
      const double re = e[0].get<double>();
      const double im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ParseError("matrix: non-finite entry");
      }
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

Channel channel_from_json(const json& j) {
  const Index d = read_dim(j);
  const bool has_kraus = j.contains("kraus");
  const bool has_choi = j.contains("choi");
  if (has_kraus == has_choi) {
    throw ParseError("channel: exactly one of \"kraus\" and \"choi\" is required");
  }
  if (has_choi) return Channel::from_choi(matrix_from_json(j["choi"], d * d, d * d));
  const json& list = j["kraus"];
  if (!list.is_array() || list.empty()) {
    throw ParseError("channel: \"kraus\" must be a non-empty list");
  }
  KrausList kraus;
  for (const auto& m : list) kraus.push_back(matrix_from_json(m, d, d));
  return choi_of(kraus, d);
}

json channel_to_json(const Channel& phi) {
  json j;
  j["dim"] = phi.dim();
  if (phi.has_kraus()) {
    json list = json::array();
    for (const auto& k : *phi.kraus()) list.push_back(matrix_to_json(k));
    j["kraus"] = std::move(list);
  } else {
    j["choi"] = matrix_to_json(phi.choi());
  }
  return j;
}

UnitaryDesign design_from_json(const json& j) {
  UnitaryDesign mu;
  mu.dim = read_dim(j);
  if (!j.contains("design") || !j["design"].is_array() || j["design"].empty()) {
    throw ParseError("design: \"design\" must be a non-empty list");
  }
  for (const auto& e : j["design"]) {
    if (!e.is_object() || !e.contains("weight") || !e["weight"].is_number() ||
        !e.contains("unitary")) {
      throw ParseError("design: elements need \"weight\" and \"unitary\"");
    }
    mu.elements.push_back(
        {e["weight"].get<double>(), matrix_from_json(e["unitary"], mu.dim, mu.dim)});
  }
  mu.validate();
  return mu;
}

json design_to_json(const UnitaryDesign& mu) {
  json list = json::array();
  for (const auto& e : mu.elements) {
    list.push_back({{"weight", e.weight}, {"unitary", matrix_to_json(e.unitary)}});
  }
  return {{"dim", mu.dim}, {"design", std::move(list)}};
}

ComplexMatrix unitary_from_json(const json& j) {
  const Index d = read_dim(j);
  if (!j.contains("unitary")) throw ParseError("missing \"unitary\"");
  ComplexMatrix u = matrix_from_json(j["unitary"], d, d);
  if (!is_unitary(u)) throw MatrixPropertyError("matrix is not unitary");
  return u;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(1) << '\n';
  if (!out) throw ParseError("write to '" + path + "' failed");
}

Channel parse_channel_spec(const std::string& spec) {
  if (looks_like_key(spec, "identity")) {
    if (spec == "identity") return identity_channel(2);
    const auto v = parse_list(args_of(spec, "identity"), "identity");
    expect_count(v, 1, 1, "identity");
    return identity_channel(as_dim(v[0], "identity"));
  }
  if (looks_like_key(spec, "depolarizing")) {
    const auto v = parse_list(args_of(spec, "depolarizing"), "depolarizing");
    expect_count(v, 1, 2, "depolarizing");
    return depolarizing(v[0], v.size() == 2 ? as_dim(v[1], "depolarizing") : 2);
  }
  if (looks_like_key(spec, "pauli")) {
    return pauli_channel(parse_list(args_of(spec, "pauli"), "pauli"));
  }
  if (looks_like_key(spec, "paper-example")) {
    const auto v = parse_list(args_of(spec, "paper-example"), "paper-example");
    expect_count(v, 2, 2, "paper-example");
    return paper_example(v[0], as_dim(v[1], "paper-example"));
  }
  if (looks_like_key(spec, "bz")) {
    const auto v = parse_list(args_of(spec, "bz"), "bz");
    expect_count(v, 6, 6, "bz");
    return qubit_choi_bz({{v[0], v[1], v[2]}, {v[3], v[4], v[5]}});
  }
  if (looks_like_key(spec, "random")) {
    const auto items = split(args_of(spec, "random"), ',');
    if (items.size() < 2 || items.size() > 3) {
      throw ParseError("random: expected d,seed[,kraus_count]");
    }
    const long long d = parse_integer(items[0]);
    const long long seed = parse_integer(items[1]);
    const long long rank = items.size() == 3 ? parse_integer(items[2]) : 0;
    if (d < 1 || d > 64 || seed < 0 || rank < 0) {
      throw ParseError("random: arguments out of range");
    }
    Rng rng = make_rng(static_cast<std::uint64_t>(seed));
    return random_channel(Index(d), rng, Index(rank));
  }
  return channel_from_json(read_json_file(spec));
}

UnitaryDesign parse_design_spec(const std::string& spec) {
  if (looks_like_key(spec, "pauli")) {
    const long long n = parse_integer(args_of(spec, "pauli"));
    if (n < 1 || n > 3) throw ParseError("pauli: n must be 1, 2 or 3");
    return pauli_design(int(n));
  }
  if (looks_like_key(spec, "wh")) {
    const long long d = parse_integer(args_of(spec, "wh"));
    if (d < 1 || d > 64) throw ParseError("wh: d out of range");
    return weyl_heisenberg_design(Index(d));
  }
  if (looks_like_key(spec, "rotated")) {
    const std::string rest = args_of(spec, "rotated");
    const auto cut = rest.rfind(':');
    if (cut == std::string::npos || cut == 0 || cut + 1 == rest.size()) {
      throw ParseError("rotated: expected rotated:<design>:<unitary file>");
    }
    const UnitaryDesign base = parse_design_spec(rest.substr(0, cut));
    const ComplexMatrix u = unitary_from_json(read_json_file(rest.substr(cut + 1)));
    if (u.rows() != base.dim) throw DimensionError("rotated: unitary dimension");
    return rotated_design(u, base);
  }
  return design_from_json(read_json_file(spec));
}

}  // namespace stochan::io
