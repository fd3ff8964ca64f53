// Copyright 2026 The qcc Authors
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


#include "qcc/io.hpp"

#include <fstream>
#include <sstream>

#include "qcc/error.hpp"

namespace qcc {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ValidationError(std::string("JSON: missing field \"") + name + "\"");
  }
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) {
    throw ValidationError(std::string("JSON: field \"") + name +
                          "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<Vector> vectors_from_json(const Json& j, const char* name) {
  const Json& arr = field(j, name);
  if (!arr.is_array() || arr.empty()) {
    throw ValidationError(std::string("JSON: \"") + name +
                          "\" must be a non-empty array");
  }
  std::vector<Vector> out;
  for (const auto& v : arr) out.push_back(vector_from_json(v));
  return out;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ValidationError("JSON: complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back(complex_to_json(m(i, k)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ValidationError("JSON: matrices must be arrays of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols) {
      throw ValidationError("JSON: matrix rows have different lengths");
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError("JSON: vectors must be non-empty arrays");
  }
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i]);
  return v;
}

Json channel_to_json(const KrausChannel& channel) {
  Json out;
  out["d_in"] = channel.d_in();
  out["d_out"] = channel.d_out();
  Json kraus = Json::array();
  for (const auto& f : channel.kraus()) kraus.push_back(matrix_to_json(f));
  out["kraus"] = std::move(kraus);
  return out;
}

KrausChannel channel_from_json(const Json& j) {
  const int d_in = int_field(j, "d_in");
  const int d_out = int_field(j, "d_out");
  const Json& arr = field(j, "kraus");
  if (!arr.is_array()) {
    throw ValidationError("JSON: \"kraus\" must be an array of matrices");
  }
  std::vector<Matrix> kraus;
  for (const auto& m : arr) kraus.push_back(matrix_from_json(m));
  return KrausChannel(d_in, d_out, std::move(kraus));
}

Json pauli_to_json(const PauliDiagonalChannel& channel) {
  Json out;
  out["d"] = channel.basis().d;
  out["basis"] = basis_descriptor(channel.basis());
  out["weights"] = channel.weights();
  return out;
}

PauliDiagonalChannel pauli_from_json(const Json& j) {
  const int d = int_field(j, "d");
  const Json& b = field(j, "basis");
  if (!b.is_string()) throw ValidationError("JSON: \"basis\" must be a string");
  const Json& w = field(j, "weights");
  if (!w.is_array()) throw ValidationError("JSON: \"weights\" must be an array");
  std::vector<double> weights;
  for (const auto& x : w) {
    if (!x.is_number()) throw ValidationError("JSON: weights must be numbers");
    weights.push_back(x.get<double>());
  }
  return PauliDiagonalChannel(basis_from_descriptor(b.get<std::string>(), d),
                              std::move(weights));
}

Json ebt_to_json(const EBTChannel& channel) {
  Json out;
  Json x = Json::array();
  Json w = Json::array();
  for (const auto& v : channel.x()) x.push_back(vector_to_json(v));
  for (const auto& v : channel.w()) w.push_back(vector_to_json(v));
  out["x"] = std::move(x);
  out["w"] = std::move(w);
  return out;
}

EBTChannel ebt_from_json(const Json& j) {
  return EBTChannel(vectors_from_json(j, "x"), vectors_from_json(j, "w"));
}

LoadedChannel any_channel_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("JSON: channel must be an object");
  if (j.contains("kraus")) {
    LoadedChannel out{channel_from_json(j), std::nullopt, std::nullopt};
    if (j.contains("pauli")) out.pauli = pauli_from_json(j["pauli"]);
    if (j.contains("ebt")) out.ebt = ebt_from_json(j["ebt"]);
    const KrausChannel* structured =
        out.pauli ? &out.pauli->channel() : out.ebt ? &out.ebt->channel() : nullptr;
    if (structured != nullptr && !same_channel(out.kraus, *structured, 1e-8)) {
      throw ValidationError(
          "JSON: structured block does not match the Kraus operators");
    }
    return out;
  }
  if (j.contains("weights")) {
    PauliDiagonalChannel p = pauli_from_json(j);
    KrausChannel k = p.channel();
    return LoadedChannel{std::move(k), std::move(p), std::nullopt};
  }
  if (j.contains("x") && j.contains("w")) {
    EBTChannel e = ebt_from_json(j);
    KrausChannel k = e.channel();
    return LoadedChannel{std::move(k), std::nullopt, std::move(e)};
  }
  throw ValidationError(
      "JSON: not a channel (expected \"kraus\", \"weights\" or \"x\"/\"w\")");
}

Json any_channel_to_json(const LoadedChannel& channel) {
  Json out = channel_to_json(channel.kraus);
  if (channel.pauli) out["pauli"] = pauli_to_json(*channel.pauli);
  if (channel.ebt) out["ebt"] = ebt_to_json(*channel.ebt);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("error while writing '" + path + "'");
}

}  // namespace qcc
