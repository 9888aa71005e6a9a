// Copyright 2026 The qinfo Authors
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

// JSON documents for states and ensembles.
//
//   state:    { "dim": n, "matrix": [[[re, im], ...], ...] }   (row-major)
//        or   { "bloch": [rx, ry, rz] }                          (qubits)
//   ensemble: { "priors": [...], "states": [state, ...], "letters": [...]? }
//
// Doubles are written in shortest round-trip form, so a document emitted
// here parses back to bit-identical matrices.

#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "qinfo/channel.hpp"
#include "qinfo/quantum.hpp"

namespace qinfo::io {

using json = nlohmann::json;

inline json complex_matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline CMatrix complex_matrix_from_json(const json& rows, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  if (!rows.is_array() || rows.size() != dim)
    throw ValidationError("state document: matrix must have " + std::to_string(dim) + " rows");
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != dim)
      throw ValidationError("state document: each row must have " + std::to_string(dim) + " entries");
    for (Eigen::Index j = 0; j < n; ++j) {
      const json& z = row[static_cast<std::size_t>(j)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw ValidationError("state document: entries must be [re, im] pairs");
      m(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

inline json state_to_json(const DensityOperator& rho) {
  return json{{"dim", rho.dim()}, {"matrix", complex_matrix_to_json(rho.matrix())}};
}

inline json hermitian_to_json(const HermitianOperator& h) {
  return json{{"dim", h.dim()}, {"matrix", complex_matrix_to_json(h.matrix())}};
}

inline DensityOperator state_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("state document: expected a JSON object");
  if (doc.contains("bloch")) {
    const json& b = doc["bloch"];
    if (!b.is_array() || b.size() != 3)
      throw ValidationError("state document: bloch must be [rx, ry, rz]");
    for (const auto& x : b)
      if (!x.is_number()) throw ValidationError("state document: bloch entries must be numbers");
    return DensityOperator::from_bloch({b[0].get<double>(), b[1].get<double>(), b[2].get<double>()});
  }
  if (!doc.contains("dim") || !doc.contains("matrix"))
    throw ValidationError("state document: need either \"bloch\" or \"dim\" and \"matrix\"");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
    throw ValidationError("state document: dim must be a positive integer");
  const auto dim = doc["dim"].get<std::size_t>();
  return DensityOperator(complex_matrix_from_json(doc["matrix"], dim));
}

inline json ensemble_to_json(const CqEnsemble& e) {
  json states = json::array();
  for (const auto& s : e.states()) states.push_back(state_to_json(s));
  return json{{"letters", e.letters()}, {"priors", e.priors().vector()}, {"states", states}};
}

inline CqEnsemble ensemble_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("priors") || !doc.contains("states"))
    throw ValidationError("ensemble document: need \"priors\" and \"states\"");
  const json& priors = doc["priors"];
  const json& states = doc["states"];
  if (!priors.is_array() || !states.is_array())
    throw ValidationError("ensemble document: priors and states must be arrays");
  std::vector<double> p;
  for (const auto& x : priors) {
    if (!x.is_number()) throw ValidationError("ensemble document: priors must be numbers");
    p.push_back(x.get<double>());
  }
  std::vector<DensityOperator> rhos;
  for (const auto& s : states) rhos.push_back(state_from_json(s));
  std::vector<std::string> letters;
  if (doc.contains("letters")) {
    for (const auto& l : doc["letters"]) {
      if (!l.is_string()) throw ValidationError("ensemble document: letters must be strings");
      letters.push_back(l.get<std::string>());
    }
  }
  return CqEnsemble(std::move(letters), ProbDist(std::move(p)), std::move(rhos));
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace qinfo::io
