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


// JSON interchange for channels. Complex scalars are [re, im] pairs and
// matrices are row-major arrays of rows.
//
//   Kraus:         {"d_in": 2, "d_out": 2, "kraus": [M, ...]}
//   Pauli-diagonal {"d": 2, "basis": "pauli", "weights": [a_0, ...]}
//   EBT:           {"x": [v, ...], "w": [v, ...]}

#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qcc/channel.hpp"
#include "qcc/ebt.hpp"
#include "qcc/pauli.hpp"

namespace qcc {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);
Complex complex_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Vector vector_from_json(const Json& j);

Json channel_to_json(const KrausChannel& channel);
KrausChannel channel_from_json(const Json& j);

Json pauli_to_json(const PauliDiagonalChannel& channel);
PauliDiagonalChannel pauli_from_json(const Json& j);

Json ebt_to_json(const EBTChannel& channel);
EBTChannel ebt_from_json(const Json& j);

/// Any of the three formats, recognised by its keys.
struct LoadedChannel {
  KrausChannel kraus;
  std::optional<PauliDiagonalChannel> pauli;
  std::optional<EBTChannel> ebt;
};

LoadedChannel any_channel_from_json(const Json& j);

// Kraus form plus a nested "pauli" or "ebt" block when present.
Json any_channel_to_json(const LoadedChannel& channel);

/// Throws IoError when the file cannot be read or parsed.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qcc
