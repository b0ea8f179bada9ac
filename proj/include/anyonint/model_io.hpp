// Copyright 2026 The anyonint Authors
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

#ifndef ANYONINT_MODEL_IO_HPP
#define ANYONINT_MODEL_IO_HPP

#include <string>
#include <string_view>

#include "anyonint/model.hpp"

namespace anyonint {

/// Parses a model file (UTF-8 JSON document, see README for the schema).
/// Structural validation only; callers run verify_model for the numerical
/// consistency checks.
ModelPtr load_model(std::string_view text);

/// Reads `path` and calls load_model.
ModelPtr load_model_file(const std::string& path);

/// Canonical JSON serialization; load_model(serialize_model(m)) reproduces m.
std::string serialize_model(const AnyonModel& model);

/// Field-for-field equality with `tol` on every complex/real entry.
bool models_equal(const AnyonModel& lhs, const AnyonModel& rhs,
                  double tol = 1e-15);

}  // namespace anyonint

#endif  // ANYONINT_MODEL_IO_HPP
