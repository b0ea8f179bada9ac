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

#ifndef ANYONINT_VERIFY_HPP
#define ANYONINT_VERIFY_HPP

#include <string>
#include <vector>

#include "anyonint/model.hpp"

namespace anyonint {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  std::string detail;  // worst offending instance, empty when passed
};

struct VerificationReport {
  std::string model_name;
  double tolerance = kDefaultTol;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  double max_deviation() const;
  const CheckResult* find(std::string_view name) const;
  std::string to_text() const;
};

/// Runs every consistency check on the model and reports each one with its
/// maximum deviation: fusion vacuum/commutativity rules, quantum-dimension
/// consistency, S-matrix unitarity/symmetry, d_a = D*S_1a, F-block and
/// pair-block unitarity, pentagon and both hexagon identities, |M_ab| <= 1,
/// and the S-matrix against the twists derived from the R-data. Failures are
/// report entries, not exceptions.
VerificationReport verify_model(const AnyonModel& model,
                                double tol = kDefaultTol);

}  // namespace anyonint

#endif  // ANYONINT_VERIFY_HPP
