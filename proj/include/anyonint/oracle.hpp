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

#ifndef ANYONINT_ORACLE_HPP
#define ANYONINT_ORACLE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anyonint/interferometry.hpp"
#include "anyonint/model.hpp"

namespace anyonint {

// Brute-force recomputations of the closed-form results, so they are
// validated rather than trusted. Pure functions throughout.

/// Term-by-term binomial sum
///   sum_n C(N,n) |r|^{2(N-n)} |t|^{2n} M_be^n
/// for N identical definite-charge-b horizontal probes, placement below.
/// Must equal (|r|^2 + |t|^2 M_be)^N. Requires N <= 30 (exact binomials).
Complex binomial_channel_factor(const AnyonModel& model, int e, int b,
                                const BeamSplitter& t1, int n_probes);

/// Literal sum over all assignments of each probe to {between, around} and
/// each probe's charge component, weighting by squared-amplitude path weights
/// and one factor M_be per between-passing. Placement below. Must equal
/// channel_factor. Requires N <= 12.
Complex path_enumeration_factor(const AnyonModel& model, int e,
                                std::span<const ProbeSpec> probes,
                                const BeamSplitter& t1, int n_probes);

struct BlockWeight {
  int a = 0;
  double weight = 0.0;                    // sum_{f,mu} Re rho(a,f,mu; a,f,mu)
  std::optional<double> deviation;        // |weight - |A_a|^2| when a
                                          // reference target was supplied
};

struct DensityMatrixReport {
  double hermiticity_deviation = 0.0;
  double trace_deviation = 0.0;
  double min_eigenvalue = 0.0;
  std::vector<BlockWeight> block_weights;

  bool pass(double tol = kDefaultTol) const;
  std::string to_text() const;
};

/// Hermiticity, unit trace, positivity, and per-a diagonal-block weight
/// conservation (against `reference` when given).
DensityMatrixReport check_density_matrix(const PairBasisMatrix& rho,
                                         const TargetState* reference = nullptr);

struct Scenario {
  TargetState target;
  std::vector<ProbeSpec> probes;
  InterferometerConfig config;
  int n_probes = 0;
};

struct ComparisonReport {
  double max_deviation = 0.0;
  double threshold = 1e-10;
  bool pass = false;
  std::string to_text() const;
};

/// Runs evolve against an oracle reconstruction (decompose, path-enumeration
/// factor per channel, recompose) and reports the max elementwise deviation.
/// Requires scenario.n_probes <= 12.
ComparisonReport closed_form_vs_oracle(const Scenario& scenario,
                                       double threshold = 1e-10);

}  // namespace anyonint

#endif  // ANYONINT_ORACLE_HPP
