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

#include "anyonint/oracle.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace anyonint {

Complex binomial_channel_factor(const AnyonModel& model, int e, int b,
                                const BeamSplitter& t1, int n_probes) {
  if (n_probes < 0 || n_probes > 30)
    throw DomainError(
        "binomial_channel_factor supports 0 <= N <= 30 (exact binomial "
        "coefficients)");
  const Complex mono = model.monodromy(b, e);
  const double x = std::norm(t1.r);  // around weight
  const double y = std::norm(t1.t);  // between weight
  Complex sum{0.0, 0.0};
  for (int k = 0; k <= n_probes; ++k) {
    // C(N,k), exact in 64-bit for N <= 30.
    unsigned long long binom = 1;
    for (int j = 1; j <= k; ++j)
      binom = binom * static_cast<unsigned long long>(n_probes - k + j) /
              static_cast<unsigned long long>(j);
    Complex mpow{1.0, 0.0};
    for (int j = 0; j < k; ++j) mpow *= mono;
    sum += static_cast<double>(binom) * std::pow(x, n_probes - k) *
           std::pow(y, k) * mpow;
  }
  return sum;
}

namespace {

struct PathOutcome {
  double weight = 0.0;
  Complex mono{1.0, 0.0};  // M_be if the probe passed between, else 1
};

/// Depth-first sum over every joint assignment of probes to outcomes.
Complex path_sum(const std::vector<std::vector<PathOutcome>>& outcomes,
                 size_t k, double weight, Complex mono) {
  if (k == outcomes.size()) return weight * mono;
  Complex sum{0.0, 0.0};
  for (const PathOutcome& o : outcomes[k])
    sum += path_sum(outcomes, k + 1, weight * o.weight, mono * o.mono);
  return sum;
}

}  // namespace

Complex path_enumeration_factor(const AnyonModel& model, int e,
                                std::span<const ProbeSpec> probes,
                                const BeamSplitter& t1, int n_probes) {
  if (n_probes < 0 || n_probes > 12)
    throw DomainError("path_enumeration_factor supports 0 <= N <= 12");
  if (e < 0 || e >= model.charge_count())
    throw DomainError("charge index out of range");
  if (n_probes > 0 && probes.empty())
    throw DomainError("no probe specification given");
  if (probes.size() != 1 && probes.size() < static_cast<size_t>(n_probes))
    throw DomainError("fewer probe specifications than probes requested");

  std::vector<std::vector<PathOutcome>> outcomes(n_probes);
  for (int k = 0; k < n_probes; ++k) {
    const ProbeSpec& probe = probes.size() == 1 ? probes[0] : probes[k];
    for (int b = 0; b < model.charge_count(); ++b) {
      const Complex bh = probe.amplitude(b, Direction::horizontal);
      const Complex bv = probe.amplitude(b, Direction::vertical);
      if (bh == Complex{0.0, 0.0} && bv == Complex{0.0, 0.0}) continue;
      const Complex between = bh * t1.t + bv * std::conj(t1.r);
      const Complex around = bh * t1.r - bv * std::conj(t1.t);
      outcomes[k].push_back({std::norm(between), model.monodromy(b, e)});
      outcomes[k].push_back({std::norm(around), Complex{1.0, 0.0}});
    }
  }
  return path_sum(outcomes, 0, 1.0, Complex{1.0, 0.0});
}

// ---------------------------------------------------------------------------
// Density-matrix property checks
// ---------------------------------------------------------------------------

bool DensityMatrixReport::pass(double tol) const {
  if (hermiticity_deviation > tol) return false;
  if (trace_deviation > tol) return false;
  if (min_eigenvalue < -tol) return false;
  for (const BlockWeight& w : block_weights)
    if (w.deviation && *w.deviation > tol) return false;
  return true;
}

std::string DensityMatrixReport::to_text() const {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3);
  os << "hermiticity_deviation: " << hermiticity_deviation << "\n";
  os << "trace_deviation: " << trace_deviation << "\n";
  os << "min_eigenvalue: " << std::setprecision(12) << min_eigenvalue << "\n";
  for (const BlockWeight& w : block_weights) {
    os << "block_weight a=" << w.a << ": " << std::setprecision(12) << w.weight;
    if (w.deviation)
      os << " (deviation " << std::setprecision(3) << *w.deviation << ")";
    os << "\n";
  }
  return os.str();
}

DensityMatrixReport check_density_matrix(const PairBasisMatrix& rho,
                                         const TargetState* reference) {
  DensityMatrixReport report;
  const Eigen::MatrixXcd& p = rho.matrix();
  report.hermiticity_deviation =
      (p - p.adjoint().eval()).cwiseAbs().maxCoeff();
  report.trace_deviation = std::abs(p.trace() - Complex{1.0, 0.0});

  const Eigen::MatrixXcd h = 0.5 * (p + p.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  report.min_eigenvalue = eig.eigenvalues().minCoeff();

  const AnyonModel& m = *rho.model();
  for (int a = 0; a < m.charge_count(); ++a) {
    BlockWeight w;
    w.a = a;
    for (size_t i = 0; i < rho.basis().size(); ++i)
      if (rho.basis()[i].a == a)
        w.weight += p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i))
                        .real();
    if (reference) {
      const double expected = std::norm(reference->amplitude(a));
      w.deviation = std::abs(w.weight - expected);
    }
    report.block_weights.push_back(w);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Closed form vs oracle
// ---------------------------------------------------------------------------

std::string ComparisonReport::to_text() const {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3);
  os << "max_deviation: " << max_deviation << " (threshold " << threshold
     << "): " << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

ComparisonReport closed_form_vs_oracle(const Scenario& scenario,
                                       double threshold) {
  if (scenario.n_probes < 0 || scenario.n_probes > 12)
    throw DomainError("closed_form_vs_oracle supports 0 <= N <= 12");
  if (scenario.config.placement != Placement::below)
    throw DomainError(
        "closed_form_vs_oracle is defined for placement = below; the above "
        "placement is covered by the placement-symmetry property");

  const PairBasisMatrix closed =
      evolve(scenario.target, std::span<const ProbeSpec>(scenario.probes),
             scenario.config, scenario.n_probes);

  const AnyonModel& m = *scenario.target.model();
  const DifferenceChannelMatrix channels = decompose_initial(scenario.target);
  std::map<int, Complex> factor_cache;
  auto factor_for = [&](int e) {
    auto it = factor_cache.find(e);
    if (it != factor_cache.end()) return it->second;
    const Complex f = path_enumeration_factor(
        m, e, std::span<const ProbeSpec>(scenario.probes), scenario.config.t1,
        scenario.n_probes);
    factor_cache.emplace(e, f);
    return f;
  };
  std::map<ChannelKey, Complex> scaled;
  for (const auto& [key, coeff] : channels.entries())
    scaled[key] = coeff * factor_for(key.e);
  const PairBasisMatrix oracle =
      recompose_channels(scenario.target.model(), scaled);

  ComparisonReport report;
  report.threshold = threshold;
  report.max_deviation =
      (closed.matrix() - oracle.matrix()).cwiseAbs().maxCoeff();
  report.pass = report.max_deviation < threshold;
  return report;
}

}  // namespace anyonint
