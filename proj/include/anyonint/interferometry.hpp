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

#ifndef ANYONINT_INTERFEROMETRY_HPP
#define ANYONINT_INTERFEROMETRY_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "anyonint/model.hpp"

namespace anyonint {

// All types in this header are immutable values over an immutable model;
// every operation is a pure function, safe for concurrent use.

enum class Direction { horizontal, vertical };
enum class Placement { below, above };

/// Superposition of target pair charges, sum_a A_a |a, abar; 1>.
class TargetState {
 public:
  /// `amplitudes` indexed by charge id; must be normalized within tol.
  TargetState(ModelPtr model, std::vector<Complex> amplitudes,
              double tol = kDefaultTol);

  /// Builds from {charge name -> amplitude}; unlisted charges get 0.
  /// With normalize=true the amplitudes are rescaled to unit norm first.
  static TargetState from_map(ModelPtr model,
                              const std::map<std::string, Complex>& amplitudes,
                              bool normalize = false, double tol = kDefaultTol);

  const ModelPtr& model() const { return model_; }
  Complex amplitude(int a) const { return amplitudes_.at(a); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

 private:
  ModelPtr model_;
  std::vector<Complex> amplitudes_;
};

/// One probe's amplitudes B_{b,s} over charge and entry direction.
class ProbeSpec {
 public:
  /// amplitudes[b][0] = horizontal component, amplitudes[b][1] = vertical.
  ProbeSpec(ModelPtr model, std::vector<std::array<Complex, 2>> amplitudes,
            double tol = kDefaultTol);

  /// Definite charge b entering horizontally.
  static ProbeSpec definite(ModelPtr model, int b);
  static ProbeSpec definite(ModelPtr model, std::string_view charge_name);

  const ModelPtr& model() const { return model_; }
  Complex amplitude(int b, Direction s) const {
    return amplitudes_.at(b)[s == Direction::horizontal ? 0 : 1];
  }
  const std::vector<std::array<Complex, 2>>& amplitudes() const {
    return amplitudes_;
  }

 private:
  ModelPtr model_;
  std::vector<std::array<Complex, 2>> amplitudes_;
};

/// Lossless two-port splitter, |t|^2 + |r|^2 = 1.
struct BeamSplitter {
  Complex t{1.0, 0.0};
  Complex r{0.0, 0.0};

  BeamSplitter() = default;
  BeamSplitter(Complex t_, Complex r_, double tol = kDefaultTol);
};

/// Full apparatus configuration. theta_1, theta_2 and t2 mirror the physical
/// setup but provably drop out of the reduced density matrix; they are
/// accepted and asserted unused (see the phase-independence tests).
struct InterferometerConfig {
  BeamSplitter t1;
  BeamSplitter t2{};
  double theta_1 = 0.0;
  double theta_2 = 0.0;
  Placement placement = Placement::below;
};

/// rho expanded in difference-charge channels: entries (a, a', e, alpha, beta)
/// with e a difference channel of (a, a').
struct ChannelKey {
  int a = 0;
  int a_prime = 0;
  int e = 0;
  int alpha = 0;
  int beta = 0;
  auto operator<=>(const ChannelKey&) const = default;
};

class DifferenceChannelMatrix {
 public:
  DifferenceChannelMatrix(ModelPtr model, std::map<ChannelKey, Complex> entries)
      : model_(std::move(model)), entries_(std::move(entries)) {}

  const ModelPtr& model() const { return model_; }
  const std::map<ChannelKey, Complex>& entries() const { return entries_; }
  Complex entry(const ChannelKey& k) const;

 private:
  ModelPtr model_;
  std::map<ChannelKey, Complex> entries_;
};

/// rho_N in the pair fusion basis |a,abar;f,mu><a',abar';f,nu|, with the
/// ordinary-trace d_f weighting folded in: trace(matrix()) == 1.
struct PairIndex {
  int a = 0;
  int f = 0;
  int mu = 0;
  auto operator<=>(const PairIndex&) const = default;
};

class PairBasisMatrix {
 public:
  PairBasisMatrix(ModelPtr model, std::vector<PairIndex> basis,
                  Eigen::MatrixXcd mat);

  /// All (a, f, mu) with N_{a,abar}^f >= 1, ordered by (a, f, mu).
  static std::vector<PairIndex> basis_for(const AnyonModel& model);

  const ModelPtr& model() const { return model_; }
  const std::vector<PairIndex>& basis() const { return basis_; }
  const Eigen::MatrixXcd& matrix() const { return mat_; }

  int index_of(const PairIndex& idx) const;  // -1 if absent
  Complex entry(const PairIndex& row, const PairIndex& col) const;
  Complex trace() const;

 private:
  ModelPtr model_;
  std::vector<PairIndex> basis_;
  Eigen::MatrixXcd mat_;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Expands the initial pure state in difference channels:
/// entry(a,a',e,alpha,beta) = A_a conj(A_a') / sqrt(d_a d_a') *
///                            [(F^{a,abar}_{a',abar'})^{-1}]_{1,(e,alpha,beta)}.
/// Only pairs with A_a * conj(A_a') != 0 appear.
DifferenceChannelMatrix decompose_initial(const TargetState& target);

/// Reassembles a difference-channel expansion (factors already applied) into
/// the pair fusion basis with the ordinary-trace d_f weighting:
///   rho(a,f,mu; a',f,nu) = sqrt(d_a d_a') sqrt(d_f) *
///       sum_{e,alpha,beta} entry * [F^{a,abar}_{a',abar'}]_{(e,..),(f,mu,nu)}.
PairBasisMatrix recompose_channels(const ModelPtr& model,
                                   const std::map<ChannelKey, Complex>& entries);

/// Suppression factor of channel e after n_probes probes:
///   prod_k [ 1 - sum_b |B^k_{b,H} t1 + B^k_{b,V} conj(r1)|^2 (1 - M_be) ].
/// With placement == above, t1 and r1 are interchanged and M_be conjugated.
/// `probes` either supplies one spec per probe (size >= n_probes) or a
/// single spec reused for all of them.
Complex channel_factor(const AnyonModel& model, int e,
                       std::span<const ProbeSpec> probes,
                       const InterferometerConfig& config, int n_probes);
Complex channel_factor(const AnyonModel& model, int e, const ProbeSpec& probe,
                       const InterferometerConfig& config, int n_probes);

/// Single-pass factor of channel e for one probe (the N=1 bracket).
Complex channel_bracket(const AnyonModel& model, int e, const ProbeSpec& probe,
                        const InterferometerConfig& config);

/// Closed-form rho_N: decompose, scale each channel by its factor, reapply
/// the pair-basis move. Unit trace; independent of theta_1/theta_2/t2.
PairBasisMatrix evolve(const TargetState& target,
                       std::span<const ProbeSpec> probes,
                       const InterferometerConfig& config, int n_probes);
PairBasisMatrix evolve(const TargetState& target, const ProbeSpec& probe,
                       const InterferometerConfig& config, int n_probes);

enum class ChannelStatus { preserved, decayed, non_convergent };
const char* to_string(ChannelStatus s);

struct ChannelConvergence {
  ChannelKey key;
  Complex factor;  // single-pass bracket
  ChannelStatus status = ChannelStatus::preserved;
};

struct ConvergenceReport {
  std::vector<ChannelConvergence> channels;
  bool fully_convergent() const;
  std::string to_text() const;
};

struct AsymptoticResult {
  PairBasisMatrix rho;
  ConvergenceReport report;
};

/// N -> infinity limit for identical probes: keeps channels with factor == 1,
/// zeroes decaying ones, and flags |factor| == 1, factor != 1 channels as
/// non-convergent (oscillatory; they contribute zero to the returned matrix).
AsymptoticResult asymptotic(const TargetState& target, const ProbeSpec& probe,
                            const InterferometerConfig& config,
                            double tol = kDefaultTol);

/// Stray-anyon limit: evolve with t1 = 1, r1 = 0, placement below; every
/// probe passes between the target pair with certainty.
PairBasisMatrix stray_anyon_pass(const TargetState& target,
                                 const ProbeSpec& probe, int passes);

}  // namespace anyonint

#endif  // ANYONINT_INTERFEROMETRY_HPP
