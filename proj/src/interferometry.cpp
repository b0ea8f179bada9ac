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

#include "anyonint/interferometry.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace anyonint {

namespace {

void check_model(const ModelPtr& model) {
  if (!model) throw DomainError("null model");
}

void check_same_model(const AnyonModel& a, const AnyonModel& b) {
  if (a.charge_count() != b.charge_count())
    throw DomainError("objects were built over different models");
}

}  // namespace

// ---------------------------------------------------------------------------
// States and apparatus
// ---------------------------------------------------------------------------

TargetState::TargetState(ModelPtr model, std::vector<Complex> amplitudes,
                         double tol)
    : model_(std::move(model)), amplitudes_(std::move(amplitudes)) {
  check_model(model_);
  if (amplitudes_.size() != static_cast<size_t>(model_->charge_count()))
    throw DomainError("target amplitude count does not match the model");
  double norm = 0.0;
  for (const Complex& a : amplitudes_) norm += std::norm(a);
  if (std::abs(norm - 1.0) > tol)
    throw DomainError("target state is not normalized: sum |A_a|^2 = " +
                      std::to_string(norm));
}

TargetState TargetState::from_map(ModelPtr model,
                                  const std::map<std::string, Complex>& amps,
                                  bool normalize, double tol) {
  check_model(model);
  std::vector<Complex> v(model->charge_count(), Complex{0.0, 0.0});
  for (const auto& [name, value] : amps) v[model->charge_id(name)] = value;
  if (normalize) {
    double norm = 0.0;
    for (const Complex& a : v) norm += std::norm(a);
    if (norm <= 0.0) throw DomainError("cannot normalize a zero target state");
    const double scale = 1.0 / std::sqrt(norm);
    for (Complex& a : v) a *= scale;
  }
  return TargetState(std::move(model), std::move(v), tol);
}

ProbeSpec::ProbeSpec(ModelPtr model,
                     std::vector<std::array<Complex, 2>> amplitudes, double tol)
    : model_(std::move(model)), amplitudes_(std::move(amplitudes)) {
  check_model(model_);
  if (amplitudes_.size() != static_cast<size_t>(model_->charge_count()))
    throw DomainError("probe amplitude count does not match the model");
  double norm = 0.0;
  for (const auto& a : amplitudes_) norm += std::norm(a[0]) + std::norm(a[1]);
  if (std::abs(norm - 1.0) > tol)
    throw DomainError("probe state is not normalized: sum |B_{b,s}|^2 = " +
                      std::to_string(norm));
}

ProbeSpec ProbeSpec::definite(ModelPtr model, int b) {
  check_model(model);
  if (b < 0 || b >= model->charge_count())
    throw DomainError("charge index out of range");
  std::vector<std::array<Complex, 2>> amps(
      model->charge_count(), {Complex{0.0, 0.0}, Complex{0.0, 0.0}});
  amps[b][0] = 1.0;
  return ProbeSpec(std::move(model), std::move(amps));
}

ProbeSpec ProbeSpec::definite(ModelPtr model, std::string_view charge_name) {
  check_model(model);
  const int b = model->charge_id(charge_name);
  return definite(std::move(model), b);
}

BeamSplitter::BeamSplitter(Complex t_, Complex r_, double tol) : t(t_), r(r_) {
  const double norm = std::norm(t) + std::norm(r);
  if (std::abs(norm - 1.0) > tol)
    throw DomainError("beam splitter is not lossless: |t|^2 + |r|^2 = " +
                      std::to_string(norm));
}

// ---------------------------------------------------------------------------
// DifferenceChannelMatrix / PairBasisMatrix
// ---------------------------------------------------------------------------

Complex DifferenceChannelMatrix::entry(const ChannelKey& k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? Complex{0.0, 0.0} : it->second;
}

PairBasisMatrix::PairBasisMatrix(ModelPtr model, std::vector<PairIndex> basis,
                                 Eigen::MatrixXcd mat)
    : model_(std::move(model)), basis_(std::move(basis)), mat_(std::move(mat)) {
  if (mat_.rows() != static_cast<Eigen::Index>(basis_.size()) ||
      mat_.cols() != static_cast<Eigen::Index>(basis_.size()))
    throw DomainError("pair-basis matrix shape does not match its basis");
}

std::vector<PairIndex> PairBasisMatrix::basis_for(const AnyonModel& model) {
  std::vector<PairIndex> basis;
  for (int a = 0; a < model.charge_count(); ++a) {
    const int abar = model.dual(a);
    for (int f = 0; f < model.charge_count(); ++f) {
      const int mult = model.fusion(a, abar, f);
      for (int mu = 0; mu < mult; ++mu) basis.push_back({a, f, mu});
    }
  }
  return basis;
}

int PairBasisMatrix::index_of(const PairIndex& idx) const {
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == idx) return static_cast<int>(i);
  return -1;
}

Complex PairBasisMatrix::entry(const PairIndex& row, const PairIndex& col) const {
  const int r = index_of(row);
  const int c = index_of(col);
  if (r < 0 || c < 0) return {0.0, 0.0};
  return mat_(r, c);
}

Complex PairBasisMatrix::trace() const { return mat_.trace(); }

// ---------------------------------------------------------------------------
// Decomposition
// ---------------------------------------------------------------------------

DifferenceChannelMatrix decompose_initial(const TargetState& target) {
  const AnyonModel& m = *target.model();
  std::map<ChannelKey, Complex> entries;
  for (int a = 0; a < m.charge_count(); ++a) {
    for (int ap = 0; ap < m.charge_count(); ++ap) {
      const Complex prod =
          target.amplitude(a) * std::conj(target.amplitude(ap));
      if (prod == Complex{0.0, 0.0}) continue;
      const PairBlock pb = m.pair_block(a, ap);
      const int vc = pb.vacuum_col();
      if (vc < 0)
        throw ModelError("charge pair (" + m.charge_name(a) + ", " +
                         m.charge_name(ap) + ") has no vacuum fusion channel");
      const Complex scale = prod / std::sqrt(m.qdim(a) * m.qdim(ap));
      for (size_t i = 0; i < pb.rows.size(); ++i) {
        // [(F^{a,abar}_{a',abar'})^{-1}]_{1,(e,alpha,beta)} by unitarity.
        const Complex coeff =
            scale * std::conj(pb.mat(static_cast<Eigen::Index>(i), vc));
        if (coeff == Complex{0.0, 0.0}) continue;
        const BasisLabel& row = pb.rows[i];
        entries[{a, ap, row.charge, row.v1, row.v2}] = coeff;
      }
    }
  }
  return DifferenceChannelMatrix(target.model(), std::move(entries));
}

// ---------------------------------------------------------------------------
// Channel factors
// ---------------------------------------------------------------------------

Complex channel_bracket(const AnyonModel& model, int e, const ProbeSpec& probe,
                        const InterferometerConfig& config) {
  if (e < 0 || e >= model.charge_count())
    throw DomainError("charge index out of range");
  check_same_model(model, *probe.model());
  const bool above = config.placement == Placement::above;
  const Complex t1 = above ? config.t1.r : config.t1.t;
  const Complex r1 = above ? config.t1.t : config.t1.r;
  Complex bracket{1.0, 0.0};
  for (int b = 0; b < model.charge_count(); ++b) {
    const Complex between = probe.amplitude(b, Direction::horizontal) * t1 +
                            probe.amplitude(b, Direction::vertical) * std::conj(r1);
    const double weight = std::norm(between);
    if (weight == 0.0) continue;
    Complex mono = model.monodromy(b, e);
    if (above) mono = std::conj(mono);
    bracket -= weight * (Complex{1.0, 0.0} - mono);
  }
  return bracket;
}

Complex channel_factor(const AnyonModel& model, int e,
                       std::span<const ProbeSpec> probes,
                       const InterferometerConfig& config, int n_probes) {
  if (n_probes < 0) throw DomainError("number of probes must be >= 0");
  if (n_probes == 0) return {1.0, 0.0};
  if (probes.empty()) throw DomainError("no probe specification given");
  if (probes.size() != 1 && probes.size() < static_cast<size_t>(n_probes))
    throw DomainError("fewer probe specifications than probes requested");

  Complex factor{1.0, 0.0};
  if (probes.size() == 1) {
    const Complex bracket = channel_bracket(model, e, probes[0], config);
    for (int k = 0; k < n_probes; ++k) factor *= bracket;
  } else {
    for (int k = 0; k < n_probes; ++k)
      factor *= channel_bracket(model, e, probes[k], config);
  }
  return factor;
}

Complex channel_factor(const AnyonModel& model, int e, const ProbeSpec& probe,
                       const InterferometerConfig& config, int n_probes) {
  return channel_factor(model, e, std::span<const ProbeSpec>(&probe, 1), config,
                        n_probes);
}

// ---------------------------------------------------------------------------
// Evolution
// ---------------------------------------------------------------------------

PairBasisMatrix recompose_channels(const ModelPtr& model,
                                   const std::map<ChannelKey, Complex>& scaled) {
  check_model(model);
  const AnyonModel& m = *model;
  std::vector<PairIndex> basis = PairBasisMatrix::basis_for(m);
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(basis.size()),
      static_cast<Eigen::Index>(basis.size()));
  auto basis_index = [&basis](const PairIndex& idx) {
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == idx) return static_cast<int>(i);
    return -1;
  };

  auto it = scaled.begin();
  while (it != scaled.end()) {
    const int a = it->first.a;
    const int ap = it->first.a_prime;
    const PairBlock pb = m.pair_block(a, ap);
    std::vector<Complex> row_coeff(pb.rows.size(), Complex{0.0, 0.0});
    for (; it != scaled.end() && it->first.a == a && it->first.a_prime == ap;
         ++it) {
      const int ri =
          pb.row_index({it->first.e, it->first.alpha, it->first.beta});
      if (ri >= 0) row_coeff[ri] = it->second;
    }
    const double overall = std::sqrt(m.qdim(a) * m.qdim(ap));
    for (size_t ci = 0; ci < pb.cols.size(); ++ci) {
      const BasisLabel& col = pb.cols[ci];
      Complex val{0.0, 0.0};
      for (size_t ri = 0; ri < pb.rows.size(); ++ri)
        val += row_coeff[ri] * pb.mat(static_cast<Eigen::Index>(ri),
                                      static_cast<Eigen::Index>(ci));
      if (val == Complex{0.0, 0.0}) continue;
      val *= overall * std::sqrt(m.qdim(col.charge));
      const int r = basis_index({a, col.charge, col.v1});
      const int c = basis_index({ap, col.charge, col.v2});
      if (r >= 0 && c >= 0) mat(r, c) += val;
    }
  }
  return PairBasisMatrix(model, std::move(basis), std::move(mat));
}

PairBasisMatrix evolve(const TargetState& target,
                       std::span<const ProbeSpec> probes,
                       const InterferometerConfig& config, int n_probes) {
  if (n_probes < 0) throw DomainError("number of probes must be >= 0");
  const AnyonModel& m = *target.model();
  const DifferenceChannelMatrix channels = decompose_initial(target);

  std::map<int, Complex> factor_cache;
  auto factor_for = [&](int e) {
    auto it = factor_cache.find(e);
    if (it != factor_cache.end()) return it->second;
    const Complex f = n_probes == 0
                          ? Complex{1.0, 0.0}
                          : channel_factor(m, e, probes, config, n_probes);
    factor_cache.emplace(e, f);
    return f;
  };

  std::map<ChannelKey, Complex> scaled;
  for (const auto& [key, coeff] : channels.entries())
    scaled[key] = coeff * factor_for(key.e);
  return recompose_channels(target.model(), scaled);
}

PairBasisMatrix evolve(const TargetState& target, const ProbeSpec& probe,
                       const InterferometerConfig& config, int n_probes) {
  return evolve(target, std::span<const ProbeSpec>(&probe, 1), config,
                n_probes);
}

const char* to_string(ChannelStatus s) {
  switch (s) {
    case ChannelStatus::preserved: return "preserved";
    case ChannelStatus::decayed: return "decayed";
    case ChannelStatus::non_convergent: return "non_convergent";
  }
  return "?";
}

bool ConvergenceReport::fully_convergent() const {
  for (const ChannelConvergence& c : channels)
    if (c.status == ChannelStatus::non_convergent) return false;
  return true;
}

std::string ConvergenceReport::to_text() const {
  std::ostringstream os;
  for (const ChannelConvergence& c : channels) {
    os << "channel (a=" << c.key.a << ", a'=" << c.key.a_prime
       << ", e=" << c.key.e << ", alpha=" << c.key.alpha
       << ", beta=" << c.key.beta << "): factor=(" << std::setprecision(17)
       << c.factor.real() << ", " << c.factor.imag()
       << ") status=" << to_string(c.status) << "\n";
  }
  return os.str();
}

AsymptoticResult asymptotic(const TargetState& target, const ProbeSpec& probe,
                            const InterferometerConfig& config, double tol) {
  const AnyonModel& m = *target.model();
  const DifferenceChannelMatrix channels = decompose_initial(target);

  ConvergenceReport report;
  std::map<int, std::pair<Complex, ChannelStatus>> bracket_cache;
  auto classify = [&](int e) {
    auto it = bracket_cache.find(e);
    if (it != bracket_cache.end()) return it->second;
    const Complex bracket = channel_bracket(m, e, probe, config);
    ChannelStatus status;
    if (std::abs(bracket - Complex{1.0, 0.0}) <= tol)
      status = ChannelStatus::preserved;
    else if (std::abs(std::abs(bracket) - 1.0) <= tol)
      status = ChannelStatus::non_convergent;  // oscillatory, no limit
    else
      status = ChannelStatus::decayed;
    auto res = std::make_pair(bracket, status);
    bracket_cache.emplace(e, res);
    return res;
  };

  std::map<ChannelKey, Complex> scaled;
  for (const auto& [key, coeff] : channels.entries()) {
    const auto [bracket, status] = classify(key.e);
    report.channels.push_back({key, bracket, status});
    scaled[key] =
        status == ChannelStatus::preserved ? coeff : Complex{0.0, 0.0};
  }
  return {recompose_channels(target.model(), scaled), std::move(report)};
}

PairBasisMatrix stray_anyon_pass(const TargetState& target,
                                 const ProbeSpec& probe, int passes) {
  if (passes < 0) throw DomainError("number of passes must be >= 0");
  InterferometerConfig config;
  config.t1 = BeamSplitter{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
  config.placement = Placement::below;
  return evolve(target, probe, config, passes);
}

}  // namespace anyonint
