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

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "anyonint/interferometry.hpp"
#include "anyonint/model.hpp"
#include "anyonint/oracle.hpp"
#include "test_util.hpp"

using namespace anyonint;
namespace at = anyonint::testing;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
const double kInvRt2 = 1.0 / std::numbers::sqrt2;

InterferometerConfig balanced_config() {
  InterferometerConfig cfg;
  cfg.t1 = BeamSplitter{Complex{kInvRt2, 0.0}, Complex{kInvRt2, 0.0}};
  return cfg;
}

TargetState equal_ising_target() {
  ModelPtr m = builtin_model("ising");
  const double a = 1.0 / std::sqrt(3.0);
  return TargetState::from_map(
      m, {{"1", a}, {"psi", a}, {"sigma", a}});
}

}  // namespace

TEST_CASE("state and apparatus validation") {
  ModelPtr m = builtin_model("ising");
  SUBCASE("non-normalized target is rejected") {
    CHECK_THROWS_AS(TargetState::from_map(m, {{"1", 0.9}}), DomainError);
    CHECK_NOTHROW(TargetState::from_map(m, {{"1", 0.9}}, /*normalize=*/true));
  }
  SUBCASE("non-normalized probe is rejected") {
    std::vector<std::array<Complex, 2>> amps(3, {Complex{0, 0}, Complex{0, 0}});
    amps[0][0] = 0.5;
    CHECK_THROWS_AS(ProbeSpec(m, amps), DomainError);
  }
  SUBCASE("non-lossless beam splitter is rejected") {
    CHECK_THROWS_AS(BeamSplitter(Complex{0.9, 0.0}, Complex{0.9, 0.0}),
                    DomainError);
    CHECK_NOTHROW(BeamSplitter(Complex{0.6, 0.0}, Complex{0.0, 0.8}));
  }
}

TEST_CASE("decompose_initial on the equal ising target") {
  const TargetState target = equal_ising_target();
  ModelPtr m = target.model();
  const int sigma = m->charge_id("sigma");
  const int psi = m->charge_id("psi");
  const int vac = m->vacuum();
  const DifferenceChannelMatrix dc = decompose_initial(target);

  // (sigma, sigma) block decomposes over e in {1, psi}, both weight 1/6
  CHECK(std::abs(dc.entry({sigma, sigma, vac, 0, 0}) - Complex{1.0 / 6, 0}) <
        1e-14);
  CHECK(std::abs(dc.entry({sigma, sigma, psi, 0, 0}) - Complex{1.0 / 6, 0}) <
        1e-14);
  // (1, psi) coherence sits in the e = psi channel; d_1 = d_psi = 1 leaves
  // the bare product
  CHECK(std::abs(dc.entry({vac, psi, psi, 0, 0}) - Complex{1.0 / 3, 0}) <
        1e-14);
  // difference charge of (1, sigma) is sigma, weighted by 1/sqrt(d_sigma)
  CHECK(std::abs(dc.entry({vac, sigma, sigma, 0, 0}) -
                 Complex{1.0 / 3 / std::pow(2.0, 0.25), 0}) < 1e-14);
}

TEST_CASE("decompose_initial on a single-charge target") {
  ModelPtr m = builtin_model("ising");
  const int sigma = m->charge_id("sigma");
  const TargetState target = TargetState::from_map(m, {{"sigma", 1.0}});
  const DifferenceChannelMatrix dc = decompose_initial(target);

  for (const auto& [key, value] : dc.entries()) {
    CHECK(key.a == sigma);
    CHECK(key.a_prime == sigma);
  }
  // the e = 1 entry carries the full weight of the trace
  std::map<ChannelKey, Complex> only_vac, only_psi;
  for (const auto& [key, value] : dc.entries())
    (key.e == m->vacuum() ? only_vac : only_psi)[key] = value;
  CHECK(std::abs(recompose_channels(m, only_vac).trace() - Complex{1.0, 0.0}) <
        1e-14);
  CHECK(std::abs(recompose_channels(m, only_psi).trace()) < 1e-14);
}

TEST_CASE("decompose_initial on the fibonacci target") {
  ModelPtr m = builtin_model("fibonacci");
  const int eps = m->charge_id("eps");
  const int vac = m->vacuum();
  const TargetState target =
      TargetState::from_map(m, {{"1", 0.6}, {"eps", 0.8}});
  const DifferenceChannelMatrix dc = decompose_initial(target);

  // blocks: (1,1) -> e=1; (1,eps) and (eps,1) -> e=eps; (eps,eps) -> {1, eps}
  CHECK(dc.entries().size() == 5);
  const double off = 0.48 / std::sqrt(kPhi);
  CHECK(std::abs(dc.entry({vac, eps, eps, 0, 0}) - Complex{off, 0.0}) < 1e-14);
  CHECK(std::abs(dc.entry({eps, vac, eps, 0, 0}) - Complex{off, 0.0}) < 1e-14);
  CHECK(std::abs(dc.entry({eps, eps, vac, 0, 0}) -
                 Complex{0.64 / (kPhi * kPhi), 0.0}) < 1e-14);
  CHECK(std::abs(dc.entry({eps, eps, eps, 0, 0}) -
                 Complex{0.64 * std::pow(kPhi, -1.5), 0.0}) < 1e-14);
}

TEST_CASE("difference-channel conjugate symmetry") {
  at::Rng rng(20260809);
  for (const std::string& name : builtin_model_names()) {
    ModelPtr m = builtin_model(name);
    const TargetState target = at::random_target(m, rng);
    const DifferenceChannelMatrix dc = decompose_initial(target);
    for (const auto& [key, value] : dc.entries()) {
      const ChannelKey swapped{key.a_prime, key.a, m->dual(key.e), key.beta,
                               key.alpha};
      CHECK(std::abs(dc.entry(swapped) - std::conj(value)) < 1e-12);
    }
  }
}

TEST_CASE("channel_factor basics") {
  ModelPtr m = builtin_model("ising");
  const InterferometerConfig cfg = balanced_config();

  SUBCASE("vacuum channel factor is exactly 1") {
    const ProbeSpec probe = ProbeSpec::definite(m, "sigma");
    for (int n : {0, 1, 7, 100})
      CHECK(std::abs(channel_factor(*m, m->vacuum(), probe, cfg, n) -
                     Complex{1.0, 0.0}) < 1e-15);
  }
  SUBCASE("psi probes kill the sigma channel in one step") {
    const ProbeSpec probe = ProbeSpec::definite(m, "psi");
    CHECK(std::abs(channel_factor(*m, m->charge_id("sigma"), probe, cfg, 1)) <
          1e-15);
  }
  SUBCASE("single-spec fast path equals the explicit sequence") {
    const ProbeSpec probe = ProbeSpec::definite(m, "sigma");
    const std::vector<ProbeSpec> many(6, probe);
    const int e = m->charge_id("sigma");
    CHECK(std::abs(channel_factor(*m, e, std::span(many), cfg, 6) -
                   channel_factor(*m, e, probe, cfg, 6)) < 1e-15);
  }
}

TEST_CASE("evolve at N = 0 reproduces the pure initial state") {
  at::Rng rng(7);
  for (const std::string& name : builtin_model_names()) {
    ModelPtr m = builtin_model(name);
    const TargetState target = at::random_target(m, rng);
    const PairBasisMatrix rho =
        evolve(target, ProbeSpec::definite(m, m->vacuum()), balanced_config(), 0);
    for (int a = 0; a < m->charge_count(); ++a)
      for (int ap = 0; ap < m->charge_count(); ++ap) {
        const Complex expected =
            target.amplitude(a) * std::conj(target.amplitude(ap));
        CHECK(std::abs(rho.entry({a, m->vacuum(), 0}, {ap, m->vacuum(), 0}) -
                       expected) < 1e-13);
      }
    // everything outside the f = 1 channels vanishes
    for (size_t i = 0; i < rho.basis().size(); ++i)
      for (size_t j = 0; j < rho.basis().size(); ++j)
        if (rho.basis()[i].f != m->vacuum() || rho.basis()[j].f != m->vacuum())
          CHECK(std::abs(rho.matrix()(static_cast<Eigen::Index>(i),
                                      static_cast<Eigen::Index>(j))) < 1e-13);
  }
}

TEST_CASE("a fully reflecting splitter leaves the state untouched") {
  const TargetState target = equal_ising_target();
  InterferometerConfig cfg;
  cfg.t1 = BeamSplitter{Complex{0.0, 0.0}, Complex{1.0, 0.0}};
  const ProbeSpec probe = ProbeSpec::definite(target.model(), "sigma");
  const PairBasisMatrix rho0 = evolve(target, probe, cfg, 0);
  const PairBasisMatrix rho9 = evolve(target, probe, cfg, 9);
  CHECK((rho0.matrix() - rho9.matrix()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("ising sigma probes decohere everything at N = 200") {
  const TargetState target = equal_ising_target();
  ModelPtr m = target.model();
  const int sigma = m->charge_id("sigma");
  const int psi = m->charge_id("psi");
  const int vac = m->vacuum();
  const PairBasisMatrix rho =
      evolve(target, ProbeSpec::definite(m, sigma), balanced_config(), 200);

  CHECK(std::abs(rho.entry({vac, vac, 0}, {vac, vac, 0}) - Complex{1.0 / 3, 0}) <
        1e-12);
  CHECK(std::abs(rho.entry({psi, vac, 0}, {psi, vac, 0}) - Complex{1.0 / 3, 0}) <
        1e-12);
  CHECK(std::abs(rho.entry({sigma, vac, 0}, {sigma, vac, 0}) -
                 Complex{1.0 / 6, 0}) < 1e-12);
  CHECK(std::abs(rho.entry({sigma, psi, 0}, {sigma, psi, 0}) -
                 Complex{1.0 / 6, 0}) < 1e-12);
  for (size_t i = 0; i < rho.basis().size(); ++i)
    for (size_t j = 0; j < rho.basis().size(); ++j)
      if (i != j)
        CHECK(std::abs(rho.matrix()(static_cast<Eigen::Index>(i),
                                    static_cast<Eigen::Index>(j))) < 1e-12);
}

TEST_CASE("theta and second-splitter parameters leave evolve bit-identical") {
  const TargetState target = equal_ising_target();
  const ProbeSpec probe = ProbeSpec::definite(target.model(), "sigma");

  InterferometerConfig base = balanced_config();
  InterferometerConfig varied = base;
  varied.theta_1 = 1.234;
  varied.theta_2 = -0.777;
  varied.t2 = BeamSplitter{Complex{0.28, 0.21}, std::polar(std::sqrt(0.8775), 2.0)};

  const PairBasisMatrix a = evolve(target, probe, base, 17);
  const PairBasisMatrix b = evolve(target, probe, varied, 17);
  CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("placement symmetry channel-by-channel") {
  at::Rng rng(42);
  for (const std::string& name : {std::string("ising"), std::string("fibonacci"),
                                  std::string("semion")}) {
    ModelPtr m = builtin_model(name);
    const ProbeSpec probe = at::random_probe(m, rng);
    const BeamSplitter split = at::random_lossless_splitter(rng);

    InterferometerConfig above;
    above.t1 = split;
    above.placement = Placement::above;
    InterferometerConfig below_swapped;
    below_swapped.t1 = BeamSplitter{split.r, split.t};
    below_swapped.placement = Placement::below;

    for (int e = 0; e < m->charge_count(); ++e) {
      const Complex fa = channel_factor(*m, e, probe, above, 5);
      const Complex fb = channel_factor(*m, e, probe, below_swapped, 5);
      CHECK(std::abs(fa - std::conj(fb)) < 1e-13);
    }
  }
}

TEST_CASE("monotone decay and the reduction identity") {
  ModelPtr m = builtin_model("fibonacci");
  const int eps = m->charge_id("eps");
  InterferometerConfig cfg;
  cfg.t1 = BeamSplitter{Complex{0.8, 0.0}, Complex{0.0, 0.6}};
  const ProbeSpec probe = ProbeSpec::definite(m, eps);

  const Complex bracket = channel_bracket(*m, eps, probe, cfg);
  const Complex closed =
      Complex{0.36, 0.0} + Complex{0.64, 0.0} * m->monodromy(eps, eps);
  CHECK(std::abs(bracket - closed) < 1e-14);

  Complex power{1.0, 0.0};
  double prev = 1.0;
  for (int n = 1; n <= 50; ++n) {
    power *= closed;
    const Complex factor = channel_factor(*m, eps, probe, cfg, n);
    CHECK(std::abs(factor - power) < 1e-12);  // reduction to the closed power
    const double mag = std::abs(factor);
    CHECK(mag < prev);                        // strict decay, M != 1, t r != 0
    CHECK(std::abs(mag - std::abs(bracket) * prev) < 1e-12);
    prev = mag;
  }
}

TEST_CASE("evolve output is a valid density matrix across scenarios") {
  at::Rng rng(20260809);
  for (const std::string& name : builtin_model_names()) {
    ModelPtr m = builtin_model(name);
    for (int rep = 0; rep < 5; ++rep) {
      const TargetState target = at::random_target(m, rng);
      const ProbeSpec probe = at::random_probe(m, rng);
      InterferometerConfig cfg;
      cfg.t1 = at::random_lossless_splitter(rng);
      for (int n : {0, 1, 3, 25}) {
        const PairBasisMatrix rho = evolve(target, probe, cfg, n);
        const DensityMatrixReport report = check_density_matrix(rho, &target);
        CAPTURE(name);
        CAPTURE(n);
        CHECK(report.hermiticity_deviation < 1e-12);
        CHECK(report.trace_deviation < 1e-12);
        CHECK(report.min_eigenvalue > -1e-9);
        for (const BlockWeight& w : report.block_weights)
          CHECK(*w.deviation < 1e-12);  // diagonal blocks never lose weight
      }
    }
  }
}

TEST_CASE("trace is carried entirely by the vacuum difference channel") {
  at::Rng rng(5);
  for (const std::string& name : builtin_model_names()) {
    ModelPtr m = builtin_model(name);
    const TargetState target = at::random_target(m, rng);
    const DifferenceChannelMatrix dc = decompose_initial(target);
    for (const auto& [key, value] : dc.entries()) {
      if (key.e == m->vacuum()) continue;
      std::map<ChannelKey, Complex> solo{{key, value}};
      CHECK(std::abs(recompose_channels(m, solo).trace()) < 1e-13);
    }
  }
}

TEST_CASE("asymptotic limits") {
  SUBCASE("ising psi probes decohere only against sigma") {
    const TargetState target = equal_ising_target();
    ModelPtr m = target.model();
    const int sigma = m->charge_id("sigma");
    const int psi = m->charge_id("psi");
    const int vac = m->vacuum();
    const auto [rho, report] = asymptotic(
        target, ProbeSpec::definite(m, psi), balanced_config());
    CHECK(report.fully_convergent());
    // 1-psi coherence preserved exactly
    CHECK(std::abs(rho.entry({psi, vac, 0}, {vac, vac, 0}) -
                   Complex{1.0 / 3, 0.0}) < 1e-12);
    // sigma coherences killed, sigma diagonal intact on f = 1
    CHECK(std::abs(rho.entry({sigma, vac, 0}, {vac, vac, 0})) < 1e-15);
    CHECK(std::abs(rho.entry({sigma, vac, 0}, {psi, vac, 0})) < 1e-15);
    CHECK(std::abs(rho.entry({sigma, vac, 0}, {sigma, vac, 0}) -
                   Complex{1.0 / 3, 0.0}) < 1e-12);
    CHECK(std::abs(rho.entry({sigma, psi, 0}, {sigma, psi, 0})) < 1e-15);
  }
  SUBCASE("fibonacci eps probes leave the golden-ratio diagonal") {
    ModelPtr m = builtin_model("fibonacci");
    const int eps = m->charge_id("eps");
    const int vac = m->vacuum();
    const TargetState target =
        TargetState::from_map(m, {{"1", 0.6}, {"eps", 0.8}});
    InterferometerConfig cfg;
    cfg.t1 = BeamSplitter{Complex{0.8, 0.0}, Complex{0.6, 0.0}};
    const auto [rho, report] = asymptotic(target, ProbeSpec::definite(m, eps), cfg);
    CHECK(report.fully_convergent());
    CHECK(std::abs(rho.entry({vac, vac, 0}, {vac, vac, 0}) -
                   Complex{0.36, 0.0}) < 1e-12);
    CHECK(std::abs(rho.entry({eps, vac, 0}, {eps, vac, 0}) -
                   Complex{0.64 / (kPhi * kPhi), 0.0}) < 1e-12);
    CHECK(std::abs(rho.entry({eps, eps, 0}, {eps, eps, 0}) -
                   Complex{0.64 / kPhi, 0.0}) < 1e-12);
    CHECK(std::abs(rho.entry({eps, vac, 0}, {vac, vac, 0})) < 1e-15);
  }
  SUBCASE("oscillatory channels are flagged non-convergent") {
    ModelPtr m = builtin_model("ising");
    const int sigma = m->charge_id("sigma");
    const TargetState target = TargetState::from_map(
        m, {{"1", kInvRt2}, {"sigma", kInvRt2}});
    InterferometerConfig cfg;
    cfg.t1 = BeamSplitter{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    const ProbeSpec probe = ProbeSpec::definite(m, "psi");
    const auto [rho, report] = asymptotic(target, probe, cfg);
    CHECK_FALSE(report.fully_convergent());
    bool found = false;
    for (const ChannelConvergence& c : report.channels) {
      if (c.key.e != sigma) continue;
      found = true;
      CHECK(c.status == ChannelStatus::non_convergent);
      CHECK(std::abs(c.factor + Complex{1.0, 0.0}) < 1e-14);  // M_psi,sigma
    }
    CHECK(found);
    // the oscillation is real: successive finite-N factors flip sign
    const Complex f4 = channel_factor(*m, sigma, probe, cfg, 4);
    const Complex f5 = channel_factor(*m, sigma, probe, cfg, 5);
    CHECK(std::abs(f4 - Complex{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(f5 + Complex{1.0, 0.0}) < 1e-14);
    // flagged channels contribute zero to the limit matrix
    CHECK(std::abs(rho.entry({sigma, m->vacuum(), 0}, {m->vacuum(), m->vacuum(), 0})) <
          1e-15);
  }
}

TEST_CASE("stray anyon passes") {
  SUBCASE("zero passes is the initial state") {
    const TargetState target = equal_ising_target();
    const ProbeSpec probe = ProbeSpec::definite(target.model(), "sigma");
    const PairBasisMatrix rho = stray_anyon_pass(target, probe, 0);
    CHECK(std::abs(rho.trace() - Complex{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(rho.entry({target.model()->vacuum(), 0, 0},
                             {target.model()->charge_id("psi"), 0, 0}) -
                   Complex{1.0 / 3, 0.0}) < 1e-13);
  }
  SUBCASE("one sigma pass fully decoheres a 1/sigma superposition") {
    ModelPtr m = builtin_model("ising");
    const int sigma = m->charge_id("sigma");
    const TargetState target = TargetState::from_map(
        m, {{"1", 0.6}, {"sigma", 0.8}});
    const PairBasisMatrix rho =
        stray_anyon_pass(target, ProbeSpec::definite(m, sigma), 1);
    CHECK(std::abs(rho.entry({m->vacuum(), m->vacuum(), 0},
                             {sigma, m->vacuum(), 0})) < 1e-15);
  }
  SUBCASE("two abelian semion passes restore the coherence") {
    ModelPtr m = builtin_model("semion");
    const int s = m->charge_id("s");
    const int vac = m->vacuum();
    const TargetState target = TargetState::from_map(m, {{"1", 0.6}, {"s", 0.8}});
    const ProbeSpec probe = ProbeSpec::definite(m, s);
    const PairBasisMatrix rho1 = stray_anyon_pass(target, probe, 1);
    const PairBasisMatrix rho2 = stray_anyon_pass(target, probe, 2);
    const Complex coherence = Complex{0.6, 0.0} * Complex{0.8, 0.0};
    CHECK(std::abs(rho1.entry({vac, vac, 0}, {s, vac, 0}) + coherence) < 1e-14);
    CHECK(std::abs(rho2.entry({vac, vac, 0}, {s, vac, 0}) - coherence) < 1e-14);
  }
}

TEST_CASE("pair basis enumeration") {
  CHECK(PairBasisMatrix::basis_for(*builtin_model("ising")).size() == 4);
  CHECK(PairBasisMatrix::basis_for(*builtin_model("fibonacci")).size() == 3);
  CHECK(PairBasisMatrix::basis_for(*builtin_model("semion")).size() == 2);
  CHECK(PairBasisMatrix::basis_for(*builtin_model("trivial")).size() == 1);
}

TEST_CASE("evolve preconditions") {
  const TargetState target = equal_ising_target();
  const ProbeSpec probe = ProbeSpec::definite(target.model(), "sigma");
  CHECK_THROWS_AS(evolve(target, probe, balanced_config(), -1), DomainError);
  const std::vector<ProbeSpec> two(2, probe);
  CHECK_THROWS_AS(
      evolve(target, std::span(two), balanced_config(), 3), DomainError);
  CHECK_NOTHROW(evolve(target, std::span(two), balanced_config(), 2));
}
