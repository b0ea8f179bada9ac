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

#include "anyonint/verify.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace anyonint {

namespace {

struct Deviation {
  double value = 0.0;
  std::string detail;

  void update(double dev, const std::string& where) {
    if (dev > value) {
      value = dev;
      detail = where;
    }
  }
};

Complex block_entry(const FBlock& blk, const BasisLabel& row,
                    const BasisLabel& col) {
  const int r = blk.row_index(row);
  const int c = blk.col_index(col);
  if (r < 0 || c < 0) return 0.0;
  return blk.mat(r, c);
}

/// All tree blocks, indexed [((a*n+b)*n+c)*n+d].
std::vector<FBlock> all_tree_blocks(const AnyonModel& m) {
  const int n = m.charge_count();
  std::vector<FBlock> blocks;
  blocks.reserve(static_cast<size_t>(n) * n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) blocks.push_back(m.tree_f_block(a, b, c, d));
  return blocks;
}

std::string charges_str(const AnyonModel& m, std::initializer_list<int> ids) {
  std::string out;
  for (int id : ids) {
    if (!out.empty()) out += ",";
    out += m.charge_name(id);
  }
  return out;
}

CheckResult check_fusion_rules(const AnyonModel& m) {
  Deviation dev;
  const int n = m.charge_count();
  const int vac = m.vacuum();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      dev.update(std::abs(m.fusion(vac, a, b) - (a == b ? 1 : 0)),
                 "N_1" + charges_str(m, {a, b}));
      dev.update(std::abs(m.fusion(a, b, vac) - (b == m.dual(a) ? 1 : 0)),
                 "N_" + charges_str(m, {a, b}) + "^1");
      for (int c = 0; c < n; ++c)
        dev.update(std::abs(m.fusion(a, b, c) - m.fusion(b, a, c)),
                   "commutativity at " + charges_str(m, {a, b, c}));
    }
  // Associativity: sum_e N_ab^e N_ec^d == sum_f N_bc^f N_af^d.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          int lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) lhs += m.fusion(a, b, e) * m.fusion(e, c, d);
          for (int f = 0; f < n; ++f) rhs += m.fusion(b, c, f) * m.fusion(a, f, d);
          dev.update(std::abs(lhs - rhs),
                     "associativity at " + charges_str(m, {a, b, c, d}));
        }
  return {"fusion_rules", false, dev.value, dev.detail};
}

CheckResult check_dimensions(const AnyonModel& m) {
  Deviation dev;
  const int n = m.charge_count();
  dev.update(std::abs(m.qdim(m.vacuum()) - 1.0), "d_1 != 1");
  for (int a = 0; a < n; ++a) {
    dev.update(std::max(0.0, 1.0 - m.qdim(a)),
               "d_" + m.charge_name(a) + " < 1");
    dev.update(std::abs(m.qdim(a) - m.qdim(m.dual(a))),
               "d_a != d_abar at " + m.charge_name(a));
    for (int b = 0; b < n; ++b) {
      double sum = 0.0;
      for (int c = 0; c < n; ++c) sum += m.fusion(a, b, c) * m.qdim(c);
      dev.update(std::abs(m.qdim(a) * m.qdim(b) - sum),
                 "d_a d_b != sum N d_c at " + charges_str(m, {a, b}));
    }
  }
  return {"dimension_consistency", false, dev.value, dev.detail};
}

CheckResult check_s_unitary(const AnyonModel& m) {
  const Eigen::MatrixXcd& s = m.s_matrix();
  const Eigen::MatrixXcd res =
      s * s.adjoint() - Eigen::MatrixXcd::Identity(s.rows(), s.cols());
  return {"s_unitary", false, res.cwiseAbs().maxCoeff(), ""};
}

CheckResult check_s_symmetric(const AnyonModel& m) {
  const Eigen::MatrixXcd& s = m.s_matrix();
  const Eigen::MatrixXcd res = s - s.transpose();
  return {"s_symmetric", false, res.cwiseAbs().maxCoeff(), ""};
}

CheckResult check_qdim_s_row(const AnyonModel& m) {
  Deviation dev;
  for (int a = 0; a < m.charge_count(); ++a)
    dev.update(std::abs(Complex(m.qdim(a), 0.0) -
                        m.total_qdim() * m.s(m.vacuum(), a)),
               "d_" + m.charge_name(a));
  return {"qdim_s_row", false, dev.value, dev.detail};
}

CheckResult check_monodromy_bounded(const AnyonModel& m) {
  Deviation dev;
  for (int a = 0; a < m.charge_count(); ++a)
    for (int b = 0; b < m.charge_count(); ++b)
      dev.update(std::max(0.0, std::abs(m.monodromy(a, b)) - 1.0),
                 "M_" + charges_str(m, {a, b}));
  return {"monodromy_bounded", false, dev.value, dev.detail};
}

CheckResult check_f_unitarity(const AnyonModel& m,
                              const std::vector<FBlock>& blocks) {
  Deviation dev;
  const int n = m.charge_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const FBlock& blk = blocks[((static_cast<size_t>(a) * n + b) * n + c) * n + d];
          if (blk.rows.empty() && blk.cols.empty()) continue;
          const std::string where = "F[" + charges_str(m, {a, b, c, d}) + "]";
          if (blk.rows.size() != blk.cols.size()) {
            dev.update(1.0, where + " is not square");
            continue;
          }
          const Eigen::MatrixXcd res =
              blk.mat * blk.mat.adjoint() -
              Eigen::MatrixXcd::Identity(blk.mat.rows(), blk.mat.rows());
          dev.update(res.cwiseAbs().maxCoeff(), where);
        }
  return {"f_unitarity", false, dev.value, dev.detail};
}

CheckResult check_pair_f_unitarity(const AnyonModel& m) {
  Deviation dev;
  const int n = m.charge_count();
  for (int a = 0; a < n; ++a)
    for (int ap = 0; ap < n; ++ap) {
      const std::string where =
          "pair F-block (" + charges_str(m, {a, ap}) + ")";
      try {
        const PairBlock blk = m.pair_block(a, ap);
        if (blk.rows.size() != blk.cols.size()) {
          dev.update(1.0, where + " is not square");
          continue;
        }
        if (blk.rows.empty()) continue;
        const Eigen::MatrixXcd res =
            blk.mat * blk.mat.adjoint() -
            Eigen::MatrixXcd::Identity(blk.mat.rows(), blk.mat.rows());
        dev.update(res.cwiseAbs().maxCoeff(), where);
      } catch (const ModelError& err) {
        dev.update(1.0, where + ": " + err.what());
      }
    }
  return {"pair_f_unitarity", false, dev.value, dev.detail};
}

CheckResult check_pentagon(const AnyonModel& m,
                           const std::vector<FBlock>& blocks) {
  Deviation dev;
  const int n = m.charge_count();
  auto blk = [&](int a, int b, int c, int d) -> const FBlock& {
    return blocks[((static_cast<size_t>(a) * n + b) * n + c) * n + d];
  };

  for (int a = 0; a < n; ++a)
   for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
     for (int d = 0; d < n; ++d)
      for (int E = 0; E < n; ++E) {
        // T1 = ((ab)c)d with intermediates f,g; T3 = a(b(cd)) with l,k.
        for (int f = 0; f < n; ++f) {
          const int n_alpha = m.fusion(a, b, f);
          if (n_alpha == 0) continue;
          for (int g = 0; g < n; ++g) {
            const int n_beta = m.fusion(f, c, g);
            const int n_gamma = m.fusion(g, d, E);
            if (n_beta == 0 || n_gamma == 0) continue;
            for (int l = 0; l < n; ++l) {
              const int n_delta = m.fusion(c, d, l);
              if (n_delta == 0) continue;
              for (int k = 0; k < n; ++k) {
                const int n_lambda = m.fusion(b, l, k);
                const int n_mu = m.fusion(a, k, E);
                if (n_lambda == 0 || n_mu == 0) continue;
                for (int alpha = 0; alpha < n_alpha; ++alpha)
                 for (int beta = 0; beta < n_beta; ++beta)
                  for (int gamma = 0; gamma < n_gamma; ++gamma)
                   for (int delta = 0; delta < n_delta; ++delta)
                    for (int lambda = 0; lambda < n_lambda; ++lambda)
                     for (int mu = 0; mu < n_mu; ++mu) {
                       Complex lhs = 0.0;
                       const int n_nu = m.fusion(f, l, E);
                       for (int nu = 0; nu < n_nu; ++nu)
                         lhs += block_entry(blk(f, c, d, E), {g, beta, gamma},
                                            {l, delta, nu}) *
                                block_entry(blk(a, b, l, E), {f, alpha, nu},
                                            {k, lambda, mu});
                       Complex rhs = 0.0;
                       for (int h = 0; h < n; ++h) {
                         const int n_sigma = m.fusion(b, c, h);
                         const int n_psi = m.fusion(a, h, g);
                         const int n_rho = m.fusion(h, d, k);
                         for (int sigma = 0; sigma < n_sigma; ++sigma)
                          for (int psi = 0; psi < n_psi; ++psi)
                           for (int rho = 0; rho < n_rho; ++rho)
                             rhs += block_entry(blk(a, b, c, g),
                                                {f, alpha, beta}, {h, sigma, psi}) *
                                    block_entry(blk(a, h, d, E), {g, psi, gamma},
                                                {k, rho, mu}) *
                                    block_entry(blk(b, c, d, k), {h, sigma, rho},
                                                {l, delta, lambda});
                       }
                       dev.update(std::abs(lhs - rhs),
                                  "pentagon at (" +
                                      charges_str(m, {a, b, c, d, E}) + ")");
                     }
              }
            }
          }
        }
      }
  return {"pentagon", false, dev.value, dev.detail};
}

CheckResult check_hexagon(const AnyonModel& m, const std::vector<FBlock>& blocks,
                          bool inverse) {
  Deviation dev;
  const int n = m.charge_count();
  auto blk = [&](int a, int b, int c, int d) -> const FBlock& {
    return blocks[((static_cast<size_t>(a) * n + b) * n + c) * n + d];
  };
  // Matrix of the braid V_z^{xy} -> V_z^{yx}: counterclockwise R^{xy}_z, or
  // for the inverse hexagon the clockwise (R^{yx}_z)^{-1} = (R^{yx}_z)^dag.
  auto rmat = [&](int x, int y, int z) -> Eigen::MatrixXcd {
    if (inverse) return m.r_matrix(y, x, z).adjoint();
    return m.r_matrix(x, y, z);
  };

  for (int c = 0; c < n; ++c)
   for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
     for (int d = 0; d < n; ++d) {
       for (int e = 0; e < n; ++e) {
         const int n_alpha = m.fusion(c, a, e);
         const int n_beta = m.fusion(e, b, d);
         if (n_alpha == 0 || n_beta == 0) continue;
         for (int h = 0; h < n; ++h) {
           const int n_sigma = m.fusion(b, c, h);
           const int n_tau = m.fusion(a, h, d);
           if (n_sigma == 0 || n_tau == 0) continue;
           const Eigen::MatrixXcd r_ca = rmat(c, a, e);   // V^{ca}_e -> V^{ac}_e
           const Eigen::MatrixXcd r_cb = rmat(c, b, h);   // V^{cb}_h -> V^{bc}_h
           for (int alpha = 0; alpha < n_alpha; ++alpha)
            for (int beta = 0; beta < n_beta; ++beta)
             for (int sigma = 0; sigma < n_sigma; ++sigma)
              for (int tau = 0; tau < n_tau; ++tau) {
                if (sigma >= r_cb.cols()) continue;
                Complex lhs = 0.0;
                for (int ap = 0; ap < r_ca.cols(); ++ap)
                 for (int st = 0; st < r_cb.rows(); ++st)
                   lhs += r_ca(alpha, ap) *
                          block_entry(blk(a, c, b, d), {e, ap, beta},
                                      {h, st, tau}) *
                          r_cb(st, sigma);
                Complex rhs = 0.0;
                for (int f = 0; f < n; ++f) {
                  const int n_mu = m.fusion(a, b, f);
                  if (n_mu == 0) continue;
                  const Eigen::MatrixXcd r_cf = rmat(c, f, d);
                  for (int mu = 0; mu < n_mu; ++mu)
                   for (int nu = 0; nu < r_cf.rows(); ++nu)
                    for (int nup = 0; nup < r_cf.cols(); ++nup)
                      rhs += block_entry(blk(c, a, b, d), {e, alpha, beta},
                                         {f, mu, nu}) *
                             r_cf(nu, nup) *
                             block_entry(blk(a, b, c, d), {f, mu, nup},
                                         {h, sigma, tau});
                }
                dev.update(std::abs(lhs - rhs),
                           "hexagon at (" + charges_str(m, {c, a, b, d}) + ")");
              }
         }
       }
     }
  return {inverse ? "hexagon_r_inverse" : "hexagon_r", false, dev.value,
          dev.detail};
}

CheckResult check_s_from_twists(const AnyonModel& m) {
  Deviation dev;
  const int n = m.charge_count();
  std::vector<Complex> theta(n);
  for (int a = 0; a < n; ++a) {
    Complex t = 0.0;
    for (int c = 0; c < n; ++c) {
      if (m.fusion(a, a, c) == 0) continue;
      t += (m.qdim(c) / m.qdim(a)) * m.r_matrix(a, a, c).trace();
    }
    theta[a] = t;
    dev.update(std::max(0.0, std::abs(std::abs(t) - 1.0)),
               "twist modulus at " + m.charge_name(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Complex s = 0.0;
      for (int c = 0; c < n; ++c)
        s += static_cast<double>(m.fusion(m.dual(a), b, c)) * m.qdim(c) *
             theta[c] / (theta[a] * theta[b]);
      s /= m.total_qdim();
      dev.update(std::abs(s - m.s(a, b)), "S_" + charges_str(m, {a, b}));
    }
  return {"s_from_twists", false, dev.value, dev.detail};
}

}  // namespace

bool VerificationReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

double VerificationReport::max_deviation() const {
  double m = 0.0;
  for (const CheckResult& c : checks) m = std::max(m, c.max_deviation);
  return m;
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "model: " << model_name << "\n";
  for (const CheckResult& c : checks) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << std::left
       << std::setw(24) << c.name << " max_dev=" << std::scientific
       << std::setprecision(3) << c.max_deviation;
    if (!c.passed && !c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << "overall: " << (all_passed() ? "PASS" : "FAIL") << " (tolerance "
     << std::scientific << std::setprecision(1) << tolerance
     << ", max deviation " << std::setprecision(3) << max_deviation() << ")\n";
  return os.str();
}

VerificationReport verify_model(const AnyonModel& model, double tol) {
  VerificationReport report;
  report.model_name = model.name();
  report.tolerance = tol;

  const std::vector<FBlock> blocks = all_tree_blocks(model);

  report.checks.push_back(check_fusion_rules(model));
  report.checks.push_back(check_dimensions(model));
  report.checks.push_back(check_s_unitary(model));
  report.checks.push_back(check_s_symmetric(model));
  report.checks.push_back(check_qdim_s_row(model));
  report.checks.push_back(check_monodromy_bounded(model));
  report.checks.push_back(check_f_unitarity(model, blocks));
  report.checks.push_back(check_pair_f_unitarity(model));
  report.checks.push_back(check_pentagon(model, blocks));
  report.checks.push_back(check_hexagon(model, blocks, false));
  report.checks.push_back(check_hexagon(model, blocks, true));
  report.checks.push_back(check_s_from_twists(model));

  for (CheckResult& c : report.checks) c.passed = c.max_deviation <= tol;
  return report;
}

}  // namespace anyonint
