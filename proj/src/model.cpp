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

#include "anyonint/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace anyonint {

namespace {

constexpr std::string_view kVacuumName = "1";

std::string describe_entry(const char* section, size_t i) {
  std::ostringstream os;
  os << section << "[" << i << "]";
  return os.str();
}

}  // namespace

int FBlock::row_index(const BasisLabel& l) const {
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i] == l) return static_cast<int>(i);
  return -1;
}

int FBlock::col_index(const BasisLabel& l) const {
  for (size_t i = 0; i < cols.size(); ++i)
    if (cols[i] == l) return static_cast<int>(i);
  return -1;
}

int PairBlock::row_index(const BasisLabel& l) const {
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i] == l) return static_cast<int>(i);
  return -1;
}

int PairBlock::col_index(const BasisLabel& l) const {
  for (size_t i = 0; i < cols.size(); ++i)
    if (cols[i] == l) return static_cast<int>(i);
  return -1;
}

int PairBlock::vacuum_col() const { return col_index(BasisLabel{vacuum, 0, 0}); }

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

ModelPtr AnyonModel::from_data(const ModelData& data) {
  auto model = std::shared_ptr<AnyonModel>(new AnyonModel());
  AnyonModel& m = *model;
  m.name_ = data.name;

  if (data.charges.empty()) throw ModelError("model has no charges");

  for (size_t i = 0; i < data.charges.size(); ++i) {
    const ChargeSpec& c = data.charges[i];
    if (c.name.empty())
      throw ModelError(describe_entry("charges", i) + ": empty charge name");
    if (m.ids_.count(c.name))
      throw ModelError(describe_entry("charges", i) + ": duplicate charge '" +
                       c.name + "'");
    if (!(c.qdim > 0.0))
      throw ModelError(describe_entry("charges", i) + ": qdim of '" + c.name +
                       "' must be positive");
    m.ids_[c.name] = static_cast<int>(i);
    m.names_.push_back(c.name);
    m.qdims_.push_back(c.qdim);
  }

  const auto it = m.ids_.find(kVacuumName);
  if (it == m.ids_.end()) throw ModelError("no vacuum charge (named \"1\")");
  m.vacuum_ = it->second;

  const int n = m.charge_count();
  auto resolve = [&m](const std::string& name, const std::string& where) {
    auto found = m.ids_.find(name);
    if (found == m.ids_.end())
      throw ModelError(where + ": unknown charge '" + name + "'");
    return found->second;
  };

  m.duals_.resize(n);
  for (size_t i = 0; i < data.charges.size(); ++i)
    m.duals_[i] = resolve(data.charges[i].dual,
                          describe_entry("charges", i) + ".dual");
  for (int a = 0; a < n; ++a)
    if (m.duals_[m.duals_[a]] != a)
      throw ModelError("dual map is not an involution at charge '" +
                       m.names_[a] + "'");
  if (m.duals_[m.vacuum_] != m.vacuum_)
    throw ModelError("dual of the vacuum must be the vacuum");

  m.fusion_.assign(static_cast<size_t>(n) * n * n, 0);
  for (size_t i = 0; i < data.fusion.size(); ++i) {
    const FusionEntry& fe = data.fusion[i];
    const std::string where = describe_entry("fusion", i);
    const int a = resolve(fe.a, where);
    const int b = resolve(fe.b, where);
    const int c = resolve(fe.c, where);
    if (fe.n < 1)
      throw ModelError(where + ": multiplicity must be >= 1 (omit zeros)");
    int& slot = m.fusion_[(static_cast<size_t>(a) * n + b) * n + c];
    if (slot != 0) throw ModelError(where + ": duplicate fusion entry");
    slot = fe.n;
  }

  double dsq = 0.0;
  for (int a = 0; a < n; ++a) dsq += m.qdims_[a] * m.qdims_[a];
  m.total_qdim_ = std::sqrt(dsq);

  for (size_t i = 0; i < data.f_symbols.size(); ++i) {
    const FSymbolEntry& fs = data.f_symbols[i];
    const std::string where = describe_entry("f_symbols", i);
    FKey k{};
    k.a = resolve(fs.a, where);
    k.b = resolve(fs.b, where);
    k.c = resolve(fs.c, where);
    k.d = resolve(fs.d, where);
    k.e = resolve(fs.e, where);
    k.f = resolve(fs.f, where);
    k.alpha = fs.alpha;
    k.beta = fs.beta;
    k.mu = fs.mu;
    k.nu = fs.nu;
    if (k.a == m.vacuum_ || k.b == m.vacuum_ || k.c == m.vacuum_)
      throw ModelError(where +
                       ": F-moves with a vacuum upper charge are fixed to the "
                       "identity by convention; remove this entry");
    // Admissibility against the fusion tensor; forbidden vertices are
    // rejected here rather than silently zeroed.
    auto need = [&](int x, int y, int z, int idx, const char* what) {
      const int mult = m.fusion_raw(x, y, z);
      if (mult < 1 || idx < 0 || idx >= mult)
        throw ModelError(where + ": " + what +
                         " violates fusion admissibility");
    };
    need(k.a, k.b, k.e, k.alpha, "(e,alpha)");
    need(k.e, k.c, k.d, k.beta, "(e,beta)");
    need(k.b, k.c, k.f, k.mu, "(f,mu)");
    need(k.a, k.f, k.d, k.nu, "(f,nu)");
    if (m.f_entries_.count(k)) throw ModelError(where + ": duplicate F-symbol");
    m.f_entries_[k] = fs.value;
    m.f_blocks_[BlockKey{k.a, k.b, k.c, k.d}].emplace_back(k, fs.value);
  }

  for (size_t i = 0; i < data.r_symbols.size(); ++i) {
    const RSymbolEntry& rs = data.r_symbols[i];
    const std::string where = describe_entry("r_symbols", i);
    RKey k{};
    k.a = resolve(rs.a, where);
    k.b = resolve(rs.b, where);
    k.c = resolve(rs.c, where);
    k.mu = rs.mu;
    k.nu = rs.nu;
    if (k.a == m.vacuum_ || k.b == m.vacuum_)
      throw ModelError(where +
                       ": braiding with the vacuum is trivial by convention; "
                       "remove this entry");
    const int mult = m.fusion_raw(k.a, k.b, k.c);
    if (mult < 1 || k.mu >= mult || k.nu >= mult || k.mu < 0 || k.nu < 0)
      throw ModelError(where + ": violates fusion admissibility");
    if (m.r_entries_.count(k)) throw ModelError(where + ": duplicate R-symbol");
    m.r_entries_[k] = rs.value;
  }

  if (data.s_matrix.size() != static_cast<size_t>(n) * n)
    throw ModelError("s_matrix must have exactly " + std::to_string(n * n) +
                     " entries (row-major)");
  m.s_.resize(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m.s_(a, b) = data.s_matrix[static_cast<size_t>(a) * n + b];

  return model;
}

// ---------------------------------------------------------------------------
// Accessors
// ---------------------------------------------------------------------------

int AnyonModel::charge_id(std::string_view name) const {
  const int id = find_charge(name);
  if (id < 0)
    throw DomainError("unknown charge '" + std::string(name) + "' in model '" +
                      name_ + "'");
  return id;
}

int AnyonModel::find_charge(std::string_view name) const {
  auto it = ids_.find(name);
  return it == ids_.end() ? -1 : it->second;
}

int AnyonModel::fusion(int a, int b, int c) const {
  const int n = charge_count();
  if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
    throw DomainError("charge index out of range");
  return fusion_raw(a, b, c);
}

std::vector<int> AnyonModel::fusion_products(int a, int b) const {
  std::vector<int> out;
  for (int c = 0; c < charge_count(); ++c)
    if (fusion(a, b, c) >= 1) out.push_back(c);
  return out;
}

bool AnyonModel::vertex_valid(const FusionVertex& v) const {
  const int n = charge_count();
  if (v.a < 0 || v.b < 0 || v.c < 0 || v.a >= n || v.b >= n || v.c >= n)
    return false;
  return v.mu >= 0 && v.mu < fusion_raw(v.a, v.b, v.c);
}

Complex AnyonModel::monodromy(int a, int b) const {
  const int n = charge_count();
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw DomainError("charge index out of range");
  return s_(a, b) * s_(vacuum_, vacuum_) / (s_(vacuum_, a) * s_(vacuum_, b));
}

std::vector<std::pair<int, int>> AnyonModel::difference_channels(
    int a, int a_prime) const {
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < charge_count(); ++e) {
    const int mult = fusion(e, a_prime, a);
    if (mult >= 1) out.emplace_back(e, mult);
  }
  return out;
}

// ---------------------------------------------------------------------------
// F-move blocks
// ---------------------------------------------------------------------------

FBlock AnyonModel::tree_f_block(int a, int b, int c, int d) const {
  const int n = charge_count();
  if (a < 0 || b < 0 || c < 0 || d < 0 || a >= n || b >= n || c >= n || d >= n)
    throw DomainError("charge index out of range");

  FBlock blk;
  for (int e = 0; e < n; ++e) {
    const int m1 = fusion_raw(a, b, e);
    const int m2 = fusion_raw(e, c, d);
    for (int alpha = 0; alpha < m1; ++alpha)
      for (int beta = 0; beta < m2; ++beta)
        blk.rows.push_back({e, alpha, beta});
  }
  for (int f = 0; f < n; ++f) {
    const int m1 = fusion_raw(b, c, f);
    const int m2 = fusion_raw(a, f, d);
    for (int mu = 0; mu < m1; ++mu)
      for (int nu = 0; nu < m2; ++nu) blk.cols.push_back({f, mu, nu});
  }
  blk.mat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(blk.rows.size()),
                                   static_cast<Eigen::Index>(blk.cols.size()));

  auto stored = f_blocks_.find(BlockKey{a, b, c, d});
  if (stored != f_blocks_.end()) {
    blk.has_data = true;
    for (const auto& [key, value] : stored->second) {
      const int r = blk.row_index({key.e, key.alpha, key.beta});
      const int col = blk.col_index({key.f, key.mu, key.nu});
      if (r >= 0 && col >= 0) blk.mat(r, col) = value;
    }
    return blk;
  }

  // Vacuum-involving moves are the identity (unit axioms), with the matching
  // of vertex labels depending on which leg carries the vacuum.
  const int vac = vacuum_;
  if (a == vac || b == vac || c == vac) {
    blk.has_data = true;
    for (size_t ri = 0; ri < blk.rows.size(); ++ri) {
      const BasisLabel& row = blk.rows[ri];
      BasisLabel col{};
      if (a == vac) {
        // rows (e=b, 0, beta in V_d^{bc});  cols (f=d, mu in V_d^{bc}, 0)
        if (row.charge != b) continue;
        col = {d, row.v2, 0};
      } else if (b == vac) {
        // rows (e=a, 0, beta in V_d^{ac});  cols (f=c, 0, nu in V_d^{ac})
        if (row.charge != a) continue;
        col = {c, 0, row.v2};
      } else {
        // rows (e, alpha in V_e^{ab}, 0) with e=d;  cols (f=b, 0, nu)
        if (row.charge != d) continue;
        col = {b, 0, row.v1};
      }
      const int ci = blk.col_index(col);
      if (ci >= 0) blk.mat(static_cast<Eigen::Index>(ri), ci) = 1.0;
    }
    return blk;
  }

  blk.has_data = false;
  return blk;
}

Eigen::MatrixXcd AnyonModel::r_matrix(int a, int b, int c) const {
  const int dim = fusion(a, b, c);
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(dim, dim);
  if (dim == 0) return r;
  if (a == vacuum_ || b == vacuum_)
    return Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& [key, value] : r_entries_) {
    if (key.a == a && key.b == b && key.c == c) r(key.mu, key.nu) = value;
  }
  return r;
}

PairBlock AnyonModel::pair_block(int a, int a_prime) const {
  const int n = charge_count();
  if (a < 0 || a_prime < 0 || a >= n || a_prime >= n)
    throw DomainError("charge index out of range");
  const int abar = dual(a);
  const int abar_p = dual(a_prime);

  PairBlock blk;
  blk.a = a;
  blk.a_prime = a_prime;
  blk.vacuum = vacuum_;
  for (int e = 0; e < n; ++e) {
    const int na = fusion_raw(a_prime, e, a);   // alpha range
    const int nb = fusion_raw(e, abar, abar_p); // beta range
    for (int alpha = 0; alpha < na; ++alpha)
      for (int beta = 0; beta < nb; ++beta) blk.rows.push_back({e, alpha, beta});
  }
  for (int f = 0; f < n; ++f) {
    const int mtop = fusion_raw(a, abar, f);
    const int mbot = fusion_raw(a_prime, abar_p, f);
    for (int mu = 0; mu < mtop; ++mu)
      for (int nu = 0; nu < mbot; ++nu) blk.cols.push_back({f, mu, nu});
  }
  blk.mat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(blk.rows.size()),
                                   static_cast<Eigen::Index>(blk.cols.size()));

  // [F^{a,abar}_{a',abar'}]_{(e,alpha,beta),(f,mu,nu)} =
  //   sqrt(d_e d_f / (d_a d_a')) conj([F^{a',e,abar}_f]_{(a,alpha,mu),(abar',beta,nu)})
  for (size_t ri = 0; ri < blk.rows.size(); ++ri) {
    const BasisLabel& row = blk.rows[ri];
    for (size_t ci = 0; ci < blk.cols.size(); ++ci) {
      const BasisLabel& col = blk.cols[ci];
      const FBlock tree = tree_f_block(a_prime, row.charge, abar, col.charge);
      if (!tree.has_data)
        throw ModelError(
            "model is missing F-symbols for the block F[" + names_[a_prime] +
            "," + names_[row.charge] + "," + names_[abar] + ";" +
            names_[col.charge] + "] needed by the charge pair (" + names_[a] +
            ", " + names_[a_prime] + ")");
      const int tr = tree.row_index({a, row.v1, col.v1});
      const int tc = tree.col_index({abar_p, row.v2, col.v2});
      if (tr < 0 || tc < 0) continue;
      const double scale = std::sqrt(qdims_[row.charge] * qdims_[col.charge] /
                                     (qdims_[a] * qdims_[a_prime]));
      blk.mat(static_cast<Eigen::Index>(ri), static_cast<Eigen::Index>(ci)) =
          scale * std::conj(tree.mat(tr, tc));
    }
  }
  return blk;
}

// ---------------------------------------------------------------------------
// Canonical data reconstruction
// ---------------------------------------------------------------------------

ModelData AnyonModel::to_data() const {
  ModelData d;
  d.name = name_;
  const int n = charge_count();
  for (int a = 0; a < n; ++a)
    d.charges.push_back({names_[a], names_[duals_[a]], qdims_[a]});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (const int mult = fusion_raw(a, b, c); mult >= 1)
          d.fusion.push_back({names_[a], names_[b], names_[c], mult});
  for (const auto& [k, v] : f_entries_)
    d.f_symbols.push_back({names_[k.a], names_[k.b], names_[k.c], names_[k.d],
                           names_[k.e], k.alpha, k.beta, names_[k.f], k.mu,
                           k.nu, v});
  for (const auto& [k, v] : r_entries_)
    d.r_symbols.push_back({names_[k.a], names_[k.b], names_[k.c], k.mu, k.nu, v});
  d.s_matrix.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      d.s_matrix[static_cast<size_t>(a) * n + b] = s_(a, b);
  return d;
}

// ---------------------------------------------------------------------------
// Built-in models
// ---------------------------------------------------------------------------

namespace {

ModelData trivial_data() {
  ModelData d;
  d.name = "trivial";
  d.charges = {{"1", "1", 1.0}};
  d.fusion = {{"1", "1", "1", 1}};
  d.s_matrix = {Complex{1.0, 0.0}};
  return d;
}

ModelData semion_data() {
  ModelData d;
  d.name = "semion";
  d.charges = {{"1", "1", 1.0}, {"s", "s", 1.0}};
  d.fusion = {{"1", "1", "1", 1},
              {"1", "s", "s", 1},
              {"s", "1", "s", 1},
              {"s", "s", "1", 1}};
  d.f_symbols = {{"s", "s", "s", "s", "1", 0, 0, "1", 0, 0, {-1.0, 0.0}}};
  d.r_symbols = {{"s", "s", "1", 0, 0, {0.0, 1.0}}};
  const double rt = 1.0 / std::numbers::sqrt2;
  d.s_matrix = {{rt, 0.0}, {rt, 0.0}, {rt, 0.0}, {-rt, 0.0}};
  return d;
}

ModelData ising_data() {
  ModelData d;
  d.name = "ising";
  const double s2 = std::numbers::sqrt2;
  d.charges = {{"1", "1", 1.0}, {"sigma", "sigma", s2}, {"psi", "psi", 1.0}};
  d.fusion = {{"1", "1", "1", 1},         {"1", "sigma", "sigma", 1},
              {"1", "psi", "psi", 1},     {"sigma", "1", "sigma", 1},
              {"sigma", "sigma", "1", 1}, {"sigma", "sigma", "psi", 1},
              {"sigma", "psi", "sigma", 1}, {"psi", "1", "psi", 1},
              {"psi", "sigma", "sigma", 1}, {"psi", "psi", "1", 1}};
  const double h = 1.0 / s2;
  auto F = [](const char* a, const char* b, const char* c, const char* dd,
              const char* e, const char* f, double re) {
    return FSymbolEntry{a, b, c, dd, e, 0, 0, f, 0, 0, Complex{re, 0.0}};
  };
  d.f_symbols = {
      F("sigma", "sigma", "sigma", "sigma", "1", "1", h),
      F("sigma", "sigma", "sigma", "sigma", "1", "psi", h),
      F("sigma", "sigma", "sigma", "sigma", "psi", "1", h),
      F("sigma", "sigma", "sigma", "sigma", "psi", "psi", -h),
      F("sigma", "sigma", "psi", "1", "psi", "sigma", 1.0),
      F("sigma", "sigma", "psi", "psi", "1", "sigma", 1.0),
      F("sigma", "psi", "sigma", "1", "sigma", "sigma", 1.0),
      F("sigma", "psi", "sigma", "psi", "sigma", "sigma", -1.0),
      F("psi", "sigma", "sigma", "1", "sigma", "psi", 1.0),
      F("psi", "sigma", "sigma", "psi", "sigma", "1", 1.0),
      F("sigma", "psi", "psi", "sigma", "sigma", "1", 1.0),
      F("psi", "psi", "sigma", "sigma", "1", "sigma", 1.0),
      F("psi", "sigma", "psi", "sigma", "sigma", "sigma", -1.0),
      F("psi", "psi", "psi", "psi", "1", "1", 1.0),
  };
  const double pi = std::numbers::pi;
  d.r_symbols = {
      {"sigma", "sigma", "1", 0, 0, std::polar(1.0, -pi / 8)},
      {"sigma", "sigma", "psi", 0, 0, std::polar(1.0, 3 * pi / 8)},
      {"sigma", "psi", "sigma", 0, 0, {0.0, -1.0}},
      {"psi", "sigma", "sigma", 0, 0, {0.0, -1.0}},
      {"psi", "psi", "1", 0, 0, {-1.0, 0.0}},
  };
  const double q = 0.5;
  const double rt = s2 / 2.0;
  d.s_matrix = {{q, 0.0},  {rt, 0.0},  {q, 0.0},  {rt, 0.0}, {0.0, 0.0},
                {-rt, 0.0}, {q, 0.0},  {-rt, 0.0}, {q, 0.0}};
  return d;
}

ModelData fibonacci_data() {
  ModelData d;
  d.name = "fibonacci";
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  d.charges = {{"1", "1", 1.0}, {"eps", "eps", phi}};
  d.fusion = {{"1", "1", "1", 1},
              {"1", "eps", "eps", 1},
              {"eps", "1", "eps", 1},
              {"eps", "eps", "1", 1},
              {"eps", "eps", "eps", 1}};
  const double pinv = 1.0 / phi;
  const double pinv_h = 1.0 / std::sqrt(phi);
  d.f_symbols = {
      {"eps", "eps", "eps", "1", "eps", 0, 0, "eps", 0, 0, {1.0, 0.0}},
      {"eps", "eps", "eps", "eps", "1", 0, 0, "1", 0, 0, {pinv, 0.0}},
      {"eps", "eps", "eps", "eps", "1", 0, 0, "eps", 0, 0, {pinv_h, 0.0}},
      {"eps", "eps", "eps", "eps", "eps", 0, 0, "1", 0, 0, {pinv_h, 0.0}},
      {"eps", "eps", "eps", "eps", "eps", 0, 0, "eps", 0, 0, {-pinv, 0.0}},
  };
  const double pi = std::numbers::pi;
  d.r_symbols = {
      {"eps", "eps", "1", 0, 0, std::polar(1.0, 4 * pi / 5)},
      {"eps", "eps", "eps", 0, 0, std::polar(1.0, -3 * pi / 5)},
  };
  const double dd = std::sqrt(2.0 + phi);
  d.s_matrix = {{1.0 / dd, 0.0}, {phi / dd, 0.0}, {phi / dd, 0.0},
                {-1.0 / dd, 0.0}};
  return d;
}

}  // namespace

const std::vector<std::string>& builtin_model_names() {
  static const std::vector<std::string> names = {"trivial", "semion", "ising",
                                                 "fibonacci"};
  return names;
}

ModelPtr builtin_model(std::string_view name) {
  if (name == "trivial") return AnyonModel::from_data(trivial_data());
  if (name == "semion") return AnyonModel::from_data(semion_data());
  if (name == "ising") return AnyonModel::from_data(ising_data());
  if (name == "fibonacci") return AnyonModel::from_data(fibonacci_data());
  throw DomainError("unknown builtin model '" + std::string(name) +
                    "' (expected one of: trivial, semion, ising, fibonacci)");
}

}  // namespace anyonint
