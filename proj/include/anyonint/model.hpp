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

#ifndef ANYONINT_MODEL_HPP
#define ANYONINT_MODEL_HPP

#include <compare>
#include <complex>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace anyonint {

using Complex = std::complex<double>;

/// Default absolute tolerance for all numerical consistency checks.
inline constexpr double kDefaultTol = 1e-9;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Malformed model file text (syntax or schema).
struct ParseError : Error {
  using Error::Error;
};
/// Structurally inconsistent model data (bad references, inadmissible keys).
struct ModelError : Error {
  using Error::Error;
};
/// Invalid argument to an operation (unknown label, out-of-range N, ...).
struct DomainError : Error {
  using Error::Error;
};

/// One basis vector of a fusion/splitting space V_c^{ab}; `mu` indexes the
/// multiplicity, 0 <= mu < N_ab^c.
struct FusionVertex {
  int a = 0;
  int b = 0;
  int c = 0;
  int mu = 0;
  auto operator<=>(const FusionVertex&) const = default;
};

// ---------------------------------------------------------------------------
// Raw model data, mirroring the model file schema. Charges are referenced by
// name; AnyonModel::from_data resolves names and validates the structure.
// ---------------------------------------------------------------------------

struct ChargeSpec {
  std::string name;
  std::string dual;
  double qdim = 1.0;
};

struct FusionEntry {
  std::string a, b, c;
  int n = 1;  // N_ab^c, >= 1 (zero entries are omitted)
};

/// Recoupling coefficient [F^{abc}_d]_{(e,alpha,beta),(f,mu,nu)}.
struct FSymbolEntry {
  std::string a, b, c, d;
  std::string e;
  int alpha = 0, beta = 0;
  std::string f;
  int mu = 0, nu = 0;
  Complex value;
};

/// Braiding coefficient [R^{ab}_c]_{mu,nu}.
struct RSymbolEntry {
  std::string a, b, c;
  int mu = 0, nu = 0;
  Complex value;
};

struct ModelData {
  std::string name;
  std::vector<ChargeSpec> charges;
  std::vector<FusionEntry> fusion;
  std::vector<FSymbolEntry> f_symbols;
  std::vector<RSymbolEntry> r_symbols;
  std::vector<Complex> s_matrix;  // row-major, charges.size()^2 entries
};

// ---------------------------------------------------------------------------
// F-move blocks.
// ---------------------------------------------------------------------------

/// Label of one basis diagram on either side of an F-move: a charge plus the
/// multiplicity indices of its two vertices.
struct BasisLabel {
  int charge = 0;
  int v1 = 0;
  int v2 = 0;
  auto operator<=>(const BasisLabel&) const = default;
};

/// A recoupling move [F^{abc}_d] at fixed external charges, as a matrix from
/// rows (e,alpha,beta) to columns (f,mu,nu).
struct FBlock {
  std::vector<BasisLabel> rows;
  std::vector<BasisLabel> cols;
  Eigen::MatrixXcd mat;
  bool has_data = false;  // stored entries or synthesized identity; false
                          // means no data was provided (matrix is zero)

  int row_index(const BasisLabel& l) const;  // -1 if absent
  int col_index(const BasisLabel& l) const;
};

/// The pair-basis move F^{a,abar}_{a',abar'}: rows are exchange channels
/// (e,alpha,beta), columns are pair fusion channels (f,mu,nu).
struct PairBlock {
  int a = 0;
  int a_prime = 0;
  int vacuum = 0;
  std::vector<BasisLabel> rows;
  std::vector<BasisLabel> cols;
  Eigen::MatrixXcd mat;  // unitary for consistent model data

  int row_index(const BasisLabel& l) const;
  int col_index(const BasisLabel& l) const;
  /// Column index of (f=vacuum, 0, 0), -1 if absent.
  int vacuum_col() const;
};

// ---------------------------------------------------------------------------
// AnyonModel: immutable algebraic data of a unitary braided tensor category.
// All member functions are const and safe to call concurrently.
// ---------------------------------------------------------------------------

class AnyonModel;
using ModelPtr = std::shared_ptr<const AnyonModel>;

class AnyonModel {
 public:
  /// Resolves names, validates structure (unique names, vacuum charge "1",
  /// dual involution, admissible fusion/F/R keys, S-matrix shape). Does not
  /// run the numerical consistency checks; see verify_model().
  static ModelPtr from_data(const ModelData& data);

  const std::string& name() const { return name_; }
  int charge_count() const { return static_cast<int>(names_.size()); }
  int vacuum() const { return vacuum_; }

  int charge_id(std::string_view name) const;          // throws DomainError
  int find_charge(std::string_view name) const;        // -1 if unknown
  const std::string& charge_name(int a) const { return names_.at(a); }
  int dual(int a) const { return duals_.at(a); }

  /// Fusion multiplicity N_ab^c.
  int fusion(int a, int b, int c) const;
  std::vector<int> fusion_products(int a, int b) const;

  /// A splitting-space basis vector (a,b;c,mu) exists iff N_ab^c >= 1 and
  /// mu < N_ab^c.
  bool vertex_valid(const FusionVertex& v) const;

  double qdim(int a) const { return qdims_.at(a); }
  double total_qdim() const { return total_qdim_; }

  const Eigen::MatrixXcd& s_matrix() const { return s_; }
  Complex s(int a, int b) const { return s_(a, b); }

  /// Monodromy matrix element M_ab = S_ab S_11 / (S_1a S_1b).
  Complex monodromy(int a, int b) const;

  /// All difference charges e with N_{e,a'}^a >= 1, with their multiplicity,
  /// ordered by charge index.
  std::vector<std::pair<int, int>> difference_channels(int a, int a_prime) const;

  /// Recoupling block [F^{abc}_d]. Vacuum-involving moves (a, b or c vacuum)
  /// are synthesized as identity; blocks without stored data come back as
  /// zero matrices with stored == false.
  FBlock tree_f_block(int a, int b, int c, int d) const;

  /// Braiding matrix [R^{ab}_c] on the multiplicity space of V_c^{ab}.
  /// Identity if a or b is the vacuum; zero if no data was provided.
  Eigen::MatrixXcd r_matrix(int a, int b, int c) const;

  /// Pair-basis move F^{a,abar}_{a',abar'}, assembled from the recoupling
  /// data. Throws ModelError if a needed F-block is missing.
  PairBlock pair_block(int a, int a_prime) const;

  /// Reconstructs the raw data (sorted, canonical form; used by serialization
  /// and by the equality helper).
  ModelData to_data() const;

  bool has_r_data() const { return !r_entries_.empty(); }

 private:
  AnyonModel() = default;

  struct FKey {
    int a, b, c, d, e, alpha, beta, f, mu, nu;
    auto operator<=>(const FKey&) const = default;
  };
  struct RKey {
    int a, b, c, mu, nu;
    auto operator<=>(const RKey&) const = default;
  };
  struct BlockKey {
    int a, b, c, d;
    auto operator<=>(const BlockKey&) const = default;
  };

  int fusion_raw(int a, int b, int c) const {
    const int n = charge_count();
    return fusion_[(static_cast<size_t>(a) * n + b) * n + c];
  }

  std::string name_;
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> ids_;
  std::vector<int> duals_;
  std::vector<double> qdims_;
  double total_qdim_ = 1.0;
  int vacuum_ = 0;
  std::vector<int> fusion_;  // flat n^3, N_ab^c at ((a*n)+b)*n+c
  std::map<FKey, Complex> f_entries_;
  std::map<RKey, Complex> r_entries_;
  std::map<BlockKey, std::vector<std::pair<FKey, Complex>>> f_blocks_;
  Eigen::MatrixXcd s_;
};

/// Built-in models: "trivial", "semion", "ising", "fibonacci".
ModelPtr builtin_model(std::string_view name);
const std::vector<std::string>& builtin_model_names();

}  // namespace anyonint

#endif  // ANYONINT_MODEL_HPP
