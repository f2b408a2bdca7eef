#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "sw/grbasis.hpp"
#include "sw/poly.hpp"
#include "sw/report.hpp"

namespace sw {

enum class Kind { Vicious, Osculating };

/// Basis of the weight-w subspace V_w of V^{otimes N}: partitions in the
/// w x (N-w) box in canonical order, together with their 01-words.
class WeightBasis {
 public:
  WeightBasis(int N, int w);
  int N() const { return N_; }
  int weight() const { return w_; }
  int dim() const { return (int)parts_.size(); }
  const BoxPartition& part(int i) const { return parts_[i]; }
  const Word01& word(int i) const { return words_[i]; }
  int index_of(const BoxPartition& la) const;
  int index_of_bits(const std::vector<int>& bits) const;

 private:
  int N_, w_;
  std::vector<BoxPartition> parts_;
  std::vector<Word01> words_;
  std::map<std::vector<int>, int> by_bits_;
};

const WeightBasis& weight_basis(int N, int w);  // cached, thread-compatible after first use

/// Sparse operator V_{col_w} -> V_{row_w} with Poly entries, stored
/// column-major.  Immutable by convention once built.
class OpV {
 public:
  OpV() = default;
  OpV(VarSpace vs, int N, int row_w, int col_w);
  static OpV identity(VarSpace vs, int N, int w);

  const VarSpace& space() const { return vs_; }
  int N() const { return N_; }
  int row_weight() const { return row_w_; }
  int col_weight() const { return col_w_; }
  int rows() const { return rows_; }
  int cols() const { return (int)cols_data_.size(); }
  const std::map<int, Poly>& column(int c) const { return cols_data_[c]; }

  Poly entry(int r, int c) const;
  void add(int r, int c, const Poly& p);

  OpV operator+(const OpV& o) const;
  OpV operator-(const OpV& o) const;
  OpV operator*(const OpV& o) const;  // composition: this after o
  OpV scale(const Poly& p) const;
  OpV operator-() const { return scale(Poly(vs_, -1)); }
  bool operator==(const OpV& o) const;
  bool operator!=(const OpV& o) const { return !(*this == o); }
  bool is_zero() const;

  std::vector<Poly> apply(const std::vector<Poly>& v) const;

  /// Entry-wise transform.
  OpV map_entries(const std::function<Poly(const Poly&)>& f) const;

  /// First nonzero entry of (*this - o), as a printable counterexample.
  std::optional<std::string> first_difference(const OpV& o) const;

 private:
  VarSpace vs_;
  int N_ = 0, row_w_ = 0, col_w_ = 0, rows_ = 0;
  std::vector<std::map<int, Poly>> cols_data_;
  void require_compatible(const OpV& o) const;
};

/// Single-site operators on the quantum space, weight-graded.
OpV site_proj0(VarSpace vs, int N, int w, int j);   // sigma_j^- sigma_j^+
OpV site_proj1(VarSpace vs, int N, int w, int j);   // sigma_j^+ sigma_j^-
OpV site_raise(VarSpace vs, int N, int w, int j);   // sigma_j^+ : V_w -> V_{w+1}
OpV site_lower(VarSpace vs, int N, int w, int j);   // sigma_j^- : V_w -> V_{w-1}
OpV parity_P(VarSpace vs, int N, int w);            // |la> -> |la^vee>, V_w -> V_w
OpV theta_op(VarSpace vs, int N, int w);            // |la> -> |la^*>,  V_w -> V_{N-w}
OpV omega_op(VarSpace vs, int N, int w);            // cyclic shift of 01-words

/// Five-vertex weight (W,N,E,S edges in {0,1}); zero for forbidden
/// configurations.  x is the row's spectral parameter, j the column.
Poly vertex_weight(Kind kind, VarSpace vs, const Poly& x, int j, int W, int Nn, int E, int S);

/// 4x4 matrix of the L-operator on V[x_i] (x) V[t_j]: rows index the
/// outgoing pair (E,S), columns the incoming pair (W,N), each in binary
/// order 00,01,10,11.
using LMatrix = std::array<std::array<Poly, 4>, 4>;
LMatrix build_L(Kind kind, VarSpace vs, const Poly& x, int j);

/// Single-row monodromy block M_{e w}: paths with the seam/west bit of
/// column 1 equal to w and the east bit of column N equal to e.
/// A = M_00, B = M_01, C = M_10, D = M_11 (indices: M_{out,in}).
OpV row_block(Kind kind, VarSpace vs, const Poly& x, int N, int col_w, int e_bit, int w_bit);

/// Row-to-row transfer matrix H (vicious) or E (osculating) on V_w:
/// A(x) + q D(x).
OpV transfer_op(Kind kind, VarSpace vs, const Poly& x, int N, int w);

/// Coefficient operators H_r (resp. E_r) of x^r, r = 0..N, extracted from
/// the traced single-row monodromy.  Uses the spectral slot x_1.
std::vector<OpV> transfer_via_trace(Kind kind, VarSpace vs, int N, int w);

/// Literal trace over the n-row auxiliary space of M_n ... M_1 with the
/// column-1 twist q_1 = q: sum over binary auxiliary indices.
OpV trace_product(Kind kind, VarSpace vs, const std::vector<Poly>& xs, int N, int w);

/// Yang-Baxter catalog: RLL, RLL-prime, rLL, rLL-prime, qYBE, qYBE-prime,
/// RLL-mixed2 (R'' M M' = M' M R''), RLL-mixed3 (R''' M' M = M M' R''').
IdentityReport verify_yang_baxter(const std::string& id);

}  // namespace sw
