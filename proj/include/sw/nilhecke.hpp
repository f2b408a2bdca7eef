#pragma once

#include "sw/lattice.hpp"
#include "sw/poly.hpp"
#include "sw/report.hpp"

namespace sw {

/// Operator with a tracked monomial denominator: X = num / den.  The Hecke
/// generators live over Laurent polynomials; public-facing composites must
/// reduce to honest Poly entries (asserted via reduced()).
struct ScaledOp {
  OpV num;
  Mono den;  // exponent vector, width = VarSpace::vars()

  static ScaledOp plain(OpV op);
  ScaledOp operator*(const ScaledOp& o) const;
  ScaledOp operator+(const ScaledOp& o) const;
  ScaledOp operator-(const ScaledOp& o) const;
  ScaledOp scale(const Poly& p) const;
  bool equals(const ScaledOp& o) const;  // cross-multiplied comparison
  bool is_polynomial() const;
  OpV reduced() const;  // throws logic_error when entries are not divisible
};

/// Exact quotient of a polynomial by a monomial; nullopt when not divisible.
std::optional<Poly> poly_div_mono(const Poly& p, const Mono& den);

/// Nil-Coxeter generators on words.  raise = delta_j^vee (01 -> 10 at
/// positions j, j+1 mod N), otherwise delta_j (10 -> 01).  Plain matrices;
/// the affine q-twist is delta_N^vee(q) = q^{-1} delta_N^vee and
/// delta_N(q) = q delta_N and is applied by the callers that need it.
OpV delta_op(VarSpace vs, int N, int w, int j, bool raise);

/// Braid matrix r^_j = 1 - (t_j - t_{j+1}) delta_j^vee, with the affine
/// entry r^_N(q) = 1 - (t_N - t_1) q^{-1} delta_N^vee when with_q is set.
ScaledOp braid_rhat(VarSpace vs, int N, int w, int j, bool with_q);

/// s_j acting on coefficient polynomials (t-convention, j = N affine).
std::vector<Poly> apply_s_coeffs(int j, const std::vector<Poly>& v);

/// bold_s_j = s_j r^_j on a coefficient vector over V_w.  For j = N the
/// result is returned multiplied by q^qpow_out to stay polynomial.
std::vector<Poly> apply_bold_s(VarSpace vs, int N, int w, int j, const std::vector<Poly>& v,
                               bool with_q, int* qpow_out);

enum class HeckeVariant { RhoT, RhoTVee, RhoTPrime };

/// Multi-parameter nil-Hecke generators; bar selects pi-bar = pi + 1,
/// q_twist applies the affine column twist at the wrap letter.
ScaledOp hecke_pi(VarSpace vs, int N, int w, int j, HeckeVariant variant, bool bar = false,
                  bool q_twist = false);

/// H_r (kind Vicious, anticlockwise words) or E_r (kind Osculating,
/// clockwise words) as sums of cyclic words in the nil-Hecke generators;
/// exact Poly entries, 0 <= r <= N-1.
OpV cyclic_word_transfer(VarSpace vs, int N, int n, int r, Kind kind);

/// Monodromy block coefficients A_r, B_r, C_r, D_r from the nil-Hecke
/// ordered sums.
struct YbaBlocks {
  OpV A, B, C, D;
};
YbaBlocks yba_blocks_from_hecke(VarSpace vs, int N, int w, int r);

/// (r^_j - s_j) Psi, cleared by q for j = N; zero iff Psi solves the qKZ
/// equation in direction j.
std::vector<Poly> qkz_residual(VarSpace vs, int N, int w, int j, const std::vector<Poly>& psi);

/// Defining relations of the nil-Hecke representation (squares, braids,
/// distant commutation, pi-bar squares, deformed upsilon relations).
IdentityReport verify_hecke_relations(HeckeVariant variant, int N);

/// Lemma-level braid matrix identities: id in {"rhat-quadratic",
/// "rhat-braid", "rhat-s-commutation", "bold-s-involution", "bold-s-braid",
/// "nil-TL"}.
IdentityReport verify_braid_identity(const std::string& id, int N);

}  // namespace sw
