#pragma once

#include <map>

#include "sw/facschur.hpp"
#include "sw/lattice.hpp"

namespace sw {

/// Numeric instance of the Bethe module: distinct complex t-values, a
/// quantum parameter, and the N labeled roots of
/// p(y) = prod_j (y - t_j) + (-1)^n q, continued from y_j(0) = t_j.
struct BetheContext {
  int N = 0, n = 0;
  std::vector<Complex> ts;     // t_1..t_N
  Complex q{0.0, 0.0};
  std::vector<Complex> roots;  // y_1..y_N, homotopy-labeled

  std::vector<Complex> tuple(const BoxPartition& alpha) const;  // y_alpha
  Complex euler(const BoxPartition& alpha) const;               // e^(y_alpha)
  NumSequence t_window() const;                                 // a_i = t_i
  NumSequence T_window() const;                                 // a_i = T_i
  /// Values of every variable of vs at this instance (x-slots get xval).
  std::vector<Complex> var_values(VarSpace vs, Complex xval = Complex(0, 0)) const;
};

struct BetheTolerances {
  double residual = 1e-10;
  double orthogonality = 1e-9;
  double spectral = 1e-9;
};

/// Companion-matrix roots with nearest-neighbor continuation in <= steps
/// q-increments.  Throws runtime_error on root collision along the path.
BetheContext solve_bae(int N, int n, const std::vector<Complex>& ts, Complex q, int steps = 64);

/// Max |p(y_i)| over the labeled roots, relative to the coefficient scale.
double bae_residual(const BetheContext& ctx);

/// Coefficients s_{la^vee}(y_alpha | T) of the on-shell Bethe vector in the
/// canonical partition basis of V_n.
std::vector<Complex> bethe_vector(const BetheContext& ctx, const BoxPartition& alpha);

struct SpectralReport {
  std::map<std::string, double> residuals;
  std::map<std::string, double> tolerances;
  bool pass() const {
    for (const auto& [k, v] : residuals)
      if (!(v <= tolerances.at(k))) return false;
    return true;
  }
};

/// Eigenvalue equations (specH/specE, facHspec/facEspec), orthogonality,
/// resolution of the identity, dual-root and fusion (M2') identities.
SpectralReport spectral_checks(const BetheContext& ctx,
                               const BetheTolerances& tol = BetheTolerances{});

/// Residue formula: sum_alpha s_la s_mu s_{nu^vee} / e^ over the root tuples.
Complex residue_gw(const BetheContext& ctx, const BoxPartition& la, const BoxPartition& mu,
                   const BoxPartition& nu);

/// GKM conditions, Bethe-vector permutation under bold_s, qKZ residuals, the
/// S~ eigenvalue law and the idempotent law.  schubert_ops are the exact
/// operators in canonical partition order (one per la), evaluated here.
SpectralReport gkm_check(const BetheContext& ctx, VarSpace vs,
                         const std::vector<OpV>& schubert_ops,
                         const BetheTolerances& tol = BetheTolerances{});

/// Classical (q = 0) GKM conditions as exact polynomial identities.
IdentityReport gkm_classical_check(int N, int n);

}  // namespace sw
