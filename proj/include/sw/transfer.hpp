#pragma once

#include "sw/grbasis.hpp"
#include "sw/lattice.hpp"

namespace sw {

/// One term of the combinatorial transfer-matrix expansion: coefficient of
/// |lambda> q^d in H~(x)|mu> (or E~(x)|mu>).
struct CombTerm {
  BoxPartition lambda;
  int d = 0;
  Poly coeff;  // product over the strip's column set, q-power included
};

/// (combH): H~(x)|mu> = sum_{d=0,1} q^d sum_strips prod_{j in J}(x - t_j) |la>.
std::vector<CombTerm> apply_H_comb(VarSpace vs, const BoxPartition& mu, const Poly& x);
/// (combE): mirror via conjugate partitions, factors (x + T_j).
std::vector<CombTerm> apply_E_comb(VarSpace vs, const BoxPartition& mu, const Poly& x);

/// The reversed transfer matrix H~(x) = x^k H(x^{-1})|V_n (kind Vicious) or
/// E~(x) = x^n E(x^{-1})|V_n (kind Osculating), built from the strips.
OpV comb_transfer_op(VarSpace vs, Kind kind, BoxShape shape, const Poly& x);

/// tau^shift-shifted factorial coefficient operator H~_{r,n} / E~_{r,n}:
/// coefficient of (x | tau^shift T)^{k-r} (resp. (x | -tau^shift t)^{n-r}).
OpV factorial_coeff(VarSpace vs, Kind kind, BoxShape shape, int r, int shift);

/// Paper-form triangular transforms, used to cross-check factorial_coeff:
/// plain H_r from the H~ family and back ((H2facH)/(facH2H), (E2facE)/(facE2E)).
OpV plain_from_factorial(VarSpace vs, Kind kind, BoxShape shape, int r,
                         const std::vector<OpV>& fac);
OpV factorial_from_plain(VarSpace vs, Kind kind, BoxShape shape, int r,
                         const std::vector<OpV>& plain);

/// Equivariant quantum Pieri-Chevalley rule: the expansion of H~_1 |la>.
std::vector<std::pair<BoxPartition, Poly>> pieri_chevalley(VarSpace vs, const BoxPartition& la);

/// Partner partition for the q-term: remove a boundary rim hook of length
/// N-1; nullopt when impossible.
std::optional<BoxPartition> remove_rim_hook(const BoxPartition& la);

/// Determinant of a square matrix of pairwise commuting operators on V_n,
/// expanded by Laplace over column subsets.
OpV op_det(const std::vector<std::vector<OpV>>& M);

}  // namespace sw
