#pragma once

#include <map>
#include <string>

#include "sw/facschur.hpp"
#include "sw/transfer.hpp"
#include "sw/walkers.hpp"

namespace sw {

enum class SchubertRoute { FacsExpansion, JacobiTrudi, NaegelsbachKostka };

/// The Schubert-class operator S~_la on V_n; all routes agree exactly.
OpV schubert_operator(VarSpace vs, BoxShape shape, const BoxPartition& la,
                      SchubertRoute route = SchubertRoute::JacobiTrudi);

/// Gromov-Witten key (la, mu, nu, d).  The coefficient is homogeneous in T
/// of degree |la| + |mu| - |nu| - dN and vanishes when that degree is
/// negative (or d < 0).
struct GWKey {
  BoxPartition la, mu, nu;
  int d = 0;
  int t_degree() const { return la.size() + mu.size() - nu.size() - d * la.shape.N(); }
  bool degree_consistent() const { return d >= 0 && t_degree() >= 0; }
};

enum class GWRoute { Operator, DetCramer };

/// Exact C^{nu,d}_{la,mu}(T), by the operator route (matrix element of
/// S~_la) or the vanishing-theorem triangular solve seeded by the walker
/// partition function specializations.
Poly gw(VarSpace vs, const GWKey& key, GWRoute route = GWRoute::Operator);

/// Quantum product |la> (*) |mu> = S~_la |mu>: map nu -> full coefficient
/// (a polynomial in T and q).
std::map<BoxPartition, Poly> product_expansion(VarSpace vs, BoxShape shape,
                                               const BoxPartition& la, const BoxPartition& mu);

/// The whole det-cramer triangular solve for one (nu, mu) pair: returns
/// la -> sum_d q^d C^{nu,d}_{la mu}, i.e. the full column of matrix elements
/// <nu| S~_la |mu> recovered from walker specializations alone.
std::map<BoxPartition, Poly> detcramer_column(VarSpace vs, BoxShape shape, const BoxPartition& nu,
                                              const BoxPartition& mu);

/// Complete structure-constant table for a shape.
struct GWTable {
  BoxShape shape;
  // (la, mu, nu) -> full polynomial sum_d q^d C^{nu,d}_{la mu}(T)
  std::map<std::string, Poly> entries;
  std::map<std::string, std::string> provenance;
  static std::string key(const BoxPartition& la, const BoxPartition& mu, const BoxPartition& nu);
};

/// cross_validate additionally rebuilds every operator by the
/// Naegelsbach-Kostka route, requires exact agreement, and records both
/// routes in the provenance.
GWTable build_table(VarSpace vs, BoxShape shape, SchubertRoute route = SchubertRoute::JacobiTrudi,
                    bool cross_validate = false);

/// Table-level audits: degree homogeneity, (la, mu) symmetry, unit column,
/// level-rank against the transposed-shape table.
IdentityReport table_dualities(VarSpace vs, const GWTable& table);

/// Equivariant quantum Kostka numbers: <la| H~_alpha |mu> as a q-polynomial
/// per la; the conjugate route via E~ must match.
std::map<BoxPartition, Poly> kostka(VarSpace vs, BoxShape shape, const std::vector<int>& alpha,
                                    const BoxPartition& mu, Kind kind = Kind::Vicious);

/// Toric Schur expansion: s_{la/d/mu}(x|t) = sum_nu C^{la^vee,d}_{mu^vee nu^vee}(t) s_nu(x|t);
/// returns nu -> coefficient (in the t-substituted variables).
std::map<BoxPartition, Poly> toric_schur(VarSpace vs, BoxShape shape, const BoxPartition& la,
                                         int d, const BoxPartition& mu);

/// Leibniz rule for quantum multiplication (preconditioned on the
/// s_j-invariance of the (facS) coefficients of S~_la).
IdentityReport leibniz_check(VarSpace vs, BoxShape shape, const BoxPartition& la,
                             const BoxPartition& mu, int j);

/// Givental-Kim ideal relations as exact matrix identities on V_n.
IdentityReport gk_relations_check(VarSpace vs, BoxShape shape);

/// Noncommutative Cauchy identity: Z~_n = sum_la s_{la^vee}(x|T) (x) S~_la.
IdentityReport nc_cauchy_check(VarSpace vs, BoxShape shape);

}  // namespace sw
