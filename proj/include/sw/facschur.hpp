#pragma once

#include <vector>

#include "sw/poly.hpp"
#include "sw/report.hpp"

namespace sw {

/// Doubly-infinite shift sequence with finite support: a_i = window[i-1+shift]
/// inside the stored window and 0 elsewhere.  tau shifts left: (tau a)_i =
/// a_{i+1}.
struct ASequence {
  VarSpace vs;
  std::vector<Poly> window;
  int shift = 0;  // at(i) reads window[i + shift - 1]

  explicit ASequence(VarSpace v) : vs(v) {}
  Poly at(long long i) const {
    long long idx = i + shift;
    if (idx < 1 || idx > (long long)window.size()) return Poly::zero(vs);
    return window[(size_t)(idx - 1)];
  }
  ASequence shifted(int s) const {
    ASequence r = *this;
    r.shift += s;
    return r;
  }
  ASequence negated() const {
    ASequence r = *this;
    for (auto& p : r.window) p = -p;
    return r;
  }
  static ASequence t_seq(VarSpace vs) {
    ASequence a(vs);
    for (int j = 1; j <= vs.N; ++j) a.window.push_back(Poly::t(vs, j));
    return a;
  }
  static ASequence T_seq(VarSpace vs) {
    ASequence a(vs);
    for (int i = 1; i <= vs.N; ++i) a.window.push_back(Poly::T(vs, i));
    return a;
  }
  static ASequence zeros(VarSpace vs) { return ASequence(vs); }
};

/// Numeric counterpart for the Bethe-side evaluations.
struct NumSequence {
  std::vector<Complex> window;
  int shift = 0;
  Complex at(long long i) const {
    long long idx = i + shift;
    if (idx < 1 || idx > (long long)window.size()) return Complex(0.0, 0.0);
    return window[(size_t)(idx - 1)];
  }
  NumSequence shifted(int s) const {
    NumSequence r = *this;
    r.shift += s;
    return r;
  }
  NumSequence negated() const {
    NumSequence r = *this;
    for (auto& c : r.window) c = -c;
    return r;
  }
};

enum class SchurMethod { Tableau, DetRatio, JacobiTrudi, OrdinaryExpansion };

/// Factorial Schur polynomial s_la(x | a).  All methods agree; Tableau is the
/// defining sum over semistandard tableaux and serves as the oracle.
Poly facschur(const std::vector<int>& la, const std::vector<Poly>& xs, const ASequence& a,
              SchurMethod method = SchurMethod::Tableau);

Complex facschur_num(const std::vector<int>& la, const std::vector<Complex>& xs,
                     const NumSequence& a, SchurMethod method = SchurMethod::Tableau);

/// One-row / one-column cases h_r = s_(r), e_r = s_(1^r).
Poly fac_h(int r, const std::vector<Poly>& xs, const ASequence& a);
Poly fac_e(int r, const std::vector<Poly>& xs, const ASequence& a);
Complex fac_h_num(int r, const std::vector<Complex>& xs, const NumSequence& a);
Complex fac_e_num(int r, const std::vector<Complex>& xs, const NumSequence& a);

/// s_la evaluated at the point a_mu = (a_{mu_1+n}, ..., a_{mu_n+1}).
Poly vanishing_value(const std::vector<int>& la, const std::vector<int>& mu, int n,
                     const ASequence& a);
/// The hook-type product the vanishing theorem predicts on the diagonal.
Poly vanishing_diagonal(const std::vector<int>& la, int n, const ASequence& a);

/// id in {"cauchy", "braid-fac-schur"}; exact checks at small sizes.
IdentityReport facschur_identity_check(const std::string& id);

}  // namespace sw
