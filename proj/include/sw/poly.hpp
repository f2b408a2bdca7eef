#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sw {

using Int = mpz_class;
using Complex = std::complex<double>;

/// Variable layout shared by all polynomials of one computation.
///
/// The ring is Z[T_1,...,T_N, q, x_1,...,x_m] with the fixed total order
/// T_1 < ... < T_N < q < x_1 < ... < x_m.  The "reversed" equivariant
/// parameters t_j = T_{N+1-j} are a view onto the same variables, never a
/// second set; every t-indexed accessor translates internally.
struct VarSpace {
  int N = 0;  // number of equivariant parameters
  int m = 0;  // number of spectral variables

  VarSpace() = default;
  VarSpace(int N_, int m_) : N(N_), m(m_) {
    if (N < 1 || m < 0) throw std::invalid_argument("VarSpace: need N >= 1, m >= 0");
  }

  int vars() const { return N + 1 + m; }
  int T(int i) const {
    check(i >= 1 && i <= N, "T index");
    return i - 1;
  }
  int t(int j) const {  // t_j = T_{N+1-j}
    check(j >= 1 && j <= N, "t index");
    return N - j;
  }
  int q() const { return N; }
  int x(int i) const {
    check(i >= 1 && i <= m, "x index");
    return N + 1 + (i - 1);
  }
  bool operator==(const VarSpace& o) const { return N == o.N && m == o.m; }

 private:
  static void check(bool ok, const char* what) {
    if (!ok) throw std::out_of_range(std::string("VarSpace: ") + what + " out of range");
  }
};

/// Exponent vector, densely indexed by the VarSpace order.
using Mono = std::vector<uint16_t>;

int mono_degree(const Mono& m);

/// Graded-lex term order used for the canonical form: higher total degree
/// first, ties broken lexicographically on the exponent vector.
struct MonoCmp {
  bool operator()(const Mono& a, const Mono& b) const;
};

enum class VarFamily { TRev /*t-convention*/, TDirect, X };

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients.  Canonical form: no zero coefficients, unique term map.
/// Immutable in spirit; all operations return new values.
class Poly {
 public:
  Poly() = default;
  explicit Poly(VarSpace vs) : vs_(vs) {}
  Poly(VarSpace vs, const Int& c);  // constant

  static Poly zero(VarSpace vs) { return Poly(vs); }
  static Poly one(VarSpace vs) { return Poly(vs, 1); }
  static Poly var(VarSpace vs, int idx, int exp = 1);
  static Poly T(VarSpace vs, int i) { return var(vs, vs.T(i)); }
  static Poly t(VarSpace vs, int j) { return var(vs, vs.t(j)); }
  static Poly q(VarSpace vs) { return var(vs, vs.q()); }
  static Poly x(VarSpace vs, int i) { return var(vs, vs.x(i)); }

  const VarSpace& space() const { return vs_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Int, MonoCmp>& terms() const { return terms_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator*(const Int& c) const;
  friend Poly operator*(const Int& c, const Poly& p) { return p * c; }

  /// Exchange two variables (by raw index).
  Poly swap_raw(int a, int b) const;
  /// Simple reflection on a variable family; j = N in the equivariant
  /// families is the level-0 affine reflection t_N <-> t_1.
  Poly swap_vars(int j, VarFamily fam) const;
  /// Apply a permutation of all variables: idx -> perm[idx].
  Poly permute_vars(const std::vector<int>& perm) const;

  /// Divided difference (p - s_j p)/(v_j - v_{j+1}) on the chosen family;
  /// j = N supported for the equivariant families via the affine s_N.
  Poly divided_difference(int j, VarFamily fam) const;

  /// Exact quotient p / (v_a - v_b).  Throws logic_error if the division
  /// leaves a remainder: that signals a bug, not bad user input.
  Poly divide_exact_linear(int a, int b) const;

  /// Exact quotient by an arbitrary nonzero polynomial; remainder must be
  /// zero.  Leading-term division w.r.t. the canonical term order.
  Poly divide_exact(const Poly& d) const;

  /// Simultaneous substitution variable -> polynomial, then canonicalize.
  Poly substitute(const std::map<int, Poly>& assign) const;

  /// Full numeric evaluation; vals must cover every variable.
  Complex eval(const std::vector<Complex>& vals) const;

  int degree() const;                  // total degree, -1 for 0
  int degree_var(int idx) const;       // degree in one variable
  /// Coefficient of q^d, with q removed from the exponent.
  Poly coeff_q(int d) const;
  /// Coefficient of x_i^e (exponent removed).
  Poly coeff_var(int idx, int e) const;
  /// True if every term has total T-degree d.
  bool homogeneous_T(int d) const;

  std::string str() const;
  static Poly parse(VarSpace vs, const std::string& s);

 private:
  VarSpace vs_;
  std::map<Mono, Int, MonoCmp> terms_;

  void add_term(const Mono& m, const Int& c);
  void require_same_space(const Poly& o) const;
};

/// Like-term merge of a raw list; the constructor-facing canonicalizer.
Poly canonicalize(VarSpace vs, const std::vector<std::pair<Mono, Int>>& raw);

}  // namespace sw
