#include "sw/qhring.hpp"

#include "sw/nilhecke.hpp"

#include <functional>
#include <sstream>

namespace sw {

namespace {

Poly elementary_window(VarSpace vs, int deg, int m) {
  // e_deg(t_1, ..., t_m)
  if (deg < 0) return Poly::zero(vs);
  std::vector<Poly> e((size_t)deg + 1, Poly::zero(vs));
  e[0] = Poly::one(vs);
  for (int i = 1; i <= m; ++i)
    for (int s = deg; s >= 1; --s) e[s] += e[s - 1] * Poly::t(vs, i);
  return e[deg];
}

// coefficient det(e_{la_i - mu_j - i + j}(t_1..t_{n + la_i - i}))_{n x n}
Poly facS_coefficient(VarSpace vs, const BoxPartition& la, const BoxPartition& mu) {
  const int n = la.shape.n;
  if (n == 0) return Poly::one(vs);
  std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, Poly::zero(vs)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      M[i - 1][j - 1] =
          elementary_window(vs, la.part(i) - mu.part(j) - i + j, std::max(n + la.part(i) - i, 0));
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Poly det = Poly::zero(vs);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    Poly term = Poly::one(vs);
    for (int i = 0; i < n; ++i) term *= M[i][perm[i]];
    det = (inv % 2 == 0) ? det + term : det - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

OpV schubert_operator(VarSpace vs, BoxShape shape, const BoxPartition& la, SchubertRoute route) {
  const int N = shape.N(), n = shape.n, k = shape.k;
  switch (route) {
    case SchubertRoute::FacsExpansion: {
      auto Es = transfer_via_trace(Kind::Osculating, vs, N, n);
      auto S_of = [&](const BoxPartition& mu) {
        // S_mu = det(E_{mu'_i - i + j})_{k x k}
        if (k == 0) return OpV::identity(vs, N, n);
        auto muc = mu.conjugate();
        std::vector<std::vector<OpV>> M(k, std::vector<OpV>(k));
        for (int i = 1; i <= k; ++i)
          for (int j = 1; j <= k; ++j) {
            int r = muc.part(i) - i + j;
            M[i - 1][j - 1] = (r < 0 || r > N) ? OpV(vs, N, n, n) : Es[r];
          }
        return op_det(M);
      };
      OpV acc(vs, N, n, n);
      for (const auto& mu : all_partitions(shape)) {
        if (!la.contains(mu)) continue;
        Poly c = facS_coefficient(vs, la, mu);
        if (((la.size() - mu.size()) % 2)) c = -c;
        acc = acc + S_of(mu).scale(c);
      }
      return acc;
    }
    case SchubertRoute::JacobiTrudi: {
      if (n == 0) return OpV::identity(vs, N, n);
      std::vector<std::vector<OpV>> M(n, std::vector<OpV>(n));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          int r = la.part(i) - i + j;
          M[i - 1][j - 1] =
              (r < 0 || r > k) ? OpV(vs, N, n, n) : factorial_coeff(vs, Kind::Vicious, shape, r, j - 1);
        }
      return op_det(M);
    }
    case SchubertRoute::NaegelsbachKostka: {
      if (k == 0) return OpV::identity(vs, N, n);
      auto lac = la.conjugate();
      std::vector<std::vector<OpV>> M(k, std::vector<OpV>(k));
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
          int r = lac.part(i) - i + j;
          M[i - 1][j - 1] =
              (r < 0 || r > n) ? OpV(vs, N, n, n)
                               : factorial_coeff(vs, Kind::Osculating, shape, r, j - 1);
        }
      return op_det(M);
    }
  }
  throw std::logic_error("schubert_operator: bad route");
}

Poly gw(VarSpace vs, const GWKey& key, GWRoute route) {
  const BoxShape shape = key.la.shape;
  if (!key.degree_consistent()) return Poly::zero(vs);
  switch (route) {
    case GWRoute::Operator: {
      OpV S = schubert_operator(vs, shape, key.la);
      const auto& b = weight_basis(shape.N(), shape.n);
      Poly full = S.entry(b.index_of(key.nu), b.index_of(key.mu));
      return full.coeff_q(key.d);
    }
    case GWRoute::DetCramer: {
      // forward substitution through the vanishing-theorem triangular system
      // Z~_{nu,mu}(T_rho | t) = sum_{rho' <= rho} x_{rho'} s_{rho'}(T_rho | T),
      // x_rho = sum_d q^d C^{nu,d}_{mu rho^vee}; the answer is x_{la^vee}.
      BoxPartition target = key.la.complement();
      std::vector<BoxPartition> chain;
      for (const auto& rho : all_partitions(shape))
        if (target.contains(rho)) chain.push_back(rho);
      // all_partitions is (|.|, lex)-sorted: a containment-compatible order
      ASequence aT = ASequence::T_seq(vs);
      std::map<std::string, Poly> solved;
      Poly answer = Poly::zero(vs);
      for (const auto& rho : chain) {
        Poly rhs = specialize_at_T(vs, shape, key.nu, key.mu, rho);
        for (const auto& rho2 : chain) {
          if (rho2 == rho || !rho.contains(rho2)) continue;
          // s_{rho2}(T_rho | T)
          std::vector<Poly> pt;
          for (int i = 1; i <= shape.n; ++i)
            pt.push_back(Poly::T(vs, rho.part(i) + shape.n + 1 - i));
          rhs -= solved.at(rho2.str()) * facschur(rho2.parts, pt, aT);
        }
        Poly diag = vanishing_diagonal(rho.parts, shape.n, aT);
        Poly x = rhs.is_zero() ? rhs : rhs.divide_exact(diag);
        solved[rho.str()] = x;
        if (rho == target) answer = x;
      }
      return answer.coeff_q(key.d);
    }
  }
  throw std::logic_error("gw: bad route");
}

std::map<BoxPartition, Poly> product_expansion(VarSpace vs, BoxShape shape,
                                               const BoxPartition& la, const BoxPartition& mu) {
  OpV S = schubert_operator(vs, shape, la);
  const auto& b = weight_basis(shape.N(), shape.n);
  std::map<BoxPartition, Poly> out;
  int c = b.index_of(mu);
  for (const auto& [r, p] : S.column(c)) out[b.part(r)] = p;
  return out;
}

std::map<BoxPartition, Poly> detcramer_column(VarSpace vs, BoxShape shape, const BoxPartition& nu,
                                              const BoxPartition& mu) {
  // forward substitution through Z~_{nu,mu}(T_rho|t) = sum_{rho' <= rho}
  // x_{rho'} s_{rho'}(T_rho|T); keyed by la = rho^vee on output
  ASequence aT = ASequence::T_seq(vs);
  const int n = shape.n;
  if (vs.m < n) throw std::invalid_argument("detcramer_column: need n spectral slots");
  std::vector<Poly> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(Poly::x(vs, i));
  Poly zt = walker_Ztilde(vs, Kind::Vicious, shape, nu, mu, xs);
  auto chain = all_partitions(shape);  // (|.|, lex): containment-compatible
  std::map<std::string, Poly> solved;
  std::map<BoxPartition, Poly> out;
  for (const auto& rho : chain) {
    std::map<int, Poly> sub;
    std::vector<Poly> pt;
    for (int i = 1; i <= n; ++i) {
      pt.push_back(Poly::T(vs, rho.part(i) + n + 1 - i));
      sub[vs.x(i)] = pt.back();
    }
    Poly rhs = zt.substitute(sub);
    for (const auto& rho2 : chain) {
      if (rho2 == rho || !rho.contains(rho2)) continue;
      rhs -= solved.at(rho2.str()) * facschur(rho2.parts, pt, aT);
    }
    Poly diag = vanishing_diagonal(rho.parts, n, aT);
    Poly x = rhs.is_zero() ? rhs : rhs.divide_exact(diag);
    solved[rho.str()] = x;
    out[rho.complement()] = x;
  }
  return out;
}

std::string GWTable::key(const BoxPartition& la, const BoxPartition& mu, const BoxPartition& nu) {
  return la.str() + "|" + mu.str() + "|" + nu.str();
}

GWTable build_table(VarSpace vs, BoxShape shape, SchubertRoute route, bool cross_validate) {
  GWTable t;
  t.shape = shape;
  const auto& b = weight_basis(shape.N(), shape.n);
  std::string routename = route == SchubertRoute::FacsExpansion    ? "facs-expansion"
                          : route == SchubertRoute::JacobiTrudi    ? "jacobi-trudi"
                                                                   : "naegelsbach-kostka";
  for (const auto& la : all_partitions(shape)) {
    OpV S = schubert_operator(vs, shape, la, route);
    std::string prov = routename;
    if (cross_validate) {
      auto second = (route == SchubertRoute::NaegelsbachKostka) ? SchubertRoute::JacobiTrudi
                                                                : SchubertRoute::NaegelsbachKostka;
      if (!(schubert_operator(vs, shape, la, second) == S))
        throw std::logic_error("build_table: route disagreement at la = " + la.str());
      prov = routename + (second == SchubertRoute::JacobiTrudi ? ",jacobi-trudi"
                                                               : ",naegelsbach-kostka");
    }
    for (int c = 0; c < b.dim(); ++c)
      for (const auto& [r, p] : S.column(c)) {
        t.entries[GWTable::key(la, b.part(c), b.part(r))] = p;
        t.provenance[GWTable::key(la, b.part(c), b.part(r))] = prov;
      }
  }
  return t;
}

IdentityReport table_dualities(VarSpace vs, const GWTable& table) {
  const BoxShape shape = table.shape;
  const int N = shape.N();
  std::string params = "shape " + std::to_string(shape.n) + "," + std::to_string(N);
  auto lookup = [&](const GWTable& tb, const BoxPartition& la, const BoxPartition& mu,
                    const BoxPartition& nu) {
    auto it = tb.entries.find(GWTable::key(la, mu, nu));
    return it == tb.entries.end() ? Poly::zero(vs) : it->second;
  };
  // homogeneity + symmetry + unit
  for (const auto& la : all_partitions(shape))
    for (const auto& mu : all_partitions(shape))
      for (const auto& nu : all_partitions(shape)) {
        Poly v = lookup(table, la, mu, nu);
        for (int d = 0; d * N <= 2 * shape.n * shape.k; ++d) {
          Poly c = v.coeff_q(d);
          if (c.is_zero()) continue;
          int deg = la.size() + mu.size() - nu.size() - d * N;
          if (deg < 0 || !c.homogeneous_T(deg))
            return IdentityReport::fail("table-dualities", params,
                                        "homogeneity fails at " + GWTable::key(la, mu, nu));
        }
        if (!(v == lookup(table, mu, la, nu)))
          return IdentityReport::fail("table-dualities", params,
                                      "symmetry fails at " + GWTable::key(la, mu, nu));
      }
  for (const auto& la : all_partitions(shape)) {
    for (const auto& nu : all_partitions(shape)) {
      Poly v = lookup(table, la, BoxPartition::empty(shape), nu);
      Poly want = (nu == la) ? Poly::one(vs) : Poly::zero(vs);
      if (!(v == want))
        return IdentityReport::fail("table-dualities", params, "unit fails at la=" + la.str());
    }
  }
  // level-rank: C^{nu,d}_{la mu}(T) = C^{nu',d}_{la' mu'}(-t)
  GWTable dual = build_table(vs, shape.transposed());
  std::map<int, Poly> sub;  // T_i -> -T_{N+1-i}
  for (int i = 1; i <= N; ++i) sub[vs.T(i)] = -Poly::T(vs, N + 1 - i);
  for (const auto& la : all_partitions(shape))
    for (const auto& mu : all_partitions(shape))
      for (const auto& nu : all_partitions(shape)) {
        Poly lhs = lookup(table, la, mu, nu);
        Poly rhs = lookup(dual, la.conjugate(), mu.conjugate(), nu.conjugate()).substitute(sub);
        if (!(lhs == rhs))
          return IdentityReport::fail("table-dualities", params,
                                      "level-rank fails at " + GWTable::key(la, mu, nu));
      }
  return IdentityReport::ok("table-dualities", params);
}

std::map<BoxPartition, Poly> kostka(VarSpace vs, BoxShape shape, const std::vector<int>& alpha,
                                    const BoxPartition& mu, Kind kind) {
  const int N = shape.N(), n = shape.n;
  const int bound = (kind == Kind::Vicious) ? shape.k : shape.n;
  OpV acc = OpV::identity(vs, N, n);
  for (int a : alpha) {
    if (a < 0 || a > bound) {
      acc = OpV(vs, N, n, n);
      break;
    }
    acc = factorial_coeff(vs, kind, shape, a, 0) * acc;
  }
  const auto& b = weight_basis(N, n);
  std::map<BoxPartition, Poly> out;
  int c = b.index_of(mu);
  for (const auto& [r, p] : acc.column(c)) out[b.part(r)] = p;
  return out;
}

std::map<BoxPartition, Poly> toric_schur(VarSpace vs, BoxShape shape, const BoxPartition& la,
                                         int d, const BoxPartition& mu) {
  // s_{la/d/mu}(x|t) = sum_nu C^{la^vee,d}_{mu^vee nu^vee}(t) s_nu(x|t)
  // coefficient of s_nu is C^{la^vee,d}_{mu^vee nu^vee}(t) = the q^d part of
  // <la^vee| S~_{mu^vee} |nu^vee>, with T relabeled to t
  std::map<int, Poly> to_t;  // T_i -> t_i = T_{N+1-i}
  const int N = shape.N();
  for (int i = 1; i <= N; ++i) to_t[vs.T(i)] = Poly::T(vs, N + 1 - i);
  std::map<BoxPartition, Poly> out;
  OpV S = schubert_operator(vs, shape, mu.complement());
  const auto& b = weight_basis(N, shape.n);
  for (const auto& nu : all_partitions(shape)) {
    GWKey key{mu.complement(), nu.complement(), la.complement(), d};
    if (!key.degree_consistent()) continue;
    Poly c = S.entry(b.index_of(la.complement()), b.index_of(nu.complement())).coeff_q(d);
    if (!c.is_zero()) out[nu] = c.substitute(to_t);
  }
  return out;
}

IdentityReport leibniz_check(VarSpace vs, BoxShape shape, const BoxPartition& la,
                             const BoxPartition& mu, int j) {
  const int N = shape.N(), n = shape.n;
  std::string params = "la=" + la.str() + " mu=" + mu.str() + " j=" + std::to_string(j);
  // precondition: every (facS) coefficient of S~_la is s_j-invariant
  for (const auto& nu : all_partitions(shape)) {
    if (!la.contains(nu)) continue;
    Poly c = facS_coefficient(vs, la, nu);
    if (!(c.swap_vars(j, VarFamily::TRev) == c))
      return IdentityReport::fail("quantum-leibniz", params,
                                  "precondition not met: coefficient at nu=" + nu.str() +
                                      " is not s_j-invariant");
  }
  OpV S = schubert_operator(vs, shape, la);
  const auto& b = weight_basis(N, n);
  OpV dv = delta_op(vs, N, n, j, /*raise=*/true);
  std::vector<Poly> prod(b.dim(), Poly::zero(vs));
  {
    auto col = S.column(b.index_of(mu));
    for (const auto& [r, p] : col) prod[r] = p;
  }
  // lhs = delta_j^vee (la (*) mu)
  std::vector<Poly> lhs = dv.apply(prod);
  // rhs = s_j(la (*) delta_j^vee mu) + [q if j=N] partial_j(la (*) mu)
  std::vector<Poly> e(b.dim(), Poly::zero(vs));
  e[b.index_of(mu)] = Poly::one(vs);
  auto dmu = dv.apply(e);
  std::vector<Poly> t1 = S.apply(dmu);
  for (auto& p : t1) p = p.swap_vars(j, VarFamily::TRev);
  Poly qfac = (j == N) ? Poly::q(vs) : Poly::one(vs);
  for (int i = 0; i < b.dim(); ++i)
    t1[i] += qfac * prod[i].divided_difference(j, VarFamily::TRev);
  for (int i = 0; i < b.dim(); ++i)
    if (lhs[i] != t1[i])
      return IdentityReport::fail("quantum-leibniz", params,
                                  "mismatch at basis element " + b.part(i).str());
  return IdentityReport::ok("quantum-leibniz", params);
}

IdentityReport gk_relations_check(VarSpace vs, BoxShape shape) {
  const int N = shape.N(), n = shape.n;
  std::string params = "shape " + std::to_string(n) + "," + std::to_string(N);
  auto Hs = transfer_via_trace(Kind::Vicious, vs, N, n);
  auto Es = transfer_via_trace(Kind::Osculating, vs, N, n);
  for (int r = 0; r <= N; ++r) {
    OpV acc(vs, N, n, n);
    for (int i = 0; i <= r; ++i) {
      if (i > N || r - i > N) continue;
      OpV term = Es[i] * Hs[r - i];
      if (i % 2) term = -term;
      acc = acc + term;
    }
    // expected: (-1)^r e_r(T) Id for r < N; at r = N add (-1)^n q Id
    Poly want = elementary_window(vs, r, N);
    if (r % 2) want = -want;
    if (r == N) want += ((n % 2) ? -Poly::q(vs) : Poly::q(vs));
    if (!(acc == OpV::identity(vs, N, n).scale(want)))
      return IdentityReport::fail("gk-relations", params, "fails at degree " + std::to_string(r));
  }
  return IdentityReport::ok("gk-relations", params);
}

IdentityReport nc_cauchy_check(VarSpace vs, BoxShape shape) {
  const int N = shape.N(), n = shape.n;
  std::string params = "shape " + std::to_string(n) + "," + std::to_string(N);
  if (vs.m < n) throw std::invalid_argument("nc_cauchy_check: need n spectral slots");
  const auto& b = weight_basis(N, n);
  // LHS: Z~ matrix elements from the walker DP; RHS: sum_la s_{la^vee}(x|T) <.|S~_la|.>
  std::vector<Poly> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(Poly::x(vs, i));
  ASequence aT = ASequence::T_seq(vs);
  std::map<std::string, OpV> Sops;
  OpV rhs(vs, N, n, n);
  for (const auto& la : all_partitions(shape)) {
    OpV S = schubert_operator(vs, shape, la);
    rhs = rhs + S.scale(facschur(la.complement().parts, xs, aT));
  }
  for (int c = 0; c < b.dim(); ++c)
    for (int r = 0; r < b.dim(); ++r) {
      Poly lhs = walker_Ztilde(vs, Kind::Vicious, shape, b.part(r), b.part(c), xs);
      if (!(lhs == rhs.entry(r, c)))
        return IdentityReport::fail(
            "nc-cauchy", params,
            "mismatch at <" + b.part(r).str() + "| . |" + b.part(c).str() + ">");
    }
  return IdentityReport::ok("nc-cauchy", params);
}

}  // namespace sw
