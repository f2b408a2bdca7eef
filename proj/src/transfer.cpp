#include "sw/transfer.hpp"

#include <functional>
#include <mutex>
#include <tuple>

namespace sw {

std::vector<CombTerm> apply_H_comb(VarSpace vs, const BoxPartition& mu, const Poly& x) {
  std::vector<CombTerm> out;
  for (int d = 0; d <= 1; ++d)
    for (const auto& hs : horizontal_strips(mu, d)) {
      CombTerm t;
      t.lambda = hs.lambda;
      t.d = d;
      t.coeff = Poly::one(vs);
      for (int c : hs.J) t.coeff *= x - Poly::t(vs, c);
      if (d == 1) t.coeff *= Poly::q(vs);
      out.push_back(std::move(t));
    }
  return out;
}

std::vector<CombTerm> apply_E_comb(VarSpace vs, const BoxPartition& mu, const Poly& x) {
  // level-rank mirror: strips of the conjugate pair in the (k, n) box,
  // factors (x + T_j)
  std::vector<CombTerm> out;
  BoxPartition muc = mu.conjugate();
  for (int d = 0; d <= 1; ++d)
    for (const auto& hs : horizontal_strips(muc, d)) {
      CombTerm t;
      t.lambda = hs.lambda.conjugate();
      t.d = d;
      t.coeff = Poly::one(vs);
      for (int c : hs.J) t.coeff *= x + Poly::T(vs, c);
      if (d == 1) t.coeff *= Poly::q(vs);
      out.push_back(std::move(t));
    }
  return out;
}

OpV comb_transfer_op(VarSpace vs, Kind kind, BoxShape shape, const Poly& x) {
  const int N = shape.N(), n = shape.n;
  OpV op(vs, N, n, n);
  const auto& b = weight_basis(N, n);
  for (int c = 0; c < b.dim(); ++c) {
    auto terms = (kind == Kind::Vicious) ? apply_H_comb(vs, b.part(c), x)
                                         : apply_E_comb(vs, b.part(c), x);
    for (const auto& t : terms) op.add(b.index_of(t.lambda), c, t.coeff);
  }
  // Degenerate weights carry a pathless wrap loop with weight q and no strip
  // counterpart: H on V_0 and E on V_N.
  if ((kind == Kind::Vicious && n == 0) || (kind == Kind::Osculating && n == N))
    op.add(0, 0, Poly::q(vs));
  return op;
}

namespace {

// Shifted factorial power as a polynomial in x: (x | tau^shift A)^p where A
// is the T-window (kind Vicious) or the negated t-window (kind Osculating).
Poly shifted_facpow(VarSpace vs, Kind kind, int shift, int p, const Poly& x) {
  Poly r = Poly::one(vs);
  for (int i = 1; i <= p; ++i) {
    int idx = shift + i;
    Poly a = Poly::zero(vs);
    if (idx >= 1 && idx <= vs.N)
      a = (kind == Kind::Vicious) ? Poly::T(vs, idx) : -Poly::t(vs, idx);
    r *= x - a;
  }
  return r;
}

}  // namespace

OpV factorial_coeff(VarSpace vs, Kind kind, BoxShape shape, int r, int shift) {
  const int bound = (kind == Kind::Vicious) ? shape.k : shape.n;
  if (r < 0 || r > bound) throw std::invalid_argument("factorial_coeff: r out of range");
  if (vs.m < 1) throw std::invalid_argument("factorial_coeff: need a spectral slot");

  // Heavily re-used by the operator determinants; cache the whole family
  // per (space, kind, shape, shift).
  using Key = std::tuple<int, int, int, int, int, int>;
  static std::mutex mu;
  static std::map<Key, std::vector<OpV>> cache;
  Key key{vs.N, vs.m, (int)kind, shape.n, shape.k, shift};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.at(r);
  }

  const int xv = vs.x(1);
  OpV tilde = comb_transfer_op(vs, kind, shape, Poly::x(vs, 1));
  // x-coefficient operators C_s, s = 0..bound
  std::vector<OpV> C;
  for (int s = 0; s <= bound; ++s)
    C.push_back(tilde.map_entries([&](const Poly& p) { return p.coeff_var(xv, s); }));
  // solve  tilde(x) = sum_r B_{bound-r}(x) Op_r  with monic B_p of degree p
  std::vector<std::vector<Poly>> bcoef(bound + 1);  // bcoef[p][s] = [x^s] B_p
  for (int p = 0; p <= bound; ++p) {
    Poly B = shifted_facpow(vs, kind, shift, p, Poly::x(vs, 1));
    for (int s = 0; s <= p; ++s) bcoef[p].push_back(B.coeff_var(xv, s));
  }
  std::vector<OpV> ops;
  for (int rr = 0; rr <= bound; ++rr) {
    OpV val = C[bound - rr];
    for (int rp = 0; rp < rr; ++rp)
      val = val - ops[rp].scale(bcoef[bound - rp][bound - rr]);
    ops.push_back(val);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(ops));
  return it->second.at(r);
}

OpV plain_from_factorial(VarSpace vs, Kind kind, BoxShape shape, int r,
                         const std::vector<OpV>& fac) {
  const int N = shape.N(), n = shape.n, k = shape.k;
  OpV acc(vs, N, n, n);
  if (kind == Kind::Vicious) {
    // H_r = sum_j (-1)^j e_j(T_1..T_{k-r+j}) H~_{r-j,n}
    for (int j = 0; j <= r; ++j) {
      std::vector<Poly> window;
      for (int i = 1; i <= k - r + j; ++i) window.push_back(Poly::T(vs, i));
      Poly e = Poly::zero(vs);
      {
        std::vector<Poly> ee((size_t)j + 1, Poly::zero(vs));
        ee[0] = Poly::one(vs);
        for (const auto& v : window)
          for (int s = j; s >= 1; --s) ee[s] += ee[s - 1] * v;
        e = ee[j];
      }
      if (j % 2) e = -e;
      acc = acc + fac.at(r - j).scale(e);
    }
  } else {
    // E_r = sum_j e_j(t_1..t_{n-r+j}) E~_{r-j,n}
    for (int j = 0; j <= r; ++j) {
      std::vector<Poly> window;
      for (int i = 1; i <= n - r + j; ++i) window.push_back(Poly::t(vs, i));
      std::vector<Poly> ee((size_t)j + 1, Poly::zero(vs));
      ee[0] = Poly::one(vs);
      for (const auto& v : window)
        for (int s = j; s >= 1; --s) ee[s] += ee[s - 1] * v;
      acc = acc + fac.at(r - j).scale(ee[j]);
    }
  }
  return acc;
}

OpV factorial_from_plain(VarSpace vs, Kind kind, BoxShape shape, int r,
                         const std::vector<OpV>& plain) {
  const int N = shape.N(), n = shape.n, k = shape.k;
  OpV acc(vs, N, n, n);
  auto elem = [&](int deg, int m, bool tfam) {  // e_deg over the first m params
    if (deg < 0) return Poly::zero(vs);
    std::vector<Poly> ee((size_t)std::max(deg, 0) + 1, Poly::zero(vs));
    ee[0] = Poly::one(vs);
    for (int i = 1; i <= m; ++i) {
      Poly v = tfam ? Poly::t(vs, i) : Poly::T(vs, i);
      for (int s = deg; s >= 1; --s) ee[s] += ee[s - 1] * v;
    }
    return ee[deg];
  };
  for (int j = 0; j <= r; ++j) {
    // det(e_{1-a+b}(window_{..b}))_{1<=a,b<=j}
    Poly det = Poly::one(vs);
    if (j > 0) {
      std::vector<std::vector<Poly>> M(j, std::vector<Poly>(j, Poly::zero(vs)));
      for (int a = 1; a <= j; ++a)
        for (int b = 1; b <= j; ++b) {
          int m = (kind == Kind::Vicious) ? (k - r + b) : (n - r + b);
          M[a - 1][b - 1] = elem(1 - a + b, std::max(m, 0), kind != Kind::Vicious);
        }
      // Leibniz
      std::vector<int> perm(j);
      for (int i = 0; i < j; ++i) perm[i] = i;
      det = Poly::zero(vs);
      do {
        int inv = 0;
        for (int a = 0; a < j; ++a)
          for (int b = a + 1; b < j; ++b)
            if (perm[a] > perm[b]) ++inv;
        Poly term = Poly::one(vs);
        for (int a = 0; a < j; ++a) term *= M[a][perm[a]];
        det = (inv % 2 == 0) ? det + term : det - term;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (kind == Kind::Osculating && (j % 2)) det = -det;
    acc = acc + plain.at(r - j).scale(det);
  }
  return acc;
}

std::optional<BoxPartition> remove_rim_hook(const BoxPartition& la) {
  const int n = la.shape.n, k = la.shape.k;
  if (n == 0 || la.part(1) != k) return std::nullopt;
  std::vector<int> parts;
  for (int i = 2; i <= n; ++i) {
    if (la.part(i) < 1) return std::nullopt;  // ribbon disconnects
    parts.push_back(la.part(i) - 1);
  }
  parts.push_back(0);
  return BoxPartition(la.shape, parts);
}

std::vector<std::pair<BoxPartition, Poly>> pieri_chevalley(VarSpace vs, const BoxPartition& la) {
  const int n = la.shape.n, k = la.shape.k, N = la.shape.N();
  std::vector<std::pair<BoxPartition, Poly>> out;
  // addable boxes
  for (int i = 1; i <= n; ++i) {
    if (la.part(i) >= k) continue;
    if (i > 1 && la.part(i) + 1 > la.part(i - 1)) continue;
    auto parts = la.parts;
    parts[i - 1] += 1;
    out.emplace_back(BoxPartition(la.shape, parts), Poly::one(vs));
  }
  // diagonal coefficient sum_i T_{k+i-la_i} - sum_{j>k} T_j
  Poly diag = Poly::zero(vs);
  for (int i = 1; i <= n; ++i) diag += Poly::T(vs, k + i - la.part(i));
  for (int j = k + 1; j <= N; ++j) diag -= Poly::T(vs, j);
  if (!diag.is_zero()) out.emplace_back(la, diag);
  if (auto lam = remove_rim_hook(la)) out.emplace_back(*lam, Poly::q(vs));
  return out;
}

OpV op_det(const std::vector<std::vector<OpV>>& M) {
  const int l = (int)M.size();
  if (l == 0) throw std::invalid_argument("op_det: empty matrix");
  VarSpace vs = M[0][0].space();
  int N = M[0][0].N(), w = M[0][0].row_weight();
  // Laplace over column subsets: f[row][subset] built bottom-up
  std::map<uint32_t, OpV> cur;
  cur[0] = OpV::identity(vs, N, w);
  for (int row = 0; row < l; ++row) {
    std::map<uint32_t, OpV> next;
    for (const auto& [mask, op] : cur) {
      for (int c = 0; c < l; ++c) {
        if (mask & (1u << c)) continue;
        int used_before = 0;
        for (int cc = 0; cc < c; ++cc)
          if (mask & (1u << cc)) ++used_before;
        // inversions added by assigning this row to column c
        int parity = (row - used_before) % 2;
        OpV term = M[row][c] * op;
        if (parity) term = -term;
        uint32_t m2 = mask | (1u << c);
        auto it = next.find(m2);
        if (it == next.end())
          next.emplace(m2, term);
        else
          it->second = it->second + term;
      }
    }
    cur = std::move(next);
  }
  return cur.begin()->second;
}

}  // namespace sw
