#include "sw/walkers.hpp"

#include <functional>

namespace sw {

namespace {

// One column of the cylinder: propagate the frontier of horizontal edges.
// state[a] accumulates the weight of reaching west-edge pattern a; the column
// branches over the five allowed vertices row by row.
std::map<int, Poly> column_step(VarSpace vs, Kind kind, const std::vector<Poly>& xs, int col,
                                int top_bit, int bottom_bit, const std::map<int, Poly>& state) {
  const int rows = (int)xs.size();
  std::map<int, Poly> next;
  for (const auto& [a, weight] : state) {
    // walk rows: v = vertical bit entering row i (v0 = top_bit)
    std::function<void(int, int, int, const Poly&)> rec = [&](int i, int v, int bmask,
                                                              const Poly& acc) {
      if (i == rows) {
        if (v == bottom_bit) {
          auto it = next.find(bmask);
          if (it == next.end())
            next.emplace(bmask, acc);
          else {
            it->second += acc;
            if (it->second.is_zero()) next.erase(it);
          }
        }
        return;
      }
      int W = (a >> i) & 1;
      for (int E = 0; E < 2; ++E)
        for (int S = 0; S < 2; ++S) {
          Poly w = vertex_weight(kind, vs, xs[i], col, W, v, E, S);
          if (w.is_zero()) continue;
          rec(i + 1, S, bmask | (E << i), acc * w);
        }
    };
    rec(0, top_bit, 0, weight);
  }
  return next;
}

}  // namespace

Poly walker_Z(VarSpace vs, Kind kind, BoxShape shape, const BoxPartition& la,
              const BoxPartition& mu, const std::vector<Poly>& xs, const WalkerCaps& caps) {
  const int N = shape.N();
  const int rows = (kind == Kind::Vicious) ? shape.n : shape.k;
  if (N > caps.max_N || rows > caps.max_rows)
    throw std::invalid_argument("walker_Z: shape exceeds the configured caps");
  if ((int)xs.size() != rows) throw std::invalid_argument("walker_Z: one x per row");
  auto top = word_from_partition(mu).bits;
  auto bottom = word_from_partition(la).bits;
  Poly total = Poly::zero(vs);
  for (int seam = 0; seam < (1 << rows); ++seam) {
    // q-twist at column 1: weight q per path crossing the seam
    Poly w0 = Poly::one(vs);
    for (int i = 0; i < rows; ++i)
      if ((seam >> i) & 1) w0 *= Poly::q(vs);
    std::map<int, Poly> state{{seam, w0}};
    for (int j = 1; j <= N && !state.empty(); ++j)
      state = column_step(vs, kind, xs, j, top[j - 1], bottom[j - 1], state);
    auto it = state.find(seam);
    if (it != state.end()) total += it->second;
  }
  return total;
}

Poly walker_Ztilde(VarSpace vs, Kind kind, BoxShape shape, const BoxPartition& la,
                   const BoxPartition& mu, const std::vector<Poly>& xs, const WalkerCaps& caps) {
  // Z~ = prod_i x_i^bound Z(x^{-1}); on the monomial level the x-exponents
  // reverse, e_i -> bound - e_i, so only honest x-variables are accepted.
  const int bound = (kind == Kind::Vicious) ? shape.k : shape.n;
  std::vector<int> slots;
  for (const auto& x : xs) {
    if (x.term_count() != 1 || x.degree() != 1)
      throw std::invalid_argument("walker_Ztilde: xs must be plain spectral variables");
    const auto& m = x.terms().begin()->first;
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] == 1) slots.push_back((int)i);
  }
  Poly z = walker_Z(vs, kind, shape, la, mu, xs, caps);
  std::vector<std::pair<Mono, Int>> out;
  for (const auto& [mm, c] : z.terms()) {
    Mono m2 = mm;
    for (int s : slots) {
      if (m2[s] > bound) throw std::logic_error("walker_Ztilde: degree bound violated");
      m2[s] = static_cast<uint16_t>(bound - m2[s]);
    }
    out.emplace_back(m2, c);
  }
  return canonicalize(vs, out);
}

Poly walker_Ztilde_toric(VarSpace vs, BoxShape shape, const BoxPartition& la,
                         const BoxPartition& mu) {
  const int n = shape.n;
  if (vs.m < n) throw std::invalid_argument("walker_Ztilde_toric: need n spectral slots");
  if (n == 0) return Poly::one(vs);  // zero rows: Z is the identity on V_0
  Poly total = Poly::zero(vs);
  for (int d = 0; d <= n; ++d) {
    for (const auto& seq : toric_tableaux(la, d, mu, n)) {
      Poly term = Poly::one(vs);
      for (int e = 0; e < d; ++e) term *= Poly::q(vs);
      for (int j = 1; j <= n; ++j) {
        for (int c : strip_column_set(seq.loops[j], seq.loops[j - 1]))
          term *= Poly::x(vs, j) - Poly::t(vs, c);
      }
      total += term;
    }
  }
  return total;
}

Poly specialize_at_T(VarSpace vs, BoxShape shape, const BoxPartition& la, const BoxPartition& mu,
                     const BoxPartition& nu) {
  const int n = shape.n;
  if (vs.m < n) throw std::invalid_argument("specialize_at_T: need n spectral slots");
  std::vector<Poly> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(Poly::x(vs, i));
  Poly zt = walker_Ztilde(vs, Kind::Vicious, shape, la, mu, xs);
  std::map<int, Poly> sub;
  for (int i = 1; i <= n; ++i) sub[vs.x(i)] = Poly::T(vs, nu.part(i) + n + 1 - i);
  return zt.substitute(sub);
}

}  // namespace sw
