#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sw/transfer.hpp"

using namespace sw;

namespace {

// x^bound * T(x^{-1}) assembled from the traced transfer coefficients
OpV reversed_from_trace(VarSpace vs, Kind kind, BoxShape shape, const Poly& x) {
  const int N = shape.N(), n = shape.n;
  const int bound = (kind == Kind::Vicious) ? shape.k : shape.n;
  auto ops = transfer_via_trace(kind, vs, N, n);
  OpV acc(vs, N, n, n);
  for (int r = bound; r >= 0; --r) {
    Poly pw = Poly::one(vs);
    for (int e = 0; e < bound - r; ++e) pw *= x;
    acc = acc + ops[r].map_entries([&](const Poly& p) { return p * pw; });
  }
  return acc;
}

}  // namespace

TEST_CASE("combinatorial transfer equals the traced route (the central check)") {
  for (int N = 2; N <= 5; ++N) {
    VarSpace vs(N, 2);
    Poly x = Poly::x(vs, 2);  // keep slot 1 free for factorial extraction
    for (int n = 0; n <= N; ++n) {
      BoxShape shape(n, N - n);
      INFO("N=", N, " n=", n);
      CHECK(comb_transfer_op(vs, Kind::Vicious, shape, x) ==
            reversed_from_trace(vs, Kind::Vicious, shape, x));
      CHECK(comb_transfer_op(vs, Kind::Osculating, shape, x) ==
            reversed_from_trace(vs, Kind::Osculating, shape, x));
    }
  }
}

TEST_CASE("worked H~_2 action on |2,1> at Gr(2,4)") {
  VarSpace vs(4, 1);
  BoxShape shape(2, 2);
  const auto& b = weight_basis(4, 2);
  OpV H2t = factorial_coeff(vs, Kind::Vicious, shape, 2, 0);
  int c = b.index_of(BoxPartition(shape, {2, 1}));
  Poly T1 = Poly::T(vs, 1), T2 = Poly::T(vs, 2), T4 = Poly::T(vs, 4), q = Poly::q(vs);
  CHECK(H2t.entry(b.index_of(BoxPartition(shape, {2, 2})), c) == T1 - T4);
  CHECK(H2t.entry(c, c) == (T1 - T2) * (T1 - T4));
  CHECK(H2t.entry(b.index_of(BoxPartition(shape, {1, 0})), c) == q);
  CHECK(H2t.entry(b.index_of(BoxPartition(shape, {0, 0})), c) == q * (T1 - T2));
  int nonzero = 0;
  for (int r = 0; r < b.dim(); ++r)
    if (!H2t.entry(r, c).is_zero()) ++nonzero;
  CHECK(nonzero == 4);
}

TEST_CASE("factorial coefficients: display formulas at Gr(2,4)") {
  VarSpace vs(4, 1);
  BoxShape shape(2, 2);
  auto Hs = transfer_via_trace(Kind::Vicious, vs, 4, 2);
  Poly T1 = Poly::T(vs, 1);
  OpV H1t = factorial_coeff(vs, Kind::Vicious, shape, 1, 0);
  OpV rhs1 = Hs[1] + OpV::identity(vs, 4, 2).scale(T1 + Poly::T(vs, 2));
  CHECK(H1t == rhs1);
  OpV H2t = factorial_coeff(vs, Kind::Vicious, shape, 2, 0);
  OpV rhs2 = Hs[2] + Hs[1].scale(T1) + OpV::identity(vs, 4, 2).scale(T1 * T1);
  CHECK(H2t == rhs2);
}

TEST_CASE("acting on the empty partition: rows and columns") {
  for (int N : {4, 5}) {
    VarSpace vs(N, 1);
    for (int n = 1; n <= N - 1; ++n) {
      BoxShape shape(n, N - n);
      const auto& b = weight_basis(N, n);
      int cEmpty = b.index_of(BoxPartition::empty(shape));
      for (int r = 0; r <= shape.k; ++r) {
        OpV Ht = factorial_coeff(vs, Kind::Vicious, shape, r, 0);
        int target = b.index_of(BoxPartition(shape, {r}));
        for (int rr = 0; rr < b.dim(); ++rr) {
          Poly want = (rr == target) ? Poly::one(vs) : Poly::zero(vs);
          CHECK(Ht.entry(rr, cEmpty) == want);
        }
      }
      for (int r = 0; r <= shape.n; ++r) {
        OpV Et = factorial_coeff(vs, Kind::Osculating, shape, r, 0);
        int target = b.index_of(BoxPartition(shape, std::vector<int>(r, 1)));
        for (int rr = 0; rr < b.dim(); ++rr) {
          Poly want = (rr == target) ? Poly::one(vs) : Poly::zero(vs);
          CHECK(Et.entry(rr, cEmpty) == want);
        }
      }
    }
  }
}

TEST_CASE("triangular transforms round-trip against the paper formulas") {
  for (int N : {3, 4}) {
    VarSpace vs(N, 1);
    for (int n = 1; n <= N - 1; ++n) {
      BoxShape shape(n, N - n);
      auto Hs = transfer_via_trace(Kind::Vicious, vs, N, n);
      auto Es = transfer_via_trace(Kind::Osculating, vs, N, n);
      std::vector<OpV> Hfac, Efac;
      for (int r = 0; r <= shape.k; ++r)
        Hfac.push_back(factorial_coeff(vs, Kind::Vicious, shape, r, 0));
      for (int r = 0; r <= shape.n; ++r)
        Efac.push_back(factorial_coeff(vs, Kind::Osculating, shape, r, 0));
      for (int r = 0; r <= shape.k; ++r) {
        INFO("H case N=", N, " n=", n, " r=", r);
        CHECK(plain_from_factorial(vs, Kind::Vicious, shape, r, Hfac) == Hs[r]);
        CHECK(factorial_from_plain(vs, Kind::Vicious, shape, r, Hs) == Hfac[r]);
      }
      for (int r = 0; r <= shape.n; ++r) {
        INFO("E case N=", N, " n=", n, " r=", r);
        CHECK(plain_from_factorial(vs, Kind::Osculating, shape, r, Efac) == Es[r]);
        CHECK(factorial_from_plain(vs, Kind::Osculating, shape, r, Es) == Efac[r]);
      }
    }
  }
}

TEST_CASE("Pieri-Chevalley closed form agrees with H~_1 everywhere (N <= 5)") {
  for (int N = 2; N <= 5; ++N) {
    VarSpace vs(N, 1);
    for (int n = 1; n <= N - 1; ++n) {
      BoxShape shape(n, N - n);
      const auto& b = weight_basis(N, n);
      OpV H1t = factorial_coeff(vs, Kind::Vicious, shape, 1, 0);
      for (int c = 0; c < b.dim(); ++c) {
        auto expansion = pieri_chevalley(vs, b.part(c));
        OpV col(vs, N, n, n);
        for (const auto& [mu, coeff] : expansion) col.add(b.index_of(mu), c, coeff);
        for (int r = 0; r < b.dim(); ++r) {
          INFO("N=", N, " n=", n, " la=", b.part(c).str());
          CHECK(H1t.entry(r, c) == col.entry(r, c));
        }
      }
    }
  }
}

TEST_CASE("Pieri edge cases") {
  VarSpace vs(4, 0);
  BoxShape shape(2, 2);
  auto full = pieri_chevalley(vs, BoxPartition::full(shape));
  bool has_q = false, has_box = false;
  for (const auto& [mu, c] : full) {
    if (c.degree_var(vs.q()) == 1) {
      has_q = true;
      CHECK(mu == BoxPartition(shape, {1, 0}));
    }
    if (mu.size() == 5) has_box = true;
  }
  CHECK(has_q);
  CHECK_FALSE(has_box);
  auto empty = pieri_chevalley(vs, BoxPartition::empty(shape));
  CHECK(empty.size() == 1);
  CHECK(empty[0].first == BoxPartition(shape, {1, 0}));
}

TEST_CASE("x-degree bounds of the transfer matrices") {
  VarSpace vs(5, 1);
  Poly x = Poly::x(vs, 1);
  for (int n = 0; n <= 5; ++n) {
    OpV H = transfer_op(Kind::Vicious, vs, x, 5, n);
    OpV E = transfer_op(Kind::Osculating, vs, x, 5, n);
    for (int c = 0; c < H.cols(); ++c) {
      for (const auto& [r, p] : H.column(c)) CHECK(p.degree_var(vs.x(1)) <= 5 - n);
      for (const auto& [r, p] : E.column(c)) CHECK(p.degree_var(vs.x(1)) <= n);
    }
  }
}

TEST_CASE("Jacobi-Trudi operator determinants agree (both routes)") {
  for (int N : {3, 4}) {
    VarSpace vs(N, 1);
    for (int n = 1; n <= N - 1; ++n) {
      BoxShape shape(n, N - n);
      for (const auto& la : all_partitions(shape)) {
        auto lap = la.parts;
        auto lac = la.conjugate().parts;
        const int l = shape.n, k = shape.k;
        std::vector<std::vector<OpV>> MH(l, std::vector<OpV>(l)), ME(k, std::vector<OpV>(k));
        auto hfac = [&](int r, int shift) {
          if (r < 0 || r > shape.k) return OpV(vs, N, n, n);
          return factorial_coeff(vs, Kind::Vicious, shape, r, shift);
        };
        auto efac = [&](int r, int shift) {
          if (r < 0 || r > shape.n) return OpV(vs, N, n, n);
          return factorial_coeff(vs, Kind::Osculating, shape, r, shift);
        };
        for (int i = 1; i <= l; ++i)
          for (int j = 1; j <= l; ++j) MH[i - 1][j - 1] = hfac(lap[i - 1] - i + j, j - 1);
        for (int i = 1; i <= k; ++i)
          for (int j = 1; j <= k; ++j)
            ME[i - 1][j - 1] = efac((i <= (int)lac.size() ? lac[i - 1] : 0) - i + j, j - 1);
        INFO("N=", N, " n=", n, " la=", la.str());
        CHECK(op_det(MH) == op_det(ME));
      }
    }
  }
}
