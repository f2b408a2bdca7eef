#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sw/grbasis.hpp"

using namespace sw;

TEST_CASE("word bijection: pinned examples") {
  BoxShape s(2, 2);
  CHECK(word_from_partition(BoxPartition(s, {2, 1})).str() == "0101");
  CHECK(word_from_partition(BoxPartition::empty(s)).str() == "1100");
  CHECK(word_from_partition(BoxPartition::full(s)).str() == "0011");
  BoxShape s35(3, 2);
  CHECK(word_from_partition(BoxPartition::full(s35)).str() == "00111");
}

TEST_CASE("word bijection: inverse on every partition, N <= 8") {
  for (int N = 1; N <= 8; ++N)
    for (int n = 0; n <= N; ++n) {
      BoxShape s(n, N - n);
      for (const auto& la : all_partitions(s)) {
        auto w = word_from_partition(la);
        CHECK(w.weight() == n);
        CHECK(partition_from_word(s, w) == la);
      }
    }
}

TEST_CASE("dualities") {
  BoxShape s(2, 2);
  BoxPartition la(s, {2, 1});
  CHECK(la.complement() == BoxPartition(s, {1, 0}));
  CHECK(la.conjugate() == BoxPartition(s, {2, 1}));
  CHECK(word_reverse(word_from_partition(la)).str() == "1010");
  // Involutions, and the word dictionary for this basis convention:
  // P <-> complement, Theta <-> conjugate, C <-> star.  (Checked against the
  // position formula l_i = la_{n+1-i} + i directly; Theta-conjugation of the
  // transfer matrices is verified on the operator level elsewhere.)
  for (int N = 2; N <= 7; ++N)
    for (int n = 0; n <= N; ++n) {
      BoxShape box(n, N - n);
      for (const auto& p : all_partitions(box)) {
        CHECK(p.complement().complement() == p);
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.star().star() == p);
        CHECK(word_reverse(word_from_partition(p)) == word_from_partition(p.complement()));
        CHECK(word_theta(word_from_partition(p)) == word_from_partition(p.conjugate()));
        CHECK(word_invert(word_from_partition(p)) == word_from_partition(p.star()));
      }
    }
}

TEST_CASE("cylindric skew cells and the box-count law") {
  BoxShape s(2, 2);
  auto sk0 = cylindric_skew(BoxPartition(s, {2, 1}), 0, BoxPartition(s, {2, 1}));
  CHECK(sk0.exists);
  CHECK(sk0.toric);
  CHECK(sk0.cells.empty());

  // (n,k)=(2,2), la=(1,0), mu=(2,1), d=1 -> two cells
  auto sk = cylindric_skew(BoxPartition(s, {1, 0}), 1, BoxPartition(s, {2, 1}));
  CHECK(sk.exists);
  CHECK(sk.cells.size() == 2);

  auto bad = cylindric_skew(BoxPartition(s, {1, 0}), 0, BoxPartition(s, {2, 1}));
  CHECK_FALSE(bad.exists);

  for (int N = 2; N <= 6; ++N)
    for (int n = 1; n < N; ++n) {
      BoxShape box(n, N - n);
      for (const auto& la : all_partitions(box))
        for (const auto& mu : all_partitions(box))
          for (int d = 0; d <= n; ++d) {
            auto skw = cylindric_skew(la, d, mu);
            if (skw.exists) CHECK((int)skw.cells.size() == la.size() - mu.size() + d * N);
          }
    }
}

TEST_CASE("horizontal strips at d = 0 from the empty partition") {
  BoxShape s(2, 2);
  auto strips = horizontal_strips(BoxPartition::empty(s), 0);
  std::vector<std::string> got;
  for (const auto& h : strips) got.push_back(h.lambda.str());
  CHECK(got == std::vector<std::string>{"0,0", "1,0", "2,0"});
}

TEST_CASE("strip column sets reproduce the worked Gr(2,4) weights") {
  // H~(x)|2,1>: the four strips and their J-sets, read off the q-expansion
  // of the worked H~_2 example (factors x - t_j, t_j = T_{N+1-j}).
  BoxShape s(2, 2);
  BoxPartition mu(s, {2, 1});
  auto d0 = horizontal_strips(mu, 0);
  auto d1 = horizontal_strips(mu, 1);
  auto find = [](const std::vector<HorizontalStrip>& v, const std::string& name) {
    for (const auto& h : v)
      if (h.lambda.str() == name) return h;
    REQUIRE(false);
    return v.front();
  };
  CHECK(find(d0, "2,2").J == std::vector<int>{1});        // (x - T4)
  CHECK(find(d0, "2,1").J == std::vector<int>{1, 3});     // (x - T4)(x - T2)
  CHECK(find(d1, "1,0").J == std::vector<int>{});         // q
  CHECK(find(d1, "0,0").J == std::vector<int>{3});        // q (x - T2)
  // no other d=1 strips exist over (2,1)
  CHECK(d1.size() == 2);
}

TEST_CASE("toric tableaux: counts and endpoint consistency") {
  BoxShape s(2, 2);
  // la = mu = empty, d = 0: the constant sequence only
  auto seqs0 = toric_tableaux(BoxPartition::empty(s), 0, BoxPartition::empty(s), 1);
  CHECK(seqs0.size() == 1);
  // Fig. gr24ex: two vicious path configurations for mu=(2,1) -> la=(2,2)
  auto seqs = toric_tableaux(BoxPartition(s, {2, 2}), 0, BoxPartition(s, {2, 1}), 2);
  CHECK(seqs.size() == 2);
}

TEST_CASE("N=7 example sequence from the lattice-configuration figure") {
  // mu=(4,3,0), la=(4,2,2), d=1, profile (d_1,d_2,d_3) = (0,1,1)
  BoxShape s(3, 4);
  BoxPartition mu(s, {4, 3, 0}), la(s, {4, 2, 2});
  auto seqs = toric_tableaux(la, 1, mu, 3);
  bool found = false;
  for (const auto& q : seqs) {
    // worked table: d-profile (0,0,1,1) with window entries
    // la^(1)[0] = (...,4,4,2,...) and la^(2)[1] = (...,5,4,3,...)
    if (q.loops[1].r == 0 && q.loops[2].r == 1 && q.loops[3].r == 1 &&
        q.loops[1].base == BoxPartition(s, {4, 4, 2}) && q.loops[2].entry(1) == 5 &&
        q.loops[2].entry(2) == 4 && q.loops[2].entry(3) == 3) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("loop sequences concatenate to the full skew") {
  BoxShape s(2, 3);
  for (const auto& la : all_partitions(s))
    for (const auto& mu : all_partitions(s))
      for (int d = 0; d <= 2; ++d) {
        auto full = cylindric_skew(la, d, mu);
        for (const auto& seq : toric_tableaux(la, d, mu, 2)) {
          // strip cells of the two steps must union to the skew cell count
          size_t total = 0;
          for (int step = 0; step < 2; ++step) {
            const auto& a = seq.loops[step];
            const auto& b = seq.loops[step + 1];
            int dd = b.r - a.r;
            auto sk = cylindric_skew(b.base, dd, a.base);
            CHECK(sk.exists);
            total += sk.cells.size();
          }
          REQUIRE(full.exists);
          CHECK(total == full.cells.size());
        }
      }
}
