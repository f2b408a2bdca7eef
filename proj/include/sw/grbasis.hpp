#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sw {

/// The n x k bounding box for Gr(n, N), k = N - n.
struct BoxShape {
  int n = 0;
  int k = 0;
  BoxShape() = default;
  BoxShape(int n_, int k_);
  int N() const { return n + k; }
  BoxShape transposed() const { return BoxShape(k, n); }
  bool operator==(const BoxShape& o) const { return n == o.n && k == o.k; }
};

/// Partition inside a box, kept as exactly n weakly decreasing parts
/// (trailing zeros included).
struct BoxPartition {
  BoxShape shape;
  std::vector<int> parts;  // size shape.n

  BoxPartition() = default;
  BoxPartition(BoxShape s, std::vector<int> p);
  static BoxPartition empty(BoxShape s) { return BoxPartition(s, {}); }
  static BoxPartition full(BoxShape s) { return BoxPartition(s, std::vector<int>(s.n, s.k)); }

  int size() const;                  // |lambda|
  int part(int i) const;             // 1-based, 0 beyond n
  bool operator==(const BoxPartition& o) const { return shape == o.shape && parts == o.parts; }
  bool operator<(const BoxPartition& o) const;  // (|.|, lex) — a containment-compatible total order
  bool contains(const BoxPartition& mu) const;  // mu subseteq lambda

  BoxPartition conjugate() const;    // lambda' in the transposed box
  BoxPartition complement() const;   // lambda^vee = (k - lambda_n, ..., k - lambda_1)
  BoxPartition star() const;         // lambda* = (lambda^vee)'

  std::string str() const;           // "2,1"
  static BoxPartition parse(BoxShape s, const std::string& text);
};

/// 01-word of length N with n one-letters; ones sit at l_i = lambda_{n+1-i} + i.
struct Word01 {
  std::vector<int> bits;
  int weight() const;
  std::string str() const;
  bool operator==(const Word01& o) const { return bits == o.bits; }
};

Word01 word_from_partition(const BoxPartition& la);
BoxPartition partition_from_word(BoxShape s, const Word01& w);

Word01 word_reverse(const Word01& w);           // parity map P
Word01 word_invert(const Word01& w);            // charge map C
Word01 word_theta(const Word01& w);             // Theta = P C

/// All partitions in the box, sorted by the canonical (|.|, lex) order.
std::vector<BoxPartition> all_partitions(BoxShape s);

/// Cylindric loop lambda[r]: entries lambda[r]_i for all i, with the
/// periodicity lambda[r]_{i+n} = lambda[r]_i - k.
struct CylindricLoop {
  BoxPartition base;
  int r = 0;
  CylindricLoop() = default;
  CylindricLoop(BoxPartition b, int r_) : base(std::move(b)), r(r_) {}
  long long entry(long long i) const;
};

/// Skew region between lambda[d] and mu[0], cells taken in the fundamental
/// window rows 1..n.
struct CylindricSkew {
  BoxPartition outer, inner;
  int d = 0;
  bool exists = false;                       // containment lambda[d] >= mu[0]
  bool toric = false;                        // every row has <= k cells
  std::vector<std::pair<int, int>> cells;    // (row, col) with 1 <= row <= n
};

CylindricSkew cylindric_skew(const BoxPartition& la, int d, const BoxPartition& mu);

/// True if lambda[d]/mu[0] is a cylindric horizontal strip: containment plus
/// lambda[d]_{i+1} <= mu[0]_i for all i (checked cyclically).
bool is_cylindric_horizontal_strip(const BoxPartition& la, int d, const BoxPartition& mu);

/// A horizontal strip lambda[d]/mu[0] together with its column set
/// J = lattice columns (diagonals j - i + n, taken mod N into 1..N) left
/// untouched by the walker paths; |J| = k - #cells.
struct HorizontalStrip {
  BoxPartition lambda;
  int d = 0;
  std::vector<int> J;  // sorted, values in 1..N
};

/// All lambda with lambda[d]/mu[0] a cylindric horizontal strip, d in {0,1}.
std::vector<HorizontalStrip> horizontal_strips(const BoxPartition& mu, int d);

/// The J-set of an arbitrary strip pair (both loops at explicit shifts).
std::vector<int> strip_column_set(const CylindricLoop& outer, const CylindricLoop& inner);

/// Sequence of loops mu[0] = la^(0)[0], la^(1)[d_1], ..., la^(l)[d] with
/// horizontal-strip quotients; bijective with toric tableaux of shape
/// lambda/d/mu and entries <= l.
struct LoopSequence {
  std::vector<CylindricLoop> loops;  // l + 1 entries
};

std::vector<LoopSequence> toric_tableaux(const BoxPartition& la, int d, const BoxPartition& mu,
                                         int rows);

}  // namespace sw
