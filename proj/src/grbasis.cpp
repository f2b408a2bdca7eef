#include "sw/grbasis.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sw {

BoxShape::BoxShape(int n_, int k_) : n(n_), k(k_) {
  if (n < 0 || k < 0 || n + k < 1) throw std::invalid_argument("BoxShape: need n,k >= 0, N >= 1");
}

BoxPartition::BoxPartition(BoxShape s, std::vector<int> p) : shape(s), parts(std::move(p)) {
  parts.resize(shape.n, 0);
  for (int i = 0; i < shape.n; ++i) {
    if (parts[i] < 0 || parts[i] > shape.k) throw std::invalid_argument("BoxPartition: part outside box");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("BoxPartition: not weakly decreasing");
  }
}

int BoxPartition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

int BoxPartition::part(int i) const {
  if (i < 1) throw std::out_of_range("BoxPartition::part");
  return i <= shape.n ? parts[i - 1] : 0;
}

bool BoxPartition::operator<(const BoxPartition& o) const {
  if (size() != o.size()) return size() < o.size();
  return parts < o.parts;
}

bool BoxPartition::contains(const BoxPartition& mu) const {
  for (int i = 0; i < shape.n; ++i)
    if (parts[i] < mu.part(i + 1)) return false;
  return true;
}

BoxPartition BoxPartition::conjugate() const {
  std::vector<int> cp(shape.k, 0);
  for (int j = 1; j <= shape.k; ++j)
    for (int p : parts)
      if (p >= j) ++cp[j - 1];
  return BoxPartition(shape.transposed(), cp);
}

BoxPartition BoxPartition::complement() const {
  std::vector<int> c(shape.n);
  for (int i = 0; i < shape.n; ++i) c[i] = shape.k - parts[shape.n - 1 - i];
  return BoxPartition(shape, c);
}

BoxPartition BoxPartition::star() const { return complement().conjugate(); }

std::string BoxPartition::str() const {
  std::ostringstream os;
  for (int i = 0; i < shape.n; ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  if (shape.n == 0) os << "";
  return os.str();
}

BoxPartition BoxPartition::parse(BoxShape s, const std::string& text) {
  std::vector<int> p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    p.push_back(std::stoi(item));
  }
  return BoxPartition(s, std::move(p));
}

int Word01::weight() const {
  int w = 0;
  for (int b : bits) w += b;
  return w;
}

std::string Word01::str() const {
  std::string s;
  for (int b : bits) s += char('0' + b);
  return s;
}

Word01 word_from_partition(const BoxPartition& la) {
  const int n = la.shape.n, N = la.shape.N();
  Word01 w;
  w.bits.assign(N, 0);
  for (int i = 1; i <= n; ++i) {
    int l = la.part(n + 1 - i) + i;  // position of the i-th one-letter
    w.bits[l - 1] = 1;
  }
  return w;
}

BoxPartition partition_from_word(BoxShape s, const Word01& w) {
  if ((int)w.bits.size() != s.N()) throw std::invalid_argument("partition_from_word: length");
  if (w.weight() != s.n) throw std::invalid_argument("partition_from_word: weight mismatch");
  std::vector<int> ls;
  for (int j = 1; j <= s.N(); ++j)
    if (w.bits[j - 1]) ls.push_back(j);
  std::vector<int> parts(s.n, 0);
  for (int i = 1; i <= s.n; ++i) parts[s.n - i] = ls[i - 1] - i;  // lambda_{n+1-i} = l_i - i
  return BoxPartition(s, parts);
}

Word01 word_reverse(const Word01& w) {
  Word01 r = w;
  std::reverse(r.bits.begin(), r.bits.end());
  return r;
}

Word01 word_invert(const Word01& w) {
  Word01 r = w;
  for (int& b : r.bits) b = 1 - b;
  return r;
}

Word01 word_theta(const Word01& w) { return word_invert(word_reverse(w)); }

std::vector<BoxPartition> all_partitions(BoxShape s) {
  std::vector<BoxPartition> out;
  std::vector<int> cur(s.n, 0);
  std::function<void(int, int)> rec = [&](int i, int maxp) {
    if (i == s.n) {
      out.emplace_back(s, cur);
      return;
    }
    for (int p = 0; p <= maxp; ++p) {
      cur[i] = p;
      rec(i + 1, p);
    }
    cur[i] = 0;
  };
  if (s.n == 0) {
    out.emplace_back(s, std::vector<int>{});
  } else {
    rec(0, s.k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long CylindricLoop::entry(long long i) const {
  const int n = base.shape.n, k = base.shape.k;
  if (n == 0) return r;  // degenerate box
  // write i - r = a*n + b with 1 <= b <= n
  long long ir = i - r;
  long long a = (ir - 1 >= 0) ? (ir - 1) / n : -(((-(ir - 1)) + n - 1) / n);
  long long b = ir - a * n;
  return base.parts[(size_t)(b - 1)] - a * k + r;
}

CylindricSkew cylindric_skew(const BoxPartition& la, int d, const BoxPartition& mu) {
  if (!(la.shape == mu.shape)) throw std::invalid_argument("cylindric_skew: shape mismatch");
  CylindricSkew sk;
  sk.outer = la;
  sk.inner = mu;
  sk.d = d;
  const int n = la.shape.n, k = la.shape.k;
  CylindricLoop lo(la, d), mo(mu, 0);
  sk.exists = true;
  for (int i = 1; i <= n; ++i)
    if (lo.entry(i) < mo.entry(i)) sk.exists = false;
  if (!sk.exists) return sk;
  sk.toric = true;
  for (int i = 1; i <= n; ++i) {
    long long hi = lo.entry(i), lojj = mo.entry(i);
    if (hi - lojj > k) sk.toric = false;
    for (long long j = lojj + 1; j <= hi; ++j) sk.cells.emplace_back(i, (int)j);
  }
  return sk;
}

bool is_cylindric_horizontal_strip(const BoxPartition& la, int d, const BoxPartition& mu) {
  const int n = la.shape.n;
  CylindricLoop lo(la, d), mo(mu, 0);
  for (int i = 0; i <= n; ++i) {
    if (i >= 1 && lo.entry(i) < mo.entry(i)) return false;  // containment
    if (lo.entry(i + 1) > mo.entry(i)) return false;        // strip condition, cyclic via i = 0
  }
  return true;
}

std::vector<int> strip_column_set(const CylindricLoop& outer, const CylindricLoop& inner) {
  const int n = outer.base.shape.n, N = outer.base.shape.N();
  // Walker path i occupies the cyclic interval of lattice columns
  // [inner_i + n + 1 - i, outer_i + n + 1 - i]; J is the complement in 1..N.
  std::vector<bool> touched(N + 1, false);
  for (int i = 1; i <= n; ++i) {
    long long lo = inner.entry(i) + n + 1 - i;
    long long hi = outer.entry(i) + n + 1 - i;
    for (long long c = lo; c <= hi; ++c) {
      long long cc = ((c - 1) % N + N) % N + 1;
      touched[(size_t)cc] = true;
    }
  }
  std::vector<int> J;
  for (int c = 1; c <= N; ++c)
    if (!touched[c]) J.push_back(c);
  return J;
}

std::vector<HorizontalStrip> horizontal_strips(const BoxPartition& mu, int d) {
  if (d != 0 && d != 1) throw std::invalid_argument("horizontal_strips: d in {0,1}");
  std::vector<HorizontalStrip> out;
  for (const auto& la : all_partitions(mu.shape)) {
    if (!is_cylindric_horizontal_strip(la, d, mu)) continue;
    HorizontalStrip hs;
    hs.lambda = la;
    hs.d = d;
    hs.J = strip_column_set(CylindricLoop(la, d), CylindricLoop(mu, 0));
    out.push_back(std::move(hs));
  }
  return out;
}

std::vector<LoopSequence> toric_tableaux(const BoxPartition& la, int d, const BoxPartition& mu,
                                         int rows) {
  if (rows < 1) throw std::invalid_argument("toric_tableaux: rows >= 1");
  std::vector<LoopSequence> out;
  LoopSequence cur;
  cur.loops.push_back(CylindricLoop(mu, 0));
  std::function<void(int)> rec = [&](int step) {
    const CylindricLoop prev = cur.loops.back();  // copy: push_back below reallocates
    if (step == rows) {
      if (prev.base == la && prev.r == d) out.push_back(cur);
      return;
    }
    for (int dd = 0; dd <= 1; ++dd) {
      int r2 = prev.r + dd;
      if (r2 > d) continue;
      for (const auto& nu : all_partitions(mu.shape)) {
        // strip between nu[r2] and prev.base[prev.r] == shifted base strip
        if (!is_cylindric_horizontal_strip(nu, dd, prev.base)) continue;
        cur.loops.push_back(CylindricLoop(nu, r2));
        rec(step + 1);
        cur.loops.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

}  // namespace sw
