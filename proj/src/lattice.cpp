#include "sw/lattice.hpp"

#include <functional>
#include <mutex>
#include <sstream>

namespace sw {

// ---------------------------------------------------------------------------
// Weight bases

WeightBasis::WeightBasis(int N, int w) : N_(N), w_(w) {
  if (w < 0 || w > N) throw std::invalid_argument("WeightBasis: weight out of range");
  BoxShape box(w, N - w);
  parts_ = all_partitions(box);
  for (int i = 0; i < (int)parts_.size(); ++i) {
    words_.push_back(word_from_partition(parts_[i]));
    by_bits_[words_.back().bits] = i;
  }
}

int WeightBasis::index_of(const BoxPartition& la) const {
  return index_of_bits(word_from_partition(la).bits);
}

int WeightBasis::index_of_bits(const std::vector<int>& bits) const {
  auto it = by_bits_.find(bits);
  if (it == by_bits_.end()) throw std::out_of_range("WeightBasis: unknown basis word");
  return it->second;
}

const WeightBasis& weight_basis(int N, int w) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<WeightBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(N, w);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<WeightBasis>(N, w)).first;
  return *it->second;
}

// ---------------------------------------------------------------------------
// OpV

OpV::OpV(VarSpace vs, int N, int row_w, int col_w) : vs_(vs), N_(N), row_w_(row_w), col_w_(col_w) {
  rows_ = weight_basis(N, row_w).dim();
  cols_data_.resize(weight_basis(N, col_w).dim());
}

OpV OpV::identity(VarSpace vs, int N, int w) {
  OpV id(vs, N, w, w);
  for (int i = 0; i < (int)id.cols_data_.size(); ++i) id.cols_data_[i][i] = Poly::one(vs);
  return id;
}

Poly OpV::entry(int r, int c) const {
  const auto& col = cols_data_.at(c);
  auto it = col.find(r);
  return it == col.end() ? Poly::zero(vs_) : it->second;
}

void OpV::add(int r, int c, const Poly& p) {
  if (p.is_zero()) return;
  auto& cell = cols_data_.at(c);
  auto it = cell.find(r);
  if (it == cell.end()) {
    cell.emplace(r, p);
  } else {
    it->second += p;
    if (it->second.is_zero()) cell.erase(it);
  }
}

void OpV::require_compatible(const OpV& o) const {
  if (N_ != o.N_ || row_w_ != o.row_w_ || col_w_ != o.col_w_)
    throw std::invalid_argument("OpV: incompatible shapes");
}

OpV OpV::operator+(const OpV& o) const {
  require_compatible(o);
  OpV r = *this;
  for (int c = 0; c < o.cols(); ++c)
    for (const auto& [rr, p] : o.cols_data_[c]) r.add(rr, c, p);
  return r;
}

OpV OpV::operator-(const OpV& o) const {
  require_compatible(o);
  OpV r = *this;
  for (int c = 0; c < o.cols(); ++c)
    for (const auto& [rr, p] : o.cols_data_[c]) r.add(rr, c, -p);
  return r;
}

OpV OpV::operator*(const OpV& o) const {
  if (N_ != o.N_ || col_w_ != o.row_w_) throw std::invalid_argument("OpV: composition mismatch");
  OpV r(vs_, N_, row_w_, o.col_w_);
  for (int c = 0; c < o.cols(); ++c)
    for (const auto& [m, p] : o.cols_data_[c]) {
      for (const auto& [rr, s] : cols_data_[m]) r.add(rr, c, s * p);
    }
  return r;
}

OpV OpV::scale(const Poly& p) const {
  OpV r(vs_, N_, row_w_, col_w_);
  if (p.is_zero()) return r;
  for (int c = 0; c < cols(); ++c)
    for (const auto& [rr, s] : cols_data_[c]) r.add(rr, c, s * p);
  return r;
}

bool OpV::operator==(const OpV& o) const {
  if (N_ != o.N_ || row_w_ != o.row_w_ || col_w_ != o.col_w_) return false;
  return cols_data_ == o.cols_data_;
}

bool OpV::is_zero() const {
  for (const auto& col : cols_data_)
    if (!col.empty()) return false;
  return true;
}

std::vector<Poly> OpV::apply(const std::vector<Poly>& v) const {
  if ((int)v.size() != cols()) throw std::invalid_argument("OpV::apply: size mismatch");
  std::vector<Poly> out(rows_, Poly::zero(vs_));
  for (int c = 0; c < cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& [rr, p] : cols_data_[c]) out[rr] += p * v[c];
  }
  return out;
}

OpV OpV::map_entries(const std::function<Poly(const Poly&)>& f) const {
  OpV r(vs_, N_, row_w_, col_w_);
  for (int c = 0; c < cols(); ++c)
    for (const auto& [rr, p] : cols_data_[c]) r.add(rr, c, f(p));
  return r;
}

std::optional<std::string> OpV::first_difference(const OpV& o) const {
  OpV d = *this - o;
  const auto& rb = weight_basis(N_, row_w_);
  const auto& cb = weight_basis(N_, col_w_);
  for (int c = 0; c < d.cols(); ++c)
    for (const auto& [rr, p] : d.cols_data_[c]) {
      std::ostringstream os;
      os << "<" << rb.part(rr).str() << "| . |" << cb.part(c).str() << "> differs by " << p.str();
      return os.str();
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Single-site operators and dualities

namespace {

OpV site_op(VarSpace vs, int N, int w, int j, int in_bit, int out_bit) {
  int w2 = w + (out_bit - in_bit);
  OpV op(vs, N, std::clamp(w2, 0, N), w);
  if (w2 < 0 || w2 > N) return op;
  const auto& cb = weight_basis(N, w);
  const auto& rb = weight_basis(N, w2);
  for (int c = 0; c < cb.dim(); ++c) {
    auto bits = cb.word(c).bits;
    if (bits[j - 1] != in_bit) continue;
    bits[j - 1] = out_bit;
    op.add(rb.index_of_bits(bits), c, Poly::one(vs));
  }
  return op;
}

}  // namespace

OpV site_proj0(VarSpace vs, int N, int w, int j) { return site_op(vs, N, w, j, 0, 0); }
OpV site_proj1(VarSpace vs, int N, int w, int j) { return site_op(vs, N, w, j, 1, 1); }
OpV site_raise(VarSpace vs, int N, int w, int j) { return site_op(vs, N, w, j, 0, 1); }
OpV site_lower(VarSpace vs, int N, int w, int j) { return site_op(vs, N, w, j, 1, 0); }

OpV parity_P(VarSpace vs, int N, int w) {
  OpV op(vs, N, w, w);
  const auto& b = weight_basis(N, w);
  for (int c = 0; c < b.dim(); ++c) {
    auto bits = b.word(c).bits;
    std::reverse(bits.begin(), bits.end());
    op.add(b.index_of_bits(bits), c, Poly::one(vs));
  }
  return op;
}

OpV theta_op(VarSpace vs, int N, int w) {
  OpV op(vs, N, N - w, w);
  const auto& cb = weight_basis(N, w);
  const auto& rb = weight_basis(N, N - w);
  for (int c = 0; c < cb.dim(); ++c) {
    auto bits = cb.word(c).bits;
    std::reverse(bits.begin(), bits.end());
    for (int& x : bits) x = 1 - x;
    op.add(rb.index_of_bits(bits), c, Poly::one(vs));
  }
  return op;
}

OpV omega_op(VarSpace vs, int N, int w) {
  OpV op(vs, N, w, w);
  const auto& b = weight_basis(N, w);
  for (int c = 0; c < b.dim(); ++c) {
    auto bits = b.word(c).bits;
    std::rotate(bits.rbegin(), bits.rbegin() + 1, bits.rend());  // eps_N to the front
    op.add(b.index_of_bits(bits), c, Poly::one(vs));
  }
  return op;
}

// ---------------------------------------------------------------------------
// L-operators and vertex weights

LMatrix build_L(Kind kind, VarSpace vs, const Poly& x, int j) {
  // 2x2 quantum-space blocks per Eq. (L) / (L'); sigma^- sigma^+ projects on
  // v_0 and sigma^+ sigma^- on v_1.
  const Poly zero = Poly::zero(vs), one = Poly::one(vs);
  const Poly tj = Poly::t(vs, j);
  // blk[e][w][s][n] = <(e,s)| L |(w,n)>
  std::array<std::array<std::array<std::array<Poly, 2>, 2>, 2>, 2> blk{};
  for (auto& a : blk)
    for (auto& b : a)
      for (auto& c : b) c = {zero, zero};
  if (kind == Kind::Vicious) {
    // A = 1 - x t proj0, B = x sigma^+, C = sigma^-, D = x proj0
    blk[0][0][0][0] = one - x * tj;  // A on v0
    blk[0][0][1][1] = one;           // A on v1
    blk[0][1][1][0] = x;             // B: v0 -> v1
    blk[1][0][0][1] = one;           // C: v1 -> v0
    blk[1][1][0][0] = x;             // D on v0
  } else {
    // A' = 1 + x t proj1, B' = x sigma^+, C' = sigma^-, D' = x proj1
    blk[0][0][0][0] = one;
    blk[0][0][1][1] = one + x * tj;
    blk[0][1][1][0] = x;
    blk[1][0][0][1] = one;
    blk[1][1][1][1] = x;
  }
  LMatrix L;
  for (int e = 0; e < 2; ++e)
    for (int s = 0; s < 2; ++s)
      for (int w = 0; w < 2; ++w)
        for (int n = 0; n < 2; ++n) L[2 * e + s][2 * w + n] = blk[e][w][s][n];
  return L;
}

Poly vertex_weight(Kind kind, VarSpace vs, const Poly& x, int j, int W, int Nn, int E, int S) {
  LMatrix L = build_L(kind, vs, x, j);
  return L[2 * E + S][2 * W + Nn];
}

// ---------------------------------------------------------------------------
// Row monodromy blocks via the column DP (trace iterates binary aux bits)

namespace {

struct Branch {
  int e, s;
  Poly w;
};

std::vector<Branch> branches(Kind kind, VarSpace vs, const Poly& x, int j, int W, int Nn) {
  std::vector<Branch> out;
  for (int e = 0; e < 2; ++e)
    for (int s = 0; s < 2; ++s) {
      Poly w = vertex_weight(kind, vs, x, j, W, Nn, e, s);
      if (!w.is_zero()) out.push_back({e, s, w});
    }
  return out;
}

}  // namespace

constexpr int kLatticeMaxN = 10;  // desk-scale guard; the DP is 2^N per word

OpV row_block(Kind kind, VarSpace vs, const Poly& x, int N, int col_w, int e_bit, int w_bit) {
  if (N > kLatticeMaxN) throw std::invalid_argument("row_block: N exceeds the configured cap");
  int row_w = col_w + (w_bit - e_bit);
  OpV op(vs, N, std::clamp(row_w, 0, N), col_w);
  if (row_w < 0 || row_w > N) return op;
  const auto& cb = weight_basis(N, col_w);
  const auto& rb = weight_basis(N, row_w);
  for (int c = 0; c < cb.dim(); ++c) {
    const auto& top = cb.word(c).bits;
    std::vector<int> bottom(N, 0);
    std::function<void(int, int, const Poly&)> walk = [&](int j, int h, const Poly& acc) {
      if (j > N) {
        if (h == e_bit) op.add(rb.index_of_bits(bottom), c, acc);
        return;
      }
      for (const auto& br : branches(kind, vs, x, j, h, top[j - 1])) {
        bottom[j - 1] = br.s;
        walk(j + 1, br.e, acc * br.w);
      }
      bottom[j - 1] = 0;
    };
    walk(1, w_bit, Poly::one(vs));
  }
  return op;
}

OpV transfer_op(Kind kind, VarSpace vs, const Poly& x, int N, int w) {
  OpV A = row_block(kind, vs, x, N, w, 0, 0);
  OpV D = row_block(kind, vs, x, N, w, 1, 1);
  return A + D.scale(Poly::q(vs));
}

std::vector<OpV> transfer_via_trace(Kind kind, VarSpace vs, int N, int w) {
  if (vs.m < 1) throw std::invalid_argument("transfer_via_trace: need a spectral slot");
  Poly x = Poly::x(vs, 1);
  OpV T = transfer_op(kind, vs, x, N, w);
  std::vector<OpV> out;
  for (int r = 0; r <= N; ++r)
    out.push_back(T.map_entries([&](const Poly& p) { return p.coeff_var(vs.x(1), r); }));
  return out;
}

OpV trace_product(Kind kind, VarSpace vs, const std::vector<Poly>& xs, int N, int w) {
  const int rows = (int)xs.size();
  OpV total(vs, N, w, w);
  for (int mask = 0; mask < (1 << rows); ++mask) {
    OpV term = OpV::identity(vs, N, w);
    for (int i = 0; i < rows; ++i) {
      int a = (mask >> i) & 1;
      OpV blk = row_block(kind, vs, xs[i], N, w, a, a);
      if (a == 1) blk = blk.scale(Poly::q(vs));
      term = blk * term;  // row i acts after rows 1..i-1
    }
    total = total + term;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Yang-Baxter catalog on 8x8 symbolic matrices

namespace {

using Mat8 = std::vector<std::vector<Poly>>;

Mat8 zeros(VarSpace vs, int n) { return Mat8(n, std::vector<Poly>(n, Poly::zero(vs))); }

Mat8 matmul(const Mat8& A, const Mat8& B) {
  int n = (int)A.size();
  Mat8 C = zeros(A[0][0].space(), n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (A[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (B[k][j].is_zero()) continue;
        C[i][j] += A[i][k] * B[k][j];
      }
    }
  return C;
}

// Embed a two-slot operator (4x4, slot pair ordered) into three qubits.
Mat8 embed(VarSpace vs, const std::array<std::array<Poly, 4>, 4>& M, int s1, int s2) {
  Mat8 R = zeros(vs, 8);
  auto bit = [](int idx, int slot) { return (idx >> (2 - slot)) & 1; };
  for (int out = 0; out < 8; ++out)
    for (int in = 0; in < 8; ++in) {
      bool ok = true;
      for (int s = 0; s < 3; ++s)
        if (s != s1 && s != s2 && bit(out, s) != bit(in, s)) ok = false;
      if (!ok) continue;
      int mo = 2 * bit(out, s1) + bit(out, s2);
      int mi = 2 * bit(in, s1) + bit(in, s2);
      R[out][in] = M[mo][mi];
    }
  return R;
}

std::array<std::array<Poly, 4>, 4> rmatrix(VarSpace vs, const std::array<Poly, 6>& abcdef) {
  std::array<std::array<Poly, 4>, 4> M;
  for (auto& row : M) row = {Poly::zero(vs), Poly::zero(vs), Poly::zero(vs), Poly::zero(vs)};
  M[0][0] = abcdef[0];
  M[1][1] = abcdef[1];
  M[1][2] = abcdef[2];
  M[2][1] = abcdef[3];
  M[2][2] = abcdef[4];
  M[3][3] = abcdef[5];
  return M;
}

IdentityReport compare(const std::string& id, const std::string& params, const Mat8& L,
                       const Mat8& R) {
  for (int i = 0; i < (int)L.size(); ++i)
    for (int j = 0; j < (int)L.size(); ++j)
      if (L[i][j] != R[i][j]) {
        std::ostringstream os;
        os << "entry (" << i << "," << j << ") differs by " << (L[i][j] - R[i][j]).str();
        return IdentityReport::fail(id, params, os.str());
      }
  return IdentityReport::ok(id, params);
}

}  // namespace

IdentityReport verify_yang_baxter(const std::string& id) {
  // Variable space: N = 2 equivariant slots play t_j, t_j'; x-slots play
  // x_i, x_i'.  All checks are exact over Poly after clearing the single
  // monomial denominator of the R-matrix entries.
  VarSpace vs(2, 2);
  Poly xi = Poly::x(vs, 1), xip = Poly::x(vs, 2);
  Poly tj = Poly::t(vs, 1), tjp = Poly::t(vs, 2);
  Poly one = Poly::one(vs), zero = Poly::zero(vs), q = Poly::q(vs);

  auto Lmat = [&](Kind k, const Poly& x, int j) {
    // reinterpret column index: j = 1 uses t_1, j = 2 uses t_2
    return build_L(k, vs, x, j);
  };

  if (id == "RLL" || id == "RLL-prime" || id == "RLL-corrupted") {
    Kind k = (id == "RLL-prime") ? Kind::Osculating : Kind::Vicious;
    // cleared tables: x_i * R and x_i' * R'
    std::array<Poly, 6> tab =
        (k == Kind::Vicious)
            ? std::array<Poly, 6>{xi, zero, xi, xip, xi - xip, xip}
            : std::array<Poly, 6>{xip, xip - xi, xi, xip, zero, xi};
    Mat8 R = embed(vs, rmatrix(vs, tab), 0, 1);
    auto Lm = Lmat(k, xi, 1);
    if (id == "RLL-corrupted") Lm[2][2] += one;  // mutation fixture: break one vertex weight
    Mat8 L1 = embed(vs, Lm, 0, 2);               // L_{i j}
    Mat8 L2 = embed(vs, Lmat(k, xip, 1), 1, 2);  // L_{i' j}
    return compare(id, "symbolic", matmul(R, matmul(L1, L2)), matmul(L2, matmul(L1, R)));
  }
  if (id == "rLL" || id == "rLL-prime") {
    Kind k = (id == "rLL") ? Kind::Vicious : Kind::Osculating;
    std::array<Poly, 6> tab{one, zero, one, one, tj - tjp, one};
    Mat8 r = embed(vs, rmatrix(vs, tab), 1, 2);  // acts on (t_j, t_j') slots
    Mat8 L1 = embed(vs, Lmat(k, xi, 1), 0, 1);   // L_{i j}
    Mat8 L2 = embed(vs, Lmat(k, xi, 2), 0, 2);   // L_{i j'}
    return compare(id, "symbolic", matmul(r, matmul(L1, L2)), matmul(L2, matmul(L1, r)));
  }
  if (id == "qYBE" || id == "qYBE-prime") {
    Kind k = (id == "qYBE") ? Kind::Vicious : Kind::Osculating;
    // q-cleared r(q): entries (q,0,q,q,t_j-t_j',q)
    std::array<Poly, 6> tab{q, zero, q, q, tj - tjp, q};
    Mat8 r = embed(vs, rmatrix(vs, tab), 1, 2);
    Mat8 G = zeros(vs, 8);
    // diag(1,q) on the aux slot 0
    for (int i = 0; i < 8; ++i) G[i][i] = ((i >> 2) & 1) ? q : one;
    Mat8 L1 = embed(vs, Lmat(k, xi, 1), 0, 1);
    Mat8 L2 = embed(vs, Lmat(k, xi, 2), 0, 2);
    Mat8 lhs = matmul(r, matmul(L1, matmul(G, L2)));
    Mat8 rhs = matmul(L2, matmul(G, matmul(L1, r)));
    return compare(id, "symbolic", lhs, rhs);
  }
  if (id == "RLL-mixed2" || id == "RLL-mixed3") {
    // R'' M M' = M' M R''  and  R''' M' M = M M' R''' at the L-operator level.
    // R''' passes with the ratio x_i'/x_i in the d,e slots (the printed table
    // row reads x_i/x_i'; the Yang-Baxter equation itself fixes the ratio).
    std::array<Poly, 6> tab = (id == "RLL-mixed2")
                                  ? std::array<Poly, 6>{xip + xi, xip, xi, xip, xi, zero}
                                  : std::array<Poly, 6>{zero, -xi, xi, xip, -xip, zero};
    Mat8 R = embed(vs, rmatrix(vs, tab), 0, 1);
    Kind first = (id == "RLL-mixed2") ? Kind::Vicious : Kind::Osculating;
    Kind second = (id == "RLL-mixed2") ? Kind::Osculating : Kind::Vicious;
    Mat8 L1 = embed(vs, Lmat(first, xi, 1), 0, 2);
    Mat8 L2 = embed(vs, Lmat(second, xip, 1), 1, 2);
    return compare(id, "symbolic", matmul(R, matmul(L1, L2)), matmul(L2, matmul(L1, R)));
  }
  return IdentityReport::fail(id, "", "unknown Yang-Baxter identity id");
}

}  // namespace sw
