#include "sw/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sw {

int mono_degree(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

bool MonoCmp::operator()(const Mono& a, const Mono& b) const {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(VarSpace vs, const Int& c) : vs_(vs) {
  if (c != 0) terms_[Mono(vs.vars(), 0)] = c;
}

Poly Poly::var(VarSpace vs, int idx, int exp) {
  Poly p(vs);
  if (idx < 0 || idx >= vs.vars()) throw std::out_of_range("Poly::var index");
  Mono m(vs.vars(), 0);
  m[idx] = static_cast<uint16_t>(exp);
  p.terms_[m] = 1;
  return p;
}

bool Poly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [m, c] = *terms_.begin();
  return c == 1 && mono_degree(m) == 0;
}

void Poly::add_term(const Mono& m, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::require_same_space(const Poly& o) const {
  if (!(vs_ == o.vs_)) throw std::invalid_argument("Poly: mixed variable spaces");
}

Poly Poly::operator-() const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_space(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_space(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  require_same_space(o);
  Poly r(vs_);
  if (terms_.empty() || o.terms_.empty()) return r;
  const int nv = vs_.vars();
  Mono prod(nv);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (int i = 0; i < nv; ++i) prod[i] = static_cast<uint16_t>(ma[i] + mb[i]);
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const Int& c) const {
  Poly r(vs_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_[m] = cc * c;
  return r;
}

Poly Poly::swap_raw(int a, int b) const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_) {
    Mono mm = m;
    std::swap(mm[a], mm[b]);
    r.add_term(mm, c);
  }
  return r;
}

Poly Poly::swap_vars(int j, VarFamily fam) const {
  switch (fam) {
    case VarFamily::TRev:
      if (j < 1 || j > vs_.N) throw std::out_of_range("swap_vars: t index");
      if (j == vs_.N) return swap_raw(vs_.t(vs_.N), vs_.t(1));  // affine, level 0
      return swap_raw(vs_.t(j), vs_.t(j + 1));
    case VarFamily::TDirect:
      if (j < 1 || j > vs_.N) throw std::out_of_range("swap_vars: T index");
      if (j == vs_.N) return swap_raw(vs_.T(vs_.N), vs_.T(1));
      return swap_raw(vs_.T(j), vs_.T(j + 1));
    case VarFamily::X:
      if (j < 1 || j >= vs_.m) throw std::out_of_range("swap_vars: x index");
      return swap_raw(vs_.x(j), vs_.x(j + 1));
  }
  throw std::logic_error("swap_vars: bad family");
}

Poly Poly::permute_vars(const std::vector<int>& perm) const {
  if ((int)perm.size() != vs_.vars()) throw std::invalid_argument("permute_vars: size");
  Poly r(vs_);
  const int nv = vs_.vars();
  for (const auto& [m, c] : terms_) {
    Mono mm(nv, 0);
    for (int i = 0; i < nv; ++i) mm[perm[i]] = m[i];
    r.add_term(mm, c);
  }
  return r;
}

Poly Poly::divide_exact_linear(int a, int b) const {
  // p = (v_a - v_b) Q + p|_{v_a=v_b}; remainder must vanish.
  // Q = sum_k A_k(v_a^{k-1} + v_a^{k-2} v_b + ... + v_b^{k-1}) for
  // p = sum_k A_k v_a^k with A_k free of v_a.
  Poly quot(vs_);
  Poly rem(vs_);
  for (const auto& [m, c] : terms_) {
    const int k = m[a];
    Mono base = m;
    base[a] = 0;
    for (int i = 0; i < k; ++i) {
      Mono mm = base;
      mm[a] = static_cast<uint16_t>(i);
      mm[b] = static_cast<uint16_t>(mm[b] + (k - 1 - i));
      quot.add_term(mm, c);
    }
    Mono mr = base;
    mr[b] = static_cast<uint16_t>(mr[b] + k);
    rem.add_term(mr, c);
  }
  if (!rem.is_zero())
    throw std::logic_error("divide_exact_linear: nonzero remainder (internal invariant violated)");
  return quot;
}

Poly Poly::divide_exact(const Poly& d) const {
  require_same_space(d);
  if (d.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  Poly rem = *this;
  Poly quot(vs_);
  const auto& [dm, dc] = *d.terms_.begin();
  const int nv = vs_.vars();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.begin();
    Mono qm(nv);
    for (int i = 0; i < nv; ++i) {
      if (rm[i] < dm[i]) throw std::logic_error("divide_exact: leading term not divisible");
      qm[i] = static_cast<uint16_t>(rm[i] - dm[i]);
    }
    Int qc = rc / dc;
    if (qc * dc != rc) throw std::logic_error("divide_exact: coefficient not divisible");
    Poly mono(vs_);
    mono.terms_[qm] = qc;
    quot += mono;
    rem -= mono * d;
  }
  return quot;
}

Poly Poly::divided_difference(int j, VarFamily fam) const {
  Poly diff = *this - swap_vars(j, fam);
  int a, b;
  switch (fam) {
    case VarFamily::TRev:
      a = vs_.t(j);
      b = (j == vs_.N) ? vs_.t(1) : vs_.t(j + 1);
      break;
    case VarFamily::TDirect:
      a = vs_.T(j);
      b = (j == vs_.N) ? vs_.T(1) : vs_.T(j + 1);
      break;
    case VarFamily::X:
      a = vs_.x(j);
      b = vs_.x(j + 1);
      break;
    default:
      throw std::logic_error("divided_difference: bad family");
  }
  return diff.divide_exact_linear(a, b);
}

Poly Poly::substitute(const std::map<int, Poly>& assign) const {
  for (const auto& [idx, val] : assign) {
    if (idx < 0 || idx >= vs_.vars()) throw std::invalid_argument("substitute: bad variable");
    val.require_same_space(*this);
  }
  Poly r(vs_);
  for (const auto& [m, c] : terms_) {
    Poly term(vs_, c);
    Mono untouched = m;
    for (const auto& [idx, val] : assign) untouched[idx] = 0;
    Poly base(vs_);
    base.terms_[untouched] = 1;
    term *= base;
    for (const auto& [idx, val] : assign) {
      for (int e = 0; e < m[idx]; ++e) term *= val;
    }
    r += term;
  }
  return r;
}

Complex Poly::eval(const std::vector<Complex>& vals) const {
  if ((int)vals.size() != vs_.vars()) throw std::invalid_argument("eval: need a value per variable");
  Complex acc(0.0, 0.0);
  for (const auto& [m, c] : terms_) {
    Complex t(c.get_d(), 0.0);
    for (size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= vals[i];
    acc += t;
  }
  if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
    throw std::runtime_error("eval: non-finite result");
  return acc;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return mono_degree(terms_.begin()->first);  // canonical order is graded
}

int Poly::degree_var(int idx) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, (int)m[idx]);
  return terms_.empty() ? -1 : d;
}

Poly Poly::coeff_q(int d) const { return coeff_var(vs_.q(), d); }

Poly Poly::coeff_var(int idx, int e) const {
  Poly r(vs_);
  for (const auto& [m, c] : terms_) {
    if (m[idx] == e) {
      Mono mm = m;
      mm[idx] = 0;
      r.add_term(mm, c);
    }
  }
  return r;
}

bool Poly::homogeneous_T(int d) const {
  for (const auto& [m, c] : terms_) {
    int dt = 0;
    for (int i = 0; i < vs_.N; ++i) dt += m[i];
    if (dt != d) return false;
  }
  return true;
}

namespace {

std::string var_name(const VarSpace& vs, int idx) {
  if (idx < vs.N) return "T" + std::to_string(idx + 1);
  if (idx == vs.N) return "q";
  return "x" + std::to_string(idx - vs.N);
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool constant = mono_degree(m) == 0;
    bool wrote_coeff = false;
    if (constant || a != 1) {
      os << a.get_str();
      wrote_coeff = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote_coeff) os << "*";
      os << var_name(vs_, (int)i);
      if (m[i] > 1) os << "^" << (int)m[i];
      wrote_coeff = true;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const VarSpace vs;
  const std::string& s;
  size_t pos = 0;

  explicit Parser(VarSpace v, const std::string& str) : vs(v), s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("Poly::parse: " + what + " at position " + std::to_string(pos));
  }

  Int parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected integer");
    return Int(s.substr(start, pos - start));
  }

  int parse_index() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected variable index");
    return std::stoi(s.substr(start, pos - start));
  }

  // term := [int] {'*' factor} | factor {'*' factor}
  Poly parse_term() {
    Poly acc = Poly::one(vs);
    bool expect_factor = true;
    bool any = false;
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      char c = s[pos];
      if (c == '+' || c == '-') break;
      if (c == '*') {
        ++pos;
        expect_factor = true;
        continue;
      }
      if (!expect_factor) break;
      if (std::isdigit((unsigned char)c)) {
        acc = acc * parse_int();
      } else if (c == 'T' || c == 'x' || c == 'q' || c == 't') {
        ++pos;
        int idx;
        if (c == 'q') {
          idx = vs.q();
        } else {
          int i = parse_index();
          if (c == 'T') idx = vs.T(i);
          else if (c == 't') idx = vs.t(i);
          else idx = vs.x(i);
        }
        int e = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = (int)parse_int().get_si();
          if (e < 0) fail("negative exponent");
        }
        acc = acc * Poly::var(vs, idx, e);
      } else {
        fail("unexpected character");
      }
      any = true;
      expect_factor = false;
    }
    if (!any) fail("empty term");
    return acc;
  }

  Poly parse_sum() {
    Poly acc(vs);
    bool neg = false;
    skip_ws();
    if (peek() == '+') ++pos;
    else if (peek() == '-') {
      neg = true;
      ++pos;
    }
    while (true) {
      Poly t = parse_term();
      acc += neg ? -t : t;
      if (eof()) break;
      char c = peek();
      if (c == '+') {
        neg = false;
        ++pos;
      } else if (c == '-') {
        neg = true;
        ++pos;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return acc;
  }
};

}  // namespace

Poly Poly::parse(VarSpace vs, const std::string& s) {
  Parser p(vs, s);
  if (p.eof()) return Poly::zero(vs);
  std::string trimmed = s;
  // "0" parses to the zero polynomial
  {
    Parser probe(vs, s);
    probe.skip_ws();
    if (probe.pos < s.size() && s[probe.pos] == '0') {
      size_t j = probe.pos + 1;
      while (j < s.size() && std::isspace((unsigned char)s[j])) ++j;
      if (j >= s.size()) return Poly::zero(vs);
    }
  }
  return p.parse_sum();
}

Poly canonicalize(VarSpace vs, const std::vector<std::pair<Mono, Int>>& raw) {
  Poly p(vs);
  for (const auto& [m, c] : raw) {
    if ((int)m.size() != vs.vars()) throw std::invalid_argument("canonicalize: bad monomial width");
    if (c == 0) continue;
    Poly term(vs, c);
    for (int i = 0; i < vs.vars(); ++i)
      if (m[i] > 0) term *= Poly::var(vs, i, m[i]);
    p += term;
  }
  return p;
}

}  // namespace sw
