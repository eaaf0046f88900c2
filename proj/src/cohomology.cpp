#include "hexinv/cohomology.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hexinv {

namespace {

void check_prime_char(int p) {
  if (p < 2) throw std::invalid_argument("characteristic must be a prime");
}

std::vector<std::vector<int>> tetra_of_simplex(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(n + 1, 0);
  std::fill(pick.end() - 4, pick.end(), 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> t;
    for (int i = 0; i <= n; ++i)
      if (pick[i]) t.push_back(i + 1);
    out.push_back(std::move(t));
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

void basis_rec(int var, int nvars, int left, Mono acc, std::vector<Mono>& out) {
  if (var == nvars - 1) {
    out.push_back(acc + mono_shift(var, left));
    return;
  }
  for (int e = left; e >= 0; --e)
    basis_rec(var + 1, nvars, left - e, acc + mono_shift(var, e), out);
}

void add_term(const Gf& f, Poly& p, Mono m, fe c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second = f.add(it->second, c);
    if (it->second == 0) p.erase(it);
  }
}

/// poly *= linear form over the same variables
Poly mul_linear(const Gf& f, const Poly& p,
                const std::vector<std::pair<int, fe>>& lin) {
  Poly out;
  for (const auto& [m, c] : p)
    for (const auto& [var, lc] : lin) add_term(f, out, m + mono_shift(var), f.mul(c, lc));
  return out;
}

const Gf& field_of(const Cochain& c) { return *reduced_ring(c.n, c.p).field(); }

}  // namespace

int mono_degree(Mono m) {
  int d = 0;
  for (int v = 0; v < kMonoVars; ++v) d += mono_exp(m, v);
  return d;
}

std::vector<Mono> monomial_basis(int nvars, int kappa) {
  if (nvars < 1 || nvars > kMonoVars) throw std::invalid_argument("bad variable count");
  std::vector<Mono> out;
  basis_rec(0, nvars, kappa, 0, out);
  return out;
}

ReducedRing::ReducedRing(int n, int p) : n_(n), p_(p) {
  if (n < 3 || n > 5) throw std::invalid_argument("cochain rings live on the 3..5-simplex");
  check_prime_char(p);
  field_ = Gf::make(p, 1);
  tetra_ = tetra_of_simplex(n);
  const Gf& f = *field_;

  // one relation block of five rows per pentachoron in the n-simplex
  std::map<std::vector<int>, std::size_t> tetra_index;
  for (std::size_t i = 0; i < tetra_.size(); ++i) tetra_index[tetra_[i]] = i;

  std::vector<std::vector<int>> pents;
  if (n == 4) {
    pents.push_back({1, 2, 3, 4, 5});
  } else if (n == 5) {
    for (int drop = 1; drop <= 6; ++drop) {
      std::vector<int> u;
      for (int v = 1; v <= 6; ++v)
        if (v != drop) u.push_back(v);
      pents.push_back(std::move(u));
    }
  }

  Mat r = r_matrix(field_);
  Mat rels(field_, 5 * pents.size(), var_count());
  for (std::size_t pi = 0; pi < pents.size(); ++pi) {
    const auto& u = pents[pi];
    std::array<std::size_t, 5> tet{};
    for (int i = 0; i < 5; ++i) {
      std::vector<int> t;
      for (int j = 0; j < 5; ++j)
        if (j != i) t.push_back(u[j]);
      tet[i] = tetra_index.at(t);
    }
    for (int i = 0; i < 5; ++i) {
      rels.set(5 * pi + i, y_var(tet[i]), 1);
      for (int j = 0; j < 5; ++j) {
        fe c = rels.at(5 * pi + i, x_var(tet[j]));
        rels.set(5 * pi + i, x_var(tet[j]), f.sub(c, r.at(i, j)));
      }
    }
  }

  Rref rr = rref(rels);
  std::vector<char> pivot(var_count(), 0);
  for (std::size_t c : rr.pivots) pivot[c] = 1;
  std::map<std::size_t, int> free_index;
  for (std::size_t v = 0; v < var_count(); ++v)
    if (!pivot[v]) {
      free_index[v] = int(free_.size());
      free_.push_back(v);
    }
  if (free_.size() > std::size_t(kMonoVars))
    throw std::logic_error("free variable count exceeds the monomial packing");

  expansion_.resize(var_count());
  for (std::size_t v = 0; v < var_count(); ++v)
    if (!pivot[v]) expansion_[v] = {{free_index.at(v), fe(1)}};
  for (std::size_t row = 0; row < rr.rank(); ++row) {
    std::size_t v = rr.pivots[row];
    for (std::size_t c = v + 1; c < var_count(); ++c) {
      fe m = rr.m.at(row, c);
      if (m == 0) continue;
      if (pivot[c]) throw std::logic_error("reduced relations touch another pivot");
      expansion_[v].emplace_back(free_index.at(c), f.neg(m));
    }
  }
}

std::string ReducedRing::var_name(std::size_t var) const {
  std::ostringstream os;
  os << (var < tetra_.size() ? 'y' : 'x');
  for (int v : tetra_[var % tetra_.size()]) os << v;
  return os.str();
}

const ReducedRing& reduced_ring(int n, int p) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ReducedRing>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, p}];
  if (!slot) slot = std::make_unique<ReducedRing>(n, p);
  return *slot;
}

Cochain zero_cochain(int n, int p, int kappa) {
  reduced_ring(n, p);  // validates n, p
  return Cochain{n, p, kappa, {}};
}

std::vector<fe> cochain_vector(const Cochain& c) {
  const ReducedRing& ring = reduced_ring(c.n, c.p);
  auto basis = monomial_basis(int(ring.free_count()), c.kappa);
  std::vector<fe> out(basis.size(), 0);
  std::size_t at = 0;
  for (const auto& [m, coeff] : c.poly) {
    while (at < basis.size() && basis[at] != m) ++at;
    if (at == basis.size()) throw std::logic_error("monomial outside the graded basis");
    out[at] = coeff;
  }
  return out;
}

Cochain cochain_from_vector(int n, int p, int kappa, const std::vector<fe>& v) {
  const ReducedRing& ring = reduced_ring(n, p);
  auto basis = monomial_basis(int(ring.free_count()), kappa);
  if (v.size() != basis.size()) throw std::invalid_argument("coefficient vector length");
  Cochain out{n, p, kappa, {}};
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (v[i] != 0) out.poly.emplace(basis[i], v[i]);
  return out;
}

Cochain add(const Cochain& a, const Cochain& b) {
  if (a.n != b.n || a.p != b.p || a.kappa != b.kappa)
    throw std::invalid_argument("cochain mismatch");
  const Gf& f = field_of(a);
  Cochain out = a;
  for (const auto& [m, c] : b.poly) add_term(f, out.poly, m, c);
  return out;
}

Cochain scale(const Cochain& a, fe s) {
  const Gf& f = field_of(a);
  Cochain out{a.n, a.p, a.kappa, {}};
  if (s == 0) return out;
  for (const auto& [m, c] : a.poly) out.poly.emplace(m, f.mul(c, s));
  return out;
}

Cochain coboundary(const Cochain& c) {
  if (c.n != 3 && c.n != 4)
    throw std::invalid_argument("coboundary goes from the 3- or 4-simplex ring");
  int tn = c.n + 1;
  const ReducedRing& rs = reduced_ring(c.n, c.p);
  const ReducedRing& rt = reduced_ring(tn, c.p);
  const Gf& f = *rt.field();

  std::map<std::vector<int>, std::size_t> tgt_index;
  for (std::size_t i = 0; i < rt.tetra().size(); ++i) tgt_index[rt.tetra()[i]] = i;

  Cochain out{tn, c.p, c.kappa, {}};
  for (int i = 1; i <= tn + 1; ++i) {
    // order-preserving vertex map of the face opposite vertex i
    std::vector<int> vmap(tn + 1);  // 1-based source vertices
    int w = 1;
    for (int v = 1; v <= tn + 1; ++v)
      if (v != i) vmap[w++] = v;

    std::vector<std::vector<std::pair<int, fe>>> sub(rs.free_count());
    for (std::size_t j = 0; j < rs.free_count(); ++j) {
      std::size_t v = rs.free_vars()[j];
      std::size_t tet = v % rs.tetra().size();
      std::vector<int> img;
      for (int vertex : rs.tetra()[tet]) img.push_back(vmap[vertex]);
      std::sort(img.begin(), img.end());
      std::size_t ti = tgt_index.at(img);
      sub[j] = rt.expansion(v < rs.tetra().size() ? rt.y_var(ti) : rt.x_var(ti));
    }

    fe sign = (i % 2 == 1) ? fe(1) : f.neg(1);
    for (const auto& [mono, coeff] : c.poly) {
      Poly term{{Mono(0), f.mul(coeff, sign)}};
      for (std::size_t j = 0; j < rs.free_count(); ++j)
        for (int e = 0; e < mono_exp(mono, int(j)); ++e) term = mul_linear(f, term, sub[j]);
      for (const auto& [m, tc] : term) add_term(f, out.poly, m, tc);
    }
  }
  return out;
}

Mat coboundary_matrix(int n, int p, int kappa) {
  if (n != 4 && n != 5) throw std::invalid_argument("coboundary lands on the 4- or 5-simplex");
  const ReducedRing& rs = reduced_ring(n - 1, p);
  const ReducedRing& rt = reduced_ring(n, p);
  auto src = monomial_basis(int(rs.free_count()), kappa);
  auto dst = monomial_basis(int(rt.free_count()), kappa);
  std::map<Mono, std::size_t> row_of;
  for (std::size_t i = 0; i < dst.size(); ++i) row_of[dst[i]] = i;

  Mat out(rt.field(), dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    Cochain c{n - 1, p, kappa, {{src[col], fe(1)}}};
    for (const auto& [m, coeff] : coboundary(c).poly) out.set(row_of.at(m), col, coeff);
  }
  return out;
}

Cochain reduce_raw(int n, int p, int kappa,
                   const std::map<std::vector<std::uint8_t>, long long>& raw) {
  const ReducedRing& ring = reduced_ring(n, p);
  const Gf& f = *ring.field();
  Cochain out{n, p, kappa, {}};
  for (const auto& [exps, coeff] : raw) {
    if (exps.size() != ring.var_count())
      throw std::invalid_argument("raw exponent vector length");
    Poly term{{Mono(0), f.from_int(coeff)}};
    int degree = 0;
    for (std::size_t v = 0; v < exps.size(); ++v)
      for (int e = 0; e < exps[v]; ++e) {
        term = mul_linear(f, term, ring.expansion(v));
        ++degree;
      }
    if (degree != kappa) throw std::invalid_argument("raw polynomial is not homogeneous");
    for (const auto& [m, tc] : term) add_term(f, out.poly, m, tc);
  }
  return out;
}

H4 h4(int p, int kappa) {
  const ReducedRing& ring = reduced_ring(4, p);
  Mat d4 = coboundary_matrix(4, p, kappa);
  Mat d5 = coboundary_matrix(5, p, kappa);

  Mat kernel = nullspace(d5);
  ColoringSpace cocycles;
  cocycles.field = ring.field();
  cocycles.ambient = kernel.cols();
  cocycles.basis = row_space(kernel);
  cocycles.role = ColoringSpace::Role::other;

  ColoringSpace coboundaries;
  coboundaries.field = ring.field();
  coboundaries.ambient = kernel.cols();
  coboundaries.basis = row_space(d4.transpose());
  coboundaries.role = ColoringSpace::Role::other;

  QuotientSpace q = quotient(cocycles, coboundaries);
  H4 out;
  out.dim = (long long)q.dim();
  for (std::size_t i = 0; i < q.complement.rows(); ++i) {
    std::vector<fe> v(q.complement.row(i), q.complement.row(i) + q.complement.cols());
    out.reps.push_back(cochain_from_vector(4, p, kappa, v));
  }
  return out;
}

bool is_cocycle(const Cochain& c) {
  if (c.n != 4) throw std::invalid_argument("the cocycle condition applies to 4-cochains");
  return coboundary(c).zero();
}

bool is_coboundary(const Cochain& c) {
  if (c.n != 4) throw std::invalid_argument("the coboundary test applies to 4-cochains");
  Mat d4 = coboundary_matrix(4, c.p, c.kappa);
  return solve(d4, cochain_vector(c)).has_value();
}

bool cohomologous(const Cochain& a, const Cochain& b) {
  const Gf& f = field_of(a);
  return is_coboundary(add(a, scale(b, f.neg(1))));
}

bool classes_independent(const std::vector<Cochain>& cs) {
  if (cs.empty()) return true;
  int p = cs[0].p, kappa = cs[0].kappa;
  for (const auto& c : cs)
    if (c.n != 4 || c.p != p || c.kappa != kappa)
      throw std::invalid_argument("cochain mismatch");
  Mat d4 = coboundary_matrix(4, p, kappa);
  Mat im = row_space(d4.transpose());
  std::size_t r = im.rows();
  Mat stacked(im.field(), r + cs.size(), im.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < im.cols(); ++j) stacked.set(i, j, im.at(i, j));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto v = cochain_vector(cs[i]);
    for (std::size_t j = 0; j < im.cols(); ++j) stacked.set(r + i, j, v[j]);
  }
  return rank(stacked) == r + cs.size();
}

Cochain frobenius(const Cochain& c) {
  const Gf& f = field_of(c);
  Cochain out{c.n, c.p, c.kappa * c.p, {}};
  for (const auto& [m, coeff] : c.poly) {
    Mono scaled = 0;
    for (int v = 0; v < kMonoVars; ++v) scaled += mono_shift(v, mono_exp(m, v) * c.p);
    out.poly.emplace(scaled, f.pow(coeff, c.p));
  }
  return out;
}

std::map<Mono, long long> parse_letters(const std::string& text) {
  std::map<Mono, long long> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    long long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected + or - between terms");
    }
    first = false;
    long long coeff = 1;
    bool have_digits = false;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) {
      if (!have_digits) coeff = 0;
      have_digits = true;
      coeff = coeff * 10 + (text[i] - '0');
      ++i;
    }
    Mono m = 0;
    bool have_vars = false;
    while (i < text.size() && text[i] >= 'a' && text[i] < 'a' + kMonoVars) {
      int var = text[i] - 'a';
      ++i;
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
          throw std::invalid_argument("exponent digits expected after ^");
        e = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
          e = e * 10 + (text[i++] - '0');
      }
      m += mono_shift(var, e);
      have_vars = true;
    }
    if (!have_digits && !have_vars)
      throw std::invalid_argument("empty term in polynomial");
    out[m] += sign * coeff;
    if (out[m] == 0) out.erase(m);
    skip_ws();
  }
  return out;
}

Cochain cochain_from_integers(int p, int kappa, const std::map<Mono, long long>& terms) {
  const ReducedRing& ring = reduced_ring(4, p);
  const Gf& f = *ring.field();
  Cochain out{4, p, kappa, {}};
  for (const auto& [m, coeff] : terms) {
    if (mono_degree(m) != kappa)
      throw std::invalid_argument("catalogue polynomial is not homogeneous");
    for (int v = int(ring.free_count()); v < kMonoVars; ++v)
      if (mono_exp(m, v) != 0)
        throw std::invalid_argument("letter outside this ring's free variables");
    add_term(f, out.poly, m, f.from_int(coeff));
  }
  return out;
}

std::string cochain_to_string(const Cochain& c) {
  if (c.poly.empty()) return "0";
  const ReducedRing& ring = reduced_ring(c.n, c.p);
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, coeff] : c.poly) {
    if (!first) os << "+";
    first = false;
    bool unit = coeff == 1 && mono_degree(m) > 0;
    if (!unit) os << int(coeff);
    for (int v = 0; v < int(ring.free_count()); ++v) {
      int e = mono_exp(m, v);
      if (e == 0) continue;
      os << char('a' + v);
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

}  // namespace hexinv
