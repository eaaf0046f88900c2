#include <hexinv/invariants.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace hexinv {

namespace {

// One monomial of the density polynomial: coefficient and the exponents of
// the letters a..e (the x-colors of the five tetrahedra in drop-vertex
// order).
struct Term {
  fe coeff = 0;
  std::array<std::uint8_t, 5> exp{};
};

std::vector<Term> density_terms(const Cochain& c) {
  std::vector<Term> out;
  out.reserve(c.poly.size());
  for (const auto& [m, coef] : c.poly) {
    if (coef == 0) continue;
    Term t;
    t.coeff = coef;
    for (int v = 0; v < 5; ++v) t.exp[std::size_t(v)] = std::uint8_t(mono_exp(m, v));
    out.push_back(t);
  }
  return out;
}

void check_density(const GfPtr& field, const Cochain& c) {
  if (c.n != 4) throw std::invalid_argument("density must live on the 4-simplex");
  if (c.p != field->p())
    throw std::invalid_argument("density characteristic differs from the field");
}

// Per-pentachoron signs.  Characteristic 2 needs none; otherwise the complex
// must be closed and orientable, and orient() already fixes the
// lexicographically first pentachoron positive.
std::vector<std::int8_t> facet_signs(const Triangulation& t, const GfPtr& field) {
  if (field->p() == 2) return std::vector<std::int8_t>(t.facets().size(), 1);
  if (!t.closed())
    throw std::invalid_argument("signed density sums need a closed complex");
  Orientation o = orient(t);
  if (!o.orientable)
    throw std::invalid_argument("odd characteristic needs an orientable complex");
  return o.sign;
}

// Sparse polynomial over a small coordinate set: exponent vector -> coeff.
using Key = std::vector<std::uint8_t>;
using SPoly = std::map<Key, fe>;

void spoly_add(SPoly& acc, const Key& k, fe c, const Gf& f) {
  if (c == 0) return;
  auto [it, fresh] = acc.try_emplace(k, c);
  if (!fresh) {
    it->second = f.add(it->second, c);
    if (it->second == 0) acc.erase(it);
  }
}

// Fold exponents with v^q = v so that equality of polynomials is equality
// of functions on F_q.
void canonicalize(SPoly& poly, const Gf& f) {
  const int q = f.q();
  SPoly out;
  for (const auto& [k, c] : poly) {
    Key k2 = k;
    for (auto& e : k2)
      if (int(e) >= q) e = std::uint8_t((int(e) - 1) % (q - 1) + 1);
    spoly_add(out, k2, c, f);
  }
  poly.swap(out);
}

// The action restricted to a coset v + W, written over the quotient
// coordinates: substitute the linear forms of the five letters into every
// density term and expand.  Evaluating this once per coset replaces a full
// pass over the pentachora.
SPoly coset_poly(const Triangulation& t, const GfPtr& field,
                 const Cochain& cocycle, const std::vector<std::int8_t>& signs,
                 const Mat& complement) {
  const Gf& f = *field;
  const std::size_t d = complement.rows();
  SPoly acc;
  const std::vector<Term> terms = density_terms(cocycle);
  const auto& fr = t.facet_ridges();
  std::vector<std::pair<std::uint8_t, fe>> form[5];
  for (std::size_t u = 0; u < t.facets().size(); ++u) {
    for (int s = 0; s < 5; ++s) {
      form[s].clear();
      std::size_t tet = std::size_t(fr[u][std::size_t(s)]);
      for (std::size_t i = 0; i < d; ++i)
        if (fe c = complement.at(i, tet))
          form[s].push_back({std::uint8_t(i), c});
    }
    for (const Term& tm : terms) {
      bool dead = false;
      for (int s = 0; s < 5; ++s)
        if (tm.exp[std::size_t(s)] > 0 && form[s].empty()) dead = true;
      if (dead) continue;
      SPoly poly;
      poly[Key(d, 0)] = signs[u] < 0 ? f.neg(tm.coeff) : tm.coeff;
      for (int s = 0; s < 5; ++s)
        for (int e = 0; e < tm.exp[std::size_t(s)]; ++e) {
          SPoly next;
          for (const auto& [k, c] : poly)
            for (const auto& [i, a] : form[s]) {
              Key k2 = k;
              ++k2[i];
              spoly_add(next, k2, f.mul(c, a), f);
            }
          poly.swap(next);
        }
      for (const auto& [k, c] : poly) spoly_add(acc, k, c, f);
    }
  }
  canonicalize(acc, f);
  return acc;
}

// Flattened form for fast repeated evaluation.
struct Compiled {
  std::vector<fe> coeff;                                     // per term
  std::vector<std::uint32_t> offset;                         // size terms+1
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;  // (coordinate, exponent)
  int max_exp = 0;
};

Compiled compile_flat(const SPoly& poly) {
  Compiled cp;
  cp.offset.push_back(0);
  for (const auto& [k, c] : poly) {
    if (c == 0) continue;
    cp.coeff.push_back(c);
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i]) {
        cp.pairs.push_back({std::uint8_t(i), k[i]});
        cp.max_exp = std::max(cp.max_exp, int(k[i]));
      }
    cp.offset.push_back(std::uint32_t(cp.pairs.size()));
  }
  return cp;
}

// pw[v * stride + e] = v^e for every field element v.
std::vector<fe> power_table(const Gf& f, int max_exp, int& stride) {
  stride = max_exp + 1;
  std::vector<fe> pw(std::size_t(f.q()) * std::size_t(stride));
  for (int v = 0; v < f.q(); ++v)
    for (int e = 0; e <= max_exp; ++e)
      pw[std::size_t(v) * std::size_t(stride) + std::size_t(e)] = f.pow(fe(v), e);
  return pw;
}

fe eval_compiled(const Compiled& cp, const Gf& f, const std::vector<fe>& pw,
                 int stride, const fe* dig) {
  fe total = 0;
  const std::size_t nt = cp.coeff.size();
  for (std::size_t t = 0; t < nt; ++t) {
    fe m = cp.coeff[t];
    for (std::uint32_t j = cp.offset[t]; j < cp.offset[t + 1]; ++j) {
      fe b = pw[std::size_t(dig[cp.pairs[j].first]) * std::size_t(stride) +
                std::size_t(cp.pairs[j].second)];
      if (b == 0) {
        m = 0;
        break;
      }
      m = f.mul(m, b);
    }
    if (m != 0) total = f.add(total, m);
  }
  return total;
}

// ---- Translation-invariance subgroup of the coset polynomial ----
//
// The value distribution only needs a transversal of L modulo any additive
// subgroup on which the action is constant, not modulo W itself.  Larger
// subgroups shrink the enumeration; the reduced probabilities are the same
// whichever subgroup is used.  Candidate translations t come from the
// linear-in-t coefficients of P(x+t) - P(x); each candidate is then
// certified symbolically, so soundness never rests on the candidate search.

long long binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long v = 1;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

// P(x+t) - P(x), grouped by x-monomial; keys of the inner polynomials are
// t-exponent vectors.  Both exponent blocks stay canonical because the
// input is canonical (all exponents at most q-1).
std::map<Key, SPoly> shift_difference(const SPoly& cp, const Gf& f,
                                      std::size_t d) {
  std::map<Key, SPoly> by_x;
  auto add = [&](const Key& kx, const Key& kt, fe c) {
    if (c == 0) return;
    spoly_add(by_x[kx], kt, c, f);
  };
  for (const auto& [k, c] : cp) {
    // expand prod_i (x_i + t_i)^{e_i}
    std::vector<std::tuple<Key, Key, fe>> parts;
    parts.emplace_back(Key(d, 0), Key(d, 0), c);
    for (std::size_t i = 0; i < d; ++i) {
      const int e = k[i];
      if (e == 0) continue;
      std::vector<std::tuple<Key, Key, fe>> next;
      for (const auto& [kx, kt, pc] : parts)
        for (int j = 0; j <= e; ++j) {
          fe b = f.from_int(binom(e, j));
          if (b == 0) continue;
          Key kx2 = kx, kt2 = kt;
          kx2[i] = std::uint8_t(e - j);
          kt2[i] = std::uint8_t(j);
          next.emplace_back(std::move(kx2), std::move(kt2), f.mul(pc, b));
        }
      parts.swap(next);
    }
    for (const auto& [kx, kt, pc] : parts) add(kx, kt, pc);
    add(k, Key(d, 0), f.neg(c));  // subtract P(x)
  }
  for (auto it = by_x.begin(); it != by_x.end();)
    it = it->second.empty() ? by_x.erase(it) : std::next(it);
  return by_x;
}

int key_degree(const Key& k) {
  int s = 0;
  for (auto e : k) s += e;
  return s;
}

bool is_invariant_translation(const std::map<Key, SPoly>& by_x, const Gf& f,
                              const std::vector<fe>& t) {
  for (const auto& [kx, tp] : by_x) {
    fe val = 0;
    for (const auto& [kt, c] : tp) {
      fe m = c;
      for (std::size_t i = 0; i < kt.size() && m != 0; ++i)
        if (kt[i]) m = f.mul(m, f.pow(t[i], kt[i]));
      val = f.add(val, m);
    }
    if (val != 0) return false;
  }
  return true;
}

// Certified translations: solve the purely linear coefficient conditions
// for a candidate space, then keep the prime-field multiples of its basis
// that pass the full symbolic check.  Their F_p-span leaves the action
// unchanged (sums of invariant translations are invariant).
std::vector<std::vector<fe>> invariant_translations(const SPoly& cp,
                                                    const GfPtr& field,
                                                    std::size_t d) {
  std::vector<std::vector<fe>> gens;
  if (d == 0) return gens;
  const Gf& f = *field;
  // An empty polynomial (identically zero action) falls through: no linear
  // conditions, so every translation is certified and one coset remains.
  const std::map<Key, SPoly> by_x = shift_difference(cp, f, d);

  std::vector<std::vector<fe>> rows;
  for (const auto& [kx, tp] : by_x) {
    bool linear = true;
    for (const auto& [kt, c] : tp)
      if (key_degree(kt) != 1) linear = false;
    if (!linear) continue;
    std::vector<fe> row(d, 0);
    for (const auto& [kt, c] : tp)
      for (std::size_t i = 0; i < d; ++i)
        if (kt[i]) row[i] = c;
    rows.push_back(std::move(row));
  }

  Mat candidates;
  if (rows.empty()) {
    candidates = Mat::identity(field, d);
  } else {
    Mat m(field, rows.size(), d);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t i = 0; i < d; ++i) m.set(r, i, rows[r][i]);
    candidates = nullspace(m);
  }

  for (std::size_t r = 0; r < candidates.rows(); ++r)
    for (int j = 0; j < f.k(); ++j) {
      fe lam = 1;
      for (int jj = 0; jj < j; ++jj) lam = fe(lam * f.p());  // label of t^j
      std::vector<fe> cand(d, 0);
      for (std::size_t i = 0; i < d; ++i)
        cand[i] = f.mul(lam, candidates.at(r, i));
      if (is_invariant_translation(by_x, f, cand)) gens.push_back(std::move(cand));
    }
  return gens;
}

// ---- Enumeration over prime-field coordinates ----
//
// F_q^d splits into d*k coordinates over F_p (labels add coefficientwise).
// The invariant translations span an F_p-subspace; the vectors supported on
// its non-pivot coordinates form a transversal, and only those are walked.

struct EnumPlan {
  int p = 2;
  std::size_t d = 0;  // F_q quotient coordinates
  std::vector<std::pair<std::uint16_t, fe>> slots;  // free coord: (index, p^j)
  std::uint64_t count = 1;
};

EnumPlan build_plan(const GfPtr& field, std::size_t d,
                    const std::vector<std::vector<fe>>& gens,
                    std::uint64_t budget) {
  const Gf& f = *field;
  EnumPlan plan;
  plan.p = f.p();
  plan.d = d;
  const std::size_t dk = d * std::size_t(f.k());
  std::vector<bool> pivot(dk, false);
  if (!gens.empty()) {
    GfPtr fp = Gf::make(f.p(), 1);
    Mat g(fp, gens.size(), dk);
    for (std::size_t r = 0; r < gens.size(); ++r)
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<int> digits = f.coeffs(gens[r][i]);
        for (int j = 0; j < f.k(); ++j)
          g.set(r, i * std::size_t(f.k()) + std::size_t(j), fe(digits[std::size_t(j)]));
      }
    for (std::size_t c : rref(g).pivots) pivot[c] = true;
  }
  for (std::size_t c = 0; c < dk; ++c) {
    if (pivot[c]) continue;
    fe mult = 1;
    for (std::size_t j = 0; j < c % std::size_t(f.k()); ++j)
      mult = fe(mult * f.p());
    plan.slots.push_back({std::uint16_t(c / std::size_t(f.k())), mult});
  }
  for (std::size_t s = 0; s < plan.slots.size(); ++s) {
    if (plan.count > budget / std::uint64_t(plan.p))
      throw BudgetExceeded("transversal of " + std::to_string(plan.p) + "^" +
                           std::to_string(plan.slots.size()) +
                           " cosets exceeds the evaluation budget " +
                           std::to_string(budget) + "; sample instead");
    plan.count *= std::uint64_t(plan.p);
  }
  return plan;
}

void count_range(const Compiled& cp, const Gf& f, const std::vector<fe>& pw,
                 int stride, const EnumPlan& plan, std::uint64_t begin,
                 std::uint64_t end, std::vector<std::uint64_t>& counts) {
  const std::uint64_t p = std::uint64_t(plan.p);
  std::vector<std::uint8_t> digit(std::max<std::size_t>(plan.slots.size(), 1), 0);
  std::vector<fe> dig(std::max<std::size_t>(plan.d, 1), 0);
  std::uint64_t rest = begin;
  for (std::size_t s = 0; s < plan.slots.size(); ++s) {
    digit[s] = std::uint8_t(rest % p);
    rest /= p;
    dig[plan.slots[s].first] =
        fe(dig[plan.slots[s].first] + digit[s] * plan.slots[s].second);
  }
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    ++counts[eval_compiled(cp, f, pw, stride, dig.data())];
    for (std::size_t s = 0; s < plan.slots.size(); ++s) {
      const auto [coord, mult] = plan.slots[s];
      if (std::uint64_t(++digit[s]) == p) {
        digit[s] = 0;
        dig[coord] = fe(dig[coord] - fe((p - 1) * mult));
      } else {
        dig[coord] = fe(dig[coord] + mult);
        break;
      }
    }
  }
}

std::vector<HistogramGroup> group_histogram(const Gf& f,
                                            const std::vector<Fraction>& hist) {
  const int q = f.q();
  std::vector<fe> roots, rest;
  for (int v = 1; v < q; ++v)
    (f.pow(fe(v), 5) == f.one() ? roots : rest).push_back(fe(v));
  const std::vector<std::vector<fe>> classes = {{f.zero()}, roots, rest};
  const char* whole_label[3] = {"0", "x^5=1", "other"};
  std::vector<HistogramGroup> out;
  for (int ci = 0; ci < 3; ++ci) {
    const auto& cls = classes[std::size_t(ci)];
    std::vector<bool> used(cls.size(), false);
    std::vector<HistogramGroup> sub;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (used[i]) continue;
      HistogramGroup g;
      g.prob = hist[cls[i]];
      for (std::size_t j = i; j < cls.size(); ++j)
        if (!used[j] && hist[cls[j]] == g.prob) {
          g.members.push_back(cls[j]);
          used[j] = true;
        }
      sub.push_back(std::move(g));
    }
    for (auto& g : sub) {
      if (g.members.size() == 1)
        g.label = f.to_string(g.members[0]);
      else if (sub.size() == 1)
        g.label = whole_label[ci];
      else {
        std::string s;
        for (std::size_t j = 0; j < g.members.size(); ++j)
          s += (j ? "," : "") + f.to_string(g.members[j]);
        g.label = s;
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\')
      out += std::string("\\") + ch;
    else if (static_cast<unsigned char>(ch) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", ch);
      out += buf;
    } else
      out += ch;
  }
  return out;
}

std::string format_stderr(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

InvariantReport base_report(const Triangulation& t, const GfPtr& field,
                            long long i_rough) {
  InvariantReport rep;
  rep.manifold = t.name().value_or("(unnamed)");
  rep.p = field->p();
  rep.k = field->k();
  auto fv = t.f_vector();
  for (int i = 0; i < 5; ++i) rep.f_vector[std::size_t(i)] = fv[std::size_t(i)];
  rep.i_rough = i_rough;
  return rep;
}

void check_closed4(const Triangulation& t) {
  if (t.dim() != 4) throw std::invalid_argument("invariants need a 4-complex");
  if (!t.closed()) throw std::invalid_argument("invariants need a closed complex");
}

long long rough_from_dim(const Triangulation& t, std::size_t dim_permitted) {
  auto fv = t.f_vector();
  if (fv[4] % 2 != 0)
    throw std::invalid_argument("pentachoron count must be even");
  return (long long)dim_permitted - 2 * fv[0] - fv[4] / 2;
}

const char* kOddNote =
    "odd characteristic: reversing the orientation negates every value, so "
    "the histogram is canonical only up to v -> -v";

void finish_entry(RefinedEntry& entry, const Gf& f) {
  entry.grouped = group_histogram(f, entry.histogram);
  if (f.p() != 2) entry.note = kOddNote;
}

}  // namespace

Fraction fraction(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("denominator must be positive");
  if (num == 0) return {0, 1};
  long long g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Fraction::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

long long rough_invariant(const Triangulation& t, int p) {
  check_closed4(t);
  GfPtr f = Gf::make(p, 1);
  return rough_from_dim(t, permitted_space(t, f).dim());
}

fe action(const Triangulation& t, const GfPtr& field, const Cochain& cocycle,
          const std::vector<fe>& x) {
  if (t.dim() != 4) throw std::invalid_argument("the action needs a 4-complex");
  check_density(field, cocycle);
  if (x.size() != t.faces(3).size())
    throw std::invalid_argument("coloring length must be the tetrahedron count");
  if (!is_permitted(t, field, x))
    throw std::invalid_argument("coloring is not permitted");
  const std::vector<std::int8_t> signs = facet_signs(t, field);
  const std::vector<Term> terms = density_terms(cocycle);
  const Gf& f = *field;
  const auto& fr = t.facet_ridges();
  fe total = 0;
  for (std::size_t u = 0; u < t.facets().size(); ++u) {
    std::array<fe, 5> letter{};
    for (int s = 0; s < 5; ++s)
      letter[std::size_t(s)] = x[std::size_t(fr[u][std::size_t(s)])];
    fe val = 0;
    for (const Term& tm : terms) {
      fe m = tm.coeff;
      for (int s = 0; s < 5 && m != 0; ++s)
        if (tm.exp[std::size_t(s)])
          m = f.mul(m, f.pow(letter[std::size_t(s)], tm.exp[std::size_t(s)]));
      val = f.add(val, m);
    }
    if (signs[u] < 0) val = f.neg(val);
    total = f.add(total, val);
  }
  return total;
}

QuotientSpace action_quotient(const Triangulation& t, const GfPtr& field) {
  return quotient(permitted_space(t, field), edge_subspace(t, field));
}

InvariantReport rough_report(const Triangulation& t, int p) {
  GfPtr f = Gf::make(p, 1);
  check_closed4(t);
  return base_report(t, f, rough_from_dim(t, permitted_space(t, f).dim()));
}

InvariantReport refined_invariant(const Triangulation& t, const GfPtr& field,
                                  const Cochain& cocycle,
                                  const std::string& cocycle_name,
                                  std::uint64_t budget, unsigned threads) {
  check_closed4(t);
  check_density(field, cocycle);
  const std::vector<std::int8_t> signs = facet_signs(t, field);
  const QuotientSpace qs = action_quotient(t, field);
  const Gf& f = *field;

  const SPoly poly = coset_poly(t, field, cocycle, signs, qs.complement);
  const std::vector<std::vector<fe>> gens =
      invariant_translations(poly, field, qs.dim());
  const EnumPlan plan = build_plan(field, qs.dim(), gens, budget);
  const Compiled cp = compile_flat(poly);
  int stride = 0;
  const std::vector<fe> pw = power_table(f, cp.max_exp, stride);
  const std::uint64_t n = plan.count;

  unsigned want = threads ? threads : std::thread::hardware_concurrency();
  if (want == 0) want = 1;
  want = unsigned(std::min<std::uint64_t>(want, std::max<std::uint64_t>(n / 4096, 1)));
  std::vector<std::vector<std::uint64_t>> parts(
      want, std::vector<std::uint64_t>(std::size_t(f.q()), 0));
  if (want == 1) {
    count_range(cp, f, pw, stride, plan, 0, n, parts[0]);
  } else {
    const std::uint64_t chunk = (n + want - 1) / want;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < want; ++w) {
      std::uint64_t begin = w * chunk;
      std::uint64_t end = std::min<std::uint64_t>(n, begin + chunk);
      pool.emplace_back(count_range, std::cref(cp), std::cref(f), std::cref(pw),
                        stride, std::cref(plan), begin, end, std::ref(parts[w]));
    }
    for (auto& th : pool) th.join();
  }
  std::vector<std::uint64_t> counts(std::size_t(f.q()), 0);
  for (const auto& part : parts)
    for (std::size_t v = 0; v < counts.size(); ++v) counts[v] += part[v];

  InvariantReport rep = base_report(t, field, rough_from_dim(t, qs.big.dim()));
  RefinedEntry entry;
  entry.cocycle = cocycle_name;
  entry.mode = "exact";
  entry.quotient_dim = qs.dim();
  entry.cosets = n;
  entry.histogram.resize(std::size_t(f.q()));
  for (std::size_t v = 0; v < counts.size(); ++v)
    entry.histogram[v] = fraction((long long)counts[v], (long long)n);
  finish_entry(entry, f);
  rep.refined = std::move(entry);
  return rep;
}

InvariantReport sampled_invariant(const Triangulation& t, const GfPtr& field,
                                  const Cochain& cocycle,
                                  const std::string& cocycle_name,
                                  std::uint64_t n, std::uint64_t seed) {
  check_closed4(t);
  check_density(field, cocycle);
  if (n == 0) throw std::invalid_argument("sample count must be positive");
  const std::vector<std::int8_t> signs = facet_signs(t, field);
  const QuotientSpace qs = action_quotient(t, field);
  const Gf& f = *field;
  const SPoly poly = coset_poly(t, field, cocycle, signs, qs.complement);
  const Compiled cp = compile_flat(poly);
  int stride = 0;
  const std::vector<fe> pw = power_table(f, cp.max_exp, stride);

  std::mt19937_64 gen(seed);
  const std::uint64_t q = std::uint64_t(f.q());
  const std::uint64_t rem = (UINT64_MAX % q + 1) % q;  // 2^64 mod q
  auto draw = [&]() -> fe {
    for (;;) {
      std::uint64_t r = gen();
      if (rem == 0 || r < std::uint64_t(0) - rem) return fe(r % q);
    }
  };
  const std::size_t d = qs.dim();
  std::vector<fe> dig(std::max<std::size_t>(d, 1), 0);
  std::vector<std::uint64_t> counts(std::size_t(f.q()), 0);
  for (std::uint64_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < d; ++i) dig[i] = draw();
    ++counts[eval_compiled(cp, f, pw, stride, dig.data())];
  }

  InvariantReport rep = base_report(t, field, rough_from_dim(t, qs.big.dim()));
  RefinedEntry entry;
  entry.cocycle = cocycle_name;
  entry.mode = "sampled";
  entry.samples = n;
  entry.seed = seed;
  entry.quotient_dim = d;
  entry.cosets = n;
  entry.histogram.resize(std::size_t(f.q()));
  entry.stderr_bins.resize(std::size_t(f.q()));
  for (std::size_t v = 0; v < counts.size(); ++v) {
    entry.histogram[v] = fraction((long long)counts[v], (long long)n);
    double p_hat = double(counts[v]) / double(n);
    entry.stderr_bins[v] = std::sqrt(p_hat * (1.0 - p_hat) / double(n));
  }
  finish_entry(entry, f);
  rep.refined = std::move(entry);
  return rep;
}

ShiftCheck verify_edge_shift_invariance(const Triangulation& t,
                                        const GfPtr& field,
                                        const Cochain& cocycle,
                                        std::uint64_t trials,
                                        std::uint64_t seed) {
  check_closed4(t);
  check_density(field, cocycle);
  const ColoringSpace L = permitted_space(t, field);
  const Gf& f = *field;
  const std::uint64_t q = std::uint64_t(f.q());
  const std::size_t n3 = t.faces(3).size();
  const auto& edges = t.faces(1);

  std::mt19937_64 gen(seed);
  const std::uint64_t rem = (UINT64_MAX % q + 1) % q;
  auto draw_elem = [&]() -> fe {
    for (;;) {
      std::uint64_t r = gen();
      if (rem == 0 || r < std::uint64_t(0) - rem) return fe(r % q);
    }
  };
  auto draw_index = [&](std::uint64_t bound) -> std::uint64_t {
    const std::uint64_t rb = (UINT64_MAX % bound + 1) % bound;
    for (;;) {
      std::uint64_t r = gen();
      if (rb == 0 || r < std::uint64_t(0) - rb) return r % bound;
    }
  };

  ShiftCheck check;
  check.trials = trials;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::vector<fe> x(n3, 0);
    for (std::size_t i = 0; i < L.dim(); ++i) {
      fe c = draw_elem();
      if (c == 0) continue;
      const fe* row = L.basis.row(i);
      for (std::size_t j = 0; j < n3; ++j)
        if (row[j] != 0) x[j] = f.add(x[j], f.mul(c, row[j]));
    }
    const auto& edge = edges[std::size_t(draw_index(edges.size()))];
    const fe c = draw_elem();
    std::vector<fe> shift = edge_shift(t, field, edge);
    std::vector<fe> y(x);
    for (std::size_t j = 0; j < n3; ++j)
      if (shift[j] != 0) y[j] = f.add(y[j], f.mul(c, shift[j]));
    bool ok = is_permitted(t, field, y) &&
              action(t, field, cocycle, y) == action(t, field, cocycle, x);
    if (!ok) {
      ++check.violations;
      if (check.first_failure.empty()) {
        std::ostringstream os;
        os << "trial " << trial << ": shift by " << f.to_string(c)
           << " along edge {" << edge[0] << "," << edge[1] << "}";
        check.first_failure = os.str();
      }
    }
  }
  return check;
}

std::string InvariantReport::to_text() const {
  std::ostringstream os;
  os << "manifold   " << manifold << "\n";
  os << "field      GF(" << p;
  if (k > 1) os << "^" << k;
  os << ")\n";
  os << "f-vector   ";
  for (int i = 0; i < 5; ++i) os << (i ? " " : "") << f_vector[std::size_t(i)];
  os << "\n";
  os << "I_rough    " << i_rough << "\n";
  if (!refined) return os.str();
  const RefinedEntry& e = *refined;
  os << "cocycle    " << e.cocycle << "\n";
  if (e.mode == "exact")
    os << "mode       exact over " << e.cosets << " cosets (quotient dim "
       << e.quotient_dim << ")\n";
  else
    os << "mode       sampled, " << e.samples << " draws, seed " << e.seed
       << " (quotient dim " << e.quotient_dim << ")\n";
  for (std::size_t v = 0; v < e.histogram.size(); ++v) {
    os << "P(" << v << ") = " << e.histogram[v].str();
    if (!e.stderr_bins.empty())
      os << "  (se " << format_stderr(e.stderr_bins[v]) << ")";
    os << "\n";
  }
  os << "grouped\n";
  for (const auto& g : e.grouped) {
    os << "  P(" << g.label << ") = " << g.prob.str();
    if (g.members.size() > 1) os << "  [" << g.members.size() << " values]";
    os << "\n";
  }
  if (e.note) os << "note: " << *e.note << "\n";
  return os.str();
}

std::string InvariantReport::to_json() const {
  std::ostringstream os;
  os << "{\"manifold\":\"" << json_escape(manifold) << "\",";
  os << "\"field\":{\"p\":" << p << ",\"k\":" << k << "},";
  os << "\"f_vector\":[";
  for (int i = 0; i < 5; ++i) os << (i ? "," : "") << f_vector[std::size_t(i)];
  os << "],";
  os << "\"i_rough\":" << i_rough;
  if (refined) {
    const RefinedEntry& e = *refined;
    os << ",\"cocycle\":\"" << json_escape(e.cocycle) << "\"";
    os << ",\"mode\":\"" << e.mode << "\"";
    if (e.mode == "sampled")
      os << ",\"samples\":" << e.samples << ",\"seed\":" << e.seed;
    os << ",\"quotient_dim\":" << e.quotient_dim;
    os << ",\"cosets\":" << e.cosets;
    os << ",\"histogram\":{";
    for (std::size_t v = 0; v < e.histogram.size(); ++v)
      os << (v ? "," : "") << "\"" << v << "\":\"" << e.histogram[v].num << "/"
         << e.histogram[v].den << "\"";
    os << "}";
    if (!e.stderr_bins.empty()) {
      os << ",\"stderr\":{";
      for (std::size_t v = 0; v < e.stderr_bins.size(); ++v)
        os << (v ? "," : "") << "\"" << v << "\":" << format_stderr(e.stderr_bins[v]);
      os << "}";
    }
    os << ",\"grouped\":{";
    for (std::size_t g = 0; g < e.grouped.size(); ++g)
      os << (g ? "," : "") << "\"" << json_escape(e.grouped[g].label) << "\":\""
         << e.grouped[g].prob.num << "/" << e.grouped[g].prob.den << "\"";
    os << "}";
    if (e.note) os << ",\"note\":\"" << json_escape(*e.note) << "\"";
  }
  os << "}";
  return os.str();
}

}  // namespace hexinv
