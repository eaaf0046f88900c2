#include "hexinv/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hexinv {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomial over GF(p), little-endian coefficients, no trailing zeros.
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(c);
}

// Remainder of a modulo monic m.
Poly poly_rem(Poly a, const Poly& m, int p) {
  a = trim(a);
  while (a.size() >= m.size()) {
    int lead = a.back();
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      int& c = a[shift + i];
      c = ((c - lead * m[i]) % p + p) % p;
    }
    a = trim(a);
  }
  return a;
}

bool poly_divides(const Poly& d, const Poly& a, int p) { return poly_rem(a, d, p).empty(); }

int poly_eval(const Poly& a, int x, int p) {
  int v = 0;
  for (size_t i = a.size(); i-- > 0;) v = (v * x + a[i]) % p;
  return v;
}

bool is_irreducible(const Poly& m, int p) {
  int k = int(m.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  for (int x = 0; x < p; ++x)
    if (poly_eval(m, x, p) == 0) return false;
  if (k <= 3) return true;  // no roots and degree <= 3
  // Trial division by every monic polynomial of degree 2 .. k/2.
  for (int d = 2; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long label = 0; label < count; ++label) {
      Poly cand(d + 1, 0);
      long long v = label;
      for (int i = 0; i < d; ++i) {
        cand[i] = int(v % p);
        v /= p;
      }
      cand[d] = 1;
      if (poly_divides(cand, m, p)) return false;
    }
  }
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> fs;
  for (long long d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      if (fs.empty() || fs.back() != d) fs.push_back(d);
      n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

fe Gf::inv(fe a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  int l = log_[a];
  return l == 0 ? fe(1) : exp_[q_ - 1 - l];
}

fe Gf::pow(fe a, long long e) const {
  if (e < 0) throw std::domain_error("negative exponent");
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

fe Gf::add_slow(fe a, fe b) const {
  int out = 0, mult = 1;
  int x = a, y = b;
  for (int i = 0; i < k_; ++i) {
    int s = (x % p_ + y % p_) % p_;
    out += s * mult;
    mult *= p_;
    x /= p_;
    y /= p_;
  }
  return fe(out);
}

std::vector<int> Gf::coeffs(fe a) const {
  std::vector<int> c(k_);
  int v = a;
  for (int i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

std::string Gf::name() const { return "GF(" + std::to_string(q_) + ")"; }

void Gf::build_tables() {
  q_ = 1;
  for (int i = 0; i < k_; ++i) q_ *= p_;

  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    int out = 0, mult = 1, v = a;
    for (int i = 0; i < k_; ++i) {
      int c = v % p_;
      out += ((p_ - c) % p_) * mult;
      mult *= p_;
      v /= p_;
    }
    neg_[a] = fe(out);
  }

  auto decode = [&](int label) {
    Poly a(k_, 0);
    for (int i = 0; i < k_; ++i) {
      a[i] = label % p_;
      label /= p_;
    }
    return trim(a);
  };
  auto encode = [&](const Poly& a) {
    int label = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
      label += (i < int(a.size()) ? a[i] : 0) * mult;
      mult *= p_;
    }
    return fe(label);
  };
  auto mul_mod = [&](int a, int b) {
    return encode(poly_rem(poly_mul(decode(a), decode(b), p_), modulus_, p_));
  };
  auto pow_mod = [&](int a, long long e) {
    long long r = 1, base = a;
    while (e > 0) {
      if (e & 1) r = mul_mod(int(r), int(base));
      base = mul_mod(int(base), int(base));
      e >>= 1;
    }
    return int(r);
  };

  // Smallest-label generator of the multiplicative group.
  auto factors = prime_factors(q_ - 1);
  int gen = 0;
  for (int g = 2; g < q_ && gen == 0; ++g) {
    bool ok = true;
    for (long long r : factors)
      if (pow_mod(g, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    if (ok) gen = g;
  }
  if (gen == 0 && q_ == 2) gen = 1;
  if (gen == 0) throw std::logic_error("no generator found");

  exp_.resize(2 * (q_ - 1));
  log_.assign(q_, 0);
  int cur = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    exp_[i] = fe(cur);
    log_[cur] = i;
    cur = mul_mod(cur, gen);
  }
  if (cur != 1) throw std::logic_error("generator order mismatch");
  for (int i = 0; i < q_ - 1; ++i) exp_[q_ - 1 + i] = exp_[i];
}

std::shared_ptr<const Gf> Gf::make(int p, int k, const std::vector<int>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (k < 1) throw std::invalid_argument("extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 65536) throw std::invalid_argument("field too large (p^k must be <= 2^16)");
  }
  if (int(modulus.size()) != k + 1 || modulus[k] != 1)
    throw std::invalid_argument("modulus must be monic of degree k");
  for (int c : modulus)
    if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
  if (k > 1 && !is_irreducible(modulus, p))
    throw std::invalid_argument("modulus is reducible");

  auto f = std::shared_ptr<Gf>(new Gf());
  f->p_ = p;
  f->k_ = k;
  f->modulus_ = modulus;
  f->build_tables();
  return f;
}

std::shared_ptr<const Gf> Gf::make(int p, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Gf>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
  }

  std::shared_ptr<const Gf> f;
  if (k == 1) {
    f = make(p, 1, {0, 1});
  } else {
    // Smallest label: coefficients of x^k + c_{k-1} x^{k-1} + ... + c_0 read
    // as the base-p number c_0 + c_1 p + ...; scan labels upward.
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long label = 0; label < count && !f; ++label) {
      std::vector<int> m(k + 1, 0);
      long long v = label;
      for (int i = 0; i < k; ++i) {
        m[i] = int(v % p);
        v /= p;
      }
      m[k] = 1;
      if (is_irreducible(m, p)) f = make(p, k, m);
    }
    if (!f) throw std::logic_error("no irreducible polynomial found");
  }

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(p, k), f);
  return f;
}

}  // namespace hexinv
