#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "hexinv/gf.hpp"

using namespace hexinv;

namespace {

// Independent irreducibility oracle: a monic polynomial of degree <= 4 over
// GF(p) is reducible iff it has a root or (degree 4) a monic quadratic factor.
bool oracle_reducible(const std::vector<int>& m, int p) {
  int k = int(m.size()) - 1;
  auto eval = [&](int x) {
    long long v = 0;
    for (int i = k; i >= 0; --i) v = (v * x + m[i]) % p;
    return int(v);
  };
  for (int x = 0; x < p; ++x)
    if (eval(x) == 0) return true;
  if (k == 4) {
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        // long-divide m by x^2 + b x + c
        std::vector<long long> r(m.begin(), m.end());
        for (int d = 4; d >= 2; --d) {
          long long lead = ((r[d] % p) + p) % p;
          r[d] -= lead;
          r[d - 1] -= lead * b;
          r[d - 2] -= lead * c;
        }
        if (((r[1] % p) + p) % p == 0 && ((r[0] % p) + p) % p == 0) return true;
      }
  }
  return false;
}

std::vector<GfPtr> sample_fields() {
  return {Gf::make(2, 1), Gf::make(3, 1), Gf::make(5, 1), Gf::make(7, 1),
          Gf::make(101, 1), Gf::make(2, 2), Gf::make(2, 3), Gf::make(2, 4),
          Gf::make(3, 2), Gf::make(5, 2)};
}

}  // namespace

TEST_CASE("canonical defining polynomials for the char-2 extensions") {
  CHECK(Gf::make(2, 2)->modulus() == std::vector<int>{1, 1, 1});     // x^2+x+1
  CHECK(Gf::make(2, 3)->modulus() == std::vector<int>{1, 1, 0, 1});  // x^3+x+1
  CHECK(Gf::make(2, 4)->modulus() == std::vector<int>{1, 1, 0, 0, 1});  // x^4+x+1

  // The canonical modulus is the smallest-label monic irreducible: every
  // smaller label must be reducible (checked by an independent oracle).
  for (int k : {2, 3, 4}) {
    auto f = Gf::make(2, k);
    long long label = 0;
    for (int i = 0; i < k; ++i) label += (long long)f->modulus()[i] << i;
    for (long long below = 0; below < label; ++below) {
      std::vector<int> m(k + 1, 0);
      long long v = below;
      for (int i = 0; i < k; ++i) {
        m[i] = int(v & 1);
        v >>= 1;
      }
      m[k] = 1;
      CHECK(oracle_reducible(m, 2));
    }
    CHECK(!oracle_reducible(f->modulus(), 2));
  }
}

TEST_CASE("labels follow the base-p coefficient encoding") {
  auto f4 = Gf::make(2, 2);
  // t^2 = t + 1 under x^2+x+1: label 2 squared is label 3.
  CHECK(f4->mul(2, 2) == 3);
  CHECK(f4->add(2, 1) == 3);
  CHECK(f4->coeffs(3) == std::vector<int>{1, 1});

  auto f16 = Gf::make(2, 4);
  CHECK(f16->pow(2, 4) == 3);  // t^4 = t + 1 under x^4+x+1

  auto f8 = Gf::make(2, 3);
  CHECK(f8->pow(2, 3) == 3);  // t^3 = t + 1 under x^3+x+1

  auto f9 = Gf::make(3, 2);
  CHECK(f9->modulus() == std::vector<int>{1, 0, 1});  // x^2+1 mod 3
  CHECK(f9->mul(3, 3) == f9->from_int(-1));           // t^2 = -1
}

TEST_CASE("field axioms hold on random samples") {
  for (const auto& f : sample_fields()) {
    CAPTURE(f->name());
    std::mt19937_64 rng(0xC0FFEE ^ f->q());
    auto rnd = [&] { return fe(rng() % f->q()); };
    for (int trial = 0; trial < 1000; ++trial) {
      fe a = rnd(), b = rnd(), c = rnd();
      REQUIRE(f->add(a, b) == f->add(b, a));
      REQUIRE(f->mul(a, b) == f->mul(b, a));
      REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      REQUIRE(f->add(a, f->neg(a)) == 0);
      REQUIRE(f->sub(a, b) == f->add(a, f->neg(b)));
      REQUIRE(f->mul(a, 1) == a);
      REQUIRE(f->mul(a, 0) == 0);
      if (a != 0) REQUIRE(f->mul(a, f->inv(a)) == 1);
    }
  }
}

TEST_CASE("frobenius is the p-th power map and is additive") {
  for (const auto& f : sample_fields()) {
    CAPTURE(f->name());
    std::mt19937_64 rng(99 + f->q());
    for (int trial = 0; trial < 300; ++trial) {
      fe a = fe(rng() % f->q()), b = fe(rng() % f->q());
      REQUIRE(f->frobenius(a) == f->pow(a, f->p()));
      REQUIRE(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
      // q-th power is the identity
      fe x = a;
      for (int i = 0; i < f->k(); ++i) x = f->frobenius(x);
      REQUIRE(x == a);
    }
  }
}

TEST_CASE("integer embedding lands in the prime subfield") {
  auto f = Gf::make(5, 2);
  CHECK(f->from_int(7) == 2);
  CHECK(f->from_int(-1) == 4);
  CHECK(f->from_int(0) == 0);
  CHECK(f->add(f->from_int(3), f->from_int(4)) == f->from_int(7));
  CHECK(f->mul(f->from_int(3), f->from_int(4)) == f->from_int(12));
}

TEST_CASE("power edge cases") {
  auto f = Gf::make(2, 4);
  CHECK(f->pow(0, 0) == 1);
  CHECK(f->pow(0, 5) == 0);
  CHECK(f->pow(7, 0) == 1);
  CHECK(f->pow(7, f->q() - 1) == 1);
}

TEST_CASE("constructor rejections") {
  CHECK_THROWS(Gf::make(4, 1));    // not prime
  CHECK_THROWS(Gf::make(1, 1));
  CHECK_THROWS(Gf::make(2, 17));   // 2^17 > 2^16
  CHECK_THROWS(Gf::make(257, 3));
  CHECK_THROWS(Gf::make(2, 0));
  CHECK_THROWS(Gf::make(2, 2, {1, 0, 1}));  // x^2+1 = (x+1)^2 mod 2
  CHECK_THROWS(Gf::make(2, 2, {1, 1}));     // wrong degree
  CHECK_THROWS(Gf::make(3, 2, {1, 0, 2}));  // not monic
  auto f = Gf::make(2, 2);
  CHECK_THROWS(f->inv(0));
}

TEST_CASE("explicit modulus gives a genuinely different field object") {
  auto canon = Gf::make(3, 2);
  auto other = Gf::make(3, 2, {2, 2, 1});  // x^2+2x+2, irreducible mod 3
  CHECK(!canon->same(*other));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    fe a = fe(rng() % 9), b = fe(rng() % 9);
    REQUIRE(other->mul(other->add(a, b), a) ==
            other->add(other->mul(a, a), other->mul(b, a)));
    if (a != 0) REQUIRE(other->mul(a, other->inv(a)) == 1);
  }
}

TEST_CASE("large prime field used by the characteristic-zero checks") {
  auto f = Gf::make(101, 1);
  CHECK(f->q() == 101);
  CHECK(f->mul(f->from_int(50), f->from_int(2)) == f->from_int(100));
  CHECK(f->inv(f->from_int(2)) == f->from_int(51));
  auto g = Gf::make(103, 1);
  CHECK(g->inv(g->from_int(2)) == g->from_int(52));
}
