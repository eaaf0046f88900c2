#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hexinv {

// Element of a finite field, stored as an integer label (see Gf).  The label
// alone is meaningless; every operation goes through the owning Gf.
using fe = std::uint16_t;

/// Finite field GF(p^k), p prime, p^k <= 2^16.
///
/// Elements are labelled 0 .. p^k-1: the label of c_0 + c_1 t + ... +
/// c_{k-1} t^{k-1} (t the residue of x modulo the defining polynomial) is
/// sum c_i p^i.  Labels 0 and 1 are the additive and multiplicative units.
/// Multiplication and inversion run on exp/log tables built from a fixed
/// generator; addition is coefficientwise (XOR when p = 2).
class Gf {
 public:
  /// Field with the canonical defining polynomial: the monic irreducible of
  /// degree k whose label (coefficients read as base-p digits, leading
  /// coefficient included) is smallest.  For k = 1 the modulus is x.
  static std::shared_ptr<const Gf> make(int p, int k);

  /// Field with an explicit monic defining polynomial, given as coefficients
  /// c_0 .. c_k (c_k = 1).  Rejects reducible or non-monic moduli.
  static std::shared_ptr<const Gf> make(int p, int k, const std::vector<int>& modulus);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  /// Coefficients c_0 .. c_k of the defining polynomial.
  const std::vector<int>& modulus() const { return modulus_; }

  bool same(const Gf& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  fe zero() const { return 0; }
  fe one() const { return 1; }

  fe add(fe a, fe b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) {
      int s = int(a) + int(b);
      if (s >= p_) s -= p_;
      return fe(s);
    }
    return add_slow(a, b);
  }

  fe neg(fe a) const { return neg_[a]; }

  fe sub(fe a, fe b) const { return add(a, neg_[b]); }

  fe mul(fe a, fe b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  /// Multiplicative inverse; rejects 0.
  fe inv(fe a) const;

  /// a^e for e >= 0 (0^0 = 1).
  fe pow(fe a, long long e) const;

  /// x -> x^p.
  fe frobenius(fe a) const {
    if (a == 0) return 0;
    return exp_[(std::uint64_t(log_[a]) * p_) % (q_ - 1)];
  }

  /// Embedding of an integer through the prime subfield.
  fe from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return fe(r);
  }

  /// Coefficients c_0 .. c_{k-1} of the element with this label.
  std::vector<int> coeffs(fe a) const;

  /// Decimal label, the display form used in reports.
  std::string to_string(fe a) const { return std::to_string(a); }

  std::string name() const;  // e.g. "GF(16)"

 private:
  Gf() = default;

  fe add_slow(fe a, fe b) const;
  void build_tables();

  int p_ = 0, k_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<fe> exp_;   // exp_[i] = g^i, doubled so mul needs no wrap
  std::vector<int> log_;  // log_[exp_[i]] = i, log_[0] unused
  std::vector<fe> neg_;
};

using GfPtr = std::shared_ptr<const Gf>;

}  // namespace hexinv
