#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hexinv/hexagon.hpp"
#include "hexinv/mat.hpp"

namespace hexinv {

/// Monomial in at most 10 variables, packed 6 bits per variable with
/// variable 0 in the highest bits, so larger key = lexicographically larger
/// monomial.  Multiplication is integer addition (degrees stay below 64).
using Mono = std::uint64_t;

constexpr int kMonoVars = 10;

constexpr Mono mono_shift(int var, int e = 1) {
  return Mono(e) << (6 * (kMonoVars - 1 - var));
}
constexpr int mono_exp(Mono m, int var) {
  return int((m >> (6 * (kMonoVars - 1 - var))) & 63);
}
int mono_degree(Mono m);

/// Sparse polynomial over the free variables of a reduced ring, iterated in
/// descending lexicographic order (the basis order used everywhere).
using Poly = std::map<Mono, fe, std::greater<Mono>>;

/// Monomials of exact degree kappa in nvars variables, descending lex.
std::vector<Mono> monomial_basis(int nvars, int kappa);

/// Polynomial ring of the variables x_t, y_t for all tetrahedra t of the
/// n-simplex (vertices 1..n+1), factored by the linear relations that every
/// pentachoron imposes between its y's and x's.  A maximal independent set
/// of variables remains free; y-variables are eliminated first, so for n = 4
/// the free variables are the five x's in vertex-drop order — the letters
/// a..e of the cocycle catalogue.
class ReducedRing {
 public:
  ReducedRing(int n, int p);

  int n() const { return n_; }
  int p() const { return p_; }
  const GfPtr& field() const { return field_; }

  /// Tetrahedra of the n-simplex in descending lexicographic order; for
  /// n = 4 this is the vertex-drop order 2345, 1345, 1245, 1235, 1234.
  const std::vector<std::vector<int>>& tetra() const { return tetra_; }

  /// Variable ids: y-block before x-block, tetra order inside each.
  std::size_t var_count() const { return 2 * tetra_.size(); }
  std::size_t y_var(std::size_t tet) const { return tet; }
  std::size_t x_var(std::size_t tet) const { return tetra_.size() + tet; }
  std::string var_name(std::size_t var) const;

  std::size_t free_count() const { return free_.size(); }
  const std::vector<std::size_t>& free_vars() const { return free_; }

  /// The variable as a linear form over the free variables.
  const std::vector<std::pair<int, fe>>& expansion(std::size_t var) const {
    return expansion_[var];
  }

 private:
  int n_, p_;
  GfPtr field_;
  std::vector<std::vector<int>> tetra_;
  std::vector<std::size_t> free_;
  std::vector<std::vector<std::pair<int, fe>>> expansion_;
};

/// Memoized access; references stay valid for the process lifetime.
const ReducedRing& reduced_ring(int n, int p);

/// Homogeneous degree-kappa element of the reduced ring of the n-simplex.
struct Cochain {
  int n = 0;
  int p = 0;
  int kappa = 0;
  Poly poly;

  bool zero() const { return poly.empty(); }
  bool operator==(const Cochain& o) const {
    return n == o.n && p == o.p && kappa == o.kappa && poly == o.poly;
  }
};

Cochain zero_cochain(int n, int p, int kappa);

/// Coefficients over monomial_basis(free_count, kappa).
std::vector<fe> cochain_vector(const Cochain& c);
Cochain cochain_from_vector(int n, int p, int kappa, const std::vector<fe>& v);

Cochain add(const Cochain& a, const Cochain& b);
Cochain scale(const Cochain& a, fe s);

/// Alternating sum of the cochain over the faces of the (n+1)-simplex, each
/// face identified with the standard n-simplex by vertex order; the result
/// is reduced into the free variables of the larger ring.
Cochain coboundary(const Cochain& c);

/// Matrix of the coboundary into the n-simplex ring (n in {4,5}), columns
/// indexed by the monomial basis of the (n-1)-ring.
Mat coboundary_matrix(int n, int p, int kappa);

/// Substitute the ring's defining relations into a polynomial of the raw
/// variables x_t, y_t (exponent vector indexed by variable id).  This is
/// the quotient map of the factor ring; it is an algebra homomorphism.
Cochain reduce_raw(int n, int p, int kappa,
                   const std::map<std::vector<std::uint8_t>, long long>& raw);

/// Kernel of the 5-coboundary modulo the image of the 4-coboundary.
struct H4 {
  long long dim = 0;
  std::vector<Cochain> reps;  // kernel vectors completing the image
};
H4 h4(int p, int kappa);

bool is_cocycle(const Cochain& c);     // 4-cochain killed by the coboundary
bool is_coboundary(const Cochain& c);  // 4-cochain in the image from below
bool cohomologous(const Cochain& a, const Cochain& b);

/// Linear independence modulo coboundaries.
bool classes_independent(const std::vector<Cochain>& cs);

/// p-th power endomorphism: multiplies every exponent by p and raises the
/// coefficients to the p-th power; the degree becomes p * kappa.
Cochain frobenius(const Cochain& c);

/// Integer polynomial in the letters a, b, c, ... (one per free variable),
/// e.g. "bde+bce+ace+acd+abd" or "4e^2-6ce+6be-d^2".  Exponents single ^.
std::map<Mono, long long> parse_letters(const std::string& text);

/// Homogeneous catalogue polynomial over the 4-simplex ring.
Cochain cochain_from_integers(int p, int kappa, const std::map<Mono, long long>& terms);

/// Back to the letter notation, monomials in descending lex order.
std::string cochain_to_string(const Cochain& c);

}  // namespace hexinv
