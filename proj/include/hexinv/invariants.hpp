#pragma once
/// Manifold invariants of closed 4-complexes: the rough invariant counting
/// permitted colorings, and refined value histograms of the signed density
/// sum, exact over the edge-shift quotient or sampled from it.

#include <hexinv/cocycles.hpp>
#include <hexinv/hexagon.hpp>
#include <hexinv/triangulation.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexinv {

/// dim(permitted space) - 2 N0 - N4 / 2.  Needs a closed 4-complex; the
/// field size within the characteristic does not matter, so only p is taken.
long long rough_invariant(const Triangulation& t, int p);

/// Signed sum of per-pentachoron densities at a permitted coloring x.  The
/// cocycle letters a..e read the x-colors of the pentachoron's tetrahedra in
/// drop-vertex order.  For p = 2 every sign is +1 and non-orientable (or
/// bounded) complexes are fine; otherwise the complex must be closed and
/// orientable, and signs are normalized so the lexicographically smallest
/// pentachoron counts positive.
fe action(const Triangulation& t, const GfPtr& field, const Cochain& cocycle,
          const std::vector<fe>& x);

/// Permitted colorings modulo the span of the edge shifts.  The density sum
/// is constant on each coset, so histograms enumerate only this quotient.
QuotientSpace action_quotient(const Triangulation& t, const GfPtr& field);

/// Exceeding the exact-mode evaluation cap is its own failure so callers can
/// switch to sampling.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Probability as a reduced fraction (den >= 1; zero is 0/1).
struct Fraction {
  long long num = 0;
  long long den = 1;
  bool operator==(const Fraction& o) const {
    return num == o.num && den == o.den;
  }
  std::string str() const;  // "5/8", integers without the denominator
};
Fraction fraction(long long num, long long den);

/// Values merged by equal probability, ordered by smallest member.  The
/// label is the element itself for singletons, "x^5=1" for the full set of
/// fifth roots of unity, "other" for a trailing group, else joined labels.
struct HistogramGroup {
  std::string label;
  std::vector<fe> members;
  Fraction prob;
};

struct RefinedEntry {
  std::string cocycle;
  std::string mode;  // "exact" or "sampled"
  std::uint64_t samples = 0, seed = 0;  // sampled mode only
  std::size_t quotient_dim = 0;  // dim of permitted/edge-span quotient
  std::uint64_t cosets = 1;      // transversal size actually walked
  std::vector<Fraction> histogram;    // indexed by field element
  std::vector<double> stderr_bins;    // sampled mode only
  std::vector<HistogramGroup> grouped;
  std::optional<std::string> note;    // orientation ambiguity when p odd
};

struct InvariantReport {
  std::string manifold;
  int p = 0, k = 1;
  std::array<long long, 5> f_vector{};
  long long i_rough = 0;
  std::optional<RefinedEntry> refined;
  std::string to_text() const;
  std::string to_json() const;
};

/// Rough invariant only.
InvariantReport rough_report(const Triangulation& t, int p);

/// Exact histogram: one representative per coset of the edge-shift quotient,
/// P(v) = (cosets with value v) / q^dim.  Throws BudgetExceeded when the
/// coset count passes the cap.
InvariantReport refined_invariant(const Triangulation& t, const GfPtr& field,
                                  const Cochain& cocycle,
                                  const std::string& cocycle_name,
                                  std::uint64_t budget = kDefaultBudget,
                                  unsigned threads = 0);

/// Empirical histogram from n uniformly drawn cosets (deterministic in
/// seed), with a per-bin standard error estimate.
InvariantReport sampled_invariant(const Triangulation& t, const GfPtr& field,
                                  const Cochain& cocycle,
                                  const std::string& cocycle_name,
                                  std::uint64_t n, std::uint64_t seed);

/// Random (permitted coloring, edge) probes of the shift invariance: the
/// shifted coloring must stay permitted and keep the same density sum.
struct ShiftCheck {
  std::uint64_t trials = 0, violations = 0;
  std::string first_failure;  // empty when clean
  bool pass() const { return violations == 0; }
};
ShiftCheck verify_edge_shift_invariance(const Triangulation& t,
                                        const GfPtr& field,
                                        const Cochain& cocycle,
                                        std::uint64_t trials,
                                        std::uint64_t seed);

}  // namespace hexinv
