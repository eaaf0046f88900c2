#pragma once
/// Catalogue of explicit polynomial 4-cocycles: named basis representatives
/// for every nonzero cohomology space in characteristics 2, 3 and 5 through
/// degree 6, plus the integer degree-2 form behind the odd-characteristic
/// entries.

#include <hexinv/cohomology.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hexinv {

/// Named basis element: "p2k3c1" is the first catalogued representative in
/// characteristic 2, degree 3.
struct Cocycle {
  std::string name;
  int p = 0;
  int kappa = 0;
  Cochain cochain;
};

/// Catalogued basis for (p, kappa), in order.  Pairs tabulated as having no
/// nontrivial classes give an empty vector; anything outside the tabulated
/// range (p in {2, 3, 5}, 1 <= kappa <= 6) throws std::out_of_range.
const std::vector<Cocycle>& catalogue(int p, int kappa);

/// All tabulated (p, kappa) pairs, including the empty ones.
std::vector<std::pair<int, int>> catalogue_pairs();

/// Resolve a name ("p2k3c1") or a '+'-joined sum ("p2k3c1+p2k3c2"); the
/// summands must agree on characteristic and degree.  Throws
/// std::invalid_argument on malformed or unknown names.
Cochain catalogue_lookup(const std::string& name);

/// The degree-2 form with integer coefficients whose reductions give the
/// catalogued degree-2 cocycles for p = 3 and 5 up to sign.  Its mod-2
/// reduction is a coboundary, not a representative of the p = 2 class.
std::string char0_text();

/// Reduction of that form modulo a prime.
Cochain char0_reduction(int p);

/// One named check with its outcome.
struct CheckLine {
  std::string label;
  bool pass = false;
};
struct CheckReport {
  std::vector<CheckLine> lines;
  bool pass() const;
  std::string to_text() const;  // one "ok"/"FAIL" line per check
};

/// Every catalogued entry is a nontrivial cocycle, each basis is independent
/// modulo coboundaries, the basis sizes equal the computed cohomology
/// dimensions, and the power-map relations between degrees hold.
CheckReport verify_catalogue();

/// The integer form reduces to a cocycle modulo 101 and 103, reproduces the
/// degree-2 representatives for p = 3 and 5 up to sign, and mod 2 falls into
/// the trivial class, away from the catalogued one.
CheckReport verify_char0_bridge();

}  // namespace hexinv
