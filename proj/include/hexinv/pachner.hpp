#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hexinv/triangulation.hpp"

namespace hexinv {

/// Left-hand side of a bistellar move k -> 6-k on a closed 4-dimensional
/// complex.  The k cells form the star of shared_face and are, under the
/// model map, exactly k facets of the boundary of a 5-simplex; the move
/// replaces them with the complementary 6-k facets.
///
/// shared_face has 6-k vertices and is removed by the move; new_face has k
/// vertices and is created by it.  For k = 1 new_face is empty: the move
/// introduces a fresh vertex.
struct MoveSite {
  int kind = 0;  // k
  std::vector<std::vector<int>> cells;
  std::vector<int> shared_face;
  std::vector<int> new_face;

  /// Injection of the involved vertices into model vertices 1..6:
  /// new_face -> 1..k in order, shared_face -> k+1..6 in order.  The cells
  /// are carried onto the model facets missing one of 1..k.
  std::map<int, int> model_map() const;

  bool operator==(const MoveSite& o) const {
    return kind == o.kind && cells == o.cells && shared_face == o.shared_face &&
           new_face == o.new_face;
  }
};

/// All sites of kind k, deduplicated (a site is determined by its shared
/// face).  For k = 1 there is one site per facet.  Requires t closed and
/// 1 <= k <= 5.
std::vector<MoveSite> find_sites(const Triangulation& t, int k);

/// True when the move can be executed now: the cells are still the star of
/// the shared face, and (for k >= 2) the simplex the move would create is
/// not already present.
bool applicable(const Triangulation& t, const MoveSite& site);

/// Execute the move.  For k = 1 the fresh vertex gets max label + 1 unless
/// given.  Throws on a stale site, on an inapplicable move, and on a fresh
/// label already in use.  The result keeps the input's name.
Triangulation apply_move(const Triangulation& t, const MoveSite& site,
                         std::optional<int> fresh_vertex = std::nullopt);

struct FuzzStep {
  int kind = 0;
  std::vector<int> shared_face;
  std::vector<int> new_face;
  std::array<long long, 5> f_vector{};  // after the step
};

struct FuzzResult {
  Triangulation result;
  std::vector<FuzzStep> log;
  bool exhausted = false;  // stopped early: no applicable move under the cap
};

/// Deterministic random move chain.  Each step draws a kind uniformly from
/// the kinds that have an applicable site and whose cell-count delta stays
/// under the cap, then a site uniformly within the kind.  cell_cap 0 means
/// an automatic guardrail of max(4 * N4, N4 + 64).
FuzzResult fuzz(const Triangulation& t, std::size_t moves, std::uint64_t seed,
                std::size_t cell_cap = 0);

}  // namespace hexinv
