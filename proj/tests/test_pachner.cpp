#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "hexinv/homology.hpp"
#include "hexinv/pachner.hpp"
#include "hexinv/triangulation.hpp"

using namespace hexinv;

namespace {

// Independent site count: try every injection of model vertices into the
// complex and check directly which k-subsets of model facets land on facets.
std::size_t oracle_site_count(const Triangulation& t, int k) {
  auto model = boundary_of_simplex(5);
  std::set<std::set<std::vector<int>>> found;
  std::vector<int> verts;
  for (const auto& v : t.faces(0)) verts.push_back(v[0]);
  std::size_t n = verts.size();
  if (n < 6) return k == 1 ? t.facets().size() : 0;

  // choose 6 labels, then every assignment of them to model vertices 1..6
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - 6, pick.end(), 1);
  do {
    std::vector<int> six;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) six.push_back(verts[i]);
    std::sort(six.begin(), six.end());
    do {
      // model facet i drops model vertex i+1; its image must be a facet of t
      std::vector<int> image_ok;
      for (int drop = 0; drop < 6; ++drop) {
        std::vector<int> img;
        for (int j = 0; j < 6; ++j)
          if (j != drop) img.push_back(six[j]);
        std::sort(img.begin(), img.end());
        if (std::binary_search(t.facets().begin(), t.facets().end(), img))
          image_ok.push_back(drop);
      }
      if (int(image_ok.size()) < k) continue;
      // a k-site needs the first k model facets present under the relabel
      // convention new_face -> 1..k; enumerate k-subsets of present images
      std::vector<int> sel(image_ok.size(), 0);
      std::fill(sel.end() - k, sel.end(), 1);
      do {
        std::set<std::vector<int>> cells;
        std::set<int> dropped;
        for (std::size_t i = 0; i < image_ok.size(); ++i)
          if (sel[i]) {
            dropped.insert(image_ok[i]);
            std::vector<int> img;
            for (int j = 0; j < 6; ++j)
              if (j != image_ok[i]) img.push_back(six[j]);
            std::sort(img.begin(), img.end());
            cells.insert(img);
          }
        // shared face = the vertices in every cell (those never dropped)
        std::vector<int> shared;
        for (int j = 0; j < 6; ++j)
          if (!dropped.count(j)) shared.push_back(six[j]);
        std::sort(shared.begin(), shared.end());
        // its star in t must be exactly these k cells
        std::set<std::vector<int>> star;
        for (std::size_t fi : t.star_facets(shared)) star.insert(t.facets()[fi]);
        if (star == cells) found.insert(cells);
      } while (std::next_permutation(sel.begin(), sel.end()));
    } while (std::next_permutation(six.begin(), six.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return found.size();
}

std::size_t count_applicable(const Triangulation& t, int k) {
  std::size_t n = 0;
  for (const auto& s : find_sites(t, k))
    if (applicable(t, s)) ++n;
  return n;
}

}  // namespace

TEST_CASE("site preconditions") {
  auto t = boundary_of_simplex(5);
  CHECK_THROWS(find_sites(t, 0));
  CHECK_THROWS(find_sites(t, 6));
  auto bounded = Triangulation::from_facets(4, {{1, 2, 3, 4, 5}});
  CHECK_THROWS(find_sites(bounded, 1));
  CHECK_THROWS(fuzz(bounded, 1, 0));
}

TEST_CASE("site census on the model complex") {
  auto t = boundary_of_simplex(5);
  // mirrored f-vector: a site of kind k per (6-k)-vertex face
  CHECK(find_sites(t, 1).size() == 6);
  CHECK(find_sites(t, 2).size() == 15);
  CHECK(find_sites(t, 3).size() == 20);
  CHECK(find_sites(t, 4).size() == 15);
  CHECK(find_sites(t, 5).size() == 6);
  // ... and none of the shrinking moves is applicable: every candidate
  // simplex the move would create already exists
  CHECK(count_applicable(t, 1) == 6);
  for (int k = 2; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(count_applicable(t, k) == 0);
  }
  for (const auto& s : find_sites(t, 5)) CHECK_THROWS(apply_move(t, s));
}

TEST_CASE("site search agrees with the exhaustive-injection oracle") {
  auto model = boundary_of_simplex(5);
  for (int k = 2; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(find_sites(model, k).size() == oracle_site_count(model, k));
  }
  // a second complex with a genuinely different census
  auto site1 = find_sites(model, 1)[0];
  auto t = apply_move(model, site1);
  for (int k = 2; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(find_sites(t, k).size() == oracle_site_count(t, k));
  }
}

TEST_CASE("model map is the documented injection") {
  auto t = boundary_of_simplex(5);
  auto sites = find_sites(t, 3);
  const auto& s = sites.front();
  auto m = s.model_map();
  CHECK(m.size() == 6);
  int i = 1;
  for (int v : s.new_face) CHECK(m.at(v) == i++);
  for (int v : s.shared_face) CHECK(m.at(v) == i++);
}

TEST_CASE("cone move and its inverse restore the complex") {
  auto t = boundary_of_simplex(5);
  auto sites = find_sites(t, 1);
  auto grown = apply_move(t, sites[0]);
  CHECK(grown.closed());
  CHECK(grown.f_vector()[0] == 7);
  CHECK(grown.f_vector()[4] == 10);
  CHECK(grown.f_vector()[1] == t.f_vector()[1] + 5);
  CHECK(grown.name() == t.name());
  CHECK(orient(grown).orientable);
  // homology unchanged
  CHECK(betti_mod_p(grown, 2) == betti_mod_p(t, 2));

  // the fresh vertex is 7 = max + 1; its star is the inverse site
  CHECK(grown.has_face(0, {7}));
  bool found = false;
  for (const auto& s : find_sites(grown, 5))
    if (s.shared_face == std::vector<int>{7}) {
      found = true;
      CHECK(applicable(grown, s));
      auto back = apply_move(grown, s);
      CHECK(back == t);
    }
  CHECK(found);
}

TEST_CASE("explicit fresh labels") {
  auto t = boundary_of_simplex(5);
  auto site = find_sites(t, 1)[0];
  auto a = apply_move(t, site, 40);
  CHECK(a.has_face(0, {40}));
  CHECK_THROWS(apply_move(t, site, 3));   // collision
  CHECK_THROWS(apply_move(t, site, -1));  // labels are positive
  // relabelling the default fresh vertex to 40 gives the same complex
  auto b = apply_move(t, site);
  std::map<int, int> m;
  for (int v = 1; v <= 6; ++v) m[v] = v;
  m[7] = 40;
  CHECK(b.relabel(m) == a);
  // a 2 -> 4 move never takes a fresh label
  auto g = apply_move(t, site);
  auto s2 = find_sites(g, 2);
  REQUIRE(!s2.empty());
  CHECK_THROWS(apply_move(g, s2[0], 99));
}

TEST_CASE("expansion then contraction through the middle kinds") {
  auto t = boundary_of_simplex(5);
  auto grown = apply_move(t, find_sites(t, 1)[0]);  // 10 cells
  // the five 2 -> 4 sites join old vertex 1 with fresh vertex 7
  auto s2 = find_sites(grown, 2);
  std::vector<MoveSite> open2;
  for (const auto& s : s2)
    if (applicable(grown, s)) open2.push_back(s);
  CHECK(open2.size() == 5);
  for (const auto& s : open2) CHECK(s.new_face == std::vector<int>{6, 7});

  auto wide = apply_move(grown, open2[0]);
  CHECK(wide.f_vector()[4] == 12);
  CHECK(wide.f_vector()[0] == 7);
  CHECK(wide.f_vector()[1] == grown.f_vector()[1] + 1);
  CHECK(orient(wide).orientable);

  // inverse: the 4 -> 2 site whose shared face is the edge just created
  bool found = false;
  for (const auto& s : find_sites(wide, 4))
    if (s.shared_face == std::vector<int>{6, 7}) {
      found = true;
      REQUIRE(applicable(wide, s));
      CHECK(apply_move(wide, s) == grown);
    }
  CHECK(found);
}

TEST_CASE("a three-move keeps the f-vector") {
  // drive a short fuzz until a kind-3 move happens, then check its delta
  auto t = boundary_of_simplex(5);
  bool seen3 = false;
  for (std::uint64_t seed = 0; seed < 60 && !seen3; ++seed) {
    auto r = fuzz(t, 12, seed);
    std::array<long long, 5> prev{};
    auto fv = t.f_vector();
    std::copy(fv.begin(), fv.end(), prev.begin());
    for (const auto& step : r.log) {
      if (step.kind == 3) {
        seen3 = true;
        CHECK(step.f_vector == prev);
      }
      prev = step.f_vector;
    }
  }
  CHECK(seen3);
}

TEST_CASE("stale sites are rejected") {
  auto t = boundary_of_simplex(5);
  auto site_a = find_sites(t, 1)[0];
  auto site_b = find_sites(t, 1)[1];
  auto moved = apply_move(t, site_a);
  CHECK_THROWS(apply_move(moved, site_a));  // its cell is gone
  // site_b's cell survives and 1 -> 5 stays applicable
  CHECK(applicable(moved, site_b));
  // a kind-2 site invalidated by a move into its star
  auto s2 = find_sites(moved, 2);
  auto open2 = std::find_if(s2.begin(), s2.end(),
                            [&](const MoveSite& s) { return applicable(moved, s); });
  REQUIRE(open2 != s2.end());
  auto moved2 = apply_move(moved, *open2);
  CHECK_THROWS(apply_move(moved2, *open2));
}

TEST_CASE("per-move f-vector deltas over fuzz chains") {
  auto t = boundary_of_simplex(5);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto r = fuzz(t, 25, seed);
    CHECK(r.log.size() == 25);
    std::array<long long, 5> prev{};
    auto fv = t.f_vector();
    std::copy(fv.begin(), fv.end(), prev.begin());
    for (const auto& step : r.log) {
      CAPTURE(step.kind);
      long long dn4 = 6 - 2 * step.kind;
      static const std::map<int, long long> dn0{{1, 1}, {2, 0}, {3, 0}, {4, 0}, {5, -1}};
      static const std::map<int, long long> dn1{{1, 5}, {2, 1}, {3, 0}, {4, -1}, {5, -5}};
      CHECK(step.f_vector[4] - prev[4] == dn4);
      CHECK(step.f_vector[0] - prev[0] == dn0.at(step.kind));
      CHECK(step.f_vector[1] - prev[1] == dn1.at(step.kind));
      prev = step.f_vector;
    }
    CHECK(r.result.closed());
    CHECK(r.result.euler_characteristic() == 2);
    CHECK(orient(r.result).orientable);
    CHECK(betti_mod_p(r.result, 2) == betti_mod_p(t, 2));
  }
}

TEST_CASE("fuzz is deterministic in the seed") {
  auto t = boundary_of_simplex(5);
  auto a = fuzz(t, 15, 9);
  auto b = fuzz(t, 15, 9);
  CHECK(a.result == b.result);
  CHECK(a.log.size() == b.log.size());
  CHECK(fuzz(t, 0, 9).result == t);
  CHECK(fuzz(t, 0, 9).log.empty());
}

TEST_CASE("the cell cap suppresses expansion") {
  auto t = boundary_of_simplex(5);
  auto r = fuzz(t, 40, 5, 12);
  for (const auto& step : r.log) CHECK(step.f_vector[4] <= 12);
  // with the cap at the starting size, only neutral or shrinking kinds fit,
  // and the model complex admits none
  auto stuck = fuzz(t, 3, 5, 6);
  CHECK(stuck.exhausted);
  CHECK(stuck.log.empty());
  CHECK(stuck.result == t);
}

TEST_CASE("orientability is preserved by move chains") {
  auto orientable = staircase_product(sphere(2), sphere(2));
  auto r = fuzz(orientable, 8, 11);
  CHECK(r.log.size() == 8);
  CHECK(orient(r.result).orientable);

  auto nonor = staircase_product(projective_plane(), sphere(2));
  REQUIRE(!orient(nonor).orientable);
  auto rn = fuzz(nonor, 6, 11);
  CHECK(rn.log.size() == 6);
  CHECK(!orient(rn.result).orientable);
  CHECK(betti_mod_p(rn.result, 2) == betti_mod_p(nonor, 2));
}
