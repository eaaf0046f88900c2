#include "hexinv/pachner.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace hexinv {

namespace {

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_minus(const std::vector<int>& a, int v) {
  std::vector<int> out;
  for (int x : a)
    if (x != v) out.push_back(x);
  return out;
}

/// Try to read the star of `shared` (given as facet indices) as the cone
/// boundary pattern of a move site; nullopt when it does not match.
std::optional<MoveSite> match_site(const Triangulation& t, const std::vector<int>& shared,
                                   const std::vector<std::size_t>& star) {
  int k = int(star.size());
  std::set<int> extra;
  for (std::size_t fi : star)
    for (int v : t.facets()[fi])
      if (!std::binary_search(shared.begin(), shared.end(), v)) extra.insert(v);
  if (int(extra.size()) != k) return std::nullopt;
  std::vector<int> new_face(extra.begin(), extra.end());

  // the star must be exactly { shared + (new_face minus one vertex) }
  std::set<std::vector<int>> want;
  for (int v : new_face) want.insert(sorted_union(shared, sorted_minus(new_face, v)));
  std::set<std::vector<int>> got;
  for (std::size_t fi : star) got.insert(t.facets()[fi]);
  if (want != got) return std::nullopt;

  MoveSite site;
  site.kind = k;
  site.cells.assign(got.begin(), got.end());
  site.shared_face = shared;
  site.new_face = std::move(new_face);
  return site;
}

}  // namespace

std::map<int, int> MoveSite::model_map() const {
  std::map<int, int> m;
  int next = 1;
  for (int v : new_face) m[v] = next++;
  for (int v : shared_face) m[v] = next++;
  return m;
}

std::vector<MoveSite> find_sites(const Triangulation& t, int k) {
  if (t.dim() != 4 || !t.closed())
    throw std::invalid_argument("move sites need a closed 4-dimensional complex");
  if (k < 1 || k > 5) throw std::invalid_argument("move kind must be 1..5");

  std::vector<MoveSite> sites;
  if (k == 1) {
    for (const auto& f : t.facets()) {
      MoveSite site;
      site.kind = 1;
      site.cells = {f};
      site.shared_face = f;
      sites.push_back(std::move(site));
    }
    return sites;
  }

  // Index the (6-k)-vertex faces by their incident facets in one pass.
  int nv = 6 - k;
  std::map<std::vector<int>, std::vector<std::size_t>> stars;
  std::vector<int> pick(5);
  for (std::size_t fi = 0; fi < t.facets().size(); ++fi) {
    const auto& f = t.facets()[fi];
    std::fill(pick.begin(), pick.begin() + nv, 1);
    std::fill(pick.begin() + nv, pick.end(), 0);
    std::sort(pick.begin(), pick.end());
    do {
      std::vector<int> face;
      for (int i = 0; i < 5; ++i)
        if (pick[i]) face.push_back(f[i]);
      stars[face].push_back(fi);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }

  for (const auto& [face, star] : stars) {
    if (int(star.size()) != k) continue;
    if (auto site = match_site(t, face, star)) sites.push_back(std::move(*site));
  }
  return sites;
}

bool applicable(const Triangulation& t, const MoveSite& site) {
  if (site.kind == 1) return t.has_face(4, site.shared_face);
  auto star = t.star_facets(site.shared_face);
  std::set<std::vector<int>> got;
  for (std::size_t fi : star) got.insert(t.facets()[fi]);
  if (got != std::set<std::vector<int>>(site.cells.begin(), site.cells.end()))
    return false;
  return !t.has_face(site.kind - 1, site.new_face);
}

Triangulation apply_move(const Triangulation& t, const MoveSite& site,
                         std::optional<int> fresh_vertex) {
  if (t.dim() != 4 || !t.closed())
    throw std::invalid_argument("moves need a closed 4-dimensional complex");
  if (site.kind < 1 || site.kind > 5 || site.cells.size() != std::size_t(site.kind))
    throw std::invalid_argument("malformed move site");

  std::vector<int> created = site.new_face;
  if (site.kind == 1) {
    int fresh = fresh_vertex.value_or(t.faces(0).back()[0] + 1);
    if (fresh <= 0) throw std::invalid_argument("vertex labels must be positive");
    if (t.has_face(0, {fresh}))
      throw std::invalid_argument("fresh vertex label already in use");
    created = {fresh};
  } else if (fresh_vertex) {
    throw std::invalid_argument("only 1 -> 5 moves take a fresh vertex");
  }

  // Stale or inapplicable sites are rejected before any rebuilding.
  for (const auto& c : site.cells)
    if (!std::binary_search(t.facets().begin(), t.facets().end(), c))
      throw std::invalid_argument("stale move site: a cell is gone");
  if (!applicable(t, site))
    throw std::invalid_argument(site.kind == 1
                                    ? "stale move site"
                                    : "move not applicable: its star changed or the "
                                      "created simplex already exists");

  std::vector<std::vector<int>> next;
  next.reserve(t.facets().size() + 6);
  for (const auto& f : t.facets())
    if (!std::binary_search(site.cells.begin(), site.cells.end(), f))
      next.push_back(f);
  for (int v : site.shared_face)
    next.push_back(sorted_union(created, sorted_minus(site.shared_face, v)));

  Triangulation out = Triangulation::from_facets(4, std::move(next));
  if (!out.closed()) throw std::logic_error("move produced a bounded complex");
  if (t.name()) out.set_name(*t.name());
  return out;
}

FuzzResult fuzz(const Triangulation& t, std::size_t moves, std::uint64_t seed,
                std::size_t cell_cap) {
  if (t.dim() != 4 || !t.closed())
    throw std::invalid_argument("fuzzing needs a closed 4-dimensional complex");
  if (cell_cap == 0)
    cell_cap = std::max(4 * t.facets().size(), t.facets().size() + 64);

  std::mt19937_64 rng(seed);
  FuzzResult out{t};
  for (std::size_t step = 0; step < moves; ++step) {
    std::vector<std::pair<int, std::vector<MoveSite>>> options;
    for (int k = 1; k <= 5; ++k) {
      long long after = (long long)out.result.facets().size() + 6 - 2 * k;
      if (after > (long long)cell_cap) continue;
      std::vector<MoveSite> ok;
      for (auto& s : find_sites(out.result, k))
        if (applicable(out.result, s)) ok.push_back(std::move(s));
      if (!ok.empty()) options.emplace_back(k, std::move(ok));
    }
    if (options.empty()) {
      out.exhausted = true;
      break;
    }
    auto& [kind, sites] = options[rng() % options.size()];
    const MoveSite& site = sites[rng() % sites.size()];
    out.result = apply_move(out.result, site);

    FuzzStep rec;
    rec.kind = kind;
    rec.shared_face = site.shared_face;
    rec.new_face = site.new_face;
    auto fv = out.result.f_vector();
    std::copy(fv.begin(), fv.end(), rec.f_vector.begin());
    out.log.push_back(std::move(rec));
  }
  return out;
}

}  // namespace hexinv
