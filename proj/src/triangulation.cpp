#include "hexinv/triangulation.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hexinv {

namespace {

void subsets_rec(const std::vector<int>& facet, std::size_t start, std::vector<int>& cur,
                 std::size_t want, std::set<std::vector<int>>& out) {
  if (cur.size() == want) {
    out.insert(cur);
    return;
  }
  for (std::size_t i = start; i + (want - cur.size()) <= facet.size(); ++i) {
    cur.push_back(facet[i]);
    subsets_rec(facet, i + 1, cur, want, out);
    cur.pop_back();
  }
}

}  // namespace

Triangulation Triangulation::from_facets(int dim, std::vector<std::vector<int>> facets) {
  if (dim < 1 || dim > 4) throw std::invalid_argument("dimension must be 1..4");
  if (facets.empty()) throw std::invalid_argument("no facets");
  for (auto& f : facets) {
    if (int(f.size()) != dim + 1)
      throw std::invalid_argument("facet has wrong vertex count for dimension " +
                                  std::to_string(dim));
    std::sort(f.begin(), f.end());
    for (int v : f)
      if (v <= 0) throw std::invalid_argument("vertex labels must be positive");
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw std::invalid_argument("facet has a repeated vertex");
  }
  std::sort(facets.begin(), facets.end());
  if (std::adjacent_find(facets.begin(), facets.end()) != facets.end())
    throw std::invalid_argument("duplicate facet");

  Triangulation t;
  t.dim_ = dim;
  t.faces_.resize(dim + 1);
  t.faces_[dim] = std::move(facets);

  for (int d = 0; d < dim; ++d) {
    std::set<std::vector<int>> fs;
    std::vector<int> cur;
    for (const auto& f : t.faces_[dim]) subsets_rec(f, 0, cur, d + 1, fs);
    t.faces_[d].assign(fs.begin(), fs.end());
  }

  const auto& top = t.faces_[dim];
  const auto& ridges = t.faces_[dim - 1];
  t.ridge_inc_.assign(ridges.size(), RidgeIncidence{});
  t.facet_ridges_.assign(top.size(), {-1, -1, -1, -1, -1});
  for (std::size_t fi = 0; fi < top.size(); ++fi) {
    std::vector<int> ridge(top[fi]);
    for (int i = 0; i <= dim; ++i) {
      ridge.erase(ridge.begin() + i);
      auto it = std::lower_bound(ridges.begin(), ridges.end(), ridge);
      int ri = int(it - ridges.begin());
      t.facet_ridges_[fi][i] = ri;
      RidgeIncidence& inc = t.ridge_inc_[ri];
      if (inc.count >= 2)
        throw std::invalid_argument("not a pseudomanifold: a ridge lies in more than two facets");
      inc.facet[inc.count] = int(fi);
      inc.drop[inc.count] = i;
      ++inc.count;
      ridge.insert(ridge.begin() + i, top[fi][i]);
    }
  }

  t.closed_ = true;
  for (std::size_t ri = 0; ri < t.ridge_inc_.size(); ++ri)
    if (t.ridge_inc_[ri].count == 1) {
      t.closed_ = false;
      t.boundary_ridges_.push_back(ri);
    }

  // Connectivity across the facet-ridge graph.
  std::vector<char> seen(top.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    std::size_t fi = stack.back();
    stack.pop_back();
    for (int i = 0; i <= dim; ++i) {
      const RidgeIncidence& inc = t.ridge_inc_[t.facet_ridges_[fi][i]];
      for (int s = 0; s < inc.count; ++s) {
        std::size_t other = std::size_t(inc.facet[s]);
        if (!seen[other]) {
          seen[other] = 1;
          ++visited;
          stack.push_back(other);
        }
      }
    }
  }
  if (visited != top.size()) throw std::invalid_argument("disconnected complex");

  return t;
}

const std::vector<std::vector<int>>& Triangulation::faces(int d) const {
  if (d < 0 || d > dim_) throw std::invalid_argument("no faces of dimension " + std::to_string(d));
  return faces_[d];
}

std::size_t Triangulation::face_index(int d, const std::vector<int>& face) const {
  const auto& fs = faces(d);
  auto it = std::lower_bound(fs.begin(), fs.end(), face);
  if (it == fs.end() || *it != face) throw std::invalid_argument("face not in complex");
  return std::size_t(it - fs.begin());
}

bool Triangulation::has_face(int d, const std::vector<int>& face) const {
  if (d < 0 || d > dim_) return false;
  const auto& fs = faces_[d];
  return std::binary_search(fs.begin(), fs.end(), face);
}

std::vector<long long> Triangulation::f_vector() const {
  std::vector<long long> f(dim_ + 1);
  for (int d = 0; d <= dim_; ++d) f[d] = (long long)faces_[d].size();
  return f;
}

long long Triangulation::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= dim_; ++d) chi += (d % 2 ? -1 : 1) * (long long)faces_[d].size();
  return chi;
}

std::vector<std::size_t> Triangulation::star_facets(const std::vector<int>& face) const {
  std::vector<int> sorted(face);
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> out;
  const auto& top = faces_[dim_];
  for (std::size_t fi = 0; fi < top.size(); ++fi)
    if (std::includes(top[fi].begin(), top[fi].end(), sorted.begin(), sorted.end()))
      out.push_back(fi);
  return out;
}

std::vector<std::vector<int>> Triangulation::link_facets(const std::vector<int>& face) const {
  std::vector<int> sorted(face);
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> out;
  for (std::size_t fi : star_facets(sorted)) {
    std::vector<int> rest;
    std::set_difference(faces_[dim_][fi].begin(), faces_[dim_][fi].end(), sorted.begin(),
                        sorted.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return out;
}

Triangulation Triangulation::relabel(const std::map<int, int>& map) const {
  std::set<int> images;
  for (const auto& [from, to] : map) {
    (void)from;
    if (to <= 0) throw std::invalid_argument("relabelling must use positive labels");
    if (!images.insert(to).second) throw std::invalid_argument("relabelling is not injective");
  }
  std::vector<std::vector<int>> out;
  out.reserve(facets().size());
  for (const auto& f : facets()) {
    std::vector<int> g;
    g.reserve(f.size());
    for (int v : f) {
      auto it = map.find(v);
      if (it == map.end())
        throw std::invalid_argument("relabelling does not cover vertex " + std::to_string(v));
      g.push_back(it->second);
    }
    out.push_back(std::move(g));
  }
  Triangulation t = from_facets(dim_, std::move(out));
  t.name_ = name_;
  return t;
}

Triangulation sphere(int d) {
  if (d < 1 || d > 4) throw std::invalid_argument("sphere dimension must be 1..4");
  std::vector<std::vector<int>> facets;
  for (int skip = 1; skip <= d + 2; ++skip) {
    std::vector<int> f;
    for (int v = 1; v <= d + 2; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  auto t = Triangulation::from_facets(d, std::move(facets));
  return t;
}

Triangulation boundary_of_simplex(int n) {
  if (n != 5) throw std::invalid_argument("only the boundary of the 5-simplex is supported");
  auto t = sphere(4);
  t.set_name("boundary-simplex");
  return t;
}

Triangulation circle(int n) {
  if (n < 3) throw std::invalid_argument("a simplicial circle needs at least 3 vertices");
  std::vector<std::vector<int>> facets;
  for (int v = 1; v < n; ++v) facets.push_back({v, v + 1});
  facets.push_back({1, n});
  auto t = Triangulation::from_facets(1, std::move(facets));
  t.set_name("circle" + std::to_string(n));
  return t;
}

Triangulation projective_plane() {
  auto t = Triangulation::from_facets(
      2, {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
          {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}});
  t.set_name("rp2");
  return t;
}

Triangulation staircase_product(const Triangulation& a, const Triangulation& b) {
  int dim = a.dim() + b.dim();
  if (dim > 4) throw std::invalid_argument("product dimension exceeds 4");

  // Fresh labels 1..n in lexicographic (vertex of a, vertex of b) order.
  std::map<std::pair<int, int>, int> label;
  for (const auto& va : a.faces(0))
    for (const auto& vb : b.faces(0)) {
      int next = int(label.size()) + 1;
      label[{va[0], vb[0]}] = next;
    }

  int da = a.dim(), db = b.dim();
  std::vector<std::vector<int>> facets;
  // A monotone path is a choice of which of the da+db steps move in b.
  std::vector<int> steps(da + db, 0);
  std::fill(steps.end() - db, steps.end(), 1);
  std::sort(steps.begin(), steps.end());
  for (const auto& fa : a.facets())
    for (const auto& fb : b.facets()) {
      std::vector<int> choice(steps);
      do {
        std::vector<int> simplex;
        int ia = 0, ib = 0;
        simplex.push_back(label.at({fa[0], fb[0]}));
        for (int s : choice) {
          if (s == 0)
            ++ia;
          else
            ++ib;
          simplex.push_back(label.at({fa[ia], fb[ib]}));
        }
        facets.push_back(std::move(simplex));
      } while (std::next_permutation(choice.begin(), choice.end()));
    }
  auto t = Triangulation::from_facets(dim, std::move(facets));
  if (a.name() && b.name()) t.set_name(*a.name() + " x " + *b.name());
  return t;
}

Orientation orient(const Triangulation& t) {
  if (t.dim() != 4) throw std::invalid_argument("orientation requires dimension 4");
  if (!t.closed()) throw std::invalid_argument("orientation requires a closed complex");
  const auto& inc = t.ridge_incidence();
  std::size_t n = t.facets().size();
  Orientation o;
  o.sign.assign(n, 0);
  o.sign[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t fi = stack.back();
    stack.pop_back();
    for (int i = 0; i < 5; ++i) {
      const auto& ri = inc[t.facet_ridges()[fi][i]];
      std::size_t other = std::size_t(ri.facet[0]) == fi ? std::size_t(ri.facet[1])
                                                         : std::size_t(ri.facet[0]);
      if (o.sign[other] != 0) continue;
      int drop_self = ri.facet[0] == int(fi) ? ri.drop[0] : ri.drop[1];
      int drop_other = ri.facet[0] == int(fi) ? ri.drop[1] : ri.drop[0];
      int iota_self = drop_self % 2 ? -1 : 1;
      int iota_other = drop_other % 2 ? -1 : 1;
      // The two induced orientations of the shared tetrahedron must cancel.
      o.sign[other] = std::int8_t(-o.sign[fi] * iota_self * iota_other);
      stack.push_back(other);
    }
  }
  o.orientable = true;
  for (const auto& ri : inc) {
    int i0 = ri.drop[0] % 2 ? -1 : 1;
    int i1 = ri.drop[1] % 2 ? -1 : 1;
    if (o.sign[ri.facet[0]] * i0 != -o.sign[ri.facet[1]] * i1) {
      o.orientable = false;
      o.sign.clear();
      break;
    }
  }
  return o;
}

Triangulation ingest_tri(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_dim = false;
  std::optional<std::string> name;
  std::vector<std::vector<int>> facets;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    auto err = [&](const std::string& what) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + what);
    };
    if (first == "dim") {
      int d;
      if (!(ss >> d)) err("missing dimension");
      if (d != 4) err("only dimension 4 is supported");
      if (have_dim) err("repeated dim line");
      have_dim = true;
    } else if (first == "name") {
      std::string rest;
      std::getline(ss, rest);
      auto start = rest.find_first_not_of(" \t");
      if (start == std::string::npos) err("empty name");
      auto end = rest.find_last_not_of(" \t");
      name = rest.substr(start, end - start + 1);
    } else {
      if (!have_dim) err("facet before dim line");
      std::vector<int> f;
      std::istringstream fs(line);
      long long v;
      while (fs >> v) {
        if (v <= 0 || v > 1'000'000'000) err("vertex labels must be positive integers");
        f.push_back(int(v));
      }
      if (!fs.eof()) err("malformed facet line");
      if (f.size() != 5) err("a facet needs exactly 5 vertex labels");
      facets.push_back(std::move(f));
    }
  }
  if (!have_dim) throw std::runtime_error("missing dim line");
  if (facets.empty()) throw std::runtime_error("no facets");
  try {
    Triangulation t = Triangulation::from_facets(4, std::move(facets));
    if (name) t.set_name(*name);
    return t;
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("invalid complex: ") + e.what());
  }
}

Triangulation ingest_tri_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return ingest_tri(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string emit_tri(const Triangulation& t) {
  if (t.dim() != 4) throw std::invalid_argument("TRI files hold dimension-4 complexes");
  std::ostringstream out;
  out << "dim 4\n";
  if (t.name()) out << "name " << *t.name() << "\n";
  for (const auto& f : t.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace hexinv
