#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hexinv/homology.hpp"
#include "hexinv/triangulation.hpp"

using namespace hexinv;

TEST_CASE("boundary of the 5-simplex") {
  auto t = boundary_of_simplex(5);
  CHECK(t.dim() == 4);
  CHECK(t.closed());
  CHECK(t.f_vector() == std::vector<long long>{6, 15, 20, 15, 6});
  CHECK(t.euler_characteristic() == 2);
  for (const auto& inc : t.ridge_incidence()) CHECK(inc.count == 2);
  CHECK_THROWS(boundary_of_simplex(4));
  CHECK_THROWS(boundary_of_simplex(6));
}

TEST_CASE("a single pentachoron is bounded with 5 boundary tetrahedra") {
  auto t = Triangulation::from_facets(4, {{1, 2, 3, 4, 5}});
  CHECK(!t.closed());
  CHECK(t.boundary_ridges().size() == 5);
  CHECK(t.f_vector() == std::vector<long long>{5, 10, 10, 5, 1});
}

TEST_CASE("construction rejections") {
  CHECK_THROWS(Triangulation::from_facets(4, {}));
  CHECK_THROWS(Triangulation::from_facets(4, {{1, 2, 3, 4}}));          // wrong arity
  CHECK_THROWS(Triangulation::from_facets(4, {{1, 2, 3, 4, 4}}));      // repeated vertex
  CHECK_THROWS(Triangulation::from_facets(4, {{0, 2, 3, 4, 5}}));      // non-positive label
  CHECK_THROWS(Triangulation::from_facets(4, {{1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}}));  // dup
  CHECK_THROWS(Triangulation::from_facets(5, {{1, 2, 3, 4, 5, 6}}));   // dim out of range
  // ridge {1,2,3,4} in three pentachora
  CHECK_THROWS(Triangulation::from_facets(
      4, {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 4, 7}}));
  // two pentachora sharing nothing: disconnected
  CHECK_THROWS(Triangulation::from_facets(4, {{1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}}));
}

TEST_CASE("face lattice indices and membership") {
  auto t = boundary_of_simplex(5);
  CHECK(t.faces(0).size() == 6);
  CHECK(t.face_index(0, {3}) == 2);
  CHECK(t.has_face(1, {2, 5}));
  CHECK(!t.has_face(4, {1, 2, 3, 4, 7}));
  CHECK_THROWS(t.face_index(1, {7, 8}));
  CHECK_THROWS(t.faces(5));
}

TEST_CASE("closed 4-complexes satisfy 2 N3 = 5 N4") {
  for (const auto& t : {boundary_of_simplex(5),
                        staircase_product(sphere(2), sphere(2)),
                        staircase_product(sphere(3), circle(3))}) {
    auto f = t.f_vector();
    CHECK(2 * f[3] == 5 * f[4]);
  }
}

TEST_CASE("staircase product sizes") {
  auto s2 = sphere(2);
  auto s2xs2 = staircase_product(s2, s2);
  CHECK(s2xs2.dim() == 4);
  CHECK(s2xs2.closed());
  CHECK(s2xs2.f_vector()[4] == 96);   // 4 * 4 * C(4,2)
  CHECK(s2xs2.f_vector()[0] == 16);
  CHECK(s2xs2.euler_characteristic() == 4);

  auto s3xs1 = staircase_product(sphere(3), circle(3));
  CHECK(s3xs1.f_vector()[4] == 60);   // 5 * 3 * C(4,1)
  CHECK(s3xs1.f_vector()[0] == 15);
  CHECK(s3xs1.euler_characteristic() == 0);

  auto t2 = staircase_product(circle(3), circle(3));
  CHECK(t2.dim() == 2);
  CHECK(t2.f_vector() == std::vector<long long>{9, 27, 18});
  CHECK(t2.euler_characteristic() == 0);

  auto t4 = staircase_product(staircase_product(t2, circle(3)), circle(3));
  CHECK(t4.f_vector()[0] == 81);
  CHECK(t4.f_vector()[4] == 1944);
  CHECK(t4.euler_characteristic() == 0);
  CHECK(t4.closed());

  CHECK_THROWS(staircase_product(t2, staircase_product(t2, circle(3))));  // dim 5
}

TEST_CASE("product with a point is rejected by construction rules") {
  // dimension 0 complexes are not representable at all
  CHECK_THROWS(Triangulation::from_facets(0, {{1}}));
}

TEST_CASE("the 6-vertex projective plane") {
  auto rp2 = projective_plane();
  CHECK(rp2.dim() == 2);
  CHECK(rp2.closed());
  CHECK(rp2.f_vector() == std::vector<long long>{6, 15, 10});
  CHECK(rp2.euler_characteristic() == 1);
  // every vertex link is a 5-cycle
  for (const auto& v : rp2.faces(0)) {
    auto link = rp2.link_facets(v);
    CHECK(link.size() == 5);
  }
  CHECK(betti_mod_p(rp2, 2) == std::vector<long long>{1, 1, 1});
  CHECK(betti_mod_p(rp2, 3) == std::vector<long long>{1, 0, 0});
}

TEST_CASE("orientation of the boundary of the 5-simplex alternates") {
  auto t = boundary_of_simplex(5);
  auto o = orient(t);
  REQUIRE(o.orientable);
  REQUIRE(o.sign.size() == 6);
  CHECK(o.sign[0] == 1);
  for (std::size_t i = 0; i < 6; ++i) CHECK(o.sign[i] == (i % 2 ? -1 : 1));
  // defining relation at every tetrahedron
  for (const auto& inc : t.ridge_incidence()) {
    int i0 = inc.drop[0] % 2 ? -1 : 1;
    int i1 = inc.drop[1] % 2 ? -1 : 1;
    CHECK(o.sign[inc.facet[0]] * i0 == -o.sign[inc.facet[1]] * i1);
  }
}

TEST_CASE("orientability of products") {
  CHECK(orient(staircase_product(sphere(2), sphere(2))).orientable);
  CHECK(orient(staircase_product(sphere(3), circle(3))).orientable);
  auto rp2xs2 = staircase_product(projective_plane(), sphere(2));
  CHECK(rp2xs2.f_vector()[4] == 240);
  CHECK(!orient(rp2xs2).orientable);
}

TEST_CASE("orient rejects bounded complexes and low dimensions") {
  CHECK_THROWS(orient(Triangulation::from_facets(4, {{1, 2, 3, 4, 5}})));
  CHECK_THROWS(orient(sphere(2)));
}

TEST_CASE("relabelling") {
  auto t = boundary_of_simplex(5);
  std::map<int, int> identity, swap12, partial, collide;
  for (int v = 1; v <= 6; ++v) identity[v] = v, swap12[v] = v, collide[v] = v;
  swap12[1] = 2;
  swap12[2] = 1;
  collide[1] = 2;
  partial[1] = 1;
  CHECK(t.relabel(identity) == t);
  CHECK(t.relabel(swap12) == t);  // symmetric complex
  CHECK_THROWS(t.relabel(partial));
  CHECK_THROWS(t.relabel(collide));

  std::map<int, int> shift;
  for (int v = 1; v <= 6; ++v) shift[v] = v + 10;
  auto s = t.relabel(shift);
  CHECK(s.f_vector() == t.f_vector());
  CHECK(s.closed());
  CHECK(!(s == t));
}

TEST_CASE("star and link") {
  auto t = boundary_of_simplex(5);
  CHECK(t.star_facets({1}).size() == 5);
  auto link = t.link_facets({6});
  CHECK(link.size() == 5);  // boundary of the 4-simplex on 1..5
  auto lt = Triangulation::from_facets(3, link);
  CHECK(lt.closed());
  CHECK(lt.f_vector() == std::vector<long long>{5, 10, 10, 5});
  // link of an edge in dimension 4 is a 2-sphere here
  auto elink = Triangulation::from_facets(2, t.link_facets({1, 2}));
  CHECK(elink.euler_characteristic() == 2);
}

TEST_CASE("TRI round trip") {
  auto t = staircase_product(sphere(2), sphere(2));
  t.set_name("product sphere2 sphere2");
  std::string text = emit_tri(t);
  std::istringstream in(text);
  auto back = ingest_tri(in);
  CHECK(back == t);
  CHECK(back.name() == t.name());
}

TEST_CASE("TRI ingest accepts comments and reports line numbers") {
  {
    std::istringstream in("# a comment\ndim 4\nname test space\n1 2 3 4 5 # trailing\n");
    auto t = ingest_tri(in);
    CHECK(t.name() == std::optional<std::string>("test space"));
    CHECK(t.facets().size() == 1);
  }
  auto fails_with = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      ingest_tri(in);
      FAIL_CHECK("expected failure: " << text);
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  fails_with("dim 3\n1 2 3 4\n", "line 1");
  fails_with("1 2 3 4 5\n", "line 1");             // facet before dim
  fails_with("dim 4\n1 2 3 4\n", "line 2");        // wrong arity
  fails_with("dim 4\n1 2 3 4 x\n", "line 2");      // junk token
  fails_with("dim 4\n0 2 3 4 5\n", "line 2");      // non-positive
  fails_with("dim 4\n", "no facets");
  fails_with("", "missing dim");
  fails_with("dim 4\ndim 4\n1 2 3 4 5\n", "line 2");
  fails_with("dim 4\n1 2 3 4 5\n1 2 3 4 5\n", "duplicate");
}

TEST_CASE("emission is lexicographically sorted") {
  std::istringstream in("dim 4\n2 3 4 5 6\n1 2 3 4 5\n1 2 3 4 6\n1 2 3 5 6\n1 2 4 5 6\n1 3 4 5 6\n");
  auto t = ingest_tri(in);
  std::string text = emit_tri(t);
  CHECK(text.find("1 2 3 4 5") < text.find("1 2 3 4 6"));
  CHECK(text.find("1 3 4 5 6") < text.find("2 3 4 5 6"));
}

TEST_CASE("homology of small spaces") {
  CHECK(betti_mod_p(boundary_of_simplex(5), 2) ==
        std::vector<long long>{1, 0, 0, 0, 1});
  CHECK(betti_mod_p(sphere(3), 5) == std::vector<long long>{1, 0, 0, 1});
  auto t2 = staircase_product(circle(3), circle(3));
  CHECK(betti_mod_p(t2, 2) == std::vector<long long>{1, 2, 1});
  CHECK(betti_mod_p(t2, 7) == std::vector<long long>{1, 2, 1});
  auto s2xs2 = staircase_product(sphere(2), sphere(2));
  CHECK(betti_mod_p(s2xs2, 3) == std::vector<long long>{1, 0, 2, 0, 1});
}
