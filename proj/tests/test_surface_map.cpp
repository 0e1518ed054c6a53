#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "constel/catalog.hpp"
#include "constel/surface_map.hpp"

using namespace constel;

namespace {

/// Disjoint union, for connectivity tests.
CombinatorialMap disjoint_union(const CombinatorialMap& a, const CombinatorialMap& b) {
  int n = a.dart_count + b.dart_count;
  std::vector<int> alpha(static_cast<std::size_t>(n)), sigma(static_cast<std::size_t>(n));
  for (int x = 1; x <= a.dart_count; ++x) {
    alpha[static_cast<std::size_t>(x - 1)] = a.alpha(x);
    sigma[static_cast<std::size_t>(x - 1)] = a.sigma(x);
  }
  for (int x = 1; x <= b.dart_count; ++x) {
    alpha[static_cast<std::size_t>(a.dart_count + x - 1)] = a.dart_count + b.alpha(x);
    sigma[static_cast<std::size_t>(a.dart_count + x - 1)] = a.dart_count + b.sigma(x);
  }
  return CombinatorialMap(n, Perm::from_images(alpha), Perm::from_images(sigma));
}

/// Darts of flippable edges: both sides distinct triangles.
std::vector<int> flippable_edges(const CombinatorialMap& m) {
  std::vector<int> face_id = face_of_dart(m);
  std::vector<int> size_of(static_cast<std::size_t>(m.dart_count) + 1, 0);
  for (const auto& f : m.face_cycles())
    for (int x : f) size_of[static_cast<std::size_t>(x)] = static_cast<int>(f.size());
  std::vector<int> out;
  for (int x = 1; x <= m.dart_count; ++x) {
    int y = m.alpha(x);
    if (x > y) continue;
    if (face_id[static_cast<std::size_t>(x)] == face_id[static_cast<std::size_t>(y)])
      continue;
    if (size_of[static_cast<std::size_t>(x)] == 3 && size_of[static_cast<std::size_t>(y)] == 3)
      out.push_back(x);
  }
  return out;
}

int count_labels(const LabeledMap& lm, int label) {
  int n = 0;
  for (const auto& [v, lab] : lm.labels)
    if (lab == label) ++n;
  return n;
}

} // namespace

TEST_CASE("validate map") {
  SECTION("tetrahedron") {
    auto r = validate_map(catalog::tetrahedron());
    CHECK(r.valid());
    CHECK(r.vertices == 4);
    CHECK(r.edges == 6);
    CHECK(r.faces == 4);
    CHECK(r.euler_characteristic == 2);
  }
  SECTION("alpha with a fixed dart is invalid") {
    // alpha = (1 2) on 4 darts fixes darts 3,4
    CombinatorialMap m(4, Perm::parse_cycles("(1 2)", 4), Perm::parse_cycles("(1 2 3 4)", 4));
    auto r = validate_map(m);
    CHECK_FALSE(r.fixed_point_free);
    CHECK_FALSE(r.valid());
  }
  SECTION("involution violated") {
    CombinatorialMap m(4, Perm::parse_cycles("(1 2 3 4)", 4), Perm(4));
    auto r = validate_map(m);
    CHECK_FALSE(r.involution_ok);
  }
  SECTION("disconnected map reported") {
    auto two = disjoint_union(catalog::two_triangle_sphere(), catalog::two_triangle_sphere());
    auto r = validate_map(two);
    CHECK(r.involution_ok);
    CHECK_FALSE(r.connected);
    CHECK_FALSE(r.valid());
  }
}

TEST_CASE("euler characteristic of maps") {
  CHECK(euler_characteristic(catalog::tetrahedron()) == 2);
  CHECK(euler_characteristic(catalog::octahedron()) == 2);
  CHECK(euler_characteristic(catalog::two_triangle_sphere()) == 2);
  CHECK(euler_characteristic(catalog::one_vertex_torus()) == 0);
  CHECK(euler_characteristic(catalog::cube().map) == 2);
  CHECK(euler_characteristic(catalog::torus_grid(2, 2).map) == 0);

  auto torus = validate_map(catalog::one_vertex_torus());
  CHECK(torus.vertices == 1);
  CHECK(torus.edges == 3);
  CHECK(torus.faces == 2);
}

TEST_CASE("barycentric subdivision") {
  SECTION("tetrahedron counts") {
    auto lm = barycentric_subdivide(catalog::tetrahedron());
    auto r = validate_map(lm.map);
    CHECK(r.valid());
    CHECK(r.faces == 24);
    CHECK(r.vertices == 14);
    CHECK(r.euler_characteristic == 2);
    CHECK(count_labels(lm, 0) == 4);
    CHECK(count_labels(lm, 1) == 6);
    CHECK(count_labels(lm, 2) == 4);
  }
  SECTION("one-vertex torus counts") {
    auto lm = barycentric_subdivide(catalog::one_vertex_torus());
    auto r = validate_map(lm.map);
    CHECK(r.valid());
    CHECK(r.faces == 12);
    CHECK(r.vertices == 6);
    CHECK(r.euler_characteristic == 0);
    CHECK(count_labels(lm, 0) == 1);
    CHECK(count_labels(lm, 1) == 3);
    CHECK(count_labels(lm, 2) == 2);
  }
  SECTION("every face is a triangle with one vertex of each label") {
    for (const auto& m : {catalog::tetrahedron(), catalog::octahedron(),
                          catalog::one_vertex_torus(), catalog::two_triangle_sphere()}) {
      auto lm = barycentric_subdivide(m);
      CHECK(euler_characteristic(lm.map) == euler_characteristic(m));
      auto vert = vertex_of_dart(lm.map);
      for (const auto& f : lm.map.face_cycles()) {
        REQUIRE(f.size() == 3);
        std::set<int> labs;
        for (int x : f) labs.insert(lm.labels.at(vert[static_cast<std::size_t>(x)]));
        CHECK(labs == std::set<int>{0, 1, 2});
      }
    }
  }
}

TEST_CASE("dessin extraction") {
  SECTION("tetrahedron dessin has 12 edges with valences 3 and 2") {
    auto dessin = extract_dessin(barycentric_subdivide(catalog::tetrahedron()));
    auto r = validate_map(dessin.map);
    CHECK(r.valid());
    CHECK(r.edges == 12);
    for (const auto& cyc : dessin.map.sigma.cycles(true)) {
      int id = *std::min_element(cyc.begin(), cyc.end());
      if (dessin.labels.at(id) == 0)
        CHECK(cyc.size() == 3);
      else
        CHECK(cyc.size() == 2);
    }
  }
  SECTION("torus dessin has 6 edges") {
    auto dessin = extract_dessin(barycentric_subdivide(catalog::one_vertex_torus()));
    CHECK(validate_map(dessin.map).edges == 6);
  }
  SECTION("a {0,1} quadrangulation is its own dessin") {
    auto cube = catalog::cube();
    auto dessin = extract_dessin(cube);
    CHECK(dessin.map.dart_count == cube.map.dart_count);
    CHECK(isomorphic(dessin, cube));
  }
  SECTION("bad labels rejected") {
    auto lm = catalog::cube();
    lm.labels.begin()->second = 7;
    CHECK_THROWS_AS(extract_dessin(lm), Error);
  }
}

TEST_CASE("dessin constellation") {
  SECTION("tetrahedron: degree 12, branching 22") {
    auto c = dessin_constellation(extract_dessin(barycentric_subdivide(catalog::tetrahedron())));
    CHECK(c.degree == 12);
    CHECK(validate(c).valid());
    CHECK(branching_total(c) == 22);
    CHECK(euler_characteristic(c) == 2);
  }
  SECTION("one-vertex torus: degree 6 = 3t, branching 12") {
    auto c =
        dessin_constellation(extract_dessin(barycentric_subdivide(catalog::one_vertex_torus())));
    CHECK(c.degree == 6);
    CHECK(branching_total(c) == 12);
    CHECK(euler_characteristic(c) == 0);
  }
  SECTION("two-triangle sphere: degree 6, branching 10") {
    auto c = dessin_constellation(
        extract_dessin(barycentric_subdivide(catalog::two_triangle_sphere())));
    CHECK(c.degree == 6);
    CHECK(branching_total(c) == 10);
    CHECK(euler_characteristic(c) == 2);
  }
  SECTION("product is the identity by construction") {
    auto c = dessin_constellation(extract_dessin(barycentric_subdivide(catalog::octahedron())));
    Perm prod(c.degree);
    for (const auto& s : c.tuple) prod = prod * s;
    CHECK(prod.is_identity());
  }
  SECTION("cross-module oracle: constellation chi equals surface chi") {
    for (const auto& m : {catalog::tetrahedron(), catalog::octahedron(),
                          catalog::one_vertex_torus(), catalog::two_triangle_sphere()}) {
      auto c = dessin_constellation(extract_dessin(barycentric_subdivide(m)));
      CHECK(euler_characteristic(c) == euler_characteristic(m));
      CHECK(c.degree == 3 * validate_map(m).faces);
    }
  }
  SECTION("disconnected dessin rejected") {
    auto a = barycentric_subdivide(catalog::tetrahedron());
    auto b = barycentric_subdivide(catalog::tetrahedron());
    LabeledMap both;
    both.map = disjoint_union(a.map, b.map);
    both.labels = a.labels;
    for (const auto& [v, lab] : b.labels) both.labels[a.map.dart_count + v] = lab;
    CHECK_THROWS_AS(dessin_constellation(extract_dessin(both)), Error);
  }
}

TEST_CASE("edge flip") {
  SECTION("octahedron flips preserve V, E, F") {
    auto m = catalog::octahedron();
    for (int dart : flippable_edges(m)) {
      auto flipped = edge_flip(m, dart);
      auto r = validate_map(flipped);
      CHECK(r.valid());
      CHECK(r.vertices == 6);
      CHECK(r.edges == 12);
      CHECK(r.faces == 8);
      CHECK(r.euler_characteristic == 2);
    }
  }
  SECTION("flipping the new edge back gives the original up to relabeling") {
    for (const auto& m : {catalog::octahedron(), catalog::one_vertex_torus()}) {
      for (int dart : flippable_edges(m)) {
        auto twice = edge_flip(edge_flip(m, dart), dart);
        CHECK(isomorphic(twice, m));
      }
    }
  }
  SECTION("edge bordering one face twice rejected") {
    // triangle (1 2 3) where 2 = alpha(1): the face meets edge {1,2} twice
    CombinatorialMap m(6, Perm::parse_cycles("(1 2)(3 4)(5 6)", 6),
                       Perm::parse_cycles("(1 3 5 4)", 6));
    REQUIRE(validate_map(m).valid());
    CHECK_THROWS_AS(edge_flip(m, 1), Error);
  }
  SECTION("non-triangular face rejected") {
    CHECK_THROWS_AS(edge_flip(catalog::cube().map, 1), Error);
  }
  SECTION("random flip walks stay triangulations of the same surface") {
    std::mt19937 rng(31);
    for (auto seed : {catalog::octahedron(), catalog::one_vertex_torus()}) {
      auto m = seed;
      auto base = validate_map(seed);
      for (int step = 0; step < 30; ++step) {
        auto edges = flippable_edges(m);
        if (edges.empty()) break;
        m = edge_flip(m, edges[rng() % edges.size()]);
        auto r = validate_map(m);
        REQUIRE(r.valid());
        CHECK(r.vertices == base.vertices);
        CHECK(r.edges == base.edges);
        CHECK(r.faces == base.faces);
      }
    }
  }
}

TEST_CASE("quadrangulation validation") {
  SECTION("2x2 torus grid") {
    auto r = validate_quadrangulation(catalog::torus_grid(2, 2));
    CHECK(r.valid());
    CHECK(r.quads == 4);
    CHECK(r.vertices == 4);
    CHECK(r.euler_characteristic == 0);
    CHECK(r.identity_holds);
  }
  SECTION("cube") {
    auto r = validate_quadrangulation(catalog::cube());
    CHECK(r.valid());
    CHECK(r.quads == 6);
    CHECK(r.vertices == 8);
    CHECK(r.euler_characteristic == 2);
    CHECK(r.identity_holds); // 6 = 8 - 2
  }
  SECTION("non-alternating labels rejected") {
    auto lm = catalog::cube();
    for (auto& [v, lab] : lm.labels) lab = 0;
    auto r = validate_quadrangulation(lm);
    CHECK_FALSE(r.labels_alternate);
    CHECK_FALSE(r.valid());
  }
  SECTION("triangulation is not a quadrangulation") {
    LabeledMap lm;
    lm.map = catalog::tetrahedron();
    for (const auto& cyc : lm.map.sigma.cycles(true))
      lm.labels[*std::min_element(cyc.begin(), cyc.end())] = 0;
    auto r = validate_quadrangulation(lm);
    CHECK_FALSE(r.all_quads);
  }
}

TEST_CASE("dual matching") {
  SECTION("torus grid has a perfect matching of size 2") {
    auto m = dual_matching(catalog::torus_grid(2, 2));
    CHECK(m.perfect());
    CHECK(m.pairs.size() == 2);
  }
  SECTION("cube has a perfect matching of size 3") {
    auto m = dual_matching(catalog::cube());
    CHECK(m.perfect());
    CHECK(m.pairs.size() == 3);
    // pairs are dual-adjacent by construction; check disjoint coverage
    auto covered = m.covered();
    CHECK(covered.size() == 6);
    CHECK(std::adjacent_find(covered.begin(), covered.end()) == covered.end());
  }
  SECTION("deterministic") {
    auto a = dual_matching(catalog::cube());
    auto b = dual_matching(catalog::cube());
    CHECK(a.pairs == b.pairs);
  }
  SECTION("odd face count yields a failure certificate") {
    // single-quad sphere: doubled path on three vertices labeled 0,1,0
    CombinatorialMap m(4, Perm::parse_cycles("(1 2)(3 4)", 4), Perm::parse_cycles("(2 3)", 4));
    LabeledMap lm;
    lm.map = m;
    auto vert = vertex_of_dart(m);
    lm.labels[vert[1]] = 0;
    lm.labels[vert[2]] = 1;
    lm.labels[vert[4]] = 0;
    REQUIRE(validate_quadrangulation(lm).valid());
    auto match = dual_matching(lm);
    CHECK_FALSE(match.perfect());
    CHECK(match.unmatched.size() == 1);
  }
  SECTION("larger grids match perfectly") {
    for (auto [r, c] : {std::pair{2, 4}, {4, 4}, {2, 6}}) {
      auto m = dual_matching(catalog::torus_grid(r, c));
      CHECK(m.perfect());
      CHECK(m.pairs.size() == static_cast<std::size_t>(r * c / 2));
    }
  }
}

TEST_CASE("blossom matcher on odd-cycle graphs") {
  SECTION("petersen graph has a perfect matching") {
    std::vector<std::vector<int>> adj(10);
    auto link = [&](int a, int b) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    };
    for (int i = 0; i < 5; ++i) link(i, (i + 1) % 5);      // outer cycle
    for (int i = 0; i < 5; ++i) link(5 + i, 5 + (i + 2) % 5); // pentagram
    for (int i = 0; i < 5; ++i) link(i, i + 5);            // spokes
    detail::BlossomMatcher matcher(adj);
    auto match = matcher.solve();
    int matched = 0;
    for (int v = 0; v < 10; ++v) {
      if (match[static_cast<std::size_t>(v)] == -1) continue;
      CHECK(match[static_cast<std::size_t>(match[static_cast<std::size_t>(v)])] == v);
      ++matched;
    }
    CHECK(matched == 10);
  }
  SECTION("odd component certificate") {
    // triangle with a pendant vertex on each corner: maximum matching 3,
    // but 6 vertices pair up; removing one pendant leaves 5, one exposed
    std::vector<std::vector<int>> adj(5);
    auto link = [&](int a, int b) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    };
    link(0, 1);
    link(1, 2);
    link(2, 0);
    link(0, 3);
    link(1, 4);
    detail::BlossomMatcher matcher(adj);
    auto match = matcher.solve();
    int exposed = 0;
    for (int v = 0; v < 5; ++v)
      if (match[static_cast<std::size_t>(v)] == -1) ++exposed;
    CHECK(exposed == 1); // maximum matching has size 2 on 5 vertices
  }
}

TEST_CASE("hexagon merge") {
  SECTION("torus grid merges to 2 hexagons") {
    auto lm = catalog::torus_grid(2, 2);
    auto merged = merge_to_hexagons(lm, dual_matching(lm));
    auto r = validate_map(merged.map);
    CHECK(r.valid());
    CHECK(r.faces == 2);
    for (const auto& f : merged.map.face_cycles()) CHECK(f.size() == 6);
    CHECK(2 * r.faces == r.vertices - r.euler_characteristic);
  }
  SECTION("cube merges to 3 hexagons") {
    auto lm = catalog::cube();
    auto merged = merge_to_hexagons(lm, dual_matching(lm));
    auto r = validate_map(merged.map);
    CHECK(r.valid());
    CHECK(r.faces == 3);
    CHECK(r.vertices == 8);
    CHECK(r.euler_characteristic == 2);
    CHECK(2 * r.faces == r.vertices - r.euler_characteristic);
  }
  SECTION("merged torus dessin has degree 3h") {
    auto lm = catalog::torus_grid(2, 2);
    auto merged = merge_to_hexagons(lm, dual_matching(lm));
    auto c = dessin_constellation(extract_dessin(merged));
    CHECK(c.degree == 6);
    CHECK(euler_characteristic(c) == 0);
  }
  SECTION("labels survive the merge alternating") {
    auto lm = catalog::cube();
    auto merged = merge_to_hexagons(lm, dual_matching(lm));
    auto vert = vertex_of_dart(merged.map);
    for (const auto& f : merged.map.face_cycles()) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        int a = merged.labels.at(vert[static_cast<std::size_t>(f[i])]);
        int b = merged.labels.at(vert[static_cast<std::size_t>(f[(i + 1) % f.size()])]);
        CHECK(a != b);
      }
    }
  }
  SECTION("non-perfect matching rejected") {
    auto lm = catalog::torus_grid(2, 2);
    Matching empty;
    empty.unmatched = {1};
    CHECK_THROWS_AS(merge_to_hexagons(lm, empty), Error);
  }
}

TEST_CASE("valid maps have even euler characteristic at most 2") {
  std::vector<CombinatorialMap> pool = {catalog::tetrahedron(), catalog::octahedron(),
                                        catalog::two_triangle_sphere(),
                                        catalog::one_vertex_torus(), catalog::cube().map,
                                        catalog::torus_grid(2, 4).map};
  std::mt19937 rng(53);
  for (auto seed : {catalog::octahedron(), catalog::one_vertex_torus()}) {
    auto m = seed;
    for (int i = 0; i < 10; ++i) {
      auto edges = flippable_edges(m);
      if (edges.empty()) break;
      m = edge_flip(m, edges[rng() % edges.size()]);
      pool.push_back(m);
    }
  }
  for (const auto& m : pool) {
    int chi = euler_characteristic(m);
    CHECK(chi % 2 == 0);
    CHECK(chi <= 2);
    CHECK(euler_characteristic(barycentric_subdivide(m).map) == chi);
  }
}

TEST_CASE("map isomorphism") {
  CHECK(isomorphic(catalog::tetrahedron(), catalog::tetrahedron()));
  CHECK_FALSE(isomorphic(catalog::tetrahedron(), catalog::octahedron()));
  CHECK_FALSE(isomorphic(catalog::two_triangle_sphere(), catalog::one_vertex_torus()));

  // relabeling darts preserves the encoding
  auto m = catalog::tetrahedron();
  std::mt19937 rng(41);
  std::vector<int> relabel(static_cast<std::size_t>(m.dart_count));
  std::iota(relabel.begin(), relabel.end(), 1);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  Perm g = Perm::from_images(relabel);
  CombinatorialMap rel(m.dart_count, m.alpha.conjugated_by(g), m.sigma.conjugated_by(g));
  CHECK(isomorphic(m, rel));
}

TEST_CASE("map_from_faces rejects bad gluings") {
  CHECK_THROWS_AS(map_from_faces({{1, 2, 3}}), Error);           // no reverses
  CHECK_THROWS_AS(map_from_faces({{1, 2, 3}, {1, 2, 3}}), Error); // repeated directed edge
}
