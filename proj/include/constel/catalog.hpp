#ifndef CONSTEL_CATALOG_HPP
#define CONSTEL_CATALOG_HPP

#include <map>
#include <vector>

#include "constel/surface_map.hpp"

namespace constel {
namespace catalog {

/// Boundary of the tetrahedron: V=4, E=6, F=4, a triangulated sphere.
inline CombinatorialMap tetrahedron() {
  return map_from_faces({{1, 2, 3}, {1, 3, 4}, {1, 4, 2}, {2, 4, 3}});
}

/// Boundary of the octahedron: V=6, E=12, F=8, a triangulated sphere.
inline CombinatorialMap octahedron() {
  return map_from_faces({{1, 2, 3},
                         {1, 3, 4},
                         {1, 4, 5},
                         {1, 5, 2},
                         {6, 3, 2},
                         {6, 4, 3},
                         {6, 5, 4},
                         {6, 2, 5}});
}

/// Two triangles glued along their boundary: V=3, E=3, F=2 on the sphere.
inline CombinatorialMap two_triangle_sphere() {
  return map_from_faces({{1, 2, 3}, {1, 3, 2}});
}

/// The one-vertex torus triangulation: V=1, E=3, F=2, chi=0.  Hand-coded
/// darts since every edge is a loop.
inline CombinatorialMap one_vertex_torus() {
  Perm alpha = Perm::from_images({2, 1, 4, 3, 6, 5});
  Perm sigma = Perm::from_images({4, 3, 6, 5, 2, 1});
  return CombinatorialMap(6, alpha, sigma);
}

/// Boundary of the cube with checkerboard {0,1} vertex labels: a bicolored
/// quadrangulation of the sphere (q=6, v=8).
inline LabeledMap cube() {
  std::vector<std::vector<int>> faces = {{1, 4, 3, 2}, {5, 6, 7, 8}, {1, 2, 6, 5},
                                         {2, 3, 7, 6}, {3, 4, 8, 7}, {4, 1, 5, 8}};
  std::map<int, int> labels = {{1, 0}, {2, 1}, {3, 0}, {4, 1},
                               {5, 1}, {6, 0}, {7, 1}, {8, 0}};
  return labeled_map_from_faces(faces, labels);
}

/// rows x cols grid quadrangulation of the torus with checkerboard labels.
/// Both dimensions must be even for the 2-coloring to close up.
inline LabeledMap torus_grid(int rows, int cols) {
  if (rows < 2 || cols < 2 || rows % 2 != 0 || cols % 2 != 0)
    throw Error("torus grid needs even dimensions >= 2");
  // face (i,j) has darts 4*(i*cols+j)+1..+4; dart k runs between corners
  // k and k+1 of the square, corners (i,j),(i+1,j),(i+1,j+1),(i,j+1).
  auto did = [&](int i, int j, int k) {
    i = (i % rows + rows) % rows;
    j = (j % cols + cols) % cols;
    return 4 * (i * cols + j) + k + 1;
  };
  int n = 4 * rows * cols;
  std::vector<int> phi(static_cast<std::size_t>(n)), alpha(static_cast<std::size_t>(n));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      for (int k = 0; k < 4; ++k)
        phi[static_cast<std::size_t>(did(i, j, k) - 1)] = did(i, j, (k + 1) % 4);
      alpha[static_cast<std::size_t>(did(i, j, 0) - 1)] = did(i, j - 1, 2);
      alpha[static_cast<std::size_t>(did(i, j - 1, 2) - 1)] = did(i, j, 0);
      alpha[static_cast<std::size_t>(did(i, j, 1) - 1)] = did(i + 1, j, 3);
      alpha[static_cast<std::size_t>(did(i + 1, j, 3) - 1)] = did(i, j, 1);
    }
  Perm alpha_p = Perm::from_images(alpha);
  Perm phi_p = Perm::from_images(phi);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int y = 1; y <= n; ++y)
    sigma[static_cast<std::size_t>(y - 1)] = phi_p(alpha_p(y));
  LabeledMap out;
  out.map = CombinatorialMap(n, alpha_p, Perm::from_images(sigma));
  // tail corner of dart k of face (i,j): k=0 -> (i,j), 1 -> (i+1,j),
  // 2 -> (i+1,j+1), 3 -> (i,j+1); label = (i+j) mod 2.
  auto tail_parity = [&](int dart) {
    int cell = (dart - 1) / 4, k = (dart - 1) % 4;
    int i = cell / cols, j = cell % cols;
    switch (k) {
      case 0: return (i + j) % 2;
      case 1: return (i + 1 + j) % 2;
      case 2: return (i + 1 + j + 1) % 2;
      default: return (i + j + 1) % 2;
    }
  };
  for (const auto& cyc : out.map.sigma.cycles(true)) {
    int id = *std::min_element(cyc.begin(), cyc.end());
    int lab = tail_parity(cyc.front());
    for (int x : cyc)
      if (tail_parity(x) != lab) throw Error("internal: grid vertex labels disagree");
    out.labels[id] = lab;
  }
  return out;
}

} // namespace catalog
} // namespace constel

#endif
