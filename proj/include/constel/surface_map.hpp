#ifndef CONSTEL_SURFACE_MAP_HPP
#define CONSTEL_SURFACE_MAP_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "constel/constellation.hpp"
#include "constel/errors.hpp"
#include "constel/perm.hpp"

namespace constel {

/// A graph embedded in a closed oriented surface, as a rotation system:
/// darts 1..2E, a fixed-point-free edge involution alpha, and a vertex
/// rotation sigma.  Faces are the cycles of phi with phi(x) = sigma(alpha(x)).
struct CombinatorialMap {
  int dart_count = 0;
  Perm alpha;
  Perm sigma;

  CombinatorialMap() : dart_count(0), alpha(1), sigma(1) {}
  CombinatorialMap(int darts, Perm a, Perm s)
      : dart_count(darts), alpha(std::move(a)), sigma(std::move(s)) {}

  Perm phi() const { return alpha * sigma; } // (alpha*sigma)(x) = sigma(alpha(x))

  std::vector<std::vector<int>> vertex_cycles() const { return sigma.cycles(true); }
  std::vector<std::vector<int>> edge_cycles() const { return alpha.cycles(true); }
  std::vector<std::vector<int>> face_cycles() const { return phi().cycles(true); }

  bool operator==(const CombinatorialMap&) const = default;
};

struct MapReport {
  bool sizes_ok = false;       // dart_count even, positive, degrees agree
  bool involution_ok = false;  // alpha * alpha = id
  bool fixed_point_free = false;
  bool connected = false;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_characteristic = 0;
  std::vector<std::string> messages;

  bool valid() const {
    return sizes_ok && involution_ok && fixed_point_free && connected;
  }
};

inline MapReport validate_map(const CombinatorialMap& m) {
  MapReport r;
  r.sizes_ok = m.dart_count >= 2 && m.dart_count % 2 == 0 &&
               m.alpha.degree() == m.dart_count && m.sigma.degree() == m.dart_count;
  if (!r.sizes_ok) {
    r.messages.push_back("dart count must be even and positive and match alpha/sigma");
    return r;
  }
  r.involution_ok = (m.alpha * m.alpha).is_identity();
  if (!r.involution_ok) r.messages.push_back("alpha is not an involution");
  r.fixed_point_free = true;
  for (int x = 1; x <= m.dart_count; ++x)
    if (m.alpha(x) == x) {
      r.fixed_point_free = false;
      r.messages.push_back("alpha fixes dart " + std::to_string(x));
      break;
    }
  std::vector<Perm> gens{m.sigma, m.alpha};
  r.connected =
      static_cast<int>(orbit_closure(std::span<const Perm>(gens), 1).size()) == m.dart_count;
  if (!r.connected) r.messages.push_back("map is not connected");
  r.vertices = static_cast<int>(m.sigma.cycles(true).size());
  r.edges = m.dart_count / 2;
  r.faces = static_cast<int>(m.phi().cycles(true).size());
  r.euler_characteristic = r.vertices - r.edges + r.faces;
  return r;
}

inline int euler_characteristic(const CombinatorialMap& m) {
  MapReport r = validate_map(m);
  if (!r.valid())
    throw Error("map is not valid: " +
                (r.messages.empty() ? std::string("unknown") : r.messages.front()));
  return r.euler_characteristic;
}

/// Vertex identity = least dart in its sigma-cycle; maps every dart to the
/// identity of the vertex it points out of.
inline std::vector<int> vertex_of_dart(const CombinatorialMap& m) {
  std::vector<int> vert(static_cast<std::size_t>(m.dart_count) + 1, 0);
  for (const auto& cyc : m.sigma.cycles(true)) {
    int id = *std::min_element(cyc.begin(), cyc.end());
    for (int x : cyc) vert[static_cast<std::size_t>(x)] = id;
  }
  return vert;
}

/// Face identity = least dart in its phi-cycle.
inline std::vector<int> face_of_dart(const CombinatorialMap& m) {
  std::vector<int> face(static_cast<std::size_t>(m.dart_count) + 1, 0);
  for (const auto& cyc : m.phi().cycles(true)) {
    int id = *std::min_element(cyc.begin(), cyc.end());
    for (int x : cyc) face[static_cast<std::size_t>(x)] = id;
  }
  return face;
}

/// A combinatorial map with a label per vertex (keyed by vertex identity).
/// Labels are {0,1,2} for barycentric types or {0,1} for transversal copies.
struct LabeledMap {
  CombinatorialMap map;
  std::map<int, int> labels;

  bool operator==(const LabeledMap&) const = default;
};

/// Build a map from oriented faces given as vertex cycles.  Every directed
/// edge (u,v) must occur exactly once with its reverse (v,u) present; this
/// rules out loops and doubled directed edges, which is fine for the
/// polyhedral fixtures this is used for.
inline CombinatorialMap map_from_faces(const std::vector<std::vector<int>>& faces) {
  std::vector<std::pair<int, int>> darts; // dart i+1 = (tail, head)
  std::vector<int> phi_img;
  for (const auto& f : faces) {
    if (f.size() < 2) throw Error("face needs at least two vertices");
    int base = static_cast<int>(darts.size());
    int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) {
      darts.emplace_back(f[static_cast<std::size_t>(i)],
                         f[static_cast<std::size_t>((i + 1) % k)]);
      phi_img.push_back(base + (i + 1) % k + 1);
    }
  }
  int n = static_cast<int>(darts.size());
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(darts[static_cast<std::size_t>(i)], i + 1).second)
      throw Error("directed edge repeated; use explicit darts for such maps");
  }
  std::vector<int> alpha_img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto [u, v] = darts[static_cast<std::size_t>(i)];
    auto it = index.find({v, u});
    if (it == index.end())
      throw Error("directed edge (" + std::to_string(u) + "," + std::to_string(v) +
                  ") has no reverse");
    alpha_img[static_cast<std::size_t>(i)] = it->second;
  }
  Perm alpha = Perm::from_images(alpha_img);
  Perm phi = Perm::from_images(phi_img);
  // phi(x) = sigma(alpha(x))  =>  sigma(y) = phi(alpha(y))
  std::vector<int> sigma_img(static_cast<std::size_t>(n));
  for (int y = 1; y <= n; ++y)
    sigma_img[static_cast<std::size_t>(y - 1)] = phi(alpha(y));
  return CombinatorialMap(n, alpha, Perm::from_images(sigma_img));
}

/// map_from_faces plus labels given per original vertex number.
inline LabeledMap labeled_map_from_faces(const std::vector<std::vector<int>>& faces,
                                         const std::map<int, int>& vertex_labels) {
  CombinatorialMap m = map_from_faces(faces);
  // Recover which original vertex each rotation cycle belongs to: dart
  // (tail,head) points out of tail, and darts were numbered in face order.
  std::vector<int> tail;
  tail.push_back(0);
  for (const auto& f : faces) {
    int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) tail.push_back(f[static_cast<std::size_t>(i)]);
  }
  LabeledMap lm;
  lm.map = m;
  for (const auto& cyc : m.sigma.cycles(true)) {
    int id = *std::min_element(cyc.begin(), cyc.end());
    int v = tail[static_cast<std::size_t>(id)];
    auto it = vertex_labels.find(v);
    if (it == vertex_labels.end())
      throw Error("no label for vertex " + std::to_string(v));
    lm.labels[id] = it->second;
  }
  return lm;
}

/// First barycentric subdivision.  Each face of size k becomes 2k triangles;
/// original vertices get label 0, edge midpoints 1, face centers 2.
///
/// New darts per old dart x (u = tail, w = head, m = midpoint, c = center):
///   triangle (u,m,c): 6x-5 = u>m, 6x-4 = m>c, 6x-3 = c>u
///   triangle (m,w,c): 6x-2 = m>w, 6x-1 = w>c, 6x   = c>m
inline LabeledMap barycentric_subdivide(const CombinatorialMap& m) {
  MapReport rep = validate_map(m);
  if (!rep.valid()) throw Error("cannot subdivide an invalid map");
  int n = m.dart_count;
  Perm phi = m.phi();
  Perm phi_inv = phi.inverse();

  int big = 6 * n;
  std::vector<int> alpha2(static_cast<std::size_t>(big));
  std::vector<int> phi2(static_cast<std::size_t>(big));
  auto set2 = [&](std::vector<int>& v, int at, int to) {
    v[static_cast<std::size_t>(at - 1)] = to;
  };
  for (int x = 1; x <= n; ++x) {
    set2(alpha2, 6 * x - 5, 6 * m.alpha(x) - 2);
    set2(alpha2, 6 * m.alpha(x) - 2, 6 * x - 5);
    set2(alpha2, 6 * x - 4, 6 * x);
    set2(alpha2, 6 * x, 6 * x - 4);
    set2(alpha2, 6 * x - 3, 6 * phi_inv(x) - 1);
    set2(alpha2, 6 * phi_inv(x) - 1, 6 * x - 3);
    set2(phi2, 6 * x - 5, 6 * x - 4);
    set2(phi2, 6 * x - 4, 6 * x - 3);
    set2(phi2, 6 * x - 3, 6 * x - 5);
    set2(phi2, 6 * x - 2, 6 * x - 1);
    set2(phi2, 6 * x - 1, 6 * x);
    set2(phi2, 6 * x, 6 * x - 2);
  }
  Perm alpha_new = Perm::from_images(alpha2);
  Perm phi_new = Perm::from_images(phi2);
  std::vector<int> sigma2(static_cast<std::size_t>(big));
  for (int y = 1; y <= big; ++y)
    sigma2[static_cast<std::size_t>(y - 1)] = phi_new(alpha_new(y));

  LabeledMap out;
  out.map = CombinatorialMap(big, alpha_new, Perm::from_images(sigma2));
  // Dart residue mod 6 determines the type of its tail vertex.
  auto type_of = [](int dart) {
    switch (dart % 6) {
      case 1: return 0; // u>m starts at an original vertex
      case 2: return 1; // m>c
      case 3: return 2; // c>u
      case 4: return 1; // m>w
      case 5: return 0; // w>c
      default: return 2; // c>m
    }
  };
  for (const auto& cyc : out.map.sigma.cycles(true)) {
    int id = *std::min_element(cyc.begin(), cyc.end());
    int t = type_of(cyc.front());
    for (int x : cyc)
      if (type_of(x) != t) throw Error("internal: mixed labels in subdivision vertex");
    out.labels[id] = t;
  }
  return out;
}

/// Keep exactly the darts of edges joining a 0-vertex to a 1-vertex, with
/// the induced rotation at each retained vertex.  Darts are renumbered
/// consecutively in increasing old-dart order.
inline LabeledMap extract_dessin(const LabeledMap& lm) {
  const CombinatorialMap& m = lm.map;
  for (const auto& [v, lab] : lm.labels)
    if (lab < 0 || lab > 2)
      throw Error("dessin extraction needs labels in {0,1,2}, got " + std::to_string(lab));
  std::vector<int> vert = vertex_of_dart(m);
  auto label_of = [&](int dart) {
    auto it = lm.labels.find(vert[static_cast<std::size_t>(dart)]);
    if (it == lm.labels.end())
      throw Error("unlabeled vertex " + std::to_string(vert[static_cast<std::size_t>(dart)]));
    return it->second;
  };
  std::vector<int> keep;
  std::vector<bool> kept(static_cast<std::size_t>(m.dart_count) + 1, false);
  for (int x = 1; x <= m.dart_count; ++x) {
    int a = label_of(x), b = label_of(m.alpha(x));
    if ((a == 0 && b == 1) || (a == 1 && b == 0)) {
      keep.push_back(x);
      kept[static_cast<std::size_t>(x)] = true;
    }
  }
  if (keep.empty()) throw Error("map has no edges joining labels 0 and 1");

  std::vector<int> renum(static_cast<std::size_t>(m.dart_count) + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i)
    renum[static_cast<std::size_t>(keep[i])] = static_cast<int>(i) + 1;

  int k = static_cast<int>(keep.size());
  std::vector<int> alpha2(static_cast<std::size_t>(k)), sigma2(static_cast<std::size_t>(k));
  for (int x : keep) {
    alpha2[static_cast<std::size_t>(renum[static_cast<std::size_t>(x)] - 1)] =
        renum[static_cast<std::size_t>(m.alpha(x))];
    int y = m.sigma(x);
    while (!kept[static_cast<std::size_t>(y)]) y = m.sigma(y);
    sigma2[static_cast<std::size_t>(renum[static_cast<std::size_t>(x)] - 1)] =
        renum[static_cast<std::size_t>(y)];
  }
  LabeledMap out;
  out.map = CombinatorialMap(k, Perm::from_images(alpha2), Perm::from_images(sigma2));
  for (const auto& cyc : out.map.sigma.cycles(true)) {
    int id = *std::min_element(cyc.begin(), cyc.end());
    out.labels[id] = label_of(keep[static_cast<std::size_t>(cyc.front() - 1)]);
  }
  return out;
}

/// Monodromy of the canonical Belyi map of a bipartite {0,1}-labeled map:
/// sheets are the edges (sorted by least dart), sigma_0 rotates edges around
/// 0-vertices, sigma_1 around 1-vertices, sigma_inf = (sigma_0 sigma_1)^-1.
inline Constellation dessin_constellation(const LabeledMap& lm) {
  const CombinatorialMap& m = lm.map;
  MapReport rep = validate_map(m);
  if (!rep.connected) throw Error("dessin is not connected");
  if (!rep.valid()) throw Error("dessin is not a valid map");
  std::vector<int> vert = vertex_of_dart(m);
  auto label_of = [&](int dart) {
    auto it = lm.labels.find(vert[static_cast<std::size_t>(dart)]);
    if (it == lm.labels.end()) throw Error("unlabeled dessin vertex");
    return it->second;
  };
  for (int x = 1; x <= m.dart_count; ++x) {
    int a = label_of(x), b = label_of(m.alpha(x));
    if (!((a == 0 && b == 1) || (a == 1 && b == 0)))
      throw Error("dessin must be bipartite with labels 0 and 1");
  }
  // Edge index by least dart.
  std::vector<int> edge_of(static_cast<std::size_t>(m.dart_count) + 1, 0);
  int edge_count = 0;
  for (int x = 1; x <= m.dart_count; ++x) {
    if (x < m.alpha(x))
      ++edge_count;
  }
  {
    int next = 0;
    for (int x = 1; x <= m.dart_count; ++x) {
      if (x < m.alpha(x)) {
        ++next;
        edge_of[static_cast<std::size_t>(x)] = next;
        edge_of[static_cast<std::size_t>(m.alpha(x))] = next;
      }
    }
  }
  std::vector<int> s0(static_cast<std::size_t>(edge_count)),
      s1(static_cast<std::size_t>(edge_count));
  std::iota(s0.begin(), s0.end(), 1);
  std::iota(s1.begin(), s1.end(), 1);
  for (int x = 1; x <= m.dart_count; ++x) {
    int e = edge_of[static_cast<std::size_t>(x)];
    int f = edge_of[static_cast<std::size_t>(m.sigma(x))];
    if (label_of(x) == 0)
      s0[static_cast<std::size_t>(e - 1)] = f;
    else
      s1[static_cast<std::size_t>(e - 1)] = f;
  }
  Perm sigma0 = Perm::from_images(s0);
  Perm sigma1 = Perm::from_images(s1);
  Perm sigma_inf = (sigma0 * sigma1).inverse();
  Constellation c;
  c.degree = edge_count;
  c.tuple = {sigma0, sigma1, sigma_inf};
  return c;
}

/// The 2-2 move: replace the diagonal shared by two distinct triangles with
/// the other diagonal of their union square.  Dart ids are reused for the
/// new diagonal; V, E, F are preserved.
inline CombinatorialMap edge_flip(const CombinatorialMap& m, int edge_dart) {
  if (edge_dart < 1 || edge_dart > m.dart_count) throw Error("edge dart out of range");
  MapReport rep = validate_map(m);
  if (!rep.valid()) throw Error("cannot flip an edge of an invalid map");
  Perm phi = m.phi();
  int x = edge_dart;
  int y = m.alpha(x);
  int a = phi(x), b = phi(a);
  int c = phi(y), d = phi(c);
  if (phi(b) != x || a == x || b == x || a == b)
    throw Error("face of dart " + std::to_string(x) + " is not a triangle");
  if (phi(d) != y || c == y || d == y || c == d)
    throw Error("face of dart " + std::to_string(y) + " is not a triangle");
  for (int t : {a, b})
    if (t == y) throw Error("edge borders one face twice");

  std::vector<int> phi2 = phi.images();
  auto set_phi = [&](int from, int to) { phi2[static_cast<std::size_t>(from - 1)] = to; };
  // new triangles (c, x, b) and (a, y, d)
  set_phi(c, x);
  set_phi(x, b);
  set_phi(b, c);
  set_phi(a, y);
  set_phi(y, d);
  set_phi(d, a);
  Perm phi_new = Perm::from_images(phi2);
  std::vector<int> sigma2(static_cast<std::size_t>(m.dart_count));
  for (int t = 1; t <= m.dart_count; ++t)
    sigma2[static_cast<std::size_t>(t - 1)] = phi_new(m.alpha(t));
  return CombinatorialMap(m.dart_count, m.alpha, Perm::from_images(sigma2));
}

struct QuadReport {
  bool map_valid = false;
  bool all_quads = false;
  bool labels_alternate = false; // 0,1,0,1 around every face
  int quads = 0;
  int vertices = 0;
  int euler_characteristic = 0;
  bool identity_holds = false; // q = v - chi
  std::vector<std::string> messages;

  bool valid() const { return map_valid && all_quads && labels_alternate; }
};

/// Check that every face is a quadrilateral with labels alternating 0,1,0,1
/// and report the count identity q = v - chi.
inline QuadReport validate_quadrangulation(const LabeledMap& lm) {
  QuadReport r;
  MapReport mr = validate_map(lm.map);
  r.map_valid = mr.valid();
  if (!r.map_valid) {
    r.messages = mr.messages;
    return r;
  }
  r.vertices = mr.vertices;
  r.euler_characteristic = mr.euler_characteristic;
  std::vector<int> vert = vertex_of_dart(lm.map);
  r.all_quads = true;
  r.labels_alternate = true;
  auto faces = lm.map.face_cycles();
  r.quads = static_cast<int>(faces.size());
  for (const auto& f : faces) {
    if (f.size() != 4) {
      r.all_quads = false;
      r.messages.push_back("face of size " + std::to_string(f.size()));
      continue;
    }
    // corners must carry labels in {0,1}, consecutive corners differing
    for (std::size_t i = 0; i < 4 && r.labels_alternate; ++i) {
      auto la = lm.labels.find(vert[static_cast<std::size_t>(f[i])]);
      auto lb = lm.labels.find(vert[static_cast<std::size_t>(f[(i + 1) % 4])]);
      bool ok = la != lm.labels.end() && lb != lm.labels.end() &&
                (la->second == 0 || la->second == 1) &&
                (lb->second == 0 || lb->second == 1) && la->second != lb->second;
      if (!ok) {
        r.labels_alternate = false;
        r.messages.push_back("face labels do not alternate 0,1,0,1");
      }
    }
  }
  r.identity_holds = r.quads == r.vertices - r.euler_characteristic;
  return r;
}

/// A pairing of faces; `unmatched` is the failure certificate when no
/// perfect matching exists.
struct Matching {
  std::vector<std::pair<int, int>> pairs; // face ids, each pair sorted, list sorted
  std::vector<int> unmatched;             // face ids left uncovered

  bool perfect() const { return unmatched.empty(); }
  std::vector<int> covered() const {
    std::vector<int> out;
    for (auto [a, b] : pairs) {
      out.push_back(a);
      out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

namespace detail {

/// Maximum matching in a general graph: augmenting paths with blossom
/// contraction, O(V^3).  Vertices 0..n-1, adjacency lists.  Deterministic.
class BlossomMatcher {
public:
  explicit BlossomMatcher(std::vector<std::vector<int>> adj)
      : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())), match_(adj_.size(), -1),
        parent_(adj_.size()), base_(adj_.size()) {}

  const std::vector<int>& solve() {
    for (int v = 0; v < n_; ++v)
      if (match_[static_cast<std::size_t>(v)] == -1) try_augment(v);
    return match_;
  }

private:
  std::vector<std::vector<int>> adj_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, blossom_;

  int lca(int a, int b) {
    std::vector<bool> mark(static_cast<std::size_t>(n_), false);
    for (;;) {
      a = base_[static_cast<std::size_t>(a)];
      mark[static_cast<std::size_t>(a)] = true;
      if (match_[static_cast<std::size_t>(a)] == -1) break;
      a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base_[static_cast<std::size_t>(b)];
      if (mark[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      int mv = match_[static_cast<std::size_t>(v)];
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = true;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  int find_path(int root) {
    used_.assign(static_cast<std::size_t>(n_), false);
    parent_.assign(static_cast<std::size_t>(n_), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[static_cast<std::size_t>(root)] = true;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int to : adj_[static_cast<std::size_t>(v)]) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root ||
            (match_[static_cast<std::size_t>(to)] != -1 &&
             parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
          // odd cycle: contract the blossom
          int cur_base = lca(v, to);
          blossom_.assign(static_cast<std::size_t>(n_), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i)
            if (blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
              base_[static_cast<std::size_t>(i)] = cur_base;
              if (!used_[static_cast<std::size_t>(i)]) {
                used_[static_cast<std::size_t>(i)] = true;
                queue.push_back(i);
              }
            }
        } else if (parent_[static_cast<std::size_t>(to)] == -1) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (match_[static_cast<std::size_t>(to)] == -1) return to;
          int mt = match_[static_cast<std::size_t>(to)];
          used_[static_cast<std::size_t>(mt)] = true;
          queue.push_back(mt);
        }
      }
    }
    return -1;
  }

  void try_augment(int root) {
    int v = find_path(root);
    if (v == -1) return;
    while (v != -1) {
      int pv = parent_[static_cast<std::size_t>(v)];
      int ppv = match_[static_cast<std::size_t>(pv)];
      match_[static_cast<std::size_t>(v)] = pv;
      match_[static_cast<std::size_t>(pv)] = v;
      v = ppv;
    }
  }
};

} // namespace detail

/// Perfect matching on the dual adjacency graph of a quadrangulation (faces
/// as nodes, shared edges as arcs), or a failure certificate listing the
/// uncovered faces.  Deterministic given the dart numbering.
inline Matching dual_matching(const LabeledMap& lm) {
  QuadReport qr = validate_quadrangulation(lm);
  if (!qr.valid()) throw Error("dual matching needs a valid quadrangulation");
  const CombinatorialMap& m = lm.map;
  std::vector<int> face = face_of_dart(m);
  std::vector<int> ids; // face ids, sorted = index order
  for (const auto& f : m.face_cycles())
    ids.push_back(*std::min_element(f.begin(), f.end()));
  std::sort(ids.begin(), ids.end());
  std::map<int, int> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);

  std::vector<std::set<int>> nb(ids.size());
  for (int x = 1; x <= m.dart_count; ++x) {
    int f1 = face[static_cast<std::size_t>(x)];
    int f2 = face[static_cast<std::size_t>(m.alpha(x))];
    if (f1 == f2) continue;
    nb[static_cast<std::size_t>(index[f1])].insert(index[f2]);
  }
  std::vector<std::vector<int>> adj(ids.size());
  for (std::size_t i = 0; i < nb.size(); ++i) adj[i].assign(nb[i].begin(), nb[i].end());

  detail::BlossomMatcher matcher(std::move(adj));
  const std::vector<int>& match = matcher.solve();
  Matching out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    int j = match[i];
    if (j == -1)
      out.unmatched.push_back(ids[i]);
    else if (static_cast<int>(i) < j)
      out.pairs.emplace_back(ids[i], ids[static_cast<std::size_t>(j)]);
  }
  return out;
}

/// Fuse each matched pair of quadrilaterals across one shared edge (the one
/// containing the least dart) into a hexagon.  The result has h = q/2 faces,
/// all of size 6 with alternating labels, and satisfies 2h = v - chi.
inline LabeledMap merge_to_hexagons(const LabeledMap& lm, const Matching& matching) {
  if (!matching.perfect()) throw Error("hexagon merge needs a perfect matching");
  QuadReport qr = validate_quadrangulation(lm);
  if (!qr.valid()) throw Error("hexagon merge needs a valid quadrangulation");
  const CombinatorialMap& m = lm.map;
  std::vector<int> face = face_of_dart(m);
  std::vector<int> vert = vertex_of_dart(m);

  std::vector<bool> removed(static_cast<std::size_t>(m.dart_count) + 1, false);
  for (auto [fa, fb] : matching.pairs) {
    int chosen = 0;
    for (int x = 1; x <= m.dart_count && chosen == 0; ++x) {
      int f1 = face[static_cast<std::size_t>(x)];
      int f2 = face[static_cast<std::size_t>(m.alpha(x))];
      if ((f1 == fa && f2 == fb) || (f1 == fb && f2 == fa)) chosen = x;
    }
    if (chosen == 0)
      throw Error("matched faces " + std::to_string(fa) + "," + std::to_string(fb) +
                  " share no edge");
    removed[static_cast<std::size_t>(chosen)] = true;
    removed[static_cast<std::size_t>(m.alpha(chosen))] = true;
  }

  std::vector<int> keep;
  for (int x = 1; x <= m.dart_count; ++x)
    if (!removed[static_cast<std::size_t>(x)]) keep.push_back(x);
  std::vector<int> renum(static_cast<std::size_t>(m.dart_count) + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i)
    renum[static_cast<std::size_t>(keep[i])] = static_cast<int>(i) + 1;

  int k = static_cast<int>(keep.size());
  std::vector<int> alpha2(static_cast<std::size_t>(k)), sigma2(static_cast<std::size_t>(k));
  for (int x : keep) {
    alpha2[static_cast<std::size_t>(renum[static_cast<std::size_t>(x)] - 1)] =
        renum[static_cast<std::size_t>(m.alpha(x))];
    int y = m.sigma(x);
    while (removed[static_cast<std::size_t>(y)]) y = m.sigma(y);
    sigma2[static_cast<std::size_t>(renum[static_cast<std::size_t>(x)] - 1)] =
        renum[static_cast<std::size_t>(y)];
  }
  LabeledMap out;
  out.map = CombinatorialMap(k, Perm::from_images(alpha2), Perm::from_images(sigma2));
  for (const auto& cyc : out.map.sigma.cycles(true)) {
    int id = *std::min_element(cyc.begin(), cyc.end());
    int old_vertex = vert[static_cast<std::size_t>(keep[static_cast<std::size_t>(cyc.front() - 1)])];
    out.labels[id] = lm.labels.at(old_vertex);
  }
  for (const auto& f : out.map.face_cycles())
    if (f.size() != 6)
      throw Error("internal: merged face has size " + std::to_string(f.size()));
  return out;
}

/// Canonical relabeling-invariant encoding of a connected map: breadth-first
/// relabeling from every root dart, minimized lexicographically.  Two maps
/// are isomorphic (as oriented maps) iff their encodings are equal.
inline std::vector<int> canonical_encoding(const CombinatorialMap& m,
                                           const std::map<int, int>* labels = nullptr) {
  std::vector<int> vert;
  if (labels) vert = vertex_of_dart(m);
  std::optional<std::vector<int>> best;
  for (int root = 1; root <= m.dart_count; ++root) {
    std::vector<int> newid(static_cast<std::size_t>(m.dart_count) + 1, 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(m.dart_count));
    newid[static_cast<std::size_t>(root)] = 1;
    order.push_back(root);
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      int x = order[qi];
      for (int y : {m.sigma(x), m.alpha(x)}) {
        if (!newid[static_cast<std::size_t>(y)]) {
          newid[static_cast<std::size_t>(y)] = static_cast<int>(order.size()) + 1;
          order.push_back(y);
        }
      }
    }
    if (static_cast<int>(order.size()) != m.dart_count) throw Error("map is not connected");
    std::vector<int> enc;
    enc.reserve(static_cast<std::size_t>(m.dart_count) * (labels ? 3 : 2));
    for (int x : order) {
      enc.push_back(newid[static_cast<std::size_t>(m.sigma(x))]);
      enc.push_back(newid[static_cast<std::size_t>(m.alpha(x))]);
      if (labels) enc.push_back(labels->at(vert[static_cast<std::size_t>(x)]));
    }
    if (!best || enc < *best) best = std::move(enc);
  }
  if (!best) throw Error("empty map has no encoding");
  return *best;
}

inline bool isomorphic(const CombinatorialMap& a, const CombinatorialMap& b) {
  if (a.dart_count != b.dart_count) return false;
  return canonical_encoding(a) == canonical_encoding(b);
}

inline bool isomorphic(const LabeledMap& a, const LabeledMap& b) {
  if (a.map.dart_count != b.map.dart_count) return false;
  return canonical_encoding(a.map, &a.labels) == canonical_encoding(b.map, &b.labels);
}

} // namespace constel

#endif
