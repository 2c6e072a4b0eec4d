#include "tfpc/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tfpc {

namespace {

struct Candidate {
  std::vector<VertexId> cycle;
  std::set<int> faces;
  std::vector<VertexId> interior;
};

bool compatible(const std::set<int>& a, const std::set<int>& b) {
  bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
  bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
  if (a_in_b || b_in_a) return true;
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

}  // namespace

FiveCycleDecomposition build_decomposition(const PlaneGraph& g) {
  if (g.has_triangle())
    throw Error(Err::HypothesisViolation, "need a triangle-free plane graph");

  std::vector<Candidate> cands;
  for (auto& cyc : g.cycles_of_length(5)) {
    Candidate c;
    c.cycle = PlaneGraph::canonical_cycle(cyc);
    auto inner = g.interior_faces(cyc);
    c.faces.insert(inner.begin(), inner.end());
    std::vector<char> on_c(g.vertex_count(), 0);
    for (VertexId v : cyc) on_c[v] = 1;
    std::set<VertexId> interior;
    for (int f : inner)
      for (VertexId v : g.face(f).boundary)
        if (!on_c[v]) interior.insert(v);
    c.interior.assign(interior.begin(), interior.end());
    int exterior = g.vertex_count() - 5 - static_cast<int>(c.interior.size());
    if (!c.interior.empty() && exterior > 0) cands.push_back(std::move(c));
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.faces.size() != b.faces.size()) return a.faces.size() < b.faces.size();
    return a.cycle < b.cycle;
  });

  std::vector<Candidate> chosen;
  for (auto& c : cands) {
    bool ok = true;
    for (auto& d : chosen)
      if (!compatible(c.faces, d.faces)) {
        ok = false;
        break;
      }
    if (ok) chosen.push_back(std::move(c));
  }

  // parents before children: larger regions first
  std::sort(chosen.begin(), chosen.end(), [](const Candidate& a, const Candidate& b) {
    if (a.faces.size() != b.faces.size()) return a.faces.size() > b.faces.size();
    return a.cycle < b.cycle;
  });

  FiveCycleDecomposition d;
  d.graph = g;
  d.nodes.resize(chosen.size() + 1);
  d.nodes[0].id = 0;
  for (size_t i = 0; i < chosen.size(); ++i) {
    auto& node = d.nodes[i + 1];
    node.id = static_cast<int>(i + 1);
    CycleRef ref;
    ref.vertices = chosen[i].cycle;
    ref.separating = true;
    ref.interior = chosen[i].interior;
    node.cycle = std::move(ref);
    node.region_faces.assign(chosen[i].faces.begin(), chosen[i].faces.end());
    node.parent = 0;
    size_t best = SIZE_MAX;
    for (size_t j = 0; j < i; ++j) {
      if (std::includes(chosen[j].faces.begin(), chosen[j].faces.end(), chosen[i].faces.begin(),
                        chosen[i].faces.end())) {
        if (best == SIZE_MAX || chosen[j].faces.size() < chosen[best].faces.size()) best = j;
      }
    }
    if (best != SIZE_MAX) node.parent = static_cast<int>(best + 1);
    d.nodes[node.parent].children.push_back(node.id);
  }
  return d;
}

std::vector<VertexId> caught_vertices(const FiveCycleDecomposition& d) {
  std::set<VertexId> caught;
  for (size_t i = 1; i < d.nodes.size(); ++i)
    caught.insert(d.nodes[i].cycle->vertices.begin(), d.nodes[i].cycle->vertices.end());
  return {caught.begin(), caught.end()};
}

namespace {

// piece of the region of `node` with the open disks of `removed_children`
// taken out; outer face set to the region boundary side
struct Piece {
  PlaneGraph::Sub sub;
  std::vector<VertexId> outer_cycle;  // piece ids, empty for the root piece
};

Piece extract_region_piece(const FiveCycleDecomposition& d, int node,
                           const std::vector<int>& removed_children) {
  const PlaneGraph& g = d.graph;
  std::set<VertexId> verts;
  if (node == 0) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) verts.insert(v);
  } else {
    const CycleRef& c = *d.nodes[node].cycle;
    verts.insert(c.vertices.begin(), c.vertices.end());
    verts.insert(c.interior.begin(), c.interior.end());
  }
  for (int ch : removed_children)
    for (VertexId v : d.nodes[ch].cycle->interior) verts.erase(v);

  Piece piece;
  std::vector<VertexId> vlist(verts.begin(), verts.end());
  piece.sub = g.induced(vlist);

  if (node == 0) {
    if (g.edge_count() > 0) {
      const auto& b = g.face(g.outer_face()).boundary;
      int f = piece.sub.graph.face_of_directed_edge(piece.sub.from_parent[b[0]],
                                                    piece.sub.from_parent[b[1]]);
      piece.sub = g.induced(vlist, f);
    }
    return piece;
  }

  const CycleRef& c = *d.nodes[node].cycle;
  std::set<int> region(d.nodes[node].region_faces.begin(), d.nodes[node].region_faces.end());
  const int k = static_cast<int>(c.vertices.size());
  for (int i = 0; i < k; ++i) {
    VertexId a = c.vertices[i], b = c.vertices[(i + 1) % k];
    if (!region.count(g.face_of_directed_edge(a, b))) {
      int f = piece.sub.graph.face_of_directed_edge(piece.sub.from_parent[a],
                                                    piece.sub.from_parent[b]);
      piece.sub = g.induced(vlist, f);
      break;
    }
  }
  for (VertexId v : c.vertices) piece.outer_cycle.push_back(piece.sub.from_parent[v]);
  return piece;
}

std::vector<std::vector<int>> proper_cycle_precolorings(int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(len, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == len) {
      if (cur[len - 1] != cur[0]) out.push_back(cur);
      return;
    }
    for (int c = 1; c <= 3; ++c) {
      if (i > 0 && cur[i - 1] == c) continue;
      cur[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

int extensions_upto(const PlaneGraph& g, const Coloring& pre, int cap) {
  int cnt = 0;
  enumerate_colorings(g, pre, [&](const Coloring&) { return ++cnt < cap; });
  return cnt;
}

// true when every proper precoloring of the 5-cycle extends at least twice
bool all_precolorings_extend_twice(const PlaneGraph& piece, const std::vector<VertexId>& cycle) {
  for (auto& cols : proper_cycle_precolorings(static_cast<int>(cycle.size()))) {
    Coloring pre(piece.vertex_count());
    for (size_t i = 0; i < cycle.size(); ++i) pre.color[cycle[i]] = cols[i];
    if (!proper(piece, pre)) continue;  // chordless, so this never triggers
    if (extensions_upto(piece, pre, 2) < 2) return false;
  }
  return true;
}

}  // namespace

NodePiece classify_node(const FiveCycleDecomposition& d, int node) {
  if (node < 0 || node >= d.node_count()) throw Error(Err::BadParams, "node out of range");
  Piece piece = extract_region_piece(d, node, d.nodes[node].children);

  NodePiece out;
  out.node = node;
  out.piece = piece.sub.graph;
  out.to_parent = piece.sub.to_parent;
  out.outer_cycle = piece.outer_cycle;
  if (node == 0) {
    out.richness = Richness::Rich;  // the root is rich by definition
    return out;
  }

  out.richness = all_precolorings_extend_twice(out.piece, out.outer_cycle) ? Richness::Rich
                                                                           : Richness::Poor;
  if (out.richness == Richness::Poor) {
    bool ok = out.piece.vertex_count() == 6 && out.piece.edge_count() == 7;
    if (ok) {
      std::set<VertexId> cyc(out.outer_cycle.begin(), out.outer_cycle.end());
      VertexId extra = -1;
      for (VertexId v = 0; v < 6; ++v)
        if (!cyc.count(v)) extra = v;
      ok = out.piece.degree(extra) == 2;
      for (VertexId w : out.piece.rotation(extra)) ok = ok && cyc.count(w);
      if (ok) out.poor_extra = out.to_parent[extra];
    }
    if (!ok)
      throw Error(Err::PoorShapeViolation,
                  "poor piece is not a 5-cycle plus one vertex (node " + std::to_string(node) +
                      ")");
  }
  return out;
}

SuburbPiece build_suburb_piece(const FiveCycleDecomposition& d, const std::vector<int>& chain) {
  if (chain.empty()) throw Error(Err::BadParams, "empty chain");
  for (size_t i = 1; i < chain.size(); ++i)
    if (d.nodes[chain[i]].parent != chain[i - 1])
      throw Error(Err::BadParams, "chain is not a parent-child path");

  std::vector<int> removed = d.nodes[chain.back()].children;
  Piece piece = extract_region_piece(d, chain.front(), removed);

  SuburbPiece out;
  out.graph = piece.sub.graph;
  out.to_parent = piece.sub.to_parent;
  out.outer_cycle = piece.outer_cycle;
  if (!removed.empty()) {
    for (VertexId v : d.nodes[removed.front()].cycle->vertices)
      out.inner_cycle.push_back(piece.sub.from_parent[v]);
  } else {
    // leaf chain: the inner face is the 5-face other than the outer face
    for (const Face& f : out.graph.faces()) {
      if (f.id == out.graph.outer_face() || f.length != 5) continue;
      out.inner_cycle = f.boundary;
      break;
    }
    if (out.inner_cycle.empty()) throw Error(Err::BadParams, "no inner 5-face");
  }
  return out;
}

bool is_upwardly_mobile(const FiveCycleDecomposition& d, const std::vector<int>& chain) {
  SuburbPiece piece = build_suburb_piece(d, chain);
  return all_precolorings_extend_twice(piece.graph, piece.outer_cycle);
}

std::vector<Suburb> find_suburbs(const FiveCycleDecomposition& d, int k) {
  if (k < 1) throw Error(Err::BadParams, "k must be positive");
  std::vector<Richness> rich(d.node_count());
  for (int i = 0; i < d.node_count(); ++i) rich[i] = classify_node(d, i).richness;

  std::vector<Suburb> out;
  for (int i = 0; i < d.node_count(); ++i) {
    if (rich[i] == Richness::Rich) continue;
    int p = d.nodes[i].parent;
    if (p >= 0 && rich[p] == Richness::Poor) continue;  // not a chain top
    std::vector<int> chain = {i};
    while (true) {
      const auto& ch = d.nodes[chain.back()].children;
      if (ch.size() != 1 || rich[ch.front()] == Richness::Rich) break;
      chain.push_back(ch.front());
    }
    int len = static_cast<int>(chain.size());
    std::vector<std::vector<int>> windows;
    for (int s = len - k; s >= 0; s -= k)
      windows.push_back(std::vector<int>(chain.begin() + s, chain.begin() + s + k));
    std::reverse(windows.begin(), windows.end());
    for (auto& w : windows) {
      Suburb sub;
      sub.nodes = w;
      sub.upwardly_mobile = is_upwardly_mobile(d, w);
      out.push_back(std::move(sub));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Suburb& a, const Suburb& b) { return a.nodes < b.nodes; });
  return out;
}

namespace {

// backtracking peel showing the piece is a descending chain of poor pieces
bool peel_chain(const PlaneGraph& g, std::vector<VertexId> cur, std::set<VertexId>& used,
                const std::vector<VertexId>& inner, int depth, int target) {
  if (depth == target)
    return PlaneGraph::canonical_cycle(cur) == PlaneGraph::canonical_cycle(inner);
  for (VertexId z = 0; z < g.vertex_count(); ++z) {
    if (used.count(z)) continue;
    for (int m = 0; m < 5; ++m) {
      VertexId left = cur[(m + 4) % 5], right = cur[(m + 1) % 5];
      if (!g.adjacent(z, left) || !g.adjacent(z, right)) continue;
      std::vector<VertexId> next = cur;
      next[m] = z;
      used.insert(z);
      if (peel_chain(g, next, used, inner, depth + 1, target)) return true;
      used.erase(z);
    }
  }
  return false;
}

std::optional<int> face_with_length4_at(const PlaneGraph& g, VertexId z) {
  for (int f : g.faces_at(z))
    if (g.face(f).length == 4) return f;
  return std::nullopt;
}

bool only_4_faces(const PlaneGraph& g, VertexId z) {
  for (int f : g.faces_at(z))
    if (g.face(f).length != 4) return false;
  return true;
}

// on a 4-face containing z, return (prev, next, opposite) around the walk
std::array<VertexId, 3> face_frame(const PlaneGraph& g, int f, VertexId z) {
  const auto& b = g.face(f).boundary;
  for (int i = 0; i < 4; ++i)
    if (b[i] == z) return {b[(i + 3) % 4], b[(i + 1) % 4], b[(i + 2) % 4]};
  throw Error(Err::BadParams, "vertex not on face");
}

}  // namespace

RearrangeablePair find_rearrangeable_pair(const PlaneGraph& gp,
                                          const std::vector<VertexId>& outer_cycle,
                                          const std::vector<VertexId>& inner_cycle) {
  const int levels = gp.vertex_count() - 5;
  if (gp.vertex_count() != 16)
    throw Error(Err::BadParams, "an 11-suburb piece has 16 vertices");
  {
    std::set<VertexId> used(outer_cycle.begin(), outer_cycle.end());
    if (!peel_chain(gp, outer_cycle, used, inner_cycle, 0, levels))
      throw Error(Err::BadParams, "piece is not a chain of poor pieces");
  }

  std::set<VertexId> f_set(outer_cycle.begin(), outer_cycle.end());
  f_set.insert(inner_cycle.begin(), inner_cycle.end());

  RearrangeablePair pair;

  // configuration (i): interior degree-2 vertex on a 4-face
  for (VertexId z = 0; z < gp.vertex_count(); ++z) {
    if (f_set.count(z) || gp.degree(z) != 2) continue;
    auto f = face_with_length4_at(gp, z);
    if (!f) continue;
    auto [x, y, u] = face_frame(gp, *f, z);
    pair.x = x;
    pair.y = y;
    pair.shared_face = *f;
    pair.kind = RearrangeablePair::Kind::I;
    pair.aux = {z, u};
    return pair;
  }

  // configuration (ii): adjacent interior degree-3 vertices, one only on 4-faces
  for (VertexId z = 0; z < gp.vertex_count(); ++z) {
    if (f_set.count(z) || gp.degree(z) != 3 || !only_4_faces(gp, z)) continue;
    for (VertexId zp : gp.rotation(z)) {
      if (f_set.count(zp) || gp.degree(zp) != 3) continue;
      std::vector<int> with_zp, without_zp;
      for (int f : gp.faces_at(z)) {
        if (gp.on_face(zp, f))
          with_zp.push_back(f);
        else
          without_zp.push_back(f);
      }
      if (with_zp.size() != 2 || without_zp.size() != 1) continue;
      int f = without_zp.front();
      auto [x, y, u] = face_frame(gp, f, z);
      VertexId xp = -1, yp = -1;
      for (int fz : with_zp) {
        auto [a, b, opp] = face_frame(gp, fz, z);
        VertexId q = (a == zp) ? b : a;     // the z-neighbor on this face besides zp
        VertexId qp = opp;                  // adjacent to zp across the face
        if (q == x) xp = qp;
        if (q == y) yp = qp;
      }
      if (xp < 0 || yp < 0) continue;
      pair.x = x;
      pair.y = y;
      pair.shared_face = f;
      pair.kind = RearrangeablePair::Kind::II;
      pair.aux = {z, zp, xp, yp, u};
      return pair;
    }
  }

  // configuration (iii): interior degree-4 vertex on 4-faces only, with an
  // opposite pair of interior degree-3 neighbors, one of them on 4-faces only
  for (VertexId z = 0; z < gp.vertex_count(); ++z) {
    if (f_set.count(z) || gp.degree(z) != 4 || !only_4_faces(gp, z)) continue;
    const auto& rot = gp.rotation(z);
    for (int i = 0; i < 4; ++i) {
      VertexId z1 = rot[i], z2 = rot[(i + 2) % 4];
      if (f_set.count(z1) || f_set.count(z2)) continue;
      if (gp.degree(z1) != 3 || gp.degree(z2) != 3) continue;
      if (!only_4_faces(gp, z1)) continue;

      auto face_between = [&](VertexId a, VertexId b) -> int {
        for (int f : gp.faces_at(z))
          if (gp.on_face(a, f) && gp.on_face(b, f)) return f;
        throw Error(Err::BadParams, "missing face");
      };
      VertexId xp = rot[(i + 1) % 4], yp = rot[(i + 3) % 4];
      // face z-z1-x-x' contains z1 and x'; x is opposite z on it
      auto opposite_on = [&](int f) {
        auto [a, b, opp] = face_frame(gp, f, z);
        (void)a;
        (void)b;
        return opp;
      };
      int f_zx = face_between(z1, xp);
      int f_zy = face_between(z1, yp);
      int f_zxx = face_between(z2, xp);
      int f_zyy = face_between(z2, yp);
      VertexId x = opposite_on(f_zx);
      VertexId y = opposite_on(f_zy);
      VertexId xpp = opposite_on(f_zxx);
      VertexId ypp = opposite_on(f_zyy);

      // third face at z1: the 4-face x-z1-y-u
      int f = -1;
      for (int ff : gp.faces_at(z1))
        if (!gp.on_face(z, ff)) f = ff;
      if (f < 0 || gp.face(f).length != 4) continue;
      auto [a, b, u] = face_frame(gp, f, z1);
      if (!((a == x && b == y) || (a == y && b == x))) continue;
      pair.x = x;
      pair.y = y;
      pair.shared_face = f;
      pair.kind = RearrangeablePair::Kind::III;
      pair.aux = {z, z1, z2, xp, yp, xpp, ypp, u};
      return pair;
    }
  }

  throw Error(Err::NoConfiguration,
              "no rearrangeable configuration in a non-mobile 11-suburb piece");
}

Coloring rearrange(const PlaneGraph& gp, const Coloring& phi, const RearrangeablePair& pair) {
  if (!phi.total() || !proper(gp, phi))
    throw Error(Err::ImproperColoring, "need a total proper coloring");
  if (phi.color[pair.x] != phi.color[pair.y])
    throw Error(Err::PrecolorMismatch, "x and y must share a color");

  Coloring out = phi;
  const int a = phi.color[pair.x];
  switch (pair.kind) {
    case RearrangeablePair::Kind::I: {
      VertexId z = pair.aux[0], u = pair.aux[1];
      out.color[z] = phi.color[u];
      break;
    }
    case RearrangeablePair::Kind::II: {
      VertexId z = pair.aux[0], zp = pair.aux[1], u = pair.aux[4];
      out.color[zp] = a;
      out.color[z] = phi.color[u];
      break;
    }
    case RearrangeablePair::Kind::III: {
      VertexId z = pair.aux[0], z1 = pair.aux[1], z2 = pair.aux[2], u = pair.aux[7];
      const int b = phi.color[u];
      if (phi.color[z] != b) {
        out.color[z1] = b;
      } else {
        const int c = 6 - a - b;
        out.color[z2] = c;
        out.color[z] = a;
        out.color[z1] = b;
      }
      break;
    }
  }
  if (!proper(gp, out))
    throw Error(Err::LemmaViolation, "rearranged coloring is improper");
  return out;
}

DecompositionReport check_decomposition(const FiveCycleDecomposition& d) {
  DecompositionReport rep;
  const PlaneGraph& g = d.graph;

  for (size_t i = 1; i < d.nodes.size(); ++i) {
    std::set<int> fi(d.nodes[i].region_faces.begin(), d.nodes[i].region_faces.end());
    for (size_t j = i + 1; j < d.nodes.size(); ++j) {
      std::set<int> fj(d.nodes[j].region_faces.begin(), d.nodes[j].region_faces.end());
      if (!compatible(fi, fj)) {
        rep.laminar_ok = false;
        rep.detail += "regions " + std::to_string(i) + "," + std::to_string(j) + " cross; ";
      }
    }
  }

  std::vector<Richness> rich(d.node_count());
  for (int i = 0; i < d.node_count(); ++i) {
    NodePiece piece;
    try {
      piece = classify_node(d, i);
    } catch (const Error& e) {
      if (e.code() == Err::PoorShapeViolation) {
        rep.poor_shape_ok = false;
        rep.detail += std::string(e.what()) + "; ";
        continue;
      }
      throw;
    }
    rich[i] = piece.richness;
    if (!piece.piece.find_separating_cycles(5).empty()) {
      rep.maximal_ok = false;
      rep.detail += "piece " + std::to_string(i) + " has a separating 5-cycle; ";
    }
    if (piece.richness == Richness::Poor && d.nodes[i].children.size() > 1)
      rep.poor_child_ok = false;
  }

  std::set<VertexId> safe;
  auto caught = caught_vertices(d);
  safe.insert(caught.begin(), caught.end());
  int s5 = 0;
  for (const Face& f : g.faces()) {
    if (g.face_in_outer(f.id) && f.id != g.outer_face()) continue;
    if (g.merged_face_length(f.id) != 5) continue;
    ++s5;
    if (f.id == g.outer_face()) {
      for (VertexId v : f.boundary) safe.insert(v);
      for (int m : g.outer_merged())
        for (VertexId v : g.face(m).boundary) safe.insert(v);
    } else {
      for (VertexId v : f.boundary) safe.insert(v);
    }
  }
  for (auto& cyc : g.cycles_of_length(5))
    for (VertexId v : cyc)
      if (!safe.count(v)) {
        rep.catching_ok = false;
        rep.detail += "vertex " + std::to_string(v) + " on a 5-cycle is unprotected; ";
      }
  rep.caught_bound_ok =
      static_cast<int>(safe.size()) <= 5 * (d.node_count() + s5);
  return rep;
}

SuburbPiece suburb_piece_from_sequence(const std::vector<int>& positions) {
  for (int p : positions)
    if (p < 1 || p > 5) throw Error(Err::BadParams, "positions must be in 1..5");

  std::vector<std::vector<VertexId>> rot = {{1, 4}, {2, 0}, {3, 1}, {4, 2}, {0, 3}};
  std::vector<VertexId> cur = {0, 1, 2, 3, 4};
  for (int p : positions) {
    int m = p - 1;
    VertexId left = cur[(m + 4) % 5], mid = cur[m], right = cur[(m + 1) % 5];
    VertexId z = static_cast<VertexId>(rot.size());
    rot.push_back({left, right});
    // at the left neighbor insert z right after mid, at the right neighbor
    // right before mid (clockwise rotations, interior below)
    {
      auto& rl = rot[left];
      auto it = std::find(rl.begin(), rl.end(), mid);
      rl.insert(it + 1, z);
    }
    {
      auto& rr = rot[right];
      auto it = std::find(rr.begin(), rr.end(), mid);
      rr.insert(it, z);
    }
    cur[m] = z;
  }

  PlaneGraph g = PlaneGraph::build(static_cast<int>(rot.size()), rot);
  // outer face: the one bounded by the original pentagon
  int outer = -1;
  std::vector<VertexId> pent = {0, 1, 2, 3, 4};
  for (const Face& f : g.faces()) {
    if (f.length != 5) continue;
    if (PlaneGraph::canonical_cycle(f.boundary) == PlaneGraph::canonical_cycle(pent)) {
      outer = f.id;
      break;
    }
  }
  if (outer < 0) throw Error(Err::BadParams, "pentagon does not bound a face");

  SuburbPiece out;
  out.graph = g.with_outer_face(outer);
  out.to_parent.resize(rot.size());
  for (size_t i = 0; i < rot.size(); ++i) out.to_parent[i] = static_cast<VertexId>(i);
  out.outer_cycle = pent;
  out.inner_cycle = cur;
  return out;
}

}  // namespace tfpc
