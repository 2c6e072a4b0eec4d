#include "tfpc/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace tfpc {

namespace {

int find_pos(const std::vector<VertexId>& rot, VertexId u) {
  for (int i = 0; i < static_cast<int>(rot.size()); ++i)
    if (rot[i] == u) return i;
  return -1;
}

}  // namespace

PlaneGraph PlaneGraph::build(int vertex_count, std::vector<std::vector<VertexId>> rotations,
                             std::optional<int> outer_face_hint) {
  if (vertex_count < 0 || static_cast<int>(rotations.size()) != vertex_count)
    throw Error(Err::BadParams, "rotation list size must equal vertex_count");

  for (VertexId v = 0; v < vertex_count; ++v) {
    std::set<VertexId> seen;
    for (VertexId w : rotations[v]) {
      if (w < 0 || w >= vertex_count)
        throw Error(Err::IdOutOfRange, "neighbor id out of range at vertex " + std::to_string(v));
      if (w == v) throw Error(Err::LoopOrMultiedge, "loop at vertex " + std::to_string(v));
      if (!seen.insert(w).second)
        throw Error(Err::LoopOrMultiedge, "parallel edge at vertex " + std::to_string(v));
    }
  }
  for (VertexId v = 0; v < vertex_count; ++v)
    for (VertexId w : rotations[v])
      if (find_pos(rotations[w], v) < 0)
        throw Error(Err::AsymmetricRotation, std::to_string(v) + " lists " + std::to_string(w) +
                                                 " but not vice versa");

  PlaneGraph g;
  g.n_ = vertex_count;
  g.rot_ = std::move(rotations);
  int deg_sum = 0;
  for (VertexId v = 0; v < g.n_; ++v) deg_sum += g.degree(v);
  g.e_ = deg_sum / 2;

  // components
  g.components_ = 0;
  std::vector<int> comp(g.n_, -1);
  for (VertexId s = 0; s < g.n_; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = g.components_;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : g.rot_[v])
        if (comp[w] < 0) {
          comp[w] = g.components_;
          q.push(w);
        }
    }
    ++g.components_;
  }

  g.compute_faces();

  // per-component Euler check: a rotation system is a plane embedding iff
  // n_i - e_i + f_i = 2 on every component with edges
  {
    std::vector<int> cn(g.components_, 0), ce(g.components_, 0), cf(g.components_, 0);
    for (VertexId v = 0; v < g.n_; ++v) {
      cn[comp[v]] += 1;
      ce[comp[v]] += g.degree(v);
    }
    if (g.e_ > 0)
      for (const Face& f : g.faces_) cf[comp[f.boundary.front()]] += 1;
    for (int c = 0; c < g.components_; ++c) {
      ce[c] /= 2;
      if (ce[c] == 0) continue;
      if (cn[c] - ce[c] + cf[c] != 2)
        throw Error(Err::BadParams, "rotation system is not a plane embedding (Euler check)");
    }
  }

  if (g.e_ == 0) {
    if (outer_face_hint && *outer_face_hint != 0)
      throw Error(Err::BadOuterFace, "edgeless graph has a single face");
    g.outer_face_ = 0;
    g.face_count_ = 1;
    return g;
  }

  int outer;
  if (outer_face_hint) {
    if (*outer_face_hint < 0 || *outer_face_hint >= static_cast<int>(g.faces_.size()))
      throw Error(Err::BadOuterFace, "no face with id " + std::to_string(*outer_face_hint));
    outer = *outer_face_hint;
  } else {
    VertexId v0 = 0;
    while (g.degree(v0) == 0) ++v0;
    outer = g.face_at_slot_[v0][0];
  }
  g.outer_face_ = outer;

  // one representative walk per component with edges, other than the outer's
  int outer_comp = comp[g.faces_[outer].boundary.front()];
  for (int c = 0; c < g.components_; ++c) {
    if (c == outer_comp) continue;
    VertexId v0 = -1;
    for (VertexId v = 0; v < g.n_; ++v)
      if (comp[v] == c && g.degree(v) > 0) {
        v0 = v;
        break;
      }
    if (v0 >= 0) g.outer_merged_.push_back(g.face_at_slot_[v0][0]);
  }
  g.face_count_ = static_cast<int>(g.faces_.size()) - static_cast<int>(g.outer_merged_.size());
  return g;
}

void PlaneGraph::compute_faces() {
  faces_.clear();
  face_at_slot_.assign(n_, {});
  for (VertexId v = 0; v < n_; ++v) face_at_slot_[v].assign(rot_[v].size(), -1);

  if (e_ == 0) {
    Face f;
    f.id = 0;
    face_count_ = 1;
    faces_.push_back(std::move(f));
    return;
  }

  for (VertexId v0 = 0; v0 < n_; ++v0) {
    for (int i0 = 0; i0 < degree(v0); ++i0) {
      if (face_at_slot_[v0][i0] >= 0) continue;
      Face f;
      f.id = static_cast<int>(faces_.size());
      VertexId v = v0;
      int i = i0;
      do {
        face_at_slot_[v][i] = f.id;
        f.boundary.push_back(v);
        VertexId w = rot_[v][i];
        int j = find_pos(rot_[w], v);
        i = (j + 1) % degree(w);
        v = w;
      } while (!(v == v0 && i == i0));
      f.length = static_cast<int>(f.boundary.size());
      faces_.push_back(std::move(f));
    }
  }
  face_count_ = static_cast<int>(faces_.size());
}

bool PlaneGraph::adjacent(VertexId u, VertexId v) const {
  return find_pos(rot_[u], v) >= 0;
}

std::vector<std::pair<VertexId, VertexId>> PlaneGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId v = 0; v < n_; ++v)
    for (VertexId w : rot_[v])
      if (v < w) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

bool PlaneGraph::face_in_outer(int id) const {
  if (id == outer_face_) return true;
  return std::find(outer_merged_.begin(), outer_merged_.end(), id) != outer_merged_.end();
}

int PlaneGraph::merged_face_length(int id) const {
  if (!face_in_outer(id)) return faces_[id].length;
  if (id != outer_face_) return 0;
  int len = faces_[outer_face_].length;
  for (int m : outer_merged_) len += faces_[m].length;
  return len;
}

int PlaneGraph::face_of_directed_edge(VertexId u, VertexId v) const {
  int i = find_pos(rot_[u], v);
  if (i < 0) throw Error(Err::BadParams, "not an edge");
  return face_at_slot_[u][i];
}

std::vector<int> PlaneGraph::faces_at(VertexId v) const {
  std::vector<int> out;
  for (int i = 0; i < degree(v); ++i) {
    int f = face_at_slot_[v][i];
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  if (out.empty() && e_ >= 0) out.push_back(outer_face_);  // isolated vertex sits in the outer face
  return out;
}

bool PlaneGraph::on_face(VertexId v, int face_id) const {
  const auto& b = faces_[face_id].boundary;
  return std::find(b.begin(), b.end(), v) != b.end();
}

bool PlaneGraph::on_outer_face(VertexId v) const {
  if (degree(v) == 0) return true;
  if (on_face(v, outer_face_)) return true;
  for (int m : outer_merged_)
    if (on_face(v, m)) return true;
  return false;
}

std::optional<int> PlaneGraph::girth() const {
  int best = -1;
  for (VertexId s = 0; s < n_; ++s) {
    std::vector<int> dist(n_, -1), par(n_, -1);
    dist[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : rot_[v]) {
        if (w == par[v]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          par[w] = v;
          q.push(w);
        } else {
          int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool PlaneGraph::has_triangle() const {
  for (VertexId v = 0; v < n_; ++v)
    for (VertexId u : rot_[v])
      for (VertexId w : rot_[v])
        if (u < w && u > v && w > v && adjacent(u, w)) return true;
  return false;
}

std::vector<std::vector<VertexId>> PlaneGraph::cycles_of_length(int len) const {
  std::vector<std::vector<VertexId>> out;
  if (len < 3) return out;
  std::vector<VertexId> path;
  std::vector<char> used(n_, 0);

  auto dfs = [&](auto&& self, VertexId s, VertexId v) -> void {
    if (static_cast<int>(path.size()) == len) {
      if (adjacent(v, s) && path[1] < path.back()) out.push_back(path);
      return;
    }
    for (VertexId w : rot_[v]) {
      if (w <= s || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, s, w);
      path.pop_back();
      used[w] = 0;
    }
  };

  for (VertexId s = 0; s < n_; ++s) {
    path = {s};
    used[s] = 1;
    dfs(dfs, s, s);
    used[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> PlaneGraph::cycles_through(VertexId v, int len) const {
  std::vector<std::vector<VertexId>> out;
  for (auto& c : cycles_of_length(len))
    if (std::find(c.begin(), c.end(), v) != c.end()) out.push_back(c);
  return out;
}

std::vector<int> PlaneGraph::interior_faces(const std::vector<VertexId>& cycle) const {
  const int k = static_cast<int>(cycle.size());
  std::set<std::pair<VertexId, VertexId>> cyc_edges;
  for (int i = 0; i < k; ++i) {
    VertexId a = cycle[i], b = cycle[(i + 1) % k];
    if (!adjacent(a, b)) throw Error(Err::BadParams, "cycle vertices not consecutive-adjacent");
    cyc_edges.insert({std::min(a, b), std::max(a, b)});
  }

  const int nf = static_cast<int>(faces_.size());
  std::vector<int> region(nf, -1);
  std::queue<int> q;
  auto seed = [&](int f) {
    if (region[f] < 0) {
      region[f] = 0;
      q.push(f);
    }
  };
  seed(outer_face_);
  for (int m : outer_merged_) seed(m);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    const auto& b = faces_[f].boundary;
    for (int i = 0; i < faces_[f].length; ++i) {
      VertexId u = b[i], v = b[(i + 1) % faces_[f].length];
      if (cyc_edges.count({std::min(u, v), std::max(u, v)})) continue;
      int g = face_of_directed_edge(v, u);  // face across the edge
      if (region[g] < 0) {
        region[g] = 0;
        q.push(g);
      }
    }
  }
  std::vector<int> interior;
  for (int f = 0; f < nf; ++f)
    if (region[f] < 0) interior.push_back(f);
  return interior;
}

CycleRef PlaneGraph::make_cycle_ref(const std::vector<VertexId>& cycle) const {
  CycleRef ref;
  ref.vertices = canonical_cycle(cycle);
  auto inner = interior_faces(cycle);
  std::vector<char> on_cycle(n_, 0);
  for (VertexId v : cycle) on_cycle[v] = 1;
  std::vector<char> in_interior(n_, 0);
  for (int f : inner)
    for (VertexId v : faces_[f].boundary)
      if (!on_cycle[v]) in_interior[v] = 1;
  for (VertexId v = 0; v < n_; ++v)
    if (in_interior[v]) ref.interior.push_back(v);
  int exterior = n_ - static_cast<int>(cycle.size()) - static_cast<int>(ref.interior.size());
  ref.separating = !ref.interior.empty() && exterior > 0;
  return ref;
}

std::vector<CycleRef> PlaneGraph::find_separating_cycles(int len) const {
  std::vector<CycleRef> out;
  for (auto& c : cycles_of_length(len)) {
    CycleRef ref = make_cycle_ref(c);
    if (ref.separating) out.push_back(std::move(ref));
  }
  return out;
}

PlaneGraph PlaneGraph::with_outer_face(int face_id) const {
  return build(n_, rot_, face_id);
}

bool PlaneGraph::outer_is_cycle() const {
  if (!outer_merged_.empty()) return false;
  const Face& f = faces_[outer_face_];
  if (f.length < 3) return false;
  std::set<VertexId> s(f.boundary.begin(), f.boundary.end());
  return static_cast<int>(s.size()) == f.length;
}

std::vector<VertexId> PlaneGraph::outer_cycle() const {
  if (!outer_is_cycle()) throw Error(Err::BadOuterFace, "outer face boundary is not a cycle");
  return faces_[outer_face_].boundary;
}

PlaneGraph::Sub PlaneGraph::induced(const std::vector<VertexId>& verts,
                                    std::optional<int> outer_face_hint) const {
  std::vector<std::pair<VertexId, VertexId>> keep;
  std::vector<char> inset(n_, 0);
  for (VertexId v : verts) inset[v] = 1;
  for (VertexId v : verts)
    for (VertexId w : rot_[v])
      if (v < w && inset[w]) keep.emplace_back(v, w);
  return subgraph(verts, keep, outer_face_hint);
}

PlaneGraph::Sub PlaneGraph::subgraph(const std::vector<VertexId>& verts,
                                     const std::vector<std::pair<VertexId, VertexId>>& keep_edges,
                                     std::optional<int> outer_face_hint) const {
  Sub sub;
  sub.from_parent.assign(n_, -1);
  sub.to_parent = verts;
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()), sub.to_parent.end());
  for (int i = 0; i < static_cast<int>(sub.to_parent.size()); ++i)
    sub.from_parent[sub.to_parent[i]] = i;

  std::set<std::pair<VertexId, VertexId>> keep;
  for (auto [a, b] : keep_edges) keep.insert({std::min(a, b), std::max(a, b)});

  std::vector<std::vector<VertexId>> rot(sub.to_parent.size());
  for (int i = 0; i < static_cast<int>(sub.to_parent.size()); ++i) {
    VertexId v = sub.to_parent[i];
    for (VertexId w : rot_[v]) {
      if (sub.from_parent[w] < 0) continue;
      if (!keep.count({std::min(v, w), std::max(v, w)})) continue;
      rot[i].push_back(sub.from_parent[w]);
    }
  }
  sub.graph = PlaneGraph::build(static_cast<int>(sub.to_parent.size()), std::move(rot),
                                outer_face_hint);
  return sub;
}

bool PlaneGraph::edge_on_outer(VertexId a, VertexId b) const {
  return face_in_outer(face_of_directed_edge(a, b)) || face_in_outer(face_of_directed_edge(b, a));
}

bool PlaneGraph::outer_subpath(const std::vector<VertexId>& p) const {
  std::set<VertexId> seen;
  for (VertexId v : p) {
    if (!seen.insert(v).second) return false;
    if (!on_outer_face(v)) return false;
  }
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    if (!adjacent(p[i], p[i + 1])) return false;
    if (!edge_on_outer(p[i], p[i + 1])) return false;
  }
  return true;
}

std::vector<VertexId> PlaneGraph::canonical_cycle(const std::vector<VertexId>& cycle) {
  const int k = static_cast<int>(cycle.size());
  auto rotate_to_min = [&](std::vector<VertexId> c) {
    int mi = static_cast<int>(std::min_element(c.begin(), c.end()) - c.begin());
    std::rotate(c.begin(), c.begin() + mi, c.end());
    return c;
  };
  std::vector<VertexId> fwd = rotate_to_min(cycle);
  std::vector<VertexId> rev(cycle.rbegin(), cycle.rend());
  rev = rotate_to_min(rev);
  (void)k;
  return fwd < rev ? fwd : rev;
}

}  // namespace tfpc
