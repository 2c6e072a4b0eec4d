#include "tfpc/coloring.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace tfpc {

bool proper(const PlaneGraph& g, const Coloring& phi) {
  if (phi.n() != g.vertex_count()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (phi.color[v] == 0) continue;
    if (phi.color[v] < 1 || phi.color[v] > 3) return false;
    for (VertexId w : g.rotation(v))
      if (phi.color[w] != 0 && phi.color[w] == phi.color[v]) return false;
  }
  return true;
}

void enumerate_colorings(const PlaneGraph& g, const Coloring& pre,
                         const std::function<bool(const Coloring&)>& sink,
                         const EnumerateOptions& opts) {
  const int n = g.vertex_count();
  Coloring work = pre.n() == n ? pre : Coloring(n);
  if (pre.n() != 0 && pre.n() != n)
    throw Error(Err::ImproperPrecoloring, "precoloring size mismatch");
  if (!proper(g, work)) throw Error(Err::ImproperPrecoloring, "precoloring is not proper");

  std::vector<VertexId> free_verts;
  for (VertexId v = 0; v < n; ++v)
    if (work.color[v] == 0) free_verts.push_back(v);

  bool symmetric = opts.fix_first_color && static_cast<int>(free_verts.size()) == n;
  bool stop = false;

  auto rec = [&](auto&& self, size_t idx) -> void {
    if (stop) return;
    if (idx == free_verts.size()) {
      if (!sink(work)) stop = true;
      return;
    }
    VertexId v = free_verts[idx];
    int maxc = (symmetric && idx == 0) ? 1 : 3;
    for (int c = 1; c <= maxc; ++c) {
      bool ok = true;
      for (VertexId w : g.rotation(v))
        if (work.color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      work.color[v] = c;
      self(self, idx + 1);
      work.color[v] = 0;
      if (stop) return;
    }
  };
  rec(rec, 0);
}

BigInt count_colorings(const PlaneGraph& g, const Coloring& pre, const EnumerateOptions& opts) {
  BigInt count = 0;
  enumerate_colorings(
      g, pre,
      [&](const Coloring&) {
        ++count;
        return true;
      },
      opts);
  bool symmetric = opts.fix_first_color;
  if (symmetric)
    for (int c : pre.color)
      if (c != 0) symmetric = false;
  return symmetric ? count * 3 : count;
}

ExtensionResult extension_count_from_cycle(const PlaneGraph& g,
                                           const std::vector<VertexId>& cycle,
                                           const Coloring& psi) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3 || k > 5) throw Error(Err::BadPrecoloring, "cycle length must be 3..5");
  if (!g.outer_is_cycle() ||
      PlaneGraph::canonical_cycle(g.outer_cycle()) != PlaneGraph::canonical_cycle(cycle))
    throw Error(Err::BadPrecoloring, "cycle must bound the outer face");
  if (g.has_triangle()) throw Error(Err::BadPrecoloring, "graph must be triangle-free");

  Coloring pre(g.vertex_count());
  for (VertexId v : cycle) {
    if (psi.color[v] == 0) throw Error(Err::BadPrecoloring, "psi must color all of C");
    pre.color[v] = psi.color[v];
  }
  if (!proper(g, pre)) throw Error(Err::BadPrecoloring, "psi is not proper on C");

  ExtensionResult res;
  res.count = count_colorings(g, pre);
  if (res.count <= 1 && g.vertex_count() > k) {
    std::vector<char> on_c(g.vertex_count(), 0);
    for (VertexId v : cycle) on_c[v] = 1;
    for (VertexId v = 0; v < g.vertex_count() && !res.witness; ++v) {
      if (on_c[v]) continue;
      std::set<int> seen;
      for (VertexId w : g.rotation(v))
        if (on_c[w]) seen.insert(pre.color[w]);
      if (seen.size() >= 2) res.witness = v;
    }
    if (!res.witness)
      throw Error(Err::LemmaViolation,
                  "precoloring with <=1 extension but no vertex sees two cycle colors");
  }
  return res;
}

namespace {

// distinct colors on a merged face
std::set<int> face_colors(const PlaneGraph& g, int id, const Coloring& phi) {
  std::set<int> cols;
  for (VertexId v : g.face(id).boundary) cols.insert(phi.color[v]);
  if (id == g.outer_face())
    for (int m : g.outer_merged())
      for (VertexId v : g.face(m).boundary) cols.insert(phi.color[v]);
  return cols;
}

int count_components_induced(const PlaneGraph& g, const std::vector<char>& inset) {
  int comps = 0;
  std::vector<char> vis(g.vertex_count(), 0);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (!inset[s] || vis[s]) continue;
    ++comps;
    std::queue<VertexId> q;
    q.push(s);
    vis[s] = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : g.rotation(v))
        if (inset[w] && !vis[w]) {
          vis[w] = 1;
          q.push(w);
        }
    }
  }
  return comps;
}

}  // namespace

BichromaticReport bichromatic_report(const PlaneGraph& g, const Coloring& phi) {
  if (!phi.total() || !proper(g, phi))
    throw Error(Err::ImproperColoring, "need a total proper coloring");

  BichromaticReport rep;
  for (const Face& f : g.faces()) {
    if (g.face_in_outer(f.id) && f.id != g.outer_face()) continue;
    int len = g.merged_face_length(f.id);
    if (len > 4) rep.s_plus += len - 4;
    if (len == 4 && face_colors(g, f.id, phi).size() == 2) ++rep.q;
  }

  const int n = g.vertex_count();
  auto comp_count = [&](int a, int b) {
    std::vector<char> inset(n, 0);
    for (VertexId v = 0; v < n; ++v)
      if (phi.color[v] == a || phi.color[v] == b) inset[v] = 1;
    return count_components_induced(g, inset);
  };
  rep.c12 = comp_count(1, 2);
  rep.c23 = comp_count(2, 3);
  rep.c13 = comp_count(1, 3);
  rep.bound_exponent = Rational(rep.s_plus + 8 + rep.q, 6);
  return rep;
}

ManycolorResult verify_manycolor_bound(const PlaneGraph& g, const Coloring& phi) {
  if (g.vertex_count() < 3)
    throw Error(Err::HypothesisViolation, "need n >= 3");
  if (g.component_count() != 1)
    throw Error(Err::HypothesisViolation, "need a connected graph");
  if (g.has_triangle())
    throw Error(Err::HypothesisViolation, "need a triangle-free graph");
  if (!phi.total() || !proper(g, phi))
    throw Error(Err::HypothesisViolation, "need a total proper coloring");

  ManycolorResult res;
  res.report = bichromatic_report(g, phi);
  res.exponent_num = res.report.s_plus + 8 + res.report.q;
  res.count = count_colorings(g);
  BigInt lhs = res.count;
  lhs = lhs * lhs * lhs;
  lhs *= lhs;  // count^6
  res.count_ok = lhs >= pow2(static_cast<unsigned>(res.exponent_num));
  res.c_max = std::max({res.report.c12, res.report.c23, res.report.c13});
  res.c_max_ok = 6 * res.c_max >= res.exponent_num;
  return res;
}

std::vector<std::vector<VertexId>> kempe_components(const PlaneGraph& g, const Coloring& phi,
                                                    int a, int b) {
  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> comps;
  std::vector<char> vis(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (vis[s] || (phi.color[s] != a && phi.color[s] != b)) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> q;
    q.push(s);
    vis[s] = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      comp.push_back(v);
      for (VertexId w : g.rotation(v))
        if (!vis[w] && (phi.color[w] == a || phi.color[w] == b)) {
          vis[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Coloring kempe_swap(const PlaneGraph& g, const Coloring& phi, int a, int b, int component_index) {
  if (!phi.total() || !proper(g, phi))
    throw Error(Err::ImproperColoring, "need a total proper coloring");
  if (a == b || a < 1 || a > 3 || b < 1 || b > 3)
    throw Error(Err::BadComponent, "invalid color pair");
  auto comps = kempe_components(g, phi, a, b);
  if (component_index < 0 || component_index >= static_cast<int>(comps.size()))
    throw Error(Err::BadComponent, "component index out of range");
  Coloring out = phi;
  for (VertexId v : comps[component_index]) out.color[v] = out.color[v] == a ? b : a;
  return out;
}

ContractResult contract_for_minc(const PlaneGraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw Error(Err::BadParams, "vertex out of range");
  if (g.has_triangle()) throw Error(Err::HypothesisViolation, "need a triangle-free graph");
  if (!g.cycles_through(v, 5).empty())
    throw Error(Err::VIn5Cycle, "vertex lies on a 5-cycle");

  const int n = g.vertex_count();
  const std::vector<VertexId>& nbrs = g.rotation(v);
  std::vector<char> is_nbr(n, 0);
  for (VertexId w : nbrs) is_nbr[w] = 1;

  ContractResult res;
  res.image.assign(n, -1);
  int next = 0;
  for (VertexId u = 0; u < n; ++u)
    if (u != v && !is_nbr[u]) res.image[u] = next++;
  const int m = nbrs.empty() ? -1 : next;
  if (m >= 0) {
    for (VertexId w : nbrs) res.image[w] = m;
    ++next;
  }
  res.merged = m;

  // entry = (neighbor in new ids, provenance = old neighbor of v it came from,
  // or -1 for untouched vertices)
  struct Entry {
    int to;
    int tag;
  };
  std::vector<std::vector<Entry>> raw(next);
  for (VertexId u = 0; u < n; ++u) {
    if (u == v) continue;
    if (is_nbr[u]) continue;
    for (VertexId w : g.rotation(u)) raw[res.image[u]].push_back({res.image[w], is_nbr[w] ? w : -1});
  }
  if (m >= 0) {
    for (VertexId w : nbrs) {
      const auto& rw = g.rotation(w);
      int p = 0;
      while (rw[p] != v) ++p;
      for (size_t k = 1; k < rw.size(); ++k) {
        VertexId x = rw[(p + k) % rw.size()];
        raw[m].push_back({res.image[x], w});
      }
    }
  }

  // drop parallel edges: keep the first slot per distinct neighbor of the
  // merged vertex, remove the matching slot on the other endpoint
  if (m >= 0) {
    std::set<int> seen;
    std::vector<Entry> kept;
    std::set<std::pair<int, int>> drop;  // (other endpoint new id, tag)
    for (const Entry& en : raw[m]) {
      if (seen.insert(en.to).second)
        kept.push_back(en);
      else
        drop.insert({en.to, en.tag});
    }
    raw[m] = kept;
    for (int u = 0; u < next; ++u) {
      if (u == m) continue;
      std::vector<Entry> out;
      for (const Entry& en : raw[u]) {
        if (en.to == m && en.tag >= 0 && drop.count({u, en.tag})) continue;
        out.push_back(en);
      }
      raw[u] = out;
    }
  }

  std::vector<std::vector<VertexId>> rot(next);
  for (int u = 0; u < next; ++u)
    for (const Entry& en : raw[u]) rot[u].push_back(en.to);
  res.graph = PlaneGraph::build(next, std::move(rot));
  if (res.graph.has_triangle())
    throw Error(Err::ResultHasTriangle, "contraction produced a triangle");
  return res;
}

}  // namespace tfpc
