#include "tfpc/listcolor.hpp"

#include <algorithm>
#include <set>

namespace tfpc {

bool ListAssignment::has(VertexId v, int c) const {
  return std::find(lists[v].begin(), lists[v].end(), c) != lists[v].end();
}

void validate_lists(const PlaneGraph& g, const ListAssignment& l) {
  if (static_cast<int>(l.lists.size()) != g.vertex_count())
    throw Error(Err::BadParams, "list assignment size mismatch");
  for (const auto& lst : l.lists) {
    if (lst.empty() || lst.size() > 3) throw Error(Err::BadParams, "lists must have size 1..3");
    std::set<int> s(lst.begin(), lst.end());
    if (s.size() != lst.size()) throw Error(Err::BadParams, "duplicate color in list");
    for (int c : lst)
      if (c < 1 || c > 3) throw Error(Err::BadParams, "colors are 1..3");
  }
}

std::optional<Coloring> solve_list_coloring(const PlaneGraph& g, const ListAssignment& l) {
  validate_lists(g, l);
  const int n = g.vertex_count();
  Coloring work(n);
  auto rec = [&](auto&& self, VertexId v) -> bool {
    if (v == n) return true;
    for (int c : l.lists[v]) {
      bool ok = true;
      for (VertexId w : g.rotation(v))
        if (work.color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      work.color[v] = c;
      if (self(self, v + 1)) return true;
      work.color[v] = 0;
    }
    return false;
  };
  if (rec(rec, 0)) return work;
  return std::nullopt;
}

namespace {

bool edge_on_outer(const PlaneGraph& g, VertexId a, VertexId b) {
  return g.edge_on_outer(a, b);
}

bool is_outer_subpath(const PlaneGraph& g, const std::vector<VertexId>& p) {
  return g.outer_subpath(p);
}

}  // namespace

Casing build_casing(const PlaneGraph& g, const std::vector<VertexId>& p,
                    const std::vector<std::pair<VertexId, VertexId>>& x) {
  if (p.empty()) throw Error(Err::BadParams, "casing needs a nonempty path");
  if (!is_outer_subpath(g, p))
    throw Error(Err::BadParams, "P must be a subpath of the outer face boundary");
  std::set<VertexId> pset(p.begin(), p.end());
  std::set<VertexId> xverts;
  for (auto [a, b] : x) {
    if (!g.adjacent(a, b) || !edge_on_outer(g, a, b))
      throw Error(Err::BadParams, "X edges must lie on the outer face boundary");
    if (pset.count(a) || pset.count(b))
      throw Error(Err::XMeetsP, "X shares a vertex with P");
    if (!xverts.insert(a).second || !xverts.insert(b).second)
      throw Error(Err::XNotMatching, "X is not a matching");
  }
  std::set<VertexId> z = xverts;
  z.insert(p.begin(), p.end());
  if (z.size() < 2) throw Error(Err::BadParams, "casing needs |Z| >= 2");
  if (!g.outer_merged().empty())
    throw Error(Err::BadParams, "casing needs a connected outer boundary");

  const auto& walk = g.face(g.outer_face()).boundary;
  const int L = static_cast<int>(walk.size());

  Casing cas;
  std::vector<int> first_occ(g.vertex_count(), -1);
  for (int t = 0; t < L; ++t) {
    if (z.count(walk[t]) && first_occ[walk[t]] < 0) {
      first_occ[walk[t]] = t;
      cas.z_order.push_back(walk[t]);
    }
  }
  if (cas.z_order.size() != z.size())
    throw Error(Err::BadParams, "Z vertex missing from the outer walk");

  // rotate the order to start at the first vertex of P
  {
    auto it = std::find(cas.z_order.begin(), cas.z_order.end(), p.front());
    std::rotate(cas.z_order.begin(), it, cas.z_order.end());
  }
  const int m = static_cast<int>(cas.z_order.size());
  std::vector<int> rank(g.vertex_count(), -1);
  for (int i = 0; i < m; ++i) rank[cas.z_order[i]] = i;

  // endpoints of each P/X edge must be consecutive in the cyclic Z order
  std::vector<std::pair<VertexId, VertexId>> px = x;
  for (size_t i = 0; i + 1 < p.size(); ++i) px.emplace_back(p[i], p[i + 1]);
  for (auto [a, b] : px) {
    int d = (rank[b] - rank[a] + m) % m;
    if (d != 1 && d != m - 1)
      throw Error(Err::BadParams, "edge endpoints are not consecutive around the outer face");
  }

  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> rot = g.rotations();
  rot.resize(n + m);
  cas.g_to_host.resize(n);
  for (int v = 0; v < n; ++v) cas.g_to_host[v] = v;
  for (int i = 0; i < m; ++i) {
    VertexId zi = cas.z_order[i];
    VertexId ki = n + i;
    cas.k_cycle.push_back(ki);
    int t = first_occ[zi];
    VertexId arrived_from = walk[(t + L - 1) % L];
    auto& rz = rot[zi];
    auto it = std::find(rz.begin(), rz.end(), arrived_from);
    rz.insert(it + 1, ki);
    if (m == 2) {
      rot[ki] = i == 0 ? std::vector<VertexId>{n + 1, zi} : std::vector<VertexId>{n, zi};
    } else {
      rot[ki] = {n + (i + 1) % m, zi, n + (i + m - 1) % m};
    }
  }

  PlaneGraph host = PlaneGraph::build(n + m, rot);
  if (m >= 3) {
    int outer = -1;
    for (const Face& f : host.faces()) {
      if (f.length != m) continue;
      if (PlaneGraph::canonical_cycle(f.boundary) == PlaneGraph::canonical_cycle(cas.k_cycle)) {
        outer = f.id;
        break;
      }
    }
    if (outer < 0) throw Error(Err::BadParams, "casing cycle does not bound a face");
    host = host.with_outer_face(outer);
  }
  cas.host = std::move(host);
  return cas;
}

int casing_rank(const Casing& c, const std::vector<VertexId>& p, VertexId v) {
  (void)p;  // the order is already anchored at P's first vertex
  auto it = std::find(c.z_order.begin(), c.z_order.end(), v);
  if (it == c.z_order.end()) throw Error(Err::BadParams, "vertex not in the casing order");
  return static_cast<int>(it - c.z_order.begin());
}

bool blocks(const PlaneGraph& g, const ListAssignment& l, std::pair<VertexId, VertexId> xy,
            VertexId p) {
  auto [x, y] = xy;
  if (!g.adjacent(x, y)) throw Error(Err::BadParams, "xy must be an edge");
  if (l.size(x) != 2 || l.size(y) != 2)
    throw Error(Err::BadParams, "blocking is defined for edges joining size-2 lists");
  if (p == x || p == y) return false;
  for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
    (void)b;
    for (VertexId u : g.rotation(p)) {
      if (u == x || u == y || l.size(u) != 2) continue;
      for (VertexId v : g.rotation(u)) {
        if (v == p || v == x || v == y || l.size(v) != 3) continue;
        if (g.adjacent(v, a)) return true;
      }
    }
  }
  return false;
}

std::optional<VertexId> middle_vertex(const std::vector<VertexId>& p) {
  if (p.size() == 3) return p[1];
  return std::nullopt;
}

namespace {

struct Ctx {
  const PlaneGraph& g;
  const std::vector<VertexId>& p;
  const ListAssignment& l;
  std::set<VertexId> pset;
  HypothesisReport rep;

  void add(const std::string& name, bool holds, const std::string& witness = "") {
    rep.conditions.push_back({name, holds, holds ? "" : witness});
    if (!holds) rep.hypotheses_hold = false;
  }
};

void check_girth5(Ctx& c) {
  auto gir = c.g.girth();
  c.add("girth >= 5", !gir || *gir >= 5, gir ? "girth " + std::to_string(*gir) : "");
}

void check_p_outer(Ctx& c, size_t maxp) {
  c.add("P is an outer subpath with |V(P)| <= " + std::to_string(maxp),
        c.p.size() <= maxp && (c.p.empty() || is_outer_subpath(c.g, c.p)));
}

void check_lists_shape(Ctx& c, bool exact_12) {
  bool ok = true;
  std::string wit;
  for (VertexId v = 0; v < c.g.vertex_count() && ok; ++v) {
    if (c.pset.count(v)) {
      ok = c.l.size(v) == 1;
      if (!ok) wit = "P vertex " + std::to_string(v) + " has list size != 1";
    } else if (!c.g.on_outer_face(v)) {
      ok = c.l.size(v) == 3;
      if (!ok) wit = "interior vertex " + std::to_string(v) + " lacks a full list";
    } else {
      ok = c.l.size(v) == 2 || c.l.size(v) == 3;
      if (ok && exact_12 && c.l.size(v) == 2)
        ok = c.l.has(v, 1) && c.l.has(v, 2);
      if (!ok) wit = "outer vertex " + std::to_string(v) + " has a bad list";
    }
  }
  for (size_t i = 0; ok && i + 1 < c.p.size(); ++i)
    if (c.l.lists[c.p[i]] == c.l.lists[c.p[i + 1]]) {
      ok = false;
      wit = "P lists do not give a proper coloring";
    }
  c.add(exact_12 ? "lists are {psi},{1,2},{1,2,3} by position" : "list sizes fit the statement",
        ok, wit);
}

bool exists_222(Ctx& c, std::string* wit) {
  for (VertexId v = 0; v < c.g.vertex_count(); ++v) {
    if (c.l.size(v) != 2) continue;
    const auto& nb = c.g.rotation(v);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (c.l.size(nb[i]) == 2 && c.l.size(nb[j]) == 2) {
          *wit = "path " + std::to_string(nb[i]) + "-" + std::to_string(v) + "-" +
                 std::to_string(nb[j]);
          return true;
        }
  }
  return false;
}

// path v1..v5 with list sizes 2,2,3,2,2
bool exists_22322(Ctx& c, std::string* wit) {
  const PlaneGraph& g = c.g;
  for (VertexId v3 = 0; v3 < g.vertex_count(); ++v3) {
    if (c.l.size(v3) != 3) continue;
    for (VertexId v2 : g.rotation(v3)) {
      if (c.l.size(v2) != 2) continue;
      for (VertexId v4 : g.rotation(v3)) {
        if (v4 == v2 || c.l.size(v4) != 2) continue;
        for (VertexId v1 : g.rotation(v2)) {
          if (v1 == v3 || v1 == v4 || c.l.size(v1) != 2) continue;
          for (VertexId v5 : g.rotation(v4)) {
            if (v5 == v3 || v5 == v2 || v5 == v1 || c.l.size(v5) != 2) continue;
            *wit = "path " + std::to_string(v1) + "-" + std::to_string(v2) + "-" +
                   std::to_string(v3) + "-" + std::to_string(v4) + "-" + std::to_string(v5);
            return true;
          }
        }
      }
    }
  }
  return false;
}

bool endvertex_sees_22(Ctx& c, VertexId p) {
  for (VertexId u : c.g.rotation(p)) {
    if (c.pset.count(u) || c.l.size(u) != 2) continue;
    for (VertexId w : c.g.rotation(u))
      if (w != p && c.l.size(w) == 2) return true;
  }
  return false;
}

bool endvertex_sees_2322(Ctx& c, VertexId p) {
  for (VertexId v2 : c.g.rotation(p)) {
    if (v2 == p || c.l.size(v2) != 2) continue;
    for (VertexId v3 : c.g.rotation(v2)) {
      if (v3 == p || c.l.size(v3) != 3) continue;
      for (VertexId v4 : c.g.rotation(v3)) {
        if (v4 == p || v4 == v2 || c.l.size(v4) != 2) continue;
        for (VertexId v5 : c.g.rotation(v4)) {
          if (v5 == p || v5 == v2 || v5 == v3 || c.l.size(v5) != 2) continue;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

HypothesisReport check_hypotheses(Stmt stmt, const PlaneGraph& g, const std::vector<VertexId>& p,
                                  const ListAssignment& l, const Casing* casing) {
  validate_lists(g, l);
  Ctx c{g, p, l, {p.begin(), p.end()}, {}};
  std::string wit;

  switch (stmt) {
    case Stmt::Thm3Choos: {
      check_girth5(c);
      check_p_outer(c, 3);
      check_lists_shape(c, false);
      bool indep = true;
      for (VertexId v = 0; v < g.vertex_count() && indep; ++v)
        if (l.size(v) == 2)
          for (VertexId w : g.rotation(v))
            if (w > v && l.size(w) == 2) {
              indep = false;
              wit = "edge " + std::to_string(v) + "-" + std::to_string(w);
            }
      c.add("size-2 lists form an independent set", indep, wit);
      break;
    }
    case Stmt::ThmDvoKaw: {
      check_girth5(c);
      check_p_outer(c, 3);
      check_lists_shape(c, false);
      c.add("(ii) no 2-2-2 path", !exists_222(c, &wit), wit);
      c.add("(iii) no 2-2-3-2-2 path", !exists_22322(c, &wit), wit);
      bool iv = true;
      if (p.size() == 3) {
        auto free_end = [&](VertexId q) {
          return !endvertex_sees_22(c, q) && !endvertex_sees_2322(c, q);
        };
        iv = free_end(p.front()) || free_end(p.back());
      }
      c.add("(iv) an endvertex of P avoids 2-2 and 2-3-2-2 paths", iv);
      break;
    }
    case Stmt::LemSame: {
      check_girth5(c);
      check_p_outer(c, 3);
      check_lists_shape(c, true);
      c.add("(ii) no 2-2-2 path", !exists_222(c, &wit), wit);
      bool iii = true;
      if (p.size() == 3) iii = !endvertex_sees_22(c, p.front()) || !endvertex_sees_22(c, p.back());
      c.add("(iii) an endvertex of P avoids 2-2 paths", iii);
      break;
    }
    case Stmt::LemDvoKawStrong: {
      check_girth5(c);
      check_p_outer(c, 3);
      check_lists_shape(c, false);
      bool small_edges_outer = true;
      for (auto [a, b] : g.edges())
        if (l.size(a) < 3 && l.size(b) < 3 && !edge_on_outer(g, a, b)) {
          small_edges_outer = false;
          wit = "edge " + std::to_string(a) + "-" + std::to_string(b);
        }
      c.add("(i') small-list edges lie on the outer boundary", small_edges_outer, wit);
      c.add("(ii) no 2-2-2 path", !exists_222(c, &wit), wit);

      std::vector<std::pair<VertexId, VertexId>> x;
      for (auto [a, b] : g.edges())
        if (l.size(a) == 2 && l.size(b) == 2) x.emplace_back(a, b);

      Casing built;
      const Casing* cas = casing;
      bool casing_ok = true;
      if (!cas && !p.empty()) {
        try {
          built = build_casing(g, p, x);
          cas = &built;
        } catch (const Error&) {
          casing_ok = false;
        }
      }
      bool iii = casing_ok;
      if (cas) {
        auto rank = [&](VertexId v) { return casing_rank(*cas, p, v); };
        auto ordered = [&](std::pair<VertexId, VertexId> e) {
          return rank(e.first) < rank(e.second) ? e : std::pair{e.second, e.first};
        };
        for (size_t i = 0; i < x.size() && iii; ++i)
          for (size_t j = i + 1; j < x.size() && iii; ++j) {
            auto e = ordered(x[i]), f = ordered(x[j]);
            if (rank(e.first) > rank(f.first)) std::swap(e, f);
            auto common = [&](VertexId a, VertexId b) {
              for (VertexId w : g.rotation(a))
                if (g.adjacent(w, b)) return true;
              return false;
            };
            if (common(e.second, f.first) || common(e.first, f.second)) {
              iii = false;
              wit = "edges " + std::to_string(e.first) + "-" + std::to_string(e.second) + ", " +
                    std::to_string(f.first) + "-" + std::to_string(f.second);
            }
          }
      }
      c.add("(iii') casing separation for X", iii, wit);

      bool iv = true;
      if (p.size() == 3) {
        if (endvertex_sees_22(c, p.front())) {
          iv = false;
          wit = "p1 starts a 2-2 path";
        }
        for (auto [a, b] : x) {
          if (!iv) break;
          if (g.adjacent(a, p.back()) || g.adjacent(b, p.back())) continue;
          if (!blocks(g, l, {a, b}, p.front())) continue;
          bool ok = blocks(g, l, {a, b}, p.back());
          if (ok) {
            for (int col : l.lists[p[1]])
              if (!l.has(a, col) && !l.has(b, col)) ok = false;
          }
          if (!ok) {
            iv = false;
            wit = "edge " + std::to_string(a) + "-" + std::to_string(b) + " blocks only p1";
          }
        }
      }
      c.add("(iv') blocking edges of p1 also block p3 and cover L(p2)", iv, wit);
      break;
    }
    case Stmt::ThmCycEx: {
      check_girth5(c);
      bool cyc = g.outer_is_cycle() && g.face(g.outer_face()).length <= 9;
      c.add("outer face bounded by a cycle of length <= 9", cyc);
      bool lists_ok = true;
      if (cyc) {
        auto k = g.outer_cycle();
        std::set<VertexId> kset(k.begin(), k.end());
        for (VertexId v = 0; v < g.vertex_count() && lists_ok; ++v)
          lists_ok = kset.count(v) ? l.size(v) == 1 : l.size(v) == 3;
        for (size_t i = 0; lists_ok && i < k.size(); ++i)
          if (l.lists[k[i]] == l.lists[k[(i + 1) % k.size()]]) lists_ok = false;
      }
      c.add("K precolored properly, others full lists", lists_ok);

      if (c.rep.hypotheses_hold) {
        auto k = g.outer_cycle();
        std::set<VertexId> kset(k.begin(), k.end());
        bool chord = false;
        for (size_t i = 0; i < k.size(); ++i)
          for (size_t j = i + 1; j < k.size(); ++j) {
            size_t d = std::min(j - i, k.size() - (j - i));
            if (d > 1 && g.adjacent(k[i], k[j])) chord = true;
          }
        bool three_nb = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          if (kset.count(v)) continue;
          int cnt = 0;
          for (VertexId w : g.rotation(v))
            if (kset.count(w)) ++cnt;
          if (cnt >= 3) three_nb = true;
        }
        int klen = static_cast<int>(k.size());
        c.rep.exception_case =
            ((klen == 8 || klen == 9) && chord) || (klen == 9 && three_nb);
      }
      break;
    }
  }

  if (!c.rep.hypotheses_hold) return c.rep;
  c.rep.conclusion_checked = true;
  c.rep.colorable = solve_list_coloring(g, l).has_value();
  if (!c.rep.colorable && !(stmt == Stmt::ThmCycEx && c.rep.exception_case))
    throw Error(Err::StatementViolation, "hypotheses hold but the solver found no coloring");
  return c.rep;
}

}  // namespace tfpc
