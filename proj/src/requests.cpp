#include "tfpc/requests.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tfpc {

std::vector<VertexId> RequestGraph::all_requests() const {
  std::vector<VertexId> all = r_eq;
  all.insert(all.end(), r_neq.begin(), r_neq.end());
  std::sort(all.begin(), all.end());
  return all;
}

void validate_request_graph(const RequestGraph& rg, bool require_triangle_free) {
  const int n = rg.graph.vertex_count();
  std::set<VertexId> eq(rg.r_eq.begin(), rg.r_eq.end());
  std::set<VertexId> ne(rg.r_neq.begin(), rg.r_neq.end());
  if (eq.size() != rg.r_eq.size() || ne.size() != rg.r_neq.size())
    throw Error(Err::BadParams, "duplicate request vertex");
  for (VertexId r : rg.all_requests()) {
    if (r < 0 || r >= n) throw Error(Err::IdOutOfRange, "request vertex out of range");
    if (eq.count(r) && ne.count(r))
      throw Error(Err::BadParams, "request in both R_eq and R_neq");
    if (rg.graph.degree(r) != 2)
      throw Error(Err::BadParams, "request vertex must have degree 2");
    for (VertexId w : rg.graph.rotation(r))
      if (eq.count(w) || ne.count(w))
        throw Error(Err::BadParams, "request set is not independent");
    if (rg.weight(r) <= 0) throw Error(Err::BadParams, "weights must be positive");
  }
  for (auto& [v, w] : rg.weights)
    if (!eq.count(v) && !ne.count(v))
      throw Error(Err::BadParams, "weight on a non-request vertex");
  if (require_triangle_free && rg.graph.has_triangle())
    throw Error(Err::HypothesisViolation, "graph must be triangle-free");
}

SatisfactionResult satisfied_fraction(const RequestGraph& rg, const Coloring& phi) {
  if (!phi.total() || !proper(rg.graph, phi))
    throw Error(Err::ImproperColoring, "need a total proper coloring");
  SatisfactionResult res;
  res.coloring = phi;
  for (VertexId r : rg.all_requests()) {
    const auto& nb = rg.graph.rotation(r);
    bool same = phi.color[nb[0]] == phi.color[nb[1]];
    bool eq = std::find(rg.r_eq.begin(), rg.r_eq.end(), r) != rg.r_eq.end();
    res.total_weight += rg.weight(r);
    if (eq == same) res.satisfied_weight += rg.weight(r);
  }
  res.fraction = res.total_weight == 0 ? Rational(1) : res.satisfied_weight / res.total_weight;
  return res;
}

namespace {

// Requests have degree two and are independent, so any proper coloring of
// G - R extends; satisfaction depends only on the core colors.
struct Core {
  PlaneGraph::Sub sub;
  std::vector<VertexId> core_verts;
};

Core request_core(const RequestGraph& rg) {
  Core core;
  std::set<VertexId> req(rg.r_eq.begin(), rg.r_eq.end());
  req.insert(rg.r_neq.begin(), rg.r_neq.end());
  for (VertexId v = 0; v < rg.graph.vertex_count(); ++v)
    if (!req.count(v)) core.core_verts.push_back(v);
  core.sub = rg.graph.induced(core.core_verts);
  return core;
}

Coloring lift_core_coloring(const RequestGraph& rg, const Core& core, const Coloring& phi_core) {
  Coloring full(rg.graph.vertex_count());
  for (size_t i = 0; i < core.sub.to_parent.size(); ++i)
    full.color[core.sub.to_parent[i]] = phi_core.color[static_cast<int>(i)];
  for (VertexId r : rg.all_requests()) {
    const auto& nb = rg.graph.rotation(r);
    for (int c = 1; c <= 3; ++c)
      if (c != full.color[nb[0]] && c != full.color[nb[1]]) {
        full.color[r] = c;
        break;
      }
  }
  return full;
}

}  // namespace

SatisfactionResult best_fraction(const RequestGraph& rg) {
  validate_request_graph(rg);
  Core core = request_core(rg);
  std::set<VertexId> eq(rg.r_eq.begin(), rg.r_eq.end());

  Rational total = 0;
  for (VertexId r : rg.all_requests()) total += rg.weight(r);

  bool found = false;
  Rational best = -1;
  Coloring best_core;
  enumerate_colorings(core.sub.graph, {}, [&](const Coloring& phi) {
    Rational sat = 0;
    for (VertexId r : rg.all_requests()) {
      const auto& nb = rg.graph.rotation(r);
      bool same = phi.color[core.sub.from_parent[nb[0]]] == phi.color[core.sub.from_parent[nb[1]]];
      if (eq.count(r) == same) sat += rg.weight(r);
    }
    if (!found || sat > best) {
      best = sat;
      best_core = phi;
      found = true;
    }
    return !(found && best == total);  // cannot improve on satisfying everything
  });
  if (!found)
    throw Error(Err::Uncolorable, "graph admits no proper 3-coloring (lemma violation for "
                                  "triangle-free planar inputs)");

  SatisfactionResult res;
  res.coloring = lift_core_coloring(rg, core, best_core);
  res.satisfied_weight = best;
  res.total_weight = total;
  res.fraction = total == 0 ? Rational(1) : best / total;
  return res;
}

namespace {

std::vector<VertexId> replace_entry(const std::vector<VertexId>& rot, VertexId oldv,
                                    const std::vector<VertexId>& repl) {
  std::vector<VertexId> out;
  for (VertexId w : rot) {
    if (w == oldv)
      out.insert(out.end(), repl.begin(), repl.end());
    else
      out.push_back(w);
  }
  return out;
}

}  // namespace

RequestGraph gadget_neq_to_eq(const RequestGraph& rg) {
  validate_request_graph(rg, true);
  const int n = rg.graph.vertex_count();
  std::vector<std::vector<VertexId>> rot = rg.graph.rotations();

  RequestGraph out;
  out.r_eq = rg.r_eq;
  for (VertexId r : rg.r_eq) out.weights[r] = rg.weight(r);

  int next = n;
  std::vector<VertexId> neq_sorted = rg.r_neq;
  std::sort(neq_sorted.begin(), neq_sorted.end());
  for (VertexId r : neq_sorted) {
    VertexId a = rot[r][0], b = rot[r][1];
    VertexId x = r;        // reuse the slot: x is the new equality request
    VertexId y = next++;   // plain vertex between x and b
    rot[x] = {a, y};
    rot.push_back({x, b});
    rot[b] = replace_entry(rot[b], r, {y});
    out.r_eq.push_back(x);
    out.weights[x] = rg.weight(r);
  }
  out.graph = PlaneGraph::build(next, std::move(rot));
  validate_request_graph(out, true);
  return out;
}

RequestGraph gadget_eq_to_neq(const RequestGraph& rg) {
  validate_request_graph(rg, true);
  const int n = rg.graph.vertex_count();
  std::vector<std::vector<VertexId>> rot = rg.graph.rotations();

  RequestGraph out;
  out.r_neq = rg.r_neq;
  for (VertexId r : rg.r_neq) out.weights[r] = rg.weight(r);

  int next = n;
  std::vector<VertexId> eq_sorted = rg.r_eq;
  std::sort(eq_sorted.begin(), eq_sorted.end());
  for (VertexId r : eq_sorted) {
    VertexId t = rot[r][0], b = rot[r][1];
    VertexId l = r;  // reuse the slot for one 4-cycle vertex
    VertexId m = next++;
    VertexId s = next++;
    rot[l] = {t, s, b};
    rot.push_back({b, s, t});  // m
    rot.push_back({l, m});     // s, the new inequality request
    rot[t] = replace_entry(rot[t], r, {m, l});
    rot[b] = replace_entry(rot[b], r, {l, m});
    out.r_neq.push_back(s);
    out.weights[s] = rg.weight(r);
  }
  out.graph = PlaneGraph::build(next, std::move(rot));
  validate_request_graph(out, true);
  return out;
}

namespace {

RequestGraph clone_eq_requests(const RequestGraph& rg, const std::map<VertexId, BigInt>& counts) {
  const int n = rg.graph.vertex_count();
  std::vector<std::vector<VertexId>> rot = rg.graph.rotations();
  RequestGraph out;

  int next = n;
  std::vector<VertexId> eq_sorted = rg.r_eq;
  std::sort(eq_sorted.begin(), eq_sorted.end());
  for (VertexId r : eq_sorted) {
    VertexId a = rot[r][0], b = rot[r][1];
    long long k = counts.at(r).convert_to<long long>();
    std::vector<VertexId> clones = {r};
    for (long long i = 1; i < k; ++i) {
      clones.push_back(next++);
      rot.push_back({a, b});
    }
    out.r_eq.insert(out.r_eq.end(), clones.begin(), clones.end());
    rot[a] = replace_entry(rot[a], r, clones);
    std::vector<VertexId> rev(clones.rbegin(), clones.rend());
    rot[b] = replace_entry(rot[b], r, rev);
  }
  out.graph = PlaneGraph::build(next, std::move(rot));
  return out;
}

}  // namespace

RequestGraph integerize_and_clone(const RequestGraph& rg) {
  validate_request_graph(rg);
  if (!rg.r_neq.empty()) throw Error(Err::BadParams, "all requests must be equality requests");

  BigInt lcm = 1;
  for (VertexId r : rg.r_eq)
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(rg.weight(r)));
  std::map<VertexId, BigInt> counts;
  for (VertexId r : rg.r_eq) {
    Rational scaled = rg.weight(r) * Rational(lcm);
    counts[r] = boost::multiprecision::numerator(scaled);
  }
  RequestGraph out = clone_eq_requests(rg, counts);
  validate_request_graph(out);
  return out;
}

RequestGraph subdivide_for_tria(const PlaneGraph& g,
                                const std::vector<std::pair<VertexId, VertexId>>& x) {
  for (auto [u, v] : x)
    if (!g.adjacent(u, v)) throw Error(Err::BadParams, "X contains a non-edge");
  std::set<std::pair<VertexId, VertexId>> xset;
  for (auto [u, v] : x) xset.insert({std::min(u, v), std::max(u, v)});

  // G - X must be triangle-free
  {
    std::vector<std::pair<VertexId, VertexId>> keep;
    for (auto [u, v] : g.edges())
      if (!xset.count({u, v})) keep.emplace_back(u, v);
    std::vector<VertexId> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    if (g.subgraph(all, keep).graph.has_triangle())
      throw Error(Err::StillHasTriangle, "G - X has a triangle");
  }

  std::vector<std::vector<VertexId>> rot = g.rotations();
  RequestGraph out;
  int next = g.vertex_count();
  for (auto [u, v] : xset) {
    VertexId s = next++;
    rot.push_back({u, v});
    rot[u] = replace_entry(rot[u], v, {s});
    rot[v] = replace_entry(rot[v], u, {s});
    out.r_neq.push_back(s);
  }
  out.graph = PlaneGraph::build(next, std::move(rot));
  validate_request_graph(out, true);
  return out;
}

CloneExplosion clone_explosion(const RequestGraph& rg, int n_clones) {
  validate_request_graph(rg);
  if (!rg.r_neq.empty()) throw Error(Err::BadParams, "all requests must be equality requests");
  if (n_clones < 1) throw Error(Err::BadParams, "need at least one clone");

  std::map<VertexId, BigInt> counts;
  for (VertexId r : rg.r_eq) counts[r] = n_clones;
  CloneExplosion res;
  RequestGraph blown = clone_eq_requests(rg, counts);
  res.graph = blown.graph;

  Core core = request_core(rg);
  enumerate_colorings(core.sub.graph, {}, [&](const Coloring& phi) {
    CloneExplosion::Row row;
    row.base = phi;
    for (VertexId r : rg.r_eq) {
      const auto& nb = rg.graph.rotation(r);
      if (phi.color[core.sub.from_parent[nb[0]]] == phi.color[core.sub.from_parent[nb[1]]])
        ++row.satisfied;
    }
    row.expected = pow2(static_cast<unsigned>(row.satisfied * n_clones));
    Coloring pre(res.graph.vertex_count());
    for (size_t i = 0; i < core.sub.to_parent.size(); ++i)
      pre.color[core.sub.to_parent[i]] = phi.color[static_cast<int>(i)];
    row.actual = count_colorings(res.graph, pre);
    if (row.actual != row.expected) res.all_match = false;
    res.rows.push_back(std::move(row));
    return true;
  });
  return res;
}

}  // namespace tfpc
