#include "tfpc/clebsch.hpp"

#include <algorithm>
#include <set>

namespace tfpc {

int ClebschGraph::gf16_mul(int a, int b) {
  int r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    if (a & 0x10) a ^= 0x13;  // x^4 + x + 1
    b >>= 1;
  }
  return r;
}

ClebschGraph::ClebschGraph() {
  std::set<int> cube_set;
  for (int t = 1; t < 16; ++t) cube_set.insert(gf16_mul(gf16_mul(t, t), t));
  cubes_.assign(cube_set.begin(), cube_set.end());
  for (int u = 0; u < 16; ++u)
    for (int v = 0; v < 16; ++v)
      if (u != v && cube_set.count(u ^ v)) adj_[u] |= static_cast<uint16_t>(1u << v);
}

int ClebschGraph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < 16; ++w)
    if ((adj_[v] >> w) & 1u) ++d;
  return d;
}

std::optional<Homomorphism> find_homomorphism(const PlaneGraph& g, bool flag_miss) {
  if (g.has_triangle())
    throw Error(Err::HypothesisViolation, "need a triangle-free graph");
  static const ClebschGraph clebsch;

  const int n = g.vertex_count();
  Homomorphism img(n, -1);
  std::vector<uint16_t> domain(n, 0xFFFF);

  auto pick = [&]() {
    int best = -1, best_count = 17;
    for (int v = 0; v < n; ++v) {
      if (img[v] >= 0) continue;
      int cnt = __builtin_popcount(domain[v]);
      if (cnt < best_count) {
        best_count = cnt;
        best = v;
      }
    }
    return best;
  };

  auto rec = [&](auto&& self) -> bool {
    int v = pick();
    if (v < 0) return true;
    uint16_t dom = domain[v];
    for (int c = 0; c < 16; ++c) {
      if (!((dom >> c) & 1u)) continue;
      img[v] = c;
      std::vector<std::pair<int, uint16_t>> saved;
      bool dead = false;
      for (VertexId w : g.rotation(v)) {
        if (img[w] >= 0) continue;
        saved.emplace_back(w, domain[w]);
        domain[w] &= clebsch.adjacency_masks()[c];
        if (domain[w] == 0) dead = true;
      }
      if (!dead && self(self)) return true;
      for (auto& [w, d] : saved) domain[w] = d;
      img[v] = -1;
    }
    return false;
  };

  if (n == 0) return img;
  if (rec(rec)) return img;
  if (flag_miss)
    throw Error(Err::StatementViolation,
                "no Clebsch homomorphism for a triangle-free planar graph");
  return std::nullopt;
}

std::vector<int> dist3_coloring(const PlaneGraph& g) {
  auto hom = find_homomorphism(g);
  std::vector<int> colors = *hom;

  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId w : g.rotation(v))
      if (colors[v] == colors[w])
        throw Error(Err::StatementViolation, "homomorphism image is not proper");
  if (!check_dist3(g, colors))
    throw Error(Err::StatementViolation, "distance-3 property failed");
  return colors;
}

bool check_dist3(const PlaneGraph& g, const std::vector<int>& colors) {
  for (VertexId a = 0; a < g.vertex_count(); ++a)
    for (VertexId b : g.rotation(a))
      for (VertexId c : g.rotation(b)) {
        if (c == a) continue;
        for (VertexId d : g.rotation(c)) {
          if (d == b || d == a) continue;
          if (colors[a] == colors[d]) return false;
        }
      }
  return true;
}

}  // namespace tfpc
