#ifndef TFPC_REQUESTS_HPP
#define TFPC_REQUESTS_HPP

#include "tfpc/coloring.hpp"
#include "tfpc/plane_graph.hpp"
#include "tfpc/rational.hpp"

#include <map>

namespace tfpc {

/// Plane graph with disjoint independent degree-2 request sets and positive
/// rational weights.  Missing weight entries default to 1.
struct RequestGraph {
  PlaneGraph graph;
  std::vector<VertexId> r_eq;
  std::vector<VertexId> r_neq;
  std::map<VertexId, Rational> weights;

  Rational weight(VertexId r) const {
    auto it = weights.find(r);
    return it == weights.end() ? Rational(1) : it->second;
  }
  std::vector<VertexId> all_requests() const;
};

void validate_request_graph(const RequestGraph& rg, bool require_triangle_free = false);

struct SatisfactionResult {
  Coloring coloring;
  Rational satisfied_weight{0};
  Rational total_weight{0};
  Rational fraction{1};  // convention: no requests -> 1
};

/// Satisfied weight fraction of a total proper coloring.
SatisfactionResult satisfied_fraction(const RequestGraph& rg, const Coloring& phi);

/// Exact maximum over all proper 3-colorings, with a witness.
SatisfactionResult best_fraction(const RequestGraph& rg);

/// Replaces every inequality request r (neighbors a,b) by a path a-x-y-b with
/// x a new equality request of the same weight.  Best fraction is preserved.
RequestGraph gadget_neq_to_eq(const RequestGraph& rg);

/// Replaces every equality request r (neighbors t,b) by a 4-cycle t-l-b-m
/// plus an inequality request adjacent to l and m.  Best fraction preserved.
RequestGraph gadget_eq_to_neq(const RequestGraph& rg);

/// Scales weights to integers by the lcm of denominators, then splits each
/// equality request into that many unit-weight clones.
RequestGraph integerize_and_clone(const RequestGraph& rg);

/// Subdivides every edge of X with a new unit inequality request.
RequestGraph subdivide_for_tria(const PlaneGraph& g,
                                const std::vector<std::pair<VertexId, VertexId>>& x);

struct CloneExplosion {
  PlaneGraph graph;  // each equality request replaced by N clones
  struct Row {
    Coloring base;          // proper coloring of G - R
    int satisfied = 0;      // s(phi)
    BigInt expected;        // 2^(s(phi)*N)
    BigInt actual;          // extensions counted by enumeration
  };
  std::vector<Row> rows;
  bool all_match = true;
};

/// Builds the N-clone blowup and verifies the extension-count formula
/// 2^(s(phi)*N) for every base coloring.
CloneExplosion clone_explosion(const RequestGraph& rg, int n_clones);

}  // namespace tfpc

#endif
