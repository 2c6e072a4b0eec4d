#ifndef TFPC_LISTCOLOR_HPP
#define TFPC_LISTCOLOR_HPP

#include "tfpc/coloring.hpp"
#include "tfpc/plane_graph.hpp"

#include <optional>
#include <string>

namespace tfpc {

/// Per-vertex color lists drawn from {1,2,3}.
struct ListAssignment {
  std::vector<std::vector<int>> lists;

  int size(VertexId v) const { return static_cast<int>(lists[v].size()); }
  bool has(VertexId v, int c) const;
};

void validate_lists(const PlaneGraph& g, const ListAssignment& l);

/// Deterministic backtracking list-coloring solver (vertex order 0..n-1).
std::optional<Coloring> solve_list_coloring(const PlaneGraph& g, const ListAssignment& l);

/// Auxiliary plane supergraph giving a cyclic order over the endpoints of P
/// and of the matching X even when the outer boundary is not a cycle.  For
/// |Z| = 2 the "cycle" degenerates to a single edge.
struct Casing {
  PlaneGraph host;
  std::vector<VertexId> g_to_host;   // vertex of G -> host id
  std::vector<VertexId> k_cycle;     // host ids of K in clockwise order
  std::vector<VertexId> z_order;     // vertices of G matched to K, in K order
};

Casing build_casing(const PlaneGraph& g, const std::vector<VertexId>& p,
                    const std::vector<std::pair<VertexId, VertexId>>& x);

/// Position of a vertex in the casing order starting at the first vertex of P.
int casing_rank(const Casing& c, const std::vector<VertexId>& p, VertexId v);

/// True when a path p-u-v-x-y with |L(u)|=2 and |L(v)|=3 reaches the edge xy.
bool blocks(const PlaneGraph& g, const ListAssignment& l, std::pair<VertexId, VertexId> xy,
            VertexId p);

/// The degree-2 vertex of a 3-vertex path; paths with fewer vertices have no
/// middle vertex.
std::optional<VertexId> middle_vertex(const std::vector<VertexId>& p);

enum class Stmt { Thm3Choos, ThmDvoKaw, LemSame, LemDvoKawStrong, ThmCycEx };

struct ConditionReport {
  std::string name;
  bool holds = true;
  std::string witness;
};

struct HypothesisReport {
  bool hypotheses_hold = true;
  std::vector<ConditionReport> conditions;
  bool exception_case = false;   // ThmCycEx only
  bool conclusion_checked = false;
  bool colorable = false;
};

/// Checks the hypothesis system of the chosen statement; when all conditions
/// hold, cross-checks the conclusion with the solver and raises
/// StatementViolation if the solver fails (these are published theorems).
HypothesisReport check_hypotheses(Stmt stmt, const PlaneGraph& g,
                                  const std::vector<VertexId>& p, const ListAssignment& l,
                                  const Casing* casing = nullptr);

}  // namespace tfpc

#endif
