#ifndef TFPC_COGS_HPP
#define TFPC_COGS_HPP

#include "tfpc/coloring.hpp"
#include "tfpc/plane_graph.hpp"
#include "tfpc/rational.hpp"
#include "tfpc/requests.hpp"

#include <array>
#include <map>
#include <optional>

namespace tfpc {

/// (G, P, S, T, w): S independent, T weighted demands, with P on the outer
/// boundary and S, T on the outer face for plane cogs.  A cog coloring gives
/// S colors from {1,2}; a demand is satisfied when it avoids color 3.
struct Cog {
  PlaneGraph graph;
  std::vector<VertexId> path;  // possibly empty
  std::vector<VertexId> s;
  std::vector<VertexId> t;
  std::map<VertexId, Rational> weights;

  Rational weight(VertexId v) const {
    auto it = weights.find(v);
    return it == weights.end() ? Rational(1) : it->second;
  }
};

struct CogValidation {
  bool sets_disjoint = true;
  bool s_independent = true;
  bool plane_roles = true;  // P on outer boundary, S and T on the outer face
  bool ok() const { return sets_disjoint && s_independent && plane_roles; }
};

CogValidation validate_cog(const Cog& c);

/// T independent and no T-S-T path.
bool is_polished(const Cog& c);

struct ObstructionMatch {
  char kind = 'a';  // 'a'..'d', the four excluded subcogs
  std::vector<VertexId> vertices;
};

/// All embeddings of the four excluded patterns as subcogs.
std::vector<ObstructionMatch> detect_obstructions(const Cog& c);

/// Induced 2-edge paths through the interior with one end in S or T.
std::vector<std::array<VertexId, 3>> weak_2chords(const Cog& c);

/// Splits the cog along an induced path Q whose ends lie on the outer face;
/// C1 keeps P, C2 gets Q as its precolored path.
std::pair<Cog, Cog> q_components(const Cog& c, const std::vector<VertexId>& q);

struct DemandResult {
  Rational fraction{0};
  Coloring witness;
  Rational satisfied_weight{0};
  Rational total_weight{0};
};

/// Exact maximum satisfied-demand fraction over cog colorings extending psi.
DemandResult best_demand_fraction(const Cog& c, const Coloring& psi);

struct AlphaReport {
  bool alpha1_applicable = false;  // polished, girth >= 5, obstruction-free, |V(P)| <= 3
  bool alpha1_ok = true;
  bool alpha0_applicable = false;  // girth >= 4, |V(P)| <= 2, P-neighbor condition
  bool alpha0_ok = true;
  Rational fraction{0};
  std::string detail;
};

/// Checks the demand-fraction lower bounds alpha1 = 1/562 and
/// alpha0 = 1/5058 when the respective hypotheses hold.  A fraction below an
/// applicable bound raises StatementViolation.
AlphaReport verify_alpha_lemmas(const Cog& c, const Coloring& psi);

extern const Rational kAlpha1;  // 1/562
extern const Rational kAlpha0;  // 1/5058

/// All inequality requests share the neighbor v: color v with 3, solve the
/// induced cog on G - (R u {v}) exhaustively, and color the requests
/// greedily.  The result satisfies at least an alpha0 fraction.
SatisfactionResult requests_at_vertex_pipeline(const RequestGraph& rg, VertexId v);

}  // namespace tfpc

#endif
