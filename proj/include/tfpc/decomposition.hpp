#ifndef TFPC_DECOMPOSITION_HPP
#define TFPC_DECOMPOSITION_HPP

#include "tfpc/coloring.hpp"
#include "tfpc/plane_graph.hpp"

#include <optional>

namespace tfpc {

/// Laminar family of separating 5-cycle regions, rooted at the whole plane.
struct FiveCycleDecomposition {
  struct Node {
    int id = 0;
    int parent = -1;                    // -1 for the root
    std::vector<int> children;
    std::optional<CycleRef> cycle;      // nullopt for the root
    std::vector<int> region_faces;      // faces of G strictly inside (empty for root)
  };
  PlaneGraph graph;
  std::vector<Node> nodes;  // nodes[0] is the root

  int node_count() const { return static_cast<int>(nodes.size()); }
};

/// Greedy innermost-first maximal laminar family of separating 5-cycles.
FiveCycleDecomposition build_decomposition(const PlaneGraph& g);

/// Vertices on the boundary cycle of some non-root region.
std::vector<VertexId> caught_vertices(const FiveCycleDecomposition& d);

enum class Richness { Rich, Poor };

struct NodePiece {
  int node = 0;
  PlaneGraph piece;
  std::vector<VertexId> to_parent;          // piece id -> id in G
  std::vector<VertexId> outer_cycle;        // outer cycle of the piece, piece ids (empty: root)
  Richness richness = Richness::Rich;
  std::optional<VertexId> poor_extra;       // the single non-cycle vertex of a poor piece
};

/// Extracts G_v and classifies it rich/poor by exhaustive precoloring
/// extension.  Poor pieces are shape-checked; a violation raises
/// PoorShapeViolation (it would falsify the poor-piece lemma).
NodePiece classify_node(const FiveCycleDecomposition& d, int node);

struct Suburb {
  std::vector<int> nodes;  // ancestor first, consecutive parent-child, all poor
  bool upwardly_mobile = false;
};

/// Maximal collection of pairwise disjoint k-suburbs, greedily from the
/// deepest poor nodes.
std::vector<Suburb> find_suburbs(const FiveCycleDecomposition& d, int k);

struct SuburbPiece {
  PlaneGraph graph;                 // G_P
  std::vector<VertexId> to_parent;
  std::vector<VertexId> outer_cycle;  // piece ids
  std::vector<VertexId> inner_cycle;  // piece ids
};

SuburbPiece build_suburb_piece(const FiveCycleDecomposition& d, const std::vector<int>& chain);

/// Every proper precoloring of the outer face of G_P extends in >= 2 ways.
bool is_upwardly_mobile(const FiveCycleDecomposition& d, const std::vector<int>& chain);

struct RearrangeablePair {
  VertexId x = -1, y = -1;
  int shared_face = -1;
  enum class Kind { I, II, III } kind = Kind::I;
  std::vector<VertexId> aux;  // kind I: {z,u}; II: {z,z',x',y',u}; III: {z,z1,z2,x',y',x'',y'',u}
};

/// Locates one of the three recolorable configurations in an 11-suburb piece
/// that is not upwardly mobile.  NoConfiguration would falsify the
/// rearrangement lemma.
RearrangeablePair find_rearrangeable_pair(const PlaneGraph& gp,
                                          const std::vector<VertexId>& outer_cycle,
                                          const std::vector<VertexId>& inner_cycle);

/// Recolors so that the shared 4-face becomes bichromatic while the outer and
/// inner boundary cycles keep their colors.  Requires phi(x) == phi(y).
Coloring rearrange(const PlaneGraph& gp, const Coloring& phi, const RearrangeablePair& pair);

struct DecompositionReport {
  bool laminar_ok = true;
  bool maximal_ok = true;
  bool catching_ok = true;   // every vertex on a 5-cycle is on a 5-face or caught
  bool poor_shape_ok = true;
  bool poor_child_ok = true; // poor nodes have at most one child
  bool caught_bound_ok = true;
  std::string detail;
};

DecompositionReport check_decomposition(const FiveCycleDecomposition& d);

/// Builds the chain graph of an 11-suburb (or any length) directly from the
/// sequence of changed positions d_1..d_k, as drawn inside a host 5-cycle.
/// Returns the suburb piece (outer cycle = initial 5-cycle).
SuburbPiece suburb_piece_from_sequence(const std::vector<int>& positions);

}  // namespace tfpc

#endif
