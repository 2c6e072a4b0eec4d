#ifndef TFPC_COLORING_HPP
#define TFPC_COLORING_HPP

#include "tfpc/plane_graph.hpp"
#include "tfpc/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace tfpc {

/// Total or partial assignment vertex -> {1,2,3}; 0 means unassigned.
struct Coloring {
  std::vector<int> color;

  Coloring() = default;
  explicit Coloring(int n) : color(n, 0) {}
  int n() const { return static_cast<int>(color.size()); }
  bool total() const {
    for (int c : color)
      if (c == 0) return false;
    return true;
  }
};

bool proper(const PlaneGraph& g, const Coloring& phi);  // ignores unassigned vertices

struct EnumerateOptions {
  bool fix_first_color = false;  // symmetry reduction: first free vertex gets color 1
};

/// Streams every proper total extension of `pre` in lexicographic order
/// (vertex 0 most significant, colors ascending).  The sink returns false to
/// stop early.  Throws ImproperPrecoloring.
void enumerate_colorings(const PlaneGraph& g, const Coloring& pre,
                         const std::function<bool(const Coloring&)>& sink,
                         const EnumerateOptions& opts = {});

BigInt count_colorings(const PlaneGraph& g, const Coloring& pre = {},
                       const EnumerateOptions& opts = {});

struct ExtensionResult {
  BigInt count;
  std::optional<VertexId> witness;  // set when count <= 1 and G != C
};

/// Extensions of a proper precoloring of the outer cycle C (|C| <= 5).  When
/// at most one extension exists and the graph is larger than C, reports a
/// vertex outside C adjacent to two distinctly-colored cycle vertices; its
/// absence would contradict the two-extensions lemma and raises
/// LemmaViolation.
ExtensionResult extension_count_from_cycle(const PlaneGraph& g,
                                           const std::vector<VertexId>& cycle,
                                           const Coloring& psi);

struct BichromaticReport {
  int q = 0;       // bichromatic 4-faces
  int s_plus = 0;  // sum over faces of max(len-4, 0)
  int c12 = 0, c23 = 0, c13 = 0;
  Rational bound_exponent;  // (s_plus + 8 + q) / 6
};

BichromaticReport bichromatic_report(const PlaneGraph& g, const Coloring& phi);

struct ManycolorResult {
  BigInt count;
  int exponent_num = 0;  // s_plus + 8 + q
  bool count_ok = false; // count^6 >= 2^(s_plus+8+q)
  int c_max = 0;
  bool c_max_ok = false; // 6*c_max >= s_plus+8+q
  BichromaticReport report;
};

/// Checks the many-colorings lower bound for a connected triangle-free plane
/// graph with n >= 3 and a total proper coloring.  Exact integer comparisons.
ManycolorResult verify_manycolor_bound(const PlaneGraph& g, const Coloring& phi);

/// Connected components of the subgraph induced by colors {a,b}, ordered by
/// smallest contained vertex.
std::vector<std::vector<VertexId>> kempe_components(const PlaneGraph& g, const Coloring& phi,
                                                    int a, int b);

/// Swaps colors a,b on one component of G[V_ab]; involution.
Coloring kempe_swap(const PlaneGraph& g, const Coloring& phi, int a, int b, int component_index);

struct ContractResult {
  PlaneGraph graph;
  std::vector<int> image;  // old vertex -> new id; removed vertex -> -1
  VertexId merged = -1;    // image of the identified neighborhood
};

/// G - v with all neighbors of v identified.  Requires v on no 5-cycle and G
/// triangle-free; the result is checked triangle-free (ResultHasTriangle
/// would falsify the contraction lemma).
ContractResult contract_for_minc(const PlaneGraph& g, VertexId v);

}  // namespace tfpc

#endif
