#ifndef TFPC_CLEBSCH_HPP
#define TFPC_CLEBSCH_HPP

#include "tfpc/plane_graph.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace tfpc {

/// The 16-vertex Clebsch graph over GF(16) = GF(2)[x]/(x^4+x+1): u ~ v iff
/// u xor v is a nonzero cube.  Triangle-free, 5-regular, srg(16,5,0,2).
class ClebschGraph {
public:
  ClebschGraph();
  static constexpr int kOrder = 16;
  bool adjacent(int u, int v) const { return u != v && ((adj_[u] >> v) & 1u); }
  int degree(int v) const;
  const std::array<uint16_t, 16>& adjacency_masks() const { return adj_; }
  const std::vector<int>& cubes() const { return cubes_; }
  static int gf16_mul(int a, int b);

private:
  std::array<uint16_t, 16> adj_{};
  std::vector<int> cubes_;
};

using Homomorphism = std::vector<int>;  // vertex of G -> Clebsch vertex

/// Backtracking homomorphism search (most-constrained vertex first,
/// lexicographic value order).  A miss on a triangle-free planar input would
/// falsify the homomorphism theorem and raises StatementViolation.
std::optional<Homomorphism> find_homomorphism(const PlaneGraph& g, bool flag_miss = true);

/// 16-coloring from the homomorphism; proper, and endpoints of every path of
/// length 3 get distinct colors (both re-verified directly).
std::vector<int> dist3_coloring(const PlaneGraph& g);

/// Independent verifier for the distance-3 property.
bool check_dist3(const PlaneGraph& g, const std::vector<int>& colors);

}  // namespace tfpc

#endif
