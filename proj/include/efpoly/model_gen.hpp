#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "efpoly/affine_map.hpp"
#include "efpoly/hpoly.hpp"
#include "efpoly/lp.hpp"

namespace efpoly {

using Edge = std::pair<unsigned, unsigned>;

/// Edges {i, j} of K_n with i < j, lexicographic, cities numbered from 1.
std::vector<Edge> complete_graph_edges(unsigned n);

/// One directed Hamiltonian cycle on cities 1..n, as its arc set.
struct TourVector {
  unsigned n = 0;
  std::vector<Edge> arcs;  // (from, to)

  /// Throws PreconditionViolation unless every city has one arc in and one
  /// arc out and the arcs form a single cycle.
  void validate() const;
  /// Cities in visiting order starting from city 1 (1 itself excluded).
  std::vector<unsigned> visit_order() const;

  /// Same n and the same arc set, in any order.
  friend bool operator==(const TourVector& a, const TourVector& b);
};

/// w[i-2][t-1] = 1 iff city i (2..n) is visited at time t (1..n-1).
struct AssignmentVector {
  unsigned n = 0;
  std::vector<std::vector<int>> w;

  void validate() const;

  friend bool operator==(const AssignmentVector&, const AssignmentVector&) = default;
};

/// Variables x[i,j], i != j, lexicographic.
VarSpace tsp_arc_space(unsigned n);
/// Variables w[i,t], i = 2..n, t = 1..n-1, row-major.
VarSpace assignment_space(unsigned n);

RatVector to_vector(const TourVector& t);
TourVector tour_from_vector(unsigned n, const RatVector& x);
RatVector to_vector(const AssignmentVector& a);
AssignmentVector assignment_from_vector(unsigned n, const RatVector& w);

AssignmentVector tour_to_assignment(const TourVector& t);
TourVector assignment_to_tour(const AssignmentVector& a);

/// Conv of all directed tours with city 1 as start; (n-1)! vertices. 3 <= n <= 6.
VPoly gen_standard_tsp(unsigned n);

/// Assignment polytope on (n-1)^2 variables: row sums 1, column sums 1, w >= 0.
HPoly gen_alternate_tsp(unsigned n);

struct EdmondsModel {
  HPoly poly;
  LinProgram lp;
};

/**
 * Subtour-elimination description of the spanning tree polytope of K_n:
 * sum of x = n-1, one rank row per vertex subset S with 2 <= |S| <= n-1
 * (by size, then lexicographic), x >= 0. Costs default to all ones.
 * 3 <= n <= 5.
 */
EdmondsModel gen_mst_edmonds(unsigned n, std::optional<RatVector> costs = std::nullopt);

/// Directed-flow description over classes x (edges) and z[k,i,j]. 3 <= n <= 5.
HPoly gen_mst_martin(unsigned n);

/// Smallest city not incident to edge e; the root used by the reduced model.
unsigned martin_root(unsigned n, const Edge& e);

/**
 * The flow description with x_e replaced by z[r,i,j] + z[r,j,i], r the root
 * of e, so only class z remains. Linking rows with k = r collapse to 0 = 0
 * and are left out. 3 <= n <= 5.
 */
HPoly gen_mst_martin_reduced(unsigned n);

/// x_e = z[r_e,i,j] + z[r_e,j,i] as a map from the z space to the x space.
AffineMapSpec martin_substitution(unsigned n);

}  // namespace efpoly
