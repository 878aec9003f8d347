#pragma once

#include "coneindex/linalg.hpp"
#include "coneindex/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace coneindex {

struct ConeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Extreme rays and lineality basis of {x : <a,x> >= 0 for all a in inequalities}.
// Rays are primitive and lex-sorted; the lineality basis is in echelon form.
struct DoubleDescription {
  std::vector<RationalVector> rays;
  std::vector<RationalVector> lineality;
};

DoubleDescription double_description(Index dim, const std::vector<RationalVector>& inequalities);

// Closed convex polyhedral cone carrying both representations.
//
// Invariants (established at construction, cross-validated):
//   * generators are the primitive extreme rays, lex-sorted (pointed case);
//     for non-pointed cones they include +-pairs spanning the lineality space;
//   * inequalities are the primitive extreme rays of the dual cone, lex-sorted;
//   * every generator satisfies every inequality.
struct Cone {
  Index ambient_dim = 0;
  std::vector<RationalVector> generators;
  std::vector<RationalVector> inequalities;
  bool pointed = false;
  bool solid = false;

  static Cone from_generators(Index dim, std::vector<RationalVector> gens);
  static Cone from_inequalities(Index dim, std::vector<RationalVector> ineqs);

  bool contains(const RationalVector& x) const;

  RationalMatrix generator_matrix() const { return columns(ambient_dim, generators); }

  bool same_set_as(const Cone& other) const;
};

// Swaps the two representations: generators of C are the inequalities of C*
// and vice versa.
Cone dual_cone(const Cone& c);

// A face, keyed by the set of generators of the cone it contains.
struct Face {
  std::vector<int> generator_indices;  // sorted
  RationalMatrix span_basis;           // ambient_dim x dim
  Index dim = 0;
  RationalVector relint_point;         // sum of the face's extreme generators
};

struct FaceLattice {
  std::vector<Face> faces;  // sorted by (dim, generator set)
  std::vector<std::pair<int, int>> containment;  // (child, parent), strict
  std::vector<Index> dims_present;

  int index_of(const std::vector<int>& generator_indices) const;  // -1 if absent
  const Face& origin() const { return faces.front(); }
  const Face& top() const { return faces.back(); }
  std::vector<int> faces_of_dim(Index d) const;
  bool contains_face(int child, int parent) const;
};

// All faces of a pointed cone. Throws ConeError for non-pointed input.
FaceLattice face_lattice(const Cone& c);

// The face F_perp /\ C* of the dual cone, as a Face indexed against the
// generators of dual_cone(c). Throws if f is not a face of c.
Face dual_face(const Face& f, const Cone& c);

// True iff C /\ y_perp = F for y the relative interior point of the dual face
// (y = 0 for F = C, making the whole cone exposed by convention).
bool is_exposed(const Face& f, const Cone& c);

// Euclidean projection onto the cone, exact over the rationals. The result p
// satisfies the Moreau conditions: p in C, x - p in the polar cone, <p, x-p> = 0.
RationalVector project_onto_cone(const RationalVector& x, const Cone& c);
RationalVector project_onto_cone(const RationalVector& x, const Cone& c, const FaceLattice& lattice);

}  // namespace coneindex
