#pragma once

// Post-hoc analyses of a root configuration: cyclic products and the
// arithmeticity criterion, minimality, and doubling across walls whose
// dihedral angles are all even submultiples of pi.

#include <string>
#include <vector>

#include "vinberg/coxeter.hpp"

namespace vinberg {

/// Product a_{i1 i2} a_{i2 i3} ... a_{im i1} of entries a_ij = 2(e_i,e_j)/sqrt(s_i s_j)
/// along a closed walk. Every vertex occurs twice, so the value lies in k.
FieldElement cyclic_product(const std::vector<Root>& cycle, const GramForm& f);

struct ArithmeticityReport {
  bool is_arithmetic = false;
  /// Field generated by the cyclic products.
  std::string field;
  /// Vertex indices of a cycle whose product is not an algebraic integer.
  std::vector<size_t> failing_cycle;
  bool integral = false;
  /// Nonnegative definiteness under every embedding that moves the field.
  bool conjugate_check = false;
  size_t cycles_examined = 0;
  /// False when cycle_cap or max_cycles stopped the cycle enumeration.
  bool exhaustive = false;
  std::string detail;
};

/// Vinberg's criterion on the roots of a polyhedron.
ArithmeticityReport arithmeticity_check(const std::vector<Root>& roots, const GramForm& f, size_t cycle_cap = 12,
                                        size_t max_cycles = 200000);

/// The same criterion for a diagram known only by its labels; the entries
/// -2cos(pi/m) live in a cyclotomic field.
ArithmeticityReport arithmeticity_check(const LabelDiagram& d, size_t cycle_cap = 12, size_t max_cycles = 200000);

struct MinimalityReport {
  /// max over i != j of a_ij^2, exact.
  FieldElement max_square;
  /// Its square root under the identity embedding.
  long double max_entry = 0;
};

MinimalityReport minimality(const std::vector<Root>& roots, const GramForm& f);

/// Walls i whose every edge is orthogonal, of even weight, thick or dashed.
std::vector<size_t> doubling_walls(const CoxeterDiagram& d);
std::vector<size_t> doubling_walls(const LabelDiagram& d);

/// The polyhedron glued to its mirror image across a doubling wall: the
/// other roots together with their reflections, without repeats.
std::vector<Root> double_polyhedron(const std::vector<Root>& roots, size_t wall, const GramForm& f);

}  // namespace vinberg
