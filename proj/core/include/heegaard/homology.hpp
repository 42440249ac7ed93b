#pragma once

#include <span>
#include <string>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/graph.hpp"
#include "heegaard/integer_matrix.hpp"

namespace heegaard {

/// H_1(M) = < A_1..A_g | R_1..R_g >. Rows index generators, columns relators.
struct HomologyPresentation {
  int generators = 0;
  IntMatrix relators;
  Int determinant = 1;
  std::vector<Int> invariant_factors;
  bool is_zhs = true;
};

/// Entry (i, j): signed passes of the colour-j curve through handle i; an
/// edge whose head lies on V_i^+ enters handle i positively.
IntMatrix relator_matrix(const HeegaardGraph& graph);

/// l_i: signed passages of the whole link through handle i.
std::vector<Int> link_class(const HeegaardGraph& graph, const LinkDiagram& diagram);

bool certify_homology_sphere(const IntMatrix& relators);

/// Integral x with R x = l. Unique when R is unimodular; otherwise the
/// solution of least L1 norm, ties broken lexicographically.
/// Throws NoIntegralSolution when l is outside the column lattice of R.
std::vector<Int> solve_extension_coefficients(const IntMatrix& relators, std::span<const Int> link);

HomologyPresentation homology_presentation(const HeegaardGraph& graph);

/// "⟨A1, A2 | -A1+2A2, -2A1+3A2⟩"
std::string presentation_text(const HomologyPresentation& presentation);
std::string relator_text(const IntMatrix& relators, std::size_t column);

}  // namespace heegaard
