#pragma once

// Independent re-derivations used to cross-check the library. Nothing here
// calls into the code under test except for plain data access.

#include <string>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/graph.hpp"
#include "heegaard/plat.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<long long>>;

// Laplace expansion along the first row. Fine up to ~9x9.
long long cofactor_determinant(const Matrix& m);

// Relator matrix [handle][colour] counted from edge tails: a tail on V_i^-
// means the curve just came through handle i in the positive direction.
Matrix relators_from_tails(const heegaard::HeegaardGraph& graph);

// Link class counted from strand starts: a start on V_i^- follows a
// positive passage through handle i.
std::vector<long long> link_class_from_starts(const heegaard::HeegaardGraph& graph,
                                              const heegaard::LinkDiagram& diagram);

// Textbook Seifert algorithm on a diagram made only of closed circles:
// smooth every crossing along the Gauss code and count cycles.
struct ClassicalSeifert {
  int circles = 0;
  int bands = 0;
  int components = 0;  // link components
  int chi = 0;
  int genus = 0;
};
ClassicalSeifert classical_seifert(const heegaard::LinkDiagram& diagram);

// Framings on the diagonal, linking numbers off it. Components are found by
// walking arcs and bridges, numbered by their first-listed arc.
Matrix plat_linking_matrix(const heegaard::FlatPlat& plat);

// |det| of the colouring matrix minor of a one-component plat (the knot
// determinant, |Alexander(-1)|).
long long plat_knot_determinant(const heegaard::FlatPlat& plat);

}  // namespace oracle
