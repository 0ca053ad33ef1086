#pragma once

// The order complex K(X) of a finite space: its simplices are the nonempty
// chains. Euler characteristic and integral simplicial homology.

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "finito/poset.hpp"
#include "finito/smith.hpp"

namespace finito {

using Face = std::vector<Element>;  // sorted vertex indices

struct SimplicialComplex {
  std::size_t vertex_count = 0;
  // Sorted by dimension, then lexicographically. Closed under nonempty subsets.
  std::vector<Face> faces;

  // -1 for a complex without faces (never produced by order_complex).
  int dimension() const;
};

struct HomologySummary {
  std::vector<std::size_t> betti;                // b_0 .. b_dim
  std::vector<std::vector<Integer>> torsion;     // invariant factors > 1 per degree

  long long euler() const;
};

SimplicialComplex order_complex(const FinitePoset& p);

// Sum over nonempty chains C of (-1)^(#C + 1).
long long euler_char(const FinitePoset& p);

std::vector<std::size_t> f_vector(const SimplicialComplex& k);
long long euler_char(const SimplicialComplex& k);

HomologySummary homology(const SimplicialComplex& k);

// Integer boundary matrix from dimension d to d-1 (rows: (d-1)-faces,
// columns: d-faces), faces in the complex's order.
IntMatrix boundary_matrix(const SimplicialComplex& k, std::size_t d);

// One face per line, vertex indices separated by spaces.
void write_faces(std::ostream& out, const SimplicialComplex& k);

}  // namespace finito
