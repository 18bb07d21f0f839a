#pragma once

#include <random>

#include "ainfp/complex.hpp"
#include "ainfp/dg_algebra.hpp"

namespace ainfp {

// Exterior algebra on x,y,z (degree 1 each) with dz = xy; the standard
// non-formal 8-dimensional dg algebra. All Adams values 0.
FilteredDgAlgebra heisenberg_algebra(const Field& F);

// Its cohomology ring with zero differential (the formal comparison fixture,
// 6-dimensional: 1, x, y, a=[xz], b=[yz], t=[xyz]).
FilteredDgAlgebra formal_heisenberg(const Field& F);

// unit square point cloud {(0,0),(1,0),(1,1),(0,1)}
std::vector<std::vector<double>> square_points();

// minimal 7-vertex triangulation of the torus; all simplices at value 0
FilteredSimplicialComplex torus7();

// wedge of two circles and a sphere at a common vertex; same Betti numbers
// (1,2,1) as the torus, trivial products on H^1; all simplices at value 0
FilteredSimplicialComplex wedge_fixture();

// hexagon circle: 6 vertices at 0, boundary edges at 1
FilteredSimplicialComplex hexagon();

// seeded random filtered complex (<= max_vertices vertices, dim <= max_dim,
// small pool of appearance values with ties)
FilteredSimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices = 8,
                                         int max_dim = 3);

}  // namespace ainfp
