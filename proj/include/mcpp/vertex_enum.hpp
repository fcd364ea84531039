#pragma once

#include "mcpp/linear_system.hpp"

namespace mcpp {

inline constexpr int kDefaultCoordinateGuard = 24;

// Exhaustive vertex enumeration for a bounded system: eliminates the
// equalities, then enumerates maximal tight inequality subsystems of full
// column rank in the reduced space. Intended for desk-scale instances; the
// coordinate guard refuses anything larger.
//
// Every returned point satisfies dim-many linearly independent rows with
// equality, is feasible, and the list is de-duplicated and canonically
// ordered.
PointSet enumerate_vertices(const LinearSystem& sys, int coordinate_guard = kDefaultCoordinateGuard);

}  // namespace mcpp
