#pragma once

#include "bolsuper/structures.hpp"

namespace bolsuper {

// [x,y,z] := [[x,y],z]. Throws if the input fails the Lie axioms, and
// re-checks the Lie-supertriple axioms on the result.
AlgebraDef lieToSupertriple(const AlgebraDef& lie);

// Keeps the binary product and installs
//   {x,y,z} = 1/3 (2[[x,y],z] - (-1)^{x(y+z)}[[y,z],x] - (-1)^{z(x+y)}[[z,x],y]).
// Throws if the input fails the Malcev axioms, and re-checks the Bol axioms
// on the result. The 1/3 needs characteristic 0, which Scalar guarantees.
AlgebraDef malcevToBol(const AlgebraDef& malcev);

}  // namespace bolsuper
