#pragma once

// Line-oriented algebra files.
//
//   name L2(3,1)
//   even e1 e2 e3
//   odd e4
//   binary [e1,e3] = e1
//   binary [e2,e3] = e1 + e2
//   ternary [e2,e3,e3] = 2*e1 + e2
//
// `#` starts a comment. `even` and `odd` lines may repeat; the basis is
// ordered as declared. Coefficients are exact rationals p/q with an
// optional sign; the `*` before a label is optional. Listed products are
// completed by super skew-symmetry ([y,x] from [x,y], [y,x,z] from
// [x,y,z]); every other product is zero. A listing that contradicts an
// earlier one, directly or through skew-symmetry, is an error.
//
// Which structures an algebra carries is inferred: binary if any binary
// line is present, ternary if any ternary line is present, both if neither
// is. An optional `structure binary ternary` line states it explicitly.

#include <string>
#include <string_view>

#include "bolsuper/structures.hpp"

namespace bolsuper {

// Throws ParseError with the 1-based line and column of the offending token.
AlgebraDef parseAlgebra(std::string_view text);
AlgebraDef loadAlgebraFile(const std::string& path);

// Canonical text: products not implied by skew-symmetry, lexicographic by
// basis index. Throws Precondition if a table is not skew-consistent.
std::string serializeAlgebra(const AlgebraDef& a);

// "2*e1 - 1/3*e4", or "0".
std::string formatVector(const SuperSpace& space, const Vector& v);

}  // namespace bolsuper
