#ifndef DYCKBIJ_INVOLUTION_HPP
#define DYCKBIJ_INVOLUTION_HPP

#include "dyckbij/dyckpath.hpp"

namespace dyckbij {

// The vertical-flip variant of the Lalanne-Kreweras involution. Production
// route is the ascent-descent-code formula applied per irreducible
// component; flipping reverses the component order, so component i of the
// result has the semilength of component r+1-i of the input.
DyckPath lprime(const DyckPath& path);

// The Lalanne-Kreweras involution itself, derived from lprime through
// L(X) = inner path of lprime(U . reverse(X) . D).
DyckPath kreweras(const DyckPath& path);

// Test oracles built from the geometric description: flip below the axis,
// draw northeast rays from double-ascent midpoints and northwest rays from
// double-descent midpoints (both left to right), and read the i-th
// intersection as the i-th valley of the image.
DyckPath kreweras_geometric(const DyckPath& path);
DyckPath lprime_geometric(const DyckPath& path);

}  // namespace dyckbij

#endif
