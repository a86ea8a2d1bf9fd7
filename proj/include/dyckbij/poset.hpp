#ifndef DYCKBIJ_POSET_HPP
#define DYCKBIJ_POSET_HPP

#include <string>
#include <vector>

#include "dyckbij/dyckpath.hpp"

namespace dyckbij {

// The order on Dyck paths of equal semilength, generated by the covering
// move that deletes one ascent entry A_i and one descent entry D_j with
// j >= i from the code. The move is well defined on arbitrary codes, which
// is what makes the order match the intrinsic profile orders on
// permutations; closing a ground-level valley merges two irreducible
// components, so comparable paths need not share a component structure.

// True iff q arises from p by one deletion move. Restricted to irreducible
// operands; throws std::invalid_argument on reducible input or semilength
// mismatch.
bool covers(const DyckPath& q, const DyckPath& p);

// Direct comparison: A(q) and D(q) must be subsets of A(p) and D(p) with
// the t-th removed ascent index <= the t-th removed descent index. Shipped
// because the BFS closure below proves it exhaustively equivalent at desk
// scale. Throws on semilength mismatch.
bool leq(const DyckPath& p, const DyckPath& q);

// Literal transitive closure: BFS over single deletion moves.
bool leq_oracle(const DyckPath& p, const DyckPath& q);

// All single-deletion successors of p.
std::vector<DyckPath> upper_covers(const DyckPath& p);

// Hasse diagram (transitive reduction of leq) of the full semilength class,
// in DOT format. Nodes are labelled by step strings.
std::string hasse_dot(const std::vector<DyckPath>& paths);

}  // namespace dyckbij

#endif
