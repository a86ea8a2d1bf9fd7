#ifndef DYCKBIJ_BIJECTION_HPP
#define DYCKBIJ_BIJECTION_HPP

#include <stdexcept>

#include "dyckbij/dyckpath.hpp"
#include "dyckbij/permutation.hpp"

namespace dyckbij {

struct PathPair {
    DyckPath first;
    DyckPath second;
    friend bool operator==(const PathPair&, const PathPair&) = default;
    friend auto operator<=>(const PathPair&, const PathPair&) = default;
};

// Thrown by nu_inv when the pair is outside the image.
class NotAdmissibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Minima-profile path: code A = (n+1-m_1, ..., n+1-m_{k-1}),
// D = (p_2-1, ..., p_k-1). Irreducible components correspond to the
// right-connected components of sigma, in order.
DyckPath lambda_map(const Permutation& sigma);

// Maxima-profile path, built reading the maxima in increasing value order
// (right to left in sigma): code A* = (M_1, ..., M_{h-1}),
// D* = (n-P_2, ..., n-P_h). Components come out in reversed order relative
// to lambda's.
DyckPath mu_map(const Permutation& sigma);

PathPair nu(const Permutation& sigma);

// The unique 123-avoider whose minima (resp. maxima) profile decodes the
// path; remaining values fill the remaining positions in decreasing order.
Permutation lambda_inv_123(const DyckPath& path);
Permutation mu_inv_123(const DyckPath& path);

// True iff the pair lies in the image of nu, i.e. P >= L'(Q) and
// Q >= L'(P). Throws on semilength mismatch.
bool is_admissible(const PathPair& pair);

// Constructive inverse on admissible pairs: per matched irreducible
// component pair, merge the minima profile of lambda_inv(P_i) with the
// maxima profile of mu_inv(Q_{r+1-i}), remaining values decreasing. Throws
// NotAdmissibleError outside the image and std::logic_error if any runtime
// postcondition fails.
Permutation nu_inv(const PathPair& pair);

// Same merge run on the whole paths without component decomposition; kept
// for cross-checking the componentwise default.
Permutation nu_inv_global(const PathPair& pair);

// nu(sigma) = (L, R)  <=>  nu(sigma^rc) = (R, L), with L = R exactly for
// rc-invariant sigma.
bool rc_symmetry_holds(const Permutation& sigma);

// nu(sigma) = (L, R)  <=>  nu(sigma^-1) = (rev(L), rev(R)), with both paths
// vertically symmetric exactly for involutions.
bool inverse_symmetry_holds(const Permutation& sigma);

}  // namespace dyckbij

#endif
