#ifndef DYCKBIJ_PERMUTATION_HPP
#define DYCKBIJ_PERMUTATION_HPP

#include <string>
#include <string_view>
#include <vector>

namespace dyckbij {

// A permutation of {1,...,n} in one-line notation, 1-indexed.
// n = 0 (the empty permutation) is legal everywhere.
class Permutation {
public:
    Permutation() = default;
    // Validates that vals is a permutation of {1,...,n}; throws
    // std::invalid_argument otherwise.
    explicit Permutation(std::vector<int> vals);

    static Permutation identity(int n);
    // Parses whitespace-separated one-line notation, e.g. "5 3 4 8 2 1 6 7".
    // Rejects duplicates, gaps and zeros.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(vals_.size()); }
    // 1-indexed application: (*this)(i) = sigma(i).
    int operator()(int pos) const { return vals_[static_cast<size_t>(pos - 1)]; }
    const std::vector<int>& values() const { return vals_; }

    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> vals_;
};

// Values m_1 > ... > m_k and positions p_1 < ... < p_k of the LTR minima,
// paired positionally: m_i sits at p_i.
struct MinProfile {
    std::vector<int> values;     // strictly decreasing
    std::vector<int> positions;  // strictly increasing
    friend bool operator==(const MinProfile&, const MinProfile&) = default;
};

// Values M_1 < ... < M_h and positions P_1 > ... > P_h of the RTL maxima,
// paired positionally: M_i sits at P_i (so M_1 is the last entry).
struct MaxProfile {
    std::vector<int> values;     // strictly increasing
    std::vector<int> positions;  // strictly decreasing
    friend bool operator==(const MaxProfile&, const MaxProfile&) = default;
};

MinProfile ltr_minima(const Permutation& sigma);
MaxProfile rtl_maxima(const Permutation& sigma);

// sigma^rc(i) = n+1-sigma(n+1-i). An involution; sends the minima profile
// of sigma to the maxima profile of sigma^rc.
Permutation reverse_complement(const Permutation& sigma);
Permutation inverse(const Permutation& sigma);

// True iff some subsequence of sigma is order-isomorphic to pattern.
// Backtracking search, exponential in |pattern|; desk-scale oracle only.
bool contains_pattern(const Permutation& sigma, const Permutation& pattern);

// Longest increasing subsequence length (patience sorting, O(n log n)).
int lis_length(const Permutation& sigma);

bool avoids_123(const Permutation& sigma);
bool avoids_1234(const Permutation& sigma);

// Splits sigma at every suffix that is a permutation of {1,...,t}; each
// component is standardized (block offset subtracted) to a permutation in
// its own right. Concatenating the de-standardized components recovers
// sigma; every component is right-connected.
std::vector<Permutation> right_connected_components(const Permutation& sigma);

bool is_right_connected(const Permutation& sigma);

// The equivalence of shared minima and maxima profiles. Throws on length
// mismatch.
bool equivalent(const Permutation& a, const Permutation& b);

// The unique 1234-avoiding member of sigma's equivalence class: minima and
// maxima placed as in sigma, remaining values at the remaining positions in
// decreasing order.
Permutation canonical_representative(const Permutation& sigma);

// Intrinsic orders induced by the Dyck-path poset through the maps lambda
// and mu: subset conditions on the profiles plus an index-matching
// condition on the removed values/positions (strict at this layer; the
// path-code layer shifts descent indices by one, making it non-strict
// there). Throw on length mismatch.
bool leq_lambda(const Permutation& sigma, const Permutation& tau);
bool leq_mu(const Permutation& sigma, const Permutation& tau);

}  // namespace dyckbij

#endif
