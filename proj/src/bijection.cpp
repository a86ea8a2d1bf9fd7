#include "dyckbij/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include "dyckbij/involution.hpp"
#include "dyckbij/poset.hpp"

namespace dyckbij {

DyckPath lambda_map(const Permutation& sigma) {
    const int n = sigma.size();
    const MinProfile prof = ltr_minima(sigma);
    AscentDescentCode code;
    code.n = n;
    for (size_t i = 0; i + 1 < prof.values.size(); ++i) {
        code.ascents.push_back(n + 1 - prof.values[i]);
        code.descents.push_back(prof.positions[i + 1] - 1);
    }
    return from_code(code);
}

DyckPath mu_map(const Permutation& sigma) {
    const int n = sigma.size();
    const MaxProfile prof = rtl_maxima(sigma);
    AscentDescentCode code;
    code.n = n;
    for (size_t i = 0; i + 1 < prof.values.size(); ++i) {
        code.ascents.push_back(prof.values[i]);
        code.descents.push_back(n - prof.positions[i + 1]);
    }
    return from_code(code);
}

PathPair nu(const Permutation& sigma) { return {lambda_map(sigma), mu_map(sigma)}; }

namespace {

Permutation fill_decreasing(int n, const std::vector<int>& values,
                            const std::vector<int>& positions) {
    std::vector<int> out(static_cast<size_t>(n), 0);
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    for (size_t i = 0; i < values.size(); ++i) {
        out[static_cast<size_t>(positions[i] - 1)] = values[i];
        used[static_cast<size_t>(values[i])] = true;
    }
    int next = n;
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i] != 0) continue;
        while (next >= 1 && used[static_cast<size_t>(next)]) --next;
        out[i] = next;
        used[static_cast<size_t>(next)] = true;
    }
    return Permutation(std::move(out));
}

}  // namespace

Permutation lambda_inv_123(const DyckPath& path) {
    const int n = path.semilength();
    if (n == 0) return Permutation();
    const AscentDescentCode code = to_code(path);
    std::vector<int> values, positions;
    positions.push_back(1);
    for (int a : code.ascents) values.push_back(n + 1 - a);
    for (int d : code.descents) positions.push_back(d + 1);
    values.push_back(1);
    return fill_decreasing(n, values, positions);
}

Permutation mu_inv_123(const DyckPath& path) {
    const int n = path.semilength();
    if (n == 0) return Permutation();
    const AscentDescentCode code = to_code(path);
    std::vector<int> values, positions;
    positions.push_back(n);
    for (int a : code.ascents) values.push_back(a);
    for (int d : code.descents) positions.push_back(n - d);
    values.push_back(n);
    return fill_decreasing(n, values, positions);
}

bool is_admissible(const PathPair& pair) {
    if (pair.first.semilength() != pair.second.semilength())
        throw std::invalid_argument("is_admissible: semilength mismatch");
    return leq(lprime(pair.second), pair.first) && leq(lprime(pair.first), pair.second);
}

namespace {

// The Theorem-7 merge on a pair already known admissible: sigma's values on
// pmin(sigma), tau's on pmax(tau), and the leftover values of vmin(tau) in
// decreasing order on the leftover positions in increasing order.
Permutation merge_avoiders(const Permutation& sigma, const Permutation& tau) {
    const int n = sigma.size();
    const MinProfile mins = ltr_minima(sigma);
    const MaxProfile maxs = rtl_maxima(tau);
    std::vector<int> out(static_cast<size_t>(n), 0);
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    for (size_t i = 0; i < mins.values.size(); ++i) {
        out[static_cast<size_t>(mins.positions[i] - 1)] = mins.values[i];
        used[static_cast<size_t>(mins.values[i])] = true;
    }
    for (size_t i = 0; i < maxs.values.size(); ++i) {
        int& slot = out[static_cast<size_t>(maxs.positions[i] - 1)];
        if (slot != 0 && slot != maxs.values[i])
            throw std::logic_error("nu_inv: minima/maxima assignments disagree");
        slot = maxs.values[i];
        used[static_cast<size_t>(maxs.values[i])] = true;
    }
    // Leftover positions are pmin(tau) \ pmin(sigma); leftover values are
    // vmin(tau) \ vmin(sigma). Both must account for every open slot.
    const MinProfile tmins = ltr_minima(tau);
    std::vector<int> rest_pos, rest_val;
    for (int p : tmins.positions)
        if (out[static_cast<size_t>(p - 1)] == 0) rest_pos.push_back(p);
    for (int v : tmins.values)
        if (!used[static_cast<size_t>(v)]) rest_val.push_back(v);  // already decreasing
    size_t open = 0, free_vals = 0;
    for (int slot : out) open += slot == 0;
    for (size_t v = 1; v <= static_cast<size_t>(n); ++v) free_vals += !used[v];
    if (open != rest_pos.size() || free_vals != rest_val.size())
        throw std::logic_error("nu_inv: leftover positions/values mismatch");
    for (size_t t = 0; t < rest_pos.size(); ++t)
        out[static_cast<size_t>(rest_pos[t] - 1)] = rest_val[t];
    return Permutation(std::move(out));
}

Permutation merged_from_pair(const DyckPath& p, const DyckPath& q) {
    return merge_avoiders(lambda_inv_123(p), mu_inv_123(q));
}

void check_postconditions(const Permutation& alpha, const PathPair& pair) {
    if (!avoids_1234(alpha)) throw std::logic_error("nu_inv: result contains 1234");
    if (nu(alpha) != pair) throw std::logic_error("nu_inv: nu(result) differs from the input pair");
}

}  // namespace

Permutation nu_inv(const PathPair& pair) {
    if (!is_admissible(pair)) throw NotAdmissibleError("not admissible");
    const std::vector<DyckPath> pc = irreducible_components(pair.first);
    const std::vector<DyckPath> qc = irreducible_components(pair.second);
    if (pc.size() != qc.size())
        throw std::logic_error("nu_inv: admissible pair with mismatched components");
    const size_t r = pc.size();
    std::vector<int> out;
    int offset = pair.first.semilength();
    for (size_t i = 0; i < r; ++i) {
        const DyckPath& q = qc[r - 1 - i];
        if (pc[i].semilength() != q.semilength())
            throw std::logic_error("nu_inv: admissible pair with mismatched component sizes");
        const Permutation block = merged_from_pair(pc[i], q);
        offset -= block.size();
        for (int v : block.values()) out.push_back(v + offset);
    }
    Permutation alpha{std::move(out)};
    check_postconditions(alpha, pair);
    return alpha;
}

Permutation nu_inv_global(const PathPair& pair) {
    if (!is_admissible(pair)) throw NotAdmissibleError("not admissible");
    Permutation alpha = merged_from_pair(pair.first, pair.second);
    check_postconditions(alpha, pair);
    return alpha;
}

bool rc_symmetry_holds(const Permutation& sigma) {
    const PathPair lr = nu(sigma);
    const PathPair rc = nu(reverse_complement(sigma));
    if (rc.first != lr.second || rc.second != lr.first) return false;
    const bool invariant = reverse_complement(sigma) == sigma;
    if (invariant && lr.first != lr.second) return false;
    // The converse needs injectivity of nu, which holds on the avoiders.
    return !(avoids_1234(sigma) && lr.first == lr.second && !invariant);
}

bool inverse_symmetry_holds(const Permutation& sigma) {
    const PathPair lr = nu(sigma);
    const PathPair in = nu(inverse(sigma));
    if (in.first != reverse(lr.first) || in.second != reverse(lr.second)) return false;
    const bool involution = inverse(sigma) == sigma;
    const bool symmetric =
        lr.first == reverse(lr.first) && lr.second == reverse(lr.second);
    if (involution && !symmetric) return false;
    // The converse needs injectivity of nu, which holds on the avoiders.
    return !(avoids_1234(sigma) && symmetric && !involution);
}

}  // namespace dyckbij
