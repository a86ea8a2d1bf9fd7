#include "dyckbij/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dyckbij {

Permutation::Permutation(std::vector<int> vals) : vals_(std::move(vals)) {
    const int n = static_cast<int>(vals_.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : vals_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                        " out of range for n=" + std::to_string(n));
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("permutation: duplicate value " + std::to_string(v));
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<int> vals;
    std::string tok;
    while (in >> tok) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("permutation: bad token '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("permutation: bad token '" + tok + "'");
        vals.push_back(v);
    }
    return Permutation(std::move(vals));
}

std::string Permutation::str() const {
    std::string out;
    for (size_t i = 0; i < vals_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vals_[i]);
    }
    return out;
}

MinProfile ltr_minima(const Permutation& sigma) {
    MinProfile prof;
    int cur = sigma.size() + 1;
    for (int i = 1; i <= sigma.size(); ++i) {
        if (sigma(i) < cur) {
            cur = sigma(i);
            prof.values.push_back(cur);
            prof.positions.push_back(i);
        }
    }
    return prof;
}

MaxProfile rtl_maxima(const Permutation& sigma) {
    MaxProfile prof;
    int cur = 0;
    for (int i = sigma.size(); i >= 1; --i) {
        if (sigma(i) > cur) {
            cur = sigma(i);
            prof.values.push_back(cur);
            prof.positions.push_back(i);
        }
    }
    return prof;
}

Permutation reverse_complement(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i - 1)] = n + 1 - sigma(n + 1 - i);
    return Permutation(std::move(v));
}

Permutation inverse(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(sigma(i) - 1)] = i;
    return Permutation(std::move(v));
}

namespace {

bool match_pattern(const std::vector<int>& s, const std::vector<int>& pat,
                   std::vector<int>& chosen, size_t from) {
    const size_t j = chosen.size();
    if (j == pat.size()) return true;
    for (size_t i = from; i + (pat.size() - j) <= s.size(); ++i) {
        const int x = s[i];
        bool ok = true;
        for (size_t t = 0; t < j; ++t) {
            if ((pat[t] < pat[j]) != (chosen[t] < x)) { ok = false; break; }
        }
        if (!ok) continue;
        chosen.push_back(x);
        if (match_pattern(s, pat, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool contains_pattern(const Permutation& sigma, const Permutation& pattern) {
    if (pattern.size() < 1) throw std::invalid_argument("contains_pattern: empty pattern");
    if (pattern.size() > sigma.size()) return false;
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(pattern.size()));
    return match_pattern(sigma.values(), pattern.values(), chosen, 0);
}

int lis_length(const Permutation& sigma) {
    std::vector<int> tails;
    for (int v : sigma.values()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

bool avoids_123(const Permutation& sigma) { return lis_length(sigma) < 3; }
bool avoids_1234(const Permutation& sigma) { return lis_length(sigma) < 4; }

std::vector<Permutation> right_connected_components(const Permutation& sigma) {
    const int n = sigma.size();
    // A split exists after position n-l whenever the suffix of length l is a
    // permutation of {1,...,l}, i.e. its maximum equals l.
    std::vector<int> splits;  // suffix lengths, collected from the right
    int sufmax = 0;
    for (int l = 1; l <= n; ++l) {
        sufmax = std::max(sufmax, sigma(n - l + 1));
        if (sufmax == l) splits.push_back(l);
    }
    // splits = l_1 < ... < l_m with l_m = n; the components hold the value
    // ranges (l_{m-1}, n], (l_{m-2}, l_{m-1}], ..., (0, l_1], left to right.
    std::vector<Permutation> comps;
    int hi = n;
    for (int idx = static_cast<int>(splits.size()) - 2; idx >= -1; --idx) {
        const int lo = idx >= 0 ? splits[static_cast<size_t>(idx)] : 0;
        // Positions n-hi+1 .. n-lo, values lo+1 .. hi, standardized by -lo.
        std::vector<int> block;
        block.reserve(static_cast<size_t>(hi - lo));
        for (int i = n - hi + 1; i <= n - lo; ++i) block.push_back(sigma(i) - lo);
        comps.emplace_back(std::move(block));
        hi = lo;
    }
    return comps;
}

bool is_right_connected(const Permutation& sigma) {
    const int n = sigma.size();
    int sufmax = 0;
    for (int l = 1; l < n; ++l) {
        sufmax = std::max(sufmax, sigma(n - l + 1));
        if (sufmax == l) return false;
    }
    return true;
}

bool equivalent(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("equivalent: length mismatch");
    return ltr_minima(a) == ltr_minima(b) && rtl_maxima(a) == rtl_maxima(b);
}

Permutation canonical_representative(const Permutation& sigma) {
    const int n = sigma.size();
    const MinProfile mins = ltr_minima(sigma);
    const MaxProfile maxs = rtl_maxima(sigma);
    std::vector<int> out(static_cast<size_t>(n), 0);
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    for (size_t i = 0; i < mins.values.size(); ++i) {
        out[static_cast<size_t>(mins.positions[i] - 1)] = mins.values[i];
        used[static_cast<size_t>(mins.values[i])] = true;
    }
    for (size_t i = 0; i < maxs.values.size(); ++i) {
        out[static_cast<size_t>(maxs.positions[i] - 1)] = maxs.values[i];
        used[static_cast<size_t>(maxs.values[i])] = true;
    }
    // Remaining values, decreasing, at the remaining positions.
    int next = n;
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i] != 0) continue;
        while (next >= 1 && used[static_cast<size_t>(next)]) --next;
        out[i] = next;
        used[static_cast<size_t>(next)] = true;
    }
    return Permutation(std::move(out));
}

namespace {

// The shared removal-matching check: values(tau) and positions(tau) must be
// subsets of sigma's, and the t-th removed value index must precede the t-th
// removed position index, strictly.
bool profile_leq(const std::vector<int>& val_sigma, const std::vector<int>& pos_sigma,
                 const std::vector<int>& val_tau, const std::vector<int>& pos_tau) {
    std::vector<int> vi, pi;  // 1-based indices of removed entries
    {
        size_t t = 0;
        for (size_t i = 0; i < val_sigma.size(); ++i) {
            if (t < val_tau.size() && val_tau[t] == val_sigma[i])
                ++t;
            else
                vi.push_back(static_cast<int>(i) + 1);
        }
        if (t != val_tau.size()) return false;  // not a subset
    }
    {
        size_t t = 0;
        for (size_t i = 0; i < pos_sigma.size(); ++i) {
            if (t < pos_tau.size() && pos_tau[t] == pos_sigma[i])
                ++t;
            else
                pi.push_back(static_cast<int>(i) + 1);
        }
        if (t != pos_tau.size()) return false;
    }
    for (size_t t = 0; t < vi.size(); ++t)
        if (vi[t] >= pi[t]) return false;
    return true;
}

}  // namespace

bool leq_lambda(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw std::invalid_argument("leq_lambda: length mismatch");
    const MinProfile s = ltr_minima(sigma), t = ltr_minima(tau);
    return profile_leq(s.values, s.positions, t.values, t.positions);
}

bool leq_mu(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw std::invalid_argument("leq_mu: length mismatch");
    const MaxProfile s = rtl_maxima(sigma), t = rtl_maxima(tau);
    return profile_leq(s.values, s.positions, t.values, t.positions);
}

}  // namespace dyckbij
