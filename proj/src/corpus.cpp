#include "dyckbij/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyckbij {

namespace {

void check_size(int n, int cap, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative size");
    if (n > cap)
        throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
}

void gen_avoiding_rec(int n, int pattern_len, std::vector<int>& prefix,
                      std::vector<bool>& used, const std::vector<int>& tails,
                      const std::function<void(const Permutation&)>& fn) {
    if (static_cast<int>(prefix.size()) == n) {
        fn(Permutation(prefix));
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (used[static_cast<size_t>(v)]) continue;
        std::vector<int> next_tails = tails;
        auto it = std::lower_bound(next_tails.begin(), next_tails.end(), v);
        if (it == next_tails.end())
            next_tails.push_back(v);
        else
            *it = v;
        if (static_cast<int>(next_tails.size()) >= pattern_len) continue;
        used[static_cast<size_t>(v)] = true;
        prefix.push_back(v);
        gen_avoiding_rec(n, pattern_len, prefix, used, next_tails, fn);
        prefix.pop_back();
        used[static_cast<size_t>(v)] = false;
    }
}

void gen_dyck_rec(std::string& steps, int ups, int downs, int n,
                  const std::function<void(const DyckPath&)>& fn) {
    if (ups == n && downs == n) {
        fn(DyckPath::from_steps(steps));
        return;
    }
    if (downs < ups) {
        steps.push_back('D');
        gen_dyck_rec(steps, ups, downs + 1, n, fn);
        steps.pop_back();
    }
    if (ups < n) {
        steps.push_back('U');
        gen_dyck_rec(steps, ups + 1, downs, n, fn);
        steps.pop_back();
    }
}

}  // namespace

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: out of uint64 range");
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t catalan(int n) {
    if (n < 0 || n > 30) throw std::invalid_argument("catalan: out of supported range");
    // C_{k+1} = C_k * 2(2k+1) / (k+2); exact at every step.
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k)
        c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
    return c;
}

Permutation permutation_at_rank(int n, std::uint64_t rank) {
    if (rank >= factorial(n)) throw std::invalid_argument("permutation_at_rank: rank too large");
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i + 1;
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = n; i >= 1; --i) {
        const std::uint64_t f = factorial(i - 1);
        const size_t idx = static_cast<size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(out));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn, int cap) {
    check_size(n, cap, "for_each_permutation");
    std::vector<int> vals(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<size_t>(i)] = i + 1;
    do {
        fn(Permutation(vals));
    } while (std::next_permutation(vals.begin(), vals.end()));
}

void for_each_avoiding(int n, int pattern_len,
                       const std::function<void(const Permutation&)>& fn, int cap) {
    check_size(n, cap, "for_each_avoiding");
    if (pattern_len != 3 && pattern_len != 4)
        throw std::invalid_argument("for_each_avoiding: pattern must be 123 or 1234");
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    gen_avoiding_rec(n, pattern_len, prefix, used, {}, fn);
}

void for_each_dyck_path(int n, const std::function<void(const DyckPath&)>& fn, int cap) {
    check_size(n, cap, "for_each_dyck_path");
    std::string steps;
    steps.reserve(static_cast<size_t>(2 * n));
    gen_dyck_rec(steps, 0, 0, n, fn);
}

std::vector<DyckPath> all_dyck_paths(int n, int cap) {
    std::vector<DyckPath> out;
    for_each_dyck_path(n, [&out](const DyckPath& p) { out.push_back(p); }, cap);
    return out;
}

std::uint64_t count_avoiding(int n, int pattern_len, int cap) {
    std::uint64_t count = 0;
    for_each_avoiding(n, pattern_len, [&count](const Permutation&) { ++count; }, cap);
    return count;
}

}  // namespace dyckbij
