#include "dyckbij/poset.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace dyckbij {

namespace {

// Deletion successors at the code level. Every (i, j) with j >= i yields a
// valid code: strict monotonicity and A_t >= D_t survive the index shift.
std::vector<AscentDescentCode> code_successors(const AscentDescentCode& code) {
    std::vector<AscentDescentCode> out;
    const size_t len = code.ascents.size();
    for (size_t i = 0; i < len; ++i) {
        for (size_t j = i; j < len; ++j) {
            AscentDescentCode next;
            next.n = code.n;
            for (size_t t = 0; t < len; ++t) {
                if (t != i) next.ascents.push_back(code.ascents[t]);
                if (t != j) next.descents.push_back(code.descents[t]);
            }
            out.push_back(std::move(next));
        }
    }
    return out;
}

// Removed-entry indices (1-based) of sub within full, or nullopt-like empty
// result with ok=false when sub is not a subset.
bool removed_indices(const std::vector<int>& full, const std::vector<int>& sub,
                     std::vector<size_t>& out) {
    size_t t = 0;
    for (size_t i = 0; i < full.size(); ++i) {
        if (t < sub.size() && sub[t] == full[i])
            ++t;
        else
            out.push_back(i + 1);
    }
    return t == sub.size();
}

}  // namespace

bool covers(const DyckPath& q, const DyckPath& p) {
    if (q.semilength() != p.semilength())
        throw std::invalid_argument("covers: semilength mismatch");
    if (!is_irreducible(q) || !is_irreducible(p))
        throw std::invalid_argument("covers: operands must be irreducible");
    const AscentDescentCode cp = to_code(p), cq = to_code(q);
    if (cq.ascents.size() + 1 != cp.ascents.size()) return false;
    std::vector<size_t> ri, rj;
    if (!removed_indices(cp.ascents, cq.ascents, ri)) return false;
    if (!removed_indices(cp.descents, cq.descents, rj)) return false;
    return ri.size() == 1 && rj.size() == 1 && ri[0] <= rj[0];
}

bool leq(const DyckPath& p, const DyckPath& q) {
    if (p.semilength() != q.semilength())
        throw std::invalid_argument("leq: semilength mismatch");
    const AscentDescentCode cp = to_code(p), cq = to_code(q);
    std::vector<size_t> ri, rj;
    if (!removed_indices(cp.ascents, cq.ascents, ri)) return false;
    if (!removed_indices(cp.descents, cq.descents, rj)) return false;
    // Greedy matching: t-th smallest removed ascent index against t-th
    // smallest removed descent index.
    for (size_t t = 0; t < ri.size(); ++t)
        if (ri[t] > rj[t]) return false;
    return true;
}

bool leq_oracle(const DyckPath& p, const DyckPath& q) {
    if (p.semilength() != q.semilength())
        throw std::invalid_argument("leq_oracle: semilength mismatch");
    const AscentDescentCode target = to_code(q);
    std::set<std::string> seen;
    std::vector<AscentDescentCode> frontier{to_code(p)};
    seen.insert(frontier.front().str());
    while (!frontier.empty()) {
        std::vector<AscentDescentCode> next;
        for (const AscentDescentCode& code : frontier) {
            if (code == target) return true;
            if (code.ascents.size() <= target.ascents.size()) continue;
            for (AscentDescentCode& succ : code_successors(code))
                if (seen.insert(succ.str()).second) next.push_back(std::move(succ));
        }
        frontier = std::move(next);
    }
    return false;
}

std::vector<DyckPath> upper_covers(const DyckPath& p) {
    std::set<DyckPath> out;
    for (const AscentDescentCode& succ : code_successors(to_code(p)))
        out.insert(from_code(succ));
    return {out.begin(), out.end()};
}

std::string hasse_dot(const std::vector<DyckPath>& paths) {
    const size_t m = paths.size();
    std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) le[i][j] = leq(paths[i], paths[j]);
    std::string dot = "digraph hasse {\n  rankdir=BT;\n";
    for (size_t i = 0; i < m; ++i)
        dot += "  p" + std::to_string(i) + " [label=\"" + paths[i].steps() + "\"];\n";
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (i == j || !le[i][j]) continue;
            bool immediate = true;
            for (size_t w = 0; w < m; ++w) {
                if (w == i || w == j) continue;
                if (le[i][w] && le[w][j]) { immediate = false; break; }
            }
            if (immediate)
                dot += "  p" + std::to_string(i) + " -> p" + std::to_string(j) + ";\n";
        }
    }
    dot += "}\n";
    return dot;
}

}  // namespace dyckbij
