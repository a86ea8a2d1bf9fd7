#include "dyckbij/involution.hpp"

#include <stdexcept>
#include <vector>

namespace dyckbij {

namespace {

DyckPath lprime_irreducible(const DyckPath& path) {
    const AscentDescentCode code = to_code(path);
    const int n = code.n;
    AscentDescentCode out;
    out.n = n;
    // A' = { n - x : x in [1, n-2], x+1 not an ascent entry }, and
    // D' = { n-1-x : x in [1, n-2], x not a descent entry }; iterating the
    // complements downwards yields both lists already sorted increasing.
    std::vector<bool> abar(static_cast<size_t>(n) + 1, false);
    std::vector<bool> dset(static_cast<size_t>(n) + 1, false);
    for (int a : code.ascents) abar[static_cast<size_t>(a - 1)] = true;
    for (int d : code.descents) dset[static_cast<size_t>(d)] = true;
    for (int x = n - 2; x >= 1; --x) {
        if (!abar[static_cast<size_t>(x)]) out.ascents.push_back(n - x);
        if (!dset[static_cast<size_t>(x)]) out.descents.push_back(n - 1 - x);
    }
    return from_code(out);
}

// Valley points of the geometric construction, as (x, y) lattice pairs.
struct Point {
    int x, y;
};

DyckPath path_through_valleys(int n, const std::vector<Point>& valleys) {
    std::string steps;
    Point prev{0, 0};
    auto climb = [&steps](const Point& a, const Point& b) {
        // Peak between consecutive valleys: intersection of the up-diagonal
        // through a and the down-diagonal through b.
        const int twice_px = a.x - a.y + b.x + b.y;
        if (twice_px % 2 != 0) throw std::logic_error("valley peaks not on the lattice");
        const int px = twice_px / 2;
        const int py = px - a.x + a.y;
        if (py < a.y || py < b.y) throw std::logic_error("valleys admit no Dyck path");
        steps.append(static_cast<size_t>(py - a.y), 'U');
        steps.append(static_cast<size_t>(py - b.y), 'D');
    };
    for (const Point& v : valleys) {
        if (v.x <= prev.x) throw std::logic_error("marked valleys out of order");
        climb(prev, v);
        prev = v;
    }
    climb(prev, Point{2 * n, 0});
    return DyckPath::from_steps(steps);
}

}  // namespace

DyckPath lprime(const DyckPath& path) {
    const std::vector<DyckPath> comps = irreducible_components(path);
    DyckPath out;
    for (auto it = comps.rbegin(); it != comps.rend(); ++it)
        out = concat(out, lprime_irreducible(*it));
    return out;
}

DyckPath kreweras(const DyckPath& path) {
    if (path.empty()) return path;
    const DyckPath wrapped =
        DyckPath::from_steps("U" + reverse(path).steps() + "D");
    const std::string inner = lprime(wrapped).steps();
    return DyckPath::from_steps(std::string_view(inner).substr(1, inner.size() - 2));
}

DyckPath kreweras_geometric(const DyckPath& path) {
    if (path.empty()) return path;
    const std::string& s = path.steps();
    std::vector<int> h(s.size() + 1, 0);
    for (size_t i = 0; i < s.size(); ++i) h[i + 1] = h[i] + (s[i] == 'U' ? 1 : -1);
    // Midpoints of double ascents / double descents, left to right. In the
    // flipped copy they sit at height -h.
    std::vector<Point> asc, desc;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == 'U' && s[i + 1] == 'U') asc.push_back({static_cast<int>(i) + 1, -h[i + 1]});
        if (s[i] == 'D' && s[i + 1] == 'D') desc.push_back({static_cast<int>(i) + 1, -h[i + 1]});
    }
    if (asc.size() != desc.size()) throw std::logic_error("double ascent/descent counts differ");
    std::vector<Point> valleys;
    for (size_t t = 0; t < asc.size(); ++t) {
        // Northeast ray from the ascent midpoint, northwest ray from the
        // descent midpoint.
        const Point a = asc[t], b = desc[t];
        const int twice_x = a.x + b.x + b.y - a.y;
        if (twice_x % 2 != 0) throw std::logic_error("ray intersection off the lattice");
        const int x = twice_x / 2;
        const int y = x - a.x + a.y;
        if (y < 0) throw std::logic_error("ray intersection below the axis");
        valleys.push_back({x, y});
    }
    return path_through_valleys(path.semilength(), valleys);
}

DyckPath lprime_geometric(const DyckPath& path) {
    DyckPath out;
    for (const DyckPath& comp : irreducible_components(reverse(path))) {
        const std::string& s = comp.steps();
        const DyckPath inner =
            DyckPath::from_steps(std::string_view(s).substr(1, s.size() - 2));
        out = concat(out, DyckPath::from_steps("U" + kreweras_geometric(inner).steps() + "D"));
    }
    return out;
}

}  // namespace dyckbij
