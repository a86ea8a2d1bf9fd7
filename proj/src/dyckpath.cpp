#include "dyckbij/dyckpath.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyckbij {

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string tok(text.substr(pos, comma - pos));
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("code: bad ") + what + " entry '" + tok + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument(std::string("code: bad ") + what + " entry '" + tok + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

}  // namespace

std::string AscentDescentCode::str() const {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s;
    };
    return "n=" + std::to_string(n) + ";A=" + join(ascents) + ";D=" + join(descents);
}

AscentDescentCode AscentDescentCode::parse(std::string_view text) {
    AscentDescentCode code;
    if (text.substr(0, 2) != "n=")
        throw std::invalid_argument("code: expected 'n=...;A=...;D=...'");
    const size_t semi1 = text.find(';');
    const size_t semi2 = semi1 == std::string_view::npos ? semi1 : text.find(';', semi1 + 1);
    if (semi2 == std::string_view::npos || text.substr(semi1 + 1, 2) != "A=" ||
        text.substr(semi2 + 1, 2) != "D=")
        throw std::invalid_argument("code: expected 'n=...;A=...;D=...'");
    const std::string ntok(text.substr(2, semi1 - 2));
    try {
        code.n = std::stoi(ntok);
    } catch (const std::exception&) {
        throw std::invalid_argument("code: bad semilength '" + ntok + "'");
    }
    code.ascents = parse_int_list(text.substr(semi1 + 3, semi2 - semi1 - 3), "ascent");
    code.descents = parse_int_list(text.substr(semi2 + 3), "descent");
    return code;
}

DyckPath DyckPath::from_steps(std::string_view steps) {
    int height = 0;
    for (char c : steps) {
        if (c == 'U')
            ++height;
        else if (c == 'D')
            --height;
        else
            throw std::invalid_argument(std::string("path: bad step '") + c + "'");
        if (height < 0) throw std::invalid_argument("path: dips below the axis");
    }
    if (height != 0) throw std::invalid_argument("path: unbalanced steps");
    return DyckPath(std::string(steps));
}

DyckPath DyckPath::parse(std::string_view text) {
    if (text.substr(0, 2) == "n=") return from_code(AscentDescentCode::parse(text));
    return from_steps(text);
}

DyckPath DyckPath::pyramid(int n) {
    if (n < 0) throw std::invalid_argument("pyramid: negative semilength");
    return DyckPath(std::string(static_cast<size_t>(n), 'U') + std::string(static_cast<size_t>(n), 'D'));
}

DyckPath DyckPath::zigzag(int n) {
    if (n < 0) throw std::invalid_argument("zigzag: negative semilength");
    std::string s;
    for (int i = 0; i < n; ++i) s += "UD";
    return DyckPath(std::move(s));
}

AscentDescentCode to_code(const DyckPath& path) {
    AscentDescentCode code;
    code.n = path.semilength();
    int ups = 0, downs = 0;
    const std::string& s = path.steps();
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'U') {
            ++ups;
        } else {
            ++downs;
            // Run boundaries: record cumulative sums at every D->U transition;
            // the final pair (n, n) is dropped.
            if (i + 1 < s.size() && s[i + 1] == 'U') {
                code.ascents.push_back(ups);
                code.descents.push_back(downs);
            }
        }
    }
    return code;
}

DyckPath from_code(const AscentDescentCode& code) {
    const int n = code.n;
    if (n < 0) throw std::invalid_argument("code: negative semilength");
    if (code.ascents.size() != code.descents.size())
        throw std::invalid_argument("code: ascent/descent length mismatch");
    const auto& A = code.ascents;
    const auto& D = code.descents;
    for (size_t i = 0; i + 1 < A.size(); ++i)
        if (A[i] >= A[i + 1]) throw std::invalid_argument("code: ascent list not strictly increasing");
    for (size_t i = 0; i + 1 < D.size(); ++i)
        if (D[i] >= D[i + 1]) throw std::invalid_argument("code: descent list not strictly increasing");
    if (!A.empty() && (A.front() < 1 || A.back() > n - 1))
        throw std::invalid_argument("code: ascent entry out of range [1, n-1]");
    if (!D.empty() && (D.front() < 1 || D.back() > n - 1))
        throw std::invalid_argument("code: descent entry out of range [1, n-1]");
    for (size_t i = 0; i < A.size(); ++i)
        if (A[i] < D[i])
            throw std::invalid_argument("code: A_" + std::to_string(i + 1) + " < D_" +
                                        std::to_string(i + 1));
    std::string steps;
    steps.reserve(static_cast<size_t>(2 * n));
    int prev_a = 0, prev_d = 0;
    for (size_t i = 0; i <= A.size(); ++i) {
        const int a = i < A.size() ? A[i] : n;
        const int d = i < D.size() ? D[i] : n;
        steps.append(static_cast<size_t>(a - prev_a), 'U');
        steps.append(static_cast<size_t>(d - prev_d), 'D');
        prev_a = a;
        prev_d = d;
    }
    return DyckPath::from_steps(steps);
}

std::vector<int> returns(const DyckPath& path) {
    std::vector<int> out;
    int height = 0;
    const std::string& s = path.steps();
    for (size_t i = 0; i < s.size(); ++i) {
        height += s[i] == 'U' ? 1 : -1;
        if (height == 0) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

bool is_irreducible(const DyckPath& path) { return returns(path).size() == 1; }

std::vector<DyckPath> irreducible_components(const DyckPath& path) {
    std::vector<DyckPath> comps;
    int start = 0;
    for (int r : returns(path)) {
        comps.push_back(DyckPath::from_steps(
            std::string_view(path.steps()).substr(static_cast<size_t>(start),
                                                  static_cast<size_t>(r - start))));
        start = r;
    }
    return comps;
}

DyckPath reverse(const DyckPath& path) {
    std::string s(path.steps().rbegin(), path.steps().rend());
    for (char& c : s) c = c == 'U' ? 'D' : 'U';
    return DyckPath(std::move(s));
}

DyckPath concat(const DyckPath& a, const DyckPath& b) {
    return DyckPath(a.steps() + b.steps());
}

std::string render_ascii(const DyckPath& path) {
    const std::string& s = path.steps();
    if (s.empty()) return "";
    std::vector<int> h(s.size() + 1, 0);
    int top = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        h[i + 1] = h[i] + (s[i] == 'U' ? 1 : -1);
        top = std::max(top, h[i + 1]);
    }
    std::string out;
    for (int row = top; row >= 1; --row) {
        std::string line;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 'U' && h[i + 1] == row)
                line += '/';
            else if (s[i] == 'D' && h[i] == row)
                line += '\\';
            else
                line += ' ';
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace dyckbij
