#ifndef DYCKBIJ_DYCKPATH_HPP
#define DYCKBIJ_DYCKPATH_HPP

#include <string>
#include <string_view>
#include <vector>

namespace dyckbij {

// Cumulative ascent/descent lengths of a Dyck path with the final entry
// (= n) dropped from each list. Derived view only; the step sequence is the
// authoritative representation.
struct AscentDescentCode {
    int n = 0;                 // semilength
    std::vector<int> ascents;  // A_1 < ... < A_{k-1}
    std::vector<int> descents; // D_1 < ... < D_{k-1}, with A_i >= D_i

    // "n=7;A=2,6;D=1,3" (empty lists print as "A=;D=").
    std::string str() const;
    static AscentDescentCode parse(std::string_view text);

    friend bool operator==(const AscentDescentCode&, const AscentDescentCode&) = default;
};

// A balanced U/D step sequence never dipping below the axis. The empty path
// (n = 0) is valid.
class DyckPath {
public:
    DyckPath() = default;

    // Validates balance and the prefix property; throws std::invalid_argument.
    static DyckPath from_steps(std::string_view steps);
    // Accepts either a step string over {U,D} or a code literal
    // "n=7;A=2,6;D=1,3" (auto-detected).
    static DyckPath parse(std::string_view text);
    static DyckPath pyramid(int n);  // U^n D^n
    static DyckPath zigzag(int n);   // (UD)^n

    int semilength() const { return static_cast<int>(steps_.size()) / 2; }
    const std::string& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
    friend DyckPath concat(const DyckPath&, const DyckPath&);
    friend DyckPath reverse(const DyckPath&);
    explicit DyckPath(std::string steps) : steps_(std::move(steps)) {}
    std::string steps_;
};

AscentDescentCode to_code(const DyckPath& path);

// Unique path with the given code. Rejects each validity violation with a
// distinct message: length mismatch, non-monotone A, non-monotone D, range,
// A_i < D_i.
DyckPath from_code(const AscentDescentCode& code);

// 1-based indices of the down steps ending on the x-axis.
std::vector<int> returns(const DyckPath& path);

bool is_irreducible(const DyckPath& path);

// Maximal irreducible factors, left to right; they concatenate to the path.
std::vector<DyckPath> irreducible_components(const DyckPath& path);

// Flip with respect to a vertical line: step sequence reversed, U and D
// swapped. An involution.
DyckPath reverse(const DyckPath& path);

DyckPath concat(const DyckPath& a, const DyckPath& b);

// Mountain picture made of '/' and '\'.
std::string render_ascii(const DyckPath& path);

}  // namespace dyckbij

#endif
