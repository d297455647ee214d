#ifndef KTDYCK_BIJECTIONS_HPP
#define KTDYCK_BIJECTIONS_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <ktdyck/path.hpp>

namespace ktdyck
{

// Raised when an input falls outside the domain of a bijection.
class BijectionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Ordinary Dyck path; DOWN here is (1, -1).
class DyckPath
{
public:
    DyckPath() = default;

    // Throws std::invalid_argument unless the steps form a Dyck path.
    static DyckPath from_steps(std::vector<Step> steps);

    std::span<const Step> steps() const
    {
        return steps_;
    }
    std::size_t size() const
    {
        return steps_.size();
    }
    int semilength() const
    {
        return static_cast<int>(steps_.size() / 2);
    }
    // 1-based.
    Step step(std::size_t index) const
    {
        return steps_.at(index - 1);
    }

    auto operator<=>(const DyckPath &) const = default;

private:
    explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    std::vector<Step> steps_;
};

// 1-based indices of down-steps immediately preceded by an up-step.
std::vector<std::size_t> peaks(const DyckPath &d);
// 1-based indices of down-steps immediately followed by an up-step.
std::vector<std::size_t> valleys(const DyckPath &d);
// Sum of valleys(d).
std::size_t valley_index_sum(const DyckPath &d);

std::vector<DyckPath> enumerate_dyck(int semilength);

enum class MarkKind { Peak, Valley };

// A Dyck path with one marked peak or valley, identified by its down-step.
struct MarkedDyck {
    DyckPath base;
    MarkKind kind = MarkKind::Peak;
    std::size_t mark_pos = 0;

    // Throws std::invalid_argument if mark_pos is not a peak/valley down-step.
    void check() const;

    auto operator<=>(const MarkedDyck &) const = default;
};

// A Dyck path with a marked valley and a marked step at or before the valley's down-step.
struct DoubleMarkedDyck {
    DyckPath base;
    std::size_t valley_pos = 0;
    std::size_t step_mark = 0;

    void check() const;

    auto operator<=>(const DoubleMarkedDyck &) const = default;
};

/// Swaps the counts of residues i and j on a k_{k-1} path.
///
/// Every down-step at residue i moves |i - j| up-steps towards residue j
/// (left when j < i) and every down-step at residue j moves the same
/// distance the other way. Applying the same exchange twice is the identity.
LatticePath shift_exchange(const LatticePath &path, int i, int j);

// k_t path with profile a -> (k+1)_t path with profile (0, a): an extra up-step
// goes in front of every up-step that starts at a height divisible by k.
LatticePath lift(const LatticePath &path);
// Inverse of lift; requires a_1 = 0 and k >= 2.
LatticePath lower(const LatticePath &path);

// 2_1 paths with profile (1, n-1) <-> Dyck paths of semilength n with a marked peak.
MarkedDyck to_marked_peak(const LatticePath &path);
LatticePath from_marked_peak(const MarkedDyck &marked);

// 2_0 paths with profile (1, n-1) <-> Dyck paths of semilength n with a marked valley.
MarkedDyck to_marked_valley(const LatticePath &path);
LatticePath from_marked_valley(const MarkedDyck &marked);

// 2_0 paths with profile (n-1, 1) <-> Dyck paths of semilength n - 1.
DyckPath to_catalan(const LatticePath &path);
LatticePath from_catalan(const DyckPath &dyck);

// Which branch of the double-marking map a 2_0 path with profile (2, n-2) takes.
enum class DoubleMarkedCase {
    Separated,          // odd down-steps at least two up-steps apart
    AdjacentNoReturn,   // adjacent, no return to the x-axis before them
    AdjacentWithReturn, // adjacent, at least one return before them
};

std::string to_string(DoubleMarkedCase c);

DoubleMarkedCase classify_double_marked(const LatticePath &path);

// 2_0 paths with profile (2, n-2) <-> double-marked Dyck paths of semilength n - 1.
DoubleMarkedDyck to_double_marked(const LatticePath &path);
LatticePath from_double_marked(const DoubleMarkedDyck &marked);

// Every (Dyck path of semilength n - 1, valley, step mark) triple; n >= 2.
void for_each_double_marked(int n, const std::function<void(const DoubleMarkedDyck &)> &visit);
std::vector<DoubleMarkedDyck> enumerate_double_marked(int n);

} // namespace ktdyck

#endif
