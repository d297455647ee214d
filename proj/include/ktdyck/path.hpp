#ifndef KTDYCK_PATH_HPP
#define KTDYCK_PATH_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <ktdyck/types.hpp>

namespace ktdyck
{

// (k, t, n): down-steps drop by k, the floor is y = -t, and there are n down-steps.
struct PathParams {
    int k = 1;
    int t = 0;
    int n = 0;

    std::size_t length() const
    {
        return static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(n);
    }

    friend bool operator==(const PathParams &, const PathParams &) = default;
};

// Throws std::invalid_argument unless k >= 1, 0 <= t < k and n >= 0.
void check_params(const PathParams &params);

// Residue class in {1..k} of a height; multiples of k map to k.
inline int residue(long height, int k)
{
    const long m = ((height - 1) % k + k) % k;
    return static_cast<int>(m) + 1;
}

/// Down-step counts per height residue, (a_1, ..., a_k).
///
/// Accessors taking a residue are 1-based to match the usual tuple notation;
/// values() exposes the raw 0-based storage.
class Profile
{
public:
    Profile() = default;
    explicit Profile(std::vector<int> counts);

    static Profile zeros(int k)
    {
        return Profile(std::vector<int>(static_cast<std::size_t>(k), 0));
    }

    int k() const
    {
        return static_cast<int>(a_.size());
    }
    int at(int i) const;
    int &at(int i);
    int total() const;
    std::span<const int> values() const
    {
        return a_;
    }

    // "1,0,2"
    std::string to_string() const;
    static Profile parse(std::string_view text);

    auto operator<=>(const Profile &) const = default;

private:
    std::vector<int> a_;
};

class PathError : public std::invalid_argument
{
public:
    enum class Kind { WrongLength, WrongStepCount, BelowFloor, NonzeroEnd };

    PathError(Kind kind, std::size_t index, const std::string &what)
        : std::invalid_argument(what), kind_(kind), index_(index)
    {
    }

    Kind kind() const
    {
        return kind_;
    }
    // 1-based index of the offending step (0 when the length is wrong).
    std::size_t index() const
    {
        return index_;
    }

private:
    Kind kind_;
    std::size_t index_;
};

class LatticePath;
LatticePath validate_path(std::vector<Step> steps, const PathParams &params);

// An immutable, validated k_t-Dyck path. Only validate_path() constructs one.
class LatticePath
{
public:
    LatticePath() = default;

    const PathParams &params() const
    {
        return params_;
    }
    int k() const
    {
        return params_.k;
    }
    int t() const
    {
        return params_.t;
    }
    int n() const
    {
        return params_.n;
    }
    std::span<const Step> steps() const
    {
        return steps_;
    }
    std::size_t size() const
    {
        return steps_.size();
    }
    bool empty() const
    {
        return steps_.empty();
    }
    // 1-based.
    Step step(std::size_t index) const
    {
        return steps_.at(index - 1);
    }

    // heights()[m] is the height after m steps; size() + 1 entries.
    std::vector<long> heights() const;

    friend bool operator==(const LatticePath &, const LatticePath &) = default;
    friend bool operator<(const LatticePath &a, const LatticePath &b)
    {
        return a.steps_ < b.steps_;
    }

private:
    friend LatticePath validate_path(std::vector<Step> steps, const PathParams &params);

    LatticePath(PathParams params, std::vector<Step> steps) : params_(params), steps_(std::move(steps)) {}

    PathParams params_;
    std::vector<Step> steps_;
};

// Prefix heights with UP = +1 and DOWN = -k; result has steps.size() + 1 entries.
std::vector<long> prefix_heights(std::span<const Step> steps, int k);

Profile height_profile(const LatticePath &path);

// 1-based indices of down-steps whose endpoint is no higher than any later point.
std::vector<std::size_t> weak_rtl_minima(const LatticePath &path);

// One piece of the first-return decomposition of a k_{k-1} path:
// j ups, a shifted k_{k-1} path, one down, then k - j ups.
struct Segment {
    int j = 0;
    LatticePath inner;
    int trailing_ups = 0;

    friend bool operator==(const Segment &, const Segment &) = default;
};

// Requires t == k - 1; throws std::invalid_argument otherwise.
std::vector<Segment> decompose(const LatticePath &path);
LatticePath reassemble(std::span<const Segment> segments, int k);

// Text form over the alphabet {U, D}; whitespace is ignored.
class ParseError : public std::invalid_argument
{
public:
    ParseError(std::size_t position, const std::string &what) : std::invalid_argument(what), position_(position) {}

    // 1-based character position.
    std::size_t position() const
    {
        return position_;
    }

private:
    std::size_t position_;
};

std::vector<Step> parse_steps(std::string_view text);
std::string format_steps(std::span<const Step> steps);
inline std::string format_path(const LatticePath &path)
{
    return format_steps(path.steps());
}

} // namespace ktdyck

#endif
