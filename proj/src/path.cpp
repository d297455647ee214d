#include <ktdyck/path.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ktdyck
{

void check_params(const PathParams &params)
{
    if (params.k < 1) {
        throw std::invalid_argument("k must be positive, got " + std::to_string(params.k));
    }
    if (params.t < 0 || params.t >= params.k) {
        throw std::invalid_argument("t must satisfy 0 <= t < k, got t=" + std::to_string(params.t)
                                    + " k=" + std::to_string(params.k));
    }
    if (params.n < 0) {
        throw std::invalid_argument("n must be non-negative, got " + std::to_string(params.n));
    }
}

Profile::Profile(std::vector<int> counts) : a_(std::move(counts))
{
    for (const int v : a_) {
        if (v < 0) {
            throw std::invalid_argument("profile entries must be non-negative");
        }
    }
}

int Profile::at(int i) const
{
    if (i < 1 || i > k()) {
        throw std::out_of_range("residue " + std::to_string(i) + " outside 1.." + std::to_string(k()));
    }
    return a_[static_cast<std::size_t>(i - 1)];
}

int &Profile::at(int i)
{
    if (i < 1 || i > k()) {
        throw std::out_of_range("residue " + std::to_string(i) + " outside 1.." + std::to_string(k()));
    }
    return a_[static_cast<std::size_t>(i - 1)];
}

int Profile::total() const
{
    return std::accumulate(a_.begin(), a_.end(), 0);
}

std::string Profile::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(a_[i]);
    }
    return out;
}

Profile Profile::parse(std::string_view text)
{
    std::vector<int> values;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad profile entry '" + item + "'");
        }
        if (used != item.size()) {
            throw std::invalid_argument("bad profile entry '" + item + "'");
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw std::invalid_argument("empty profile");
    }
    return Profile(std::move(values));
}

std::vector<long> prefix_heights(std::span<const Step> steps, int k)
{
    std::vector<long> h(steps.size() + 1, 0);
    for (std::size_t m = 0; m < steps.size(); ++m) {
        h[m + 1] = h[m] + (steps[m] == Step::Up ? 1 : -k);
    }
    return h;
}

LatticePath validate_path(std::vector<Step> steps, const PathParams &params)
{
    check_params(params);
    if (steps.size() != params.length()) {
        throw PathError(PathError::Kind::WrongLength, 0,
                        "path has " + std::to_string(steps.size()) + " steps, expected "
                            + std::to_string(params.length()));
    }
    long height = 0;
    int downs = 0;
    for (std::size_t m = 0; m < steps.size(); ++m) {
        const std::size_t index = m + 1;
        if (steps[m] == Step::Up) {
            height += 1;
            if (static_cast<int>(index) - downs > params.k * params.n) {
                throw PathError(PathError::Kind::WrongStepCount, index,
                                "more than " + std::to_string(params.k * params.n) + " up-steps at step "
                                    + std::to_string(index));
            }
        } else {
            height -= params.k;
            if (++downs > params.n) {
                throw PathError(PathError::Kind::WrongStepCount, index,
                                "more than " + std::to_string(params.n) + " down-steps at step "
                                    + std::to_string(index));
            }
        }
        if (height < -params.t) {
            throw PathError(PathError::Kind::BelowFloor, index,
                            "height " + std::to_string(height) + " below -" + std::to_string(params.t)
                                + " at step " + std::to_string(index));
        }
    }
    if (height != 0) {
        throw PathError(PathError::Kind::NonzeroEnd, steps.size(),
                        "path ends at height " + std::to_string(height));
    }
    return LatticePath(params, std::move(steps));
}

std::vector<long> LatticePath::heights() const
{
    return prefix_heights(steps_, params_.k);
}

Profile height_profile(const LatticePath &path)
{
    Profile profile = Profile::zeros(path.k());
    long height = 0;
    for (const Step s : path.steps()) {
        if (s == Step::Up) {
            ++height;
        } else {
            height -= path.k();
            ++profile.at(residue(height, path.k()));
        }
    }
    return profile;
}

std::vector<std::size_t> weak_rtl_minima(const LatticePath &path)
{
    const auto h = path.heights();
    std::vector<std::size_t> out;
    // Walk right to left keeping the minimum over all points strictly to the right.
    long later_min = h.back();
    for (std::size_t m = path.size(); m >= 1; --m) {
        if (path.step(m) == Step::Down && h[m] <= later_min) {
            out.push_back(m);
        }
        later_min = std::min(later_min, h[m]);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Segment> decompose(const LatticePath &path)
{
    const int k = path.k();
    if (path.t() != k - 1) {
        throw std::invalid_argument("decompose requires t = k - 1");
    }
    const auto h = path.heights();
    const auto steps = path.steps();

    // Cut points: the first return to height 0 at or after each minimum.
    std::vector<std::size_t> cuts;
    for (const std::size_t m : weak_rtl_minima(path)) {
        std::size_t r = m;
        while (h[r] != 0) {
            ++r;
        }
        if (cuts.empty() || cuts.back() != r) {
            cuts.push_back(r);
        }
    }

    std::vector<Segment> segments;
    std::size_t start = 0;
    for (const std::size_t end : cuts) {
        std::size_t down = end;
        while (steps[down - 1] != Step::Down) {
            --down;
        }
        Segment seg;
        seg.j = static_cast<int>(k + h[down]);
        seg.trailing_ups = static_cast<int>(end - down);
        if (seg.j < 1 || seg.j > k || seg.trailing_ups != k - seg.j || down < start + 1 + seg.j) {
            throw std::logic_error("malformed segment ending at step " + std::to_string(end));
        }
        for (int u = 0; u < seg.j; ++u) {
            if (steps[start + static_cast<std::size_t>(u)] != Step::Up) {
                throw std::logic_error("segment does not open with " + std::to_string(seg.j) + " up-steps");
            }
        }
        std::vector<Step> inner(steps.begin() + static_cast<std::ptrdiff_t>(start + seg.j),
                                steps.begin() + static_cast<std::ptrdiff_t>(down - 1));
        const auto inner_downs = static_cast<int>(std::count(inner.begin(), inner.end(), Step::Down));
        try {
            seg.inner = validate_path(std::move(inner), PathParams{k, k - 1, inner_downs});
        } catch (const PathError &e) {
            throw std::logic_error(std::string("inner path of segment is invalid: ") + e.what());
        }
        segments.push_back(std::move(seg));
        start = end;
    }
    if (start != path.size()) {
        throw std::logic_error("decomposition does not cover the path");
    }
    return segments;
}

LatticePath reassemble(std::span<const Segment> segments, int k)
{
    std::vector<Step> steps;
    int n = 0;
    for (const auto &seg : segments) {
        steps.insert(steps.end(), static_cast<std::size_t>(seg.j), Step::Up);
        steps.insert(steps.end(), seg.inner.steps().begin(), seg.inner.steps().end());
        steps.push_back(Step::Down);
        steps.insert(steps.end(), static_cast<std::size_t>(seg.trailing_ups), Step::Up);
        n += seg.inner.n() + 1;
    }
    return validate_path(std::move(steps), PathParams{k, k - 1, n});
}

std::vector<Step> parse_steps(std::string_view text)
{
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == 'U') {
            steps.push_back(Step::Up);
        } else if (c == 'D') {
            steps.push_back(Step::Down);
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw ParseError(i + 1, std::string("unexpected character '") + c + "' at position "
                                        + std::to_string(i + 1));
        }
    }
    return steps;
}

std::string format_steps(std::span<const Step> steps)
{
    std::string out;
    out.reserve(steps.size());
    for (const Step s : steps) {
        out += (s == Step::Up ? 'U' : 'D');
    }
    return out;
}

} // namespace ktdyck
