#include <ktdyck/enumerate.hpp>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace ktdyck
{

PathEnumerator::PathEnumerator(PathParams params, std::vector<Step> prefix)
    : params_(params), fixed_(prefix.size()), steps_(std::move(prefix))
{
    check_params(params_);
    if (fixed_ > params_.length()) {
        done_ = true;
    }
}

bool PathEnumerator::prefix_feasible() const
{
    long h = 0;
    int downs = 0;
    for (std::size_t m = 0; m < fixed_; ++m) {
        if (steps_[m] == Step::Up) {
            ++h;
        } else {
            h -= params_.k;
            ++downs;
        }
        const auto ups = static_cast<int>(m + 1) - downs;
        if (h < -params_.t || downs > params_.n || ups > params_.k * params_.n) {
            return false;
        }
    }
    return true;
}

// Fills positions [pos, length) with the remaining ups followed by the remaining downs.
void PathEnumerator::complete_from(std::size_t pos)
{
    const long downs_before = (static_cast<long>(pos) - heights_[pos]) / (params_.k + 1);
    const long ups_before = static_cast<long>(pos) - downs_before;
    const long ups_left = static_cast<long>(params_.k) * params_.n - ups_before;
    steps_.resize(pos);
    steps_.insert(steps_.end(), static_cast<std::size_t>(ups_left), Step::Up);
    steps_.resize(params_.length(), Step::Down);
    for (std::size_t m = pos; m < steps_.size(); ++m) {
        heights_[m + 1] = heights_[m] + (steps_[m] == Step::Up ? 1 : -params_.k);
    }
}

std::optional<LatticePath> PathEnumerator::next()
{
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
        if (!prefix_feasible()) {
            done_ = true;
            return std::nullopt;
        }
        heights_ = prefix_heights(std::span<const Step>(steps_.data(), fixed_), params_.k);
        heights_.resize(params_.length() + 1, 0);
        complete_from(fixed_);
        return validate_path(steps_, params_);
    }
    // Rightmost free UP that can become a DOWN.
    for (std::size_t pos = params_.length(); pos-- > fixed_;) {
        if (steps_[pos] != Step::Up) {
            continue;
        }
        const long downs_before = (static_cast<long>(pos) - heights_[pos]) / (params_.k + 1);
        if (downs_before + 1 > params_.n || heights_[pos] - params_.k < -params_.t) {
            continue;
        }
        steps_[pos] = Step::Down;
        heights_[pos + 1] = heights_[pos] - params_.k;
        complete_from(pos + 1);
        return validate_path(steps_, params_);
    }
    done_ = true;
    return std::nullopt;
}

void for_each_path(const PathParams &params, const std::function<void(const LatticePath &)> &visit)
{
    PathEnumerator e(params);
    while (auto p = e.next()) {
        visit(*p);
    }
}

std::vector<LatticePath> enumerate_paths(const PathParams &params)
{
    std::vector<LatticePath> out;
    for_each_path(params, [&](const LatticePath &p) { out.push_back(p); });
    return out;
}

std::vector<std::vector<Step>> feasible_prefixes(const PathParams &params, std::size_t depth)
{
    check_params(params);
    depth = std::min(depth, params.length());
    std::vector<std::vector<Step>> out;
    std::vector<Step> cur;
    // Depth-first, U before D, so the output is lexicographic.
    const std::function<void(long, int)> grow = [&](long h, int downs) {
        if (cur.size() == depth) {
            out.push_back(cur);
            return;
        }
        const int ups = static_cast<int>(cur.size()) - downs;
        if (ups + 1 <= params.k * params.n) {
            cur.push_back(Step::Up);
            grow(h + 1, downs);
            cur.pop_back();
        }
        if (downs + 1 <= params.n && h - params.k >= -params.t) {
            cur.push_back(Step::Down);
            grow(h - params.k, downs + 1);
            cur.pop_back();
        }
    };
    grow(0, 0);
    return out;
}

unsigned default_thread_count()
{
    unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("KT_DYCK_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) {
                hw = std::min(hw, static_cast<unsigned>(cap));
            }
        } catch (const std::exception &) {
            // Unparseable values are ignored.
        }
    }
    return hw;
}

namespace
{

// Runs work(i) for i in [0, count) on up to `threads` workers, striding the indices.
template <typename Work>
void run_striped(std::size_t count, unsigned threads, Work work)
{
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            work(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += threads) {
                work(i);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
}

std::size_t partition_depth(const PathParams &params)
{
    return std::min<std::size_t>(params.length(), 8);
}

} // namespace

std::vector<LatticePath> enumerate_paths_parallel(const PathParams &params, unsigned threads)
{
    const auto prefixes = feasible_prefixes(params, partition_depth(params));
    std::vector<std::vector<LatticePath>> parts(prefixes.size());
    run_striped(prefixes.size(), threads, [&](std::size_t i) {
        PathEnumerator e(params, prefixes[i]);
        while (auto p = e.next()) {
            parts[i].push_back(std::move(*p));
        }
    });
    std::vector<LatticePath> out;
    for (auto &part : parts) {
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<Profile> compositions(int n, int k)
{
    if (k < 1 || n < 0) {
        throw std::invalid_argument("compositions need k >= 1 and n >= 0");
    }
    std::vector<Profile> out;
    std::vector<int> parts(static_cast<std::size_t>(k), 0);
    const std::function<void(std::size_t, int)> fill = [&](std::size_t idx, int left) {
        if (idx + 1 == parts.size()) {
            parts[idx] = left;
            out.emplace_back(parts);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            parts[idx] = v;
            fill(idx + 1, left - v);
        }
    };
    fill(0, n);
    return out;
}

BigInt oracle_count_profile(const PathParams &params, const Profile &profile)
{
    if (profile.k() != params.k || profile.total() != params.n) {
        throw std::invalid_argument("profile " + profile.to_string() + " does not match k="
                                    + std::to_string(params.k) + ", n=" + std::to_string(params.n));
    }
    BigInt count = 0;
    for_each_path(params, [&](const LatticePath &p) {
        if (height_profile(p) == profile) {
            ++count;
        }
    });
    return count;
}

ProfileTable oracle_profile_table(const PathParams &params, unsigned threads)
{
    const auto prefixes = feasible_prefixes(params, partition_depth(params));
    std::vector<std::map<Profile, unsigned long long>> partial(prefixes.size());
    run_striped(prefixes.size(), threads, [&](std::size_t i) {
        PathEnumerator e(params, prefixes[i]);
        while (auto p = e.next()) {
            ++partial[i][height_profile(*p)];
        }
    });
    ProfileTable table;
    for (const auto &c : compositions(params.n, params.k)) {
        table.emplace(c, 0);
    }
    for (const auto &part : partial) {
        for (const auto &[profile, count] : part) {
            table.at(profile) += count;
        }
    }
    return table;
}

} // namespace ktdyck
