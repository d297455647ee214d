#ifndef KTDYCK_ENUMERATE_HPP
#define KTDYCK_ENUMERATE_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <ktdyck/path.hpp>
#include <ktdyck/types.hpp>

namespace ktdyck
{

/// Streams every k_t-Dyck path with the given parameters in lexicographic
/// order (U < D), optionally restricted to paths starting with a fixed prefix.
///
/// Backtracking keeps each prefix completable: the height never drops below
/// -t and neither step budget is exceeded. Any such prefix completes by
/// appending the remaining ups and then the remaining downs, which is also
/// the lexicographically smallest completion.
class PathEnumerator
{
public:
    explicit PathEnumerator(PathParams params, std::vector<Step> prefix = {});

    std::optional<LatticePath> next();

private:
    bool prefix_feasible() const;
    void complete_from(std::size_t pos);

    PathParams params_;
    std::size_t fixed_ = 0;
    std::vector<Step> steps_;
    std::vector<long> heights_;
    bool started_ = false;
    bool done_ = false;
};

void for_each_path(const PathParams &params, const std::function<void(const LatticePath &)> &visit);

std::vector<LatticePath> enumerate_paths(const PathParams &params);

// Every completable prefix of the given length, in lexicographic order.
// Concatenating the enumerations under each prefix reproduces enumerate_paths().
std::vector<std::vector<Step>> feasible_prefixes(const PathParams &params, std::size_t depth);

// Thread cap from KT_DYCK_THREADS, else the hardware concurrency (at least 1).
unsigned default_thread_count();

// Same sequence as enumerate_paths(), built from disjoint prefix partitions on worker threads.
std::vector<LatticePath> enumerate_paths_parallel(const PathParams &params, unsigned threads);

using ProfileTable = std::map<Profile, BigInt>;

// All compositions of n into k non-negative parts, lexicographically ordered.
std::vector<Profile> compositions(int n, int k);

BigInt oracle_count_profile(const PathParams &params, const Profile &profile);

// One entry per composition of n into k parts, zero counts included.
ProfileTable oracle_profile_table(const PathParams &params, unsigned threads = 1);

} // namespace ktdyck

#endif
