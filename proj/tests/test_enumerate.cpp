#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include <ktdyck/counting.hpp>
#include <ktdyck/enumerate.hpp>

#include "table_data.hpp"

using namespace ktdyck;

namespace
{

// Independent brute force: every placement of n downs among (k+1)n steps, filtered by the floor.
std::vector<std::string> brute_force(int k, int t, int n)
{
    const int len = (k + 1) * n;
    std::vector<std::string> out;
    std::string s(len, 'U');
    std::fill(s.end() - n, s.end(), 'D');
    do {
        long h = 0;
        bool ok = true;
        for (const char c : s) {
            h += c == 'U' ? 1 : -k;
            if (h < -t) {
                ok = false;
                break;
            }
        }
        if (ok && h == 0) {
            out.push_back(s);
        }
    } while (std::next_permutation(s.begin(), s.end(), [](char a, char b) { return a == 'U' && b == 'D'; }));
    std::sort(out.begin(), out.end(), [](const std::string &a, const std::string &b) {
        // U < D lexicographically
        for (std::size_t m = 0; m < a.size(); ++m) {
            if (a[m] != b[m]) {
                return a[m] == 'U';
            }
        }
        return false;
    });
    return out;
}

std::vector<std::string> as_text(const std::vector<LatticePath> &paths)
{
    std::vector<std::string> out;
    for (const auto &p : paths) {
        out.push_back(format_path(p));
    }
    return out;
}

} // namespace

TEST(Enumerate, SmallestNontrivialCase)
{
    EXPECT_EQ(as_text(enumerate_paths(PathParams{2, 0, 2})), (std::vector<std::string>{"UUUUDD", "UUUDUD", "UUDUUD"}));
}

TEST(Enumerate, EmptyPath)
{
    for (int k = 1; k <= 3; ++k) {
        const auto paths = enumerate_paths(PathParams{k, k - 1, 0});
        ASSERT_EQ(paths.size(), 1U);
        EXPECT_TRUE(paths[0].empty());
    }
}

TEST(Enumerate, ProfileFilterFindsFivePaths)
{
    std::vector<std::string> hits;
    for_each_path(PathParams{3, 1, 3}, [&](const LatticePath &p) {
        if (height_profile(p) == Profile({1, 0, 2})) {
            hits.push_back(format_path(p));
        }
    });
    EXPECT_EQ(hits.size(), 5U);
    EXPECT_NE(std::find(hits.begin(), hits.end(), "UUUDUUUUDUUD"), hits.end());
}

TEST(Enumerate, MatchesBruteForceInOrder)
{
    for (int k = 1; k <= 3; ++k) {
        for (int t = 0; t < k; ++t) {
            for (int n = 0; n <= 4; ++n) {
                EXPECT_EQ(as_text(enumerate_paths(PathParams{k, t, n})), brute_force(k, t, n))
                    << "k=" << k << " t=" << t << " n=" << n;
            }
        }
    }
}

TEST(Enumerate, CountsEqualRaney)
{
    for (int k = 1; k <= 4; ++k) {
        for (int t = 0; t < k; ++t) {
            for (int n = 0; n <= 5; ++n) {
                if (k == 4 && n == 5) {
                    continue;
                }
                std::size_t count = 0;
                for_each_path(PathParams{k, t, n}, [&](const LatticePath &) { ++count; });
                EXPECT_EQ(BigInt(count), raney(PathParams{k, t, n})) << k << " " << t << " " << n;
            }
        }
    }
}

TEST(Enumerate, PrefixPartitionsCoverEverything)
{
    const PathParams params{3, 1, 4};
    const auto all = enumerate_paths(params);
    for (std::size_t depth : {0U, 1U, 3U, 6U}) {
        std::vector<LatticePath> joined;
        for (const auto &prefix : feasible_prefixes(params, depth)) {
            PathEnumerator e(params, prefix);
            while (auto p = e.next()) {
                joined.push_back(*p);
            }
        }
        EXPECT_EQ(joined, all) << "depth " << depth;
    }
}

TEST(Enumerate, ParallelMatchesSerial)
{
    for (const PathParams params : {PathParams{2, 1, 5}, PathParams{3, 2, 4}, PathParams{1, 0, 0}}) {
        const auto serial = enumerate_paths(params);
        for (unsigned threads : {1U, 2U, 4U}) {
            EXPECT_EQ(enumerate_paths_parallel(params, threads), serial);
        }
    }
}

TEST(Enumerate, ThreadCountEnvironment)
{
    // The variable caps the hardware count; it never raises it.
    ::setenv("KT_DYCK_THREADS", "1", 1);
    EXPECT_EQ(default_thread_count(), 1U);
    ::setenv("KT_DYCK_THREADS", "3", 1);
    EXPECT_LE(default_thread_count(), 3U);
    ::setenv("KT_DYCK_THREADS", "junk", 1);
    EXPECT_GE(default_thread_count(), 1U);
    ::unsetenv("KT_DYCK_THREADS");
    EXPECT_GE(default_thread_count(), 1U);
}

TEST(Compositions, CountAndOrder)
{
    const auto c = compositions(4, 3);
    EXPECT_EQ(c.size(), 15U);
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
    EXPECT_EQ(std::set<Profile>(c.begin(), c.end()).size(), c.size());
    for (const auto &p : c) {
        EXPECT_EQ(p.total(), 4);
    }
    EXPECT_EQ(compositions(0, 2).size(), 1U);
}

TEST(Oracle, Examples)
{
    EXPECT_EQ(oracle_count_profile(PathParams{3, 1, 3}, Profile({1, 0, 2})), 5);
    EXPECT_EQ(oracle_count_profile(PathParams{3, 0, 4}, Profile({0, 1, 3})), 21);
    EXPECT_EQ(oracle_count_profile(PathParams{2, 0, 0}, Profile::zeros(2)), 1);
}

TEST(Oracle, TableRows)
{
    for (int t = 0; t < 3; ++t) {
        const auto table = oracle_profile_table(PathParams{3, t, 4});
        ASSERT_EQ(table.size(), 15U);
        BigInt sum = 0;
        for (std::size_t col = 0; col < 15; ++col) {
            EXPECT_EQ(table.at(testdata::table_profile(col)), testdata::kTableRows[t][col]) << "t=" << t << " col=" << col;
            sum += testdata::kTableRows[t][col];
        }
        EXPECT_EQ(sum, raney(PathParams{3, t, 4}));
    }
}

TEST(Oracle, SingleStepTable)
{
    const auto table = oracle_profile_table(PathParams{1, 0, 1});
    ASSERT_EQ(table.size(), 1U);
    EXPECT_EQ(table.at(Profile({1})), 1);
}

TEST(Oracle, ThreadedTableMatches)
{
    const PathParams params{3, 2, 4};
    EXPECT_EQ(oracle_profile_table(params, 4), oracle_profile_table(params, 1));
}

TEST(Oracle, RejectsMismatchedProfile)
{
    EXPECT_THROW(oracle_count_profile(PathParams{3, 0, 2}, Profile({1, 1})), std::invalid_argument);
    EXPECT_THROW(oracle_count_profile(PathParams{3, 0, 2}, Profile({1, 1, 1})), std::invalid_argument);
}
