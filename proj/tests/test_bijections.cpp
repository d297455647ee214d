#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include <ktdyck/bijections.hpp>
#include <ktdyck/enumerate.hpp>

using namespace ktdyck;

namespace
{

LatticePath P(const char *text, int k, int t)
{
    const auto steps = parse_steps(text);
    const int n = static_cast<int>(std::count(steps.begin(), steps.end(), Step::Down));
    return validate_path(steps, PathParams{k, t, n});
}

DyckPath D(const char *text)
{
    return DyckPath::from_steps(parse_steps(text));
}

std::vector<LatticePath> with_profile(const PathParams &params, const Profile &profile)
{
    std::vector<LatticePath> out;
    for_each_path(params, [&](const LatticePath &p) {
        if (height_profile(p) == profile) {
            out.push_back(p);
        }
    });
    return out;
}

Profile two_part(int a, int b)
{
    return Profile({a, b});
}

// (n choose r) by the multiplicative formula on 64-bit integers; fine for the sizes used here.
long small_binomial(long n, long r)
{
    long out = 1;
    for (long m = 1; m <= r; ++m) {
        out = out * (n - r + m) / m;
    }
    return out;
}

} // namespace

TEST(DyckBasics, Validation)
{
    EXPECT_NO_THROW(D("UUDD"));
    EXPECT_THROW(D("UDDU"), std::invalid_argument);
    EXPECT_THROW(D("UUD"), std::invalid_argument);
    EXPECT_EQ(enumerate_dyck(4).size(), 14U);
    EXPECT_EQ(enumerate_dyck(0).size(), 1U);
}

TEST(DyckBasics, PeaksAndValleys)
{
    const auto d = D("UUDUDDUD");
    EXPECT_EQ(peaks(d), (std::vector<std::size_t>{3, 5, 8}));
    EXPECT_EQ(valleys(d), (std::vector<std::size_t>{3, 6}));
}

TEST(ValleyIndexSum, Examples)
{
    EXPECT_EQ(valley_index_sum(D("UUDUDDUD")), 9U);
    EXPECT_EQ(valley_index_sum(D("UUDD")), 0U);
    std::size_t sum = 0;
    for (const auto &d : enumerate_dyck(3)) {
        sum += valley_index_sum(d);
    }
    EXPECT_EQ(sum, 15U);
}

TEST(ShiftExchange, ResiduesThreeAndTwo)
{
    const auto p = P("UDUUUUUDUUDU", 3, 2);
    EXPECT_EQ(format_path(shift_exchange(p, 3, 2)), "UDUUUUDUUUUD");
}

TEST(ShiftExchange, EmptyResiduesAreIdentity)
{
    const auto p = P("UUUD", 3, 2);
    ASSERT_EQ(height_profile(p), Profile({0, 0, 1}));
    EXPECT_EQ(shift_exchange(p, 1, 2), p);
    EXPECT_EQ(shift_exchange(p, 2, 2), p);
}

TEST(ShiftExchange, Errors)
{
    EXPECT_THROW(shift_exchange(P("UUUD", 3, 0), 1, 2), BijectionError);
    EXPECT_THROW(shift_exchange(P("UUUD", 3, 2), 0, 2), BijectionError);
}

TEST(ShiftExchange, ExhaustiveTranspositionAndInvolution)
{
    for (int k = 1; k <= 3; ++k) {
        for (int n = 0; n <= 5; ++n) {
            const PathParams params{k, k - 1, n};
            const auto all = enumerate_paths(params);
            for (int i = 1; i <= k; ++i) {
                for (int j = 1; j <= k; ++j) {
                    std::set<LatticePath> image;
                    for (const auto &p : all) {
                        const auto q = shift_exchange(p, i, j);
                        auto want = height_profile(p);
                        std::swap(want.at(i), want.at(j));
                        ASSERT_EQ(height_profile(q), want) << format_path(p);
                        ASSERT_EQ(shift_exchange(q, i, j), p) << format_path(p);
                        image.insert(q);
                    }
                    EXPECT_EQ(image.size(), all.size());
                }
            }
        }
    }
}

TEST(Lift, Examples)
{
    const auto up = lift(P("UD", 1, 0));
    EXPECT_EQ(format_path(up), "UUD");
    EXPECT_EQ(up.k(), 2);
    EXPECT_EQ(height_profile(up), Profile({0, 1}));

    EXPECT_TRUE(lift(validate_path({}, PathParams{2, 1, 0})).empty());

    const auto big = lift(P("UDUUUD", 2, 1));
    EXPECT_EQ(format_path(big), "UUDUUUUD");
    EXPECT_EQ(big.params(), (PathParams{3, 1, 2}));
    EXPECT_EQ(height_profile(big), Profile({0, 1, 1}));

    EXPECT_EQ(lower(big), P("UDUUUD", 2, 1));
    EXPECT_EQ(lower(up), P("UD", 1, 0));
}

TEST(Lift, Errors)
{
    EXPECT_THROW(lower(P("UUUUDUUD", 3, 0)), BijectionError); // a_1 = 1
    EXPECT_THROW(lower(P("UUD", 2, 1)), BijectionError);   // t = k after lowering
}

TEST(Lift, ExhaustiveBijection)
{
    for (int k = 1; k <= 3; ++k) {
        for (int t = 0; t < k; ++t) {
            for (int n = 0; n <= (k == 3 ? 4 : 5); ++n) {
                std::set<LatticePath> image;
                for_each_path(PathParams{k, t, n}, [&](const LatticePath &p) {
                    const auto q = lift(p);
                    std::vector<int> want = {0};
                    for (int i = 1; i <= k; ++i) {
                        want.push_back(height_profile(p).at(i));
                    }
                    ASSERT_EQ(height_profile(q), Profile(want));
                    ASSERT_EQ(lower(q), p);
                    image.insert(q);
                });
                std::set<LatticePath> target;
                for_each_path(PathParams{k + 1, t, n}, [&](const LatticePath &q) {
                    if (height_profile(q).at(1) == 0) {
                        target.insert(q);
                        ASSERT_EQ(lift(lower(q)), q);
                    }
                });
                EXPECT_EQ(image, target);
            }
        }
    }
}

TEST(PeakBijection, Examples)
{
    const auto m = to_marked_peak(P("UDUUUUUDDUUD", 2, 1));
    EXPECT_EQ(format_steps(m.base.steps()), "UDUUDDUD");
    EXPECT_EQ(m.kind, MarkKind::Peak);
    EXPECT_EQ(m.mark_pos, 2U);

    const auto one = to_marked_peak(P("UDU", 2, 1));
    EXPECT_EQ(format_steps(one.base.steps()), "UD");
    EXPECT_EQ(one.mark_pos, 2U);
    EXPECT_EQ(from_marked_peak(one), P("UDU", 2, 1));
}

TEST(PeakBijection, WrongProfileRejected)
{
    EXPECT_THROW(to_marked_peak(P("UUD", 2, 1)), BijectionError);
}

TEST(PeakBijection, Exhaustive)
{
    for (int n = 1; n <= 7; ++n) {
        std::set<MarkedDyck> target;
        for (const auto &d : enumerate_dyck(n)) {
            for (const auto p : peaks(d)) {
                target.insert(MarkedDyck{d, MarkKind::Peak, p});
            }
        }
        std::set<MarkedDyck> image;
        for (const auto &p : with_profile(PathParams{2, 1, n}, two_part(1, n - 1))) {
            const auto m = to_marked_peak(p);
            ASSERT_EQ(from_marked_peak(m), p);
            image.insert(m);
        }
        EXPECT_EQ(image, target) << n;
        for (const auto &m : target) {
            ASSERT_EQ(to_marked_peak(from_marked_peak(m)), m);
        }
        // A001700 shifted: C(2n-1, n).
        EXPECT_EQ(static_cast<long>(target.size()), small_binomial(2 * n - 1, n));
    }
}

TEST(ValleyBijection, InverseOfSmallestCase)
{
    const MarkedDyck m{D("UDUD"), MarkKind::Valley, 2};
    const auto p = from_marked_valley(m);
    EXPECT_EQ(p.params(), (PathParams{2, 0, 2}));
    EXPECT_EQ(height_profile(p), two_part(1, 1));
    EXPECT_EQ(to_marked_valley(p), m);
}

TEST(ValleyBijection, Exhaustive)
{
    for (int n = 1; n <= 7; ++n) {
        std::set<MarkedDyck> target;
        for (const auto &d : enumerate_dyck(n)) {
            for (const auto v : valleys(d)) {
                target.insert(MarkedDyck{d, MarkKind::Valley, v});
            }
        }
        std::set<MarkedDyck> image;
        for (const auto &p : with_profile(PathParams{2, 0, n}, two_part(1, n - 1))) {
            const auto m = to_marked_valley(p);
            ASSERT_EQ(from_marked_valley(m), p);
            image.insert(m);
        }
        EXPECT_EQ(image, target) << n;
        for (const auto &m : target) {
            ASSERT_EQ(to_marked_valley(from_marked_valley(m)), m);
        }
    }
    EXPECT_EQ(with_profile(PathParams{2, 0, 3}, two_part(1, 2)).size(), 5U);
}

TEST(CatalanBijection, Examples)
{
    EXPECT_EQ(to_catalan(P("UUD", 2, 0)).size(), 0U);
    EXPECT_EQ(from_catalan(DyckPath{}), P("UUD", 2, 0));
    const auto n2 = with_profile(PathParams{2, 0, 2}, two_part(1, 1));
    ASSERT_EQ(n2.size(), 1U);
    EXPECT_EQ(format_steps(to_catalan(n2[0]).steps()), "UD");
}

TEST(CatalanBijection, Exhaustive)
{
    const std::vector<std::size_t> catalan = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 1; n <= 7; ++n) {
        std::set<DyckPath> image;
        for (const auto &p : with_profile(PathParams{2, 0, n}, two_part(n - 1, 1))) {
            const auto d = to_catalan(p);
            ASSERT_EQ(d.semilength(), n - 1);
            ASSERT_EQ(from_catalan(d), p);
            image.insert(d);
        }
        const auto all = enumerate_dyck(n - 1);
        EXPECT_EQ(image, std::set<DyckPath>(all.begin(), all.end()));
        EXPECT_EQ(image.size(), catalan[n - 1]);
    }
}

TEST(DoubleMarked, OneExamplePerCase)
{
    const auto p5 = P("UUUUUUDDUDUUDUD", 2, 0);
    EXPECT_EQ(classify_double_marked(p5), DoubleMarkedCase::Separated);
    const auto m5 = to_double_marked(p5);
    EXPECT_EQ(format_steps(m5.base.steps()), "UUUDDDUD");
    EXPECT_EQ(m5.valley_pos, 6U);
    EXPECT_EQ(m5.step_mark, 5U);
    EXPECT_EQ(from_double_marked(m5), p5);

    const auto p6 = P("UUUUUUDUDDUDUUD", 2, 0);
    EXPECT_EQ(classify_double_marked(p6), DoubleMarkedCase::AdjacentNoReturn);
    const auto m6 = to_double_marked(p6);
    EXPECT_EQ(format_steps(m6.base.steps()), "UUDDUDUD");
    EXPECT_EQ(m6.valley_pos, 4U);
    EXPECT_EQ(m6.step_mark, 4U);
    EXPECT_EQ(from_double_marked(m6), p6);

    const auto p7 = P("UUDUUDUUUUUDDUD", 2, 0);
    EXPECT_EQ(classify_double_marked(p7), DoubleMarkedCase::AdjacentWithReturn);
    const auto m7 = to_double_marked(p7);
    EXPECT_EQ(format_steps(m7.base.steps()), "UDUDUDUD");
    EXPECT_EQ(m7.valley_pos, 6U);
    EXPECT_EQ(m7.step_mark, 4U);
    EXPECT_EQ(from_double_marked(m7), p7);
}

TEST(DoubleMarked, InvariantChecks)
{
    EXPECT_THROW((DoubleMarkedDyck{D("UDUD"), 3, 1}).check(), std::invalid_argument);
    EXPECT_THROW((DoubleMarkedDyck{D("UDUD"), 2, 3}).check(), std::invalid_argument);
    EXPECT_NO_THROW((DoubleMarkedDyck{D("UDUD"), 2, 2}).check());
}

TEST(DoubleMarked, EnumerationSizes)
{
    EXPECT_EQ(enumerate_double_marked(2).size(), 0U);
    EXPECT_EQ(enumerate_double_marked(4).size(), 15U);
    for (int n = 2; n <= 8; ++n) {
        std::size_t by_sum = 0;
        for (const auto &d : enumerate_dyck(n - 1)) {
            by_sum += valley_index_sum(d);
        }
        const long closed = (n - 2) * small_binomial(2 * n - 2, n) / 2;
        EXPECT_EQ(enumerate_double_marked(n).size(), by_sum);
        EXPECT_EQ(static_cast<long>(by_sum), closed) << n;
    }
    EXPECT_EQ(enumerate_double_marked(5).size(), 84U);
}

TEST(DoubleMarked, ExhaustiveRoundTripAndCases)
{
    for (int n = 2; n <= 8; ++n) {
        const auto domain = with_profile(PathParams{2, 0, n}, two_part(2, n - 2));
        std::map<DoubleMarkedCase, std::set<DoubleMarkedDyck>> by_case;
        std::set<DoubleMarkedDyck> image;
        for (const auto &p : domain) {
            const auto c = classify_double_marked(p);
            const auto m = to_double_marked(p);
            ASSERT_NO_THROW(m.check());
            ASSERT_EQ(from_double_marked(m), p) << format_path(p);
            by_case[c].insert(m);
            image.insert(m);
        }
        std::size_t sum = 0;
        for (const auto &[c, s] : by_case) {
            sum += s.size();
        }
        // Pairwise disjoint images.
        EXPECT_EQ(sum, image.size());
        EXPECT_EQ(image.size(), domain.size());

        const auto all = enumerate_double_marked(n);
        EXPECT_EQ(image, std::set<DoubleMarkedDyck>(all.begin(), all.end())) << n;
        for (const auto &m : all) {
            ASSERT_EQ(to_double_marked(from_double_marked(m)), m);
        }
    }
}
