#include "atfkit/markov.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace atf;

namespace {

const MarkovEqn kMarkov = MarkovEqnII{3, {1, 1, 1}};

Triple sorted(Triple t) {
    std::sort(t.begin(), t.end());
    return t;
}

// Direct evaluation of both sides, in machine integers.
bool holds(long long c1, long long c2, long long c3, long long k, long long a, long long b, long long c) {
    return c1 * a * a + c2 * b * b + c3 * c * c == k * a * b * c;
}

}  // namespace

TEST(Markov, SolutionCheck) {
    EXPECT_TRUE(is_solution(kMarkov, {1, 1, 1}));
    EXPECT_TRUE(is_solution(kMarkov, {1, 5, 13}));
    EXPECT_FALSE(is_solution(kMarkov, {1, 2, 3}));
    MarkovEqn one = MarkovEqnI{1, {2, 3, 6}};
    EXPECT_EQ(root_coefficient(std::get<MarkovEqnI>(one)), 6);
    EXPECT_TRUE(is_solution(one, {3, 2, 1}));
}

TEST(Markov, VietaJumpPreservesSolutions) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> slot(1, 3);
    const std::vector<std::pair<MarkovEqn, Triple>> starts{
        {kMarkov, {1, 1, 1}},
        {MarkovEqnII{1, {3, 2, 1}}, {1, 1, 1}},
        {MarkovEqnI{9, {1, 1, 1}}, {1, 1, 1}},
        {MarkovEqnI{1, {2, 3, 6}}, {3, 2, 1}},
        {MarkovEqnI{3, {1, 2, 6}}, {2, 1, 1}},
    };
    int words = 0;
    for (const auto& [eq, seed] : starts) {
        ASSERT_TRUE(is_solution(eq, seed)) << format_equation(eq);
        for (int w = 0; w < 2000; ++w, ++words) {
            Triple t = seed;
            int len = 1 + w % 12;
            for (int i = 0; i < len; ++i) {
                t = mutate_triple(eq, t, slot(rng));
                ASSERT_TRUE(is_solution(eq, t)) << format_equation(eq) << " " << format_triple(t);
            }
        }
    }
    EXPECT_GE(words, 10000);
}

TEST(Markov, MutationIsInvolution) {
    Triple t{2, 5, 29};
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(mutate_triple(kMarkov, mutate_triple(kMarkov, t, i), i), t);
    EXPECT_EQ(mutate_triple(kMarkov, {1, 1, 1}, 3), (Triple{1, 1, 2}));
    EXPECT_THROW(mutate_triple(kMarkov, t, 4), MarkovError);
}

TEST(Markov, TreeMatchesBruteForce) {
    std::set<Triple> brute;
    for (long long a = 1; a < 200; ++a)
        for (long long b = a; b < 200; ++b)
            for (long long c = b; c < 200; ++c)
                if (holds(1, 1, 1, 3, a, b, c)) brute.insert(Triple{a, b, c});
    std::set<Triple> tree;
    for (const auto& t : enumerate_tree(kMarkov, 200)) tree.insert(sorted(t));
    EXPECT_EQ(tree, brute);
}

TEST(Markov, TypeTwoTreeMatchesBruteForce) {
    // 3a^2 + 2b^2 + c^2 = 6abc: slots carry different coefficients, so no symmetry quotient.
    MarkovEqn eq = MarkovEqnII{1, {3, 2, 1}};
    std::set<Triple> brute;
    for (long long a = 1; a < 120; ++a)
        for (long long b = 1; b < 120; ++b)
            for (long long c = 1; c < 120; ++c)
                if (holds(3, 2, 1, 6, a, b, c)) brute.insert(Triple{a, b, c});
    EXPECT_EQ(enumerate_tree(eq, 120), brute);
}

TEST(Markov, DescentIsShortAndUnique) {
    std::size_t longest = 0, checked = 0;
    for (const auto& t : enumerate_tree(kMarkov, 1000000)) {
        if (t[0] + t[1] + t[2] > 1000000) continue;
        Descent d = minimize(kMarkov, t);
        EXPECT_EQ(sorted(d.minimum), (Triple{1, 1, 1}));
        longest = std::max(longest, d.word.size());
        Int sum = t[0] + t[1] + t[2];
        Triple cur = t;
        for (int i : d.word) {
            Triple next = mutate_triple(kMarkov, cur, i);
            EXPECT_LT(next[0] + next[1] + next[2], cur[0] + cur[1] + cur[2]);
            cur = next;
        }
        if (sum > 5) {
            int down = 0;
            for (int i = 1; i <= 3; ++i) {
                Triple u = mutate_triple(kMarkov, t, i);
                if (u[0] + u[1] + u[2] < sum) ++down;
            }
            EXPECT_EQ(down, 1) << format_triple(t);
        }
        ++checked;
    }
    EXPECT_LE(longest, 64u);
    EXPECT_GT(checked, 30u);
}

TEST(Markov, AdmissibilityConstraints) {
    EXPECT_TRUE(admissible(MarkovEqnI{9, {1, 1, 1}}));
    EXPECT_TRUE(admissible(MarkovEqnI{1, {2, 3, 6}}));
    EXPECT_FALSE(admissible(MarkovEqnI{2, {1, 1, 8}}));  // 2*1*1 is not divisible by 8
    EXPECT_FALSE(admissible(MarkovEqnI{7, {1, 1, 3}}));  // 21 is not a square
}

TEST(Markov, ClassificationMatchesBruteForce) {
    std::vector<std::array<long long, 4>> brute;
    for (long long d = 1; d <= 9; ++d)
        for (long long a = 1; a <= 11; ++a)
            for (long long b = a; b <= 11; ++b) {
                long long c = 12 - d - a - b;
                if (c < b) continue;
                long long prod = d * a * b * c, s = 0;
                while (s * s < prod) ++s;
                if (s * s != prod || (d * a * b) % c || (d * a * c) % b || (d * b * c) % a) continue;
                bool found = false;
                for (long long p = 1; p <= 40 && !found; ++p)
                    for (long long q = 1; q <= 40 && !found; ++q)
                        for (long long r = 1; r <= 40 && !found; ++r) found = holds(a, b, c, s, p, q, r);
                if (found) brute.push_back({d, a, b, c});
            }
    std::vector<std::array<long long, 4>> got;
    for (const auto& e : classify_type_I())
        got.push_back({e.d.convert_to<long long>(), e.n[0].convert_to<long long>(), e.n[1].convert_to<long long>(),
                       e.n[2].convert_to<long long>()});
    std::sort(brute.begin(), brute.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, brute);
    EXPECT_EQ(got.size(), 11u);
}

TEST(Markov, ClassificationStableAtLargerSearchBound) {
    auto a = classify_type_I(64), b = classify_type_I(256);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Markov, TypeOneDataFromTypeTwo) {
    // The (1;2,3,6) triangle: 3a^2 + 2b^2 + c^2 = 6abc at (1,1,1) with nodes (2,3,6).
    TypeIData r = derive_type_I_data(MarkovEqnII{1, {3, 2, 1}}, {1, 1, 1}, {2, 3, 6});
    EXPECT_EQ(r.d, Rat(1));
    EXPECT_TRUE(is_solution(MarkovEqnI{1, {2, 3, 6}}, r.pqr));
    TypeIData cp2 = derive_type_I_data(MarkovEqnII{3, {1, 1, 1}}, {1, 2, 5}, {1, 1, 1});
    EXPECT_EQ(cp2.d, Rat(9));
    EXPECT_EQ(cp2.pqr, (Triple{1, 2, 5}));
}

TEST(Markov, TextFormats) {
    EXPECT_EQ(format_equation(parse_equation("II:3,1,1,1")), "II:3,1,1,1");
    EXPECT_EQ(format_equation(parse_equation("I:1,2,3,6")), "I:1,2,3,6");
    EXPECT_EQ(parse_triple("1,13,34"), (Triple{1, 13, 34}));
    EXPECT_EQ(format_triple({2, 5, 29}), "2,5,29");
    EXPECT_THROW(parse_equation("III:1,2,3,4"), MarkovError);
    EXPECT_THROW(parse_triple("1,2"), MarkovError);
}
