#include <gtest/gtest.h>

#include <set>

#include "planarfill/families.hpp"
#include "planarfill/solver.hpp"

using namespace planarfill;

namespace {

// Reference expansion by the textbook recursion: for x = p/q > 1,
// x = a - 1/x' with a = floor(x) + 1, stopping when x is an integer.
std::vector<long long> reference_cf(long long p, long long q) {
    std::vector<long long> e;
    while (true) {
        if (p % q == 0) {
            e.push_back(p / q);
            return e;
        }
        long long a = p / q + 1;
        e.push_back(a);
        long long np = q, nq = a * q - p;  // x' = 1/(a - x) = q / (a q - p)
        p = np;
        q = nq;
    }
}

}  // namespace

TEST(Rational, NormalizesAndParses) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, -3), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("-2"), Rational(-2));
    EXPECT_EQ(Rational(3, 4).str(), "3/4");
    EXPECT_THROW(Rational::parse("1/0"), DomainError);
    EXPECT_THROW(Rational::parse("a/2"), DomainError);
    EXPECT_THROW(Rational::parse("1/2x"), DomainError);
    EXPECT_THROW(Rational::parse(""), DomainError);
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(ContinuedFraction, KnownValues) {
    EXPECT_EQ(neg_continued_fraction(Rational(1, 2)), CFExpansion({2}));
    EXPECT_EQ(neg_continued_fraction(Rational(1, 3)), CFExpansion({3}));
    EXPECT_EQ(neg_continued_fraction(Rational(2, 5)), CFExpansion({3, 2}));
    EXPECT_EQ(neg_continued_fraction(Rational(3, 4)), CFExpansion({2, 2, 2}));
    EXPECT_EQ(neg_continued_fraction(Rational(2, 3)), CFExpansion({2, 2}));
    EXPECT_EQ(eval_cf(CFExpansion({2, 2, 2})), Rational(-4, 3));
    EXPECT_EQ(eval_cf(CFExpansion({3, 2})), Rational(-5, 2));
}

TEST(ContinuedFraction, DomainErrors) {
    EXPECT_THROW(neg_continued_fraction(Rational(0)), DomainError);
    EXPECT_THROW(neg_continued_fraction(Rational(1)), DomainError);
    EXPECT_THROW(neg_continued_fraction(Rational(3, 2)), DomainError);
    EXPECT_THROW(CFExpansion({2, 1}), DomainError);
    EXPECT_THROW(CFExpansion(std::vector<long long>{}), DomainError);
}

TEST(ContinuedFraction, RoundTrip) {
    for (long long b = 2; b <= 50; ++b)
        for (long long a = 1; a < b; ++a) {
            Rational r(a, b);
            auto cf = neg_continued_fraction(r);
            EXPECT_EQ(eval_cf(cf), Rational(-1) / r) << r;
            EXPECT_EQ(cf.entries, reference_cf(r.den(), r.num())) << r;
        }
}

TEST(ContinuedFraction, LeadingTwos) {
    EXPECT_EQ(neg_continued_fraction(Rational(3, 4)).leading_twos(), 3u);
    EXPECT_EQ(neg_continued_fraction(Rational(2, 5)).leading_twos(), 0u);
    // (p-1)/p expands to p-1 twos
    for (long long p = 2; p <= 12; ++p) EXPECT_EQ(neg_continued_fraction(Rational(p - 1, p)).leading_twos(), static_cast<std::size_t>(p - 1));
}

TEST(LensWord, Shape) {
    auto lw = lens_word(5, 2);
    const auto& tw = lw.word.twists();
    EXPECT_EQ(lw.word.holes(), 4);
    ASSERT_EQ(tw.size(), 5u);
    EXPECT_EQ(tw.front().set, (HoleSet{0, 1}));
    EXPECT_EQ(tw.back().set, (HoleSet{1, 2, 3}));
    EXPECT_TRUE(lw.word.all_positive());
    EXPECT_EQ(lw.labels.size(), 4u);
    EXPECT_THROW(lens_word(2, 1), DomainError);
    EXPECT_THROW(lens_word(5, 4), DomainError);
    EXPECT_THROW(lens_word(5, 0), DomainError);
}

TEST(LensWord, ImageAroundHoleK) {
    for (int p = 4; p <= 10; ++p)
        for (int k = 1; k <= p - 2; ++k) {
            auto img = abelianize(lens_word(p, k).word);
            const int n = p - 1;
            const Hole hk = k - 1;
            for (Hole i = 0; i < n; ++i) {
                if (i == hk) continue;
                EXPECT_EQ(img.pair(i, hk), 1) << p << "," << k << " i=" << i;
            }
            EXPECT_EQ(img.single(hk), -(n - 3)) << p << "," << k;
        }
}

TEST(SeifertParams, Derived) {
    SeifertParams sp{Rational(2, 3), Rational(1, 2), Rational(1, 4)};
    EXPECT_EQ(sp.k1(), 2);
    EXPECT_EQ(sp.k2(), 1);
    EXPECT_EQ(sp.c1(), 4);
    EXPECT_EQ(sp.n1(), 2);
    EXPECT_EQ(sp.n3(), 1);
    SeifertParams tail{Rational(3, 5), Rational(1, 2), Rational(2, 5)};
    EXPECT_EQ(tail.cf1(), CFExpansion({2, 3}));
    EXPECT_EQ(tail.k1(), 1);
    EXPECT_EQ(tail.n1(), 2);
    EXPECT_EQ(tail.c1(), 3);
    EXPECT_EQ(tail.n3(), 2);
}

TEST(SeifertWord, DomainChecked) {
    EXPECT_THROW(seifert_word({Rational(1, 3), Rational(1, 2), Rational(1, 2)}), DomainError);
    EXPECT_THROW(seifert_word({Rational(1, 2), Rational(1), Rational(1, 2)}), DomainError);
    EXPECT_THROW(seifert_word({Rational(1, 2), Rational(1, 2), Rational(0)}), DomainError);
    EXPECT_THROW(fillability_predicate({Rational(1, 2), Rational(1, 2), Rational(3, 2)}), DomainError);
}

TEST(SeifertWord, HalfHalfOneOverP) {
    for (int p = 2; p <= 8; ++p) {
        auto lw = seifert_word({Rational(1, 2), Rational(1, 2), Rational(1, p)});
        EXPECT_EQ(lw.word.holes(), 2 + p);
        EXPECT_FALSE(lw.labels.count("w1"));
        EXPECT_FALSE(lw.labels.count("w2"));
        auto img = abelianize(lw.word);
        // bound 2 at every hole
        for (Hole q = 0; q < img.holes(); ++q) EXPECT_EQ(target_bound(img, q), 2) << "p=" << p << " q=" << q;
        // no boundary twist at t
        for (const auto& t : lw.word.twists()) {
            if (!t.is_boundary()) continue;
            EXPECT_NE(t.set[0], lw.labels.at("t"));
        }
    }
}

TEST(SeifertWord, LabelsAreInjectiveAndTotal) {
    auto lw = seifert_word({Rational(3, 5), Rational(3, 5), Rational(2, 7)});
    std::set<Hole> used;
    for (const auto& [name, h] : lw.labels) EXPECT_TRUE(used.insert(h).second) << name;
    EXPECT_EQ(used.size(), static_cast<std::size_t>(lw.word.holes()));
    EXPECT_TRUE(lw.labels.count("w1"));
}

TEST(SeifertWord, TwistHoleBoundGeneral) {
    // twists through t: n1 + n2 + n3 positive, one negative, no boundary twist
    for (auto r1 : {Rational(1, 2), Rational(3, 5), Rational(2, 3), Rational(4, 7)})
        for (auto r2 : {Rational(1, 2), Rational(5, 8)})
            for (auto r3 : {Rational(1, 3), Rational(2, 5), Rational(3, 7)}) {
                SeifertParams sp{r1, r2, r3};
                auto lw = seifert_word(sp);
                auto img = abelianize(lw.word);
                EXPECT_EQ(target_bound(img, lw.labels.at("t")), sp.n1() + sp.n2() + sp.n3() - 1);
                EXPECT_EQ(hole_bound(lw.word, lw.labels.at("t")).bound, sp.n1() + sp.n2() + sp.n3() - 1);
            }
}

TEST(SeifertWord, P2LanternConfigurationIsASolution) {
    auto lw = seifert_word({Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    const auto& l = lw.labels;
    const Hole q1 = l.at("q1"), q2 = l.at("q2"), t = l.at("t"), s1 = l.at("s1");
    std::vector<long long> boundary(4, 0);
    boundary[static_cast<std::size_t>(q1)] = 1;
    auto lantern = make_factorization(4, {HoleSet{t, q1, s1}, HoleSet{q2, s1}, HoleSet{t, q2}}, boundary);
    EXPECT_EQ(lantern.image(), abelianize(lw.word));
}

TEST(Predicate, Values) {
    EXPECT_EQ(fillability_predicate({Rational(1, 2), Rational(1, 2), Rational(1, 2)}), FillabilityVerdict::AllFillable);
    EXPECT_EQ(fillability_predicate({Rational(1, 2), Rational(1, 2), Rational(1, 3)}), FillabilityVerdict::NonfillableExists);
    EXPECT_EQ(fillability_predicate({Rational(2, 3), Rational(1, 2), Rational(1, 4)}), FillabilityVerdict::NonfillableExists);
    EXPECT_EQ(fillability_predicate({Rational(3, 4), Rational(1, 2), Rational(1, 4)}), FillabilityVerdict::AllFillable);
    EXPECT_EQ(fillability_predicate({Rational(3, 4), Rational(1, 2), Rational(1, 5)}), FillabilityVerdict::NonfillableExists);
    EXPECT_STREQ(to_string(FillabilityVerdict::AllFillable), "AllFillable");
}

TEST(Predicate, AgreesWithSolverOnGrid) {
    for (auto r1 : {Rational(1, 2), Rational(2, 3), Rational(3, 4)})
        for (int d : {2, 3, 4, 5}) {
            SeifertParams sp{r1, Rational(1, 2), Rational(1, d)};
            auto r = enumerate_positive_factorizations(abelianize(seifert_word(sp).word));
            ASSERT_EQ(r.status, SolveStatus::Complete);
            EXPECT_EQ(r.solutions.empty(), fillability_predicate(sp) == FillabilityVerdict::NonfillableExists)
                << r1 << " 1/" << d;
        }
}
