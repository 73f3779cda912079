#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "planarfill/exact_rep.hpp"
#include "planarfill/relations.hpp"

using namespace planarfill;

TEST(Convention, PinnedChoiceIsFrozen) {
    EXPECT_EQ(pinned_convention().str(), "conj=W.x.W^-1 slide=+ anchor=high");
    auto ok = lantern_conventions();
    ASSERT_EQ(ok.size(), 4u);
    EXPECT_EQ(ok.front(), pinned_convention());
    for (const auto& c : all_conventions())
        EXPECT_EQ(classical_lantern_holds(c), std::find(ok.begin(), ok.end(), c) != ok.end());
}

TEST(Convention, FrozenSkipTwistImages) {
    auto e = twist_automorphism({HoleSet{0, 2}, 1}, Surface(3));
    EXPECT_EQ(e.aut.image(0).str(), "x0 x1 x2 x1^-1 x0 x1 x2^-1 x1^-1 x0^-1");
    EXPECT_EQ(e.aut.image(1).str(), "x1");
    EXPECT_EQ(e.aut.image(2).str(), "x1^-1 x0 x1 x2 x1^-1 x0^-1 x1");
}

TEST(Convention, ConsecutiveTwistConjugatesByBlockWord) {
    auto e = twist_automorphism({HoleSet{1, 2}, 1}, Surface(4));
    EXPECT_EQ(e.aut.image(1).str(), "x1 x2 x1 x2^-1 x1^-1");
    EXPECT_EQ(e.aut.image(2).str(), "x1 x2 x1^-1");
    EXPECT_EQ(e.aut.image(0), FreeWord::gen(0));
    EXPECT_EQ(e.aut.image(3), FreeWord::gen(3));
}

TEST(TwistAutomorphism, SkipOneMatchesHandFormula) {
    for (int n = 3; n <= 7; ++n)
        for (int i = 0; i + 2 < n; ++i)
            for (int sign : {1, -1}) {
                auto e = twist_automorphism({HoleSet{i, i + 2}, sign}, Surface(n));
                EXPECT_EQ(e.aut, oracle::skip_one_twist(n, i, sign)) << "n=" << n << " i=" << i << " sign=" << sign;
            }
}

TEST(TwistAutomorphism, BoundaryTwistActsTrivially) {
    auto e = twist_automorphism({HoleSet{2}, 1}, Surface(4));
    EXPECT_EQ(e.aut, Automorphism::identity(4));
    EXPECT_EQ(e.ab.single(2), 1);
}

TEST(TwistAutomorphism, OuterBoundaryIsInnerByDelta) {
    for (int n = 2; n <= 6; ++n) {
        auto e = twist_automorphism({HoleSet::range(0, n - 1), 1}, Surface(n));
        for (int g = 0; g < n; ++g) EXPECT_EQ(e.aut.image(g), FreeWord::gen(g).conjugate_by(boundary_word(n)));
    }
}

TEST(TwistAutomorphism, InverseTwistCancels) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        HoleSet a = oracle::random_set(rng, n);
        Surface s(n);
        auto p = twist_automorphism({a, 1}, s), m = twist_automorphism({a, -1}, s);
        EXPECT_EQ(p.aut * m.aut, Automorphism::identity(n)) << a;
    }
}

TEST(TwistAutomorphism, DisjointNestedTwistsCommute) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        // two disjoint consecutive blocks, or one inside the other
        int i = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        int j = i + 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1 - i));
        HoleSet outer = HoleSet::range(i, j);
        HoleSet inner = HoleSet::range(i, i + static_cast<int>(rng() % static_cast<unsigned>(j - i + 1)));
        Surface s(n);
        auto a = twist_automorphism({outer, 1}, s).aut, b = twist_automorphism({inner, 1}, s).aut;
        EXPECT_EQ(a * b, b * a);
    }
}

TEST(ConjugatedTwist, RejectsBadConjugators) {
    Surface s(4);
    const auto& conv = pinned_convention();
    SignedTwist t(HoleSet{0, 2});
    EXPECT_THROW(conjugated_twist(t, s, HoleSet{0, 2}, BraidWord{}, conv), UnsupportedCurve);
    EXPECT_THROW(conjugated_twist(t, s, HoleSet{0, 1, 2}, BraidWord{}, conv), UnsupportedCurve);
    EXPECT_THROW(conjugated_twist(t, s, HoleSet{2, 3}, BraidWord{}, conv), UnsupportedCurve);
    EXPECT_NO_THROW(conjugated_twist(t, s, carrier_block(t.set, conv), carrier_braid(t.set, conv).inverse(), conv));
}

TEST(ConjugatedTwist, OtherCarrierGivesADifferentCurve) {
    // sliding hole 0 past hole 1 from the other side encloses the same holes
    // but is a different curve
    Surface s(3);
    const auto& conv = pinned_convention();
    SignedTwist t(HoleSet{0, 2});
    BraidWord other;
    other.push(0, -conv.crossing);
    auto a = twist_automorphism(t, s);
    auto b = conjugated_twist(t, s, HoleSet{1, 2}, other.inverse(), conv);
    EXPECT_EQ(a.ab, b.ab);
    EXPECT_NE(a.aut, b.aut);
}

TEST(Elements, BoundaryTwistSeparatedByAbelianPart) {
    MonodromyWord w(Surface(3), {{HoleSet{0, 1}}, {HoleSet{1, 2}, -1}});
    MonodromyWord wb = w;
    wb.push(HoleSet{1});
    auto a = compose_word(w), b = compose_word(wb);
    EXPECT_EQ(a.aut, b.aut);
    EXPECT_FALSE(elements_equal(a, b));
    EXPECT_TRUE(elements_equal(a, a));
}

TEST(Lantern, ClassicalHoldsExactly) { EXPECT_TRUE(classical_lantern_holds(pinned_convention())); }

TEST(Lantern, EveryInstanceHoldsExactly) {
    for (int n = 3; n <= 5; ++n) {
        int count = 0;
        for (int code = 0; code < (1 << (2 * n)); ++code) {
            std::vector<Hole> part[4];
            int c = code;
            for (Hole h = 0; h < n; ++h, c /= 4) part[c % 4].push_back(h);
            if (part[0].empty() || part[1].empty() || part[2].empty()) continue;
            HoleSet a(part[0]), b(part[1]), cc(part[2]);
            if (!LanternInstance::cyclically_ordered(a, b, cc)) continue;
            LanternInstance inst(Surface(n), a, b, cc);
            for (int sign : {1, -1})
                EXPECT_TRUE(elements_equal(compose_word(inst.left_word(sign)), compose_word(inst.right_word(sign))))
                    << a << b << cc << " sign " << sign;
            ++count;
        }
        EXPECT_GT(count, 0);
    }
}

TEST(Lantern, GeneralizedHoldsExactly) {
    for (int k = 1; k <= 4; ++k) {
        auto g = generalized_lantern(k);
        EXPECT_TRUE(elements_equal(compose_word(g.left), compose_word(g.right))) << "k=" << k;
    }
}

TEST(Lantern, WrongOrderFails) {
    // the right side in another order is a different element
    Surface s(3);
    MonodromyWord left(s, {{HoleSet{0}}, {HoleSet{1}}, {HoleSet{2}}, {HoleSet{0, 1, 2}}});
    MonodromyWord right(s, {{HoleSet{0, 2}}, {HoleSet{1, 2}}, {HoleSet{0, 1}}});
    EXPECT_FALSE(elements_equal(compose_word(left), compose_word(right)));
}

TEST(ComposeWord, AntiMultiplicative) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        auto a = oracle::random_word(rng, n, static_cast<int>(rng() % 5));
        auto b = oracle::random_word(rng, n, static_cast<int>(rng() % 5));
        auto ab = compose_word(a + b);
        auto ea = compose_word(a), eb = compose_word(b);
        EXPECT_EQ(ab.aut, eb.aut * ea.aut);
        EXPECT_EQ(ab.ab, abelianize(a + b));
    }
}

TEST(ComposeWord, InvariantsOnRandomWords) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto w = oracle::random_word(rng, n, static_cast<int>(rng() % 7));
        auto e = compose_word(w);
        EXPECT_NO_THROW(check_mapping_class(e.aut));
        EXPECT_EQ(e.aut.apply(boundary_word(n)), boundary_word(n));
        for (int g = 0; g < n; ++g) EXPECT_TRUE(e.aut.image(g).is_conjugate_of_generator(g));
        EXPECT_EQ(e.ab, abelianize(w));
    }
}

TEST(CheckMappingClass, RejectsNonPure) {
    EXPECT_THROW(check_mapping_class(half_twist(3, 0, 1)), std::logic_error);
    std::vector<FreeWord> img{FreeWord::gen(0, -1), FreeWord::gen(1)};
    EXPECT_THROW(check_mapping_class(Automorphism(img)), std::logic_error);
}
