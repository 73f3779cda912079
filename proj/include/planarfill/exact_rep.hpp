#pragma once

// Exact computation in Map(D_n) through the action on pi_1 of the disk with
// n holes, based on the outer boundary. pi_1 is free on loops x_0..x_{n-1}
// around the holes, and the outer boundary reads Delta = x_0 x_1 ... x_{n-1}.
//
// Boundary twists act trivially on pi_1, so an element is stored as its
// automorphism together with its abelian image; the pair determines it.
//
// Convex twists:
//   * consecutive holes {i..j}: conjugation of x_i..x_j by W = x_i...x_j
//   * any other hole set A: the consecutive twist on a block of |A| holes,
//     conjugated by the braid that slides the holes of A into that block
//     with every crossing of the same handedness, so the resulting curve
//     passes on one side of all holes strictly between members of A.
// The handedness of the conjugation, of the sliding crossings, and where
// the block is anchored are fixed once by requiring the classical lantern
// relation to hold exactly on three holes (see pinned_convention()).

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "planarfill/free_group.hpp"
#include "planarfill/mcg_core.hpp"

namespace planarfill {

enum class ConjugationSide { Left, Right };  // positive twist: x -> W x W^-1 (Left) or W^-1 x W (Right)
enum class BlockAnchor { Low, High };        // block starts at min(A) or ends at max(A)

struct TwistConvention {
    ConjugationSide side = ConjugationSide::Left;
    int crossing = 1;  // exponent of the sliding half twists
    BlockAnchor anchor = BlockAnchor::Low;

    bool operator==(const TwistConvention&) const = default;

    std::string str() const {
        return std::string(side == ConjugationSide::Left ? "conj=W.x.W^-1" : "conj=W^-1.x.W") +
               (crossing > 0 ? " slide=+" : " slide=-") + (anchor == BlockAnchor::Low ? " anchor=low" : " anchor=high");
    }
};

struct HalfTwist {
    int index;  // exchanges holes index and index+1
    int exponent;
};

// Braid word in chronological order.
class BraidWord {
public:
    BraidWord() = default;
    explicit BraidWord(std::vector<HalfTwist> letters) : letters_(std::move(letters)) {}

    const std::vector<HalfTwist>& letters() const noexcept { return letters_; }
    void push(int index, int exponent) { letters_.push_back({index, exponent}); }

    BraidWord inverse() const {
        BraidWord r;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push(it->index, -it->exponent);
        return r;
    }

    Automorphism to_automorphism(int n) const {
        Automorphism acc(n);
        for (const auto& h : letters_) acc = half_twist(n, h.index, h.exponent) * acc;
        return acc;
    }

    // Where each hole ends up.
    std::vector<Hole> permutation(int n) const {
        std::vector<Hole> where(static_cast<std::size_t>(n));
        for (Hole h = 0; h < n; ++h) where[static_cast<std::size_t>(h)] = h;
        for (const auto& l : letters_)
            for (auto& w : where)
                if (w == l.index)
                    w = l.index + 1;
                else if (w == l.index + 1)
                    w = l.index;
        return where;
    }

private:
    std::vector<HalfTwist> letters_;
};

struct McgElement {
    Automorphism aut;
    AbelianImage ab;

    bool operator==(const McgElement&) const = default;
};

inline bool elements_equal(const McgElement& a, const McgElement& b) {
    if (a.aut.rank() != b.aut.rank()) throw DomainError("comparing elements on different surfaces");
    return a.aut == b.aut && a.ab == b.ab;
}

// Delta-fixing and purity; throws std::logic_error when violated.
inline void check_mapping_class(const Automorphism& aut) {
    const int n = aut.rank();
    if (aut.apply(boundary_word(n)) != boundary_word(n))
        throw std::logic_error("automorphism does not fix the boundary word");
    for (int i = 0; i < n; ++i)
        if (!aut.image(i).is_conjugate_of_generator(i))
            throw std::logic_error("image of x" + std::to_string(i) + " is not a conjugate of it");
}

namespace detail {

inline Automorphism consecutive_twist(int n, const HoleSet& block, int sign, ConjugationSide side) {
    FreeWord w;
    for (Hole h : block) w.append(h, 1);
    bool left = (side == ConjugationSide::Left) == (sign > 0);
    return Automorphism::partial_conjugation(n, block.holes(), left ? w : w.inverse());
}

inline bool is_consecutive(const HoleSet& s) { return s.empty() || s.holes().back() - s.holes().front() + 1 == static_cast<int>(s.size()); }

}  // namespace detail

// Braid that slides the holes of `set` into a consecutive block, following
// the convention's anchor and crossing handedness.
inline BraidWord carrier_braid(const HoleSet& set, const TwistConvention& conv) {
    BraidWord b;
    const auto& a = set.holes();
    const int r = static_cast<int>(a.size());
    if (conv.anchor == BlockAnchor::Low) {
        for (int j = 1; j < r; ++j)
            for (int p = a[static_cast<std::size_t>(j)]; p > a[0] + j; --p) b.push(p - 1, conv.crossing);
    } else {
        for (int j = r - 2; j >= 0; --j) {
            int target = a.back() - (r - 1 - j);
            for (int p = a[static_cast<std::size_t>(j)]; p < target; ++p) b.push(p, conv.crossing);
        }
    }
    return b;
}

inline HoleSet carrier_block(const HoleSet& set, const TwistConvention& conv) {
    const int r = static_cast<int>(set.size());
    return conv.anchor == BlockAnchor::Low ? HoleSet::range(set[0], set[0] + r - 1)
                                           : HoleSet::range(set.holes().back() - r + 1, set.holes().back());
}

// g T g^{-1} where T is the consecutive twist on `block` and g is given
// explicitly. The braid must carry `block` onto `set`.
inline McgElement conjugated_twist(const SignedTwist& t, const Surface& s, const HoleSet& block, const BraidWord& g,
                                   const TwistConvention& conv) {
    t.validate(s);
    if (block.size() != t.set.size() || !block.fits(s) || !detail::is_consecutive(block))
        throw UnsupportedCurve("conjugation block " + block.str() + " is not a consecutive block of size " +
                               std::to_string(t.set.size()));
    // g acts on pi_1, so holes move under g^{-1}: block positions must land on the set.
    auto where = g.inverse().permutation(s.holes);
    std::vector<Hole> image;
    for (Hole h : t.set) image.push_back(where[static_cast<std::size_t>(h)]);
    if (HoleSet(image) != block)
        throw UnsupportedCurve("conjugator does not carry block " + block.str() + " onto " + t.set.str());
    const int n = s.holes;
    Automorphism aut = g.to_automorphism(n) * detail::consecutive_twist(n, block, t.sign, conv.side) *
                       g.inverse().to_automorphism(n);
    check_mapping_class(aut);
    return {std::move(aut), twist_image(t, s)};
}

inline McgElement twist_automorphism(const SignedTwist& t, const Surface& s, const TwistConvention& conv) {
    t.validate(s);
    const int n = s.holes;
    if (t.set.size() == 1) return {Automorphism(n), twist_image(t, s)};
    if (detail::is_consecutive(t.set)) {
        Automorphism aut = detail::consecutive_twist(n, t.set, t.sign, conv.side);
        check_mapping_class(aut);
        return {std::move(aut), twist_image(t, s)};
    }
    // g = carrier^{-1}: the carrier slides holes of the set into the block.
    return conjugated_twist(t, s, carrier_block(t.set, conv), carrier_braid(t.set, conv).inverse(), conv);
}

inline std::vector<TwistConvention> all_conventions() {
    std::vector<TwistConvention> v;
    for (auto side : {ConjugationSide::Left, ConjugationSide::Right})
        for (int crossing : {1, -1})
            for (auto anchor : {BlockAnchor::Low, BlockAnchor::High}) v.push_back({side, crossing, anchor});
    return v;
}

// Last twist outermost: the first listed twist acts first.
inline McgElement compose_word(const MonodromyWord& w, const TwistConvention& conv) {
    const int n = w.holes();
    Automorphism acc(n);
    for (const auto& t : w.twists()) {
        acc = twist_automorphism(t, w.surface(), conv).aut * acc;
        check_mapping_class(acc);
    }
    return {std::move(acc), abelianize(w)};
}

inline bool classical_lantern_holds(const TwistConvention& conv) {
    Surface s(3);
    MonodromyWord left(s, {{HoleSet{0}}, {HoleSet{1}}, {HoleSet{2}}, {HoleSet{0, 1, 2}}});
    MonodromyWord right(s, {{HoleSet{0, 1}}, {HoleSet{1, 2}}, {HoleSet{0, 2}}});
    return elements_equal(compose_word(left, conv), compose_word(right, conv));
}

// Conventions, in all_conventions() order, under which the classical
// lantern holds exactly.
inline std::vector<TwistConvention> lantern_conventions() {
    std::vector<TwistConvention> ok;
    for (const auto& c : all_conventions())
        if (classical_lantern_holds(c)) ok.push_back(c);
    return ok;
}

inline const TwistConvention& pinned_convention() {
    static const TwistConvention conv = [] {
        auto ok = lantern_conventions();
        if (ok.empty()) throw std::logic_error("no twist convention satisfies the classical lantern relation");
        return ok.front();
    }();
    return conv;
}

inline McgElement twist_automorphism(const SignedTwist& t, const Surface& s) {
    return twist_automorphism(t, s, pinned_convention());
}

inline McgElement compose_word(const MonodromyWord& w) { return compose_word(w, pinned_convention()); }

}  // namespace planarfill
