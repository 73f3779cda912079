#pragma once

// Core value types for Dehn twists on the disk with n holes, and the
// abelianization of its mapping class group.
//
// Holes are indexed 0..n-1 clockwise around a regular n-gon. A twist is
// recorded only through the set of holes its curve encloses; that set fixes
// the twist's class in H_1(Map D_n), which is all the abelian machinery
// below needs. The class of a word is the pair (m_pair, m_single): the
// multiplicities of pairwise twists and of boundary twists after every
// twist is rewritten by lantern relations into pairwise and boundary pieces.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "planarfill/errors.hpp"

namespace planarfill {

using Hole = int;

struct Surface {
    int holes = 1;

    explicit Surface(int n = 1) : holes(n) {
        if (n < 1) throw DomainError("a surface needs at least one hole");
    }

    bool operator==(const Surface&) const = default;
};

// Sorted, duplicate-free list of hole indices.
class HoleSet {
public:
    HoleSet() = default;
    HoleSet(std::initializer_list<Hole> holes) : holes_(holes) { canonicalize(); }
    explicit HoleSet(std::vector<Hole> holes) : holes_(std::move(holes)) { canonicalize(); }

    static HoleSet range(Hole first, Hole last) {
        std::vector<Hole> v;
        for (Hole h = first; h <= last; ++h) v.push_back(h);
        return HoleSet(std::move(v));
    }

    std::size_t size() const noexcept { return holes_.size(); }
    bool empty() const noexcept { return holes_.empty(); }
    Hole operator[](std::size_t i) const { return holes_[i]; }
    auto begin() const noexcept { return holes_.begin(); }
    auto end() const noexcept { return holes_.end(); }
    const std::vector<Hole>& holes() const noexcept { return holes_; }

    bool contains(Hole h) const { return std::binary_search(holes_.begin(), holes_.end(), h); }

    bool fits(const Surface& s) const {
        return !holes_.empty() && holes_.front() >= 0 && holes_.back() < s.holes;
    }

    bool disjoint(const HoleSet& o) const {
        std::vector<Hole> common;
        std::set_intersection(begin(), end(), o.begin(), o.end(), std::back_inserter(common));
        return common.empty();
    }

    HoleSet operator|(const HoleSet& o) const {
        std::vector<Hole> u;
        std::set_union(begin(), end(), o.begin(), o.end(), std::back_inserter(u));
        return HoleSet(std::move(u));
    }

    // Lexicographic on the sorted index lists, size-agnostic.
    auto operator<=>(const HoleSet&) const = default;
    bool operator==(const HoleSet&) const = default;

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < holes_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(holes_[i]);
        }
        return s + "}";
    }

private:
    void canonicalize() {
        std::sort(holes_.begin(), holes_.end());
        holes_.erase(std::unique(holes_.begin(), holes_.end()), holes_.end());
    }

    std::vector<Hole> holes_;
};

inline std::ostream& operator<<(std::ostream& os, const HoleSet& s) { return os << s.str(); }

struct SignedTwist {
    HoleSet set;
    int sign = 1;

    SignedTwist() = default;
    SignedTwist(HoleSet s, int sg = 1) : set(std::move(s)), sign(sg) {
        if (sign != 1 && sign != -1) throw InvalidTwist("twist sign must be +1 or -1");
    }

    bool is_boundary() const noexcept { return set.size() == 1; }
    SignedTwist inverse() const { return {set, -sign}; }

    void validate(const Surface& s) const {
        if (set.empty()) throw InvalidTwist("twist hole set is empty");
        if (!set.fits(s))
            throw InvalidTwist("twist " + set.str() + " does not fit a surface with " +
                               std::to_string(s.holes) + " holes");
    }

    auto operator<=>(const SignedTwist&) const = default;
    bool operator==(const SignedTwist&) const = default;
};

// Role names (t, q1, s1, ...) for reporting; attached by family builders.
using HoleLabeling = std::map<std::string, Hole>;

// Ordered product of twists. The first listed twist is performed first.
class MonodromyWord {
public:
    explicit MonodromyWord(Surface s = Surface{1}) : surface_(s) {}
    MonodromyWord(Surface s, std::vector<SignedTwist> twists) : surface_(s), twists_(std::move(twists)) {
        for (const auto& t : twists_) t.validate(surface_);
    }

    const Surface& surface() const noexcept { return surface_; }
    int holes() const noexcept { return surface_.holes; }
    const std::vector<SignedTwist>& twists() const noexcept { return twists_; }
    std::size_t size() const noexcept { return twists_.size(); }

    MonodromyWord& push(SignedTwist t) {
        t.validate(surface_);
        twists_.push_back(std::move(t));
        return *this;
    }
    MonodromyWord& push(HoleSet s, int sign = 1) { return push(SignedTwist(std::move(s), sign)); }

    MonodromyWord operator+(const MonodromyWord& o) const {
        if (o.surface_ != surface_) throw DomainError("concatenating words on different surfaces");
        MonodromyWord r = *this;
        for (const auto& t : o.twists_) r.twists_.push_back(t);
        return r;
    }

    bool all_positive() const {
        return std::all_of(twists_.begin(), twists_.end(), [](const SignedTwist& t) { return t.sign > 0; });
    }

    bool operator==(const MonodromyWord&) const = default;

private:
    Surface surface_;
    std::vector<SignedTwist> twists_;
};

// Class of a mapping class in H_1(Map D_n).
class AbelianImage {
public:
    explicit AbelianImage(int n = 1) : n_(n), pair_(pair_count(n), 0), single_(static_cast<std::size_t>(n), 0) {
        if (n < 1) throw DomainError("a surface needs at least one hole");
    }

    int holes() const noexcept { return n_; }

    long long pair(Hole i, Hole j) const { return pair_[pair_index(i, j)]; }
    long long single(Hole i) const { return single_.at(static_cast<std::size_t>(i)); }

    void set_pair(Hole i, Hole j, long long v) { pair_[pair_index(i, j)] = v; }
    void set_single(Hole i, long long v) { single_.at(static_cast<std::size_t>(i)) = v; }
    void add_pair(Hole i, Hole j, long long v) {
        auto& e = pair_[pair_index(i, j)];
        e = checked::add(e, v);
    }
    void add_single(Hole i, long long v) {
        auto& e = single_.at(static_cast<std::size_t>(i));
        e = checked::add(e, v);
    }

    bool is_zero() const {
        auto z = [](long long v) { return v == 0; };
        return std::all_of(pair_.begin(), pair_.end(), z) && std::all_of(single_.begin(), single_.end(), z);
    }

    AbelianImage& operator+=(const AbelianImage& o) {
        require_same(o);
        for (std::size_t i = 0; i < pair_.size(); ++i) pair_[i] = checked::add(pair_[i], o.pair_[i]);
        for (std::size_t i = 0; i < single_.size(); ++i) single_[i] = checked::add(single_[i], o.single_[i]);
        return *this;
    }
    AbelianImage& operator-=(const AbelianImage& o) { return *this += -o; }
    friend AbelianImage operator+(AbelianImage a, const AbelianImage& b) { return a += b; }
    friend AbelianImage operator-(AbelianImage a, const AbelianImage& b) { return a -= b; }
    AbelianImage operator-() const {
        AbelianImage r(n_);
        for (std::size_t i = 0; i < pair_.size(); ++i) r.pair_[i] = checked::sub(0, pair_[i]);
        for (std::size_t i = 0; i < single_.size(); ++i) r.single_[i] = checked::sub(0, single_[i]);
        return r;
    }

    bool operator==(const AbelianImage&) const = default;

private:
    static std::size_t pair_count(int n) { return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2; }

    std::size_t pair_index(Hole i, Hole j) const {
        if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
            throw std::out_of_range("pair index out of range");
        if (i > j) std::swap(i, j);
        // row-major upper triangle
        return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + static_cast<std::size_t>(j - i - 1);
    }

    void require_same(const AbelianImage& o) const {
        if (o.n_ != n_) throw DomainError("abelian images on different surfaces");
    }

    int n_;
    std::vector<long long> pair_;
    std::vector<long long> single_;
};

inline std::ostream& operator<<(std::ostream& os, const AbelianImage& img) {
    os << "pairs{";
    bool first = true;
    for (Hole i = 0; i < img.holes(); ++i)
        for (Hole j = i + 1; j < img.holes(); ++j)
            if (img.pair(i, j) != 0) {
                os << (first ? "" : ",") << i << "-" << j << ":" << img.pair(i, j);
                first = false;
            }
    os << "} singles(";
    for (Hole i = 0; i < img.holes(); ++i) os << (i ? "," : "") << img.single(i);
    return os << ")";
}

struct HoleBoundReport {
    Hole hole = 0;
    long long k_plus = 0;
    long long k_minus = 0;
    long long b = 0;
    long long bound = 0;
};

// Each pair inside the set contributes sign; each hole gets -sign*(|A|-2).
// For |A| = 1 this is the boundary generator itself.
inline AbelianImage twist_image(const SignedTwist& t, const Surface& s) {
    t.validate(s);
    AbelianImage img(s.holes);
    const long long sg = t.sign;
    const long long r = static_cast<long long>(t.set.size());
    for (std::size_t a = 0; a < t.set.size(); ++a) {
        img.set_single(t.set[a], checked::mul(-sg, r - 2));
        for (std::size_t b = a + 1; b < t.set.size(); ++b) img.set_pair(t.set[a], t.set[b], sg);
    }
    return img;
}

inline AbelianImage abelianize(const MonodromyWord& w) {
    AbelianImage img(w.holes());
    for (const auto& t : w.twists()) img += twist_image(t, w.surface());
    return img;
}

// Upper bound on the number of non-boundary twists enclosing q in any
// positive factorization of w.
inline HoleBoundReport hole_bound(const MonodromyWord& w, Hole q) {
    if (q < 0 || q >= w.holes()) throw std::out_of_range("hole index out of range");
    HoleBoundReport r;
    r.hole = q;
    for (const auto& t : w.twists()) {
        if (!t.set.contains(q)) continue;
        if (t.is_boundary())
            r.b += t.sign;
        else if (t.sign > 0)
            ++r.k_plus;
        else
            ++r.k_minus;
    }
    r.bound = r.k_plus - r.k_minus + r.b;
    return r;
}

// Same bound computed from the abelian image alone.
inline long long target_bound(const AbelianImage& img, Hole q) {
    if (q < 0 || q >= img.holes()) throw std::out_of_range("hole index out of range");
    long long s = img.single(q);
    for (Hole j = 0; j < img.holes(); ++j)
        if (j != q) s = checked::add(s, img.pair(q, j));
    return s;
}

}  // namespace planarfill
