#pragma once

// Lantern relations on the disk with n holes, the generalized lantern
// relation, and a breadth-first rewrite search connecting multisets of
// signed twists by lantern substitutions.

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "planarfill/mcg_core.hpp"

namespace planarfill {

// D_A D_B D_C D_{A u B u C} = D_{A u B} D_{B u C} D_{A u C}
//
// A, B, C must be disjoint, and reading A u B u C clockwise must list all of
// A, then all of B, then all of C (up to rotation).
class LanternInstance {
public:
    LanternInstance(Surface s, HoleSet a, HoleSet b, HoleSet c)
        : surface_(s), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        validate();
    }

    const Surface& surface() const noexcept { return surface_; }
    const HoleSet& a() const noexcept { return a_; }
    const HoleSet& b() const noexcept { return b_; }
    const HoleSet& c() const noexcept { return c_; }
    HoleSet all() const { return a_ | b_ | c_; }

    // Ordered sides as words; the left side lists A, B, C, then the union.
    MonodromyWord left_word(int sign = 1) const {
        return MonodromyWord(surface_, {{a_, sign}, {b_, sign}, {c_, sign}, {all(), sign}});
    }
    // sign -1 gives the inverse relation, so the right side runs backwards
    MonodromyWord right_word(int sign = 1) const {
        if (sign < 0) return MonodromyWord(surface_, {{a_ | c_, sign}, {b_ | c_, sign}, {a_ | b_, sign}});
        return MonodromyWord(surface_, {{a_ | b_, sign}, {b_ | c_, sign}, {a_ | c_, sign}});
    }

    bool operator==(const LanternInstance&) const = default;
    auto operator<=>(const LanternInstance& o) const {
        return std::tie(a_, b_, c_) <=> std::tie(o.a_, o.b_, o.c_);
    }

    // True when the clockwise cyclic order of the union is A-block, B-block,
    // C-block for some rotation.
    static bool cyclically_ordered(const HoleSet& a, const HoleSet& b, const HoleSet& c) {
        HoleSet u = a | b | c;
        std::vector<int> label;
        label.reserve(u.size());
        for (Hole h : u) label.push_back(a.contains(h) ? 0 : b.contains(h) ? 1 : 2);
        int changes = 0;
        for (std::size_t i = 0; i < label.size(); ++i) {
            int cur = label[i];
            int next = label[(i + 1) % label.size()];
            if (cur == next) continue;
            if (next != (cur + 1) % 3) return false;
            ++changes;
        }
        return changes == 3;
    }

private:
    void validate() const {
        for (const HoleSet* s : {&a_, &b_, &c_}) {
            if (s->empty()) throw InvalidInstance("lantern collections must be nonempty");
            if (!s->fits(surface_)) throw InvalidInstance("lantern collection " + s->str() + " does not fit surface");
        }
        if (!a_.disjoint(b_) || !b_.disjoint(c_) || !a_.disjoint(c_))
            throw InvalidInstance("lantern collections must be pairwise disjoint");
        if (!cyclically_ordered(a_, b_, c_))
            throw InvalidInstance("lantern collections " + a_.str() + b_.str() + c_.str() +
                                  " are not in clockwise cyclic order");
    }

    Surface surface_;
    HoleSet a_, b_, c_;
};

struct LanternSides {
    std::vector<HoleSet> left;   // {A, B, C, A u B u C}
    std::vector<HoleSet> right;  // {A u B, B u C, A u C}
};

inline LanternSides lantern_sides(const LanternInstance& inst) {
    const auto& a = inst.a();
    const auto& b = inst.b();
    const auto& c = inst.c();
    return {{a, b, c, inst.all()}, {a | b, b | c, a | c}};
}

struct GeneralizedLantern {
    MonodromyWord left;
    MonodromyWord right;
};

// Disk with k+2 holes; hole 0 is the k-fold boundary twist, holes 1..k+1
// carry one boundary twist each. The right side performs the twist around
// holes 1..k+1 first, then {0,i} for i = k+1 down to 1.
inline GeneralizedLantern generalized_lantern(int k) {
    if (k < 1) throw DomainError("generalized lantern needs k >= 1");
    Surface s(k + 2);
    MonodromyWord left(s), right(s);
    for (int i = 0; i < k; ++i) left.push(HoleSet{0});
    for (Hole i = 1; i <= k + 1; ++i) left.push(HoleSet{i});
    left.push(HoleSet::range(0, k + 1));
    right.push(HoleSet::range(1, k + 1));
    for (Hole i = k + 1; i >= 1; --i) right.push(HoleSet{0, i});
    return {std::move(left), std::move(right)};
}

// ---------------------------------------------------------------------------
// Rewriting on multisets

// Sorted list of signed twists; repeated entries encode multiplicity.
class TwistMultiset {
public:
    TwistMultiset() = default;
    TwistMultiset(Surface s, std::vector<SignedTwist> items) : surface_(s), items_(std::move(items)) {
        for (const auto& t : items_) t.validate(surface_);
        std::sort(items_.begin(), items_.end());
    }
    explicit TwistMultiset(const MonodromyWord& w) : TwistMultiset(w.surface(), w.twists()) {}

    const Surface& surface() const noexcept { return surface_; }
    const std::vector<SignedTwist>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }

    std::size_t count(const SignedTwist& t) const {
        auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), t);
        return static_cast<std::size_t>(hi - lo);
    }

    std::optional<std::size_t> position(const SignedTwist& t) const {
        auto it = std::lower_bound(items_.begin(), items_.end(), t);
        if (it == items_.end() || *it != t) return std::nullopt;
        return static_cast<std::size_t>(it - items_.begin());
    }

    // Removes one copy of each of `out` and inserts `in`. Returns false (and
    // leaves *this untouched) if some element of `out` is missing.
    bool replace(const std::vector<SignedTwist>& out, const std::vector<SignedTwist>& in) {
        auto next = items_;
        for (const auto& t : out) {
            auto it = std::lower_bound(next.begin(), next.end(), t);
            if (it == next.end() || *it != t) return false;
            next.erase(it);
        }
        for (const auto& t : in) next.insert(std::upper_bound(next.begin(), next.end(), t), t);
        items_ = std::move(next);
        return true;
    }

    AbelianImage image() const {
        AbelianImage img(surface_.holes);
        for (const auto& t : items_) img += twist_image(t, surface_);
        return img;
    }

    std::string key() const {
        std::string k;
        for (const auto& t : items_) {
            k += t.sign > 0 ? '+' : '-';
            k += t.set.str();
        }
        return k;
    }

    bool operator==(const TwistMultiset&) const = default;

private:
    Surface surface_{1};
    std::vector<SignedTwist> items_;
};

enum class RewriteDirection { Forward, Backward };  // Forward: left side -> right side

inline const char* to_string(RewriteDirection d) { return d == RewriteDirection::Forward ? "forward" : "backward"; }

struct RewriteStep {
    LanternInstance instance;
    RewriteDirection direction;
    int sign;              // lantern applied to twists of this sign
    std::size_t position;  // index of the first consumed twist in the canonical multiset

    std::vector<SignedTwist> consumed() const {
        auto sides = lantern_sides(instance);
        return signed_sets(direction == RewriteDirection::Forward ? sides.left : sides.right);
    }
    std::vector<SignedTwist> produced() const {
        auto sides = lantern_sides(instance);
        return signed_sets(direction == RewriteDirection::Forward ? sides.right : sides.left);
    }

    auto order_key() const {
        return std::make_tuple(position, direction == RewriteDirection::Backward, -sign, instance.a(), instance.b(),
                               instance.c());
    }

private:
    std::vector<SignedTwist> signed_sets(const std::vector<HoleSet>& sets) const {
        std::vector<SignedTwist> v;
        for (const auto& s : sets) v.emplace_back(s, sign);
        std::sort(v.begin(), v.end());
        return v;
    }
};

struct RewriteCertificate {
    std::vector<RewriteStep> steps;
};

struct DeriveLimits {
    std::size_t max_depth = 8;
    std::size_t max_states = 200000;
};

enum class DeriveStatus {
    Found,
    ImageMismatch,      // abelian images differ: no lantern sequence can connect them
    SpaceExhausted,     // every reachable state was visited, target not among them
    LimitReached,       // max_depth or max_states cut the search short
};

inline const char* to_string(DeriveStatus s) {
    switch (s) {
        case DeriveStatus::Found: return "found";
        case DeriveStatus::ImageMismatch: return "image_mismatch";
        case DeriveStatus::SpaceExhausted: return "not_found";
        case DeriveStatus::LimitReached: return "limit_reached";
    }
    return "?";
}

struct DeriveResult {
    DeriveStatus status;
    std::optional<RewriteCertificate> certificate;
    std::size_t states_visited = 0;
};

namespace detail {

// Partitions of the cyclic sequence of `u` into three consecutive nonempty
// arcs, A being the arc holding u's smallest hole.
inline std::vector<std::array<HoleSet, 3>> arc_partitions(const HoleSet& u) {
    std::vector<std::array<HoleSet, 3>> out;
    const std::size_t m = u.size();
    if (m < 3) return out;
    auto arc = [&](std::size_t from, std::size_t to) {  // [from, to) cyclically
        std::vector<Hole> v;
        for (std::size_t i = from; i != to; i = (i + 1) % m) v.push_back(u[i]);
        return HoleSet(std::move(v));
    };
    for (std::size_t c1 = 0; c1 < m; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < m; ++c2)
            for (std::size_t c3 = c2 + 1; c3 < m; ++c3) {
                // arcs starting at c1, c2, c3; the one wrapping past index 0 is A
                HoleSet x = arc(c1, c2), y = arc(c2, c3), z = arc(c3, c1);
                if (c1 == 0)
                    out.push_back({x, y, z});
                else
                    out.push_back({z, x, y});
            }
    return out;
}

inline std::vector<RewriteStep> lantern_moves(const TwistMultiset& state) {
    std::vector<RewriteStep> moves;
    const Surface s = state.surface();
    for (int sign : {1, -1}) {
        std::vector<HoleSet> present;
        for (const auto& t : state.items())
            if (t.sign == sign && (present.empty() || present.back() != t.set)) present.push_back(t.set);
        auto has = [&](const HoleSet& h) { return std::binary_search(present.begin(), present.end(), h); };

        auto try_add = [&](const std::array<HoleSet, 3>& abc, RewriteDirection dir) {
            if (!LanternInstance::cyclically_ordered(abc[0], abc[1], abc[2])) return;
            LanternInstance inst(s, abc[0], abc[1], abc[2]);
            RewriteStep step{inst, dir, sign, 0};
            auto consumed = step.consumed();
            // consumed sets are distinct, so presence suffices
            for (const auto& t : consumed)
                if (!has(t.set)) return;
            step.position = *state.position(consumed.front());
            moves.push_back(std::move(step));
        };

        for (const auto& u : present)
            for (const auto& abc : arc_partitions(u)) try_add(abc, RewriteDirection::Forward);

        std::vector<HoleSet> unions;
        for (std::size_t i = 0; i < present.size(); ++i)
            for (std::size_t j = i + 1; j < present.size(); ++j)
                if (present[i].size() >= 2 && present[j].size() >= 2) unions.push_back(present[i] | present[j]);
        std::sort(unions.begin(), unions.end());
        unions.erase(std::unique(unions.begin(), unions.end()), unions.end());
        for (const auto& u : unions)
            for (const auto& abc : arc_partitions(u)) try_add(abc, RewriteDirection::Backward);
    }
    std::sort(moves.begin(), moves.end(),
              [](const RewriteStep& x, const RewriteStep& y) { return x.order_key() < y.order_key(); });
    return moves;
}

}  // namespace detail

inline bool apply_step(TwistMultiset& state, const RewriteStep& step) {
    auto consumed = step.consumed();
    auto pos = state.position(consumed.front());
    if (!pos || *pos != step.position) return false;
    return state.replace(consumed, step.produced());
}

// Replays a certificate; nullopt if some step does not apply.
inline std::optional<TwistMultiset> replay(TwistMultiset state, const RewriteCertificate& cert) {
    for (const auto& step : cert.steps)
        if (!apply_step(state, step)) return std::nullopt;
    return state;
}

// Breadth-first search with a fixed expansion order, so the certificate
// returned is the lexicographically smallest among the shortest ones.
inline DeriveResult derive(const TwistMultiset& source, const TwistMultiset& target, const DeriveLimits& limits = {}) {
    if (source.surface() != target.surface()) throw DomainError("derive: multisets on different surfaces");
    if (source.image() != target.image()) return {DeriveStatus::ImageMismatch, std::nullopt, 0};
    if (source == target) return {DeriveStatus::Found, RewriteCertificate{}, 1};

    struct Node {
        TwistMultiset state;
        std::size_t parent;
        std::optional<RewriteStep> via;
        std::size_t depth;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, std::size_t> seen;
    std::deque<std::size_t> queue;
    nodes.push_back({source, 0, std::nullopt, 0});
    seen.emplace(source.key(), 0);
    queue.push_back(0);
    const std::string goal = target.key();
    bool truncated = false;

    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        if (nodes[cur].depth >= limits.max_depth) {
            truncated = true;
            continue;
        }
        for (auto& step : detail::lantern_moves(nodes[cur].state)) {
            TwistMultiset next = nodes[cur].state;
            if (!apply_step(next, step)) continue;
            auto key = next.key();
            if (seen.count(key)) continue;
            if (seen.size() >= limits.max_states) return {DeriveStatus::LimitReached, std::nullopt, seen.size()};
            nodes.push_back({std::move(next), cur, step, nodes[cur].depth + 1});
            seen.emplace(key, nodes.size() - 1);
            if (key == goal) {
                RewriteCertificate cert;
                for (std::size_t i = nodes.size() - 1; i != 0; i = nodes[i].parent) cert.steps.push_back(*nodes[i].via);
                std::reverse(cert.steps.begin(), cert.steps.end());
                return {DeriveStatus::Found, std::move(cert), seen.size()};
            }
            queue.push_back(nodes.size() - 1);
        }
    }
    return {truncated ? DeriveStatus::LimitReached : DeriveStatus::SpaceExhausted, std::nullopt, seen.size()};
}

}  // namespace planarfill
