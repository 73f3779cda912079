#pragma once

// Exhaustive enumeration of positive factorizations at the level of the
// abelianized mapping class group.
//
// A positive factorization is a multiset S of hole sets (|A| >= 2) plus a
// boundary-twist count b_q >= 0 per hole, whose image equals the target:
//   sum over A in S containing {i,j} of 1 = m_pair{i,j}
//   b_q = m_single(q) + sum over A in S containing q of (|A| - 2)
// Summing the pair row of q shows that the number l_q of sets containing q
// satisfies l_q = target_bound(q) - b_q, so l_q <= target_bound(q).
//
// Semantics: an empty Complete result means no positive factorization of
// the monodromy exists in Map(D_n), hence no allowable Lefschetz filling.
// A non-empty result is a homological certificate only; it does not by
// itself produce curves realizing the sets.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "planarfill/mcg_core.hpp"

namespace planarfill {

struct Factorization {
    int holes = 0;
    std::vector<std::pair<HoleSet, long long>> sets;  // sorted, multiplicity >= 1
    std::vector<long long> boundary;                  // per hole, >= 0

    long long twist_count() const {
        long long m = 0;
        for (const auto& [s, mult] : sets) m += mult;
        for (long long b : boundary) m += b;
        return m;
    }

    // Sets in nondecreasing order, repeated by multiplicity.
    std::vector<HoleSet> expanded() const {
        std::vector<HoleSet> v;
        for (const auto& [s, mult] : sets)
            for (long long i = 0; i < mult; ++i) v.push_back(s);
        return v;
    }

    // Positive word: the sets in order, then boundary twists hole by hole.
    MonodromyWord to_word() const {
        MonodromyWord w{Surface(holes)};
        for (const auto& s : expanded()) w.push(s);
        for (Hole q = 0; q < holes; ++q)
            for (long long i = 0; i < boundary[static_cast<std::size_t>(q)]; ++i) w.push(HoleSet{q});
        return w;
    }

    AbelianImage image() const { return abelianize(to_word()); }

    bool operator==(const Factorization&) const = default;
    auto operator<=>(const Factorization& o) const {
        return std::tie(holes, sets, boundary) <=> std::tie(o.holes, o.sets, o.boundary);
    }
};

// e.g. "{0,1}^2 {1,2,3} | boundary 1,0,1,1"
inline std::ostream& operator<<(std::ostream& os, const Factorization& f) {
    for (std::size_t i = 0; i < f.sets.size(); ++i) {
        os << (i ? " " : "") << f.sets[i].first;
        if (f.sets[i].second != 1) os << "^" << f.sets[i].second;
    }
    os << " | boundary ";
    for (std::size_t q = 0; q < f.boundary.size(); ++q) os << (q ? "," : "") << f.boundary[q];
    return os;
}

// Groups a multiset of sets and boundary counts into a Factorization.
inline Factorization make_factorization(int holes, std::vector<HoleSet> sets, std::vector<long long> boundary) {
    std::sort(sets.begin(), sets.end());
    Factorization f;
    f.holes = holes;
    for (auto& s : sets) {
        if (!f.sets.empty() && f.sets.back().first == s)
            ++f.sets.back().second;
        else
            f.sets.emplace_back(std::move(s), 1);
    }
    f.boundary = std::move(boundary);
    return f;
}

struct SolveOptions {
    std::size_t max_solutions = 0;  // 0: all
    std::uint64_t node_budget = 50'000'000;
    std::optional<std::vector<long long>> hole_caps;  // extra cap on non-boundary twists per hole
};

enum class SolveStatus {
    Complete,      // every factorization listed
    Truncated,     // stopped at max_solutions; at least that many exist
    Inconclusive,  // node budget exhausted
};

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Complete: return "complete";
        case SolveStatus::Truncated: return "truncated";
        case SolveStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct SolveResult {
    SolveStatus status = SolveStatus::Complete;
    std::vector<Factorization> solutions;
    std::uint64_t nodes = 0;

    bool proven_empty() const { return status == SolveStatus::Complete && solutions.empty(); }
};

struct InfeasibilityWitness {
    enum class Kind { NegativePair, NegativeBound, PairExceedsBound } kind;
    Hole i = 0;
    Hole j = -1;  // second hole for pair witnesses
    long long value = 0;
    std::string message;
};

struct ConstraintReport {
    int holes = 0;
    std::vector<long long> bounds;  // target_bound per hole
    AbelianImage target{1};
    std::vector<InfeasibilityWitness> witnesses;

    bool infeasible() const { return !witnesses.empty(); }
};

inline ConstraintReport analyze_constraints(const AbelianImage& target) {
    ConstraintReport r;
    r.holes = target.holes();
    r.target = target;
    const int n = target.holes();
    for (Hole q = 0; q < n; ++q) r.bounds.push_back(target_bound(target, q));
    for (Hole i = 0; i < n; ++i)
        for (Hole j = i + 1; j < n; ++j)
            if (target.pair(i, j) < 0)
                r.witnesses.push_back({InfeasibilityWitness::Kind::NegativePair, i, j, target.pair(i, j),
                                       "pair {" + std::to_string(i) + "," + std::to_string(j) +
                                           "} has negative multiplicity " + std::to_string(target.pair(i, j))});
    for (Hole q = 0; q < n; ++q) {
        const long long bound = r.bounds[static_cast<std::size_t>(q)];
        if (bound < 0) {
            r.witnesses.push_back({InfeasibilityWitness::Kind::NegativeBound, q, -1, bound,
                                   "hole " + std::to_string(q) + " has negative twist bound " + std::to_string(bound)});
            continue;
        }
        // every pair {q,j} needs m_pair{q,j} distinct sets through q
        for (Hole j = 0; j < n; ++j) {
            if (j == q || target.pair(q, j) <= bound) continue;
            r.witnesses.push_back({InfeasibilityWitness::Kind::PairExceedsBound, q, j, target.pair(q, j),
                                   "pair {" + std::to_string(std::min(q, j)) + "," + std::to_string(std::max(q, j)) +
                                       "} needs " + std::to_string(target.pair(q, j)) +
                                       " twists through hole " + std::to_string(q) + " but its bound is " +
                                       std::to_string(bound)});
        }
    }
    return r;
}

namespace detail {

class FactorizationSearch {
public:
    FactorizationSearch(const AbelianImage& target, const SolveOptions& opts) : target_(target), opts_(opts), n_(target.holes()) {
        for (Hole i = 0; i < n_; ++i)
            for (Hole j = i + 1; j < n_; ++j) pairs_.emplace_back(i, j);
        residual_.resize(pairs_.size());
        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            residual_[p] = target.pair(pairs_[p].first, pairs_[p].second);
            pair_total_ += std::max(0LL, residual_[p]);
        }
        caps_.resize(static_cast<std::size_t>(n_));
        for (Hole q = 0; q < n_; ++q) {
            long long c = target_bound(target, q);
            if (opts.hole_caps) {
                if (opts.hole_caps->size() != static_cast<std::size_t>(n_))
                    throw DomainError("hole_caps must have one entry per hole");
                c = std::min(c, (*opts.hole_caps)[static_cast<std::size_t>(q)]);
            }
            caps_[static_cast<std::size_t>(q)] = c;
        }
        load_.assign(static_cast<std::size_t>(n_), 0);
        build_candidates();
    }

    SolveResult run() {
        for (long long r : residual_)
            if (r < 0) return result_;  // positive twists never contribute negatively to a pair
        for (long long c : caps_)
            if (c < 0) return result_;
        try {
            next_pair(0);
        } catch (const Stop&) {
        }
        std::sort(result_.solutions.begin(), result_.solutions.end(),
                  [](const Factorization& a, const Factorization& b) {
                      return std::tie(a.sets, a.boundary) < std::tie(b.sets, b.boundary);
                  });
        return result_;
    }

private:
    struct Stop {};

    struct Candidate {
        HoleSet set;
        std::vector<std::size_t> pair_ids;
    };

    std::size_t pair_id(Hole i, Hole j) const {
        if (i > j) std::swap(i, j);
        return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + static_cast<std::size_t>(j - i - 1);
    }

    // For pair (i,j): sets whose two smallest holes are i and j, and all of
    // whose pairs have positive target multiplicity.
    void build_candidates() {
        candidates_.resize(pairs_.size());
        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            auto [i, j] = pairs_[p];
            if (residual_[p] <= 0) continue;
            std::vector<Hole> tail;
            for (Hole h = j + 1; h < n_; ++h)
                if (residual_[pair_id(i, h)] > 0 && residual_[pair_id(j, h)] > 0) tail.push_back(h);
            extend(p, {i, j}, tail, 0);
            std::sort(candidates_[p].begin(), candidates_[p].end(),
                      [](const Candidate& a, const Candidate& b) { return a.set < b.set; });
        }
    }

    void extend(std::size_t p, std::vector<Hole> members, const std::vector<Hole>& tail, std::size_t from) {
        Candidate c;
        c.set = HoleSet(members);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) c.pair_ids.push_back(pair_id(members[a], members[b]));
        candidates_[p].push_back(std::move(c));
        for (std::size_t k = from; k < tail.size(); ++k) {
            Hole h = tail[k];
            bool ok = true;
            for (std::size_t m = 2; m < members.size() && ok; ++m) ok = residual_[pair_id(members[m], h)] > 0;
            if (!ok) continue;
            members.push_back(h);
            extend(p, members, tail, k + 1);
            members.pop_back();
        }
    }

    void count_node() {
        if (++result_.nodes > opts_.node_budget) {
            result_.status = SolveStatus::Inconclusive;
            throw Stop{};
        }
    }

    void next_pair(std::size_t p) {
        while (p < pairs_.size() && residual_[p] == 0) ++p;
        if (p == pairs_.size()) {
            emit();
            return;
        }
        // residual_[p] > 0 here; later sets cannot touch pair p
        choose(p, 0, residual_[p]);
    }

    void choose(std::size_t p, std::size_t from, long long remaining) {
        count_node();
        if (remaining == 0) {
            next_pair(p + 1);
            return;
        }
        auto& cands = candidates_[p];
        for (std::size_t c = from; c < cands.size(); ++c) {
            if (!fits(cands[c])) continue;
            apply(cands[c], -1);
            chosen_.push_back(&cands[c].set);
            if (chosen_.size() > static_cast<std::size_t>(pair_total_))
                throw std::logic_error("factorization search exceeded its termination bound");
            choose(p, c, remaining - 1);
            chosen_.pop_back();
            apply(cands[c], +1);
        }
    }

    bool fits(const Candidate& c) const {
        for (auto id : c.pair_ids)
            if (residual_[id] <= 0) return false;
        for (Hole q : c.set)
            if (load_[static_cast<std::size_t>(q)] >= caps_[static_cast<std::size_t>(q)]) return false;
        return true;
    }

    void apply(const Candidate& c, long long delta) {
        for (auto id : c.pair_ids) residual_[id] += delta;
        for (Hole q : c.set) load_[static_cast<std::size_t>(q)] -= delta;
    }

    void emit() {
        std::vector<HoleSet> sets;
        for (const HoleSet* s : chosen_) sets.push_back(*s);
        std::vector<long long> boundary(static_cast<std::size_t>(n_));
        for (Hole q = 0; q < n_; ++q) {
            long long b = target_.single(q);
            for (const HoleSet* s : chosen_)
                if (s->contains(q)) b += static_cast<long long>(s->size()) - 2;
            if (b != target_bound(target_, q) - load_[static_cast<std::size_t>(q)] || b < 0)
                throw std::logic_error("boundary count identity violated");
            boundary[static_cast<std::size_t>(q)] = b;
        }
        result_.solutions.push_back(make_factorization(n_, std::move(sets), std::move(boundary)));
        if (opts_.max_solutions && result_.solutions.size() >= opts_.max_solutions) {
            result_.status = SolveStatus::Truncated;
            throw Stop{};
        }
    }

    const AbelianImage& target_;
    const SolveOptions& opts_;
    int n_;
    std::vector<std::pair<Hole, Hole>> pairs_;
    std::vector<long long> residual_;
    long long pair_total_ = 0;
    std::vector<long long> caps_;
    std::vector<long long> load_;
    std::vector<std::vector<Candidate>> candidates_;
    std::vector<const HoleSet*> chosen_;
    SolveResult result_;
};

}  // namespace detail

inline constexpr int kMaxSolverHoles = 16;

inline SolveResult enumerate_positive_factorizations(const AbelianImage& target, const SolveOptions& opts = {}) {
    if (target.holes() > kMaxSolverHoles)
        throw DomainError("solver supports at most " + std::to_string(kMaxSolverHoles) + " holes");
    if (opts.node_budget == 0) throw DomainError("node budget must be positive");
    return detail::FactorizationSearch(target, opts).run();
}

}  // namespace planarfill
