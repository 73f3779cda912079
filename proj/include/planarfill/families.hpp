#pragma once

// Monodromy families: planar open books for tight L(p,1) and for the
// Seifert fibered spaces M(-1; r1, r2, r3), negative continued fractions,
// and the fillability dichotomy for the Seifert family.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planarfill/mcg_core.hpp"

namespace planarfill {

// Exact rational in lowest terms with positive denominator.
class Rational {
public:
    Rational(long long num = 0, long long den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw DomainError("zero denominator");
        if (den_ < 0) {
            num_ = checked::sub(0, num_);
            den_ = checked::sub(0, den_);
        }
        long long g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    // "a/b" or "a"
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        auto to_ll = [&](std::string_view s) {
            if (s.empty()) throw DomainError("malformed rational '" + std::string(text) + "'");
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(std::string(s), &used);
            } catch (const std::exception&) {
                throw DomainError("malformed rational '" + std::string(text) + "'");
            }
            if (used != s.size()) throw DomainError("malformed rational '" + std::string(text) + "'");
            return v;
        };
        if (slash == std::string_view::npos) return Rational(to_ll(text));
        return Rational(to_ll(text.substr(0, slash)), to_ll(text.substr(slash + 1)));
    }

    long long num() const noexcept { return num_; }
    long long den() const noexcept { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {checked::add(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)), checked::mul(a.den_, b.den_)};
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {checked::mul(a.num_, b.num_), checked::mul(a.den_, b.den_)};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("division by zero");
        return {checked::mul(a.num_, b.den_), checked::mul(a.den_, b.num_)};
    }
    Rational operator-() const { return {checked::sub(0, num_), den_}; }

    bool operator==(const Rational&) const = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked::mul(a.num_, b.den_) < checked::mul(b.num_, a.den_);
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

private:
    long long num_;
    long long den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// [x_1, ..., x_n] = -x_1 - 1/(-x_2 - 1/(... - 1/(-x_n))), every x_i >= 2.
struct CFExpansion {
    std::vector<long long> entries;

    CFExpansion() = default;
    explicit CFExpansion(std::vector<long long> e) : entries(std::move(e)) {
        if (entries.empty()) throw DomainError("continued fraction needs at least one entry");
        for (long long x : entries)
            if (x < 2) throw DomainError("continued fraction entries must be >= 2");
    }

    std::size_t size() const noexcept { return entries.size(); }
    long long operator[](std::size_t i) const { return entries.at(i); }

    // length of the leading run of 2's
    std::size_t leading_twos() const {
        std::size_t k = 0;
        while (k < entries.size() && entries[k] == 2) ++k;
        return k;
    }

    bool operator==(const CFExpansion&) const = default;

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + std::to_string(entries[i]);
        return s + "]";
    }
};

inline Rational eval_cf(const CFExpansion& cf) {
    Rational v(-cf.entries.back());
    for (auto it = cf.entries.rbegin() + 1; it != cf.entries.rend(); ++it) v = Rational(-*it) - Rational(1) / v;
    return v;
}

// Expansion of -1/r for 0 < r < 1.
inline CFExpansion neg_continued_fraction(const Rational& r) {
    if (!(Rational(0) < r && r < Rational(1)))
        throw DomainError("continued fraction expects 0 < r < 1, got " + r.str());
    // x = b/a > 1; peel x_i = ceil(x), continue with 1/(x_i - x) while nonzero
    long long p = r.den(), q = r.num();  // x = p/q
    std::vector<long long> e;
    while (true) {
        long long x = p / q + (p % q != 0 ? 1 : 0);
        e.push_back(x);
        long long rem = checked::sub(checked::mul(x, q), p);  // x - p/q = rem/q
        if (rem == 0) break;
        p = q;
        q = rem;
    }
    return CFExpansion(std::move(e));
}

struct LabeledWord {
    MonodromyWord word;
    HoleLabeling labels;
};

// Open book for the tight structure xi_k on L(p,1): n = p-1 holes, alpha
// around holes 0..k-1, beta around k-1..n-1, and a boundary twist at every
// hole except k-1. For k = 1 alpha is the boundary twist at hole 0 and beta
// encloses all holes: the universally tight structure.
inline LabeledWord lens_word(int p, int k) {
    if (p < 3) throw DomainError("lens_word needs p >= 3");
    if (k < 1 || k > p - 2) throw DomainError("lens_word needs 1 <= k <= p-2");
    const int n = p - 1;
    LabeledWord out{MonodromyWord(Surface(n)), {}};
    out.word.push(HoleSet::range(0, k - 1));
    for (Hole h = 0; h < n; ++h)
        if (h != k - 1) out.word.push(HoleSet{h});
    out.word.push(HoleSet::range(k - 1, n - 1));
    for (Hole h = 0; h < n; ++h) out.labels["hole" + std::to_string(h + 1)] = h;
    return out;
}

struct SeifertParams {
    Rational r1, r2, r3;

    CFExpansion cf1() const { return neg_continued_fraction(r1); }
    CFExpansion cf2() const { return neg_continued_fraction(r2); }
    CFExpansion cf3() const { return neg_continued_fraction(r3); }

    long long k1() const { return static_cast<long long>(cf1().leading_twos()); }
    long long k2() const { return static_cast<long long>(cf2().leading_twos()); }
    long long c1() const { return cf3()[0]; }
    long long n1() const { return static_cast<long long>(cf1().size()); }
    long long n2() const { return static_cast<long long>(cf2().size()); }
    long long n3() const { return static_cast<long long>(cf3().size()); }

    // r1, r2 in [1/2, 1) and r3 in (0, 1).
    void require_domain() const {
        const Rational half(1, 2), one(1);
        for (const auto* r : {&r1, &r2})
            if (*r < half || *r >= one)
                throw DomainError("Seifert family needs 1/2 <= r1, r2 < 1, got " + r->str());
        if (r3 <= Rational(0) || r3 >= one) throw DomainError("Seifert family needs 0 < r3 < 1, got " + r3.str());
    }
};

// Canonical open book for the candidate non-fillable structure on
// M(-1; r1, r2, r3). Holes clockwise: w1?, q1, t, q2, w2?, s_1..s_{c1-1}.
// Boundary twists sit at q1, q2, every s_i, and w1/w2 when present.
inline LabeledWord seifert_word(const SeifertParams& params) {
    params.require_domain();
    const long long k1 = params.k1(), k2 = params.k2(), c1 = params.c1();
    const long long n1 = params.n1(), n2 = params.n2(), n3 = params.n3();
    if (c1 < 2) throw DomainError("c1 must be >= 2");

    HoleLabeling lab;
    Hole next = 0;
    if (n1 > k1) lab["w1"] = next++;
    lab["q1"] = next++;
    lab["t"] = next++;
    lab["q2"] = next++;
    if (n2 > k2) lab["w2"] = next++;
    for (long long i = 1; i <= c1 - 1; ++i) lab["s" + std::to_string(i)] = next++;
    if (next > 64) throw DomainError("Seifert word too large");

    const Hole q1 = lab["q1"], q2 = lab["q2"], t = lab["t"];
    LabeledWord out{MonodromyWord(Surface(next)), lab};
    auto& w = out.word;
    for (long long i = 0; i < k1; ++i) w.push(HoleSet{q1, t});
    for (long long i = 0; i < n1 - k1; ++i) w.push(HoleSet{q1, t, lab["w1"]});
    for (long long i = 0; i < k2; ++i) w.push(HoleSet{q2, t});
    for (long long i = 0; i < n2 - k2; ++i) w.push(HoleSet{q2, t, lab["w2"]});
    w.push(HoleSet{q1, q2, t}, -1);
    std::vector<Hole> big{q1, q2, t};
    for (long long i = 1; i <= c1 - 1; ++i) big.push_back(lab["s" + std::to_string(i)]);
    for (long long i = 0; i < n3; ++i) w.push(HoleSet(big));
    w.push(HoleSet{q1});
    w.push(HoleSet{q2});
    for (long long i = 1; i <= c1 - 1; ++i) w.push(HoleSet{lab["s" + std::to_string(i)]});
    if (n1 > k1) w.push(HoleSet{lab["w1"]});
    if (n2 > k2) w.push(HoleSet{lab["w2"]});
    return out;
}

enum class FillabilityVerdict { NonfillableExists, AllFillable };

inline const char* to_string(FillabilityVerdict v) {
    return v == FillabilityVerdict::NonfillableExists ? "NonfillableExists" : "AllFillable";
}

// Tight, non-fillable structures exist iff c1 - 1 > max(k1, k2).
inline FillabilityVerdict fillability_predicate(const SeifertParams& params) {
    params.require_domain();
    return params.c1() - 1 > std::max(params.k1(), params.k2()) ? FillabilityVerdict::NonfillableExists
                                                                 : FillabilityVerdict::AllFillable;
}

}  // namespace planarfill
