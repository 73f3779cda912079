#pragma once

// Free group on x_0..x_{n-1} with words stored as reduced syllables x_g^e,
// and automorphisms given by the images of the generators.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "planarfill/errors.hpp"

namespace planarfill {

struct Syllable {
    int gen;
    long long exp;  // never zero in a reduced word

    bool operator==(const Syllable&) const = default;
};

// Freely reduced: no zero exponents and no two adjacent syllables on the
// same generator. Reduction runs eagerly on every append.
class FreeWord {
public:
    FreeWord() = default;
    static FreeWord gen(int g, long long e = 1) {
        FreeWord w;
        w.append(g, e);
        return w;
    }

    const std::vector<Syllable>& syllables() const noexcept { return syl_; }
    bool empty() const noexcept { return syl_.empty(); }

    std::size_t length() const {
        std::size_t n = 0;
        for (const auto& s : syl_) n += static_cast<std::size_t>(std::llabs(s.exp));
        return n;
    }

    void append(int g, long long e) {
        if (e == 0) return;
        if (!syl_.empty() && syl_.back().gen == g) {
            syl_.back().exp = checked::add(syl_.back().exp, e);
            if (syl_.back().exp == 0) syl_.pop_back();
        } else {
            syl_.push_back({g, e});
        }
    }

    FreeWord& operator*=(const FreeWord& o) {
        for (const auto& s : o.syl_) append(s.gen, s.exp);
        return *this;
    }
    friend FreeWord operator*(FreeWord a, const FreeWord& b) { return a *= b; }

    FreeWord inverse() const {
        FreeWord r;
        r.syl_.reserve(syl_.size());
        for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.syl_.push_back({it->gen, -it->exp});
        return r;
    }

    FreeWord pow(long long k) const {
        if (k < 0) return inverse().pow(-k);
        FreeWord r;
        for (long long i = 0; i < k; ++i) r *= *this;
        return r;
    }

    FreeWord conjugate_by(const FreeWord& c) const { return c * *this * c.inverse(); }

    // True iff the word is c x_g c^{-1} for some c.
    bool is_conjugate_of_generator(int g) const {
        std::vector<Syllable> s = syl_;
        std::size_t lo = 0, hi = s.size();
        while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
            auto& a = s[lo].exp;
            auto& b = s[hi - 1].exp;
            if ((a > 0) == (b > 0)) break;
            long long m = std::min(std::llabs(a), std::llabs(b));
            a += a > 0 ? -m : m;
            b += b > 0 ? -m : m;
            if (a == 0) ++lo;
            if (b == 0) --hi;
        }
        return hi - lo == 1 && s[lo].gen == g && s[lo].exp == 1;
    }

    bool operator==(const FreeWord&) const = default;

    std::string str() const {
        if (syl_.empty()) return "1";
        std::string r;
        for (std::size_t i = 0; i < syl_.size(); ++i) {
            if (i) r += " ";
            r += "x" + std::to_string(syl_[i].gen);
            if (syl_[i].exp != 1) r += "^" + std::to_string(syl_[i].exp);
        }
        return r;
    }

private:
    std::vector<Syllable> syl_;
};

inline std::ostream& operator<<(std::ostream& os, const FreeWord& w) { return os << w.str(); }

// Endomorphism of F_n by generator images; callers keep it invertible.
class Automorphism {
public:
    explicit Automorphism(int n = 1) {
        images_.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) images_.push_back(FreeWord::gen(i));
    }
    explicit Automorphism(std::vector<FreeWord> images) : images_(std::move(images)) {}

    static Automorphism identity(int n) { return Automorphism(n); }

    int rank() const noexcept { return static_cast<int>(images_.size()); }
    const FreeWord& image(int g) const { return images_.at(static_cast<std::size_t>(g)); }
    const std::vector<FreeWord>& images() const noexcept { return images_; }

    FreeWord apply(const FreeWord& w) const {
        FreeWord r;
        for (const auto& s : w.syllables()) r *= image(s.gen).pow(s.exp);
        return r;
    }

    // (f * g)(x) = f(g(x)): g acts first.
    friend Automorphism operator*(const Automorphism& f, const Automorphism& g) {
        if (f.rank() != g.rank()) throw DomainError("composing automorphisms of different rank");
        std::vector<FreeWord> imgs;
        imgs.reserve(g.images_.size());
        for (const auto& w : g.images_) imgs.push_back(f.apply(w));
        return Automorphism(std::move(imgs));
    }

    // Conjugation x -> c x c^{-1} on the listed generators, identity elsewhere.
    static Automorphism partial_conjugation(int n, std::span<const int> gens, const FreeWord& c) {
        Automorphism a(n);
        for (int g : gens) a.images_.at(static_cast<std::size_t>(g)) = FreeWord::gen(g).conjugate_by(c);
        return a;
    }

    bool operator==(const Automorphism&) const = default;

private:
    std::vector<FreeWord> images_;
};

// x_0 x_1 ... x_{n-1}: the outer boundary loop.
inline FreeWord boundary_word(int n) {
    FreeWord w;
    for (int i = 0; i < n; ++i) w.append(i, 1);
    return w;
}

// Artin half twist exchanging holes i and i+1; exponent +-1.
//   +1: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
//   -1: x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
inline Automorphism half_twist(int n, int i, int exponent) {
    if (i < 0 || i + 1 >= n) throw DomainError("half twist index out of range");
    std::vector<FreeWord> imgs;
    for (int g = 0; g < n; ++g) imgs.push_back(FreeWord::gen(g));
    const auto xi = FreeWord::gen(i), xj = FreeWord::gen(i + 1);
    if (exponent > 0) {
        imgs[static_cast<std::size_t>(i)] = xj.conjugate_by(xi);
        imgs[static_cast<std::size_t>(i + 1)] = xi;
    } else {
        imgs[static_cast<std::size_t>(i)] = xj;
        imgs[static_cast<std::size_t>(i + 1)] = xi.conjugate_by(xj.inverse());
    }
    return Automorphism(std::move(imgs));
}

}  // namespace planarfill
