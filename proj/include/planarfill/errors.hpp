#pragma once

#include <stdexcept>
#include <string>

namespace planarfill {

// A twist whose hole set is empty or does not fit the surface.
class InvalidTwist : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A lantern instance violating disjointness or the cyclic-order condition.
class InvalidInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameters outside the domain an operation is defined on.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A hole set with no registered automorphism construction.
class UnsupportedCurve : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPositive : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Word file / JSON diagnostics. `where` names the offending field.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

namespace checked {

inline long long add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
    return r;
}

inline long long sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}

inline long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

}  // namespace checked

}  // namespace planarfill
