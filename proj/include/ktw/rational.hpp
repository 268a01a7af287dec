#pragma once

#include <cstdint>
#include <string>

namespace ktw {

// Exact rational with positive denominator, always in lowest terms. Balance
// predicates (size <= p * total) are evaluated without any floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const Rational&) const = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

// Parses "2/3" or an integer "1".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

bool rat_less(const Rational& a, const Rational& b);
bool rat_leq(const Rational& a, const Rational& b);

// value <= p * total, exactly.
bool scaled_leq(std::int64_t value, const Rational& p, std::int64_t total);

// The separator balance constant must satisfy 2/3 <= p < 1.
bool valid_separator_fraction(const Rational& p);

}  // namespace ktw
