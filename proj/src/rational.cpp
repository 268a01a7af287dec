#include "ktw/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace ktw {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return make_rational(std::stoll(text), 1);
        return make_rational(std::stoll(text.substr(0, slash)),
                             std::stoll(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("rational: value out of range in '" + text + "'");
    }
}

std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

bool rat_less(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

bool rat_leq(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
}

bool scaled_leq(std::int64_t value, const Rational& p, std::int64_t total) {
    return static_cast<__int128>(value) * p.den <= static_cast<__int128>(p.num) * total;
}

bool valid_separator_fraction(const Rational& p) {
    return rat_leq(Rational{2, 3}, p) && rat_less(p, Rational{1, 1});
}

}  // namespace ktw
