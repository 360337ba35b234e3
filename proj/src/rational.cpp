#include "pscf/rational.hpp"

#include <stdexcept>

namespace pscf {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(Bigint(num), Bigint(den));
}

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    std::size_t slash = s.find('/');
    std::string_view num_part = (slash == std::string_view::npos) ? s : trim(s.substr(0, slash));
    std::string_view den_part = (slash == std::string_view::npos)
                                    ? std::string_view("1")
                                    : trim(s.substr(slash + 1));
    if (!valid_integer_token(num_part))
        throw std::invalid_argument("rational: bad numerator in '" + std::string(text) + "'");
    if (!valid_integer_token(den_part))
        throw std::invalid_argument("rational: bad denominator in '" + std::string(text) + "'");
    Bigint num{std::string(num_part)};
    Bigint den{std::string(den_part)};
    if (den <= 0)
        throw std::invalid_argument("rational: denominator must be positive in '" +
                                    std::string(text) + "'");
    return Rational(num, den);
}

std::string fraction_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return fraction_str(r);
}

}  // namespace pscf
