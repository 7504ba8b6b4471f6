#include "specvar/rational.hpp"

#include <cctype>
#include <ostream>

namespace specvar {

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
    s = trim(s);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer_token(s))
            throw DomainError("ParseError", "invalid rational: '" + std::string(s) + "'");
        return Rational(Integer(std::string(s)));
    }
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw DomainError("ParseError", "invalid rational: '" + std::string(s) + "'");
    return Rational(Integer(std::string(num)), Integer(std::string(den)));
}

std::string Rational::str() const {
    std::string out = numerator().str();
    if (!is_integer()) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace specvar
