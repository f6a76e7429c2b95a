#include "rowmotion/rational.hpp"

#include <stdexcept>

namespace rowmotion {

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string num(text.substr(0, slash));
    const std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
    auto valid = [](const std::string& s, bool allow_sign) {
        std::size_t i = allow_sign && !s.empty() && s[0] == '-' ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!valid(num, true) || !valid(den, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    const Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q{Integer(num), d};
    q.canonicalize();
    return q;
}

}  // namespace rowmotion
