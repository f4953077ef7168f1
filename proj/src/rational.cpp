#include "hypo/rational.hpp"

#include <sstream>

namespace hypo {

Rat rat_from_literal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty numeric literal");
    std::string s = text;
    bool neg = false;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    std::string digits, frac;
    bool seen_dot = false, seen_slash = false;
    std::string den_digits;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot || seen_slash) throw std::invalid_argument("malformed literal: " + text);
            seen_dot = true;
        } else if (c == '/') {
            if (seen_dot || seen_slash) throw std::invalid_argument("malformed literal: " + text);
            seen_slash = true;
        } else if (c >= '0' && c <= '9') {
            if (seen_slash)
                den_digits += c;
            else if (seen_dot)
                frac += c;
            else
                digits += c;
        } else {
            throw std::invalid_argument("malformed literal: " + text);
        }
    }
    if (digits.empty() && frac.empty()) throw std::invalid_argument("malformed literal: " + text);
    Rat value;
    if (seen_slash) {
        if (digits.empty() || den_digits.empty())
            throw std::invalid_argument("malformed literal: " + text);
        mpz_class num(digits), den(den_digits);
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        value = Rat(num, den);
        value.canonicalize();
    } else {
        mpz_class num(digits.empty() ? std::string("0") : digits);
        if (!frac.empty()) {
            mpz_class scale = 1;
            for (size_t k = 0; k < frac.size(); ++k) scale *= 10;
            num = num * scale + mpz_class(frac);
            value = Rat(num, scale);
            value.canonicalize();
        } else {
            value = Rat(num);
        }
    }
    return neg ? Rat(-value) : value;
}

std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace hypo
