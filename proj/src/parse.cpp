#include "hypo/parse.hpp"

#include <cctype>

namespace hypo::symbol {

namespace {

class Scanner {
  public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        return text_[pos_++];
    }
    size_t pos() const { return pos_; }

    bool starts_number() {
        char c = peek();
        return (c >= '0' && c <= '9') || c == '.';
    }

    // Unsigned numeric literal (digits, optional . or / part).
    Rat number() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if ((c >= '0' && c <= '9') || c == '.' || c == '/')
                ++pos_;
            else
                break;
        }
        if (pos_ == start) throw ParseError("expected a number", start);
        try {
            return rat_from_literal(text_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
    }

    // Signed real-or-imaginary component inside a parenthesized complex literal.
    // Returns (value, is_imaginary).
    std::pair<Rat, bool> signed_component() {
        Rat sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            get();
            if (c == '-') sign = -1;
        }
        if (peek() == 'i' || peek() == 'I') {
            get();
            return {sign, true};
        }
        Rat v = sign * number();
        if (peek() == 'i' || peek() == 'I') {
            get();
            return {v, true};
        }
        return {v, false};
    }

  private:
    const std::string& text_;
    size_t pos_ = 0;
};

// Exponent for z / zbar: nonnegative integer.
int int_exponent(Scanner& sc) {
    size_t at = sc.pos();
    Rat e = sc.number();
    if (e.get_den() != 1 || sgn(e) < 0)
        throw ParseError("z/zbar exponent must be a nonnegative integer", at);
    if (!e.get_num().fits_sint_p()) throw ParseError("exponent too large", at);
    return static_cast<int>(e.get_num().get_si());
}

// One multiplicative factor applied onto the monomial under construction.
void apply_factor(Scanner& sc, CRat& coeff, int& holo, int& anti, Rat& radial) {
    char c = sc.peek();
    size_t at = sc.pos();
    if (sc.starts_number()) {
        Rat v = sc.number();
        if (sc.peek() == 'i' || sc.peek() == 'I') {
            sc.get();
            coeff *= CRat(Rat(0), v);
        } else {
            coeff *= CRat(v);
        }
        return;
    }
    if (c == '(') {
        sc.get();
        CRat value;
        auto [a, a_im] = sc.signed_component();
        if (a_im)
            value.im += a;
        else
            value.re += a;
        while (sc.peek() == '+' || sc.peek() == '-') {
            auto [b, b_im] = sc.signed_component();
            if (b_im)
                value.im += b;
            else
                value.re += b;
        }
        if (sc.peek() != ')') throw ParseError("expected ')'", sc.pos());
        sc.get();
        coeff *= value;
        return;
    }
    if (c == 'i' || c == 'I') {
        sc.get();
        coeff *= CRat(Rat(0), Rat(1));
        return;
    }
    if (c == 'z' || c == 'Z') {
        sc.get();
        bool bar = false;
        if (sc.peek() == 'b' || sc.peek() == 'B') {
            // "zbar"
            for (char expect : {'b', 'a', 'r'}) {
                char got = sc.get();
                if (std::tolower(static_cast<unsigned char>(got)) != expect)
                    throw ParseError("expected 'zbar'", at);
            }
            bar = true;
        }
        int e = 1;
        if (sc.peek() == '^') {
            sc.get();
            e = int_exponent(sc);
        }
        (bar ? anti : holo) += e;
        return;
    }
    if (c == 'r' || c == 'R') {
        sc.get();
        Rat e = 1;
        if (sc.peek() == '^') {
            sc.get();
            size_t eat = sc.pos();
            e = sc.number();
            if (sgn(e) < 0) throw ParseError("|z| exponent must be nonnegative", eat);
        }
        radial += e;
        return;
    }
    if (c == '\0') throw ParseError("unexpected end of input", at);
    throw ParseError(std::string("unexpected token '") + c + "'", at);
}

}  // namespace

RadialSymbol parse_symbol(const std::string& text) {
    Scanner sc(text);
    RadialSymbol out;
    if (sc.done()) throw ParseError("empty symbol", 0);
    bool first = true;
    while (!sc.done()) {
        Rat sign = 1;
        char c = sc.peek();
        if (c == '+' || c == '-') {
            sc.get();
            if (c == '-') sign = -1;
        } else if (!first) {
            throw ParseError(std::string("expected '+' or '-', got '") + c + "'", sc.pos());
        }
        first = false;

        CRat coeff(sign);
        int holo = 0, anti = 0;
        Rat radial = 0;
        apply_factor(sc, coeff, holo, anti, radial);
        while (sc.peek() == '*') {
            sc.get();
            apply_factor(sc, coeff, holo, anti, radial);
        }
        out.terms.emplace_back(coeff, holo, anti, radial);
    }
    return normalize(out);
}

}  // namespace hypo::symbol
