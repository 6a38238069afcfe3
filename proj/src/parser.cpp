#include "lapalg/parser.hpp"

#include <cctype>

namespace lapalg {

namespace {

constexpr int kMaxExponent = 100000;

// Parses over an unbounded variable space first, then narrows to the actual
// count; this lets one pass handle both explicit and inferred dimensions.
class Parser {
public:
    Parser(const std::string& text, const std::string& prefix) : text_(text), prefix_(prefix) {}

    Polynomial run(int nvars) {
        skip_ws();
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        int needed = max_index_;  // highest 1-based variable index used
        int n = nvars >= 0 ? nvars : needed;
        if (needed > n)
            fail_at(max_index_pos_, "unknown variable " + prefix_ + std::to_string(needed) +
                                        " (ambient has " + std::to_string(n) + " variables)");
        Polynomial out(n);
        for (const auto& [m, c] : p.terms()) {
            Monomial mm(n);
            for (int i = 0; i < n && i < m.nvars(); ++i) mm.e[i] = m.e[i];
            out.add_term(mm, c);
        }
        return out;
    }

private:
    const std::string& text_;
    std::string prefix_;
    std::size_t pos_ = 0;
    int max_index_ = 0;
    std::size_t max_index_pos_ = 0;
    static constexpr int kSpace = 256;  // working variable space while parsing

    [[noreturn]] void fail(const std::string& msg) { fail_at(pos_, msg); }

    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw parse_error(msg, at, line, col);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string read_digits(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        return text_.substr(start, pos_ - start);
    }

    Polynomial parse_expr() {
        bool negate = false;
        skip_ws();
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+'))
                acc += parse_term();
            else if (accept('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_primary();
        if (accept('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
            std::string digits = read_digits("exponent");
            long e = 0;
            for (char ch : digits) {
                e = e * 10 + (ch - '0');
                if (e > kMaxExponent) fail("exponent too large");
            }
            base = pow(base, static_cast<unsigned int>(e));
        }
        return base;
    }

    Polynomial parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input, expected a factor");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t num_pos = pos_;
            std::string num = read_digits("number");
            std::string den = "1";
            // '/' continues a rational literal only when a digit follows.
            std::size_t save = pos_;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                skip_ws();
                if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    den = read_digits("denominator");
                } else {
                    fail("expected denominator digits");
                }
            } else {
                pos_ = save;
            }
            if (den == "0") fail_at(num_pos, "zero denominator");
            return Polynomial::constant(kSpace, make_rational(num, den));
        }
        // variable: prefix followed by a positive index
        if (text_.compare(pos_, prefix_.size(), prefix_) == 0 &&
            pos_ + prefix_.size() < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + prefix_.size()]))) {
            std::size_t var_pos = pos_;
            pos_ += prefix_.size();
            std::string digits = read_digits("variable index");
            long idx = 0;
            for (char ch : digits) {
                idx = idx * 10 + (ch - '0');
                if (idx > kSpace) fail_at(var_pos, "variable index too large");
            }
            if (idx == 0) fail_at(var_pos, "variable indices start at 1");
            if (idx > max_index_) {
                max_index_ = static_cast<int>(idx);
                max_index_pos_ = var_pos;
            }
            return Polynomial::variable(kSpace, static_cast<int>(idx - 1));
        }
        fail("expected a factor");
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars, const std::string& var_prefix) {
    Parser p(text, var_prefix);
    return p.run(nvars);
}

}  // namespace lapalg
