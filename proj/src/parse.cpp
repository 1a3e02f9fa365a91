#include "pathgeo/parse.hpp"

#include <cctype>

namespace pathgeo {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& coords)
        : text_(text), coords_(coords) {}

    RatExpr run() {
        RatExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    RatExpr expr() {
        RatExpr e = term();
        while (true) {
            skip_ws();
            if (accept('+'))
                e = e + term();
            else if (accept('-'))
                e = e - term();
            else
                return e;
        }
    }

    RatExpr term() {
        RatExpr e = factor();
        while (true) {
            skip_ws();
            if (accept('*')) {
                e = e * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RatExpr d = factor();
                if (d.is_zero()) throw parse_error("division by zero", at);
                e = e / d;
            } else {
                return e;
            }
        }
    }

    RatExpr factor() {
        skip_ws();
        if (accept('-')) return -factor();
        RatExpr e = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            bool neg = accept('-');
            std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected integer exponent");
            long k = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                k = k * 10 + (text_[pos_] - '0');
                if (k > 100000) throw parse_error("exponent too large", at);
                ++pos_;
            }
            if (neg && e.is_zero()) throw parse_error("negative power of zero", at);
            e = e.pow_int(neg ? -k : k);
        }
        return e;
    }

    RatExpr atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatExpr e = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            Int v(text_.substr(start, pos_ - start), 10);
            return RatExpr::constant(coords_.size(), v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < coords_.size(); ++i)
                if (coords_[i] == name) return RatExpr::variable(coords_.size(), i);
            throw parse_error("unknown identifier '" + name + "'", start);
        }
        fail("unexpected character");
        return RatExpr();  // unreachable
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }

    const std::string& text_;
    const std::vector<std::string>& coords_;
    std::size_t pos_ = 0;
};

}  // namespace

RatExpr parse_expr(const std::string& text, const std::vector<std::string>& coords) {
    return Parser(text, coords).run();
}

}  // namespace pathgeo
