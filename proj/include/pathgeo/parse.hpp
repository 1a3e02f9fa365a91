#pragma once

// Recursive-descent parser for the expression grammar
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' integer)?
//   atom   := identifier | integer-literal | '(' expr ')'
//
// Identifiers must be declared chart coordinates; whitespace is insignificant.

#include <string>
#include <vector>

#include "pathgeo/ratexpr.hpp"

namespace pathgeo {

class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

RatExpr parse_expr(const std::string& text, const std::vector<std::string>& coords);

}  // namespace pathgeo
