#pragma once

#include "homcalc/error.hpp"
#include "homcalc/poly.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace homcalc {

// Syntax error inside a polynomial literal; offset is a byte index into the parsed text.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, std::string found);

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
    std::string found_;
};

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ('+' | '-') factor | atom ('^' integer)?
//   atom   := integer ('/' integer)? | identifier | '(' expr ')'
Poly parse_poly(std::string_view text, const Variables& vars);

} // namespace homcalc
