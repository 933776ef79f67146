#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "germlab/poly.hpp"

namespace germlab {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at column " + std::to_string(pos + 1)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' uint)?
// base   := int ('/' uint)? | var | '(' expr ')'
Poly parse_poly(const std::string& text, const VariableSet& vars);

// Integer expression in named parameters, same grammar; result must be an integer.
long long eval_int_expr(const std::string& text, const std::map<std::string, long long>& params);

}  // namespace germlab
