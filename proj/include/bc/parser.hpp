#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "bc/expr.hpp"

namespace bc {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)),
          position(pos) {}
};

struct ParseOptions {
    std::string variable = "z";
    std::set<std::string> parameters;
};

// Infix grammar (see README for the EBNF): + - * / ^ with the usual
// precedence, ^ right-associative, fn(args), rational and imaginary
// literals, one free variable, declared parameter names. sqrt(u) normalizes
// to u^(1/2); nothing else is rewritten.
Expr parse(const std::string& text, const ParseOptions& opts = {});

}  // namespace bc
