#pragma once

#include <stdexcept>
#include <string>

#include "hypo/symbol.hpp"

namespace hypo::symbol {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Parses the CLI symbol syntax: sums of products of factors, where a factor
/// is a number, a parenthesized complex literal like (0.5+0.1i), the unit i,
/// or one of z^k, zbar^k, r^p. `r` denotes |z|. Literals parse exactly.
/// Example: "(0.5+0.1i)*z^3*zbar^1*r^2.5 - z + 1/2*r"
/// The result is normalized.
RadialSymbol parse_symbol(const std::string& text);

}  // namespace hypo::symbol
