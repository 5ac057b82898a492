#pragma once

#include "surfstrat/poly.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace surfstrat {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t at)
        : std::runtime_error(msg + " (at column " + std::to_string(at + 1) + ")"), pos(at) {}
};

/// Parse polynomial text: rational coefficients, + - * ^, parentheses.
/// Implicit multiplication is a parse error. When `allowed` is given,
/// identifiers outside the set are rejected.
PolyQ parse_poly(const std::string& text,
                 const std::optional<std::set<std::string>>& allowed = std::nullopt);

} // namespace surfstrat
