#pragma once

#include "segchi/construction.hpp"

#include <string>

namespace segchi {

// Canonical JSON family file: fixed key order, rationals as "num/den"
// strings in lowest terms, newline-terminated; byte-deterministic.
std::string emit_family(const Construction& c);

// Exact inverse of emit_family on valid input. ParseError for malformed
// files, ValueError for non-canonical rationals or invariant breaches.
Construction parse_family(const std::string& text);

} // namespace segchi
