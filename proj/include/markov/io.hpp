#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "markov/kernel.hpp"

namespace markov {

/// Kernel documents:
///   {"kind": "stoch"|"signed"|"multi", "dom": [...], "cod": [...],
///    "matrix": [[entry, ...], ...]}
/// with one row per codomain element and entries written as integers or
/// "n/d" strings. Multi documents may give "images" (per domain element, a
/// list of codomain labels) instead of "matrix".
///
/// Throws Error(ParseError) naming the offending field, or
/// Error(ValidationError) when the kernel violates its column law.
Kernel parse_kernel(std::string_view text);
/// Same parsing without the column-law check.
Kernel parse_kernel_unchecked(std::string_view text);

/// Canonical form: reduced fractions, "images" for multi kernels, two-space
/// indentation.
std::string emit_kernel(const Kernel& k);

/// Reads a whole file; "-" reads `stdin_stream`. Throws Error(ParseError).
std::string read_text(const std::string& path, std::istream& stdin_stream);

}  // namespace markov
