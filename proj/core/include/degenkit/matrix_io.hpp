#pragma once

// Dense matrix text format: a header line `rows cols`, then rows*cols
// whitespace-separated entries in row-major order. Integer files take
// decimal integers; rational files also take `p/q`. `#` starts a comment.

#include <map>
#include <string>
#include <string_view>

#include "degenkit/matrix.hpp"

namespace degenkit {

IntMatrix parse_int_matrix(std::string_view text);
RatMatrix parse_rational_matrix(std::string_view text);

std::string write_matrix(const IntMatrix& m);
std::string write_matrix(const RatMatrix& m);

/// Sections of the form `NAME` followed by a dense integer matrix, e.g.
/// ALPHA/BETA/GAMMA/DELTA. Each name listed in `names` must appear exactly
/// once and no other names may appear.
std::map<std::string, IntMatrix> parse_labeled_matrices(std::string_view text,
                                                        std::initializer_list<std::string_view> names);

}  // namespace degenkit
