#pragma once

#include "pframe/configs.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace pframe {

// Vector file format: plain text, '#' starts a comment line, every other
// nonblank line holds the same number of whitespace-separated decimal
// reals (one vector per line).

/// Parse a configuration. Rows whose norm lies in [1 - 1e-6, 1 + 1e-6]
/// are renormalized silently; anything further from 1 is an error
/// (invariant_violation). Malformed text throws parse_error.
Configuration parse_vectors(std::istream& in);
Configuration load_vectors(const std::string& path);

/// Write arbitrary rows in the same format (also used for Gale-dual
/// vectors and weights, which are not unit vectors).
void write_rows(std::ostream& out, std::size_t rows, std::size_t cols,
                const std::vector<double>& data, const std::string& comment = "");

void save_vectors(const std::string& path, const Configuration& x);

}  // namespace pframe
