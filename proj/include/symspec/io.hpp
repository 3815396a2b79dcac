#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "symspec/func_space.hpp"
#include "symspec/linear.hpp"

namespace symspec {

/// Set file: "n=<degree> convention=<Sn|An>" then one permutation per line.
/// Blank lines and lines starting with '#' are skipped; cycle notation is accepted.
SetFamily parse_set_text(std::string_view text);
SetFamily read_set_file(const std::string& path);
/// Canonical form: header, then members in rank order in one-line notation.
std::string format_set(const SetFamily& s);
void write_set_file(const std::string& path, const SetFamily& s);

/// Function file: "n=<degree>" header, then "rank value" or "perm value" lines.
/// A line with n+1 numeric tokens (or a leading '(') is a permutation followed by
/// its value; a line with two tokens is a rank. Unlisted ranks are zero, repeats
/// are rejected.
GroupFunction parse_function_text(std::string_view text);
GroupFunction read_function_file(const std::string& path);
/// Nonzero values only, as "rank value" with round-trip precision.
std::string format_function(const GroupFunction& f);
void write_function_file(const std::string& path, const GroupFunction& f);

CoeffMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const CoeffMatrix& m);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace symspec
