#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sympow/affine_counting.hpp"
#include "sympow/etale.hpp"

namespace sympow::io {

/// Variety stanzas, separated by blank lines, `#` starting a comment:
///
///     label=conic; q=3; vars=x,y; eqs: x^2 + y^2 - 1
///
/// A stanza may span several lines. `eqs:` comes last and its equations are
/// separated by `;`; an empty list gives affine space. ParseError positions
/// refer to the whole text.
std::vector<counting::AffineVarietySpec> parse_varieties(std::string_view text);

/// `q=4; r=2; modulus=t^2 + t + 2`, modulus optional; fields are separated by
/// `;` or newlines. For prime q the coefficients are integers reduced mod q;
/// otherwise each coefficient is an F_q element code in [0, q).
etale::ExtensionSpec parse_extension(std::string_view text);

/// Whole file contents; throws InvalidInput when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace sympow::io
