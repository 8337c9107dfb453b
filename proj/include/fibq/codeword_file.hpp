// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "fibq/codec.hpp"

namespace fibq {

/// Codeword file format:
///
///   FIBQ1 b=<row count>
///   <d> <b1> <b2> <b4>
///   ...
///
/// One line per row, base-10 integers, trailing newline, nothing else. The
/// declared count must match the rows, be a perfect square, and every field
/// must be in range (b fields 0..26, d -676..676).
inline constexpr std::string_view kCodewordMagic = "FIBQ1";

std::string write_codeword(const Codeword& codeword);
void write_codeword(std::ostream& out, const Codeword& codeword);

/// Parses and validates; every violated format invariant gets its own
/// diagnostic.
Codeword parse_codeword(std::string_view text);
Codeword read_codeword(std::istream& in);

}  // namespace fibq
