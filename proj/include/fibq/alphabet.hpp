// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>
#include <string_view>

namespace fibq {

/// The 27-symbol alphabet: 'A'..'Z' plus '0', which doubles as the word
/// separator and the end-of-message fill.
inline constexpr int kAlphabetSize = 27;
inline constexpr char kPadSymbol = '0';

bool is_symbol(char c);

/// Canonical index: 'A' -> 0 ... 'Z' -> 25, '0' -> 26.
int symbol_index(char c);
char symbol_at(int index);

/// Shifted letter-table value (shift + index) mod 27. The table depends on
/// the shift only mod 27 and is a bijection onto 0..26 for any fixed shift.
int value_of(char symbol, int shift);

/// Inverse of value_of. A value outside 0..26 signals a corrupt decode.
char symbol_of(int value, int shift);

/// Canonical symbol sequence for a raw message: letters are upcased, each
/// space becomes '0', literal '0' passes through. Anything else is rejected
/// with its position; empty input is rejected.
std::string normalize_text(std::string_view raw);

}  // namespace fibq
