// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "fibq/alphabet.hpp"

#include <cstdio>

#include "fibq/error.hpp"

namespace fibq {

namespace {

std::string describe_char(char c) {
    if (c >= 0x21 && c <= 0x7e) {
        return std::string("'") + c + "'";
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "0x%02x", static_cast<unsigned char>(c));
    return buf;
}

}  // namespace

bool is_symbol(char c) {
    return (c >= 'A' && c <= 'Z') || c == kPadSymbol;
}

int symbol_index(char c) {
    if (c >= 'A' && c <= 'Z') {
        return c - 'A';
    }
    if (c == kPadSymbol) {
        return kAlphabetSize - 1;
    }
    throw CodecError(errc::bad_argument, "not an alphabet symbol: " + describe_char(c));
}

char symbol_at(int index) {
    if (index < 0 || index >= kAlphabetSize) {
        throw CodecError(errc::bad_argument,
                         "symbol index " + std::to_string(index) + " out of range");
    }
    return index == kAlphabetSize - 1 ? kPadSymbol : static_cast<char>('A' + index);
}

int value_of(char symbol, int shift) {
    if (shift < 0) {
        throw CodecError(errc::bad_argument, "table shift must be nonnegative");
    }
    return (shift % kAlphabetSize + symbol_index(symbol)) % kAlphabetSize;
}

char symbol_of(int value, int shift) {
    if (shift < 0) {
        throw CodecError(errc::bad_argument, "table shift must be nonnegative");
    }
    if (value < 0 || value >= kAlphabetSize) {
        throw CodecError(errc::value_out_of_range,
                         "symbol value " + std::to_string(value) + " out of range");
    }
    const int index = (value - shift % kAlphabetSize + kAlphabetSize) % kAlphabetSize;
    return symbol_at(index);
}

std::string normalize_text(std::string_view raw) {
    if (raw.empty()) {
        throw CodecError(errc::empty_message, "empty message");
    }
    std::string symbols;
    symbols.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const char c = raw[i];
        if (c >= 'a' && c <= 'z') {
            symbols.push_back(static_cast<char>(c - 'a' + 'A'));
        } else if ((c >= 'A' && c <= 'Z') || c == kPadSymbol) {
            symbols.push_back(c);
        } else if (c == ' ') {
            symbols.push_back(kPadSymbol);
        } else {
            throw CodecError(errc::unsupported_character,
                             "unsupported character " + describe_char(c) + " at position " +
                                 std::to_string(i));
        }
    }
    return symbols;
}

}  // namespace fibq
