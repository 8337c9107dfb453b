// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <stdexcept>
#include <string>

namespace fibq {

/// Classification of every failure the library reports. The integrity module
/// keys off these codes when it decides whether a corrupted codeword was
/// caught by the decoder.
enum class errc {
    empty_message,
    unsupported_character,
    unencodable_block,     // a b2 cell valued to 0 at encode time
    shape_mismatch,        // block/row counts that cannot form a square
    degenerate_equation,   // b2 = 0 leaves the recovery equation without x
    non_integer_solution,  // recovered x is not an integer
    value_out_of_range,    // recovered value outside 0..26
    bad_argument,
    bad_format,            // codeword file violates the format
    io_error,
};

class CodecError : public std::runtime_error {
public:
    CodecError(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace fibq
