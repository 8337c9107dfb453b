// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fibq/blocking.hpp"
#include "fibq/fibonacci.hpp"

namespace fibq {

/// Largest magnitude a block determinant can take with entries in 0..26.
inline constexpr int kMaxDet = 26 * 26;

/// One transmitted record (d, b1, b2, b4). The source block's b3 is omitted;
/// the determinant d is the side information that lets the decoder recover it.
struct CodedRow {
    int d = 0;
    int b1 = 0;
    int b2 = 0;
    int b4 = 0;

    bool operator==(const CodedRow&) const = default;
};

/// Ordered coded rows. Everything else is derived: the block count b is the
/// row count, m = sqrt(b), and the shift n follows from b alone, so none of
/// them travel with the codeword.
struct Codeword {
    std::vector<CodedRow> rows;

    std::size_t block_count() const { return rows.size(); }

    /// Throws shape_mismatch unless the row count is a (positive) perfect square.
    int m() const;

    /// Table shift and Q exponent, derived from the row count.
    int shift() const;

    bool operator==(const Codeword&) const = default;
};

CodedRow encode_block(const Block& block);

/// Full encode pipeline: normalize, pad into the smallest even square,
/// value every cell under the derived shift, tile, and encode each tile.
/// Rejects any message that places value 0 in a b2 cell, since that block
/// could never be decoded (see solve_row).
Codeword encode(std::string_view raw);

/// Exact intermediates of one row recovery.
struct RowSolution {
    BigInt e1;
    BigInt e2;
    int x = 0;  // the recovered b3
};

/// Recovers the omitted element by solving, over the integers,
///
///   (-1)^n d = e1 (q2 x + q4 b4) - e2 (q1 x + q3 b4)
///
/// with e1 = q1 b1 + q3 b2 and e2 = q2 b1 + q4 b2. The solve is exact; a
/// zero x-coefficient (exactly the b2 = 0 case), a non-integer x, or an x
/// outside 0..26 each raise their own error, which is what gives the scheme
/// its corruption-detection power.
RowSolution solve_row(const CodedRow& row, const QMatrix& q);

/// solve_row rebuilt into the full block [[b1,b2],[x,b4]].
Block decode_row(const CodedRow& row, const QMatrix& q);

struct DecodeResult {
    MessageMatrix matrix;
    std::string text;
};

/// Full decode pipeline: derive n from the row count, recover every block,
/// rebuild the matrix, and render the text.
DecodeResult decode(const Codeword& codeword);

/// Presentation rule for decoded symbols: the trailing '0' run is stripped
/// and every interior '0' renders as a single space. Lossy for messages that
/// end in spaces or contain literal '0'.
std::string render_text(std::string_view symbols);

}  // namespace fibq
