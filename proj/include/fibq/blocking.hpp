// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibq {

/// One 2x2 tile of the message matrix, laid out [[b1,b2],[b3,b4]].
struct Block {
    int b1 = 0;
    int b2 = 0;
    int b3 = 0;
    int b4 = 0;

    int det() const { return b1 * b4 - b2 * b3; }

    bool operator==(const Block&) const = default;
};

/// Square grid of cell values with even side 2m, stored row-major.
class MessageMatrix {
public:
    MessageMatrix(int side, std::vector<int> cells);

    int side() const { return side_; }
    int m() const { return side_ / 2; }
    int at(int row, int col) const;
    const std::vector<int>& cells() const { return cells_; }

    bool operator==(const MessageMatrix&) const = default;

private:
    int side_;
    std::vector<int> cells_;
};

/// Padded symbol layout of a message before table valuation.
struct SymbolMatrix {
    int side = 0;
    std::string cells;  // side*side canonical symbols, row-major

    int m() const { return side / 2; }
    int block_count() const { return m() * m(); }
};

/// Lays symbols row-major into the smallest even-sided square that holds
/// them, filling the tail with '0'.
SymbolMatrix build_matrix(std::string_view symbols);

/// The m*m 2x2 tiles of the matrix, left to right within a tile row, tile
/// rows top to bottom. Tile (r,c) takes b1 = M[2r][2c], b2 = M[2r][2c+1],
/// b3 = M[2r+1][2c], b4 = M[2r+1][2c+1].
std::vector<Block> split_blocks(const MessageMatrix& matrix);

/// Exact inverse of split_blocks; expects m*m blocks.
MessageMatrix join_blocks(std::span<const Block> blocks, int m);

/// Scheme parameter for a message of `block_count` blocks: 3 when the count
/// is at most 3, the count itself otherwise. Never below 3, so Q^n and the
/// letter table are always defined downstream.
int choose_n(std::size_t block_count);

}  // namespace fibq
