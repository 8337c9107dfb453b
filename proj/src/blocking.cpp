// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "fibq/blocking.hpp"

#include <limits>
#include <utility>

#include "fibq/alphabet.hpp"
#include "fibq/error.hpp"

namespace fibq {

MessageMatrix::MessageMatrix(int side, std::vector<int> cells)
    : side_(side), cells_(std::move(cells)) {
    if (side_ < 2 || side_ % 2 != 0) {
        throw CodecError(errc::bad_argument, "matrix side must be a positive even number");
    }
    if (cells_.size() != static_cast<std::size_t>(side_) * static_cast<std::size_t>(side_)) {
        throw CodecError(errc::bad_argument, "cell count does not match the matrix side");
    }
}

int MessageMatrix::at(int row, int col) const {
    if (row < 0 || row >= side_ || col < 0 || col >= side_) {
        throw CodecError(errc::bad_argument, "cell index out of range");
    }
    return cells_[static_cast<std::size_t>(row) * side_ + col];
}

SymbolMatrix build_matrix(std::string_view symbols) {
    if (symbols.empty()) {
        throw CodecError(errc::empty_message, "empty message");
    }
    for (char c : symbols) {
        if (!is_symbol(c)) {
            throw CodecError(errc::bad_argument, "build_matrix expects canonical symbols");
        }
    }
    int m = 1;
    while (static_cast<std::size_t>(2 * m) * static_cast<std::size_t>(2 * m) < symbols.size()) {
        ++m;
    }
    const int side = 2 * m;
    std::string cells(symbols);
    cells.append(static_cast<std::size_t>(side) * side - symbols.size(), kPadSymbol);
    return SymbolMatrix{side, std::move(cells)};
}

std::vector<Block> split_blocks(const MessageMatrix& matrix) {
    const int m = matrix.m();
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(m) * m);
    for (int tr = 0; tr < m; ++tr) {
        for (int tc = 0; tc < m; ++tc) {
            blocks.push_back(Block{matrix.at(2 * tr, 2 * tc), matrix.at(2 * tr, 2 * tc + 1),
                                   matrix.at(2 * tr + 1, 2 * tc),
                                   matrix.at(2 * tr + 1, 2 * tc + 1)});
        }
    }
    return blocks;
}

MessageMatrix join_blocks(std::span<const Block> blocks, int m) {
    if (m < 1) {
        throw CodecError(errc::bad_argument, "m must be positive");
    }
    if (blocks.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) {
        throw CodecError(errc::shape_mismatch,
                         "expected " + std::to_string(static_cast<std::size_t>(m) * m) +
                             " blocks, got " + std::to_string(blocks.size()));
    }
    const int side = 2 * m;
    std::vector<int> cells(static_cast<std::size_t>(side) * side);
    for (int tr = 0; tr < m; ++tr) {
        for (int tc = 0; tc < m; ++tc) {
            const Block& block = blocks[static_cast<std::size_t>(tr) * m + tc];
            const std::size_t top = static_cast<std::size_t>(2 * tr) * side + 2 * tc;
            cells[top] = block.b1;
            cells[top + 1] = block.b2;
            cells[top + side] = block.b3;
            cells[top + side + 1] = block.b4;
        }
    }
    return MessageMatrix(side, std::move(cells));
}

int choose_n(std::size_t block_count) {
    if (block_count == 0) {
        throw CodecError(errc::bad_argument, "block count must be positive");
    }
    if (block_count <= 3) {
        return 3;
    }
    if (block_count > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
        throw CodecError(errc::bad_argument, "block count too large");
    }
    return static_cast<int>(block_count);
}

}  // namespace fibq
