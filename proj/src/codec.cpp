// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "fibq/codec.hpp"

#include <utility>

#include "fibq/alphabet.hpp"
#include "fibq/error.hpp"

namespace fibq {

namespace {

std::size_t isqrt(std::size_t v) {
    if (v < 2) {
        return v;
    }
    std::size_t r = v / 2;
    std::size_t next = (r + v / r) / 2;
    while (next < r) {
        r = next;
        next = (r + v / r) / 2;
    }
    return r;
}

}  // namespace

int Codeword::m() const {
    const std::size_t b = rows.size();
    if (b == 0) {
        throw CodecError(errc::shape_mismatch, "empty codeword");
    }
    const std::size_t root = isqrt(b);
    if (root * root != b) {
        throw CodecError(errc::shape_mismatch,
                         "block count " + std::to_string(b) + " is not a perfect square");
    }
    return static_cast<int>(root);
}

int Codeword::shift() const {
    return choose_n(rows.size());
}

CodedRow encode_block(const Block& block) {
    return CodedRow{block.det(), block.b1, block.b2, block.b4};
}

Codeword encode(std::string_view raw) {
    const std::string symbols = normalize_text(raw);
    const SymbolMatrix layout = build_matrix(symbols);
    const int shift = choose_n(static_cast<std::size_t>(layout.block_count()));

    std::vector<int> values;
    values.reserve(layout.cells.size());
    for (char c : layout.cells) {
        values.push_back(value_of(c, shift));
    }
    const MessageMatrix matrix(layout.side, std::move(values));

    const std::vector<Block> blocks = split_blocks(matrix);
    Codeword codeword;
    codeword.rows.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].b2 == 0) {
            throw CodecError(errc::unencodable_block,
                             "block " + std::to_string(i) +
                                 ": value 0 in the b2 position cannot be encoded");
        }
        codeword.rows.push_back(encode_block(blocks[i]));
    }
    return codeword;
}

RowSolution solve_row(const CodedRow& row, const QMatrix& q) {
    BigInt e1 = q.q1 * row.b1 + q.q3 * row.b2;
    BigInt e2 = q.q2 * row.b1 + q.q4 * row.b2;

    // (-1)^n d = (e1 q2 - e2 q1) x + (e1 q4 - e2 q3) b4
    const BigInt coefficient = e1 * q.q2 - e2 * q.q1;
    if (coefficient == 0) {
        throw CodecError(errc::degenerate_equation, "degenerate equation");
    }
    const int sign = q.n % 2 == 0 ? 1 : -1;
    const BigInt rhs = BigInt(sign * row.d) - (e1 * q.q4 - e2 * q.q3) * row.b4;

    BigInt quotient;
    BigInt remainder;
    divide_qr(rhs, coefficient, quotient, remainder);
    if (remainder != 0) {
        throw CodecError(errc::non_integer_solution, "non-integer solution");
    }
    if (quotient < 0 || quotient >= kAlphabetSize) {
        throw CodecError(errc::value_out_of_range,
                         "recovered value " + quotient.str() + " out of range");
    }
    return RowSolution{std::move(e1), std::move(e2), quotient.convert_to<int>()};
}

Block decode_row(const CodedRow& row, const QMatrix& q) {
    return Block{row.b1, row.b2, solve_row(row, q).x, row.b4};
}

DecodeResult decode(const Codeword& codeword) {
    const int m = codeword.m();
    const int shift = codeword.shift();
    const QMatrix q = q_power(shift);

    std::vector<Block> blocks;
    blocks.reserve(codeword.rows.size());
    for (std::size_t i = 0; i < codeword.rows.size(); ++i) {
        try {
            blocks.push_back(decode_row(codeword.rows[i], q));
        } catch (const CodecError& e) {
            throw CodecError(e.code(), "row " + std::to_string(i) + ": " + e.what());
        }
    }

    MessageMatrix matrix = join_blocks(blocks, m);
    std::string symbols;
    symbols.reserve(matrix.cells().size());
    for (int value : matrix.cells()) {
        symbols.push_back(symbol_of(value, shift));
    }
    return DecodeResult{std::move(matrix), render_text(symbols)};
}

std::string render_text(std::string_view symbols) {
    const std::size_t end = symbols.find_last_not_of(kPadSymbol);
    if (end == std::string_view::npos) {
        return {};
    }
    std::string text(symbols.substr(0, end + 1));
    for (char& c : text) {
        if (c == kPadSymbol) {
            c = ' ';
        }
    }
    return text;
}

}  // namespace fibq
