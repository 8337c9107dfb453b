// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "fibq/integrity.hpp"

#include <cstdio>
#include <limits>
#include <random>
#include <vector>

#include "fibq/alphabet.hpp"
#include "fibq/error.hpp"

namespace fibq {

namespace {

// Candidate space of one row: every other d in -676..676, then every other
// value of b1, b2, b4.
constexpr std::uint64_t kDetCandidates = 2 * kMaxDet;         // 1352
constexpr std::uint64_t kFieldCandidates = kAlphabetSize - 1;  // 26
constexpr std::uint64_t kPerRow = kDetCandidates + 3 * kFieldCandidates;

int skip_original(int value, int original) {
    return value >= original ? value + 1 : value;
}

Corruption nth_candidate(const Codeword& codeword, std::uint64_t id) {
    const std::size_t row = static_cast<std::size_t>(id / kPerRow);
    std::uint64_t k = id % kPerRow;
    const CodedRow& r = codeword.rows[row];
    if (k < kDetCandidates) {
        return Corruption{row, RowField::d, skip_original(-kMaxDet + static_cast<int>(k), r.d)};
    }
    k -= kDetCandidates;
    const int value = static_cast<int>(k % kFieldCandidates);
    switch (k / kFieldCandidates) {
        case 0:
            return Corruption{row, RowField::b1, skip_original(value, r.b1)};
        case 1:
            return Corruption{row, RowField::b2, skip_original(value, r.b2)};
        default:
            return Corruption{row, RowField::b4, skip_original(value, r.b4)};
    }
}

// Unbiased draw from [0, n), independent of the standard library's
// distribution implementation so seeded sweeps reproduce everywhere.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t v = gen();
    while (v >= limit) {
        v = gen();
    }
    return v % n;
}

void apply(CodedRow& row, RowField field, int value) {
    switch (field) {
        case RowField::d:
            row.d = value;
            break;
        case RowField::b1:
            row.b1 = value;
            break;
        case RowField::b2:
            row.b2 = value;
            break;
        case RowField::b4:
            row.b4 = value;
            break;
    }
}

std::string matrix_text(const MessageMatrix& matrix, int shift) {
    std::string symbols;
    symbols.reserve(matrix.cells().size());
    for (int value : matrix.cells()) {
        symbols.push_back(symbol_of(value, shift));
    }
    return render_text(symbols);
}

}  // namespace

Codeword corrupt(const Codeword& codeword, std::span<const Corruption> faults) {
    Codeword result = codeword;
    for (const Corruption& fault : faults) {
        if (fault.row >= result.rows.size()) {
            throw CodecError(errc::bad_argument,
                             "corruption row " + std::to_string(fault.row) + " out of range");
        }
        CodedRow& row = result.rows[fault.row];
        const bool is_det = fault.field == RowField::d;
        const int lo = is_det ? -kMaxDet : 0;
        const int hi = is_det ? kMaxDet : kAlphabetSize - 1;
        if (fault.value < lo || fault.value > hi) {
            throw CodecError(errc::bad_argument,
                             "corruption value " + std::to_string(fault.value) + " out of range");
        }
        int* slot = nullptr;
        switch (fault.field) {
            case RowField::d:
                slot = &row.d;
                break;
            case RowField::b1:
                slot = &row.b1;
                break;
            case RowField::b2:
                slot = &row.b2;
                break;
            case RowField::b4:
                slot = &row.b4;
                break;
        }
        if (*slot == fault.value) {
            throw CodecError(errc::bad_argument, "corruption must change the value");
        }
        *slot = fault.value;
    }
    return result;
}

DecodeOutcome decode_checked(const Codeword& codeword,
                             std::optional<std::string_view> reference) {
    std::optional<DecodeResult> result;
    try {
        result = decode(codeword);
    } catch (const CodecError& e) {
        return DecodeOutcome{OutcomeKind::detected, e.what()};
    }
    if (!reference) {
        return DecodeOutcome{OutcomeKind::ok_unverified, result->text};
    }
    const std::string expected = render_text(normalize_text(*reference));
    if (result->text == expected) {
        return DecodeOutcome{OutcomeKind::ok, result->text};
    }
    return DecodeOutcome{OutcomeKind::silent_miscorrection, result->text};
}

SweepStats detection_sweep(const Codeword& codeword, std::string_view reference, SweepMode mode,
                           std::uint64_t seed, std::size_t sample_count) {
    if (encode(reference) != codeword) {
        throw CodecError(errc::bad_argument,
                         "reference message does not encode to the codeword");
    }
    const std::string expected = render_text(normalize_text(reference));

    const int m = codeword.m();
    const int shift = codeword.shift();
    const QMatrix q = q_power(shift);

    std::vector<Block> blocks;
    blocks.reserve(codeword.rows.size());
    for (const CodedRow& row : codeword.rows) {
        blocks.push_back(decode_row(row, q));
    }
    if (matrix_text(join_blocks(blocks, m), shift) != expected) {
        throw CodecError(errc::bad_argument, "codeword does not decode to the reference");
    }

    SweepStats stats;
    const bool exhaustive =
        mode == SweepMode::exhaustive ||
        (mode == SweepMode::automatic && codeword.rows.size() <= kExhaustiveSweepRowLimit);
    stats.sampled = !exhaustive;

    // Only the corrupted row can decode differently, so it suffices to
    // re-solve that one row. A block that differs from the baseline always
    // changes the rendered text too: a changed cell inside the text changes
    // that character, and a changed cell in the padding extends the text.
    auto classify = [&](const Corruption& fault) {
        CodedRow corrupted = codeword.rows[fault.row];
        apply(corrupted, fault.field, fault.value);
        Block decoded;
        try {
            decoded = decode_row(corrupted, q);
        } catch (const CodecError&) {
            ++stats.detected;
            return;
        }
        if (decoded == blocks[fault.row]) {
            ++stats.ok;
        } else {
            ++stats.silent;
        }
    };

    const std::uint64_t candidates = codeword.rows.size() * kPerRow;
    if (exhaustive) {
        for (std::uint64_t id = 0; id < candidates; ++id) {
            classify(nth_candidate(codeword, id));
        }
        stats.total = candidates;
    } else {
        std::mt19937_64 gen(seed);
        for (std::size_t i = 0; i < sample_count; ++i) {
            classify(nth_candidate(codeword, bounded(gen, candidates)));
        }
        stats.total = sample_count;
    }
    return stats;
}

std::string format_report(const SweepStats& stats) {
    char fraction[32];
    std::snprintf(fraction, sizeof fraction, "%.4f", stats.fraction());
    std::string report;
    report += "total=" + std::to_string(stats.total) + "\n";
    report += "detected=" + std::to_string(stats.detected) + "\n";
    report += "silent=" + std::to_string(stats.silent) + "\n";
    report += "fraction=";
    report += fraction;
    report += "\n";
    return report;
}

}  // namespace fibq
