// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "fibq/codec.hpp"

namespace fibq {

enum class RowField { d, b1, b2, b4 };

/// One channel fault: overwrite `field` of row `row` with `value`. The
/// channel preserves field ranges (b fields stay in 0..26, d in +-676), so a
/// corruption models a plausible but wrong codeword, not a malformed one.
struct Corruption {
    std::size_t row = 0;
    RowField field = RowField::d;
    int value = 0;
};

/// Copy of the codeword with the listed faults applied, in order.
Codeword corrupt(const Codeword& codeword, std::span<const Corruption> faults);

enum class OutcomeKind {
    ok,                    // decoded and matches the reference
    ok_unverified,         // decoded, but no reference to compare against
    detected,              // some row raised a decode error
    silent_miscorrection,  // decoded cleanly to the wrong message
};

struct DecodeOutcome {
    OutcomeKind kind = OutcomeKind::detected;
    std::string detail;  // decode error text, or the decoded message
};

/// decode() with classification: decode errors become `detected` instead of
/// propagating, and a clean decode is checked against the reference message
/// when one is given.
DecodeOutcome decode_checked(const Codeword& codeword,
                             std::optional<std::string_view> reference = std::nullopt);

enum class SweepMode {
    automatic,   // exhaustive up to kExhaustiveSweepRowLimit rows, sampled beyond
    exhaustive,
    sampled,
};

inline constexpr std::size_t kExhaustiveSweepRowLimit = 16;
inline constexpr std::size_t kDefaultSweepSamples = 20000;

struct SweepStats {
    std::uint64_t total = 0;
    std::uint64_t detected = 0;
    std::uint64_t silent = 0;
    std::uint64_t ok = 0;
    bool sampled = false;

    double fraction() const {
        return total == 0 ? 0.0 : static_cast<double>(detected) / static_cast<double>(total);
    }
};

/// Classifies every single-field corruption of the codeword within the legal
/// value ranges (or a seeded sample of them) against the reference message
/// the codeword encodes. Deterministic for a given mode and seed.
SweepStats detection_sweep(const Codeword& codeword, std::string_view reference,
                           SweepMode mode = SweepMode::automatic, std::uint64_t seed = 0,
                           std::size_t sample_count = kDefaultSweepSamples);

/// Flat key=value report: total, detected, silent, fraction (4 decimals).
std::string format_report(const SweepStats& stats);

}  // namespace fibq
