// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "fibq/codeword_file.hpp"

#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "fibq/alphabet.hpp"
#include "fibq/error.hpp"

namespace fibq {

namespace {

std::optional<long long> parse_integer(std::string_view token) {
    long long value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const std::size_t pos = text.find('\n');
        if (pos == std::string_view::npos) {
            lines.push_back(text);
            break;
        }
        lines.push_back(text.substr(0, pos));
        text.remove_prefix(pos + 1);
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') {
            ++j;
        }
        fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

[[noreturn]] void fail(const std::string& message) {
    throw CodecError(errc::bad_format, message);
}

void check_row_ranges(const CodedRow& row, const std::string& where, errc code) {
    if (row.d < -kMaxDet || row.d > kMaxDet) {
        throw CodecError(code, where + ": d " + std::to_string(row.d) + " out of range");
    }
    for (int field : {row.b1, row.b2, row.b4}) {
        if (field < 0 || field >= kAlphabetSize) {
            throw CodecError(code,
                             where + ": symbol field " + std::to_string(field) + " out of range");
        }
    }
}

}  // namespace

std::string write_codeword(const Codeword& codeword) {
    codeword.m();  // enforce the square-count invariant before writing
    std::string out;
    out += kCodewordMagic;
    out += " b=" + std::to_string(codeword.rows.size()) + "\n";
    for (std::size_t i = 0; i < codeword.rows.size(); ++i) {
        const CodedRow& row = codeword.rows[i];
        check_row_ranges(row, "row " + std::to_string(i), errc::bad_argument);
        out += std::to_string(row.d) + " " + std::to_string(row.b1) + " " +
               std::to_string(row.b2) + " " + std::to_string(row.b4) + "\n";
    }
    return out;
}

void write_codeword(std::ostream& out, const Codeword& codeword) {
    out << write_codeword(codeword);
}

Codeword parse_codeword(std::string_view text) {
    const std::vector<std::string_view> lines = split_lines(text);
    const std::string header_hint = std::string("expected '") + std::string(kCodewordMagic) +
                                    " b=<count>'";
    if (lines.empty()) {
        fail("bad header: empty input, " + header_hint);
    }

    std::string_view header = lines[0];
    const std::string prefix = std::string(kCodewordMagic) + " b=";
    if (header.substr(0, prefix.size()) != prefix) {
        fail("bad header: " + header_hint);
    }
    const auto declared = parse_integer(header.substr(prefix.size()));
    if (!declared || *declared < 0) {
        fail("bad header: " + header_hint);
    }
    if (*declared == 0) {
        fail("bad header: row count must be positive");
    }

    Codeword codeword;
    codeword.rows.resize(static_cast<std::size_t>(*declared));
    try {
        codeword.m();
    } catch (const CodecError&) {
        fail("block count " + std::to_string(*declared) + " is not a perfect square");
    }

    if (lines.size() - 1 != static_cast<std::size_t>(*declared)) {
        fail("row count mismatch: header declares " + std::to_string(*declared) +
             " rows, found " + std::to_string(lines.size() - 1));
    }

    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        const std::string where = "row " + std::to_string(i);
        const std::vector<std::string_view> fields = split_fields(lines[i + 1]);
        if (fields.size() != 4) {
            fail(where + ": expected 4 integers 'd b1 b2 b4'");
        }
        long long values[4];
        for (std::size_t f = 0; f < 4; ++f) {
            const auto value = parse_integer(fields[f]);
            if (!value) {
                fail(where + ": '" + std::string(fields[f]) + "' is not an integer");
            }
            values[f] = *value;
        }
        // Range checks run on the long long values so nothing wraps first.
        if (values[0] < -kMaxDet || values[0] > kMaxDet) {
            fail(where + ": d " + std::to_string(values[0]) + " out of range");
        }
        for (std::size_t f = 1; f < 4; ++f) {
            if (values[f] < 0 || values[f] >= kAlphabetSize) {
                fail(where + ": symbol field " + std::to_string(values[f]) + " out of range");
            }
        }
        codeword.rows[i] = CodedRow{static_cast<int>(values[0]), static_cast<int>(values[1]),
                                    static_cast<int>(values[2]), static_cast<int>(values[3])};
    }
    return codeword;
}

Codeword read_codeword(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_codeword(buffer.str());
}

}  // namespace fibq
