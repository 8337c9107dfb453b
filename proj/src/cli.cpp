// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "fibq/cli.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fibq/alphabet.hpp"
#include "fibq/codec.hpp"
#include "fibq/codeword_file.hpp"
#include "fibq/error.hpp"
#include "fibq/integrity.hpp"

namespace fibq {

namespace {

std::string slurp(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string read_input(const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") {
        return slurp(fallback);
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw CodecError(errc::io_error, "cannot open input file '" + path + "'");
    }
    return slurp(file);
}

void write_output(const std::string& path, std::ostream& fallback, const std::string& payload) {
    if (path.empty() || path == "-") {
        fallback << payload;
        fallback.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw CodecError(errc::io_error, "cannot open output file '" + path + "'");
    }
    file << payload;
    if (!file) {
        throw CodecError(errc::io_error, "cannot write output file '" + path + "'");
    }
}

// Message text keeps everything except line endings at the very end.
std::string strip_trailing_newlines(std::string text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.pop_back();
    }
    return text;
}

SweepMode parse_mode(const std::string& mode) {
    if (mode == "exhaustive") {
        return SweepMode::exhaustive;
    }
    if (mode == "sampled") {
        return SweepMode::sampled;
    }
    return SweepMode::automatic;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Fibonacci Q-matrix block codec"};
    app.name("fibq");
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;

    CLI::App* cmd_encode =
        app.add_subcommand("encode", "Encode a text message into a codeword file");
    cmd_encode->add_option("--in", in_path, "message file (default: stdin)");
    cmd_encode->add_option("--out", out_path, "codeword file (default: stdout)");

    CLI::App* cmd_decode =
        app.add_subcommand("decode", "Decode a codeword file back into text");
    cmd_decode->add_option("--in", in_path, "codeword file (default: stdin)");
    cmd_decode->add_option("--out", out_path, "message file (default: stdout)");

    int table_shift = 0;
    CLI::App* cmd_table = app.add_subcommand("table", "Print the letter table for a shift n");
    cmd_table->add_option("n", table_shift, "table shift (at least 3)")->required();

    std::string mode = "auto";
    std::uint64_t seed = 0;
    CLI::App* cmd_simulate = app.add_subcommand(
        "simulate", "Measure error detection under single-field corruptions");
    cmd_simulate->add_option("--in", in_path, "message file (default: stdin)");
    cmd_simulate->add_option("--out", out_path, "report file (default: stdout)");
    cmd_simulate->add_option("--mode", mode, "auto|exhaustive|sampled (default: auto)")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
    CLI::Option* seed_opt =
        cmd_simulate->add_option("--seed", seed, "generator seed (sampled mode only)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (app.got_subcommand(cmd_encode)) {
            const std::string text = strip_trailing_newlines(read_input(in_path, in));
            write_output(out_path, out, write_codeword(encode(text)));
            return 0;
        }
        if (app.got_subcommand(cmd_decode)) {
            const Codeword codeword = parse_codeword(read_input(in_path, in));
            write_output(out_path, out, decode(codeword).text + "\n");
            return 0;
        }
        if (app.got_subcommand(cmd_table)) {
            if (table_shift < 3) {
                throw CodecError(errc::bad_argument, "table shift must be at least 3");
            }
            std::string table;
            for (int index = 0; index < kAlphabetSize; ++index) {
                const char symbol = symbol_at(index);
                table += symbol;
                table += ' ' + std::to_string(value_of(symbol, table_shift)) + "\n";
            }
            write_output(out_path, out, table);
            return 0;
        }
        if (app.got_subcommand(cmd_simulate)) {
            if (seed_opt->count() > 0 && mode != "sampled") {
                throw CodecError(errc::bad_argument, "--seed requires --mode sampled");
            }
            const std::string text = strip_trailing_newlines(read_input(in_path, in));
            const Codeword codeword = encode(text);
            const SweepStats stats = detection_sweep(codeword, text, parse_mode(mode), seed);
            write_output(out_path, out, format_report(stats));
            return 0;
        }
    } catch (const CodecError& e) {
        err << "fibq: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "fibq: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace fibq
