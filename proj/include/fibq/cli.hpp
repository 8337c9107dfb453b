// Copyright 2026 the fibq authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibq {

/// Command dispatch for the fibq tool. `args` excludes the program name; the
/// streams stand in for stdin/stdout/stderr so commands can run in-process.
/// Returns the process exit status: 0 only on full success.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace fibq
