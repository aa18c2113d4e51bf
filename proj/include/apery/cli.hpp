#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "apery/lattice.hpp"

namespace apery {

/// Parse a generator list from either the inline format
/// "c1,c2,...;c1,c2,..." or a JSON document ({"generators": [[...],...]} or
/// a bare array of vectors). ParseError carries the offending position.
std::vector<LatticeVector> parse_generators(const std::string& text);

struct CliConfig {
    enum class Command { analyze, check, batch };
    enum class Format { json, text };

    Command command = Command::analyze;
    std::optional<std::string> gens_inline;
    std::optional<std::string> input_path;  // "-" means stdin
    Format output_format = Format::json;
    std::optional<std::string> check_property;
    int hilbert_cap = 40;
};

/// Execute a parsed configuration. Returns the process exit code:
/// 0 success (or property true), 1 property false, 2 input or analysis
/// error (or property not applicable), 64 usage error.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace apery
