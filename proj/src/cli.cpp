#include "apery/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "apery/errors.hpp"
#include "apery/report.hpp"

namespace apery {

namespace {

using ordered_json = nlohmann::ordered_json;

LatticeVector vector_from_json(const nlohmann::json& arr) {
    if (!arr.is_array() || arr.empty())
        throw ParseError("parse_generators: each generator must be a non-empty array");
    std::vector<Int> entries;
    for (const auto& x : arr) {
        if (x.is_number_integer())
            entries.emplace_back(x.get<long long>());
        else if (x.is_string())
            entries.emplace_back(Int(x.get<std::string>()));
        else
            throw ParseError("parse_generators: coordinates must be integers");
    }
    return LatticeVector{std::move(entries)};
}

std::vector<LatticeVector> generators_from_json(const nlohmann::json& doc) {
    const nlohmann::json* list = &doc;
    if (doc.is_object()) {
        auto it = doc.find("generators");
        if (it == doc.end())
            throw ParseError("parse_generators: JSON object lacks a \"generators\" key");
        list = &*it;
    }
    if (!list->is_array() || list->empty())
        throw ParseError("parse_generators: expected a non-empty array of generators");
    std::vector<LatticeVector> out;
    for (const auto& g : *list) out.push_back(vector_from_json(g));
    return out;
}

void check_equal_dimensions(const std::vector<LatticeVector>& gens) {
    for (size_t k = 1; k < gens.size(); ++k)
        if (gens[k].dim() != gens[0].dim())
            throw DimensionMismatchError("parse_generators: generator " + std::to_string(k + 1) +
                                         " has " + std::to_string(gens[k].dim()) +
                                         " coordinates, expected " +
                                         std::to_string(gens[0].dim()));
}

std::vector<LatticeVector> parse_inline(const std::string& text) {
    std::vector<LatticeVector> out;
    std::vector<Int> current;
    size_t i = 0;
    const size_t n = text.size();

    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_int = [&]() -> Int {
        skip_ws();
        const size_t start = i;
        if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError("parse_generators: expected an integer at position " +
                             std::to_string(start));
        return Int(text.substr(start, i - start));
    };

    for (;;) {
        current.push_back(parse_int());
        skip_ws();
        if (i < n && text[i] == ',') {
            ++i;
            continue;
        }
        out.push_back(LatticeVector{std::move(current)});
        current.clear();
        if (i == n) break;
        if (text[i] != ';')
            throw ParseError("parse_generators: unexpected character '" +
                             std::string(1, text[i]) + "' at position " + std::to_string(i));
        ++i;
        skip_ws();
        if (i == n) throw ParseError("parse_generators: trailing ';' at position " +
                                     std::to_string(n - 1));
    }
    return out;
}

}  // namespace

std::vector<LatticeVector> parse_generators(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("parse_generators: empty input");

    std::vector<LatticeVector> gens;
    if (text[first] == '{' || text[first] == '[') {
        try {
            gens = generators_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("parse_generators: ") + e.what());
        }
    } else {
        gens = parse_inline(text);
    }
    check_equal_dimensions(gens);
    return gens;
}

namespace {

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string load_input(const CliConfig& cfg, std::istream& in) {
    if (cfg.gens_inline) return *cfg.gens_inline;
    if (!cfg.input_path) throw ParseError("no generator source given");
    if (*cfg.input_path == "-") return read_stream(in);
    std::ifstream f(*cfg.input_path);
    if (!f) throw ParseError("cannot open input file: " + *cfg.input_path);
    return read_stream(f);
}

int run_analyze(const CliConfig& cfg, std::istream& in, std::ostream& out) {
    Semigroup S(parse_generators(load_input(cfg, in)));
    const Report rep = analyze(S, cfg.hilbert_cap);
    if (cfg.output_format == CliConfig::Format::json)
        out << report_to_json(rep).dump(2) << '\n';
    else
        out << report_to_text(rep);
    return 0;
}

int run_check(const CliConfig& cfg, std::istream& in, std::ostream& err) {
    if (!cfg.check_property) {
        err << "check: no property given\n";
        return 64;
    }
    const std::string& prop = *cfg.check_property;
    Semigroup S(parse_generators(load_input(cfg, in)));

    bool value = false;
    std::string detail;
    if (prop == "monomial-reduction") {
        value = has_monomial_reduction(S);
        detail = value ? "all non-extremal degrees are >= 1"
                       : "some non-extremal generator has degree < 1";
    } else if (prop == "cm") {
        value = is_cohen_macaulay(S);
        detail = value ? "rem is injective on the Apery set" : "rem values collide";
    } else if (prop == "gorenstein") {
        value = is_gorenstein(S);
        detail = value ? "CM with a unique maximal Apery element"
                       : "not CM or several maximal Apery elements";
    } else if (prop == "gr-cm") {
        if (!has_monomial_reduction(S)) {
            err << "gr-cm: not applicable (no monomial reduction)\n";
            return 2;
        }
        value = gr_is_cohen_macaulay(S);
        detail = value ? "all graded level tests pass" : "a graded level test fails";
    } else if (prop == "gr-gorenstein") {
        if (!has_monomial_reduction(S)) {
            err << "gr-gorenstein: not applicable (no monomial reduction)\n";
            return 2;
        }
        value = gr_is_gorenstein(S);
        detail = value ? "graded CM with a unique order-compatible maximum"
                       : "graded ring not CM or several order-compatible maxima";
    } else if (prop == "homogeneous") {
        value = S.is_homogeneous();
        detail = value ? "every non-extremal degree is exactly 1"
                       : "some non-extremal degree differs from 1";
    } else if (prop == "minimal-multiplicity") {
        if (!is_cohen_macaulay(S)) {
            err << "minimal-multiplicity: not applicable (ring is not Cohen-Macaulay)\n";
            return 2;
        }
        value = is_minimal_multiplicity(S);
        detail = value ? "|Apery| = 1 + codimension" : "|Apery| exceeds 1 + codimension";
    } else {
        err << "check: unknown property '" << prop << "'\n";
        return 64;
    }

    err << prop << ": " << (value ? "true" : "false") << " (" << detail << ")\n";
    return value ? 0 : 1;
}

int run_batch(const CliConfig& cfg, std::istream& in, std::ostream& out) {
    std::string content;
    if (!cfg.input_path || *cfg.input_path == "-")
        content = read_stream(in);
    else {
        std::ifstream f(*cfg.input_path);
        if (!f) throw ParseError("cannot open input file: " + *cfg.input_path);
        content = read_stream(f);
    }

    // Either a JSON array of records or one inline record per line.
    std::vector<std::string> records;
    const size_t first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '[') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(content);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("batch: ") + e.what());
        }
        if (!doc.is_array()) throw ParseError("batch: top-level JSON must be an array");
        for (const auto& el : doc)
            records.push_back(el.is_string() ? el.get<std::string>() : el.dump());
    } else {
        std::istringstream lines(content);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            records.push_back(line);
        }
    }

    for (const auto& record : records) {
        try {
            Semigroup S(parse_generators(record));
            out << report_to_json(analyze(S, cfg.hilbert_cap)).dump() << '\n';
        } catch (const Error& e) {
            ordered_json err_line;
            err_line["error"] = e.what();
            out << err_line.dump() << '\n';
        }
    }
    return 0;
}

}  // namespace

int run(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    if (cfg.command != CliConfig::Command::batch &&
        cfg.gens_inline.has_value() == cfg.input_path.has_value()) {
        err << "usage: provide exactly one generator source (--gens or --input)\n";
        return 64;
    }
    try {
        switch (cfg.command) {
            case CliConfig::Command::analyze:
                return run_analyze(cfg, in, out);
            case CliConfig::Command::check:
                return run_check(cfg, in, err);
            case CliConfig::Command::batch:
                return run_batch(cfg, in, out);
        }
        err << "unknown command\n";
        return 64;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace apery
