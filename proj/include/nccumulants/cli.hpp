#pragma once

// Command dispatch for the nccumulants tool. `run_cli` takes the arguments
// after the program name and returns the process exit status:
//   0 ok, 1 usage or parse error, 2 incomplete table, 3 route disagreement
// (or a failed identity for `verify`).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "errors.hpp"
#include "partitions.hpp"
#include "table_io.hpp"
#include "transforms.hpp"
#include "verify.hpp"

namespace nccum {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int incomplete = 2;
inline constexpr int internal = 3;
}  // namespace exit_code

namespace detail {

inline constexpr const char* usage_hint =
    "usage: nccumulants convert -i FILE [--from KIND] --to KIND [--max-degree N] [-o FILE]\n";

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + path);
    f << text;
}

struct ConvertArgs {
    std::string input, output, from, to, format = "structured";
    std::optional<std::size_t> max_degree;
};

inline int cmd_convert(const ConvertArgs& a, std::ostream& out, std::ostream& err) {
    if (!a.from.empty() && parse_kind(a.from) == parse_kind(a.to)) {
        err << "error: --from and --to name the same kind\n" << usage_hint;
        return exit_code::usage;
    }
    TableDocument doc = parse_table_document(read_file(a.input));
    if (!a.from.empty() && parse_kind(a.from) != doc.table.kind) {
        err << "error: --from " << a.from << " but the file holds " << to_string(doc.table.kind) << "\n";
        return exit_code::usage;
    }
    const CumulantKind to = parse_kind(a.to);
    if (to == doc.table.kind) {
        err << "error: source and target kinds are both " << to_string(to) << "\n" << usage_hint;
        return exit_code::usage;
    }
    if (a.max_degree) {
        if (*a.max_degree < 1) throw ParseError("--max-degree must be at least 1");
        if (*a.max_degree > doc.table.values.max_degree())
            throw MissingValue("--max-degree " + std::to_string(*a.max_degree) + " exceeds the table's degree " +
                               std::to_string(doc.table.values.max_degree()));
        doc.table.values = doc.table.values.truncated(*a.max_degree);
    }
    doc.table = convert(doc.table, to);
    write_output(a.output, a.format == "text" ? write_table_text(doc) : write_table_document(doc), out);
    return exit_code::ok;
}

struct VerifyArgs {
    std::size_t degree = 4, generators = 1;
    std::uint64_t seed = 1;
    std::string format = "text";
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const VerifyReport r = verify_suite({a.degree, a.generators, a.seed, {}});
    out << (a.format == "structured" ? format_structured(r) : format_text(r));
    return r.all_passed() ? exit_code::ok : exit_code::internal;
}

struct PartitionArgs {
    std::size_t n = 3;
    std::string family = "nc", format = "text";
    bool stats = false;
};

inline int cmd_partitions(const PartitionArgs& a, std::ostream& out) {
    if (a.n < 1 || a.n > 10) throw DomainError("--n must be in 1..10");
    const bool structured = a.format == "structured";
    const char* sep = structured ? "\t" : "  ";
    std::size_t count = 0;
    auto emit = [&](const std::string& blocks, const SetPartition& p) {
        out << blocks;
        if (a.stats) {
            out << sep << (structured ? "" : "tau!=") << to_string(tree_factorial(p));
            out << sep << (structured ? "" : "m=") << monotone_labelling_count(p);
        }
        out << "\n";
        ++count;
    };
    if (a.family == "monotone") {
        for (std::size_t q = 1; q <= a.n; ++q)
            for (const auto& m : enumerate_monotone(a.n, q)) emit(to_string(m), m.partition);
    } else {
        std::vector<SetPartition> ps;
        if (a.family == "nc") ps = enumerate_nc(a.n);
        else if (a.family == "irr-nc") ps = enumerate_irreducible_nc(a.n);
        else ps = enumerate_interval(a.n);
        for (const auto& p : ps) emit(to_string(p), p);
    }
    out << "# " << count << " " << a.family << " partitions of " << a.n << "\n";
    return exit_code::ok;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact conversions between moments and free, boolean and monotone cumulants", "nccumulants"};
    app.require_subcommand(1);

    const std::vector<std::string> kinds{"moment", "moments", "free", "boolean", "monotone"};
    const std::vector<std::string> formats{"text", "structured"};

    detail::ConvertArgs ca;
    auto* convert_cmd = app.add_subcommand("convert", "Convert a table between moments and cumulants");
    convert_cmd->add_option("-i,--input", ca.input, "Input table (JSON)")->required();
    convert_cmd->add_option("-o,--output", ca.output, "Output file (default: stdout)");
    convert_cmd->add_option("--from", ca.from, "Kind held by the input (checked against the file)")
        ->check(CLI::IsMember(kinds));
    convert_cmd->add_option("--to", ca.to, "Target kind")->required()->check(CLI::IsMember(kinds));
    convert_cmd->add_option("--max-degree", ca.max_degree, "Truncate to words of at most this length");
    convert_cmd->add_option("--format", ca.format, "Output format")->check(CLI::IsMember(formats));

    detail::VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Check the algebraic identities on random tables");
    verify_cmd->add_option("--degree", va.degree, "Degree bound")->check(CLI::Range(1, 10));
    verify_cmd->add_option("--generators", va.generators, "Alphabet size")->check(CLI::Range(1, 255));
    verify_cmd->add_option("--seed", va.seed, "Random seed");
    verify_cmd->add_option("--format", va.format, "Report format")->check(CLI::IsMember(formats));

    detail::PartitionArgs pa;
    auto* part_cmd = app.add_subcommand("partitions", "List partitions of {1..n}");
    part_cmd->add_option("--n", pa.n, "Ground set size")->required()->check(CLI::Range(1, 10));
    part_cmd->add_option("--family", pa.family, "Partition family")
        ->check(CLI::IsMember({"nc", "irr-nc", "interval", "monotone"}));
    part_cmd->add_flag("--stats", pa.stats, "Append tree factorial and monotone labelling count");
    part_cmd->add_option("--format", pa.format, "Listing format")->check(CLI::IsMember(formats));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (*convert_cmd) return detail::cmd_convert(ca, out, err);
        if (*verify_cmd) return detail::cmd_verify(va, out);
        return detail::cmd_partitions(pa, out);
    } catch (const MissingValue& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::incomplete;
    } catch (const RouteMismatch& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_code::internal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
}

}  // namespace nccum
