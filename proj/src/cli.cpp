#include "homcalc/cli.hpp"

#include "homcalc/structure_file.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

namespace homcalc {

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_error = 2;

// Raised for unreadable or unwritable paths; maps to exit 2.
struct IoError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write " + path);
}

Structure load(const std::string& path) { return parse_structure(read_file(path)); }

int report_code(const VerificationReport& r) { return r.passed() ? exit_pass : exit_fail; }

} // namespace

std::string report_json(const VerificationReport& report)
{
    nlohmann::json axioms = nlohmann::json::array();
    for (const auto& a : report.axioms) {
        nlohmann::json entry = {{"id", a.id}, {"anchor", a.anchor}, {"status", a.passed ? "pass" : "fail"},
                                {"checked", a.checked}};
        if (a.witness)
            entry["witness"] = {{"assignment", a.witness->assignment}, {"lhs", a.witness->lhs}, {"rhs", a.witness->rhs}};
        axioms.push_back(std::move(entry));
    }
    nlohmann::json out = {{"structure", report.structure},
                          {"sample_degree", report.sample_degree},
                          {"status", report.passed() ? "pass" : "fail"},
                          {"first_failure", report.first_failure()},
                          {"axioms", axioms},
                          {"elapsed_ms", report.elapsed_ms}};
    return out.dump(2) + "\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of Hom-Lie algebroids, bialgebroids and Hom-Courant algebroids", "homcalc"};
    app.require_subcommand(1);

    std::string file;
    unsigned max_degree = 3;
    std::string report_path;
    bool as_json = false;
    auto* verify = app.add_subcommand("verify", "Run the verification suite for a structure file");
    verify->add_option("file", file, "Structure file")->required();
    verify->add_option("--max-degree", max_degree, "Joint degree bound for monomial samples")->capture_default_str();
    verify->add_option("--report", report_path, "Also write the report to this path");
    verify->add_flag("--json", as_json, "Print the report as JSON");

    std::string target;
    std::string out_path;
    auto* derive = app.add_subcommand("derive", "Derive a structure and re-verify it");
    derive->add_option("file", file, "Structure file")->required();
    derive->add_option("target", target, "Derivation target")->required()->check(CLI::IsMember(derive_targets()));
    derive->add_option("--out", out_path, "Write the derived structure here instead of standard output");
    derive->add_option("--max-degree", max_degree, "Joint degree bound for monomial samples")->capture_default_str();

    std::string name;
    auto* catalog = app.add_subcommand("catalog", "Built-in example structures");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "List the built-in examples");
    auto* emit = catalog->add_subcommand("emit", "Print a built-in example as a structure file");
    emit->add_option("name", name, "Example name")->required()->check(CLI::IsMember(catalog_names()));
    emit->add_option("--out", out_path, "Write the structure here instead of standard output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }

    const SampleConfig config{max_degree};
    try {
        if (verify->parsed()) {
            const Structure s = load(file);
            const VerificationReport r = verify_structure(s, config);
            const std::string text = as_json ? report_json(r) : r.to_text();
            out << text;
            if (!report_path.empty()) write_file(report_path, text);
            return report_code(r);
        }
        if (derive->parsed()) {
            const Structure s = load(file);
            std::optional<Structure> derived;
            std::string refusal;
            try {
                derived = derive_structure(s, target);
            } catch (const IncompatibleTarget&) {
                throw;
            } catch (const Error& e) {
                refusal = e.what();
            }
            const VerificationReport input = verify_structure(s, config);
            if (!input.passed() || !derived) {
                err << "derivation refused: " << (refusal.empty() ? "input does not verify" : refusal) << "\n"
                    << input.to_text();
                return exit_fail;
            }
            const std::string text = print_structure(*derived);
            if (out_path.empty())
                out << text;
            else
                write_file(out_path, text);
            const VerificationReport again = verify_structure(parse_structure(text), config);
            err << "derived " << kind_of(*derived) << ": " << (again.passed() ? "verifies" : "FAILS " + again.first_failure())
                << "\n";
            if (!again.passed()) err << again.to_text();
            return report_code(again);
        }
        if (list->parsed()) {
            for (const auto& n : catalog_names()) out << n << "  (" << kind_of(catalog_entry(n)) << ")\n";
            return exit_pass;
        }
        if (emit->parsed()) {
            const std::string text = print_structure(catalog_entry(name));
            if (out_path.empty())
                out << text;
            else
                write_file(out_path, text);
            return exit_pass;
        }
    } catch (const StructureError& e) {
        err << file << ":" << e.line() << ":" << e.column() << ": "
            << (e.category() == StructureError::Category::syntax ? "syntax error: " : "error: ") << e.message();
        if (!e.pointer().empty()) err << " (at " << e.pointer() << ")";
        err << "\n";
        return exit_error;
    } catch (const IncompatibleTarget& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}

} // namespace homcalc
