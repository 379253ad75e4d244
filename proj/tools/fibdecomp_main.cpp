// Command-line front end: decompositions, golden-string queries, fixed-term
// set enumeration, table rows, and the verification checks.
//
// Exit codes: 0 success (or check passed), 1 check found a counterexample,
// 2 usage error. Output goes to stdout, diagnostics to stderr.

#include "fibdecomp/fibdecomp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

namespace {

using fibdecomp::Natural;

std::size_t to_count(const Natural& n, const char* what) {
    if (!n.fits_ulong_p()) throw std::invalid_argument(std::string(what) + ": value too large");
    return static_cast<std::size_t>(n.get_ui());
}

unsigned to_index(const Natural& n, const char* what) {
    const std::size_t v = to_count(n, what);
    if (v > 1000000) throw std::invalid_argument(std::string(what) + ": index out of range");
    return static_cast<unsigned>(v);
}

// "424 = 2·F2 + F4 + 2·F8 + F14"; coefficient 1 is implicit, 2 is spelled out.
std::string cg_term(unsigned even_index, int coeff) {
    std::string term = coeff == 2 ? "2·" : "";
    return term + "F" + std::to_string(even_index);
}

int print_decomposition(const Natural& n, const std::string& system, const std::string& format) {
    std::vector<std::pair<unsigned, int>> terms;  // (index, coefficient)
    nlohmann::json as_json;
    if (system == "cg") {
        const fibdecomp::CGDecomposition d = fibdecomp::cg_decompose(n);
        for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
            if (d.coefficients[i] != 0) {
                terms.emplace_back(2 * static_cast<unsigned>(i + 1), d.coefficients[i]);
            }
        }
        as_json = fibdecomp::to_json(d);
    } else {
        const fibdecomp::ZeckDecomposition d = fibdecomp::zeckendorf(n);
        for (unsigned index : d.indices) terms.emplace_back(index, 1);
        as_json = fibdecomp::to_json(d);
    }

    if (format == "json") {
        std::cout << as_json.dump() << "\n";
    } else if (format == "csv") {
        for (const auto& [index, coeff] : terms) std::cout << index << "," << coeff << "\n";
    } else if (format == "lines") {
        for (const auto& [index, coeff] : terms) std::cout << cg_term(index, coeff) << "\n";
    } else {
        std::cout << fibdecomp::to_decimal(n) << " = ";
        if (terms.empty()) {
            std::cout << "(empty)";
        } else {
            for (std::size_t i = 0; i < terms.size(); ++i) {
                if (i > 0) std::cout << " + ";
                std::cout << cg_term(terms[i].first, terms[i].second);
            }
        }
        std::cout << "\n";
    }
    return 0;
}

int print_values(const std::vector<Natural>& values, const std::string& format) {
    if (format == "json") {
        nlohmann::json array = nlohmann::json::array();
        for (const Natural& v : values) array.push_back(fibdecomp::to_decimal(v));
        std::cout << array.dump() << "\n";
    } else if (format == "csv") {
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::cout << i + 1 << "," << fibdecomp::to_decimal(values[i]) << "\n";
        }
    } else if (format == "text") {
        std::cout << "{";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i > 0) std::cout << ", ";
            std::cout << fibdecomp::to_decimal(values[i]);
        }
        std::cout << "}\n";
    } else {
        for (const Natural& v : values) std::cout << fibdecomp::to_decimal(v) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Even-index Fibonacci numeration toolkit"};
    app.require_subcommand(1);
    const std::vector<std::string> formats = {"text", "json", "csv", "lines"};

    // decompose
    auto* decompose = app.add_subcommand("decompose", "Decompose an integer");
    std::string dec_n;
    std::string dec_system = "cg";
    std::string dec_format = "text";
    decompose->add_option("n", dec_n, "non-negative integer, decimal")->required();
    decompose->add_option("--system", dec_system, "numeration system")
        ->check(CLI::IsMember({"cg", "zeck"}));
    decompose->add_option("--format", dec_format)->check(CLI::IsMember(formats));

    // set
    auto* set = app.add_subcommand("set", "Enumerate a fixed-term set up to a limit");
    std::string set_family;
    std::string set_parameter;
    std::string set_limit;
    std::string set_format = "lines";
    set->add_option("family", set_family, "A, B, or Z")->required()
        ->check(CLI::IsMember({"A", "B", "Z"}));
    set->add_option("parameter", set_parameter, "even index 2k / 2N for A and B, index N for Z")
        ->required();
    set->add_option("--limit", set_limit, "largest value to emit")->required();
    set->add_option("--format", set_format)->check(CLI::IsMember(formats));

    // golden
    auto* golden = app.add_subcommand("golden", "Golden string queries");
    golden->require_subcommand(1);
    auto* golden_prefix_cmd = golden->add_subcommand("prefix", "first L letters");
    std::string golden_l;
    golden_prefix_cmd->add_option("L", golden_l)->required();
    auto* golden_letter_cmd = golden->add_subcommand("letter", "letter at 1-based position j");
    std::string golden_j;
    golden_letter_cmd->add_option("j", golden_j)->required();
    auto* golden_count_cmd = golden->add_subcommand("count", "number of B's in the first n letters");
    std::string golden_n;
    golden_count_cmd->add_option("n", golden_n)->required();

    // table
    auto* table = app.add_subcommand("table", "Rows q(1)..q(rows) of the A(2k) table");
    std::string table_k = "1";
    std::string table_rows = "13";
    std::string table_format = "text";
    table->add_option("--k", table_k, "minimum-summand parameter");
    table->add_option("--rows", table_rows, "number of rows");
    table->add_option("--format", table_format)->check(CLI::IsMember(formats));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run a registered verification check");
    std::string verify_check;
    std::string verify_format = "text";
    bool verify_list = false;
    std::string v_limit, v_k, v_n, v_jmax, v_ell;
    verify_cmd->add_option("check", verify_check, "check name");
    verify_cmd->add_flag("--list", verify_list, "list registered checks");
    verify_cmd->add_option("--limit", v_limit);
    verify_cmd->add_option("--k", v_k);
    verify_cmd->add_option("--N", v_n);
    verify_cmd->add_option("--jmax", v_jmax);
    verify_cmd->add_option("--ell", v_ell);
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(decompose)) {
            return print_decomposition(fibdecomp::parse_natural(dec_n), dec_system, dec_format);
        }

        if (app.got_subcommand(set)) {
            const Natural limit = fibdecomp::parse_natural(set_limit);
            const unsigned parameter = to_index(fibdecomp::parse_natural(set_parameter), "parameter");
            std::vector<Natural> values;
            if (set_family == "Z") {
                values = fibdecomp::z_members(parameter, limit);
            } else {
                if (parameter == 0 || parameter % 2 != 0) {
                    throw std::invalid_argument("set: A and B take an even index (2k or 2N)");
                }
                values = set_family == "A" ? fibdecomp::a_members(parameter / 2, limit)
                                           : fibdecomp::b_members(parameter / 2, limit);
            }
            return print_values(values, set_format);
        }

        if (app.got_subcommand(golden)) {
            if (golden->got_subcommand(golden_prefix_cmd)) {
                const Natural length = fibdecomp::parse_natural(golden_l);
                std::cout << fibdecomp::golden_prefix(
                                 fibdecomp::detail::checked_prefix_length(length))
                          << "\n";
            } else if (golden->got_subcommand(golden_letter_cmd)) {
                const Natural position = fibdecomp::parse_natural(golden_j);
                std::cout << fibdecomp::to_char(fibdecomp::letter_at(position)) << "\n";
            } else {
                const Natural n = fibdecomp::parse_natural(golden_n);
                std::cout << fibdecomp::to_decimal(fibdecomp::count_b(n)) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(table)) {
            const unsigned k = to_index(fibdecomp::parse_natural(table_k), "k");
            const std::size_t rows = to_count(fibdecomp::parse_natural(table_rows), "rows");
            if (rows > 1000000) throw std::invalid_argument("table: too many rows");
            const std::vector<Natural> values = fibdecomp::q_rows(k, rows);
            if (table_format == "text") {
                for (std::size_t j = 1; j <= values.size(); ++j) {
                    std::cout << "q(" << j << ") = " << fibdecomp::to_decimal(values[j - 1]) << "\n";
                }
                return 0;
            }
            return print_values(values, table_format);
        }

        if (app.got_subcommand(verify_cmd)) {
            if (verify_list) {
                for (const fibdecomp::CheckInfo& info : fibdecomp::check_registry()) {
                    std::cout << info.name << "  " << info.summary << "\n";
                }
                return 0;
            }
            if (verify_check.empty()) {
                std::cerr << "verify: missing check name (try --list)\n";
                return 2;
            }
            fibdecomp::VerifyParams params;
            if (!v_limit.empty()) params["limit"] = fibdecomp::parse_natural(v_limit);
            if (!v_k.empty()) params["k"] = fibdecomp::parse_natural(v_k);
            if (!v_n.empty()) params["N"] = fibdecomp::parse_natural(v_n);
            if (!v_jmax.empty()) params["jmax"] = fibdecomp::parse_natural(v_jmax);
            if (!v_ell.empty()) params["ell"] = fibdecomp::parse_natural(v_ell);

            const fibdecomp::VerificationReport report = fibdecomp::verify(verify_check, params);
            if (verify_format == "json") {
                std::cout << fibdecomp::to_json(report).dump() << "\n";
            } else {
                std::cout << (report.passed ? "PASS" : "FAIL") << " " << report.check << "  ["
                          << report.range << "]";
                if (report.counterexample) {
                    std::cout << "  counterexample=" << fibdecomp::to_decimal(*report.counterexample);
                }
                std::cout << "\n";
            }
            return report.passed ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
