// zmx: command-line front end for the exact Z-matrix / inverse cyclic toolkit.
//
// Exit status: 0 success, 1 verification failure, 2 usage, parse or input error.

#include "zmx/construct.hpp"
#include "zmx/cyclic.hpp"
#include "zmx/graph.hpp"
#include "zmx/io.hpp"
#include "zmx/verify.hpp"
#include "zmx/zclass.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int order_cap_from_env() {
    const char* raw = std::getenv("ZMX_ORDER_CAP");
    if (raw == nullptr || *raw == '\0') {
        return zmx::kDefaultOrderCap;
    }
    try {
        std::size_t used = 0;
        const int cap = std::stoi(raw, &used);
        if (used == std::string(raw).size() && cap >= 1 && cap <= 24) {
            return cap;
        }
    } catch (const std::exception&) {
    }
    throw zmx::Error(std::string("ZMX_ORDER_CAP must be an integer in 1..24, got '") + raw + "'");
}

zmx::Matrix load_matrix(const std::string& path) {
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw zmx::Error("cannot open '" + path + "'");
        }
        buffer << in.rdbuf();
    }
    return zmx::parse_matrix(buffer.str());
}

std::vector<zmx::Rational> parse_list(const std::vector<std::string>& items, const std::string& flag) {
    std::vector<zmx::Rational> out;
    for (const auto& item : items) {
        try {
            out.push_back(zmx::parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw zmx::InvalidParameters(flag + ": " + e.what());
        }
    }
    return out;
}

zmx::Format format_of(bool json) {
    return json ? zmx::Format::Json : zmx::Format::Text;
}

// "lo..hi" or a single order.
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw zmx::InvalidParameters("--n expects lo..hi, got '" + text + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of Z-matrices, inverse cyclic and bdsw matrices"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;

    auto* classify_cmd = app.add_subcommand("classify", "Z/M/N/N0/F0 taxonomy, L_s index and cyclic facts");
    classify_cmd->add_option("file", file, "matrix file ('-' for stdin)")->required();
    classify_cmd->add_flag("--json", json, "machine-readable report");

    std::string method = "oracle";
    auto* invert_cmd = app.add_subcommand("invert", "exact inverse");
    invert_cmd->add_option("file", file, "matrix file ('-' for stdin)")->required();
    invert_cmd->add_option("--method", method, "oracle (Gauss-Jordan), cyclic (closed form) or maybee (path expansion)")
        ->check(CLI::IsMember({"oracle", "cyclic", "maybee"}));
    invert_cmd->add_flag("--json", json, "JSON matrix output");

    auto* cyclic_cmd = app.add_subcommand("cyclic-check", "inverse cyclic property, determinant formula and bdsw verdict");
    cyclic_cmd->add_option("file", file, "matrix file ('-' for stdin)")->required();

    bool dot = false;
    auto* digraph_cmd = app.add_subcommand("digraph", "digraph D(A) of the nonzero pattern");
    digraph_cmd->add_option("file", file, "matrix file ('-' for stdin)")->required();
    digraph_cmd->add_flag("--dot", dot, "emit Graphviz DOT");

    std::string family;
    std::vector<std::string> a_list, diag_list, super_list, alpha_list;
    std::string corner = "0";
    auto* gen_cmd = app.add_subcommand("gen", "generate typed | cyclic | bdsw | circulant matrices");
    gen_cmd->add_option("family", family, "typed, cyclic, bdsw or circulant")
        ->required()
        ->check(CLI::IsMember({"typed", "cyclic", "bdsw", "circulant"}));
    gen_cmd->add_option("--a", a_list, "type-D parameters a_1<...<a_n")->delimiter(',');
    gen_cmd->add_option("--diag", diag_list, "diagonal entries")->delimiter(',');
    gen_cmd->add_option("--super", super_list, "super-diagonal entries")->delimiter(',');
    gen_cmd->add_option("--corner", corner, "(n,1) entry");
    gen_cmd->add_option("--alpha", alpha_list, "circulant coefficients alpha_1..alpha_n")->delimiter(',');
    gen_cmd->add_flag("--json", json, "JSON matrix output");

    zmx::VerifyConfig config;
    std::string n_range = "2..6";
    auto* verify_cmd = app.add_subcommand("verify", "randomized theorem campaign");
    verify_cmd->add_option("--theorem", config.theorem, "cycle-matrix, det-formula, bdsw-z, type-d, polyn, maybee, zclass-oracles")
        ->required();
    verify_cmd->add_option("--n", n_range, "order range lo..hi");
    verify_cmd->add_option("--trials", config.trials, "trials per order");
    verify_cmd->add_option("--seed", config.seed, "campaign seed");

    int r = 1;
    std::string tol_text = "1/1000000000";
    auto* perron_cmd = app.add_subcommand("perron", "rho_r(B) for a nonnegative matrix B by exact bisection");
    perron_cmd->add_option("file", file, "matrix file ('-' for stdin)")->required();
    perron_cmd->add_option("--r", r, "principal submatrix order");
    perron_cmd->add_option("--tol", tol_text, "bracket width, rational literal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const int cap = order_cap_from_env();

        if (classify_cmd->parsed()) {
            const zmx::Matrix a = load_matrix(file);
            std::cout << zmx::emit_report(zmx::classify(a, cap), zmx::cyclic_info(a, cap), format_of(json));
        } else if (invert_cmd->parsed()) {
            const zmx::Matrix a = load_matrix(file);
            const zmx::Matrix b = method == "cyclic"   ? zmx::cyclic_inverse(a)
                                  : method == "maybee" ? zmx::maybee_inverse(a)
                                                       : zmx::inverse(a);
            std::cout << zmx::format_matrix(b, format_of(json));
        } else if (cyclic_cmd->parsed()) {
            const zmx::Matrix a = load_matrix(file);
            const auto [d, c] = zmx::cyclic_products(a);
            const bool cyclic = zmx::is_inverse_cyclic(a);
            std::cout << "inverse cyclic: " << (cyclic ? "yes" : "no") << '\n'
                      << "full:           " << (zmx::is_full(a) ? "yes" : "no") << '\n'
                      << "bdsw:           " << (zmx::is_bdsw(a) ? "yes" : "no") << '\n'
                      << "d:              " << zmx::to_string(d) << '\n'
                      << "c:              " << zmx::to_string(c) << '\n'
                      << "d - c:          " << zmx::to_string(d - c) << '\n'
                      << "det:            " << zmx::to_string(zmx::det(a)) << '\n';
            if (cyclic) {
                std::cout << "det by formula: " << zmx::to_string(zmx::cyclic_det(a)) << '\n';
            }
            std::cout << "verdict:        " << zmx::to_string(zmx::bdsw_sign_classify(a)) << '\n';
            if (zmx::det(a) != 0) {
                const bool holds = zmx::roundtrip_check(a);
                std::cout << "full+cyclic <=> bdsw inverse: " << (holds ? "holds" : "FAILS") << '\n';
                if (!holds) {
                    return kExitVerifyFailed;
                }
            }
        } else if (digraph_cmd->parsed()) {
            const zmx::Digraph g = zmx::digraph_of(load_matrix(file));
            if (dot) {
                std::cout << zmx::to_dot(g);
            } else {
                std::cout << "vertices:    " << g.order() << '\n'
                          << "edges:       " << g.edge_count() << '\n'
                          << "irreducible: " << (zmx::is_irreducible(g) ? "yes" : "no") << '\n';
                if (g.order() <= zmx::kPathOrderCap) {
                    std::cout << "unipathic:   " << (zmx::is_unipathic(g) ? "yes" : "no") << '\n';
                }
            }
        } else if (gen_cmd->parsed()) {
            zmx::Matrix a;
            if (family == "typed") {
                a = zmx::type_d(zmx::TypeDParams{parse_list(a_list, "--a")});
            } else if (family == "cyclic") {
                a = zmx::from_cyclic_params(zmx::CyclicParams{parse_list(diag_list, "--diag"),
                                                              parse_list(super_list, "--super"),
                                                              parse_list({corner}, "--corner").front()});
            } else if (family == "bdsw") {
                a = zmx::bdsw_matrix(parse_list(diag_list, "--diag"), parse_list(super_list, "--super"),
                                     parse_list({corner}, "--corner").front());
            } else {
                a = zmx::circulant_pz(zmx::CirculantParams{parse_list(alpha_list, "--alpha")});
            }
            std::cout << zmx::format_matrix(a, format_of(json));
        } else if (verify_cmd->parsed()) {
            std::tie(config.n_lo, config.n_hi) = parse_range(n_range);
            config.order_cap = cap;
            const zmx::VerifySummary summary = zmx::run_verify(config);
            std::cout << "theorem:  " << summary.theorem << '\n'
                      << "seed:     " << summary.seed << '\n'
                      << "trials:   " << summary.trials << '\n'
                      << "failures: " << summary.failures << '\n';
            for (const auto& note : summary.failure_notes) {
                std::cout << "  " << note << '\n';
            }
            return summary.passed() ? 0 : kExitVerifyFailed;
        } else if (perron_cmd->parsed()) {
            const zmx::Matrix b = load_matrix(file);
            zmx::Rational tol;
            try {
                tol = zmx::parse_rational(tol_text);
            } catch (const std::invalid_argument& e) {
                throw zmx::InvalidParameters(std::string("--tol: ") + e.what());
            }
            const zmx::PerronBracket bracket = zmx::perron_bracket(b, r, tol, cap);
            std::cout << "rho_" << r << " in (" << zmx::to_string(bracket.lower) << ", "
                      << zmx::to_string(bracket.upper) << "]\n"
                      << "value:   " << std::setprecision(12) << zmx::to_double(bracket.value()) << '\n'
                      << "support:";
            for (int k : bracket.support.members()) {
                std::cout << ' ' << k;
            }
            std::cout << '\n';
        }
    } catch (const zmx::Error& e) {
        std::cerr << "zmx: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
