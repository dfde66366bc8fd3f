// Command-line front end: verify identities, expand polynomials, enumerate
// tableaux, compute Littlewood-Richardson expansions.

#include "qsymb/config.hpp"
#include "qsymb/errors.hpp"
#include "qsymb/expand.hpp"
#include "qsymb/harness.hpp"
#include "qsymb/qpoly.hpp"
#include "qsymb/tableaux.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qsymb;

struct VerifyOptions {
    std::string id;
    IdentityParams params;
    std::string format = "text";
    int jobs = 1;
};

int run_verify(const VerifyOptions& opt) {
    IdentityReport report = verify({opt.id, opt.params});
    std::cout << (opt.format == "json" ? report_to_json(report) : report_to_text(report)) << "\n";
    return report.ok() ? 0 : 1;
}

int run_verify_all(const std::string& format, int jobs) {
    auto reports = verify_all(jobs);
    bool all_ok = true;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(nlohmann::json::parse(report_to_json(r)));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << report_to_text(r) << "\n";
    }
    for (const auto& r : reports) all_ok = all_ok && r.ok();
    return all_ok ? 0 : 1;
}

int run_lr(const std::string& lambda_s, const std::string& mu_s, const std::string& format) {
    Partition lambda = parse_partition(lambda_s);
    Partition mu = parse_partition(mu_s);
    SchurExpansion exp = lr_expansion(lambda, mu);
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [nu, c] : exp) j[to_string(nu)] = c.to_string();
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [nu, c] : exp)
            std::cout << to_string(nu) << " -> " << c.to_string() << "\n";
    }
    return 0;
}

int run_enum(const std::string& kind, const std::string& shape_s, int p, int alphabet,
             const std::string& format) {
    Partition shape = parse_partition(shape_s);
    std::vector<std::string> lines;
    if (kind == "syt") {
        for (const auto& t : standard_tableaux(shape)) lines.push_back(to_string(t));
    } else if (kind == "ssyt") {
        for (const auto& t : semistandard_tableaux(shape, alphabet)) lines.push_back(to_string(t));
    } else if (kind == "sbt") {
        for (const auto& t : standard_bitableaux(shape, p)) lines.push_back(to_string(t));
    } else if (kind == "ssbt") {
        for (const auto& t : semistandard_bitableaux(shape, p, alphabet))
            lines.push_back(to_string(t));
    } else if (kind == "sdt") {
        for (const auto& t : standard_domino_tableaux(shape)) lines.push_back(to_string(t));
    } else if (kind == "ssdt") {
        for (const auto& t : semistandard_domino_tableaux(shape, alphabet))
            lines.push_back(to_string(t));
    } else {
        throw InvalidParams("unknown enumeration kind: " + kind);
    }
    if (format == "json") {
        nlohmann::json j;
        j["kind"] = kind;
        j["shape"] = to_string(shape);
        j["count"] = lines.size();
        j["items"] = lines;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& l : lines) std::cout << l << "\n";
        std::cout << "count: " << lines.size() << "\n";
    }
    return 0;
}

SparsePoly read_poly_file(const std::string& path, bool with_x0) {
    std::ifstream in(path);
    if (!in) throw InvalidParams("cannot open input file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    // infer the alphabet from the variables that appear
    int x_max = 0, y_max = -1;
    bool saw_x0 = false;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream is(line);
        std::string tok;
        while (is >> tok) {
            if (tok.size() < 2 || tok.find('^') == std::string::npos) continue;
            int idx = 0;
            try {
                idx = std::stoi(tok.substr(1, tok.find('^') - 1));
            } catch (const std::exception&) {
                continue;
            }
            if (tok[0] == 'x') {
                x_max = std::max(x_max, idx);
                if (idx == 0) saw_x0 = true;
            } else if (tok[0] == 'y') {
                y_max = std::max(y_max, idx);
            }
        }
    }
    AlphabetSpec spec{x_max, with_x0 || saw_x0, y_max, y_max >= 0};
    return SparsePoly::parse(text, spec);
}

int run_expand(const std::string& basis, const std::string& input, int degree_opt,
               const std::string& q_mode) {
    bool needs_x0 = basis == "fund-b" || basis == "domino";
    SparsePoly p = read_poly_file(input, needs_x0);
    int degree = degree_opt;
    if (degree < 0) {
        if (!p.is_homogeneous(&degree))
            throw InvalidParams("input is not homogeneous; pass --degree explicitly");
    }
    nlohmann::json j = nlohmann::json::object();
    int exit_code = 0;
    if (basis == "schur") {
        for (const auto& [nu, c] : schur_expansion(p, degree)) j[to_string(nu)] = c.to_string();
    } else if (basis == "fund-a") {
        for (const auto& [des, c] : fundamental_a_expansion(p, degree))
            j[to_string(des)] = c.to_string();
    } else if (basis == "fund-b") {
        for (const auto& [des, c] : fundamental_b_expansion(p, degree))
            j[to_string(des)] = c.to_string();
    } else if (basis == "domino") {
        DominoExpansion exp =
            domino_basis_expansion(p, degree, q_mode == "generic" ? QMode::Generic : QMode::One);
        if (exp.expandable) {
            for (const auto& [nu, c] : exp.coefficients) j[to_string(nu)] = c.to_string();
        } else {
            nlohmann::json res = nlohmann::json::array();
            for (const auto& [key, gap] : exp.residual)
                res.push_back({{"monomial", key}, {"gap", gap}});
            j["status"] = "not-expandable";
            j["residual"] = res;
            exit_code = 1;
        }
    } else {
        throw InvalidParams("unknown basis: " + basis);
    }
    std::cout << j.dump(2) << "\n";
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quasisymmetric-function and tableau calculator"};
    app.require_subcommand(1);

    VerifyOptions vopt;
    std::string caps_file;
    std::string format = "text";
    int jobs = 1;

    auto add_param_options = [](CLI::App* cmd, IdentityParams& p) {
        cmd->add_option_function<int>("--n", [&p](int v) { p.n = v; }, "degree / group size");
        cmd->add_option_function<int>("--m", [&p](int v) { p.m = v; }, "second degree");
        cmd->add_option_function<int>(
            "--alphabet", [&p](int v) { p.alphabet = v; }, "alphabet truncation M");
        cmd->add_option_function<int>(
            "--alphabet-y", [&p](int v) { p.alphabet_y = v; }, "second alphabet truncation");
        cmd->add_option_function<int>("--p", [&p](int v) { p.p = v; }, "overline count p");
        cmd->add_option_function<int>("--q", [&p](int v) { p.q = v; }, "overline count q");
        cmd->add_option_function<std::string>(
            "--lambda", [&p](const std::string& s) { p.lambda = qsymb::parse_partition(s); },
            "partition, e.g. 2,1");
        cmd->add_option_function<std::string>(
            "--mu", [&p](const std::string& s) { p.mu = qsymb::parse_partition(s); },
            "partition, e.g. 2");
    };

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify one identity");
    verify_cmd->add_option("id", vopt.id, "identity id (see verify-all output)")->required();
    add_param_options(verify_cmd, vopt.params);
    verify_cmd->add_option("--format", vopt.format, "text or json");
    verify_cmd->add_option("--jobs", vopt.jobs, "accepted for symmetry; single cases run alone");

    CLI::App* all_cmd = app.add_subcommand("verify-all", "verify every identity at defaults");
    all_cmd->add_option("--caps", caps_file, "JSON file with enumeration caps");
    all_cmd->add_option("--format", format, "text or json");
    all_cmd->add_option("--jobs", jobs, "run cases on this many threads");

    std::string lr_lambda, lr_mu;
    CLI::App* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson expansion");
    lr_cmd->add_option("--lambda", lr_lambda, "partition")->required();
    lr_cmd->add_option("--mu", lr_mu, "partition")->required();
    lr_cmd->add_option("--format", format, "text or json");

    std::string enum_kind, enum_shape;
    int enum_p = 0;
    int enum_alphabet = -1;
    CLI::App* enum_cmd = app.add_subcommand("enum", "enumerate tableaux");
    enum_cmd->add_option("kind", enum_kind, "syt|ssyt|sbt|ssbt|sdt|ssdt")->required();
    enum_cmd->add_option("--shape", enum_shape, "partition, e.g. 5,5,4,1,1")->required();
    enum_cmd->add_option("--p", enum_p, "one-row component size for sbt/ssbt");
    enum_cmd->add_option("--alphabet", enum_alphabet, "entry bound for semistandard kinds");
    enum_cmd->add_option("--format", format, "text or json");

    std::string expand_basis, expand_input, expand_qmode = "one";
    int expand_degree = -1;
    CLI::App* expand_cmd = app.add_subcommand("expand", "expand a polynomial in a basis");
    expand_cmd->add_option("basis", expand_basis, "schur|fund-a|fund-b|domino")->required();
    expand_cmd->add_option("--input", expand_input, "polynomial file")->required();
    expand_cmd->add_option("--degree", expand_degree, "homogeneous degree override");
    expand_cmd->add_option("--q-mode", expand_qmode, "one or generic (domino basis)");
    expand_cmd->add_option("--format", format, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!caps_file.empty()) qsymb::config() = qsymb::Config::load(caps_file);
        if (verify_cmd->parsed()) return run_verify(vopt);
        if (all_cmd->parsed()) return run_verify_all(format, jobs);
        if (lr_cmd->parsed()) return run_lr(lr_lambda, lr_mu, format);
        if (enum_cmd->parsed()) {
            if (enum_alphabet < 0) enum_alphabet = qsymb::config().default_alphabet;
            return run_enum(enum_kind, enum_shape, enum_p, enum_alphabet, format);
        }
        if (expand_cmd->parsed())
            return run_expand(expand_basis, expand_input, expand_degree, expand_qmode);
    } catch (const qsymb::InvalidParams& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const qsymb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
