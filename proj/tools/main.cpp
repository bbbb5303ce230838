#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace umbilic;

namespace {

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError(std::string(flag) + ": cannot parse '" + item + "'");
        }
    }
    if (out.size() != expected) throw InputError(std::string(flag) + ": expected " + std::to_string(expected) + " values");
    return out;
}

std::pair<int, int> parse_degree(const std::string& text) {
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InputError("--degree: expected N or Nmin..Nmax");
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial root counts and umbilic indices of convex surfaces"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string degree = "3", grid, ellipsoid, in_path, out_path;
    cli::RunConfig config;
    double recenter = 0.0;
    double constant_c = 0.0;

    app.add_option("--degree", degree, "Degree N, or a range Nmin..Nmax for sweep");
    app.add_option("--count", config.count, "Number of sampled profiles (per degree)");
    app.add_option("--seed", config.seed, "Seed of the counter-based sampler");
    app.add_option("--guard", config.guard, "Minimum distance of every root from the unit circle");
    app.add_option("--scale", config.scale, "Modulus of the leading coefficient A_N1");
    auto* c_opt = app.add_option("--constant-c", constant_c, "Support constant C (default: automatic)");
    app.add_option("--grid", grid, "Mesh grid nR,nTheta,Rmax");
    app.add_option("--ellipsoid", ellipsoid, "Ellipsoid squared semi-axes a1,a2,a3");
    auto* recenter_opt = app.add_option("--recenter", recenter, "Rotate the umbilic at xi = R0 to the origin");
    app.add_flag("--auto-umbilic", config.auto_umbilic, "Index every triaxial umbilic");
    app.add_option("--in", in_path, "Input JSON (profile or array of profiles)");
    app.add_option("--out", out_path, "Output path (stdout when omitted)");
    app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "csv", "obj"}));
    app.add_flag("--timing", config.timing, "Add a per-row timing column to sweep output");
    app.add_option("--tol-relation", config.tol_relation, "Coefficient-relation tolerance");
    app.add_option("--tol-root", config.tol_root, "Root residual tolerance");
    app.add_option("--tol-cluster", config.tol_cluster, "Root multiplicity clustering radius");

    auto* gen = app.add_subcommand("gen", "Sample constrained profiles");
    auto* verify_cmd = app.add_subcommand("verify", "Verify I = K - N/2 and the bounds for a profiles file");
    auto* surface = app.add_subcommand("surface", "Mesh a constructed surface or an ellipsoid (OBJ + JSON)");
    auto* index = app.add_subcommand("index", "Umbilic index for a profile surface or an ellipsoid");
    auto* sweep = app.add_subcommand("sweep", "Seeded verification sweep over a degree range (CSV)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kInputError;
    }

    try {
        std::tie(config.degree_min, config.degree_max) = parse_degree(degree);
        if (*c_opt) config.constant_c = constant_c;
        if (*recenter_opt) config.recenter = recenter;
        if (!grid.empty()) {
            const auto g = parse_list(grid, 3, "--grid");
            config.grid = {static_cast<int>(g[0]), static_cast<int>(g[1]), g[2]};
        }
        if (!ellipsoid.empty()) {
            const auto a = parse_list(ellipsoid, 3, "--ellipsoid");
            config.ellipsoid = EllipsoidParams{a[0], a[1], a[2]};
        }
        std::optional<json> input;
        if (!in_path.empty()) input = read_json_file(in_path);

        cli::CommandResult result;
        if (gen->parsed()) {
            result = cli::cmd_gen(config);
        } else if (verify_cmd->parsed()) {
            if (!input) throw InputError("verify: --in is required");
            result = cli::cmd_verify(config, *input);
        } else if (surface->parsed()) {
            result = cli::cmd_surface(config, input);
        } else if (index->parsed()) {
            result = cli::cmd_index(config, input);
        } else if (sweep->parsed()) {
            if (config.format.empty()) config.format = "csv";
            result = cli::cmd_sweep(config);
        }

        if (out_path.empty()) {
            std::cout << result.output;
            if (!result.side_output.empty()) std::cerr << result.side_output;
        } else {
            write_text(out_path, result.output);
            if (!result.side_output.empty()) write_text(out_path + ".json", result.side_output);
        }
        if (!result.message.empty()) std::cerr << result.message;
        return result.exit_code;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return cli::kInputError;
    } catch (const CertificationError& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return cli::kCertificationFailure;
    }
}
