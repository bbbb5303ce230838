#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "umbilic/batch.hpp"

namespace umbilic::cli {

VerifyOptions RunConfig::verify_options() const {
    VerifyOptions o;
    o.scale = scale;
    o.support_constant = constant_c;
    o.guard = guard;
    o.relation_tol = tol_relation;
    o.roots.tol = tol_root;
    o.roots.cluster_radius = tol_cluster;
    return o;
}

SampledProfile sample_with_gap(int degree, std::uint64_t seed, std::uint64_t index, double guard,
                               const RootFinderOptions& roots) {
    const std::uint64_t stream = (static_cast<std::uint64_t>(degree) << 32) + index;
    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(seed, stream, static_cast<std::uint64_t>(attempt));
        auto profile = sample_constrained(degree, rng);
        try {
            if (find_roots(poly_from_profile(profile), roots).circle_gap > guard) return {std::move(profile), attempt};
        } catch (const CertificationError&) {
            // unresolved roots count as a guard violation
        }
    }
    throw CertificationError("sample_with_gap: no admissible profile after 1000 attempts");
}

std::vector<WeightedSymmetricProfile> profiles_from_json(const json& j) {
    std::vector<WeightedSymmetricProfile> out;
    if (j.is_array()) {
        for (const auto& item : j) out.push_back(profile_from_json(item));
    } else {
        out.push_back(profile_from_json(j));
    }
    return out;
}

CommandResult cmd_gen(const RunConfig& config) {
    if (config.degree_min != config.degree_max) throw InputError("gen: takes a single degree");
    if (config.degree_min < 3) throw InputError("gen: the constrained sampler requires degree >= 3");
    std::vector<json> items(config.count);
    RootFinderOptions roots;
    roots.tol = config.tol_root;
    roots.cluster_radius = config.tol_cluster;
    parallel_for(config.count, [&](std::size_t i) {
        items[i] = to_json(sample_with_gap(config.degree_min, config.seed, i, config.guard, roots).profile);
    });
    CommandResult result;
    result.output = json(items).dump(2) + "\n";
    return result;
}

namespace {

enum class Outcome { kOk, kVerificationFailure, kInputError, kCertificationFailure };

int worst_exit(const std::vector<Outcome>& outcomes) {
    bool input = false, cert = false, fail = false;
    for (auto o : outcomes) {
        input = input || o == Outcome::kInputError;
        cert = cert || o == Outcome::kCertificationFailure;
        fail = fail || o == Outcome::kVerificationFailure;
    }
    if (input) return kInputError;
    if (cert) return kCertificationFailure;
    if (fail) return kVerificationFailure;
    return kSuccess;
}

struct VerifyItem {
    Outcome outcome = Outcome::kOk;
    std::optional<UmbilicReport> report;
    std::string error;
};

VerifyItem verify_one(const WeightedSymmetricProfile& profile, const VerifyOptions& options) {
    VerifyItem item;
    try {
        item.report = verify(profile, options);
        item.outcome = item.report->identity_ok && item.report->main_bound_ok ? Outcome::kOk
                                                                               : Outcome::kVerificationFailure;
    } catch (const InputError& e) {
        item.outcome = Outcome::kInputError;
        item.error = e.what();
    } catch (const CertificationError& e) {
        item.outcome = Outcome::kCertificationFailure;
        item.error = e.what();
    }
    return item;
}

json item_json(const WeightedSymmetricProfile& profile, const VerifyItem& item, double tol) {
    if (item.report) return to_json(*item.report);
    json out = {{"profile", to_json(profile)},
                {"error", item.error},
                {"kind", item.outcome == Outcome::kInputError ? "input" : "certification"}};
    if (profile.degree() >= 2) out["relations"] = to_json(check_relations(profile, tol));
    return out;
}

}  // namespace

CommandResult cmd_verify(const RunConfig& config, const json& input) {
    const auto profiles = profiles_from_json(input);
    const auto options = config.verify_options();
    std::vector<VerifyItem> items(profiles.size());
    parallel_for(profiles.size(), [&](std::size_t i) { items[i] = verify_one(profiles[i], options); });

    CommandResult result;
    std::vector<Outcome> outcomes;
    std::ostringstream msg;
    for (std::size_t i = 0; i < items.size(); ++i) {
        outcomes.push_back(items[i].outcome);
        if (items[i].report && !items[i].report->identity_ok)
            msg << "profile " << i << ": index identity violated (2I = " << items[i].report->twice_index
                << ", K = " << items[i].report->K << ", N = " << items[i].report->degree << ")\n";
        if (!items[i].error.empty()) msg << "profile " << i << ": " << items[i].error << "\n";
    }
    result.exit_code = worst_exit(outcomes);
    result.message = msg.str();

    if (config.format == "csv") {
        std::string out = report_csv_header() + ",status\n";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (items[i].report) {
                out += report_csv_row(*items[i].report) + ",ok\n";
            } else {
                out += std::to_string(profiles[i].degree()) + ",,,,,,,,," +
                       (items[i].outcome == Outcome::kInputError ? "input" : "certification") + "\n";
            }
        }
        result.output = out;
    } else {
        json out = json::array();
        for (std::size_t i = 0; i < items.size(); ++i) out.push_back(item_json(profiles[i], items[i], config.tol_relation));
        result.output = out.dump(2) + "\n";
    }
    return result;
}

CommandResult cmd_surface(const RunConfig& config, const std::optional<json>& input) {
    CommandResult result;
    json summary;
    MeshGrid grid_mesh;
    if (config.ellipsoid) {
        const EllipsoidParams p = *config.ellipsoid;
        p.validate();
        grid_mesh = mesh([&](cplx xi) { return ellipsoid_embed(p, xi); }, config.grid);
        double quadric = 0.0;
        for (const auto& v : grid_mesh.vertices) {
            const auto x = v.xyz();
            quadric = std::max(quadric, std::abs(x.x() * x.x() / p.a1 + x.y() * x.y() / p.a2 + x.z() * x.z() / p.a3 - 1));
        }
        const auto convexity = convexity_probe(grid_mesh);
        summary = {{"ellipsoid", {{"a1", p.a1}, {"a2", p.a2}, {"a3", p.a3}}},
                   {"max_quadric_residual", quadric},
                   {"convexity", to_json(convexity)}};
        if (!convexity.pass) result.exit_code = kVerificationFailure;
    } else {
        if (!input) throw InputError("surface: needs --in <profile.json> or --ellipsoid a1,a2,a3");
        const auto profiles = profiles_from_json(*input);
        if (profiles.empty()) throw InputError("surface: no profile given");
        UmbilicSurface surface = build_surface(profiles.front(), config.scale, 0.0, config.tol_relation);
        ConvexityReport convexity;
        if (config.constant_c) {
            surface.support_constant = *config.constant_c;
            convexity = convexity_probe(surface, config.grid);
            if (!convexity.pass) result.exit_code = kVerificationFailure;
        } else {
            surface.support_constant = default_support_constant(surface, config.grid.r_max);
            convexity = convexity_probe_auto(surface, config.grid);
        }
        grid_mesh = mesh([&](cplx xi) { return embed(surface, xi); }, config.grid);
        summary = {{"surface", to_json(surface)}, {"convexity", to_json(convexity)}};
    }
    summary["vertices"] = grid_mesh.vertices.size();
    summary["faces"] = grid_mesh.faces.size();
    summary["grid"] = {{"n_radial", config.grid.n_radial},
                       {"n_angular", config.grid.n_angular},
                       {"r_max", config.grid.r_max}};

    std::ostringstream obj;
    write_obj(grid_mesh, obj);
    if (config.format == "json") {
        result.output = summary.dump(2) + "\n";
    } else {
        result.output = obj.str();
        result.side_output = summary.dump(2) + "\n";
    }
    return result;
}

CommandResult cmd_index(const RunConfig& config, const std::optional<json>& input) {
    CommandResult result;
    if (!config.ellipsoid) {
        if (!input) throw InputError("index: needs --in <profile.json> or --ellipsoid a1,a2,a3");
        RunConfig single = config;
        return cmd_verify(single, *input);
    }

    const EllipsoidParams p = *config.ellipsoid;
    p.validate();
    std::vector<double> centers;
    if (config.auto_umbilic) {
        for (double r : triaxial_umbilics(p)) {
            centers.push_back(r);
            centers.push_back(-r);
        }
    } else {
        centers.push_back(config.recenter.value_or(0.0));
    }

    const auto radii = default_radius_schedule();
    json reports = json::array();
    ComplexField section = [p](cplx xi) { return ellipsoid_F_r(p, xi).F; };
    for (double c : centers) {
        ComplexField dbar;
        if (c == 0.0 && p.a1 == p.a2) {
            dbar = [p](cplx xi) { return ellipsoid_dbarF(p, xi); };
        } else {
            dbar = [g = mobius_recenter(section, c)](cplx w) { return numeric_dbar(g, w); };
        }
        const auto idx = index_at_origin(dbar, radii);
        reports.push_back({{"center", c},
                           {"dbar_at_center", std::abs(ellipsoid_dbarF(p, c))},
                           {"index", idx.index()},
                           {"twice_index", idx.winding},
                           {"radii", idx.radii},
                           {"windings", idx.windings}});
    }
    result.output = json({{"ellipsoid", {{"a1", p.a1}, {"a2", p.a2}, {"a3", p.a3}}}, {"reports", reports}}).dump(2) +
                    "\n";
    return result;
}

CommandResult cmd_sweep(const RunConfig& config) {
    if (config.degree_min < 3 || config.degree_max < config.degree_min)
        throw InputError("sweep: degree range must satisfy 3 <= min <= max");
    const std::size_t degrees = static_cast<std::size_t>(config.degree_max - config.degree_min + 1);
    const std::size_t total = degrees * config.count;
    const auto options = config.verify_options();

    struct Row {
        int degree = 0;
        std::size_t sample = 0;
        int resamples = 0;
        VerifyItem item;
        double millis = 0.0;
    };
    std::vector<Row> rows(total);
    parallel_for(total, [&](std::size_t k) {
        Row& row = rows[k];
        row.degree = config.degree_min + static_cast<int>(k / config.count);
        row.sample = k % config.count;
        const auto start = std::chrono::steady_clock::now();
        try {
            auto drawn = sample_with_gap(row.degree, config.seed, row.sample, config.guard, options.roots);
            row.resamples = drawn.resamples;
            row.item = verify_one(drawn.profile, options);
        } catch (const CertificationError& e) {
            row.item.outcome = Outcome::kCertificationFailure;
            row.item.error = e.what();
        }
        row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    });

    std::string out =
        "N,sample,K,twice_index,identity_ok,hamburger_ok,main_bound_ok,counts_agree,min_GN,circle_gap,resamples,status";
    if (config.timing) out += ",millis";
    out += "\n";
    std::vector<Outcome> outcomes;
    long violations = 0, resamples = 0, failures = 0;
    for (const Row& row : rows) {
        outcomes.push_back(row.item.outcome);
        resamples += row.resamples;
        std::string line = std::to_string(row.degree) + "," + std::to_string(row.sample) + ",";
        if (row.item.report) {
            const auto& r = *row.item.report;
            auto b = [](bool v) { return v ? "1" : "0"; };
            line += std::to_string(r.K) + "," + std::to_string(r.twice_index) + "," + b(r.identity_ok) + "," +
                    b(r.hamburger_ok) + "," + b(r.main_bound_ok) + "," + b(r.counts_agree) + "," +
                    format_double(r.min_GN) + "," + format_double(r.circle_gap) + "," +
                    std::to_string(row.resamples) + ",ok";
            violations += r.all_ok() ? 0 : 1;
        } else {
            line += ",,,,,,,," + std::to_string(row.resamples) + "," +
                    (row.item.outcome == Outcome::kInputError ? "input" : "certification");
            ++failures;
        }
        if (config.timing) line += "," + format_double(row.millis);
        out += line + "\n";
    }
    out += "# rows=" + std::to_string(total) + " violations=" + std::to_string(violations) +
           " resamples=" + std::to_string(resamples) + " failures=" + std::to_string(failures) + "\n";

    CommandResult result;
    result.output = out;
    result.exit_code = worst_exit(outcomes);
    return result;
}

}  // namespace umbilic::cli
