#ifndef UMBILIC_TOOLS_COMMANDS_HPP
#define UMBILIC_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umbilic/index.hpp"
#include "umbilic/io.hpp"
#include "umbilic/mesh.hpp"

namespace umbilic::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kInputError = 2,
    kCertificationFailure = 3,
};

struct RunConfig {
    int degree_min = 3;
    int degree_max = 3;
    std::size_t count = 1;
    std::uint64_t seed = 1;
    double guard = 0.05;
    double scale = 1.0;
    std::optional<double> constant_c;
    GridSpec grid;
    std::optional<EllipsoidParams> ellipsoid;
    std::optional<double> recenter;
    bool auto_umbilic = false;
    std::string format;
    bool timing = false;
    double tol_relation = 1e-12;
    double tol_root = 1e-12;
    double tol_cluster = 1e-6;

    VerifyOptions verify_options() const;
};

/// Payload for the primary output plus an optional side document (the JSON
/// summary accompanying an OBJ mesh).
struct CommandResult {
    int exit_code = kSuccess;
    std::string output;
    std::string side_output;
    std::string message;
};

struct SampledProfile {
    WeightedSymmetricProfile profile;
    int resamples = 0;
};

/// Deterministic draw for (seed, degree, index): attempts are redrawn from
/// fresh counter streams until every root is farther than `guard` from the
/// unit circle.
SampledProfile sample_with_gap(int degree, std::uint64_t seed, std::uint64_t index, double guard,
                               const RootFinderOptions& roots = {});

/// Accepts a single profile object or an array of them.
std::vector<WeightedSymmetricProfile> profiles_from_json(const json& j);

CommandResult cmd_gen(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config, const json& input);
CommandResult cmd_surface(const RunConfig& config, const std::optional<json>& input);
CommandResult cmd_index(const RunConfig& config, const std::optional<json>& input);
CommandResult cmd_sweep(const RunConfig& config);

}  // namespace umbilic::cli

#endif  // UMBILIC_TOOLS_COMMANDS_HPP
