#ifndef UMBILIC_IO_HPP
#define UMBILIC_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "umbilic/index.hpp"
#include "umbilic/mesh.hpp"

namespace umbilic {

using nlohmann::json;

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const WeightedSymmetricProfile& profile);
WeightedSymmetricProfile profile_from_json(const json& j);

json to_json(const RootSet& roots);
RootSet rootset_from_json(const json& j);

json to_json(const LagrangianCheckResult& check);

json to_json(const SectionSeries& series);
SectionSeries series_from_json(const json& j);

json to_json(const UmbilicSurface& surface);
json to_json(const ConvexityReport& report);
json to_json(const UmbilicReport& report);

/// Fixed 17-significant-digit rendering used for CSV output.
std::string format_double(double v);

std::string report_csv_header();
std::string report_csv_row(const UmbilicReport& report);

}  // namespace umbilic

#endif  // UMBILIC_IO_HPP
