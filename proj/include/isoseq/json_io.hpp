#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "isoseq/classify.hpp"
#include "isoseq/config.hpp"
#include "isoseq/embed.hpp"
#include "isoseq/enumerate.hpp"
#include "isoseq/isometry.hpp"

namespace isoseq {

/// Rounds to 12 significant digits so emitted numbers are byte-stable.
double json_number(double x);

nlohmann::json to_json(const DistanceConfiguration& config);
nlohmann::json to_json(const MetricRealization& real);
nlohmann::json to_json(const PointSet& pts);
nlohmann::json to_json(const IsometricSequence& seq);
nlohmann::json to_json(const EmbedReport& report);
nlohmann::json to_json(const TheoremReport& report);
nlohmann::json to_json(const SweepReport& report);
nlohmann::json to_json(const FTableEntry& entry);

DistanceConfiguration config_from_json(const nlohmann::json& j);
MetricRealization realization_from_json(const nlohmann::json& j);
PointSet pointset_from_json(const nlohmann::json& j);

/// Distance-matrix CSV: n rows of n comma-separated nonnegative reals,
/// symmetric with zero diagonal. Equal entries share a color.
MetricRealization realization_from_csv(std::istream& in);

void write_coordinates_csv(std::ostream& out, const PointSet& pts);

}  // namespace isoseq
