#pragma once

// JSON instance and result files. Integers are JSON integers, rationals are
// "p/q" strings, and an infinite ILP bound is null.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccm/instances.hpp"
#include "ccm/projector.hpp"
#include "ccm/verify.hpp"

namespace ccm {

using Json = nlohmann::ordered_json;

struct InstanceFile {
  Instance instance;
  std::optional<ConvexObjective> objective;
};

/// Throws kParse naming the offending field; shape errors from validate_set
/// keep their own kinds.
InstanceFile instance_from_json(const Json& j);
Json instance_to_json(const Instance& instance, const std::optional<ConvexObjective>& objective = std::nullopt);

/// d is the number of rows of W.
ConvexObjective objective_from_json(const Json& j, Index d);
Json objective_to_json(const ConvexObjective& f);

IntMatrix matrix_from_json(const Json& j, const std::string& field);
Json to_json(const IntVec& v);
Json to_json(const std::vector<IntVec>& vs);
Json to_json(const IntMatrix& M);

/// Throws kParse on malformed JSON.
Json parse_json(const std::string& text);
std::string read_file(const std::string& path);

/// Objects one key per line, nested arrays one element per line, arrays of
/// scalars on a single line. Ends with a newline.
std::string canonical_dump(const Json& j);

struct RunStats {
  std::optional<double> wall_ms;
};

Json projection_to_json(const Instance& instance, const ProjectionConfig& cfg, const ProjectionResult& r,
                        const RunStats& stats = {});
Json maximize_to_json(const Instance& instance, const ProjectionConfig& cfg, const ConvexObjective& f,
                      const MaximizeResult& m, const RunStats& stats = {});
Json verify_to_json(const Instance& instance, const VerifyReport& report);

}  // namespace ccm
