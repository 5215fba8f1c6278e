#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "frameopt/dual_pairs.hpp"
#include "frameopt/erasure.hpp"
#include "frameopt/frame.hpp"
#include "frameopt/optimality.hpp"
#include "frameopt/simulate.hpp"

namespace frameopt {

using Json = nlohmann::ordered_json;

// On-disk frame document:
// {
//   "dimension": n,
//   "vectors": [[[re, im], ...n entries], ...N vectors],
//   "probabilities": [p_1, ..., p_N],
//   "dual": [[[re, im], ...], ...]   // optional
// }
struct FrameFile {
  Frame frame;
  RealVec probabilities;
  std::optional<Frame> dual;
};

// Throws SchemaError on malformed documents.
FrameFile frame_file_from_json(const Json& j);
FrameFile load_frame_file(const std::string& path);

Json frame_to_json(const Frame& f);
Frame frame_from_json(const Json& vectors, int expected_dim = -1);
Json frame_file_to_json(const FrameFile& f);

// Report serializers. Indices are 1-based in all emitted JSON.
Json measure_report_to_json(const MeasureReport& r);
Json pair_verdict_to_json(const PairVerdict& v);
Json certificate_to_json(const OptimalityCertificate& c);
Json search_result_to_json(const SearchResult& r);
Json sim_report_to_json(const SimReport& r);

}  // namespace frameopt
