#include "frameopt/json_io.hpp"

#include <fstream>

namespace frameopt {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError("complex entries must be [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<int> one_based(const std::vector<int>& p) {
  std::vector<int> out;
  out.reserve(p.size());
  for (int i : p) out.push_back(i + 1);
  return out;
}

}  // namespace

Json frame_to_json(const Frame& f) {
  Json vectors = Json::array();
  for (int i = 0; i < f.size(); ++i) {
    Json v = Json::array();
    for (int k = 0; k < f.dim(); ++k)
      v.push_back(complex_to_json(f.synthesis(k, i)));
    vectors.push_back(std::move(v));
  }
  return vectors;
}

Frame frame_from_json(const Json& vectors, int expected_dim) {
  if (!vectors.is_array() || vectors.empty())
    throw SchemaError("'vectors' must be a non-empty array");
  const int big = static_cast<int>(vectors.size());
  int n = expected_dim;
  if (n < 0) {
    if (!vectors[0].is_array())
      throw SchemaError("each vector must be an array of [re, im] pairs");
    n = static_cast<int>(vectors[0].size());
  }
  if (n < 1) throw SchemaError("vectors must have at least one entry");
  Mat synthesis(n, big);
  for (int i = 0; i < big; ++i) {
    const Json& v = vectors[i];
    if (!v.is_array() || static_cast<int>(v.size()) != n)
      throw SchemaError("vector " + std::to_string(i + 1) +
                        " has the wrong number of entries");
    for (int k = 0; k < n; ++k) synthesis(k, i) = complex_from_json(v[k]);
  }
  if (big < n)
    throw SchemaError("a frame needs at least 'dimension' many vectors");
  return Frame(synthesis);
}

FrameFile frame_file_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("frame file must be a JSON object");
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw SchemaError("missing integer 'dimension'");
  if (!j.contains("vectors")) throw SchemaError("missing 'vectors'");
  if (!j.contains("probabilities") || !j["probabilities"].is_array())
    throw SchemaError("missing array 'probabilities'");

  FrameFile file;
  int n = j["dimension"].get<int>();
  if (n < 1) throw SchemaError("'dimension' must be positive");
  file.frame = frame_from_json(j["vectors"], n);

  const Json& probs = j["probabilities"];
  if (static_cast<int>(probs.size()) != file.frame.size())
    throw SchemaError("'probabilities' must list one entry per vector");
  file.probabilities.resize(probs.size());
  for (size_t i = 0; i < probs.size(); ++i) {
    if (!probs[i].is_number())
      throw SchemaError("'probabilities' entries must be numbers");
    file.probabilities(static_cast<int>(i)) = probs[i].get<double>();
  }

  if (j.contains("dual")) {
    file.dual = frame_from_json(j["dual"], n);
    if (file.dual->size() != file.frame.size())
      throw SchemaError("'dual' must list one vector per frame vector");
  }
  return file;
}

FrameFile load_frame_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("invalid JSON in '" + path + "': " + e.what());
  }
  return frame_file_from_json(j);
}

Json frame_file_to_json(const FrameFile& f) {
  Json j;
  j["dimension"] = f.frame.dim();
  j["vectors"] = frame_to_json(f.frame);
  Json probs = Json::array();
  for (int i = 0; i < f.probabilities.size(); ++i)
    probs.push_back(f.probabilities(i));
  j["probabilities"] = std::move(probs);
  if (f.dual) j["dual"] = frame_to_json(*f.dual);
  return j;
}

Json measure_report_to_json(const MeasureReport& r) {
  Json j;
  j["measure"] = measure_name(r.kind);
  j["m"] = r.m;
  j["value"] = r.value;
  Json argmax = Json::array();
  for (const ErasurePattern& p : r.argmax) argmax.push_back(one_based(p));
  j["argmax"] = std::move(argmax);
  Json per = Json::array();
  for (const PatternValue& pv : r.per_pattern) {
    Json row;
    row["pattern"] = one_based(pv.pattern);
    row["norm"] = pv.norm;
    row["rho"] = pv.rho;
    per.push_back(std::move(row));
  }
  j["per_pattern"] = std::move(per);
  return j;
}

Json pair_verdict_to_json(const PairVerdict& v) {
  Json j;
  j["is_dual"] = v.dual;
  j["is_pod_pair"] = v.pod;
  j["is_psod_pair"] = v.psod;
  j["is_pasod_pair"] = v.pasod;
  Json rows = Json::array();
  for (int i = 0; i < v.abs_inner_residual.size(); ++i) {
    Json row;
    row["i"] = i + 1;
    row["inner_minus_inv_q"] = complex_to_json(v.inner_residual(i));
    row["abs_inner_minus_inv_q"] = v.abs_inner_residual(i);
    row["normprod_minus_inv_q"] = v.normprod_residual(i);
    rows.push_back(std::move(row));
  }
  j["residuals"] = std::move(rows);
  return j;
}

Json certificate_to_json(const OptimalityCertificate& c) {
  Json j;
  j["kind"] = c.kind;
  j["holds"] = c.holds;
  j["threshold"] = c.threshold;
  j["partition_primary"] = one_based(c.partition_primary);
  j["partition_secondary"] = one_based(c.partition_secondary);
  Json per = Json::array();
  for (int i = 0; i < c.per_index.size(); ++i) per.push_back(c.per_index(i));
  j["per_index"] = std::move(per);
  j["spans_disjoint"] = c.spans_disjoint;
  j["partition_independent"] = c.partition_independent;
  j["non_unique_overcomplete"] = c.non_unique_overcomplete;
  if (c.witness) j["witness"] = frame_to_json(*c.witness);
  j["note"] = c.note;
  return j;
}

Json search_result_to_json(const SearchResult& r) {
  Json j;
  j["value"] = r.value;
  j["value_at_canonical"] = r.value_at_canonical;
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["dual"] = frame_to_json(r.dual);
  return j;
}

Json sim_report_to_json(const SimReport& r) {
  Json j;
  j["prng"] = r.prng;
  j["seed"] = r.config.seed;
  j["trials"] = r.config.trials;
  j["signals_per_trial"] = r.config.signals;
  j["m"] = r.config.m;
  j["mode"] = r.config.weighted ? "weighted" : "raw";
  j["empirical_max"] = r.empirical_max;
  j["empirical_mean"] = r.empirical_mean;
  j["bound"] = r.bound;
  j["attainment_ratio"] = r.attainment;
  Json hits = Json::array();
  for (const PatternCount& pc : r.pattern_hits) {
    Json row;
    row["pattern"] = one_based(pc.pattern);
    row["count"] = pc.count;
    hits.push_back(std::move(row));
  }
  j["pattern_hits"] = std::move(hits);
  return j;
}

}  // namespace frameopt
