#include "ocnr/serialize.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace ocnr {

namespace {

// Insertion order is preserved so that output key order is deterministic.
using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument("json: " + what + " at " + (path.empty() ? "/" : path));
}

json parse_root(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing field");
  return *it;
}

// Absent and null are both treated as "not provided".
const json* member_opt(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::uint64_t as_uint(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string item(const std::string& path, std::size_t i) {
  return path + "/" + std::to_string(i);
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json complex_json(const Complex& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from(const json& j, const std::string& path) {
  return {as_number(member(j, "re", path), path + "/re"),
          as_number(member(j, "im", path), path + "/im")};
}

json polygon_json(const ConvexPolygon& poly) {
  json out = json::array();
  for (const Complex& v : poly.vertices) out.push_back(complex_json(v));
  return out;
}

json spectrum_json(const SpectrumSeq& c) {
  json j;
  j["head"] = c.head();
  if (c.tail())
    j["tail"] = json{{"a", c.tail()->coefficient}, {"r", c.tail()->ratio}};
  else
    j["tail"] = nullptr;
  return j;
}

SpectrumSeq spectrum_from(const json& j, const std::string& path) {
  const json& h = as_array(member(j, "head", path), path + "/head");
  std::vector<double> head;
  head.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    head.push_back(as_number(h[i], item(path + "/head", i)));
  std::optional<GeometricTail> tail;
  if (const json* t = member_opt(j, "tail", path)) {
    tail = GeometricTail{as_number(member(*t, "a", path + "/tail"), path + "/tail/a"),
                         as_number(member(*t, "r", path + "/tail"), path + "/tail/r")};
  }
  try {
    return SpectrumSeq(std::move(head), tail);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from(const json& j, const std::string& path) {
  const json& rows = as_array(j, path);
  const std::size_t n = rows.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_path = item(path, i);
    const json& row = as_array(rows[i], row_path);
    if (row.size() != n) fail(row_path, "expected a square matrix row");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = complex_from(row[k], item(row_path, k));
  }
  return m;
}

const char* mode_name(TailMode m) { return m == TailMode::exact ? "exact" : "approach"; }
const char* law_name(TailLaw l) { return l == TailLaw::harmonic ? "harmonic" : "geometric"; }

json family_json(const TailEntryFamily& f) {
  json j;
  j["value"] = complex_json(f.value);
  j["mode"] = mode_name(f.mode);
  if (f.mode == TailMode::approach) {
    j["direction"] = complex_json(f.direction);
    j["law"] = law_name(f.law);
    j["scale"] = f.scale;
    if (f.law == TailLaw::geometric) j["ratio"] = f.ratio;
  }
  return j;
}

TailEntryFamily family_from(const json& j, const std::string& path) {
  TailEntryFamily f;
  f.value = complex_from(member(j, "value", path), path + "/value");
  const std::string mode = as_string(member(j, "mode", path), path + "/mode");
  if (mode == "exact") {
    f.mode = TailMode::exact;
    return f;
  }
  if (mode != "approach") fail(path + "/mode", "expected \"exact\" or \"approach\"");
  f.mode = TailMode::approach;
  f.direction = complex_from(member(j, "direction", path), path + "/direction");
  const std::string law = as_string(member(j, "law", path), path + "/law");
  if (law == "harmonic") {
    f.law = TailLaw::harmonic;
  } else if (law == "geometric") {
    f.law = TailLaw::geometric;
  } else {
    fail(path + "/law", "expected \"harmonic\" or \"geometric\"");
  }
  f.scale = as_number(member(j, "scale", path), path + "/scale");
  if (f.law == TailLaw::geometric)
    f.ratio = as_number(member(j, "ratio", path), path + "/ratio");
  return f;
}

json model_json(const OperatorModel& a) {
  json j;
  j["block"] = matrix_json(a.finite_block);
  json tail = json::array();
  for (const TailEntryFamily& f : a.tail) tail.push_back(family_json(f));
  j["tail"] = std::move(tail);
  return j;
}

OperatorModel model_from(const json& j, const std::string& path) {
  OperatorModel a;
  a.finite_block = matrix_from(member(j, "block", path), path + "/block");
  const json& tail = as_array(member(j, "tail", path), path + "/tail");
  for (std::size_t i = 0; i < tail.size(); ++i)
    a.tail.push_back(family_from(tail[i], item(path + "/tail", i)));
  try {
    a.validate();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return a;
}

json support_arrays(const ConvexRegion2D& r) {
  json support = json::array();
  json error = json::array();
  json attained = json::array();
  json unitary = json::array();
  json maximizers = json::array();
  for (const SupportValue& s : r.support_values) {
    support.push_back(s.value);
    error.push_back(s.truncation_error);
    attained.push_back(s.attained);
    unitary.push_back(to_string(s.attained_in_unitary_orbit));
    maximizers.push_back(s.maximizer ? complex_json(*s.maximizer) : json(nullptr));
  }
  json j;
  j["support"] = std::move(support);
  j["error"] = std::move(error);
  j["attained"] = std::move(attained);
  j["attained_unitary"] = std::move(unitary);
  j["maximizers"] = std::move(maximizers);
  return j;
}

json options_json(const JobOptions& o) {
  json j;
  j["grid"] = o.grid;
  j["tol"] = o.tol;
  j["seed"] = o.seed;
  j["m_cut_override"] = o.m_cut_override ? json(*o.m_cut_override) : json(nullptr);
  return j;
}

JobOptions options_from(const json* j, const std::string& path) {
  JobOptions o;
  if (!j) return o;
  if (const json* g = member_opt(*j, "grid", path))
    o.grid = static_cast<std::size_t>(as_uint(*g, path + "/grid"));
  if (const json* t = member_opt(*j, "tol", path)) o.tol = as_number(*t, path + "/tol");
  if (const json* s = member_opt(*j, "seed", path)) o.seed = as_uint(*s, path + "/seed");
  if (const json* m = member_opt(*j, "m_cut_override", path))
    o.m_cut_override = static_cast<std::size_t>(as_uint(*m, path + "/m_cut_override"));
  return o;
}

std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string to_json(const SpectrumSeq& c) { return spectrum_json(c).dump(2); }

SpectrumSeq spectrum_from_json(const std::string& text) {
  return spectrum_from(parse_root(text), "");
}

std::string to_json(const SelfadjointSpectrum& c) {
  json j;
  j["plus"] = spectrum_json(c.plus);
  j["minus"] = spectrum_json(c.minus);
  return j.dump(2);
}

SelfadjointSpectrum selfadjoint_spectrum_from_json(const std::string& text) {
  const json j = parse_root(text);
  return {spectrum_from(member(j, "plus", ""), "/plus"),
          spectrum_from(member(j, "minus", ""), "/minus")};
}

std::string to_json(const OperatorModel& a) { return model_json(a).dump(2); }

OperatorModel model_from_json(const std::string& text) {
  return model_from(parse_root(text), "");
}

std::string to_json(const SupportValue& s) {
  json j;
  j["theta"] = s.theta;
  j["value"] = s.value;
  j["truncation_error"] = s.truncation_error;
  j["attained"] = s.attained;
  j["attained_unitary"] = to_string(s.attained_in_unitary_orbit);
  j["maximizer"] = s.maximizer ? complex_json(*s.maximizer) : json(nullptr);
  j["maximizer_radius"] = s.maximizer_radius;
  return j.dump(2);
}

std::string to_json(const ConvexRegion2D& region) {
  json j;
  j["directions"] = region.directions;
  json sup = support_arrays(region);
  for (auto& [key, value] : sup.items()) j[key] = std::move(value);
  j["outer"] = polygon_json(region.outer);
  j["inner"] = polygon_json(region.inner);
  j["inner_outer_gap"] = finite_or_null(region.inner_outer_gap);
  return j.dump(2);
}

std::string to_json(const SelfadjointInterval& interval) {
  json j;
  j["lo"] = interval.lo;
  j["hi"] = interval.hi;
  j["lo_attained"] = interval.lo_attained;
  j["hi_attained"] = interval.hi_attained;
  j["lo_unitary"] = to_string(interval.lo_unitary);
  j["hi_unitary"] = to_string(interval.hi_unitary);
  j["lo_error"] = interval.lo_error;
  j["hi_error"] = interval.hi_error;
  return j.dump(2);
}

std::string to_json(const ChainReport& report) {
  json j;
  j["verdict"] = to_string(report.verdict);
  json links = json::array();
  for (const ChainLink& l : report.links)
    links.push_back(json{{"m", l.m}, {"holds", to_string(l.holds)}, {"note", l.note}});
  j["links"] = std::move(links);
  json failures = json::array();
  for (const ChainFailure& f : report.failures)
    failures.push_back(json{
        {"m", f.m}, {"theta", f.theta}, {"boundary_point", complex_json(f.boundary_point)}});
  j["failures"] = std::move(failures);
  j["undecided"] = report.undecided;
  j["summary"] = report.summary;
  return j.dump(2);
}

std::string to_json(const TheoremCheck& check) {
  json j;
  j["pass"] = check.pass;
  j["hausdorff"] = finite_or_null(check.hausdorff);
  j["tolerance"] = check.tolerance;
  j["direct_outer"] = polygon_json(check.direct.outer);
  j["direct_inner"] = polygon_json(check.direct.inner);
  j["hull_outer"] = polygon_json(check.hull.outer);
  j["hull_inner"] = polygon_json(check.hull.inner);
  j["ess"] = polygon_json(check.hull.ess);
  j["m_cut"] = check.hull.m_cut;
  j["truncation_slack"] = check.hull.truncation_slack;
  return j.dump(2);
}

std::string to_json(const DecompositionWitness& witness) {
  json j;
  json terms = json::array();
  for (const WitnessTerm& t : witness.terms) {
    terms.push_back(json{{"m", t.m},
                         {"weight", t.weight},
                         {"tail_weight", t.tail_weight},
                         {"range_point", complex_json(t.range_point)},
                         {"ess_point", complex_json(t.ess_point)},
                         {"point", complex_json(t.point())}});
  }
  j["terms"] = std::move(terms);
  j["residual"] = witness.residual;
  return j.dump(2);
}

std::string to_json(const JobConfig& job) {
  json j;
  j["operator"] = model_json(job.model);
  j["spectrum"] = spectrum_json(job.spectrum);
  j["options"] = options_json(job.options);
  return j.dump(2);
}

JobConfig job_from_json(const std::string& text) {
  const json j = parse_root(text);
  JobConfig job;
  job.model = model_from(member(j, "operator", ""), "/operator");
  job.spectrum = spectrum_from(member(j, "spectrum", ""), "/spectrum");
  job.options = options_from(member_opt(j, "options", ""), "/options");
  return job;
}

std::string to_csv(const ConvexRegion2D& region) {
  std::string out = "theta,support,attained\n";
  for (const SupportValue& s : region.support_values) {
    out += shortest(s.theta);
    out += ',';
    out += shortest(s.value);
    out += ',';
    out += s.attained ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace ocnr
