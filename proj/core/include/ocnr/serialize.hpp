#pragma once

/*
 * JSON and CSV forms of the public data types.  The JSON layout is canonical
 * (fixed key order, shortest round-trip number formatting), so serializing
 * and re-parsing reproduces the object exactly.  Parse errors throw
 * std::invalid_argument whose message carries a JSON-pointer-style path to
 * the offending field.
 */

#include <cstdint>
#include <optional>
#include <string>

#include "ocnr/closure.hpp"
#include "ocnr/operator_model.hpp"
#include "ocnr/range.hpp"
#include "ocnr/spectrum.hpp"

namespace ocnr {

std::string to_json(const SpectrumSeq& c);
SpectrumSeq spectrum_from_json(const std::string& text);

std::string to_json(const SelfadjointSpectrum& c);
SelfadjointSpectrum selfadjoint_spectrum_from_json(const std::string& text);

std::string to_json(const OperatorModel& a);
OperatorModel model_from_json(const std::string& text);

std::string to_json(const SupportValue& s);
std::string to_json(const ConvexRegion2D& region);
std::string to_json(const SelfadjointInterval& interval);
std::string to_json(const ChainReport& report);
std::string to_json(const TheoremCheck& check);
std::string to_json(const DecompositionWitness& witness);

struct JobOptions {
  std::size_t grid = 720;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::optional<std::size_t> m_cut_override;
};

struct JobConfig {
  OperatorModel model;
  SpectrumSeq spectrum;
  JobOptions options;
};

std::string to_json(const JobConfig& job);
JobConfig job_from_json(const std::string& text);

// One row per direction: theta,support,attained (attained as 0/1).
std::string to_csv(const ConvexRegion2D& region);

}  // namespace ocnr
