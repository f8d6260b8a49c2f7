#pragma once

/*
 * Named example models paired with base spectra.  These are frozen inputs for
 * tests, benchmarks and the CLI `example` command; entries cover the main
 * behaviours: finite blocks with and without clusters, purely essential
 * models, non-normal blocks, approach tails from above and below, and both
 * closed and non-closed ranges.
 */

#include <string>
#include <vector>

#include "ocnr/operator_model.hpp"
#include "ocnr/spectrum.hpp"

namespace ocnr {

struct CatalogEntry {
  std::string name;
  std::string description;
  OperatorModel model;
  SpectrumSeq spectrum;
};

const std::vector<CatalogEntry>& catalog();

// Throws std::out_of_range for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace ocnr
