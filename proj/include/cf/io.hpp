#pragma once

// CSV and manifest plumbing for the CLI: locale-independent shortest
// round-trip number formatting, the pinned sweep CSV schema, and the
// key=value run manifest.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cf/simulator.hpp"

namespace cf {

// Shortest representation that parses back to the same double.
std::string format_double(double v);

// Columns, in order: snr_db,trials,errors,error_rate,ambiguous_count.
inline constexpr const char* kSweepCsvHeader =
    "snr_db,trials,errors,error_rate,ambiguous_count";

void write_sweep_csv(std::ostream& os, const SimResult& result);

// Inverse of write_sweep_csv; throws InvalidInputError on schema mismatch.
std::vector<PointResult> read_sweep_csv(std::istream& is);

// Reproduction manifest: command, tool version, UTC timestamp, seed, and
// the full resolved flag set.
struct RunManifest {
  std::string command;
  std::string version;
  std::string timestamp;  // ISO-8601, e.g. 2026-08-11T07:00:00Z
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;
};

std::string utc_timestamp();
void write_manifest(std::ostream& os, const RunManifest& manifest);

}  // namespace cf
