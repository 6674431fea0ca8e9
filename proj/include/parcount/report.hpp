#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "parcount/counting.hpp"
#include "parcount/porc.hpp"
#include "parcount/verify.hpp"

namespace parcount {

// Module version registry, embedded in every report for traceability.
const std::map<std::string, std::string>& module_versions();

// FNV-1a hash of a canonical string, hex encoded.
std::string fnv1a_hex(const std::string& s);

nlohmann::json count_report_json(const CountReport& r, const std::string& config_hash);
std::string count_report_csv_row(const CountReport& r);
std::string count_report_csv_header();

nlohmann::json identity_reports_json(const std::vector<IdentityReport>& reports,
                                     const std::string& config_hash);

nlohmann::json porc_fit_json(const SweepSeries& series, const PorcFit& fit,
                             const std::string& config_hash);
std::string porc_fit_markdown(const SweepSeries& series, const PorcFit& fit);

nlohmann::json fiber_probe_json(const std::vector<FiberSeries>& probe, const std::string& config_hash);

// Atomic write: temp file in the target directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace parcount
