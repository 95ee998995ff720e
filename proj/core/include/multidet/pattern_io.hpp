// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <multidet/calibrate.hpp>
#include <multidet/experiment.hpp>

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

namespace multidet {

/// Formats a double with 17 significant digits ("%.17g").
std::string format_double(double v);

/// CSV with header `x,u,p_det,counts`.
void write_pattern_csv(std::ostream& os, const PatternTable& pattern);

/// Reads a pattern CSV by header name. Column `u` is required, plus at least
/// one of `p_det` and `counts`; missing columns are zero-filled. Throws
/// FormatError on malformed input.
PatternTable read_pattern_csv(std::istream& is);

/// Packet as {"coeffs": [[re, im], ...], "spin": "up"}.
nlohmann::json packet_to_json(const Packet& packet);
Packet packet_from_json(const nlohmann::json& j);

/// Throws FormatError on schema violations (wrong types, unknown enum
/// strings); semantic checks are left to ExperimentConfig::validate.
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);

/// Sidecar metadata {config, seed, column_sums, rows}.
nlohmann::json pattern_metadata(const ExperimentConfig& config,
                                const PatternTable& pattern);

nlohmann::json fit_report(const AlphaEstimate& est, const FitOptions& options);

}  // namespace multidet
