// Copyright 2026 The multidet Authors
// SPDX-License-Identifier: Apache-2.0

#include <multidet/error.hpp>
#include <multidet/pattern_io.hpp>

#include <array>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace multidet {

using nlohmann::json;

std::string format_double(double v) {
  std::array<char, 40> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

void write_pattern_csv(std::ostream& os, const PatternTable& pattern) {
  os << "x,u,p_det,counts\n";
  for (const auto& r : pattern.rows) {
    os << format_double(r.x) << ',' << format_double(r.u) << ',' << format_double(r.p_det)
       << ',' << r.counts << '\n';
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos ? std::string()
                                                : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_real(const std::string& s, std::size_t line_no) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw FormatError("line " + std::to_string(line_no) + ": '" + s + "' is not a number");
  }
  return v;
}

long long parse_count(const std::string& s, std::size_t line_no) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
    throw FormatError("line " + std::to_string(line_no) + ": '" + s +
                      "' is not a nonnegative integer count");
  }
  return v;
}

}  // namespace

PatternTable read_pattern_csv(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  if (line_no == 0 || line.find_first_not_of(" \t\r") == std::string::npos) {
    throw FormatError("pattern CSV is empty");
  }
  const auto header = split_csv_line(line);
  int col_x = -1, col_u = -1, col_p = -1, col_c = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto& h = header[i];
    int* slot = h == "x" ? &col_x : h == "u" ? &col_u : h == "p_det" ? &col_p
              : h == "counts" ? &col_c : nullptr;
    if (slot == nullptr) continue;
    if (*slot >= 0) throw FormatError("duplicate column '" + h + "'");
    *slot = static_cast<int>(i);
  }
  if (col_u < 0) throw FormatError("pattern CSV lacks the required 'u' column");
  if (col_p < 0 && col_c < 0) {
    throw FormatError("pattern CSV needs a 'p_det' or 'counts' column");
  }

  PatternTable table;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    }
    PatternRow row;
    if (col_x >= 0) row.x = parse_real(fields[col_x], line_no);
    row.u = parse_real(fields[col_u], line_no);
    if (col_p >= 0) row.p_det = parse_real(fields[col_p], line_no);
    if (col_c >= 0) row.counts = parse_count(fields[col_c], line_no);
    table.rows.push_back(row);
  }
  return table;
}

json packet_to_json(const Packet& packet) {
  json coeffs = json::array();
  for (const Complex& c : packet.coeffs()) coeffs.push_back({c.real(), c.imag()});
  return json{{"coeffs", std::move(coeffs)}, {"spin", std::string(to_string(packet.spin()))}};
}

namespace {

CoeffVector coeffs_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("'coeffs' must be a non-empty array");
  CoeffVector out;
  out.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw FormatError("each coefficient must be a [re, im] pair of numbers");
    }
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  if (!j.is_object()) throw FormatError(where + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.contains(key)) throw FormatError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read_number(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  const json& v = j.at(key);
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) throw FormatError(std::string("'") + key + "' must be an integer");
  } else {
    if (!v.is_number()) throw FormatError(std::string("'") + key + "' must be a number");
  }
  out = v.get<T>();
}

Spin read_spin(const json& j) {
  if (!j.is_string()) throw FormatError("spin labels must be strings");
  try {
    return parse_spin(j.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

PacketSpec packet_spec_from_json(const json& j, const std::string& where) {
  PacketSpec spec;
  if (j.is_object() && j.contains("coeffs")) {
    reject_unknown_keys(j, {"coeffs", "spin"}, where);
    spec.coeffs = coeffs_from_json(j.at("coeffs"));
  } else {
    reject_unknown_keys(j, {"x1", "x2", "width", "k0", "spin"}, where);
    read_number(j, "x1", spec.recipe.x1);
    read_number(j, "x2", spec.recipe.x2);
    read_number(j, "width", spec.recipe.width);
    read_number(j, "k0", spec.recipe.k0);
  }
  if (j.contains("spin")) spec.spin = read_spin(j.at("spin"));
  return spec;
}

json packet_spec_to_json(const PacketSpec& spec) {
  json j;
  if (spec.coeffs) {
    json coeffs = json::array();
    for (const Complex& c : *spec.coeffs) coeffs.push_back({c.real(), c.imag()});
    j["coeffs"] = std::move(coeffs);
  } else {
    j = json{{"x1", spec.recipe.x1},
             {"x2", spec.recipe.x2},
             {"width", spec.recipe.width},
             {"k0", spec.recipe.k0}};
  }
  if (spec.spin) j["spin"] = std::string(to_string(*spec.spin));
  return j;
}

}  // namespace

Packet packet_from_json(const json& j) {
  reject_unknown_keys(j, {"coeffs", "spin"}, "packet");
  if (!j.contains("coeffs")) throw FormatError("packet lacks 'coeffs'");
  const Spin spin = j.contains("spin") ? read_spin(j.at("spin")) : Spin::Up;
  try {
    return Packet(coeffs_from_json(j.at("coeffs")), spin);
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

ExperimentConfig config_from_json(const json& j) {
  reject_unknown_keys(j,
                      {"num_modes", "box_length", "packet", "packet_d", "statistics",
                       "spins", "alpha_sin", "alpha_dou", "time", "grid", "exposure",
                       "seed"},
                      "experiment config");
  ExperimentConfig c;
  read_number(j, "num_modes", c.num_modes);
  read_number(j, "box_length", c.box_length);
  if (j.contains("packet")) c.packet_b = packet_spec_from_json(j.at("packet"), "packet");
  if (j.contains("packet_d")) c.packet_d = packet_spec_from_json(j.at("packet_d"), "packet_d");
  if (j.contains("statistics")) {
    if (!j.at("statistics").is_string()) throw FormatError("'statistics' must be a string");
    try {
      c.statistics = parse_statistics(j.at("statistics").get<std::string>());
    } catch (const InvalidArgument& e) {
      throw FormatError(e.what());
    }
  }
  if (j.contains("spins")) {
    const json& s = j.at("spins");
    reject_unknown_keys(s, {"sigma", "omega", "mu", "eta"}, "spins");
    if (s.contains("sigma")) c.sigma = read_spin(s.at("sigma"));
    if (s.contains("omega")) c.omega = read_spin(s.at("omega"));
    if (s.contains("mu")) c.mu = read_spin(s.at("mu"));
    if (s.contains("eta")) c.eta = read_spin(s.at("eta"));
  }
  read_number(j, "alpha_sin", c.alpha_sin);
  read_number(j, "alpha_dou", c.alpha_dou);
  read_number(j, "time", c.time);
  read_number(j, "grid", c.grid);
  read_number(j, "exposure", c.exposure);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) {
      throw FormatError("'seed' must be a nonnegative integer");
    }
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  return c;
}

json config_to_json(const ExperimentConfig& c) {
  json j{{"num_modes", c.num_modes},
         {"box_length", c.box_length},
         {"packet", packet_spec_to_json(c.packet_b)},
         {"statistics", std::string(to_string(c.statistics))},
         {"spins",
          {{"sigma", std::string(to_string(c.sigma))},
           {"omega", std::string(to_string(c.omega))},
           {"mu", std::string(to_string(c.mu))},
           {"eta", std::string(to_string(c.eta))}}},
         {"alpha_sin", c.alpha_sin},
         {"alpha_dou", c.alpha_dou},
         {"time", c.time},
         {"grid", c.grid},
         {"exposure", c.exposure},
         {"seed", c.seed}};
  if (c.packet_d) j["packet_d"] = packet_spec_to_json(*c.packet_d);
  return j;
}

json pattern_metadata(const ExperimentConfig& config, const PatternTable& pattern) {
  return json{{"config", config_to_json(config)},
              {"seed", config.seed},
              {"rows", pattern.size()},
              {"column_sums",
               {{"u", pattern.sum_u()},
                {"p_det", pattern.sum_p_det()},
                {"counts", pattern.sum_counts()}}}};
}

json fit_report(const AlphaEstimate& est, const FitOptions& options) {
  json j{{"alpha_sin_hat", est.alpha_sin_hat},
         {"alpha_dou_hat", est.alpha_dou_hat},
         {"alpha_dou_negative", est.alpha_dou_negative()},
         {"covariance",
          {{est.covariance[0], est.covariance[1]}, {est.covariance[2], est.covariance[3]}}},
         {"residual_norm", est.residual_norm},
         {"weighting", std::string(to_string(options.weighting))},
         {"model", std::string(to_string(options.model))},
         {"response", std::string(to_string(est.response))},
         {"normalization", est.normalization},
         {"rows_used", est.rows_used}};
  if (est.ratio) {
    j["ratio"] = *est.ratio;
    const Interval ci = ratio_confidence(est);
    j["ci95"] = {ci.lo, ci.hi};
  } else {
    j["ratio"] = nullptr;
    j["ci95"] = nullptr;
  }
  return j;
}

}  // namespace multidet
