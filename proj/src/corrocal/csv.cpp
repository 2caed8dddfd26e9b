#include "corrocal/csv.hpp"

#include <fstream>
#include <sstream>
#include <ctime>
#include <iomanip>

#include "corrocal/model.hpp"

namespace corrocal {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    // trim whitespace and CR
    const auto begin = field.find_first_not_of(" \t\r");
    const auto end = field.find_last_not_of(" \t\r");
    fields.push_back(begin == std::string::npos
                         ? std::string{}
                         : field.substr(begin, end - begin + 1));
  }
  return fields;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  return in;
}

double parse_double(const std::string& s, const std::string& path) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw FormatError("invalid numeric field '" + s + "' in " + path);
  }
}

}  // namespace

double parse_time_value(const std::string& s) {
  // Epoch/relative seconds, or an ISO-8601 UTC timestamp.
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  std::tm tm{};
  std::istringstream ss(s);
  ss >> std::get_time(&tm, s.find('T') != std::string::npos ? "%Y-%m-%dT%H:%M:%S"
                                                            : "%Y-%m-%d");
  if (ss.fail()) throw FormatError("invalid time value '" + s + "'");
  return static_cast<double>(timegm(&tm));
}

std::vector<TemperatureSample> read_temperature_csv(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty file: " + path);
  const auto header = split_line(line);
  if (header.size() != 2 || header[0] != "t_seconds" ||
      (header[1] != "temp_celsius" && header[1] != "temp_kelvin")) {
    throw FormatError("temperature CSV header must be t_seconds,temp_celsius|temp_kelvin: " + path);
  }
  const bool celsius = header[1] == "temp_celsius";
  std::vector<TemperatureSample> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_line(line);
    if (f.size() != 2) throw FormatError("bad temperature row in " + path);
    TemperatureSample s;
    s.t = parse_time_value(f[0]);
    s.temp = parse_double(f[1], path) + (celsius ? 273.15 : 0.0);
    samples.push_back(s);
  }
  return samples;
}

std::vector<ResistanceSample> read_sensor_csv(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty file: " + path);
  const auto header = split_line(line);
  if (header != std::vector<std::string>{"wire_id", "wire_depth_m", "t_seconds",
                                         "resistance_ohm"}) {
    throw FormatError(
        "sensor CSV header must be wire_id,wire_depth_m,t_seconds,resistance_ohm: " +
        path);
  }
  std::vector<ResistanceSample> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_line(line);
    if (f.size() != 4) throw FormatError("bad sensor row in " + path);
    ResistanceSample s;
    s.wire_id = f[0];
    s.wire_depth = parse_double(f[1], path);
    s.t = parse_time_value(f[2]);
    s.resistance = parse_double(f[3], path);
    samples.push_back(s);
  }
  return samples;
}

std::vector<ProfileLayer> read_profile_csv(const std::string& path,
                                           double cement_content) {
  std::ifstream in = open_or_throw(path);
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty file: " + path);
  const auto header = split_line(line);
  if (header.size() != 2 || header[0] != "depth_m" ||
      (header[1] != "chloride_kg_per_m3" && header[1] != "chloride_mpct")) {
    throw FormatError(
        "profile CSV header must be depth_m,chloride_kg_per_m3|chloride_mpct: " + path);
  }
  const bool mpct = header[1] == "chloride_mpct";
  std::vector<ProfileLayer> layers;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_line(line);
    if (f.size() != 2) throw FormatError("bad profile row in " + path);
    ProfileLayer layer;
    layer.depth = parse_double(f[0], path);
    const double c = parse_double(f[1], path);
    layer.chloride = mpct ? mass_percent_to_kg_per_m3(c, cement_content) : c;
    layers.push_back(layer);
  }
  return layers;
}

void write_band_csv(const std::string& path, const PredictionBand& band) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write file: " + path);
  out << "t_seconds,depth_lo_m,depth_mean_m,depth_hi_m\n";
  out.precision(12);
  for (std::size_t i = 0; i < band.times.size(); ++i) {
    out << band.times[i] << ',' << band.depth_lo[i] << ',' << band.depth_mean[i]
        << ',' << band.depth_hi[i] << '\n';
  }
}

void write_dcurve_csv(const std::string& path, const DiffusionCurve& curve) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write file: " + path);
  out << "t_seconds,d_eff_m2_per_s\n";
  out.precision(12);
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    out << curve.times[i] << ',' << curve.d_eff[i] << '\n';
  }
}

}  // namespace corrocal
