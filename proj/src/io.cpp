#include "cf/io.hpp"

#include <array>
#include <charconv>
#include <ctime>
#include <istream>
#include <ostream>
#include <string_view>

#include "cf/errors.hpp"

namespace cf {

std::string format_double(double v) {
  std::array<char, 64> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw NumericalError("format_double: conversion failed");
  return std::string(buf.data(), ptr);
}

void write_sweep_csv(std::ostream& os, const SimResult& result) {
  os << kSweepCsvHeader << '\n';
  for (const PointResult& p : result.points) {
    os << format_double(p.snr_db) << ',' << p.trials << ',' << p.errors << ','
       << format_double(p.error_rate) << ',' << p.ambiguous_count << '\n';
  }
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidInputError(std::string("read_sweep_csv: bad ") + what);
  return value;
}

}  // namespace

std::vector<PointResult> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kSweepCsvHeader)
    throw InvalidInputError("read_sweep_csv: missing or unexpected header");
  std::vector<PointResult> points;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 5)
      throw InvalidInputError("read_sweep_csv: expected five columns");
    PointResult p;
    p.snr_db = parse_number<double>(fields[0], "snr_db");
    p.trials = parse_number<long long>(fields[1], "trials");
    p.errors = parse_number<long long>(fields[2], "errors");
    p.error_rate = parse_number<double>(fields[3], "error_rate");
    p.ambiguous_count = parse_number<long long>(fields[4], "ambiguous_count");
    points.push_back(p);
  }
  return points;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf;
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf.data());
}

void write_manifest(std::ostream& os, const RunManifest& manifest) {
  os << "command=" << manifest.command << '\n';
  os << "version=" << manifest.version << '\n';
  os << "timestamp=" << manifest.timestamp << '\n';
  os << "seed=" << manifest.seed << '\n';
  for (const auto& [key, value] : manifest.params)
    os << key << '=' << value << '\n';
}

}  // namespace cf
