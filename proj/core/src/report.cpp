#include "dimlab/report.hpp"

#include <charconv>
#include <vector>

#include "dimlab/error.hpp"

namespace dimlab {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <class Int>
Int parse_int(std::string_view field, std::string_view name) {
  Int value{};
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw ValidationError("csv: bad value '" + std::string(field) + "' for " + std::string(name));
  }
  return value;
}

std::vector<std::string_view> expect_fields(std::string_view line, std::size_t count) {
  if (!line.empty() && line.back() == '\r') {
    line.remove_suffix(1);
  }
  auto fields = split_fields(line);
  if (fields.size() != count) {
    throw ValidationError("csv: expected " + std::to_string(count) + " fields, got " +
                          std::to_string(fields.size()));
  }
  return fields;
}

void check_label(std::string_view label) {
  if (label != "formula" && label != "oracle" && label != "mixed") {
    throw ValidationError("csv: unknown source '" + std::string(label) + "'");
  }
}

}  // namespace

std::string csv_row(const CountReport& r) {
  return std::to_string(r.n) + ',' + std::to_string(r.a) + ',' + std::to_string(r.a1) + ',' +
         std::to_string(r.a2) + ',' + std::to_string(r.a3) + ',' + std::to_string(r.delta) + ',' +
         std::to_string(r.m4) + ',' + r.source_label();
}

std::string csv_row(const AltReport& r) {
  return std::to_string(r.n) + ',' + std::to_string(r.a_circ) + ',' + std::to_string(r.a1_circ) +
         ',' + std::to_string(r.a3_circ) + ',' + std::to_string(r.delta_circ) + ',' +
         std::to_string(r.m2_hat) + ',' + r.source_label();
}

CountReport parse_count_row(std::string_view line) {
  const auto f = expect_fields(line, 8);
  CountReport r;
  r.n = parse_int<std::int64_t>(f[0], "n");
  r.a = parse_int<std::uint64_t>(f[1], "a");
  r.a1 = parse_int<std::uint64_t>(f[2], "a1");
  r.a2 = parse_int<std::uint64_t>(f[3], "a2");
  r.a3 = parse_int<std::uint64_t>(f[4], "a3");
  r.delta = parse_int<std::int64_t>(f[5], "delta");
  r.m4 = parse_int<std::uint64_t>(f[6], "m4");
  check_label(f[7]);
  if (f[7] == "oracle") {
    r.sources = {Source::oracle, Source::oracle, Source::oracle,
                 Source::oracle, Source::oracle, Source::oracle};
  } else if (f[7] == "mixed") {
    r.sources.a1 = r.sources.a3 = r.sources.delta = Source::oracle;
  }
  if (r.a != r.a1 + r.a3 ||
      r.delta != static_cast<std::int64_t>(r.a1) - static_cast<std::int64_t>(r.a3) ||
      r.m4 != r.a + r.a2) {
    throw ValidationError("csv: inconsistent counts row '" + std::string(line) + "'");
  }
  return r;
}

AltReport parse_alt_row(std::string_view line) {
  const auto f = expect_fields(line, 7);
  AltReport r;
  r.n = parse_int<std::int64_t>(f[0], "n");
  r.a_circ = parse_int<std::uint64_t>(f[1], "a_circ");
  r.a1_circ = parse_int<std::uint64_t>(f[2], "a1_circ");
  r.a3_circ = parse_int<std::uint64_t>(f[3], "a3_circ");
  r.delta_circ = parse_int<std::int64_t>(f[4], "delta_circ");
  r.m2_hat = parse_int<std::uint64_t>(f[5], "m2_hat");
  check_label(f[6]);
  if (f[6] == "oracle") {
    r.counts_source = r.split_source = Source::oracle;
  } else if (f[6] == "mixed") {
    r.split_source = Source::oracle;
  }
  if (r.a_circ != r.a1_circ + r.a3_circ ||
      r.delta_circ != static_cast<std::int64_t>(r.a1_circ) - static_cast<std::int64_t>(r.a3_circ)) {
    throw ValidationError("csv: inconsistent alternating row '" + std::string(line) + "'");
  }
  return r;
}

}  // namespace dimlab
