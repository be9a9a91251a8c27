// CSV and number formatting: UTF-8, comma-separated, header row, '.' decimal
// separator regardless of the process locale. Doubles print in the shortest
// round-trip form so identical inputs yield byte-identical files.
#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace agrifleet::csv {

inline std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string num(std::int64_t v) { return std::to_string(v); }
inline std::string num(std::uint64_t v) { return std::to_string(v); }
inline std::string num(int v) { return std::to_string(v); }

inline std::string fixed(double v, int places) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, places);
  return std::string(buf, res.ptr);
}

inline std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

class Writer {
 public:
  explicit Writer(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open for writing: " + path);
  }

  void row(std::initializer_list<std::string_view> fields) {
    bool first = true;
    for (auto f : fields) {
      if (!first) out_ << ',';
      out_ << escape(f);
      first = false;
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

}  // namespace agrifleet::csv
