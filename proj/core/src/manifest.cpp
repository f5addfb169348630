#include "dtnfm/manifest.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "dtnfm/errors.hpp"

namespace dtnfm {

void Manifest::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

void Manifest::set(const std::string& key, double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);  // exact double round-trip
  set(key, std::string(buf));
}

void Manifest::set(const std::string& key, std::int64_t value) {
  set(key, std::to_string(value));
}

void Manifest::set(const std::string& key, std::uint64_t value) {
  set(key, std::to_string(value));
}

void Manifest::set(const std::string& key, int value) {
  set(key, std::to_string(value));
}

std::optional<std::string> Manifest::get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::optional<double> Manifest::get_double(const std::string& key) const {
  const auto s = get(key);
  if (!s) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s->c_str(), &end);
  if (end == s->c_str()) return std::nullopt;
  return v;
}

std::optional<std::int64_t> Manifest::get_int(const std::string& key) const {
  const auto s = get(key);
  if (!s) return std::nullopt;
  char* end = nullptr;
  const long long v = std::strtoll(s->c_str(), &end, 10);
  if (end == s->c_str()) return std::nullopt;
  return static_cast<std::int64_t>(v);
}

void Manifest::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write manifest " + path.string());
  for (const auto& [k, v] : entries_) {
    out << k << "=" << v << "\n";
  }
  if (!out) throw IoError("failed writing manifest " + path.string());
}

Manifest Manifest::read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read manifest " + path.string());
  Manifest m;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw IoError("malformed manifest line in " + path.string() + ": " +
                    line);
    }
    m.set(line.substr(0, eq), line.substr(eq + 1));
  }
  return m;
}

}  // namespace dtnfm
