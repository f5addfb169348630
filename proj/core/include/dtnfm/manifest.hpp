#ifndef DTNFM_MANIFEST_HPP
#define DTNFM_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dtnfm {

/// Flat, ordered key=value file describing one run: the configuration
/// snapshot, file paths, seed, timings and metric results. The recorded
/// fields are sufficient to reproduce the run bit-for-bit on the same build,
/// so a manifest doubles as a config file.
class Manifest {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value);     // round-trip exact
  void set(const std::string& key, std::int64_t value);
  void set(const std::string& key, std::uint64_t value);
  void set(const std::string& key, int value);

  std::optional<std::string> get(const std::string& key) const;
  std::optional<double> get_double(const std::string& key) const;
  std::optional<std::int64_t> get_int(const std::string& key) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

  void write(const std::filesystem::path& path) const;
  static Manifest read(const std::filesystem::path& path);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace dtnfm

#endif  // DTNFM_MANIFEST_HPP
