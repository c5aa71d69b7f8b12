#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace starcover {

/// Ordered key/value diagnostics emitted by the pipelines.
class StageReport {
 public:
  void set(const std::string& key, std::string value) {
    for (auto& [k, v] : entries_) {
      if (k == key) {
        v = std::move(value);
        return;
      }
    }
    entries_.emplace_back(key, std::move(value));
  }

  std::optional<std::string> get(const std::string& key) const {
    for (const auto& [k, v] : entries_) {
      if (k == key) return v;
    }
    return std::nullopt;
  }

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  /// Two-column CSV: `key,value` header then one line per entry.
  std::string to_csv() const {
    std::string out = "key,value\n";
    for (const auto& [k, v] : entries_) out += k + "," + v + "\n";
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace starcover
