#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

namespace conjcat {

// Generates identifiers `_fresh_<n>` that avoid every reserved name and every
// name handed out before.
class FreshNames {
 public:
  FreshNames() = default;
  explicit FreshNames(std::set<std::string> reserved) : taken_(std::move(reserved)) {}

  void reserve(const std::string& name) { taken_.insert(name); }
  bool is_taken(const std::string& name) const { return taken_.count(name) != 0; }

  std::string next() {
    for (;;) {
      std::string candidate = "_fresh_" + std::to_string(counter_++);
      if (taken_.insert(candidate).second) return candidate;
    }
  }

 private:
  std::set<std::string> taken_;
  std::size_t counter_ = 0;
};

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace conjcat
