#pragma once

#include <string>
#include <vector>

namespace heegaard {

// Violations are collected, never thrown.
struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
  void add(std::string message) { errors.push_back(std::move(message)); }
  void warn(std::string message) { warnings.push_back(std::move(message)); }
  bool mentions(const std::string& needle) const {
    for (const auto& e : errors) {
      if (e.find(needle) != std::string::npos) return true;
    }
    return false;
  }
};

}  // namespace heegaard
