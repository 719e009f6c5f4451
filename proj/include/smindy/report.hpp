#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "smindy/matrix.hpp"

namespace smindy {

// Outcome of one verification run; serializes to deterministic JSON (keys in
// insertion order, counts sorted by name, no timing unless requested).
struct VerificationReport {
  std::string quiver;    // type name, e.g. "A3"
  int w = 0;
  std::string theorem;   // "A", "B", "theta", "reduction", "kronecker"
  std::map<std::string, Int> counts;
  bool pass = false;
  std::optional<std::string> witness;     // first observed mismatch, if any
  std::optional<double> elapsed_ms;       // only populated with --timing

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["quiver"] = quiver;
    j["w"] = w;
    j["theorem"] = theorem;
    j["counts"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : counts) j["counts"][k] = v;
    j["pass"] = pass;
    if (witness) j["witness"] = *witness;
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    return j;
  }
};

}  // namespace smindy
