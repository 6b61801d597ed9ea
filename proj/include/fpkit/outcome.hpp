#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace fpkit {

using json = nlohmann::ordered_json;

/// Raised for input that violates the fixed point data model
/// (zero weights, dimension mismatch, duplicate ids, bad partitions, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result of one consistency check. `witness` is null on a pass, except for
/// evaluators that always report their values.
struct CheckOutcome {
  std::string name;
  bool passed = true;
  json witness = nullptr;

  static CheckOutcome pass(std::string name) { return {std::move(name), true, nullptr}; }
  static CheckOutcome fail(std::string name, json witness) { return {std::move(name), false, std::move(witness)}; }
};

inline json to_json(const CheckOutcome& c) {
  json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["witness"] = c.witness;
  return j;
}

}  // namespace fpkit
