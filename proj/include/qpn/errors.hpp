#pragma once

#include <stdexcept>
#include <string>

namespace qpn {

// Adaptive quadrature gave up before reaching the requested tolerance.
// Carries the last estimate and the error bound at the point of failure.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double last_estimate, double error_bound)
      : std::runtime_error(what), last_estimate_(last_estimate), error_bound_(error_bound) {}
  double last_estimate() const { return last_estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double last_estimate_;
  double error_bound_;
};

// Root bracketing failed (no sign change) or the tolerance was unreachable.
class BracketError : public std::runtime_error {
 public:
  explicit BracketError(const std::string& what) : std::runtime_error(what) {}
  BracketError(const std::string& what, double best_iterate)
      : std::runtime_error(what), best_(best_iterate), has_best_(true) {}
  bool has_best_iterate() const { return has_best_; }
  double best_iterate() const { return best_; }

 private:
  double best_ = 0.0;
  bool has_best_ = false;
};

// A closed-form approximation was requested outside its validity window.
class ApproximationError : public std::runtime_error {
 public:
  explicit ApproximationError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration file violated the schema. Carries the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, const std::string& constraint)
      : std::runtime_error("config key '" + key + "': " + constraint), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace qpn
