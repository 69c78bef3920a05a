#pragma once

#include <stdexcept>
#include <string>

namespace gammabnd {

// Common base for every evaluator failure.  The CLI maps the code string
// onto stable document codes and process exit codes, so the set of codes is
// part of the external interface.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Argument of Gamma within tolerance of a non-positive integer.
class GammaPole : public Error {
 public:
  explicit GammaPole(const std::string& what) : Error("GammaPole", what) {}
};

// (u, v) on (or too close to) the excluded lattice, or otherwise degenerate.
// Carries the offending lattice coordinates u ~ -m - (2vi/pi) k.
class InvalidParameters : public Error {
 public:
  explicit InvalidParameters(const std::string& what, long m = 0, long k = 0)
      : Error("InvalidParameters", what), m_(m), k_(k) {}
  long m() const noexcept { return m_; }
  long k() const noexcept { return k_; }

 private:
  long m_;
  long k_;
};

class OutsideDomain : public Error {
 public:
  explicit OutsideDomain(const std::string& what) : Error("OutsideDomain", what) {}
};

// Term/iteration cap reached before the certified bound met the tolerance.
class SlowConvergence : public Error {
 public:
  explicit SlowConvergence(const std::string& what, double achieved = 0.0)
      : Error("SlowConvergence", what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

// Adaptive quadrature could not meet the tolerance within the node budget.
class QuadratureFailure : public Error {
 public:
  QuadratureFailure(const std::string& what, double achieved)
      : Error("QuadratureFailure", what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace gammabnd
