#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbertp/certify.hpp"
#include "hilbertp/oracle.hpp"

namespace hilbertp::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kDisagreement = 3,
  kCounterexample = 4,
};

// All four decision routes for one (phi, p).
struct RouteResults {
  Exponent p{2.0};
  HilbertVerdict two_valued;
  double projection_norm = 0.0;
  double gradient_residual = 0.0;
  HilbertVerdict oracle;
  double boundary_distance = 0.0;

  // What the two-valued criterion predicts for this p (every phi at p = 2).
  bool predicted_hilbert() const;
  bool projection_says_hilbert(double tol) const;
  bool residual_says_hilbert(double tol) const;
  // All routes decided and equal.
  bool agree(double tol) const;
};

RouteResults run_routes(const Field& phi, Exponent p, double tol, const OracleOptions& opts);
nlohmann::json to_json(const RouteResults& r, double tol);

// Parses "inf"/"infinity" or a number >= 1.
Exponent parse_exponent(const std::string& text);
nlohmann::json exponent_json(Exponent p);

// Entry point shared by the executable and the tests. JSON report on `out`,
// human-readable summary on `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbertp::cli
