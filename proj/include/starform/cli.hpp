#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starform/rational.hpp"

namespace starform {

struct RunConfig {
  int order = 3;
  int dim = 2;
  Rational kappa = Rational(1, 2);
  Rational charge = 1;
  std::uint64_t seed = 1;
  bool json = false;
};

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> values;  // reported quantities

  bool all_pass() const;
  std::string render(bool as_json) const;
};

// Randomized associativity / unitality / Hermitian / semiclassical suite over
// the products reachable from the config.
Report cmd_assoc(const RunConfig& cfg, bool inject_sign_bug = false);

// Relative-class pipeline for the monopole of charge cfg.charge.
Report cmd_relative_class(const RunConfig& cfg);

// Dirac integrality demo for B = 2 pi * charge * dx^dy.
Report cmd_dirac(const RunConfig& cfg);

// Representation / Rieffel induction suite.
Report cmd_reps(const RunConfig& cfg);

// Full argument-vector entry point; returns the process exit code
// (0 pass, 1 check failure, 2 usage error) and fills `output`.
int run_cli(const std::vector<std::string>& args, std::string& output);

}  // namespace starform
