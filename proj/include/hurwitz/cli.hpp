#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/combinatorial.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/qweights.hpp"

namespace hurwitz::cli {

class UsageError : public Error {
 public:
  using Error::Error;
};

enum ExitCode : int { kOk = 0, kDiscrepancy = 1, kUsage = 2, kComputation = 3 };

struct CommandRequest {
  std::string command;  // compute | table | verify | oracle | chartable
  std::string target;   // pipeline, suite or oracle name
  int n = 0;
  std::optional<Partition> mu;
  std::optional<Partition> nu;
  WeightConfig config;
  std::optional<Multidegree> degrees;
  std::optional<Multidegree> max_degree;
  int N = 0;
  std::string format = "json";
  int order = 12;
  int threads = 0;
  TransferRoute route = TransferRoute::Spectral;
  // verify / oracle bounds
  int n_min = 1;
  int n_max = 0;
  int deg_max = 0;
  int path_length = 0;
  int k_max = 3;
};

// argv without the program name. Throws UsageError.
CommandRequest parse_args(const std::vector<std::string>& argv);

// Writes the result document to `out`; returns the exit code.
int run(const CommandRequest& request, std::ostream& out);

// parse_args + run with errors mapped to exit codes and reported on `err`.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

// "c1,c2;d1" -> one entry per species: E-class species take the first list
// in flag order, H species the second. Without ';' entries follow slot order.
Multidegree parse_degrees(const std::string& text, const std::vector<Species>& species);

}  // namespace hurwitz::cli
