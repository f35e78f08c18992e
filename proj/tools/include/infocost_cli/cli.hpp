#pragma once

#include <iosfwd>
#include <string>

namespace infocost::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyViolation = 1,
  kInputError = 2,
  kNotConverged = 3,
};

/// Entry point of the `infocost` executable, with the streams injected so
/// tests can drive it in-process. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct ReproduceParams {
  double kappa = 1.0;
  double lambda = 1.0;
  double p = 0.8;        // coin accuracy
  int r = 10;            // perception half-width
  int k = 20;            // number of coin flips
  double epsilon = 0.0;  // swans: 0 selects the default grid
};

/// CSV text for one of coinflip, perception, gdp, swans. Throws
/// UnknownReproduction for any other name.
std::string reproduce_csv(const std::string& name, const ReproduceParams& params);

}  // namespace infocost::cli
