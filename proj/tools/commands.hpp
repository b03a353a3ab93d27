#pragma once

#include <iosfwd>
#include <string>

namespace franel::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kNotFound = 3,
  kInternal = 4,
};

struct GlobalOptions {
  bool json = false;
  std::string out;
  std::string cache_dir;
  long precision_bits = 256;
};

struct ComputeArgs {
  int s = 0;
  long n_max = 0;
  int J = 0;
  std::string format = "text";
};

struct TelescopeArgs {
  int s = 0;
  int r_max = 4;
  bool no_cache = false;
};

struct VerifyArgs {
  std::string in;
};

struct LimitsArgs {
  int s = 0;
  long n_max = 0;
  int J = 0;
  bool J_force = false;
  long window = 50;
};

struct AsymArgs {
  int s = 0;
  long n = 0;
};

struct DemoAperyArgs {
  long n_max = 20;
};

int cmd_compute(const GlobalOptions& g, const ComputeArgs& a, std::ostream& out, std::ostream& err);
int cmd_telescope(const GlobalOptions& g, const TelescopeArgs& a, std::ostream& out, std::ostream& err);
int cmd_verify(const GlobalOptions& g, const VerifyArgs& a, std::ostream& out, std::ostream& err);
int cmd_limits(const GlobalOptions& g, const LimitsArgs& a, std::ostream& out, std::ostream& err);
int cmd_asym(const GlobalOptions& g, const AsymArgs& a, std::ostream& out, std::ostream& err);
int cmd_demo_apery(const GlobalOptions& g, const DemoAperyArgs& a, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, char** argv);

}  // namespace franel::cli
