#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fuglede::cli {

using Json = nlohmann::json;

inline constexpr const char* kCertificateSchema = "fuglede-certificate/1";

enum class Command {
  check_spectrum,
  enum_spectra,
  find_complement,
  utc_verify,
  build_omega,
  verify_omega,
  roundtrip,
  gram_check,
};

std::string to_string(Command c);
std::optional<Command> command_from_string(const std::string& name);

// Exit codes of the command line front end.
enum ExitCode : int {
  kExitTrue = 0,          // verified / true verdict
  kExitInvalidInput = 1,  // usage or input error
  kExitInconclusive = 2,  // bounded search found nothing
  kExitFalse = 3,         // exact negative verdict
};

// One unit of work. `params` holds the raw textual value of every supplied
// command option keyed by its long name without dashes ("gamma", "n-max").
struct JobSpec {
  Command command = Command::check_spectrum;
  std::map<std::string, std::string> params;
  std::optional<std::string> output;
  bool summary = false;
  unsigned jobs = 1;
};

// Reads {"command": ..., "<option>": value, ...}. Numbers are stringified,
// arrays are joined with ',' and arrays of arrays with ';'.
JobSpec job_from_json(const Json& job);

struct Outcome {
  int exit_code = kExitTrue;
  Json certificate;
  std::string summary;
};

// Runs one job. Input errors propagate as exceptions.
Outcome execute(const JobSpec& job);

// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& certificate);
// FNV-1a 64 over the compact dump of `inputs`, as "fnv1a64:<16 hex>".
std::string input_hash(const Json& inputs);
// The certificate without its timing field, which is excluded from
// determinism checks.
Json without_timing(Json certificate);

struct Recheck {
  bool ok = false;
  std::vector<std::string> problems;
};

// Re-derives the certificate from its recorded inputs and independently
// re-checks the objects it contains.
Recheck reverify(const Json& certificate);

// Full command line entry point; argv[0] is ignored.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuglede::cli
