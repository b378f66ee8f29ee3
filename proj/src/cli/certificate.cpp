#include <cstdint>
#include <cstdio>

#include "fuglede/cli.hpp"
#include "fuglede/error.hpp"

namespace fuglede::cli {

namespace {

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table{
      {"check-spectrum", Command::check_spectrum}, {"enum-spectra", Command::enum_spectra},
      {"find-complement", Command::find_complement}, {"utc-verify", Command::utc_verify},
      {"build-omega", Command::build_omega},     {"verify-omega", Command::verify_omega},
      {"roundtrip", Command::roundtrip},         {"gram-check", Command::gram_check},
  };
  return table;
}

std::string scalar_text(const Json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number()) return v.dump();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  throw InvalidArgument("job field '" + key + "' has an unsupported value");
}

std::string join(const Json& arr, const std::string& key) {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += arr[i].is_array() ? ";" : ",";
    if (arr[i].is_array()) {
      std::string inner;
      for (std::size_t j = 0; j < arr[i].size(); ++j) inner += (j ? "," : "") + scalar_text(arr[i][j], key);
      out += inner;
    } else {
      out += scalar_text(arr[i], key);
    }
  }
  return out;
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [name, cmd] : command_table()) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<Command> command_from_string(const std::string& name) {
  auto it = command_table().find(name);
  if (it == command_table().end()) return std::nullopt;
  return it->second;
}

JobSpec job_from_json(const Json& job) {
  if (!job.is_object()) throw InvalidArgument("job file must contain a JSON object");
  if (!job.contains("command") || !job["command"].is_string()) {
    throw InvalidArgument("job file needs a string field 'command'");
  }
  auto cmd = command_from_string(job["command"].get<std::string>());
  if (!cmd) throw InvalidArgument("unknown command '" + job["command"].get<std::string>() + "'");
  JobSpec spec;
  spec.command = *cmd;
  for (const auto& [key, value] : job.items()) {
    if (key == "command") continue;
    if (key == "out") {
      spec.output = scalar_text(value, key);
    } else if (key == "summary") {
      spec.summary = value.is_boolean() ? value.get<bool>() : scalar_text(value, key) == "true";
    } else if (key == "jobs") {
      if (!value.is_number_integer() || value.get<std::int64_t>() < 1) {
        throw InvalidArgument("job field 'jobs' must be a positive integer");
      }
      spec.jobs = value.get<unsigned>();
    } else if (value.is_array()) {
      spec.params[key] = join(value, key);
    } else {
      spec.params[key] = scalar_text(value, key);
    }
  }
  return spec;
}

std::string canonical_dump(const Json& certificate) { return certificate.dump(2) + "\n"; }

std::string input_hash(const Json& inputs) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : inputs.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json without_timing(Json certificate) {
  certificate.erase("timing_seconds");
  return certificate;
}

}  // namespace fuglede::cli
