#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "../text_util.hpp"
#include "fuglede/cli.hpp"
#include "fuglede/error.hpp"
#include "fuglede/intervals.hpp"
#include "fuglede/spectra.hpp"
#include "fuglede/tilings.hpp"
#include "fuglede/utc.hpp"

namespace fuglede::cli {

namespace {

struct OptionSpec {
  std::string name;
  std::string help;
  bool flag = false;
};

const std::map<Command, std::vector<OptionSpec>>& option_table() {
  static const std::map<Command, std::vector<OptionSpec>> table{
      {Command::check_spectrum,
       {{"gamma", "finite point set, e.g. 0,1/2"},
        {"b", "candidate spectrum of gamma"},
        {"omega", "interval union \"[a,b);[c,d)\"; decides whether gamma + pZ is a spectrum"},
        {"p", "period of the spectrum (with --omega)"}}},
      {Command::enum_spectra,
       {{"gamma", "point set with p elements"},
        {"p", "number of points"},
        {"n-max", "largest element searched"},
        {"time-budget", "seconds before the walk stops"},
        {"oracle", "cross-check against exhaustive enumeration", true}}},
      {Command::find_complement,
       {{"a", "single tile; lists every complement for --m"},
        {"m", "period for --a"},
        {"family", "tiles separated by ';' for a common complement"},
        {"m-max", "largest period searched for --family"},
        {"time-budget", "seconds before the search stops"}}},
      {Command::utc_verify,
       {{"p", "number of points"},
        {"gamma", "point set containing 0 inside [0, p)"},
        {"n-max", "largest spectrum element searched"},
        {"m-max", "largest complement period searched"},
        {"time-budget", "seconds before the search stops"}}},
      {Command::build_omega,
       {{"p", "fiber size"},
        {"family", "integer sets separated by ';'"},
        {"breakpoints", "0 = r_1 < ... < r_{n+1} = 1/p"}}},
      {Command::verify_omega,
       {{"omega", "interval union"},
        {"t-residues", "residues R of the translation set"},
        {"t-period", "period m of the translation set"},
        {"p", "translations are (1/p)(R + mZ); default 1"}}},
      {Command::roundtrip,
       {{"p", "fiber size"},
        {"gamma", "point set"},
        {"family", "spectra numerators separated by ';'"},
        {"breakpoints", "0 = r_1 < ... < r_{n+1} = 1/p"},
        {"m-max", "largest complement period searched"},
        {"time-budget", "seconds before the search stops"}}},
      {Command::gram_check,
       {{"omega", "interval union"},
        {"gamma", "point set"},
        {"p", "period"},
        {"bound", "truncation window [-bound, bound]; default 3p"},
        {"tolerance", "float tolerance; default 1e-9"},
        {"lambda", "optional frequency for a single Gram entry"},
        {"lambda-prime", "second frequency for --lambda"}}},
  };
  return table;
}

// Typed access to the textual options of a job. Every conversion failure is
// reported against the option that caused it.
class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& raw) : raw_(raw) {}

  bool has(const std::string& name) const { return raw_.count(name) != 0; }

  const std::string& text(const std::string& name) const {
    auto it = raw_.find(name);
    if (it == raw_.end()) throw InvalidArgument("missing required option --" + name);
    return it->second;
  }

  template <typename F>
  auto field(const std::string& name, F&& parse) const {
    const std::string& t = text(name);
    try {
      return parse(t);
    } catch (const UnsupportedInput& e) {
      throw UnsupportedInput("--" + name + ": " + e.what());
    } catch (const std::exception& e) {
      throw InvalidArgument("--" + name + ": " + e.what());
    }
  }

  std::int64_t integer(const std::string& name, std::int64_t min_value) const {
    return field(name, [&](const std::string& t) {
      const auto v = Rational::parse(t).to_int64();
      if (v < min_value) throw InvalidArgument("must be at least " + std::to_string(min_value));
      return v;
    });
  }

  double real(const std::string& name) const {
    return field(name, [](const std::string& t) {
      std::size_t used = 0;
      const double v = std::stod(t, &used);
      if (used != detail::trim(t).size() && used != t.size()) throw InvalidArgument("malformed number '" + t + "'");
      return v;
    });
  }

  FinitePointSet points(const std::string& name) const {
    return field(name, [](const std::string& t) { return FinitePointSet::parse(t); });
  }
  IntSet ints(const std::string& name) const {
    return field(name, [](const std::string& t) { return IntSet::parse(t); });
  }
  std::vector<std::int64_t> residues(const std::string& name) const {
    return field(name, [](const std::string& t) { return IntSet::parse(t).elements(); });
  }
  std::vector<Rational> rationals(const std::string& name) const {
    return field(name, [](const std::string& t) {
      std::vector<Rational> out;
      for (auto f : detail::split(t, ',')) out.push_back(Rational::parse(f));
      return out;
    });
  }
  std::vector<IntSet> family(const std::string& name) const {
    return field(name, [](const std::string& t) {
      std::vector<IntSet> out;
      for (auto f : detail::split(t, ';')) out.push_back(IntSet::parse(f));
      if (out.empty()) throw InvalidArgument("family is empty");
      return out;
    });
  }
  IntervalUnion omega(const std::string& name) const {
    return field(name, [](const std::string& t) { return IntervalUnion::parse(t); });
  }

  SearchOptions budget(unsigned jobs) const {
    SearchOptions o;
    o.jobs = jobs;
    if (has("time-budget")) {
      const double s = real("time-budget");
      if (!(s > 0)) throw InvalidArgument("--time-budget: must be positive");
      o = SearchOptions::with_budget(s, jobs);
    }
    return o;
  }

 private:
  const std::map<std::string, std::string>& raw_;
};

std::string join_points(const FinitePointSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s.points()[i].to_string();
  return out;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string join_family(const std::vector<IntSet>& fam) {
  std::string out;
  for (std::size_t i = 0; i < fam.size(); ++i) out += (i ? ";" : "") + join_ints(fam[i].elements());
  return out;
}

std::string join_rationals(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out;
}

Json family_json(const std::vector<IntSet>& fam) {
  Json arr = Json::array();
  for (const auto& a : fam) arr.push_back(a.elements());
  return arr;
}

Json periodic_json(const PeriodicSet& t) { return Json{{"residues", t.residues()}, {"period", t.period()}}; }

Json fibers_json(const FiberDecomposition& dec) {
  Json arr = Json::array();
  for (const auto& c : dec.cells) arr.push_back(Json{{"cell", c.cell.to_string()}, {"fiber", c.fiber.elements()}});
  return arr;
}

std::string double_text(double v) { return Json(v).dump(); }

Outcome finish(const JobSpec& job, Json inputs, std::string verdict, Json result, int exit_code,
               std::string summary, Json bounds = Json::object()) {
  Outcome o;
  o.exit_code = exit_code;
  o.certificate = Json{{"schema", kCertificateSchema},
                       {"command", to_string(job.command)},
                       {"inputs", inputs},
                       {"input_hash", input_hash(inputs)},
                       {"verdict", std::move(verdict)},
                       {"result", std::move(result)},
                       {"bounds", std::move(bounds)}};
  o.summary = to_string(job.command) + ": " + std::move(summary);
  return o;
}

Outcome run_check_spectrum(const JobSpec& job, const Params& in) {
  const auto gamma = in.points("gamma");
  if (in.has("b") == in.has("omega")) throw InvalidArgument("check-spectrum needs exactly one of --b or --omega");
  Json inputs{{"gamma", join_points(gamma)}};
  if (in.has("b")) {
    const auto b = in.points("b");
    inputs["b"] = join_points(b);
    const bool v = is_spectrum(gamma, b);
    return finish(job, inputs, v ? "true" : "false", Json{{"is_spectrum", v}}, v ? kExitTrue : kExitFalse,
                  std::string(v ? "" : "not ") + "a spectral pair: " + gamma.to_string() + ", " + b.to_string());
  }
  const auto omega = in.omega("omega");
  const auto p = in.integer("p", 1);
  inputs["omega"] = omega.to_string();
  inputs["p"] = std::to_string(p);
  const bool v = spectral_verdict(omega, gamma, p);
  Json result{{"spectral", v},
              {"p_tile", is_p_tile(omega, p)},
              {"measure", measure(omega).to_string()},
              {"fibers", fibers_json(fibers(omega, p))}};
  return finish(job, inputs, v ? "true" : "false", result, v ? kExitTrue : kExitFalse,
                gamma.to_string() + " + " + std::to_string(p) + "Z is " + (v ? "" : "not ") + "a spectrum of " +
                    omega.to_string());
}

Outcome run_enum_spectra(const JobSpec& job, const Params& in) {
  const auto gamma = in.points("gamma");
  const auto p = in.integer("p", 1);
  const auto n_max = in.integer("n-max", 1);
  const auto options = in.budget(job.jobs);
  Json inputs{{"gamma", join_points(gamma)}, {"p", std::to_string(p)}, {"n-max", std::to_string(n_max)}};
  Json bounds{{"n_max", n_max}};
  if (in.has("time-budget")) bounds["time_budget"] = in.text("time-budget");
  auto found = search_spectra(gamma, p, n_max, options);
  Json result{{"spectra", family_json(found.spectra)}, {"complete", found.complete}};
  if (in.has("oracle")) {
    inputs["oracle"] = "true";
    const bool agrees = brute_force_spectra(gamma, p, n_max) == found.spectra;
    result["oracle_agrees"] = agrees;
    if (!agrees) return finish(job, inputs, "oracle-mismatch", result, kExitFalse, "oracle disagrees", bounds);
  }
  const bool any = !found.spectra.empty();
  std::string verdict = !found.complete ? "incomplete" : any ? "found" : "none-in-bounds";
  return finish(job, inputs, verdict, result, any && found.complete ? kExitTrue : kExitInconclusive,
                std::to_string(found.spectra.size()) + " spectra of " + gamma.to_string() + " within n_max = " +
                    std::to_string(n_max),
                bounds);
}

Outcome run_find_complement(const JobSpec& job, const Params& in) {
  if (in.has("a") == in.has("family")) throw InvalidArgument("find-complement needs exactly one of --a or --family");
  if (in.has("a")) {
    const auto a = in.ints("a");
    const auto m = in.integer("m", 1);
    const auto all = find_complements(a, m);
    Json inputs{{"a", join_ints(a.elements())}, {"m", std::to_string(m)}};
    Json result{{"complements", all}, {"period", m}};
    return finish(job, inputs, all.empty() ? "none" : "found", result, all.empty() ? kExitFalse : kExitTrue,
                  std::to_string(all.size()) + " complements of " + a.to_string() + " in Z_" + std::to_string(m));
  }
  const auto fam = in.family("family");
  const auto m_max = in.integer("m-max", 1);
  const auto options = in.budget(job.jobs);
  Json inputs{{"family", join_family(fam)}, {"m-max", std::to_string(m_max)}};
  Json bounds{{"m_max", m_max}};
  if (in.has("time-budget")) bounds["time_budget"] = in.text("time-budget");
  auto search = search_common_complement(fam, m_max, options);
  if (search.complement) {
    return finish(job, inputs, "found", Json{{"complement", periodic_json(*search.complement)}}, kExitTrue,
                  "common complement " + search.complement->to_string(), bounds);
  }
  return finish(job, inputs, search.status == SearchStatus::timed_out ? "timed-out" : "none-in-bounds",
                Json{{"complement", nullptr}}, kExitInconclusive, "no common complement with period <= " +
                                                                       std::to_string(m_max),
                bounds);
}

Outcome run_utc_verify(const JobSpec& job, const Params& in) {
  const auto p = in.integer("p", 1);
  const auto gamma = in.points("gamma");
  const auto n_max = in.integer("n-max", 1);
  const auto m_max = in.integer("m-max", 1);
  const auto options = in.budget(job.jobs);
  Json inputs{{"p", std::to_string(p)},
              {"gamma", join_points(gamma)},
              {"n-max", std::to_string(n_max)},
              {"m-max", std::to_string(m_max)}};
  Json bounds{{"n_max", n_max}, {"m_max", m_max}};
  if (in.has("time-budget")) bounds["time_budget"] = in.text("time-budget");
  const auto report = utc_verify(p, gamma, n_max, m_max, options);
  Json result{{"spectra_found", family_json(report.spectra_found)},
              {"family_size", report.spectra_found.size()},
              {"enumeration_complete", report.enumeration_complete},
              {"timed_out", report.timed_out},
              {"certificate", report.certificate ? periodic_json(*report.certificate) : Json(nullptr)}};
  const bool ok = report.verdict == UtcVerdict::verified_with_certificate;
  std::string summary = to_string(report.verdict) + ", " + std::to_string(report.spectra_found.size()) + " spectra";
  if (report.certificate) summary += ", common complement " + report.certificate->to_string();
  auto o = finish(job, inputs, to_string(report.verdict), result, ok ? kExitTrue : kExitInconclusive, summary, bounds);
  o.certificate["timing_seconds"] = report.seconds;
  return o;
}

Outcome run_build_omega(const JobSpec& job, const Params& in) {
  const auto p = in.integer("p", 1);
  const auto fam = in.family("family");
  const auto bps = in.rationals("breakpoints");
  const auto omega = build_omega(p, fam, bps);
  Json inputs{{"p", std::to_string(p)}, {"family", join_family(fam)}, {"breakpoints", join_rationals(bps)}};
  Json result{{"omega", omega.to_string()},
              {"measure", measure(omega).to_string()},
              {"fibers", fibers_json(fibers(omega, p))}};
  return finish(job, inputs, "built", result, kExitTrue, "omega = " + omega.to_string());
}

Outcome run_verify_omega(const JobSpec& job, const Params& in) {
  const auto omega = in.omega("omega");
  const auto residues = in.residues("t-residues");
  const auto m = in.integer("t-period", 1);
  const auto p = in.has("p") ? in.integer("p", 1) : std::int64_t{1};
  const PeriodicSet t = in.field("t-residues", [&](const std::string&) { return PeriodicSet(residues, m); });
  const bool v = verify_omega_tiling(omega, t.residues(), m, p);
  Json inputs{{"omega", omega.to_string()},
              {"t-residues", join_ints(t.residues())},
              {"t-period", std::to_string(m)},
              {"p", std::to_string(p)}};
  return finish(job, inputs, v ? "true" : "false", Json{{"tiles", v}}, v ? kExitTrue : kExitFalse,
                omega.to_string() + (v ? " tiles" : " does not tile") + " R by (1/" + std::to_string(p) + ")(" +
                    t.to_string() + ")");
}

Outcome run_roundtrip(const JobSpec& job, const Params& in) {
  const auto p = in.integer("p", 1);
  const auto gamma = in.points("gamma");
  const auto fam = in.family("family");
  const auto bps = in.rationals("breakpoints");
  const auto m_max = in.integer("m-max", 1);
  const auto options = in.budget(job.jobs);
  Json inputs{{"p", std::to_string(p)},
              {"gamma", join_points(gamma)},
              {"family", join_family(fam)},
              {"breakpoints", join_rationals(bps)},
              {"m-max", std::to_string(m_max)}};
  Json bounds{{"m_max", m_max}};
  if (in.has("time-budget")) bounds["time_budget"] = in.text("time-budget");
  const auto r = interval_roundtrip(p, gamma, fam, bps, m_max, options);
  Json result{{"omega", r.omega.to_string()},
              {"p_tile", r.p_tile},
              {"spectral_ok", r.spectral_ok},
              {"omega_tiling", r.omega_tiling ? periodic_json(r.omega_tiling->translations) : Json(nullptr)},
              {"projected_complement", r.projected_complement ? periodic_json(*r.projected_complement) : Json(nullptr)},
              {"projection_tiles_family", r.projection_tiles_family},
              {"consistency", r.consistency}};
  std::string verdict = r.consistency ? "consistent" : !r.omega_tiling ? "inconclusive" : "inconsistent";
  int code = r.consistency ? kExitTrue : !r.omega_tiling ? kExitInconclusive : kExitFalse;
  return finish(job, inputs, verdict, result, code, verdict + ", omega = " + r.omega.to_string(), bounds);
}

Outcome run_gram_check(const JobSpec& job, const Params& in) {
  const auto omega = in.omega("omega");
  const auto gamma = in.points("gamma");
  const auto p = in.integer("p", 1);
  const Rational bound = in.has("bound") ? in.field("bound", [](const std::string& t) { return Rational::parse(t); })
                                         : Rational(3 * p);
  const double tol = in.has("tolerance") ? in.real("tolerance") : 1e-9;
  if (!(tol > 0)) throw InvalidArgument("--tolerance: must be positive");
  Json inputs{{"omega", omega.to_string()},
              {"gamma", join_points(gamma)},
              {"p", std::to_string(p)},
              {"bound", bound.to_string()},
              {"tolerance", double_text(tol)}};
  const bool exact = spectral_verdict(omega, gamma, p);
  const PeriodicSpectrum spectrum =
      in.field("gamma", [&](const std::string&) { return PeriodicSpectrum(gamma, p); });
  const auto g = truncated_gram(omega, spectrum, bound);
  const bool within = g.within(tol);
  Json result{{"exact_spectral", exact},
              {"size", g.size},
              {"max_off_diagonal", g.max_off_diagonal},
              {"max_diagonal_deviation", g.max_diagonal_deviation},
              {"within_tolerance", within},
              {"contradiction", exact && !within}};
  if (in.has("lambda")) {
    const double l = in.real("lambda");
    const double lp = in.has("lambda-prime") ? in.real("lambda-prime") : 0.0;
    inputs["lambda"] = double_text(l);
    inputs["lambda-prime"] = double_text(lp);
    const auto e = gram_entry(omega, l, lp);
    result["gram_entry"] = Json{{"re", e.real()}, {"im", e.imag()}};
    try {
      result["period_identity_residual"] = period_identity_residual(omega, p, l, lp);
    } catch (const InvalidArgument&) {
      result["period_identity_residual"] = nullptr;
    }
  }
  std::ostringstream s;
  s << g.size << " frequencies, max off-diagonal " << std::setprecision(3) << g.max_off_diagonal
    << (within ? " (orthonormal within tolerance)" : " (not orthonormal)");
  Json bounds{{"bound", bound.to_string()}, {"tolerance", double_text(tol)}};
  return finish(job, inputs, within ? "orthonormal" : "not-orthonormal", result, within ? kExitTrue : kExitFalse,
                s.str(), bounds);
}

void check_known_options(const JobSpec& job) {
  const auto& allowed = option_table().at(job.command);
  for (const auto& [name, value] : job.params) {
    const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const OptionSpec& o) { return o.name == name; });
    if (!known) throw InvalidArgument("unknown option --" + name + " for " + to_string(job.command));
  }
}

const char* describe(Command c) {
  switch (c) {
    case Command::check_spectrum: return "test a spectral pair (Gamma, B) or a periodic spectrum of an interval union";
    case Command::enum_spectra: return "list integer spectra of Gamma inside [0, n-max]";
    case Command::find_complement: return "tiling complements of one set mod m, or a common one for a family";
    case Command::utc_verify: return "bounded universal tiling check for one Gamma";
    case Command::build_omega: return "interval union from a family of spectra and breakpoints";
    case Command::verify_omega: return "exact check that translates of an interval union tile R";
    case Command::roundtrip: return "family -> interval union -> spectral verdict -> tiling -> family";
    case Command::gram_check: return "floating-point Gram matrix of a truncated periodic spectrum";
  }
  return "";
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << text;
    if (!f.flush()) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

Json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

}  // namespace

Outcome execute(const JobSpec& job) {
  check_known_options(job);
  const Params in(job.params);
  switch (job.command) {
    case Command::check_spectrum:
      return run_check_spectrum(job, in);
    case Command::enum_spectra:
      return run_enum_spectra(job, in);
    case Command::find_complement:
      return run_find_complement(job, in);
    case Command::utc_verify:
      return run_utc_verify(job, in);
    case Command::build_omega:
      return run_build_omega(job, in);
    case Command::verify_omega:
      return run_verify_omega(job, in);
    case Command::roundtrip:
      return run_roundtrip(job, in);
    case Command::gram_check:
      return run_gram_check(job, in);
  }
  throw InvalidArgument("unhandled command");
}

namespace {

// Checks that do not go through the command handlers.
void independent_checks(const Json& cert, std::vector<std::string>& problems) {
  const auto& in = cert.at("inputs");
  const auto& res = cert.at("result");
  const std::string cmd = cert.at("command");
  auto fam_from = [](const Json& arr) {
    std::vector<IntSet> out;
    for (const auto& a : arr) out.emplace_back(a.get<std::vector<std::int64_t>>());
    return out;
  };
  if (cmd == "utc-verify") {
    const auto p = Rational::parse(in.at("p").get<std::string>()).to_int64();
    const auto gamma = FinitePointSet::parse(in.at("gamma").get<std::string>());
    const Rational w(BigInt(1), BigInt(p));
    const auto fam = fam_from(res.at("spectra_found"));
    for (const auto& a : fam) {
      if (!is_spectrum(gamma, a.scaled(w))) problems.push_back(a.to_string() + "/p is not a spectrum");
    }
    if (!res.at("certificate").is_null()) {
      const auto& c = res.at("certificate");
      const auto residues = c.at("residues").get<std::vector<std::int64_t>>();
      const auto m = c.at("period").get<std::int64_t>();
      for (const auto& a : fam) {
        if (!tiles_cyclic(a, residues, m)) problems.push_back(a.to_string() + " does not tile with the certificate");
      }
    }
  } else if (cmd == "find-complement" && res.contains("complement") && !res.at("complement").is_null()) {
    const auto residues = res.at("complement").at("residues").get<std::vector<std::int64_t>>();
    const auto m = res.at("complement").at("period").get<std::int64_t>();
    for (auto f : detail::split(in.at("family").get<std::string>(), ';')) {
      if (!tiles_cyclic(IntSet::parse(f), residues, m)) problems.push_back("complement fails for " + std::string(f));
    }
  } else if (cmd == "roundtrip" && !res.at("omega_tiling").is_null()) {
    const auto omega = IntervalUnion::parse(res.at("omega").get<std::string>());
    const auto p = Rational::parse(in.at("p").get<std::string>()).to_int64();
    const auto& t = res.at("omega_tiling");
    if (!verify_omega_tiling(omega, t.at("residues").get<std::vector<std::int64_t>>(), t.at("period").get<std::int64_t>(),
                             p)) {
      problems.push_back("recorded omega tiling does not partition R");
    }
  }
}

}  // namespace

Recheck reverify(const Json& certificate) {
  Recheck r;
  try {
    if (certificate.value("schema", "") != kCertificateSchema) {
      r.problems.push_back("unknown schema");
      return r;
    }
    Json job = certificate.at("inputs");
    job["command"] = certificate.at("command");
    const auto spec = job_from_json(job);
    if (input_hash(certificate.at("inputs")) != certificate.value("input_hash", "")) {
      r.problems.push_back("input hash mismatch");
    }
    const auto fresh = execute(spec);
    if (fresh.certificate.at("verdict") != certificate.at("verdict")) r.problems.push_back("verdict differs on rerun");
    if (fresh.certificate.at("result") != certificate.at("result")) r.problems.push_back("result differs on rerun");
    independent_checks(certificate, r.problems);
  } catch (const std::exception& e) {
    r.problems.push_back(e.what());
  }
  r.ok = r.problems.empty();
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for spectral sets, integer tilings and the universal tiling property"};
  app.set_help_all_flag("--help-all");
  std::string job_file;
  app.add_option("--job", job_file, "JSON job file (instead of a subcommand)");

  struct Sub {
    CLI::App* app;
    Command command;
    std::map<std::string, std::string> values;
    std::map<std::string, bool> flags;
    std::string out;
    bool summary = false;
    unsigned jobs = 1;
  };
  std::vector<std::unique_ptr<Sub>> subs;
  for (const auto& [command, options] : option_table()) {
    auto sub = std::make_unique<Sub>();
    sub->command = command;
    sub->app = app.add_subcommand(to_string(command), describe(command));
    for (const auto& o : options) {
      if (o.flag) {
        sub->app->add_flag("--" + o.name, sub->flags[o.name], o.help);
      } else {
        sub->app->add_option("--" + o.name, sub->values[o.name], o.help);
      }
    }
    sub->app->add_option("--out", sub->out, "write the certificate here instead of stdout");
    sub->app->add_flag("--summary", sub->summary, "print a one-line human summary");
    sub->app->add_option("--jobs", sub->jobs, "worker threads for searches")->check(CLI::PositiveNumber);
    subs.push_back(std::move(sub));
  }
  std::string cert_file;
  auto* recheck = app.add_subcommand("recheck", "re-verify a certificate file");
  recheck->add_option("--cert", cert_file, "certificate JSON")->required();
  app.require_subcommand(0, 1);

  std::vector<std::string> argv_store(args.begin(), args.end());
  if (argv_store.empty()) argv_store.push_back("fuglede");
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (recheck->parsed()) {
      const auto check = reverify(load_json_file(cert_file));
      for (const auto& p : check.problems) err << "recheck: " << p << "\n";
      out << (check.ok ? "certificate re-verified\n" : "certificate FAILED re-verification\n");
      return check.ok ? kExitTrue : kExitFalse;
    }
    JobSpec job;
    if (!job_file.empty()) {
      job = job_from_json(load_json_file(job_file));
    } else {
      auto it = std::find_if(subs.begin(), subs.end(), [](const auto& s) { return s->app->parsed(); });
      if (it == subs.end()) {
        err << "error: a subcommand or --job is required\n" << app.help();
        return kExitInvalidInput;
      }
      const Sub& s = **it;
      job.command = s.command;
      for (const auto& [name, value] : s.values) {
        if (s.app->get_option("--" + name)->count() > 0) job.params[name] = value;
      }
      for (const auto& [name, set] : s.flags) {
        if (set) job.params[name] = "true";
      }
      if (!s.out.empty()) job.output = s.out;
      job.summary = s.summary;
      job.jobs = s.jobs;
    }
    const auto outcome = execute(job);
    const std::string text = canonical_dump(outcome.certificate);
    if (job.output) {
      write_atomically(*job.output, text);
    } else {
      out << text;
    }
    if (job.summary) out << outcome.summary << "\n";
    return outcome.exit_code;
  } catch (const InvalidFamily& e) {
    err << "error: invalid family (member " << e.index() << "): " << e.what() << "\n";
  } catch (const UnsupportedInput& e) {
    err << "error: unsupported input: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ResourceLimit& e) {
    err << "error: resource limit: " << e.what() << "\n";
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInvalidInput;
}

}  // namespace fuglede::cli
