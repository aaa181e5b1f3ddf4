// truncgal: command-line front end for the truncated-binomial Galois toolkit.
//
// Exit status: 0 when every requested verification reached a verdict other than
// INCONCLUSIVE, 2 when at least one was INCONCLUSIVE, 1 on usage or internal error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "truncgal/disc.hpp"
#include "truncgal/newton.hpp"
#include "truncgal/pell.hpp"
#include "truncgal/record.hpp"
#include "truncgal/sweep.hpp"

namespace {

using namespace truncgal;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags > TRUNCGAL_* environment > config file > defaults.
struct Settings {
  ClassifyConfig config;
  int workers = 0;
};

struct BoundFlags {
  std::optional<u64> prime_bound, p1_max, p2_max, p3_max, extended_max;
  std::optional<std::string> hajir_bound;
  std::optional<int> workers;
};

void apply_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("malformed config file " + path + ": " + e.what());
  }
  if (j.contains("prime_bound")) s.config.general.prime_bound = j["prime_bound"].get<u64>();
  if (j.contains("hajir_bound")) s.config.general.hajir_bound = integer_from_json(j["hajir_bound"]);
  if (j.contains("p1_max")) s.config.sextic.p1_max = j["p1_max"].get<u64>();
  if (j.contains("p2_max")) s.config.sextic.p2_max = j["p2_max"].get<u64>();
  if (j.contains("p3_max")) s.config.sextic.p3_max = j["p3_max"].get<u64>();
  if (j.contains("extended_max")) s.config.sextic.extended_max = j["extended_max"].get<u64>();
  if (j.contains("workers")) s.workers = j["workers"].get<int>();
}

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

Settings resolve_settings(const std::string& config_path, const BoundFlags& flags) {
  Settings s;
  if (!config_path.empty()) apply_config_file(s, config_path);
  try {
    if (auto v = env("TRUNCGAL_PRIME_BOUND")) s.config.general.prime_bound = std::stoull(*v);
    if (auto v = env("TRUNCGAL_WORKERS")) s.workers = std::stoi(*v);
  } catch (const std::logic_error&) {
    throw UsageError("invalid TRUNCGAL_* environment value");
  }
  if (flags.prime_bound) s.config.general.prime_bound = *flags.prime_bound;
  if (flags.hajir_bound) s.config.general.hajir_bound = mpz_class(*flags.hajir_bound);
  if (flags.p1_max) s.config.sextic.p1_max = *flags.p1_max;
  if (flags.p2_max) s.config.sextic.p2_max = *flags.p2_max;
  if (flags.p3_max) s.config.sextic.p3_max = *flags.p3_max;
  if (flags.extended_max) s.config.sextic.extended_max = *flags.extended_max;
  if (flags.workers) s.workers = *flags.workers;
  return s;
}

void add_bound_flags(CLI::App* cmd, BoundFlags& flags) {
  cmd->add_option("--prime-bound", flags.prime_bound, "largest prime scanned for witnesses (r != 6)");
  cmd->add_option("--hajir-bound", flags.hajir_bound, "largest prime p allowed in a Newton-polygon certificate");
  cmd->add_option("--p1-max", flags.p1_max, "r = 6: irreducibility witness bound");
  cmd->add_option("--p2-max", flags.p2_max, "r = 6: {1,5} witness bound");
  cmd->add_option("--p3-max", flags.p3_max, "r = 6: {2,4} witness bound");
  cmd->add_option("--extended-max", flags.extended_max, "r = 6: {2,4} search limit before PGL25_COMPATIBLE");
  cmd->add_option("--workers", flags.workers, "worker threads for batch commands");
}

struct Instance {
  int r = 0;
  std::optional<i64> t, n;

  FamilyParams params() const {
    if (t.has_value() == n.has_value()) throw UsageError("give exactly one of --t or --n");
    try {
      return t ? FamilyParams::from_rt(r, *t) : FamilyParams::from_rn(r, *n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

void add_instance(CLI::App* cmd, Instance& inst) {
  cmd->add_option("--r", inst.r, "truncation degree")->required();
  cmd->add_option("--t", inst.t, "derivative index (n = t + r + 1)");
  cmd->add_option("--n", inst.n, "binomial upper index");
}

json params_json(const FamilyParams& p) { return {{"r", p.r()}, {"t", p.t()}, {"n", p.n()}}; }

VerificationRecord timed_classify(const FamilyParams& params, const ClassifyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord rec;
  rec.verdict = classify(params, config);
  rec.duration_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string describe(const Evidence& ev) {
  std::ostringstream os;
  std::visit(
      [&](const auto& e) {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, IrreducibilityWitness>) {
          os << "irreducible mod " << e.prime << " (" << to_string(e.form) << ")";
        } else if constexpr (std::is_same_v<T, DiscriminantEvidence>) {
          os << "discriminant " << (e.square ? "square" : "not a square") << " (" << e.value.get_str() << ")";
        } else if constexpr (std::is_same_v<T, HajirEvidence>) {
          os << "newton certificate q=" << e.q << " p=" << e.p.get_str() << " e=" << e.e << " edge ("
             << e.edge.start.x << "," << e.edge.start.y << ")-(" << e.edge.end.x << "," << e.edge.end.y
             << ") slope " << e.edge.slope.num << "/" << e.edge.slope.den;
        } else if constexpr (std::is_same_v<T, CycleTypeWitness>) {
          os << to_string(e.role) << " pattern " << e.pattern.to_string() << " mod " << e.pattern.prime;
        } else {
          os << "flag " << e.name;
        }
      },
      ev);
  return os.str();
}

void print_record(const VerificationRecord& rec, bool as_json) {
  if (as_json) {
    std::cout << to_line(rec) << "\n";
    return;
  }
  std::cout << "r=" << rec.r() << " t=" << rec.t() << " n=" << rec.n() << "  " << to_string(rec.verdict.group)
            << "  (" << rec.duration_ms << " ms)\n";
  for (const auto& ev : rec.verdict.evidence) std::cout << "    " << describe(ev) << "\n";
}

int verdict_exit(bool any_inconclusive) { return any_inconclusive ? kExitInconclusive : kExitOk; }

// --- disc ------------------------------------------------------------------

int run_disc(const Instance& inst, bool as_json) {
  if (inst.r < 2) throw UsageError("disc needs r >= 2");
  const FamilyParams params = inst.params();
  const DiscriminantValue d = closed_form_discriminant(params);
  const bool agrees = discriminant_via_resultant(build_form(params, Form::Q_SHIFTED)) == d.value &&
                      discriminant_via_resultant(build_form(params, Form::P)) == d.value;
  const bool square = is_square(d.value);
  if (as_json) {
    json j = params_json(params);
    j["value"] = json_integer(d.value);
    j["sign"] = d.sign;
    j["square"] = square;
    j["structured"] = {{"sign_exponent", d.structured.sign_exponent},
                       {"outer_exponent", d.structured.outer_exponent},
                       {"inner_exponent", d.structured.inner_exponent},
                       {"denominator_exponent", d.structured.denominator_exponent}};
    j["resultant_agrees"] = agrees;
    std::cout << j.dump() << "\n";
  } else {
    const auto& s = d.structured;
    std::cout << "r=" << params.r() << " t=" << params.t() << " n=" << params.n() << "\n"
              << "discriminant  " << d.value.get_str() << "\n"
              << "structure     (-1)^" << s.sign_exponent << " (t+1)^" << s.outer_exponent << " (t+r+1)^"
              << s.outer_exponent << " prod_{k=2..r}(t+k)^" << s.inner_exponent << " / (r!)^"
              << s.denominator_exponent << "\n"
              << "square        " << (square ? "yes" : "no") << "\n"
              << "resultant     " << (agrees ? "agrees" : "DISAGREES") << "\n";
  }
  return agrees ? kExitOk : kExitUsage;
}

// --- newton ----------------------------------------------------------------

int run_newton(const Instance& inst, const std::string& prime_text, const std::string& form_name, bool as_json) {
  const FamilyParams params = inst.params();
  const mpz_class p(prime_text);
  if (!is_prime(p)) throw UsageError("--prime must be prime");
  Form form;
  try {
    form = parse_form(form_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const NewtonPolygon np = newton_polygon(build_form(params, form), p);
  const auto constraints = factor_degree_constraints(np);
  if (as_json) {
    json j = params_json(params);
    j["prime"] = json_integer(p);
    j["form"] = std::string(to_string(form));
    j["points"] = json::array();
    for (const auto& pt : np.points) j["points"].push_back({pt.x, pt.y});
    j["edges"] = json::array();
    for (const auto& c : constraints) {
      j["edges"].push_back({{"start", {c.edge.start.x, c.edge.start.y}},
                            {"end", {c.edge.end.x, c.edge.end.y}},
                            {"slope", {c.edge.slope.num, c.edge.slope.den}},
                            {"factor_degree", c.factor_degree},
                            {"irreducible_degree_multiple", c.irreducible_degree_multiple}});
    }
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  std::cout << "newton polygon of " << to_string(form) << " r=" << params.r() << " t=" << params.t()
            << " at p=" << p.get_str() << "\npoints ";
  for (const auto& pt : np.points) std::cout << "(" << pt.x << "," << pt.y << ") ";
  std::cout << "\n";
  for (const auto& c : constraints) {
    std::cout << "edge (" << c.edge.start.x << "," << c.edge.start.y << ")-(" << c.edge.end.x << ","
              << c.edge.end.y << ") slope " << c.edge.slope.num << "/" << c.edge.slope.den << "  factor degree "
              << c.factor_degree << ", irreducible pieces of degree divisible by " << c.irreducible_degree_multiple
              << "\n";
  }
  return kExitOk;
}

// --- classify --------------------------------------------------------------

int run_classify(const Instance& inst, const Settings& settings, bool as_json) {
  const FamilyParams params = inst.params();
  if (params.r() < 2) throw UsageError("classify needs r >= 2");
  const VerificationRecord rec = timed_classify(params, settings.config);
  print_record(rec, as_json);
  return verdict_exit(rec.verdict.group == GroupVerdict::Inconclusive);
}

// --- exceptional -----------------------------------------------------------

int run_exceptional(i64 limit, bool verify, const Settings& settings, bool as_json) {
  const auto values = enumerate_exceptional(limit);
  std::vector<VerificationRecord> records(values.size());
  if (verify) {
    set_workers(settings.workers);
    const auto count = static_cast<i64>(values.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (i64 i = 0; i < count; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      records[idx] = timed_classify(FamilyParams::from_rt(6, values[idx].t), settings.config);
    }
  }
  int symmetric = 0, pgl = 0, inconclusive = 0, other = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& v = values[i];
    if (verify) {
      switch (records[i].verdict.group) {
        case GroupVerdict::SymmetricCertified: ++symmetric; break;
        case GroupVerdict::Pgl25Compatible: ++pgl; break;
        case GroupVerdict::Inconclusive: ++inconclusive; break;
        default: ++other; break;
      }
    }
    if (as_json) {
      json j = {{"t", v.t}, {"n", v.t + 7}, {"witnesses", json::array()}};
      for (const auto& w : v.witnesses) {
        j["witnesses"].push_back(
            {{"a", w.a}, {"b", w.b}, {"m", w.m}, {"u", json_integer(w.u)}, {"v", json_integer(w.v)}});
      }
      if (verify) j["record"] = to_json(records[i]);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << std::setw(12) << v.t << "  n=" << std::setw(12) << v.t + 7;
      for (const auto& w : v.witnesses) {
        std::cout << "  (a,b)=(" << w.a << "," << w.b << ") m=" << w.m << " u=" << w.u.get_str()
                  << " v=" << w.v.get_str();
      }
      if (verify) std::cout << "  " << to_string(records[i].verdict.group);
      std::cout << "\n";
    }
  }
  if (as_json) {
    json summary = {{"count", values.size()}};
    if (verify) {
      summary["symmetric_certified"] = symmetric;
      summary["pgl25_compatible"] = pgl;
      summary["inconclusive"] = inconclusive;
    }
    std::cerr << json{{"summary", summary}}.dump() << "\n";
  } else {
    std::cerr << values.size() << " values of t <= " << limit;
    if (verify) {
      std::cerr << ": " << symmetric << " SYMMETRIC_CERTIFIED, " << pgl << " PGL25_COMPATIBLE, " << inconclusive
                << " INCONCLUSIVE";
    }
    std::cerr << "\n";
  }
  return verdict_exit(inconclusive > 0);
}

// --- scan ------------------------------------------------------------------

struct Checkpoint {
  int r = 0;
  i64 t_from = 0, t_to = 0, next_t = 0;
};

std::optional<Checkpoint> read_checkpoint(const std::string& path) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw UsageError("unreadable resume file " + path);
  try {
    json j;
    in >> j;
    return Checkpoint{j.at("r").get<int>(), j.at("t_from").get<i64>(), j.at("t_to").get<i64>(),
                      j.at("next_t").get<i64>()};
  } catch (const json::exception&) {
    throw UsageError("unreadable resume file " + path);
  }
}

void write_checkpoint(const std::string& path, const Checkpoint& c) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << json{{"r", c.r}, {"t_from", c.t_from}, {"t_to", c.t_to}, {"next_t", c.next_t}}.dump() << "\n";
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

int run_scan(int r, i64 t_from, i64 t_to, const std::string& resume, const std::string& out_path,
             std::optional<i64> max_records, const Settings& settings, bool as_json) {
  if (r < 2) throw UsageError("scan needs r >= 2");
  if (t_from < 0) throw UsageError("scan needs t-from >= 0");
  i64 next = t_from;
  if (!resume.empty()) {
    if (auto c = read_checkpoint(resume)) {
      if (c->r != r || c->t_from != t_from || c->t_to != t_to) throw UsageError("resume file is for a different range");
      next = c->next_t;
    }
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::app);
    if (!file) throw UsageError("cannot open output " + out_path);
  }
  set_workers(settings.workers);

  i64 emitted = 0, certified = 0, total = 0;
  std::vector<i64> inconclusive;
  const i64 chunk = 64;
  while (next <= t_to) {
    i64 stop = std::min(t_to, next + chunk - 1);
    if (max_records) stop = std::min(stop, next + (*max_records - emitted) - 1);
    if (stop < next) break;
    const auto count = stop - next + 1;
    std::vector<VerificationRecord> batch(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1)
    for (i64 i = 0; i < count; ++i) {
      batch[static_cast<std::size_t>(i)] = timed_classify(FamilyParams::from_rt(r, next + i), settings.config);
    }
    for (const auto& rec : batch) {
      ++total;
      if (rec.verdict.group == GroupVerdict::SymmetricCertified) ++certified;
      if (rec.verdict.group == GroupVerdict::Inconclusive) inconclusive.push_back(rec.t());
      if (file.is_open()) {
        file << to_line(rec) << "\n";
      } else {
        print_record(rec, as_json);
      }
    }
    if (file.is_open()) file.flush();
    std::cout.flush();
    emitted += count;
    next = stop + 1;
    if (!resume.empty()) write_checkpoint(resume, {r, t_from, t_to, next});
    if (max_records && emitted >= *max_records) break;
  }

  std::ostringstream summary;
  summary << "scanned " << total << " values, " << certified << " SYMMETRIC_CERTIFIED";
  if (total) summary << " (" << std::fixed << std::setprecision(2) << 100.0 * certified / total << "%)";
  summary << ", " << inconclusive.size() << " INCONCLUSIVE";
  if (!inconclusive.empty()) {
    summary << ":";
    for (i64 t : inconclusive) summary << " " << t;
  }
  std::cerr << summary.str() << "\n";
  return verdict_exit(!inconclusive.empty());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois groups of truncated binomial expansions"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags > TRUNCGAL_* env > file > defaults)");

  bool as_json = false;
  Instance inst;
  BoundFlags flags;

  auto* disc = app.add_subcommand("disc", "exact discriminant with resultant cross-check");
  add_instance(disc, inst);
  disc->add_flag("--json", as_json);

  auto* newton = app.add_subcommand("newton", "Newton polygon of a family member at a prime");
  add_instance(newton, inst);
  std::string prime_text, form_name = "Q_SHIFTED";
  newton->add_option("--prime", prime_text, "prime p")->required();
  newton->add_option("--form", form_name, "P, P_REVERSED, P_REVERSED_SHIFTED, Q or Q_SHIFTED");
  newton->add_flag("--json", as_json);

  auto* cls = app.add_subcommand("classify", "certify the Galois group of one family member");
  add_instance(cls, inst);
  add_bound_flags(cls, flags);
  cls->add_flag("--json", as_json);

  auto* exc = app.add_subcommand("exceptional", "r = 6 exceptional set from the Pell orbits");
  i64 limit = 0;
  bool verify = false;
  exc->add_option("--limit", limit, "largest t")->required();
  exc->add_flag("--verify", verify, "run the sextic pipeline on every value");
  add_bound_flags(exc, flags);
  exc->add_flag("--json", as_json);

  auto* scan = app.add_subcommand("scan", "classify a range of t with checkpointed resume");
  int scan_r = 0;
  i64 t_from = 0, t_to = -1;
  std::string resume, out_path;
  std::optional<i64> max_records;
  scan->add_option("--r", scan_r, "truncation degree")->required();
  scan->add_option("--t-from", t_from, "first t")->required();
  scan->add_option("--t-to", t_to, "last t")->required();
  scan->add_option("--resume", resume, "checkpoint file, created or continued");
  scan->add_option("--out", out_path, "append JSON-lines records to this file");
  scan->add_option("--max-records", max_records, "stop after this many records");
  add_bound_flags(scan, flags);
  scan->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Settings settings = resolve_settings(config_path, flags);
    if (*disc) return run_disc(inst, as_json);
    if (*newton) return run_newton(inst, prime_text, form_name, as_json);
    if (*cls) return run_classify(inst, settings, as_json);
    if (*exc) return run_exceptional(limit, verify, settings, as_json);
    if (*scan) return run_scan(scan_r, t_from, t_to, resume, out_path, max_records, settings, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
