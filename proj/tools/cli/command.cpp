#include "command.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "inflatable/counting.hpp"
#include "inflatable/criteria.hpp"
#include "inflatable/error.hpp"
#include "inflatable/limits.hpp"
#include "inflatable/montecarlo.hpp"
#include "inflatable/partitions.hpp"
#include "inflatable/permutation.hpp"
#include "inflatable/search.hpp"
#include "plot.hpp"

namespace inflatable::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kSubcommands = {
    "density", "counts",  "inflate", "blocks",     "limit",  "check",
    "lengths", "search",  "compose", "montecarlo", "rotate", "plot"};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Prints to stdout or to the --out file.
class Sink {
 public:
  Sink(std::ostream& out, const std::string& path) : out_(out), path_(path) {}

  void write(const std::string& text) {
    if (path_.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(path_);
    if (!file) throw Error(ErrorKind::io, "cannot open '" + path_ + "' for writing");
    file << text;
  }

 private:
  std::ostream& out_;
  std::string path_;
};

Json rational_map(const std::map<Permutation, Rational>& values) {
  Json out = Json::object();
  for (const auto& [p, r] : values) out[to_string(p)] = to_string(r);
  return out;
}

std::string json_line(const Json& j) { return j.dump() + "\n"; }

// Big counts stay JSON numbers while they fit in 64 bits.
Json big_json(const BigInt& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(value);
  }
  return value.str();
}

unsigned default_threads() {
  if (const char* env = std::getenv("INFLATABLE_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("INFLATABLE_THREADS must be a positive integer, got '") +
                     env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Permutation> read_permutation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path + "'");
  std::vector<Permutation> perms;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[0] == '#') continue;
    perms.push_back(parse_permutation(line));
  }
  return perms;
}

Json report_json(const Permutation& tau, const InflatabilityReport& report) {
  Json j;
  j["tau"] = to_string(tau);
  j["length"] = report.length;
  j["admissible_length"] = report.admissible_length;
  j["required"] = rational_map(report.required);
  j["observed"] = rational_map(report.observed);
  Json counts = Json::object();
  for (const auto& [p, c] : report.observed_counts) counts[to_string(p)] = c;
  j["observed_counts"] = counts;
  j["verdict"] = report.verdict;
  return j;
}

DensityProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open profile '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("profile '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw ParseError("profile must be a JSON object");
  std::map<Permutation, Rational> entries;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_string()) {
      throw ParseError("profile value for '" + key + "' must be a \"p/q\" string");
    }
    entries.emplace(parse_permutation(key), parse_rational(value.get<std::string>()));
  }
  return DensityProfile(std::move(entries));
}

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::complete: return "complete";
    case SearchStatus::limit_reached: return "limit_reached";
    case SearchStatus::timed_out: return "timed_out";
    case SearchStatus::inadmissible: return "inadmissible";
  }
  return "unknown";
}

struct Options {
  bool json = false;
  std::string out;

  std::string tau;
  std::string gamma;
  std::string pattern;
  std::vector<std::string> blocks;
  std::string style = "compact";
  std::string profile;
  std::string file;
  std::optional<std::uint64_t> max_n;
  std::uint32_t modulus = kResidueModulus;
  bool table = false;

  std::size_t n = 17;
  bool central = false;
  bool full = false;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> limit;
  bool emit_all = false;
  bool list = false;
  std::optional<std::uint64_t> timeout_ms;

  std::size_t j = 1000;
  std::uint64_t samples = 50;
  std::uint64_t subset_samples = 0;
  std::uint64_t seed = 0;

  std::string format = "ascii";
};

class Dispatcher {
 public:
  Dispatcher(const Options& o, std::ostream& out, std::ostream& err)
      : o_(o), out_(out), err_(err) {}

  CommandResult dispatch(const std::string& name) {
    static const std::map<std::string, CommandResult (Dispatcher::*)()> table = {
        {"density", &Dispatcher::density}, {"counts", &Dispatcher::counts},
        {"inflate", &Dispatcher::inflate_cmd}, {"blocks", &Dispatcher::blocks},
        {"limit", &Dispatcher::limit}, {"check", &Dispatcher::check},
        {"lengths", &Dispatcher::lengths}, {"search", &Dispatcher::search},
        {"compose", &Dispatcher::compose}, {"montecarlo", &Dispatcher::montecarlo},
        {"rotate", &Dispatcher::rotate_cmd}, {"plot", &Dispatcher::plot_cmd}};
    return (this->*table.at(name))();
  }

 private:
  // Emits JSON with --json, `text` otherwise.
  CommandResult emit(Json payload, const std::string& text) {
    Sink(out_, o_.out).write(o_.json ? json_line(payload) : text);
    return {Status::ok, std::move(payload), {}, kExitOk};
  }

  CommandResult emit_json(Json payload, Status status = Status::ok) {
    Sink(out_, o_.out).write(json_line(payload));
    return {status, std::move(payload), {}, kExitOk};
  }

  CommandResult density() {
    const auto tau = parse_permutation(o_.tau);
    const auto pi = parse_permutation(o_.pattern);
    const auto d = density_value(pi, tau);
    return emit(Json{{"density", to_string(d)}}, to_string(d) + "\n");
  }

  static Rational density_value(const Permutation& pi, const Permutation& tau) {
    if (pi.size() <= 3 && tau.size() >= 3 && pi.size() >= 2) {
      return Rational(BigInt(count_length3_all(tau).count(pi)),
                      binomial(tau.size(), pi.size()));
    }
    return inflatable::density(pi, tau);
  }

  CommandResult counts() {
    const auto tau = parse_permutation(o_.tau);
    const auto c = count_length3_all(tau);
    Json j;
    j["tau"] = to_string(tau);
    j["length"] = tau.size();
    Json counts = Json::object();
    std::string text;
    for (std::size_t i = 0; i < 6; ++i) {
      const auto name = to_string(length3_patterns()[i]);
      counts[name] = c.counts[i];
      text += name + " " + std::to_string(c.counts[i]) + "\n";
    }
    counts["12"] = c.inv12;
    counts["21"] = c.inv21;
    text += "12 " + std::to_string(c.inv12) + "\n21 " + std::to_string(c.inv21) + "\n";
    j["counts"] = counts;
    return emit(j, text);
  }

  Style style() const {
    if (o_.style == "compact") return Style::compact;
    if (o_.style == "comma") return Style::comma;
    throw UsageError("--style must be compact or comma");
  }

  CommandResult inflate_cmd() {
    const auto tau = parse_permutation(o_.tau);
    Permutation result = tau;
    if (!o_.blocks.empty()) {
      if (!o_.gamma.empty()) throw UsageError("give either <gamma> or --blocks, not both");
      std::vector<Permutation> blocks;
      for (const auto& b : o_.blocks) blocks.push_back(parse_permutation(b));
      result = generalized_inflate(tau, blocks);
    } else {
      if (o_.gamma.empty()) throw UsageError("inflate needs <gamma> or --blocks");
      result = inflate(tau, parse_permutation(o_.gamma));
    }
    const auto s = format_permutation(result, style());
    return emit(Json{{"result", s}, {"length", result.size()}}, s + "\n");
  }

  CommandResult blocks() {
    const auto pi = parse_permutation(o_.pattern.empty() ? o_.tau : o_.pattern);
    Json list = Json::array();
    std::string text;
    for (const auto& bp : block_partitions(pi)) {
      Json inner = Json::array();
      std::string b;
      for (std::size_t i = 0; i < bp.inner.size(); ++i) {
        inner.push_back(to_string(bp.inner[i]));
        if (i) b += ",";
        b += to_string(bp.inner[i]);
      }
      list.push_back({{"outer", to_string(bp.outer)}, {"inner", inner}, {"sizes", bp.sizes}});
      text += "\xCF\x83=" + to_string(bp.outer) + " b=" + b + "\n";
    }
    return emit(Json{{"pattern", to_string(pi)}, {"partitions", list}}, text);
  }

  CommandResult limit() {
    const auto tau = parse_permutation(o_.tau);
    const auto pi = parse_permutation(o_.pattern);
    const Rational value = o_.profile.empty()
                               ? limit_density_uniform(pi, tau)
                               : limit_density_inflation(pi, tau, load_profile(o_.profile));
    return emit_json(Json{{"pattern", to_string(pi)},
                          {"tau", to_string(tau)},
                          {"limit_density", to_string(value)}});
  }

  CommandResult check() {
    if (!o_.file.empty()) {
      if (!o_.tau.empty()) throw UsageError("give either <tau> or --file, not both");
      Json reports = Json::array();
      std::size_t passed = 0;
      for (const auto& tau : read_permutation_file(o_.file)) {
        auto report = check_3_inflatable(tau);
        passed += report.verdict;
        reports.push_back(report_json(tau, report));
      }
      const std::size_t total = reports.size();
      return emit_json(Json{{"count", total}, {"passed", passed},
                            {"all_pass", passed == total}, {"reports", std::move(reports)}});
    }
    if (o_.tau.empty()) throw UsageError("check needs <tau> or --file");
    const auto tau = parse_permutation(o_.tau);
    return emit_json(report_json(tau, check_3_inflatable(tau)));
  }

  CommandResult lengths() {
    if (o_.table) {
      const auto t = residue_multiplication_table();
      std::string text = "x";
      for (auto r : t.residues) text += " " + std::to_string(r);
      text += "\n";
      for (std::size_t i = 0; i < t.residues.size(); ++i) {
        text += std::to_string(t.residues[i]);
        for (auto v : t.products[i]) text += " " + std::to_string(v);
        text += "\n";
      }
      return emit(Json{{"residues", t.residues}, {"products", t.products}}, text);
    }
    if (o_.max_n) {
      std::vector<std::uint64_t> ns;
      std::string text;
      for (std::uint64_t n = 1; n <= *o_.max_n; ++n) {
        if (is_admissible_length(n)) {
          ns.push_back(n);
          text += std::to_string(n) + "\n";
        }
      }
      return emit(Json{{"max", *o_.max_n}, {"lengths", ns}}, text);
    }
    const auto residues = admissible_residues(o_.modulus);
    std::string text;
    for (std::size_t i = 0; i < residues.size(); ++i) {
      text += (i ? " " : "") + std::to_string(residues[i]);
    }
    return emit(Json{{"residues", residues}}, text + "\n");
  }

  CommandResult search() {
    if (o_.central && o_.full) throw UsageError("--central and --full are exclusive");
    SearchConfig config;
    config.n = o_.n;
    config.central_only = !o_.full;
    config.threads = o_.threads.value_or(default_threads());
    config.limit = o_.limit;
    config.emit_all = o_.emit_all;
    if (o_.timeout_ms) config.timeout = std::chrono::milliseconds(*o_.timeout_ms);
    if (o_.emit_all) {
      config.on_hit = [this](std::size_t subtree, const Permutation& p) {
        out_ << json_line(Json{{"subtree", subtree}, {"hit", to_string(p)}}) << std::flush;
      };
    }

    const auto started = std::chrono::steady_clock::now();
    const SearchResult result = search_3_inflatable(config);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);

    if (result.status == SearchStatus::inadmissible) {
      return emit_json(Json{{"n", o_.n},
                            {"space", config.central_only ? "central" : "full"},
                            {"status", "inadmissible"},
                            {"reason", result.reason},
                            {"scanned", 0},
                            {"found", 0}},
                       Status::inadmissible);
    }
    if (!o_.out.empty()) {
      std::ofstream file(o_.out);
      if (!file) throw Error(ErrorKind::io, "cannot open '" + o_.out + "' for writing");
      for (const auto& p : result.hits) file << to_string(p) << "\n";
    }
    if (o_.list) {
      for (const auto& p : result.hits) out_ << to_string(p) << "\n";
    }
    Json summary{{"n", o_.n},
                 {"space", config.central_only ? "central" : "full"},
                 {"scanned", big_json(result.scanned)},
                 {"found", result.found},
                 {"elapsed_ms", elapsed.count()},
                 {"status", status_name(result.status)},
                 {"threads", config.threads},
                 {"subtrees", result.subtrees},
                 {"nodes", result.nodes}};
    out_ << json_line(summary);
    CommandResult r{Status::ok, summary, {}, kExitOk};
    if (result.status == SearchStatus::timed_out) {
      r.status = Status::error;
      r.exit_code = kExitResource;
      r.diagnostics.push_back(result.reason);
      err_ << "error: " << result.reason << "\n";
    }
    return r;
  }

  CommandResult compose() {
    const auto tau1 = parse_permutation(o_.tau);
    const auto tau2 = parse_permutation(o_.gamma);
    const auto result = compose_inflatables(tau1, tau2);
    const auto s = format_permutation(result, Style::comma);
    return emit(Json{{"result", s}, {"length", result.size()}}, s + "\n");
  }

  CommandResult montecarlo() {
    const auto tau = parse_permutation(o_.tau);
    const auto pi = parse_permutation(o_.pattern);
    MonteCarloConfig config;
    config.j = o_.j;
    config.samples = o_.samples;
    config.subset_samples = o_.subset_samples;
    config.seed = o_.seed;
    config.threads = o_.threads.value_or(default_threads());
    const Estimate est = estimate_limit_density(tau, pi, config);
    const Rational exact = limit_density_uniform(pi, tau);
    const double exact_value = static_cast<double>(exact);
    Json z = nullptr;
    if (est.std_error > 0) z = (est.mean - exact_value) / est.std_error;
    return emit_json(Json{{"mean", est.mean},
                          {"stderr", est.std_error},
                          {"exact", to_string(exact)},
                          {"z", z},
                          {"tau", to_string(tau)},
                          {"pattern", to_string(pi)},
                          {"j", est.j},
                          {"samples", est.samples},
                          {"subset_samples", config.subset_samples},
                          {"seed", est.seed},
                          {"generator", std::string(kGeneratorId)}});
  }

  CommandResult rotate_cmd() {
    const auto pi = parse_permutation(o_.tau);
    const auto r = rotate(pi);
    return emit(Json{{"rotated", to_string(r)},
                     {"centrally_symmetric", is_centrally_symmetric(pi)}},
                to_string(r) + "\n");
  }

  CommandResult plot_cmd() {
    const auto tau = parse_permutation(o_.tau);
    PlotFormat format;
    if (o_.format == "svg") {
      format = PlotFormat::svg;
    } else if (o_.format == "ascii") {
      format = PlotFormat::ascii;
    } else {
      throw UsageError("--format must be svg or ascii");
    }
    const auto text = plot(tau, format);
    return emit(Json{{"format", o_.format}, {"plot", text}}, text);
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

void build_app(CLI::App& app, Options& o) {
  app.require_subcommand(1);
  auto json_flag = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Machine-readable JSON output");
  };
  auto out_opt = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the output to FILE");
  };

  auto* density = app.add_subcommand("density", "Exact density t(pattern, tau)");
  density->add_option("tau", o.tau)->required();
  density->add_option("--pattern", o.pattern)->required();
  json_flag(density);
  out_opt(density);

  auto* counts = app.add_subcommand("counts", "Occurrence counts of 12, 21 and all length-3 patterns");
  counts->add_option("tau", o.tau)->required();
  json_flag(counts);
  out_opt(counts);

  auto* inflate = app.add_subcommand("inflate", "Inflation of tau by gamma, or by --blocks");
  inflate->add_option("tau", o.tau)->required();
  inflate->add_option("gamma", o.gamma);
  inflate->add_option("--blocks", o.blocks, "One permutation per block of tau");
  inflate->add_option("--style", o.style, "compact or comma");
  json_flag(inflate);
  out_opt(inflate);

  auto* blocks = app.add_subcommand("blocks", "All block-partitions of a permutation (length <= 10)");
  blocks->add_option("pi", o.tau)->required();
  json_flag(blocks);
  out_opt(blocks);

  auto* limit = app.add_subcommand("limit", "Exact limit density of a pattern (length <= 6) in the inflation of tau");
  limit->add_option("tau", o.tau)->required();
  limit->add_option("--pattern", o.pattern)->required();
  limit->add_option("--profile", o.profile, "JSON map pattern -> \"p/q\"; default uniform");
  json_flag(limit);
  out_opt(limit);

  auto* check = app.add_subcommand("check", "3-inflatability report");
  check->add_option("tau", o.tau);
  check->add_option("--file", o.file, "One permutation per line");
  json_flag(check);
  out_opt(check);

  auto* lengths = app.add_subcommand("lengths", "Admissible residues or lengths");
  lengths->add_option("--max", o.max_n, "List admissible n <= MAX");
  lengths->add_option("--mod", o.modulus, "Modulus for residues")->check(CLI::PositiveNumber);
  lengths->add_flag("--table", o.table, "Multiplication table of admissible residues mod 144");
  json_flag(lengths);
  out_opt(lengths);

  auto* search = app.add_subcommand("search", "Exhaustive search for 3-inflatable permutations");
  search->add_option("--n", o.n)->required();
  search->add_flag("--central", o.central, "Centrally symmetric candidates (default)");
  search->add_flag("--full", o.full, "All permutations (n <= 20)");
  search->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  search->add_option("--limit", o.limit)->check(CLI::PositiveNumber);
  search->add_flag("--emit-all", o.emit_all, "Stream hits as JSON lines while searching");
  search->add_flag("--list", o.list, "Print sorted hits before the summary");
  search->add_option("--timeout-ms", o.timeout_ms);
  search->add_option("--out", o.out, "Write hits to FILE, one per line");
  json_flag(search);

  auto* compose = app.add_subcommand("compose", "Inflate two 3-inflatable permutations");
  compose->add_option("tau1", o.tau)->required();
  compose->add_option("tau2", o.gamma)->required();
  json_flag(compose);
  out_opt(compose);

  auto* mc = app.add_subcommand("montecarlo", "Monte Carlo estimate of a uniform-inflation limit density");
  mc->add_option("tau", o.tau)->required();
  mc->add_option("--pattern", o.pattern)->required();
  mc->add_option("--j", o.j)->required();
  mc->add_option("--samples", o.samples)->required();
  mc->add_option("--subset-samples", o.subset_samples, "0 = exact counting");
  mc->add_option("--seed", o.seed)->required();
  mc->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  json_flag(mc);
  out_opt(mc);

  auto* rotate = app.add_subcommand("rotate", "180-degree rotation");
  rotate->add_option("pi", o.tau)->required();
  json_flag(rotate);
  out_opt(rotate);

  auto* plot = app.add_subcommand("plot", "Permutation plot");
  plot->add_option("tau", o.tau)->required();
  plot->add_option("--format", o.format, "svg or ascii");
  json_flag(plot);
  out_opt(plot);
}

CommandResult failure(std::ostream& err, int code, const std::string& message) {
  err << "error: " << message << "\n";
  CommandResult r;
  r.status = Status::error;
  r.exit_code = code;
  r.diagnostics.push_back(message);
  r.payload = Json{{"error", message}};
  return r;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::ostream& out,
                  std::ostream& err) {
  if (args.empty()) return failure(err, kExitUsage, "missing subcommand");
  const std::string& name = args.front();
  const bool is_help = name == "--help" || name == "-h";
  if (!is_help && std::find(kSubcommands.begin(), kSubcommands.end(), name) ==
                      kSubcommands.end()) {
    return failure(err, kExitUsage, "unknown subcommand '" + name + "'");
  }

  CLI::App app{"Permutation inflation calculus", "inflatable"};
  Options options;
  build_app(app, options);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {};
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return {};
  } catch (const CLI::ParseError& e) {
    return failure(err, kExitUsage, e.what());
  }

  Dispatcher dispatcher(options, out, err);
  try {
    return dispatcher.dispatch(app.get_subcommands().front()->get_name());
  } catch (const UsageError& e) {
    return failure(err, kExitUsage, e.what());
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::parse: return failure(err, kExitParse, e.what());
      case ErrorKind::precondition: return failure(err, kExitPrecondition, e.what());
      case ErrorKind::resource: return failure(err, kExitResource, e.what());
      case ErrorKind::io: return failure(err, kExitIo, e.what());
    }
    return failure(err, kExitInternal, e.what());
  } catch (const std::exception& e) {
    return failure(err, kExitInternal, e.what());
  }
}

}  // namespace inflatable::cli
