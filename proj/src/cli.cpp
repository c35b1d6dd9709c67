#include "pcd/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>

#include "pcd/asymptotics.hpp"
#include "pcd/delaunay.hpp"
#include "pcd/domination.hpp"
#include "pcd/io.hpp"
#include "pcd/sim.hpp"

namespace pcd {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// A subcommand's resolved settings: defaults, then --config (a settings
// object or a run manifest), then explicit flags.
class Settings {
 public:
  Settings(std::string name, json defaults) : name_(std::move(name)), cfg_(std::move(defaults)) {}

  void bind(CLI::App* sub, const std::string& key, const std::string& help) {
    sub->add_option("--" + key, flags_[key], help);
  }
  void bind_flag(CLI::App* sub, const std::string& key, const std::string& help) {
    sub->add_flag("--" + key, bools_[key], help);
  }

  void resolve(const std::optional<std::string>& config_path) {
    if (config_path) {
      json j;
      try {
        j = json::parse(read_text(*config_path));
      } catch (const json::exception& e) {
        throw UsageError("config " + *config_path + " is not valid JSON: " + e.what());
      }
      if (j.contains("subcommand")) {
        if (j.at("subcommand") != name_)
          throw UsageError("manifest " + *config_path + " belongs to subcommand " + j.at("subcommand").dump());
        j = j.at("config");
      }
      if (!j.is_object()) throw UsageError("config " + *config_path + " must be a JSON object");
      for (const auto& [k, v] : j.items()) {
        if (!cfg_.contains(k)) throw UsageError("unknown config key '" + k + "' for " + name_);
        cfg_[k] = v;
      }
    }
    for (const auto& [k, v] : flags_)
      if (v) cfg_[k] = *v;
    for (const auto& [k, v] : bools_)
      if (v) cfg_[k] = true;
  }

  bool has(const std::string& key) const { return cfg_.contains(key) && !cfg_.at(key).is_null(); }
  std::string str(const std::string& key) const {
    if (!has(key)) throw UsageError("--" + key + " is required");
    const auto& v = cfg_.at(key);
    return v.is_string() ? v.get<std::string>() : v.dump();
  }
  double number(const std::string& key) const {
    const std::string s = str(key);
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("--" + key + " expects a number, got '" + s + "'");
    }
    if (used != s.size()) throw UsageError("--" + key + " expects a number, got '" + s + "'");
    return v;
  }
  long long integer(const std::string& key) const {
    const double v = number(key);
    if (v != std::floor(v) || std::abs(v) > 9e15) throw UsageError("--" + key + " expects an integer");
    return static_cast<long long>(v);
  }
  bool boolean(const std::string& key) const { return has(key) && cfg_.at(key).is_boolean() && cfg_.at(key).get<bool>(); }
  const json& config() const { return cfg_; }

 private:
  std::string name_;
  json cfg_;
  std::map<std::string, std::optional<std::string>> flags_;
  std::map<std::string, bool> bools_;
};

std::vector<std::size_t> parse_size_list(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError(what + " expects comma-separated positive integers");
    }
    if (used != item.size() || v < 1) throw UsageError(what + " expects comma-separated positive integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

json bary_json(const Bary3& b) { return {b[0], b[1], b[2]}; }

struct Outcome {
  json primary;                                                // printed to stdout
  std::vector<std::pair<std::string, std::string>> files;      // name in out-dir, content
};

// Writes outputs plus a manifest into out_dir, all or nothing.
void write_outputs(const fs::path& out_dir, const std::string& subcommand, const Settings& s,
                   const Outcome& o, const std::string& started) {
  std::vector<std::pair<fs::path, std::string>> files;
  json outputs = json::array();
  for (const auto& [name, content] : o.files) {
    files.emplace_back(out_dir / name, content);
    outputs.push_back((out_dir / name).string());
  }
  json config = s.config();
  config.erase("out-dir");
  json manifest{{"subcommand", subcommand},
                {"config", config},
                {"version", kVersion},
                {"started_at", started},
                {"finished_at", utc_now()},
                {"outputs", outputs}};
  if (config.contains("seed")) manifest["seed"] = config.at("seed");
  files.emplace_back(out_dir / "manifest.json", manifest.dump(2) + "\n");
  write_all_atomic(files);
}

Outcome cmd_pr(const Settings& s) {
  Outcome o;
  const double tol = s.number("tol");
  if (!(tol > 0)) throw UsageError("--tol must be positive");
  if (s.boolean("curve")) {
    o.files.emplace_back("pr_curve.csv", pr_curve_csv(tol));
    o.primary["curve_rows"] = 10;
    if (!s.has("r")) return o;
  }
  const Factor r = parse_factor(s.str("r"));
  if (r.is_infinite() || r.value() <= 1.0) throw UsageError("r must exceed 1");
  if (r.value() > 1.5) throw UsageError("r must not exceed 3/2");
  const PrValue p = p_r(r.value(), tol);
  o.primary["r"] = r.str();
  o.primary["p_r"] = p.value;
  o.primary["error"] = p.error;
  o.primary["tol"] = tol;
  return o;
}

Outcome cmd_gamma(const Settings& s) {
  const Triangle2 tri = parse_triangle(s.str("triangle"));
  const Factor r = parse_factor(s.str("r"));
  const MSpec m = MSpec::parse(s.str("M"));
  const auto params = ProximityParams::make(r, m.resolve(r, tri));
  const PcdInstance inst(tri, params, read_points(s.str("points")));
  if (inst.size() == 0) throw UsageError("points file is empty");
  const std::string method = s.str("method");
  DominationResult res;
  const Adjacency arcs = build_arcs(inst);
  if (method == "exact")
    res = domination_exact(inst);
  else if (method == "brute")
    res = domination_bruteforce(arcs);
  else
    throw UsageError("--method must be exact or brute");
  Outcome o;
  o.primary = {{"n", inst.size()},   {"r", r.str()},       {"M", bary_json(params.m)},
               {"gamma", res.gamma}, {"witness", res.witness}, {"arcs", arc_count(arcs)}};
  return o;
}

Outcome cmd_law(const Settings& s) {
  const Factor r = parse_factor(s.str("r"));
  const MSpec mspec = MSpec::parse(s.str("M"));
  const Bary3 m = mspec.resolve(r);
  const double tol = s.number("tol");
  const long long cells = s.integer("Jm");
  if (cells < 1) throw UsageError("--Jm must be >= 1");
  const GammaLaw law = asymptotic_law(r, m, tol);
  Outcome o;
  o.primary = {{"r", r.str()}, {"M", mspec.str()}, {"M_bary", bary_json(m)}, {"note", law.note}};
  if (!r.is_infinite()) o.primary["placement"] = to_string(classify_M(r.value(), m));
  if (cells == 1) {
    const auto [mean, var] = law_moments(law);
    json pmf = json::object();
    for (int k = 1; k <= 3; ++k)
      if (law.pmf(k) > 0) pmf[std::to_string(k)] = law.pmf(k);
    o.primary["law"] = law.name();
    if (law.kind == GammaLaw::Kind::TwoPlusBernoulli) {
      o.primary["p_r"] = law.p;
      o.primary["q"] = law.q;
    }
    o.primary["pmf"] = pmf;
    o.primary["mean"] = mean;
    o.primary["variance"] = var;
  } else {
    const MultiGammaLaw ml = multi_law(law, static_cast<int>(cells));
    const auto [mean, var] = ml.moments();
    json pmf = json::object();
    for (const auto& [k, p] : ml.pmf()) pmf[std::to_string(k)] = p;
    o.primary["Jm"] = cells;
    o.primary["law"] = ml.name();
    if (ml.kind == MultiGammaLaw::Kind::ShiftedBinomial) o.primary["q"] = ml.q;
    o.primary["pmf"] = pmf;
    o.primary["mean"] = mean;
    o.primary["variance"] = var;
  }
  return o;
}

Outcome cmd_simulate(const Settings& s, unsigned threads) {
  McConfig c;
  c.r = parse_factor(s.str("r"));
  c.m = MSpec::parse(s.str("M"));
  c.ns = parse_size_list(s.str("n"), "--n");
  const long long reps = s.integer("reps");
  if (reps < 1) throw UsageError("--reps must be >= 1");
  c.replicates = static_cast<std::size_t>(reps);
  try {
    c.seed = std::stoull(s.str("seed"));
  } catch (const std::exception&) {
    throw UsageError("--seed expects an unsigned 64-bit integer");
  }
  c.d = static_cast<int>(s.integer("d"));
  const std::string mode = s.str("mode");
  if (mode != "single" && mode != "multi") throw UsageError("--mode must be single or multi");
  c.mode = mode == "single" ? SimMode::Single : SimMode::Multi;
  const long long anchors = s.integer("anchors");
  if (anchors < 0) throw UsageError("--anchors must be positive");
  c.anchors = static_cast<std::size_t>(anchors);
  c.threads = threads;

  const McReport report = run_mc(c);
  Outcome o;
  o.primary = report_json(report, false);
  if (s.boolean("trend")) {
    const auto trend = trend_distinct_extrema(c);
    json t = json::array();
    for (std::size_t i = 0; i < c.ns.size(); ++i) t.push_back({{"n", c.ns[i]}, {"fraction", trend[i]}});
    o.primary["distinct_extrema"] = t;
  }
  o.files.emplace_back("report.csv", report_csv(report));
  o.files.emplace_back("report.json", o.primary.dump(2) + "\n");
  return o;
}

Outcome cmd_multi(const Settings& s) {
  const Factor r = parse_factor(s.str("r"));
  const MSpec mspec = MSpec::parse(s.str("M"));
  if (mspec.kind() == MSpec::Kind::Point) throw UsageError("multi mode takes M as centroid, t1..t3 or bary:");
  const auto params = ProximityParams::make(r, mspec.resolve(r));
  const auto anchors = read_points(s.str("anchors"));
  const auto data = read_points(s.str("data"));
  const DelaunayTriangulation dt = delaunay(anchors);
  const MultiTriangleResult res = domination_multi(dt, data, params);
  json cells = json::array();
  for (const auto& c : res.cells)
    cells.push_back({{"cell", c.cell}, {"n", c.members.size()}, {"gamma", c.result.gamma}, {"witness", c.result.witness}});
  Outcome o;
  o.primary = {{"total_gamma", res.total_gamma}, {"kept", res.kept},   {"discarded", res.discarded},
               {"cell_count", res.cell_count},   {"cells", cells}};
  o.files.emplace_back("multi.json", o.primary.dump(2) + "\n");
  o.files.emplace_back("triangulation.json", triangulation_json(dt).dump(2) + "\n");
  return o;
}

Outcome cmd_tr(const Settings& s) {
  const Factor r = parse_factor(s.str("r"));
  if (r.is_infinite()) throw UsageError("T_r is empty for r = inf");
  const auto basic = BasicTriangleParams::make(s.number("c1"), s.number("c2"));
  const TrTriangle tr = tr_triangle(r.value(), basic);
  Outcome o;
  o.primary = {{"r", r.str()}, {"c1", basic.c1}, {"c2", basic.c2}, {"empty", tr.empty}};
  if (!tr.empty) {
    json v = json::array(), b = json::array();
    for (int j = 0; j < 3; ++j) {
      v.push_back({tr.t[static_cast<std::size_t>(j)].x, tr.t[static_cast<std::size_t>(j)].y});
      b.push_back(bary_json(tr.bary[static_cast<std::size_t>(j)]));
    }
    o.primary["vertices"] = v;
    o.primary["bary"] = b;
  }
  return o;
}

void emit_error(std::ostream& err, int code, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"exit_code", code}, {"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proportional-edge proximity catch digraphs: domination numbers, limit laws and simulation", "pcd"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::map<std::string, Settings> settings;
  std::map<std::string, std::optional<std::string>> config_paths, out_dirs;
  std::optional<unsigned> threads;

  auto add = [&](const std::string& name, const std::string& help, json defaults) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto& s = settings.emplace(name, Settings(name, std::move(defaults))).first->second;
    sub->add_option("--config", config_paths[name], "JSON settings or a run manifest to replay");
    sub->add_option("--out-dir", out_dirs[name], "Directory for outputs and manifest.json");
    return std::pair<CLI::App*, Settings*>{sub, &s};
  };

  {
    auto [sub, s] = add("pr", "Limit probability p_r that gamma = 2 when M is a T_r vertex", {{"r", nullptr}, {"tol", "1e-6"}, {"curve", false}});
    s->bind(sub, "r", "Expansion factor in (1, 3/2]; fractions allowed");
    s->bind(sub, "tol", "Absolute quadrature tolerance");
    s->bind_flag(sub, "curve", "Write pr_curve.csv (r = 1.05..1.5) into --out-dir");
  }
  {
    auto [sub, s] = add("gamma", "Exact domination number of a point set in one triangle",
                        {{"points", nullptr}, {"r", nullptr}, {"M", "centroid"}, {"triangle", "equilateral"}, {"method", "exact"}});
    s->bind(sub, "points", "CSV (x,y) or JSON points file");
    s->bind(sub, "r", "Expansion factor >= 1 or inf");
    s->bind(sub, "M", "centroid | t1 | t2 | t3 | bary:m1,m2,m3 | point:x,y");
    s->bind(sub, "triangle", "'equilateral' or x1,y1,x2,y2,x3,y3");
    s->bind(sub, "method", "exact | brute");
  }
  {
    auto [sub, s] = add("law", "Asymptotic law of the domination number", {{"r", nullptr}, {"M", "centroid"}, {"Jm", 1}, {"tol", "1e-6"}});
    s->bind(sub, "r", "Expansion factor >= 1 or inf");
    s->bind(sub, "M", "centroid | t1 | t2 | t3 | bary:m1,m2,m3 | point:x,y");
    s->bind(sub, "Jm", "Number of Delaunay cells for the lifted law");
    s->bind(sub, "tol", "Absolute quadrature tolerance");
  }
  {
    auto [sub, s] = add("simulate", "Monte-Carlo distribution of the domination number",
                        {{"r", nullptr},  {"M", "centroid"}, {"n", "10,20,30,50,100"}, {"reps", 1000}, {"seed", "20240101"},
                         {"d", 2},        {"mode", "single"}, {"anchors", 10},         {"trend", false}});
    s->bind(sub, "r", "Expansion factor >= 1 or inf; fractions allowed");
    s->bind(sub, "M", "centroid | t1 | t2 | t3 | bary:m1,m2,m3 | point:x,y");
    s->bind(sub, "n", "Comma-separated sample sizes");
    s->bind(sub, "reps", "Replicates per sample size");
    s->bind(sub, "seed", "64-bit seed");
    s->bind(sub, "d", "Dimension (2..4)");
    s->bind(sub, "mode", "single | multi");
    s->bind(sub, "anchors", "Anchor count in multi mode");
    s->bind_flag(sub, "trend", "Also report the fraction of replicates with distinct edge extrema");
    sub->add_option("--threads", threads, "Worker threads (default: hardware, capped by PCD_THREADS)");
  }
  {
    auto [sub, s] = add("multi", "Domination number over the Delaunay cells of anchor points",
                        {{"anchors", nullptr}, {"data", nullptr}, {"r", nullptr}, {"M", "centroid"}});
    s->bind(sub, "anchors", "Anchor points file");
    s->bind(sub, "data", "Data points file");
    s->bind(sub, "r", "Expansion factor >= 1 or inf");
    s->bind(sub, "M", "centroid | t1 | t2 | t3 | bary:m1,m2,m3");
  }
  {
    auto [sub, s] = add("tr", "Vertices of T_r in a basic triangle", {{"r", nullptr}, {"c1", 0.5}, {"c2", std::sqrt(3.0) / 2}});
    s->bind(sub, "r", "Expansion factor >= 1");
    s->bind(sub, "c1", "Apex abscissa of the basic triangle");
    s->bind(sub, "c2", "Apex ordinate of the basic triangle");
  }
  app.add_subcommand("version", "Print the tool version");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, kExitUsage, "usage", e.what());
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  if (name == "version") {
    out << json{{"version", kVersion}}.dump() << "\n";
    return kExitOk;
  }
  const std::string started = utc_now();
  try {
    Settings& s = settings.at(name);
    s.resolve(config_paths[name]);
    Outcome o;
    if (name == "pr")
      o = cmd_pr(s);
    else if (name == "gamma")
      o = cmd_gamma(s);
    else if (name == "law")
      o = cmd_law(s);
    else if (name == "simulate")
      o = cmd_simulate(s, threads.value_or(0));
    else if (name == "multi")
      o = cmd_multi(s);
    else
      o = cmd_tr(s);

    if (out_dirs[name]) {
      if (o.files.empty() || name == "pr") o.files.emplace_back(name + ".json", o.primary.dump(2) + "\n");
      write_outputs(*out_dirs[name], name, s, o, started);
    } else if (name == "pr" && s.boolean("curve")) {
      throw UsageError("--curve needs --out-dir");
    }
    out << o.primary.dump(2) << "\n";
    return kExitOk;
  } catch (const IoError& e) {
    emit_error(err, kExitIo, "io", e.what());
    return kExitIo;
  } catch (const NumericError& e) {
    emit_error(err, kExitNumeric, "numeric", e.what());
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    emit_error(err, kExitUsage, "usage", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    emit_error(err, kExitUsage, "usage", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    emit_error(err, kExitNumeric, "internal", e.what());
    return kExitNumeric;
  }
}

}  // namespace pcd
