#include "pcd/sim.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pcd/asymptotics.hpp"
#include "pcd/delaunay.hpp"
#include "pcd/domination.hpp"
#include "pcd/rng.hpp"
#include "pcd/simplexd.hpp"

namespace pcd {
namespace {

// Stream path tags keep anchor and trend draws disjoint from replicate draws,
// whose paths are (n, i) with n >= 1.
constexpr std::uint64_t kAnchorTag = 0;
constexpr std::uint64_t kTrendTag = 0xE7;

std::vector<double> split_numbers(const std::string& text, std::size_t expected, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed number in " + what + ": '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v)) throw std::invalid_argument("malformed number in " + what + ": '" + item + "'");
    out.push_back(v);
  }
  if (out.size() != expected)
    throw std::invalid_argument(what + " expects " + std::to_string(expected) + " comma-separated numbers");
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Factor parse_factor(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return Factor::infinity();
  const std::optional<Rational> q = Rational::parse(text);
  if (!q) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse r: '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("cannot parse r: '" + text + "'");
    if (!(v >= 1.0)) throw std::invalid_argument("r must be >= 1, got " + text);
    return Factor::finite(v);
  }
  if (*q < Rational(1)) throw std::invalid_argument("r must be >= 1, got " + text);
  return Factor::exact(*q);
}

MSpec MSpec::parse(const std::string& text) {
  MSpec s;
  if (text == "centroid") return s;
  if (text == "t1" || text == "t2" || text == "t3") {
    s.kind_ = Kind::TrVertex;
    s.vertex_ = text[1] - '1';
    return s;
  }
  if (text.rfind("bary:", 0) == 0) {
    const auto v = split_numbers(text.substr(5), 3, "bary:");
    s.kind_ = Kind::Bary;
    s.bary_ = Bary3::make(v[0], v[1], v[2]);
    return s;
  }
  if (text.rfind("point:", 0) == 0) {
    const auto v = split_numbers(text.substr(6), 2, "point:");
    s.kind_ = Kind::Point;
    s.point_ = make_point(v[0], v[1]);
    return s;
  }
  throw std::invalid_argument("invalid M spec '" + text + "' (centroid | t1 | t2 | t3 | bary:m1,m2,m3 | point:x,y)");
}

std::string MSpec::str() const {
  switch (kind_) {
    case Kind::Centroid:
      return "centroid";
    case Kind::TrVertex:
      return "t" + std::to_string(vertex_ + 1);
    case Kind::Bary:
      return "bary:" + format_double(bary_[0]) + "," + format_double(bary_[1]) + "," + format_double(bary_[2]);
    case Kind::Point:
      return "point:" + format_double(point_.x) + "," + format_double(point_.y);
  }
  return "centroid";
}

Bary3 MSpec::resolve(const Factor& r, const Triangle2& tri) const {
  Bary3 m;
  switch (kind_) {
    case Kind::Centroid:
      return m;
    case Kind::TrVertex:
      if (r.is_infinite() || r.value() > 1.5)
        throw std::invalid_argument(str() + " requested but T_r is empty for r = " + r.str());
      m = tr_vertex(r.value(), vertex_);
      break;
    case Kind::Bary:
      m = bary_;
      break;
    case Kind::Point:
      m = barycentric(tri, point_);
      break;
  }
  if (!(m[0] > 0 && m[1] > 0 && m[2] > 0))
    throw std::invalid_argument("M = " + str() + " is not strictly inside the triangle");
  return m;
}

void McConfig::validate() const {
  if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
  if (ns.empty()) throw std::invalid_argument("at least one sample size is required");
  for (std::size_t n : ns)
    if (n < 1) throw std::invalid_argument("every n must be >= 1");
  if (d < 2 || d > kMaxSimplexDim) throw std::invalid_argument("d must be in [2, 4]");
  if (d > 2 && m.kind() != MSpec::Kind::Centroid) throw std::invalid_argument("d > 2 supports M = centroid only");
  if (d > 2 && mode == SimMode::Multi) throw std::invalid_argument("multi mode is two-dimensional only");
  if (mode == SimMode::Multi && anchors < 3) throw std::invalid_argument("multi mode needs at least 3 anchors");
  if (d == 2) m.resolve(r);
}

nlohmann::json to_json(const McConfig& c) {
  nlohmann::json ns = nlohmann::json::array();
  for (std::size_t n : c.ns) ns.push_back(n);
  nlohmann::json j{{"r", c.r.str()},
                   {"M", c.m.str()},
                   {"n", ns},
                   {"replicates", c.replicates},
                   {"seed", c.seed},
                   {"d", c.d},
                   {"mode", c.mode == SimMode::Single ? "single" : "multi"}};
  if (c.mode == SimMode::Multi) j["anchors"] = c.anchors;
  return j;
}

McConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("simulation config must be a JSON object");
  McConfig c;
  try {
    if (j.contains("r")) {
      const auto& r = j.at("r");
      c.r = r.is_string() ? parse_factor(r.get<std::string>()) : Factor::finite(r.get<double>());
    }
    if (j.contains("M")) c.m = MSpec::parse(j.at("M").get<std::string>());
    if (j.contains("n")) {
      c.ns.clear();
      for (const auto& v : j.at("n")) c.ns.push_back(v.get<std::size_t>());
    }
    if (j.contains("replicates")) c.replicates = j.at("replicates").get<std::size_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("d")) c.d = j.at("d").get<int>();
    if (j.contains("mode")) {
      const auto mode = j.at("mode").get<std::string>();
      if (mode != "single" && mode != "multi") throw std::invalid_argument("mode must be single or multi");
      c.mode = mode == "single" ? SimMode::Single : SimMode::Multi;
    }
    if (j.contains("anchors")) c.anchors = j.at("anchors").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad simulation config: ") + e.what());
  }
  return c;
}

bool same_config(const McConfig& a, const McConfig& b) { return to_json(a) == to_json(b); }

std::size_t McReport::count(std::size_t row, int k) const {
  if (k < k_min || k > k_max) return 0;
  return rows.at(row).counts.at(static_cast<std::size_t>(k - k_min));
}

double McReport::phat(std::size_t row, int k) const {
  return static_cast<double>(count(row, k)) / static_cast<double>(config.replicates);
}

double McReport::stderr_of(std::size_t row, int k) const {
  const double p = phat(row, k);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(config.replicates));
}

const McRow& McReport::row_for(std::size_t n) const {
  for (const auto& row : rows)
    if (row.n == n) return row;
  throw std::out_of_range("no row for n = " + std::to_string(n));
}

bool operator==(const McReport& a, const McReport& b) {
  return same_config(a.config, b.config) && a.k_min == b.k_min && a.k_max == b.k_max && a.rows == b.rows;
}

unsigned default_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("PCD_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && *end == '\0' && v >= 1) hw = std::min(hw, static_cast<unsigned>(v));
  }
  return hw;
}

namespace {

// Runs body(task) for task in [0, count) on `threads` workers. The first
// exception thrown by any task is rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= count || failed.load()) return;
      try {
        body(t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Point2> unit_square_points(std::size_t n, Stream& rng) {
  std::vector<Point2> pts(n);
  for (auto& p : pts) {
    p.x = rng.uniform();
    p.y = rng.uniform();
  }
  return pts;
}

}  // namespace

McReport run_mc(const McConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t reps = config.replicates;
  const std::size_t tasks = config.ns.size() * reps;
  std::vector<int> gamma(tasks, 0);

  std::optional<ProximityParams> params;
  if (config.d == 2) params = ProximityParams::make(config.r, config.m.resolve(config.r));
  std::optional<DelaunayTriangulation> dt;
  if (config.mode == SimMode::Multi) {
    Stream anchor_rng(derive_key(config.seed, {kAnchorTag}));
    dt = delaunay(unit_square_points(config.anchors, anchor_rng));
  }

  parallel_for(tasks, config.threads ? config.threads : default_threads(), [&](std::size_t t) {
    const std::size_t n = config.ns[t / reps];
    Stream rng(derive_key(config.seed, {n, t % reps}));
    if (config.mode == SimMode::Multi) {
      gamma[t] = domination_multi(*dt, unit_square_points(n, rng), *params).total_gamma;
    } else if (config.d == 2) {
      std::vector<Bary3> pts(n);
      for (auto& p : pts) p = sample_uniform_bary(rng);
      gamma[t] = domination_exact(*params, pts).gamma;
    } else {
      std::vector<BaryD> pts;
      pts.reserve(n);
      for (std::size_t i = 0; i < n; ++i) pts.push_back(sample_uniform_simplex(config.d, rng));
      gamma[t] = domination_exact_d(config.r, pts).gamma;
    }
  });

  McReport report;
  report.config = config;
  if (config.mode == SimMode::Single) {
    report.k_min = 1;
    report.k_max = config.d + 1;
  } else {
    report.k_min = *std::min_element(gamma.begin(), gamma.end());
    report.k_max = *std::max_element(gamma.begin(), gamma.end());
  }
  for (std::size_t a = 0; a < config.ns.size(); ++a) {
    McRow row;
    row.n = config.ns[a];
    row.counts.assign(static_cast<std::size_t>(report.k_max - report.k_min + 1), 0);
    double sum = 0, sumsq = 0;
    for (std::size_t i = 0; i < reps; ++i) {
      const int g = gamma[a * reps + i];
      ++row.counts[static_cast<std::size_t>(g - report.k_min)];
      sum += g;
      sumsq += static_cast<double>(g) * g;
    }
    row.mean = sum / static_cast<double>(reps);
    row.variance = std::max(0.0, sumsq / static_cast<double>(reps) - row.mean * row.mean);
    report.rows.push_back(std::move(row));
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<double> trend_distinct_extrema(const McConfig& config) {
  config.validate();
  if (config.d != 2 || config.mode != SimMode::Single)
    throw std::invalid_argument("distinct-extrema trend is defined for a single triangle");
  const std::size_t reps = config.replicates;
  std::vector<char> distinct(config.ns.size() * reps, 0);
  parallel_for(distinct.size(), config.threads ? config.threads : default_threads(), [&](std::size_t t) {
    const std::size_t n = config.ns[t / reps];
    Stream rng(derive_key(config.seed, {kTrendTag, n, t % reps}));
    std::vector<Bary3> pts(n);
    for (auto& p : pts) p = sample_uniform_bary(rng);
    const auto e = edge_extrema(pts);
    distinct[t] = e[0] != e[1] && e[1] != e[2] && e[0] != e[2];
  });
  std::vector<double> out;
  for (std::size_t a = 0; a < config.ns.size(); ++a) {
    const auto first = distinct.begin() + static_cast<std::ptrdiff_t>(a * reps);
    out.push_back(static_cast<double>(std::count(first, first + static_cast<std::ptrdiff_t>(reps), 1)) /
                  static_cast<double>(reps));
  }
  return out;
}

std::string report_csv(const McReport& r) {
  std::string out = "n,k,count,phat,stderr\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    for (int k = r.k_min; k <= r.k_max; ++k)
      out += std::to_string(r.rows[i].n) + "," + std::to_string(k) + "," + std::to_string(r.count(i, k)) + "," +
             format_double(r.phat(i, k)) + "," + format_double(r.stderr_of(i, k)) + "\n";
  return out;
}

nlohmann::json report_json(const McReport& r, bool include_wall_time) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    nlohmann::json counts = nlohmann::json::object(), phat = nlohmann::json::object(),
                   se = nlohmann::json::object();
    for (int k = r.k_min; k <= r.k_max; ++k) {
      counts[std::to_string(k)] = r.count(i, k);
      phat[std::to_string(k)] = r.phat(i, k);
      se[std::to_string(k)] = r.stderr_of(i, k);
    }
    rows.push_back({{"n", r.rows[i].n},
                    {"counts", counts},
                    {"phat", phat},
                    {"stderr", se},
                    {"mean", r.rows[i].mean},
                    {"variance", r.rows[i].variance}});
  }
  nlohmann::json j{{"config", to_json(r.config)}, {"k_min", r.k_min}, {"k_max", r.k_max}, {"rows", rows}};
  if (include_wall_time) j["wall_time"] = r.wall_time;
  return j;
}

McReport report_from_json(const nlohmann::json& j) {
  McReport r;
  try {
    r.config = config_from_json(j.at("config"));
    r.k_min = j.at("k_min").get<int>();
    r.k_max = j.at("k_max").get<int>();
    for (const auto& row : j.at("rows")) {
      McRow m;
      m.n = row.at("n").get<std::size_t>();
      for (int k = r.k_min; k <= r.k_max; ++k) m.counts.push_back(row.at("counts").at(std::to_string(k)).get<std::size_t>());
      m.mean = row.at("mean").get<double>();
      m.variance = row.at("variance").get<double>();
      r.rows.push_back(std::move(m));
    }
    if (j.contains("wall_time")) r.wall_time = j.at("wall_time").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
  }
  return r;
}

std::string pr_curve_csv(double abs_tol) {
  std::string out = "r,p_r,error\n";
  for (int i = 1; i <= 10; ++i) {
    const double r = (20.0 + i) / 20.0;
    const PrValue p = p_r(r, abs_tol);
    out += format_double(r) + "," + format_double(p.value) + "," + format_double(p.error) + "\n";
  }
  return out;
}

}  // namespace pcd
