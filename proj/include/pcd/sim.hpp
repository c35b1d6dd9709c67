#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcd/geom2.hpp"
#include "pcd/proximity.hpp"

namespace pcd {

/// Parses "inf", an integer, a fraction "p/q" or a decimal. Decimals and
/// fractions are kept exact. Throws std::invalid_argument.
Factor parse_factor(const std::string& text);

/// Center specification: centroid | t1 | t2 | t3 | bary:m1,m2,m3 | point:x,y.
/// Points are Cartesian in the reference triangle passed to resolve.
class MSpec {
 public:
  enum class Kind { Centroid, TrVertex, Bary, Point };

  static MSpec parse(const std::string& text);
  static MSpec centroid() { return MSpec(); }

  Kind kind() const { return kind_; }
  std::string str() const;
  /// Barycentric M in `tri`. t1..t3 need finite r <= 3/2; the result must
  /// be strictly interior. Throws std::invalid_argument otherwise.
  Bary3 resolve(const Factor& r, const Triangle2& tri = Triangle2::equilateral()) const;

  friend bool operator==(const MSpec& a, const MSpec& b) { return a.str() == b.str(); }

 private:
  Kind kind_ = Kind::Centroid;
  int vertex_ = 0;
  Bary3 bary_{};
  Point2 point_{};
};

enum class SimMode { Single, Multi };

struct McConfig {
  Factor r = Factor::exact(Rational(3, 2));
  MSpec m{};
  std::vector<std::size_t> ns{10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  std::size_t replicates = 1000;
  std::uint64_t seed = 20240101;
  int d = 2;
  SimMode mode = SimMode::Single;
  std::size_t anchors = 10;  // multi mode only
  /// Worker count; 0 picks hardware concurrency capped by PCD_THREADS.
  /// Never part of the echoed configuration.
  unsigned threads = 0;

  /// Throws std::invalid_argument on an invalid combination.
  void validate() const;
};

nlohmann::json to_json(const McConfig& c);
/// Missing keys keep their defaults. Throws std::invalid_argument.
McConfig config_from_json(const nlohmann::json& j);
bool same_config(const McConfig& a, const McConfig& b);

struct McRow {
  std::size_t n = 0;
  std::vector<std::size_t> counts;  // counts[i] is the count for k = k_min + i
  double mean = 0.0;
  double variance = 0.0;  // population variance over replicates
  friend bool operator==(const McRow&, const McRow&) = default;
};

struct McReport {
  McConfig config;
  int k_min = 1;
  int k_max = 3;
  std::vector<McRow> rows;
  double wall_time = 0.0;  // seconds; excluded from equality

  std::size_t count(std::size_t row, int k) const;
  double phat(std::size_t row, int k) const;
  double stderr_of(std::size_t row, int k) const;
  const McRow& row_for(std::size_t n) const;
};

bool operator==(const McReport& a, const McReport& b);

/// Monte-Carlo distribution of the domination number. Replicate (n, i) uses
/// the stream derive_key(seed, {n, i}); results never depend on threading.
McReport run_mc(const McConfig& config);

/// Per-n fraction of replicates whose three edge extrema are distinct points.
std::vector<double> trend_distinct_extrema(const McConfig& config);

/// Worker count honoring PCD_THREADS.
unsigned default_threads();

/// CSV with columns n,k,count,phat,stderr; one row per (n, k) in k_min..k_max.
std::string report_csv(const McReport& r);
nlohmann::json report_json(const McReport& r, bool include_wall_time = true);
McReport report_from_json(const nlohmann::json& j);

/// CSV (r,p_r,error) over r = 1.05, 1.10, ..., 1.50.
std::string pr_curve_csv(double abs_tol = 1e-6);

/// printf("%.17g").
std::string format_double(double x);

}  // namespace pcd
