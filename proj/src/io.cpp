#include "pcd/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "pcd/sim.hpp"

namespace pcd {
namespace fs = std::filesystem;

namespace {

fs::path temp_sibling(const fs::path& path) {
  fs::path tmp = path;
  tmp += ".tmp";
  return tmp;
}

void write_raw(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << content;
  out.close();
  if (!out) throw IoError("write failed: " + path.string());
}

double parse_number(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed number '" + s + "' in " + context);
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument("malformed number '" + s + "' in " + context);
  return v;
}

}  // namespace

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return ss.str();
}

void write_text_atomic(const fs::path& path, const std::string& content) { write_all_atomic({{path, content}}); }

void write_all_atomic(const std::vector<std::pair<fs::path, std::string>>& files) {
  std::vector<fs::path> written;
  try {
    for (const auto& [path, content] : files) {
      if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
      }
      write_raw(temp_sibling(path), content);
      written.push_back(temp_sibling(path));
    }
    for (const auto& [path, content] : files) {
      std::error_code ec;
      fs::rename(temp_sibling(path), path, ec);
      if (ec) throw IoError("cannot rename into " + path.string() + ": " + ec.message());
    }
  } catch (...) {
    for (const auto& tmp : written) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
    }
    throw;
  }
}

std::vector<Point2> read_points(const fs::path& path) {
  const std::string text = read_text(path);
  std::vector<Point2> pts;
  if (path.extension() == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      const auto& arr = j.is_object() ? j.at("points") : j;
      for (const auto& p : arr) {
        if (p.size() != 2) throw std::invalid_argument("each point needs two coordinates in " + path.string());
        pts.push_back(make_point(p.at(0).get<double>(), p.at(1).get<double>()));
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("malformed points JSON " + path.string() + ": " + e.what());
    }
    return pts;
  }
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) + ": expected x,y");
    const std::string xs = line.substr(0, comma), ys = line.substr(comma + 1);
    const std::string context = path.string() + ":" + std::to_string(lineno);
    try {
      pts.push_back(make_point(parse_number(xs, context), parse_number(ys, context)));
    } catch (const std::invalid_argument&) {
      if (seen_data) throw;  // only the first content line may be a header
    }
    seen_data = true;
  }
  return pts;
}

std::string points_csv(const std::vector<Point2>& pts) {
  std::string out = "x,y\n";
  for (const auto& p : pts) out += format_double(p.x) + "," + format_double(p.y) + "\n";
  return out;
}

nlohmann::json triangulation_json(const DelaunayTriangulation& dt) {
  nlohmann::json pts = nlohmann::json::array(), cells = nlohmann::json::array(), nbrs = nlohmann::json::array();
  for (const auto& p : dt.points()) pts.push_back({p.x, p.y});
  for (const auto& c : dt.cells()) cells.push_back({c[0], c[1], c[2]});
  for (const auto& n : dt.neighbors()) nbrs.push_back({n[0], n[1], n[2]});
  return {{"points", pts}, {"cells", cells}, {"neighbors", nbrs}};
}

Triangle2 parse_triangle(const std::string& text) {
  if (text == "equilateral") return Triangle2::equilateral();
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_number(item, "triangle"));
  if (v.size() != 6) throw std::invalid_argument("triangle expects 'equilateral' or six numbers x1,y1,x2,y2,x3,y3");
  return Triangle2(make_point(v[0], v[1]), make_point(v[2], v[3]), make_point(v[4], v[5]));
}

}  // namespace pcd
