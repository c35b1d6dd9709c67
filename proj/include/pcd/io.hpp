#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pcd/delaunay.hpp"
#include "pcd/geom2.hpp"

namespace pcd {

/// File-system failure; the message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);
/// Writes every file or none: all temporaries are written before any rename.
void write_all_atomic(const std::vector<std::pair<std::filesystem::path, std::string>>& files);

/// Points from a ".json" file ([[x,y],...] or {"points": [...]}) or from CSV
/// lines "x,y" with an optional non-numeric header. Throws IoError for
/// unreadable files and std::invalid_argument for malformed content.
std::vector<Point2> read_points(const std::filesystem::path& path);
std::string points_csv(const std::vector<Point2>& pts);

/// {"points": [[x,y],...], "cells": [[i,j,k],...], "neighbors": [...]}.
nlohmann::json triangulation_json(const DelaunayTriangulation& dt);

/// "equilateral" or six comma-separated coordinates x1,y1,x2,y2,x3,y3.
Triangle2 parse_triangle(const std::string& text);

}  // namespace pcd
