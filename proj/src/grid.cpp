#include "haway/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace haway {

void Field2D::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

double Field2D::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

bool Field2D::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

StaggeredGrid new_grid(int J, double L, int pml_cells_x, int pml_cells_y) {
  if (J < 4) throw std::invalid_argument("grid: J must be at least 4");
  if (!(L > 0.0)) throw std::invalid_argument("grid: L must be positive");
  if (pml_cells_x < 0 || pml_cells_y < 0)
    throw std::invalid_argument("grid: layer thickness must be >= 0");
  if (2 * pml_cells_x >= J || 2 * pml_cells_y >= J)
    throw std::invalid_argument(
        "grid: absorbing layers leave no interior (need 2*pml_cells < J)");
  StaggeredGrid g;
  g.J = J;
  g.L = L;
  g.dx = L / J;
  g.dy = g.dx;
  g.pml_cells_x = pml_cells_x;
  g.pml_cells_y = pml_cells_y;
  return g;
}

FieldSet zero_fields(const StaggeredGrid& grid) {
  FieldSet f;
  f.p_x = Field2D(grid.J, grid.J);
  f.p_y = Field2D(grid.J, grid.J);
  f.xi = Field2D(grid.J + 1, grid.J);
  f.zeta = Field2D(grid.J, grid.J + 1);
  f.time_level = 0;
  return f;
}

double FieldSet::max_abs() const {
  return std::max(std::max(p_x.max_abs(), p_y.max_abs()),
                  std::max(xi.max_abs(), zeta.max_abs()));
}

bool FieldSet::all_finite() const {
  return p_x.all_finite() && p_y.all_finite() && xi.all_finite() &&
         zeta.all_finite();
}

namespace {

// Shortest decimal representation that parses back to the same bits.
std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

void write_snapshot(std::ostream& os, const StaggeredGrid& grid,
                    const FieldSet& fields, double time) {
  os << "# t=" << format_double(time) << " J=" << grid.J
     << " dx=" << format_double(grid.dx) << '\n';
  for (int j = 0; j < grid.J; ++j) {
    for (int i = 0; i < grid.J; ++i) {
      if (i) os << ' ';
      os << format_double(fields.pressure(i, j));
    }
    os << '\n';
  }
}

Snapshot read_snapshot(std::istream& is) {
  std::string header;
  std::getline(is, header);
  Snapshot s;
  const auto grab = [&header](const char* key) -> std::string {
    auto pos = header.find(key);
    if (pos == std::string::npos)
      throw std::runtime_error("snapshot: malformed header");
    pos += std::string(key).size();
    auto end = header.find(' ', pos);
    return header.substr(pos, end - pos);
  };
  s.time = std::strtod(grab("t=").c_str(), nullptr);
  s.J = std::atoi(grab("J=").c_str());
  s.dx = std::strtod(grab("dx=").c_str(), nullptr);
  if (s.J <= 0) throw std::runtime_error("snapshot: bad J in header");
  s.pressure = Field2D(s.J, s.J);
  for (int j = 0; j < s.J; ++j)
    for (int i = 0; i < s.J; ++i)
      if (!(is >> s.pressure(i, j)))
        throw std::runtime_error("snapshot: truncated data");
  return s;
}

}  // namespace haway
