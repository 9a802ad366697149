#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

namespace haway {

// Dense 2-D array of doubles, flat row-major storage with x (first index)
// running fastest.
class Field2D {
 public:
  Field2D() = default;
  Field2D(int nx, int ny)
      : nx_(nx), ny_(ny), data_(static_cast<std::size_t>(nx) * ny, 0.0) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * nx_ + i;
  }
  std::pair<int, int> coords(std::size_t flat) const {
    return {static_cast<int>(flat % nx_), static_cast<int>(flat / nx_)};
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  void fill(double v);
  double max_abs() const;
  bool all_finite() const;

 private:
  int nx_ = 0, ny_ = 0;
  std::vector<double> data_;
};

// Square staggered grid: J x J cells of side dx = dy = L/J, with absorbing
// layers pml_cells_{x,y} whole cells thick at both ends of each direction.
// Cell K_{i+1/2,j+1/2} spans ]i dx,(i+1) dx[ x ]j dy,(j+1) dy[.
struct StaggeredGrid {
  int J = 0;
  double L = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  int pml_cells_x = 0;
  int pml_cells_y = 0;

  double center(int i) const { return (i + 0.5) * dx; }
  double edge(int i) const { return i * dx; }
  double layer_x() const { return pml_cells_x * dx; }
  double layer_y() const { return pml_cells_y * dx; }
};

// Validates and builds a grid. Throws std::invalid_argument when J < 4,
// L <= 0 or a layer pair leaves no interior (2*pml_cells >= J).
StaggeredGrid new_grid(int J, double L, int pml_cells_x, int pml_cells_y);

// The evolving unknowns. Split pressures live at cell centers and entire
// times t^n; impulses live on cell edges at semi-entire times t^{n+1/2}.
// Total pressure is always p = p_x + p_y; boundary impulse rows/columns
// (i = 0, i = J for xi; j = 0, j = J for zeta) are stored and held at zero
// by the Dirichlet condition u.n = 0.
struct FieldSet {
  Field2D p_x;   // J x J
  Field2D p_y;   // J x J
  Field2D xi;    // (J+1) x J
  Field2D zeta;  // J x (J+1)
  long time_level = 0;

  double pressure(int i, int j) const { return p_x(i, j) + p_y(i, j); }
  double max_abs() const;
  bool all_finite() const;
};

FieldSet zero_fields(const StaggeredGrid& grid);

// Plain-text snapshot of p = p_x + p_y: a one-line header
// "# t=<time> J=<J> dx=<dx>" followed by one row per j, whitespace-separated.
// Values use shortest round-trip decimal formatting, so write/read is
// bit-exact.
void write_snapshot(std::ostream& os, const StaggeredGrid& grid,
                    const FieldSet& fields, double time);

struct Snapshot {
  double time = 0.0;
  int J = 0;
  double dx = 0.0;
  Field2D pressure;
};

Snapshot read_snapshot(std::istream& is);

}  // namespace haway
