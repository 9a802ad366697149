#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "haway/grid.hpp"

namespace haway {

// Time series of field values at one observation point. Pressure samples are
// bilinear interpolations at the exact probe location, taken at entire times
// times[k] = k dt; impulse samples come from the nearest native station
// (coordinates xi_x/xi_y and zeta_x/zeta_y) at semi-entire times
// times[k] + dt/2. Each series keeps a uniform spacing of dt on its own
// axis.
struct ProbeSeries {
  double x = 0.0, y = 0.0;  // requested location, grid coordinates
  double xi_x = 0.0, xi_y = 0.0;
  double zeta_x = 0.0, zeta_y = 0.0;
  double dt = 0.0;
  std::vector<double> times;
  std::vector<double> p, xi, zeta;
};

// Resolves the sampling stations for a probe location on a grid.
class Probe {
 public:
  Probe(const StaggeredGrid& grid, double x, double y);

  void record(const StaggeredGrid& grid, const FieldSet& fields, double time);
  ProbeSeries& series() { return series_; }
  const ProbeSeries& series() const { return series_; }

 private:
  ProbeSeries series_;
  // bilinear pressure stencil
  int pi0_, pj0_;
  double pwx_, pwy_;
  // nearest impulse stations
  int xi_i_, xi_j_;
  int ze_i_, ze_j_;
};

// CSV: header "step,time,p,xi,zeta"; impulse columns belong to time + dt/2.
void write_probe_csv(std::ostream& os, const ProbeSeries& series);
ProbeSeries read_probe_csv(std::istream& is);

std::string probe_filename(double x, double y);

}  // namespace haway
