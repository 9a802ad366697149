#include "haway/probes.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace haway {

namespace {

int clampi(int v, int lo, int hi) { return std::max(lo, std::min(hi, v)); }

// Nearest integer with ties toward -inf (x stations) or +inf (y stations);
// the asymmetric tie rule pins the probe of the efficiency study to the
// cell center at (24.5, 0.5) relative to the source.
int round_half_down(double t) { return static_cast<int>(std::ceil(t - 0.5)); }
int round_half_up(double t) { return static_cast<int>(std::floor(t + 0.5)); }

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

Probe::Probe(const StaggeredGrid& grid, double x, double y) {
  const int J = grid.J;
  series_.x = x;
  series_.y = y;
  // Bilinear pressure stencil on the cell-center lattice, clamped to it.
  double fx = x / grid.dx - 0.5;
  double fy = y / grid.dy - 0.5;
  fx = std::min(std::max(fx, 0.0), static_cast<double>(J - 1));
  fy = std::min(std::max(fy, 0.0), static_cast<double>(J - 1));
  pi0_ = clampi(static_cast<int>(std::floor(fx)), 0, J - 2);
  pj0_ = clampi(static_cast<int>(std::floor(fy)), 0, J - 2);
  pwx_ = fx - pi0_;
  pwy_ = fy - pj0_;

  xi_i_ = clampi(round_half_down(x / grid.dx), 0, J);
  xi_j_ = clampi(round_half_up(y / grid.dy - 0.5), 0, J - 1);
  ze_i_ = clampi(round_half_down(x / grid.dx - 0.5), 0, J - 1);
  ze_j_ = clampi(round_half_up(y / grid.dy), 0, J);
  series_.xi_x = grid.edge(xi_i_);
  series_.xi_y = grid.center(xi_j_);
  series_.zeta_x = grid.center(ze_i_);
  series_.zeta_y = grid.edge(ze_j_);
}

void Probe::record(const StaggeredGrid& grid, const FieldSet& f, double time) {
  (void)grid;
  const double w00 = (1.0 - pwx_) * (1.0 - pwy_);
  const double w10 = pwx_ * (1.0 - pwy_);
  const double w01 = (1.0 - pwx_) * pwy_;
  const double w11 = pwx_ * pwy_;
  const double p = w00 * f.pressure(pi0_, pj0_) +
                   w10 * f.pressure(pi0_ + 1, pj0_) +
                   w01 * f.pressure(pi0_, pj0_ + 1) +
                   w11 * f.pressure(pi0_ + 1, pj0_ + 1);
  series_.times.push_back(time);
  series_.p.push_back(p);
  series_.xi.push_back(f.xi(xi_i_, xi_j_));
  series_.zeta.push_back(f.zeta(ze_i_, ze_j_));
}

void write_probe_csv(std::ostream& os, const ProbeSeries& s) {
  os << "step,time,p,xi,zeta\n";
  for (std::size_t k = 0; k < s.times.size(); ++k)
    os << k << ',' << format_double(s.times[k]) << ',' << format_double(s.p[k])
       << ',' << format_double(s.xi[k]) << ',' << format_double(s.zeta[k])
       << '\n';
}

ProbeSeries read_probe_csv(std::istream& is) {
  ProbeSeries s;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("step", 0) == 0) continue;
    std::istringstream row(line);
    std::string cell;
    double vals[4];
    std::getline(row, cell, ',');  // step index
    for (double& v : vals) {
      if (!std::getline(row, cell, ','))
        throw std::runtime_error("probe csv: short row");
      v = std::strtod(cell.c_str(), nullptr);
    }
    s.times.push_back(vals[0]);
    s.p.push_back(vals[1]);
    s.xi.push_back(vals[2]);
    s.zeta.push_back(vals[3]);
  }
  if (s.times.size() >= 2) s.dt = s.times[1] - s.times[0];
  return s;
}

std::string probe_filename(double x, double y) {
  std::ostringstream name;
  name << "probe_" << x << '_' << y << ".csv";
  std::string out = name.str();
  for (char& c : out)
    if (c == '-') c = 'm';
  return out;
}

}  // namespace haway
