#ifndef GGL_FIT_HPP
#define GGL_FIT_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace ggl {

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(std::span<const double> x, std::span<const double> y) {
   if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 paired points");
   double sx = 0, sy = 0, sxx = 0, sxy = 0;
   const auto n = static_cast<double>(x.size());
   for (std::size_t i = 0; i < x.size(); ++i) {
      if (!(x[i] > 0) || !(y[i] > 0)) throw std::invalid_argument("loglog_slope: values must be positive");
      const double lx = std::log(x[i]);
      const double ly = std::log(y[i]);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
   }
   return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace ggl

#endif
