#ifndef GGL_PATHSUM_HPP
#define GGL_PATHSUM_HPP

// Sum-over-paths form of the analog propagator. One time slice is the
// transfer matrix
//
//    T(l', l) = e^{-itE(f(l) - 1)/(n hbar)} [delta_{l,l'} + (e^{-itE/(n hbar)} - 1)/N],
//
// and K_n(j, k, t) = (T^n)_{j,k}: row = later state, column = earlier state.
// Expanding the matrix power over intermediate states gives the path sum.

#include "gfg.hpp"
#include "grover.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

namespace ggl {

struct PathSumSpec {
   SearchInstance instance;
   std::uint64_t n = 1;  ///< number of time slices
   double t = 0.0;
   std::uint64_t j = 0;  ///< final state l_n
   std::uint64_t k = 0;  ///< initial state l_0

   void validate() const {
      if (n == 0) throw DomainError("PathSumSpec: n must be >= 1");
      require_index(instance, j, "PathSumSpec");
      require_index(instance, k, "PathSumSpec");
   }

   /// tE / (n hbar)
   double slice_angle() const noexcept {
      return t * instance.energy() / (static_cast<double>(n) * instance.hbar());
   }
};

/// The n+1 visited states l_0 ... l_n.
struct Path {
   std::vector<std::uint64_t> states;
};

namespace detail {

struct SliceFactors {
   Complex mix;           ///< (e^{-i a} - 1) / N
   Complex marked_phase;  ///< e^{-i a (f(w) - 1)} = 1
   Complex other_phase;   ///< e^{-i a (0 - 1)} = e^{i a}
};

inline SliceFactors slice_factors(const PathSumSpec& spec) {
   const double a = spec.slice_angle();
   return {(std::polar(1.0, -a) - 1.0) / spec.instance.size_real(), Complex{1.0, 0.0},
           std::polar(1.0, a)};
}

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
public:
   void add(Complex v) {
      add_part(re_, re_c_, v.real());
      add_part(im_, im_c_, v.imag());
   }
   void add(const CompensatedSum& o) {
      add(o.value());
   }
   Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

private:
   static void add_part(double& sum, double& comp, double x) {
      const double t = sum + x;
      if (std::abs(sum) >= std::abs(x))
         comp += (sum - t) + x;
      else
         comp += (x - t) + sum;
      sum = t;
   }

   double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

}  // namespace detail

/// Dense one-slice transfer matrix T = (I + c/N J) D.
inline ComplexMatrix slice_matrix(const PathSumSpec& spec) {
   spec.validate();
   require_dense(spec.instance.size(), "slice_matrix");
   const auto n = static_cast<std::size_t>(spec.instance.size());
   const auto f = detail::slice_factors(spec);
   ComplexMatrix out(n, n);
   for (std::size_t col = 0; col < n; ++col) {
      const Complex phase = col == spec.instance.marked() ? f.marked_phase : f.other_phase;
      for (std::size_t row = 0; row < n; ++row)
         out(row, col) = phase * ((row == col ? 1.0 : 0.0) + f.mix);
   }
   return out;
}

/// Amplitude of one path: the accumulated oracle phase times the n mixing
/// brackets [delta_{l_m, l_{m+1}} + (e^{-itE/(n hbar)} - 1)/N].
inline Complex path_amplitude(const PathSumSpec& spec, const Path& path) {
   spec.validate();
   if (path.states.size() != spec.n + 1)
      throw DomainError("path_amplitude: path must visit n + 1 states");
   if (path.states.front() != spec.k || path.states.back() != spec.j)
      throw DomainError("path_amplitude: path endpoints do not match (k, j)");
   for (const auto s : path.states) require_index(spec.instance, s, "path_amplitude");

   const auto f = detail::slice_factors(spec);
   double f_minus_one = 0.0;  // sum over m < n of f(l_m) - 1
   Complex brackets{1.0, 0.0};
   for (std::size_t m = 0; m < spec.n; ++m) {
      const auto from = path.states[m];
      const auto to = path.states[m + 1];
      f_minus_one += from == spec.instance.marked() ? 0.0 : -1.0;
      brackets *= (from == to ? 1.0 : 0.0) + f.mix;
   }
   const double phase = -spec.t * spec.instance.energy() * f_minus_one /
                        (static_cast<double>(spec.n) * spec.instance.hbar());
   return std::polar(1.0, phase) * brackets;
}

inline constexpr std::uint64_t path_enumeration_budget = 10'000'000;

/// Number of paths with fixed endpoints, N^(n-1); throws past the budget.
inline std::uint64_t path_count(const PathSumSpec& spec) {
   std::uint64_t count = 1;
   for (std::uint64_t i = 1; i < spec.n; ++i) {
      if (count > path_enumeration_budget / spec.instance.size())
         throw DomainError("propagator_bruteforce: N^(n-1) exceeds the enumeration budget of " +
                           std::to_string(path_enumeration_budget) + " paths");
      count *= spec.instance.size();
   }
   return count;
}

/// Exhaustive sum of path_amplitude over all interior states l_1 ... l_{n-1}.
/// With workers > 1 the paths are split by l_1; partial sums are merged in
/// l_1 order so the result does not depend on scheduling.
inline Complex propagator_bruteforce(const PathSumSpec& spec, unsigned workers = 1) {
   spec.validate();
   (void)path_count(spec);
   if (spec.n == 1) return path_amplitude(spec, Path{{spec.k, spec.j}});

   const std::uint64_t big_n = spec.instance.size();
   // Sum over every path whose first interior state is `first`.
   auto sum_branch = [&spec, big_n](std::uint64_t first) {
      detail::CompensatedSum acc;
      Path path{std::vector<std::uint64_t>(spec.n + 1, 0)};
      path.states.front() = spec.k;
      path.states.back() = spec.j;
      path.states[1] = first;
      const std::size_t free_begin = 2;
      const std::size_t free_end = spec.n;  // exclusive
      while (true) {
         acc.add(path_amplitude(spec, path));
         std::size_t pos = free_begin;
         while (pos < free_end) {
            if (++path.states[pos] < big_n) break;
            path.states[pos] = 0;
            ++pos;
         }
         if (pos >= free_end) break;
      }
      return acc;
   };

   std::vector<detail::CompensatedSum> partial(big_n);
   const unsigned pool = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(big_n)));
   if (pool == 1) {
      for (std::uint64_t first = 0; first < big_n; ++first) partial[first] = sum_branch(first);
   } else {
      std::vector<std::jthread> threads;
      threads.reserve(pool);
      for (unsigned w = 0; w < pool; ++w)
         threads.emplace_back([&, w] {
            for (std::uint64_t first = w; first < big_n; first += pool) partial[first] = sum_branch(first);
         });
   }
   detail::CompensatedSum total;
   for (const auto& p : partial) total.add(p);
   return total.value();
}

namespace detail {

/// v <- T v using T = (I + c/N J) D, O(N).
inline void apply_slice(const PathSumSpec& spec, const SliceFactors& f, std::vector<Complex>& v) {
   Complex total{};
   for (std::size_t l = 0; l < v.size(); ++l) {
      v[l] *= l == spec.instance.marked() ? f.marked_phase : f.other_phase;
      total += v[l];
   }
   const Complex shift = f.mix * total;
   for (auto& x : v) x += shift;
}

}  // namespace detail

/// (T^n)_{j,k}. Below the dense cap this is the literal matrix power;
/// above it T is applied n times to |k> through its rank-one structure.
inline Complex propagator_sliced(const PathSumSpec& spec) {
   spec.validate();
   if (spec.instance.size() <= dense_cap())
      return mat_power(slice_matrix(spec), spec.n)(spec.j, spec.k);
   const auto f = detail::slice_factors(spec);
   std::vector<Complex> v(static_cast<std::size_t>(spec.instance.size()));
   v[spec.k] = 1.0;
   for (std::uint64_t m = 0; m < spec.n; ++m) detail::apply_slice(spec, f, v);
   return v[spec.j];
}

/// Column k of T^n, i.e. (T^n)_{l,k} for every l.
inline std::vector<Complex> propagator_sliced_column(const PathSumSpec& spec) {
   spec.validate();
   const auto f = detail::slice_factors(spec);
   std::vector<Complex> v(static_cast<std::size_t>(spec.instance.size()));
   v[spec.k] = 1.0;
   for (std::uint64_t m = 0; m < spec.n; ++m) detail::apply_slice(spec, f, v);
   return v;
}

struct ConvergencePoint {
   std::uint64_t n;
   double error;  ///< |K_n - K_exact|
};

inline std::vector<ConvergencePoint> convergence_study(const SearchInstance& inst, std::uint64_t j,
                                                       std::uint64_t k, double t,
                                                       std::span<const std::uint64_t> ns) {
   if (!std::is_sorted(ns.begin(), ns.end()) ||
       std::adjacent_find(ns.begin(), ns.end()) != ns.end())
      throw DomainError("convergence_study: ns must be strictly increasing");
   const Complex exact = gfg_propagator_exact(inst, j, k, t);
   std::vector<ConvergencePoint> out;
   out.reserve(ns.size());
   for (const auto n : ns)
      out.push_back({n, std::abs(propagator_sliced({inst, n, t, j, k}) - exact)});
   return out;
}

}  // namespace ggl

#endif
