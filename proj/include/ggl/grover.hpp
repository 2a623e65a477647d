#ifndef GGL_GROVER_HPP
#define GGL_GROVER_HPP

// Discrete Grover iteration. All large-N quantities go through the exact
// two-dimensional invariant subspace span{|w>, |r>}; dense N x N operators
// exist only for oracle checks below the dense cap.

#include "linalg.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace ggl {

/// One search problem: database size N, marked index w, energy scale E and
/// Planck constant hbar. N >= 2 because |r> is undefined at N = 1.
class SearchInstance {
public:
   SearchInstance(std::uint64_t n, std::uint64_t w, double energy = 1.0, double hbar = 1.0)
       : n_(n), w_(w), energy_(energy), hbar_(hbar) {
      if (n < 2) throw DomainError("SearchInstance: N must be >= 2 (got " + std::to_string(n) + ")");
      if (w >= n)
         throw DomainError("SearchInstance: marked index " + std::to_string(w) + " not in [0, N)");
      if (!(energy > 0.0) || !std::isfinite(energy)) throw DomainError("SearchInstance: E must be > 0");
      if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("SearchInstance: hbar must be > 0");
   }

   std::uint64_t size() const noexcept { return n_; }
   std::uint64_t marked() const noexcept { return w_; }
   double energy() const noexcept { return energy_; }
   double hbar() const noexcept { return hbar_; }

   double size_real() const noexcept { return static_cast<double>(n_); }
   double sqrt_size() const noexcept { return std::sqrt(size_real()); }
   /// y = sqrt(1/N) = <w|s>
   double overlap_ws() const noexcept { return 1.0 / sqrt_size(); }
   /// sqrt(1 - 1/N) = <r|s>
   double overlap_rs() const noexcept { return std::sqrt(1.0 - 1.0 / size_real()); }

   SearchInstance with_hbar(double hbar) const { return {n_, w_, energy_, hbar}; }
   SearchInstance with_energy(double energy) const { return {n_, w_, energy, hbar_}; }

   friend bool operator==(const SearchInstance&, const SearchInstance&) = default;

private:
   std::uint64_t n_;
   std::uint64_t w_;
   double energy_;
   double hbar_;
};

struct BasisOverlaps {
   double c_w;  ///< <j|w>
   double c_r;  ///< <j|r>
};

inline void require_index(const SearchInstance& inst, std::uint64_t j, const char* what) {
   if (j >= inst.size())
      throw DomainError(std::string(what) + ": index " + std::to_string(j) + " not in [0, " +
                        std::to_string(inst.size()) + ")");
}

inline BasisOverlaps basis_overlaps(const SearchInstance& inst, std::uint64_t j) {
   require_index(inst, j, "basis_overlaps");
   const double y = inst.overlap_ws();
   const double delta = j == inst.marked() ? 1.0 : 0.0;
   return {delta, (y - delta * y) / inst.overlap_rs()};
}

struct GroverOperators {
   ComplexMatrix oracle;     ///< U_f = I - 2 P_w
   ComplexMatrix diffusion;  ///< U_s = 2 P_s - I
   ComplexMatrix engine;     ///< U_G = U_s U_f
};

/// Dense projectors P_w = |w><w| and P_s = |s><s|.
inline ComplexMatrix projector_marked(const SearchInstance& inst) {
   require_dense(inst.size(), "projector_marked");
   const auto n = static_cast<std::size_t>(inst.size());
   ComplexMatrix p(n, n);
   p(inst.marked(), inst.marked()) = 1.0;
   return p;
}

inline ComplexMatrix projector_uniform(const SearchInstance& inst) {
   require_dense(inst.size(), "projector_uniform");
   const auto n = static_cast<std::size_t>(inst.size());
   return {n, n, std::vector<Complex>(n * n, Complex{1.0 / inst.size_real(), 0.0})};
}

inline ComplexMatrix uniform_state(const SearchInstance& inst) {
   require_dense(inst.size(), "uniform_state");
   const auto n = static_cast<std::size_t>(inst.size());
   return {n, 1, std::vector<Complex>(n, Complex{inst.overlap_ws(), 0.0})};
}

inline GroverOperators grover_operators_dense(const SearchInstance& inst) {
   require_dense(inst.size(), "grover_operators_dense");
   const auto id = ComplexMatrix::identity(static_cast<std::size_t>(inst.size()));
   ComplexMatrix uf = id - 2.0 * projector_marked(inst);
   ComplexMatrix us = 2.0 * projector_uniform(inst) - id;
   ComplexMatrix ug = us * uf;
   return {std::move(uf), std::move(us), std::move(ug)};
}

struct GroverAngles {
   double theta;  ///< asin(2 sqrt(N-1) / N)
   double alpha;  ///< acos(1 / sqrt(N))
};

inline GroverAngles grover_angles(const SearchInstance& inst) {
   const double n = inst.size_real();
   // 2 sqrt(N-1)/N = 2 y sqrt(1-y^2) stays accurate for N up to 2^60.
   const double s = 2.0 * inst.overlap_ws() * inst.overlap_rs();
   return {std::asin(std::min(1.0, s)), std::acos(1.0 / std::sqrt(n))};
}

/// Success probability in the closed form cos^2(k theta + alpha).
inline double grover_success_prob(const SearchInstance& inst, std::uint64_t k) {
   const auto [theta, alpha] = grover_angles(inst);
   const double c = std::cos(static_cast<double>(k) * theta + alpha);
   return c * c;
}

/// |<w|U_G^k|s>|^2 for U_G built literally as (2P_s - I)(I - 2P_w). In the
/// {|w>,|r>} basis that product rotates by -theta, so the amplitude on |w>
/// is cos(k theta - alpha).
inline double grover_success_prob_exact(const SearchInstance& inst, std::uint64_t k) {
   const auto [theta, alpha] = grover_angles(inst);
   const double c = std::cos(static_cast<double>(k) * theta - alpha);
   return c * c;
}

/// U_s U_f restricted to {|w>, |r>}, assembled from the two reflections.
inline TwoLevelOp grover_engine_2d(const SearchInstance& inst) {
   const double y = inst.overlap_ws();
   const double b = inst.overlap_rs();
   const TwoLevelOp uf{{-1.0, 0.0}, {0.0, 1.0}};
   const TwoLevelOp us{{2.0 * y * y - 1.0, 2.0 * y * b}, {2.0 * y * b, 2.0 * b * b - 1.0}};
   return us * uf;
}

/// (U_s U_f)^k in {|w>, |r>} as a closed-form rotation by -k theta.
inline TwoLevelOp grover_engine_power(const SearchInstance& inst, std::uint64_t k) {
   const double theta = std::atan2(2.0 * inst.overlap_ws() * inst.overlap_rs(),
                                   1.0 - 2.0 / inst.size_real());
   const double a = static_cast<double>(k) * theta;
   const double c = std::cos(a);
   const double s = std::sin(a);
   return TwoLevelOp{{c, s}, {-s, c}};
}

/// U_G^k |s> as a dense N-vector. Each step applies U_f (sign flip on w)
/// then U_s v = 2|s><s|v> - v directly on the amplitudes.
inline ComplexMatrix grover_state_dense(const SearchInstance& inst, std::uint64_t k) {
   require_dense(inst.size(), "grover_state_dense");
   const auto n = static_cast<std::size_t>(inst.size());
   const double inv_n = 1.0 / inst.size_real();
   std::vector<Complex> amp(n, Complex{inst.overlap_ws(), 0.0});
   for (std::uint64_t i = 0; i < k; ++i) {
      amp[inst.marked()] = -amp[inst.marked()];
      Complex total{};
      for (const auto& a : amp) total += a;
      const Complex mean = total * inv_n;
      for (auto& a : amp) a = 2.0 * mean - a;
   }
   return {n, 1, std::move(amp)};
}

/// Optimal iteration count round(pi sqrt(N) / 4).
inline std::uint64_t grover_optimal_iterations(const SearchInstance& inst) {
   return static_cast<std::uint64_t>(std::llround(pi * inst.sqrt_size() / 4.0));
}

}  // namespace ggl

#endif
