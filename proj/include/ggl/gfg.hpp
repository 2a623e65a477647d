#ifndef GGL_GFG_HPP
#define GGL_GFG_HPP

// Analog search under H = E (P_w + P_s - I). The evolution leaves
// span{|w>, |r>} invariant and acts as the phase e^{iEt/hbar} on its
// orthogonal complement, so every quantity here is O(1) in N.

#include "grover.hpp"
#include "linalg.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

namespace ggl {

struct GfgEvolution {
   SearchInstance instance;
   double t = 0.0;  ///< time, in units of hbar/E when E = hbar = 1

   double y() const noexcept { return instance.overlap_ws(); }
   /// E y t / hbar
   double phase() const noexcept { return instance.energy() * y() * t / instance.hbar(); }
};

/// e^{-itH/hbar} in the basis {|w>, |r>}.
inline TwoLevelOp gfg_matrix(const GfgEvolution& ev) {
   const double y = ev.y();
   const double b = ev.instance.overlap_rs();
   const double c = std::cos(ev.phase());
   const double s = std::sin(ev.phase());
   const Complex off{0.0, -b * s};
   return TwoLevelOp{{Complex{c, -y * s}, off}, {off, Complex{c, y * s}}};
}

inline double gfg_success_prob(const GfgEvolution& ev) {
   const double y = ev.y();
   const double c = std::cos(ev.phase());
   const double s = std::sin(ev.phase());
   return s * s + y * y * c * c;
}

struct GfgAmplitudes {
   Complex amp_w;
   Complex amp_r;
};

/// e^{-itH/hbar}|s> expressed in {|w>, |r>}.
inline GfgAmplitudes gfg_state(const GfgEvolution& ev) {
   const double y = ev.y();
   const double c = std::cos(ev.phase());
   const double s = std::sin(ev.phase());
   return {Complex{y * c, -s}, Complex{ev.instance.overlap_rs() * c, 0.0}};
}

/// K(j, k, t) = <j| e^{-itH/hbar} |k>, from the 2x2 block plus the phase
/// e^{iEt/hbar} on the complement of span{|w>, |r>}.
inline Complex gfg_propagator_exact(const SearchInstance& inst, std::uint64_t j, std::uint64_t k,
                                    double t) {
   require_index(inst, j, "gfg_propagator_exact");
   require_index(inst, k, "gfg_propagator_exact");
   const auto bj = basis_overlaps(inst, j);
   const auto bk = basis_overlaps(inst, k);
   const TwoLevelOp m = gfg_matrix({inst, t});
   const Complex block = bj.c_w * (m(0, 0) * bk.c_w + m(0, 1) * bk.c_r) +
                         bj.c_r * (m(1, 0) * bk.c_w + m(1, 1) * bk.c_r);
   // <j|(I - |w><w| - |r><r|)|k>. For j = k != w this is 1 - 1/(N-1),
   // written as (N-2)/(N-1) to avoid cancellation.
   double complement = 0.0;
   if (j == k) {
      complement = j == inst.marked() ? 0.0 : (inst.size_real() - 2.0) / (inst.size_real() - 1.0);
   } else {
      complement = -(bj.c_w * bk.c_w + bj.c_r * bk.c_r);
   }
   const Complex phase = std::polar(1.0, inst.energy() * t / inst.hbar());
   return block + phase * complement;
}

/// t = pi hbar sqrt(N) / (2E), where P(t) = 1.
inline double optimal_time(const SearchInstance& inst) {
   return pi * inst.hbar() * inst.sqrt_size() / (2.0 * inst.energy());
}

/// H = E (P_w + P_s - I) as a dense matrix.
inline ComplexMatrix gfg_hamiltonian_dense(const SearchInstance& inst) {
   const auto id = ComplexMatrix::identity(static_cast<std::size_t>(inst.size()));
   return inst.energy() * (projector_marked(inst) + projector_uniform(inst) - id);
}

}  // namespace ggl

#endif
