#ifndef GGL_TROTTER_HPP
#define GGL_TROTTER_HPP

// Lie-Trotter digitization of the analog search. The resonance
// tE/(k hbar) = pi turns each product slice into exactly U_s U_f, and the
// parameter rule below picks k and t so that the Grover and analog success
// probabilities stay close.

#include "gfg.hpp"
#include "grover.hpp"
#include "linalg.hpp"

#include <cfenv>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ggl {

/// e^{-i angle P} = I + (e^{-i angle} - 1) P for an orthogonal projector P.
inline ComplexMatrix exp_projector(const ComplexMatrix& p, double angle,
                                   double tol = Tolerances{}.projector) {
   if (!p.square()) throw DimensionError("exp_projector: matrix is not square");
   if (!is_hermitian(p, tol) || max_abs_diff(p * p, p) > tol)
      throw DomainError("exp_projector: input is not an orthogonal projector");
   return ComplexMatrix::identity(p.rows()) + (std::polar(1.0, -angle) - 1.0) * p;
}

/// U_f written as e^{-i pi P_w}.
inline ComplexMatrix uf_as_exponential(const SearchInstance& inst) {
   return exp_projector(projector_marked(inst), pi);
}

/// U_s written as e^{-i pi (P_s - I)} = e^{i pi} e^{-i pi P_s}.
inline ComplexMatrix us_as_exponential(const SearchInstance& inst) {
   return std::polar(1.0, pi) * exp_projector(projector_uniform(inst), pi);
}

inline void require_hermitian_pair(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
   if (!a.square() || !b.square() || a.rows() != b.rows())
      throw DimensionError(std::string(what) + ": operands must be square of equal dimension");
   if (!is_hermitian(a) || !is_hermitian(b))
      throw DomainError(std::string(what) + ": operands must be Hermitian");
}

/// [e^{-i eta A/k} e^{-i eta B/k}]^k
inline ComplexMatrix trotter_product(const ComplexMatrix& a, const ComplexMatrix& b, double eta,
                                     std::uint64_t k) {
   require_hermitian_pair(a, b, "trotter_product");
   if (k == 0) throw DomainError("trotter_product: k must be positive");
   const Complex scale{0.0, -eta / static_cast<double>(k)};
   return mat_power(herm_expm(a, scale) * herm_expm(b, scale), k);
}

struct TrotterErrorSample {
   std::uint64_t k;
   double error;  ///< spectral norm of exact - product
   double bound;  ///< eta^2 ||[A,B]|| / k
};

inline std::vector<TrotterErrorSample> trotter_error_scan(const ComplexMatrix& a, const ComplexMatrix& b,
                                                          double eta, std::span<const std::uint64_t> ks) {
   require_hermitian_pair(a, b, "trotter_error_scan");
   const ComplexMatrix exact = herm_expm(a + b, Complex{0.0, -eta});
   const double comm = spectral_norm(commutator(a, b));
   std::vector<TrotterErrorSample> out;
   out.reserve(ks.size());
   for (const std::uint64_t k : ks) {
      const double err = spectral_norm(exact - trotter_product(a, b, eta, k));
      out.push_back({k, err, eta * eta * comm / static_cast<double>(k)});
   }
   return out;
}

/// Error of the digitization at resonance, t = k pi hbar / E: the slice is
/// exactly U_s U_f and eta = tE/hbar = k pi grows with k.
inline std::vector<TrotterErrorSample> resonant_error_scan(const SearchInstance& inst,
                                                           std::span<const std::uint64_t> ks) {
   const auto id = ComplexMatrix::identity(static_cast<std::size_t>(inst.size()));
   const ComplexMatrix a = projector_uniform(inst) - id;
   const ComplexMatrix b = projector_marked(inst);
   const ComplexMatrix engine = grover_operators_dense(inst).engine;
   const double comm = spectral_norm(commutator(a, b));
   std::vector<TrotterErrorSample> out;
   out.reserve(ks.size());
   for (const std::uint64_t k : ks) {
      const double eta = static_cast<double>(k) * pi;
      const ComplexMatrix exact = herm_expm(a + b, Complex{0.0, -eta});
      const double err = spectral_norm(exact - mat_power(engine, k));
      out.push_back({k, err, eta * eta * comm / static_cast<double>(k)});
   }
   return out;
}

/// ||[P_s - I, P_w]|| = sqrt(N-1)/N = y sqrt(1 - y^2).
inline double commutator_norm_grover(const SearchInstance& inst) {
   return inst.overlap_ws() * inst.overlap_rs();
}

struct DigitizationPlan {
   std::uint64_t l = 0;
   std::uint64_t m = 0;   ///< odd integer nearest to 4 pi l / (pi - 2)
   double epsilon = 0.0;  ///< 4 pi l / (pi - 2) - m
   std::uint64_t k = 0;   ///< nearest integer to 2 pi l sqrt(N) / (pi - 2)
   double t = 0.0;        ///< k pi hbar / E
   double delta = 0.0;    ///< max(|epsilon|, 1/sqrt(N))
   std::vector<std::string> warnings;

   friend bool operator==(const DigitizationPlan&, const DigitizationPlan&) = default;
};

namespace detail {

inline double round_half_even(double x) {
   const int saved = std::fegetround();
   std::fesetround(FE_TONEAREST);
   const double r = std::nearbyint(x);
   std::fesetround(saved);
   return r;
}

}  // namespace detail

inline DigitizationPlan select_params(const SearchInstance& inst, std::uint64_t l) {
   if (l == 0) throw DomainError("select_params: l must be >= 1");
   const double lr = static_cast<double>(l);
   const double ratio = 4.0 * pi * lr / (pi - 2.0);
   // Odd integers are 2q + 1; the nearest one to x has q = round((x - 1) / 2).
   const double m = 2.0 * detail::round_half_even((ratio - 1.0) / 2.0) + 1.0;
   const double k_real = 2.0 * pi * lr * inst.sqrt_size() / (pi - 2.0);
   if (!std::isfinite(k_real) || k_real >= 9007199254740992.0)
      throw OverflowError("select_params: k = 2 pi l sqrt(N)/(pi - 2) is not representable");
   DigitizationPlan plan;
   plan.l = l;
   plan.m = static_cast<std::uint64_t>(m);
   plan.epsilon = ratio - m;
   plan.k = static_cast<std::uint64_t>(detail::round_half_even(k_real));
   plan.t = static_cast<double>(plan.k) * pi * inst.hbar() / inst.energy();
   plan.delta = std::max(std::abs(plan.epsilon), inst.overlap_ws());
   const double small = inst.sqrt_size() / 10.0;
   if (lr >= small || m >= small)
      plan.warnings.push_back("l or m is not small compared to sqrt(N): l=" + std::to_string(l) +
                              " m=" + std::to_string(plan.m));
   if (plan.k == 0) throw DomainError("select_params: N too small, k rounds to 0");
   return plan;
}

/// One product slice e^{-i tE(P_s - I)/(k hbar)} e^{-i tE P_w/(k hbar)},
/// raised to k, in the {|w>, |r>} basis. Requires tE/(k hbar) = pi.
inline TwoLevelOp digitized_engine(const SearchInstance& inst, const DigitizationPlan& plan) {
   if (plan.k == 0) throw DomainError("digitized_engine: k must be positive");
   const double angle = plan.t * inst.energy() / (static_cast<double>(plan.k) * inst.hbar());
   if (std::abs(angle - pi) > 1e-12 * pi)
      throw DomainError("digitized_engine: plan violates resonance tE/(k hbar) = pi");
   const double y = inst.overlap_ws();
   const double b = inst.overlap_rs();
   const TwoLevelOp pw{{1.0, 0.0}, {0.0, 0.0}};
   const TwoLevelOp ps{{y * y, y * b}, {y * b, b * b}};
   // e^{-i a (P - I)} = e^{i a} e^{-i a P}
   const TwoLevelOp slice = std::polar(1.0, angle) * exp_projector(ps, angle) * exp_projector(pw, angle);
   return mat_power(slice, plan.k);
}

struct ProbabilityComparison {
   DigitizationPlan plan;
   double p_t = 0.0;  ///< analog success probability at plan.t
   double p_k = 0.0;  ///< cos^2(k theta + alpha)
   double gap = 0.0;  ///< |p_k - p_t|
   double delta = 0.0;
   bool below_asymptotic_regime = false;  ///< N < 2^10
};

inline ProbabilityComparison compare_probabilities(const SearchInstance& inst, std::uint64_t l) {
   ProbabilityComparison out;
   out.plan = select_params(inst, l);
   out.p_t = gfg_success_prob({inst, out.plan.t});
   out.p_k = grover_success_prob(inst, out.plan.k);
   out.gap = std::abs(out.p_k - out.p_t);
   out.delta = out.plan.delta;
   out.below_asymptotic_regime = inst.size() < (std::uint64_t{1} << 10);
   return out;
}

struct SemiclassicalPoint {
   double hbar;
   double t;
   std::uint64_t k;
   double p_t;
   double p_k;
};

/// Digitization plan as hbar -> 0 at fixed E: k is hbar-free, t = k pi hbar / E.
inline std::vector<SemiclassicalPoint> semiclassical_sweep(const SearchInstance& inst, std::uint64_t l,
                                                           std::span<const double> hbars) {
   if (hbars.empty()) throw DomainError("semiclassical_sweep: no hbar values");
   std::vector<SemiclassicalPoint> out;
   out.reserve(hbars.size());
   for (const double h : hbars) {
      const SearchInstance scaled = inst.with_hbar(h);
      const auto cmp = compare_probabilities(scaled, l);
      out.push_back({h, cmp.plan.t, cmp.plan.k, cmp.p_t, cmp.p_k});
   }
   return out;
}

}  // namespace ggl

#endif
