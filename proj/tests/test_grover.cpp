#include <catch2/catch_amalgamated.hpp>

#include "ggl/grover.hpp"
#include "oracles.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

using namespace ggl;
using Catch::Approx;

namespace {

std::vector<Complex> r_vector(const SearchInstance& inst) {
   std::vector<Complex> r(inst.size());
   for (std::uint64_t j = 0; j < inst.size(); ++j) r[j] = basis_overlaps(inst, j).c_r;
   return r;
}

std::vector<Complex> apply(const ComplexMatrix& m, const std::vector<Complex>& v) {
   const auto out = m * ComplexMatrix::column(v);
   return {out.entries().begin(), out.entries().end()};
}

Complex dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
   Complex s{};
   for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
   return s;
}

}  // namespace

TEST_CASE("SearchInstance validation", "[grover]") {
   CHECK_THROWS_AS(SearchInstance(1, 0), DomainError);
   CHECK_THROWS_AS(SearchInstance(4, 4), DomainError);
   CHECK_THROWS_AS(SearchInstance(4, 0, 0.0), DomainError);
   CHECK_THROWS_AS(SearchInstance(4, 0, 1.0, -1.0), DomainError);
   CHECK_NOTHROW(SearchInstance(std::uint64_t{1} << 60, 7));
}

TEST_CASE("basis_overlaps", "[grover]") {
   const SearchInstance four(4, 2);
   const auto at_w = basis_overlaps(four, 2);
   CHECK(at_w.c_w == 1.0);
   CHECK(at_w.c_r == 0.0);
   const auto off = basis_overlaps(four, 0);
   CHECK(off.c_w == 0.0);
   CHECK(off.c_r == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

   double sum = 0.0;
   const SearchInstance sixteen(16, 5);
   for (std::uint64_t j = 0; j < 16; ++j) sum += std::pow(basis_overlaps(sixteen, j).c_r, 2);
   CHECK(sum == Approx(1.0).epsilon(1e-14));

   CHECK_THROWS_AS(basis_overlaps(four, 4), DomainError);
}

TEST_CASE("dense Grover operators", "[grover]") {
   const auto two = grover_operators_dense(SearchInstance(2, 0));
   CHECK(two.oracle == (ComplexMatrix{{-1.0, 0.0}, {0.0, 1.0}}));

   for (std::uint64_t w = 0; w < 4; ++w) {
      const SearchInstance inst(4, w);
      const auto ops = grover_operators_dense(inst);
      const auto after = ops.engine * uniform_state(inst);
      CHECK(std::norm(after(w, 0)) == Approx(1.0).epsilon(1e-14));
   }

   for (const std::uint64_t n : {2u, 3u, 8u, 33u, 64u}) {
      const auto ops = grover_operators_dense(SearchInstance(n, n / 2));
      CHECK(is_unitary(ops.oracle, 1e-10));
      CHECK(is_unitary(ops.diffusion, 1e-10));
      CHECK(is_unitary(ops.engine, 1e-10));
   }
}

TEST_CASE("dense cap is enforced", "[grover]") {
   const SearchInstance huge(dense_cap() + 1, 0);
   CHECK_THROWS_AS(grover_operators_dense(huge), DomainError);
   CHECK_THROWS_AS(grover_state_dense(huge, 1), DomainError);
}

TEST_CASE("grover_angles", "[grover]") {
   const auto big = grover_angles(SearchInstance(std::uint64_t{1} << 30, 0));
   CHECK(std::abs(big.theta - 0.00006104) <= 1e-8);
   CHECK(std::abs(big.alpha - 1.57076581) <= 1e-8);

   const auto four = grover_angles(SearchInstance(4, 0));
   CHECK(four.theta == Approx(pi / 3.0).epsilon(1e-14));
   CHECK(four.alpha == Approx(pi / 3.0).epsilon(1e-14));

   // theta = 2 asin(1/sqrt(N)) = 2/sqrt(N) + 1/(3 N^{3/2}) + ..., so
   // theta sqrt(N)/2 = 1 + 1/(6N) + O(N^-2).
   const double n = 1e8;
   const auto a = grover_angles(SearchInstance(100'000'000, 0));
   CHECK(std::abs(a.theta * std::sqrt(n) / 2.0 - 1.0) <= 1.0 / n);
   CHECK(a.theta * std::sqrt(n) / 2.0 == Approx(1.0 + 1.0 / (6.0 * n)).epsilon(1e-13));
}

TEST_CASE("grover_success_prob", "[grover]") {
   for (const std::uint64_t n : {2u, 5u, 1024u}) {
      CHECK(grover_success_prob(SearchInstance(n, 0), 0) == Approx(1.0 / static_cast<double>(n)).epsilon(1e-12));
   }
   CHECK(std::abs(grover_success_prob(SearchInstance(std::uint64_t{1} << 30, 0), 180351) - 0.99985247) <= 1e-8);

   const SearchInstance m20(std::uint64_t{1} << 20, 3);
   CHECK(grover_optimal_iterations(m20) == 804);
   CHECK(grover_success_prob(m20, 804) >= 0.999);
}

TEST_CASE("grover_success_prob stays in [1/N.., 1] and is periodic", "[grover][property]") {
   for (const std::uint64_t n : {2u, 3u, 4u, 17u, 1000u, 1u << 20}) {
      const SearchInstance inst(n, 0);
      CHECK(grover_success_prob(inst, 0) >= 1.0 / static_cast<double>(n) - 1e-15);
      for (std::uint64_t k = 0; k < 500; k += 7) {
         const double p = grover_success_prob(inst, k);
         CHECK(p >= 0.0);
         CHECK(p <= 1.0);
      }
   }
   // theta = pi/2 at N = 2 and pi/3 at N = 4, so pi/theta is an integer there.
   for (std::uint64_t k = 0; k < 50; ++k) {
      CHECK(grover_success_prob(SearchInstance(2, 0), k + 2) == Approx(grover_success_prob(SearchInstance(2, 0), k)).margin(1e-9));
      CHECK(grover_success_prob(SearchInstance(4, 1), k + 3) == Approx(grover_success_prob(SearchInstance(4, 1), k)).margin(1e-9));
   }
}

TEST_CASE("grover_state_dense", "[grover]") {
   const SearchInstance eight(8, 3);
   const auto s0 = grover_state_dense(eight, 0);
   for (const auto& a : s0.entries()) CHECK(a == Complex{1.0 / std::sqrt(8.0), 0.0});

   const SearchInstance four(4, 1);
   ComplexMatrix w(4, 1);
   w(1, 0) = 1.0;
   CHECK(max_abs_diff(grover_state_dense(four, 1), w) <= 1e-12);

   const auto long_run = grover_state_dense(SearchInstance(64, 10), 1000);
   double norm = 0.0;
   for (const auto& a : long_run.entries()) norm += std::norm(a);
   CHECK(norm == Approx(1.0).margin(1e-10));

   SECTION("vector recursion matches the dense matrix product") {
      const SearchInstance inst(16, 9);
      const auto ug = grover_operators_dense(inst).engine;
      CHECK(max_abs_diff(grover_state_dense(inst, 5), mat_power(ug, 5) * uniform_state(inst)) <= 1e-12);
   }
}

TEST_CASE("U_G leaves span{|w>, |r>} invariant", "[grover][property]") {
   for (const std::uint64_t n : {3u, 4u, 16u, 64u}) {
      const SearchInstance inst(n, n - 1);
      const auto ug = grover_operators_dense(inst).engine;
      std::vector<Complex> w(n);
      w[inst.marked()] = 1.0;
      const auto r = r_vector(inst);
      for (const auto& v : {w, r}) {
         auto out = apply(ug, v);
         const Complex cw = dot(w, out);
         const Complex cr = dot(r, out);
         double residual = 0.0;
         for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(out[i] - cw * w[i] - cr * r[i]));
         CHECK(residual <= 1e-10);
      }
   }
}

TEST_CASE("2x2 engine matches the dense restriction", "[grover]") {
   for (const std::uint64_t n : {4u, 9u, 64u}) {
      const SearchInstance inst(n, 2);
      const auto ug = grover_operators_dense(inst).engine;
      std::vector<Complex> w(n);
      w[inst.marked()] = 1.0;
      const auto r = r_vector(inst);
      const std::vector<Complex>* basis[2] = {&w, &r};
      TwoLevelOp restricted(2, 2);
      for (int a = 0; a < 2; ++a)
         for (int b = 0; b < 2; ++b) restricted(a, b) = dot(*basis[a], apply(ug, *basis[b]));
      CHECK(max_abs_diff(restricted, grover_engine_2d(inst)) <= 1e-12);
      // Literal product is a rotation by -theta.
      CHECK(max_abs_diff(restricted, oracle::rotation(-grover_angles(inst).theta)) <= 1e-12);
      for (const std::uint64_t k : {0u, 1u, 7u, 100u})
         CHECK(max_abs_diff(grover_engine_power(inst, k), mat_power(grover_engine_2d(inst), k)) <= 1e-11);
   }
}

TEST_CASE("sign convention of the closed form", "[grover][property]") {
   // Fix the sign once at N = 4, where the two candidate formulas differ most.
   const SearchInstance four(4, 0);
   const double dense = std::norm(grover_state_dense(four, 1)(0, 0));
   const auto [theta, alpha] = grover_angles(four);
   const double plus = std::pow(std::cos(theta + alpha), 2);
   const double minus = std::pow(std::cos(theta - alpha), 2);
   REQUIRE(std::abs(dense - minus) < 1e-12);
   REQUIRE(std::abs(dense - plus) > 0.5);
   const double sign = -1.0;

   for (const std::uint64_t n : {4u, 8u, 16u, 64u, 256u}) {
      const auto angles = grover_angles(SearchInstance(n, 0));
      const std::uint64_t horizon = 2 * static_cast<std::uint64_t>(pi * std::sqrt(static_cast<double>(n)) / 4.0) + 3;
      for (std::uint64_t w = 0; w < n; ++w) {
         const SearchInstance inst(n, w);
         for (std::uint64_t k = 0; k <= horizon; ++k) {
            const double p_dense = std::norm(grover_state_dense(inst, k)(w, 0));
            const double p_closed = std::pow(std::cos(static_cast<double>(k) * angles.theta + sign * angles.alpha), 2);
            CHECK(std::abs(p_dense - p_closed) <= 1e-10);
            CHECK(std::abs(p_dense - grover_success_prob_exact(inst, k)) <= 1e-10);
         }
      }
   }

   // For larger N the published cos^2(k theta + alpha) is within O(1/sqrt N).
   for (const std::uint64_t n : {1024u, 4096u}) {
      const SearchInstance inst(n, 17);
      const auto kmax = static_cast<std::uint64_t>(pi * std::sqrt(static_cast<double>(n)) / 4.0);
      for (std::uint64_t k = 0; k <= kmax; ++k) {
         const double p_dense = std::norm(grover_state_dense(inst, k)(17, 0));
         CHECK(std::abs(p_dense - grover_success_prob(inst, k)) <= 5.0 / std::sqrt(static_cast<double>(n)));
      }
   }
}
