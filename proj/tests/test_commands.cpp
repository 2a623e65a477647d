#include <catch2/catch_amalgamated.hpp>

#include "ggl/commands.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

using namespace ggl;
using Catch::Approx;

TEST_CASE("format_number is shortest round-trip", "[report]") {
   CHECK(format_number(0.25) == "0.25");
   CHECK(format_number(1.0) == "1");
   CHECK(format_number(0.1) == "0.1");
   CHECK(format_number(-2.5e-300) == "-2.5e-300");
   CHECK(format_number(std::nan("")) == "nan");
   for (const double v : {pi, 1.0 / 3.0, 6.103515625e-05, 0.99985246587260204, 1e22}) {
      CHECK(std::stod(format_number(v)) == v);
   }
}

TEST_CASE("CSV and JSON writers", "[report]") {
   Report r({"a", "b,c", "note"});
   r.add_row({std::uint64_t{3}, 0.5, std::string("say \"hi\", twice")});
   r.add_row({std::int64_t{-1}, std::numeric_limits<double>::infinity(), std::string("plain")});
   CHECK_THROWS_AS(r.add_row({1.0}), std::logic_error);

   std::ostringstream csv;
   write_csv(csv, r);
   CHECK(csv.str() == "a,\"b,c\",note\n3,0.5,\"say \"\"hi\"\", twice\"\n-1,inf,plain\n");

   const auto j = to_json(r);
   REQUIRE(j.size() == 2);
   CHECK(j[0]["a"] == 3);
   CHECK(j[0]["b,c"] == 0.5);
   CHECK(j[1]["b,c"] == "inf");
   CHECK(j[0].begin().key() == "a");

   CHECK(r.number(0, "b,c") == 0.5);
   CHECK_THROWS_AS(r.number(0, "note"), std::invalid_argument);
   CHECK_THROWS_AS(r.column_index("missing"), std::out_of_range);
}

TEST_CASE("example command", "[commands]") {
   RunConfig cfg;
   cfg.command = Command::example;
   const auto r = run(cfg);
   REQUIRE(r.rows().size() == 1);
   CHECK(r.number(0, "N") == 1073741824.0);
   CHECK(r.number(0, "m") == 11.0);
   CHECK(r.number(0, "k") == 180351.0);
   CHECK(std::abs(r.number(0, "epsilon") - 0.00775358) <= 1e-7);
   CHECK(std::abs(r.number(0, "alpha") - 1.57076581) <= 1e-7);
   CHECK(std::abs(r.number(0, "theta") - 0.00006104) <= 1e-8);
   CHECK(std::abs(r.number(0, "P_t") - 0.99985167) <= 1e-6);
   // Exact arithmetic: k pi / sqrt(N) and cos^2(k theta + alpha) at full precision.
   CHECK(r.number(0, "Et_over_sqrtN_hbar") == Approx(180351.0 * pi / 32768.0).epsilon(1e-15));
   CHECK(std::abs(r.number(0, "P_k") - 0.999852465872602) <= 1e-12);
   CHECK(std::abs(r.number(0, "P_k_rounded_angles") - 0.99983048) <= 1e-6);

   CHECK(render(r, Format::csv) == render(run(cfg), Format::csv));
   CHECK(render(r, Format::json) == render(run(cfg), Format::json));
}

TEST_CASE("gfg command", "[commands]") {
   RunConfig cfg;
   cfg.command = Command::gfg;
   cfg.sizes = {4};
   cfg.t = 0.0;
   CHECK(run(cfg).number(0, "P") == 0.25);
   cfg.t.reset();
   CHECK(std::abs(run(cfg).number(0, "P") - 1.0) <= 1e-12);
   cfg.t = -1.0;
   CHECK_THROWS_AS(run(cfg), ConfigError);
}

TEST_CASE("grover command", "[commands]") {
   RunConfig cfg;
   cfg.command = Command::grover;
   cfg.sizes = {1024};
   const auto one = run(cfg);
   CHECK(one.number(0, "k") == 25.0);
   const double theta = 2.0 * std::asin(1.0 / 32.0);
   const double alpha = std::acos(1.0 / 32.0);
   CHECK(one.number(0, "P_k") == Approx(std::pow(std::cos(25.0 * theta + alpha), 2)).epsilon(1e-12));
   CHECK(one.number(0, "P_k_exact") == Approx(std::pow(std::cos(25.0 * theta - alpha), 2)).epsilon(1e-12));
   CHECK(one.number(0, "P_k_exact") >= 0.999);
   cfg.k_max = 10;
   CHECK(run(cfg).rows().size() == 11);
   cfg.sizes = {1024, 2048};
   CHECK_THROWS_AS(run(cfg), ConfigError);
}

TEST_CASE("params command", "[commands]") {
   RunConfig cfg;
   cfg.command = Command::params;
   const auto r = run(cfg);
   CHECK(r.number(0, "m") == 11.0);
   CHECK(r.number(0, "k") == 180351.0);
   CHECK(std::get<std::string>(r.cell(0, "warning")).empty());

   cfg.sizes = {16};
   cfg.l = std::uint64_t{1} << 60;
   CHECK_THROWS_AS(run(cfg), OverflowError);
   cfg.l = 0;
   CHECK_THROWS_AS(run(cfg), ConfigError);
   cfg.l = 1;
   cfg.w = 16;
   CHECK_THROWS_AS(run(cfg), ConfigError);
}

TEST_CASE("trotter-scan command", "[commands]") {
   RunConfig cfg;
   cfg.command = Command::trotter_scan;
   cfg.sizes = {16};
   const auto r = run(cfg);
   REQUIRE(r.rows().size() == 8);
   for (std::size_t i = 0; i < 8; ++i) {
      CHECK(r.number(i, "k") == static_cast<double>(4u << i));
      CHECK(r.number(i, "error") <= 10.0 * r.number(i, "bound"));
   }
   cfg.resonant = true;
   const auto res = run(cfg);
   for (std::size_t i = 0; i < 8; ++i) CHECK(res.number(i, "error") >= 0.01);
   cfg.k_max_scan = 500;
   CHECK_THROWS_AS(run(cfg), ConfigError);
}

TEST_CASE("semiclassical command", "[commands]") {
   RunConfig cfg;
   cfg.command = Command::semiclassical;
   cfg.sizes = {std::uint64_t{1} << 20};
   cfg.hbars = {1.0, 1e-1, 1e-2, 1e-3, 1e-4};
   const auto r = run(cfg);
   REQUIRE(r.rows().size() == 5);
   for (std::size_t i = 1; i < 5; ++i) {
      CHECK(r.number(i, "t") < r.number(i - 1, "t"));
      CHECK(r.number(i, "k") == r.number(0, "k"));
      CHECK(r.number(i, "P_k") == r.number(0, "P_k"));
   }
   cfg.hbars = {1.0, 0.0};
   CHECK_THROWS_AS(run(cfg), ConfigError);
}

TEST_CASE("pathsum command", "[commands]") {
   RunConfig cfg;
   cfg.command = Command::pathsum;
   cfg.sizes = {4};
   const auto r = run(cfg);
   REQUIRE(r.rows().size() == 10);
   for (std::size_t i = 2; i < r.rows().size(); ++i) CHECK(r.number(i, "error") < r.number(i - 1, "error"));

   cfg.sizes = {3};
   cfg.n_min = 1;
   cfg.n_max = 4;
   cfg.bruteforce = true;
   const auto b = run(cfg);
   for (std::size_t i = 0; i < b.rows().size(); ++i) {
      CHECK(std::abs(b.number(i, "bruteforce_re") - b.number(i, "K_re")) <= 1e-10);
      CHECK(std::abs(b.number(i, "bruteforce_im") - b.number(i, "K_im")) <= 1e-10);
   }
   cfg.j = 3;
   CHECK_THROWS_AS(run(cfg), ConfigError);
   cfg.j = 0;
   cfg.n_max = 16;
   CHECK_THROWS_AS(run(cfg), ConfigError);
}

TEST_CASE("compare command", "[commands]") {
   RunConfig cfg;
   cfg.command = Command::compare;
   cfg.sizes = {std::uint64_t{1} << 20, std::uint64_t{1} << 24};
   const auto r = run(cfg);
   REQUIRE(r.rows().size() == 2);
   for (std::size_t i = 0; i < 2; ++i) {
      CHECK(std::isfinite(r.number(i, "gap_times_N")));
      CHECK(r.number(i, "gap") == Approx(std::abs(r.number(i, "P_t") - r.number(i, "P_k"))).margin(1e-15));
   }
}

TEST_CASE("gnuplot script", "[commands]") {
   RunConfig cfg;
   cfg.command = Command::trotter_scan;
   cfg.sizes = {16};
   const auto script = gnuplot_script(run(cfg), cfg.command, "scan.csv");
   CHECK(script.find("set logscale xy") != std::string::npos);
   CHECK(script.find("'scan.csv' using 1:3") != std::string::npos);
}
