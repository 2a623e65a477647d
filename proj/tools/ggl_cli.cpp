// Command-line front end: one subcommand per experiment, CSV or JSON out.

#include <CLI11.hpp>

#include "ggl/commands.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

namespace {

// Accepts plain integers and powers written as 2^p.
std::string expand_power(std::string in) {
   const auto caret = in.find('^');
   if (caret == std::string::npos) return in;
   const std::uint64_t base = std::stoull(in.substr(0, caret));
   const std::uint64_t exp = std::stoull(in.substr(caret + 1));
   std::uint64_t v = 1;
   for (std::uint64_t i = 0; i < exp; ++i) {
      if (v > UINT64_MAX / base) throw CLI::ValidationError("--N", in + " overflows 64 bits");
      v *= base;
   }
   return std::to_string(v);
}

struct Outputs {
   std::string format = "csv";
   std::string output;
   std::string gnuplot;
};

void add_instance_flags(CLI::App* sub, ggl::RunConfig& cfg, bool several_sizes = false) {
   auto* opt = sub->add_option("--N", cfg.sizes, several_sizes ? "database size(s) N >= 2; repeat for a grid (2^p accepted)"
                                                             : "database size N >= 2 (2^p accepted)")
                   ->transform(expand_power)
                   ->required();
   if (!several_sizes) opt->expected(1);
   sub->add_option("--w", cfg.w, "marked index w in [0, N)")->capture_default_str();
   sub->add_option("--E", cfg.energy, "energy E > 0 [energy units]")->capture_default_str();
   sub->add_option("--hbar", cfg.hbar, "Planck constant hbar > 0 [action units]")->capture_default_str();
}

void add_output_flags(CLI::App* sub, Outputs& out) {
   sub->add_option("--format", out.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
   sub->add_option("-o,--output", out.output, "write the report to this file instead of standard output");
   sub->add_option("--gnuplot", out.gnuplot, "also write a gnuplot script for the report to this file");
}

}  // namespace

int main(int argc, char** argv) {
   CLI::App app{"ggl: Grover search, analog (GFG) search, Trotter digitization and path sums.\n"
                "Times are in units of hbar/E; E and hbar default to 1."};
   app.require_subcommand(1);
   ggl::RunConfig cfg;
   Outputs out;

   auto* grover = app.add_subcommand("grover", "Grover success probability cos^2(k theta + alpha) and the definition-exact variant");
   add_instance_flags(grover, cfg);
   grover->add_option("--k", cfg.k, "iterations (default round(pi sqrt(N)/4))");
   grover->add_option("--k-max", cfg.k_max, "emit one row per k in 0..k-max");

   auto* gfg = app.add_subcommand("gfg", "analog success probability P(t) and amplitudes");
   add_instance_flags(gfg, cfg);
   gfg->add_option("--t", cfg.t, "evolution time [hbar/E units] (default pi hbar sqrt(N)/(2E))");

   auto* params = app.add_subcommand("params", "digitization plan (l, m, epsilon, k, t, delta)");
   add_instance_flags(params, cfg);
   params->add_option("--l", cfg.l, "plan index l >= 1")->capture_default_str();

   auto* compare = app.add_subcommand("compare", "P(t) vs P_k for the digitization plan");
   add_instance_flags(compare, cfg, true);
   compare->add_option("--l", cfg.l, "plan index l >= 1")->capture_default_str();

   auto* scan = app.add_subcommand("trotter-scan", "Trotter error vs k for the pair (P_s - I, P_w)");
   add_instance_flags(scan, cfg);
   scan->add_option("--eta", cfg.eta, "fixed eta = tE/hbar for the non-resonant scan [dimensionless]")->capture_default_str();
   scan->add_option("--k-min", cfg.k_min_scan, "smallest k (power of two)")->capture_default_str();
   scan->add_option("--k-max", cfg.k_max_scan, "largest k (power of two)")->capture_default_str();
   scan->add_flag("--resonant", cfg.resonant, "tie eta to k: t = k pi hbar / E");

   auto* pathsum = app.add_subcommand("pathsum", "sliced propagator (T^n)_{j,k} vs the exact K(j,k,t)");
   add_instance_flags(pathsum, cfg);
   pathsum->add_option("--j", cfg.j, "final basis state j")->capture_default_str();
   pathsum->add_option("--k", cfg.k, "initial basis state k (default: an unmarked state, 1 if w = 0 else 0)");
   pathsum->add_option("--t", cfg.t, "evolution time [hbar/E units] (default 1)");
   pathsum->add_option("--n-min", cfg.n_min, "fewest slices (power of two)")->capture_default_str();
   pathsum->add_option("--n-max", cfg.n_max, "most slices (power of two)")->capture_default_str();
   pathsum->add_flag("--bruteforce", cfg.bruteforce, "also enumerate every path (N^(n-1) <= 1e7)");

   auto* semi = app.add_subcommand("semiclassical", "digitization plan as hbar -> 0");
   add_instance_flags(semi, cfg);
   semi->add_option("--l", cfg.l, "plan index l >= 1")->capture_default_str();
   semi->add_option("--hbars", cfg.hbars, "hbar values [action units]")->capture_default_str();

   auto* example = app.add_subcommand("example", "worked example N = 2^30, l = 1, E = hbar = 1");

   for (auto* sub : {grover, gfg, params, compare, scan, pathsum, semi, example}) add_output_flags(sub, out);

   try {
      app.parse(argc, argv);
   } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
   } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
   } catch (const CLI::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
   }

   const std::pair<CLI::App*, ggl::Command> dispatch[] = {
       {grover, ggl::Command::grover},       {gfg, ggl::Command::gfg},
       {params, ggl::Command::params},       {compare, ggl::Command::compare},
       {scan, ggl::Command::trotter_scan},   {pathsum, ggl::Command::pathsum},
       {semi, ggl::Command::semiclassical},  {example, ggl::Command::example}};
   for (const auto& [sub, cmd] : dispatch)
      if (sub->parsed()) cfg.command = cmd;
   cfg.format = out.format == "json" ? ggl::Format::json : ggl::Format::csv;

   try {
      const ggl::Report report = ggl::run(cfg);
      const std::string text = ggl::render(report, cfg.format);
      if (out.output.empty()) {
         std::cout << text;
      } else {
         std::ofstream file(out.output, std::ios::binary);
         if (!file) throw ggl::ConfigError("cannot open " + out.output + " for writing");
         file << text;
      }
      if (!out.gnuplot.empty()) {
         std::ofstream script(out.gnuplot, std::ios::binary);
         if (!script) throw ggl::ConfigError("cannot open " + out.gnuplot + " for writing");
         script << ggl::gnuplot_script(report, cfg.command, out.output.empty() ? "data.csv" : out.output);
      }
   } catch (const ggl::OverflowError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
   } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
   } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
   }
   return 0;
}
