#ifndef GGL_COMMANDS_HPP
#define GGL_COMMANDS_HPP

// Report builders behind each CLI subcommand. Every command maps a RunConfig
// to a Report with a fixed column schema; the CLI only parses flags and
// serializes.

#include "fit.hpp"
#include "gfg.hpp"
#include "grover.hpp"
#include "pathsum.hpp"
#include "report.hpp"
#include "trotter.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ggl {

enum class Command { grover, gfg, params, compare, trotter_scan, pathsum, semiclassical, example };

inline std::string_view command_name(Command c) {
   switch (c) {
      case Command::grover: return "grover";
      case Command::gfg: return "gfg";
      case Command::params: return "params";
      case Command::compare: return "compare";
      case Command::trotter_scan: return "trotter-scan";
      case Command::pathsum: return "pathsum";
      case Command::semiclassical: return "semiclassical";
      case Command::example: return "example";
   }
   return "?";
}

enum class Format { csv, json };

/// Invalid flag combination or out-of-domain value; maps to exit status 2.
class ConfigError : public std::invalid_argument {
public:
   using std::invalid_argument::invalid_argument;
};

struct RunConfig {
   Command command = Command::example;
   std::vector<std::uint64_t> sizes{std::uint64_t{1} << 30};  ///< N (compare accepts several)
   std::uint64_t w = 0;
   double energy = 1.0;
   double hbar = 1.0;
   std::uint64_t l = 1;
   std::optional<std::uint64_t> k;      ///< grover iterations / pathsum initial state
   std::optional<std::uint64_t> k_max;  ///< grover: emit rows for 0..k_max
   std::optional<double> t;
   std::uint64_t j = 0;               ///< pathsum final state
   std::uint64_t n_min = 8;           ///< pathsum slice grid, powers of two
   std::uint64_t n_max = 4096;
   bool bruteforce = false;           ///< pathsum: add the path-enumeration column (n <= 6 style grids)
   double eta = 1.0;                  ///< trotter-scan: fixed eta for the non-resonant scan
   std::uint64_t k_min_scan = 4;      ///< trotter-scan grid, powers of two
   std::uint64_t k_max_scan = 512;
   bool resonant = false;             ///< trotter-scan: t = k pi hbar / E
   std::vector<double> hbars{1.0, 1e-2, 1e-4, 1e-6, 1e-8, 1e-10};
   Format format = Format::csv;
};

namespace detail {

inline std::vector<std::uint64_t> powers_of_two(std::uint64_t lo, std::uint64_t hi, const char* what) {
   if (lo == 0 || hi < lo || (lo & (lo - 1)) != 0 || (hi & (hi - 1)) != 0)
      throw ConfigError(std::string(what) + ": grid bounds must be powers of two with min <= max");
   std::vector<std::uint64_t> out;
   for (std::uint64_t v = lo; v <= hi; v *= 2) {
      out.push_back(v);
      if (v > (std::uint64_t{1} << 62)) break;
   }
   return out;
}

inline std::uint64_t single_size(const RunConfig& cfg) {
   if (cfg.sizes.size() != 1) throw ConfigError(std::string(command_name(cfg.command)) + ": expects exactly one --N");
   return cfg.sizes.front();
}

inline SearchInstance make_instance(const RunConfig& cfg, std::uint64_t n) {
   try {
      return {n, cfg.w, cfg.energy, cfg.hbar};
   } catch (const DomainError& e) {
      throw ConfigError(e.what());
   }
}

inline double round_to_decimals(double v, int places) {
   const double scale = std::pow(10.0, places);
   return std::round(v * scale) / scale;
}

}  // namespace detail

inline Report run_grover(const RunConfig& cfg) {
   const auto inst = detail::make_instance(cfg, detail::single_size(cfg));
   const auto angles = grover_angles(inst);
   Report r({"N", "w", "k", "theta", "alpha", "P_k", "P_k_exact"});
   auto add = [&](std::uint64_t k) {
      r.add_row({inst.size(), inst.marked(), k, angles.theta, angles.alpha, grover_success_prob(inst, k),
                 grover_success_prob_exact(inst, k)});
   };
   if (cfg.k_max) {
      for (std::uint64_t k = 0; k <= *cfg.k_max; ++k) add(k);
   } else {
      add(cfg.k.value_or(grover_optimal_iterations(inst)));
   }
   return r;
}

inline Report run_gfg(const RunConfig& cfg) {
   const auto inst = detail::make_instance(cfg, detail::single_size(cfg));
   const double t = cfg.t.value_or(optimal_time(inst));
   if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("gfg: --t must be a finite value >= 0");
   const GfgEvolution ev{inst, t};
   const auto amp = gfg_state(ev);
   Report r({"N", "E", "hbar", "t", "y", "Eyt_over_hbar", "P", "amp_w_re", "amp_w_im", "amp_r_re", "amp_r_im"});
   r.add_row({inst.size(), inst.energy(), inst.hbar(), t, ev.y(), ev.phase(), gfg_success_prob(ev), amp.amp_w.real(),
              amp.amp_w.imag(), amp.amp_r.real(), amp.amp_r.imag()});
   return r;
}

inline std::string join_warnings(const std::vector<std::string>& w) {
   std::string out;
   for (const auto& s : w) out += (out.empty() ? "" : "; ") + s;
   return out;
}

inline Report run_params(const RunConfig& cfg) {
   const auto inst = detail::make_instance(cfg, detail::single_size(cfg));
   if (cfg.l == 0) throw ConfigError("params: --l must be >= 1");
   const auto plan = select_params(inst, cfg.l);
   Report r({"N", "l", "m", "epsilon", "k", "t", "delta", "Et_over_sqrtN_hbar", "warning"});
   r.add_row({inst.size(), plan.l, plan.m, plan.epsilon, plan.k, plan.t, plan.delta,
              static_cast<double>(plan.k) * pi / inst.sqrt_size(), join_warnings(plan.warnings)});
   return r;
}

inline Report run_compare(const RunConfig& cfg) {
   if (cfg.sizes.empty()) throw ConfigError("compare: at least one --N is required");
   if (cfg.l == 0) throw ConfigError("compare: --l must be >= 1");
   Report r({"N", "l", "k", "t", "P_t", "P_k", "gap", "gap_times_N", "delta"});
   for (const auto n : cfg.sizes) {
      const auto inst = detail::make_instance(cfg, n);
      const auto c = compare_probabilities(inst, cfg.l);
      r.add_row({inst.size(), cfg.l, c.plan.k, c.plan.t, c.p_t, c.p_k, c.gap, c.gap * inst.size_real(), c.delta});
   }
   return r;
}

inline Report run_trotter_scan(const RunConfig& cfg) {
   const auto inst = detail::make_instance(cfg, detail::single_size(cfg));
   require_dense(inst.size(), "trotter-scan");
   const auto ks = detail::powers_of_two(cfg.k_min_scan, cfg.k_max_scan, "trotter-scan");
   std::vector<TrotterErrorSample> samples;
   if (cfg.resonant) {
      samples = resonant_error_scan(inst, ks);
   } else {
      const auto id = ComplexMatrix::identity(static_cast<std::size_t>(inst.size()));
      samples = trotter_error_scan(projector_uniform(inst) - id, projector_marked(inst), cfg.eta, ks);
   }
   Report r({"k", "eta", "error", "bound", "error_times_k"});
   for (const auto& s : samples) {
      const double eta = cfg.resonant ? static_cast<double>(s.k) * pi : cfg.eta;
      r.add_row({s.k, eta, s.error, s.bound, s.error * static_cast<double>(s.k)});
   }
   return r;
}

inline Report run_pathsum(const RunConfig& cfg) {
   const auto inst = detail::make_instance(cfg, detail::single_size(cfg));
   const std::uint64_t k = cfg.k.value_or(inst.marked() == 0 ? 1 : 0);
   const double t = cfg.t.value_or(1.0);
   if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("pathsum: --t must be a finite value >= 0");
   if (cfg.j >= inst.size() || k >= inst.size()) throw ConfigError("pathsum: --j/--k must lie in [0, N)");
   const auto ns = detail::powers_of_two(cfg.n_min, cfg.n_max, "pathsum");
   const Complex exact = gfg_propagator_exact(inst, cfg.j, k, t);
   std::vector<std::string> cols{"n", "K_re", "K_im", "exact_re", "exact_im", "error"};
   if (cfg.bruteforce) {
      cols.emplace_back("bruteforce_re");
      cols.emplace_back("bruteforce_im");
   }
   Report r(cols);
   for (const auto n : ns) {
      const PathSumSpec spec{inst, n, t, cfg.j, k};
      const Complex kn = propagator_sliced(spec);
      std::vector<Cell> row{n, kn.real(), kn.imag(), exact.real(), exact.imag(), std::abs(kn - exact)};
      if (cfg.bruteforce) {
         Complex b{};
         try {
            b = propagator_bruteforce(spec);
         } catch (const DomainError& e) {
            throw ConfigError(e.what());
         }
         row.emplace_back(b.real());
         row.emplace_back(b.imag());
      }
      r.add_row(std::move(row));
   }
   return r;
}

inline Report run_semiclassical(const RunConfig& cfg) {
   const auto inst = detail::make_instance(cfg, detail::single_size(cfg));
   for (const double h : cfg.hbars)
      if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("semiclassical: every hbar must be > 0");
   if (cfg.l == 0) throw ConfigError("semiclassical: --l must be >= 1");
   const auto pts = semiclassical_sweep(inst, cfg.l, cfg.hbars);
   Report r({"hbar", "t", "k", "P_t", "P_k"});
   for (const auto& p : pts) r.add_row({p.hbar, p.t, p.k, p.p_t, p.p_k});
   return r;
}

/// The worked example N = 2^30, l = 1. The last column re-evaluates
/// cos^2(k theta + alpha) with theta and alpha first rounded to 8 decimals,
/// which is how the commonly quoted value .99983048 arises.
inline Report run_example(const RunConfig& cfg) {
   RunConfig c = cfg;
   c.sizes = {std::uint64_t{1} << 30};
   c.l = 1;
   c.w = 0;
   const auto inst = detail::make_instance(c, c.sizes.front());
   const auto cmp = compare_probabilities(inst, c.l);
   const auto angles = grover_angles(inst);
   const double theta8 = detail::round_to_decimals(angles.theta, 8);
   const double alpha8 = detail::round_to_decimals(angles.alpha, 8);
   const double pk8 = std::pow(std::cos(static_cast<double>(cmp.plan.k) * theta8 + alpha8), 2);
   Report r({"N", "l", "m", "epsilon", "delta", "alpha", "theta", "k", "Et_over_sqrtN_hbar", "t", "P_t", "P_k",
             "gap", "P_k_rounded_angles"});
   r.add_row({inst.size(), cmp.plan.l, cmp.plan.m, cmp.plan.epsilon, cmp.plan.delta, angles.alpha, angles.theta,
              cmp.plan.k, static_cast<double>(cmp.plan.k) * pi / inst.sqrt_size(), cmp.plan.t, cmp.p_t, cmp.p_k,
              cmp.gap, pk8});
   return r;
}

inline Report run(const RunConfig& cfg) {
   switch (cfg.command) {
      case Command::grover: return run_grover(cfg);
      case Command::gfg: return run_gfg(cfg);
      case Command::params: return run_params(cfg);
      case Command::compare: return run_compare(cfg);
      case Command::trotter_scan: return run_trotter_scan(cfg);
      case Command::pathsum: return run_pathsum(cfg);
      case Command::semiclassical: return run_semiclassical(cfg);
      case Command::example: return run_example(cfg);
   }
   throw ConfigError("unknown command");
}

inline std::string render(const Report& report, Format format) {
   std::ostringstream os;
   if (format == Format::json)
      write_json(os, report);
   else
      write_csv(os, report);
   return os.str();
}

/// Companion gnuplot script plotting the first column against the others.
inline std::string gnuplot_script(const Report& report, Command command, const std::string& data_file) {
   std::ostringstream os;
   os << "# gnuplot script for '" << command_name(command) << "' output\n";
   os << "set datafile separator ','\n";
   os << "set key autotitle columnhead\n";
   const bool loglog = command == Command::trotter_scan || command == Command::pathsum;
   if (loglog) os << "set logscale xy\n";
   os << "plot ";
   const auto& cols = report.columns();
   bool first = true;
   for (std::size_t i = 1; i < cols.size(); ++i) {
      if (!report.rows().empty() && std::holds_alternative<std::string>(report.rows().front()[i])) continue;
      os << (first ? "" : ", \\\n     ") << "'" << data_file << "' using 1:" << (i + 1) << " with linespoints";
      first = false;
   }
   os << "\n";
   return os.str();
}

}  // namespace ggl

#endif
