#include "ramified/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ramified/entropy.hpp"
#include "ramified/errors.hpp"
#include "ramified/frullani.hpp"
#include "ramified/graph_model.hpp"
#include "ramified/heat_kernel.hpp"
#include "ramified/report.hpp"
#include "ramified/spectral_zeta.hpp"

namespace ramified::cli {
namespace {

using report::CsvWriter;
using report::format_number;

constexpr int kMaxDecimation = 100'000'000;
constexpr std::int64_t kMaxDenseGrid = 200'000;
const char* const kRefused = "refused";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, svg };

struct Common {
  std::string output;
  Format format = Format::csv;
};

// Evaluates f(0..count-1) on a thread pool; results keep index order and the
// first exception (by index) is rethrown.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F f) {
  std::vector<T> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

void require_decimation(int l, const char* flag) {
  if (l < 3) throw UsageError(std::string(flag) + " must be >= 3 (the decimation factor requires l >= 3)");
  if (l > kMaxDecimation) throw UsageError(std::string(flag) + " must be <= 100000000");
}

/// Integer decimation factors from l_min to l_max. With steps > 0 they are
/// log-spaced, rounded, and nudged so the sequence is strictly increasing and
/// keeps both endpoints.
std::vector<int> decimation_grid(int l_min, int l_max, int steps) {
  require_decimation(l_min, "--l-min");
  require_decimation(l_max, "--l-max");
  if (l_max < l_min) throw UsageError("--l-max must be >= --l-min");
  const std::int64_t available = static_cast<std::int64_t>(l_max) - l_min + 1;
  std::vector<int> grid;
  if (steps <= 0) {
    if (available > kMaxDenseGrid) throw UsageError("range too large for a dense grid; pass --log-steps");
    for (int l = l_min; l <= l_max; ++l) grid.push_back(l);
    return grid;
  }
  if (steps > available) throw UsageError("--log-steps exceeds the number of integers in the range");
  if (steps == 1) return {l_min};
  std::vector<std::int64_t> a(static_cast<std::size_t>(steps));
  const double ratio = static_cast<double>(l_max) / l_min;
  for (int i = 0; i < steps; ++i) {
    a[i] = std::llround(l_min * std::pow(ratio, static_cast<double>(i) / (steps - 1)));
    if (i > 0) a[i] = std::max(a[i], a[i - 1] + 1);
  }
  a.back() = std::min<std::int64_t>(a.back(), l_max);
  for (int i = steps - 2; i >= 0; --i) a[i] = std::min(a[i], a[i + 1] - 1);
  for (auto v : a) grid.push_back(static_cast<int>(v));
  return grid;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > 0.0)) throw UsageError("grid bounds must be positive");
  if (hi < lo) throw UsageError("grid upper bound must be >= lower bound");
  if (points < 1) throw UsageError("--points must be >= 1");
  std::vector<double> grid;
  for (int i = 0; i < points; ++i) {
    grid.push_back(points == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
  }
  return grid;
}

void write_output(const std::string& path, const std::string& data, std::ostream& fallback) {
  if (path.empty()) {
    fallback << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path);
  file << data;
  if (!file) throw std::runtime_error("failed writing " + path);
}

void require_csv(const Common& common, const char* command) {
  if (common.format != Format::csv) throw UsageError(std::string(command) + " supports --format csv only");
}

TildeNormalization parse_tilde(const std::string& name) {
  return name == "area" ? TildeNormalization::spectral_area : TildeNormalization::bracket;
}

const char* convention_name(Convention c) { return c == Convention::paper ? "paper" : "replica"; }

// ---------------------------------------------------------------- scan

struct ScanConfig {
  Common common;
  int l_min = 3;
  int l_max = 1000;
  int log_steps = 0;
  std::string tilde = "bracket";
};

void cmd_scan(const ScanConfig& cfg, std::ostream& out) {
  const auto grid = decimation_grid(cfg.l_min, cfg.l_max, cfg.log_steps);
  const TildeNormalization norm = parse_tilde(cfg.tilde);
  struct Row {
    int l;
    double ds;
    double tilde;
  };
  const auto rows = parallel_map<Row>(grid.size(), [&](std::size_t i) {
    const GraphSpec g = make_graph(grid[i]);
    return Row{grid[i], g.spectral_dim, entropy_tilde(g, norm)};
  });
  const double asymptote =
      norm == TildeNormalization::bracket ? entropy_tilde_limit() : spectral_area_limit();

  if (cfg.common.format == Format::svg) {
    report::PlotSpec plot;
    plot.title = "Dimensionless entanglement entropy vs decimation factor";
    plot.x_label = "decimation factor l";
    plot.y_label = "S_E eps^{d_s}";
    plot.log_x = static_cast<double>(cfg.l_max) / cfg.l_min > 100.0;
    report::Series s{"S_E tilde", {}, {}};
    for (const auto& r : rows) {
      s.x.push_back(r.l);
      s.y.push_back(r.tilde);
    }
    plot.series.push_back(std::move(s));
    plot.dashed.push_back({"l -> infinity: " + format_number(asymptote), asymptote});
    report::write_svg(out, plot);
    return;
  }
  CsvWriter csv(out);
  csv.header({"l", "d_s", "S_E_tilde"});
  for (const auto& r : rows) csv.row({std::to_string(r.l), format_number(r.ds), format_number(r.tilde)});
  csv.comment("asymptote," + format_number(asymptote));
}

// ---------------------------------------------------------------- corrections

struct CorrectionsConfig {
  Common common;
  int l_min = 3;
  int l_max = 200;
  int log_steps = 0;
  std::vector<int> orders{1, 2, 3, 4};
  bool verify = false;
  double epsilon = 0.1;
};

void cmd_corrections(const CorrectionsConfig& cfg, std::ostream& out) {
  if (cfg.orders.empty()) throw UsageError("--n needs at least one order");
  for (int n : cfg.orders) {
    if (n < 1) throw UsageError("--n orders must be >= 1");
  }
  if (!(cfg.epsilon > 0.0)) throw UsageError("--epsilon must be positive");
  const auto grid = decimation_grid(cfg.l_min, cfg.l_max, cfg.log_steps);
  const int n_top = *std::max_element(cfg.orders.begin(), cfg.orders.end());

  struct Row {
    std::vector<CorrectionCoefficients> closed;
    std::vector<CorrectionCoefficients> quad;
  };
  const auto rows = parallel_map<Row>(grid.size(), [&](std::size_t i) {
    const GraphSpec g = make_graph(grid[i]);
    const PoleTower tower = pole_tower(g, n_top);
    Row row;
    for (int n : cfg.orders) {
      row.closed.push_back(correction_coefficients(g, tower, n));
      if (cfg.verify) row.quad.push_back(frullani::correction_coefficients(g, n, cfg.epsilon));
    }
    return row;
  });

  if (cfg.common.format == Format::svg) {
    report::PlotSpec pc, ps;
    pc.title = "Pi_c vs l";
    ps.title = "Pi_s vs l";
    pc.x_label = ps.x_label = "decimation factor l";
    pc.y_label = "Pi_c";
    ps.y_label = "Pi_s";
    pc.log_x = ps.log_x = static_cast<double>(cfg.l_max) / cfg.l_min > 100.0;
    for (std::size_t j = 0; j < cfg.orders.size(); ++j) {
      report::Series sc{"n=" + std::to_string(cfg.orders[j]), {}, {}};
      report::Series ss = sc;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        sc.x.push_back(grid[i]);
        ss.x.push_back(grid[i]);
        sc.y.push_back(rows[i].closed[j].pi_c);
        ss.y.push_back(rows[i].closed[j].pi_s);
      }
      pc.series.push_back(std::move(sc));
      ps.series.push_back(std::move(ss));
    }
    report::write_svg(out, std::vector<report::PlotSpec>{pc, ps});
    return;
  }
  CsvWriter csv(out);
  if (cfg.verify) {
    csv.header({"l", "n", "Pi_c", "Pi_s", "Pi_c_quad", "Pi_s_quad"});
  } else {
    csv.header({"l", "n", "Pi_c", "Pi_s"});
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < cfg.orders.size(); ++j) {
      const auto& c = rows[i].closed[j];
      std::vector<std::string> cells{std::to_string(grid[i]), std::to_string(c.n), format_number(c.pi_c),
                                     format_number(c.pi_s)};
      if (cfg.verify) {
        cells.push_back(format_number(rows[i].quad[j].pi_c));
        cells.push_back(format_number(rows[i].quad[j].pi_s));
      }
      csv.row(cells);
    }
  }
}

// ---------------------------------------------------------------- heat

struct HeatConfig {
  Common common;
  int l = 3;
  double t_min = 1e-5;
  double t_max = 1e-2;
  int points = 16;
  int n_max = kDefaultPoleOrders;
  bool check_decimation = false;
};

void cmd_heat(const HeatConfig& cfg, std::ostream& out) {
  require_csv(cfg.common, "heat");
  require_decimation(cfg.l, "--l");
  if (cfg.n_max < 0) throw UsageError("--n-max must be >= 0");
  const auto ts = log_grid(cfg.t_min, cfg.t_max, cfg.points);
  const GraphSpec g = make_graph(cfg.l);
  const PoleTower tower = pole_tower(g, cfg.n_max + 1);

  struct Row {
    double t = 0;
    bool direct_ok = false;
    double direct = 0, direct_bound = 0, asym = 0;
    bool residual_ok = false;
    double residual = 0;
  };
  const auto rows = parallel_map<Row>(ts.size(), [&](std::size_t i) {
    Row row;
    row.t = ts[i];
    row.asym = trace_asymptotic(tower, row.t, cfg.n_max).value;
    try {
      const auto d = trace_direct(g, row.t);
      row.direct_ok = true;
      row.direct = d.value;
      row.direct_bound = d.error_estimate;
    } catch (const ResourceError&) {
      row.direct_ok = false;
    }
    if (cfg.check_decimation && row.direct_ok) {
      const double l2 = static_cast<double>(cfg.l) * cfg.l;
      try {
        const double fine = trace_direct(g, row.t / l2).value;
        const double rebuilt = 2.0 * theta_segment(row.t / l2) + 2.0 * cfg.l * (row.direct - theta_segment(row.t));
        row.residual = std::fabs(fine - rebuilt) / fine;
        row.residual_ok = true;
      } catch (const ResourceError&) {
        row.residual_ok = false;
      }
    }
    return row;
  });

  CsvWriter csv(out);
  if (cfg.check_decimation) {
    csv.header({"t", "K_direct", "K_asymptotic", "rel_err", "tail_bound", "decimation_residual"});
  } else {
    csv.header({"t", "K_direct", "K_asymptotic", "rel_err", "tail_bound"});
  }
  for (const auto& r : rows) {
    std::vector<std::string> cells{format_number(r.t)};
    if (r.direct_ok) {
      cells.push_back(format_number(r.direct));
      cells.push_back(format_number(r.asym));
      cells.push_back(format_number(std::fabs(r.direct - r.asym) / r.direct));
      cells.push_back(format_number(r.direct_bound));
    } else {
      cells.insert(cells.end(), {kRefused, format_number(r.asym), kRefused, kRefused});
    }
    if (cfg.check_decimation) cells.push_back(r.residual_ok ? format_number(r.residual) : kRefused);
    csv.row(cells);
  }
}

// ---------------------------------------------------------------- entropy

struct EntropyConfig {
  Common common;
  std::vector<int> ls{3};
  std::vector<double> epsilons{0.1};
  int n_max = 4;
  std::string convention = "paper";
  std::string tilde = "bracket";
  bool detail = false;
};

void cmd_entropy(const EntropyConfig& cfg, std::ostream& out) {
  require_csv(cfg.common, "entropy");
  for (int l : cfg.ls) require_decimation(l, "--l");
  for (double e : cfg.epsilons) {
    if (!(e > 0.0)) throw UsageError("--epsilon values must be positive");
  }
  if (cfg.n_max < 0) throw UsageError("--n-max must be >= 0");
  const Convention conv = cfg.convention == "replica" ? Convention::replica : Convention::paper;
  const TildeNormalization norm = parse_tilde(cfg.tilde);

  const std::size_t ne = cfg.epsilons.size();
  const auto results = parallel_map<EntropyResult>(cfg.ls.size() * ne, [&](std::size_t i) {
    return entropy_full(make_graph(cfg.ls[i / ne]), cfg.epsilons[i % ne], cfg.n_max, conv, norm);
  });

  CsvWriter csv(out);
  if (cfg.detail) {
    csv.header({"l", "epsilon", "n", "Pi_c", "Pi_s", "cos_term", "sin_term"});
    for (const auto& r : results) {
      for (const auto& c : r.corrections) {
        csv.row({std::to_string(r.l), format_number(r.epsilon), std::to_string(c.coefficients.n),
                 format_number(c.coefficients.pi_c), format_number(c.coefficients.pi_s),
                 format_number(c.cos_term), format_number(c.sin_term)});
      }
    }
    return;
  }
  csv.header({"l", "epsilon", "d_s", "convention", "leading", "S_E_tilde", "correction_sum", "total"});
  for (const auto& r : results) {
    csv.row({std::to_string(r.l), format_number(r.epsilon), format_number(r.d_s), convention_name(r.convention),
             format_number(r.leading), format_number(r.tilde), format_number(r.correction_sum()),
             format_number(r.total)});
  }
}

// ---------------------------------------------------------------- zeta / poles

struct ZetaConfig {
  Common common;
  std::vector<int> ls{3};
  std::vector<double> s_values{1.0};
  double s_imag = 0.0;
};

void cmd_zeta(const ZetaConfig& cfg, std::ostream& out) {
  require_csv(cfg.common, "zeta");
  for (int l : cfg.ls) require_decimation(l, "--l");
  CsvWriter csv(out);
  csv.header({"l", "s_re", "s_im", "zeta_re", "zeta_im", "bracket_re", "bracket_im"});
  for (int l : cfg.ls) {
    const GraphSpec g = make_graph(l);
    for (double s_re : cfg.s_values) {
      const Complex s{s_re, cfg.s_imag};
      const Complex z = zeta_closed(g, s);
      const Complex b = zeta_bracket(g, s);
      csv.row({std::to_string(l), format_number(s.real()), format_number(s.imag()), format_number(z.real()),
               format_number(z.imag()), format_number(b.real()), format_number(b.imag())});
    }
  }
}

struct PolesConfig {
  Common common;
  std::vector<int> ls{3};
  int n_max = kDefaultPoleOrders;
};

void cmd_poles(const PolesConfig& cfg, std::ostream& out) {
  require_csv(cfg.common, "poles");
  for (int l : cfg.ls) require_decimation(l, "--l");
  if (cfg.n_max < 0) throw UsageError("--n-max must be >= 0");
  CsvWriter csv(out);
  csv.header({"l", "n", "s_re", "s_im", "delta_re", "delta_im", "zeta0", "spectral_area"});
  for (int l : cfg.ls) {
    const PoleTower tower = pole_tower(make_graph(l), cfg.n_max);
    for (int n = 0; n <= cfg.n_max; ++n) {
      csv.row({std::to_string(l), std::to_string(n), format_number(tower.poles[n].real()),
               format_number(tower.poles[n].imag()), format_number(tower.delta_re[n]),
               format_number(tower.delta_im[n]), format_number(tower.zeta0), format_number(tower.spectral_area)});
    }
  }
}

// ---------------------------------------------------------------- wiring

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("-o,--output", common.output, "Write data to this file instead of stdout");
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"svg", Format::svg}};
  sub->add_option("--format", common.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("csv");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral zeta, heat-trace and entanglement-entropy tables for diamond graphs D_{2l,l}"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  ScanConfig scan;
  auto* scan_cmd = app.add_subcommand("scan", "Dimensionless entropy S_E eps^{d_s} versus l");
  scan_cmd->add_option("--l-min", scan.l_min, "Smallest decimation factor")->capture_default_str();
  scan_cmd->add_option("--l-max", scan.l_max, "Largest decimation factor")->capture_default_str();
  scan_cmd->add_option("--log-steps", scan.log_steps, "Number of log-spaced integer l values (0: every integer)")
      ->capture_default_str();
  scan_cmd->add_option("--tilde", scan.tilde, "Normalisation: bracket or area")
      ->check(CLI::IsMember({"bracket", "area"}))
      ->capture_default_str();
  add_common(scan_cmd, scan.common);

  CorrectionsConfig corr;
  auto* corr_cmd = app.add_subcommand("corrections", "Log-periodic prefactors Pi_c, Pi_s versus l");
  corr_cmd->add_option("--l-min", corr.l_min, "Smallest decimation factor")->capture_default_str();
  corr_cmd->add_option("--l-max", corr.l_max, "Largest decimation factor")->capture_default_str();
  corr_cmd->add_option("--log-steps", corr.log_steps, "Number of log-spaced integer l values (0: every integer)")
      ->capture_default_str();
  corr_cmd->add_option("--n", corr.orders, "Correction orders, comma separated")->delimiter(',');
  corr_cmd->add_flag("--verify", corr.verify, "Add columns recomputed by numeric integration");
  corr_cmd->add_option("--epsilon", corr.epsilon, "Cutoff used by --verify")->capture_default_str();
  add_common(corr_cmd, corr.common);

  HeatConfig heat;
  auto* heat_cmd = app.add_subcommand("heat", "Heat trace by direct summation and by pole expansion");
  heat_cmd->add_option("--l", heat.l, "Decimation factor")->capture_default_str();
  heat_cmd->add_option("--t-min", heat.t_min, "Smallest diffusion time")->capture_default_str();
  heat_cmd->add_option("--t-max", heat.t_max, "Largest diffusion time")->capture_default_str();
  heat_cmd->add_option("--points", heat.points, "Number of log-spaced times")->capture_default_str();
  heat_cmd->add_option("--n-max", heat.n_max, "Highest pole order in the expansion")->capture_default_str();
  heat_cmd->add_flag("--check-decimation", heat.check_decimation,
                     "Add the residual of K(t/l^2) = 2 theta(t/l^2) + 2l (K(t) - theta(t))");
  add_common(heat_cmd, heat.common);

  EntropyConfig ent;
  auto* ent_cmd = app.add_subcommand("entropy", "Entanglement entropy with log-periodic corrections");
  ent_cmd->add_option("--l", ent.ls, "Decimation factors, comma separated")->delimiter(',');
  ent_cmd->add_option("--epsilon", ent.epsilons, "UV cutoffs, comma separated")->delimiter(',');
  ent_cmd->add_option("--n-max", ent.n_max, "Highest correction order")->capture_default_str();
  ent_cmd->add_option("--convention", ent.convention, "paper or replica")
      ->check(CLI::IsMember({"paper", "replica"}))
      ->capture_default_str();
  ent_cmd->add_option("--tilde", ent.tilde, "Normalisation: bracket or area")
      ->check(CLI::IsMember({"bracket", "area"}))
      ->capture_default_str();
  ent_cmd->add_flag("--detail", ent.detail, "One row per correction order");
  add_common(ent_cmd, ent.common);

  ZetaConfig zeta;
  auto* zeta_cmd = app.add_subcommand("zeta", "Closed-form spectral zeta function");
  zeta_cmd->add_option("--l", zeta.ls, "Decimation factors, comma separated")->delimiter(',');
  zeta_cmd->add_option("--s", zeta.s_values, "Real parts of s, comma separated")->delimiter(',');
  zeta_cmd->add_option("--s-im", zeta.s_imag, "Imaginary part applied to every s")->capture_default_str();
  add_common(zeta_cmd, zeta.common);

  PolesConfig poles;
  auto* poles_cmd = app.add_subcommand("poles", "Pole tower s_n with residue weights");
  poles_cmd->add_option("--l", poles.ls, "Decimation factors, comma separated")->delimiter(',');
  poles_cmd->add_option("--n-max", poles.n_max, "Highest pole order")->capture_default_str();
  add_common(poles_cmd, poles.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidFlags;
  }

  try {
    std::ostringstream data;
    const Common* common = nullptr;
    if (*scan_cmd) {
      cmd_scan(scan, data);
      common = &scan.common;
    } else if (*corr_cmd) {
      cmd_corrections(corr, data);
      common = &corr.common;
    } else if (*heat_cmd) {
      cmd_heat(heat, data);
      common = &heat.common;
    } else if (*ent_cmd) {
      cmd_entropy(ent, data);
      common = &ent.common;
    } else if (*zeta_cmd) {
      cmd_zeta(zeta, data);
      common = &zeta.common;
    } else if (*poles_cmd) {
      cmd_poles(poles, data);
      common = &poles.common;
    } else {
      return kInvalidFlags;
    }
    write_output(common->output, data.str(), out);
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidFlags;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidFlags;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ramified"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ramified::cli
