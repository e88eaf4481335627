// Command-line front end: emits CSV artifacts (tables, convergence
// series, exponent fits, scaling collapses, function-field checks) with
// '#'-prefixed metadata headers.
#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eulerx/characters.hpp"
#include "eulerx/csv.hpp"
#include "eulerx/curves.hpp"
#include "eulerx/ffield.hpp"
#include "eulerx/hurwitz.hpp"
#include "eulerx/lfunc.hpp"
#include "eulerx/primes.hpp"
#include "eulerx/products.hpp"
#include "eulerx/scaling.hpp"

namespace {

using cd = std::complex<double>;
using namespace eulerx;

constexpr const char* kVersion = "eulerx 0.1.0";

// Fundamental discriminants of the quadratic-character table.
const std::vector<long long> kDefaultDiscriminants = {
    -3, -4, -7, -8, -11, -15, -19, -20, -23, 5, 8, 12, 13, 17, 21, 24, 28, 29, 33};

// Cutoff entries are x values ("7919") or prime indices ("p1000").
std::vector<double> parse_cutoffs(const std::vector<std::string>& specs) {
  std::vector<double> out;
  for (const std::string& s : specs) {
    if (s.empty()) throw CLI::ValidationError("--cutoffs", "empty cutoff entry");
    double x;
    if (s[0] == 'p') {
      x = double(nth_prime(std::stoull(s.substr(1))));
    } else {
      x = std::stod(s);
    }
    if (!out.empty() && x <= out.back())
      throw CLI::ValidationError("--cutoffs", "cutoffs must be strictly ascending");
    out.push_back(x);
  }
  return out;
}

struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    os = &file;
  }
};

void common_meta(CsvWriter& w, const std::string& command) {
  w.meta("command", command);
  w.meta("version", kVersion);
  w.meta("em_terms", double(euler_maclaurin_terms()));
}

std::string join_cutoffs(const std::vector<std::string>& specs) {
  std::string s;
  for (const auto& c : specs) {
    if (!s.empty()) s += ' ';
    s += c;
  }
  return s;
}

int cmd_table1(const std::vector<long long>& ds, double cutoff, const std::string& out) {
  Sink sink(out);
  CsvWriter w(*sink.os);
  common_meta(w, "table1");
  w.meta("cutoff", cutoff);
  w.columns({"d", "sqrt2L", "E", "ratio"});
  int failures = 0;
  for (long long d : ds) {
    if (!is_fundamental_discriminant(d)) {
      std::cerr << "table1: d = " << d << " is not a fundamental discriminant\n";
      ++failures;
      continue;
    }
    const auto chi = kronecker_character(d);
    const double s2l = std::sqrt(2.0) * l_value(cd(0.5, 0.0), chi).real();
    const double e = partial_product(cd(0.5, 0.0), chi, cutoff).real();
    w.row({double(d), s2l, e, s2l / e});
  }
  return failures == 0 ? 0 : 1;
}

int cmd_converge(const std::string& char_spec, double sigma, double tmin, double tmax,
                 double dt, const std::vector<std::string>& cutoff_specs,
                 const std::string& out) {
  if (sigma < 0.5) throw CLI::ValidationError("--sigma", "sigma must be >= 1/2");
  const auto chi = parse_character(char_spec);
  const auto cutoffs = parse_cutoffs(cutoff_specs);
  const auto grid = uniform_grid(tmin, tmax, dt);
  const auto series = convergence_grid(sigma, chi, grid, cutoffs);

  Sink sink(out);
  CsvWriter w(*sink.os);
  common_meta(w, "converge");
  w.meta("char", chi.label().empty() ? char_spec : chi.label());
  w.meta("sigma", sigma);
  w.meta("cutoffs", join_cutoffs(cutoff_specs));
  std::vector<std::string> cols = {"t"};
  for (const auto& g : series) {
    cols.push_back("re_" + g.cutoff_label);
    cols.push_back("im_" + g.cutoff_label);
  }
  w.columns(cols);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row = {grid[i]};
    for (const auto& g : series) {
      row.push_back(g.values[i].real());
      row.push_back(g.values[i].imag());
    }
    w.row(row);
  }
  return 0;
}

int cmd_alpha(const std::string& char_spec, double sigma,
              const std::vector<std::string>& cutoff_specs, const std::string& out) {
  const auto chi = parse_character(char_spec);
  const auto cutoffs =
      cutoff_specs.empty() ? default_alpha_cutoffs() : parse_cutoffs(cutoff_specs);
  const auto fit = fit_alpha(cd(sigma, 0.0), chi, cutoffs);

  Sink sink(out);
  CsvWriter w(*sink.os);
  common_meta(w, "alpha");
  w.meta("char", chi.label().empty() ? char_spec : chi.label());
  w.meta("cutoffs", cutoff_specs.empty() ? std::string("default") : join_cutoffs(cutoff_specs));
  w.columns({"sigma", "alpha", "intercept", "residual", "points"});
  w.row({sigma, fit.exponent, fit.intercept, fit.residual, double(fit.sample_points)});
  return 0;
}

int cmd_density(const std::string& char_spec, double x, double tmin, double tmax,
                double dt, const std::string& out) {
  const auto chi = parse_character(char_spec);
  const auto grid = uniform_grid(tmin, tmax, dt);
  const auto rho = rho_x(grid, chi, x);

  Sink sink(out);
  CsvWriter w(*sink.os);
  common_meta(w, "density");
  w.meta("char", chi.label().empty() ? char_spec : chi.label());
  w.meta("x", x);
  w.columns({"t", "rho"});
  for (std::size_t i = 0; i < grid.size(); ++i) w.row({grid[i], rho.values[i]});
  return 0;
}

int cmd_counting(const std::string& char_spec, double tmin, double tmax, double dt,
                 const std::vector<std::string>& cutoff_specs, const std::string& out) {
  const auto chi = parse_character(char_spec);
  const auto cutoffs = parse_cutoffs(cutoff_specs);
  const auto grid = uniform_grid(tmin, tmax, dt);
  const double c = counting_calibration(chi);

  std::vector<GridSeries> series;
  for (double x : cutoffs) series.push_back(n_x(grid, chi, x, c));
  GridSeries ref;
  ref.cutoff_label = "inf";
  for (double t : grid) ref.values.push_back(n_inf_at(t, chi, c));

  Sink sink(out);
  CsvWriter w(*sink.os);
  common_meta(w, "counting");
  w.meta("char", chi.label().empty() ? char_spec : chi.label());
  w.meta("cutoffs", join_cutoffs(cutoff_specs));
  w.meta("c_chi", c);
  std::vector<std::string> cols = {"t"};
  for (const auto& g : series) cols.push_back("n_" + g.cutoff_label);
  cols.push_back("n_inf");
  w.columns(cols);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row = {grid[i]};
    for (const auto& g : series) row.push_back(g.values[i]);
    row.push_back(ref.values[i]);
    w.row(row);
  }
  return 0;
}

int cmd_collapse(const std::string& char_spec, const std::vector<std::string>& cutoff_specs,
                 double zero_tol, const std::string& out) {
  const auto chi = parse_character(char_spec);
  CollapseOptions opt;
  if (!cutoff_specs.empty()) opt.cutoffs = parse_cutoffs(cutoff_specs);
  opt.zero_tolerance = zero_tol;
  const auto res = collapse(chi, opt);

  Sink sink(out);
  CsvWriter w(*sink.os);
  common_meta(w, "collapse");
  w.meta("char", chi.label().empty() ? char_spec : chi.label());
  w.meta("zero_tol", zero_tol);
  w.meta("lambda", res.lambda);
  w.meta("t1", res.t1);
  w.meta("spread", res.spread);
  w.meta("c_chi", res.c_chi);
  w.meta("hit_search_boundary", res.hit_search_boundary ? 1.0 : 0.0);
  std::vector<std::string> cols = {"z"};
  for (const auto& g : res.curves) cols.push_back("n_" + g.cutoff_label);
  w.columns(cols);
  for (std::size_t i = 0; i < res.z_grid.size(); ++i) {
    std::vector<double> row = {res.z_grid[i]};
    for (const auto& g : res.curves) row.push_back(g.values[i]);
    w.row(row);
  }
  return 0;
}

int cmd_ff_verify(const std::string& modulus, int order, double t, int n,
                  const std::string& out) {
  const PolyFq f = fq_parse(modulus);
  const auto [g, g_order] = ff_max_order_element(f);
  if (order < 1 || g_order % std::uint64_t(order) != 0)
    throw CLI::ValidationError(
        "--order", "must divide the maximal unit order " + std::to_string(g_order));
  // chi(g) = e^{2 pi i / order} on a maximal-order generator
  const auto chi = ff_character(f, {{g, 1}}, order);
  const auto rep = verify_ff_drh(chi, t, n);

  Sink sink(out);
  CsvWriter w(*sink.os);
  common_meta(w, "ff-verify");
  w.meta("modulus", modulus);
  w.meta("order", double(order));
  w.meta("t", t);
  w.meta("l_re", rep.l_value.real());
  w.meta("l_im", rep.l_value.imag());
  w.meta("target_re", rep.target.real());
  w.meta("target_im", rep.target.imag());
  w.meta("sqrt2_branch", rep.sqrt2_branch ? 1.0 : 0.0);
  w.meta("decreasing_tail", rep.decreasing_tail ? 1.0 : 0.0);
  w.columns({"n", "deviation"});
  for (std::size_t i = 0; i < rep.deviations.size(); ++i)
    w.row({double(i + 1), rep.deviations[i]});
  return 0;
}

int cmd_curve_drh(bool p1, std::uint64_t q, const std::string& counts_path,
                  const std::string& hyperelliptic, int n, const std::string& out) {
  CurveData data;
  if (!counts_path.empty()) {
    std::ifstream is(counts_path);
    if (!is) throw std::runtime_error("cannot open counts file: " + counts_path);
    data = read_counts(is);
  } else if (!hyperelliptic.empty()) {
    const PolyFq f = fq_parse(hyperelliptic);
    data = count_hyperelliptic(f, std::max(2, f.degree() - 1));
  } else if (p1) {
    data = projective_line(q, 1);
  } else {
    throw CLI::ValidationError("curve-drh",
                               "one of --p1, --counts, --hyperelliptic is required");
  }

  const double limit = theorem2_limit(data);
  Sink sink(out);
  CsvWriter w(*sink.os);
  common_meta(w, "curve-drh");
  w.meta("q", double(data.q));
  w.meta("genus", double(data.genus));
  if (data.dim == 1 && data.alphas.empty())
    w.meta("zeta_half", zeta_from_counts(data).value_at_half());  // signed
  w.meta("limit", limit);
  w.meta("residue", zeta_residue(data));
  w.columns({"n", "compensated_product", "deviation", "residue_ratio"});
  for (int k = 1; k <= n; ++k) {
    const double partial = theorem2_partial(data, k);
    w.row({double(k), partial, partial / limit - 1.0, theorem3_partial(data, k)});
  }
  return 0;
}

int cmd_mertens(int q, int n, const std::string& out) {
  Sink sink(out);
  CsvWriter w(*sink.os);
  common_meta(w, "mertens");
  w.meta("q", double(q));
  w.columns({"n", "sum"});
  for (int k = 2; k <= n; ++k) w.row({double(k), ff_mertens_sum(q, k)});
  return 0;
}

int cmd_jackson(std::uint64_t q, int n, const std::string& out) {
  Sink sink(out);
  CsvWriter w(*sink.os);
  common_meta(w, "jackson");
  w.meta("q", double(q));
  w.columns({"n", "lhs", "rhs", "difference"});
  for (int k = 1; k <= n; ++k) {
    const auto j = jackson_q_integral(q, k);
    w.row({double(k), j.lhs, j.rhs, j.lhs - j.rhs});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet L-function Euler products, scaling collapses, and "
               "function-field analogues; all commands write CSV"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "key=value config file; flags override it");
  app.require_subcommand(1);

  int em_terms = 15;
  app.add_option("--em-terms", em_terms, "Euler-Maclaurin correction terms, in [5, 15]")
      ->check(CLI::Range(5, 15));

  std::string char_spec = "mod:3";
  double sigma = 0.5, tmin = 0.0, tmax = 30.0, dt = 0.05;
  std::vector<std::string> cutoffs;
  std::string out_path, counts_path;
  double zero_tol = 1e-8;

  auto add_char = [&](CLI::App* c) {
    c->add_option("--char", char_spec, "character: d:-4 | mod:3 | mod:7:a | mod:N:g=k/m,...");
  };
  auto add_grid = [&](CLI::App* c) {
    c->add_option("--tmin", tmin, "grid start");
    c->add_option("--tmax", tmax, "grid stop");
    c->add_option("--dt", dt, "grid step")->check(CLI::PositiveNumber);
  };
  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", out_path, "output CSV path (default stdout)");
  };
  auto add_cutoffs = [&](CLI::App* c, const char* help) {
    c->add_option("--cutoffs", cutoffs, help);
  };

  auto* t1 = app.add_subcommand("table1", "sqrt(2)L(1/2) vs the partial Euler product E");
  std::vector<long long> ds = kDefaultDiscriminants;
  double cutoff = 1e7;
  t1->add_option("--d", ds, "fundamental discriminants");
  t1->add_option("--cutoff", cutoff, "Euler product cutoff")->check(CLI::PositiveNumber);
  add_out(t1);

  auto* cv = app.add_subcommand("converge", "Re/Im of L_x on a t-grid per cutoff");
  add_char(cv);
  cv->add_option("--sigma", sigma, "real part of s (>= 1/2)");
  add_grid(cv);
  add_cutoffs(cv, "cutoffs, x values or pN indices (default p10 p100 p1000)");
  add_out(cv);

  auto* al = app.add_subcommand("alpha", "error-exponent fit of delta L_x");
  add_char(al);
  al->add_option("--sigma", sigma, "real part of s");
  add_cutoffs(al, "fit cutoffs (default: every prime in [100, 3e5])");
  add_out(al);

  auto* de = app.add_subcommand("density", "zero-density approximant rho_x(t)");
  add_char(de);
  double x = 541.0;  // p_100
  de->add_option("--x", x, "Euler product cutoff")->check(CLI::PositiveNumber);
  add_grid(de);
  add_out(de);

  auto* co = app.add_subcommand("counting", "counting functions N_x(t) and N_inf(t)");
  add_char(co);
  add_grid(co);
  add_cutoffs(co, "cutoffs, x values or pN indices (default p10 p100 p1000)");
  add_out(co);

  auto* cl = app.add_subcommand("collapse", "finite-size scaling collapse near t_1");
  add_char(cl);
  add_cutoffs(cl, "cutoffs (default p10 p50 p100 p500 p1000)");
  cl->add_option("--zero-tol", zero_tol, "|L| threshold for locating t_1")
      ->check(CLI::Range(1e-14, 1e-2));
  add_out(cl);

  auto* ff = app.add_subcommand("ff-verify", "boundary convergence over F_q[T]");
  std::string modulus = "5:2,0,1";
  int order = 2, n_max = 12;
  ff->add_option("--modulus", modulus, "conductor polynomial, q:c0,c1,...");
  ff->add_option("--order", order, "character order (on a maximal-order generator)");
  double t_height = 0.0;
  ff->add_option("--t", t_height, "height on the critical line");
  ff->add_option("--n", n_max, "maximal irreducible degree")->check(CLI::PositiveNumber);
  add_out(ff);

  auto* cu = app.add_subcommand("curve-drh", "compensated half-line product of a curve");
  bool p1 = false;
  std::uint64_t q = 2;
  std::string hyperelliptic;
  int curve_n = 40;
  cu->add_flag("--p1", p1, "projective line over F_q");
  cu->add_option("--q", q, "field size for --p1");
  cu->add_option("--counts", counts_path, "point-counts file");
  cu->add_option("--hyperelliptic", hyperelliptic, "y^2 = f(x), f as q:c0,c1,...");
  cu->add_option("--n", curve_n, "maximal closed-point degree")->check(CLI::PositiveNumber);
  add_out(cu);

  auto* me = app.add_subcommand("mertens", "Mertens sum over monic irreducibles");
  int mq = 2, mn = 25;
  me->add_option("--q", mq, "field size");
  me->add_option("--n", mn, "degree bound")->check(CLI::Range(2, 1000000));
  add_out(me);

  auto* ja = app.add_subcommand("jackson", "both sides of the q-integral identity");
  std::uint64_t jq = 2;
  int jn = 30;
  ja->add_option("--q", jq, "base q >= 2");
  ja->add_option("--n", jn, "upper limit q^n")->check(CLI::PositiveNumber);
  add_out(ja);

  CLI11_PARSE(app, argc, argv);

  try {
    set_euler_maclaurin_terms(em_terms);
    if (t1->parsed()) return cmd_table1(ds, cutoff, out_path);
    if (cv->parsed()) {
      if (cutoffs.empty()) cutoffs = {"p10", "p100", "p1000"};
      return cmd_converge(char_spec, sigma, tmin, tmax, dt, cutoffs, out_path);
    }
    if (al->parsed()) return cmd_alpha(char_spec, sigma, cutoffs, out_path);
    if (de->parsed()) return cmd_density(char_spec, x, tmin, tmax, dt, out_path);
    if (co->parsed()) {
      if (cutoffs.empty()) cutoffs = {"p10", "p100", "p1000"};
      return cmd_counting(char_spec, tmin, tmax, dt, cutoffs, out_path);
    }
    if (cl->parsed()) return cmd_collapse(char_spec, cutoffs, zero_tol, out_path);
    if (ff->parsed()) return cmd_ff_verify(modulus, order, t_height, n_max, out_path);
    if (cu->parsed()) return cmd_curve_drh(p1, q, counts_path, hyperelliptic, curve_n, out_path);
    if (me->parsed()) return cmd_mertens(mq, mn, out_path);
    if (ja->parsed()) return cmd_jackson(jq, jn, out_path);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
