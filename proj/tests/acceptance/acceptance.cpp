// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "sgtail/bounds.hpp"
#include "sgtail/cffit.hpp"
#include "sgtail/cli/commands.hpp"
#include "sgtail/diagnostics.hpp"
#include "sgtail/dist.hpp"
#include "sgtail/ks.hpp"
#include "sgtail/parallel.hpp"
#include "sgtail/randsum.hpp"
#include "sgtail/specfun.hpp"

using namespace sgtail;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (pass) detail += (detail.empty() ? "" : "; ") + what;
  }
};

std::string num(double v, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double as_double(const cli::Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
  return NAN;
}

std::size_t column_of(const cli::Table& table, const std::string& name) {
  auto it = std::find(table.columns.begin(), table.columns.end(), name);
  return static_cast<std::size_t>(it - table.columns.begin());
}

double round_sig(double v, int digits) {
  if (v == 0.0) return 0.0;
  const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(v)))));
  return std::round(v * scale) / scale;
}

const int kWorkers = 1;

// ---------------------------------------------------------------------------

Outcome deviation_probabilities() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const auto doc = cli::cmd_table1({}, cli::RunConfig{});
  const double elapsed = seconds_since(t0);
  const auto& table = doc.table("table1");
  const auto p_col = column_of(table, "probability"), r_col = column_of(table, "reference");
  out.require(table.rows.size() == 10, "expected 10 rows");
  for (const auto& row : table.rows) {
    const double p = as_double(row[p_col]), ref = as_double(row[r_col]);
    out.require(round_sig(p, 4) == round_sig(ref, 4), "m=" + num(as_double(row[0])) + ": " + num(p, 10) + " vs " + num(ref));
  }
  out.require(elapsed < 10.0, "runtime " + num(elapsed) + " s");
  out.note("10 rows agree to 4 significant digits in " + num(elapsed, 3) + " s");
  return out;
}

Outcome gauss_bound() {
  Outcome out;
  const auto b10 = bounds::gauss_bound(10.0, 1.0);
  const auto b40 = bounds::gauss_bound(40.0, 1.0);
  out.require(b10.bound == 1.0 / 225.0, "bound at 10 sigma is " + num(b10.bound, 17));
  const double e10 = bounds::expected_exceedances(50000, b10), e40 = bounds::expected_exceedances(50000, b40);
  out.require(std::abs(e10 - 222.2) < 0.05, "expected at 10 sigma " + num(e10));
  out.require(std::abs(e40 - 13.9) < 0.05, "expected at 40 sigma " + num(e40));

  cli::BoundsOptions options;
  options.mc_draws = 1000000;
  const auto doc = cli::cmd_bounds(options, cli::RunConfig{});
  const auto& attain = doc.table("attainment");
  for (const auto& row : attain.rows) {
    const double z = as_double(row[column_of(attain, "z")]);
    out.require(std::abs(z) <= 3.0, "d=" + num(as_double(row[0])) + " sigma: z=" + num(z));
  }
  out.require(attain.rows.size() == 2, "missing attainment rows");
  out.note("1/225, " + num(e10, 5) + " and " + num(e40, 4) + " expected; Monte Carlo within 3 SE at 1e6 draws");
  return out;
}

Outcome sum_cf_identity() {
  Outcome out;
  double worst = 0.0;
  for (double m : {0.1, 0.5, 1.0, 2.0, 10.0, 20.0, 50.0, 100.0}) {
    const dist::SymmetrizedGamma law(m);
    for (int n : {1, 2, 3, 5, 10, 25, 50, 100}) {
      for (int i = 0; i <= 400; ++i) {
        const double t = 0.05 * i;
        const double lhs = std::pow(dist::sg_cf(law, t / std::sqrt(static_cast<double>(n))), n);
        worst = std::max(worst, std::abs(lhs - cffit::sum_cf(m, n, t)));
      }
    }
  }
  out.require(worst < 1e-12, "max gap " + num(worst));
  out.note("max gap " + num(worst, 3) + " over 64 (m, n) pairs and t in [0, 20]");
  return out;
}

Outcome normal_lower_bound() {
  Outcome out;
  std::size_t points = 0;
  for (double m : {0.5, 1.0, 2.0, 10.0, 50.0, 100.0}) {
    const dist::SymmetrizedGamma law(m);
    out.require(dist::sg_cf(law, 0.0) == 1.0 && std::exp(-0.0) == 1.0, "equality at t=0 fails for m=" + num(m));
    for (int i = 1; i <= 2000; ++i) {
      const double t = 1e-3 * std::pow(1e4, (i - 1) / 1999.0);  // 1e-3 .. 10
      ++points;
      // ln f = -ln(1 + m t^2)/m must exceed -t^2 strictly.
      const double log_f = -std::log1p(m * t * t) / m;
      const bool ok = log_f > -t * t && dist::sg_cf(law, t) >= std::exp(-t * t);
      if (!ok) out.require(false, "m=" + num(m) + " t=" + num(t));
    }
  }
  out.note(std::to_string(points) + " grid points, strict away from t=0");
  return out;
}

Outcome kurtosis() {
  Outcome out;
  for (double m : {0.1, 0.5, 1.0, 2.0, 10.0, 50.0, 100.0}) {
    const double k = dist::sg_kurtosis(dist::SymmetrizedGamma(m));
    out.require(k == 3.0 * (1.0 + m), "analytic kurtosis for m=" + num(m));
    out.require(k >= 3.0, "kurtosis below 3 for m=" + num(m));
  }
  constexpr std::size_t kDraws = 10000000, kChunk = 1 << 16;
  const dist::SymmetrizedGamma law(10.0);
  const std::size_t chunks = (kDraws + kChunk - 1) / kChunk;
  std::vector<std::vector<double>> parts(chunks);
  parallel_for_index(chunks, kWorkers, [&](std::size_t c) {
    Rng rng = Rng::derive(0x5EED, c);
    parts[c] = dist::sg_sample(law, rng, std::min(kChunk, kDraws - c * kChunk));
  });
  std::vector<double> all;
  all.reserve(kDraws);
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  const double emp = diagnostics::empirical_kurtosis(all);
  out.require(std::abs(emp - 33.0) <= 1.0, "empirical kurtosis " + num(emp));
  // Empirical kurtosis of infinitely divisible samples stays >= 3 as well.
  for (double m : {0.5, 2.0, 50.0}) {
    Rng rng(0x5EED + static_cast<std::uint64_t>(m * 10));
    const double e = diagnostics::empirical_kurtosis(dist::sg_sample(dist::SymmetrizedGamma(m), rng, 200000));
    out.require(e >= 3.0, "empirical kurtosis " + num(e) + " < 3 at m=" + num(m));
  }
  out.note("3(1+m) exact; empirical " + num(emp, 5) + " from 1e7 draws at m=10");
  return out;
}

Outcome hill() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = diagnostics::hill_experiment(10.0, 10000, diagnostics::kAllRules, 100, 0x5EED,
                                                 diagnostics::TailMode::kUpper, kWorkers);
  const double elapsed = seconds_since(t0);
  const double target[] = {0.37, 0.65, 1.39};
  std::string got;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.require(std::abs(rows[i].mean_gamma - target[i]) <= 0.1,
                diagnostics::to_string(rows[i].rule) + " mean " + num(rows[i].mean_gamma));
    got += (i ? ", " : "") + num(rows[i].mean_gamma, 4);
  }
  out.require(elapsed < 60.0, "runtime " + num(elapsed) + " s");
  out.note("means (" + got + ") in " + num(elapsed, 3) + " s");
  return out;
}

Outcome stable_fits() {
  Outcome out;
  struct Row { int n; double alpha, lambda; };
  const Row ref[] = {{1, 1.26906, 0.226565},  {10, 1.80697, 0.720949}, {20, 1.89192, 0.835951},
                     {30, 1.92487, 0.883786}, {40, 1.94241, 0.910016}, {50, 1.9533, 0.926583},
                     {60, 1.96073, 0.937998}, {70, 1.96612, 0.946341}, {80, 1.97021, 0.952704},
                     {90, 1.97341, 0.957718}, {100, 1.976, 0.961771}};
  std::vector<int> n_list;
  for (const auto& r : ref) n_list.push_back(r.n);
  const auto fits = cffit::table3_sweep(20.0, n_list, cffit::FitWindow{});
  double worst_a = 0.0, worst_l = 0.0;
  for (std::size_t i = 0; i < fits.size(); ++i) {
    worst_a = std::max(worst_a, std::abs(fits[i].alpha - ref[i].alpha));
    worst_l = std::max(worst_l, std::abs(fits[i].lambda - ref[i].lambda));
    if (i > 0) {
      out.require(fits[i].alpha > fits[i - 1].alpha, "alpha not increasing at n=" + std::to_string(ref[i].n));
      out.require(fits[i].lambda > fits[i - 1].lambda, "lambda not increasing at n=" + std::to_string(ref[i].n));
    }
  }
  out.require(worst_a <= 0.05, "alpha deviation " + num(worst_a));
  out.require(worst_l <= 0.1, "lambda deviation " + num(worst_l));
  out.require(std::abs(fits.front().alpha - 1.269) < 0.005 && std::abs(fits.front().lambda - 0.2266) < 0.005,
              "first row (" + num(fits.front().alpha) + ", " + num(fits.front().lambda) + ")");
  out.require(std::abs(fits.back().alpha - 1.976) < 0.005 && std::abs(fits.back().lambda - 0.9618) < 0.005,
              "last row (" + num(fits.back().alpha) + ", " + num(fits.back().lambda) + ")");
  out.note("method " + cffit::to_string(fits.front().method) + "; max deviation alpha " + num(worst_a, 3) + ", lambda " +
           num(worst_l, 3));
  return out;
}

Outcome random_sum_convergence() {
  Outcome out;
  const std::vector<double> schedule = {0.1, 0.01, 0.001};
  const auto uni = randsum::theorem1_experiment(2, randsum::uniform_component(2.0), schedule, 100000, 0x5EED, kWorkers);
  std::string trace;
  for (std::size_t i = 0; i < uni.size(); ++i) {
    if (i > 0) out.require(uni[i].ks < uni[i - 1].ks, "uniform KS not decreasing at p=" + num(uni[i].p));
    trace += (i ? " > " : "") + num(uni[i].ks, 3);
  }
  out.require(uni.back().ks < 0.01, "final uniform KS " + num(uni.back().ks));
  const auto sg = randsum::theorem1_experiment(2, randsum::sg_component(2.0), schedule, 100000, 0x5EED, kWorkers);
  for (const auto& row : sg) {
    out.require(row.ks < row.critical_1pct, "sg KS " + num(row.ks) + " at p=" + num(row.p));
  }
  out.note("uniform KS " + trace + "; sg summands below " + num(sg.front().critical_1pct, 3) + " at every p");
  return out;
}

Outcome prelimit() {
  Outcome out;
  cli::Fig2Options options;  // m=100, n=10000, 1000 replicates, exponent 1.83
  const auto doc = cli::cmd_fig2(options, cli::RunConfig{});
  const auto& fit = doc.table("fit");
  const double alpha = as_double(fit.rows[0][column_of(fit, "alpha")]);
  const double lambda = as_double(fit.rows[0][column_of(fit, "lambda")]);
  const double ks = as_double(fit.rows[0][column_of(fit, "ks")]);
  out.require(alpha >= 1.7 && alpha <= 1.9, "fitted alpha " + num(alpha) + " (lambda " + num(lambda) + ") outside [1.7, 1.9]");
  out.require(ks <= 0.05, "KS " + num(ks));
  out.note("alpha " + num(alpha, 4) + ", lambda " + num(lambda, 4) + ", KS " + num(ks, 3));
  if (!out.pass) out.detail += " (KS " + num(ks, 3) + ")";
  return out;
}

Outcome distribution_properties() {
  Outcome out;
  // Normalization: the substitution x = u^m removes the singularity at 0.
  double worst_norm = 0.0;
  for (double m : {0.5, 1.0, 2.0, 10.0, 50.0, 100.0}) {
    const dist::SymmetrizedGamma law(m);
    const double k = std::max(1.0, m);
    auto central = [&](double u) {
      const double x = std::pow(u, k);
      return x > 0.0 ? dist::sg_pdf(law, x) * k * std::pow(u, k - 1.0) : 0.0;
    };
    specfun::QuadratureSpec spec{1e-14, 1e-12, 5000};
    const double inner = specfun::integrate(central, 0.0, 1.0, spec).value;
    const double outer = specfun::integrate([&](double x) { return dist::sg_pdf(law, x); }, 1.0, specfun::kInfinity, spec).value;
    worst_norm = std::max(worst_norm, std::abs(2.0 * (inner + outer) - 1.0));
  }
  out.require(worst_norm < 1e-8, "normalization error " + num(worst_norm));

  // Density against independent characteristic-function inversion.
  struct Point { double m, x, pdf; };
  const Point inversion[] = {{10, 1, 0.0592479614235358145},
                             {10, 0.5, 0.124965437412266711},
                             {1, 1, 0.183939720585721161},
                             {50, 2, 0.0072066114729001016}};
  double worst_pdf = 0.0;
  for (const auto& p : inversion) {
    worst_pdf = std::max(worst_pdf, std::abs(dist::sg_pdf(dist::SymmetrizedGamma(p.m), p.x) - p.pdf));
  }
  out.require(worst_pdf < 1e-7, "pdf vs inversion " + num(worst_pdf));

  // Sampler against the analytic CDF.
  double worst_ks_ratio = 0.0;
  for (double m : {1.0, 10.0}) {
    const dist::SymmetrizedGamma law(m);
    constexpr std::size_t kDraws = 1000000, kChunk = 1 << 16;
    const std::size_t chunks = (kDraws + kChunk - 1) / kChunk;
    std::vector<std::vector<double>> parts(chunks);
    parallel_for_index(chunks, kWorkers, [&](std::size_t c) {
      Rng rng = Rng::derive(0xC0FFEE + static_cast<std::uint64_t>(m), c);
      parts[c] = dist::sg_sample(law, rng, std::min(kChunk, kDraws - c * kChunk));
    });
    std::vector<double> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    const auto cdf = dist::sg_cdf_sorted(law, all);
    const double ks = stats::ks_statistic_from_cdf(all, cdf);
    const double crit = stats::ks_critical_value(all.size(), 0.01);
    worst_ks_ratio = std::max(worst_ks_ratio, ks / crit);
    out.require(ks < crit, "sampler KS " + num(ks) + " >= " + num(crit) + " at m=" + num(m));
  }

  // Stable CDF against closed forms.
  double worst_stable = 0.0;
  for (double lambda : {0.5, 1.0, 2.0}) {
    const dist::SymmetricStable cauchy(1.0, lambda), normal(2.0, lambda);
    for (double x : {-10.0, -3.0, -1.0, -0.2, 0.0, 0.3, 1.0, 2.5, 7.0, 25.0}) {
      worst_stable = std::max(worst_stable,
                              std::abs(dist::stable_cdf(cauchy, x) - (0.5 + std::atan(x / lambda) / M_PI)));
      worst_stable = std::max(worst_stable,
                              std::abs(dist::stable_cdf(normal, x) - dist::normal_cdf(x / std::sqrt(2.0 * lambda))));
    }
  }
  out.require(worst_stable < 1e-8, "stable CDF error " + num(worst_stable));
  out.note("normalization " + num(worst_norm, 2) + ", pdf " + num(worst_pdf, 2) + ", KS/critical " +
           num(worst_ks_ratio, 3) + ", stable " + num(worst_stable, 2));
  return out;
}

Outcome nu_sampler() {
  Outcome out;
  constexpr std::size_t kDraws = 200000;
  double worst_z = 0.0;
  for (int m : {1, 2, 5}) {
    for (double p : {0.5, 0.1, 0.01}) {
      const randsum::NuFamily family(m, p);
      std::vector<std::uint64_t> nu(kDraws);
      Rng rng = Rng::derive(0xAB5EED, static_cast<std::uint64_t>(m * 1000 + p * 100));
      for (auto& v : nu) v = randsum::nu_sample(family, rng);
      const double n = static_cast<double>(kDraws);
      double mean = 0.0, sq = 0.0;
      for (auto v : nu) mean += static_cast<double>(v);
      mean /= n;
      for (auto v : nu) sq += (static_cast<double>(v) - mean) * (static_cast<double>(v) - mean);
      const double se = std::sqrt(sq / (n - 1.0) / n);
      const double zm = std::abs(mean - 1.0 / p) / se;
      worst_z = std::max(worst_z, zm);
      out.require(zm <= 3.0, "mean m=" + std::to_string(m) + " p=" + num(p) + ": z=" + num(zm));
      for (double z : {0.3, 0.6, 0.9}) {
        double s = 0.0, s2 = 0.0;
        for (auto v : nu) {
          const double w = std::pow(z, static_cast<double>(v));
          s += w;
          s2 += w * w;
        }
        const double est = s / n;
        const double pse = std::sqrt(std::max(s2 / n - est * est, 0.0) / n);
        const double exact = randsum::nu_pgf(family, z);
        const double zz = pse > 0.0 ? std::abs(est - exact) / pse : (est == exact ? 0.0 : INFINITY);
        worst_z = std::max(worst_z, zz);
        out.require(zz <= 3.0, "pgf m=" + std::to_string(m) + " p=" + num(p) + " z=" + num(z) + ": z-score " + num(zz));
      }
    }
  }
  out.note("worst z-score " + num(worst_z, 3) + " over 9 (m, p) pairs");
  return out;
}

Outcome tail_ratio() {
  Outcome out;
  const double fixtures[][2] = {{1, 1.280518617795966},  {1.5, 1.3521327507844669}, {2, 1.4211415886410382},
                                {3, 1.5581525882184477}, {5, 1.8454950833031794},  {7.5, 2.251398141520338},
                                {10, 2.7277146339119716}, {15, 3.9632200592525327}, {20, 5.7177448679263802},
                                {25, 8.2179944532792666}, {30, 11.784589873127488}, {35, 16.873651669732427},
                                {40, 24.134992729343878}, {45, 34.494727189644052}, {50, 49.272869128830974}};
  std::vector<double> grid;
  for (const auto& f : fixtures) grid.push_back(f[0]);
  const dist::SymmetrizedGamma law(50.0);
  const auto curve = diagnostics::tail_ratio_curve([&](double x) { return dist::sg_survival(law, x); }, grid, 1.5);
  double worst = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double got = curve[i].ratio.value_or(NAN);
    const double rel = std::abs(got - fixtures[i][1]) / fixtures[i][1];
    worst = std::max(worst, std::isfinite(rel) ? rel : INFINITY);
  }
  out.require(worst < 1e-6, "m=50 curve relative error " + num(worst));

  // Pareto survival obtained by integrating its density.
  const double alpha = 1.7;
  auto pareto = [&](double x) {
    return specfun::integrate([&](double u) { return alpha * std::pow(u, -alpha - 1.0); }, x, specfun::kInfinity).value;
  };
  std::vector<double> xs;
  for (int i = 0; i < 40; ++i) xs.push_back(1.0 + 2.5 * i);
  double worst_pareto = 0.0;
  for (const auto& point : diagnostics::tail_ratio_curve(pareto, xs, 1.5)) {
    worst_pareto = std::max(worst_pareto, std::abs(*point.ratio / std::pow(1.5, alpha) - 1.0));
  }
  out.require(worst_pareto < 1e-9, "pareto relative error " + num(worst_pareto));

  double worst_exp = 0.0;
  for (const auto& point : diagnostics::tail_ratio_curve([](double x) { return std::exp(-x); }, xs, 1.5)) {
    worst_exp = std::max(worst_exp, std::abs(*point.ratio / std::exp(0.5 * point.x) - 1.0));
  }
  out.require(worst_exp < 1e-12, "exponential relative error " + num(worst_exp));
  out.note("m=50 rel " + num(worst, 2) + ", pareto " + num(worst_pareto, 2) + ", exponential " + num(worst_exp, 2));
  return out;
}

Outcome determinism() {
  Outcome out;
  const char* csv_path = "acceptance_audit_input.csv";
  {
    Rng rng(0x5EED);
    const auto sample = dist::sg_sample(dist::SymmetrizedGamma(10.0), rng, 5000);
    std::FILE* f = std::fopen(csv_path, "w");
    std::fprintf(f, "date,ret\n");
    for (std::size_t i = 0; i < sample.size(); ++i) std::fprintf(f, "%zu,%.17g\n", i, sample[i]);
    std::fclose(f);
  }
  using Runner = std::function<cli::ReportDocument(const cli::RunConfig&)>;
  const std::vector<std::pair<std::string, Runner>> commands = {
      {"table1", [](const cli::RunConfig& c) { return cli::cmd_table1({}, c); }},
      {"table3", [](const cli::RunConfig& c) { return cli::cmd_table3({}, c); }},
      {"fig1", [](const cli::RunConfig& c) { return cli::cmd_fig1({}, c); }},
      {"fig2",
       [](const cli::RunConfig& c) {
         cli::Fig2Options o;
         o.n = 2000;
         o.replicates = 300;
         return cli::cmd_fig2(o, c);
       }},
      {"hill",
       [](const cli::RunConfig& c) {
         cli::HillOptions o;
         o.sims = 20;
         return cli::cmd_hill(o, c);
       }},
      {"bounds",
       [](const cli::RunConfig& c) {
         cli::BoundsOptions o;
         o.mc_draws = 300000;
         return cli::cmd_bounds(o, c);
       }},
      {"audit",
       [&](const cli::RunConfig& c) {
         cli::AuditOptions o;
         o.input_path = csv_path;
         return cli::cmd_audit(o, c);
       }},
      {"randsum",
       [](const cli::RunConfig& c) {
         cli::RandsumOptions o;
         o.replicates = 20000;
         return cli::cmd_randsum(o, c);
       }},
  };
  for (const auto& [name, run] : commands) {
    cli::RunConfig one, many;
    one.seed = many.seed = 0xD1CE;
    one.workers = 1;
    many.workers = 4;
    const auto a = run(one), b = run(many);
    for (auto fmt : {cli::OutputFormat::kCsv, cli::OutputFormat::kJson, cli::OutputFormat::kTable}) {
      out.require(cli::render_payload(a, fmt) == cli::render_payload(b, fmt),
                  name + " " + cli::to_string(fmt) + " payload differs");
    }
  }
  std::remove(csv_path);
  out.note("8 subcommands, workers 1 vs 4, csv/json/table payloads identical");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"ten-sigma deviation probabilities", deviation_probabilities},
      {"Gauss bound and its attainment", gauss_bound},
      {"normalized-sum CF identity", sum_cf_identity},
      {"CF dominates exp(-t^2)", normal_lower_bound},
      {"kurtosis", kurtosis},
      {"Hill experiment", hill},
      {"stable fits to normalized-sum CFs", stable_fits},
      {"random-sum convergence", random_sum_convergence},
      {"pre-limit stable approximation", prelimit},
      {"distribution correctness", distribution_properties},
      {"nu_p sampler", nu_sampler},
      {"tail-ratio curve", tail_ratio},
      {"determinism across workers", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failures;
    std::printf("%s %2zu %-36s %s [%.1f s]\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                outcome.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
