// Command-line front end: deterministic regression tables and plot-ready
// data for the band-width toolkit. All configuration is by flags; output is
// CSV or JSON with fixed 12-significant-digit formatting.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "scband/acceptance.hpp"
#include "scband/bands.hpp"
#include "scband/gauss.hpp"
#include "scband/report.hpp"
#include "scband/reach.hpp"
#include "scband/smoothing.hpp"
#include "scband/torus.hpp"
#include "scband/warped.hpp"

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts) {
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts->out_path,
                  "write the report to PATH (atomic) instead of stdout");
}

// Writes via a temporary file and rename so readers never see partial output.
void emit(const std::string& text, const OutputOptions& opts) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  const std::string tmp = opts.out_path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file " + tmp);
    os << text;
  }
  if (std::rename(tmp.c_str(), opts.out_path.c_str()) != 0)
    throw std::invalid_argument("cannot rename output into place");
}

void emit(const scband::Report& report, const OutputOptions& opts) {
  emit(opts.format == "json" ? scband::to_json(report)
                             : scband::to_csv(report),
       opts);
}

void add_param(scband::Report* r, const std::string& key, double value) {
  r->params.emplace_back(key, scband::format_sig12(value));
}

scband::BandClass parse_band_class(const std::string& name) {
  if (name == "overtorical") return scband::BandClass::overtorical;
  if (name == "iso-enlargeable") return scband::BandClass::iso_enlargeable;
  if (name == "iso-enlargeable-compact")
    return scband::BandClass::iso_enlargeable_compact;
  if (name == "sys") return scband::BandClass::sys;
  if (name == "syse") return scband::BandClass::syse;
  throw std::invalid_argument("unknown band class " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "scband: scalar-curvature band-width toolkit.\n"
      "Widths, Riccati profiles, recursive torus focal radii, hypersurface\n"
      "curvature bookkeeping, and smoothing asymptotics, emitted as\n"
      "deterministic CSV/JSON tables."};
  app.require_subcommand(1);

  // ---- width ----------------------------------------------------------
  auto* width_cmd = app.add_subcommand(
      "width",
      "Band-width bound k*pi*sqrt((n-1)/(sigma*n)) per topological class.\n"
      "Columns: n, sigma, width (k = 2 overtorical and compact\n"
      "iso-enlargeable, 4 iso-enlargeable and sys, 8 syse).");
  std::string cls = "overtorical";
  int width_n = 3;
  double width_sigma = 6.0;
  OutputOptions width_out;
  width_cmd->add_option("--class", cls, "band class")
      ->check(CLI::IsMember({"overtorical", "iso-enlargeable",
                             "iso-enlargeable-compact", "sys", "syse"}))
      ->capture_default_str();
  width_cmd->add_option("--n", width_n, "dimension")->required();
  width_cmd->add_option("--sigma", width_sigma, "scalar curvature bound")
      ->required();
  add_output_flags(width_cmd, &width_out);

  // ---- riccati --------------------------------------------------------
  auto* riccati_cmd = app.add_subcommand(
      "riccati",
      "Integrates -2f' - n f^2 = sigma/(n-1) from (t0, f0) both ways.\n"
      "Columns: t, f. Blow-up locations are reported in params.");
  int ric_n = 3;
  double ric_sigma = 6.0, ric_f0 = 0.0, ric_t0 = 0.0;
  OutputOptions ric_out;
  riccati_cmd->add_option("--n", ric_n, "dimension")->required();
  riccati_cmd->add_option("--sigma", ric_sigma, "constant curvature bound")
      ->required();
  riccati_cmd->add_option("--f0", ric_f0, "initial value of f = phi'/phi")
      ->capture_default_str();
  riccati_cmd->add_option("--t0", ric_t0, "anchor point")
      ->capture_default_str();
  add_output_flags(riccati_cmd, &ric_out);

  // ---- band -----------------------------------------------------------
  auto* band_cmd = app.add_subcommand(
      "band",
      "Maximal band width for constant sigma with boundary mean-curvature\n"
      "bounds (outward normals). Columns: n, sigma, m_minus, m_plus,\n"
      "status (0 feasible, 1 unbounded, 2 infeasible, 3 degenerate), width.");
  int band_n = 3;
  double band_sigma = 6.0;
  double band_m_minus = kNaN, band_m_plus = kNaN;
  OutputOptions band_out;
  band_cmd->add_option("--n", band_n, "dimension")->required();
  band_cmd->add_option("--sigma", band_sigma, "constant curvature bound")
      ->required();
  band_cmd->add_option("--m-minus", band_m_minus,
                       "lower bound for mean.curv of the bottom boundary "
                       "(omit for unconstrained)");
  band_cmd->add_option("--m-plus", band_m_plus,
                       "lower bound for mean.curv of the top boundary "
                       "(omit for unconstrained)");
  add_output_flags(band_cmd, &band_out);

  // ---- torus ----------------------------------------------------------
  auto* torus_cmd = app.add_subcommand(
      "torus",
      "Recursive focal-radius table (columns: n, r, r*n^{3/2}) or a sampled\n"
      "realization (--cloud: CSV of points and outward normal frames).");
  int torus_table = 0;
  std::string torus_cloud;
  int torus_resolution = 64;
  OutputOptions torus_out;
  torus_cmd->add_option("--table", torus_table, "emit r(n) for n = 2..N");
  torus_cmd->add_option("--cloud", torus_cloud, "construction to sample")
      ->check(CLI::IsMember({"circle", "product", "y4"}));
  torus_cmd
      ->add_option("--resolution", torus_resolution, "samples per angle")
      ->capture_default_str();
  add_output_flags(torus_cmd, &torus_out);

  // ---- lipschitz ------------------------------------------------------
  auto* lip_cmd = app.add_subcommand(
      "lipschitz",
      "Lower Lipschitz bound (d/2pi)*sqrt(sigma*n/(n-1)) for nonzero-degree\n"
      "maps to a sphere containing a toric band of width d.\n"
      "Columns: n, sigma, d, lipschitz.");
  int lip_n = 3;
  double lip_sigma = 6.0, lip_d = M_PI / 2.0;
  OutputOptions lip_out;
  lip_cmd->add_option("--n", lip_n, "dimension")->required();
  lip_cmd->add_option("--sigma", lip_sigma, "scalar curvature bound")
      ->required();
  lip_cmd->add_option("--d", lip_d, "band width in the target sphere")
      ->capture_default_str();
  add_output_flags(lip_cmd, &lip_out);

  // ---- gauss ----------------------------------------------------------
  auto* gauss_cmd = app.add_subcommand(
      "gauss",
      "With --rho: distance-sphere data in S^n (columns: n, rho,\n"
      "focal_radius, curvature, sc_umbilic, sc_round_sphere).\n"
      "Without: curvature lower bounds sqrt(n-k-1)/k per codimension k.");
  int gauss_n = 3;
  double gauss_rho = kNaN;
  OutputOptions gauss_out;
  gauss_cmd->add_option("--n", gauss_n, "ambient sphere dimension")
      ->required();
  gauss_cmd->add_option("--rho", gauss_rho, "distance-sphere radius in (0,1]");
  add_output_flags(gauss_cmd, &gauss_out);

  // ---- bend -----------------------------------------------------------
  auto* bend_cmd = app.add_subcommand(
      "bend",
      "Bending family h + t*A_new + (t^2/2eps)(A_old - A_new) on a 3-torus\n"
      "fiber with A_new = 0, A_old = diag(1,0,0). With --eps: profile of Sc\n"
      "across (0, eps); without: the eps-ladder at t = eps/2.\n"
      "Columns: eps, t, sc, eps_times_sc.");
  double bend_eps = kNaN;
  OutputOptions bend_out;
  bend_cmd->add_option("--eps", bend_eps, "family parameter");
  add_output_flags(bend_cmd, &bend_out);

  // ---- round ----------------------------------------------------------
  auto* round_cmd = app.add_subcommand(
      "round",
      "Edge-rounding tube of the flat ball B^m(rho) x {0}: principal\n"
      "curvatures cos(theta)/(rho-eps+eps*cos(theta)) and 1/eps, Sc by the\n"
      "flat-ambient Gauss identity. Columns: theta, lambda_sphere,\n"
      "lambda_arc, sc, eps_times_sc, fd_residual.");
  int round_m = 3;
  double round_rho = 1.0, round_eps = 1e-3, round_theta = kNaN;
  OutputOptions round_out;
  round_cmd->add_option("--m", round_m, "dimension of V")
      ->capture_default_str();
  round_cmd->add_option("--rho", round_rho, "ball radius")
      ->capture_default_str();
  round_cmd->add_option("--eps", round_eps, "tube radius")->required();
  round_cmd->add_option("--theta", round_theta,
                        "arc angle; omit for a sweep over [0, pi/2]");
  add_output_flags(round_cmd, &round_out);

  // ---- decay ----------------------------------------------------------
  auto* decay_cmd = app.add_subcommand(
      "decay",
      "Quadratic-decay metric dt^2 + t^{2 alpha} dtheta^2: minimum of Sc\n"
      "over the R-ball vs the 4pi^2/R^2 bound. Columns: alpha, R, min_sc,\n"
      "closed_form, bound, within_bound.");
  double decay_alpha = 0.5, decay_radius = 10.0;
  OutputOptions decay_out;
  decay_cmd->add_option("--alpha", decay_alpha, "exponent in (0,1)")
      ->required();
  decay_cmd->add_option("--R", decay_radius, "ball radius")
      ->capture_default_str();
  add_output_flags(decay_cmd, &decay_out);

  // ---- verify-all -----------------------------------------------------
  auto* verify_cmd = app.add_subcommand(
      "verify-all", "Run the acceptance battery; one PASS/FAIL line per "
                    "criterion.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (width_cmd->parsed()) {
      scband::Report r;
      r.command = "width";
      r.params.emplace_back("class", cls);
      add_param(&r, "n", width_n);
      add_param(&r, "sigma", width_sigma);
      r.columns = {"n", "sigma", "width"};
      r.rows = {{static_cast<double>(width_n), width_sigma,
                 scband::width_bound(parse_band_class(cls), width_n,
                                     width_sigma)}};
      r.row_refs = {"width <= k*pi*sqrt((n-1)/(sigma*n))"};
      emit(r, width_out);
    } else if (riccati_cmd->parsed()) {
      const auto spec = scband::BandSpec::constant_sigma(ric_n, ric_sigma);
      const auto sol = scband::riccati_two_sided(spec, ric_f0, ric_t0);
      scband::Report r;
      r.command = "riccati";
      add_param(&r, "n", ric_n);
      add_param(&r, "sigma", ric_sigma);
      add_param(&r, "f0", ric_f0);
      add_param(&r, "t0", ric_t0);
      add_param(&r, "blow_up_low",
                sol.blow_up_low ? *sol.blow_up_low : kNaN);
      add_param(&r, "blow_up_high",
                sol.blow_up_high ? *sol.blow_up_high : kNaN);
      r.columns = {"t", "f"};
      for (std::size_t i = 0; i < sol.ts.size(); ++i) {
        r.rows.push_back({sol.ts[i], sol.fs[i]});
        r.row_refs.emplace_back("-2f' - n*f^2 = sigma/(n-1)");
      }
      emit(r, ric_out);
    } else if (band_cmd->parsed()) {
      std::optional<double> m_minus, m_plus;
      if (!std::isnan(band_m_minus)) m_minus = band_m_minus;
      if (!std::isnan(band_m_plus)) m_plus = band_m_plus;
      const auto result = scband::max_band_width(
          scband::BandSpec::constant_sigma(band_n, band_sigma, m_minus,
                                           m_plus));
      scband::Report r;
      r.command = "band";
      add_param(&r, "n", band_n);
      add_param(&r, "sigma", band_sigma);
      const char* status_name = "feasible";
      double status = 0.0, width = kNaN;
      switch (result.status) {
        case scband::BandFeasibility::feasible:
          width = result.width;
          break;
        case scband::BandFeasibility::unbounded:
          status = 1.0;
          status_name = "unbounded";
          break;
        case scband::BandFeasibility::infeasible:
          status = 2.0;
          status_name = "infeasible";
          break;
        case scband::BandFeasibility::degenerate:
          status = 3.0;
          status_name = "degenerate";
          break;
      }
      r.params.emplace_back("status", status_name);
      r.columns = {"n", "sigma", "m_minus", "m_plus", "status", "width"};
      r.rows = {{static_cast<double>(band_n), band_sigma, band_m_minus,
                 band_m_plus, status, width}};
      r.row_refs = {"shooting for f' = -(sigma/(n-1) + n*f^2)/2 with "
                    "f(-l) <= -M-/(n-1), f(l) >= M+/(n-1)"};
      emit(r, band_out);
    } else if (torus_cmd->parsed()) {
      if (!torus_cloud.empty()) {
        scband::TorusConstruction node = [&] {
          if (torus_cloud == "circle")
            return scband::TorusConstruction::circle();
          if (torus_cloud == "product")
            return scband::TorusConstruction::pair_of(
                scband::TorusConstruction::circle(),
                scband::TorusConstruction::circle());
          return scband::TorusConstruction::y_construction(4);
        }();
        const auto cloud = scband::embed_and_sample(node, torus_resolution);
        std::ostringstream os;
        cloud.write_csv(os);
        emit(os.str(), torus_out);
      } else {
        if (torus_table < 2)
          throw std::invalid_argument("torus needs --table N or --cloud");
        const auto table = scband::focal_radius_table(torus_table);
        scband::Report r;
        r.command = "torus";
        add_param(&r, "table", torus_table);
        r.columns = {"n", "r", "r_times_n_to_3_2"};
        for (const auto& [n, radius] : table) {
          r.rows.push_back({static_cast<double>(n), radius,
                            radius * std::pow(n, 1.5)});
          r.row_refs.emplace_back(
              "r(2n) = r(n)/(2*sqrt(2)+r(n)); odd steps pair (c1*r1 = c2*r2, "
              "c1^2+c2^2 = 1) then offset r/(2+r)");
        }
        emit(r, torus_out);
      }
    } else if (lip_cmd->parsed()) {
      scband::Report r;
      r.command = "lipschitz";
      add_param(&r, "n", lip_n);
      add_param(&r, "sigma", lip_sigma);
      add_param(&r, "d", lip_d);
      r.columns = {"n", "sigma", "d", "lipschitz"};
      r.rows = {{static_cast<double>(lip_n), lip_sigma, lip_d,
                 scband::lipschitz_lower_bound(lip_n, lip_sigma, lip_d)}};
      r.row_refs = {"Lip(f) >= (d/(2*pi))*sqrt(sigma*n/(n-1))"};
      emit(r, lip_out);
    } else if (gauss_cmd->parsed()) {
      scband::Report r;
      r.command = "gauss";
      add_param(&r, "n", gauss_n);
      if (!std::isnan(gauss_rho)) {
        add_param(&r, "rho", gauss_rho);
        const auto data = scband::subsphere_data(gauss_rho);
        scband::PrincipalCurvatures umbilic{
            std::vector<double>(gauss_n - 1, data.curvature),
            scband::Ambient::sphere, gauss_n};
        r.columns = {"n",         "rho",        "focal_radius",
                     "curvature", "sc_umbilic", "sc_round_sphere"};
        r.rows = {{static_cast<double>(gauss_n), gauss_rho,
                   data.focal_radius, data.curvature,
                   scband::gauss_scalar_curvature(umbilic),
                   (gauss_n - 1.0) * (gauss_n - 2.0) / (gauss_rho * gauss_rho)}};
        r.row_refs = {"rad = arcsin(rho), curv = sqrt(1-rho^2)/rho, "
                      "Sc(Y) = Sc(S^{n-1}) + (sum c)^2 - sum c^2"};
      } else {
        r.columns = {"n", "k", "curvature_lower_bound"};
        for (int k = 1; k <= gauss_n - 1; ++k) {
          r.rows.push_back({static_cast<double>(gauss_n),
                            static_cast<double>(k),
                            scband::curvature_lower_bound(gauss_n, k)});
          r.row_refs.emplace_back("sup |c_ij| >= sqrt(n-k-1)/k");
        }
      }
      emit(r, gauss_out);
    } else if (bend_cmd->parsed()) {
      scband::Report r;
      r.command = "bend";
      r.columns = {"eps", "t", "sc", "eps_times_sc"};
      const auto family = [](double eps) {
        return scband::BendingFamily({1.0, 1.0, 1.0}, {0.0, 0.0, 0.0},
                                     {1.0, 0.0, 0.0}, eps);
      };
      if (!std::isnan(bend_eps)) {
        add_param(&r, "eps", bend_eps);
        const auto fam = family(bend_eps);
        for (int i = 1; i < 16; ++i) {
          const double t = bend_eps * i / 16.0;
          const double sc = scband::bending_scalar_curvature(fam, t);
          r.rows.push_back({bend_eps, t, sc, bend_eps * sc});
          r.row_refs.emplace_back(
              "Sc = -trace(A_old - A_new)/eps + O(1)");
        }
      } else {
        for (double eps : {1e-2, 1e-3, 1e-4}) {
          const double t = eps / 2.0;
          const double sc = scband::bending_scalar_curvature(family(eps), t);
          r.rows.push_back({eps, t, sc, eps * sc});
          r.row_refs.emplace_back(
              "Sc = -trace(A_old - A_new)/eps + O(1)");
        }
      }
      emit(r, bend_out);
    } else if (round_cmd->parsed()) {
      scband::Report r;
      r.command = "round";
      add_param(&r, "m", round_m);
      add_param(&r, "rho", round_rho);
      add_param(&r, "eps", round_eps);
      r.columns = {"theta",        "lambda_sphere", "lambda_arc",
                   "sc",           "eps_times_sc",  "fd_residual"};
      const auto push = [&](double theta) {
        const auto tube =
            scband::rounding_tube({round_m, round_rho, round_eps, theta});
        r.rows.push_back({theta, tube.lambdas.empty() ? kNaN : tube.lambdas[0],
                          tube.lambda_n, tube.sc, round_eps * tube.sc,
                          tube.fd_residual});
        r.row_refs.emplace_back(
            "lambda_i = cos(theta)/(rho-eps+eps*cos(theta)), "
            "lambda_n = 1/eps, Sc = (sum lambda)^2 - sum lambda^2");
      };
      if (!std::isnan(round_theta)) {
        push(round_theta);
      } else {
        for (int i = 0; i <= 8; ++i) push(M_PI / 2.0 * i / 8.0);
      }
      emit(r, round_out);
    } else if (decay_cmd->parsed()) {
      const auto report =
          scband::quadratic_decay_profile(decay_alpha, decay_radius);
      scband::Report r;
      r.command = "decay";
      add_param(&r, "alpha", decay_alpha);
      add_param(&r, "R", decay_radius);
      r.columns = {"alpha", "R", "min_sc", "closed_form", "bound",
                   "within_bound"};
      r.rows = {{decay_alpha, decay_radius, report.min_sc,
                 2.0 * decay_alpha * (1.0 - decay_alpha) /
                     (decay_radius * decay_radius),
                 report.bound, report.within_bound ? 1.0 : 0.0}};
      r.row_refs = {"Sc(t) = 2*alpha*(1-alpha)/t^2, min over B(R) <= "
                    "4*pi^2/R^2"};
      emit(r, decay_out);
    } else if (verify_cmd->parsed()) {
      if (scband::run_acceptance(std::cout) != 0) return 3;
    }
  } catch (const scband::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid request: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
