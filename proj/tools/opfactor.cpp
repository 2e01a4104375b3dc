// Command-line front end: every verification and solver as a subcommand
// with JSON on stdout. Exit codes: 0 ok, 1 input error, 2 hypothesis failed.

#include "opfactor/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace opfactor;
using nlohmann::json;

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json subspace_json(const Subspace& s) {
  return {{"ambient_dim", s.ambient_dim}, {"dim", s.dim()},
          {"basis", matrix_to_json(s.basis)}};
}

json dims_json(const CenterValuedDimension& d) {
  json out = json::array();
  for (const auto& r : d) out.push_back(r.str());
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

json null_decomposition_json(const NullDecomposition& d) {
  json out = {{"dim_n_a", d.n_a.dim()},       {"dim_n_b", d.n_b.dim()},
              {"dim_n_ab", d.n_ab.dim()},     {"disjoint", d.disjoint},
              {"containment_holds", d.containment_holds},
              {"equality_holds", d.equality_holds},
              {"containment_residual", fmt(d.containment_residual)}};
  if (d.witness_residual >= 0) out["witness_residual"] = fmt(d.witness_residual);
  return out;
}

std::vector<Complex> parse_complex_list(const std::string& csv) {
  std::vector<Complex> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_complex(tok));
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

void emit(const json& payload, bool pretty) {
  if (pretty)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << payload.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"opfactor: null spaces of operator products, dimension functions, and factored ODEs"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indented JSON output");

  // solve-ode
  auto* solve = app.add_subcommand("solve-ode", "solution basis of p(d/dx) u = 0");
  std::string coeffs_csv;
  double cluster_tol = 1e-6;
  solve->add_option("--coeffs", coeffs_csv, "c0,c1,...,cn ascending, complex as re+imi")->required();
  solve->add_option("--cluster-tol", cluster_tol, "root clustering threshold");

  // matrix-pair subcommands
  std::string path_a, path_b, path_t, path_e, path_f, path_c, path_h, path_s1, path_s2;
  auto* nulldec = app.add_subcommand("null-decomp", "null-space decomposition of a commuting product");
  nulldec->add_option("--a", path_a)->required();
  nulldec->add_option("--b", path_b)->required();
  auto* counting = app.add_subcommand("counting", "n_ab = n_a + n_b for disjoint commuting factors");
  counting->add_option("--a", path_a)->required();
  counting->add_option("--b", path_b)->required();
  auto* prop31 = app.add_subcommand("prop31", "null space of a product under a reducing hypothesis");
  prop31->add_option("--a", path_a)->required();
  prop31->add_option("--b", path_b)->required();
  auto* angle_cmd = app.add_subcommand("angle", "angle between two subspaces");
  angle_cmd->add_option("--s1", path_s1, "basis matrix JSON")->required();
  angle_cmd->add_option("--s2", path_s2, "basis matrix JSON")->required();
  auto* rank_nullity = app.add_subcommand("rank-nullity", "Dim(range)+Dim(null) identity");
  rank_nullity->add_option("--t", path_t, "algebra element JSON")->required();
  auto* dim_ineq = app.add_subcommand("dim-inequality", "Dim(E)-Dim(N(T)^E) <= Dim(F) under FTE=TE");
  dim_ineq->add_option("--t", path_t)->required();
  dim_ineq->add_option("--e", path_e)->required();
  dim_ineq->add_option("--f", path_f)->required();
  auto* lattice = app.add_subcommand("lattice-id", "Dim(E)+Dim(F) = Dim(join)+Dim(meet)");
  lattice->add_option("--e", path_e)->required();
  lattice->add_option("--f", path_f)->required();
  auto* polar_cmd = app.add_subcommand("polar", "polar decomposition T = VH");
  polar_cmd->add_option("--t", path_t)->required();
  auto* spectral = app.add_subcommand("spectral", "spectral resolution of a Hermitian matrix");
  spectral->add_option("--t", path_h)->required();
  double gap_tol = -1.0;
  spectral->add_option("--gap-tol", gap_tol, "eigenvalue clustering gap");
  auto* check_commute = app.add_subcommand("check-commute", "product and spectral commutation");
  check_commute->add_option("--a", path_a)->required();
  check_commute->add_option("--b", path_b)->required();
  auto* stability = app.add_subcommand("stability", "proper stability of E(H) under C and C*");
  stability->add_option("--c", path_c)->required();
  stability->add_option("--e", path_e)->required();
  auto* adjoint = app.add_subcommand("adjoint-transfer", "BC=CB implies BC*=C*B for Hermitian B");
  adjoint->add_option("--b", path_b)->required();
  adjoint->add_option("--c", path_c)->required();

  // demos
  auto* stone = app.add_subcommand("stone-demo", "generator convergence of the translation group");
  Eigen::Index grid_n = 64, grid_m = 4;
  double grid_len = kTwoPi;
  std::string steps_csv = "1e-1,1e-2,1e-3,1e-4";
  std::uint64_t seed = 42;
  int trials = 100;
  stone->add_option("--n", grid_n);
  stone->add_option("--L", grid_len);
  stone->add_option("--steps", steps_csv);
  stone->add_option("--seed", seed);
  auto* factored = app.add_subcommand("factored-demo", "null spaces of (D - iw1)(D - iw2)");
  Eigen::Index w1 = 1, w2 = 2;
  factored->add_option("--n", grid_n);
  factored->add_option("--L", grid_len);
  factored->add_option("--w1", w1);
  factored->add_option("--w2", w2);
  auto* wave = app.add_subcommand("wave-demo", "factored wave equation on a tensor grid");
  wave->add_option("--n", grid_n)->default_val(4);
  wave->add_option("--m", grid_m);
  auto* verify = app.add_subcommand("verify-all", "run every property suite");
  verify->add_option("--seed", seed);
  verify->add_option("--trials", trials);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      Polynomial p{parse_complex_list(coeffs_csv)};
      const auto clusters = roots(p, cluster_tol);
      const OdeSolutionBasis basis = solve_ode(p, cluster_tol);
      const double residual = ode_residual(basis, p, {-1, -0.5, 0, 0.5, 1});
      json roots_json = json::array(), basis_json = json::array();
      for (const auto& rc : clusters)
        roots_json.push_back({{"re", rc.root.real()}, {"im", rc.root.imag()}, {"mult", rc.multiplicity}});
      for (const auto& term : basis)
        basis_json.push_back({{"re", term.root.real()}, {"im", term.root.imag()}, {"power", term.power}});
      emit({{"roots", roots_json}, {"basis", basis_json}, {"residual", fmt(residual)}}, pretty);
    } else if (*nulldec) {
      emit(null_decomposition_json(null_product_decompose(load_matrix(path_a), load_matrix(path_b))), pretty);
    } else if (*counting) {
      const CountingReport rep = counting_check(load_matrix(path_a), load_matrix(path_b));
      emit({{"n_a", rep.n_a}, {"n_b", rep.n_b}, {"n_ab", rep.n_ab}, {"sum_equals", rep.sum_equals}}, pretty);
    } else if (*prop31) {
      const ReductionReport rep = prop31_check(load_matrix(path_a), load_matrix(path_b));
      emit({{"dim_n_a", rep.n_a.dim()}, {"dim_n_b", rep.n_b.dim()}, {"dim_n_ab", rep.n_ab.dim()},
            {"reduce_residual", fmt(rep.reduce_residual)}, {"conclusion_holds", rep.conclusion_holds}}, pretty);
    } else if (*angle_cmd) {
      const Subspace s1 = Subspace::from_span(load_matrix(path_s1));
      const Subspace s2 = Subspace::from_span(load_matrix(path_s2));
      emit({{"angle", fmt(angle(s1, s2))}, {"dim_s1", s1.dim()}, {"dim_s2", s2.dim()},
            {"dim_intersection", intersect(s1, s2).dim()}}, pretty);
    } else if (*rank_nullity) {
      const RankNullityReport rep = rank_nullity_check(load_element(path_t));
      emit({{"delta_range", dims_json(rep.delta_range)}, {"delta_null", dims_json(rep.delta_null)},
            {"identity_holds", rep.identity_holds}}, pretty);
    } else if (*dim_ineq) {
      const DimensionInequalityReport rep =
          dimension_inequality_check(load_element(path_t), load_element(path_e), load_element(path_f));
      emit({{"delta_e", dims_json(rep.delta_e)}, {"delta_null_meet_e", dims_json(rep.delta_meet)},
            {"delta_f", dims_json(rep.delta_f)}, {"hypothesis_residual", fmt(rep.hypothesis_residual)},
            {"inequality_holds", rep.inequality_holds},
            {"special_case_applies", rep.special_case_applies},
            {"special_case_holds", rep.special_case_holds}}, pretty);
    } else if (*lattice) {
      const LatticeDimensionReport rep =
          lattice_dimension_identity(load_element(path_e), load_element(path_f));
      emit({{"delta_e", dims_json(rep.delta_e)}, {"delta_f", dims_json(rep.delta_f)},
            {"delta_join", dims_json(rep.delta_join)}, {"delta_meet", dims_json(rep.delta_meet)},
            {"identity_holds", rep.identity_holds}}, pretty);
    } else if (*polar_cmd) {
      const ComplexMatrix t = load_matrix(path_t);
      const PolarDecomposition pd = polar(t);
      emit({{"partial_isometry", matrix_to_json(pd.partial_isometry)},
            {"positive_part", matrix_to_json(pd.positive_part)},
            {"reconstruction_residual", fmt((pd.partial_isometry * pd.positive_part - t).norm())}}, pretty);
    } else if (*spectral) {
      const SpectralResolution sr = spectral_resolution(load_matrix(path_h), gap_tol);
      json evs = json::array(), projs = json::array();
      for (double v : sr.eigenvalues) evs.push_back(v);
      for (const auto& p : sr.projections) projs.push_back(matrix_to_json(p));
      emit({{"eigenvalues", evs}, {"projections", projs}}, pretty);
    } else if (*check_commute) {
      const ComplexMatrix a = load_matrix(path_a), b = load_matrix(path_b);
      json payload = {{"product_commutes", commute_check(a, b).commutes},
                      {"commutator_residual", fmt(commute_check(a, b).residual)}};
      if (is_hermitian(a) && is_hermitian(b)) {
        const SpectralCommuteReport rep = spectral_commute(a, b);
        json pw = json::array();
        for (const auto& row : rep.pairwise) {
          json jr = json::array();
          for (bool v : row) jr.push_back(v);
          pw.push_back(jr);
        }
        payload["pairwise"] = pw;
        payload["all_pairwise"] = rep.all_pairwise;
        payload["equivalence_holds"] = rep.equivalence_holds;
      }
      emit(payload, pretty);
    } else if (*stability) {
      const StabilityReport rep = proper_stability(load_matrix(path_c), load_matrix(path_e));
      emit({{"stable_under_C", rep.stable_under_c},
            {"stable_under_C_adjoint", rep.stable_under_c_adjoint},
            {"commutes", rep.commutes},
            {"residuals", {fmt(rep.residual_stability), fmt(rep.residual_adjoint_stability),
                           fmt(rep.residual_commutator)}}}, pretty);
    } else if (*adjoint) {
      const AdjointTransferReport rep =
          adjoint_commute_transfer(load_matrix(path_b), load_matrix(path_c));
      emit({{"commutes", rep.commutes}, {"residual_bc", fmt(rep.residual_bc)},
            {"residual_bc_adjoint", fmt(rep.residual_bc_adjoint)},
            {"transfer_holds", rep.transfer_holds}}, pretty);
    } else if (*stone) {
      const PeriodicGrid grid(grid_n, grid_len);
      Rng rng(seed);
      ComplexVector hat = ComplexVector::Zero(grid.n);
      for (Eigen::Index k = 0; k <= grid.n / 4; ++k) {
        hat(k) = rng.complex_unit_box();
        if (k > 0) hat(grid.n - k) = rng.complex_unit_box();
      }
      const ConvergenceReport rep =
          stone_generator_check(grid, ifft(hat), parse_double_list(steps_csv));
      json steps = json::array(), errs = json::array();
      for (double s : rep.step_sizes) steps.push_back(s);
      for (double e : rep.errors) errs.push_back(fmt(e));
      emit({{"step_sizes", steps}, {"errors", errs}, {"fitted_slope", fmt(rep.fitted_slope)}}, pretty);
    } else if (*factored) {
      const PeriodicGrid grid(grid_n, grid_len);
      emit(null_decomposition_json(factored_ode_demo(grid, w1, w2)), pretty);
    } else if (*wave) {
      const WaveFactorizationReport rep =
          wave_factorization_demo(PeriodicGrid(grid_n, kTwoPi), PeriodicGrid(grid_m, kTwoPi));
      emit({{"dim_nA", rep.dim_n_a}, {"dim_nB", rep.dim_n_b}, {"dim_nAB", rep.dim_n_ab},
            {"dim_intersection", rep.dim_intersection}, {"equality", rep.equality_holds},
            {"witness_residual", fmt(rep.witness_residual)}}, pretty);
    } else if (*verify) {
      const std::vector<SuiteResult> results = run_all_suites(seed, trials);
      json suites_json = json::array();
      bool all_pass = true;
      for (const SuiteResult& r : results) {
        json jr = {{"name", r.name}, {"passed", r.passed}, {"trials", r.trials}};
        if (!r.detail.empty()) jr["detail"] = r.detail;
        suites_json.push_back(jr);
        if (!r.passed) all_pass = false;
      }
      emit({{"seed", seed}, {"trials", trials}, {"suites", suites_json}, {"all_passed", all_pass}}, pretty);
      return all_pass ? 0 : 2;
    }
  } catch (const hypothesis_error& e) {
    std::cout << json{{"status", "hypothesis_failed"}, {"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << json{{"status", "input_error"}, {"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
