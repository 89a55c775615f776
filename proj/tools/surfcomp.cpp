#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <sstream>

#include "surfcomp/coeff_sets.hpp"
#include "surfcomp/complements.hpp"
#include "surfcomp/diophantine.hpp"
#include "surfcomp/dual_graph.hpp"
#include "surfcomp/io.hpp"
#include "surfcomp/polytope.hpp"
#include "surfcomp/smooth_germ.hpp"
#include "surfcomp/suites.hpp"

using namespace surfcomp;

namespace {

struct Globals {
  int jobs = 1;
  bool approx = false;
  long budget = 10'000'000;
  std::vector<std::string> basis;
};

Globals G;

std::string val(const FormalReal& x) {
  std::string s = x.str();
  if (G.approx && !x.is_rational()) {
    std::ostringstream os;
    os.precision(12);
    os << " ~" << x.approx();
    s += os.str();
  }
  return s;
}

std::string val(const Rational& q) { return to_string(q); }

template <class T>
std::string list(const std::vector<T>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + val(x);
  return out;
}

// Each --basis value is "r1~sqrt(2)" or several joined by ';'.
BasisPtr cli_basis() {
  if (G.basis.empty()) return nullptr;
  std::vector<std::pair<std::string, std::string>> decl;
  for (const auto& arg : G.basis) {
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ';')) {
      auto t = item.find('~');
      if (t == std::string::npos) throw ValidationError("--basis entries look like name~witness");
      decl.emplace_back(item.substr(0, t), item.substr(t + 1));
    }
  }
  return make_basis(decl);
}

FormalReal formal(const std::string& text) { return parse_formal(text, cli_basis()); }
std::vector<FormalReal> formals(const std::string& text) { return parse_formal_list(text, cli_basis()); }

int exit_code_for(const Error& e) {
  static const std::set<std::string> input{"ParseError",       "ValidationError",    "InvalidProximity",
                                           "BasisMismatch",    "WitnessTooCoarse",   "IrrationalCoefficient",
                                           "NotNegativeDefinite", "WeightBelowTwo", "NotAChain",
                                           "NotATree",         "DegenerateMQ",       "EmptyGamma",
                                           "UnrealizablePattern"};
  if (e.kind() == "SearchBudgetExceeded") return 3;
  if (input.count(e.kind())) return 2;
  return 1;
}

void print_certificate(const LinearityCertificate& c, const std::vector<std::string>& names) {
  std::cout << "center\t" << list(c.center) << "\n";
  std::cout << "delta\t" << val(c.delta) << "\n";
  for (size_t i = 0; i < c.box.size(); ++i)
    std::cout << "box\t" << (i < names.size() ? names[i] : "b" + std::to_string(i + 1)) << "\t" << val(c.box[i].first)
              << "\t" << val(c.box[i].second) << "\n";
  for (size_t j = 0; j < c.vertices.size(); ++j)
    std::cout << "vertex\t" << j + 1 << "\t" << list(c.vertices[j]) << "\tweight=" << val(c.weights[j])
              << "\teps=" << val(c.eps[j]) << "\n";
  std::cout << "witness\t" << c.witness_label << "\t" << c.witness.form.str(names) << "\n";
  std::cout << "corners_checked\t" << c.corners_checked << "\n";
}

int cmd_pld(const std::string& file) {
  GraphInput in = parse_graph(read_file(file));
  PldResult p = pld(in.graph, in.coeffs);
  if (!p.lc) throw NotLC("some log discrepancy is negative");
  std::cout << "pld\t" << (p.value ? val(*p.value) : "inf") << "\n";
  return 0;
}

int cmd_logdisc(const std::string& file) {
  GraphInput in = parse_graph(read_file(file));
  auto forms = log_discrepancy_forms(in.graph);
  auto vals = log_discrepancies(in.graph, in.coeffs);
  std::cout << "divisor\tvalue\tform\n";
  for (size_t k = 0; k < forms.size(); ++k)
    std::cout << "E" << k + 1 << "\t" << val(vals[k]) << "\t" << forms[k].str(in.graph.branches) << "\n";
  return 0;
}

int cmd_mld(const std::string& file, const std::string& cluster_file) {
  if (!cluster_file.empty()) {
    ClusterInput in = parse_cluster(read_file(cluster_file));
    GermMld m = mld_smooth_germ(in.cluster, in.coeffs);
    const auto names = in.cluster.branch_names();
    std::cout << "mld\t" << val(m.value) << "\n";
    std::cout << "witness\t" << m.witness.label(names) << "\t" << m.witness.form.str(names) << "\n";
    std::cout << "resolved_points\t" << m.resolved.points.size() << "\n";
    return 0;
  }
  if (file.empty()) throw ValidationError("mld needs FILE or --cluster FILE");
  GraphInput in = parse_graph(read_file(file));
  MldResult m = mld_log_smooth(in.graph, in.coeffs);
  std::cout << "mld\t" << val(m.value) << "\n";
  std::cout << "witness\t" << m.witness.label(in.graph.branches) << "\t" << m.witness.form.str(in.graph.branches) << "\n";
  return 0;
}

int cmd_mq(const std::vector<long>& weights, long m, long q) {
  if (!weights.empty()) {
    ChainMQ r = chain_to_mq(weights);
    std::cout << "m\t" << to_string(r.m) << "\nq\t" << to_string(r.q) << "\n";
    return 0;
  }
  if (m <= 0) throw ValidationError("mq needs --weights or --m/--q");
  auto w = mq_to_chain({m, q});
  std::cout << "weights\t";
  for (size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i];
  std::cout << "\n";
  return 0;
}

int cmd_nakamura(const std::string& coeffs, int max_points, int max_branches) {
  NakamuraReport r = nakamura_scan(parse_rational_list(coeffs), max_points, max_branches);
  std::cout << "N\t" << val(r.N) << "\ninstances\t" << r.instances << "\nworst_mld\t" << val(r.worst_mld)
            << "\nworst_coeffs\t" << list(r.worst_coeffs) << "\nwitness\t" << r.witness << "\n";
  return 0;
}

int cmd_verify_decomp(const std::string& file) {
  DecompInput in = parse_decomposition(read_file(file));
  const bool ctx = in.ctx.graph || in.ctx.cluster;
  DecompReport r = verify_decomposition(in.boundary, in.parts, in.eps, ctx ? &in.ctx : nullptr);
  std::cout << "condition\tstatus\tdetail\n";
  for (size_t i = 0; i < 5; ++i)
    std::cout << i + 1 << "\t" << (r.ok[i] ? "PASS" : "FAIL") << "\t" << r.detail[i] << "\n";
  return r.all() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact singularity invariants and complement arithmetic for surface germs"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--jobs", G.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--approx", G.approx, "Append decimal approximations to irrational values");
  app.add_option("--budget", G.budget, "Search budget for the Diophantine scans")->check(CLI::PositiveNumber);
  app.add_option("--basis", G.basis, "Basis symbol for command-line literals, e.g. r1~sqrt(2); repeat for more")
      ->allow_extra_args(false);

  std::string file, cluster_file;

  auto* pld_cmd = app.add_subcommand("pld", "Partial log discrepancy of a graph file");
  pld_cmd->add_option("FILE", file)->required();
  auto* logdisc_cmd = app.add_subcommand("logdisc", "Log discrepancies of every exceptional curve");
  logdisc_cmd->add_option("FILE", file)->required();
  auto* mld_cmd = app.add_subcommand("mld", "Minimal log discrepancy of a graph or cluster");
  mld_cmd->add_option("FILE", file);
  mld_cmd->add_option("--cluster", cluster_file);

  std::vector<long> mq_weights;
  long mq_m = 0, mq_q = 0;
  auto* mq_cmd = app.add_subcommand("mq", "Chain weights <-> (m, q)");
  mq_cmd->add_option("--weights", mq_weights)->delimiter(',');
  mq_cmd->add_option("--m", mq_m);
  mq_cmd->add_option("--q", mq_q);

  auto* dset_cmd = app.add_subcommand("dset", "Coefficient set arithmetic");
  dset_cmd->require_subcommand(1);
  std::string ds_coeffs, ds_gamma, ds_gamma2, ds_alpha;
  int ds_max_m = 20, ds_terms = 6, ds_bound = 40;
  auto* dof = dset_cmd->add_subcommand("d-of", "D(Gamma) truncated");
  dof->add_option("--coeffs", ds_coeffs)->required();
  dof->add_option("--max-m", ds_max_m);
  dof->add_option("--max-terms", ds_terms);
  auto* dplus = dset_cmd->add_subcommand("plus", "Gamma_+ truncated");
  dplus->add_option("--coeffs", ds_coeffs)->required();
  dplus->add_option("--max-terms", ds_terms);
  auto* ddd = dset_cmd->add_subcommand("dd", "Check D(D(Gamma)) = D(Gamma)");
  ddd->add_option("--coeffs", ds_coeffs)->required();
  ddd->add_option("--bound", ds_bound);
  auto* dproj = dset_cmd->add_subcommand("project", "The DCC projection g");
  dproj->add_option("--gamma", ds_gamma)->required();
  dproj->add_option("--gamma2", ds_gamma2)->required();
  dproj->add_option("--alpha", ds_alpha)->required();

  auto* dioph_cmd = app.add_subcommand("dioph", "Rational approximation tools");
  dioph_cmd->require_subcommand(1);
  std::string di_r0, di_e, di_eps1, di_coeffs;
  long di_p0 = 1, di_l = 1;
  auto* ddir = dioph_cmd->add_subcommand("direction", "Rational point near r0 approached along e");
  ddir->add_option("--r0", di_r0)->required();
  ddir->add_option("--e", di_e)->required();
  ddir->add_option("--p0", di_p0);
  ddir->add_option("--l", di_l);
  ddir->add_option("--eps1", di_eps1)->required();
  auto* dspan = dioph_cmd->add_subcommand("span", "Span certificate");
  dspan->add_option("--coeffs", di_coeffs)->required();
  auto* dweights = dioph_cmd->add_subcommand("weights", "Rational complement weights from a weight file");
  dweights->add_option("FILE", file)->required();

  std::string d1_coeffs, d1_eps = "0";
  long d1_p = 1, d1_nmax = 64;
  bool d1_local = false;
  auto* dim1_cmd = app.add_subcommand("dim1", "Least n-complement on a curve or point germ");
  dim1_cmd->add_option("FILE", file);
  dim1_cmd->add_option("--coeffs", d1_coeffs);
  dim1_cmd->add_flag("--local", d1_local);
  dim1_cmd->add_option("--eps", d1_eps);
  dim1_cmd->add_option("--p", d1_p);
  dim1_cmd->add_option("--n-max", d1_nmax);

  std::string el_preset, el_eps = "0";
  long el_m = 2, el_nmax = 64;
  auto* ell_cmd = app.add_subcommand("elliptic", "Complement on the base of an elliptic fibration");
  ell_cmd->add_option("FILE", file);
  ell_cmd->add_option("--preset", el_preset)->check(CLI::IsMember({"xm"}));
  ell_cmd->add_option("--m", el_m);
  ell_cmd->add_option("--eps", el_eps);
  ell_cmd->add_option("--n-max", el_nmax);

  auto* vd_cmd = app.add_subcommand("verify-decomp", "Check a decomposed complement file");
  vd_cmd->add_option("FILE", file)->required();

  std::string po_graph, po_v, po_eps, po_delta, po_eps_pld;
  bool po_decompose = false;
  int po_halvings = 20;
  auto* poly_cmd = app.add_subcommand("polytope", "Certified linearity box for mld");
  poly_cmd->add_option("--cluster", cluster_file);
  poly_cmd->add_option("--graph", po_graph);
  poly_cmd->add_option("--v", po_v)->required();
  poly_cmd->add_option("--eps", po_eps)->required();
  poly_cmd->add_option("--delta", po_delta)->required();
  poly_cmd->add_option("--max-halvings", po_halvings);
  poly_cmd->add_flag("--decompose", po_decompose);
  poly_cmd->add_option("--eps-pld", po_eps_pld);

  std::string nk_coeffs;
  int nk_points = 4, nk_branches = 3;
  auto* nak_cmd = app.add_subcommand("nakamura", "Nakamura bound by exhaustive cluster scan");
  nak_cmd->add_option("--coeffs", nk_coeffs)->required();
  nak_cmd->add_option("--max-points", nk_points);
  nak_cmd->add_option("--max-branches", nk_branches);

  std::string selector = "all";
  std::uint64_t seed = SuiteOptions{}.seed;
  bool timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant and oracle suites");
  verify_cmd->add_option("SUITE", selector)
      ->check(CLI::IsMember({"all", "graph", "germ", "sets", "dioph", "complements", "polytope"}));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_flag("--timings", timings);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (pld_cmd->parsed()) return cmd_pld(file);
    if (logdisc_cmd->parsed()) return cmd_logdisc(file);
    if (mld_cmd->parsed()) return cmd_mld(file, cluster_file);
    if (mq_cmd->parsed()) return cmd_mq(mq_weights, mq_m, mq_q);
    if (nak_cmd->parsed()) return cmd_nakamura(nk_coeffs, nk_points, nk_branches);
    if (vd_cmd->parsed()) return cmd_verify_decomp(file);

    if (dof->parsed()) {
      DSet d = d_of(CoeffSet(formals(ds_coeffs)), ds_max_m, ds_terms);
      std::cout << "value\tm\tf\n";
      for (const auto& e : d.provenance) std::cout << val(e.value) << "\t" << e.m << "\t" << val(e.f) << "\n";
      return 0;
    }
    if (dplus->parsed()) {
      CoeffSet s = gamma_plus(CoeffSet(formals(ds_coeffs)), ds_terms);
      for (const auto& x : s.values()) std::cout << val(x) << "\n";
      return 0;
    }
    if (ddd->parsed()) {
      DDReport r = check_dd_identity(parse_rational_list(ds_coeffs), ds_bound);
      std::cout << "holds\t" << (r.holds ? "true" : "false") << "\nlhs_size\t" << r.lhs_size << "\nrhs_size\t"
                << r.rhs_size << "\n";
      if (r.counterexample) std::cout << "counterexample\t" << val(*r.counterexample) << "\t" << r.side << "\n";
      return r.holds ? 0 : 1;
    }
    if (dproj->parsed()) {
      Projection p = projection_g(CoeffSet(formals(ds_gamma)), CoeffSet(formals(ds_gamma2), true),
                                  parse_rational(ds_alpha));
      std::cout << "gamma\tg\n";
      for (const auto& [x, y] : p.map) std::cout << val(x) << "\t" << val(y) << "\n";
      return 0;
    }

    ScanOptions so{G.budget, G.jobs > 1};
    if (ddir->parsed()) {
      DirectionRequest req;
      req.p0 = di_p0;
      req.l = di_l;
      req.eps1 = parse_rational(di_eps1);
      req.r0 = formals(di_r0);
      req.e = parse_rational_list(di_e);
      DirectionResult r = approximate_direction(req, so);
      std::cout << "n0\t" << to_string(r.n0) << "\nr0'\t" << list(r.r0p) << "\nscan_index\t" << to_string(r.n1) << "\n";
      return 0;
    }
    if (dspan->parsed()) {
      auto gamma = formals(di_coeffs);
      SpanCertificate c = span_certificate(gamma);
      std::cout << "holds\t" << (c.holds ? "true" : "false") << "\n";
      if (!c.holds) {
        std::cout << "combination";
        for (size_t i = 0; i < c.members.size(); ++i)
          std::cout << "\t" << to_string(c.lambda[i]) << "*" << val(gamma[c.members[i]]);
        std::cout << "\nvalue\t" << val(c.value) << "\n";
        return 0;
      }
      for (size_t i = 0; i < c.basis.size(); ++i) std::cout << "basis\ts" << i + 1 << "\t" << val(c.basis[i]) << "\n";
      for (size_t i = 0; i < c.coords.size(); ++i) std::cout << "coords\t" << val(gamma[i]) << "\t" << list(c.coords[i]) << "\n";
      std::cout << "verified\t" << (verify_span_certificate(gamma, c) ? "true" : "false") << "\n";
      return 0;
    }
    if (dweights->parsed()) {
      WeightInput in = parse_weights(read_file(file));
      WeightResult r = complement_weights(in.ws, CoeffSet(in.gamma), in.p, so);
      std::cout << "n\t" << to_string(r.n) << "\na'\t" << list(r.a) << "\nmonotone\t" << (r.moreover ? "true" : "false")
                << "\n";
      return check_weights(in.ws, in.p, r) == 0 ? 0 : 1;
    }

    if (dim1_cmd->parsed()) {
      Dim1Germ g;
      if (!file.empty()) {
        g = parse_dim1(read_file(file)).germ;
      } else {
        g.coeffs = d1_coeffs.empty() ? std::vector<FormalReal>{} : formals(d1_coeffs);
        g.local = d1_local;
      }
      Dim1Result r = dim1_complement_search(g, formal(d1_eps), d1_p, d1_nmax);
      std::cout << "n\t" << to_string(r.n) << "\nb+\t" << list(r.plus) << "\nadded\t" << list(r.added) << "\n";
      return 0;
    }
    if (ell_cmd->parsed()) {
      EllipticBase eb;
      if (!file.empty()) {
        eb = parse_elliptic(read_file(file));
      } else if (el_preset == "xm") {
        eb = EllipticBase::xm(el_m);
      } else {
        throw ValidationError("elliptic needs FILE or --preset xm");
      }
      EllipticResult r = elliptic_base_minimal_n(eb, parse_rational(el_eps), el_nmax);
      std::cout << "n\t" << to_string(r.n) << "\nfiber_coeffs\t" << list(r.c) << "\nadded\t" << list(r.added) << "\n";
      return 0;
    }

    if (poly_cmd->parsed()) {
      if (cluster_file.empty() == po_graph.empty()) throw ValidationError("polytope needs exactly one of --cluster, --graph");
      BasisPtr basis;
      std::optional<DualGraph> graph;
      Germ germ = [&] {
        if (!po_graph.empty()) {
          GraphInput in = parse_graph(read_file(po_graph));
          basis = in.basis;
          graph = in.graph;
          return Germ::of(in.graph);
        }
        ClusterInput in = parse_cluster(read_file(cluster_file));
        basis = in.basis;
        return Germ::of(in.cluster);
      }();
      if (!G.basis.empty()) basis = cli_basis();
      auto v = parse_formal_list(po_v, basis);
      FormalReal eps = parse_formal(po_eps, basis);
      if (po_decompose) {
        if (!graph) throw ValidationError("--decompose works on --graph inputs");
        FormalReal eps_pld;
        if (po_eps_pld.empty()) {
          PldResult p = pld(*graph, Boundary(v.begin(), v.end()));
          if (!p.value) throw NotLC("the pair is not lc at v");
          eps_pld = *p.value;
        } else {
          eps_pld = parse_formal(po_eps_pld, basis);
        }
        GermDecomposition d = decompose_germ(*graph, v, eps, eps_pld);
        std::cout << "index\t" << to_string(d.index) << "\n";
        std::cout << "part\ta\tcoeffs\teps\tpld\n";
        for (const auto& p : d.parts)
          std::cout << "part\t" << val(p.a) << "\t" << list(p.coeffs) << "\t" << val(p.eps) << "\t" << val(p.pld) << "\n";
        print_certificate(d.cert, germ.names());
        return check_germ_decomposition(*graph, v, eps, eps_pld, d) == 0 ? 0 : 1;
      }
      DeltaSearch d = find_delta(germ, v, eps, parse_rational(po_delta), po_halvings);
      std::cout << "halvings\t" << d.halvings << "\n";
      print_certificate(d.cert, germ.names());
      return verify_certificate(germ, d.cert, eps).empty() ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      SuiteOptions opt;
      opt.jobs = G.jobs;
      opt.budget = G.budget;
      opt.seed = seed;
      auto rows = run_verify_suite(selector, opt);
      std::cout << tsv(rows, timings);
      for (const auto& r : rows)
        if (!r.passed()) return 1;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
