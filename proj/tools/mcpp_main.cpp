#include "mcpp/battery.hpp"
#include "mcpp/decompose.hpp"
#include "mcpp/io.hpp"
#include "mcpp/lifting.hpp"
#include "mcpp/oracle.hpp"
#include "mcpp/polytope.hpp"
#include "mcpp/relaxation.hpp"
#include "mcpp/solver.hpp"
#include "mcpp/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace mcpp;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Instance load_instance(const std::string& path) {
  Instance inst = parse_instance_json(read_file(path));
  validate_or_throw(inst);
  return inst;
}

std::string row_to_string(const Row& r) {
  std::ostringstream os;
  bool any = false;
  for (size_t j = 0; j < r.a.size(); ++j) {
    const Rat& c = r.a.v[j];
    if (c == 0) continue;
    if (any)
      os << (c > 0 ? " + " : " - ");
    else if (c < 0)
      os << "-";
    const Rat mag = abs(c);
    if (mag != 1) os << to_string(mag) << "*";
    os << "w" << mono_to_string(r.a.coords->label(static_cast<int>(j)));
    any = true;
  }
  if (!any) os << "0";
  os << (r.kind == RowKind::equality ? " = " : " <= ") << to_string(r.rhs);
  os << "   [" << to_string(r.tag) << "]";
  return os.str();
}

Mono parse_transversal(const std::string& spec, const Partition& p) {
  if (spec.empty()) return default_transversal(p);
  Mono d;
  std::istringstream is(spec);
  std::string tok;
  while (std::getline(is, tok, ',')) d.push_back(std::stoi(tok));
  d = sorted_mono(std::move(d));
  if (!is_transversal(d, p))
    throw ValidationError("--transversal must pick exactly one variable per block");
  return d;
}

void print_points(const PointSet& pts, std::ostream& os) {
  os << "coordinates:";
  for (const auto& label : pts.coords->labels()) os << ' ' << mono_to_string(label);
  os << "\n" << pts.size() << " points\n";
  for (const auto& p : pts.points) {
    for (size_t j = 0; j < p.size(); ++j) os << (j ? " " : "") << to_string(p[j]);
    os << "\n";
  }
}

// Builds the vector over `coords` from a labelled inequality file; unknown
// labels are rejected, missing ones are zero.
RVector file_vector(const InequalityFile& f, const CoordsPtr& coords) {
  RVector a(coords);
  for (size_t k = 0; k < f.labels.size(); ++k) {
    if (!coords->contains(f.labels[k]))
      throw ValidationError("inequality label " + mono_to_string(f.labels[k]) +
                            " is not a coordinate of this space");
    a.at(f.labels[k]) += f.a[k];
  }
  return a;
}

Hypergraph parse_part(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<int> verts = j.at("vertices").get<std::vector<int>>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back(sorted_mono(e.get<std::vector<int>>()));
  return Hypergraph(std::move(verts), std::move(edges));
}

int run(int argc, char** argv) {
  CLI::App app{"Exact polyhedral toolkit and solver for multiple choice polynomial programming"};
  app.require_subcommand(1);

  std::string instance_path, output = "text", inequality_path, selection_json;
  std::string system_kind = "jointree", set_kind = "profiles", transversal_spec;
  std::string part1_json, part2_json, method = "auto";
  size_t guard = kDefaultEnumerationGuard;
  int coord_guard = kDefaultCoordinateGuard;
  unsigned seed = 7;
  int objectives = 100;

  auto add_common = [&](CLI::App* cmd, bool needs_instance = true) {
    if (needs_instance) cmd->add_option("--instance", instance_path, "instance JSON file")->required();
    cmd->add_option("--output", output, "output format: json|text");
    cmd->add_option("--guard", guard, "enumeration guard (point count)");
    cmd->add_option("--coordinate-guard", coord_guard, "vertex-enumeration coordinate guard");
  };

  auto* c_validate = app.add_subcommand("validate", "structural checks on an instance file");
  add_common(c_validate);

  auto* c_hyper = app.add_subcommand("hypergraph", "induced hypergraph, acyclicity, join tree");
  add_common(c_hyper);

  auto* c_hrep = app.add_subcommand("hrep", "emit an H-representation");
  add_common(c_hrep);
  c_hrep->add_option("--system", system_kind,
                     "jointree|pairwise|affine-transversal|affine-symmetric");
  c_hrep->add_option("--transversal", transversal_spec, "comma-separated distinguished variables");

  auto* c_enum = app.add_subcommand("enumerate", "emit a vertex list");
  add_common(c_enum);
  c_enum->add_option("--set", set_kind, "profiles|multilinear|reduced");
  c_enum->add_option("--transversal", transversal_spec, "comma-separated distinguished variables");

  auto* c_certify = app.add_subcommand("certify", "classify an inequality against a vertex list");
  add_common(c_certify);
  c_certify->add_option("--inequality", inequality_path, "inequality JSON file")->required();
  c_certify->add_option("--transversal", transversal_spec, "for the reduced space");

  auto* c_lift = app.add_subcommand("lift", "lift a block-space inequality");
  add_common(c_lift);
  c_lift->add_option("--inequality", inequality_path, "block-space inequality JSON file")->required();
  c_lift->add_option("--selection", selection_json, "JSON array of per-block choice subsets")->required();

  auto* c_decomp = app.add_subcommand("decompose-check", "verify a two-part hypergraph split");
  add_common(c_decomp);
  c_decomp->add_option("--part1", part1_json, "JSON {\"vertices\":[...],\"edges\":[[...]]}")->required();
  c_decomp->add_option("--part2", part2_json, "JSON for the second part")->required();
  c_decomp->add_option("--seed", seed, "seed for the sampled fallback");

  auto* c_verify = app.add_subcommand("verify-theorems", "run the property suite on the battery");
  c_verify->add_option("--seed", seed, "seed for random objectives");
  c_verify->add_option("--objectives", objectives, "random objectives per instance");

  auto* c_solve = app.add_subcommand("solve", "exact optimum of an instance");
  add_common(c_solve);
  c_solve->add_option("--method", method, "auto|lp|brute");
  c_solve->add_option("--seed", seed, "accepted for reproducibility bookkeeping");

  CLI11_PARSE(app, argc, argv);

  if (c_validate->parsed()) {
    const Instance inst = parse_instance_json(read_file(instance_path));
    const auto violations = validate(inst);
    if (violations.empty()) {
      std::cout << "ok\n";
      return 0;
    }
    for (const auto& v : violations) std::cout << v.kind << ": " << v.detail << "\n";
    return 2;
  }

  if (c_hyper->parsed()) {
    const Instance inst = load_instance(instance_path);
    const Hypergraph h = induce_hypergraph(inst);
    std::cout << "vertices (blocks):";
    for (int v : h.vertices) std::cout << ' ' << v;
    std::cout << "\nedges:";
    for (const auto& e : h.edges) std::cout << ' ' << mono_to_string(e);
    const AcyclicityResult acy = is_alpha_acyclic(h);
    std::cout << "\nalpha-acyclic: " << (acy.acyclic ? "true" : "false") << "\n";
    if (acy.acyclic) {
      std::cout << "join tree edges:";
      for (auto [i, j] : acy.join_tree->tree_edges)
        std::cout << ' ' << mono_to_string(acy.join_tree->nodes[static_cast<size_t>(i)]) << "--"
                  << mono_to_string(acy.join_tree->nodes[static_cast<size_t>(j)]);
      std::cout << "\n";
    } else {
      std::cout << "irreducible residual edges:";
      for (const auto& e : acy.irreducible->edges) std::cout << ' ' << mono_to_string(e);
      std::cout << "\n";
    }
    return 0;
  }

  if (c_hrep->parsed()) {
    const Instance inst = load_instance(instance_path);
    const MonomialFamily fam = close_family(inst).family;
    RelaxationSystem sys(fam.coords());
    if (system_kind == "jointree")
      sys = jointree_relaxation(fam);
    else if (system_kind == "pairwise")
      sys = pairwise_relaxation(fam);
    else if (system_kind == "affine-transversal")
      sys = affine_hull_system(fam, parse_transversal(transversal_spec, inst.partition),
                               AffineHullForm::transversal);
    else if (system_kind == "affine-symmetric")
      sys = affine_hull_system(fam, {}, AffineHullForm::symmetric);
    else
      throw ValidationError("unknown --system: " + system_kind);
    std::cout << sys.count(RowKind::equality) << " equalities, "
              << sys.count(RowKind::less_equal) << " inequalities\n";
    for (const auto& r : sys.rows) std::cout << row_to_string(r) << "\n";
    return 0;
  }

  if (c_enum->parsed()) {
    const Instance inst = load_instance(instance_path);
    const MonomialFamily fam = close_family(inst).family;
    PointSet pts;
    if (set_kind == "profiles")
      pts = enumerate_profiles(fam, guard);
    else if (set_kind == "multilinear")
      pts = enumerate_multilinear_vertices(fam, guard);
    else if (set_kind == "reduced")
      pts = enumerate_reduced_profiles(fam, parse_transversal(transversal_spec, inst.partition), guard);
    else
      throw ValidationError("unknown --set: " + set_kind);
    print_points(pts, std::cout);
    return 0;
  }

  if (c_certify->parsed()) {
    const Instance inst = load_instance(instance_path);
    const MonomialFamily fam = close_family(inst).family;
    const InequalityFile f = parse_inequality_json(read_file(inequality_path));
    PointSet pts;
    if (f.space == "JH")
      pts = enumerate_profiles(fam, guard);
    else if (f.space == "MP")
      pts = enumerate_multilinear_vertices(fam, guard);
    else
      pts = enumerate_reduced_profiles(fam, parse_transversal(transversal_spec, inst.partition), guard);
    const IneqCertificate cert = certify_inequality(file_vector(f, pts.coords), f.delta, pts);
    std::cout << to_string(cert.status) << "\n";
    std::cout << "tight points: " << cert.tight_points.size() << " of " << pts.size()
              << ", face dim " << cert.face_dim << ", polytope dim " << cert.polytope_dim << "\n";
    return 0;
  }

  if (c_lift->parsed()) {
    const Instance inst = load_instance(instance_path);
    const MonomialFamily fam = close_family(inst).family;
    const InequalityFile f = parse_inequality_json(read_file(inequality_path));
    if (f.space != "MP") throw ValidationError("lift expects an inequality in the MP space");
    const BlockInequality ineq{file_vector(f, fam.block_coords()), f.delta};

    Selection sel;
    for (const auto& s : nlohmann::json::parse(selection_json))
      sel.chosen.push_back(sorted_mono(s.get<std::vector<int>>()));
    const LiftedInequality lifted = lift_inequality(ineq, sel, fam);

    InequalityFile outf;
    outf.space = "JH";
    for (size_t j = 0; j < lifted.a.size(); ++j)
      if (lifted.a.v[j] != 0) {
        outf.labels.push_back(lifted.a.coords->label(static_cast<int>(j)));
        outf.a.push_back(lifted.a.v[j]);
      }
    outf.delta = lifted.delta;
    std::cout << inequality_to_json(outf) << "\n";

    const PointSet zverts = enumerate_multilinear_vertices(fam, guard);
    const PointSet profiles = enumerate_profiles(fam, guard);
    const ForcingBlocks cls = classify_forcing_blocks(ineq, zverts);
    const bool condition = check_selection_condition(sel, cls, fam.partition());
    const IneqCertificate cert = certify_inequality(lifted.a, lifted.delta, profiles);
    std::cout << "selection condition: " << (condition ? "holds" : "fails") << "\n";
    std::cout << "certificate: " << to_string(cert.status) << "\n";
    return 0;
  }

  if (c_decomp->parsed()) {
    const Instance inst = load_instance(instance_path);
    const MonomialFamily fam = close_family(inst).family;
    Decomposition d{parse_part(part1_json), parse_part(part2_json)};
    const bool pre = check_decomposition_precondition(d, fam.hypergraph());
    std::cout << "precondition: " << (pre ? "holds" : "fails") << "\n";
    const DecompositionCheck res = verify_decomposition(d, fam, coord_guard, seed);
    std::cout << "decomposes: " << (res.ok ? "true" : "false") << " (" << res.detail << ")\n";
    return res.ok ? 0 : 1;
  }

  if (c_verify->parsed()) {
    bool all = true;
    for (const auto& r : run_verification_suite(seed, objectives)) {
      std::cout << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.id << ". " << r.name;
      if (!r.detail.empty()) std::cout << " — " << r.detail;
      std::cout << "\n";
      all &= r.pass;
    }
    return all ? 0 : 1;
  }

  if (c_solve->parsed()) {
    const Instance inst = load_instance(instance_path);
    SolveMethod m = SolveMethod::automatic;
    if (method == "lp")
      m = SolveMethod::lp;
    else if (method == "brute")
      m = SolveMethod::brute;
    else if (method != "auto")
      throw ValidationError("unknown --method: " + method);
    const SolveReport report = solve(inst, m, guard);
    std::cout << (output == "json" ? report_to_json(report) : report_to_text(report)) << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
