// bpnorm command line front end: reads operators/maps/vectors as JSON, runs
// the library, emits versioned JSON reports. Exit codes: 0 success, 2 usage or
// precondition errors, 3 negative verdicts (refuted / not found / not in D).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bpnorm/json_io.hpp"

namespace {

using namespace bpnorm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerdict = 3;

Json read_json(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open input file: " + path);
  return Json::parse(in);
}

void write_output(const Json& j, const std::string& output) {
  std::string text = j.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw PreconditionError("cannot open output file: " + output);
  out << text;
}

struct CommonFlags {
  std::string input = "-";
  std::string candidate;
  std::string witness;
  std::string output;
  int n = 2;
  std::uint64_t seed = 0;
  int samples = 1000;
  int restarts = 32;
  int budget = 5000;
  double tol_alpha = 1e-4;
  double tol_bp = 1e-6;
};

void add_io_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--input", f.input, "input path or '-' for stdin");
  cmd->add_option("--output", f.output, "output path, default stdout");
  cmd->add_option("--seed", f.seed, "RNG seed");
  cmd->add_option("--restarts", f.restarts, "optimizer restarts");
  cmd->add_option("--tol-alpha", f.tol_alpha, "alpha tolerance");
  cmd->add_option("--tol-bp", f.tol_bp, "block-positivity tolerance");
}

MembershipOptions membership_options(const CommonFlags& f) {
  MembershipOptions opt;
  opt.tol.alpha = f.tol_alpha;
  opt.tol.bp = f.tol_bp;
  opt.alpha.restarts = f.restarts;
  opt.alpha.seed = f.seed;
  opt.seesaw.seed = f.seed;
  return opt;
}

std::vector<BipartiteOperator> default_directions(const BipartiteOperator& x) {
  std::vector<BipartiteOperator> out;
  for (auto& c : {make_swap(x.n), make_max_entangled(x.n)}) {
    if ((c.mat - x.mat).norm() > 1e-9) out.push_back(c);
  }
  Matrix p1 = Matrix::Zero(x.n, x.n);
  p1(0, 0) = 1.0;
  BipartiteOperator pi = make_p_tensor_identity(p1, x.n);
  if ((pi.mat - x.mat).norm() > 1e-9) out.push_back(pi);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bpnorm: norms, block-positivity and exposedness for operators on H (x) H"};
  app.require_subcommand(1);

  CommonFlags f;
  int exit_code = kExitOk;
  std::string catalog_name = "swap";
  std::string csv_path;
  int resolution = 720;
  std::uint64_t sample_index = 0;

  auto* c_alpha = app.add_subcommand("alpha", "dual norm alpha with witness");
  add_io_flags(c_alpha, f);
  c_alpha->callback([&] {
    auto op = operator_from_json(read_json(f.input));
    AlphaOptions a{f.restarts, 500, 1e-10, f.seed};
    write_output(make_report("alpha", to_json(alpha_norm(op, a))), f.output);
  });

  auto* c_pi = app.add_subcommand("pi", "projective norm interval [lower, upper]");
  add_io_flags(c_pi, f);
  c_pi->callback([&] {
    auto op = operator_from_json(read_json(f.input));
    PiOptions p;
    p.alpha = AlphaOptions{f.restarts, 500, 1e-10, f.seed};
    write_output(make_report("pi", to_json(pi_interval(op, p))), f.output);
  });

  auto* c_bp = app.add_subcommand("bp-check", "block-positivity verdict");
  add_io_flags(c_bp, f);
  c_bp->callback([&] {
    auto op = operator_from_json(read_json(f.input));
    SeeSawOptions s;
    s.seed = f.seed;
    auto verdict = is_block_positive(op, f.tol_bp, s);
    Json j{{"block_positive", verdict.block_positive},
           {"certificate", to_json(verdict.certificate)},
           {"tolerance", f.tol_bp}};
    write_output(make_report("bp-check", std::move(j)), f.output);
    if (!verdict.block_positive) exit_code = kExitVerdict;
  });

  auto* c_mem = app.add_subcommand("membership", "membership in B1+, D0, D, D+");
  add_io_flags(c_mem, f);
  c_mem->callback([&] {
    auto op = operator_from_json(read_json(f.input));
    auto rep = membership(op, membership_options(f));
    write_output(make_report("membership", to_json(rep)), f.output);
    if (!rep.in_D) exit_code = kExitVerdict;
  });

  auto* c_m2d = app.add_subcommand("map-to-density", "Choi-side density of a map");
  add_io_flags(c_m2d, f);
  c_m2d->callback([&] {
    auto phi = map_from_json(read_json(f.input));
    auto pair = make_pair(phi);
    Json j = operator_to_json(pair.density);
    j["pairing_residual"] = pair.pairing_residual;
    write_output(j, f.output);
  });

  auto* c_d2m = app.add_subcommand("density-to-map", "map of a Choi-side density");
  add_io_flags(c_d2m, f);
  c_d2m->callback([&] {
    auto rho = operator_from_json(read_json(f.input));
    auto phi = map_from_density(rho);
    Json j = map_to_json(phi);
    j["pairing_residual"] = pairing_residual(phi, rho);
    write_output(j, f.output);
  });

  auto* c_exp = app.add_subcommand("expose-check", "Monte-Carlo exposedness test");
  add_io_flags(c_exp, f);
  c_exp->add_option("--candidate", f.candidate, "candidate rho0 (operator JSON)")
      ->required();
  c_exp->add_option("--witness", f.witness, "witness a (operator JSON)")->required();
  c_exp->add_option("--samples", f.samples, "sample count");
  c_exp->callback([&] {
    auto rho0 = operator_from_json(read_json(f.candidate));
    auto a = operator_from_json(read_json(f.witness));
    ExposureOptions opt;
    opt.sampler.membership = membership_options(f);
    ExposureWitness w;
    double lam = min_eigenvalue(a.mat);
    if (lam < -1e-10)
      w = positivize_witness(a, -double(a.n) * lam + 1.0);
    else {
      w.a = a;
    }
    auto rep = check_exposure(rho0, w, f.samples, f.seed, opt);
    write_output(make_report("expose-check", to_json(rep)), f.output);
    if (!rep.supported) exit_code = kExitVerdict;
  });

  auto* c_rot = app.add_subcommand("rotund", "directional-derivative rotundity test");
  add_io_flags(c_rot, f);
  std::vector<std::string> direction_paths;
  c_rot->add_option("--direction", direction_paths,
                    "direction operator JSON (repeatable); default catalog");
  c_rot->callback([&] {
    auto x = operator_from_json(read_json(f.input));
    std::vector<BipartiteOperator> dirs;
    for (const auto& p : direction_paths) dirs.push_back(operator_from_json(read_json(p)));
    if (dirs.empty()) dirs = default_directions(x);
    AlphaOptions a{f.restarts, 500, 1e-10, f.seed};
    write_output(make_report("rotund", to_json(rotund_test(x, dirs, a))), f.output);
  });

  auto* c_sec = app.add_subcommand("section", "2D section of the alpha unit ball");
  add_io_flags(c_sec, f);
  c_sec->add_option("--candidate", f.candidate, "partner operator y")->required();
  c_sec->add_option("--resolution", resolution, "angular resolution");
  c_sec->add_option("--csv", csv_path, "write theta,radius CSV for plotting");
  c_sec->callback([&] {
    auto x = operator_from_json(read_json(f.input));
    auto y = operator_from_json(read_json(f.candidate));
    SectionOptions opt;
    opt.resolution = resolution;
    opt.alpha = AlphaOptions{f.restarts, 500, 1e-10, f.seed};
    auto rep = trace_section(x, y, opt);
    if (!csv_path.empty()) {
      std::ofstream csv(csv_path);
      if (!csv) throw PreconditionError("cannot open csv file: " + csv_path);
      csv << "theta,radius\n";
      for (size_t i = 0; i < rep.angles.size(); ++i)
        csv << rep.angles[i] << "," << rep.radii[i] << "\n";
    }
    write_output(make_report("section", to_json(rep)), f.output);
  });

  auto* c_cat = app.add_subcommand("catalog", "canonical operators as JSON");
  add_io_flags(c_cat, f);
  c_cat->add_option("--name", catalog_name,
                    "swap | max-entangled | p-tensor-i | identity-over-n | hybrid3d");
  c_cat->add_option("--n", f.n, "factor dimension");
  c_cat->callback([&] {
    BipartiteOperator op(f.n, Matrix::Zero(f.n * f.n, f.n * f.n));
    if (catalog_name == "swap") {
      op = make_swap(f.n);
    } else if (catalog_name == "max-entangled") {
      op = make_max_entangled(f.n);
    } else if (catalog_name == "p-tensor-i") {
      Matrix p1 = Matrix::Zero(f.n, f.n);
      p1(0, 0) = 1.0;
      op = make_p_tensor_identity(p1, f.n);
    } else if (catalog_name == "identity-over-n") {
      op = BipartiteOperator(
          f.n, Matrix(Matrix::Identity(f.n * f.n, f.n * f.n) / double(f.n)));
    } else if (catalog_name == "hybrid3d") {
      op = hybrid_3d(membership_options(f)).sigma;
    } else {
      throw PreconditionError("unknown catalog name: " + catalog_name);
    }
    write_output(operator_to_json(op), f.output);
  });

  auto* c_dec = app.add_subcommand("decompose", "decomposability search (Douglas-Rachford splitting)");
  add_io_flags(c_dec, f);
  c_dec->add_option("--budget", f.budget, "max splitting iterations");
  c_dec->callback([&] {
    auto rho = operator_from_json(read_json(f.input));
    DecompositionOptions opt;
    opt.max_iterations = f.budget;
    auto w = decomposable_test(rho, opt);
    write_output(make_report("decompose", to_json(w)), f.output);
    if (!w.found) exit_code = kExitVerdict;
  });

  auto* c_inv = app.add_subcommand("invariance-suite", "LO and tau_p invariance checks");
  add_io_flags(c_inv, f);
  c_inv->add_option("--samples", f.samples, "number of random local rotations")
      ->default_val(20);
  c_inv->callback([&] {
    auto sigma = operator_from_json(read_json(f.input));
    InvarianceOptions opt;
    opt.seed = f.seed;
    opt.trials = f.samples;
    opt.membership = membership_options(f);
    auto rep = invariance_suite(sigma, opt);
    write_output(make_report("invariance-suite", to_json(rep)), f.output);
    if (!rep.passed) exit_code = kExitVerdict;
  });

  auto* c_smp = app.add_subcommand("sample-d", "random element of D (decomposable region)");
  add_io_flags(c_smp, f);
  c_smp->add_option("--n", f.n, "factor dimension");
  c_smp->add_option("--index", sample_index, "sample counter within the seed stream");
  c_smp->callback([&] {
    write_output(operator_to_json(sample_D(f.n, f.seed, sample_index)), f.output);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
