#include "bpnorm/json_io.hpp"

#include <cmath>

namespace bpnorm {

namespace {

Json real_grid(const Matrix& m, bool imag) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  return Json{{"re", real_grid(m, false)}, {"im", real_grid(m, true)}};
}

Matrix matrix_from_json(const Json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const size_t rows = re.size();
  if (rows == 0 || im.size() != rows)
    throw PreconditionError("matrix JSON: re/im shape mismatch");
  const size_t cols = re[0].size();
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (re[i].size() != cols || im[i].size() != cols)
      throw PreconditionError("matrix JSON: ragged rows");
    for (size_t k = 0; k < cols; ++k)
      m(i, k) = Complex(re[i][k].get<double>(), im[i][k].get<double>());
  }
  if (!is_finite(m)) throw PreconditionError("matrix JSON: non-finite entries");
  return m;
}

Json operator_to_json(const BipartiteOperator& op) {
  Json j = matrix_to_json(op.mat);
  j["n"] = op.n;
  return j;
}

BipartiteOperator operator_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  Matrix m = matrix_from_json(j);
  if (m.rows() != n * n || m.cols() != n * n)
    throw PreconditionError("operator JSON: matrix must be n^2 x n^2");
  return BipartiteOperator(n, std::move(m));
}

Json vector_to_json(const Vector& v, int n) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Vector vector_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != n * n || im.size() != re.size())
    throw PreconditionError("vector JSON: length must be n^2");
  Vector v(n * n);
  for (int i = 0; i < n * n; ++i)
    v(i) = Complex(re[i].get<double>(), im[i].get<double>());
  return v;
}

Json map_to_json(const LinearMapRepr& phi) {
  Json images = Json::array();
  for (int i = 0; i < phi.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < phi.n; ++j) row.push_back(matrix_to_json(phi.images[i][j]));
    images.push_back(std::move(row));
  }
  return Json{{"n", phi.n}, {"images", std::move(images)}};
}

LinearMapRepr map_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  const auto& images = j.at("images");
  if (static_cast<int>(images.size()) != n)
    throw PreconditionError("map JSON: images must be n x n");
  LinearMapRepr phi(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(images[i].size()) != n)
      throw PreconditionError("map JSON: images must be n x n");
    for (int k = 0; k < n; ++k) {
      Matrix m = matrix_from_json(images[i][k]);
      if (m.rows() != n || m.cols() != n)
        throw PreconditionError("map JSON: image matrices must be n x n");
      phi.images[i][k] = std::move(m);
    }
  }
  return phi;
}

Json to_json(const SymmetryWitness& w) {
  return Json{{"s", matrix_to_json(w.s)},
              {"g", vector_to_json(w.g, static_cast<int>(w.g.size()))},
              {"sign", w.sign}};
}

Json to_json(const AlphaEstimate& e) {
  return Json{{"value", e.value},
              {"lower", e.value},
              {"upper", e.value},
              {"witness", to_json(e.witness)},
              {"restarts", e.restarts},
              {"iterations", e.iterations},
              {"converged", e.converged}};
}

Json to_json(const PiEstimate& e) {
  return Json{{"value", e.lower},
              {"lower", e.lower},
              {"upper", e.upper},
              {"gap", e.gap()},
              {"witness",
               Json{{"description", e.lower_witness_desc},
                    {"alpha", e.lower_witness_alpha},
                    {"density", operator_to_json(e.lower_witness)}}},
              {"upper_certificate", e.upper_certificate},
              {"upper_terms", e.upper_terms}};
}

Json to_json(const ProductVectorCertificate& c) {
  return Json{{"f", vector_to_json(c.f, static_cast<int>(c.f.size()))},
              {"g", vector_to_json(c.g, static_cast<int>(c.g.size()))},
              {"value", c.value},
              {"restarts", c.restarts},
              {"iterations", c.iterations},
              {"converged", c.converged}};
}

Json to_json(const MembershipReport& r) {
  return Json{{"hermitian", r.hermitian},
              {"psd", r.psd},
              {"min_eigenvalue", r.min_eigenvalue},
              {"bp", r.bp},
              {"bp_epistemic_status", "one-sided: see-saw found no violation"},
              {"bp_certificate", to_json(r.bp_certificate)},
              {"alpha", to_json(r.alpha)},
              {"trace", r.trace},
              {"in_B1plus", r.in_B1plus},
              {"in_D0", r.in_D0},
              {"in_D", r.in_D},
              {"in_Dplus", r.in_Dplus},
              {"tolerances",
               Json{{"hermitian", r.tolerances.hermitian},
                    {"psd", r.tolerances.psd},
                    {"bp", r.tolerances.bp},
                    {"alpha", r.tolerances.alpha},
                    {"trace", r.tolerances.trace}}}};
}

Json to_json(const ExposureReport& r) {
  Json j{{"candidate", operator_to_json(r.candidate)},
         {"witness",
          Json{{"a", operator_to_json(r.witness.a)},
               {"shift", r.witness.shift},
               {"separable", r.witness.separable}}},
         {"samples", r.samples},
         {"min_gap", r.min_gap},
         {"verdict", r.supported ? "supported" : "refuted"},
         {"epistemic_status", "Monte-Carlo evidence, not proof"},
         {"sampler", r.sampler},
         {"seed", r.seed}};
  if (r.counterexample) j["counterexample"] = operator_to_json(*r.counterexample);
  return j;
}

Json to_json(const SectionReport& r) {
  return Json{{"left_tangent", r.left_slope},
              {"right_tangent", r.right_slope},
              {"corner", r.corner},
              {"angles", r.angles},
              {"radii", r.radii}};
}

Json to_json(const UPBReport& r) {
  return Json{{"max_product_overlap_complement", r.max_product_overlap_complement},
              {"min_product_overlap_p", r.min_product_overlap_p},
              {"product_free", r.product_free},
              {"simple", r.simple},
              {"complement_certificate", to_json(r.complement_certificate)},
              {"min_certificate", to_json(r.min_certificate)}};
}

Json to_json(const DecompositionWitness& w) {
  return Json{{"status", w.found ? "found" : "not_found_within_budget"},
              {"residual", w.residual},
              {"iterations", w.iterations},
              {"A", operator_to_json(w.a)},
              {"B", operator_to_json(w.b)}};
}

Json to_json(const InvarianceReport& r) {
  return Json{{"trials", r.trials},
              {"max_alpha_deviation", r.max_alpha_deviation},
              {"max_bp_deviation", r.max_bp_deviation},
              {"pi_intervals_overlap", r.pi_intervals_overlap},
              {"membership_flags_stable", r.membership_flags_stable},
              {"passed", r.passed}};
}

Json to_json(const RotundReport& r) {
  Json dirs = Json::array();
  for (const auto& d : r.directions)
    dirs.push_back(Json{{"quotients", {d.quotients[0], d.quotients[1], d.quotients[2]}},
                        {"rotund_along", d.rotund_along}});
  return Json{{"directions", std::move(dirs)}, {"rotund", r.rotund}};
}

Json to_json(const SmoothReport& r) {
  Json reps = Json::array();
  for (const auto& w : r.representatives) reps.push_back(to_json(w));
  return Json{{"clusters", r.clusters},
              {"smooth", r.smooth},
              {"representatives", std::move(reps)}};
}

Json make_report(const std::string& kind, Json payload) {
  Json j = std::move(payload);
  j["schema"] = "bpnorm/1";
  j["kind"] = kind;
  return j;
}

}  // namespace bpnorm
