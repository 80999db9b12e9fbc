#include "ztwo/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace ztwo::io {

namespace {

const Int kJsonSafeBound = (Int(1) << 53);  // exclusive

long long to_ll(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string("expected an integer for ") + what);
  return j.get<long long>();
}

}  // namespace

json int_to_json(const Int& x) {
  if (abs(x) < kJsonSafeBound) return json(x.get_si());
  return json(x.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument("matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = int_from_json(row.at(static_cast<size_t>(c)));
  }
  return m;
}

LatticeDocument lattice_from_json(const json& j) {
  if (!j.contains("gram")) throw std::invalid_argument("lattice document needs a \"gram\" matrix");
  lattice::BilinearLattice form(matrix_from_json(j.at("gram")));
  lattice::LatticeInvolution involution =
      j.contains("involution") ? lattice::LatticeInvolution(matrix_from_json(j.at("involution")))
                               : lattice::LatticeInvolution::identity(form.rank());
  return {std::move(form), std::move(involution)};
}

indexthy::ManifoldProfile profile_from_json(const json& j) {
  indexthy::ManifoldProfile p;
  p.euler = to_ll(j.at("chi"), "chi");
  p.signature = to_ll(j.at("sign"), "sign");
  p.b1 = j.contains("b1") ? to_ll(j.at("b1"), "b1") : 0;
  p.b_plus = to_ll(j.at("b_plus"), "b_plus");
  p.b_plus_fixed = to_ll(j.at("b_plus_fixed"), "b_plus_fixed");
  p.spin = j.value("spin", false);
  p.validate();
  return p;
}

json profile_to_json(const indexthy::ManifoldProfile& p) {
  return json{{"chi", p.euler},          {"sign", p.signature},
              {"b1", p.b1},              {"b_plus", p.b_plus},
              {"b_plus_fixed", p.b_plus_fixed}, {"spin", p.spin}};
}

realization::FramedLinkMatrix link_from_json(const json& j) {
  if (!j.contains("link")) throw std::invalid_argument("link document needs a \"link\" matrix");
  return realization::FramedLinkMatrix(matrix_from_json(j.at("link")),
                                       j.value("invariant_disks", true));
}

json link_to_json(const realization::FramedLinkMatrix& m) {
  return json{{"link", matrix_to_json(m.matrix())}, {"invariant_disks", m.invariant_disks()}};
}

json to_json(const lattice::FormProperties& p) {
  return json{{"even", p.even},
              {"unimodular", p.unimodular},
              {"signature", p.signature},
              {"indefinite", p.indefinite},
              {"determinant", int_to_json(p.det)}};
}

json to_json(const lattice::FormClass& c) {
  return json{{"e8_count", c.e8_count},
              {"hyperbolic_count", c.hyperbolic_count},
              {"positive_e8", c.positive_e8}};
}

json to_json(const lattice::EigenlatticeRanks& r) {
  return json{{"fixed", r.fixed}, {"anti", r.anti}};
}

json to_json(const lattice::TateDims& t) { return json{{"h0", t.h0}, {"h1", t.h1}}; }

json to_json(const lattice::DecompositionReport& d) {
  return json{{"trivial", d.trivial}, {"sign", d.sign},   {"regular", d.regular},
              {"tate0", d.tate0},     {"tate1", d.tate1}};
}

json to_json(const lattice::EEReport& r) {
  return json{{"cond1", r.cond1},           {"cond2", r.cond2},   {"cond3", r.cond3},
              {"n_trivial", r.n_trivial},   {"g_signature", r.g_sig}};
}

json to_json(const indexthy::SpinIndices& k) {
  if (k.odd_type) return json{{"k1", k.k_first}, {"k3", k.k_second}, {"type", "odd"}};
  return json{{"k_plus", k.k_first}, {"k_minus", k.k_second}, {"type", "even"}};
}

json to_json(const std::set<long long>& s) {
  json arr = json::array();
  for (long long v : s) arr.push_back(v);
  return arr;
}

json to_json(const bredon::RepMultiplicities& v) {
  return json{{"a_plus", v.a_plus}, {"a_minus", v.a_minus},
              {"b_plus", v.b_plus}, {"b_minus", v.b_minus}};
}

json to_json(const bredon::FixedDims& d) {
  json out;
  for (bredon::Subgroup h : bredon::kAllSubgroups) out[bredon::subgroup_name(h)] = d.at(h);
  return out;
}

json to_json(const bredon::CohomologyGroup& g) {
  json factors = json::array();
  for (const Int& f : g.invariant_factors) factors.push_back(int_to_json(f));
  return json{{"invariant_factors", factors}, {"name", group_name(g)}};
}

json to_json(const bredon::EquivariantChainComplex& c) {
  json degrees = json::array();
  json ranks = json::array();
  for (int d = c.lowest_degree(); d <= c.top_degree(); ++d) {
    degrees.push_back(d);
    ranks.push_back(c.rank_at(d));
  }
  json boundaries = json::array();
  for (int d = c.lowest_degree() + 1; d <= c.top_degree(); ++d) {
    boundaries.push_back(json{{"from_degree", d},
                              {"to_degree", d - 1},
                              {"matrix", matrix_to_json(c.boundary_from(d))}});
  }
  return json{{"degrees", degrees},
              {"ranks", ranks},
              {"boundaries", boundaries},
              {"top_degree", c.top_degree()},
              {"lower_boundary_derived", c.lower_boundary_derived()}};
}

json to_json(const vanishing::ConditionRecord& c) {
  return json{{"b1_zero", c.b1_zero},
              {"b_plus_ge_2", c.b_plus_ge_2},
              {"b_plus_fixed_ge_1", c.b_plus_fixed_ge_1},
              {"parity_odd", c.parity_odd},
              {"dc_is_one", c.dc_is_one},
              {"index_bounds", c.index_bounds},
              {"all", c.all()}};
}

json to_json(const vanishing::BredonCertificate& c) {
  return json{{"v", to_json(c.v)},
              {"w", to_json(c.w)},
              {"top_degree", c.top_degree},
              {"low_degree_vanishing", c.low_degree_vanishing},
              {"twisted_coefficients", c.twisted_coefficients},
              {"h_below_top", to_json(c.h_below_top)},
              {"forgetful_at_top", to_json(c.forgetful_at_top)},
              {"lower_boundary_derived", c.lower_boundary_derived},
              {"verifies", c.verifies()}};
}

json to_json(const vanishing::VanishingVerdict& v) {
  json out{{"verdict", v.verdict == vanishing::Verdict::Vanishes ? "Vanishes" : "NoConclusion"},
           {"conditions", to_json(v.conditions)}};
  if (v.certificate) out["certificate"] = to_json(*v.certificate);
  return out;
}

json to_json(const vanishing::NonsmoothabilityReport& r) {
  json out{{"verdict", r.verdict == vanishing::NonsmoothabilityReport::Outcome::Nonsmoothable
                           ? "Nonsmoothable"
                           : "Inconclusive"},
           {"required", to_json(r.required)},
           {"achievable", to_json(r.achievable)},
           {"ee", to_json(r.ee)},
           {"class_match", r.class_match},
           {"m_consistency", r.m_consistency},
           {"fixed_points", r.fixed_points},
           {"trivial_rank", r.trivial_rank},
           {"t_matrix_class", to_json(r.t_matrix_class)},
           {"route", r.route == indexthy::Route::Gauge ? "gauge" : "even-k"},
           {"bf_nonvanishing", r.bf_nonvanishing}};
  if (r.trivial_block_class) out["trivial_block_class"] = to_json(*r.trivial_block_class);
  json rows = json::array();
  for (const auto& row : r.sum_audit) {
    rows.push_back(json{{"eps_sum", row.eps_sum},
                        {"k", to_json(row.k)},
                        {"conditions", to_json(row.conditions)},
                        {"both_even", row.both_even},
                        {"removed", row.removed}});
  }
  out["sum_audit"] = rows;
  return out;
}

std::string group_name(const bredon::CohomologyGroup& g) {
  if (g.trivial()) return "0";
  std::string name;
  for (const Int& f : g.invariant_factors) {
    if (!name.empty()) name += " + ";
    name += (f == 0) ? "Z" : "Z/" + f.get_str();
  }
  return name;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace ztwo::io
