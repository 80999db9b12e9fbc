// Command-line driver: every operation of the library behind one batch tool,
// with human-readable audit reports or canonical JSON (--json).
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "ztwo/json_io.hpp"

namespace {

using ztwo::io::json;

void print_human(const json& node, std::ostream& os, int indent = 0) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_structured())) {
        os << pad << key << ":\n";
        print_human(value, os, indent + 1);
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (node.is_array()) {
    for (const auto& item : node) {
      os << pad << "-\n";
      print_human(item, os, indent + 1);
    }
  } else {
    os << pad << node.dump() << "\n";
  }
}

struct Driver {
  bool as_json = false;

  void emit(const json& report) const {
    if (as_json)
      std::cout << ztwo::io::render(report);
    else
      print_human(report, std::cout);
  }

  // Lattice-with-involution input: named preset or JSON document.
  ztwo::io::LatticeDocument lattice_input(const std::string& preset,
                                          const std::string& path) const {
    if (!preset.empty()) {
      auto p = ztwo::presets::lattice_preset(preset);
      return {std::move(p.form), std::move(p.involution)};
    }
    if (path.empty()) throw std::invalid_argument("need --preset or --input");
    return ztwo::io::lattice_from_json(ztwo::io::load_file(path));
  }

  ztwo::indexthy::ManifoldProfile profile_input(const std::string& preset,
                                                const std::string& path) const {
    if (!preset.empty()) return ztwo::presets::profile_preset(preset);
    if (path.empty()) throw std::invalid_argument("need --preset or --input");
    json doc = ztwo::io::load_file(path);
    return ztwo::io::profile_from_json(doc.contains("profile") ? doc.at("profile") : doc);
  }
};

ztwo::indexthy::Route parse_route(const std::string& route) {
  if (route == "gauge") return ztwo::indexthy::Route::Gauge;
  if (route == "even-k") return ztwo::indexthy::Route::EvenK;
  throw std::invalid_argument("route must be 'gauge' or 'even-k'");
}

json index_sum_table(const ztwo::indexthy::ManifoldProfile& profile, long long m) {
  json rows = json::array();
  for (long long s : ztwo::indexthy::admissible_eps_sums(profile, m, false)) {
    auto k = ztwo::indexthy::equivariant_indices(profile.signature, s);
    rows.push_back(json{{"eps_sum", s},
                        {"k_plus", k.k_first},
                        {"k_minus", k.k_second},
                        {"both_even", k.k_first % 2 == 0 && k.k_second % 2 == 0}});
  }
  return rows;
}

constexpr const char* kDerivedBoundaryNote =
    "the boundary below the second-highest degree is the transfer map 1+g, derived from "
    "d(d)=0 on free orbits rather than from constructed cells";

constexpr const char* kEvenTypeNote =
    "the verdict path assumes an even-type lift, which corresponds to a discrete fixed-point "
    "set; non-discrete fixed sets are not detectable from numerical profiles";

}  // namespace

int main(int argc, char** argv) {
  Driver driver;
  CLI::App app{"exact calculus of involutions on even unimodular forms"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", driver.as_json, "emit the canonical JSON report");

  // Shared option storage; CLI11 writes into these before the callbacks run.
  std::string preset, input, matrix_name, link_path, route_name = "even-k";
  std::string coefficients = "Z", action = "trivial";
  bool bf_nonvanishing = false, odd_type = false;
  long long k_plus = 0, k_minus = 0, k1 = 0, k3 = 0;
  int a_plus = 0, a_minus = 0, b_plus = 0, b_minus = 0;
  int degree = 0;

  auto add_lattice_source = [&](CLI::App* cmd) {
    auto* p = cmd->add_option("--preset", preset, "named lattice: E8, H, K3, K3K3, A, B");
    auto* i = cmd->add_option("--input", input, "JSON file {\"gram\": [[..]], \"involution\": [[..]]}");
    p->excludes(i);
  };
  auto add_profile_source = [&](CLI::App* cmd) {
    auto* p = cmd->add_option("--preset", preset, "named profile: k3, k3k3");
    auto* i = cmd->add_option("--input", input, "JSON file with profile fields");
    p->excludes(i);
  };
  auto add_multiplicities = [&](CLI::App* cmd) {
    cmd->add_option("--aplus", a_plus)->required();
    cmd->add_option("--aminus", a_minus)->required();
    cmd->add_option("--bplus", b_plus)->required();
    cmd->add_option("--bminus", b_minus);
  };

  // form check | classify
  auto* form = app.add_subcommand("form", "properties and classification of a form");
  auto* form_check = form->add_subcommand("check", "parity, unimodularity, exact signature");
  add_lattice_source(form_check);
  form_check->callback([&] {
    auto doc = driver.lattice_input(preset, input);
    json report{{"rank", doc.form.rank()},
                {"properties", ztwo::io::to_json(ztwo::lattice::form_properties(doc.form))}};
    driver.emit(report);
  });
  auto* form_classify = form->add_subcommand("classify", "decompose as E8 and hyperbolic summands");
  add_lattice_source(form_classify);
  form_classify->callback([&] {
    auto doc = driver.lattice_input(preset, input);
    json report{{"rank", doc.form.rank()},
                {"properties", ztwo::io::to_json(ztwo::lattice::form_properties(doc.form))},
                {"class", ztwo::io::to_json(ztwo::lattice::classify_indefinite_even(doc.form))}};
    driver.emit(report);
  });

  // involution analyze
  auto* involution = app.add_subcommand("involution", "analysis of an order-2 isometry");
  auto* analyze = involution->add_subcommand("analyze", "eigenlattices, module decomposition, signatures");
  add_lattice_source(analyze);
  analyze->callback([&] {
    auto doc = driver.lattice_input(preset, input);
    const bool valid = ztwo::lattice::check_involution(doc.form, doc.involution);
    json report{{"rank", doc.form.rank()}, {"involution_valid", valid}};
    if (valid) {
      report["eigenlattice_ranks"] =
          ztwo::io::to_json(ztwo::lattice::eigenlattice_ranks(doc.form, doc.involution));
      report["tate"] = ztwo::io::to_json(ztwo::lattice::tate_dims(doc.form, doc.involution));
      report["decomposition"] =
          ztwo::io::to_json(ztwo::lattice::integral_decomposition(doc.form, doc.involution));
      report["g_signature"] = ztwo::lattice::g_signature(doc.form, doc.involution);
      report["b_plus_fixed"] = ztwo::lattice::b_plus_fixed(doc.form, doc.involution);
      report["ee"] = ztwo::io::to_json(ztwo::lattice::ee_conditions(doc.form, doc.involution));
    }
    driver.emit(report);
  });

  // ee check
  auto* ee = app.add_subcommand("ee", "realization conditions");
  auto* ee_check = ee->add_subcommand("check", "conditions on a form or shape check on a link matrix");
  ee_check->add_option("--preset", preset, "K3, K3K3 (form route) or A, B (link route)");
  ee_check->add_option("--input", input, "JSON file with \"gram\" (form route) or \"link\"");
  ee_check->callback([&] {
    json report;
    json doc;
    if (!preset.empty()) {
      if (preset == "A" || preset == "a" || preset == "B" || preset == "b")
        doc = ztwo::io::link_to_json(ztwo::presets::link_preset(preset));
      else {
        auto p = ztwo::presets::lattice_preset(preset);
        doc = json{{"gram", ztwo::io::matrix_to_json(p.form.gram())},
                   {"involution", ztwo::io::matrix_to_json(p.involution.action())}};
      }
    } else {
      doc = ztwo::io::load_file(input);
    }
    if (doc.contains("gram")) {
      auto lat = ztwo::io::lattice_from_json(doc);
      auto r = ztwo::lattice::ee_conditions(lat.form, lat.involution);
      report["form_conditions"] = ztwo::io::to_json(r);
      report["all"] = r.all();
    }
    if (doc.contains("link")) {
      auto m = ztwo::io::link_from_json(doc);
      const bool shape_ok = ztwo::realization::ee_matrix_check(m);
      report["link_shape_ok"] = shape_ok;
      report["invariant_disks"] = m.invariant_disks();
      if (shape_ok) {
        report["achievable"] = ztwo::io::to_json(ztwo::realization::eps_achievable(m));
        auto d = ztwo::realization::handle_description(m, 0);
        json rel = json::array();
        for (int s : d.eps_rel) rel.push_back(s);
        report["eps_rel"] = rel;
        report["fixed_points"] = d.fixed_points;
      }
    }
    if (report.empty()) throw std::invalid_argument("input has neither \"gram\" nor \"link\"");
    driver.emit(report);
  });

  // index
  auto* index = app.add_subcommand("index", "equivariant index arithmetic for a profile");
  add_profile_source(index);
  auto* index_route = index->add_option("--route", route_name, "gauge or even-k");
  index->add_flag("--bf-nonvanishing", bf_nonvanishing,
                  "assert nonvanishing of the stable invariant (gauge route)");
  index->callback([&] {
    auto profile = driver.profile_input(preset, input);
    const long long m = ztwo::indexthy::fixed_point_count(profile);
    json report{{"profile", ztwo::io::profile_to_json(profile)},
                {"m", m},
                {"spin_index", ztwo::indexthy::spin_index(profile.signature)},
                {"sums", index_sum_table(profile, m)},
                {"admissible", ztwo::io::to_json(ztwo::indexthy::admissible_eps_sums(profile, m, false))},
                {"admissible_even_k",
                 ztwo::io::to_json(ztwo::indexthy::admissible_eps_sums(profile, m, true))},
                {"note", ztwo::indexthy::even_k_tension_note()}};
    if (*index_route) {
      report["route"] = route_name;
      report["required"] = ztwo::io::to_json(ztwo::indexthy::smooth_required_eps(
          profile, m, bf_nonvanishing, parse_route(route_name)));
    }
    driver.emit(report);
  });

  // bredon top | cohomology | suspension
  auto* bredon = app.add_subcommand("bredon", "equivariant chain and cohomology computations");
  auto* top = bredon->add_subcommand("top", "top cells of the circle quotient of a representation sphere");
  add_multiplicities(top);
  top->callback([&] {
    ztwo::bredon::RepMultiplicities v{a_plus, a_minus, b_plus, b_minus};
    json report{{"v", ztwo::io::to_json(v)},
                {"fixed_dims", ztwo::io::to_json(ztwo::bredon::fixed_dims(v))},
                {"complex", ztwo::io::to_json(ztwo::bredon::top_complex(v))},
                {"note", kDerivedBoundaryNote}};
    driver.emit(report);
  });
  auto* cohomology = bredon->add_subcommand("cohomology", "cohomology of the top complex");
  add_multiplicities(cohomology);
  cohomology->add_option("--degree", degree)->required();
  cohomology->add_option("--coefficients", coefficients, "Z or Z2");
  cohomology->add_option("--action", action, "trivial or sign");
  cohomology->callback([&] {
    ztwo::bredon::RepMultiplicities v{a_plus, a_minus, b_plus, b_minus};
    auto complex = ztwo::bredon::top_complex(v);
    if (coefficients != "Z" && coefficients != "Z2")
      throw std::invalid_argument("coefficients must be 'Z' or 'Z2'");
    if (action != "trivial" && action != "sign")
      throw std::invalid_argument("action must be 'trivial' or 'sign'");
    ztwo::bredon::CoefficientModule m(coefficients == "Z"
                                          ? ztwo::bredon::CoefficientModule::Ring::Z
                                          : ztwo::bredon::CoefficientModule::Ring::Z2,
                                      action == "sign"
                                          ? ztwo::bredon::CoefficientModule::Action::Sign
                                          : ztwo::bredon::CoefficientModule::Action::Trivial);
    json report{{"v", ztwo::io::to_json(v)},
                {"top_degree", complex.top_degree()},
                {"degree", degree},
                {"coefficients", coefficients},
                {"action", m.action == ztwo::bredon::CoefficientModule::Action::Sign ? "sign" : "trivial"},
                {"group", ztwo::io::to_json(ztwo::bredon::bredon_cohomology(complex, m, degree))},
                {"forgetful_image", ztwo::io::to_json(ztwo::bredon::forgetful_image(complex, m, degree))}};
    if (degree < complex.top_degree()) report["note"] = kDerivedBoundaryNote;
    driver.emit(report);
  });
  auto* suspension = bredon->add_subcommand("suspension", "stable-range suspension for a profile");
  add_profile_source(suspension);
  suspension->add_option("--kplus", k_plus)->required();
  suspension->add_option("--kminus", k_minus)->required();
  suspension->callback([&] {
    auto profile = driver.profile_input(preset, input);
    ztwo::bredon::RepMultiplicities w0{0, 0, static_cast<int>(profile.b_plus_fixed),
                                       static_cast<int>(profile.b_plus - profile.b_plus_fixed)};
    auto data = ztwo::bredon::suspension_data({k_plus, k_minus}, w0);
    json report{{"profile", ztwo::io::profile_to_json(profile)},
                {"k_plus", k_plus},
                {"k_minus", k_minus},
                {"v_prime", ztwo::io::to_json(data.v_prime)},
                {"v", ztwo::io::to_json(data.v)},
                {"w", ztwo::io::to_json(data.w)}};
    driver.emit(report);
  });

  // vanishing check
  auto* vanishing = app.add_subcommand("vanishing", "vanishing-theorem hypothesis checker");
  auto* vanishing_check = vanishing->add_subcommand("check", "evaluate the four hypotheses");
  add_profile_source(vanishing_check);
  vanishing_check->add_option("--kplus", k_plus);
  vanishing_check->add_option("--kminus", k_minus);
  vanishing_check->add_flag("--odd-type", odd_type, "use weight-1/weight-3 components");
  vanishing_check->add_option("--k1", k1);
  vanishing_check->add_option("--k3", k3);
  vanishing_check->callback([&] {
    auto profile = driver.profile_input(preset, input);
    ztwo::indexthy::SpinIndices k =
        odd_type ? ztwo::indexthy::SpinIndices{k1, k3, true}
                 : ztwo::indexthy::SpinIndices{k_plus, k_minus, false};
    auto verdict = odd_type ? ztwo::vanishing::bf_vanishing_odd(profile, k)
                            : ztwo::vanishing::bf_vanishing_even(profile, k);
    json report{{"profile", ztwo::io::profile_to_json(profile)},
                {"k", ztwo::io::to_json(k)},
                {"result", ztwo::io::to_json(verdict)}};
    driver.emit(report);
  });

  // verdict
  auto* verdict = app.add_subcommand("verdict", "full nonsmoothability pipeline");
  verdict->add_option("--preset", preset, "k3 or k3k3 (profile + form + involution)");
  verdict->add_option("--input", input,
                      "JSON file {\"profile\": .., \"gram\": .., \"involution\": .., \"link\": ..}");
  verdict->add_option("--matrix", matrix_name, "link-matrix preset: A or B");
  verdict->add_option("--link", link_path, "JSON file with a \"link\" matrix");
  verdict->add_option("--route", route_name, "gauge or even-k")->required();
  verdict->add_flag("--bf-nonvanishing", bf_nonvanishing,
                    "assert nonvanishing of the stable invariant (required for gauge)");
  verdict->callback([&] {
    ztwo::indexthy::ManifoldProfile profile{};
    std::optional<ztwo::io::LatticeDocument> lat;
    std::optional<ztwo::realization::FramedLinkMatrix> link;
    if (!preset.empty()) {
      profile = ztwo::presets::profile_preset(preset);
      auto lp = ztwo::presets::lattice_preset(preset == "k3" ? "K3" : "K3K3");
      lat.emplace(ztwo::io::LatticeDocument{std::move(lp.form), std::move(lp.involution)});
    } else if (!input.empty()) {
      json doc = ztwo::io::load_file(input);
      profile = ztwo::io::profile_from_json(doc.at("profile"));
      lat.emplace(ztwo::io::lattice_from_json(doc));
      if (doc.contains("link")) link.emplace(ztwo::io::link_from_json(doc));
    } else {
      throw std::invalid_argument("verdict needs --preset or --input");
    }
    if (!matrix_name.empty()) link.emplace(ztwo::presets::link_preset(matrix_name));
    if (!link_path.empty()) link.emplace(ztwo::io::link_from_json(ztwo::io::load_file(link_path)));
    if (!link) throw std::invalid_argument("verdict needs a link matrix (--matrix or --link)");

    auto report = ztwo::vanishing::nonsmoothability(profile, lat->form, lat->involution, *link,
                                                    parse_route(route_name), bf_nonvanishing);
    json out{{"profile", ztwo::io::profile_to_json(profile)},
             {"report", ztwo::io::to_json(report)},
             {"notes", json::array({ztwo::indexthy::even_k_tension_note(), kEvenTypeNote})}};
    driver.emit(out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
