// Command-line front end: classification pipeline, combinatorial
// reports, integral point searches, density experiments and the
// Brauer-Manin counter-example verdict. All output is a single JSON
// document per run.
//
// Exit codes: 0 success, 2 invalid input, 3 certification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "logk3.hpp"

namespace {

using logk3::json;

struct CommonOpts {
  std::string input_path;
  std::string inline_json;
  std::string out_path;
};

json load_input(const CommonOpts& opts) {
  if (!opts.inline_json.empty()) return json::parse(opts.inline_json);
  if (opts.input_path.empty())
    logk3::bad_input("supply --input <file> or --json <inline json>");
  std::ifstream in(opts.input_path);
  if (!in) logk3::bad_input("cannot open input file '" + opts.input_path + "'");
  return json::parse(in);
}

int write_output(const json& doc, const CommonOpts& opts) {
  if (opts.out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(opts.out_path);
    if (!out) logk3::bad_input("cannot open output file '" + opts.out_path + "'");
    out << doc.dump(2) << "\n";
  }
  return 0;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
  if (with_input) {
    cmd->add_option("--input", opts.input_path, "path to a JSON input file");
    cmd->add_option("--json", opts.inline_json, "inline JSON input");
  }
  cmd->add_option("--out", opts.out_path, "write the JSON output here");
}

logk3::FiniteGroup parse_group_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{')
    return logk3::group_from_json(json::parse(arg));
  return logk3::group_by_name(arg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic of ample log K3 surfaces of Picard rank 0"};
  app.require_subcommand(1);

  CommonOpts opts;

  // classify
  auto* cmd_classify = app.add_subcommand(
      "classify", "reduce a structure to degree 5 and read off its class");
  std::string classify_a;
  add_common(cmd_classify, opts);
  cmd_classify->add_option(
      "--a", classify_a,
      "square-free integer realizing a quadratic character");

  // reduce
  auto* cmd_reduce = app.add_subcommand(
      "reduce", "rewrite a structure to degree 5, printing the trace");
  add_common(cmd_reduce, opts);

  // sequences
  auto* cmd_sequences = app.add_subcommand(
      "sequences", "admissible self-intersection sequences for a degree");
  int seq_degree = 5;
  cmd_sequences->add_option("--degree", seq_degree, "degree in [5, 8]")
      ->required();
  add_common(cmd_sequences, opts, false);

  // petersen
  auto* cmd_petersen =
      app.add_subcommand("petersen", "five-cycle and automorphism report");
  bool petersen_full = false;
  cmd_petersen->add_flag("--full", petersen_full, "include full listings");
  add_common(cmd_petersen, opts, false);

  // h1
  auto* cmd_h1 = app.add_subcommand(
      "h1", "classes of homomorphisms into the 5-cycle symmetries");
  std::string h1_group;
  cmd_h1->add_option("--group", h1_group, "group name (Z2, Z5, D4, Q8, Z2xZ2) or JSON")
      ->required();
  add_common(cmd_h1, opts, false);

  // points
  auto* cmd_points = app.add_subcommand("points", "integral point search");
  auto* cmd_points_search =
      cmd_points->add_subcommand("search", "M-integral solutions in a box");
  std::string points_family = "trivial", points_coeffs;
  long long points_m = 1, points_bound = 100;
  cmd_points_search->add_option("--family", points_family,
                                "trivial | bilinear | normform | generald7");
  cmd_points_search->add_option("--coeffs", points_coeffs,
                                "JSON array of exact coefficients");
  cmd_points_search->add_option("--M", points_m, "denominator bound");
  cmd_points_search->add_option("--bound", points_bound, "box half-width B");
  add_common(cmd_points_search, opts, false);
  auto* cmd_points_nondensity = cmd_points->add_subcommand(
      "nondensity", "curve-decomposition certificate for the trivial model");
  long long nondensity_m = 1, nondensity_box = 1000;
  cmd_points_nondensity->add_option("--M", nondensity_m, "denominator bound");
  cmd_points_nondensity->add_option("--box", nondensity_box, "box half-width");
  add_common(cmd_points_nondensity, opts, false);
  cmd_points->require_subcommand(1);

  // density
  auto* cmd_density = app.add_subcommand(
      "density", "Pell-unit point families on (x^2 - a y^2)t = y - 1");
  long long density_a = 2;
  int density_primes = 3, density_points = 3;
  long density_prime_bound = 2000;
  cmd_density->add_option("--a", density_a, "square-free a = 2, 3 (mod 4)");
  cmd_density->add_option("--primes", density_primes, "number of curves");
  cmd_density->add_option("--points", density_points, "points per curve");
  cmd_density->add_option("--prime-bound", density_prime_bound,
                          "search bound for surjective primes");
  add_common(cmd_density, opts, false);

  // brauer
  auto* cmd_brauer = app.add_subcommand("brauer", "Hilbert symbols and the counter-example");
  auto* cmd_hilbert = cmd_brauer->add_subcommand("hilbert", "one Hilbert symbol");
  std::string hil_a, hil_b, hil_place;
  cmd_hilbert->add_option("--a", hil_a, "first entry (exact rational)")->required();
  cmd_hilbert->add_option("--b", hil_b, "second entry (exact rational)")->required();
  cmd_hilbert->add_option("--place", hil_place, "prime p or 'inf'")->required();
  add_common(cmd_hilbert, opts, false);
  auto* cmd_counter = cmd_brauer->add_subcommand(
      "counterexample", "verdict for ((11x+5)y + 3)t = 3x + 1");
  long long counter_box = 1000;
  long counter_places = 100;
  cmd_counter->add_option("--box", counter_box, "emptiness search box");
  cmd_counter->add_option("--places", counter_places, "local solubility bound");
  add_common(cmd_counter, opts, false);
  auto* cmd_local = cmd_brauer->add_subcommand(
      "local", "local integral witnesses for a generald7 model");
  std::string local_params;
  long local_bound = 100;
  cmd_local->add_option("--coeffs", local_params, "JSON array [a,b,c,d,m]")
      ->required();
  cmd_local->add_option("--prime-bound", local_bound, "witness primes up to here");
  add_common(cmd_local, opts, false);
  cmd_brauer->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    using namespace logk3;
    if (cmd_classify->parsed()) {
      auto s = structure_from_json(load_input(opts));
      std::optional<Int> a;
      if (!classify_a.empty()) a = parse_int(classify_a);
      Classification c = classify(s, a);
      json doc{{"class", to_json(c.cls)},
               {"character", c.character},
               {"model", to_json(c.model)},
               {"trace", to_json(c.reduction.trace)},
               {"reduced", to_json(c.reduction.structure)}};
      return write_output(doc, opts);
    }
    if (cmd_reduce->parsed()) {
      auto s = structure_from_json(load_input(opts));
      auto r = reduce_to_degree5(s);
      json doc{{"reduced", to_json(r.structure)}, {"trace", to_json(r.trace)}};
      return write_output(doc, opts);
    }
    if (cmd_sequences->parsed()) {
      json seqs = json::array();
      for (const auto& s : enumerate_admissible(seq_degree)) seqs.push_back(s);
      return write_output(json{{"degree", seq_degree}, {"sequences", seqs}},
                          opts);
    }
    if (cmd_petersen->parsed()) {
      json doc = to_json(petersen_report());
      if (petersen_full) {
        json cycles = json::array();
        for (const auto& c : enumerate_five_cycles()) {
          json jc = json::array();
          for (int v : c) {
            auto [a, b] = petersen().subsets[v];
            jc.push_back(std::to_string(a) + std::to_string(b));
          }
          cycles.push_back(jc);
        }
        doc["cycles"] = cycles;
      }
      return write_output(doc, opts);
    }
    if (cmd_h1->parsed()) {
      auto g = parse_group_arg(h1_group);
      auto h1 = h1_enumerate(g);
      json classes = json::array();
      for (size_t i = 0; i < h1.classes.size(); ++i) {
        json jc = to_json(h1.classes[i]);
        jc["orbit_size"] = h1.orbit_sizes[i];
        jc["quadratic"] = is_quadratic(h1.classes[i]);
        classes.push_back(jc);
      }
      json doc{{"group", g.name.empty() ? "(custom)" : g.name},
               {"count", h1.classes.size()},
               {"hom_count", h1.hom_count},
               {"classes", classes}};
      return write_output(doc, opts);
    }
    if (cmd_points_search->parsed()) {
      SurfaceModel model = [&] {
        if (points_family == "trivial") return trivial_model();
        if (points_coeffs.empty())
          bad_input("--coeffs is required for family '" + points_family + "'");
        return surface_model_from_json(
            json{{"family", points_family},
                 {"coeffs", json::parse(points_coeffs)}});
      }();
      auto hits = search_box(model, Int(points_m), Int(points_bound));
      json sols = json::array();
      for (const auto& p : hits) sols.push_back(to_json(p));
      // per-curve multiplicities: decomposition curves for the trivial
      // model, the fibres of x^2 - a y^2 for norm forms
      json curves = json::object();
      long long t_zero = 0;
      for (const auto& p : hits)
        if (is_zero(p.t)) ++t_zero;
      curves["t_zero"] = t_zero;
      if (model.family == SurfaceModel::Family::Bilinear &&
          model.coeffs == trivial_model().coeffs) {
        long long on_y = 0, on_x = 0;
        Rat y_bound(2 * Int(points_m));
        Rat x_bound(2 * curve_bound_C(Int(points_m)));
        for (const auto& p : hits) {
          if (rat_abs(p.y) <= y_bound) ++on_y;
          if (rat_abs(p.x - 1) <= x_bound) ++on_x;
        }
        curves["y_constant"] = on_y;
        curves["x_constant"] = on_x;
      } else if (model.family == SurfaceModel::Family::NormForm) {
        json by_norm = json::object();
        for (const auto& p : hits) {
          Rat norm = p.x * p.x - model.coeffs[0] * p.y * p.y;
          std::string key = to_string(norm);
          by_norm[key] = by_norm.value(key, 0) + 1;
        }
        curves["by_norm"] = by_norm;
      }
      json doc{{"model", to_json(model)},
               {"M", points_m},
               {"bound", points_bound},
               {"count", hits.size()},
               {"curves", curves},
               {"solutions", sols}};
      return write_output(doc, opts);
    }
    if (cmd_points_nondensity->parsed()) {
      auto rep = nondensity_certificate(Int(nondensity_m), Int(nondensity_box));
      write_output(to_json(rep), opts);
      return rep.pass ? 0 : 3;
    }
    if (cmd_density->parsed()) {
      auto rep = density_experiment(Int(density_a), density_primes,
                                    density_points, density_prime_bound);
      write_output(to_json(rep), opts);
      return rep.all_verified ? 0 : 3;
    }
    if (cmd_hilbert->parsed()) {
      Rat a = parse_rat(hil_a), b = parse_rat(hil_b);
      HilbertPlace v = parse_place(hil_place);
      int s = hilbert_symbol(a, b, v);
      return write_output(json{{"alpha", to_string(a)},
                               {"beta", to_string(b)},
                               {"place", v.str()},
                               {"symbol", s}},
                          opts);
    }
    if (cmd_counter->parsed()) {
      auto rep = counterexample_report(Int(counter_box), counter_places);
      write_output(to_json(rep), opts);
      return rep.verdict ? 0 : 3;
    }
    if (cmd_local->parsed()) {
      json coeffs = json::parse(local_params);
      if (!coeffs.is_array() || coeffs.size() != 5)
        bad_input("--coeffs must be a JSON array [a,b,c,d,m]");
      QuaternionClass q{int_from_json(coeffs[0]), int_from_json(coeffs[1]),
                        int_from_json(coeffs[2]), int_from_json(coeffs[3]),
                        int_from_json(coeffs[4])};
      auto rep = local_solubility_scan(q, local_bound);
      write_output(to_json(rep), opts);
      return rep.all_soluble ? 0 : 3;
    }
    bad_input("no subcommand selected");
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
