// Command-line front end for staircase, Scarf-complex, cellular-resolution,
// and derivative-form computations on Artinian monomial ideals.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "scarf/json_io.hpp"
#include "scarf/oracles.hpp"
#include "scarf/parse.hpp"
#include "scarf/random_ideal.hpp"
#include "scarf/svg_render.hpp"

using namespace scarf;

namespace {

struct Input {
  MonomialIdeal ideal;
  std::optional<LabeledComplex> complex;  // set when a complex file was given
};

Input load_input(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    const Json j = load_json_file(arg);
    if (j.contains("cells")) {
      LabeledComplex x = complex_from_json(j);
      return Input{complex_ideal(x), std::move(x)};
    }
    return Input{ideal_from_json(j), std::nullopt};
  }
  return Input{parse_ideal(arg), std::nullopt};
}

std::vector<Permutation> parse_sigmas(const std::vector<std::string>& specs, int n) {
  std::vector<Permutation> out;
  for (const std::string& spec : specs) {
    if (spec == "all") return all_permutations(n);
    Permutation sigma;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) sigma.push_back(std::stoi(token) - 1);
    require_permutation(sigma, n);
    out.push_back(std::move(sigma));
  }
  if (out.empty()) return all_permutations(n);
  return out;
}

std::string sigma_text(const Permutation& sigma) {
  std::string s = "(";
  for (std::size_t i = 0; i < sigma.size(); ++i)
    s += (i ? "," : "") + std::to_string(sigma[i] + 1);
  return s + ")";
}

std::string vec_text(const ExponentVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw std::invalid_argument("cannot write to " + output_path);
  out << text;
}

void emit_json(const Json& j, const std::string& output_path) {
  emit(j.dump(2) + "\n", output_path);
}

// ---------------------------------------------------------------------------

int run_info(const Input& in, const std::string& format, const std::string& output) {
  const MonomialIdeal& m = in.ideal;
  const bool artinian = is_artinian(m);
  const auto witness = genericity_violation(m);
  Json j{{"ideal", to_json(m)},
         {"generators", m.gens.size()},
         {"artinian", artinian},
         {"generic", !witness.has_value()}};
  if (witness)
    j["genericity_witness"] = Json{{"pair", {witness->i, witness->j}},
                                   {"pair_monomials",
                                    {format_generator(m.gens[witness->i]),
                                     format_generator(m.gens[witness->j])}},
                                   {"variable", witness->variable + 1}};
  if (artinian) {
    j["outer_corners"] = outer_corners(m);
    j["colength"] = colength(m);
  }
  if (format == "json") {
    emit_json(j, output);
    return 0;
  }
  std::ostringstream out;
  out << "ideal: " << format_ideal(m) << "\n";
  out << "n: " << m.n << "  generators: " << m.gens.size() << "\n";
  out << "artinian: " << (artinian ? "yes" : "no");
  out << "  generic: " << (witness ? "no" : "yes") << "\n";
  if (witness)
    out << "  witness pair: (" << format_generator(m.gens[witness->i]) << ", "
        << format_generator(m.gens[witness->j]) << ") sharing variable x"
        << witness->variable + 1 << "\n";
  if (artinian) {
    out << "outer corners:";
    for (const auto& c : outer_corners(m)) out << " " << vec_text(c);
    out << "\ncolength: " << colength(m) << "\n";
  }
  emit(out.str(), output);
  return 0;
}

int run_scarf(const Input& in, const std::string& format, const std::string& output) {
  const ScarfComplex delta = build_scarf(in.ideal);
  if (format == "json") {
    emit_json(to_json(delta), output);
    return 0;
  }
  std::ostringstream out;
  out << "ideal: " << format_ideal(in.ideal) << "\n";
  for (std::size_t k = 0; k < delta.levels.size(); ++k) {
    out << "dimension " << k << " (" << delta.levels[k].size() << " faces):\n";
    for (const ScarfFace& f : delta.levels[k]) {
      out << "  {";
      for (std::size_t i = 0; i < f.vertices.size(); ++i)
        out << (i ? " " : "") << format_generator(in.ideal.gens[f.vertices[i]]);
      out << "}  label " << vec_text(f.label) << "\n";
    }
  }
  emit(out.str(), output);
  return 0;
}

int run_resolve(const Input& in, const std::string& format, const std::string& output,
                std::uint64_t seed) {
  const LabeledComplex x =
      in.complex ? *in.complex : scarf_to_complex(build_scarf(in.ideal));
  const auto mats = differentials(x);
  const bool complex_ok = check_complex(mats);
  const bool minimal = check_minimal(mats);
  const bool exact = complex_ok && check_generic_exactness(mats, seed);
  if (format == "json") {
    Json j{{"ideal", to_json(in.ideal)},
           {"checks", Json{{"complex", complex_ok}, {"minimal", minimal}, {"exact", exact}}}};
    Json jmats = Json::array();
    for (const auto& mat : mats) jmats.push_back(to_json(mat));
    j["differentials"] = std::move(jmats);
    emit_json(j, output);
  } else {
    std::ostringstream out;
    out << "ideal: " << format_ideal(in.ideal) << "\n";
    out << "ranks: 1";
    for (const auto& mat : mats) out << " " << mat.cols;
    out << "\nphi compose phi = 0: " << (complex_ok ? "yes" : "NO") << "\n";
    out << "minimal: " << (minimal ? "yes" : "no") << "\n";
    out << "exact at a generic point: " << (exact ? "yes" : "NO") << "\n";
    emit(out.str(), output);
  }
  return complex_ok && exact ? 0 : 1;
}

int run_partition(const Input& in, const std::vector<std::string>& sigma_specs,
                  const std::string& format, const std::string& output) {
  const MonomialIdeal& m = in.ideal;
  require_artinian(m, "partition");
  const bool generic = is_generic(m);
  ScarfComplex delta;
  std::map<ExponentVector, const ScarfFace*> faces;
  if (generic) {
    delta = build_scarf(m);
    for (const ScarfFace& f : delta.top_faces()) faces[f.label] = &f;
  }
  bool consistent = true;
  Json all = Json::array();
  std::ostringstream out;
  for (const Permutation& sigma : parse_sigmas(sigma_specs, m.n)) {
    const auto oracle_parts = oracle::oracle_partition(m, sigma);
    Json report = partition_report_json(m, sigma);
    for (auto& part : report["parts"]) {
      const ExponentVector corner = part["corner"].get<ExponentVector>();
      const auto cells = part["cells"].get<std::vector<ExponentVector>>();
      const CellSet cellset(cells.begin(), cells.end());
      const bool oracle_match = oracle_parts.at(corner) == cellset;
      part["oracle_matches_cells"] = oracle_match;
      consistent = consistent && oracle_match;
      if (generic) consistent = consistent && part["cuboid_matches_cells"].get<bool>();
    }
    all.push_back(report);
    if (format != "json") {
      out << "sigma " << sigma_text(sigma) << ":\n";
      for (const auto& part : all.back()["parts"]) {
        out << "  corner " << vec_text(part["corner"].get<ExponentVector>()) << "  volume "
            << part["volume"].get<long long>()
            << (part["is_cuboid"].get<bool>() ? "  cuboid" : "  not a cuboid");
        if (generic)
          out << (part["cuboid_matches_cells"].get<bool>() ? "  (cuboid formula agrees)"
                                                           : "  (CUBOID MISMATCH)");
        out << (part["oracle_matches_cells"].get<bool>() ? "" : "  (ORACLE MISMATCH)") << "\n";
      }
    }
  }
  if (format == "json")
    emit_json(Json{{"ideal", to_json(m)}, {"partitions", std::move(all)}}, output);
  else
    emit(out.str(), output);
  return consistent ? 0 : 1;
}

int run_dphi(const Input& in, const std::vector<std::string>& sigma_specs,
             const std::string& format, const std::string& output) {
  const MonomialIdeal& m = in.ideal;
  require_artinian(m, "dphi");
  if (!in.complex) require_generic(m, "dphi on an ideal (pass a complex file instead)");
  const LabeledComplex x =
      in.complex ? *in.complex : scarf_to_complex(build_scarf(m));
  const auto mats = differentials(x);
  const long long len = colength(m);
  const long long len_oracle = oracle::oracle_colength(m);

  bool all_ok = true;
  Json sigmas = Json::array();
  std::ostringstream out;
  const auto sigma_list = parse_sigmas(sigma_specs, m.n);
  for (const Permutation& sigma : sigma_list) {
    const VolumeFormulaReport report = compare_volume_formula_general(x, sigma);
    const DerivativeForm form = d_sigma_phi(mats, sigma);
    const PairingResult pairing = pairing_multiplicity(form, x);
    const bool pairing_ok = pairing.value == len && len == len_oracle;
    all_ok = all_ok && report.all_match && pairing_ok && pairing.residual.empty();

    Json jr = to_json(report);
    jr["orientation_sign"] = form.orientation_sign;
    for (std::size_t t = 0; t < report.faces.size(); ++t) {
      const FaceComparison& f = report.faces[t];
      jr["faces"][t]["pairing_term"] =
          f.cell_sign * f.computed.coeff(shift_down_one(f.label));
      Json jres = Json::array();
      for (const ResidualTerm& r : pairing.residual)
        if (r.cell == static_cast<int>(t))
          jres.push_back(Json{{"exp", r.exponent}, {"coeff", r.coefficient}});
      jr["faces"][t]["residual"] = std::move(jres);
    }
    jr["pairing"] = pairing.value;
    jr["pairing_equals_colength"] = pairing_ok;
    sigmas.push_back(std::move(jr));

    if (format != "json") {
      out << "sigma " << sigma_text(sigma) << ":\n";
      for (const FaceComparison& f : report.faces) {
        out << "  face " << vec_text(f.label) << " sign " << (f.cell_sign > 0 ? "+" : "-")
            << ": computed " << to_string(f.computed) << " | volume formula "
            << to_string(f.predicted) << (f.match ? "" : "  MISMATCH") << "\n";
      }
      out << "  pairing: " << pairing.value << " (colength " << len << ")"
          << (pairing_ok ? "" : "  MISMATCH");
      if (!pairing.residual.empty()) out << "  residual terms: " << pairing.residual.size();
      out << "\n";
    }
  }

  Json j{{"ideal", to_json(m)},
         {"colength", len},
         {"colength_oracle", len_oracle},
         {"sigmas", std::move(sigmas)}};
  if (sigma_list.size() == all_permutations(m.n).size()) {
    const FactorizationReport fact = full_factorization_check(x);
    j["factorization"] =
        Json{{"total", fact.total}, {"expected", fact.expected}, {"ok", fact.ok}};
    all_ok = all_ok && fact.ok;
    if (format != "json")
      out << "factorization over all permutations: " << fact.total << " expected "
          << fact.expected << (fact.ok ? "  ok" : "  MISMATCH") << "\n";
  }
  if (format == "json")
    emit_json(j, output);
  else
    emit(out.str(), output);
  return all_ok ? 0 : 1;
}

int run_render(const Input& in, const std::vector<std::string>& sigma_specs,
               const std::string& output) {
  const MonomialIdeal& m = in.ideal;
  if (m.n != 2) {
    std::cerr << "error: render supports exactly two variables (got n=" << m.n << ")\n";
    return 2;
  }
  const auto sigmas = parse_sigmas(sigma_specs, 2);
  if (sigmas.size() != 1) {
    std::cerr << "error: render needs a single --sigma\n";
    return 2;
  }
  emit(render_staircase_svg(m, sigmas[0]), output);
  return 0;
}

int run_verify(const Input& in, std::uint64_t seed, const std::string& output) {
  const MonomialIdeal& m = in.ideal;
  std::ostringstream out;
  bool ok = true;
  const auto check = [&](const std::string& name, bool value) {
    out << (value ? "[ ok ] " : "[FAIL] ") << name << "\n";
    ok = ok && value;
  };

  check("minimal generating set", minimalize(m.gens) == m);
  const bool artinian = is_artinian(m);
  check("artinian", artinian);
  if (!artinian) {
    emit(out.str(), output);
    return 1;
  }

  const auto corners = outer_corners(m);
  check("outer corners match the lattice oracle",
        std::set<ExponentVector>(corners.begin(), corners.end()) ==
            oracle::oracle_outer_corners(m));
  const long long len = colength(m);
  check("colength matches the lattice oracle", len == oracle::oracle_colength(m));

  bool partitions_ok = true;
  for (const Permutation& sigma : all_permutations(m.n)) {
    long long total = 0;
    const auto oracle_parts = oracle::oracle_partition(m, sigma);
    for (const auto& piece : partition_bruteforce(m, sigma)) {
      total += volume(piece.cells);
      partitions_ok = partitions_ok && oracle_parts.at(piece.corner) == piece.cells;
    }
    partitions_ok = partitions_ok && total == len;
  }
  check("partitions tile the staircase for every sigma", partitions_ok);

  const ScarfComplex delta = build_scarf(m);
  if (m.gens.size() <= 20) {
    std::set<std::vector<int>> faces;
    for (const auto& level : delta.levels)
      for (const auto& f : level) faces.insert(f.vertices);
    check("Scarf complex matches the power-set oracle", faces == oracle::oracle_scarf(m));
  }

  const bool generic = is_generic(m);
  const LabeledComplex x = in.complex ? *in.complex : scarf_to_complex(delta);
  if (!generic && !in.complex) {
    out << "[skip] ideal is not generic: resolution checks need a complex file\n";
    emit(out.str(), output);
    return ok ? 0 : 1;
  }

  if (generic && !in.complex) {
    std::set<ExponentVector> labels;
    for (const auto& f : delta.top_faces()) labels.insert(f.label);
    check("top faces biject with outer corners",
          labels == std::set<ExponentVector>(corners.begin(), corners.end()) &&
              delta.top_faces().size() == corners.size());
    bool cuboids_ok = true;
    for (const Permutation& sigma : all_permutations(m.n)) {
      std::map<ExponentVector, CellSet> cells;
      for (const auto& piece : partition_bruteforce(m, sigma))
        cells[piece.corner] = piece.cells;
      for (const auto& f : delta.top_faces())
        cuboids_ok =
            cuboids_ok && cells_of(partition_cuboid(m, sigma, f)) == cells.at(f.label);
    }
    check("cuboid formula reproduces every partition piece", cuboids_ok);
  }

  const auto mats = differentials(x);
  check("phi compose phi = 0", check_complex(mats));
  // Minimality and the volume formula must hold for Scarf resolutions; on a
  // user-supplied complex they are findings, not failures.
  const auto finding = [&](const std::string& name, bool value) {
    if (in.complex)
      out << "[info] " << name << ": " << (value ? "yes" : "no") << "\n";
    else
      check(name, value);
  };
  finding("resolution is minimal", check_minimal(mats));
  check("exact at a generic point", check_generic_exactness(mats, seed));

  bool volumes_ok = true, pairing_ok = true, survivors_ok = true;
  for (const Permutation& sigma : all_permutations(m.n)) {
    volumes_ok = volumes_ok && compare_volume_formula_general(x, sigma).all_match;
    const PairingResult pairing = pairing_multiplicity(d_sigma_phi(mats, sigma), x);
    pairing_ok = pairing_ok && pairing.value == len && pairing.residual.empty();
    if (generic && !in.complex)
      for (int t = 0; t < static_cast<int>(delta.top_faces().size()); ++t) {
        const SurvivorReport s = survivor_expansion_check(m, delta, sigma, t);
        survivors_ok = survivors_ok && s.unique_survivor && s.survivor_matches_entry;
      }
  }
  finding("derivative form matches signed partition volumes", volumes_ok);
  check("pairing equals colength for every sigma", pairing_ok);
  if (generic && !in.complex) check("unique surviving removal order per face", survivors_ok);
  check("factorization over all permutations", full_factorization_check(x).ok);

  emit(out.str(), output);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Staircases, Scarf complexes, cellular resolutions, and derivative forms\n"
      "of Artinian monomial ideals, in exact integer arithmetic.\n"
      "Ideals are written like \"x1^3, x1^2*x2, x2^4\"; complexes are JSON files."};
  app.require_subcommand(1);

  std::string input, format = "text", output;
  std::vector<std::string> sigma_specs;
  std::uint64_t seed = 0x5ca4f;

  const auto add_common = [&](CLI::App* cmd, bool with_sigma) {
    cmd->add_option("input", input, "ideal string, ideal JSON file, or complex JSON file")
        ->required();
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output,-o", output, "write to a file instead of stdout");
    if (with_sigma)
      cmd->add_option("--sigma", sigma_specs,
                      "permutation as a 1-based comma list (e.g. 3,1,2) or \"all\"");
  };

  add_common(app.add_subcommand("info", "generators, flags, corners, colength"), false);
  add_common(app.add_subcommand("scarf", "Scarf complex faces and labels"), false);
  auto* resolve = app.add_subcommand("resolve", "differentials and resolution checks");
  add_common(resolve, false);
  resolve->add_option("--seed", seed, "seed for the exactness evaluation point");
  add_common(app.add_subcommand("partition", "staircase partition per sigma"), true);
  add_common(app.add_subcommand("dphi",
                                "derivative form, volume comparison, pairing, factorization"),
             true);
  auto* render = app.add_subcommand("render", "SVG staircase plot (two variables)");
  add_common(render, true);
  auto* verify = app.add_subcommand("verify", "full invariant suite; nonzero exit on failure");
  add_common(verify, false);
  verify->add_option("--seed", seed, "seed for the exactness evaluation point");

  CLI11_PARSE(app, argc, argv);

  try {
    const Input in = load_input(input);
    if (app.got_subcommand("info")) return run_info(in, format, output);
    if (app.got_subcommand("scarf")) return run_scarf(in, format, output);
    if (app.got_subcommand("resolve")) return run_resolve(in, format, output, seed);
    if (app.got_subcommand("partition")) return run_partition(in, sigma_specs, format, output);
    if (app.got_subcommand("dphi")) return run_dphi(in, sigma_specs, format, output);
    if (app.got_subcommand("render")) return run_render(in, sigma_specs, output);
    if (app.got_subcommand("verify")) return run_verify(in, seed, output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
