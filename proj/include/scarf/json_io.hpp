#pragma once

#include <fstream>

#include <json.hpp>

#include "scarf/derivative_form.hpp"

namespace scarf {

using Json = nlohmann::ordered_json;

// Conventions: permutations are 1-based in JSON ("sigma": [3,1,2]); cell and
// vertex indices are 0-based positions into the enclosing arrays.

inline Json to_json(const MonomialIdeal& m) {
  return Json{{"n", m.n}, {"gens", m.gens}};
}

inline MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("gens"))
    throw std::invalid_argument("ideal JSON needs fields \"n\" and \"gens\"");
  const int n = j.at("n").get<int>();
  std::vector<ExponentVector> gens;
  for (const auto& g : j.at("gens")) {
    ExponentVector v = g.get<ExponentVector>();
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("generator dimension differs from \"n\"");
    gens.push_back(std::move(v));
  }
  return minimalize(gens);
}

inline Json sigma_to_json(const Permutation& sigma) {
  Json out = Json::array();
  for (int c : sigma) out.push_back(c + 1);
  return out;
}

inline Permutation sigma_from_json(const Json& j, int n) {
  Permutation sigma;
  for (const auto& v : j) sigma.push_back(v.get<int>() - 1);
  require_permutation(sigma, n);
  return sigma;
}

inline Json to_json(const IntPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms) terms.push_back(Json{{"coeff", c}, {"exp", e}});
  return terms;
}

inline Json to_json(const Cuboid& c) {
  Json intervals = Json::array();
  for (auto [lo, hi] : c.intervals) intervals.push_back(Json::array({lo, hi}));
  return intervals;
}

inline Json to_json(const ScarfComplex& delta) {
  Json levels = Json::array();
  for (const auto& level : delta.levels) {
    Json faces = Json::array();
    for (const ScarfFace& f : level)
      faces.push_back(Json{{"verts", f.vertices}, {"label", f.label}});
    levels.push_back(std::move(faces));
  }
  return Json{{"n", delta.ideal.n}, {"ideal", to_json(delta.ideal)}, {"faces", levels}};
}

inline Json to_json(const LabeledComplex& x) {
  Json dims = Json::array();
  for (const auto& level : x.cells) {
    Json cells = Json::array();
    for (const Cell& c : level) {
      Json cell{{"verts", c.vertices}, {"label", c.label}};
      Json boundary = Json::array();
      for (auto [idx, sign] : c.boundary) boundary.push_back(Json::array({idx, sign}));
      cell["boundary"] = std::move(boundary);
      if (c.sign != 1) cell["sign"] = c.sign;
      cells.push_back(std::move(cell));
    }
    dims.push_back(std::move(cells));
  }
  return Json{{"n", x.n}, {"cells", dims}};
}

inline LabeledComplex complex_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("cells"))
    throw std::invalid_argument("complex JSON needs fields \"n\" and \"cells\"");
  LabeledComplex x;
  x.n = j.at("n").get<int>();
  for (const auto& level : j.at("cells")) {
    std::vector<Cell> cells;
    for (const auto& jc : level) {
      Cell c;
      c.vertices = jc.at("verts").get<std::vector<int>>();
      c.label = jc.at("label").get<ExponentVector>();
      for (const auto& b : jc.at("boundary"))
        c.boundary.emplace_back(b.at(0).get<int>(), b.at(1).get<int>());
      c.sign = jc.value("sign", 1);
      cells.push_back(std::move(c));
    }
    x.cells.push_back(std::move(cells));
  }
  validate_complex(x);
  return x;
}

inline Json to_json(const SparseMonoMatrix& m) {
  Json entries = Json::array();
  for (const MonoEntry& e : m.entries)
    entries.push_back(Json{{"row", e.row}, {"col", e.col}, {"sign", e.sign}, {"exp", e.exponent}});
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(entries)}};
}

inline Json partition_report_json(const MonomialIdeal& m, const Permutation& sigma) {
  Json parts = Json::array();
  const bool generic = is_generic(m);
  std::map<ExponentVector, const ScarfFace*> faces;
  ScarfComplex delta;
  if (generic) {
    delta = build_scarf(m);
    for (const ScarfFace& f : delta.top_faces()) faces[f.label] = &f;
  }
  for (const PartitionPiece& piece : partition_bruteforce(m, sigma)) {
    Json part{{"corner", piece.corner},
              {"cells", std::vector<ExponentVector>(piece.cells.begin(), piece.cells.end())},
              {"volume", volume(piece.cells)},
              {"is_cuboid", is_box(piece.cells)}};
    if (generic) {
      const Cuboid cuboid = partition_cuboid(m, sigma, *faces.at(piece.corner));
      part["cuboid"] = to_json(cuboid);
      part["cuboid_matches_cells"] = cells_of(cuboid) == piece.cells;
    }
    parts.push_back(std::move(part));
  }
  return Json{{"sigma", sigma_to_json(sigma)}, {"parts", std::move(parts)}};
}

inline Json to_json(const VolumeFormulaReport& report) {
  Json faces = Json::array();
  for (const FaceComparison& f : report.faces)
    faces.push_back(Json{{"label", f.label},
                         {"sign", f.cell_sign},
                         {"computed", to_json(f.computed)},
                         {"predicted", to_json(f.predicted)},
                         {"match", f.match}});
  return Json{{"sigma", sigma_to_json(report.sigma)},
              {"faces", std::move(faces)},
              {"all_match", report.all_match}};
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace scarf
