#pragma once

#include <map>

#include "scarf/scarf_complex.hpp"

namespace scarf {

/// Cell of a labeled polyhedral complex. `boundary` lists (index into the
/// next lower dimension, incidence sign). `sign` is the cell's orientation
/// sign relative to the coordinate form dz_n∧...∧dz_1; it only matters for
/// top-dimensional cells, where it feeds the residue pairing.
struct Cell {
  std::vector<int> vertices;
  ExponentVector label;
  std::vector<std::pair<int, int>> boundary;
  int sign = 1;
};

/// Monomial-labeled polyhedral cell complex; cells[d] holds the cells of
/// dimension d. Vertex labels are the generators of the resolved ideal.
struct LabeledComplex {
  int n = 0;
  std::vector<std::vector<Cell>> cells;

  int top_dimension() const { return static_cast<int>(cells.size()) - 1; }
};

/// The ideal minimally generated by the vertex labels.
inline MonomialIdeal complex_ideal(const LabeledComplex& x) {
  if (x.cells.empty() || x.cells[0].empty())
    throw std::invalid_argument("complex has no vertices");
  std::vector<ExponentVector> gens;
  for (const Cell& v : x.cells[0]) gens.push_back(v.label);
  return minimalize(gens);
}

/// Structural checks: labels are joins of vertex labels, boundary labels
/// divide coface labels, vertex sets match boundaries, and the composite
/// boundary-of-boundary signs cancel.
inline void validate_complex(const LabeledComplex& x) {
  if (x.n <= 0) throw std::invalid_argument("complex dimension n must be positive");
  if (x.cells.empty() || x.cells[0].empty())
    throw std::invalid_argument("complex has no vertices");
  for (std::size_t i = 0; i < x.cells[0].size(); ++i) {
    const Cell& v = x.cells[0][i];
    if (v.vertices != std::vector<int>{static_cast<int>(i)})
      throw std::invalid_argument("vertex cell " + std::to_string(i) + " must list itself");
    if (static_cast<int>(v.label.size()) != x.n)
      throw std::invalid_argument("vertex label has wrong dimension");
    if (!v.boundary.empty())
      throw std::invalid_argument("vertex cell has nonempty boundary");
  }
  for (std::size_t d = 1; d < x.cells.size(); ++d) {
    for (std::size_t c = 0; c < x.cells[d].size(); ++c) {
      const Cell& cell = x.cells[d][c];
      const std::string where = "cell " + std::to_string(c) + " of dimension " + std::to_string(d);
      if (cell.boundary.empty()) throw std::invalid_argument(where + " has empty boundary");
      if (!std::is_sorted(cell.vertices.begin(), cell.vertices.end()))
        throw std::invalid_argument(where + " has unsorted vertex list");
      ExponentVector label(x.n, 0);
      std::vector<int> bverts;
      for (auto [idx, sign] : cell.boundary) {
        if (idx < 0 || idx >= static_cast<int>(x.cells[d - 1].size()))
          throw std::invalid_argument(where + " has out-of-range boundary index");
        if (sign != 1 && sign != -1)
          throw std::invalid_argument(where + " has incidence sign other than +-1");
        const Cell& face = x.cells[d - 1][idx];
        if (!divides(face.label, cell.label))
          throw std::invalid_argument(where + ": boundary label does not divide cell label");
        label = join(label, face.label);
        bverts.insert(bverts.end(), face.vertices.begin(), face.vertices.end());
      }
      std::sort(bverts.begin(), bverts.end());
      bverts.erase(std::unique(bverts.begin(), bverts.end()), bverts.end());
      if (bverts != cell.vertices)
        throw std::invalid_argument(where + ": vertex set does not match boundary");
      ExponentVector vlabel(x.n, 0);
      for (int v : cell.vertices) vlabel = join(vlabel, x.cells[0][v].label);
      if (vlabel != cell.label)
        throw std::invalid_argument(where + ": label is not the join of its vertex labels");
      if (label != cell.label)
        throw std::invalid_argument(where + ": label is not the join of its boundary labels");
      if (d >= 2) {
        std::map<int, int> square;
        for (auto [idx, sign] : cell.boundary)
          for (auto [idx2, sign2] : x.cells[d - 1][idx].boundary)
            square[idx2] += sign * sign2;
        for (auto [idx2, total] : square)
          if (total != 0)
            throw std::invalid_argument(where + ": boundary-of-boundary does not cancel");
      }
    }
  }
}

/// Simplicial incidence for a Scarf complex: dropping the j-th vertex
/// (ascending, 1-based) carries sign (-1)^(j-1). Top cells record sgn(eta)
/// as their orientation sign when the ideal is generic.
inline LabeledComplex scarf_to_complex(const ScarfComplex& delta) {
  LabeledComplex x;
  x.n = delta.ideal.n;
  const bool generic = is_generic(delta.ideal);
  x.cells.resize(delta.levels.size());
  std::map<std::vector<int>, int> previous;
  for (std::size_t k = 0; k < delta.levels.size(); ++k) {
    std::map<std::vector<int>, int> current;
    for (std::size_t f = 0; f < delta.levels[k].size(); ++f) {
      const ScarfFace& face = delta.levels[k][f];
      current[face.vertices] = static_cast<int>(f);
      Cell cell;
      cell.vertices = face.vertices;
      cell.label = face.label;
      if (k > 0) {
        int sign = 1;
        for (std::size_t j = 0; j < face.vertices.size(); ++j) {
          std::vector<int> sub = face.vertices;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
          const auto it = previous.find(sub);
          if (it == previous.end())
            throw std::invalid_argument("Scarf complex is not closed under subsets");
          cell.boundary.emplace_back(it->second, sign);
          sign = -sign;
        }
        std::sort(cell.boundary.begin(), cell.boundary.end());
      }
      if (generic && k + 1 == static_cast<std::size_t>(delta.ideal.n))
        cell.sign = eta(delta.ideal, face).sign;
      x.cells[k].push_back(std::move(cell));
    }
    previous = std::move(current);
  }
  return x;
}

}  // namespace scarf
