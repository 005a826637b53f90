#pragma once

#include <map>

#include "scarf/monomial_ideal.hpp"

namespace scarf {

/// Face of the Scarf complex: generator indices sorted ascending, plus the
/// exponent of the least common multiple of its vertices.
struct ScarfFace {
  std::vector<int> vertices;
  ExponentVector label;

  bool operator==(const ScarfFace& other) const = default;
};

/// levels[k] holds the faces with k+1 vertices, each level sorted by
/// vertex list; levels run from single vertices up to at most n vertices.
struct ScarfComplex {
  MonomialIdeal ideal;
  std::vector<std::vector<ScarfFace>> levels;

  const std::vector<ScarfFace>& top_faces() const { return levels.back(); }
};

namespace detail {

/// A subset has a unique join iff no generator outside it divides the join
/// and dropping any vertex changes the join. Any witness subset with the
/// same join reduces to one of these two local moves.
inline bool has_unique_join(const MonomialIdeal& m, const std::vector<int>& verts,
                            const ExponentVector& label) {
  std::vector<bool> inside(m.gens.size(), false);
  for (int v : verts) inside[v] = true;
  for (std::size_t g = 0; g < m.gens.size(); ++g)
    if (!inside[g] && divides(m.gens[g], label)) return false;
  if (verts.size() >= 2) {
    for (std::size_t drop = 0; drop < verts.size(); ++drop) {
      ExponentVector rest(m.n, 0);
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (i != drop) rest = join(rest, m.gens[verts[i]]);
      if (rest == label) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Build the Scarf complex: all generator subsets whose lcm is achieved by
/// no other subset. Faces are grown level by level; a candidate is reached
/// from the face obtained by dropping its largest vertex, which is always a
/// face because the complex is closed under subsets.
inline ScarfComplex build_scarf(const MonomialIdeal& m) {
  require_artinian(m, "build_scarf");
  ScarfComplex complex;
  complex.ideal = m;
  const int r = static_cast<int>(m.gens.size());

  std::vector<ScarfFace> level;
  for (int i = 0; i < r; ++i) level.push_back(ScarfFace{{i}, m.gens[i]});
  complex.levels.push_back(level);

  for (int k = 2; k <= m.n; ++k) {
    std::vector<ScarfFace> next;
    for (const ScarfFace& face : complex.levels.back()) {
      for (int g = face.vertices.back() + 1; g < r; ++g) {
        std::vector<int> verts = face.vertices;
        verts.push_back(g);
        ExponentVector label = join(face.label, m.gens[g]);
        if (detail::has_unique_join(m, verts, label))
          next.push_back(ScarfFace{std::move(verts), std::move(label)});
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(),
              [](const ScarfFace& a, const ScarfFace& b) { return a.vertices < b.vertices; });
    complex.levels.push_back(std::move(next));
  }
  return complex;
}

/// The unique vertex of a top face whose exponent attains the label in
/// coordinate `variable`; non-uniqueness or absence signals a non-generic
/// ideal. Returns the generator index.
inline int x_vertex(const MonomialIdeal& m, const ScarfFace& face, int variable) {
  int found = -1;
  for (int v : face.vertices) {
    if (m.gens[v][variable] == face.label[variable]) {
      if (found >= 0)
        throw std::invalid_argument("x-vertex not unique (ideal is not generic)");
      found = v;
    }
  }
  if (found < 0) throw std::invalid_argument("no vertex attains the label coordinate");
  return found;
}

/// The permutation eta with i_{eta(l)} = x_l-vertex, over 0-based positions
/// in the ascending vertex list, together with its sign.
struct Eta {
  Permutation eta;
  int sign = 1;
};

inline Eta eta(const MonomialIdeal& m, const ScarfFace& face) {
  if (face.vertices.size() != static_cast<std::size_t>(m.n))
    throw std::invalid_argument("eta requires a top-dimensional face");
  Eta result;
  result.eta.resize(m.n);
  for (int l = 0; l < m.n; ++l) {
    const int gen = x_vertex(m, face, l);
    const auto pos = std::find(face.vertices.begin(), face.vertices.end(), gen);
    result.eta[l] = static_cast<int>(pos - face.vertices.begin());
  }
  if (!is_permutation_of_n(result.eta))
    throw std::invalid_argument("x-vertices do not form a permutation");
  result.sign = perm_sign(result.eta);
  return result;
}

}  // namespace scarf
