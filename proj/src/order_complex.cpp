#include "finito/order_complex.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace finito {

int SimplicialComplex::dimension() const {
  if (faces.empty()) return -1;
  return static_cast<int>(faces.back().size()) - 1;
}

long long HomologySummary::euler() const {
  long long chi = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(betti[i]);
  }
  return chi;
}

SimplicialComplex order_complex(const FinitePoset& p) {
  SimplicialComplex k;
  k.vertex_count = p.size();
  for_each_chain(p, [&](std::span<const Element> c) {
    Face f(c.begin(), c.end());
    std::sort(f.begin(), f.end());
    k.faces.push_back(std::move(f));
  });
  std::sort(k.faces.begin(), k.faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return k;
}

long long euler_char(const FinitePoset& p) {
  long long chi = 0;
  for_each_chain(p, [&](std::span<const Element> c) { chi += (c.size() % 2 == 1) ? 1 : -1; });
  return chi;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& k) {
  std::vector<std::size_t> f;
  for (const auto& face : k.faces) {
    if (face.size() > f.size()) f.resize(face.size(), 0);
    ++f[face.size() - 1];
  }
  return f;
}

long long euler_char(const SimplicialComplex& k) {
  long long chi = 0;
  const auto f = f_vector(k);
  for (std::size_t i = 0; i < f.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(f[i]);
  }
  return chi;
}

namespace {

std::vector<const Face*> faces_of_dim(const SimplicialComplex& k, std::size_t d) {
  std::vector<const Face*> out;
  for (const auto& f : k.faces) {
    if (f.size() == d + 1) out.push_back(&f);
  }
  return out;
}

}  // namespace

IntMatrix boundary_matrix(const SimplicialComplex& k, std::size_t d) {
  const auto lower = faces_of_dim(k, d - 1);
  const auto upper = faces_of_dim(k, d);
  std::map<Face, std::size_t> row_of;
  for (std::size_t r = 0; r < lower.size(); ++r) row_of.emplace(*lower[r], r);
  IntMatrix m(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Face& f = *upper[c];
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face facet;
      facet.reserve(f.size() - 1);
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (j != i) facet.push_back(f[j]);
      }
      m.at(row_of.at(facet), c) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

HomologySummary homology(const SimplicialComplex& k) {
  const auto f = f_vector(k);
  const std::size_t top = f.size();  // degrees 0 .. top-1
  HomologySummary out;
  out.betti.assign(top, 0);
  out.torsion.assign(top, {});
  // invariants[d] are the Smith invariants of the boundary map C_d -> C_{d-1}.
  std::vector<std::vector<Integer>> invariants(top + 1);
  for (std::size_t d = 1; d < top; ++d) invariants[d] = smith_invariants(boundary_matrix(k, d));
  for (std::size_t d = 0; d < top; ++d) {
    const std::size_t rank_out = invariants[d].size();
    const std::size_t rank_in = invariants[d + 1].size();
    out.betti[d] = f[d] - rank_out - rank_in;
    for (const auto& v : invariants[d + 1]) {
      if (v > 1) out.torsion[d].push_back(v);
    }
  }
  return out;
}

void write_faces(std::ostream& out, const SimplicialComplex& k) {
  for (const auto& face : k.faces) {
    for (std::size_t i = 0; i < face.size(); ++i) out << (i ? " " : "") << face[i];
    out << '\n';
  }
}

}  // namespace finito
