#include "hopfcm/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>

#include "hopfcm/errors.hpp"

namespace hopfcm {

namespace {

void add_subfaces(const Face& face, FaceSet& out) {
  const std::size_t n = face.size();
  if (n > 30) throw ResourceLimitExceeded("face too large to close under subsets");
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    Face sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (m & (std::uint32_t{1} << i)) sub.push_back(face[i]);
    }
    out.insert(std::move(sub));
  }
}

bool disjoint(const Face& a, const Face& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

Face merged(const Face& a, const Face& b) {
  Face out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> universe) {
  SimplicialComplex c;
  c.universe_ = std::move(universe);
  return c;
}

SimplicialComplex SimplicialComplex::empty_complex(std::vector<std::string> universe) {
  SimplicialComplex c;
  c.universe_ = std::move(universe);
  c.faces_.insert(Face{});
  return c;
}

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> universe) {
  Face all(universe.size());
  std::iota(all.begin(), all.end(), 0);
  return from_faces(std::move(universe), {all});
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> universe,
                                                const std::vector<Face>& generators) {
  SimplicialComplex c;
  c.universe_ = std::move(universe);
  const int n = static_cast<int>(c.universe_.size());
  for (Face face : generators) {
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end()) {
      throw InvalidInput("face repeats a vertex");
    }
    if (!face.empty() && (face.front() < 0 || face.back() >= n)) {
      throw InvalidInput("face uses a vertex outside the universe");
    }
    if (!c.faces_.count(face)) add_subfaces(face, c.faces_);
  }
  return c;
}

std::optional<int> SimplicialComplex::dimension() const {
  if (faces_.empty()) return std::nullopt;
  return static_cast<int>(faces_.rbegin()->size()) - 1;
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (const auto& face : faces_) {
    bool maximal = true;
    for (int v = 0; v < static_cast<int>(universe_.size()) && maximal; ++v) {
      if (std::binary_search(face.begin(), face.end(), v)) continue;
      Face bigger = face;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
      if (faces_.count(bigger)) maximal = false;
    }
    if (maximal) out.push_back(face);
  }
  return out;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  for (const auto& face : faces_) {
    if (face.size() == 1) out.push_back(face.front());
    if (face.size() > 1) break;
  }
  return out;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& c) {
  std::vector<std::size_t> f;
  for (const auto& face : c.faces()) {
    if (f.size() <= face.size()) f.resize(face.size() + 1, 0);
    ++f[face.size()];
  }
  return f;
}

bool is_pure(const SimplicialComplex& c) {
  const auto facets = c.facets();
  return std::all_of(facets.begin(), facets.end(),
                     [&](const Face& f) { return f.size() == facets.front().size(); });
}

bool is_connected(const SimplicialComplex& c) {
  if (c.is_void()) return false;
  const auto verts = c.vertices();
  if (verts.size() <= 1) return true;
  std::vector<int> parent(c.universe().size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (const auto& face : c.faces()) {
    if (face.size() != 2) continue;
    parent[static_cast<std::size_t>(find(face[0]))] = find(face[1]);
  }
  const int root = find(verts.front());
  return std::all_of(verts.begin(), verts.end(), [&](int v) { return find(v) == root; });
}

SimplicialComplex link(const SimplicialComplex& c, const Face& face) {
  Face sigma = face;
  std::sort(sigma.begin(), sigma.end());
  if (!c.contains(sigma)) throw InvalidInput("link of a face that is not in the complex");
  SimplicialComplex out = SimplicialComplex::void_complex(c.universe());
  std::vector<Face> kept;
  for (const auto& tau : c.faces()) {
    if (disjoint(tau, sigma) && c.contains(merged(tau, sigma))) kept.push_back(tau);
  }
  // kept is already subset-closed
  return SimplicialComplex::from_faces(c.universe(), kept);
}

SimplicialComplex double_cone(const SimplicialComplex& c) {
  auto universe = c.universe();
  const int apex0 = static_cast<int>(universe.size());
  universe.push_back("@apex0");
  universe.push_back("@apex1");
  std::vector<Face> generators;
  for (const auto& face : c.faces()) {
    Face joined = face;
    joined.push_back(apex0);
    joined.push_back(apex0 + 1);
    generators.push_back(std::move(joined));
  }
  return SimplicialComplex::from_faces(std::move(universe), generators);
}

std::vector<std::string> face_labels(const SimplicialComplex& c, const Face& face) {
  std::vector<std::string> out;
  for (int v : face) out.push_back(c.universe()[static_cast<std::size_t>(v)]);
  return out;
}

std::vector<std::vector<std::string>> labeled_facets(const SimplicialComplex& c) {
  std::vector<std::vector<std::string>> out;
  for (const auto& face : c.facets()) {
    auto labels = face_labels(c, face);
    std::sort(labels.begin(), labels.end());
    out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RelativePair::RelativePair(SimplicialComplex total, SimplicialComplex sub)
    : total_(std::move(total)), sub_(std::move(sub)) {
  if (total_.universe() != sub_.universe()) {
    throw InvalidInput("relative pair members use different vertex universes");
  }
  for (const auto& face : sub_.faces()) {
    if (!total_.contains(face)) throw InvalidInput("subcomplex face missing from the complex");
  }
}

std::vector<std::size_t> RelativePair::relative_face_counts() const {
  std::vector<std::size_t> counts;
  for (const auto& face : total_.faces()) {
    if (sub_.contains(face)) continue;
    if (counts.size() <= face.size()) counts.resize(face.size() + 1, 0);
    ++counts[face.size()];
  }
  return counts;
}

RelativePair double_cone_pair(const RelativePair& p) {
  return RelativePair(double_cone(p.total()), double_cone(p.sub()));
}

RelativePair link_pair(const RelativePair& p, const Face& face) {
  SimplicialComplex total = link(p.total(), face);
  Face sigma = face;
  std::sort(sigma.begin(), sigma.end());
  SimplicialComplex sub = p.sub().contains(sigma) ? link(p.sub(), sigma)
                                                  : SimplicialComplex::void_complex(p.sub().universe());
  return RelativePair(std::move(total), std::move(sub));
}

BigInt relative_hilbert(const RelativePair& p, int k) {
  if (k < 0) throw InvalidInput("Hilbert function argument must be nonnegative");
  const auto counts = p.relative_face_counts();
  BigInt value = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (j == 0) {
      if (k == 0) value += counts[0];
      continue;
    }
    value += BigInt(counts[j]) * binomial(k - 1, static_cast<long long>(j) - 1);
  }
  return value;
}

}  // namespace hopfcm
