#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopfcm/structure.hpp"  // BigInt

namespace hopfcm {

/// Sorted vertex indices into a complex's vertex universe.
using Face = std::vector<int>;

/// Faces ordered by size, then lexicographically.
struct FaceOrder {
  bool operator()(const Face& a, const Face& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using FaceSet = std::set<Face, FaceOrder>;

/// Explicit subset-closed face set over a labeled vertex universe. The void
/// complex (no faces) and the empty complex {∅} are distinct values.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // void, empty universe

  static SimplicialComplex void_complex(std::vector<std::string> universe = {});
  /// {∅}
  static SimplicialComplex empty_complex(std::vector<std::string> universe = {});
  /// Full simplex on every vertex of the universe.
  static SimplicialComplex simplex(std::vector<std::string> universe);
  /// Subset closure of `generators`; no generators gives the void complex.
  static SimplicialComplex from_faces(std::vector<std::string> universe,
                                      const std::vector<Face>& generators);

  const std::vector<std::string>& universe() const { return universe_; }
  const FaceSet& faces() const { return faces_; }
  bool is_void() const { return faces_.empty(); }
  bool contains(const Face& face) const { return faces_.count(face) != 0; }
  std::size_t face_count() const { return faces_.size(); }

  /// nullopt for the void complex, -1 for {∅}.
  std::optional<int> dimension() const;
  /// Faces not contained in a larger face.
  std::vector<Face> facets() const;
  /// Vertices that occur as 0-faces.
  std::vector<int> vertices() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> universe_;
  FaceSet faces_;
};

/// (f_{-1}, f_0, f_1, ...); empty for the void complex.
std::vector<std::size_t> f_vector(const SimplicialComplex& c);
bool is_pure(const SimplicialComplex& c);
/// {∅} and single points are connected; the void complex is not.
bool is_connected(const SimplicialComplex& c);

/// {τ : τ ∩ σ = ∅, τ ∪ σ ∈ c}; throws InvalidInput when σ ∉ c.
SimplicialComplex link(const SimplicialComplex& c, const Face& face);

/// Join with a full 1-simplex on two fresh apex vertices.
SimplicialComplex double_cone(const SimplicialComplex& c);

/// Facets as label lists, sorted.
std::vector<std::vector<std::string>> labeled_facets(const SimplicialComplex& c);
std::vector<std::string> face_labels(const SimplicialComplex& c, const Face& face);

/// A complex together with a subcomplex on the same vertex universe.
class RelativePair {
 public:
  /// Throws InvalidInput unless every face of `sub` is a face of `total`.
  RelativePair(SimplicialComplex total, SimplicialComplex sub);

  const SimplicialComplex& total() const { return total_; }
  const SimplicialComplex& sub() const { return sub_; }

  /// Faces of total not in sub, grouped by vertex count (index j = j vertices).
  std::vector<std::size_t> relative_face_counts() const;

  friend bool operator==(const RelativePair&, const RelativePair&) = default;

 private:
  SimplicialComplex total_;
  SimplicialComplex sub_;
};

RelativePair double_cone_pair(const RelativePair& p);

/// Links in both members; the sub link is void when σ ∉ sub.
RelativePair link_pair(const RelativePair& p, const Face& face);

/// Hilbert function of the face ring of the pair:
/// sum_j rf_{j-1} C(k-1, j-1), where the empty face counts only at k = 0.
BigInt relative_hilbert(const RelativePair& p, int k);

}  // namespace hopfcm
