#include "hopfcm/homology.hpp"

#include <algorithm>
#include <map>

namespace hopfcm {

std::optional<int> HomologyProfile::first_nonzero_below(int bound) const {
  for (int d = -1; d < bound && d <= top_dimension(); ++d) {
    if (at(d) != 0) return d;
  }
  return std::nullopt;
}

namespace {

// Faces of `total` outside `sub` (sub may be void), grouped by vertex count.
std::vector<std::vector<Face>> chain_basis(const SimplicialComplex& total, const SimplicialComplex& sub) {
  std::vector<std::vector<Face>> basis;
  const auto dim = total.dimension();
  if (!dim) return basis;
  basis.resize(static_cast<std::size_t>(*dim + 2));
  for (const auto& face : total.faces()) {
    if (!sub.contains(face)) basis[face.size()].push_back(face);
  }
  return basis;
}

HomologyProfile homology_of(const std::vector<std::vector<Face>>& basis, Field field) {
  HomologyProfile profile;
  if (basis.empty()) return profile;
  // ranks[j]: rank of the boundary from j-vertex chains to (j-1)-vertex chains
  std::vector<std::size_t> ranks(basis.size() + 1, 0);
  for (std::size_t j = 1; j < basis.size(); ++j) {
    std::map<Face, int> column;
    for (std::size_t i = 0; i < basis[j - 1].size(); ++i) column.emplace(basis[j - 1][i], static_cast<int>(i));
    std::vector<SparseRow> rows;
    rows.reserve(basis[j].size());
    for (const auto& face : basis[j]) {
      SparseRow row;
      for (std::size_t drop = 0; drop < face.size(); ++drop) {
        Face boundary = face;
        boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(drop));
        auto it = column.find(boundary);
        if (it != column.end()) row.emplace_back(it->second, drop % 2 == 0 ? 1 : -1);
      }
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
    ranks[j] = rank(rows, field);
  }
  profile.betti.resize(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    profile.betti[j] = basis[j].size() - ranks[j] - ranks[j + 1];
  }
  return profile;
}

void check_links(const RelativePair& p, Field field, CmReport& report) {
  for (const auto& face : p.total().faces()) {
    const RelativePair lk = link_pair(p, face);
    const int dim = *lk.total().dimension();
    const HomologyProfile h = relative_betti(lk, field);
    for (int d = -1; d < dim; ++d) {
      if (h.at(d) != 0) {
        report.failures.push_back(
            {face_labels(p.total(), face), std::nullopt, d, h.at(d), "homology below link dimension"});
      }
    }
  }
  report.verdict = report.failures.empty();
}

}  // namespace

HomologyProfile reduced_betti(const SimplicialComplex& c, Field field) {
  return homology_of(chain_basis(c, SimplicialComplex::void_complex()), field);
}

HomologyProfile relative_betti(const RelativePair& p, Field field) {
  return homology_of(chain_basis(p.total(), p.sub()), field);
}

CmReport is_cm(const SimplicialComplex& c, Field field) {
  CmReport report;
  check_links(RelativePair(c, SimplicialComplex::void_complex(c.universe())), field, report);
  return report;
}

CmReport is_relatively_cm(const RelativePair& p, Field field) {
  CmReport report;
  check_links(p, field, report);
  return report;
}

CmReport theorem1_combinatorial(const Structure& h, SubmonoidId s, const Limits& limits) {
  if (!valid_for(s, h.family())) throw InvalidInput("submonoid does not apply to this family");
  CmReport report;
  const Mask full = h.ground().full();
  for (Mask upper = 0;; ++upper) {
    for (Mask lower = upper;; lower = (lower - 1) & upper) {
      if (popcount(upper & ~lower) >= 2 && h.minor_defined(lower, upper) &&
          !h.minor_in_submonoid(lower, upper, s)) {
        const Structure minor = h.induced(upper & ~lower);
        const SimplicialComplex sig = sigma(minor, limits);
        const SimplicialComplex gam = gamma(minor, s, limits);
        const int expected = *sig.dimension() - 1;
        const auto actual = gam.dimension();
        auto fail = [&](std::string reason) {
          report.failures.push_back({{}, MinorKey{lower, upper}, actual.value_or(-2), 0, std::move(reason)});
        };
        // connectivity only constrains complexes of dimension >= 1
        if (expected >= 1 && !is_connected(gam)) fail("gamma is disconnected");
        if (!is_pure(gam)) fail("gamma is not pure");
        if (actual != expected) {
          fail("gamma has dimension " + (actual ? std::to_string(*actual) : std::string("void")) +
               ", expected " + std::to_string(expected));
        }
      }
      if (lower == 0) break;
    }
    if (upper == full) break;
  }
  report.verdict = report.failures.empty();
  return report;
}

LemmaResult lemma6_check(const IntervalFilter& ifm, Field field, const Limits& limits) {
  LemmaResult result;
  const RelativePair pair = interval_gamma(ifm, limits);
  for (const auto& iv : ifm.minimal_intervals()) {
    if (IntervalFilter::length(iv) != 2) {
      result.detail = "F has a minimal interval of length " + std::to_string(IntervalFilter::length(iv));
      return result;
    }
  }
  if (!is_connected(pair.sub())) {
    result.detail = "Gamma(F, M) is not connected";
    return result;
  }
  if (!is_cm(pair.total(), field).verdict) {
    result.detail = "Sigma(M) is not Cohen-Macaulay";
    return result;
  }
  result.gamma_homology = reduced_betti(pair.sub(), field);
  const int bound = *pair.total().dimension() - 1;
  if (auto d = result.gamma_homology.first_nonzero_below(bound)) {
    result.outcome = LemmaOutcome::Violated;
    result.detail = "nonzero homology in dimension " + std::to_string(*d);
  } else {
    result.outcome = LemmaOutcome::Holds;
  }
  return result;
}

}  // namespace hopfcm
