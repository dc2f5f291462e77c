#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hopfcm/enumeration.hpp"
#include "hopfcm/serialize.hpp"
#include "support.hpp"

using namespace hopfcm;

namespace {

using Matrix = std::vector<std::vector<int>>;

// Smallest relabeled adjacency matrix over all permutations.
Matrix canonical_matrix(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Matrix best;
  do {
    Matrix r(m.size(), std::vector<int>(m.size()));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(perm[j])] = m[i][j];
    }
    if (best.empty() || r < best) best = r;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool acyclic(const Matrix& out) {
  const std::size_t n = out.size();
  std::vector<int> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) indegree[j] += out[i][j];
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t j = 0; j < n; ++j) {
      if (out[v][j] && --indegree[j] == 0) ready.push_back(j);
    }
  }
  return seen == n;
}

// Entry 1 undirected, 2 directed i -> j.
std::size_t count_mixed_graph_classes(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  std::set<Matrix> classes;
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    Matrix out = m;
    std::size_t c = code;
    for (auto [i, j] : pairs) {
      const int state = static_cast<int>(c % 4);
      c /= 4;
      if (state == 1) m[i][j] = m[j][i] = 1;
      if (state == 2) m[i][j] = 2, out[i][j] = 1;
      if (state == 3) m[j][i] = 2, out[j][i] = 1;
    }
    if (acyclic(out)) classes.insert(canonical_matrix(m));
  }
  return classes.size();
}

std::vector<Matrix> strict_orders(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) pairs.push_back({i, j});
    }
  }
  std::vector<Matrix> orders;
  for (std::size_t code = 0; code < (std::size_t{1} << pairs.size()); ++code) {
    Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((code >> b) & 1u) m[pairs[b].first][pairs[b].second] = 1;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (m[i][j] && m[j][i]) ok = false;
        for (int k = 0; k < n && ok; ++k) {
          if (m[i][j] && m[j][k] && !m[i][k]) ok = false;
        }
      }
    }
    if (ok) orders.push_back(m);
  }
  return orders;
}

std::size_t count_double_poset_classes(int n) {
  const auto orders = strict_orders(n);
  std::set<Matrix> classes;
  for (const auto& a : orders) {
    for (const auto& b : orders) {
      Matrix m = a;
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) m[i][j] += 2 * b[i][j];
      }
      classes.insert(canonical_matrix(m));
    }
  }
  return classes.size();
}

Structure relabel(const Structure& h, const std::vector<std::string>& names) {
  Json doc = to_json(h);
  const auto old = h.ground().labels();
  auto rename = [&](const std::string& label) {
    const auto at = std::find(old.begin(), old.end(), label) - old.begin();
    return names[static_cast<std::size_t>(at)];
  };
  auto rename_all = [&](Json& node) {
    if (node.is_string()) {
      node = rename(node.get<std::string>());
    } else {
      for (auto& child : node) {
        if (child.is_string()) {
          child = rename(child.get<std::string>());
        } else {
          for (auto& leaf : child) leaf = rename(leaf.get<std::string>());
        }
      }
    }
  };
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "kind") rename_all(it.value());
  }
  return parse_structure(doc);
}

}  // namespace

TEST_CASE("enumeration matches brute-force isomorphism classes") {
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(enumerate_mixed_graphs(n).size() == count_mixed_graph_classes(n));
  }
  for (int n = 0; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(enumerate_double_posets(n).size() == count_double_poset_classes(n));
  }
}

TEST_CASE("enumerated representatives are pairwise non-isomorphic and canonical") {
  for (Family f : {Family::MixedGraph, Family::DoublePoset}) {
    for (int n = 0; n <= 3; ++n) {
      std::set<std::string> forms;
      for (const auto& h : enumerate_structures(f, n)) {
        CHECK(h.size() == n);
        CHECK(canonical_structure(h) == h);
        forms.insert(canonical_form(h));
      }
      CHECK(forms.size() == enumerate_structures(f, n).size());
    }
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  gen::Rng rng(101);
  const std::vector<std::string> names{"z", "q", "m", "b", "x"};
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 5;
    const Structure h = gen::structure(rng, trial % 2 ? Family::MixedGraph : Family::DoublePoset, n);
    std::vector<std::string> shuffled(names.begin(), names.begin() + n);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Structure g = relabel(h, shuffled);
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("canonical form separates non-isomorphic structures") {
  const Structure path = MixedGraph::from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {});
  const Structure star = MixedGraph::from_edges({"a", "b", "c"}, {{"a", "b"}}, {{"b", "c"}});
  CHECK(canonical_form(path) != canonical_form(star));
  const Structure in = MixedGraph::from_edges({"a", "b", "c"}, {}, {{"a", "c"}, {"b", "c"}});
  const Structure out = MixedGraph::from_edges({"a", "b", "c"}, {}, {{"c", "a"}, {"c", "b"}});
  CHECK(canonical_form(in) != canonical_form(out));
}

TEST_CASE("enumeration cap") {
  CHECK(enumeration_cap(Family::MixedGraph) >= 5);
  CHECK(enumeration_cap(Family::DoublePoset) >= 4);
  CHECK_THROWS_AS(enumerate_mixed_graphs(enumeration_cap(Family::MixedGraph) + 1), ResourceLimitExceeded);
  CHECK_THROWS_AS(enumerate_double_posets(-1), InvalidInput);
}

TEST_CASE("sigma is acyclic below the top across small structures") {
  for (Family f : {Family::MixedGraph, Family::DoublePoset}) {
    const ScanSummary s = cm_hopf_scan(f, natural_submonoid(f), 3);
    CHECK(s.structures > 0);
    CHECK(s.sigma_violations == 0);
    CHECK(s.full_agreement());
  }
}

TEST_CASE("analysis of the reference graph") {
  const StructureAnalysis a = analyze(fixtures::reference_graph(), SubmonoidId::Directed);
  CHECK(a.h_vector.display() == "(0, 3, 4, -1)");
  CHECK_FALSE(a.h_positive);
  CHECK_FALSE(a.theorem1);
  CHECK_FALSE(a.relatively_cm);
  REQUIRE(a.characterization.has_value());
  CHECK_FALSE(*a.characterization);
  CHECK_FALSE(analyze(fixtures::reference_graph(), SubmonoidId::Full).characterization.has_value());
}
