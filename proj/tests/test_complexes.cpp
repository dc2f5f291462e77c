#include <doctest.h>

#include <algorithm>

#include "hopfcm/hopf_complexes.hpp"
#include "hopfcm/simplicial_complex.hpp"
#include "support.hpp"

using namespace hopfcm;

namespace {

using Labels = std::vector<std::vector<std::string>>;

int vertex(const SimplicialComplex& c, const std::string& label) {
  const auto& u = c.universe();
  return static_cast<int>(std::find(u.begin(), u.end(), label) - u.begin());
}

Face face(const SimplicialComplex& c, std::vector<std::string> labels) {
  Face f;
  for (const auto& l : labels) f.push_back(vertex(c, l));
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<std::string> vertex_labels(const SimplicialComplex& c) {
  std::vector<std::string> out;
  for (int v : c.vertices()) out.push_back(c.universe()[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("void, empty and simplex complexes") {
  const auto v = SimplicialComplex::void_complex();
  CHECK(v.is_void());
  CHECK_FALSE(v.dimension().has_value());
  CHECK(f_vector(v).empty());
  CHECK_FALSE(is_connected(v));

  const auto e = SimplicialComplex::empty_complex();
  CHECK(*e.dimension() == -1);
  CHECK(f_vector(e) == std::vector<std::size_t>{1});
  CHECK(is_pure(e));
  CHECK(is_connected(e));

  const auto s = SimplicialComplex::simplex({"x", "y", "z"});
  CHECK(f_vector(s) == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(s.facets().size() == 1);

  const auto two = SimplicialComplex::from_faces({"p", "q"}, {{0}, {1}});
  CHECK(is_pure(two));
  CHECK(*two.dimension() == 0);
  CHECK_FALSE(is_connected(two));
  CHECK(is_connected(SimplicialComplex::from_faces({"p"}, {{0}})));
}

TEST_CASE("from_faces closes under subsets") {
  const auto c = SimplicialComplex::from_faces({"a", "b", "c", "d"}, {{0, 1, 2}, {2, 3}});
  CHECK(f_vector(c) == std::vector<std::size_t>{1, 4, 4, 1});
  CHECK_FALSE(is_pure(c));
  CHECK(is_connected(c));
  CHECK(labeled_facets(c) == Labels{{"a", "b", "c"}, {"c", "d"}});
}

TEST_CASE("sigma of the reference graph is the triangulated hexagon") {
  const Structure g = fixtures::reference_graph();
  const auto s = sigma(g);
  CHECK(vertex_labels(s) == std::vector<std::string>{"a", "a|b", "a|b|c", "a|b|d", "a|d", "b", "b|c"});
  CHECK(f_vector(s) == std::vector<std::size_t>{1, 7, 12, 6});
  CHECK(is_pure(s));
  CHECK(*s.dimension() == 2);

  const auto lk = link(s, face(s, {"a|b"}));
  CHECK(f_vector(lk) == std::vector<std::size_t>{1, 4, 4});
  CHECK(vertex_labels(lk) == std::vector<std::string>{"a", "a|b|c", "a|b|d", "b"});
  CHECK(link(s, {}) == s);
  CHECK(link(s, s.facets().front()) == SimplicialComplex::empty_complex(s.universe()));
  CHECK_THROWS_AS(link(s, face(s, {"a", "b"})), InvalidInput);
}

TEST_CASE("gamma of the reference graph has six vertices and eight edges") {
  const Structure g = fixtures::reference_graph();
  const auto c = gamma(g, SubmonoidId::Edgeless);
  CHECK(f_vector(c) == std::vector<std::size_t>{1, 6, 8});
  CHECK(vertex_labels(c) == std::vector<std::string>{"a", "a|b|c", "a|b|d", "a|d", "b", "b|c"});
  CHECK(c.contains(face(c, {"b", "a|b|c"})));
  CHECK(c.contains(face(c, {"a", "a|b|d"})));
  CHECK(is_pure(c));
  CHECK(is_connected(c));
  CHECK(*c.dimension() == 1);
}

TEST_CASE("small sigma and gamma cases") {
  CHECK(sigma(MixedGraph::discrete({"v"})) == SimplicialComplex::empty_complex());
  CHECK(gamma(MixedGraph::discrete({"a", "b", "c"}), SubmonoidId::Edgeless).is_void());
  const auto k2 = gamma(fixtures::k2(), SubmonoidId::Edgeless);
  CHECK(f_vector(k2) == std::vector<std::size_t>{1});

  const auto p = sigma(fixtures::reference_poset());
  CHECK(f_vector(p) == std::vector<std::size_t>{1, 2, 1});
  CHECK(vertex_labels(p) == std::vector<std::string>{"a", "a|b"});
}

TEST_CASE("sigma of a mixed graph is the order complex of its down-sets") {
  gen::Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 4;
    const MixedGraph g = gen::mixed_graph(rng, n);
    const InducedPoset poset(g);
    const auto s = sigma(g);
    std::vector<std::string> downsets;
    for (Mask m = 1; m < g.ground().full(); ++m) {
      if (poset.is_down_set(m)) downsets.push_back(g.ground().render(m));
    }
    std::sort(downsets.begin(), downsets.end());
    CHECK(vertex_labels(s) == downsets);
    CHECK(is_pure(s));
    CHECK(*s.dimension() == n - 2);
  }
}

TEST_CASE("sigma of a double poset only sees the first order") {
  gen::Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const DoublePoset p = gen::double_poset(rng, 1 + trial % 5);
    const DoublePoset first_only = DoublePoset::from_relations(
        p.carrier().labels(),
        [&] {
          std::vector<LabelPair> out;
          for (auto [x, y] : p.relation1()) out.emplace_back(p.carrier().label(x), p.carrier().label(y));
          return out;
        }(),
        {});
    CHECK(sigma(p) == sigma(first_only));
  }
}

TEST_CASE("gamma is a subcomplex, void exactly on the submonoid") {
  gen::Rng rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    const Structure h = gen::structure(rng, trial % 2 ? Family::MixedGraph : Family::DoublePoset, 1 + trial % 5);
    for (SubmonoidId s : {SubmonoidId::Edgeless, SubmonoidId::Directed, SubmonoidId::InversionFree,
                          SubmonoidId::Full}) {
      if (!valid_for(s, h.family())) continue;
      const auto total = sigma(h);
      const auto sub = gamma(h, s);
      CHECK(sub.is_void() == in_submonoid(h, s));
      for (const auto& f : sub.faces()) CHECK(total.contains(f));
      CHECK_NOTHROW(RelativePair(total, sub));
    }
  }
}

TEST_CASE("relative pairs must nest") {
  const auto a = SimplicialComplex::from_faces({"x", "y"}, {{0}});
  const auto b = SimplicialComplex::from_faces({"x", "y"}, {{1}});
  CHECK_THROWS_AS(RelativePair(a, b), InvalidInput);
  CHECK_NOTHROW(RelativePair(a, SimplicialComplex::void_complex({"x", "y"})));
}

TEST_CASE("double cones") {
  const auto e = double_cone(SimplicialComplex::empty_complex());
  CHECK(f_vector(e) == std::vector<std::size_t>{1, 2, 1});
  const auto v = double_cone(SimplicialComplex::simplex({"v"}));
  CHECK(f_vector(v) == std::vector<std::size_t>{1, 3, 3, 1});

  const RelativePair k2 = sigma_gamma_pair(fixtures::k2(), SubmonoidId::Edgeless);
  const RelativePair coned = double_cone_pair(k2);
  CHECK(coned.relative_face_counts() == std::vector<std::size_t>{0, 2, 4, 2});
}

TEST_CASE("relative Hilbert function calibrations") {
  const RelativePair edge(SimplicialComplex::simplex({"u", "w"}), SimplicialComplex::void_complex({"u", "w"}));
  for (int k = 0; k <= 6; ++k) CHECK(relative_hilbert(edge, k) == k + 1);

  const RelativePair k2 = double_cone_pair(sigma_gamma_pair(fixtures::k2(), SubmonoidId::Edgeless));
  for (int k = 0; k <= 6; ++k) CHECK(relative_hilbert(k2, k) == k * k + k);

  const auto s = SimplicialComplex::simplex({"u", "w"});
  for (int k = 1; k <= 4; ++k) CHECK(relative_hilbert(RelativePair(s, s), k) == 0);
}

TEST_CASE("Hilbert identity on random structures") {
  gen::Rng rng(59);
  for (int trial = 0; trial < 80; ++trial) {
    // the identity needs a nonempty ground set: sigma of the unit has no dimension to cone
    const int n = 1 + trial % 4;
    const Structure h = gen::structure(rng, trial % 2 ? Family::MixedGraph : Family::DoublePoset, n);
    for (SubmonoidId s : {SubmonoidId::Edgeless, SubmonoidId::Directed, SubmonoidId::InversionFree,
                          SubmonoidId::Full}) {
      if (!valid_for(s, h.family())) continue;
      const RelativePair coned = double_cone_pair(sigma_gamma_pair(h, s));
      for (int k = 0; k <= n + 2; ++k) {
        CHECK(relative_hilbert(coned, k) == oracle::count_colorings(h, s, k + 1));
      }
    }
  }
}

TEST_CASE("interval filters") {
  std::vector<Mask> boolean;
  for (Mask m = 0; m < 16; ++m) boolean.push_back(m);
  std::set<Interval> long_intervals;
  for (Mask s : boolean) {
    for (Mask t : boolean) {
      if (is_subset(s, t) && popcount(t & ~s) >= 2) long_intervals.insert({s, t});
    }
  }
  const IntervalFilter all(4, boolean, long_intervals);
  const RelativePair pair = interval_gamma(all);
  CHECK(*pair.total().dimension() == 2);
  // the sub complex is the 1-skeleton of the total one
  CHECK(*pair.sub().dimension() == 1);
  const auto total_f = f_vector(pair.total());
  CHECK(f_vector(pair.sub()) == std::vector<std::size_t>(total_f.begin(), total_f.begin() + 3));

  const IntervalFilter none(4, boolean, {});
  CHECK(interval_gamma(none).sub().is_void());

  CHECK_THROWS_AS(IntervalFilter(2, {0, 1}, {}), InvalidInput);                  // [n] missing
  CHECK_THROWS_AS(IntervalFilter(2, {0, 1, 3}, {{0, 1}}), InvalidInput);        // not up-closed
  CHECK_THROWS_AS(IntervalFilter(2, {0, 3}, {{0, 2}}), InvalidInput);           // 2 not a member

  const IntervalFilter gen = IntervalFilter::generated(3, {0, 1, 3, 7}, {{1, 7}});
  CHECK(gen.contains({0, 7}));
  CHECK(gen.contains({1, 7}));
  CHECK_FALSE(gen.contains({1, 3}));
  CHECK(gen.minimal_intervals() == std::vector<Interval>{{1, 7}});
}

TEST_CASE("interval filters from structures reproduce sigma and gamma") {
  gen::Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const Structure h = gen::structure(rng, trial % 2 ? Family::MixedGraph : Family::DoublePoset, 1 + trial % 5);
    const SubmonoidId s = natural_submonoid(h.family());
    const RelativePair direct = sigma_gamma_pair(h, s);
    const RelativePair via = interval_gamma(IntervalFilter::from_structure(h, s));
    CHECK(via == direct);
  }
}

TEST_CASE("face limit") {
  Limits tight;
  tight.max_faces = 10;
  CHECK_THROWS_AS(sigma(fixtures::reference_graph(), tight), ResourceLimitExceeded);
  Limits narrow;
  narrow.max_vertices = 3;
  CHECK_THROWS_AS(sigma(fixtures::reference_graph(), narrow), ResourceLimitExceeded);
}
