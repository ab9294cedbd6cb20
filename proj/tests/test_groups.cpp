#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "ordmean/families.hpp"
#include "ordmean/group.hpp"
#include "ordmean/perm.hpp"
#include "naive_oracle.hpp"

using namespace ordmean;

namespace {

OrderStatistics stats_of(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> entries) {
  OrderStatistics s;
  s.entries.assign(entries.begin(), entries.end());
  return s;
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation id(4);
  CHECK(id.is_identity());
  CHECK(id.order() == 1);
  Permutation c3 = Permutation::from_cycle(5, {0, 1, 2});
  Permutation t2 = Permutation::from_cycle(5, {3, 4});
  CHECK((c3 * t2).order() == 6);  // lcm of disjoint cycle lengths
  CHECK(c3.inverse() * c3 == Permutation(5));
  CHECK((c3 * t2) * (c3 * t2).inverse() == Permutation(5));
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycle(3, {0, 5}), std::invalid_argument);
  // composition order: (a*b)(x) = b(a(x))
  Permutation a = Permutation::from_cycle(3, {0, 1});
  Permutation b = Permutation::from_cycle(3, {1, 2});
  CHECK((a * b)[0] == 2);
}

TEST_CASE("element enumeration") {
  CHECK(cyclic(1).elements().size() == 1);
  CHECK(dihedral(6).order() == 6);
  CHECK(alternating(5).order() == 60);
  CHECK(symmetric(5).order() == 120);
  CHECK(quaternion8().order() == 8);
  // the cached list is sorted lexicographically
  PermGroup s4 = symmetric(4);
  const auto& el = s4.elements();
  CHECK(std::is_sorted(el.begin(), el.end()));
  // against the naive closure oracle
  PermGroup a4 = alternating(4);
  auto naive = oracle::naive_elements(a4.degree(), a4.generators());
  CHECK(std::equal(naive.begin(), naive.end(), a4.elements().begin(), a4.elements().end()));
}

TEST_CASE("element cap is enforced") {
  PermGroup big = cyclic(100, 50);
  CHECK_THROWS_AS(big.elements(), ElementCapError);
}

TEST_CASE("element orders") {
  CHECK(cyclic(9).generators()[0].order() == 9);
  PermGroup a5 = alternating(5);
  for (const auto& x : a5.elements()) {
    CHECK(x.order() == oracle::naive_order(x));
    CHECK(a5.order() % x.order() == 0);  // Lagrange
  }
}

TEST_CASE("conjugacy classes") {
  auto sizes = [](const PermGroup& g) {
    std::multiset<std::uint64_t> s;
    for (const auto& c : g.conjugacy_classes()) s.insert(c.size);
    return s;
  };
  CHECK(sizes(symmetric(3)) == std::multiset<std::uint64_t>{1, 2, 3});
  CHECK(sizes(alternating(4)) == std::multiset<std::uint64_t>{1, 3, 4, 4});
  CHECK(sizes(cyclic(4)) == std::multiset<std::uint64_t>{1, 1, 1, 1});
  std::vector<PermGroup> samples;
  samples.push_back(symmetric(4));
  samples.push_back(quaternion8());
  for (const PermGroup& g : samples) {
    auto naive = oracle::naive_class_sizes(oracle::naive_elements(g.degree(), g.generators()));
    CHECK(sizes(g) == naive);
    std::uint64_t total = 0;
    for (const auto& c : g.conjugacy_classes()) total += c.size;
    CHECK(total == g.order());
  }
}

TEST_CASE("order statistics") {
  CHECK(quaternion8().order_statistics() == stats_of({{1, 1}, {2, 1}, {4, 6}}));
  CHECK(alternating(5).order_statistics() == stats_of({{1, 1}, {2, 15}, {3, 20}, {5, 24}}));
  PermGroup klein = direct_product(cyclic(2), cyclic(2));
  CHECK(klein.order_statistics() == stats_of({{1, 1}, {2, 3}}));
  // classes route agrees with the naive element sweep
  std::vector<PermGroup> samples;
  samples.push_back(dihedral(18));
  samples.push_back(metacyclic(7, 3));
  samples.push_back(symmetric(4));
  for (const PermGroup& g : samples) {
    auto naive = oracle::naive_order_statistics(oracle::naive_elements(g.degree(), g.generators()));
    OrderStatistics expected;
    expected.entries.assign(naive.begin(), naive.end());
    CHECK(g.order_statistics() == expected);
  }
}

TEST_CASE("subgroup generation and normality") {
  PermGroup s3 = symmetric(3);
  Permutation three_cycle = Permutation::from_cycle(3, {0, 1, 2});
  Permutation transposition = Permutation::from_cycle(3, {0, 1});

  Subgroup a3 = normal_closure(s3, std::span<const Permutation>(&three_cycle, 1));
  CHECK(a3.order() == 3);
  CHECK(is_normal(s3, a3));

  Subgroup t = subgroup_generated(s3, std::span<const Permutation>(&transposition, 1));
  CHECK(t.order() == 2);
  CHECK_FALSE(is_normal(s3, t));
  CHECK(normal_closure(s3, std::span<const Permutation>(&transposition, 1)).order() == 6);

  CHECK(intersect(a3, a3) == a3);
  CHECK(intersect(a3, t).order() == 1);
  CHECK(trivial_subgroup(s3).order() == 1);
  CHECK(full_subgroup(s3).order() == 6);
}

TEST_CASE("centralizer, center, derived subgroup") {
  PermGroup q8 = quaternion8();
  CHECK(center(q8).order() == 2);
  PermGroup s3 = symmetric(3);
  Subgroup d = derived_subgroup(s3);
  CHECK(d.order() == 3);
  CHECK(is_normal(s3, d));
  PermGroup c12 = cyclic(12);
  for (const auto& x : c12.elements())
    REQUIRE(centralizer(c12, x).order() == 12);
  CHECK(derived_subgroup(alternating(5)).order() == 60);  // perfect
}

TEST_CASE("quotients") {
  PermGroup s3 = symmetric(3);
  Permutation three_cycle = Permutation::from_cycle(3, {0, 1, 2});
  Subgroup a3 = normal_closure(s3, std::span<const Permutation>(&three_cycle, 1));
  PermGroup q = quotient(s3, a3);
  CHECK(q.order() == 2);

  PermGroup q8 = quaternion8();
  Subgroup z = center(q8);
  PermGroup q8z = quotient(q8, z);
  CHECK(q8z.order() == 4);
  CHECK(q8z.order_statistics().max_order() == 2);  // Q8 / Z = C2 x C2

  CHECK(quotient(s3, trivial_subgroup(s3)).order() == 6);

  Permutation transposition = Permutation::from_cycle(3, {0, 1});
  Subgroup t = subgroup_generated(s3, std::span<const Permutation>(&transposition, 1));
  CHECK_THROWS_AS(quotient(s3, t), std::invalid_argument);       // not normal
  CHECK_THROWS_AS(quotient(s3, full_subgroup(s3)), std::invalid_argument);  // N = G

  // |G/N| * |N| = |G| over all normal subgroups of a few groups
  std::vector<PermGroup> samples;
  samples.push_back(dihedral(12));
  samples.push_back(cyclic(30));
  for (const PermGroup& g : samples) {
    for (const auto& c : g.conjugacy_classes()) {
      Subgroup n = normal_closure(g, std::span<const Permutation>(&c.representative, 1));
      if (n.order() == g.order()) continue;
      CHECK(quotient(g, n).order() * n.order() == g.order());
    }
  }
}

TEST_CASE("direct products") {
  CHECK(direct_product(cyclic(5), quaternion8()).order() == 40);
  CHECK(direct_product(symmetric(3), cyclic(3)).order() == 18);
  PermGroup g = symmetric(3);
  PermGroup gt = direct_product(symmetric(3), trivial_group());
  CHECK(gt.order_statistics() == g.order_statistics());

  // multiplicity of order k in G x H is the lcm convolution of the factors
  PermGroup a = dihedral(8), b = cyclic(15);
  PermGroup prod = direct_product(dihedral(8), cyclic(15));
  std::map<std::uint64_t, std::uint64_t> conv;
  for (const auto& [oa, ma] : a.order_statistics().entries)
    for (const auto& [ob, mb] : b.order_statistics().entries)
      conv[std::lcm(oa, ob)] += ma * mb;
  OrderStatistics expected;
  expected.entries.assign(conv.begin(), conv.end());
  CHECK(prod.order_statistics() == expected);
}

TEST_CASE("family constructors") {
  PermGroup m = metacyclic(7, 3, 2);
  CHECK(m.order() == 21);
  CHECK(center(m).order() == 1);
  CHECK(dihedral(6).order_statistics() == symmetric(3).order_statistics());
  CHECK(dihedral(4).order_statistics() == stats_of({{1, 1}, {2, 3}}));  // Klein
  CHECK(dihedral(2).order() == 2);
  CHECK(alternating(3).order() == 3);
  CHECK(symmetric(2).order() == 2);
  CHECK(trivial_group().order() == 1);

  CHECK_THROWS_AS(dihedral(7), std::invalid_argument);
  CHECK_THROWS_AS(cyclic(0), std::invalid_argument);
  CHECK_THROWS_AS(metacyclic(9, 2), std::invalid_argument);   // p not prime
  CHECK_THROWS_AS(metacyclic(7, 4), std::invalid_argument);   // q does not divide p-1
  CHECK_THROWS_AS(metacyclic(7, 3, 3), std::invalid_argument);  // 3 has order 6 mod 7
  CHECK(metacyclic(7, 3).order_statistics() == metacyclic(7, 3, 4).order_statistics());
}

TEST_CASE("restricted isomorphism tester") {
  CHECK(is_isomorphic_small(symmetric(3), dihedral(6)));
  CHECK_FALSE(is_isomorphic_small(cyclic(6), dihedral(6)));
  CHECK(is_isomorphic_small(cyclic(10), cyclic(10)));
  PermGroup f73 = metacyclic(7, 3);
  PermGroup c21 = cyclic(21);
  CHECK_THROWS_AS(is_isomorphic_small(f73, c21), std::invalid_argument);  // 21 is not 2p
  PermGroup c6 = cyclic(6);
  PermGroup c10 = cyclic(10);
  CHECK_THROWS_AS(is_isomorphic_small(c6, c10), std::invalid_argument);  // unequal orders
}
