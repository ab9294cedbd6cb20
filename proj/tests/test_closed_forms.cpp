#include <catch2/catch_amalgamated.hpp>

#include "ordmean/closed_forms.hpp"
#include "ordmean/families.hpp"
#include "ordmean/invariants.hpp"

using namespace ordmean;

namespace {

FactoredReal fr(std::initializer_list<std::pair<std::int64_t, BigRational>> entries) {
  FactoredReal v;
  for (const auto& [p, e] : entries) v.set_exponent(p, e);
  return v;
}

BigRational q(long num, long den) { return make_rational(num, den); }

}  // namespace

TEST_CASE("dihedral threshold closed forms") {
  CHECK(l_dihedral_2p(3) == fr({{2, q(-1, 2)}, {3, q(-2, 3)}}));
  CHECK(psi_dd_dihedral_2p(3) == q(13, 36));
  CHECK(psi_dd_dihedral_2p(5) == q(31, 100));
  CHECK(psi_dd_dihedral_2p(7) == q(57, 196));
  CHECK_THROWS_AS(l_dihedral_2p(2), std::invalid_argument);
  CHECK_THROWS_AS(l_dihedral_2p(9), std::invalid_argument);
  CHECK_THROWS_AS(psi_dd_dihedral_2p(4), std::invalid_argument);
}

TEST_CASE("dihedral bridges to enumeration") {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    PermGroup d = dihedral(2 * p);
    CHECK(l_dihedral_2p(p) == ell(d));
    CHECK(psi_dd_dihedral_2p(p) == psi_dd(d));
  }
}

TEST_CASE("cyclic p-power closed forms") {
  CyclicPPowForms f21 = cyclic_ppow_forms(2, 1);
  CHECK(f21.psi_dd == q(3, 4));
  CHECK(f21.ell == fr({{2, q(-1, 2)}}));
  CHECK(cyclic_ppow_forms(3, 2).ell == fr({{3, q(-4, 9)}}));
  CHECK_THROWS_AS(cyclic_ppow_forms(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_ppow_forms(3, 0), std::invalid_argument);

  // l(P) sits inside [p^(-1/(p-1)), p^(-1/p)] and matches enumeration
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t n = 1, pn = p; pn <= 625; ++n, pn *= p) {
      CyclicPPowForms f = cyclic_ppow_forms(p, n);
      PermGroup c = cyclic(pn);
      CHECK(f.ell == ell(c));
      CHECK(f.psi_dd == psi_dd(c));
      CHECK(compare(f.lower, f.ell) != std::strong_ordering::greater);
      CHECK(compare(f.ell, f.upper) != std::strong_ordering::greater);
    }
  }
}

TEST_CASE("theta scaling factor") {
  CHECK(theta(3, BigRational(2)) == fr({{3, q(-2, 3)}}));
  for (std::uint64_t p : {3, 5, 11})
    CHECK(theta(p, BigRational(1)) ==
          fr({{static_cast<std::int64_t>(p), make_rational(-1, BigInt(1) * p)}}));
  CHECK(compare(theta(7, BigRational(3)), theta(7, BigRational(2))) ==
        std::strong_ordering::less);  // decreasing in x
  CHECK_THROWS_AS(theta(7, BigRational(0)), std::invalid_argument);
  CHECK_THROWS_AS(theta(7, BigRational(-2)), std::invalid_argument);
  CHECK_THROWS_AS(theta(2, BigRational(1)), std::invalid_argument);
}

TEST_CASE("split extension closed form") {
  SemidirectForms f = l_semidirect(7, cyclic(3));
  CHECK(f.ell == fr({{3, q(-1, 3)}, {7, q(-5, 7)}}));
  CHECK(f.ell == ell(metacyclic(7, 3, 2)));
  CHECK(f.rho == rho(metacyclic(7, 3, 2)));  // 7^6 * 3^14
  CHECK(l_semidirect(3, cyclic(2)).ell == l_dihedral_2p(3));
  CHECK(l_semidirect(5, cyclic(2)).ell == l_dihedral_2p(5));

  // the four named bridges, both l and rho
  for (auto [p, qq] : std::initializer_list<std::pair<std::uint64_t, std::uint64_t>>{
           {7, 3}, {13, 3}, {11, 5}, {31, 5}}) {
    PermGroup m = metacyclic(p, qq);
    SemidirectForms forms = l_semidirect(p, cyclic(qq));
    CHECK(forms.ell == ell(m));
    CHECK(forms.rho == rho(m));
  }

  PermGroup c7 = cyclic(7);
  CHECK_THROWS_AS(l_semidirect(7, c7), std::invalid_argument);  // |H| not coprime to p
  PermGroup triv = trivial_group();
  CHECK_THROWS_AS(l_semidirect(7, triv), std::invalid_argument);  // |H| = 1
}

TEST_CASE("cyclic closed forms via multiplicativity") {
  CHECK(l_cyclic(1).is_one());
  CHECK(psi_dd_cyclic(1) == 1);
  CHECK(l_cyclic(315) == fr({{3, q(-4, 9)}, {5, q(-1, 5)}, {7, q(-1, 7)}}));
  CHECK(compare(l_cyclic(315), l_dihedral_2p(3)) == std::strong_ordering::less);

  // l(D6) < l(C12) < l(C2 x C2)
  FactoredReal l_klein = fr({{2, q(-5, 4)}});
  CHECK(compare(l_dihedral_2p(3), l_cyclic(12)) == std::strong_ordering::less);
  CHECK(compare(l_cyclic(12), l_klein) == std::strong_ordering::less);

  // psi''(D6) < psi''(C180) < psi''(C2 x C2)
  CHECK(psi_dd_dihedral_2p(3) < psi_dd_cyclic(180));
  CHECK(psi_dd_cyclic(180) < q(7, 16));

  // bridges against enumeration for mixed orders
  for (std::uint64_t n : {12, 30, 180, 315}) {
    PermGroup c = cyclic(n);
    CHECK(l_cyclic(n) == ell(c));
    CHECK(psi_dd_cyclic(n) == psi_dd(c));
  }
}

TEST_CASE("small-prime structure constants") {
  CHECK(theorem_c_constants(3).psi_dd_quotient_bound == q(13, 28));
  CHECK(theorem_c_constants(5).psi_dd_quotient_bound == q(31, 84));
  TheoremCConstants c13 = theorem_c_constants(13);
  CHECK(c13.ell_quotient_bound == fr({{2, q(-1, 2)}, {13, q(-6, 13)}}));
  CHECK(compare(c13.ell_quotient_bound, ell(alternating(4))) == std::strong_ordering::greater);
  // and the p = 3 bound clears the Klein threshold: 13/28 > 7/16
  CHECK(theorem_c_constants(3).psi_dd_quotient_bound > q(7, 16));
  CHECK(compare(theorem_c_constants(3).ell_quotient_bound, fr({{2, q(-5, 4)}})) ==
        std::strong_ordering::greater);
}

TEST_CASE("threshold table") {
  const auto& table = threshold_table_to_200();
  REQUIRE(!table.empty());
  CHECK(table.front().p == 3);
  for (std::size_t k = 0; k + 1 < table.size(); ++k)
    REQUIRE(compare(table[k].l_d2p, table[k + 1].l_d2p) == std::strong_ordering::greater);
  ThresholdRow r = threshold_row(173);
  CHECK(r.p == 173);
  CHECK(to_decimal(r.l_d2p, 3).text == "0.052");
  CHECK(threshold_row(13).l_d2p == l_dihedral_2p(13));
}
