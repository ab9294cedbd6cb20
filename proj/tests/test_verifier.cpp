#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ordmean/json_io.hpp"
#include "ordmean/verifier.hpp"

using namespace ordmean;

namespace {

const GroupResult& result_for(const VerificationReport& r, const std::string& spec) {
  auto it = std::find_if(r.results.begin(), r.results.end(),
                         [&](const GroupResult& g) { return g.spec == spec; });
  REQUIRE(it != r.results.end());
  return *it;
}

bool corpus_has(const Corpus& c, const std::string& spec) {
  return std::any_of(c.entries.begin(), c.entries.end(),
                     [&](const CorpusEntry& e) { return e.spec == spec; });
}

}  // namespace

TEST_CASE("corpus construction") {
  Corpus c60 = build_corpus(60);
  CHECK(corpus_has(c60, "A5"));
  CHECK(corpus_has(c60, "D58"));
  CHECK(corpus_has(c60, "F(7,3)"));
  CHECK(corpus_has(c60, "C2xC2"));
  CHECK_FALSE(corpus_has(c60, "S5"));  // order 120 > 60

  std::set<std::string> specs;
  for (const auto& e : c60.entries) {
    CHECK(e.order <= 60);
    REQUIRE(specs.insert(e.spec).second);  // no duplicate spec strings
  }

  Corpus c360 = build_corpus(360);
  CHECK(corpus_has(c360, "C5xQ8"));
  CHECK(corpus_has(c360, "S3xC3"));
  CHECK(corpus_has(c360, "C315"));
  CHECK(corpus_has(c360, "C17xA4"));

  CHECK_THROWS_AS(build_corpus(4), std::invalid_argument);

  // corpus order is deterministic
  Corpus again = build_corpus(60);
  REQUIRE(again.entries.size() == c60.entries.size());
  for (std::size_t i = 0; i < again.entries.size(); ++i)
    REQUIRE(again.entries[i].spec == c60.entries[i].spec);
}

TEST_CASE("theorem 1.1 suite on a small corpus") {
  Corpus corpus = build_corpus(60);
  for (MeanKind f : {MeanKind::PsiDd, MeanKind::Ell}) {
    VerificationReport r = suite_theorem_1_1(corpus, f);
    CHECK(r.passed());
    CHECK(r.checked + r.vacuous + r.failed == corpus.entries.size());
    // A5 sits exactly on the last threshold: vacuous everywhere
    CHECK(result_for(r, "A5").status == Status::Vacuous);
    CHECK(result_for(r, "C12").status == Status::Checked);
  }
}

TEST_CASE("theorem A suite") {
  Corpus corpus = build_corpus(60);
  VerificationReport r = suite_theorem_a(corpus);
  CHECK(r.passed());
  CHECK(result_for(r, "A4").status == Status::Vacuous);  // sharp case
  CHECK(result_for(r, "S3").status == Status::Checked);
  CHECK(result_for(r, "Q8").status == Status::Checked);
  CHECK(r.checked + r.vacuous + r.failed == corpus.entries.size());
}

TEST_CASE("theorem B suite") {
  Corpus corpus = build_corpus(60);
  VerificationReport r = suite_theorem_b(corpus, {3, 5, 7, 11, 13});
  CHECK(r.passed());
  CHECK(r.equality_anomalies.empty());
  CHECK(result_for(r, "D6").status == Status::Checked);    // equality case, D6 = D_2p
  CHECK(result_for(r, "C3").status == Status::Checked);    // strict case
  CHECK(result_for(r, "F(7,3)").status == Status::Vacuous);  // l < l(D14)
  CHECK(result_for(r, "A5").status == Status::Vacuous);

  std::vector<std::uint64_t> bad{4};
  CHECK_THROWS_AS(suite_theorem_b(corpus, bad), std::invalid_argument);
}

TEST_CASE("theorem C suite") {
  Corpus corpus = build_corpus(60);
  VerificationReport r = suite_theorem_c(corpus);
  CHECK(r.passed());
  CHECK(result_for(r, "C5xQ8").status == Status::Checked);
  CHECK(result_for(r, "A5").status == Status::Vacuous);
  CHECK(r.checked + r.vacuous + r.failed == corpus.entries.size());
}

TEST_CASE("corollaries suite") {
  Corpus corpus = build_corpus(60);
  VerificationReport r = suite_corollaries(corpus);
  CHECK(r.passed());
  CHECK(result_for(r, "C45").status == Status::Checked);  // odd cyclic, 2 primes <= (3+1)/2
  CHECK(result_for(r, "F(7,3)").status == Status::Vacuous);
}

TEST_CASE("corollaries pick up the C315 witness") {
  Corpus corpus = build_corpus(315);
  VerificationReport r = suite_corollaries(corpus);
  CHECK(r.passed());
  const GroupResult& c315 = result_for(r, "C315");
  CHECK(c315.status == Status::Checked);
  CHECK(c315.predicate.find("converse fails") != std::string::npos);
}

TEST_CASE("lemma suite with reduced sweeps") {
  Corpus corpus = build_corpus(40);
  LemmaSweepBounds bounds;
  bounds.few_divisors_max = 2'000;
  bounds.inverse_p_max = 500;
  bounds.sandwich_max = 300;
  VerificationReport r = suite_lemmas(corpus, 0, bounds);
  CHECK(r.passed());
  for (const auto& res : r.results) {
    CAPTURE(res.spec, res.details);
    CHECK(res.status != Status::Failed);
  }
  // the boundary record reports both open comparisons
  const GroupResult& boundary = result_for(r, "boundary-records");
  CHECK(boundary.details.find("l(C13 x A4)") != std::string::npos);
  CHECK(boundary.details.find("l(C173 x A5)") != std::string::npos);
}

TEST_CASE("suites are deterministic") {
  Corpus corpus = build_corpus(40);
  VerificationReport a = suite_theorem_b(corpus, {3, 5});
  VerificationReport b = suite_theorem_b(corpus, {3, 5});
  CHECK(render_text(a, true) == render_text(b, true));
  CHECK(render_csv(a) == render_csv(b));
  json ja = to_json(a), jb = to_json(b);
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("report rendering") {
  Corpus corpus = build_corpus(24);
  VerificationReport r = suite_theorem_a(corpus);
  std::string text = render_text(r);
  CHECK(text.find("suite: theorem-A") != std::string::npos);
  CHECK(text.find("falsification") != std::string::npos);  // substitution note
  CHECK(text.find("PASS: theorem-A") != std::string::npos);
  std::string csv = render_csv(r);
  CHECK(csv.rfind("spec,status,lhs,rhs,predicate\n", 0) == 0);
  json j = to_json(r);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["results"].size() == corpus.entries.size());
}
