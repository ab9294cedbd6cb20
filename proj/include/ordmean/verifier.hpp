#pragma once

// Corpus construction and the verification suites, one per theorem,
// corollary or lemma bundle.  Every hypothesis and every conclusion that is
// a numeric claim is decided with exact comparisons; 6-decimal
// approximations appear in reports only for human readers.
//
// The theorems are universally quantified over all finite groups; a run of
// these suites is an exhaustive falsification attempt over the constructed
// corpus, not a proof.  Reports carry that note in their header.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "exact.hpp"
#include "invariants.hpp"
#include "parallel.hpp"
#include "spec_lang.hpp"
#include "structure.hpp"

namespace ordmean {

enum class MeanKind { PsiDd, Ell };

inline const char* mean_name(MeanKind f) { return f == MeanKind::PsiDd ? "psi_dd" : "ell"; }

struct Families {
  bool cyclic = true;
  bool dihedral = true;
  bool symmetric = true;
  bool alternating = true;
  bool quaternion = true;
  bool metacyclic = true;
  bool coprime_products = true;
  bool named_extras = true;
};

struct CorpusEntry {
  std::string spec;
  GroupExpr expr;
  std::uint64_t order = 0;
};

// Invariants cached per corpus entry so suites do not re-enumerate groups
// for hypothesis evaluation.  Groups themselves are rebuilt on demand for
// the (much rarer) structural conclusion checks.
struct CorpusData {
  InvariantBundle inv;
  OrderStatistics stats;
};

class Corpus {
public:
  std::vector<CorpusEntry> entries;
  std::uint64_t max_order = 0;
  Families families;

  PermGroup build(std::size_t i) const { return build_group(entries[i].expr); }

  void ensure_data(unsigned threads = 0) const {
    std::call_once(cache_->once, [&] {
      cache_->data.resize(entries.size());
      parallel_for_indexed(
          entries.size(),
          [&](std::size_t i) {
            PermGroup g = build(i);
            cache_->data[i].inv = invariant_bundle(g);
            cache_->data[i].stats = g.order_statistics();
          },
          threads);
    });
  }

  const CorpusData& data(std::size_t i) const { return cache_->data[i]; }

private:
  struct Cache {
    std::once_flag once;
    std::vector<CorpusData> data;
  };
  std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

// The default corpus: all the families the toolkit can name, every pairwise
// coprime product of two of them that fits, and the named groups that the
// family rules alone would miss (C2xC2, S3xC3).  Deterministic order.
inline Corpus build_corpus(std::uint64_t max_order = 360, Families families = {}) {
  if (max_order < 8) throw std::invalid_argument("build_corpus: max_order must be >= 8");
  Corpus corpus;
  corpus.max_order = max_order;
  corpus.families = families;

  std::set<std::string> seen;
  auto add = [&](const std::string& spec) {
    GroupExpr e = parse_spec(spec);
    if (expr_order(e) > max_order) return;
    if (!seen.insert(spec).second) return;
    corpus.entries.push_back({spec, e, expr_order(e)});
  };

  std::size_t atoms_begin = corpus.entries.size();
  if (families.cyclic)
    for (std::uint64_t n = 1; n <= max_order; ++n) add("C" + std::to_string(n));
  if (families.dihedral)
    for (std::uint64_t m = 4; m <= max_order; m += 2) add("D" + std::to_string(m));
  if (families.symmetric)
    for (std::uint64_t n = 3; n <= 5; ++n) add("S" + std::to_string(n));
  if (families.alternating)
    for (std::uint64_t n = 3; n <= 5; ++n) add("A" + std::to_string(n));
  if (families.quaternion) add("Q8");
  if (families.metacyclic)
    for (std::uint64_t p = 3; p * 2 <= max_order; p += 2) {
      if (!is_prime_u64(p)) continue;
      for (std::uint64_t q = 2; q < p && p * q <= max_order; ++q)
        if ((p - 1) % q == 0) add("F(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  std::size_t atoms_end = corpus.entries.size();

  if (families.coprime_products) {
    for (std::size_t i = atoms_begin; i < atoms_end; ++i) {
      const auto a = corpus.entries[i];
      if (a.order < 2) continue;
      for (std::size_t j = i + 1; j < atoms_end; ++j) {
        const auto b = corpus.entries[j];
        if (b.order < 2) continue;
        if (a.order * b.order > max_order) continue;
        if (std::gcd(a.order, b.order) != 1) continue;
        add(a.spec + "x" + b.spec);
      }
    }
  }
  if (families.named_extras) {
    add("C2xC2");
    add("S3xC3");
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class Status { Checked, Vacuous, Failed };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Checked: return "checked";
    case Status::Vacuous: return "vacuous";
    case Status::Failed: return "FAILED";
  }
  return "?";
}

struct GroupResult {
  std::string spec;
  Status status = Status::Vacuous;
  std::string details;    // parts checked, or failure specifics
  std::string lhs, rhs;   // exact text of the comparison backing the verdict
  std::string predicate;  // name of the asserted predicate
};

struct VerificationReport {
  std::string suite;
  std::string params;
  std::string header_note =
      "corpus-based falsification attempt: the statements are quantified over all finite groups "
      "and are checked here exhaustively over the constructed corpus with exact arithmetic; "
      "a pass is evidence, not a proof";
  std::vector<GroupResult> results;
  std::vector<std::string> equality_anomalies;  // theorem B equality cases with |G| != 2p
  std::size_t checked = 0, vacuous = 0, failed = 0;

  bool passed() const { return failed == 0; }

  void finalize() {
    checked = vacuous = failed = 0;
    for (const auto& r : results) {
      if (r.status == Status::Checked) ++checked;
      if (r.status == Status::Vacuous) ++vacuous;
      if (r.status == Status::Failed) ++failed;
    }
  }
};

namespace detail {

inline std::string dec6(const FactoredReal& v) { return to_decimal(v, 6).text; }
inline std::string dec6(const BigRational& v) { return rational_to_decimal(v, 6).text; }

// Collects the sub-checks of one corpus group into a single record.
struct RecordBuilder {
  GroupResult result;

  explicit RecordBuilder(std::string spec) { result.spec = std::move(spec); }

  void check(bool ok, const std::string& predicate, const std::string& lhs,
             const std::string& rhs, const std::string& note = {}) {
    if (ok) {
      if (result.status == Status::Vacuous) {
        result.status = Status::Checked;
        result.lhs = lhs;
        result.rhs = rhs;
        result.predicate = predicate;
      }
      if (!note.empty()) append(note);
    } else {
      result.status = Status::Failed;
      result.lhs = lhs;
      result.rhs = rhs;
      result.predicate = predicate;
      append("FAILED " + predicate + " [lhs=" + lhs + " rhs=" + rhs + "]" +
             (note.empty() ? "" : " " + note));
    }
  }

  void append(const std::string& s) {
    if (!result.details.empty()) result.details += "; ";
    result.details += s;
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Theorem suites
// ---------------------------------------------------------------------------

// f(G) > f(C2xC2) => cyclic; > f(Q8) => abelian; > f(S3) => nilpotent;
// > f(A4) => supersoluble; > f(A5) => soluble.
inline VerificationReport suite_theorem_1_1(const Corpus& corpus, MeanKind f,
                                            unsigned threads = 0) {
  corpus.ensure_data(threads);
  struct Part {
    const char* ref_spec;
    const char* name;
    bool (*pred)(const PermGroup&);
  };
  static const Part parts[] = {
      {"C2xC2", "cyclic", &is_cyclic},        {"Q8", "abelian", &is_abelian},
      {"S3", "nilpotent", &is_nilpotent},     {"A4", "supersoluble", &is_supersoluble},
      {"A5", "soluble", &is_soluble},
  };
  std::vector<BigRational> ref_psi;
  std::vector<FactoredReal> ref_ell;
  std::vector<std::string> ref_text;
  for (const Part& part : parts) {
    PermGroup ref = build_group(parse_spec(part.ref_spec));
    ref_psi.push_back(psi_dd(ref));
    ref_ell.push_back(ell(ref));
    ref_text.push_back(f == MeanKind::PsiDd ? rational_to_text(ref_psi.back())
                                            : ref_ell.back().to_text());
  }

  VerificationReport report;
  report.suite = std::string("theorem-1.1-") + mean_name(f);
  report.params = "max_order=" + std::to_string(corpus.max_order);
  report.results.resize(corpus.entries.size());
  parallel_for_indexed(
      corpus.entries.size(),
      [&](std::size_t i) {
        const CorpusData& d = corpus.data(i);
        detail::RecordBuilder rb(corpus.entries[i].spec);
        std::optional<PermGroup> g;
        std::string mine = f == MeanKind::PsiDd ? rational_to_text(d.inv.psi_dd)
                                                : d.inv.ell.to_text();
        for (std::size_t k = 0; k < std::size(parts); ++k) {
          bool above = f == MeanKind::PsiDd
                           ? d.inv.psi_dd > ref_psi[k]
                           : compare(d.inv.ell, ref_ell[k]) == std::strong_ordering::greater;
          if (!above) continue;
          if (!g) g.emplace(corpus.build(i));
          rb.check(parts[k].pred(*g), std::string(parts[k].name) + " when f > f(" +
                       parts[k].ref_spec + ")", mine, ref_text[k]);
        }
        report.results[i] = std::move(rb.result);
      },
      threads);
  report.finalize();
  return report;
}

// l(G) > l(A4) => G is 2-nilpotent; A4 itself is the sharp (vacuous) case.
inline VerificationReport suite_theorem_a(const Corpus& corpus, unsigned threads = 0) {
  corpus.ensure_data(threads);
  PermGroup a4 = alternating(4);
  const FactoredReal threshold = ell(a4);
  const std::string threshold_text = threshold.to_text();

  VerificationReport report;
  report.suite = "theorem-A";
  report.params = "max_order=" + std::to_string(corpus.max_order);
  report.results.resize(corpus.entries.size());
  parallel_for_indexed(
      corpus.entries.size(),
      [&](std::size_t i) {
        const CorpusData& d = corpus.data(i);
        detail::RecordBuilder rb(corpus.entries[i].spec);
        if (compare(d.inv.ell, threshold) == std::strong_ordering::greater) {
          PermGroup g = corpus.build(i);
          rb.check(is_p_nilpotent(g, 2), "2-nilpotent when l > l(A4)", d.inv.ell.to_text(),
                   threshold_text);
        }
        report.results[i] = std::move(rb.result);
      },
      threads);
  report.finalize();
  return report;
}

// l(G) >= l(D_2p) for an odd prime p dividing |G| forces either G = D_2p (the
// equality case) or the decomposition G = O_p x O_p' with O_p cyclic, hence
// p-nilpotency.  Equality with |G| != 2p is collected separately: for prime p
// it would contradict the theorem, and the suite surfaces it rather than
// classifying it as an ordinary failure.
inline VerificationReport suite_theorem_b(const Corpus& corpus,
                                          const std::vector<std::uint64_t>& primes,
                                          unsigned threads = 0) {
  for (std::uint64_t p : primes)
    if (p < 3 || !is_prime_u64(p))
      throw std::invalid_argument("suite_theorem_b: primes must be odd primes");
  corpus.ensure_data(threads);

  VerificationReport report;
  report.suite = "theorem-B";
  {
    std::ostringstream os;
    os << "max_order=" << corpus.max_order << " primes=";
    for (std::size_t k = 0; k < primes.size(); ++k) os << (k ? "," : "") << primes[k];
    report.params = os.str();
  }
  report.results.resize(corpus.entries.size());
  std::vector<std::vector<std::string>> anomalies(corpus.entries.size());
  parallel_for_indexed(
      corpus.entries.size(),
      [&](std::size_t i) {
        const CorpusData& d = corpus.data(i);
        std::uint64_t n = corpus.entries[i].order;
        detail::RecordBuilder rb(corpus.entries[i].spec);
        std::optional<PermGroup> g;
        for (std::uint64_t p : primes) {
          if (n % p != 0) continue;
          FactoredReal threshold = l_dihedral_2p(p);
          auto c = compare(d.inv.ell, threshold);
          if (c == std::strong_ordering::less) continue;
          if (!g) g.emplace(corpus.build(i));
          if (c == std::strong_ordering::equal) {
            if (n == 2 * p) {
              PermGroup ref = dihedral(2 * p);
              rb.check(is_isomorphic_small(*g, ref),
                       "isomorphic to D_" + std::to_string(2 * p) + " when l = l(D_2p)",
                       d.inv.ell.to_text(), threshold.to_text());
            } else {
              anomalies[i].push_back(corpus.entries[i].spec + " has l = l(D_" +
                                     std::to_string(2 * p) + ") but order " + std::to_string(n));
            }
            continue;
          }
          Decomposition dec = decomposes_as_op_times_opprime(*g, p);
          bool pnilp = is_p_nilpotent(*g, p);
          rb.check(dec.holds && dec.op_cyclic && pnilp,
                   "G = O_p x O_p' with O_p cyclic, p-nilpotent (p=" + std::to_string(p) + ")",
                   d.inv.ell.to_text(), threshold.to_text(),
                   dec.holds && dec.op_cyclic && pnilp
                       ? ""
                       : "|O_p|=" + std::to_string(dec.op_order) +
                             " |O_p'|=" + std::to_string(dec.opp_order));
        }
        report.results[i] = std::move(rb.result);
      },
      threads);
  for (auto& list : anomalies)
    for (auto& a : list) report.equality_anomalies.push_back(std::move(a));
  report.finalize();
  return report;
}

// For f in {psi_dd, l} and p in {3,5,7,11,13} with p | |G| and f(G) > f(D_2p):
// p = 3 forces cyclic, p <= 5 nilpotent, p <= 13 supersoluble.
inline VerificationReport suite_theorem_c(const Corpus& corpus, unsigned threads = 0) {
  corpus.ensure_data(threads);
  static const std::uint64_t primes[] = {3, 5, 7, 11, 13};

  VerificationReport report;
  report.suite = "theorem-C";
  report.params = "max_order=" + std::to_string(corpus.max_order) + " primes=3,5,7,11,13";
  report.results.resize(corpus.entries.size());
  parallel_for_indexed(
      corpus.entries.size(),
      [&](std::size_t i) {
        const CorpusData& d = corpus.data(i);
        std::uint64_t n = corpus.entries[i].order;
        detail::RecordBuilder rb(corpus.entries[i].spec);
        std::optional<PermGroup> g;
        std::optional<bool> cyc, nil, super;  // each predicate computed once per group
        for (std::uint64_t p : primes) {
          if (n % p != 0) continue;
          for (MeanKind f : {MeanKind::PsiDd, MeanKind::Ell}) {
            bool above;
            std::string mine, threshold_text;
            if (f == MeanKind::PsiDd) {
              BigRational t = psi_dd_dihedral_2p(p);
              above = d.inv.psi_dd > t;
              mine = rational_to_text(d.inv.psi_dd);
              threshold_text = rational_to_text(t);
            } else {
              FactoredReal t = l_dihedral_2p(p);
              above = compare(d.inv.ell, t) == std::strong_ordering::greater;
              mine = d.inv.ell.to_text();
              threshold_text = t.to_text();
            }
            if (!above) continue;
            if (!g) g.emplace(corpus.build(i));
            std::string tag = std::string(mean_name(f)) + ", p=" + std::to_string(p);
            if (p == 3) {
              if (!cyc) cyc = is_cyclic(*g);
              rb.check(*cyc, "cyclic (" + tag + ")", mine, threshold_text);
            }
            if (p <= 5) {
              if (!nil) nil = is_nilpotent(*g);
              rb.check(*nil, "nilpotent (" + tag + ")", mine, threshold_text);
            }
            if (!super) super = is_supersoluble(*g);
            rb.check(*super, "supersoluble (" + tag + ")", mine, threshold_text);
          }
        }
        report.results[i] = std::move(rb.result);
      },
      threads);
  report.finalize();
  return report;
}

// Corollaries: (i) |G| = p^a q^b with odd p and l(G) > l(D_2p) forces
// nilpotent; (ii) odd |G| with smallest prime p and l(G) > l(D_2p) forces
// cyclic; (iii) for odd cyclic G with at most (p+1)/2 prime divisors the
// converse inequality must hold; (iv) C315 witnesses that the converse fails
// beyond that prime bound.
inline VerificationReport suite_corollaries(const Corpus& corpus, unsigned threads = 0) {
  corpus.ensure_data(threads);

  VerificationReport report;
  report.suite = "corollaries";
  report.params = "max_order=" + std::to_string(corpus.max_order);
  report.results.resize(corpus.entries.size());
  parallel_for_indexed(
      corpus.entries.size(),
      [&](std::size_t i) {
        const CorpusData& d = corpus.data(i);
        std::uint64_t n = corpus.entries[i].order;
        detail::RecordBuilder rb(corpus.entries[i].spec);
        std::optional<PermGroup> g;
        std::vector<std::uint64_t> ps = n > 1 ? prime_divisors(n) : std::vector<std::uint64_t>{};

        if (ps.size() == 2) {
          for (std::uint64_t p : ps) {
            if (p == 2) continue;
            FactoredReal t = l_dihedral_2p(p);
            if (compare(d.inv.ell, t) == std::strong_ordering::greater) {
              if (!g) g.emplace(corpus.build(i));
              rb.check(is_nilpotent(*g),
                       "nilpotent (two-prime order, p=" + std::to_string(p) + ")",
                       d.inv.ell.to_text(), t.to_text());
            }
          }
        }

        if (n > 1 && n % 2 == 1) {
          std::uint64_t p = ps.front();
          FactoredReal t = l_dihedral_2p(p);
          auto c = compare(d.inv.ell, t);
          bool cyclic_here = d.stats.max_order() == n;
          if (c == std::strong_ordering::greater)
            rb.check(cyclic_here, "cyclic (odd order, smallest prime " + std::to_string(p) + ")",
                     d.inv.ell.to_text(), t.to_text());
          if (cyclic_here) {
            if (2 * ps.size() <= p + 1) {
              rb.check(c == std::strong_ordering::greater,
                       "l > l(D_2p) (odd cyclic, few prime divisors)", d.inv.ell.to_text(),
                       t.to_text());
            } else {
              // Beyond the prime bound the converse may fail; C315 is the
              // paper's witness and is asserted, others are informational.
              const char* rel = c == std::strong_ordering::less    ? "<"
                                : c == std::strong_ordering::greater ? ">"
                                                                     : "=";
              if (n == 315)
                rb.check(c == std::strong_ordering::less, "l(C315) < l(D6) (converse fails)",
                         d.inv.ell.to_text(), t.to_text());
              else
                rb.append(std::string("beyond prime bound: l ") + rel + " l(D_2p)");
            }
          }
        }
        report.results[i] = std::move(rb.result);
      },
      threads);
  report.finalize();
  return report;
}

}  // namespace ordmean

#include "verifier_lemmas.hpp"
