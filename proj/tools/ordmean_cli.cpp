// Command-line front end: parse group specs, print exact invariants and
// structure, decide threshold hypotheses, reproduce the value tables, and
// run the verification suites.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordmean/closed_forms.hpp"
#include "ordmean/invariants.hpp"
#include "ordmean/json_io.hpp"
#include "ordmean/spec_lang.hpp"
#include "ordmean/structure.hpp"
#include "ordmean/verifier.hpp"

namespace {

using namespace ordmean;

std::string relation(std::strong_ordering c) {
  return c == std::strong_ordering::less ? "<" : c == std::strong_ordering::greater ? ">" : "=";
}

PermGroup build_checked(const std::string& spec) {
  GroupExpr e = parse_spec(spec);
  return build_group(e);
}

int cmd_info(const std::string& spec, int digits, const std::string& format) {
  PermGroup g = build_checked(spec);
  InvariantBundle b = invariant_bundle(g);
  StructureProfile s = structure_profile(g);
  GroupExpr e = parse_spec(spec);
  if (format == "json") {
    json out = {{"spec", to_spec_string(e)},
                {"order", g.order()},
                {"invariants", to_json(b, digits)},
                {"structure", to_json(s)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "spec:    " << to_spec_string(e) << "\n";
  std::cout << "order:   " << g.order() << " = " << b.order.to_text() << "\n";
  std::cout << "psi:     " << b.psi.get_str() << "\n";
  std::cout << "rho:     " << b.rho.to_text() << "\n";
  std::cout << "psi'':   " << rational_to_text(b.psi_dd) << " ~ "
            << rational_to_decimal(b.psi_dd, digits).text << "\n";
  std::cout << "l:       " << b.ell.to_text() << " ~ " << to_decimal(b.ell, digits).text << "\n";
  std::cout << "cyclic=" << s.cyclic << " abelian=" << s.abelian << " nilpotent=" << s.nilpotent
            << " supersoluble=" << s.supersoluble << " soluble=" << s.soluble << "\n";
  for (const auto& r : s.primes)
    std::cout << "p=" << r.p << ": |Syl_p|=" << r.sylow_order << " normal=" << r.sylow_normal
              << " cyclic=" << r.sylow_cyclic << " |O_p|=" << r.core_p_order
              << " |O_p'|=" << r.o_p_prime_order << " p-nilpotent=" << r.p_nilpotent << "\n";
  return 0;
}

int cmd_compare(const std::string& spec_a, const std::string& spec_b, const std::string& fname,
                int digits) {
  PermGroup a = build_checked(spec_a);
  PermGroup b = build_checked(spec_b);
  std::string rel, da, db;
  if (fname == "psi_dd") {
    BigRational va = psi_dd(a), vb = psi_dd(b);
    rel = va < vb ? "<" : va > vb ? ">" : "=";
    da = rational_to_decimal(va, digits).text;
    db = rational_to_decimal(vb, digits).text;
  } else {
    FactoredReal va = ell(a), vb = ell(b);
    rel = relation(compare(va, vb));
    da = to_decimal(va, digits).text;
    db = to_decimal(vb, digits).text;
  }
  std::cout << rel << "\n";
  std::cout << fname << "(" << spec_a << ") ~ " << da << ", " << fname << "(" << spec_b << ") ~ "
            << db << " (exact comparison; decimals truncated)\n";
  return 0;
}

int cmd_threshold(const std::string& spec, std::uint64_t p, const std::string& fname, int digits) {
  PermGroup g = build_checked(spec);
  if (g.order() % p != 0)
    std::cout << "note: p=" << p << " does not divide |G|=" << g.order() << "\n";
  std::strong_ordering c = std::strong_ordering::equal;
  std::string mine, theirs;
  if (fname == "psi_dd") {
    BigRational v = psi_dd(g), t = psi_dd_dihedral_2p(p);
    c = v < t ? std::strong_ordering::less
              : v > t ? std::strong_ordering::greater : std::strong_ordering::equal;
    mine = rational_to_decimal(v, digits).text;
    theirs = rational_to_decimal(t, digits).text;
  } else {
    FactoredReal v = ell(g), t = l_dihedral_2p(p);
    c = compare(v, t);
    mine = to_decimal(v, digits).text;
    theirs = to_decimal(t, digits).text;
  }
  std::cout << fname << "(" << spec << ") " << relation(c) << " " << fname << "(D"
            << 2 * p << ")   [" << mine << " vs " << theirs << "]\n";
  if (c != std::strong_ordering::greater) {
    std::cout << "predicted: no conclusion (hypothesis f(G) > f(D_2p) not satisfied)\n";
    return 0;
  }
  std::cout << "predicted: p-nilpotent with G = O_p x O_p', O_p cyclic";
  if (p == 3) std::cout << "; cyclic";
  if (p <= 5) std::cout << "; nilpotent";
  if (p <= 13) std::cout << "; supersoluble";
  std::cout << "\n";
  Decomposition d = decomposes_as_op_times_opprime(g, p);
  bool pn = is_p_nilpotent(g, p);
  std::cout << "actual:    decomposition=" << (d.holds ? "holds" : "FAILS")
            << " O_p cyclic=" << d.op_cyclic << " p-nilpotent=" << pn;
  if (p == 3) std::cout << " cyclic=" << is_cyclic(g);
  if (p <= 5) std::cout << " nilpotent=" << is_nilpotent(g);
  if (p <= 13) std::cout << " supersoluble=" << is_supersoluble(g);
  std::cout << "\n";
  bool confirmed = d.holds && d.op_cyclic && pn && (p != 3 || is_cyclic(g)) &&
                   (p > 5 || is_nilpotent(g)) && (p > 13 || is_supersoluble(g));
  std::cout << (confirmed ? "confirmed" : "REFUTED") << "\n";
  return confirmed ? 0 : 1;
}

int cmd_table(int which, int digits) {
  if (which == 1) {
    const char* specs[] = {"C2xC2", "Q8", "S3", "A4", "A5"};
    std::string row_g = "G     ", row_psi = "psi'' ", row_l = "l     ";
    for (const char* s : specs) {
      PermGroup g = build_checked(s);
      row_g += std::string(" ") + s;
      row_g.resize(row_g.size() + 7 - std::string(s).size(), ' ');
      row_psi += " " + rational_to_decimal(psi_dd(g), digits).text + " ";
      row_l += " " + to_decimal(ell(g), digits).text + " ";
    }
    std::cout << row_g << "\n" << row_psi << "\n" << row_l << "\n";
    return 0;
  }
  const std::uint64_t ps[] = {3, 5, 7, 11, 13, 173};
  std::string row_p = "p       ", row_l = "l(D_2p) ";
  for (std::uint64_t p : ps) {
    std::string ptxt = std::to_string(p);
    row_p += ptxt;
    row_p.resize(row_p.size() + 8 - ptxt.size(), ' ');
    row_l += to_decimal(l_dihedral_2p(p), digits).text + "   ";
  }
  std::cout << row_p << "\n" << row_l << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t max_order,
               std::vector<std::uint64_t> primes, const std::string& fname, unsigned threads,
               const std::string& format, bool list_all) {
  if (primes.empty()) primes = {3, 5, 7, 11, 13};
  Corpus corpus = build_corpus(max_order);
  corpus.ensure_data(threads);

  std::vector<VerificationReport> reports;
  auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
  if (want("theorem-1.1")) {
    if (fname != "ell") reports.push_back(suite_theorem_1_1(corpus, MeanKind::PsiDd, threads));
    if (fname != "psi_dd") reports.push_back(suite_theorem_1_1(corpus, MeanKind::Ell, threads));
  }
  if (want("theorem-A")) reports.push_back(suite_theorem_a(corpus, threads));
  if (want("theorem-B")) reports.push_back(suite_theorem_b(corpus, primes, threads));
  if (want("theorem-C")) reports.push_back(suite_theorem_c(corpus, threads));
  if (want("corollaries")) reports.push_back(suite_corollaries(corpus, threads));
  if (want("lemmas")) reports.push_back(suite_lemmas(corpus, threads));
  if (reports.empty()) {
    std::cerr << "unknown suite: " << suite
              << " (expected theorem-1.1, theorem-A, theorem-B, theorem-C, corollaries, lemmas, "
                 "all)\n";
    return 2;
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (format == "json") {
    json out = json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    for (const auto& r : reports) std::cout << render_csv(r);
  } else {
    for (const auto& r : reports) std::cout << render_text(r, list_all) << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ordmean: exact element-order mean functions psi''(G) and l(G) of finite groups,\n"
      "threshold decisions, and corpus verification suites.\n"
      "Group specs: Cn, Dn (dihedral of ORDER n), Sn, An, Q8, F(p,q[,r]), products with 'x',\n"
      "e.g. \"C5xQ8\" or \"F(7,3)\"."};
  app.require_subcommand(1);
  int digits = 3;
  app.add_option("--digits", digits, "decimal digits in approximations (truncated)")
      ->capture_default_str();

  std::string spec, spec_b, fname = "ell", verify_f = "both", format = "text", suite = "all";
  std::uint64_t p = 3, max_order = 360;
  unsigned threads = 0;
  bool list_all = false;
  std::vector<std::uint64_t> primes;

  auto* info = app.add_subcommand("info", "exact invariants and structure of a group");
  info->add_option("spec", spec, "group spec")->required();
  info->add_option("--format", format, "text|json")->capture_default_str();

  auto* cmp = app.add_subcommand("compare", "exact relation between f of two groups");
  cmp->add_option("spec_a", spec, "first group")->required();
  cmp->add_option("spec_b", spec_b, "second group")->required();
  cmp->add_option("--f", fname, "psi_dd|ell")->capture_default_str();

  auto* thr = app.add_subcommand("threshold", "compare f(G) against f(D_2p) and test the "
                                              "predicted structure");
  thr->add_option("spec", spec, "group spec")->required();
  thr->add_option("--p", p, "odd prime")->required();
  thr->add_option("--f", fname, "psi_dd|ell")->capture_default_str();

  auto* tab = app.add_subcommand("table", "print the psi''/l value table (1) or the l(D_2p) "
                                          "threshold table (2)");
  int which = 1;
  tab->add_option("--which", which, "1|2")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "run verification suites over the corpus");
  ver->add_option("--suite", suite,
                  "theorem-1.1|theorem-A|theorem-B|theorem-C|corollaries|lemmas|all")
      ->capture_default_str();
  ver->add_option("--max-order", max_order, "corpus order bound")->capture_default_str();
  ver->add_option("--primes", primes, "odd primes for theorem-B (default 3 5 7 11 13)");
  ver->add_option("--f", verify_f, "restrict theorem-1.1 to psi_dd or ell (default both)")
      ->capture_default_str();
  ver->add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();
  ver->add_option("--format", format, "text|json|csv")->capture_default_str();
  ver->add_flag("--all", list_all, "list every result, not only failures");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(info)) return cmd_info(spec, digits, format);
    if (app.got_subcommand(cmp)) return cmd_compare(spec, spec_b, fname, digits);
    if (app.got_subcommand(thr)) {
      if (p < 3 || p % 2 == 0 || !ordmean::is_prime_u64(p)) {
        std::cerr << "error: --p must be an odd prime\n";
        return 2;
      }
      return cmd_threshold(spec, p, fname, digits);
    }
    if (app.got_subcommand(tab)) {
      if (which != 1 && which != 2) {
        std::cerr << "error: --which must be 1 or 2\n";
        return 2;
      }
      return cmd_table(which, digits);
    }
    if (app.got_subcommand(ver)) {
      if (max_order < 8) {
        std::cerr << "error: --max-order must be >= 8\n";
        return 2;
      }
      return cmd_verify(suite, max_order, primes, verify_f, threads, format, list_all);
    }
  } catch (const ordmean::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
