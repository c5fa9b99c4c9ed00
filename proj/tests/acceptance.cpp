// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "fixture_files.hpp"
#include "morphic/codec.hpp"
#include "morphic/proofdoc.hpp"
#include "morphic/prover.hpp"
#include "morphic/repsearch.hpp"
#include "morphic/spectral.hpp"
#include "morphic/subseq.hpp"
#include "normalize.hpp"
#include "oracles.hpp"

using namespace morphic;
using testing_support::load_problem;
using testing_support::normalize_latex;
using testing_support::slurp;
using testing_support::source_path;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failed checks of one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Word W(std::string_view d) { return word_from_digits(d); }
SafePair P(std::string_view u, std::string_view v) { return SafePair{W(u), W(v)}; }
using Indices = std::vector<std::size_t>;

void within(Check& c, Clock::time_point t0, double limit) {
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << "runtime " << s << " s exceeds " << limit << " s";
  c.expect(s < limit, os.str());
}

void criterion_fib_scaled(Check& c) {
  const auto t0 = Clock::now();
  auto r = prove_general(load_problem("fib-scaled.txt"));
  if (!r) return c.expect(false, "prove failed: " + r.failure().detail);
  const auto& pf = r.value();
  c.expect(pf.p == 2 && pf.q == 1, "exponents");
  c.expect(pf.table.pairs == std::vector<SafePair>{P("01", "02"), P("0", "1")}, "pairs");
  c.expect(pf.table.decompositions == std::vector<Indices>{{0, 1, 0}, {0, 1}}, "decompositions");
  const std::string latex = render_latex(pf);
  within(c, t0, 1.0);
  c.expect(normalize_latex(latex) == normalize_latex(slurp(source_path("tests/golden/fib-scaled-listing.tex"))),
           "rendered proof differs from the listing");
}

void criterion_basic_mode(Check& c) {
  const auto t0 = Clock::now();
  auto r = prove_basic(load_problem("basic-mode.txt"));
  within(c, t0, 1.0);
  if (!r) return c.expect(false, "prove --basic failed: " + r.failure().detail);
  const auto& t = r.value().table;
  c.expect(t.size() == 3, "three pairs");
  if (t.size() != 3) return;
  c.expect(t.pairs[0].u == W("011") && t.pairs[1].u == W("101") && t.pairs[2].u == W("01"), "u_i");
  c.expect(t.decompositions == std::vector<Indices>{{0, 2, 1}, {1, 0, 2}, {0, 2}}, "decompositions");
  c.expect(check_proof(r.value()).ok(), "checker");
}

void criterion_general_only(Check& c) {
  const auto t0 = Clock::now();
  const auto p = load_problem("general-only.txt");
  c.expect(!prove_basic(p), "basic mode should fail");
  c.expect(!prove_basic(testing_support::swapped(p)), "basic mode should fail when swapped");
  auto r = prove_general(p);
  within(c, t0, 1.0);
  if (!r) return c.expect(false, "general failed: " + r.failure().detail);
  c.expect(r.value().table.pairs == std::vector<SafePair>{P("021", "021"), P("01", "01")}, "pairs");
}

void criterion_both_scaled(Check& c) {
  const auto t0 = Clock::now();
  auto r = prove_general(load_problem("both-scaled.txt"));
  within(c, t0, 1.0);
  if (!r) return c.expect(false, "prove failed: " + r.failure().detail);
  c.expect(r.value().p == 2 && r.value().q == 3, "exponents (2,3)");
  c.expect(r.value().scaled_f() == Morphism::from_digits({"02102021021020210", "021020210210202102021", "20210210202102102"}), "images of f^2");
  c.expect(r.value().scaled_g() == Morphism::from_digits({"0210202102102", "021020210210202102021", "021020210210202102102"}), "images of g^3");
  c.expect(r.value().table.pairs == std::vector<SafePair>{P("02", "02"), P("1", "1")}, "pairs");
}

const Morphism f_e = Morphism::from_digits({"01", "2", "31", "04", "0"});
const Coding tau_e = Coding::from_digits("00111");
const Morphism f_o = Morphism::from_digits({"01", "51", "30", "4", "3", "2"});
const Coding tau_o = Coding::from_digits("101010");

void criterion_even_fib(Check& c) {
  const auto t0 = Clock::now();
  const auto enc = block_encode(Morphism::from_digits({"01001", "010"}));
  c.expect(enc.morphism == Morphism::from_digits({"0122", "01220", "0120"}), "block morphism");
  c.expect(enc.first.map() == std::vector<Symbol>{0, 0, 1} && enc.second.map() == std::vector<Symbol>{1, 0, 0},
           "block codings");
  auto r = prove_general(EqualityProblem{MorphicRep(f_e, tau_e, 0), MorphicRep(enc.morphism, enc.first, 0)});
  if (!r) return c.expect(false, "prove failed: " + r.failure().detail);
  c.expect(r.value().p == 3 && r.value().q == 1, "exponents (3,1)");
  c.expect(r.value().scaled_f() == Morphism::from_digits({"01231", "042", "01031", "01201", "012"}), "images of f^3");
  c.expect(r.value().table.pairs ==
               std::vector<SafePair>{P("012", "012"), P("31", "20"), P("0", "1"), P("42", "22"), P("01", "00")},
           "pairs");
  const std::string latex = render_latex(r.value());
  within(c, t0, 2.0);
  c.expect(normalize_latex(latex) == normalize_latex(slurp(source_path("tests/golden/evenfib-listing.tex"))),
           "rendered proof differs from the listing");
}

void criterion_odd_fib(Check& c) {
  const auto t0 = Clock::now();
  const auto enc = block_encode(Morphism::from_digits({"01001", "010"}));
  auto r = prove_general(EqualityProblem{MorphicRep(f_o, tau_o, 0), MorphicRep(enc.morphism, enc.second, 0)});
  within(c, t0, 2.0);
  if (!r) return c.expect(false, "prove failed: " + r.failure().detail);
  c.expect(r.value().p == 3, "f scaled by 3");
  c.expect(r.value().scaled_f() == Morphism::from_digits({"0151251", "30251", "30151", "4", "3", "401"}),
           "images of f^3");
  c.expect(r.value().table.pairs == std::vector<SafePair>{P("01512513", "01220122"), P("02514", "00120"),
                                                          P("013", "012"), P("02513", "00122"), P("01514", "01220")},
           "claims");
}

void criterion_negative(Check& c) {
  auto a = prove_general(load_problem("eigen-2-vs-3.txt"));
  c.expect(!a && a.failure().stage == FailureStage::eigenvalue_mismatch, "2 vs 3 stage");
  const auto e1 = load_problem("eigen-1.txt");
  auto b = prove_general(e1);
  c.expect(!b && b.failure().stage == FailureStage::no_initial_safe_pair, "eigenvalue-1 stage");
  c.expect(coded_prefix(e1.lhs, 10'000) == coded_prefix(e1.rhs, 10'000), "eigenvalue-1 prefixes equal on 10^4");
}

oracle::Rep as_oracle(const MorphicRep& r) {
  oracle::Rep o;
  for (const auto& img : r.morphism.images()) o.images.push_back(to_string(img));
  o.tau = to_string(Word(r.coding.map().begin(), r.coding.map().end()));
  return o;
}

void criterion_search(Check& c) {
  const Word even = builtin_sequence("even-fib", 40);
  const Word odd = builtin_sequence("odd-fib", 40);
  for (unsigned jobs : {1u, 4u}) {
    const auto t0 = Clock::now();
    const auto four = search(SearchSpec{4, 2, 40, even}, jobs);
    const auto five = search(SearchSpec{5, 2, 40, even}, jobs);
    const auto six = search(SearchSpec{6, 2, 40, odd}, jobs);
    within(c, t0, jobs == 1 ? 600.0 : 180.0);
    const std::string tag = " (jobs " + std::to_string(jobs) + ")";
    c.expect(four.empty(), "n=4 should be empty" + tag);
    std::set<oracle::Rep> got;
    for (const auto& f : five) {
      c.expect(f.complexity == 8, "complexity 8" + tag);
      got.insert(as_oracle(f.rep));
    }
    const std::set<oracle::Rep> want{oracle::canonical({{"01", "2", "31", "04", "0"}, "00111"}),
                                     oracle::canonical({{"01", "2", "34", "0", "32"}, "00110"})};
    c.expect(five.size() == 2 && got == want, "n=5 should give f_e and the alternative" + tag);
    bool has_fo = false;
    for (const auto& f : six)
      has_fo = has_fo || (f.complexity == 9 &&
                          as_oracle(f.rep) == oracle::canonical({{"01", "51", "30", "4", "3", "2"}, "101010"}));
    c.expect(has_fo, "n=6 should include f_o" + tag);
  }
}

void criterion_properties(Check& c) {
  const std::string cmd = std::string(MORPHIC_PROPERTIES_TEST) + " --gtest_brief=1";
  const int status = std::system(cmd.c_str());
  c.expect(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0, "property suites reported failures");
}

void criterion_numerics(Check& c) {
  const auto e = estimate_eigenvalue(Morphism::from_digits({"01", "0"}), 0, 8);
  c.expect(e.numerator == 89 && e.denominator == 55, "fib estimate is 89/55");
  c.expect(std::abs(e.approx() - (1 + std::sqrt(5.0)) / 2) < 1e-3, "close to the golden ratio");
  for (const auto& f : {Morphism::from_digits({"01", "00"}), Morphism::from_digits({"012", "201", "111"}),
                        Morphism::from_digits({"0000"})}) {
    const auto u = estimate_eigenvalue(f, 0, 8);
    c.expect(u.numerator % u.denominator == 0 && u.numerator / u.denominator == f.image(0).size(),
             "uniform morphism gives an exact integer");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"fib vs scaled 3-symbol representation, end to end", criterion_fib_scaled},
      {"basic mode", criterion_basic_mode},
      {"general mode where basic mode fails", criterion_general_only},
      {"scaling both sides (2,3)", criterion_both_scaled},
      {"even(fib) block encoding and proof", criterion_even_fib},
      {"odd(fib) proof", criterion_odd_fib},
      {"negative fixtures", criterion_negative},
      {"search census", criterion_search},
      {"property suites", criterion_properties},
      {"eigenvalue numerics", criterion_numerics},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << seconds_since(t0) << " s)";
    for (const auto& f : c.failures) std::cout << "\n  " << f;
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
