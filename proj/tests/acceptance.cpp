#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>

#include "episturm/arword.hpp"
#include "episturm/power.hpp"
#include "episturm/rigidity.hpp"
#include "episturm/section5.hpp"
#include "episturm/subst.hpp"
#include "episturm/words.hpp"
#include "gen.hpp"

using namespace episturm;

namespace {

// Wall-clock limits in seconds.
constexpr double kGoldenLimit = 1.0;
constexpr double kOracleLimit = 30.0;
constexpr double kSection5Limit = 10.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

std::string final_of(const char* nf, unsigned n) { return to_string(power_normal_form(parse_normal_form(nf), n).final); }

Outcome goldens() {
  struct Case {
    const char* nf;
    unsigned n;
    const char* expected;
  };
  const Case cases[] = {
      {"a b' a c a' d' a' e' @()", 3, "a b' a c a d a' e a b a' c a d a' e a b a' c a' d' a' e' @()"},
      {"a b' c' a' @()", 3, "a b' c' a a b c a' a' b' c' a' @()"},
      {"c b' a c b' c a' b' @(ac)", 3, "c b' a c b' c a b a' b' c a b' a c b c' b' a c b' c a' b' @(ac)"},
      {"a b' a c' a' d' a' e' @()", 3, "a b' a c' a d a' e a b a c a' d a' e a b a' c' a' d' a' e' @()"},
      {"a a a b a' a' a' c' a' a' a' d' a' a' a' @()", 3,
       "a a a b a a' a' c a' a' a' d a a a' a' a' a' b a a' a' c a' a' a' d a a a' a' a' a' b a' a' a' c' a' a' a' d' "
       "a' a' a' @()"},
      {"a a a b' c' a' a' a' @()", 4,
       "a a a b' c' a a a a a' a' b c a a a a' a' a' b c a a a' a' a' a' b' c' a' a' a' @()"},
  };
  Outcome o;
  for (const auto& c : cases) {
    const std::string got = final_of(c.nf, c.n);
    if (got != c.expected) o.fail(std::string(c.nf) + " gave " + got);
  }
  o.detail = o.pass ? "6 examples" : o.detail;
  return o;
}

Outcome oracle_equivalence() {
  std::mt19937 rng(500);
  Outcome o;
  for (int iter = 0; iter < 500 && o.pass; ++iter) {
    const Alphabet alpha = gen::alphabet(gen::uniform(rng, 1, 4));
    const NormalForm nf = gen::normal_form(rng, alpha, 8);
    const unsigned n = static_cast<unsigned>(gen::uniform(rng, 2, 4));
    const PowerTrace t = power_normal_form(nf, n);
    const auto [Z, perm] = build_Z(nf, n);
    if (t.final.directive != normalize_oracle(Z) || !(t.final.perm == perm)) {
      o.fail(to_string(nf) + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "500 cases";
  return o;
}

Outcome fibonacci() {
  const Substitution fib = parse_substitution("a -> ab\nb -> a\n");
  Outcome o;
  const auto nf = decompose(fib);
  if (!nf || to_string(*nf) != "a @(ab)") o.fail("decompose");
  if (!nf || to_string(power_normal_form(*nf, 2).final) != "a b @()") o.fail("square");
  const RootWitness w = common_root(power(fib, 2), power(fib, 3), 3, 2);
  if (!(w.root == fib) || w.k != 2 || w.l != 3) o.fail("common root");
  if (!(power(w.root, w.k) == power(fib, 2)) || !(power(w.root, w.l) == power(fib, 3))) o.fail("recomposition");
  if (o.pass) o.detail = "decompose, square, common root";
  return o;
}

Outcome rigidity() {
  Outcome o;
  std::mt19937 rng(1618);
  for (int iter = 0; iter < 200 && o.pass; ++iter) {
    const Alphabet alpha = gen::alphabet(gen::uniform(rng, 2, 3));
    NormalForm nf = gen::normal_form(rng, alpha, 5);
    if (nf.length() == 0) nf.directive.push_back({alpha[0], false});
    const Substitution r = mu(nf, alpha);
    const unsigned a = static_cast<unsigned>(gen::uniform(rng, 1, 3));
    const unsigned b = static_cast<unsigned>(gen::uniform(rng, 1, 3));
    const Substitution s = power(r, a);
    const Substitution t = power(r, b);
    const auto nm = find_common_power(s, t, 6);
    if (!nm) {
      o.fail("no common power for " + to_string(nf));
      break;
    }
    const RootWitness w = common_root(s, t, nm->first, nm->second);
    if (!(power(w.root, w.k) == s) || !(power(w.root, w.l) == t)) o.fail("root of " + to_string(nf));
  }
  std::mt19937 rng2(2718);
  for (int iter = 0; iter < 500 && o.pass; ++iter) {
    const Alphabet alpha = gen::alphabet(gen::uniform(rng2, 2, 4));
    const Substitution s = mu(gen::normal_form(rng2, alpha, 6), alpha);
    const Substitution r = mu(gen::normal_form(rng2, alpha, 6), alpha);
    const auto q = divide_left(s, compose(s, r));
    if (!q || !(*q == r)) o.fail("divide round trip");
  }
  if (o.pass) o.detail = "200 pairs, 500 divisions";
  return o;
}

Outcome arnoux_rauzy() {
  Outcome o;
  const Substitution trib = parse_substitution("a -> ab\nb -> ac\nc -> a\n");
  const Word u = fixed_point_prefix(trib, 'a', 10000);
  const auto cx = factor_complexity(u, 12);
  for (std::size_t n = 1; n <= 12; ++n) {
    if (cx[n - 1] != 2 * n + 1) o.fail("complexity at " + std::to_string(n));
    if (left_special_count(u, n) != 1) o.fail("left special at " + std::to_string(n));
  }
  if (is_arnoux_rauzy_evidence(trib, 'a', 12).verdict != Verdict::Consistent) o.fail("Tribonacci refuted");
  const Substitution tm = parse_substitution("a -> ab\nb -> ba\n");
  if (is_arnoux_rauzy_evidence(tm, 'a', 12).verdict != Verdict::Refuted) o.fail("Thue-Morse not refuted");
  if (o.pass) o.detail = "Tribonacci n<=12 on 10000 letters, Thue-Morse refuted";
  return o;
}

Outcome section5() {
  Outcome o;
  const auto claims = weak::run_all(1 << 14, 40, 512);
  for (const auto& c : claims) {
    if (!c.informational && !c.pass) o.fail(c.name);
  }
  if (o.pass) o.detail = std::to_string(claims.size()) + " claims on 16384 letters, bound 40";
  return o;
}

Outcome words() {
  Outcome o;
  std::mt19937 rng(77);
  for (int iter = 0; iter < 200 && o.pass; ++iter) {
    const Alphabet alpha = gen::alphabet(gen::uniform(rng, 1, 4));
    const SpinnedWord w = gen::spinned_word(rng, alpha, gen::uniform(rng, 0, 14));
    const SpinnedWord nf = normalize_oracle(w);
    if (!is_normal_form(nf) || normalize_oracle(nf) != nf) o.fail("idempotence: " + to_string(w));
    if (!(mu(w, alpha) == mu(nf, alpha))) o.fail("mu: " + to_string(w));
    for (int strategy = 0; strategy < 100; ++strategy) {
      std::mt19937 pick(static_cast<unsigned>(iter * 1000 + strategy));
      const auto run = normalize_with(w, [&](std::span<const BadFactor> fs) {
        return std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(pick);
      });
      if (run.result != nf) o.fail("confluence: " + to_string(w));
      if (run.steps > termination_bound(w)) o.fail("bound: " + to_string(w));
    }
  }
  if (o.pass) o.detail = "200 words x 100 strategies";
  return o;
}

bool report(int id, const char* name, const std::function<Outcome()>& body, double limit = 0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && secs > limit) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit));
  std::printf("%s %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  return o.pass;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "golden normal forms", goldens, kGoldenLimit);
  ok &= report(2, "oracle equivalence", oracle_equivalence, kOracleLimit);
  ok &= report(3, "Fibonacci suite", fibonacci);
  ok &= report(4, "rigidity properties", rigidity);
  ok &= report(5, "Arnoux-Rauzy evidence", arnoux_rauzy);
  ok &= report(6, "two-letter example", section5, kSection5Limit);
  ok &= report(7, "word normalization properties", words);
  return ok ? 0 : 1;
}
