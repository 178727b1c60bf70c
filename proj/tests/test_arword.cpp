#include <doctest.h>

#include "episturm/arword.hpp"
#include "episturm/error.hpp"
#include "gen.hpp"

using namespace episturm;

namespace {

Substitution S(const char* text) { return parse_substitution(text); }

const Substitution fib = S("a -> ab\nb -> a\n");
const Substitution trib = S("a -> ab\nb -> ac\nc -> a\n");
const Substitution thue_morse = S("a -> ab\nb -> ba\n");

}  // namespace

TEST_CASE("factor complexity") {
  CHECK(factor_complexity(fixed_point_prefix(trib, 'a', 1000), 3) == std::vector<std::size_t>{3, 5, 7});
  CHECK(factor_complexity(fixed_point_prefix(fib, 'a', 1000), 3) == std::vector<std::size_t>{2, 3, 4});
  CHECK(factor_complexity(std::string(1000, 'a'), 3) == std::vector<std::size_t>{1, 1, 1});
  CHECK_THROWS_AS(factor_complexity(fixed_point_prefix(fib, 'a', 100), 3), DomainError);
  CHECK_THROWS_AS(factor_complexity(std::string(999, 'a') + "b", 2), DomainError);
}

TEST_CASE("left special factors") {
  CHECK(left_special_count(fixed_point_prefix(trib, 'a', 1000), 2) == 1);
  CHECK(left_special_count(fixed_point_prefix(fib, 'a', 1000), 1) == 1);
  CHECK(left_special_count(std::string(1000, 'a'), 2) == 0);
  CHECK_THROWS_AS(left_special_count("abc", 1), DomainError);
}

TEST_CASE("Arnoux-Rauzy evidence") {
  const ArEvidence t = is_arnoux_rauzy_evidence(trib, 'a', 12);
  CHECK(t.verdict == Verdict::Consistent);
  CHECK(t.reason.empty());
  REQUIRE(t.complexity.size() == 12);
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(t.complexity[n - 1] == 2 * n + 1);
    CHECK(t.left_special[n - 1] == 1);
  }
  CHECK(render(t).find("Consistent") != std::string::npos);

  const ArEvidence tm = is_arnoux_rauzy_evidence(thue_morse, 'a', 4);
  CHECK(tm.verdict == Verdict::Refuted);
  CHECK_FALSE(tm.reason.empty());

  CHECK(is_arnoux_rauzy_evidence(fib, 'a', 10).verdict == Verdict::Consistent);
  CHECK_THROWS_AS(is_arnoux_rauzy_evidence(S("a -> a\nb -> ab\n"), 'a', 4), DomainError);
}

TEST_CASE("property: primitive episturmian fixed points look Arnoux-Rauzy") {
  std::mt19937 rng(8128);
  int checked = 0;
  for (int iter = 0; iter < 40 && checked < 12; ++iter) {
    const Alphabet alpha = gen::alphabet(gen::uniform(rng, 2, 3));
    NormalForm nf = gen::normal_form(rng, alpha, 5);
    nf.perm = Permutation{};
    for (char c : alpha) nf.directive.push_back({c, false});
    const Substitution s = mu(nf, alpha);
    if (!is_primitive(s)) continue;
    const char a = s.image(alpha[0]).front();
    Word probe;
    try {
      probe = fixed_point_prefix(s, a, 10);
    } catch (const DomainError&) {
      continue;
    }
    CAPTURE(to_string(nf));
    const ArEvidence e = is_arnoux_rauzy_evidence(s, a, 8);
    CAPTURE(render(e));
    REQUIRE(e.verdict == Verdict::Consistent);
    ++checked;
  }
  CHECK(checked >= 5);
}

TEST_CASE("property: refutation is monotone in the window") {
  for (std::size_t n = 2; n <= 6; ++n) CHECK(is_arnoux_rauzy_evidence(thue_morse, 'a', n).verdict == Verdict::Refuted);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(is_arnoux_rauzy_evidence(trib, 'a', n).verdict == Verdict::Consistent);
}
