#include <doctest.h>

#include "episturm/error.hpp"
#include "episturm/subst.hpp"
#include "episturm/words.hpp"
#include "gen.hpp"

using namespace episturm;

namespace {

SpinnedWord W(const char* s) { return parse_spinned_word(s); }

}  // namespace

TEST_CASE("spinned word text round trip") {
  CHECK(to_string(W("a b' c")) == "a b' c");
  CHECK(to_string(W("  a   b'\tc ")) == "a b' c");
  CHECK(W("_").empty());
  CHECK(to_string(SpinnedWord{}) == "_");
  CHECK(to_string(W("A 0' z")) == "A 0' z");
  CHECK_THROWS_AS(W(""), ParseError);
  CHECK_THROWS_AS(W("ab"), ParseError);
  CHECK_THROWS_AS(W("a''"), ParseError);
  CHECK_THROWS_AS(W("a\""), ParseError);
  CHECK_THROWS_AS(W("- a"), ParseError);
}

TEST_CASE("normal form detection") {
  CHECK(is_normal_form(W("a b' a c a' d' a' e'")));
  CHECK(is_normal_form(SpinnedWord{}));
  CHECK_FALSE(is_normal_form(W("a' e' a")));
  CHECK(is_normal_form(W("a'")));
  CHECK(is_normal_form(W("a' a' b")));
}

TEST_CASE("bad factors are minimal occurrences") {
  CHECK(find_bad_factors(W("a' a")) == std::vector<BadFactor>{{1, 2, 'a'}});
  CHECK(find_bad_factors(W("a b a")).empty());
  CHECK(find_bad_factors(W("a' b' a b' a")) == std::vector<BadFactor>{{1, 3, 'a'}});
  CHECK(find_bad_factors(W("a' a' a")) == std::vector<BadFactor>{{2, 3, 'a'}});
  CHECK(find_bad_factors(W("a' b' b a")) == std::vector<BadFactor>{{2, 3, 'b'}});
  CHECK_FALSE(bad_factor_at(W("a' a"), 0));
  CHECK_FALSE(bad_factor_at(W("a' a"), 3));
}

TEST_CASE("block transformation") {
  CHECK(apply_block_transform(W("a' e' a"), {1, 3, 'a'}) == W("a e a'"));
  CHECK(apply_block_transform(W("a' a"), {1, 2, 'a'}) == W("a a'"));
  CHECK(apply_block_transform(W("c a' b' a c"), {2, 4, 'a'}) == W("c a b a' c"));
  CHECK_THROWS_AS(apply_block_transform(W("a b a"), {1, 3, 'a'}), DomainError);
  CHECK_THROWS_AS(apply_block_transform(W("a' b' a b' a"), {1, 5, 'a'}), DomainError);
}

TEST_CASE("normalize oracle") {
  CHECK(normalize_oracle(W("a a' a a'")) == W("a a a' a'"));
  CHECK(normalize_oracle(W("a b' a c a' d' a' e'")) == W("a b' a c a' d' a' e'"));
  CHECK(normalize_oracle(W("a b' c' a' a b' c' a' a b' c' a'")) == W("a b' c' a a b c a' a' b' c' a'"));
  CHECK(normalize_oracle(SpinnedWord{}).empty());
}

TEST_CASE("block equivalence and opposite") {
  CHECK(block_equivalent(W("a' a"), W("a a'")));
  CHECK_FALSE(block_equivalent(W("a"), W("a'")));
  CHECK(block_equivalent(W("a a' a a'"), W("a a a' a'")));
  CHECK(opposite(W("a b' c")) == W("a' b c'"));
  CHECK(opposite(SpinnedWord{}).empty());
  CHECK(opposite(W("a' a'")) == W("a a"));
  CHECK(underlying(W("a b' c")) == "abc");
  CHECK(barred_count(W("a b' c'")) == 2);
}

TEST_CASE("property: normalization") {
  std::mt19937 rng(20240611);
  for (int iter = 0; iter < 2000; ++iter) {
    const Alphabet alpha = gen::alphabet(gen::uniform(rng, 1, 4));
    const SpinnedWord w = gen::spinned_word(rng, alpha, gen::uniform(rng, 0, 20));
    const SpinnedWord nf = normalize_oracle(w);
    CAPTURE(to_string(w));
    REQUIRE(is_normal_form(nf));
    REQUIRE(normalize_oracle(nf) == nf);
    REQUIRE(opposite(opposite(w)) == w);
    REQUIRE(underlying(nf) == underlying(w));
    REQUIRE(mu(w, alpha) == mu(nf, alpha));
  }
}

TEST_CASE("property: confluence and termination measure") {
  std::mt19937 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    const Alphabet alpha = gen::alphabet(gen::uniform(rng, 1, 4));
    const SpinnedWord w = gen::spinned_word(rng, alpha, gen::uniform(rng, 0, 14));
    const SpinnedWord expected = normalize_oracle(w);
    CAPTURE(to_string(w));
    for (int strategy = 0; strategy < 100; ++strategy) {
      std::mt19937 pick(static_cast<unsigned>(iter * 1000 + strategy));
      const auto run = normalize_with(w, [&](std::span<const BadFactor> fs) {
        return std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(pick);
      });
      REQUIRE(run.result == expected);
      REQUIRE(run.steps <= termination_bound(w));
    }
  }
}

TEST_CASE("property: each rewrite decreases the termination measure") {
  std::mt19937 rng(5);
  auto bar_sum = [](const SpinnedWord& w) {
    std::size_t s = 0;
    for (std::size_t j = 0; j < w.size(); ++j) s += w[j].barred ? j + 1 : 0;
    return s;
  };
  for (int iter = 0; iter < 500; ++iter) {
    SpinnedWord w = gen::spinned_word(rng, gen::alphabet(3), gen::uniform(rng, 0, 16));
    while (true) {
      const auto fs = find_bad_factors(w);
      if (fs.empty()) break;
      const BadFactor f = fs[gen::uniform(rng, 0, fs.size() - 1)];
      const SpinnedWord next = apply_block_transform(w, f);
      if (f.end - f.start == 1) {
        REQUIRE(barred_count(next) == barred_count(w));
        REQUIRE(bar_sum(next) > bar_sum(w));
      } else {
        REQUIRE(barred_count(next) < barred_count(w));
      }
      w = next;
    }
  }
}
