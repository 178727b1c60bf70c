#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "episturm/words.hpp"

namespace episturm {

/// Sorted string of distinct letters.
using Alphabet = std::string;

Alphabet make_alphabet(std::string_view letters);

/// Bijection on letters. Stored sparsely: letters not in the table are fixed,
/// so one value acts on every alphabet.
class Permutation {
 public:
  Permutation() = default;

  /// Throws DomainError unless `mapping` is a bijection of its key set.
  explicit Permutation(const std::map<Letter, Letter>& mapping);

  static Permutation transposition(Letter a, Letter b);

  Letter operator()(Letter x) const;

  bool is_identity() const noexcept { return moved_.empty(); }

  /// Letters that are not fixed, ascending.
  std::vector<Letter> support() const;

  Permutation inverse() const;

  /// `(p * q)(x) = p(q(x))`.
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  Permutation pow(unsigned n) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::map<Letter, Letter> moved_;
};

/// Disjoint-cycle notation `@(ab)(cd)`; the identity is `@()`.
std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view token);

/// Non-erasing endomorphism of the free monoid over its alphabet.
class Substitution {
 public:
  Substitution() = default;

  /// Throws DomainError on an empty image or an image letter outside the
  /// key set.
  explicit Substitution(std::map<Letter, Word> images);

  static Substitution identity(const Alphabet& alphabet);
  static Substitution from_permutation(const Alphabet& alphabet, const Permutation& p);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::map<Letter, Word>& images() const noexcept { return images_; }
  const Word& image(Letter x) const;

  Word operator()(std::string_view w) const;

  std::size_t total_length() const;
  std::size_t max_image_length() const;
  bool is_identity() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;
  friend auto operator<=>(const Substitution& a, const Substitution& b) {
    return a.images_ <=> b.images_;
  }

 private:
  Alphabet alphabet_;
  std::map<Letter, Word> images_;
};

/// `apply(s, w)`; throws DomainError on letters outside the alphabet.
Word apply(const Substitution& s, std::string_view w);

/// `compose(s, t)(x) = s(t(x))`.
Substitution compose(const Substitution& s, const Substitution& t);

Substitution power(const Substitution& s, unsigned n);

/// The elementary generators ψ_a and ψ̄_a over `alphabet`.
Substitution psi(const Alphabet& alphabet, SpinnedLetter a);

/// A word over spinned letters and permutations, read as the composition of
/// its tokens from left to right.
using GeneratorToken = std::variant<SpinnedLetter, Permutation>;
using GeneratorWord = std::vector<GeneratorToken>;

std::string to_string(const GeneratorWord& g);
GeneratorWord parse_generator_word(std::string_view text);
GeneratorWord concat(GeneratorWord a, const GeneratorWord& b);
std::size_t spinned_token_count(const GeneratorWord& g);

/// Letters mentioned by the tokens of `g`, including moved permutation letters.
Alphabet letters_of(const GeneratorWord& g);

/// Canonical name of an episturmian substitution: μ(directive) ∘ perm with
/// a directive word in normal form.
struct NormalForm {
  SpinnedWord directive;
  Permutation perm;

  std::size_t length() const noexcept { return directive.size(); }
  GeneratorWord as_generator_word() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// `a b' @(ab)`; a missing trailing permutation means the identity.
std::string to_string(const NormalForm& nf);
NormalForm parse_normal_form(std::string_view text);

Substitution mu(const GeneratorWord& g, const Alphabet& alphabet);
Substitution mu(const SpinnedWord& w, const Alphabet& alphabet);
Substitution mu(const NormalForm& nf, const Alphabet& alphabet);

/// Moves every permutation to the end and normalizes the spinned word.
NormalForm normal_decomposition(const GeneratorWord& g);

/// Recognizes an episturmian substitution by peeling elementary generators.
/// Returns nullopt when `s` is not episturmian.
std::optional<NormalForm> decompose(const Substitution& s);

bool is_primitive(const Substitution& s);

/// Length-n prefix of s^ω(a). Throws DomainError when s(a) does not start
/// with `a` or the iterates stop growing.
Word fixed_point_prefix(const Substitution& s, Letter a, std::size_t n);

/// Witness v of conjugacy: `v t(w) = s(w) v` (LeftFactor) or
/// `t(w) v = v s(w)` (RightFactor) for every word w.
struct Conjugator {
  enum class Side { LeftFactor, RightFactor };
  Word v;
  Side side = Side::LeftFactor;
};

std::optional<Conjugator> is_conjugate(const Substitution& s, const Substitution& t);

// Substitution file format: lines `x -> w`, `#` comments.
Substitution parse_substitution(std::string_view text);
std::string to_string(const Substitution& s);

}  // namespace episturm
