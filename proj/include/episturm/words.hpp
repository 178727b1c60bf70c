#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace episturm {

/// A letter is a single printable ASCII alphanumeric character.
using Letter = char;

/// A plain (unspinned) finite word.
using Word = std::string;

bool is_letter(char c) noexcept;

/// A letter carrying a spin: `a` has spin 0, `a'` (written ā) spin 1.
struct SpinnedLetter {
  Letter letter = 'a';
  bool barred = false;

  friend auto operator<=>(const SpinnedLetter&, const SpinnedLetter&) = default;
};

/// Finite spinned word. Operation contracts use 1-based positions.
using SpinnedWord = std::vector<SpinnedLetter>;

/// Minimal occurrence of ā b̄₁…b̄ₗ a (every bᵢ ≠ a, ℓ ≥ 0) at [start, end].
struct BadFactor {
  std::size_t start = 0;
  std::size_t end = 0;
  Letter letter = 'a';

  friend bool operator==(const BadFactor&, const BadFactor&) = default;
};

/// Minimal bad factor beginning at the 1-based position `start`, if any.
std::optional<BadFactor> bad_factor_at(const SpinnedWord& w, std::size_t start);

std::vector<BadFactor> find_bad_factors(const SpinnedWord& w);

bool is_normal_form(const SpinnedWord& w);

/// Rewrites ā b̄₁…b̄ₗ a into a b₁…bₗ ā. Throws DomainError when `f` does not
/// describe an occurrence in `w`.
SpinnedWord apply_block_transform(SpinnedWord w, const BadFactor& f);

/// Upper bound on the number of rewrites any normalization of `w` performs.
std::size_t termination_bound(const SpinnedWord& w);

/// Picks which of the currently present bad factors to rewrite next.
using RewriteChooser = std::function<std::size_t(std::span<const BadFactor>)>;

struct NormalizationRun {
  SpinnedWord result;
  std::size_t steps = 0;
};

/// Rewrites bad factors chosen by `choose` until none is left. Throws
/// InternalError if the step count exceeds termination_bound(w).
NormalizationRun normalize_with(SpinnedWord w, const RewriteChooser& choose);

/// Brute-force normal form: leftmost bad factor first.
SpinnedWord normalize_oracle(SpinnedWord w);

bool block_equivalent(const SpinnedWord& w, const SpinnedWord& w2);

/// Exchanges all spins.
SpinnedWord opposite(SpinnedWord w);

/// The word obtained by dropping every spin.
Word underlying(const SpinnedWord& w);

std::size_t barred_count(const SpinnedWord& w);

// Text encoding: whitespace separated tokens, `x` or `x'`; `_` is the empty word.
std::string to_string(const SpinnedWord& w);
std::string to_string(SpinnedLetter l);
SpinnedWord parse_spinned_word(std::string_view text);

}  // namespace episturm
