#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "episturm/power.hpp"
#include "episturm/subst.hpp"

namespace episturm {

/// The unique w with s(w) = target, if any. Throws InternalError when two
/// parses exist, which cannot happen for an injective s.
std::optional<Word> decode(const Substitution& s, std::string_view target);

/// ϱ with t = s∘ϱ, or nullopt. Throws DomainError if s or t is not
/// episturmian or their alphabets differ.
std::optional<Substitution> divide_left(const Substitution& s, const Substitution& t);

/// Smallest (n, m), n ≤ bound, with sⁿ = tᵐ, compared through normal forms.
std::optional<std::pair<unsigned, unsigned>> find_common_power(const Substitution& s, const Substitution& t,
                                                               unsigned bound);

struct RootWitness {
  Substitution root;
  NormalForm root_nf;
  unsigned k = 1;
  unsigned l = 1;
  std::size_t depth = 0;
};

/// Root ϱ with s = ϱᵏ and t = ϱˡ, given sⁿ = tᵐ. Throws DomainError when
/// sⁿ ≠ tᵐ or when the pair has no common root (it does not commute, or it
/// differs by a non-trivial permutation).
RootWitness common_root(const Substitution& s, const Substitution& t, unsigned n, unsigned m);

enum class Branch {
  OneLetter,
  SingleExponent,
  NoErrors,
  SameLength,
  SameStart,
  DifferentLetters,
  BothTypeI,
  BothTypeII,
  MixedTypes,
};

std::string to_string(Branch b);

struct SideSummary {
  NormalForm nf;
  std::size_t k = 0;
  ErrorReport report;
  bool one_letter = false;
};

struct CaseDiagnosis {
  SideSummary sigma;
  SideSummary tau;
  Branch branch = Branch::NoErrors;
  std::optional<Substitution> rho;
  /// Named conclusions checked for this branch, with their outcome.
  std::vector<std::pair<std::string, bool>> checks;

  bool all_checks_hold() const;
};

/// Requires sⁿ = tᵐ with n ≥ m ≥ 1; throws DomainError otherwise.
CaseDiagnosis diagnose_pair(const Substitution& s, const Substitution& t, unsigned n, unsigned m);

std::string render(const CaseDiagnosis& d);

/// Morphisms φ with φ(u) a prefix of u to `check_depth`, total image length
/// at most `max_total`, sorted by total length then images. The identity is
/// always listed. Requires check_depth ≥ 4·max_total.
std::vector<Substitution> stabilizer_probe(const Substitution& s, Letter a, std::size_t max_total,
                                           std::size_t check_depth);

/// Same, over an explicit prefix, which must hold check_depth + max_total letters.
std::vector<Substitution> stabilizer_probe(std::string_view u, std::size_t max_total, std::size_t check_depth);

}  // namespace episturm
