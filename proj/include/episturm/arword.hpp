#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "episturm/subst.hpp"

namespace episturm {

/// Distinct factor counts for lengths 1..n_max. Throws DomainError when
/// |prefix| < 50·n_max or when the counts on the first half of the prefix
/// differ from those on the whole prefix.
std::vector<std::size_t> factor_complexity(std::string_view prefix, std::size_t n_max);

/// Factors of length n preceded by at least two distinct letters. Same
/// preconditions as factor_complexity with n_max = n.
std::size_t left_special_count(std::string_view prefix, std::size_t n);

enum class Verdict { Refuted, Consistent };

std::string to_string(Verdict v);

struct ArEvidence {
  Verdict verdict = Verdict::Consistent;
  /// Why the word was refuted; empty when consistent.
  std::string reason;
  std::size_t prefix_len = 0;
  std::vector<std::size_t> complexity;
  std::vector<std::size_t> left_special;
};

/// Finite-window evidence that s^ω(a) is an Arnoux-Rauzy word. "Consistent"
/// is not a proof.
ArEvidence is_arnoux_rauzy_evidence(const Substitution& s, Letter a, std::size_t n_max);

std::string render(const ArEvidence& e);

}  // namespace episturm
