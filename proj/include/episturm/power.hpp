#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "episturm/subst.hpp"

namespace episturm {

/// Closed 1-based interval of positions.
struct Interval {
  std::size_t first = 0;
  std::size_t last = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class ErrorKind { NoError, TypeI, TypeII };

std::string to_string(ErrorKind kind);

/// Maximal ā⁺|a⁺ factor straddling the first period boundary: it occupies
/// [t, k+q].
struct CentralPart {
  std::size_t t = 0;
  std::size_t q = 0;

  friend bool operator==(const CentralPart&, const CentralPart&) = default;
};

/// Errors of the first level in Z. Positions are absolute and 1-based; the
/// leftmost support is [i, k+p].
struct ErrorReport {
  ErrorKind kind = ErrorKind::NoError;
  Letter letter = 'a';
  std::size_t i = 0;
  std::size_t p = 0;
  std::vector<Interval> supports;
  std::optional<CentralPart> central;

  friend bool operator==(const ErrorReport&, const ErrorReport&) = default;
};

struct PowerTrace {
  NormalForm base;
  unsigned n = 1;
  std::size_t k = 0;
  SpinnedWord Z;
  Permutation Zperm;
  ErrorReport report;
  SpinnedWord Z1;
  NormalForm final;
  /// Which path produced `final`: "one-letter", "trivial", "no-error",
  /// "first-level" or "second-level".
  std::string path;
};

/// n blocks, block j being the directive relabeled by θʲ, followed by θⁿ.
std::pair<SpinnedWord, Permutation> build_Z(const NormalForm& nf, unsigned n);

/// Locates the leftmost propagated error and its k-periodic family. The kind
/// is the one predicted from Z alone; classify() confirms it.
ErrorReport locate_errors(const SpinnedWord& Z, std::size_t k, const Permutation& theta, unsigned n);

/// Block-normalizes every support of the report independently.
SpinnedWord first_level(const SpinnedWord& Z, const ErrorReport& report);

ErrorKind classify(const SpinnedWord& Z1, const ErrorReport& report);

/// Rewrites the errors ā b̄…b̄ a at [p+kj, i+kj], j = 1..n-2, then sorts the
/// maximal ã-runs through those positions.
SpinnedWord second_level(const SpinnedWord& Z1, const ErrorReport& report, std::size_t k, unsigned n);

/// Normal form of the n-th power. Throws InternalError if the structured
/// computation disagrees with normalize_oracle(Z).
PowerTrace power_normal_form(const NormalForm& nf, unsigned n);

/// Tokens with `|` after every k of them.
std::string render_periods(const SpinnedWord& w, std::size_t k);

std::string render_human(const PowerTrace& trace, bool with_trace);

/// `key: value` lines.
std::string render_machine(const PowerTrace& trace);

/// Reads `key: value` lines back; later keys override earlier ones.
std::map<std::string, std::string> read_key_values(std::string_view text);

/// Rebuilds a report from the machine rendering.
ErrorReport parse_report(const std::map<std::string, std::string>& kv);

}  // namespace episturm
