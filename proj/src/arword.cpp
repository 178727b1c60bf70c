#include "episturm/arword.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "episturm/error.hpp"

namespace episturm {

namespace {

std::unordered_set<std::string_view> factors(std::string_view w, std::size_t n) {
  std::unordered_set<std::string_view> out;
  for (std::size_t pos = 0; pos + n <= w.size(); ++pos) out.insert(w.substr(pos, n));
  return out;
}

std::size_t left_special_raw(std::string_view w, std::size_t n) {
  std::map<std::string_view, std::set<char>> ext;
  for (std::size_t pos = 1; pos + n <= w.size(); ++pos) ext[w.substr(pos, n)].insert(w[pos - 1]);
  return static_cast<std::size_t>(
      std::count_if(ext.begin(), ext.end(), [](const auto& kv) { return kv.second.size() >= 2; }));
}

void require_length(std::string_view prefix, std::size_t n_max) {
  if (prefix.size() < 50 * n_max) {
    throw DomainError("prefix of length " + std::to_string(prefix.size()) + " is too short for factor length " +
                      std::to_string(n_max) + "; need at least " + std::to_string(50 * n_max));
  }
}

void require_saturated(std::size_t half, std::size_t full, std::size_t n) {
  if (half != full) {
    throw DomainError("factor counts of length " + std::to_string(n) +
                      " still grow when the prefix doubles; use a longer prefix");
  }
}

}  // namespace

std::vector<std::size_t> factor_complexity(std::string_view prefix, std::size_t n_max) {
  require_length(prefix, n_max);
  const std::string_view half = prefix.substr(0, prefix.size() / 2);
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t full = factors(prefix, n).size();
    require_saturated(factors(half, n).size(), full, n);
    out.push_back(full);
  }
  return out;
}

std::size_t left_special_count(std::string_view prefix, std::size_t n) {
  require_length(prefix, n);
  const std::size_t full = left_special_raw(prefix, n);
  require_saturated(left_special_raw(prefix.substr(0, prefix.size() / 2), n), full, n);
  return full;
}

std::string to_string(Verdict v) { return v == Verdict::Refuted ? "Refuted" : "Consistent"; }

ArEvidence is_arnoux_rauzy_evidence(const Substitution& s, Letter a, std::size_t n_max) {
  ArEvidence e;
  const std::size_t len = std::max<std::size_t>(10000, 50 * n_max);
  const Word wide = fixed_point_prefix(s, a, 10 * len);
  const std::string_view window = std::string_view(wide).substr(0, 2 * len);
  e.prefix_len = window.size();
  const std::size_t d = s.alphabet().size();

  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t c = factor_complexity(window, n).back();
    const std::size_t ls = left_special_count(window, n);
    e.complexity.push_back(c);
    e.left_special.push_back(ls);
    if (e.verdict == Verdict::Consistent && c != (d - 1) * n + 1) {
      e.verdict = Verdict::Refuted;
      e.reason = "complexity " + std::to_string(c) + " at length " + std::to_string(n) + ", expected " +
                 std::to_string((d - 1) * n + 1);
    }
    if (e.verdict == Verdict::Consistent && ls != 1) {
      e.verdict = Verdict::Refuted;
      e.reason = std::to_string(ls) + " left special factors of length " + std::to_string(n);
    }
  }
  for (std::size_t n = 1; n <= n_max && e.verdict == Verdict::Consistent; ++n) {
    const auto inner = factors(window, n);
    const auto outer = factors(wide, n);
    for (const auto f : inner) {
      std::string r(f.rbegin(), f.rend());
      if (!outer.contains(r)) {
        e.verdict = Verdict::Refuted;
        e.reason = "reversal of factor " + std::string(f) + " not found";
        break;
      }
    }
  }
  return e;
}

std::string render(const ArEvidence& e) {
  std::ostringstream out;
  out << "prefix: " << e.prefix_len << "\n";
  out << "n  complexity  left-special\n";
  for (std::size_t n = 1; n <= e.complexity.size(); ++n) {
    out << n << "  " << e.complexity[n - 1] << "  " << e.left_special[n - 1] << "\n";
  }
  out << "verdict: " << to_string(e.verdict);
  if (!e.reason.empty()) out << " (" << e.reason << ")";
  out << "\n";
  return out.str();
}

}  // namespace episturm
