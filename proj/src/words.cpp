#include "episturm/words.hpp"

#include <algorithm>

#include "episturm/error.hpp"
#include "text_util.hpp"

namespace episturm {

bool is_letter(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

std::optional<BadFactor> bad_factor_at(const SpinnedWord& w, std::size_t start) {
  if (start == 0 || start > w.size()) return std::nullopt;
  const SpinnedLetter head = w[start - 1];
  if (!head.barred) return std::nullopt;
  for (std::size_t pos = start + 1; pos <= w.size(); ++pos) {
    const SpinnedLetter cur = w[pos - 1];
    if (cur.letter == head.letter) {
      if (cur.barred) return std::nullopt;
      return BadFactor{start, pos, head.letter};
    }
    if (!cur.barred) return std::nullopt;
  }
  return std::nullopt;
}

std::vector<BadFactor> find_bad_factors(const SpinnedWord& w) {
  std::vector<BadFactor> out;
  for (std::size_t s = 1; s <= w.size(); ++s) {
    if (auto f = bad_factor_at(w, s)) out.push_back(*f);
  }
  return out;
}

bool is_normal_form(const SpinnedWord& w) {
  for (std::size_t s = 1; s <= w.size(); ++s) {
    if (bad_factor_at(w, s)) return false;
  }
  return true;
}

SpinnedWord apply_block_transform(SpinnedWord w, const BadFactor& f) {
  const auto found = bad_factor_at(w, f.start);
  if (!found || *found != f) {
    throw DomainError("block transformation: no bad factor [" + std::to_string(f.start) + "," +
                      std::to_string(f.end) + "] of letter " + std::string(1, f.letter) + " in '" +
                      to_string(w) + "'");
  }
  w[f.start - 1].barred = false;
  for (std::size_t pos = f.start + 1; pos < f.end; ++pos) w[pos - 1].barred = false;
  w[f.end - 1].barred = true;
  return w;
}

std::size_t termination_bound(const SpinnedWord& w) {
  return w.size() * w.size() * (barred_count(w) + 1);
}

NormalizationRun normalize_with(SpinnedWord w, const RewriteChooser& choose) {
  const std::size_t bound = termination_bound(w);
  NormalizationRun run{std::move(w), 0};
  for (;;) {
    const auto factors = find_bad_factors(run.result);
    if (factors.empty()) return run;
    if (run.steps == bound) {
      throw InternalError("normalization exceeded its termination bound");
    }
    const std::size_t pick = choose(factors);
    if (pick >= factors.size()) throw InternalError("rewrite chooser returned an invalid index");
    run.result = apply_block_transform(std::move(run.result), factors[pick]);
    ++run.steps;
  }
}

SpinnedWord normalize_oracle(SpinnedWord w) {
  const std::size_t bound = termination_bound(w);
  std::size_t steps = 0;
  std::size_t s = 1;
  // A rewrite at [start, end] can only create a new bad factor whose start
  // lies at or before `start`, so the scan resumes from the nearest earlier
  // barred letter run.
  while (s <= w.size()) {
    const auto f = bad_factor_at(w, s);
    if (!f) {
      ++s;
      continue;
    }
    if (steps == bound) throw InternalError("normalization exceeded its termination bound");
    w = apply_block_transform(std::move(w), *f);
    ++steps;
    while (s > 1 && w[s - 2].barred) --s;
  }
  return w;
}

bool block_equivalent(const SpinnedWord& w, const SpinnedWord& w2) {
  return normalize_oracle(w) == normalize_oracle(w2);
}

SpinnedWord opposite(SpinnedWord w) {
  for (auto& l : w) l.barred = !l.barred;
  return w;
}

Word underlying(const SpinnedWord& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back(l.letter);
  return out;
}

std::size_t barred_count(const SpinnedWord& w) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [](const SpinnedLetter& l) { return l.barred; }));
}

std::string to_string(SpinnedLetter l) {
  std::string out(1, l.letter);
  if (l.barred) out.push_back('\'');
  return out;
}

std::string to_string(const SpinnedWord& w) {
  if (w.empty()) return "_";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out.push_back(' ');
    out += to_string(l);
  }
  return out;
}

SpinnedWord parse_spinned_word(std::string_view text) {
  const auto tokens = detail::split_ws(text);
  if (tokens.size() == 1 && tokens[0] == "_") return {};
  if (tokens.empty()) throw ParseError("empty spinned word (use '_')");
  SpinnedWord out;
  out.reserve(tokens.size());
  for (const auto tok : tokens) {
    if (tok.empty() || tok.size() > 2 || !is_letter(tok[0]) || (tok.size() == 2 && tok[1] != '\'')) {
      throw ParseError("bad spinned letter token '" + std::string(tok) + "'");
    }
    out.push_back({tok[0], tok.size() == 2});
  }
  return out;
}

}  // namespace episturm
