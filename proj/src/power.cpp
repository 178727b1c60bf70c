#include "episturm/power.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "episturm/error.hpp"
#include "text_util.hpp"

namespace episturm {

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoError: return "NoError";
    case ErrorKind::TypeI: return "TypeI";
    case ErrorKind::TypeII: return "TypeII";
  }
  return "?";
}

namespace {

ErrorKind parse_kind(std::string_view s) {
  if (s == "NoError") return ErrorKind::NoError;
  if (s == "TypeI") return ErrorKind::TypeI;
  if (s == "TypeII") return ErrorKind::TypeII;
  throw ParseError("unknown error kind '" + std::string(s) + "'");
}

bool is_plain(const SpinnedWord& w, std::size_t pos, Letter a) {
  return pos >= 1 && pos <= w.size() && w[pos - 1].letter == a && !w[pos - 1].barred;
}

bool is_bar(const SpinnedWord& w, std::size_t pos, Letter a) {
  return pos >= 1 && pos <= w.size() && w[pos - 1].letter == a && w[pos - 1].barred;
}

// Grows a simple a-error [s, e] to the maximal factor (ā Ā'*)+ (a Ā'*)* a.
Interval propagate(const SpinnedWord& Z, std::size_t s, std::size_t e, Letter a) {
  Interval out{s, e};
  for (std::size_t pos = s; pos > 1 && Z[pos - 2].barred; --pos) {
    if (Z[pos - 2].letter == a) out.first = pos - 1;
  }
  std::size_t pos = e + 1;
  for (;;) {
    std::size_t q = pos;
    while (q <= Z.size() && Z[q - 1].barred && Z[q - 1].letter != a) ++q;
    if (!is_plain(Z, q, a)) break;
    out.last = q;
    pos = q + 1;
  }
  return out;
}

// Simple error straddling the boundary after position `boundary`.
std::optional<BadFactor> straddling_error(const SpinnedWord& Z, std::size_t boundary, std::size_t k) {
  const std::size_t from = boundary >= k ? boundary - k + 1 : 1;
  for (std::size_t s = from; s <= boundary; ++s) {
    if (auto f = bad_factor_at(Z, s); f && f->end > boundary) return f;
  }
  return std::nullopt;
}

SpinnedWord normalize_range(SpinnedWord w, Interval range) {
  SpinnedWord piece(w.begin() + static_cast<std::ptrdiff_t>(range.first - 1),
                    w.begin() + static_cast<std::ptrdiff_t>(range.last));
  piece = normalize_oracle(std::move(piece));
  std::copy(piece.begin(), piece.end(), w.begin() + static_cast<std::ptrdiff_t>(range.first - 1));
  return w;
}

std::string render_supports(const std::vector<Interval>& supports) {
  if (supports.empty()) return "none";
  std::string out;
  for (const auto& iv : supports) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(iv.first) + "-" + std::to_string(iv.last);
  }
  return out;
}

std::string render_central(const std::optional<CentralPart>& c) {
  if (!c) return "none";
  return std::to_string(c->t) + " " + std::to_string(c->q);
}

std::size_t parse_index(std::string_view s) {
  std::size_t value = 0;
  if (s.empty()) throw ParseError("empty index");
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("bad index '" + std::string(s) + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace

std::pair<SpinnedWord, Permutation> build_Z(const NormalForm& nf, unsigned n) {
  if (n == 0) throw DomainError("power exponent must be at least 1");
  SpinnedWord Z;
  Z.reserve(nf.directive.size() * n);
  Permutation theta_j;
  for (unsigned j = 0; j < n; ++j) {
    for (const auto& l : nf.directive) Z.push_back({theta_j(l.letter), l.barred});
    theta_j = nf.perm * theta_j;
  }
  return {std::move(Z), theta_j};
}

ErrorReport locate_errors(const SpinnedWord& Z, std::size_t k, const Permutation& theta, unsigned n) {
  ErrorReport report;
  if (n < 2 || k == 0) return report;
  std::optional<BadFactor> first;
  for (std::size_t s = 1; s <= Z.size() && !first; ++s) first = bad_factor_at(Z, s);
  if (!first) return report;
  if (!(first->start <= k && k < first->end)) {
    throw InternalError("leftmost simple error does not straddle the first period boundary");
  }
  const Letter a = first->letter;
  const Interval lead = propagate(Z, first->start, first->end, a);
  report.letter = a;
  report.i = lead.first;
  report.p = lead.last - k;
  if (report.p >= report.i) throw InternalError("leftmost propagated error has p >= i");

  Letter cur = a;
  for (unsigned j = 0; j + 1 < n; ++j) {
    const std::size_t boundary = k * (j + 1);
    const auto f = straddling_error(Z, boundary, k);
    if (!f || f->letter != cur) {
      throw InternalError("no simple error of the expected letter at period boundary " +
                          std::to_string(j + 1));
    }
    const Interval support = propagate(Z, f->start, f->end, cur);
    const Interval expected{report.i + k * j, report.p + k * (j + 1)};
    if (support != expected) throw InternalError("propagated error supports are not k-periodic");
    report.supports.push_back(support);
    cur = theta(cur);
  }

  if (is_bar(Z, k, a) && is_plain(Z, k + 1, a)) {
    CentralPart c{k, 1};
    while (is_bar(Z, c.t - 1, a)) --c.t;
    while (is_plain(Z, k + c.q + 1, a)) ++c.q;
    report.central = c;
  }

  bool second = theta(a) == a && n >= 3;
  for (unsigned j = 1; second && j + 1 < n; ++j) {
    for (std::size_t pos = report.p + k * j + 1; pos < report.i + k * j; ++pos) {
      const auto& l = Z[pos - 1];
      if (!l.barred || l.letter == a) {
        second = false;
        break;
      }
    }
  }
  report.kind = second ? ErrorKind::TypeII : ErrorKind::TypeI;
  return report;
}

SpinnedWord first_level(const SpinnedWord& Z, const ErrorReport& report) {
  if (report.kind == ErrorKind::NoError) throw DomainError("first_level: no error to normalize");
  SpinnedWord out = Z;
  for (const auto& support : report.supports) out = normalize_range(std::move(out), support);
  return out;
}

ErrorKind classify(const SpinnedWord& Z1, const ErrorReport& report) {
  if (report.kind == ErrorKind::NoError) throw DomainError("classify: no error to classify");
  return is_normal_form(Z1) ? ErrorKind::TypeI : ErrorKind::TypeII;
}

SpinnedWord second_level(const SpinnedWord& Z1, const ErrorReport& report, std::size_t k, unsigned n) {
  if (report.kind != ErrorKind::TypeII) throw DomainError("second_level: errors are not of type II");
  const Letter a = report.letter;
  SpinnedWord out = Z1;
  std::vector<std::size_t> anchors;
  for (unsigned j = 1; j + 1 < n; ++j) {
    const BadFactor f{report.p + k * j, report.i + k * j, a};
    try {
      out = apply_block_transform(std::move(out), f);
    } catch (const DomainError&) {
      throw InternalError("second level: expected an error at [" + std::to_string(f.start) + "," +
                          std::to_string(f.end) + "]");
    }
    anchors.push_back(f.start);
    anchors.push_back(f.end);
  }
  std::set<std::size_t> done;
  for (std::size_t pos : anchors) {
    std::size_t lo = pos;
    std::size_t hi = pos;
    while (lo > 1 && out[lo - 2].letter == a) --lo;
    while (hi < out.size() && out[hi].letter == a) ++hi;
    if (!done.insert(lo).second) continue;
    std::stable_sort(out.begin() + static_cast<std::ptrdiff_t>(lo - 1), out.begin() + static_cast<std::ptrdiff_t>(hi),
                     [](const SpinnedLetter& x, const SpinnedLetter& y) { return !x.barred && y.barred; });
  }
  return out;
}

PowerTrace power_normal_form(const NormalForm& nf, unsigned n) {
  PowerTrace trace;
  trace.base = nf;
  trace.n = n;
  trace.k = nf.length();
  std::tie(trace.Z, trace.Zperm) = build_Z(nf, n);
  trace.Z1 = trace.Z;
  trace.final.perm = trace.Zperm;
  const std::size_t k = trace.k;

  const Word letters = underlying(nf.directive);
  const bool one_letter =
      k > 0 && std::all_of(letters.begin(), letters.end(), [&](char c) { return c == letters[0]; });

  if (k == 0 || n == 1) {
    trace.path = "trivial";
    trace.final.directive = trace.Z;
  } else if (one_letter) {
    trace.path = "one-letter";
    const Letter a = letters[0];
    if (nf.perm(a) == a) {
      const std::size_t t = barred_count(nf.directive);
      const std::size_t s = k - t;
      trace.final.directive.assign(s * n, SpinnedLetter{a, false});
      trace.final.directive.insert(trace.final.directive.end(), t * n, SpinnedLetter{a, true});
    } else {
      trace.final.directive = trace.Z;
    }
  } else {
    trace.report = locate_errors(trace.Z, k, nf.perm, n);
    if (trace.report.kind == ErrorKind::NoError) {
      trace.path = "no-error";
      trace.final.directive = trace.Z;
    } else {
      trace.Z1 = first_level(trace.Z, trace.report);
      const ErrorKind kind = classify(trace.Z1, trace.report);
      if (kind != trace.report.kind) {
        throw InternalError("error type predicted from Z (" + to_string(trace.report.kind) +
                            ") disagrees with the first level (" + to_string(kind) + ")");
      }
      if (kind == ErrorKind::TypeI) {
        trace.path = "first-level";
        trace.final.directive = trace.Z1;
      } else {
        trace.path = "second-level";
        trace.final.directive = second_level(trace.Z1, trace.report, k, n);
      }
    }
  }

  const SpinnedWord oracle = normalize_oracle(trace.Z);
  if (trace.final.directive != oracle) {
    throw InternalError("power of " + to_string(nf) + " to " + std::to_string(n) + ": structured result " +
                        to_string(trace.final.directive) + " differs from oracle " + to_string(oracle));
  }
  return trace;
}

std::string render_periods(const SpinnedWord& w, std::size_t k) {
  if (w.empty()) return "_";
  std::string out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (pos > 0) out += (k > 0 && pos % k == 0) ? " | " : " ";
    out += to_string(w[pos]);
  }
  return out;
}

std::string render_human(const PowerTrace& trace, bool with_trace) {
  if (!with_trace) return to_string(trace.final) + "\n";
  std::ostringstream out;
  const auto& r = trace.report;
  out << "Z:        " << render_periods(trace.Z, trace.k) << " " << to_string(trace.Zperm) << "\n";
  out << "kind:     " << to_string(r.kind) << "\n";
  if (r.kind != ErrorKind::NoError) {
    out << "letter:   " << r.letter << "\n";
    out << "i, p:     " << r.i << ", " << r.p << "\n";
    out << "supports: " << render_supports(r.supports) << "\n";
    if (r.central) out << "central:  t=" << r.central->t << " q=" << r.central->q << "\n";
  }
  out << "path:     " << trace.path << "\n";
  out << "Z':       " << render_periods(trace.Z1, trace.k) << "\n";
  out << "final:    " << to_string(trace.final) << "\n";
  return out.str();
}

std::string render_machine(const PowerTrace& trace) {
  std::ostringstream out;
  const auto& r = trace.report;
  out << "base: " << to_string(trace.base) << "\n";
  out << "n: " << trace.n << "\n";
  out << "k: " << trace.k << "\n";
  out << "path: " << trace.path << "\n";
  out << "kind: " << to_string(r.kind) << "\n";
  out << "letter: " << (r.kind == ErrorKind::NoError ? std::string("none") : std::string(1, r.letter)) << "\n";
  out << "i: " << r.i << "\n";
  out << "p: " << r.p << "\n";
  out << "supports: " << render_supports(r.supports) << "\n";
  out << "central: " << render_central(r.central) << "\n";
  out << "Z: " << to_string(trace.Z) << "\n";
  out << "Zperm: " << to_string(trace.Zperm) << "\n";
  out << "Z1: " << to_string(trace.Z1) << "\n";
  out << "final: " << to_string(trace.final) << "\n";
  return out.str();
}

std::map<std::string, std::string> read_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = detail::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value', got '" + std::string(line) + "'");
    out[std::string(detail::trim(line.substr(0, colon)))] = std::string(detail::trim(line.substr(colon + 1)));
  }
  return out;
}

ErrorReport parse_report(const std::map<std::string, std::string>& kv) {
  auto get = [&](const std::string& key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing key '" + key + "'");
    return it->second;
  };
  ErrorReport r;
  r.kind = parse_kind(get("kind"));
  if (r.kind == ErrorKind::NoError) return r;
  const std::string& letter = get("letter");
  if (letter.size() != 1 || !is_letter(letter[0])) throw ParseError("bad letter '" + letter + "'");
  r.letter = letter[0];
  r.i = parse_index(get("i"));
  r.p = parse_index(get("p"));
  const std::string& supports = get("supports");
  if (supports != "none") {
    for (const auto tok : detail::split_ws(supports)) {
      const auto dash = tok.find('-');
      if (dash == std::string_view::npos) throw ParseError("bad support '" + std::string(tok) + "'");
      r.supports.push_back({parse_index(tok.substr(0, dash)), parse_index(tok.substr(dash + 1))});
    }
  }
  const std::string& central = get("central");
  if (central != "none") {
    const auto parts = detail::split_ws(central);
    if (parts.size() != 2) throw ParseError("bad central part '" + central + "'");
    r.central = CentralPart{parse_index(parts[0]), parse_index(parts[1])};
  }
  return r;
}

}  // namespace episturm
