#include "episturm/rigidity.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "episturm/error.hpp"

namespace episturm {

namespace {

NormalForm require_nf(const Substitution& s, const char* role) {
  auto nf = decompose(s);
  if (!nf) throw DomainError(std::string(role) + " is not episturmian");
  return *nf;
}

NormalForm power_nf(const NormalForm& nf, unsigned n) {
  if (n == 0) return NormalForm{};
  return power_normal_form(nf, n).final;
}

bool one_letter(const NormalForm& nf) {
  const Word w = underlying(nf.directive);
  return !w.empty() && std::all_of(w.begin(), w.end(), [&](char c) { return c == w[0]; });
}

struct Node {
  Substitution s;
  NormalForm nf;
};

RootWitness permutation_root(const Node& s, const Node& t) {
  if (s.nf == t.nf) return RootWitness{s.s, s.nf, 1, 1, 0};
  auto find_power = [](const Permutation& base, const Permutation& target) -> unsigned {
    Permutation cur = base;
    for (unsigned j = 1; !(j > 1 && cur == base); ++j, cur = base * cur) {
      if (cur == target) return j;
    }
    return 0;
  };
  if (unsigned j = find_power(s.nf.perm, t.nf.perm)) return RootWitness{s.s, s.nf, 1, j, 0};
  if (unsigned j = find_power(t.nf.perm, s.nf.perm)) return RootWitness{t.s, t.nf, j, 1, 0};
  throw DomainError("the permutations " + to_string(s.nf.perm) + " and " + to_string(t.nf.perm) +
                    " have no common root");
}

RootWitness root_rec(const Node& s, const Node& t, unsigned n, unsigned m, std::size_t depth_limit) {
  if (s.nf.length() == t.nf.length()) {
    if (s.nf.length() == 0) return permutation_root(s, t);
    if (s.nf == t.nf) return RootWitness{s.s, s.nf, 1, 1, 0};
    throw DomainError("equal-length substitutions " + to_string(s.nf) + " and " + to_string(t.nf) +
                      " differ and have no common root");
  }
  auto rho = divide_left(s.s, t.s);
  if (!rho) throw DomainError(to_string(s.nf) + " does not left-divide " + to_string(t.nf));
  if (compose(s.s, *rho) != compose(*rho, s.s)) {
    throw DomainError("the quotient of " + to_string(t.nf) + " by " + to_string(s.nf) +
                      " does not commute with it");
  }
  const Node r{*rho, require_nf(*rho, "quotient")};
  if (n <= m) throw InternalError("common root: exponents out of order");
  if (power_nf(r.nf, m) != power_nf(s.nf, n - m)) {
    throw InternalError("common root: cancellation identity fails for " + to_string(r.nf));
  }
  if (depth_limit == 0) throw InternalError("common root: recursion deeper than its length measure");
  RootWitness inner;
  RootWitness out;
  if (n - m >= m) {
    inner = root_rec(s, r, n - m, m, depth_limit - 1);
    out = RootWitness{inner.root, inner.root_nf, inner.k, inner.k + inner.l, inner.depth + 1};
  } else {
    inner = root_rec(r, s, m, n - m, depth_limit - 1);
    out = RootWitness{inner.root, inner.root_nf, inner.l, inner.k + inner.l, inner.depth + 1};
  }
  return out;
}

}  // namespace

std::optional<Word> decode(const Substitution& s, std::string_view target) {
  const std::size_t len = target.size();
  // ways[pos] counts parses of target[pos..], saturated at 2.
  std::vector<unsigned> ways(len + 1, 0);
  std::vector<Letter> choice(len + 1, 0);
  ways[len] = 1;
  for (std::size_t pos = len; pos-- > 0;) {
    for (const auto& [x, img] : s.images()) {
      if (img.size() > len - pos || target.compare(pos, img.size(), img) != 0) continue;
      const unsigned w = ways[pos + img.size()];
      if (w == 0) continue;
      if (ways[pos] == 0) choice[pos] = x;
      ways[pos] = std::min(2u, ways[pos] + w);
    }
  }
  if (ways[0] == 0) return std::nullopt;
  if (ways[0] > 1) throw InternalError("decode: ambiguous parse of '" + std::string(target) + "'");
  Word out;
  for (std::size_t pos = 0; pos < len; pos += s.image(choice[pos]).size()) out.push_back(choice[pos]);
  return out;
}

std::optional<Substitution> divide_left(const Substitution& s, const Substitution& t) {
  require_nf(s, "left operand");
  require_nf(t, "right operand");
  if (s.alphabet() != t.alphabet()) throw DomainError("divide: alphabet mismatch");
  std::map<Letter, Word> images;
  for (const auto& [x, img] : t.images()) {
    auto w = decode(s, img);
    if (!w) return std::nullopt;
    images.emplace(x, std::move(*w));
  }
  Substitution rho(std::move(images));
  if (!decompose(rho)) return std::nullopt;
  if (compose(s, rho) != t) throw InternalError("divide: recomposition failed");
  return rho;
}

std::optional<std::pair<unsigned, unsigned>> find_common_power(const Substitution& s, const Substitution& t,
                                                               unsigned bound) {
  const NormalForm ns = require_nf(s, "first substitution");
  const NormalForm nt = require_nf(t, "second substitution");
  if (s.alphabet() != t.alphabet()) throw DomainError("common-power: alphabet mismatch");
  const std::size_t ks = ns.length();
  const std::size_t kt = nt.length();
  for (unsigned n = 1; n <= bound; ++n) {
    std::vector<unsigned> ms;
    if (kt == 0) {
      if (ks == 0) {
        for (unsigned m = 1; m <= bound; ++m) ms.push_back(m);
      }
    } else if ((n * ks) % kt == 0 && n * ks > 0) {
      ms.push_back(static_cast<unsigned>(n * ks / kt));
    }
    if (ms.empty()) continue;
    const NormalForm lhs = power_nf(ns, n);
    for (unsigned m : ms) {
      if (lhs == power_nf(nt, m)) return std::make_pair(n, m);
    }
  }
  return std::nullopt;
}

RootWitness common_root(const Substitution& s, const Substitution& t, unsigned n, unsigned m) {
  if (n == 0 || m == 0) throw DomainError("common root: exponents must be positive");
  if (n < m) {
    RootWitness w = common_root(t, s, m, n);
    std::swap(w.k, w.l);
    return w;
  }
  const Node ns{s, require_nf(s, "first substitution")};
  const Node nt{t, require_nf(t, "second substitution")};
  if (s.alphabet() != t.alphabet()) throw DomainError("common root: alphabet mismatch");
  if (power_nf(ns.nf, n) != power_nf(nt.nf, m)) {
    throw DomainError("common root: the given powers differ");
  }
  const std::size_t measure = std::max(ns.nf.length(), nt.nf.length());
  RootWitness w = root_rec(ns, nt, n, m, measure);
  if (power_nf(w.root_nf, w.k) != ns.nf || power_nf(w.root_nf, w.l) != nt.nf ||
      power(w.root, w.k) != s || power(w.root, w.l) != t) {
    throw InternalError("common root: recomposition failed");
  }
  return w;
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::OneLetter: return "OneLetter";
    case Branch::SingleExponent: return "SingleExponent";
    case Branch::NoErrors: return "NoErrors";
    case Branch::SameLength: return "SameLength";
    case Branch::SameStart: return "SameStart";
    case Branch::DifferentLetters: return "DifferentLetters";
    case Branch::BothTypeI: return "BothTypeI";
    case Branch::BothTypeII: return "BothTypeII";
    case Branch::MixedTypes: return "MixedTypes";
  }
  return "?";
}

bool CaseDiagnosis::all_checks_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

CaseDiagnosis diagnose_pair(const Substitution& s, const Substitution& t, unsigned n, unsigned m) {
  if (n == 0 || m == 0 || n < m) throw DomainError("diagnose: need n >= m >= 1");
  if (s.alphabet() != t.alphabet()) throw DomainError("diagnose: alphabet mismatch");
  CaseDiagnosis d;
  d.sigma.nf = require_nf(s, "first substitution");
  d.tau.nf = require_nf(t, "second substitution");
  const PowerTrace ts = power_normal_form(d.sigma.nf, n);
  const PowerTrace tt = power_normal_form(d.tau.nf, m);
  if (ts.final != tt.final) throw DomainError("diagnose: the given powers differ");
  const std::pair<SideSummary*, const PowerTrace*> sides[] = {{&d.sigma, &ts}, {&d.tau, &tt}};
  for (const auto& [side, trace] : sides) {
    side->k = trace->k;
    side->report = trace->report;
    side->one_letter = one_letter(side->nf);
  }
  d.rho = divide_left(s, t);

  const auto& rs = d.sigma.report;
  const auto& rt = d.tau.report;
  const bool err_s = rs.kind != ErrorKind::NoError;
  const bool err_t = rt.kind != ErrorKind::NoError;
  auto check = [&](std::string name, bool holds) { d.checks.emplace_back(std::move(name), holds); };

  if (d.sigma.one_letter || d.tau.one_letter) {
    d.branch = Branch::OneLetter;
  } else if (m == 1) {
    d.branch = Branch::SingleExponent;
    check("quotient-is-power", d.rho && require_nf(*d.rho, "quotient") == power_nf(d.sigma.nf, n - 1));
  } else {
    check("errors-on-both-sides", err_s == err_t);
    if (!err_s || !err_t) {
      d.branch = Branch::NoErrors;
    } else if (d.sigma.k == d.tau.k) {
      d.branch = Branch::SameLength;
      check("quotient-is-permutation", d.rho && require_nf(*d.rho, "quotient").length() == 0);
    } else if (rs.i == rt.i) {
      d.branch = Branch::SameStart;
      const auto& ws = d.sigma.nf.directive;
      const auto& wt = d.tau.nf.directive;
      check("directive-prefix", ws.size() <= wt.size() && std::equal(ws.begin(), ws.end(), wt.begin()));
    } else if (rs.letter != rt.letter) {
      d.branch = Branch::DifferentLetters;
      check("both-type-I", rs.kind == ErrorKind::TypeI && rt.kind == ErrorKind::TypeI);
    } else if (rs.kind == ErrorKind::TypeI && rt.kind == ErrorKind::TypeI) {
      d.branch = Branch::BothTypeI;
    } else if (rs.kind == ErrorKind::TypeII && rt.kind == ErrorKind::TypeII) {
      d.branch = Branch::BothTypeII;
    } else {
      d.branch = Branch::MixedTypes;
      const bool ok = rs.kind == ErrorKind::TypeII ? d.tau.nf.perm(rs.letter) == rs.letter
                                                  : d.sigma.nf.perm(rt.letter) == rt.letter;
      check("type-II-letter-fixed-on-other-side", ok);
    }
  }
  check("divide-left", d.rho.has_value());
  return d;
}

std::string render(const CaseDiagnosis& d) {
  std::ostringstream out;
  auto side = [&](const char* name, const SideSummary& s) {
    out << name << ": " << to_string(s.nf) << "  k=" << s.k << "  kind=" << to_string(s.report.kind);
    if (s.report.kind != ErrorKind::NoError) {
      out << "  letter=" << s.report.letter << "  i=" << s.report.i << "  p=" << s.report.p;
    }
    if (s.one_letter) out << "  one-letter";
    out << "\n";
  };
  side("sigma", d.sigma);
  side("tau", d.tau);
  out << "branch: " << to_string(d.branch) << "\n";
  if (d.rho) out << "rho: " << to_string(*decompose(*d.rho)) << "\n";
  for (const auto& [name, holds] : d.checks) out << (holds ? "PASS " : "FAIL ") << name << "\n";
  return out.str();
}

namespace {

std::vector<Substitution> probe(std::string_view u, const Alphabet& alphabet, std::size_t max_total,
                                std::size_t check_depth) {
  if (check_depth < 4 * max_total) throw DomainError("stabilizer probe: check depth must be at least 4x the bound");
  if (u.size() + 1 < check_depth + max_total) throw DomainError("stabilizer probe: prefix too short");
  for (Letter x : alphabet) {
    if (u.substr(0, check_depth).find(x) == std::string_view::npos) {
      throw DomainError(std::string("stabilizer probe: letter ") + x + " does not occur in the checked prefix");
    }
  }
  std::vector<Substitution> out{Substitution::identity(alphabet)};
  std::map<Letter, std::size_t> lengths;

  auto try_lengths = [&]() {
    std::map<Letter, Word> images;
    std::size_t pos = 0;
    for (std::size_t j = 0; pos < check_depth; ++j) {
      const Letter x = u[j];
      const std::size_t len = lengths[x];
      if (pos + len > u.size()) return;
      const auto it = images.find(x);
      if (it == images.end()) {
        images.emplace(x, Word(u.substr(pos, len)));
      } else if (u.compare(pos, len, it->second) != 0) {
        return;
      }
      pos += len;
    }
    if (images.size() != alphabet.size()) return;
    Substitution phi(std::move(images));
    if (!phi.is_identity()) out.push_back(std::move(phi));
  };

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t used) {
    if (idx == alphabet.size()) {
      try_lengths();
      return;
    }
    const std::size_t reserve = alphabet.size() - idx - 1;
    for (std::size_t len = 1; used + len + reserve <= max_total; ++len) {
      lengths[alphabet[idx]] = len;
      rec(idx + 1, used + len);
    }
  };
  rec(0, 0);

  std::sort(out.begin(), out.end(), [](const Substitution& a, const Substitution& b) {
    if (a.total_length() != b.total_length()) return a.total_length() < b.total_length();
    return a.images() < b.images();
  });
  return out;
}

}  // namespace

std::vector<Substitution> stabilizer_probe(const Substitution& s, Letter a, std::size_t max_total,
                                           std::size_t check_depth) {
  const Word u = fixed_point_prefix(s, a, check_depth + max_total);
  return probe(u, s.alphabet(), max_total, check_depth);
}

std::vector<Substitution> stabilizer_probe(std::string_view u, std::size_t max_total, std::size_t check_depth) {
  return probe(u, make_alphabet(u), max_total, check_depth);
}

}  // namespace episturm
