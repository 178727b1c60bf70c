#include "episturm/section5.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "episturm/error.hpp"
#include "episturm/rigidity.hpp"

namespace episturm::weak {

Word encode(const Coding& c, std::string_view w) {
  Word out;
  for (char x : w) {
    const auto it = c.find(x);
    if (it == c.end()) throw DomainError(std::string("coding has no image for '") + x + "'");
    out += it->second;
  }
  return out;
}

const ExampleSystem& example_system() {
  static const ExampleSystem sys{
      Substitution({{'0', "01"}, {'1', "100110"}}),
      Substitution({{'0', "011001"}, {'1', "10"}}),
      Coding{{'A', "01"}, {'B', "10"}},
      Coding{{'C', "0110"}, {'D', "1001"}},
      Substitution({{'C', "CCDD"}, {'D', "DDCC"}}),
  };
  return sys;
}

Word u_prefix(std::size_t len) {
  if (len == 0) return {};
  return fixed_point_prefix(example_system().sigma, '0', len);
}

std::vector<std::size_t> square_letter_positions(std::string_view w) {
  std::vector<std::size_t> out;
  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
    if (w[pos] == w[pos + 1]) out.push_back(pos + 1);
  }
  return out;
}

bool even_indices(std::string_view w) {
  const auto pos = square_letter_positions(w);
  return std::all_of(pos.begin(), pos.end(), [](std::size_t p) { return p % 2 == 0; });
}

bool check_even_indices(std::size_t prefix_len) { return even_indices(u_prefix(prefix_len)); }

std::vector<std::size_t> square_prefix_lengths(std::size_t prefix_len) {
  const Word u = u_prefix(prefix_len);
  const std::size_t n = u.size();
  std::vector<std::size_t> z(n, 0);
  for (std::size_t i = 1, l = 0, r = 0; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && u[z[i]] == u[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t h = 1; 2 * h <= n; ++h) {
    if (z[h] >= h) out.push_back(2 * h);
  }
  return out;
}

bool is_two_power_of_four(std::size_t len) {
  for (std::size_t v = 2; v <= len; v *= 4) {
    if (v == len) return true;
  }
  return false;
}

namespace {

std::optional<Word> psi_decode(std::string_view u) {
  Word out;
  for (std::size_t pos = 0; pos + 1 < u.size(); pos += 2) {
    const std::string_view pair = u.substr(pos, 2);
    if (pair == "01") {
      out.push_back('A');
    } else if (pair == "10") {
      out.push_back('B');
    } else {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace

bool verify_recodings(std::size_t prefix_len) {
  if (prefix_len % 4 != 0) throw DomainError("recoding check needs a prefix length divisible by 4");
  const auto& sys = example_system();
  const Word u = u_prefix(prefix_len);
  const Word u2 = prefix_len == 0 ? Word{} : fixed_point_prefix(sys.mu2, 'C', prefix_len / 4);
  const auto coded = psi_decode(u);
  return encode(sys.rho, u2) == u && coded && encode(sys.psi, *coded) == u;
}

CompositionReport verify_composition_identities() {
  const auto& s = example_system().sigma;
  const auto& t = example_system().tau;
  CompositionReport r;
  r.sigma_tau_01 = s("01") == "01100110" && t("01") == "01100110";
  r.sigma_tau_10 = s("10") == t("10");
  r.right_to_left = compose(s, s) == compose(t, s) && compose(t, t) == compose(s, t);
  // First-apply-left: (f∘g)(x) = g(f(x)), so σ∘σ = σ∘τ reads σ(σ(x)) = τ(σ(x)).
  r.diagrammatic = compose(s, s) == compose(t, s) && compose(s, t) == compose(t, t);
  r.literal_right_to_left = compose(s, s) == compose(s, t) && compose(t, s) == compose(t, t);
  return r;
}

bool in_sigma_tau_monoid(const Substitution& phi) {
  static std::map<std::map<Letter, Word>, bool> memo;
  if (phi.is_identity()) return true;
  if (const auto it = memo.find(phi.images()); it != memo.end()) return it->second;
  bool found = false;
  for (const auto* g : {&example_system().sigma, &example_system().tau}) {
    if (g->alphabet() != phi.alphabet()) break;
    std::map<Letter, Word> inner;
    bool ok = true;
    for (const auto& [x, img] : phi.images()) {
      auto w = decode(*g, img);
      if (!w) {
        ok = false;
        break;
      }
      inner.emplace(x, std::move(*w));
    }
    if (ok && in_sigma_tau_monoid(Substitution(std::move(inner)))) {
      found = true;
      break;
    }
  }
  memo.emplace(phi.images(), found);
  return found;
}

std::vector<Substitution> monoid_elements(std::size_t bound) {
  const auto& sys = example_system();
  std::set<Substitution> seen;
  std::queue<Substitution> todo;
  const Substitution id = Substitution::identity("01");
  if (id.total_length() <= bound) {
    seen.insert(id);
    todo.push(id);
  }
  while (!todo.empty()) {
    const Substitution cur = todo.front();
    todo.pop();
    for (const auto* g : {&sys.sigma, &sys.tau}) {
      Substitution next = compose(*g, cur);
      if (next.total_length() <= bound && seen.insert(next).second) todo.push(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

StabilizerReport verify_stabilizer_theorem(std::size_t bound, std::size_t check_depth) {
  if (check_depth < 8 * bound) throw DomainError("stabilizer check depth must be at least 8x the bound");
  StabilizerReport r;
  r.found = stabilizer_probe(example_system().sigma, '0', bound, check_depth);
  for (const auto& phi : r.found) {
    r.membership = r.membership && in_sigma_tau_monoid(phi);
    if (!phi.is_identity()) {
      r.even_lengths = r.even_lengths && phi.image('0').size() % 2 == 0 && phi.image('1').size() % 2 == 0;
    }
    r.power_of_four = r.power_of_four && is_two_power_of_four(phi("01").size());
  }
  for (const auto& m : monoid_elements(bound)) {
    r.complete = r.complete && std::find(r.found.begin(), r.found.end(), m) != r.found.end();
  }
  return r;
}

bool every_long_factor_has_square_letter(std::size_t prefix_len) {
  const Word u = u_prefix(prefix_len);
  for (std::size_t pos = 0; pos + 5 <= u.size(); ++pos) {
    const std::string_view f = std::string_view(u).substr(pos, 5);
    if (f.find("00") == std::string_view::npos && f.find("11") == std::string_view::npos) return false;
  }
  return true;
}

bool t_recurrence_matches(unsigned n_max) {
  const auto& mu2 = example_system().mu2;
  Word t = "C";
  Word m = "C";
  for (unsigned n = 1; n <= n_max; ++n) {
    Word bar = t;
    for (char& c : bar) c = c == 'C' ? 'D' : 'C';
    t = t + t + bar + bar;
    m = mu2(m);
    if (t != m) return false;
  }
  return true;
}

bool psi_blocks(std::size_t prefix_len) {
  const auto coded = psi_decode(u_prefix(prefix_len - prefix_len % 8));
  if (!coded) return false;
  for (std::size_t pos = 0; pos + 4 <= coded->size(); pos += 4) {
    const std::string_view block = std::string_view(*coded).substr(pos, 4);
    if (block != "ABAB" && block != "BABA") return false;
  }
  return true;
}

std::vector<Claim> run_all(std::size_t prefix_len, std::size_t bound, std::size_t check_depth) {
  std::vector<Claim> out;
  const std::string at = "prefix " + std::to_string(prefix_len);
  const Word u = u_prefix(prefix_len);

  const auto positions = square_letter_positions(u);
  std::set<std::size_t> parities;
  for (std::size_t p : positions) parities.insert(p % 2);
  out.push_back({"00 and 11 start at even 1-based indices", even_indices(u),
                 at + ", " + std::to_string(positions.size()) + " occurrences"});
  out.push_back({"00 and 11 positions form one parity class", parities.size() <= 1, at});
  out.push_back({"every factor of length 5 contains 00 or 11", every_long_factor_has_square_letter(prefix_len), at});

  const auto squares = square_prefix_lengths(prefix_len);
  std::string lens;
  for (std::size_t l : squares) lens += (lens.empty() ? "" : " ") + std::to_string(l);
  const bool shaped = std::all_of(squares.begin(), squares.end(), is_two_power_of_four);
  const bool has_8_32 = std::find(squares.begin(), squares.end(), 8) != squares.end() &&
                        std::find(squares.begin(), squares.end(), 32) != squares.end();
  out.push_back({"square prefixes have length 2*4^i", shaped && (prefix_len < 64 || has_8_32),
                 at + ", lengths " + (lens.empty() ? "none" : lens)});

  const std::size_t rec_len = prefix_len - prefix_len % 4;
  out.push_back({"rho(mu^w(C)) equals u", verify_recodings(rec_len), "prefix " + std::to_string(rec_len)});
  out.push_back({"psi coding of u is made of ABAB and BABA blocks", psi_blocks(prefix_len), at});
  out.push_back({"T_n recurrence equals mu^n(C)", t_recurrence_matches(6), "n <= 6"});

  const auto comp = verify_composition_identities();
  out.push_back({"sigma(01) = tau(01) = 01100110 and sigma(10) = tau(10)", comp.sigma_tau_01 && comp.sigma_tau_10,
                 "letters"});
  out.push_back({"sigma.sigma = tau.sigma and tau.tau = sigma.tau as f(g(x))", comp.right_to_left, "letters"});
  out.push_back({"sigma.sigma = sigma.tau and tau.sigma = tau.tau read first-apply-left", comp.diagrammatic,
                 "letters"});
  out.push_back({"sigma.sigma = sigma.tau and tau.sigma = tau.tau read as f(g(x))", comp.literal_right_to_left,
                 "letters; composition order in the displayed identities is ambiguous", true});

  const auto stab = verify_stabilizer_theorem(bound, check_depth);
  const std::string sd = "bound " + std::to_string(bound) + ", depth " + std::to_string(check_depth) + ", " +
                         std::to_string(stab.found.size()) + " morphisms";
  out.push_back({"probed stabilizer lies in the monoid of sigma and tau", stab.membership, sd});
  out.push_back({"probe finds every monoid element within the bound", stab.complete, sd});
  out.push_back({"non-identity stabilizer elements have even image lengths", stab.even_lengths, sd});
  out.push_back({"|phi(01)| = 2*4^n for every probed phi", stab.power_of_four, sd});
  return out;
}

bool all_pass(const std::vector<Claim>& claims) {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass || c.informational; });
}

std::string render(const std::vector<Claim>& claims) {
  std::ostringstream out;
  for (const auto& c : claims) {
    out << (c.informational ? (c.pass ? "INFO holds  " : "INFO fails  ") : (c.pass ? "PASS " : "FAIL ")) << c.name
        << " [" << c.detail << "]\n";
  }
  return out.str();
}

}  // namespace episturm::weak
