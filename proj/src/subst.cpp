#include "episturm/subst.hpp"

#include <algorithm>
#include <set>

#include "episturm/error.hpp"
#include "text_util.hpp"

namespace episturm {

Alphabet make_alphabet(std::string_view letters) {
  Alphabet out(letters);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(const std::map<Letter, Letter>& mapping) {
  std::set<Letter> images;
  for (const auto& [from, to] : mapping) {
    if (!mapping.contains(to)) {
      throw DomainError(std::string("permutation: image ") + to + " is not in the domain");
    }
    if (!images.insert(to).second) {
      throw DomainError(std::string("permutation: letter ") + to + " has two preimages");
    }
    if (from != to) moved_.emplace(from, to);
  }
}

Permutation Permutation::transposition(Letter a, Letter b) {
  if (a == b) return {};
  return Permutation({{a, b}, {b, a}});
}

Letter Permutation::operator()(Letter x) const {
  const auto it = moved_.find(x);
  return it == moved_.end() ? x : it->second;
}

std::vector<Letter> Permutation::support() const {
  std::vector<Letter> out;
  for (const auto& [from, to] : moved_) out.push_back(from);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  for (const auto& [from, to] : moved_) out.moved_.emplace(to, from);
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  std::set<Letter> domain;
  for (const auto& [from, to] : p.moved_) domain.insert(from);
  for (const auto& [from, to] : q.moved_) domain.insert(from);
  Permutation out;
  for (Letter x : domain) {
    const Letter y = p(q(x));
    if (y != x) out.moved_.emplace(x, y);
  }
  return out;
}

Permutation Permutation::pow(unsigned n) const {
  Permutation out;
  for (unsigned j = 0; j < n; ++j) out = *this * out;
  return out;
}

std::string to_string(const Permutation& p) {
  std::string out = "@";
  std::set<Letter> seen;
  for (Letter start : p.support()) {
    if (seen.contains(start)) continue;
    out.push_back('(');
    Letter cur = start;
    do {
      out.push_back(cur);
      seen.insert(cur);
      cur = p(cur);
    } while (cur != start);
    out.push_back(')');
  }
  if (out.size() == 1) out += "()";
  return out;
}

Permutation parse_permutation(std::string_view token) {
  if (token.size() < 3 || token.front() != '@') {
    throw ParseError("bad permutation token '" + std::string(token) + "'");
  }
  std::map<Letter, Letter> mapping;
  std::size_t pos = 1;
  bool saw_identity = false;
  while (pos < token.size()) {
    if (token[pos] != '(') throw ParseError("bad permutation token '" + std::string(token) + "'");
    const std::size_t close = token.find(')', pos);
    if (close == std::string_view::npos) {
      throw ParseError("unclosed cycle in '" + std::string(token) + "'");
    }
    const std::string_view cycle = token.substr(pos + 1, close - pos - 1);
    if (cycle.empty()) {
      saw_identity = true;
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const Letter x = cycle[j];
      if (!is_letter(x) || mapping.contains(x)) {
        throw ParseError("bad or repeated letter in cycle of '" + std::string(token) + "'");
      }
      mapping.emplace(x, cycle[(j + 1) % cycle.size()]);
    }
    pos = close + 1;
  }
  if (saw_identity && !mapping.empty()) {
    throw ParseError("'()' mixed with cycles in '" + std::string(token) + "'");
  }
  return Permutation(mapping);
}

// --------------------------------------------------------------- Substitution

Substitution::Substitution(std::map<Letter, Word> images) : images_(std::move(images)) {
  for (const auto& [x, img] : images_) {
    if (!is_letter(x)) throw DomainError(std::string("invalid letter '") + x + "'");
    alphabet_.push_back(x);
  }
  for (const auto& [x, img] : images_) {
    if (img.empty()) throw DomainError(std::string("erasing image for letter ") + x);
    for (char c : img) {
      if (!images_.contains(c)) {
        throw DomainError(std::string("image of ") + x + " uses letter '" + c +
                          "' outside the alphabet " + alphabet_);
      }
    }
  }
}

Substitution Substitution::identity(const Alphabet& alphabet) {
  std::map<Letter, Word> images;
  for (Letter x : alphabet) images.emplace(x, Word(1, x));
  return Substitution(std::move(images));
}

Substitution Substitution::from_permutation(const Alphabet& alphabet, const Permutation& p) {
  std::map<Letter, Word> images;
  for (Letter x : alphabet) images.emplace(x, Word(1, p(x)));
  return Substitution(std::move(images));
}

const Word& Substitution::image(Letter x) const {
  const auto it = images_.find(x);
  if (it == images_.end()) {
    throw DomainError(std::string("letter '") + x + "' is outside the alphabet " + alphabet_);
  }
  return it->second;
}

Word Substitution::operator()(std::string_view w) const {
  Word out;
  for (char c : w) out += image(c);
  return out;
}

std::size_t Substitution::total_length() const {
  std::size_t n = 0;
  for (const auto& [x, img] : images_) n += img.size();
  return n;
}

std::size_t Substitution::max_image_length() const {
  std::size_t n = 0;
  for (const auto& [x, img] : images_) n = std::max(n, img.size());
  return n;
}

bool Substitution::is_identity() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](const auto& kv) { return kv.second.size() == 1 && kv.second[0] == kv.first; });
}

Word apply(const Substitution& s, std::string_view w) { return s(w); }

Substitution compose(const Substitution& s, const Substitution& t) {
  if (s.alphabet() != t.alphabet()) {
    throw DomainError("compose: alphabet mismatch (" + s.alphabet() + " vs " + t.alphabet() + ")");
  }
  std::map<Letter, Word> images;
  for (const auto& [x, img] : t.images()) images.emplace(x, s(img));
  return Substitution(std::move(images));
}

Substitution power(const Substitution& s, unsigned n) {
  Substitution out = Substitution::identity(s.alphabet());
  for (unsigned j = 0; j < n; ++j) out = compose(s, out);
  return out;
}

Substitution psi(const Alphabet& alphabet, SpinnedLetter a) {
  if (alphabet.find(a.letter) == Alphabet::npos) {
    throw DomainError(std::string("generator letter ") + a.letter + " outside alphabet " + alphabet);
  }
  std::map<Letter, Word> images;
  for (Letter x : alphabet) {
    if (x == a.letter) {
      images.emplace(x, Word(1, x));
    } else if (a.barred) {
      images.emplace(x, Word{x, a.letter});
    } else {
      images.emplace(x, Word{a.letter, x});
    }
  }
  return Substitution(std::move(images));
}

// ------------------------------------------------------------- GeneratorWord

std::string to_string(const GeneratorWord& g) {
  if (g.empty()) return "_";
  std::string out;
  for (const auto& tok : g) {
    if (!out.empty()) out.push_back(' ');
    if (const auto* l = std::get_if<SpinnedLetter>(&tok)) {
      out += to_string(*l);
    } else {
      out += to_string(std::get<Permutation>(tok));
    }
  }
  return out;
}

GeneratorWord parse_generator_word(std::string_view text) {
  const auto tokens = detail::split_ws(text);
  if (tokens.empty()) throw ParseError("empty generator word (use '_')");
  if (tokens.size() == 1 && tokens[0] == "_") return {};
  GeneratorWord out;
  for (const auto tok : tokens) {
    if (tok.front() == '@') {
      out.emplace_back(parse_permutation(tok));
    } else {
      const SpinnedWord single = parse_spinned_word(tok);
      out.emplace_back(single.front());
    }
  }
  return out;
}

GeneratorWord concat(GeneratorWord a, const GeneratorWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::size_t spinned_token_count(const GeneratorWord& g) {
  return static_cast<std::size_t>(std::count_if(
      g.begin(), g.end(), [](const GeneratorToken& t) { return std::holds_alternative<SpinnedLetter>(t); }));
}

Alphabet letters_of(const GeneratorWord& g) {
  std::string letters;
  for (const auto& tok : g) {
    if (const auto* l = std::get_if<SpinnedLetter>(&tok)) {
      letters.push_back(l->letter);
    } else {
      for (Letter x : std::get<Permutation>(tok).support()) letters.push_back(x);
    }
  }
  return make_alphabet(letters);
}

// ----------------------------------------------------------------- NormalForm

GeneratorWord NormalForm::as_generator_word() const {
  GeneratorWord g(directive.begin(), directive.end());
  g.emplace_back(perm);
  return g;
}

std::string to_string(const NormalForm& nf) {
  if (nf.directive.empty()) return to_string(nf.perm);
  return to_string(nf.directive) + " " + to_string(nf.perm);
}

NormalForm parse_normal_form(std::string_view text) {
  const GeneratorWord g = parse_generator_word(text);
  NormalForm nf;
  bool in_tail = false;
  for (const auto& tok : g) {
    if (const auto* l = std::get_if<SpinnedLetter>(&tok)) {
      if (in_tail) throw ParseError("normal form: permutation must come last in '" + std::string(text) + "'");
      nf.directive.push_back(*l);
    } else {
      in_tail = true;
      nf.perm = nf.perm * std::get<Permutation>(tok);
    }
  }
  if (!is_normal_form(nf.directive)) {
    throw ParseError("normal form: directive word '" + to_string(nf.directive) + "' is not normalized");
  }
  return nf;
}

Substitution mu(const GeneratorWord& g, const Alphabet& alphabet) {
  const Alphabet used = letters_of(g);
  for (Letter x : used) {
    if (alphabet.find(x) == Alphabet::npos) {
      throw DomainError(std::string("generator word uses letter ") + x + " outside alphabet " + alphabet);
    }
  }
  // Applying the composition ψ_{t1} ∘ … ∘ ψ_{tn} to x means feeding x through
  // the tokens from right to left.
  std::map<Letter, Word> images;
  for (Letter x : alphabet) {
    Word w(1, x);
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      Word next;
      if (const auto* l = std::get_if<SpinnedLetter>(&*it)) {
        next.reserve(2 * w.size());
        for (char c : w) {
          if (c == l->letter) {
            next.push_back(c);
          } else if (l->barred) {
            next.push_back(c);
            next.push_back(l->letter);
          } else {
            next.push_back(l->letter);
            next.push_back(c);
          }
        }
      } else {
        const auto& p = std::get<Permutation>(*it);
        next = w;
        for (char& c : next) c = p(c);
      }
      w = std::move(next);
    }
    images.emplace(x, std::move(w));
  }
  return Substitution(std::move(images));
}

Substitution mu(const SpinnedWord& w, const Alphabet& alphabet) {
  return mu(GeneratorWord(w.begin(), w.end()), alphabet);
}

Substitution mu(const NormalForm& nf, const Alphabet& alphabet) {
  return mu(nf.as_generator_word(), alphabet);
}

NormalForm normal_decomposition(const GeneratorWord& g) {
  // Invariant: the processed prefix equals μ(directive) ∘ perm, and
  // perm ∘ ψ_x = ψ_{perm(x)} ∘ perm moves each permutation past a letter.
  NormalForm nf;
  for (const auto& tok : g) {
    if (const auto* l = std::get_if<SpinnedLetter>(&tok)) {
      nf.directive.push_back({nf.perm(l->letter), l->barred});
    } else {
      nf.perm = nf.perm * std::get<Permutation>(tok);
    }
  }
  nf.directive = normalize_oracle(std::move(nf.directive));
  return nf;
}

// ------------------------------------------------------------------ decompose

namespace {

std::optional<Word> unpsi(const Word& w, SpinnedLetter a) {
  Word out;
  out.reserve(w.size());
  std::size_t i = 0;
  while (i < w.size()) {
    const char c = w[i];
    if (!a.barred) {
      if (c != a.letter) return std::nullopt;
      if (i + 1 < w.size() && w[i + 1] != a.letter) {
        out.push_back(w[i + 1]);
        i += 2;
      } else {
        out.push_back(c);
        i += 1;
      }
    } else if (c == a.letter) {
      out.push_back(c);
      i += 1;
    } else {
      if (i + 1 >= w.size() || w[i + 1] != a.letter) return std::nullopt;
      out.push_back(c);
      i += 2;
    }
  }
  return out;
}

class Peeler {
 public:
  explicit Peeler(const Alphabet& alphabet) : alphabet_(alphabet) {}

  std::optional<GeneratorWord> run(const Substitution& s) {
    if (auto p = as_permutation(s)) return GeneratorWord{GeneratorToken(*p)};
    if (dead_.contains(s.images())) return std::nullopt;
    const std::size_t total = s.total_length();
    for (bool barred : {false, true}) {
      for (Letter a : alphabet_) {
        const SpinnedLetter gen{a, barred};
        std::map<Letter, Word> rest;
        bool ok = true;
        for (const auto& [x, img] : s.images()) {
          auto dec = unpsi(img, gen);
          if (!dec) {
            ok = false;
            break;
          }
          rest.emplace(x, std::move(*dec));
        }
        if (!ok) continue;
        Substitution inner(std::move(rest));
        if (inner.total_length() >= total) continue;
        if (auto tail = run(inner)) {
          GeneratorWord g{GeneratorToken(gen)};
          return concat(std::move(g), *tail);
        }
      }
    }
    dead_.insert(s.images());
    return std::nullopt;
  }

 private:
  std::optional<Permutation> as_permutation(const Substitution& s) const {
    std::map<Letter, Letter> mapping;
    for (const auto& [x, img] : s.images()) {
      if (img.size() != 1) return std::nullopt;
      mapping.emplace(x, img[0]);
    }
    std::set<Letter> seen;
    for (const auto& [x, y] : mapping) {
      if (!seen.insert(y).second) return std::nullopt;
    }
    return Permutation(mapping);
  }

  Alphabet alphabet_;
  std::set<std::map<Letter, Word>> dead_;
};

}  // namespace

std::optional<NormalForm> decompose(const Substitution& s) {
  Peeler peeler(s.alphabet());
  const auto g = peeler.run(s);
  if (!g) return std::nullopt;
  NormalForm nf = normal_decomposition(*g);
  if (mu(nf, s.alphabet()) != s) {
    throw InternalError("decompose: recomposition check failed for " + to_string(nf));
  }
  return nf;
}

// ---------------------------------------------------------- dynamics helpers

bool is_primitive(const Substitution& s) {
  const Alphabet& alpha = s.alphabet();
  const std::size_t d = alpha.size();
  if (d == 0) return false;
  using Matrix = std::vector<std::vector<bool>>;
  Matrix m(d, std::vector<bool>(d, false));
  for (std::size_t r = 0; r < d; ++r) {
    for (char c : s.image(alpha[r])) m[r][alpha.find(c)] = true;
  }
  auto positive = [&](const Matrix& a) {
    for (const auto& row : a) {
      if (std::find(row.begin(), row.end(), false) != row.end()) return false;
    }
    return true;
  };
  Matrix acc = m;
  const std::size_t bound = (d - 1) * (d - 1) + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (positive(acc)) return true;
    Matrix next(d, std::vector<bool>(d, false));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t j = 0; j < d; ++j)
        if (acc[r][j])
          for (std::size_t c = 0; c < d; ++c)
            if (m[j][c]) next[r][c] = true;
    acc = std::move(next);
  }
  return false;
}

Word fixed_point_prefix(const Substitution& s, Letter a, std::size_t n) {
  const Word& head = s.image(a);
  if (head.front() != a) {
    throw DomainError(std::string("no fixed point: image of ") + a + " does not start with " + a);
  }
  Word w(1, a);
  while (w.size() < n) {
    Word next = s(w);
    if (next.size() == w.size()) {
      throw DomainError(std::string("no fixed point: iterates of ") + a + " do not grow");
    }
    w = std::move(next);
  }
  w.resize(n);
  return w;
}

std::optional<Conjugator> is_conjugate(const Substitution& s, const Substitution& t) {
  if (s.alphabet() != t.alphabet()) throw DomainError("is_conjugate: alphabet mismatch");
  const std::size_t bound = std::max(s.max_image_length(), t.max_image_length());
  std::set<std::pair<std::size_t, Word>> candidates;
  for (const auto* sub : {&s, &t}) {
    for (const auto& [x, img] : sub->images()) {
      for (std::size_t len = 0; len <= std::min(bound, img.size()); ++len) {
        candidates.emplace(len, img.substr(0, len));
        candidates.emplace(len, img.substr(img.size() - len));
      }
    }
  }
  for (const auto& [len, v] : candidates) {
    bool left = true;
    bool right = true;
    for (Letter x : s.alphabet()) {
      left = left && v + t.image(x) == s.image(x) + v;
      right = right && t.image(x) + v == v + s.image(x);
    }
    if (left) return Conjugator{v, Conjugator::Side::LeftFactor};
    if (right) return Conjugator{v, Conjugator::Side::RightFactor};
  }
  return std::nullopt;
}

// ----------------------------------------------------------------- file format

Substitution parse_substitution(std::string_view text) {
  std::map<Letter, Word> images;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto arrow = line.find("->");
    auto fail = [&](const std::string& why) {
      return ParseError("substitution line " + std::to_string(line_no) + ": " + why);
    };
    if (arrow == std::string_view::npos) throw fail("expected 'x -> w'");
    const auto lhs = detail::trim(line.substr(0, arrow));
    const auto rhs = detail::trim(line.substr(arrow + 2));
    if (lhs.size() != 1 || !is_letter(lhs[0])) throw fail("left-hand side must be one letter");
    if (rhs.empty()) throw fail("empty image");
    for (char c : rhs) {
      if (!is_letter(c)) throw fail(std::string("invalid letter '") + c + "' in image");
    }
    if (!images.emplace(lhs[0], Word(rhs)).second) throw fail("letter defined twice");
  }
  if (images.empty()) throw ParseError("substitution file defines no letter");
  try {
    return Substitution(std::move(images));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(const Substitution& s) {
  std::string out;
  for (const auto& [x, img] : s.images()) {
    out.push_back(x);
    out += " -> ";
    out += img;
    out.push_back('\n');
  }
  return out;
}

}  // namespace episturm
