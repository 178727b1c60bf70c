#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "episturm/arword.hpp"
#include "episturm/error.hpp"
#include "episturm/power.hpp"
#include "episturm/rigidity.hpp"
#include "episturm/section5.hpp"
#include "episturm/subst.hpp"
#include "episturm/words.hpp"

namespace episturm::cli {

namespace {

struct Options {
  std::vector<std::string> positional;
  std::string nf;
  unsigned n = 0;
  unsigned m = 0;
  unsigned max_power = 6;
  std::size_t max_len = 0;
  std::size_t depth = 0;
  std::size_t prefix_len = 0;
  bool trace = false;
  std::string format = "human";
  std::string letter;
  std::string alphabet;
};

class Runner {
 public:
  Runner(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

  int normalize() {
    std::string text;
    for (const auto& p : opt_.positional) text += (text.empty() ? "" : " ") + p;
    if (text.find('@') != std::string::npos) {
      const NormalForm nf = normal_decomposition(parse_generator_word(text));
      emit("normal", to_string(nf));
      return 0;
    }
    const SpinnedWord w = parse_spinned_word(text);
    const auto run = normalize_with(w, [](std::span<const BadFactor>) { return std::size_t{0}; });
    if (machine()) {
      out_ << "input: " << to_string(w) << "\n";
      out_ << "normal: " << to_string(run.result) << "\n";
      out_ << "steps: " << run.steps << "\n";
      return 0;
    }
    if (opt_.trace) out_ << "steps: " << run.steps << "\n";
    out_ << to_string(run.result) << "\n";
    return 0;
  }

  int compose_cmd() {
    if (!opt_.nf.empty()) {
      if (!opt_.positional.empty()) throw ParseError("compose takes either --nf or files, not both");
      const NormalForm nf = parse_normal_form(opt_.nf);
      const Alphabet alpha =
          opt_.alphabet.empty() ? letters_of(nf.as_generator_word()) : make_alphabet(opt_.alphabet);
      out_ << to_string(mu(nf, alpha));
      return 0;
    }
    if (opt_.positional.empty()) throw ParseError("compose needs --nf or at least one substitution file");
    Substitution acc = load(opt_.positional.front());
    for (std::size_t j = 1; j < opt_.positional.size(); ++j) acc = compose(acc, load(opt_.positional[j]));
    out_ << to_string(acc);
    return 0;
  }

  int decompose_cmd() {
    const Substitution s = load(single_file());
    const auto nf = decompose(s);
    if (!nf) return none();
    if (machine()) {
      out_ << "nf: " << to_string(*nf) << "\n";
      out_ << "alphabet: " << s.alphabet() << "\n";
    } else {
      out_ << to_string(*nf) << "\n";
    }
    return 0;
  }

  int power_cmd() {
    if (opt_.n == 0) throw ParseError("power needs -n with a positive exponent");
    NormalForm nf;
    if (!opt_.nf.empty()) {
      if (!opt_.positional.empty()) throw ParseError("power takes either --nf or a file, not both");
      nf = parse_normal_form(opt_.nf);
    } else {
      const auto d = decompose(load(single_file()));
      if (!d) throw DomainError("substitution is not episturmian");
      nf = *d;
    }
    const PowerTrace trace = power_normal_form(nf, opt_.n);
    out_ << (machine() ? render_machine(trace) : render_human(trace, opt_.trace));
    return 0;
  }

  int divide_cmd() {
    const auto [s, t] = two_files();
    const auto rho = divide_left(s, t);
    if (!rho) return none();
    if (machine()) {
      out_ << "quotient: " << to_string(*decompose(*rho)) << "\n";
      return 0;
    }
    if (opt_.trace) out_ << "# quotient: " << to_string(*decompose(*rho)) << "\n";
    out_ << to_string(*rho);
    return 0;
  }

  int common_power_cmd() {
    const auto [s, t] = two_files();
    const auto nm = find_common_power(s, t, opt_.max_power);
    if (!nm) return none();
    if (machine()) {
      out_ << "n: " << nm->first << "\nm: " << nm->second << "\n";
    } else {
      out_ << nm->first << " " << nm->second << "\n";
    }
    return 0;
  }

  int root_cmd() {
    const auto [s, t] = two_files();
    unsigned n = opt_.n;
    unsigned m = opt_.m;
    if (n == 0 || m == 0) {
      if (n != 0 || m != 0) throw ParseError("root needs both -n and -m, or neither");
      const auto nm = find_common_power(s, t, opt_.max_power);
      if (!nm) return none();
      std::tie(n, m) = *nm;
    }
    const RootWitness w = common_root(s, t, n, m);
    if (machine()) {
      out_ << "root: " << to_string(w.root_nf) << "\n";
      out_ << "k: " << w.k << "\nl: " << w.l << "\ndepth: " << w.depth << "\n";
      return 0;
    }
    if (opt_.trace) {
      const bool ordered = n >= m;
      const CaseDiagnosis d = ordered ? diagnose_pair(s, t, n, m) : diagnose_pair(t, s, m, n);
      std::istringstream lines(render(d));
      for (std::string line; std::getline(lines, line);) out_ << "# " << line << "\n";
    }
    out_ << "# witness\n";
    out_ << "# root: " << to_string(w.root_nf) << "\n";
    out_ << "# k: " << w.k << "\n";
    out_ << "# l: " << w.l << "\n";
    out_ << to_string(w.root);
    return 0;
  }

  int fixpoint_cmd() {
    const Substitution s = load(single_file());
    const std::size_t len = opt_.prefix_len == 0 ? 100 : opt_.prefix_len;
    out_ << fixed_point_prefix(s, letter_for(s), len) << "\n";
    return 0;
  }

  int ar_check_cmd() {
    const Substitution s = load(single_file());
    const std::size_t n_max = opt_.max_len == 0 ? 12 : opt_.max_len;
    const ArEvidence e = is_arnoux_rauzy_evidence(s, letter_for(s), n_max);
    if (machine()) {
      auto join = [](const std::vector<std::size_t>& v) {
        std::string r;
        for (auto x : v) r += (r.empty() ? "" : " ") + std::to_string(x);
        return r;
      };
      out_ << "verdict: " << to_string(e.verdict) << "\n";
      out_ << "prefix: " << e.prefix_len << "\n";
      out_ << "complexity: " << join(e.complexity) << "\n";
      out_ << "left_special: " << join(e.left_special) << "\n";
      if (!e.reason.empty()) out_ << "reason: " << e.reason << "\n";
    } else {
      out_ << render(e);
    }
    return e.verdict == Verdict::Consistent ? 0 : 1;
  }

  int stab_probe_cmd() {
    const Substitution s = load(single_file());
    const std::size_t bound = opt_.max_len == 0 ? 10 : opt_.max_len;
    const std::size_t depth = opt_.depth == 0 ? std::max<std::size_t>(200, 4 * bound) : opt_.depth;
    const auto found = stabilizer_probe(s, letter_for(s), bound, depth);
    for (const auto& phi : found) {
      if (machine()) {
        out_ << "morphism:";
        for (const auto& [x, img] : phi.images()) out_ << " " << x << "->" << img;
        out_ << "\n";
      } else {
        out_ << "# total length " << phi.total_length() << "\n" << to_string(phi);
      }
    }
    return 0;
  }

  int section5_cmd() {
    const std::size_t prefix = opt_.prefix_len == 0 ? 16384 : opt_.prefix_len;
    const std::size_t bound = opt_.max_len == 0 ? 40 : opt_.max_len;
    const std::size_t depth = opt_.depth == 0 ? std::max<std::size_t>(512, 8 * bound) : opt_.depth;
    const auto claims = weak::run_all(prefix, bound, depth);
    out_ << weak::render(claims);
    return weak::all_pass(claims) ? 0 : 1;
  }

 private:
  bool machine() const { return opt_.format == "machine"; }

  void emit(const char* key, const std::string& value) {
    if (machine()) {
      out_ << key << ": " << value << "\n";
    } else {
      out_ << value << "\n";
    }
  }

  int none() {
    out_ << "none\n";
    return 1;
  }

  const std::string& single_file() const {
    if (opt_.positional.size() != 1) throw ParseError("expected exactly one substitution file");
    return opt_.positional.front();
  }

  std::pair<Substitution, Substitution> two_files() {
    if (opt_.positional.size() != 2) throw ParseError("expected two substitution files");
    return {load(opt_.positional[0]), load(opt_.positional[1])};
  }

  Substitution load(const std::string& path) {
    std::ostringstream text;
    if (path == "-") {
      text << in_.rdbuf();
    } else {
      std::ifstream file(path);
      if (!file) throw ParseError("cannot read '" + path + "'");
      text << file.rdbuf();
    }
    return parse_substitution(text.str());
  }

  Letter letter_for(const Substitution& s) const {
    if (opt_.letter.empty()) return s.alphabet().front();
    if (opt_.letter.size() != 1 || !is_letter(opt_.letter[0])) {
      throw ParseError("--letter expects a single letter");
    }
    return opt_.letter[0];
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Episturmian substitutions: normal forms, powers and rigidity checks", "episturm"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
    sub->add_flag("--trace", opt.trace, "Print intermediate steps");
  };
  auto files = [&](CLI::App* sub, const char* what) { sub->add_option("files", opt.positional, what); };

  auto* normalize = app.add_subcommand("normalize", "Normal form of a spinned word or generator word");
  normalize->add_option("word", opt.positional, "Tokens such as a b' c, optionally with @(ab)")->required();
  add_format(normalize);

  auto* compose = app.add_subcommand("compose", "Compose substitution files, or expand a normal form");
  files(compose, "Substitution files, composed left to right as s(t(x))");
  compose->add_option("--nf", opt.nf, "Normal form to expand");
  compose->add_option("--alphabet", opt.alphabet, "Alphabet for --nf (default: letters it mentions)");
  add_format(compose);

  auto* decomp = app.add_subcommand("decompose", "Normal form of an episturmian substitution");
  files(decomp, "Substitution file");
  add_format(decomp);

  auto* power = app.add_subcommand("power", "Normal form of a power");
  files(power, "Substitution file (alternative to --nf)");
  power->add_option("--nf", opt.nf, "Normal form of the base");
  power->add_option("-n", opt.n, "Exponent");
  add_format(power);

  auto* divide = app.add_subcommand("divide", "Find r with t = s(r(x))");
  files(divide, "Files for s and t");
  add_format(divide);

  auto* root = app.add_subcommand("root", "Common root of two substitutions with a common power");
  files(root, "Files for s and t");
  root->add_option("-n", opt.n, "Exponent of s");
  root->add_option("-m", opt.m, "Exponent of t");
  root->add_option("--max-power", opt.max_power, "Search bound when -n/-m are omitted");
  add_format(root);

  auto* cpower = app.add_subcommand("common-power", "Smallest n, m with s^n = t^m");
  files(cpower, "Files for s and t");
  cpower->add_option("--max-power", opt.max_power, "Largest n tried");
  add_format(cpower);

  auto* fixpoint = app.add_subcommand("fixpoint", "Prefix of a fixed point");
  files(fixpoint, "Substitution file");
  fixpoint->add_option("--letter", opt.letter, "Starting letter");
  fixpoint->add_option("--prefix-len", opt.prefix_len, "Prefix length (default 100)");
  add_format(fixpoint);

  auto* ar = app.add_subcommand("ar-check", "Arnoux-Rauzy evidence for a fixed point");
  files(ar, "Substitution file");
  ar->add_option("--letter", opt.letter, "Starting letter");
  ar->add_option("--max-len", opt.max_len, "Largest factor length (default 12)");
  add_format(ar);

  auto* stab = app.add_subcommand("stab-probe", "Morphisms fixing a fixed point, up to a size bound");
  files(stab, "Substitution file");
  stab->add_option("--letter", opt.letter, "Starting letter");
  stab->add_option("--max-len", opt.max_len, "Bound on total image length (default 10)");
  stab->add_option("--depth", opt.depth, "Checked prefix length (default max(200, 4x bound))");
  add_format(stab);

  auto* s5 = app.add_subcommand("section5", "Checks on the two-letter weak rigidity example");
  s5->add_option("--prefix-len", opt.prefix_len, "Scanned prefix (default 16384)");
  s5->add_option("--max-len", opt.max_len, "Stabilizer bound (default 40)");
  s5->add_option("--depth", opt.depth, "Stabilizer check depth (default max(512, 8x bound))");
  add_format(s5);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  Runner r(opt, in, out);
  try {
    if (*normalize) return r.normalize();
    if (*compose) return r.compose_cmd();
    if (*decomp) return r.decompose_cmd();
    if (*power) return r.power_cmd();
    if (*divide) return r.divide_cmd();
    if (*root) return r.root_cmd();
    if (*cpower) return r.common_power_cmd();
    if (*fixpoint) return r.fixpoint_cmd();
    if (*ar) return r.ar_check_cmd();
    if (*stab) return r.stab_probe_cmd();
    if (*s5) return r.section5_cmd();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace episturm::cli
