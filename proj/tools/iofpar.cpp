// Command-line front end: enumerate | count | normalize | canonical |
// membership | verify.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include <iofpar/io.hpp>
#include <iofpar/iofpar.hpp>

using namespace iofpar;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_n_from_env() {
  if (const char* s = std::getenv("IOFPAR_MAX_N")) {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      throw UsageError(std::string("IOFPAR_MAX_N is not an integer: ") + s);
    }
  }
  return kDefaultMaxN;
}

void check_n(int n, int max_n) {
  if (n < 1)
    throw UsageError("--n must be positive");
  if (n > max_n)
    throw UsageError("--n " + std::to_string(n) + " exceeds the bound " + std::to_string(max_n) +
                     " (raise it with IOFPAR_MAX_N)");
}

Word read_word(const std::string& text, int n) {
  Word w;
  try {
    w = parse_word(text);
  } catch (const StructureError& e) {
    throw UsageError(std::string("--word: ") + e.what());
  }
  for (const auto& l : w)
    if (!letter_valid(l, n))
      throw UsageError("--word: letter " + l.to_string() + " is not in X_" + std::to_string(n));
  return w;
}

PartialInjection read_map(const std::string& text, int n) {
  PartialInjection f;
  try {
    f = partial_injection_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw UsageError(std::string("--map: ") + e.what());
  } catch (const Error& e) {
    throw UsageError(std::string("--map: ") + e.what());
  }
  if (n != 0 && f.n() != n)
    throw UsageError("--map has n=" + std::to_string(f.n()) + " but --n is " + std::to_string(n));
  return f;
}

// Writes to --out when given, otherwise to stdout.
class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_)
        throw UsageError("--out: cannot open " + path);
    }
  }
  std::ostream& operator()() { return file_ ? *file_ : std::cout; }

private:
  std::unique_ptr<std::ofstream> file_;
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s)
    q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order-, fence- and parity-preserving partial injections: enumeration, normal forms, verification"};
  app.require_subcommand(1);

  int n = 0;
  std::string out_path;
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "size of the ambient set {1..n}")->required(); };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list the monoid (JSON lines) or W_n (one word per line)");
  add_n(enumerate_cmd);
  std::string what = "monoid";
  enumerate_cmd->add_option("--what", what, "monoid | wn")->check(CLI::IsMember({"monoid", "wn"}));
  enumerate_cmd->add_option("--out", out_path, "output file");

  auto* count_cmd = app.add_subcommand("count", "print n, |IOF_n^par|, |W_n| and whether they agree (CSV)");
  add_n(count_cmd);

  auto* normalize_cmd = app.add_subcommand("normalize", "rewrite a word to its normal form");
  add_n(normalize_cmd);
  std::string word_text;
  bool trace = false, as_json = false;
  std::size_t budget = 0;
  normalize_cmd->add_option("--word", word_text, "letters such as \"u1 x3 v2\" or blocks \"u1.2\"")->required();
  normalize_cmd->add_flag("--trace", trace, "print every rewrite step");
  normalize_cmd->add_flag("--json", as_json, "print the result as JSON");
  normalize_cmd->add_option("--budget", budget, "step limit (default from word length and n)");

  auto* canonical_cmd = app.add_subcommand("canonical", "canonical word of a map, or the map of a normal form");
  add_n(canonical_cmd);
  std::string map_text;
  bool inverse_mode = false;
  canonical_cmd->add_option("--map", map_text, R"(map as JSON, e.g. {"n":8,"map":[[1,5],[7,7],[8,8]]})");
  canonical_cmd->add_flag("--inverse", inverse_mode, "read --word (a normal form) and print its map");
  canonical_cmd->add_option("--word", word_text, "normal form word for --inverse");

  auto* membership_cmd = app.add_subcommand("membership", "test a map for membership, or a word for W_n");
  add_n(membership_cmd);
  membership_cmd->add_option("--map", map_text, "map as JSON");
  membership_cmd->add_option("--word", word_text, "word to test for membership in W_n");

  auto* verify_cmd = app.add_subcommand("verify", "check relations, rewriting, bijection and generation");
  add_n(verify_cmd);
  bool relations_only = false;
  std::string json_path;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  verify_cmd->add_flag("--relations", relations_only, "only check the relation instances, as CSV");
  verify_cmd->add_option("--json", json_path, "write the full report as JSON to this file");
  verify_cmd->add_option("--seed", seed, "seed for the random word sample");
  verify_cmd->add_option("--budget", samples, "number of random words to normalize");
  verify_cmd->add_option("--out", out_path, "output file for the text or CSV report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const int max_n = max_n_from_env();
    check_n(n, max_n);

    if (*enumerate_cmd) {
      Output out(out_path);
      if (what == "monoid") {
        for (const auto& f : enumerate_monoid(n, max_n))
          out() << to_json(f).dump() << '\n';
      } else {
        for (const auto& nf : enumerate_Wn(n, max_n))
          out() << to_string(render(nf)) << '\n';
      }
      return kOk;
    }

    if (*count_cmd) {
      const auto m = enumerate_monoid(n, max_n).size();
      const auto w = count_Wn(n, max_n);
      std::cout << "n,iof,wn,equal\n" << n << ',' << m << ',' << w << ',' << (m == w ? "true" : "false") << '\n';
      return m == w ? kOk : kFailed;
    }

    if (*normalize_cmd) {
      const Word w = read_word(word_text, n);
      Rewriter rw(n);
      NormalizeResult res;
      try {
        res = rw.normalize(w, budget ? std::optional<std::size_t>(budget) : std::nullopt);
      } catch (const NormalizationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (trace)
          for (const auto& s : e.trace().steps)
            std::cerr << s.to_string() << '\n';
        return kFailed;
      }
      if (as_json) {
        json j = to_json(res.nf);
        j["input"] = to_string(w);
        j["map"] = to_json(evaluate(w, n));
        if (trace) {
          json steps = json::array();
          for (const auto& s : res.trace.steps)
            steps.push_back({{"family", s.family},
                             {"params", s.params},
                             {"reversed", s.reversed},
                             {"phase", s.phase},
                             {"position", s.position},
                             {"removed", to_string(s.removed)},
                             {"inserted", to_string(s.inserted)},
                             {"after", to_string(s.after)}});
          j["trace"] = steps;
        }
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << to_string(res.word) << '\n';
        if (trace)
          for (const auto& s : res.trace.steps)
            std::cout << s.to_string() << '\n';
      }
      return kOk;
    }

    if (*canonical_cmd) {
      if (inverse_mode) {
        if (word_text.empty() && !canonical_cmd->count("--word"))
          throw UsageError("--inverse needs --word");
        const Word w = read_word(word_text, n);
        auto nf = recognize(w, n);
        if (!nf) {
          std::cerr << "error: " << to_string(w) << " is not in W_" << n << '\n';
          return kFailed;
        }
        std::cout << to_json(reconstruct(*nf, n)).dump() << '\n';
        return kOk;
      }
      if (map_text.empty())
        throw UsageError("canonical needs --map (or --inverse --word)");
      const auto f = read_map(map_text, n);
      if (!is_member_prop1(f).is_member) {
        std::cerr << "error: map is not a member (" << is_member_prop1(f).describe() << ")\n";
        return kFailed;
      }
      std::cout << to_string(render(normal_form_of(f))) << '\n';
      return kOk;
    }

    if (*membership_cmd) {
      if (!map_text.empty()) {
        const auto f = read_map(map_text, n);
        const auto r = is_member_prop1(f);
        std::cout << r.describe() << '\n';
        return r.is_member ? kOk : kFailed;
      }
      if (!membership_cmd->count("--word"))
        throw UsageError("membership needs --map or --word");
      const Word w = read_word(word_text, n);
      auto nf = recognize(w, n);
      std::cout << (nf ? "in W_" + std::to_string(n) + ": " + nf->to_string() : "not in W_" + std::to_string(n))
                << '\n';
      return nf ? kOk : kFailed;
    }

    if (*verify_cmd) {
      Output out(out_path);
      if (relations_only) {
        bool all_ok = true;
        out() << "family,params,ok,lhs,rhs,lhs_eval,rhs_eval\n";
        for (const auto& r : instantiate_relations(n)) {
          const auto c = verify_relation(r, n);
          all_ok = all_ok && c.ok;
          out() << csv_quote(r.family) << ',' << csv_quote(r.params) << ',' << (c.ok ? "true" : "false") << ','
                << csv_quote(to_string(r.lhs)) << ',' << csv_quote(to_string(r.rhs)) << ','
                << (c.ok ? "" : csv_quote(to_json(c.lhs_eval).dump())) << ','
                << (c.ok ? "" : csv_quote(to_json(c.rhs_eval).dump())) << '\n';
        }
        return all_ok ? kOk : kFailed;
      }
      VerifyOptions opt;
      opt.seed = seed;
      opt.random_words = samples;
      opt.max_n = max_n;
      const auto rep = verify_presentation(n, opt);
      if (!json_path.empty()) {
        std::ofstream jf(json_path);
        if (!jf)
          throw UsageError("--json: cannot open " + json_path);
        jf << to_json(rep).dump(2) << '\n';
      }
      out() << "n: " << rep.n << '\n'
            << "relations: " << rep.relations_checked << " checked, " << rep.relations_failed << " failed\n";
      for (const auto& e : rep.errata)
        out() << "  errata: " << e.instance.label() << ": " << to_string(e.instance.lhs) << " = "
              << to_string(e.instance.rhs) << " (" << e.check.lhs_eval.to_string() << " vs "
              << e.check.rhs_eval.to_string() << ")\n";
      out() << "words: " << rep.words_normalized << " of " << rep.words_sampled << " normalized\n";
      for (const auto& f : rep.word_failures)
        out() << "  failure: " << to_string(f.word) << ": " << f.reason << '\n';
      out() << "monoid size: " << rep.monoid_size << ", closure size: " << rep.closure_size
            << ", |W_n|: " << rep.wn_size << '\n'
            << "bijection: " << (rep.bijection_ok ? "ok" : "FAILED") << '\n'
            << "generation: " << (rep.generation_ok ? "ok" : "FAILED") << '\n'
            << "presentation verified: " << (rep.presentation_verified() ? "yes" : "no") << '\n';
      return rep.presentation_verified() ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
