// vbraid: command-line front end for virtual braid group computations.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "vbraid/gpv.hpp"
#include "vbraid/presentation.hpp"
#include "vbraid/projections.hpp"
#include "vbraid/quotients.hpp"
#include "vbraid/rewrite.hpp"
#include "vbraid/transversal.hpp"
#include "vbraid/verify.hpp"

using namespace vbraid;

namespace {

std::optional<std::string> opt_dir(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

RewriteTarget parse_target(const std::string& s) {
  if (s == "h" || s == "H") return RewriteTarget::H;
  if (s == "vp" || s == "VP") return RewriteTarget::VP;
  throw CLI::ValidationError("--target must be h or vp");
}

int run(int argc, char** argv) {
  CLI::App app{"virtual braid group toolkit: projections, Reidemeister-Schreier "
               "rewriting, nilpotent quotients, and universal GPV invariants"};
  app.require_subcommand(1);

  int n = 2, degree = 1, depth = 2;
  std::uint64_t seed = 0;
  std::string word_text, word_text2, map_name, target_name, group_name, suite_name, cache_dir;

  auto* project = app.add_subcommand("project", "evaluate mu/nu/chi/eps on a word");
  project->add_option("--map", map_name, "one of mu, nu, chi, eps")->required();
  project->add_option("--n", n, "strand count")->required();
  project->add_option("word", word_text, "input word");

  auto* member = app.add_subcommand("member", "H/VP/EP membership flags");
  member->add_option("--n", n)->required();
  member->add_option("word", word_text);

  auto* rewrite_cmd = app.add_subcommand("rewrite", "Reidemeister-Schreier rewriting");
  rewrite_cmd->add_option("--target", target_name, "h or vp")->required();
  rewrite_cmd->add_option("--n", n)->required();
  rewrite_cmd->add_option("word", word_text);

  auto* decompose = app.add_subcommand("decompose", "semidirect decomposition (omega or the H_n variant)");
  decompose->add_option("--target", target_name, "vp (omega) or h")->required();
  decompose->add_option("--n", n)->required();
  decompose->add_option("word", word_text);

  auto* nf2 = app.add_subcommand("nf2", "exact normal form in VB_2");
  nf2->add_option("word", word_text);

  auto* present = app.add_subcommand("presentation", "print a presentation");
  present->add_option("--group", group_name, "vb, vp, h, m or s")->required();
  present->add_option("--n", n)->required();

  auto* abelianize = app.add_subcommand("abelianize", "Gamma_1/Gamma_2 invariants");
  abelianize->add_option("--group", group_name)->required();
  abelianize->add_option("--n", n)->required();

  auto* lcs = app.add_subcommand("lcs", "lower central series section Gamma_2/Gamma_3");
  lcs->add_option("--group", group_name)->required();
  lcs->add_option("--n", n)->required();
  lcs->add_option("--depth", depth, "section depth (only 2 is supported)");

  auto* gpv = app.add_subcommand("gpv", "universal GPV coordinates");
  gpv->add_option("--n", n)->required();
  gpv->add_option("--degree", degree)->required();
  gpv->add_option("--cache", cache_dir, "basis cache directory");
  gpv->add_option("word", word_text);

  auto* dist = app.add_subcommand("distinguish", "least degree separating two words");
  dist->add_option("--n", n)->required();
  dist->add_option("--degree", degree)->required();
  dist->add_option("--cache", cache_dir);
  dist->add_option("word1", word_text)->required();
  dist->add_option("word2", word_text2)->required();

  auto* jmember = app.add_subcommand("jmember", "membership of a combination in J^d");
  jmember->add_option("--n", n)->required();
  jmember->add_option("--degree", degree)->required();
  jmember->add_option("--cache", cache_dir);
  jmember->add_option("combination", word_text)->required();

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", suite_name,
                     "telescoping, equivariance, lemma5, relations or formula-ranks")
      ->required();
  verify->add_option("--seed", seed, "RNG seed (default 0)");
  verify->add_option("--cache", cache_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*project) {
      if (map_name == "mu")
        std::cout << mu(parse_word(word_text, n)).cycle_string() << "\n";
      else if (map_name == "nu")
        std::cout << nu(parse_word(word_text, n)).cycle_string() << "\n";
      else if (map_name == "chi")
        std::cout << chi(parse_word(word_text, n)).str() << "\n";
      else if (map_name == "eps")
        std::cout << epsilon(parse_alphabet_word(word_text, n)).cycle_string() << "\n";
      else
        throw CLI::ValidationError("--map must be mu, nu, chi or eps");
    } else if (*member) {
      MembershipFlags f = membership(parse_word(word_text, n));
      std::cout << "in_H: " << (f.in_H ? "yes" : "no") << "\n"
                << "in_VP: " << (f.in_VP ? "yes" : "no") << "\n"
                << "in_EP: " << (f.in_EP ? "yes" : "no") << "\n";
    } else if (*rewrite_cmd) {
      std::cout << rewrite(parse_word(word_text, n), parse_target(target_name)).str() << "\n";
    } else if (*decompose) {
      Transversal tr(n);
      BraidWord w = parse_word(word_text, n);
      SemidirectElt e =
          parse_target(target_name) == RewriteTarget::VP ? omega(w, tr) : h_decompose(w, tr);
      std::cout << "pure: " << e.pure.str() << "\n"
                << "perm: " << e.perm.cycle_string() << "\n";
    } else if (*nf2) {
      std::cout << vb2_normal_form(parse_word(word_text, 2)).str() << "\n";
    } else if (*present) {
      std::cout << build_presentation(family_from_string(group_name), n).str();
    } else if (*abelianize) {
      std::cout << abelianization(build_presentation(family_from_string(group_name), n)).str()
                << "\n";
    } else if (*lcs) {
      if (depth != 2) throw std::invalid_argument("only --depth 2 is supported");
      std::cout << gamma2_mod_gamma3(build_presentation(family_from_string(group_name), n)).str()
                << "\n";
    } else if (*gpv) {
      GpvContext ctx(n, degree, opt_dir(cache_dir));
      GPVCoordinates g = universal_gpv(parse_word(word_text, n), ctx);
      std::cout << "perm: " << g.perm.cycle_string() << "\n"
                << "coords: " << g.coords_string() << "\n";
    } else if (*dist) {
      std::cout << distinguish(parse_word(word_text, n), parse_word(word_text2, n), degree,
                               opt_dir(cache_dir))
                       .str()
                << "\n";
    } else if (*jmember) {
      bool in = jpower_membership(parse_combination(word_text, n), degree, opt_dir(cache_dir));
      std::cout << (in ? "true" : "false") << "\n";
    } else if (*verify) {
      SuiteResult res;
      if (suite_name == "telescoping")
        res = verify_telescoping(seed);
      else if (suite_name == "equivariance")
        res = verify_equivariance(seed);
      else if (suite_name == "lemma5")
        res = verify_lemma5(opt_dir(cache_dir));
      else if (suite_name == "relations")
        res = verify_relations();
      else if (suite_name == "formula-ranks")
        res = verify_formula_ranks();
      else
        throw CLI::ValidationError("unknown suite '" + suite_name + "'");
      for (const std::string& line : res.lines) std::cout << line << "\n";
      std::cout << "suite " << res.name << ": " << (res.pass ? "PASS" : "FAIL") << "\n";
      if (!res.pass) return 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
