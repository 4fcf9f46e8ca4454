// fpres -- command-line workbench for finitely presented monoids, groups
// and inverse presentations: families, rewriting, automata, presentation
// transformations, the two-relator encoding and the verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fpres/encoder.hpp"
#include "fpres/families.hpp"
#include "fpres/fsa.hpp"
#include "fpres/hnn.hpp"
#include "fpres/presentation.hpp"
#include "fpres/rewrite.hpp"
#include "fpres/transform.hpp"
#include "fpres/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
}

// "fcrs:m,n" or a rewriting-system file path.
fpres::RewriteSystem load_system(const std::string& spec) {
  if (spec.rfind("fcrs:", 0) == 0) {
    std::istringstream in(spec.substr(5));
    int m = 0, n = 0;
    char comma = 0;
    if (!(in >> m >> comma >> n) || comma != ',')
      throw std::runtime_error("expected fcrs:m,n, got '" + spec + "'");
    return fpres::fcrs(m, n);
  }
  return fpres::parse_rewrite_system(slurp(spec));
}

int run_reports(const std::vector<fpres::VerificationReport>& reports,
                const std::string& out_path) {
  std::string text;
  for (const auto& r : reports) text += r.to_text();
  emit(text, out_path);
  double elapsed = 0;
  for (const auto& r : reports) elapsed += r.elapsed.count();
  std::cerr << "elapsed: " << elapsed << " s\n";
  return fpres::combined_exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finitely presented monoids, groups and inverse presentations"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  int m = 2, n = 2, ball = 4, maxlen = 3, phi_count = 50;
  std::size_t depth = 16, budget = 1'000'000;
  std::string out_path, file_path, word_text, system_spec, input_path, name;

  int exit_code = 0;
  auto deferred = [&exit_code](auto&& fn) {
    return [&exit_code, fn]() { exit_code = fn(); };
  };

  // families make <name> --m --n
  auto* families = app.add_subcommand("families", "parametric presentation families");
  auto* fam_make = families->add_subcommand("make", "construct a family member");
  fam_make->add_option("name", name, "family name")
      ->required()
      ->check(CLI::IsMember(fpres::family_names()));
  fam_make->add_option("--m", m, "first parameter");
  fam_make->add_option("--n", n, "second parameter");
  fam_make->add_option("--out", out_path, "also write to this file");
  fam_make->callback(deferred([&]() {
    emit(fpres::serialize_presentation(
             fpres::make_family(fpres::family_from_name(name), m, n)),
         out_path);
    return 0;
  }));

  // verify <suite>
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  auto add_verify = [&](const std::string& suite_name, const std::string& help,
                        auto runner) {
    auto* cmd = verify->add_subcommand(suite_name, help);
    cmd->add_option("--m", m, "first parameter");
    cmd->add_option("--n", n, "second parameter");
    cmd->add_option("--ball", ball, "ball radius");
    cmd->add_option("--depth", depth, "search depth");
    cmd->add_option("--budget", budget, "rewrite step budget");
    cmd->add_option("--maxlen", maxlen, "maximum word length");
    cmd->add_option("--out", out_path, "also write the report to this file");
    cmd->callback(deferred([&, runner]() {
      return run_reports(runner(), out_path);
    }));
    return cmd;
  };
  using Reports = std::vector<fpres::VerificationReport>;
  add_verify("fcrs", "completion and confluence of the closed-form system", [&]() {
    return Reports{fpres::verify_fcrs(m, n, budget)};
  });
  add_verify("p4-trace", "trace-monoid witnesses and ball census", [&]() {
    return Reports{fpres::verify_p4_trace(m, n, ball)};
  });
  add_verify("p4-group-abelian", "abelianization checks", [&]() {
    return Reports{fpres::verify_p4_group_abelian(n)};
  });
  add_verify("l-class", "L-class witnesses with certificates", [&]() {
    return Reports{fpres::verify_l_class(m, n, maxlen, depth)};
  });
  add_verify("rs-subgroup", "kernel presentation and retraction pair", [&]() {
    return Reports{fpres::verify_rs_subgroup(m, n)};
  });
  add_verify("hnn-trace", "trace submonoid of the HNN extension", [&]() {
    return Reports{fpres::verify_trace_submonoid(ball)};
  });
  add_verify("phi", "automaton phi against the word formula", [&]() {
    return Reports{fpres::verify_phi(phi_count)};
  });
  add_verify("omega", "the gadget language sample", [&]() {
    return Reports{fpres::verify_omega()};
  });
  add_verify("encoder", "the two-relator encoding on the toy input", [&]() {
    return Reports{fpres::verify_encoder()};
  });
  add_verify("roundtrip", "file-format round trips", [&]() {
    return Reports{fpres::verify_roundtrip()};
  });
  add_verify("paper", "every suite at desk-scale defaults", [&]() {
    fpres::SuiteParams params;
    params.ball = ball;
    params.lclass_maxlen = maxlen;
    params.depth = depth;
    params.budget = budget;
    params.phi_automata = phi_count;
    return fpres::verify_all(params);
  });

  // nf --system ... --word ...
  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("--system", system_spec, "fcrs:m,n or a rewriting-system file")->required();
  nf->add_option("--word", word_text, "input word")->required();
  nf->add_option("--budget", budget, "rewrite step budget");
  nf->callback(deferred([&]() {
    fpres::RewriteSystem rs = load_system(system_spec);
    fpres::Word w = fpres::parse_word_compact(word_text, rs.alphabet);
    std::cout << fpres::to_string(fpres::normal_form(rs, w, budget)) << "\n";
    return 0;
  }));

  // abelianize --file ...
  auto* abel = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  abel->add_option("--file", file_path, "presentation file")->required();
  abel->callback(deferred([&]() {
    auto inv = fpres::abelianization(fpres::parse_presentation(slurp(file_path)));
    std::string torsion = "[";
    for (std::size_t i = 0; i < inv.torsion.size(); ++i) {
      if (i) torsion += ", ";
      torsion += inv.torsion[i].str();
    }
    torsion += "]";
    std::cout << "free_rank " << inv.free_rank << ", torsion " << torsion << "\n";
    return 0;
  }));

  // encode construction51 --input ...
  auto* encode = app.add_subcommand("encode", "the two-relator encoding");
  auto* enc51 = encode->add_subcommand("construction51", "run the encoding");
  enc51->add_option("--input", input_path, "presentation plus x:/xbar: lines")->required();
  enc51->add_option("--out", out_path, "output file prefix (default: input path)");
  enc51->add_option("--depth", depth, "witness search depth");
  enc51->callback(deferred([&]() {
    fpres::EncodingFile file = fpres::parse_encoding_input(slurp(input_path));
    fpres::WitnessBound bound;
    bound.max_word_length = depth;
    for (std::size_t i = 0; i < file.input.x.size(); ++i) {
      if (file.witness_given[i]) continue;
      auto found = fpres::find_inverse_witness(file.input.alphabet, file.input.q,
                                               file.input.x[i], bound);
      if (!found)
        throw std::runtime_error("no inverse witness for " +
                                 fpres::to_string(file.input.x[i]) + " within depth " +
                                 std::to_string(depth));
      file.input.x_inverse[i] = *found;
    }
    fpres::EncodingOutput out = fpres::construction51(file.input, bound);
    const std::string prefix = out_path.empty() ? input_path : out_path;
    std::ofstream h(prefix + ".H.pres"), mfile(prefix + ".M.pres"),
        cert(prefix + ".cert.txt");
    h << fpres::serialize_presentation(out.h_group);
    mfile << fpres::serialize_presentation(out.m_inverse);
    for (std::size_t i = 0; i < out.certificates.size(); ++i)
      cert << "w" << (i + 1) << ": " << out.certificates[i] << "\n";
    std::cout << "r = " << fpres::to_string(out.r) << "\n"
              << "s = " << fpres::to_string(out.s) << "\n"
              << "wrote " << prefix << ".H.pres, " << prefix << ".M.pres, " << prefix
              << ".cert.txt\n";
    return 0;
  }));

  // automata <op>
  auto* automata = app.add_subcommand("automata", "automaton operations");
  automata->require_subcommand(1);
  auto* fsa_omega = automata->add_subcommand("omega", "emit the gadget language automaton");
  fsa_omega->add_option("--out", out_path, "also write to this file");
  fsa_omega->callback(deferred([&]() {
    emit(fpres::serialize_fsa(fpres::omega_language()), out_path);
    return 0;
  }));
  auto* fsa_accepts = automata->add_subcommand("accepts", "test exact membership");
  fsa_accepts->add_option("--file", file_path, "automaton file")->required();
  fsa_accepts->add_option("--word", word_text, "word to test")->required();
  fsa_accepts->callback(deferred([&]() {
    fpres::Fsa f = fpres::parse_fsa(slurp(file_path));
    std::vector<std::string> names;
    for (const auto& s : f.alphabet) names.push_back(s.name);
    bool ok = fpres::accepts(f, fpres::parse_word_compact(word_text,
                                                          fpres::Alphabet(names)));
    std::cout << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
  }));
  auto* fsa_member = automata->add_subcommand("member", "rational membership");
  fsa_member->add_option("--file", file_path, "automaton file")->required();
  fsa_member->add_option("--word", word_text, "word to test")->required();
  fsa_member->add_option("--system", system_spec,
                         "certified system for modulo mode (fcrs:m,n or file)");
  fsa_member->add_option("--depth", depth, "exploration depth in modulo mode");
  fsa_member->callback(deferred([&]() {
    fpres::Fsa f = fpres::parse_fsa(slurp(file_path));
    fpres::MembershipResult res;
    if (system_spec.empty()) {
      std::vector<std::string> names;
      for (const auto& s : f.alphabet) names.push_back(s.name);
      res = fpres::rational_membership(
          f, fpres::parse_word_compact(word_text, fpres::Alphabet(names)));
    } else {
      fpres::RewriteSystem rs = load_system(system_spec);
      auto cs = fpres::CompleteSystem::certify(rs, budget);
      if (!cs) throw std::runtime_error("system failed local-confluence certification");
      res = fpres::rational_membership(
          f, fpres::parse_word_compact(word_text, rs.alphabet), *cs, depth);
    }
    switch (res.verdict) {
      case fpres::Membership::yes:
        std::cout << "yes, witness " << fpres::to_string(*res.witness) << "\n";
        return 0;
      case fpres::Membership::no:
        std::cout << "no\n";
        return 1;
      case fpres::Membership::unknown:
        std::cout << "unknown\n";
        return 2;
    }
    return 2;
  }));
  auto add_binary =
      [&](const std::string& op_name, const std::string& help,
          fpres::Fsa (*op)(const fpres::Fsa&, const fpres::Fsa&)) {
        auto* cmd = automata->add_subcommand(op_name, help);
        auto first = std::make_shared<std::string>();
        auto second = std::make_shared<std::string>();
        cmd->add_option("first", *first, "left automaton file")->required();
        cmd->add_option("second", *second, "right automaton file")->required();
        cmd->add_option("--out", out_path, "also write to this file");
        cmd->callback(deferred([&, first, second, op]() {
          emit(fpres::serialize_fsa(
                   op(fpres::parse_fsa(slurp(*first)), fpres::parse_fsa(slurp(*second)))),
               out_path);
          return 0;
        }));
      };
  add_binary("union", "union of two languages", fpres::union_of);
  add_binary("concat", "concatenation of two languages", fpres::concat);
  auto add_unary = [&](const std::string& op_name, const std::string& help,
                       fpres::Fsa (*op)(const fpres::Fsa&)) {
    auto* cmd = automata->add_subcommand(op_name, help);
    cmd->add_option("--file", file_path, "automaton file")->required();
    cmd->add_option("--out", out_path, "also write to this file");
    cmd->callback(deferred([&, op]() {
      emit(fpres::serialize_fsa(op(fpres::parse_fsa(slurp(file_path)))), out_path);
      return 0;
    }));
  };
  add_unary("star", "Kleene hull", fpres::star);
  add_unary("reverse", "language reversal", fpres::reverse);
  auto* fsa_dot = automata->add_subcommand("dot", "emit DOT graph text");
  fsa_dot->add_option("--file", file_path, "automaton file")->required();
  fsa_dot->add_option("--out", out_path, "also write to this file");
  fsa_dot->callback(deferred([&]() {
    emit(fpres::to_dot(fpres::parse_fsa(slurp(file_path))), out_path);
    return 0;
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
