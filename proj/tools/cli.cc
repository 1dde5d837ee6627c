// Copyright 2026 The dbsyn Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "dbsyn/equational.h"
#include "dbsyn/gen.h"
#include "dbsyn/model.h"
#include "dbsyn/surface.h"
#include "dbsyn/typed.h"
#include "dbsyn/typed_named.h"

namespace dbsyn {

namespace {

// Failure that maps straight to an exit code, with a message for stderr.
struct Exit {
  int code;
  std::string message;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SignatureFile load_signatures(const std::string& spec) {
  if (auto text = read_file(spec)) return parse_signature_file(*text);
  SignatureFile f;
  if (spec == "lambda") {
    f.untyped.push_back(lambda_signature());
  } else if (spec == "stlc") {
    f.typed.push_back(stlc_schema({"a", "b"}));
  } else {
    throw Exit{kExitInvalid, "cannot read signature file '" + spec + "'"};
  }
  return f;
}

void require_valid(const Diagnostics& ds) {
  if (!ds.empty()) throw Error(ds);
}

BindingSignature load_untyped(const std::string& spec) {
  SignatureFile f = load_signatures(spec);
  if (f.untyped.empty()) throw Exit{kExitInvalid, "'" + spec + "' has no untyped signature"};
  require_valid(validate_signature(f.untyped.front()));
  return f.untyped.front();
}

TypedSignatureSchema load_typed(const std::string& spec) {
  SignatureFile f = load_signatures(spec);
  if (f.typed.empty()) throw Exit{kExitInvalid, "'" + spec + "' has no typed signature"};
  require_valid(validate_signature(f.typed.front()));
  return f.typed.front();
}

EquationalTheory load_theory(const std::string& spec) {
  EquationalTheory th;
  if (auto text = read_file(spec)) {
    th = parse_theory(*text);
  } else if (spec == "beta") {
    th = beta_theory();
  } else if (spec == "betaeta") {
    th = beta_eta_theory();
  } else {
    throw Exit{kExitInvalid, "cannot read theory file '" + spec + "'"};
  }
  require_valid(validate_theory(th));
  return th;
}

std::string show(const Term& t, const std::string& format) {
  return format == "json" ? print_term_json(t) : print_term(t);
}

std::vector<std::string> split_laws(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

LawReport fuzz_untyped(const BindingSignature& sig, const std::vector<std::string>& laws,
                       const LawConfig& cfg) {
  const auto terms = term_model(sig);
  const auto sampler = term_sampler(sig);
  LawReport report;
  report.seed = cfg.seed;
  for (const auto& law : laws) {
    if (law == "monad") {
      report.append(check_monad_laws(terms.monad, sampler, cfg));
    } else if (law == "binding") {
      report.append(check_binding_conditions(terms, sig, sampler, cfg));
    } else if (law == "morphism") {
      const auto named = named_model(sig);
      std::function<NamedTerm(const Term&)> h = [&sig](const Term& t) { return to_named(sig, t); };
      report.append(check_morphism(h, terms, named, sig, sampler, cfg));
    } else {
      throw Exit{kExitInvalid, "unknown law family '" + law + "' (expected monad, binding, morphism)"};
    }
  }
  return report;
}

LawReport fuzz_typed(const TypedSignatureSchema& schema, const std::vector<std::string>& laws,
                     const LawConfig& cfg) {
  const TypedGenConfig gen;
  const auto terms = typed_term_model(schema);
  const auto sampler = typed_term_sampler(schema, gen);
  LawReport report;
  report.seed = cfg.seed;
  for (const auto& law : laws) {
    if (law == "monad") {
      report.append(check_typed_monad_laws(terms, sampler, cfg));
    } else if (law == "binding") {
      report.append(check_typed_binding_conditions(schema, terms, sampler, gen, cfg));
    } else if (law == "morphism") {
      const auto named = typed_named_model(schema);
      std::function<TypedNamedTerm(const TypedTerm&)> h = [&schema](const TypedTerm& t) {
        return to_typed_named(schema, t);
      };
      report.append(check_typed_morphism(h, terms, named, schema, sampler, cfg));
    } else if (law == "invariance") {
      report.append(check_subject_invariance(schema, gen, cfg));
    } else {
      throw Exit{kExitInvalid, "unknown law family '" + law +
                                   "' (expected monad, binding, morphism, invariance)"};
    }
  }
  return report;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Terms, substitution and equational reasoning over binding signatures", "dbsyn"};
  app.require_subcommand(1);

  std::string sig_spec, term_text, assign_text, theory_spec, left, right, format = "sexpr";
  std::string laws = "monad,binding,morphism";
  std::size_t fuel = 1000, cases = 1000;
  std::uint64_t seed = 0;
  bool serial = false;

  auto add_format = [&format](CLI::App* c) {
    c->add_option("--format", format, "Output format for nameless terms")
        ->check(CLI::IsMember({"sexpr", "json"}));
  };

  auto* sig = app.add_subcommand("sig", "Signature files");
  sig->require_subcommand(1);
  auto* sig_check = sig->add_subcommand("check", "Parse and validate a signature file");
  sig_check->add_option("file", sig_spec, "Signature file")->required();

  auto* term = app.add_subcommand("term", "Operations on single terms");
  term->require_subcommand(1);
  auto* t_subst = term->add_subcommand("subst", "Apply an assignment [t0, t1; ^k]");
  auto* t_rename = term->add_subcommand("rename", "Apply a renaming [r0, r1; ^k]");
  auto* t_to_named = term->add_subcommand("to-named", "Convert a nameless term to named form");
  auto* t_from_named = term->add_subcommand("from-named", "Convert a named term to nameless form");
  for (auto* c : {t_subst, t_rename, t_to_named, t_from_named}) {
    c->add_option("--sig", sig_spec, "Signature file, or the builtin 'lambda'")->required();
    c->add_option("--term", term_text, "Term")->required();
  }
  t_subst->add_option("--assign", assign_text, "Assignment literal")->required();
  t_rename->add_option("--renaming", assign_text, "Renaming literal")->required();
  for (auto* c : {t_subst, t_rename, t_from_named}) add_format(c);

  auto* norm = app.add_subcommand("norm", "Normalize by leftmost-outermost rewriting");
  norm->add_option("--theory", theory_spec, "Theory file, or 'beta' / 'betaeta'")->required();
  norm->add_option("--term", term_text, "Term")->required();
  norm->add_option("--fuel", fuel, "Maximum number of rewrite steps");
  add_format(norm);

  auto* equiv_cmd = app.add_subcommand("equiv", "Compare normal forms");
  equiv_cmd->add_option("--theory", theory_spec, "Theory file, or 'beta' / 'betaeta'")->required();
  equiv_cmd->add_option("--left", left, "Left term")->required();
  equiv_cmd->add_option("--right", right, "Right term")->required();
  equiv_cmd->add_option("--fuel", fuel, "Maximum rewrite steps per side");

  auto* tc = app.add_subcommand("typecheck", "Type a simply-typed term");
  tc->add_option("--sig", sig_spec, "Typed signature file, or the builtin 'stlc'")->required();
  tc->add_option("--term", term_text, "Typed term")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Check algebraic laws on random cases");
  fuzz->add_option("--sig", sig_spec, "Signature file, or 'lambda' / 'stlc'")->required();
  fuzz->add_option("--laws", laws, "Comma-separated law families");
  fuzz->add_option("--cases", cases, "Cases per law");
  fuzz->add_option("--seed", seed, "Random seed");
  fuzz->add_flag("--serial", serial, "Check cases on one thread");

  std::vector<const char*> argv{"dbsyn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (sig_check->parsed()) {
      SignatureFile f = load_signatures(sig_spec);
      Diagnostics ds;
      for (const auto& s : f.untyped) {
        auto d = validate_signature(s);
        ds.insert(ds.end(), d.begin(), d.end());
      }
      for (const auto& s : f.typed) {
        auto d = validate_signature(s);
        ds.insert(ds.end(), d.begin(), d.end());
      }
      require_valid(ds);
      for (const auto& s : f.untyped) {
        out << "ok signature " << s.name << " (" << s.ops.size() << " operations)\n";
      }
      for (const auto& s : f.typed) {
        out << "ok typed signature " << s.name << " (" << s.ops.size() << " operation schemas)\n";
      }
      return kExitOk;
    }
    if (t_subst->parsed() || t_rename->parsed() || t_to_named->parsed() ||
        t_from_named->parsed()) {
      const BindingSignature s = load_untyped(sig_spec);
      if (t_from_named->parsed()) {
        out << show(from_named(s, parse_named(term_text, s)), format) << "\n";
        return kExitOk;
      }
      const Term t = parse_term(term_text, s);
      if (t_to_named->parsed()) {
        out << print_named(to_named(s, t)) << "\n";
      } else if (t_subst->parsed()) {
        out << show(subst(t, parse_assignment(assign_text, &s), s), format) << "\n";
      } else {
        out << show(rename(t, parse_renaming(assign_text), s), format) << "\n";
      }
      return kExitOk;
    }
    if (norm->parsed()) {
      const EquationalTheory th = load_theory(theory_spec);
      const NormalizeResult r = normalize(th, parse_term(term_text, th.sig), fuel);
      out << show(r.term, format) << "\n";
      if (!r.normal) {
        err << "fuel exhausted after " << r.steps << " steps\n";
        return kExitUnknown;
      }
      return kExitOk;
    }
    if (equiv_cmd->parsed()) {
      const EquationalTheory th = load_theory(theory_spec);
      const Equivalence e =
          equiv(th, parse_term(left, th.sig), parse_term(right, th.sig), fuel);
      out << to_string(e) << "\n";
      switch (e) {
        case Equivalence::kYes: return kExitOk;
        case Equivalence::kNo: return kExitFailed;
        case Equivalence::kUnknown: return kExitUnknown;
      }
    }
    if (tc->parsed()) {
      const TypedSignatureSchema schema = load_typed(sig_spec);
      const TypedTerm t = parse_typed_term(term_text);
      out << print_type(typecheck(schema, t)) << "\n";
      return kExitOk;
    }
    if (fuzz->parsed()) {
      const LawConfig cfg{cases, seed, serial ? Execution::kSerial : Execution::kParallel};
      const SignatureFile f = load_signatures(sig_spec);
      LawReport report;
      if (!f.untyped.empty()) {
        require_valid(validate_signature(f.untyped.front()));
        report = fuzz_untyped(f.untyped.front(), split_laws(laws), cfg);
      } else if (!f.typed.empty()) {
        require_valid(validate_signature(f.typed.front()));
        report = fuzz_typed(f.typed.front(), split_laws(laws), cfg);
      } else {
        throw Exit{kExitInvalid, "'" + sig_spec + "' declares no signature"};
      }
      out << report.to_string();
      return report.passed() ? kExitOk : kExitFailed;
    }
  } catch (const Exit& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << format_diagnostics(e.diagnostics()) << "\n";
    return e.kind() == ErrorKind::kType ? kExitFailed : kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace dbsyn
