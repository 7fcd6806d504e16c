#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "acceptance.hpp"
#include "mixlogic/classify.hpp"
#include "mixlogic/derivation.hpp"
#include "mixlogic/derivation_io.hpp"
#include "mixlogic/error.hpp"
#include "mixlogic/fixtures.hpp"
#include "mixlogic/formula_syntax.hpp"
#include "mixlogic/integer_machines.hpp"
#include "mixlogic/storage.hpp"
#include "mixlogic/term_syntax.hpp"
#include "mixlogic/translations.hpp"

namespace mixlogic::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

// Ends the current subcommand with an exit code and a message for stderr.
struct Stop {
  int code;
  std::string message;
};

struct Source {
  std::string name;
  std::string text;
};

// A path to an existing file is read; anything else is taken literally.
Source read_source(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw Stop{kBadInput, arg + ": cannot read"};
    std::ostringstream os;
    os << in.rdbuf();
    return {arg, os.str()};
  }
  return {"<argument>", arg};
}

template <typename F>
auto parse_from(const Source& src, F parse) {
  try {
    return parse(src.text);
  } catch (const ParseError& e) {
    throw Stop{kBadInput, src.name + ":" + e.what()};
  }
}

Term load_term(const std::string& arg) {
  constexpr std::string_view kBuiltin = "builtin:";
  if (arg.starts_with(kBuiltin)) {
    try {
      return builtin(arg.substr(kBuiltin.size()));
    } catch (const PreconditionViolated& e) {
      throw Stop{kBadInput, e.what()};
    }
  }
  return parse_from(read_source(arg), [](std::string_view s) { return parse_term(s); });
}

MuTerm load_mu_term(const std::string& arg) {
  if (arg.starts_with("builtin:")) {
    try {
      return MuTerm(load_term(arg));
    } catch (const PreconditionViolated& e) {
      throw Stop{kBadInput, e.what()};
    }
  }
  return parse_from(read_source(arg), [](std::string_view s) { return parse_mu_term(s); });
}

Formula load_formula(const std::string& arg) {
  return parse_from(read_source(arg), [](std::string_view s) { return parse_formula(s); });
}

Derivation load_derivation_file(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) throw Stop{kBadInput, arg + ": no such file"};
  return parse_from(read_source(arg), [](std::string_view s) { return read_derivation(s); });
}

struct Range {
  unsigned lo;
  unsigned hi;
};

// `lo..hi` or a single number.
Range parse_range(const std::string& s) {
  auto number = [&](std::string_view part) {
    unsigned v = 0;
    if (part.empty() || part.size() > 6) throw Stop{kBadInput, "bad range: " + s};
    for (char c : part) {
      if (c < '0' || c > '9') throw Stop{kBadInput, "bad range: " + s};
      v = v * 10 + static_cast<unsigned>(c - '0');
    }
    return v;
  };
  std::string_view v(s);
  auto dots = v.find("..");
  Range r = dots == std::string_view::npos ? Range{number(v), number(v)}
                                           : Range{number(v.substr(0, dots)), number(v.substr(dots + 2))};
  if (r.lo > r.hi) throw Stop{kBadInput, "empty range: " + s};
  return r;
}

std::string range_text(Range r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

int finish_trace(const ReductionTrace& tr, const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.trace) out << format_trace(tr, cfg.trace_format);
  if (!cfg.trace || cfg.trace_format == TraceFormat::Text) out << to_string(tr.final_term()) << "\n";
  if (tr.exhausted) {
    err << "budget exhausted after " << tr.step_count() << " steps\n";
    return kFailed;
  }
  return kOk;
}

struct ReduceArgs {
  bool beta = false;
  bool head = false;
  bool head_c = false;
  bool stack = false;
  bool mu = false;
  bool innermost = false;
  std::string input;
};

int cmd_reduce(const ReduceArgs& a, const Config& cfg, std::ostream& out, std::ostream& err) {
  int modes = a.beta + a.head + a.head_c + a.stack + a.mu;
  if (modes != 1) throw Stop{kBadInput, "reduce: give exactly one of --beta, --head, --head-c, --stack, --mu"};
  Budget bud(cfg.budget);
  if (a.mu) {
    MuStrategy s = a.innermost ? MuStrategy::RightmostInnermost : MuStrategy::LeftmostOutermost;
    return finish_trace(mu_reduce(load_mu_term(a.input), bud, s), cfg, out, err);
  }
  Term t = load_term(a.input);
  if (a.beta) return finish_trace(beta_reduce(t, bud), cfg, out, err);
  if (a.head) return finish_trace(head_reduce(t, bud), cfg, out, err);
  if (a.head_c) return finish_trace(head_c_reduce(t, bud), cfg, out, err);
  return finish_trace(stack_reduce(t, bud), cfg, out, err);
}

int cmd_typecheck(const std::string& file, std::ostream& out) {
  Derivation d = load_derivation_file(file);
  CheckResult r = check(d);
  if (!r) {
    out << "invalid " << d.name << " at " << r.path << ": " << to_string(r.reason) << ": " << r.message << "\n";
    return kFailed;
  }
  auto [subject, type] = subject_of(d);
  out << "valid " << d.name << " (" << to_string(d.system) << "): " << to_string(subject) << " : " << to_string(type)
      << "\n";
  return kOk;
}

int cmd_translate(const std::string& mode, const std::string& input, std::ostream& out) {
  Formula a = load_formula(input);
  Formula r = mode == "godel"          ? godel(a)
              : mode == "simple-godel" ? simple_godel(a)
              : mode == "classical"    ? classical(a)
                                       : prop_erase(a);
  out << to_string(r) << "\n";
  return kOk;
}

int cmd_classify(const std::string& kind, const std::string& input, std::ostream& out) {
  if (kind == "polarity") {
    out << to_string(polarity(load_formula(input))) << "\n";
  } else if (kind == "classical-type") {
    out << (is_classical_type(load_formula(input)) ? "classical" : "not classical") << "\n";
  } else {
    MuIntegerClass c = classify_mu_integer(load_mu_term(input));
    if (c.is_integer()) {
      out << "integer n=" << c.n << (c.empty_family ? " (empty naming family)" : "") << "\n";
    } else {
      out << "not an integer: " << to_string(c.verdict) << "\n";
    }
  }
  return kOk;
}

int cmd_value(const std::string& input, const Config& cfg, std::ostream& out, std::ostream& err) {
  ValueResult r = extract_value(load_term(input), Budget(cfg.budget));
  if (!r) {
    err << to_string(r.failure) << ": " << r.message << "\n";
    return kFailed;
  }
  if (cfg.trace) {
    for (std::size_t i = 0; i < r.trace->segments.size(); ++i) {
      out << "segment " << i << ":\n" << format_trace(r.trace->segments[i], cfg.trace_format);
    }
  }
  out << to_string(*r.trace) << "\n";
  return kOk;
}

// Accepts λx.λf.u as well as the body u itself.
int cmd_rep(const std::string& input, std::ostream& out) {
  Term t = load_mu_term(input).term();
  if (t.is(TermKind::Lam) && t.body().is(TermKind::Lam)) {
    std::set<std::string> taken = free_vars(t);
    std::string x = fresh_name(t.name(), taken);
    taken.insert(x);
    std::string f = fresh_name(t.body().name(), taken);
    t = open(open(t.body(), x).body(), f);
  }
  out << to_string(rep(MuTerm(t))) << "\n";
  return kOk;
}

struct StorageArgs {
  std::string candidate;
  std::string mode = "church";
  std::string range = "0..10";
};

int cmd_storage(const StorageArgs& a, const Config& cfg, std::ostream& out) {
  Range n = parse_range(a.range);
  Budget bud(cfg.budget);
  std::vector<StorageReport> reports;
  if (a.mode == "mu") {
    reports = verify_storage_mu(load_mu_term(a.candidate), mu_corpus(n.lo, n.hi), bud);
  } else {
    Term t = load_term(a.candidate);
    reports = a.mode == "church" ? verify_storage(t, pure_corpus(n.lo, n.hi), bud)
                                 : verify_storage_classical(t, n.lo, n.hi, bud);
  }
  std::size_t simulated = 0;
  for (const auto& r : reports) {
    out << to_string(r) << "\n";
    simulated += r.simulated();
  }
  out << "simulated " << simulated << " of " << reports.size() << "\n";
  return simulated == reports.size() ? kOk : kFailed;
}

struct CharacterizeArgs {
  std::string candidate;
  std::string type = "bottom";
  std::string arity = "0..5";
};

int cmd_characterize(const CharacterizeArgs& a, const Config& cfg, std::ostream& out, std::ostream& err) {
  Range k = parse_range(a.arity);
  Term t = load_term(a.candidate);
  Characterization c = a.type == "bottom" ? characterize_bottom_arrow(t, k.lo, k.hi, Budget(cfg.budget))
                                          : characterize_cc(t, k.lo, k.hi, Budget(cfg.budget));
  if (cfg.trace && c.trace) out << format_trace(*c.trace, cfg.trace_format);
  if (!c.confirmed) {
    err << "not confirmed";
    if (c.arity) err << " at arity " << *c.arity;
    if (c.exhausted) err << " (budget exhausted)";
    err << ": " << c.message << "\n";
    return kFailed;
  }
  if (a.type == "bottom") {
    out << "abort confirmed for arities " << range_text(k) << "\n";
  } else {
    out << "shape m=" << c.m << " for arities " << range_text(k) << "\n";
  }
  return kOk;
}

int cmd_run_all(const std::vector<unsigned>& only, const Config& cfg, std::ostream& out) {
  testkit::AcceptanceOptions opts{cfg.fixture_dir, cfg.seed, cfg.budget};
  for (unsigned id : only) {
    if (id == 0 || id > testkit::kCriterionCount) throw Stop{kBadInput, "no criterion " + std::to_string(id)};
  }
  bool ok = true;
  for (const auto& r : testkit::run_acceptance(opts, only)) {
    out << testkit::format_result(r) << "\n";
    ok = ok && r.passed;
  }
  out << (ok ? "all criteria pass" : "some criteria fail") << "\n";
  return ok ? kOk : kFailed;
}

int cmd_generate(const Config& cfg, std::ostream& out) {
  for (const auto& p : generate_fixtures(cfg.fixture_dir)) out << p.string() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduction, typing and storage operators for λC and λμ terms", "mixlogic"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string trace_format = "text";
  std::string fixture_dir = default_fixture_dir().string();
  app.add_option("--budget", cfg.budget, "Step limit for every reduction")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for generated inputs");
  app.add_flag("--trace", cfg.trace, "Print reduction traces");
  app.add_option("--trace-format", trace_format)->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--fixture-dir", fixture_dir, "Directory holding derivations/");

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "Reduce a term and print where it stops");
  reduce->add_flag("--beta", ra.beta, "Leftmost-outermost β-reduction");
  reduce->add_flag("--head", ra.head, "Head reduction of a pure term");
  reduce->add_flag("--head-c", ra.head_c, "Head C-reduction");
  reduce->add_flag("--stack", ra.stack, "Reduction with stack constants");
  reduce->add_flag("--mu", ra.mu, "λμ reduction");
  reduce->add_flag("--innermost", ra.innermost, "Rightmost-innermost strategy for --mu");
  reduce->add_option("term", ra.input, "Term, file or builtin:NAME")->required();

  std::string deriv_file;
  auto* typecheck = app.add_subcommand("typecheck", "Check a derivation file");
  typecheck->add_option("file", deriv_file)->required();

  std::string translate_mode = "godel";
  std::string translate_input;
  auto* translate = app.add_subcommand("translate", "Translate a formula");
  translate->add_option("--mode", translate_mode)
      ->check(CLI::IsMember({"godel", "simple-godel", "classical", "erase"}));
  translate->add_option("formula", translate_input, "Formula or file")->required();

  std::string classify_kind;
  std::string classify_input;
  auto* classify = app.add_subcommand("classify", "Classify a formula or a λμ term");
  classify->add_option("kind", classify_kind)
      ->required()
      ->check(CLI::IsMember({"polarity", "classical-type", "mu-integer"}));
  classify->add_option("input", classify_input, "Formula, term, file or builtin:NAME")->required();

  std::string value_input;
  auto* value = app.add_subcommand("value", "Extract the value of a classical integer");
  value->add_option("term", value_input, "Term, file or builtin:NAME")->required();

  std::string rep_input;
  auto* rep_cmd = app.add_subcommand("rep", "Print the set of integers a normal λμ term represents");
  rep_cmd->add_option("term", rep_input, "λμ term or file")->required();

  StorageArgs sa;
  auto* storage = app.add_subcommand("storage-verify", "Run a storage operator candidate over an integer corpus");
  storage->add_option("--candidate", sa.candidate, "Term, file or builtin:NAME")->required();
  storage->add_option("--mode", sa.mode)->check(CLI::IsMember({"church", "classical", "mu"}));
  storage->add_option("--n", sa.range, "lo..hi");

  CharacterizeArgs ca;
  auto* characterize = app.add_subcommand("characterize", "Check the trace shape of a control operator candidate");
  characterize->add_option("--candidate", ca.candidate, "Term, file or builtin:NAME")->required();
  characterize->add_option("--type", ca.type)->check(CLI::IsMember({"bottom", "cc"}));
  characterize->add_option("--arity", ca.arity, "lo..hi");

  auto* fixtures = app.add_subcommand("fixtures", "Acceptance suite and shipped fixtures");
  fixtures->require_subcommand(1);
  std::vector<unsigned> only;
  auto* run_all = fixtures->add_subcommand("run-all", "Run every acceptance criterion");
  run_all->add_option("--only", only, "Criterion numbers");
  auto* generate = fixtures->add_subcommand("generate", "Write the derivation fixtures");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  }
  cfg.trace_format = trace_format == "structured" ? TraceFormat::Structured : TraceFormat::Text;
  cfg.fixture_dir = fixture_dir;

  try {
    if (*reduce) return cmd_reduce(ra, cfg, out, err);
    if (*typecheck) return cmd_typecheck(deriv_file, out);
    if (*translate) return cmd_translate(translate_mode, translate_input, out);
    if (*classify) return cmd_classify(classify_kind, classify_input, out);
    if (*value) return cmd_value(value_input, cfg, out, err);
    if (*rep_cmd) return cmd_rep(rep_input, out);
    if (*storage) return cmd_storage(sa, cfg, out);
    if (*characterize) return cmd_characterize(ca, cfg, out, err);
    if (*run_all) return cmd_run_all(only, cfg, out);
    if (*generate) return cmd_generate(cfg, out);
  } catch (const Stop& s) {
    err << "mixlogic: " << s.message << "\n";
    return s.code;
  } catch (const ParseError& e) {
    err << "mixlogic: " << e.what() << "\n";
    return kBadInput;
  } catch (const PreconditionViolated& e) {
    err << "mixlogic: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    err << "mixlogic: " << e.what() << "\n";
    return kFailed;
  }
  return kBadInput;
}

}  // namespace mixlogic::cli
