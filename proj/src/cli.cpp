#include "cusg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cusg/catalog.hpp"
#include "cusg/limits.hpp"

namespace cusg {

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

struct ResolvedSpec {
  std::string name;
  std::optional<BuiltAlgebra> algebra;
  SemigroupPtr semigroup;
  std::optional<ChainLimit> limit;
};

std::optional<ScalarKind> builtin_scalar(const std::string& name) {
  if (name == "nbar") return ScalarKind::nat();
  if (name == "nbar2") return ScalarKind::power(ScalarKind::nat(), 2);
  if (name == "nbar3") return ScalarKind::power(ScalarKind::nat(), 3);
  if (name == "c2") return ScalarKind::uhf(Supernatural::parse("2^inf"));
  if (name == "c3") return ScalarKind::uhf(Supernatural::parse("3^inf"));
  if (name == "c6") return ScalarKind::uhf(Supernatural::parse("6^inf"));
  return std::nullopt;
}

std::optional<ChainLimit> builtin_limit(const std::string& name) {
  if (name == "limit-nbar-x2") return ChainLimit::constant_multiplier(2);
  if (name == "limit-c2") return ChainLimit::for_supernatural(Supernatural::parse("2^inf"));
  if (name == "limit-c6") return ChainLimit::for_supernatural(Supernatural::parse("6^inf"));
  return std::nullopt;
}

ResolvedSpec resolve_spec(const std::string& name) {
  ResolvedSpec out;
  out.name = name;
  if (auto k = builtin_scalar(name)) {
    out.semigroup = std::make_shared<ScalarSemigroup>(*k);
    return out;
  }
  if (auto L = builtin_limit(name)) {
    out.limit = std::move(L);
    return out;
  }
  if (auto spec = builtin_spec(name)) {
    out.algebra = build(*spec);
    out.semigroup = out.algebra->semigroup;
    return out;
  }
  std::ifstream in(name);
  if (!in) fail(Err::InvalidSpec, "unknown spec (not a builtin, not a readable file): " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  // scalar and limit kinds are resolved here; algebra kinds via the catalog
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (!j.is_discarded() && j.contains("kind")) {
    std::string kind = j["kind"].get<std::string>();
    if (kind == "scalar") {
      out.semigroup =
          std::make_shared<ScalarSemigroup>(parse_scalar_kind(j.at("scalar").get<std::string>()));
      return out;
    }
    if (kind == "limit") {
      out.limit = ChainLimit::constant_multiplier(j.at("multiplier").get<unsigned long long>());
      return out;
    }
    if (kind == "uhf_limit") {
      out.limit = ChainLimit::for_supernatural(Supernatural::parse(j.at("p").get<std::string>()));
      return out;
    }
  }
  out.algebra = build(parse_algebra_spec(text));
  out.semigroup = out.algebra->semigroup;
  return out;
}

// stage elements are written `v@k`, e.g. `3@0` or `inf@2`
std::pair<ExtNat, int> parse_stage_element(const std::string& text) {
  auto at = text.find('@');
  if (at == std::string::npos) fail(Err::ParseError, "stage elements look like 3@0: " + text);
  std::string v = text.substr(0, at);
  int stage = std::stoi(text.substr(at + 1));
  if (v == "inf") return {ExtNat::inf(), stage};
  return {ExtNat::of(std::stoull(v)), stage};
}

struct Emitter {
  bool machine = false;
  std::ostringstream os;

  void kv(const std::string& key, const std::string& value) {
    if (machine)
      os << key << "=" << value << "\n";
    else
      os << key << ": " << value << "\n";
  }
  void answer_line(const std::string& value) {
    if (machine)
      os << "answer=" << value << "\n";
    else
      os << "answer: " << value << "\n";
  }
};

int ternary_exit(const Ternary& t) {
  if (t.is_true()) return kExitTrue;
  if (t.is_false()) return kExitFalse;
  return kExitUnknown;
}

const char* ternary_str(const Ternary& t) {
  if (t.is_true()) return "true";
  if (t.is_false()) return "false";
  return "unknown";
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact decision procedures for Cu-semigroups of function algebras"};
  app.name("cu");
  std::string spec_name, query, lhs, rhs, format = "text";
  int depth = 16, trials = 200, bound = 4;
  unsigned long long seed = 1;
  app.add_option("--spec", spec_name, "builtin name or spec file")->required();
  app.add_option("--query", query,
                 "one of leq, waybelow, add, member, compacts, approx, check-axioms, "
                 "graph-iso, limit-leq")
      ->required();
  app.add_option("--lhs", lhs, "left operand");
  app.add_option("--rhs", rhs, "right operand");
  app.add_option("--depth", depth, "search depth for depth-bounded procedures");
  app.add_option("--trials", trials, "trial count for randomized suites");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--bound", bound, "value bound for compact enumeration");
  app.add_option("--format", format, "text or machine");

  std::vector<std::string> argv_copy = args;
  std::vector<char*> argv;
  argv.push_back(const_cast<char*>("cu"));
  for (auto& a : argv_copy) argv.push_back(a.data());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    os << "usage error: " << e.what() << "\n";
    return {kExitUsage, os.str()};
  }

  Emitter out;
  out.machine = format == "machine";
  out.kv("spec", spec_name);
  out.kv("query", query);
  out.kv("depth", std::to_string(depth));

  try {
    ResolvedSpec spec = resolve_spec(spec_name);

    if (query == "limit-leq") {
      if (!spec.limit.has_value())
        fail(Err::InvalidSpec, "limit-leq needs a limit spec (e.g. limit-nbar-x2)");
      auto [xv, xs] = parse_stage_element(lhs);
      auto [yv, ys] = parse_stage_element(rhs);
      Ternary t = limit_leq(*spec.limit, xs, xv, ys, yv, depth);
      out.answer_line(ternary_str(t));
      return {ternary_exit(t), out.os.str()};
    }
    if (!spec.semigroup) fail(Err::InvalidSpec, "this spec only supports limit-leq");
    const Semigroup& S = *spec.semigroup;

    if (query == "leq" || query == "waybelow") {
      Element a = S.parse(lhs);
      Element b = S.parse(rhs);
      Ternary t = query == "leq" ? S.leq(a, b, depth) : S.way_below(a, b, depth);
      out.answer_line(ternary_str(t));
      return {ternary_exit(t), out.os.str()};
    }
    if (query == "add") {
      Element a = S.parse(lhs);
      Element b = S.parse(rhs);
      Element sum = S.add(a, b);
      out.kv("result", S.format(sum));
      out.answer_line("true");
      return {kExitTrue, out.os.str()};
    }
    if (query == "member") {
      if (!spec.algebra.has_value()) {
        // plain semigroups: membership is validity of the parsed element
        Element a = S.parse(lhs);
        (void)a;
        out.answer_line("true");
        return {kExitTrue, out.os.str()};
      }
      const BuiltAlgebra& B = *spec.algebra;
      const LscSemigroup* fn =
          B.pullback ? dynamic_cast<const LscSemigroup*>(B.pullback->right_semigroup().get())
                     : B.direct.get();
      if (!fn) fail(Err::InvalidSpec, "membership needs a function model");
      StepFunction f = parse_step(fn->space(), fn->scalar(), lhs);
      MemberResult r = member(B, f);
      if (!r.member) out.kv("reason", r.reason);
      out.answer_line(r.member ? "true" : "false");
      return {r.member ? kExitTrue : kExitFalse, out.os.str()};
    }
    if (query == "compacts") {
      if (!spec.algebra.has_value()) fail(Err::InvalidSpec, "compacts needs an algebra spec");
      auto found = compact_elements(*spec.algebra, bound);
      out.kv("count", std::to_string(found.size()));
      for (auto& x : found) out.kv("compact", S.format(x));
      out.answer_line("true");
      return {kExitTrue, out.os.str()};
    }
    if (query == "approx") {
      Element a = S.parse(lhs);
      auto chain = S.approximant_chain(a, std::min(depth, 8));
      for (auto& c : chain) out.kv("approximant", S.format(c));
      out.answer_line("true");
      return {kExitTrue, out.os.str()};
    }
    if (query == "check-axioms") {
      HarnessOptions opts;
      opts.seed = seed;
      opts.trials = trials;
      opts.depth = depth;
      out.kv("seed", std::to_string(seed));
      out.kv("trials", std::to_string(trials));
      auto rep = check_cu_axioms(S, opts);
      out.kv("violations", std::to_string(rep.violations.size()));
      for (auto& v : rep.violations)
        out.kv("violation", "trial " + std::to_string(v.trial) + " " + v.law + ": " + v.witness);
      out.answer_line(rep.ok() ? "true" : "false");
      return {rep.ok() ? kExitTrue : kExitFalse, out.os.str()};
    }
    if (query == "graph-iso") {
      if (!spec.algebra.has_value() ||
          spec.algebra->spec.kind != AlgebraSpec::Kind::GraphAlgebra)
        fail(Err::InvalidSpec, "graph-iso needs a graph spec");
      HarnessOptions opts;
      opts.seed = seed;
      opts.trials = trials;
      opts.depth = depth;
      out.kv("seed", std::to_string(seed));
      out.kv("trials", std::to_string(trials));
      auto rep = graph_iso_check(spec.algebra->spec.space, spec.algebra->spec.scalar, opts);
      out.kv("violations", std::to_string(rep.violations.size()));
      for (auto& v : rep.violations)
        out.kv("violation", "trial " + std::to_string(v.trial) + " " + v.law + ": " + v.witness);
      out.answer_line(rep.ok() ? "true" : "false");
      return {rep.ok() ? kExitTrue : kExitFalse, out.os.str()};
    }
    fail(Err::InvalidSpec, "unknown query verb: " + query);
  } catch (const CuError& e) {
    out.kv("error", e.what());
    out.answer_line("error");
    return {kExitUsage, out.os.str()};
  } catch (const std::exception& e) {
    out.kv("error", e.what());
    out.answer_line("error");
    return {kExitUsage, out.os.str()};
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  CliResult r = run_cli(args);
  std::cout << r.output;
  return r.exit_code;
}

}  // namespace cusg
