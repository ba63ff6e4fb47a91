#include "cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coda/errors.hpp"
#include "coda/lang.hpp"
#include "coda/organic.hpp"

namespace coda::cli {

namespace {

struct Options {
  std::string format = "text";
  std::vector<std::string> prelude_files;
  std::size_t steps = 0;  // 0: environment or default
  std::size_t nodes = 0;
  bool organic = false;
};

Budget budget_of(const Options& o) {
  Budget b = Budget::from_env();
  if (o.steps) b.max_steps = o.steps;
  if (o.nodes) b.max_nodes = o.nodes;
  return b;
}

// Evaluates one line in the session and threads its definitions forward.
std::string eval_line(const std::string& line, Context& ctx, const Budget& budget) {
  EvalOutcome r = evaluate(parse(line), ctx, budget);
  ctx = r.context;
  std::string text = render(r.result);
  if (r.exhausted) text += "    [budget exhausted after " + std::to_string(r.steps_used) + " steps]";
  return text;
}

bool is_blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

Context session_context(const Options& o) {
  Context ctx = o.organic ? organic_context() : prelude();
  Budget budget = budget_of(o);
  for (const std::string& path : o.prelude_files) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open prelude file " + path);
    for (std::string line; std::getline(file, line);)
      if (!is_blank_or_comment(line)) eval_line(line, ctx, budget);
  }
  return ctx;
}

int cmd_eval(const Options& o, const std::string& expr, std::istream& in, std::ostream& out) {
  Context ctx = session_context(o);
  Budget budget = budget_of(o);
  if (expr != "-") {
    out << eval_line(expr, ctx, budget) << '\n';
    return 0;
  }
  for (std::string line; std::getline(in, line);)
    if (!is_blank_or_comment(line)) out << eval_line(line, ctx, budget) << '\n';
  return 0;
}

int cmd_repl(const Options& o, std::istream& in, std::ostream& out) {
  Context ctx = session_context(o);
  Budget budget = budget_of(o);
  bool prompt = &in == &std::cin && isatty(STDIN_FILENO);
  for (;;) {
    if (prompt) out << "coda> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) break;
    if (is_blank_or_comment(line)) continue;
    if (line[0] == ':') {
      std::istringstream words(line);
      std::string meta;
      words >> meta;
      if (meta == ":quit" || meta == ":q") break;
      if (meta == ":defs") {
        for (const std::string& name : ctx.session_names()) {
          const Definition* d = ctx.session_definition(name);
          out << name << " : " << (d && d->body ? render(*d->body) : "()") << '\n';
        }
      } else if (meta == ":budget") {
        std::size_t n = 0;
        if (words >> n && n > 0) {
          budget.max_steps = n;
          out << "step budget " << n << '\n';
        } else {
          out << "usage: :budget N\n";
        }
      } else {
        out << "unknown command " << meta << " (try :quit, :defs, :budget N)\n";
      }
      continue;
    }
    out << eval_line(line, ctx, budget) << '\n';
  }
  return 0;
}

int cmd_parse(const std::string& expr, std::ostream& out) {
  Data d = parse(expr);
  SizeBound m = measure(d);
  out << "rendered   " << render(d) << '\n'
      << "canonical  " << canonical_text(d) << '\n'
      << "items      " << d.size() << '\n'
      << "width      " << m.width << '\n'
      << "depth      " << m.depth << '\n';
  return 0;
}

int cmd_count(std::size_t width, std::size_t depth, bool enumerate, std::size_t cap, std::ostream& out) {
  BigInt value = count_pure_data({width, depth});
  out << value.str() << '\n';
  if (enumerate) {
    std::size_t n = enumerate_pure_data({width, depth}, cap).size();
    out << "enumerated " << n << (value == n ? " (matches)" : " (MISMATCH)") << '\n';
    if (value != n) return 1;
  }
  return 0;
}

int cmd_search(const Options& o, const std::vector<std::string>& words, std::size_t max_len, std::ostream& out) {
  std::vector<SearchResult> found = search_spaces(words, max_len);
  if (o.format == "tsv") {
    out << "candidate\tverdict\tcarrier\n";
    for (const SearchResult& r : found)
      out << render(r.candidate) << '\t' << to_string(r.verdict) << '\t'
          << (r.carrier_preview ? std::to_string(r.carrier_preview->size()) + (r.carrier_preview->closed ? "" : "+") : "-")
          << '\n';
    return 0;
  }
  out << found.size() << " associative candidates\n";
  for (const SearchResult& r : found) {
    out << "  " << render(r.candidate);
    if (r.carrier_preview) {
      out << "    carrier " << r.carrier_preview->size() << (r.carrier_preview->closed ? "" : "+") << ":";
      for (const std::string& n : r.carrier_preview->names) out << " [" << n << "]";
    }
    out << '\n';
  }
  return 0;
}

int cmd_space(const Options& o, const std::string& expr, std::size_t cap, std::size_t endo_cap, std::ostream& out) {
  Context ctx = session_context(o);
  ProbeSet probes = ProbeSet::standard(words("a b"), budget_of(o));
  CarrierTable c = extract_carrier(parse(expr), probes, ctx, {.cap = cap, .close = true, .strict = true});
  SemiringReport r = classify(c, enumerate_endos(c, endo_cap));
  if (o.format == "tsv") {
    out << tsv_report(r, c);
    return 0;
  }
  out << format_report(r, c);
  FieldVerdict f = field_check(c);
  out << "field (subspaces): " << (f.direct ? "yes" : "no") << '\n'
      << "field (units):     " << (f.via_units ? "yes" : "no") << '\n';
  if (!r.product.empty()) {
    std::vector<std::string> names;
    for (const Endo& e : r.endos) names.push_back(endo_label(e, c));
    out << '\n' << format_tables(r, names);
  }
  return 0;
}

int cmd_demo(const Options& o, const std::string& name, std::ostream& out) {
  DemoReport r = run_demo(name);
  out << (o.format == "tsv" ? format_tsv(r) : format_text(r));
  return r.passed() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"coda: a rewriting language of pairs, and the spaces it builds"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "tsv"}))->capture_default_str();
  app.add_option("--prelude", o.prelude_files, "files of definitions loaded before the session, in order");
  app.add_option("--steps", o.steps, "rewrite step budget (default CODA_BUDGET_STEPS or 100000)");
  app.add_option("--nodes", o.nodes, "result size budget (default CODA_BUDGET_NODES or 1000000)");
  app.add_flag("--organic", o.organic, "also load reduce, subst, squash, gcd, pr, qadd, qzero, product");

  std::string expr;
  auto* eval = app.add_subcommand("eval", "evaluate an expression ('-' reads lines from stdin)");
  eval->add_option("expr", expr, "expression")->required();

  auto* repl = app.add_subcommand("repl", "interactive session (:quit, :defs, :budget N)");

  auto* parse_cmd = app.add_subcommand("parse", "show how an expression parses");
  parse_cmd->add_option("expr", expr, "expression")->required();

  std::size_t width = 0, depth = 0, cap = 10'000'000;
  bool enumerate = false;
  auto* count = app.add_subcommand("count", "count pure data of bounded width and depth");
  count->add_option("--width", width, "maximum width")->required();
  count->add_option("--depth", depth, "maximum depth")->required();
  count->add_flag("--enumerate", enumerate, "cross-check by enumeration");
  count->add_option("--cap", cap, "enumeration cap")->capture_default_str();

  std::vector<std::string> search_words;
  std::size_t max_len = 2;
  auto* search = app.add_subcommand("search", "search word sequences for associative spaces");
  search->add_option("--words", search_words, "words to combine")->delimiter(',');
  search->add_option("--max-len", max_len, "longest sequence")->capture_default_str();

  std::size_t carrier_cap = 64, endo_cap = 3125;
  auto* space = app.add_subcommand("space", "analyze the space of an expression");
  auto* analyze = space->add_subcommand("analyze", "carrier, semiring tables and classification");
  space->require_subcommand(1);
  analyze->add_option("expr", expr, "expression")->required();
  analyze->add_option("--cap", carrier_cap, "carrier size cap")->capture_default_str();
  analyze->add_option("--endo-cap", endo_cap, "endomorphism enumeration cap")->capture_default_str();

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "run a demo and check its assertions");
  demo->add_option("name", demo_name, "demo name")->required()->check(CLI::IsMember(demo_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*eval) return cmd_eval(o, expr, in, out);
    if (*repl) return cmd_repl(o, in, out);
    if (*parse_cmd) return cmd_parse(expr, out);
    if (*count) return cmd_count(width, depth, enumerate, cap, out);
    if (*search) return cmd_search(o, search_words, max_len, out);
    if (*analyze) return cmd_space(o, expr, carrier_cap, endo_cap, out);
    if (*demo) return cmd_demo(o, demo_name, out);
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace coda::cli
