#pragma once

// Contexts, definitions and the budgeted evaluator.
//
// A coda (h A : B) whose head h is an atom with a definition is rewritten by
// the first branch of that definition whose guard matches. Evaluation is
// outermost-first and left to right; B is evaluated only as far as a guard
// needs it. Nothing ever fails: unresolved guards and exhausted budgets
// leave codas in place, which is always a valid equality.

#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coda/term.hpp"

namespace coda {

struct Budget {
  static constexpr std::size_t kDefaultSteps = 100'000;
  static constexpr std::size_t kDefaultNodes = 1'000'000;

  std::size_t max_steps = kDefaultSteps;
  std::size_t max_nodes = kDefaultNodes;

  // Defaults overridden by CODA_BUDGET_STEPS / CODA_BUDGET_NODES when set.
  static Budget from_env();
};

enum class TriBool { always, never, undecided };
std::string_view to_string(TriBool t);

class Evaluator;

struct BranchResult {
  enum class Kind { fired, no_match, undecided };
  Kind kind = Kind::no_match;
  Data data;

  static BranchResult fired(Data d) { return {Kind::fired, std::move(d)}; }
  static BranchResult no_match() { return {Kind::no_match, {}}; }
  static BranchResult undecided() { return {Kind::undecided, {}}; }
};

// A branch sees the data after the trigger (A, already evaluated) and the
// right component (B, possibly unevaluated). It may replace B with a more
// evaluated equal form.
using Branch = std::function<BranchResult(Data& a, Data& b, Evaluator& ev)>;

struct Definition {
  std::string name;             // word trigger, or a label for other triggers
  std::optional<Coda> trigger;  // set for non-word triggers
  bool lang_family = false;     // triggered by every language atom; its
                                // branches see the atom itself as a[0]
  bool fixed_point = false;     // atom-maker: codas it heads are atoms
  std::vector<Branch> branches;
  std::optional<Data> body;     // for definitions added by `def`
};

using DefinitionPtr = std::shared_ptr<const Definition>;

// Immutable; extending returns a new context sharing the old tables.
class Context {
 public:
  Context();

  // The definition triggered by head atom `head`, if any.
  const Definition* lookup(const Coda& head) const;
  bool bound(std::string_view name) const;

  // Base definitions are installed once (see install_prelude); a repeated
  // trigger replaces the earlier one.
  Context with_base(Definition def) const;
  // Session definitions never rebind: returns *this unchanged when the name
  // is already bound anywhere.
  Context with_session(Definition def) const;

  std::vector<std::string> session_names() const;
  const Definition* session_definition(std::string_view name) const;

 private:
  struct Table {
    std::unordered_map<std::string, DefinitionPtr> words;
    std::vector<DefinitionPtr> others;
    DefinitionPtr lang;
    std::vector<std::string> order;
  };
  static const Definition* find(const Table& t, const Coda& head);

  std::shared_ptr<const Table> base_;
  std::shared_ptr<const Table> session_;
};

// (name A' : B') -> (body A' : B'), installed only if `name` is unbound.
Context add_definition(const Context& ctx, std::string_view name, Data body);

struct EvalOutcome {
  Data result;
  bool normalized = false;  // result is invariant data
  bool exhausted = false;   // a budget or the depth guard ran out
  std::size_t steps_used = 0;
  Context context;          // includes definitions made by `def`
};

class Evaluator {
 public:
  static constexpr std::size_t kMaxDepth = 2000;

  Evaluator(Context ctx, Budget budget);

  Data eval(const Data& d);
  Data eval_coda(const Coda& c);

  // Both sides are evaluated; equal atoms are peeled from both ends.
  TriBool equal(const Data& a, const Data& b);

  // Shallow test on an evaluated coda: structural, a recognized encoding, or
  // headed by a fixed-point definition.
  bool is_atom(const Coda& c) const;
  bool is_invariant(const Coda& c) const;
  bool is_invariant(const Data& d) const;

  // Evaluates `d` fully; true when every item is an atom.
  bool all_atoms(Data& d);

  // Counts rewrite steps; false once the budget is exhausted.
  bool charge(std::size_t n = 1);
  bool exhausted() const { return exhausted_; }
  std::size_t steps() const { return steps_; }
  const Budget& budget() const { return budget_; }

  const Context& context() const { return ctx_; }
  // Installs a session definition; false when `name` is already bound.
  bool define(std::string_view name, Data body);

 private:
  Context ctx_;
  Budget budget_;
  std::size_t steps_ = 0;
  std::size_t depth_ = 0;
  bool exhausted_ = false;
};

// Lazily evaluated view of a data: items are evaluated one at a time from
// the front, as guards such as "B starts with an atom" require.
class Stream {
 public:
  enum class Head { empty, atom, stuck };

  Stream(Evaluator& ev, Data source) : ev_(ev), source_(std::move(source)) {}

  Head peek();
  Coda take();
  // Evaluated prefix followed by the untouched rest.
  Data rest() const;

 private:
  Evaluator& ev_;
  Data source_;
  std::size_t pos_ = 0;
  std::deque<Coda> ready_;
};

EvalOutcome evaluate(const Data& d, const Context& ctx, Budget budget = {});
TriBool equal(const Data& a, const Data& b, const Context& ctx, Budget budget = {});

// One pass: every top-level coda gets a single rewrite step at most.
Data step(const Data& d, const Context& ctx);

enum class AtomClass { invariant_atom, defined_fixed_point, reducible, undecided };
std::string_view to_string(AtomClass c);
AtomClass classify_atom(const Coda& c, const Context& ctx, Budget budget = {});

}  // namespace coda
