#include "coda/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "coda/atoms.hpp"

namespace coda {

namespace {

bool is_encoding(const Coda& c) { return c.kind() != Coda::Kind::plain; }

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  return (end && *end == '\0' && v > 0) ? static_cast<std::size_t>(v) : fallback;
}

// Reuses `original` when both sides are unchanged node for node.
bool same_items(const Data& a, const Data& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].same_node(b[i])) return false;
  return true;
}

Coda rebuild(const Coda& original, Data left, Data right) {
  if (same_items(original.left(), left) && same_items(original.right(), right)) return original;
  return make_coda(std::move(left), std::move(right));
}

struct DepthGuard {
  explicit DepthGuard(std::size_t& d) : depth(d) { ++depth; }
  ~DepthGuard() { --depth; }
  std::size_t& depth;
};

}  // namespace

Budget Budget::from_env() {
  return {env_or("CODA_BUDGET_STEPS", kDefaultSteps), env_or("CODA_BUDGET_NODES", kDefaultNodes)};
}

std::string_view to_string(TriBool t) {
  switch (t) {
    case TriBool::always: return "always";
    case TriBool::never: return "never";
    case TriBool::undecided: return "undecided";
  }
  return "undecided";
}

std::string_view to_string(AtomClass c) {
  switch (c) {
    case AtomClass::invariant_atom: return "invariant_atom";
    case AtomClass::defined_fixed_point: return "defined_fixed_point";
    case AtomClass::reducible: return "reducible";
    case AtomClass::undecided: return "undecided";
  }
  return "undecided";
}

// ---- Context -------------------------------------------------------------------

Context::Context()
    : base_(std::make_shared<const Table>()), session_(std::make_shared<const Table>()) {}

const Definition* Context::find(const Table& t, const Coda& head) {
  if (head.is_word()) {
    auto it = t.words.find(std::string(head.text()));
    return it == t.words.end() ? nullptr : it->second.get();
  }
  if (head.is_lang()) return t.lang.get();
  for (const DefinitionPtr& d : t.others)
    if (structural_eq(*d->trigger, head)) return d.get();
  return nullptr;
}

const Definition* Context::lookup(const Coda& head) const {
  if (const Definition* d = find(*session_, head)) return d;
  return find(*base_, head);
}

bool Context::bound(std::string_view name) const {
  std::string key(name);
  return session_->words.count(key) || base_->words.count(key);
}

Context Context::with_base(Definition def) const {
  auto table = std::make_shared<Table>(*base_);
  auto ptr = std::make_shared<const Definition>(std::move(def));
  if (ptr->lang_family) {
    table->lang = ptr;
  } else if (ptr->trigger) {
    std::erase_if(table->others,
                  [&](const DefinitionPtr& d) { return structural_eq(*d->trigger, *ptr->trigger); });
    table->others.push_back(ptr);
  } else {
    if (!table->words.count(ptr->name)) table->order.push_back(ptr->name);
    table->words[ptr->name] = ptr;
  }
  Context out = *this;
  out.base_ = std::move(table);
  return out;
}

Context Context::with_session(Definition def) const {
  if (def.trigger || def.lang_family || bound(def.name)) return *this;
  auto table = std::make_shared<Table>(*session_);
  table->order.push_back(def.name);
  std::string key = def.name;
  table->words.emplace(std::move(key), std::make_shared<const Definition>(std::move(def)));
  Context out = *this;
  out.session_ = std::move(table);
  return out;
}

std::vector<std::string> Context::session_names() const { return session_->order; }

const Definition* Context::session_definition(std::string_view name) const {
  auto it = session_->words.find(std::string(name));
  return it == session_->words.end() ? nullptr : it->second.get();
}

Context add_definition(const Context& ctx, std::string_view name, Data body) {
  Definition def;
  def.name = std::string(name);
  def.body = body;
  def.branches.push_back([body = std::move(body)](Data& a, Data& b, Evaluator&) {
    return BranchResult::fired(Data{make_coda(concat(body, a), b)});
  });
  return ctx.with_session(std::move(def));
}

// ---- Evaluator -----------------------------------------------------------------

Evaluator::Evaluator(Context ctx, Budget budget) : ctx_(std::move(ctx)), budget_(budget) {}

bool Evaluator::charge(std::size_t n) {
  if (exhausted_) return false;
  steps_ += n;
  if (steps_ > budget_.max_steps) {
    steps_ = budget_.max_steps;
    exhausted_ = true;
    return false;
  }
  return true;
}

bool Evaluator::is_atom(const Coda& c) const {
  if (is_encoding(c) || c.left().empty()) return true;
  const Coda& head = c.left()[0];
  if (!is_atom(head)) return false;
  const Definition* def = ctx_.lookup(head);
  return def && def->fixed_point;
}

bool Evaluator::is_invariant(const Coda& c) const {
  if (is_encoding(c)) return true;
  if (c.left().empty()) return is_invariant(c.right());
  return is_atom(c) && is_invariant(c.left()) && is_invariant(c.right());
}

bool Evaluator::is_invariant(const Data& d) const {
  return std::all_of(d.begin(), d.end(), [this](const Coda& c) { return is_invariant(c); });
}

bool Evaluator::all_atoms(Data& d) {
  d = eval(d);
  return std::all_of(d.begin(), d.end(), [this](const Coda& c) { return is_atom(c); });
}

bool Evaluator::define(std::string_view name, Data body) {
  if (ctx_.bound(name)) return false;
  ctx_ = add_definition(ctx_, name, std::move(body));
  return true;
}

Data Evaluator::eval(const Data& d) {
  std::vector<Coda> out;
  out.reserve(d.size());
  bool changed = false;
  for (const Coda& c : d) {
    if (is_encoding(c)) {
      out.push_back(c);
      continue;
    }
    Data r = eval_coda(c);
    if (!(r.size() == 1 && r[0].same_node(c))) changed = true;
    out.insert(out.end(), r.begin(), r.end());
  }
  return changed ? Data(std::move(out)) : d;
}

Data Evaluator::eval_coda(const Coda& c) {
  if (exhausted_ || is_encoding(c)) return Data{c};
  DepthGuard guard(depth_);
  if (depth_ > kMaxDepth) {
    exhausted_ = true;
    return Data{c};
  }

  Coda cur = c;
  for (;;) {
    if (exhausted_) return Data{cur};
    if (cur.left().empty()) return Data{rebuild(cur, Data{}, eval(cur.right()))};

    Data left = eval(cur.left());
    if (left.empty()) {
      cur = make_coda(Data{}, cur.right());
      continue;
    }
    const Coda head = left[0];
    const Definition* def = is_atom(head) ? ctx_.lookup(head) : nullptr;
    if (!def) return Data{rebuild(cur, std::move(left), eval(cur.right()))};

    Data a = def->lang_family ? left : left.slice(1);
    Data b = cur.right();
    if (def->fixed_point) b = eval(b);

    std::optional<Data> fired;
    for (const Branch& branch : def->branches) {
      BranchResult r = branch(a, b, *this);
      if (r.kind == BranchResult::Kind::no_match) continue;
      if (r.kind == BranchResult::Kind::fired) fired = std::move(r.data);
      break;
    }

    if (!fired) {
      if (!exhausted_) b = eval(b);
      return Data{rebuild(cur, std::move(left), std::move(b))};
    }
    if (!charge()) return Data{cur};
    if (fired->nodes() > budget_.max_nodes) {
      exhausted_ = true;
      return Data{cur};
    }
    if (fired->size() != 1) return eval(*fired);
    cur = (*fired)[0];
    if (is_encoding(cur)) return Data{cur};
  }
}

TriBool Evaluator::equal(const Data& a, const Data& b) {
  Data x = eval(a);
  Data y = eval(b);
  std::size_t xb = 0, xe = x.size(), yb = 0, ye = y.size();
  auto invariant_atom = [this](const Coda& c) { return is_atom(c) && is_invariant(c); };

  bool progress = true;
  while (progress) {
    progress = false;
    if (xb < xe && yb < ye && invariant_atom(x[xb]) && invariant_atom(y[yb])) {
      if (!structural_eq(x[xb], y[yb])) return TriBool::never;
      ++xb, ++yb;
      progress = true;
    }
    if (xb < xe && yb < ye && invariant_atom(x[xe - 1]) && invariant_atom(y[ye - 1])) {
      if (!structural_eq(x[xe - 1], y[ye - 1])) return TriBool::never;
      --xe, --ye;
      progress = true;
    }
  }
  bool x_empty = xb == xe, y_empty = yb == ye;
  if (x_empty && y_empty) return TriBool::always;
  if (x_empty || y_empty) {
    // (= A : ()) -> A; an atom in A can never disappear.
    const Data& rest = x_empty ? y : x;
    std::size_t from = x_empty ? yb : xb, to = x_empty ? ye : xe;
    for (std::size_t i = from; i < to; ++i)
      if (invariant_atom(rest[i])) return TriBool::never;
  }
  return TriBool::undecided;
}

// ---- Stream ----------------------------------------------------------------------

Stream::Head Stream::peek() {
  while (ready_.empty()) {
    if (pos_ >= source_.size()) return Head::empty;
    Data r = ev_.eval_coda(source_[pos_++]);
    ready_.insert(ready_.end(), r.begin(), r.end());
  }
  return ev_.is_atom(ready_.front()) ? Head::atom : Head::stuck;
}

Coda Stream::take() {
  Coda c = ready_.front();
  ready_.pop_front();
  return c;
}

Data Stream::rest() const {
  std::vector<Coda> out(ready_.begin(), ready_.end());
  out.insert(out.end(), source_.begin() + static_cast<std::ptrdiff_t>(pos_), source_.end());
  return Data(std::move(out));
}

// ---- free functions ---------------------------------------------------------------

EvalOutcome evaluate(const Data& d, const Context& ctx, Budget budget) {
  Evaluator ev(ctx, budget);
  EvalOutcome out;
  out.result = ev.eval(d);
  out.exhausted = ev.exhausted();
  out.normalized = !out.exhausted && ev.is_invariant(out.result);
  out.steps_used = ev.steps();
  out.context = ev.context();
  return out;
}

TriBool equal(const Data& a, const Data& b, const Context& ctx, Budget budget) {
  Evaluator ev(ctx, budget);
  return ev.equal(a, b);
}

Data step(const Data& d, const Context& ctx) {
  Data out;
  for (const Coda& c : d) {
    Evaluator ev(ctx, Budget{1, Budget::kDefaultNodes});
    out.append(ev.eval_coda(c));
  }
  return out;
}

AtomClass classify_atom(const Coda& c, const Context& ctx, Budget budget) {
  Evaluator ev(ctx, budget);
  Data r = ev.eval_coda(c);
  if (!(r.size() == 1 && structural_eq(r[0], c))) return AtomClass::reducible;
  if (!ev.is_invariant(c)) return AtomClass::undecided;
  return c.is_structural() || is_encoding(c) ? AtomClass::invariant_atom : AtomClass::defined_fixed_point;
}

}  // namespace coda
