#include "coda/prelude.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "coda/lang.hpp"

namespace coda {

namespace {

using Kind = BranchResult::Kind;

BranchResult fired(Data d) { return BranchResult::fired(std::move(d)); }
BranchResult undecided() { return BranchResult::undecided(); }

Data with_head(const Coda& head, const Data& a) {
  Data out{head};
  out.append(a);
  return out;
}

// The residue (name A : rest) of a partially unfolded sequence rule.
Coda residue(std::string_view name, const Data& a, Data rest) {
  return make_coda(with_head(word(name), a), std::move(rest));
}

// Applies `emit` to each leading atom of B. Stops at the first item that
// is not an atom, leaving (name A : rest) behind.
template <typename Emit>
BranchResult over_atoms(std::string_view name, Data& a, Data& b, Evaluator& ev, Emit emit) {
  Stream s(ev, b);
  Data out;
  bool first = true;
  for (;;) {
    Stream::Head h = s.peek();
    if (h == Stream::Head::empty) return fired(std::move(out));
    if (h == Stream::Head::stuck || (!first && !ev.charge())) break;
    emit(s.take(), out);
    first = false;
  }
  if (first) {
    b = s.rest();
    return undecided();
  }
  out.push_back(residue(name, a, s.rest()));
  return fired(std::move(out));
}

std::optional<std::size_t> count_arg(const Data& a) {
  if (a.empty()) return 1;
  if (a.size() != 1 || !a[0].is_word()) return std::nullopt;
  std::string_view t = a[0].text();
  std::size_t n = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
  if (ec != std::errc{} || p != t.data() + t.size()) return std::nullopt;
  return n;
}

bool contains(const std::vector<Coda>& set, const Coda& c) {
  return std::any_of(set.begin(), set.end(), [&](const Coda& x) { return structural_eq(x, c); });
}

bool all_words_a(const Data& d) {
  return std::all_of(d.begin(), d.end(), [](const Coda& c) { return c.is_word() && c.text() == "a"; });
}

Definition simple(std::string name, Branch b) {
  Definition d;
  d.name = std::move(name);
  d.branches.push_back(std::move(b));
  return d;
}

Definition marker(std::string name) {
  Definition d;
  d.name = std::move(name);
  d.fixed_point = true;
  return d;
}

Definition structural_marker(std::string label, const Coda& trigger) {
  Definition d = marker(std::move(label));
  d.trigger = trigger;
  return d;
}

// (name A : B) -> (ap {source} A : B)
Definition ap_template(std::string name, std::string source) {
  return simple(std::move(name), [lang = lang_atom(source)](Data& a, Data& b, Evaluator&) {
    Data left{word("ap"), lang};
    left.append(a);
    return fired(Data{make_coda(std::move(left), b)});
  });
}

using Factory = Definition (*)();

const std::vector<std::pair<std::string, Factory>>& factories() {
  static const std::vector<std::pair<std::string, Factory>> table = {
      {"pass", [] { return simple("pass", [](Data&, Data& b, Evaluator&) { return fired(b); }); }},
      {"null", [] { return simple("null", [](Data&, Data&, Evaluator&) { return fired({}); }); }},
      {"left", [] { return simple("left", [](Data& a, Data&, Evaluator&) { return fired(a); }); }},
      {"right", [] { return simple("right", [](Data&, Data& b, Evaluator&) { return fired(b); }); }},
      {"const", [] { return simple("const", [](Data& a, Data&, Evaluator&) { return fired(a); }); }},
      {"put",
       [] {
         return simple("put", [](Data& a, Data& b, Evaluator&) { return fired(Data{make_coda(a, b)}); });
       }},
      {"get0",
       [] {
         return simple("get0", [](Data& a, Data& b, Evaluator& ev) {
           return over_atoms("get0", a, b, ev, [&](const Coda& x, Data& out) {
             if (structural_eq(x.left(), a)) out.append(x.right());
           });
         });
       }},
      {"get",
       [] {
         return simple("get", [](Data& a, Data& b, Evaluator& ev) {
           return over_atoms("get", a, b, ev, [&](const Coda& x, Data& out) {
             if (structural_eq(x.left(), a)) out.append(x.right());
           });
         });
       }},
      {"atoms",
       [] {
         return simple("atoms", [](Data& a, Data& b, Evaluator& ev) {
           return over_atoms("atoms", a, b, ev,
                             [](const Coda&, Data& out) { out.push_back(Coda{}); });
         });
       }},
      {"ap",
       [] {
         return simple("ap", [](Data& a, Data& b, Evaluator& ev) {
           return over_atoms("ap", a, b, ev,
                             [&](const Coda& x, Data& out) { out.push_back(make_coda(a, Data{x})); });
         });
       }},
      {"bool",
       [] {
         return simple("bool", [](Data&, Data& b, Evaluator& ev) {
           Stream s(ev, b);
           switch (s.peek()) {
             case Stream::Head::empty: return fired({});
             case Stream::Head::atom: return fired(Data{Coda{}});
             case Stream::Head::stuck: break;
           }
           b = s.rest();
           return undecided();
         });
       }},
      {"not",
       [] {
         return simple("not", [](Data&, Data& b, Evaluator& ev) {
           Stream s(ev, b);
           switch (s.peek()) {
             case Stream::Head::empty: return fired(Data{Coda{}});
             case Stream::Head::atom: return fired({});
             case Stream::Head::stuck: break;
           }
           b = s.rest();
           return undecided();
         });
       }},
      {"=",
       [] {
         return simple("=", [](Data& a, Data& b, Evaluator& ev) {
           switch (ev.equal(a, b)) {
             case TriBool::always: return fired({});
             case TriBool::never: return fired(Data{Coda{}});
             case TriBool::undecided: break;
           }
           return undecided();
         });
       }},
      {"def",
       [] {
         return simple("def", [](Data& a, Data& b, Evaluator& ev) {
           if (a.empty() || !a[0].is_word()) return BranchResult::no_match();
           if (ev.context().bound(a[0].text())) return BranchResult::no_match();
           b = ev.eval(b);
           ev.define(a[0].text(), b);
           return fired({});
         });
       }},
      {"if",
       [] {
         return simple("if", [](Data& a, Data& b, Evaluator& ev) {
           if (a.empty()) return fired(b);
           return ev.is_atom(a[0]) ? fired({}) : undecided();
         });
       }},
      {"nif",
       [] {
         return simple("nif", [](Data& a, Data& b, Evaluator& ev) {
           if (a.empty()) return fired({});
           return ev.is_atom(a[0]) ? fired(b) : undecided();
         });
       }},
      {"while",
       [] {
         return simple("while", [](Data& a, Data& b, Evaluator& ev) {
           Data x = ev.eval(b);
           for (;;) {
             if (ev.exhausted()) break;
             Data y = ev.eval(Data{make_coda(a, x)});
             if (structural_eq(x, y)) return fired(x);
             if (!ev.charge()) break;
             x = std::move(y);
           }
           b = std::move(x);
           return undecided();
         });
       }},
      {"prod",
       [] {
         return simple("prod", [](Data& a, Data& b, Evaluator&) {
           Data inner = b;
           for (std::size_t i = a.size(); i-- > 0;) inner = Data{make_coda(a[i].right(), inner)};
           return fired(std::move(inner));
         });
       }},
      {"sum",
       [] {
         return simple("sum", [](Data& a, Data& b, Evaluator&) {
           Data out;
           for (const Coda& x : a) out.push_back(make_coda(x.right(), b));
           return fired(std::move(out));
         });
       }},
      {"domain",
       [] {
         return simple("domain", [](Data& a, Data& b, Evaluator& ev) {
           return over_atoms("domain", a, b, ev, [](const Coda& x, Data& out) {
             if (!x.is_structural()) out.push_back(x.left()[0]);
           });
         });
       }},
      {"map",
       [] {
         return simple("map", [](Data& a, Data& b, Evaluator&) {
           Data out;
           for (const Coda& gf : a) {
             Data cond{word("if"), make_coda(gf.left(), b)};
             out.push_back(make_coda(std::move(cond), Data{make_coda(gf.right(), b)}));
           }
           return fired(std::move(out));
         });
       }},
      {"aq",
       [] {
         return simple("aq", [](Data& a, Data& b, Evaluator& ev) {
           b = ev.eval(b);
           Data out;
           if (a.empty() || b.empty()) return fired({});
           for (std::size_t i = 1; i < a.size(); ++i) out.push_back(make_coda(Data{a[0], a[i]}, b));
           return fired(std::move(out));
         });
       }},
      {"ar",
       [] {
         return simple("ar", [](Data& a, Data& b, Evaluator& ev) {
           if (!ev.all_atoms(b)) return undecided();
           Data out;
           for (std::size_t i = 1; i < a.size(); ++i)
             for (const Coda& y : b) out.push_back(make_coda(Data{a[0], a[i]}, Data{y}));
           return fired(std::move(out));
         });
       }},
      {"first",
       [] {
         return simple("first", [](Data& a, Data& b, Evaluator& ev) {
           auto n = count_arg(a);
           if (!n) return BranchResult::no_match();
           Stream s(ev, b);
           Data out;
           while (out.size() < *n) {
             Stream::Head h = s.peek();
             if (h == Stream::Head::empty) break;
             if (h == Stream::Head::stuck) {
               b = concat(out, s.rest());
               return undecided();
             }
             out.push_back(s.take());
           }
           return fired(std::move(out));
         });
       }},
      {"last",
       [] {
         return simple("last", [](Data& a, Data& b, Evaluator& ev) {
           auto n = count_arg(a);
           if (!n) return BranchResult::no_match();
           if (!ev.all_atoms(b)) return undecided();
           return fired(b.slice(b.size() - std::min(*n, b.size())));
         });
       }},
      {"has", [] { return ap_template("has", "if (A=(domain:B)):B"); }},
      {"hasnt", [] { return ap_template("hasnt", "nif (A=(domain:B)):B"); }},
      {"is", [] { return ap_template("is", "nif (ar {not:A=B} A:B):B"); }},
      {"isnt", [] { return ap_template("isnt", "if (ar {not:A=B} A:B):B"); }},
      {"once",
       [] {
         return simple("once", [](Data& a, Data& b, Evaluator& ev) {
           if (!ev.all_atoms(b)) return undecided();
           std::vector<Coda> seen(a.begin(), a.end());
           Data out;
           for (const Coda& x : b) {
             if (contains(seen, x)) continue;
             seen.push_back(x);
             out.push_back(x);
           }
           return fired(std::move(out));
         });
       }},
      {"rev",
       [] {
         return simple("rev", [](Data&, Data& b, Evaluator& ev) {
           if (!ev.all_atoms(b)) return undecided();
           std::vector<Coda> items(b.begin(), b.end());
           std::reverse(items.begin(), items.end());
           return fired(Data(std::move(items)));
         });
       }},
      {"remove",
       [] {
         return simple("remove", [](Data& a, Data& b, Evaluator& ev) {
           b = ev.eval(b);
           for (std::size_t i = 0; i < a.size(); ++i) {
             if (i >= b.size()) return ev.all_atoms(b) ? fired(b) : undecided();
             if (!ev.is_atom(b[i]) || !ev.is_invariant(b[i])) return undecided();
             if (!structural_eq(a[i], b[i])) return fired(b);
           }
           return fired(b.slice(a.size()));
         });
       }},
      {"sort",
       [] {
         return simple("sort", [](Data&, Data& b, Evaluator& ev) {
           if (!ev.all_atoms(b)) return undecided();
           std::vector<Coda> items(b.begin(), b.end());
           std::stable_sort(items.begin(), items.end(), lexical_less);
           return fired(Data(std::move(items)));
         });
       }},
      {"min",
       [] {
         return simple("min", [](Data& a, Data& b, Evaluator& ev) {
           if (!ev.all_atoms(b) || !ev.is_invariant(b)) return undecided();
           if (!a.empty()) return fired(canonical_order(a, b) <= 0 ? a : b);
           if (b.empty()) return fired({});
           return fired(Data{*std::min_element(b.begin(), b.end(), CanonicalLess{})});
         });
       }},
      {"n", [] { return marker("n"); }},
      {"b", [] { return marker("b"); }},
      {"q",
       [] {
         // Atoms (q A : B) with A, B sequences of `a` are kept coprime.
         Definition d = marker("q");
         d.branches.push_back([](Data& a, Data& b, Evaluator&) {
           if (!all_words_a(a) || !all_words_a(b)) return BranchResult::no_match();
           std::size_t g = std::gcd(a.size(), b.size());
           if (g <= 1) return BranchResult::no_match();
           Data left{word("q")};
           left.append(a.slice(0, a.size() / g));
           return fired(Data{make_coda(std::move(left), b.slice(0, b.size() / g))});
         });
         return d;
       }},
      {"{}",
       [] {
         Definition d;
         d.name = "{}";
         d.lang_family = true;
         d.branches.push_back([](Data& a, Data& b, Evaluator&) {
           return fired(eval_lang_atom(a[0].text(), a.slice(1), b));
         });
         return d;
       }},
      {"(:)", [] { return structural_marker("(:)", unit_atom()); }},
      {"((:):)", [] { return structural_marker("((:):)", byte_marker()); }},
      {"((:):(:))", [] { return structural_marker("((:):(:))", word_marker()); }},
      {"(:(:))", [] { return structural_marker("(:(:))", lang_marker()); }},
  };
  return table;
}

}  // namespace

bool lexical_less(const Coda& a, const Coda& b) {
  if (a.is_word() && b.is_word()) return a.text() < b.text();
  if (a.is_word() != b.is_word()) return a.is_word();
  return canonical_order(a, b) < 0;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : factories()) out.push_back(name);
    return out;
  }();
  return names;
}

Definition builtin(std::string_view name) {
  for (const auto& [n, make] : factories())
    if (n == name) return make();
  throw UnknownBuiltin("no builtin named '" + std::string(name) + "'");
}

Context install_prelude(const Context& ctx) {
  Context out = ctx;
  for (const auto& [name, make] : factories()) out = out.with_base(make());
  return out;
}

const Context& prelude() {
  static const Context ctx = install_prelude();
  return ctx;
}

}  // namespace coda
