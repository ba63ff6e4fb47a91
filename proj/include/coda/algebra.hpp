#pragma once

// Global product and sum of data, and finite-evidence checks of the
// algebraic predicates (idempotent, associative, algebraic, distributive).
// Every verdict is "on probes": universally quantified laws are only ever
// tested on a finite sample.

#include <string>
#include <vector>

#include "coda/engine.hpp"
#include "coda/prelude.hpp"

namespace coda {

struct ProbeSet {
  std::vector<Data> probes;
  Budget budget;

  // All pure data of width and depth <= 2, then the words of `alphabet`
  // singly and in pairs.
  static ProbeSet standard(const Data& alphabet = {}, Budget budget = {});
};

struct Verdict {
  enum class Kind { holds_on_probes, refuted, undecided };
  Kind kind = Kind::holds_on_probes;
  std::vector<Data> witness;  // probes that exhibit the failure
  std::string detail;

  bool holds() const { return kind == Kind::holds_on_probes; }
  bool refuted() const { return kind == Kind::refuted; }
};
std::string to_string(const Verdict& v);

// (f : x) as a one-coda data.
Data apply(const Data& f, const Data& x);

// prod (:a) (:b), so that (a.b):X = a:b:X
Data product(const Data& a, const Data& b);
// sum (:a) (:b), so that (a+b):X = (a:X) (b:X)
Data sum(const Data& a, const Data& b);

// f:X = g:X on every probe X.
Verdict check_same_action(const Data& f, const Data& g, const ProbeSet& probes,
                          const Context& ctx = prelude());

// (a+b).c = (a.c)+(b.c)
Verdict check_right_distributivity(const Data& a, const Data& b, const Data& c,
                                   const ProbeSet& probes, const Context& ctx = prelude());
// c.(a+b) = (c.a)+(c.b); fails in general
Verdict check_left_distributivity(const Data& a, const Data& b, const Data& c,
                                  const ProbeSet& probes, const Context& ctx = prelude());

// d.d = d
Verdict check_idempotent(const Data& d, const ProbeSet& probes, const Context& ctx = prelude());
// (d:X Y) = (d:(d:X) Y) = (d:X (d:Y))
Verdict check_associative(const Data& d, const ProbeSet& probes, const Context& ctx = prelude());
// (d:X Y) = (d:Y X)
Verdict check_algebraic(const Data& d, const ProbeSet& probes, const Context& ctx = prelude());
// (d:X Y) = (d:X) (d:Y)
Verdict check_distributive(const Data& d, const ProbeSet& probes, const Context& ctx = prelude());

}  // namespace coda
