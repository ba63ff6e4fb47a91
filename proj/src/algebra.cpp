#include "coda/algebra.hpp"

#include <functional>

#include "coda/lang.hpp"

namespace coda {

namespace {

Coda wrap(const Data& d) { return make_coda(Data{}, d); }

// Runs `check` on every probe tuple; the first `never` refutes, any
// `undecided` downgrades the overall verdict.
Verdict run(std::size_t arity, const ProbeSet& probes,
            const std::function<TriBool(const std::vector<Data>&)>& check) {
  Verdict out;
  std::vector<std::size_t> idx(arity, 0);
  const std::size_t n = probes.probes.size();
  if (n == 0) return out;
  std::vector<Data> tuple(arity);
  for (;;) {
    for (std::size_t i = 0; i < arity; ++i) tuple[i] = probes.probes[idx[i]];
    TriBool t = check(tuple);
    if (t == TriBool::never) {
      out.kind = Verdict::Kind::refuted;
      out.witness = tuple;
      return out;
    }
    if (t == TriBool::undecided && out.kind == Verdict::Kind::holds_on_probes) {
      out.kind = Verdict::Kind::undecided;
      out.witness = tuple;
    }
    std::size_t i = arity;
    while (i > 0 && ++idx[i - 1] == n) idx[--i] = 0;
    if (i == 0) return out;
  }
}

TriBool both(TriBool a, TriBool b) {
  if (a == TriBool::never || b == TriBool::never) return TriBool::never;
  if (a == TriBool::undecided || b == TriBool::undecided) return TriBool::undecided;
  return TriBool::always;
}

}  // namespace

std::string to_string(const Verdict& v) {
  std::string out;
  switch (v.kind) {
    case Verdict::Kind::holds_on_probes: out = "holds_on_probes"; break;
    case Verdict::Kind::refuted: out = "refuted"; break;
    case Verdict::Kind::undecided: out = "undecided"; break;
  }
  if (!v.witness.empty()) {
    out += " [";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out += ", ";
      out += render(v.witness[i]);
    }
    out += "]";
  }
  if (!v.detail.empty()) out += " " + v.detail;
  return out;
}

ProbeSet ProbeSet::standard(const Data& alphabet, Budget budget) {
  ProbeSet out;
  out.budget = budget;
  out.probes = enumerate_pure_data({2, 2});
  for (const Coda& a : alphabet) out.probes.push_back(Data{a});
  for (const Coda& a : alphabet)
    for (const Coda& b : alphabet) out.probes.push_back(Data{a, b});
  return out;
}

Data apply(const Data& f, const Data& x) { return Data{make_coda(f, x)}; }

Data product(const Data& a, const Data& b) { return Data{word("prod"), wrap(a), wrap(b)}; }

Data sum(const Data& a, const Data& b) { return Data{word("sum"), wrap(a), wrap(b)}; }

Verdict check_same_action(const Data& f, const Data& g, const ProbeSet& probes, const Context& ctx) {
  return run(1, probes, [&](const std::vector<Data>& x) {
    return equal(apply(f, x[0]), apply(g, x[0]), ctx, probes.budget);
  });
}

Verdict check_right_distributivity(const Data& a, const Data& b, const Data& c,
                                   const ProbeSet& probes, const Context& ctx) {
  return check_same_action(product(sum(a, b), c), sum(product(a, c), product(b, c)), probes, ctx);
}

Verdict check_left_distributivity(const Data& a, const Data& b, const Data& c,
                                  const ProbeSet& probes, const Context& ctx) {
  return check_same_action(product(c, sum(a, b)), sum(product(c, a), product(c, b)), probes, ctx);
}

Verdict check_idempotent(const Data& d, const ProbeSet& probes, const Context& ctx) {
  return check_same_action(product(d, d), d, probes, ctx);
}

Verdict check_associative(const Data& d, const ProbeSet& probes, const Context& ctx) {
  return run(2, probes, [&](const std::vector<Data>& xy) {
    Evaluator ev(ctx, probes.budget);
    Data v1 = ev.eval(apply(d, concat(xy[0], xy[1])));
    Data sx = ev.eval(apply(d, xy[0]));
    Data sy = ev.eval(apply(d, xy[1]));
    Data v2 = ev.eval(apply(d, concat(sx, xy[1])));
    Data v3 = ev.eval(apply(d, concat(xy[0], sy)));
    return both(ev.equal(v1, v2), ev.equal(v1, v3));
  });
}

Verdict check_algebraic(const Data& d, const ProbeSet& probes, const Context& ctx) {
  return run(2, probes, [&](const std::vector<Data>& xy) {
    return equal(apply(d, concat(xy[0], xy[1])), apply(d, concat(xy[1], xy[0])), ctx, probes.budget);
  });
}

Verdict check_distributive(const Data& d, const ProbeSet& probes, const Context& ctx) {
  return run(2, probes, [&](const std::vector<Data>& xy) {
    return equal(apply(d, concat(xy[0], xy[1])), concat(apply(d, xy[0]), apply(d, xy[1])), ctx,
                 probes.budget);
  });
}

}  // namespace coda
