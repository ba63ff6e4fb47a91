// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coda/algebra.hpp"
#include "coda/atoms.hpp"
#include "coda/engine.hpp"
#include "coda/lang.hpp"
#include "coda/organic.hpp"
#include "coda/prelude.hpp"
#include "coda/spacelab.hpp"
#include "coda/term.hpp"

using namespace coda;

namespace {

// Tolerances and limits, pinned.
constexpr double kTable3Seconds = 10.0;
constexpr double kTable1Seconds = 1.0;
constexpr double kTable2Seconds = 5.0;
constexpr double kFieldSeconds = 10.0;
constexpr double kL1Seconds = 10.0;
constexpr double kOrganicSeconds = 60.0;
constexpr std::size_t kEnumerationLimit = 5000;
constexpr std::size_t kEngineTrials = 5000;
constexpr std::size_t kEngineMinDecided = 1000;
constexpr std::size_t kAlgebraTriples = 1000;
constexpr unsigned kSeed = 20'251'015;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Every assertion whose description contains `key` must exist and pass.
void require_assertions(Outcome& o, const DemoReport& r, const std::string& key, std::size_t at_least = 1) {
  std::size_t seen = 0;
  for (const Assertion& a : r.assertions) {
    if (a.description.find(key) == std::string::npos) continue;
    ++seen;
    o.require(a.pass, r.name + ": " + a.description + " expected " + a.expected + ", got " + a.actual);
  }
  o.require(seen >= at_least, r.name + ": missing assertion '" + key + "'");
}

std::string ev(const std::string& source, const Context& ctx = prelude()) {
  return render(evaluate(parse(source), ctx).result);
}

// ---- 1 -----------------------------------------------------------------------

// Round to two significant figures in "d.d x 10^e" form.
std::string two_figures(const BigInt& v) {
  std::string digits = v.str();
  int exponent = static_cast<int>(digits.size()) - 1;
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent - 1));
  BigInt lead = (v + scale / 2) / scale;
  std::string l = lead.str();
  if (l.size() == 3) {
    ++exponent;
    l = l.substr(0, 2);
  }
  return std::string(1, l[0]) + "." + l[1] + "e" + std::to_string(exponent);
}

// Canonical strings of all data within (width, depth), built independently.
std::size_t brute_count(std::size_t width, std::size_t depth) {
  std::set<std::string> level{""};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::string> codas;
    for (const std::string& l : level)
      for (const std::string& r : level) codas.push_back("(" + l + ":" + r + ")");
    std::set<std::string> next{""};
    std::vector<std::string> frontier{""};
    for (std::size_t w = 0; w < width; ++w) {
      std::vector<std::string> grown;
      for (const std::string& p : frontier)
        for (const std::string& c : codas) grown.push_back(p.empty() ? c : p + " " + c);
      next.insert(grown.begin(), grown.end());
      frontier = std::move(grown);
    }
    level = std::move(next);
  }
  return level.size();
}

Outcome table3() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const char* exact[5][3] = {{"1", "1", "1"}, {"1", "2", "5"}, {"1", "3", "91"}, {"1", "4", "4369"}, {"1", "5", "406901"}};
  const char* deep[5][2] = {{"1", "1"}, {"26", "677"}, {"6.9e7", "2.2e31"}, {"7.0e21", "1.1e131"}, {"7.5e44", "1.0e359"}};
  std::size_t crossed = 0;
  for (std::size_t w = 0; w <= 4; ++w) {
    for (std::size_t d = 0; d <= 4; ++d) {
      BigInt v = count_pure_data({w, d});
      std::string cell = "(" + std::to_string(w) + "," + std::to_string(d) + ")";
      if (d <= 2 || w <= 1) {
        std::string printed = d <= 2 ? exact[w][d] : deep[w][d - 3];
        o.require(v.str() == printed, cell + " = " + v.str() + ", printed " + printed);
      } else {
        o.require(two_figures(v) == deep[w][d - 3], cell + " rounds to " + two_figures(v));
      }
      if (v <= kEnumerationLimit) {
        ++crossed;
        o.require(brute_count(w, d) == v, cell + " enumeration disagrees");
        if (d <= 2) o.require(enumerate_pure_data({w, d}).size() == v, cell + " library enumeration disagrees");
      }
    }
  }
  double s = seconds_since(t0);
  o.require(s < kTable3Seconds, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "25 cells, " + std::to_string(crossed) + " enumerated";
  return o;
}

// ---- 2, 3 ----------------------------------------------------------------------

Outcome table1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  DemoReport r = demo_bool();
  double s = seconds_since(t0);
  require_assertions(o, r, "endomorphisms");
  require_assertions(o, r, "f.g row", 4);
  require_assertions(o, r, "f+g row", 4);
  require_assertions(o, r, "multiplicative unit");
  require_assertions(o, r, "additive unit");
  o.require(s < kTable1Seconds, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "4 endos, 16+16 entries, ID and TRUE units";
  return o;
}

Outcome table2() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  DemoReport r = demo_bool_sequences();
  double s = seconds_since(t0);
  require_assertions(o, r, "L2 carrier");
  for (int i = 1; i <= 8; ++i) {
    std::string key = "e" + std::to_string(i);
    bool found = false;
    for (const Assertion& a : r.assertions)
      if (a.description == key) {
        found = true;
        o.require(a.pass, key + " expected " + a.expected + ", got " + a.actual);
      }
    o.require(found, "missing row " + key);
  }
  require_assertions(o, r, "number of (:)");
  o.require(s < kTable2Seconds, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "8x7 grid and (:) counts";
  return o;
}

// ---- 4 -------------------------------------------------------------------------

Outcome language() {
  Outcome o;
  auto check = [&](const std::string& src, const std::string& want, const Context& ctx = prelude()) {
    std::string got = ev(src, ctx);
    o.require(got == want, src + " gave " + got);
  };
  check("{B}:1 2 3", "1 2 3");
  check("{B B}:1 2 3", "1 2 3 1 2 3");
  check("{A B} a b:1 2", "a b 1 2");
  EvalOutcome def = evaluate(parse("def first2 : {first 2 : B}"), prelude());
  check("first2 : a b c d", "a b", def.context);
  if (o.pass) o.detail = "4 goldens";
  return o;
}

// ---- 5 -------------------------------------------------------------------------

Outcome fields() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  ProbeSet probes = ProbeSet::standard(words("a"));
  CarrierTable b = extract_carrier(words("bool"), probes);
  struct Case {
    std::string label;
    CarrierTable c;
    bool field;
  };
  std::vector<Case> cases{{"bool", b, true},          {"Z2", cyclic(2), true},         {"Z3", cyclic(3), true},
                          {"Z4", cyclic(4), false},   {"Z5", cyclic(5), true},         {"Z6", cyclic(6), false},
                          {"rem(1,3)", rem_carrier(1, 3), false}, {"rem(1,4)", rem_carrier(1, 4), false},
                          {"rem(2,3)", rem_carrier(2, 3), false}};
  for (const Case& k : cases) {
    FieldVerdict v = field_check(k.c);
    o.require(v.agree(), k.label + ": criteria disagree");
    o.require(v.direct == k.field, k.label + (v.direct ? " is a field" : " is not a field"));
  }
  double s = seconds_since(t0);
  o.require(s < kFieldSeconds, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(cases.size()) + " carriers, both criteria agree";
  return o;
}

// ---- 6 -------------------------------------------------------------------------

Outcome l1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  DemoReport r = demo_bool_sequences();
  require_assertions(o, r, "L1 carrier");
  require_assertions(o, r, "L1 endomorphisms");
  require_assertions(o, r, "units of . and (+)");
  require_assertions(o, r, "associative over 27^3");
  require_assertions(o, r, "(f+g).h = f.h + g.h");

  // Independent recomputation on the raw maps of a 3-element carrier.
  CarrierTable c = CarrierTable::from_operation(
      {Data{}, words("T"), words("F")}, {"0", "T", "F"}, Data{},
      [](const Data& x, const Data& y) { return x.empty() ? y : x; });
  std::vector<Endo> endos = enumerate_endos(c);
  o.require(endos.size() == 27, "enumerated " + std::to_string(endos.size()));
  auto dot = [](const Endo& f, const Endo& g) {
    Endo h{std::vector<std::size_t>(3)};
    for (std::size_t x = 0; x < 3; ++x) h.map[x] = f.map[g.map[x]];
    return h;
  };
  auto plus = [&](const Endo& f, const Endo& g) {
    Endo h{std::vector<std::size_t>(3)};
    for (std::size_t x = 0; x < 3; ++x) h.map[x] = c.plus(f.map[x], g.map[x]);
    return h;
  };
  Endo id = identity_endo(c), zero = zero_endo(c);
  for (const Endo& f : endos) {
    o.require(dot(id, f) == f && dot(f, id) == f && plus(zero, f) == f && plus(f, zero) == f, "unit laws");
    for (const Endo& g : endos)
      for (const Endo& h : endos) {
        o.require(dot(dot(f, g), h) == dot(f, dot(g, h)), "product associativity");
        o.require(plus(plus(f, g), h) == plus(f, plus(g, h)), "sum associativity");
        o.require(dot(plus(f, g), h) == plus(dot(f, h), dot(g, h)), "right distributivity");
      }
  }
  double s = seconds_since(t0);
  o.require(s < kL1Seconds, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "27 endos, 19683 triples";
  return o;
}

// ---- 7 -------------------------------------------------------------------------

Outcome organic_numbers() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  DemoReport n = organic_N();
  require_assertions(o, n, "(is a : a^m a^n) = a^(m+n), m,n <= 16");
  require_assertions(o, n, "rem(p,p) = n mod p, p in {2,3,5}, n <= 32");
  DemoReport n2 = demo_N2();
  require_assertions(o, n2, "reduce subspace = integer addition, |x|,|y| <= 8");
  require_assertions(o, n2, "sort homs act as 2x2 natural matrices, entries <= 4");
  require_assertions(o, n2, "mediant 1/2 (+) 1/3");
  DemoReport q = rationals();
  require_assertions(o, q, "S = rational addition, numerators and denominators <= 12");
  require_assertions(o, q, "1/2 (+) 1/3");

  // Direct spot checks with local oracles.
  for (std::size_t m = 0; m <= 16; m += 4)
    for (std::size_t k = 0; k <= 16; k += 5) {
      std::string src = "is a :";
      for (std::size_t i = 0; i < m + k; ++i) src += " a";
      std::string want;
      for (std::size_t i = 0; i < m + k; ++i) want += want.empty() ? "a" : " a";
      o.require(ev(src) == (want.empty() ? "()" : want), src);
    }
  for (std::size_t p : {2u, 3u, 5u})
    for (std::size_t x = 0; x <= 32; ++x) o.require(rem(p, p)(x) == x % p, "rem mod");
  o.require(ev("gcd : a a b b b b b", organic_context()) == "a a b b b b b", "gcd of coprime counts");
  o.require(ev("gcd : sort : a b b a b b b", organic_context()) == "a a b b b b b", "mediant 1/2, 1/3");
  double s = seconds_since(t0);
  o.require(s < kOrganicSeconds, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "N, Z, Mat2(N), mediant, rationals";
  return o;
}

// ---- 8, 9, 10 -----------------------------------------------------------------

Outcome gaussian() {
  Outcome o;
  DemoReport r = demo_gaussian();
  require_assertions(o, r, "(1+i)(1+i)");
  require_assertions(o, r, "20 random products match Z[i]");
  if (o.pass) o.detail = "(1+i)^2 = 2i, 20/20 products";
  return o;
}

Outcome sets() {
  Outcome o;
  DemoReport r = demo_sets();
  require_assertions(o, r, "carrier size");
  require_assertions(o, r, "semilattice");
  require_assertions(o, r, "unit homomorphisms");
  require_assertions(o, r, "constants ordered by (+) match inclusion");
  for (const Assertion& a : r.assertions)
    if (a.description == "constants ordered by (+) match inclusion")
      o.require(a.expected == "28/28 agree", "order pairs: " + a.expected);
  if (o.pass) o.detail = "8 elements, semilattice, 6 units, 28 pairs";
  return o;
}

Outcome sequences() {
  Outcome o;
  DemoReport r = demo_seq();
  for (const char* key : {"sum:T", "sort:T", "min:T", "first:T"}) require_assertions(o, r, key);
  std::vector<std::size_t> fib = fibonacci(10);
  std::vector<std::size_t> oracle{1, 1};
  while (oracle.size() < 10) oracle.push_back(oracle[oracle.size() - 1] + oracle[oracle.size() - 2]);
  o.require(fib == oracle, "fibonacci(10) differs");
  if (o.pass) o.detail = "4 subspace outputs, fibonacci(10)";
  return o;
}

// ---- 11 ------------------------------------------------------------------------

class Generator {
 public:
  explicit Generator(unsigned seed) : rng_(seed) {}

  std::string data(int depth) {
    std::size_t n = pick(4);
    std::string out;
    for (std::size_t i = 0; i < n; ++i) out += (out.empty() ? "" : " ") + item(depth);
    return out;
  }

  std::string item(int depth) {
    if (depth <= 0 || pick(3) == 0) return kWords[pick(kWords.size())];
    return "(" + data(depth - 1) + ":" + data(depth - 1) + ")";
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

 private:
  static inline const std::vector<std::string> kWords{"pass", "null", "rev", "first", "last", "left", "right", "sort",
                                                      "bool", "not",  "const", "is",  "has",  "a",    "b",    "c"};
  std::mt19937 rng_;
};

Outcome engine_properties() {
  Outcome o;
  const Budget budget{2000, 50'000};
  const Context& ctx = prelude();
  const Context wider = add_definition(ctx, "zz_fresh", words("rev"));
  Generator gen(kSeed);
  std::size_t decided[4] = {0, 0, 0, 0};

  for (std::size_t t = 0; t < kEngineTrials; ++t) {
    std::string f = gen.data(2), x = gen.data(2);
    Data e = parse("(" + f + ":" + x + ")");

    EvalOutcome r1 = evaluate(e, ctx, budget), r2 = evaluate(e, ctx, budget);
    o.require(structural_eq(r1.result, r2.result) && r1.steps_used == r2.steps_used && r1.exhausted == r2.exhausted,
              "nondeterministic: " + render(e));
    ++decided[0];
    if (!r1.normalized) continue;

    EvalOutcome again = evaluate(r1.result, ctx, budget);
    o.require(structural_eq(again.result, r1.result), "normal form moved: " + render(r1.result));
    ++decided[1];

    EvalOutcome grown = evaluate(e, wider, budget);
    if (!grown.exhausted) {
      o.require(structural_eq(grown.result, r1.result), "fresh definition changed " + render(e));
      ++decided[2];
    }

    EvalOutcome inner = evaluate(parse(x), ctx, budget);
    if (inner.normalized) {
      EvalOutcome replaced = evaluate(Data{make_coda(parse(f), inner.result)}, ctx, budget);
      if (replaced.normalized) {
        o.require(structural_eq(replaced.result, r1.result), "congruence failed: " + render(e));
        ++decided[3];
      }
    }
  }
  const char* names[4] = {"determinism", "idempotence", "monotonicity", "congruence"};
  for (int i = 0; i < 4; ++i)
    o.require(decided[i] >= kEngineMinDecided,
              std::string(names[i]) + " decided only " + std::to_string(decided[i]) + " trials");
  std::ostringstream s;
  s << decided[0] << "/" << decided[1] << "/" << decided[2] << "/" << decided[3] << " trials";
  if (o.pass) o.detail = s.str();
  return o;
}

// ---- 12 ------------------------------------------------------------------------

Outcome global_algebra() {
  Outcome o;
  const std::vector<std::string> pool{"pass", "null", "rev", "first", "last", "sort", "bool", "not",
                                      "is a", "ap {a}", "const b", "right", "left", "has a", "min"};
  ProbeSet probes;
  probes.budget = Budget{5000, 100'000};
  for (const char* p : {"", "a", "a b", "b a c", "(:)", "(:) (:)", "a (:) b", "(n:a) c"}) probes.probes.push_back(parse(p));
  const Context& ctx = prelude();
  auto run = [&](const Data& d) { return evaluate(d, ctx, probes.budget); };

  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<std::size_t> any(0, pool.size() - 1);
  std::size_t right_holds = 0;
  for (std::size_t t = 0; t < kAlgebraTriples; ++t) {
    Data a = parse(pool[any(rng)]), b = parse(pool[any(rng)]), c = parse(pool[any(rng)]);
    for (const Data& x : probes.probes) {
      EvalOutcome composed = run(apply(product(a, b), x));
      EvalOutcome nested = run(apply(a, apply(b, x)));
      if (composed.normalized && nested.normalized)
        o.require(structural_eq(composed.result, nested.result), "product identity: " + render(product(a, b)));
      EvalOutcome summed = run(apply(sum(a, b), x));
      EvalOutcome parts = run(concat(apply(a, x), apply(b, x)));
      if (summed.normalized && parts.normalized)
        o.require(structural_eq(summed.result, parts.result), "sum identity: " + render(sum(a, b)));
    }
    Verdict v = check_right_distributivity(a, b, c, probes, ctx);
    o.require(!v.refuted(), "right distributivity: " + to_string(v));
    right_holds += v.holds();
  }

  // Left distributivity: find a counterexample and verify it by hand.
  bool verified = false;
  std::string example;
  for (std::size_t i = 0; i < pool.size() && !verified; ++i)
    for (std::size_t j = 0; j < pool.size() && !verified; ++j)
      for (std::size_t k = 0; k < pool.size() && !verified; ++k) {
        Data a = parse(pool[i]), b = parse(pool[j]), c = parse(pool[k]);
        Verdict v = check_left_distributivity(a, b, c, probes, ctx);
        if (!v.refuted() || v.witness.empty()) continue;
        const Data& x = v.witness.front();
        EvalOutcome lhs = run(apply(c, concat(apply(a, x), apply(b, x))));
        EvalOutcome rhs = run(concat(apply(c, apply(a, x)), apply(c, apply(b, x))));
        if (lhs.normalized && rhs.normalized && !structural_eq(lhs.result, rhs.result)) {
          verified = true;
          example = pool[k] + ".(" + pool[i] + "+" + pool[j] + ") on " + render(x) + ": " + render(lhs.result) +
                    " vs " + render(rhs.result);
        }
      }
  o.require(verified, "no self-verifying left-distributivity counterexample");
  if (o.pass) o.detail = std::to_string(right_holds) + " right-distributive triples; counterexample " + example;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"pure data counts", table3},
      {"bool endomorphism tables", table1},
      {"L2 inner endomorphism grid", table2},
      {"language goldens", language},
      {"field criteria agree", fields},
      {"L1 semiring", l1},
      {"organic number oracles", organic_numbers},
      {"gaussian integers", gaussian},
      {"sets semilattice", sets},
      {"sequence subspaces and fibonacci", sequences},
      {"engine properties", engine_properties},
      {"global algebra", global_algebra},
  };

  std::size_t failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = seconds_since(t0);
    if (!o.pass) ++failed;
    std::printf("%s %2zu %-34s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, s, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
