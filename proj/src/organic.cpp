#include "coda/organic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "coda/atoms.hpp"
#include "coda/errors.hpp"
#include "coda/lang.hpp"
#include "organic_support.hpp"

namespace coda {

// ---- reports ---------------------------------------------------------------

bool DemoReport::passed() const { return failures() == 0; }

std::size_t DemoReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(assertions.begin(), assertions.end(), [](const Assertion& a) { return !a.pass; }));
}

void DemoReport::check(std::string description, std::string expected, std::string actual) {
  bool pass = expected == actual;
  assertions.push_back({std::move(description), std::move(expected), std::move(actual), pass});
}

std::string format_text(const DemoReport& r) {
  std::ostringstream out;
  out << "demo " << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
      << r.assertions.size() - r.failures() << "/" << r.assertions.size() << ")\n";
  std::size_t w = 0;
  for (const Assertion& a : r.assertions) w = std::max(w, a.description.size());
  for (const Assertion& a : r.assertions) {
    out << (a.pass ? "  ok    " : "  FAIL  ") << a.description
        << std::string(w - a.description.size() + 2, ' ') << a.actual;
    if (!a.pass) out << "  (expected " << a.expected << ")";
    out << '\n';
  }
  for (const std::string& t : r.tables) out << '\n' << t;
  return out.str();
}

std::string format_tsv(const DemoReport& r) {
  std::ostringstream out;
  out << "demo\tdescription\texpected\tactual\tpass\n";
  for (const Assertion& a : r.assertions)
    out << r.name << '\t' << a.description << '\t' << a.expected << '\t' << a.actual << '\t'
        << (a.pass ? "1" : "0") << '\n';
  return out.str();
}

namespace organic_detail {

Data pow(std::string_view atom, std::size_t n) { return repeat(word(atom), n); }

Data spaced(std::initializer_list<Data> parts) {
  Data out;
  for (const Data& p : parts) out.append(p);
  return out;
}

Coda quoted(const Data& d) { return make_coda(Data{}, d); }

Data compose_all(const std::vector<Data>& stages) {
  Data out{word("prod")};
  for (const Data& s : stages) out.push_back(quoted(s));
  return out;
}

Data act(const Data& f, const Data& x, const Context& ctx, Budget budget) {
  return evaluate(apply(f, x), ctx, budget).result;
}

std::size_t count_word(const Data& d, std::string_view w) {
  return static_cast<std::size_t>(
      std::count_if(d.begin(), d.end(), [w](const Coda& c) { return c.is_word() && c.text() == w; }));
}

void Tally::record(bool pass, const std::function<std::string()>& detail) {
  ++total;
  if (pass) {
    ++ok;
  } else if (first_failure.empty()) {
    first_failure = detail();
  }
}

void Tally::report(DemoReport& r, std::string description) const {
  std::string expected = std::to_string(total) + "/" + std::to_string(total) + " agree";
  std::string actual = std::to_string(ok) + "/" + std::to_string(total) + " agree";
  if (!first_failure.empty()) actual += "; first: " + first_failure;
  r.check(std::move(description), std::move(expected), std::move(actual));
}

}  // namespace organic_detail

using namespace organic_detail;

// ---- native helpers ------------------------------------------------------------

namespace {

BranchResult fired(Data d) { return BranchResult::fired(std::move(d)); }

Definition native(std::string name, Branch b) {
  Definition d;
  d.name = std::move(name);
  d.branches.push_back(std::move(b));
  return d;
}

bool is_a_run(const Data& d) {
  return std::all_of(d.begin(), d.end(), [](const Coda& c) { return c.is_word() && c.text() == "a"; });
}

// (q a^n : a^d) with d >= 1.
bool is_rational(const Coda& c) {
  const Data& l = c.left();
  return !l.empty() && l[0].is_word() && l[0].text() == "q" && is_a_run(l.slice(1)) &&
         !c.right().empty() && is_a_run(c.right());
}

Coda q_coda(Data numerator, Data denominator) {
  Data left{word("q")};
  left.append(numerator);
  return make_coda(std::move(left), std::move(denominator));
}

Data pr_of(const Data& x, const Data& y) {
  Data left{word("pr")};
  left.append(x);
  return Data{make_coda(std::move(left), y)};
}

Definition reduce_def() {
  return native("reduce", [](Data& a, Data& b, Evaluator& ev) {
    if (!ev.all_atoms(b)) return BranchResult::undecided();
    std::vector<std::pair<Coda, Coda>> pairs;
    if (a.empty()) pairs.emplace_back(word("a"), word("b"));
    for (const Coda& p : a) {
      if (p.left().size() != 1 || p.right().size() != 1) return BranchResult::no_match();
      pairs.emplace_back(p.left()[0], p.right()[0]);
    }
    std::vector<long long> net(pairs.size(), 0);
    Data rest;
    for (const Coda& y : b) {
      auto it = std::find_if(pairs.begin(), pairs.end(), [&](const auto& p) {
        return structural_eq(p.first, y) || structural_eq(p.second, y);
      });
      if (it == pairs.end()) {
        rest.push_back(y);
        continue;
      }
      auto i = static_cast<std::size_t>(it - pairs.begin());
      net[i] += structural_eq(it->first, y) ? 1 : -1;
    }
    Data out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const Coda& atom = net[i] >= 0 ? pairs[i].first : pairs[i].second;
      out.append(repeat(atom, static_cast<std::size_t>(net[i] >= 0 ? net[i] : -net[i])));
    }
    out.append(rest);
    return fired(std::move(out));
  });
}

Definition subst_def() {
  return native("subst", [](Data& a, Data& b, Evaluator& ev) {
    if (!ev.all_atoms(b)) return BranchResult::undecided();
    for (const Coda& p : a)
      if (p.left().size() != 1) return BranchResult::no_match();
    Data out;
    for (const Coda& y : b) {
      auto it = std::find_if(a.begin(), a.end(), [&](const Coda& p) { return structural_eq(p.left()[0], y); });
      if (it == a.end())
        out.push_back(y);
      else
        out.append(it->right());
    }
    return fired(std::move(out));
  });
}

Definition squash_def() {
  return native("squash", [](Data& a, Data& b, Evaluator& ev) {
    if (!ev.all_atoms(b)) return BranchResult::undecided();
    std::vector<bool> seen(a.size(), false);
    Data out;
    for (const Coda& y : b) {
      auto it = std::find_if(a.begin(), a.end(), [&](const Coda& k) { return structural_eq(k, y); });
      if (it != a.end()) {
        auto i = static_cast<std::size_t>(it - a.begin());
        if (seen[i]) continue;
        seen[i] = true;
      }
      out.push_back(y);
    }
    return fired(std::move(out));
  });
}

Definition gcd_def() {
  return native("gcd", [](Data& a, Data& b, Evaluator& ev) {
    if (!ev.all_atoms(b)) return BranchResult::undecided();
    Data keys = a.empty() ? words("a b") : a;
    std::vector<std::size_t> counts(keys.size(), 0);
    Data rest;
    for (const Coda& y : b) {
      auto it = std::find_if(keys.begin(), keys.end(), [&](const Coda& k) { return structural_eq(k, y); });
      if (it == keys.end())
        rest.push_back(y);
      else
        ++counts[static_cast<std::size_t>(it - keys.begin())];
    }
    std::size_t g = 0;
    for (std::size_t c : counts) g = std::gcd(g, c);
    if (g <= 1) return fired(b);
    Data out;
    for (std::size_t i = 0; i < keys.size(); ++i) out.append(repeat(keys[i], counts[i] / g));
    out.append(rest);
    return fired(std::move(out));
  });
}

Definition pr_def() {
  return native("pr", [](Data& a, Data& b, Evaluator& ev) {
    if (!ev.all_atoms(b)) return BranchResult::undecided();
    return fired(repeat(word("a"), a.size() * b.size()));
  });
}

// One fold per step: (qadd : x y rest) -> (qadd : x+y rest).
Definition qadd_def() {
  return native("qadd", [](Data& a, Data& b, Evaluator& ev) {
    if (!ev.all_atoms(b)) return BranchResult::undecided();
    std::vector<Coda> qs;
    for (const Coda& y : b)
      if (is_rational(y)) qs.push_back(y);
    if (qs.size() <= 1) return fired(Data(std::move(qs)));
    const Coda& x = qs[0];
    const Coda& y = qs[1];
    Data num = concat(pr_of(x.left().slice(1), y.right()), pr_of(y.left().slice(1), x.right()));
    Data folded{q_coda(std::move(num), pr_of(x.right(), y.right()))};
    for (std::size_t i = 2; i < qs.size(); ++i) folded.push_back(qs[i]);
    Data left{word("qadd")};
    left.append(a);
    return fired(Data{make_coda(std::move(left), std::move(folded))});
  });
}

Definition qzero_def() {
  return native("qzero", [](Data&, Data& b, Evaluator& ev) {
    if (!ev.all_atoms(b)) return BranchResult::undecided();
    Data out;
    for (const Coda& y : b)
      if (is_rational(y) && y.left().size() > 1) out.push_back(y);
    return fired(std::move(out));
  });
}

Definition product_def() {
  return native("product", [](Data& a, Data& b, Evaluator& ev) {
    if (a.size() != 1 || !is_rational(a[0])) return BranchResult::no_match();
    if (!ev.all_atoms(b)) return BranchResult::undecided();
    if (b.empty()) return fired({});
    if (b.size() != 1 || !is_rational(b[0])) return BranchResult::no_match();
    const Coda& r = a[0];
    const Coda& x = b[0];
    return fired(Data{q_coda(pr_of(r.left().slice(1), x.left().slice(1)), pr_of(r.right(), x.right()))});
  });
}

}  // namespace

const Context& organic_context() {
  static const Context ctx = [] {
    Context c = prelude();
    for (Definition (*make)() : {reduce_def, subst_def, squash_def, gcd_def, pr_def, qadd_def, qzero_def,
                                 product_def})
      c = c.with_base(make());
    return c;
  }();
  return ctx;
}

Coda rational(std::size_t numerator, std::size_t denominator) {
  return q_coda(pow("a", numerator), pow("a", denominator));
}

// ---- search ------------------------------------------------------------------

ProbeSet search_probes() {
  ProbeSet p;
  p.budget = Budget{2'000, 100'000};
  p.probes = enumerate_pure_data({2, 1});
  p.probes.push_back(Data{lang_marker()});
  p.probes.push_back(Data{byte_marker()});
  p.probes.push_back(words("a"));
  p.probes.push_back(words("b"));
  p.probes.push_back(words("a b"));
  return p;
}

std::vector<SearchResult> search_spaces(const std::vector<std::string>& words_in, std::size_t max_len,
                                        const ProbeSet& probes, std::size_t cap) {
  std::vector<Coda> tokens;
  for (const std::string& w : words_in) {
    tokens.push_back(word(w));
    tokens.push_back(lang_atom(w));
  }
  std::size_t total = 1, layer = 1;
  for (std::size_t len = 1; len <= max_len && !tokens.empty(); ++len) {
    if (layer > cap / tokens.size()) throw CapExceeded("space search exceeds " + std::to_string(cap) + " candidates");
    layer *= tokens.size();
    total += layer;
    if (total > cap) throw CapExceeded("space search exceeds " + std::to_string(cap) + " candidates");
  }

  std::vector<Data> candidates{Data{}};
  for (std::size_t len = 1; len <= max_len && !tokens.empty(); ++len) {
    std::vector<std::size_t> digits(len, 0);
    do {
      std::vector<Coda> items;
      for (std::size_t d : digits) items.push_back(tokens[d]);
      candidates.emplace_back(std::move(items));
    } while ([&] {
      for (std::size_t i = len; i-- > 0;) {
        if (++digits[i] < tokens.size()) return true;
        digits[i] = 0;
      }
      return false;
    }());
  }

  std::vector<SearchResult> out;
  for (const Data& c : candidates) {
    Verdict v = check_associative(c, probes);
    if (!v.holds()) continue;
    SearchResult r{c, std::move(v), std::nullopt};
    try {
      r.carrier_preview = extract_carrier(c, probes, prelude(), {.cap = 6, .close = true, .strict = false});
    } catch (const Error&) {
    }
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const SearchResult& x, const SearchResult& y) {
    if (x.candidate.nodes() != y.candidate.nodes()) return x.candidate.nodes() < y.candidate.nodes();
    return canonical_order(x.candidate, y.candidate) < 0;
  });
  return out;
}

// ---- natural numbers -----------------------------------------------------------

std::size_t Rem::operator()(std::size_t n) const {
  while (n >= p && n >= q) n -= p;
  return n;
}

Rem rem(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("rem needs p, q >= 1");
  return Rem{p, q};
}

CarrierTable rem_carrier(std::size_t p, std::size_t q) {
  Rem f = rem(p, q);
  std::size_t size = std::max(p, q);
  std::vector<Data> elements;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < size; ++k) {
    elements.push_back(pow("a", k));
    names.push_back(std::to_string(k));
  }
  CarrierTable c = CarrierTable::from_operation(elements, names, Data{}, [&](const Data& x, const Data& y) {
    return pow("a", f(x.size() + y.size()));
  });
  c.space = Data{word("rem"), word(std::to_string(p)), word(std::to_string(q))};
  return c;
}

// ---- sequences -------------------------------------------------------------------

Data seq(const Data& space, std::string_view marker) {
  return Data{word("ap"), word("prod"), quoted(Data{word("put"), word(marker)}), quoted(space),
              quoted(Data{word("get"), word(marker)})};
}

Data inner(const Data& space, std::string_view marker, const Data& f) {
  Data s = seq(space, marker);
  return compose_all({s, Data{word("put"), word(marker)}, f, Data{word("get"), word(marker)}, s});
}

std::vector<std::size_t> fibonacci(std::size_t k) {
  if (k > 30) throw std::invalid_argument("fibonacci is limited to 30 terms");
  const Data N = words("is a");
  // Sum of the last two atoms of a sequence of naturals.
  const Data last2 = compose_all({inner(N, "n", N), words("last 2")});
  std::vector<std::size_t> values;
  std::vector<Coda> terms;
  for (std::size_t i = 0; i < std::min<std::size_t>(k, 2); ++i) {
    terms.push_back(make_coda(words("n"), words("a")));
    values.push_back(1);
  }
  while (values.size() < k) {
    // last2 only reads the final two atoms, so they are all it is given.
    Data tail(std::vector<Coda>(terms.end() - 2, terms.end()));
    std::size_t expected = values[values.size() - 1] + values[values.size() - 2];
    // Template expansion repeats a language atom once per item of the sum.
    Budget budget{std::max(Budget::kDefaultSteps, 200 * expected),
                  std::max(Budget::kDefaultNodes, 5'000 * expected)};
    Data next = evaluate(apply(last2, tail), prelude(), budget).result;
    if (next.size() != 1) throw std::runtime_error("fibonacci step did not produce one atom");
    values.push_back(count_word(next[0].right(), "a"));
    terms.push_back(next[0]);
  }
  return values;
}

// ---- demos -------------------------------------------------------------------------

namespace {

const Data kA = words("a");

std::string show(const Data& d) { return render(d); }

Data enc_int(long long x, std::string_view pos, std::string_view neg) {
  return x >= 0 ? pow(pos, static_cast<std::size_t>(x)) : pow(neg, static_cast<std::size_t>(-x));
}

Coda pair(std::string_view key, const Data& value) { return make_coda(words(key), value); }

Data with_args(std::string_view head, std::vector<Coda> args) {
  Data out{word(head)};
  for (Coda& c : args) out.push_back(std::move(c));
  return out;
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

std::string verdict_name(const FieldVerdict& v) {
  if (!v.agree()) return "criteria disagree";
  return v.direct ? "field" : "not field";
}

ProbeSet word_probes(std::string_view alphabet) {
  ProbeSet p = ProbeSet::standard(words(alphabet));
  p.budget = Budget{200'000, 1'000'000};
  return p;
}

}  // namespace

DemoReport organic_N() {
  DemoReport r{"organic-n", {}, {}};
  const Context& ctx = prelude();
  const Data N = words("is a");
  auto hom = [](std::size_t k) { return spaced({words("ap const"), pow("a", k)}); };

  Tally add;
  for (std::size_t m = 0; m <= 16; ++m)
    for (std::size_t n = 0; n <= 16; ++n)
      add.record(act(N, spaced({pow("a", m), pow("a", n)}), ctx) == pow("a", m + n),
                 [&] { return std::to_string(m) + "+" + std::to_string(n); });
  add.report(r, "(is a : a^m a^n) = a^(m+n), m,n <= 16");
  r.check("a^2 (+) a^3", show(pow("a", 5)), show(act(N, words("a a a a a"), ctx)));
  r.check("(is a : x a y a) keeps the a atoms", "a a", show(act(N, words("x a y a"), ctx)));
  r.check("(while remove a a a : a^7)", "a", show(act(words("while remove a a a"), pow("a", 7), ctx)));

  Tally times3;
  for (std::size_t n = 0; n <= 16; ++n)
    times3.record(act(hom(3), pow("a", n), ctx) == pow("a", 3 * n), [&] { return "n=" + std::to_string(n); });
  times3.report(r, "(ap const a a a : a^n) = a^(3n), n <= 16");

  Tally composed, summed;
  for (std::size_t n = 0; n <= 8; ++n) {
    composed.record(act(product(hom(2), hom(3)), pow("a", n), ctx) == act(hom(6), pow("a", n), ctx),
                    [&] { return "n=" + std::to_string(n); });
    summed.record(act(compose_all({N, sum(hom(2), hom(3))}), pow("a", n), ctx) == pow("a", 5 * n),
                  [&] { return "n=" + std::to_string(n); });
  }
  composed.report(r, "hom(2).hom(3) = hom(6) on a^n, n <= 8");
  summed.report(r, "hom(2)+hom(3) = hom(5) on a^n, n <= 8");

  Tally homs, commuting;
  for (std::size_t k = 0; k <= 4; ++k) {
    for (std::size_t m = 0; m <= 6; ++m)
      for (std::size_t n = 0; n <= 6; ++n) {
        Data whole = act(hom(k), spaced({pow("a", m), pow("a", n)}), ctx);
        Data parts = spaced({act(hom(k), pow("a", m), ctx), act(hom(k), pow("a", n), ctx)});
        homs.record(whole == parts && whole == pow("a", k * (m + n)),
                    [&] { return "k=" + std::to_string(k) + " m=" + std::to_string(m) + " n=" + std::to_string(n); });
      }
    for (std::size_t j = 0; j <= 4; ++j)
      commuting.record(act(product(hom(j), hom(k)), pow("a", 3), ctx) == act(product(hom(k), hom(j)), pow("a", 3), ctx),
                       [&] { return std::to_string(j) + "," + std::to_string(k); });
  }
  homs.report(r, "k -> hom(k) lands in homomorphisms, k <= 4");
  commuting.report(r, "hom(j).hom(k) = hom(k).hom(j), j,k <= 4");
  std::vector<std::string> images;
  for (std::size_t k = 0; k <= 4; ++k) images.push_back(std::to_string(act(hom(k), kA, ctx).size()));
  r.check("hom(k) : a for k = 0..4 (injective)", "0 1 2 3 4", joined(images));

  Tally mod;
  for (std::size_t p : {2, 3, 5})
    for (std::size_t n = 0; n <= 32; ++n) {
      Data rule = spaced({words("while remove"), pow("a", p)});
      mod.record(act(rule, pow("a", n), ctx) == pow("a", n % p) && rem(p, p)(n) == n % p,
                 [&] { return "p=" + std::to_string(p) + " n=" + std::to_string(n); });
    }
  mod.report(r, "rem(p,p) = n mod p, p in {2,3,5}, n <= 32");
  r.check("rem(3,3)(7)", "1", std::to_string(rem(3, 3)(7)));
  r.check("rem(1,3)(5)", "2", std::to_string(rem(1, 3)(5)));
  r.check("rem(2,2)(4)", "0", std::to_string(rem(2, 2)(4)));

  Tally saturate;
  for (std::size_t n = 0; n <= 16; ++n)
    saturate.record(act(words("min a a"), pow("a", n), ctx) == pow("a", rem(1, 3)(n)),
                    [&] { return "n=" + std::to_string(n); });
  saturate.report(r, "(min a a : a^n) = a^rem(1,3)(n), n <= 16");

  Tally subspace;
  for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {1, 3}, {2, 2}, {3, 3}, {2, 3}, {3, 2}, {5, 5}, {2, 5}}) {
    Rem f = rem(p, q);
    for (std::size_t x = 0; x <= 16; ++x)
      for (std::size_t y = 0; y <= 16; ++y)
        subspace.record(f(f(x)) == f(x) && f(x + y) == f(f(x) + y) && f(x + y) == f(x + f(y)),
                        [&] { return "rem(" + std::to_string(p) + "," + std::to_string(q) + ") at " +
                                     std::to_string(x) + "," + std::to_string(y); });
  }
  subspace.report(r, "rem(p,q) is an idempotent subspace of N on 0..16");

  std::ostringstream table;
  table << "carrier     direct  units   verdict\n";
  auto field_row = [&](const std::string& label, const CarrierTable& c, const std::string& expected) {
    FieldVerdict v = field_check(c);
    table << label << std::string(12 - std::min<std::size_t>(label.size(), 11), ' ') << (v.direct ? "yes" : "no ")
          << "     " << (v.via_units ? "yes" : "no ") << "     " << verdict_name(v) << '\n';
    r.check(label + " field check", expected, verdict_name(v));
  };
  field_row("Z2", cyclic(2), "field");
  field_row("Z3", cyclic(3), "field");
  field_row("Z4", cyclic(4), "not field");
  field_row("Z5", cyclic(5), "field");
  field_row("Z6", cyclic(6), "not field");
  field_row("rem(1,3)", rem_carrier(1, 3), "not field");
  field_row("rem(1,4)", rem_carrier(1, 4), "not field");
  r.tables.push_back(table.str());

  ProbeSet probes = word_probes("a");
  CarrierOptions bounded{.cap = 8, .close = true, .strict = false};
  CarrierTable counted = extract_carrier(parse("ap {a}"), probes, ctx, bounded);
  CarrierTable filtered = extract_carrier(N, probes, ctx, bounded);
  r.check("(ap {a}) and (is a) carriers are isomorphic (8 elements)", "isomorphic",
          iso_check(counted, filtered) ? "isomorphic" : "not isomorphic");
  return r;
}

DemoReport demo_N2() {
  DemoReport r{"n2", {}, {}};
  const Context& ctx = organic_context();
  auto z = [](long long x) { return enc_int(x, "a", "b"); };
  auto ab = [](std::size_t x, std::size_t y) { return spaced({pow("a", x), pow("b", y)}); };

  const Data Z = compose_all({words("reduce"), words("is a b")});
  r.check("reduce: a^2 b^3", "b", show(act(Z, words("a a b b b"), ctx)));
  Tally add;
  for (long long x = -8; x <= 8; ++x)
    for (long long y = -8; y <= 8; ++y)
      add.record(act(Z, spaced({z(x), z(y)}), ctx) == z(x + y),
                 [&] { return std::to_string(x) + "+" + std::to_string(y); });
  add.report(r, "reduce subspace = integer addition, |x|,|y| <= 8");

  auto zhom = [&](long long k) {
    return compose_all({words("reduce"), with_args("subst", {pair("a", z(k)), pair("b", z(-k))})});
  };
  const Data swap = compose_all({words("reduce"), with_args("subst", {pair("a", words("b")), pair("b", words("a"))})});
  Tally mult, homs, central;
  for (long long k = -4; k <= 4; ++k)
    for (long long x = -4; x <= 4; ++x) {
      Data hx = act(zhom(k), z(x), ctx);
      mult.record(hx == z(k * x), [&] { return std::to_string(k) + "*" + std::to_string(x); });
      central.record(act(product(zhom(k), swap), z(x), ctx) == act(product(swap, zhom(k)), z(x), ctx),
                     [&] { return "k=" + std::to_string(k); });
      for (long long y = -4; y <= 4; ++y) {
        Data whole = act(zhom(k), act(Z, spaced({z(x), z(y)}), ctx), ctx);
        Data parts = act(Z, spaced({hx, act(zhom(k), z(y), ctx)}), ctx);
        homs.record(whole == parts, [&] { return "k=" + std::to_string(k); });
      }
    }
  mult.report(r, "central hom k acts as multiplication by k, |k|,|x| <= 4");
  homs.report(r, "h_k(x (+) y) = h_k(x) (+) h_k(y)");
  central.report(r, "h_k commutes with the swap a <-> b");

  const Data M = compose_all({words("sort"), words("is a b")});
  Tally pairs;
  for (std::size_t x = 0; x <= 3; ++x)
    for (std::size_t y = 0; y <= 3; ++y)
      for (std::size_t u = 0; u <= 3; ++u)
        for (std::size_t v = 0; v <= 3; ++v)
          pairs.record(act(M, spaced({ab(x, y), ab(u, v)}), ctx) == ab(x + u, y + v), [&] { return show(spaced({ab(x, y), ab(u, v)})); });
  pairs.report(r, "sort subspace = addition in N^2, entries <= 3");

  auto matrix = [&](std::size_t m11, std::size_t m21, std::size_t m12, std::size_t m22) {
    return compose_all({words("sort"), with_args("subst", {pair("a", ab(m11, m21)), pair("b", ab(m12, m22))})});
  };
  r.check("M(a)=ab, M(b)=a on a b", "a a b", show(act(matrix(1, 1, 1, 0), words("a b"), ctx)));
  Tally action;
  const std::vector<std::pair<std::size_t, std::size_t>> vectors{{1, 0}, {0, 1}, {1, 1}, {2, 1}};
  for (std::size_t m = 0; m < 625; ++m) {
    std::size_t e[4] = {m % 5, m / 5 % 5, m / 25 % 5, m / 125};
    for (auto [x, y] : vectors)
      action.record(act(matrix(e[0], e[1], e[2], e[3]), ab(x, y), ctx) ==
                        ab(e[0] * x + e[2] * y, e[1] * x + e[3] * y),
                    [&] { return "matrix #" + std::to_string(m); });
  }
  action.report(r, "sort homs act as 2x2 natural matrices, entries <= 4");

  const Data mswap = compose_all({words("sort"), with_args("subst", {pair("a", words("b")), pair("b", words("a"))})});
  Tally symmetric;
  for (std::size_t m = 0; m < 81; ++m) {
    std::size_t e[4] = {m % 3, m / 3 % 3, m / 9 % 3, m / 27};
    Data h = matrix(e[0], e[1], e[2], e[3]);
    bool commutes_here = true;
    for (auto [x, y] : vectors)
      commutes_here = commutes_here && act(product(h, mswap), ab(x, y), ctx) == act(product(mswap, h), ab(x, y), ctx);
    bool sym = e[0] == e[3] && e[1] == e[2];
    symmetric.record(commutes_here == sym, [&] { return "matrix #" + std::to_string(m); });
  }
  symmetric.report(r, "commutes with the swap iff symmetric (m n; n m), entries <= 2");

  const Data flag = compose_all({words("squash b"), words("sort"), words("is a b")});
  Tally flagged;
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; m <= 4; ++m)
      for (std::size_t al = 0; al <= 1; ++al)
        for (std::size_t be = 0; be <= 1; ++be)
          flagged.record(act(flag, spaced({ab(n, al), ab(m, be)}), ctx) == ab(n + m, al | be),
                         [&] { return show(spaced({ab(n, al), ab(m, be)})); });
  flagged.report(r, "sort + squash b: (n,x)+(m,y) = (n+m, x or y)");

  const Data mediant = compose_all({words("gcd"), words("sort"), words("is a b")});
  r.check("mediant 1/2 (+) 1/3", show(ab(2, 5)), show(act(mediant, words("a b b a b b b"), ctx)));
  Tally mediants;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t u = 1; u <= 4; ++u)
        for (std::size_t v = 1; v <= 4; ++v) {
          if (std::gcd(n, m) != 1 || std::gcd(u, v) != 1) continue;
          std::size_t g = std::gcd(n + u, m + v);
          mediants.record(act(mediant, spaced({ab(n, m), ab(u, v)}), ctx) == ab((n + u) / g, (m + v) / g),
                          [&] { return show(spaced({ab(n, m), ab(u, v)})); });
        }
  mediants.report(r, "sort + gcd = mediant of reduced fractions, entries <= 4");
  return r;
}

namespace {

struct Gaussian {
  long long x = 0, y = 0;
  friend Gaussian operator*(Gaussian p, Gaussian q) { return {p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x}; }
  friend Gaussian operator+(Gaussian p, Gaussian q) { return {p.x + q.x, p.y + q.y}; }
  std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

Data enc(Gaussian g) { return spaced({enc_int(g.x, "a", "b"), enc_int(g.y, "c", "d")}); }

}  // namespace

DemoReport demo_gaussian() {
  DemoReport r{"gaussian", {}, {}};
  const Context& ctx = organic_context();
  const Data reduce4 = with_args("reduce", {pair("a", words("b")), pair("c", words("d"))});
  const Data G = compose_all({reduce4, words("sort"), words("is a b c d")});
  auto hom = [&](Gaussian g) {
    Gaussian i{0, 1};
    return compose_all({reduce4, words("sort"),
                        with_args("subst", {pair("a", enc(g)), pair("b", enc(g * Gaussian{-1, 0})),
                                            pair("c", enc(g * i)), pair("d", enc(g * Gaussian{0, -1}))})});
  };
  const Data J = compose_all({reduce4, words("sort"),
                              with_args("subst", {pair("a", words("c")), pair("b", words("d")), pair("c", words("b")),
                                                  pair("d", words("a"))})});

  Tally add;
  for (long long k = 0; k < 625; ++k) {
    Gaussian p{k % 5 - 2, k / 5 % 5 - 2}, q{k / 25 % 5 - 2, k / 125 - 2};
    add.record(act(G, spaced({enc(p), enc(q)}), ctx) == enc(p + q), [&] { return p.str() + "+" + q.str(); });
  }
  add.report(r, "carrier encodes Z^2 under addition, |x|,|y| <= 2");

  r.check("(1+i)(1+i)", show(enc({0, 2})), show(act(hom({1, 1}), enc({1, 1}), ctx)));
  r.check("J maps 1 to i", show(enc({0, 1})), show(act(J, enc({1, 0}), ctx)));
  Data one = hom({1, 0});
  r.check("identity hom has matrix (1 0;0 1)", show(spaced({enc({1, 0}), enc({0, 1})})),
          show(spaced({act(one, enc({1, 0}), ctx), act(one, enc({0, 1}), ctx)})));

  std::mt19937 rng(20'251'015);
  std::uniform_int_distribution<long long> coord(-4, 4);
  auto draw = [&] { return Gaussian{coord(rng), coord(rng)}; };
  Tally products, matrices, commuting, homs;
  for (int t = 0; t < 20; ++t) {
    Gaussian p = draw(), q = draw(), s = draw();
    Data h = hom(p);
    products.record(act(h, enc(q), ctx) == enc(p * q), [&] { return p.str() + "*" + q.str(); });
    matrices.record(act(h, enc({1, 0}), ctx) == enc({p.x, p.y}) && act(h, enc({0, 1}), ctx) == enc({-p.y, p.x}),
                    [&] { return p.str(); });
    commuting.record(act(product(h, J), enc(q), ctx) == act(product(J, h), enc(q), ctx), [&] { return p.str(); });
    Data whole = act(h, act(G, spaced({enc(q), enc(s)}), ctx), ctx);
    homs.record(whole == act(G, spaced({act(h, enc(q), ctx), act(h, enc(s), ctx)}), ctx) && whole == enc(p * (q + s)),
                [&] { return p.str(); });
  }
  products.report(r, "20 random products match Z[i], |x|,|y| <= 4");
  matrices.report(r, "central homs act as (x -y; y x)");
  commuting.report(r, "central homs commute with J");
  homs.report(r, "central homs are homomorphisms");
  return r;
}

namespace {

Data q_value(std::size_t n, std::size_t d) {
  if (n == 0) return {};
  std::size_t g = std::gcd(n, d);
  return Data{rational(n / g, d / g)};
}

}  // namespace

DemoReport rationals() {
  DemoReport r{"rationals", {}, {}};
  const Context& ctx = organic_context();
  const Data S = compose_all({words("qadd"), words("qzero")});
  Budget budget{1'000'000, 5'000'000};

  r.check("1/2 (+) 1/3", show(q_value(5, 6)), show(act(S, Data{rational(1, 2), rational(1, 3)}, ctx, budget)));
  r.check("(q a a : a a)", "(q a:a)", show(evaluate(Data{rational(2, 2)}, ctx).result));
  r.check("(q : a) under S", "()", show(act(S, Data{rational(0, 1)}, ctx)));
  r.check("(q a a a : a a a a a a) normalizes", show(Data{rational(1, 2)}), show(evaluate(Data{rational(3, 6)}, ctx).result));

  Tally add;
  for (std::size_t a = 1; a <= 12; ++a)
    for (std::size_t b = 1; b <= 12; ++b)
      for (std::size_t c = 1; c <= 12; ++c)
        for (std::size_t d = 1; d <= 12; ++d)
          add.record(act(S, Data{rational(a, b), rational(c, d)}, ctx, budget) == q_value(a * d + c * b, b * d),
                     [&] { return std::to_string(a) + "/" + std::to_string(b) + "+" + std::to_string(c) + "/" + std::to_string(d); });
  add.report(r, "S = rational addition, numerators and denominators <= 12");

  const std::vector<std::pair<std::size_t, std::size_t>> samples{{1, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 2}, {4, 7}, {7, 3}};
  auto scale = [](std::pair<std::size_t, std::size_t> q) {
    return Data{word("ap"), word("product"), rational(q.first, q.second)};
  };
  Tally homs, distributes, units;
  for (auto R : samples) {
    for (auto x : samples)
      for (auto y : samples) {
        Data xy{rational(x.first, x.second), rational(y.first, y.second)};
        Data whole = act(S, act(scale(R), act(S, xy, ctx, budget), ctx, budget), ctx, budget);
        Data parts = act(S, act(scale(R), xy, ctx, budget), ctx, budget);
        std::size_t n = R.first * (x.first * y.second + y.first * x.second), d = R.second * x.second * y.second;
        homs.record(whole == parts && whole == q_value(n, d), [&] { return show(xy); });
      }
    for (auto R2 : samples)
      for (auto x : samples) {
        Data xd{rational(x.first, x.second)};
        Data both = act(S, spaced({act(scale(R), xd, ctx, budget), act(scale(R2), xd, ctx, budget)}), ctx, budget);
        Data summed = act(S, Data{rational(R.first, R.second), rational(R2.first, R2.second)}, ctx, budget);
        Data via = act(S, act(Data{word("ap"), word("product"), summed[0]}, xd, ctx, budget), ctx, budget);
        distributes.record(both == via, [&] { return show(xd); });
      }
    auto inverse = std::make_pair(R.second, R.first);
    for (auto x : samples) {
      Data xd = q_value(x.first, x.second);
      units.record(act(product(scale(inverse), scale(R)), xd, ctx, budget) == xd, [&] { return show(xd); });
    }
  }
  homs.report(r, "(ap product R) is a homomorphism of S (sampled)");
  distributes.report(r, "(ap product (R1 (+) R2)) = (ap product R1) (+) (ap product R2) (sampled)");
  units.report(r, "every sampled nonzero scaling is a unit: field evidence (sampled)");
  return r;
}

DemoReport demo_seq() {
  DemoReport r{"seq", {}, {}};
  const Context& ctx = prelude();
  const Data N = words("is a");
  const Data NN = seq(N, "n");
  const Data T = parse("(n:a a a) (n:) (n:a a) (n:a) (n:)");
  r.check("sum:T", "(n:a a a a a a)", show(act(inner(N, "n", N), T, ctx)));
  r.check("sort:T", "(n:) (n:) (n:a) (n:a a) (n:a a a)", show(act(compose_all({NN, words("sort"), NN}), T, ctx)));
  r.check("min:T", "(n:)", show(act(compose_all({NN, words("min"), NN}), T, ctx)));
  r.check("first:T", "(n:a a a)", show(act(compose_all({NN, words("first"), NN}), T, ctx)));
  r.check("seq(N) filters contents", "(n:a a) (n:)", show(act(NN, parse("(n:a x a) (n:y)"), ctx)));
  r.check("seq(N) is distributive on probes", "holds_on_probes",
          to_string(check_distributive(NN, ProbeSet{{T, parse("(n:a)"), parse("(n:) (n:a a)"), Data{}}, {}}, ctx)));
  return r;
}

DemoReport demo_fibonacci() {
  DemoReport r{"fibonacci", {}, {}};
  auto as_text = [](const std::vector<std::size_t>& v) {
    std::vector<std::string> parts;
    for (std::size_t x : v) parts.push_back(std::to_string(x));
    return joined(parts);
  };
  std::vector<std::size_t> oracle{1, 1};
  while (oracle.size() < 20) oracle.push_back(oracle[oracle.size() - 1] + oracle[oracle.size() - 2]);
  for (std::size_t k : {1, 2, 6, 10, 20})
    r.check("fibonacci(" + std::to_string(k) + ")",
            as_text(std::vector<std::size_t>(oracle.begin(), oracle.begin() + static_cast<std::ptrdiff_t>(k))),
            as_text(fibonacci(k)));
  return r;
}

DemoReport demo_sets() {
  DemoReport r{"sets", {}, {}};
  const Data S = compose_all({words("sort"), words("once"), words("is a b c")});
  CarrierTable c = extract_carrier(S, word_probes("a b c"), prelude(), {.cap = 16});
  r.check("carrier size", "8", std::to_string(c.size()));
  r.tables.push_back(format_carrier(c));
  if (c.size() != 8 || !c.closed) return r;

  auto mask = [&](std::size_t i) {
    unsigned m = 0;
    for (const Coda& x : c.elements[i]) m |= 1u << (x.text()[0] - 'a');
    return m;
  };
  Tally unions, idem;
  for (std::size_t x = 0; x < 8; ++x) {
    idem.record(c.plus(x, x) == x, [&] { return c.names[x]; });
    for (std::size_t y = 0; y < 8; ++y)
      unions.record(c.plus(x, y) != npos && mask(c.plus(x, y)) == (mask(x) | mask(y)),
                    [&] { return c.names[x] + " + " + c.names[y]; });
  }
  unions.report(r, "(+) is set union on all 64 pairs");
  idem.report(r, "x (+) x = x");
  r.check("{a} (+) {b}", "a b", show(act(S, words("a b"), prelude())));

  bool commutative = true;
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) commutative = commutative && c.plus(x, y) == c.plus(y, x);
  r.check("semilattice", "true", commutative && idem.ok == idem.total ? "true" : "false");

  std::vector<std::size_t> p(8);
  std::iota(p.begin(), p.end(), 0);
  std::size_t bijections = 0, automorphisms = 0;
  do {
    ++bijections;
    if (is_homomorphism(Endo{p}, c)) ++automorphisms;
  } while (std::next_permutation(p.begin(), p.end()));
  r.check("unit homomorphisms (permutations of a b c)", "6", std::to_string(automorphisms));
  r.check("bijections of the carrier", "40320", std::to_string(bijections));

  // k_x <= k_y iff k_x (+) k_y = k_y
  Tally order, left_ideal;
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = x + 1; y < 8; ++y) {
      bool le = oplus(constant_endo(c, x), constant_endo(c, y), c) == constant_endo(c, y);
      bool ge = oplus(constant_endo(c, y), constant_endo(c, x), c) == constant_endo(c, x);
      bool sub = (mask(x) & ~mask(y)) == 0, sup = (mask(y) & ~mask(x)) == 0;
      order.record(le == sub && ge == sup, [&] { return c.names[x] + " vs " + c.names[y]; });
    }
  order.report(r, "constants ordered by (+) match inclusion");
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y)
      left_ideal.record(compose(constant_endo(c, x), constant_endo(c, y)) == constant_endo(c, x),
                        [&] { return c.names[x]; });
  left_ideal.report(r, "k.l = k for constants (multiplicative order is trivial)");
  return r;
}

DemoReport demo_bool() {
  DemoReport r{"bool", {}, {}};
  const Context& ctx = prelude();
  CarrierTable c = extract_carrier(words("bool"), word_probes("a"), ctx);
  r.check("carrier", "() (:)", joined(c.names));
  if (c.size() != 2) return r;

  const std::vector<std::string> names{"ID", "TRUE", "FALSE", "NOT"};
  std::vector<Endo> endos{Endo{{0, 1}}, Endo{{0, 0}}, Endo{{1, 1}}, Endo{{1, 0}}};
  SemiringReport rep = classify(c, endos);
  r.check("endomorphisms", "4", std::to_string(enumerate_endos(c).size()));

  auto row = [&](const std::vector<std::vector<std::size_t>>& t, std::size_t i) {
    std::vector<std::string> cells;
    for (std::size_t j : t[i]) cells.push_back(j == npos ? "?" : names[j]);
    return joined(cells);
  };
  const std::vector<std::string> product_rows{"ID TRUE FALSE NOT", "TRUE TRUE TRUE TRUE",
                                              "FALSE FALSE FALSE FALSE", "NOT FALSE TRUE ID"};
  const std::vector<std::string> sum_rows{"ID ID FALSE FALSE", "ID TRUE FALSE NOT", "FALSE FALSE FALSE FALSE",
                                          "FALSE NOT FALSE NOT"};
  for (std::size_t i = 0; i < 4; ++i) r.check("f.g row " + names[i], product_rows[i], row(rep.product, i));
  for (std::size_t i = 0; i < 4; ++i) r.check("f+g row " + names[i], sum_rows[i], row(rep.sum, i));
  r.check("multiplicative unit", "ID", rep.one == npos ? "none" : names[rep.one]);
  r.check("additive unit", "TRUE", rep.zero == npos ? "none" : names[rep.zero]);

  const std::vector<Data> recipes{words("bool"), words("const"), spaced({words("const"), Data{unit_atom()}}),
                                  compose_all({words("bool"), words("not")})};
  Tally rewriting;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t x = 0; x < 2; ++x) {
        auto at = [&](const Data& f) { return c.index_of(act(f, c.elements[x], ctx)).value_or(npos); };
        rewriting.record(at(product(recipes[i], recipes[j])) == endos[rep.product[i][j]](x) &&
                             at(compose_all({words("bool"), sum(recipes[i], recipes[j])})) == endos[rep.sum[i][j]](x),
                         [&] { return names[i] + "," + names[j]; });
      }
  rewriting.report(r, "tables agree with rewriting of product and sum");

  auto which = [&](bool EndoFlags::*flag) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < 4; ++i)
      if (rep.flags[i].*flag) out.push_back(names[i]);
    return joined(out);
  };
  r.check("homomorphisms", "ID TRUE FALSE", which(&EndoFlags::homomorphism));
  r.check("units", "ID NOT", which(&EndoFlags::unit));
  std::vector<std::string> central_homs;
  for (std::size_t i = 0; i < 4; ++i)
    if (rep.flags[i].central && rep.flags[i].homomorphism) central_homs.push_back(names[i]);
  r.check("central homomorphisms", "ID", joined(central_homs));
  r.check("central (commutes with every unit)", "ID NOT", which(&EndoFlags::central));
  r.check("zero endomorphism central", "no", rep.zero_central ? "yes" : "no");
  r.check("field", "field", verdict_name(field_check(c)));
  r.check("isomorphic to rem(1,2)", "yes", iso_check(c, rem_carrier(1, 2)) ? "yes" : "no");
  r.check("isomorphic to Z2", "no", iso_check(c, cyclic(2)) ? "yes" : "no");
  r.check("central semialgebra", "none", find_semialgebra(c, true) ? "found" : "none");
  r.check("semialgebra", "found", find_semialgebra(c, false) ? "found" : "none");
  r.tables.push_back(format_tables(rep, names));
  return r;
}

DemoReport demo_bool_sequences() {
  DemoReport r{"bool-seq", {}, {}};
  const Context& ctx = prelude();
  const Data L = seq(words("bool"), "b");
  const Data L1 = compose_all({L, words("first"), L});
  const Data L2 = compose_all({L, words("first 2"), L});
  const Coda T = make_coda(words("b"), Data{});
  const Coda F = make_coda(words("b"), Data{unit_atom()});

  ProbeSet probes;
  probes.probes.push_back(Data{});
  probes.probes.push_back(Data{unit_atom()});
  std::vector<Data> layer{Data{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<Data> next;
    for (const Data& d : layer)
      for (const Coda& atom : {T, F}) next.push_back(concat(d, Data{atom}));
    probes.probes.insert(probes.probes.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  auto name_of = [&](const Data& d) {
    if (d.empty()) return std::string("0");
    std::string s;
    for (const Coda& x : d) s += structural_eq(x, T) ? "T" : structural_eq(x, F) ? "F" : "?";
    return s;
  };

  CarrierTable c1 = extract_carrier(L1, probes, ctx);
  for (std::size_t i = 0; i < c1.size(); ++i) c1.names[i] = name_of(c1.elements[i]);
  r.check("L1 carrier", "0 T F", joined(c1.names));
  std::vector<Endo> endos = enumerate_endos(c1);
  r.check("L1 endomorphisms", "27", std::to_string(endos.size()));
  SemiringReport rep = classify(c1, endos);
  r.tables.push_back(format_report(rep, c1));

  std::size_t m = endos.size();
  Tally units, assoc, right, left_for_homs, ideal;
  for (std::size_t f = 0; f < m; ++f) {
    units.record(rep.product[rep.one][f] == f && rep.product[f][rep.one] == f && rep.sum[rep.zero][f] == f &&
                     rep.sum[f][rep.zero] == f,
                 [&] { return endo_label(endos[f], c1); });
    for (std::size_t g = 0; g < m; ++g)
      for (std::size_t h = 0; h < m; ++h) {
        assoc.record(rep.product[rep.product[f][g]][h] == rep.product[f][rep.product[g][h]] &&
                         rep.sum[rep.sum[f][g]][h] == rep.sum[f][rep.sum[g][h]],
                     [&] { return endo_label(endos[f], c1); });
        right.record(rep.product[rep.sum[f][g]][h] == rep.sum[rep.product[f][h]][rep.product[g][h]],
                     [&] { return endo_label(endos[f], c1); });
        if (rep.flags[h].homomorphism)
          left_for_homs.record(rep.product[h][rep.sum[f][g]] == rep.sum[rep.product[h][f]][rep.product[h][g]],
                               [&] { return endo_label(endos[h], c1); });
      }
    if (rep.flags[f].constant)
      for (std::size_t g = 0; g < m; ++g)
        ideal.record(rep.flags[rep.product[f][g]].constant &&
                         (!rep.flags[g].constant || rep.flags[rep.sum[f][g]].constant),
                     [&] { return endo_label(endos[f], c1); });
  }
  units.report(r, "ID and 0 are the units of . and (+)");
  assoc.report(r, ". and (+) associative over 27^3 triples");
  right.report(r, "(f+g).h = f.h + g.h over 27^3 triples");
  left_for_homs.report(r, "h.(f+g) = h.f + h.g for homomorphisms h");
  ideal.report(r, "k.f and k+l are constant for constants k, l");

  CarrierTable c2 = extract_carrier(L2, probes, ctx);
  for (std::size_t i = 0; i < c2.size(); ++i) c2.names[i] = name_of(c2.elements[i]);
  r.check("L2 carrier", "0 T F TT TF FT FF", joined(c2.names));
  if (c2.size() != 7) return r;

  const Data unit{unit_atom()};
  const Data parity = spaced({words("while remove"), unit, unit});
  const Data drop_one = spaced({words("remove"), unit});
  const std::vector<Data> recipes{words("null"),
                                  drop_one,
                                  parity,
                                  words("pass"),
                                  words("not"),
                                  compose_all({words("not"), parity}),
                                  compose_all({words("not"), drop_one}),
                                  spaced({words("const"), unit})};
  const std::vector<std::string> expected{"T T T T T T T", "T T T T T T F", "T T F T F F T", "T T F T F F F",
                                          "F F T F T T T", "F F T F T T F", "F F F F F F T", "F F F F F F F"};
  std::ostringstream grid;
  grid << "     0  T  F  TT TF FT FF\n";
  for (std::size_t i = 0; i < recipes.size(); ++i) {
    Data e = compose_all({L2, words("put b"), recipes[i], words("get b"), L2});
    std::vector<std::string> cells;
    for (const Data& x : c2.elements) cells.push_back(name_of(act(e, x, ctx)));
    std::string row = joined(cells);
    r.check("e" + std::to_string(i + 1), expected[i], row);
    grid << "e" << i + 1 << "   ";
    for (const std::string& s : cells) grid << s << std::string(3 - std::min<std::size_t>(s.size(), 2), ' ');
    grid << '\n';
  }
  std::vector<std::string> counts;
  for (const Data& x : c2.elements) counts.push_back(std::to_string(act(words("get b"), x, ctx).size()));
  r.check("number of (:)", "0 0 1 0 1 1 2", joined(counts));
  grid << "(:)  ";
  for (const std::string& s : counts) grid << s << "  ";
  grid << '\n';
  r.tables.push_back(grid.str());
  return r;
}

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"organic-n", "n2",   "gaussian", "rationals", "seq",
                                              "sets",      "bool", "bool-seq", "fibonacci"};
  return names;
}

DemoReport run_demo(std::string_view name) {
  if (name == "organic-n") return organic_N();
  if (name == "n2") return demo_N2();
  if (name == "gaussian") return demo_gaussian();
  if (name == "rationals") return rationals();
  if (name == "seq") return demo_seq();
  if (name == "sets") return demo_sets();
  if (name == "bool") return demo_bool();
  if (name == "bool-seq") return demo_bool_sequences();
  if (name == "fibonacci") return demo_fibonacci();
  throw std::invalid_argument("unknown demo '" + std::string(name) + "'");
}

}  // namespace coda
