#pragma once

// Spaces built from the prelude: organic search, natural numbers and their
// subspaces, integers, matrices, mediants, Gaussian integers, rationals,
// sequences, sets and bool sequences. Each demo checks its claims against
// an arithmetic oracle and reports the outcome assertion by assertion.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coda/spacelab.hpp"

namespace coda {

// ---- reports ---------------------------------------------------------------

struct Assertion {
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct DemoReport {
  std::string name;
  std::vector<Assertion> assertions;
  std::vector<std::string> tables;  // preformatted blocks shown with the text report

  bool passed() const;
  std::size_t failures() const;
  void check(std::string description, std::string expected, std::string actual);
};

std::string format_text(const DemoReport& r);
std::string format_tsv(const DemoReport& r);

// ---- context -----------------------------------------------------------------

// The prelude plus the native helpers the constructions rely on:
//   reduce (p:q)... : B   cancel p against q, default pair (a:b)
//   subst (k:v)... : B    replace each atom k by v
//   squash k... : B       keep only the first occurrence of each k
//   gcd k... : B          divide the counts of the k (default a b) by their gcd
//   pr A : B              a^(|A|.|B|)
//   qadd : B              fold the q-atoms of B with the cross-product sum
//   qzero : B             keep q-atoms with a nonzero numerator
//   product R : B         multiply the q-atom B by the q-atom R
const Context& organic_context();

// (q a^n : a^d), unnormalized.
Coda rational(std::size_t numerator, std::size_t denominator);

// ---- search ------------------------------------------------------------------

struct SearchResult {
  Data candidate;
  Verdict verdict;
  std::optional<CarrierTable> carrier_preview;
};

// Pure data up to width 2 and depth 1, a few deeper atoms, and the words
// a and b; a small step budget keeps looping candidates cheap.
ProbeSet search_probes();

// Every sequence of 1..max_len tokens (each word w and the language atom
// {w}), plus (), tested for associativity. Holders only, smallest first.
std::vector<SearchResult> search_spaces(const std::vector<std::string>& words, std::size_t max_len,
                                        const ProbeSet& probes = search_probes(),
                                        std::size_t cap = 100'000);

// ---- natural numbers -----------------------------------------------------------

// while (n >= p and n >= q) n -= p
struct Rem {
  std::size_t p = 1;
  std::size_t q = 1;
  std::size_t operator()(std::size_t n) const;
};
Rem rem(std::size_t p, std::size_t q);

// The carrier {0, ..., max(p,q)-1} of rem(p,q), elements a^k named k.
CarrierTable rem_carrier(std::size_t p, std::size_t q);
inline CarrierTable cyclic(std::size_t n) { return rem_carrier(n, n); }

// ---- sequences -------------------------------------------------------------------

// ap prod (:put m) (:space) (:get m)
Data seq(const Data& space, std::string_view marker);
// seq . (put m) . f . (get m) . seq
Data inner(const Data& space, std::string_view marker, const Data& f);
// First k terms, iterating "sum of the last two" from (n:a)(n:a). k <= 30.
std::vector<std::size_t> fibonacci(std::size_t k);

// ---- demos -------------------------------------------------------------------------

DemoReport organic_N();
DemoReport demo_N2();
DemoReport demo_gaussian();
DemoReport rationals();
DemoReport demo_seq();
DemoReport demo_sets();
DemoReport demo_bool();
DemoReport demo_bool_sequences();
DemoReport demo_fibonacci();

const std::vector<std::string>& demo_names();
// Throws std::invalid_argument for an unknown name.
DemoReport run_demo(std::string_view name);

}  // namespace coda
