#pragma once

// Finite spaces at carrier level: the distinct data (S:X), the monoid ⊞
// they carry, and the semiring of all endofunctions of that carrier.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coda/algebra.hpp"

namespace coda {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct CarrierTable {
  Data space;
  std::vector<Data> elements;       // canonical order
  std::vector<std::string> names;   // display names, one per element
  std::size_t neutral = 0;          // index of (S:)
  std::vector<std::vector<std::size_t>> add;  // npos when outside the carrier
  bool closed = true;

  std::size_t size() const { return elements.size(); }
  std::size_t plus(std::size_t x, std::size_t y) const { return add[x][y]; }
  std::optional<std::size_t> index_of(const Data& d) const;

  // A carrier given directly by its operation; elements are sorted into
  // canonical order and the operation is re-indexed accordingly.
  static CarrierTable from_operation(std::vector<Data> elements, std::vector<std::string> names,
                                     const Data& neutral,
                                     const std::function<Data(const Data&, const Data&)>& op);
};

struct CarrierOptions {
  std::size_t cap = 64;
  bool close = true;   // saturate under ⊞
  bool strict = true;  // throw CarrierOverflow past `cap`; else stop, closed=false
};

CarrierTable extract_carrier(const Data& space, const ProbeSet& probes, const Context& ctx = prelude(),
                             CarrierOptions options = {});

struct Endo {
  std::vector<std::size_t> map;

  std::size_t operator()(std::size_t x) const { return map[x]; }
  friend auto operator<=>(const Endo&, const Endo&) = default;
};

Endo identity_endo(const CarrierTable& c);
Endo zero_endo(const CarrierTable& c);  // constant to the neutral element
Endo constant_endo(const CarrierTable& c, std::size_t k);

Endo compose(const Endo& f, const Endo& g);  // f after g
Endo oplus(const Endo& f, const Endo& g, const CarrierTable& c);

// All |C|^|C| endofunctions in canonical order; TooManyEndos past `cap`.
std::vector<Endo> enumerate_endos(const CarrierTable& c, std::size_t cap = 3125);

bool is_constant(const Endo& f);
bool is_homomorphism(const Endo& f, const CarrierTable& c);
bool is_bijection(const Endo& f);
bool is_idempotent(const Endo& f);
// f idempotent and f(x⊞y) = f(f(x)⊞y) = f(x⊞f(y)).
bool is_subspace(const Endo& f, const CarrierTable& c);
bool commutes(const Endo& f, const Endo& g);

struct EndoFlags {
  bool constant = false;
  bool homomorphism = false;
  bool unit = false;
  bool central = false;
  bool idempotent = false;
  bool subspace = false;
};

struct SpaceFlags {
  bool algebraic = false;     // ⊞ commutative
  bool neutral_space = false; // ⊞ cancellative
  bool semilattice = false;   // algebraic and f⊕f = f for every f
  std::optional<bool> field;  // set when the endos were enumerable
};

struct SemiringReport {
  std::vector<Endo> endos;
  std::vector<EndoFlags> flags;
  std::size_t one = npos;
  std::size_t zero = npos;
  // Indices into `endos`; filled when endos.size() <= kTableLimit.
  std::vector<std::vector<std::size_t>> product;
  std::vector<std::vector<std::size_t>> sum;
  std::vector<std::vector<bool>> idempotent_order;  // f ≤ g iff f·g = f
  SpaceFlags space;
  bool zero_central = false;

  static constexpr std::size_t kTableLimit = 1024;
  std::size_t count(bool EndoFlags::*flag) const;
};

// Units are the bijections among `endos` with an inverse in `endos`;
// central means commuting with every unit.
SemiringReport classify(const CarrierTable& c, std::vector<Endo> endos);

struct FieldVerdict {
  bool direct = false;     // every proper subspace is constant
  bool via_units = false;  // every non-constant homomorphism is a unit
  bool agree() const { return direct == via_units; }
};
FieldVerdict field_check(const CarrierTable& c, std::size_t cap = 1'000'000);

// e = S/h: idempotent with the fibers of h, mapping each element to the
// canonical minimum of its fiber. Throws NotAHomomorphism.
Endo quotient_of_hom(const Endo& h, const CarrierTable& c);

// mapping[k] is the image of the constant with value k.
Verdict verify_semialgebra(const CarrierTable& c, const std::vector<Endo>& mapping, bool require_central);
// Exhaustive search for an injective constants -> homomorphisms map.
std::optional<std::vector<Endo>> find_semialgebra(const CarrierTable& c, bool require_central);

// Monoid isomorphism by exhaustive search; carriers of at most 8 elements.
// Undefined (npos) entries must correspond.
std::optional<std::vector<std::size_t>> iso_check(const CarrierTable& a, const CarrierTable& b);

// Reports.
std::string endo_label(const Endo& f, const CarrierTable& c);
std::string format_carrier(const CarrierTable& c);
std::string format_tables(const SemiringReport& r, const std::vector<std::string>& endo_names);
std::string format_report(const SemiringReport& r, const CarrierTable& c);
std::string tsv_report(const SemiringReport& r, const CarrierTable& c);

}  // namespace coda
