#include "coda/spacelab.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "coda/errors.hpp"
#include "coda/lang.hpp"

namespace coda {

namespace {

bool data_less(const Data& a, const Data& b) { return canonical_order(a, b) < 0; }

// Sorts `raw` canonically; `perm[old] = new`.
std::vector<std::size_t> sort_elements(std::vector<Data>& raw) {
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return data_less(raw[a], raw[b]); });
  std::vector<std::size_t> perm(raw.size());
  std::vector<Data> sorted;
  sorted.reserve(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    perm[order[i]] = i;
    sorted.push_back(raw[order[i]]);
  }
  raw = std::move(sorted);
  return perm;
}

// Advances a base-n counter (last digit fastest); false after wrapping.
bool advance(std::vector<std::size_t>& digits, std::size_t n) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < n) return true;
    digits[i] = 0;
  }
  return false;
}

std::size_t checked_power(std::size_t n, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (n != 0 && total > cap / std::max<std::size_t>(n, 1)) return cap + 1;
    total *= n;
  }
  return total;
}

std::vector<Endo> all_bijections(std::size_t n) {
  if (n > 8) throw TooManyEndos("bijections of a carrier with " + std::to_string(n) + " elements");
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Endo> out;
  do out.push_back(Endo{p});
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void require_closed(const CarrierTable& c, const char* what) {
  if (!c.closed) throw CarrierOverflow(std::string(what) + " needs a closed carrier");
}

}  // namespace

std::optional<std::size_t> CarrierTable::index_of(const Data& d) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), d, data_less);
  if (it == elements.end() || !structural_eq(*it, d)) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

CarrierTable CarrierTable::from_operation(std::vector<Data> elements, std::vector<std::string> names,
                                          const Data& neutral,
                                          const std::function<Data(const Data&, const Data&)>& op) {
  CarrierTable c;
  std::vector<Data> raw = elements;
  std::vector<std::size_t> perm = sort_elements(raw);
  c.elements = std::move(raw);
  c.names.resize(c.elements.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    c.names[perm[i]] = i < names.size() ? names[i] : render(elements[i]);
  c.neutral = c.index_of(neutral).value_or(npos);
  c.add.assign(c.size(), std::vector<std::size_t>(c.size(), npos));
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) {
      c.add[x][y] = c.index_of(op(c.elements[x], c.elements[y])).value_or(npos);
      if (c.add[x][y] == npos) c.closed = false;
    }
  return c;
}

CarrierTable extract_carrier(const Data& space, const ProbeSet& probes, const Context& ctx,
                             CarrierOptions options) {
  auto act = [&](const Data& x) -> std::optional<Data> {
    EvalOutcome r = evaluate(Data{make_coda(space, x)}, ctx, probes.budget);
    if (!r.normalized) return std::nullopt;
    return r.result;
  };

  std::map<Data, std::size_t, decltype(&data_less)> index(&data_less);
  std::vector<Data> raw;
  bool overflow = false;
  auto admit = [&](const Data& d) -> std::size_t {
    if (auto it = index.find(d); it != index.end()) return it->second;
    if (overflow) return npos;
    if (raw.size() >= options.cap) {
      if (options.strict)
        throw CarrierOverflow("carrier of " + render(space) + " exceeds " +
                              std::to_string(options.cap) + " elements");
      overflow = true;
      return npos;
    }
    index.emplace(d, raw.size());
    raw.push_back(d);
    return raw.size() - 1;
  };

  std::optional<Data> zero = act(Data{});
  if (zero) admit(*zero);
  for (const Data& p : probes.probes)
    if (auto r = act(p)) admit(*r);

  // Sums computed so far, by insertion index.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> sums;
  auto sum_of = [&](std::size_t x, std::size_t y) -> std::size_t {
    if (auto it = sums.find({x, y}); it != sums.end()) return it->second;
    std::optional<Data> r = act(concat(raw[x], raw[y]));
    std::size_t k = npos;
    if (r) {
      if (options.close) {
        k = admit(*r);
      } else if (auto it = index.find(*r); it != index.end()) {
        k = it->second;
      }
    }
    // Past the cap a missing sum may still be found later; retry then.
    if (k != npos || !overflow) sums[{x, y}] = k;
    return k;
  };
  for (std::size_t done = 0;;) {
    std::size_t n = raw.size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x >= done || y >= done) sum_of(x, y);
    done = n;
    if (raw.size() == n || overflow) break;
  }
  if (overflow)  // sums among the last admitted elements, lookup only
    for (std::size_t x = 0; x < raw.size(); ++x)
      for (std::size_t y = 0; y < raw.size(); ++y) sum_of(x, y);

  CarrierTable c;
  c.space = space;
  std::vector<Data> sorted = raw;
  std::vector<std::size_t> perm = sort_elements(sorted);
  c.elements = std::move(sorted);
  for (const Data& e : c.elements) c.names.push_back(render(e));
  c.neutral = zero ? perm[index.at(*zero)] : npos;
  c.add.assign(c.size(), std::vector<std::size_t>(c.size(), npos));
  c.closed = !overflow;
  for (std::size_t x = 0; x < raw.size(); ++x)
    for (std::size_t y = 0; y < raw.size(); ++y) {
      auto it = sums.find({x, y});
      std::size_t k = it == sums.end() ? npos : it->second;
      c.add[perm[x]][perm[y]] = k == npos ? npos : perm[k];
      if (k == npos) c.closed = false;
    }
  return c;
}

Endo identity_endo(const CarrierTable& c) {
  Endo e{std::vector<std::size_t>(c.size())};
  std::iota(e.map.begin(), e.map.end(), 0);
  return e;
}

Endo constant_endo(const CarrierTable& c, std::size_t k) { return Endo{std::vector<std::size_t>(c.size(), k)}; }
Endo zero_endo(const CarrierTable& c) { return constant_endo(c, c.neutral); }

Endo compose(const Endo& f, const Endo& g) {
  Endo out{std::vector<std::size_t>(g.map.size())};
  for (std::size_t x = 0; x < g.map.size(); ++x) out.map[x] = f(g(x));
  return out;
}

Endo oplus(const Endo& f, const Endo& g, const CarrierTable& c) {
  Endo out{std::vector<std::size_t>(f.map.size())};
  for (std::size_t x = 0; x < f.map.size(); ++x) out.map[x] = c.plus(f(x), g(x));
  return out;
}

std::vector<Endo> enumerate_endos(const CarrierTable& c, std::size_t cap) {
  std::size_t n = c.size();
  std::size_t total = checked_power(n, cap);
  if (total > cap)
    throw TooManyEndos("a carrier of " + std::to_string(n) + " elements has more than " +
                       std::to_string(cap) + " endofunctions");
  std::vector<Endo> out;
  out.reserve(total);
  std::vector<std::size_t> digits(n, 0);
  do out.push_back(Endo{digits});
  while (n > 0 && advance(digits, n));
  return out;
}

bool is_constant(const Endo& f) {
  return std::adjacent_find(f.map.begin(), f.map.end(), std::not_equal_to<>{}) == f.map.end();
}

bool is_homomorphism(const Endo& f, const CarrierTable& c) {
  std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t s = c.plus(x, y);
      std::size_t t = c.plus(f(x), f(y));
      if (s == npos || t == npos) {
        if ((s == npos) != (t == npos)) return false;
        continue;
      }
      if (f(s) != t) return false;
    }
  return true;
}

bool is_bijection(const Endo& f) {
  std::vector<bool> seen(f.map.size(), false);
  for (std::size_t y : f.map) {
    if (y >= seen.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool is_idempotent(const Endo& f) {
  for (std::size_t x = 0; x < f.map.size(); ++x)
    if (f(f(x)) != f(x)) return false;
  return true;
}

bool is_subspace(const Endo& f, const CarrierTable& c) {
  if (!is_idempotent(f)) return false;
  auto f_of = [&](std::size_t v) { return v == npos ? npos : f(v); };
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) {
      std::size_t base = f_of(c.plus(x, y));
      if (f_of(c.plus(f(x), y)) != base || f_of(c.plus(x, f(y))) != base) return false;
    }
  return true;
}

bool commutes(const Endo& f, const Endo& g) { return compose(f, g) == compose(g, f); }

std::size_t SemiringReport::count(bool EndoFlags::*flag) const {
  return static_cast<std::size_t>(
      std::count_if(flags.begin(), flags.end(), [flag](const EndoFlags& f) { return f.*flag; }));
}

SemiringReport classify(const CarrierTable& c, std::vector<Endo> endos) {
  require_closed(c, "classification");
  SemiringReport r;
  r.endos = std::move(endos);
  std::map<Endo, std::size_t> where;
  for (std::size_t i = 0; i < r.endos.size(); ++i) where.emplace(r.endos[i], i);
  auto find = [&](const Endo& e) {
    auto it = where.find(e);
    return it == where.end() ? npos : it->second;
  };
  r.one = find(identity_endo(c));
  r.zero = find(zero_endo(c));

  std::vector<const Endo*> units;
  r.flags.resize(r.endos.size());
  for (std::size_t i = 0; i < r.endos.size(); ++i) {
    const Endo& f = r.endos[i];
    EndoFlags& fl = r.flags[i];
    fl.constant = is_constant(f);
    fl.homomorphism = is_homomorphism(f, c);
    fl.idempotent = is_idempotent(f);
    fl.subspace = fl.idempotent && is_subspace(f, c);
    if (is_bijection(f)) {
      Endo inv{std::vector<std::size_t>(f.map.size())};
      for (std::size_t x = 0; x < f.map.size(); ++x) inv.map[f(x)] = x;
      fl.unit = find(inv) != npos;
    }
    if (fl.unit) units.push_back(&f);
  }
  for (std::size_t i = 0; i < r.endos.size(); ++i)
    r.flags[i].central = std::all_of(units.begin(), units.end(),
                                     [&](const Endo* u) { return commutes(r.endos[i], *u); });
  r.zero_central = std::all_of(units.begin(), units.end(),
                               [&](const Endo* u) { return commutes(zero_endo(c), *u); });

  if (r.endos.size() <= SemiringReport::kTableLimit) {
    std::size_t m = r.endos.size();
    r.product.assign(m, std::vector<std::size_t>(m, npos));
    r.sum.assign(m, std::vector<std::size_t>(m, npos));
    r.idempotent_order.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        r.product[i][j] = find(compose(r.endos[i], r.endos[j]));
        r.sum[i][j] = find(oplus(r.endos[i], r.endos[j], c));
        r.idempotent_order[i][j] = r.product[i][j] == i;
      }
  }

  std::size_t n = c.size();
  bool commutative = true, cancellative = true, idempotent_add = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (c.plus(x, x) != x) idempotent_add = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (c.plus(x, y) != c.plus(y, x)) commutative = false;
      for (std::size_t z = y + 1; z < n; ++z)
        if (c.plus(x, y) == c.plus(x, z) || c.plus(y, x) == c.plus(z, x)) cancellative = false;
    }
  }
  r.space.algebraic = commutative;
  r.space.neutral_space = cancellative;
  r.space.semilattice = commutative && idempotent_add;
  if (checked_power(n, 1'000'000) <= 1'000'000) r.space.field = field_check(c).direct;
  return r;
}

FieldVerdict field_check(const CarrierTable& c, std::size_t cap) {
  require_closed(c, "field check");
  std::size_t n = c.size();
  if (checked_power(n, cap) > cap)
    throw TooManyEndos("field check over " + std::to_string(n) + " elements exceeds " +
                       std::to_string(cap) + " endofunctions");
  FieldVerdict v{true, true};
  std::vector<std::size_t> digits(n, 0);
  Endo id = identity_endo(c);
  do {
    Endo f{digits};
    if (is_constant(f)) continue;
    if (v.direct && f != id && is_subspace(f, c)) v.direct = false;
    if (v.via_units && !is_bijection(f) && is_homomorphism(f, c)) v.via_units = false;
  } while (n > 0 && (v.direct || v.via_units) && advance(digits, n));
  return v;
}

Endo quotient_of_hom(const Endo& h, const CarrierTable& c) {
  require_closed(c, "quotient");
  if (!is_homomorphism(h, c)) throw NotAHomomorphism("quotient needs a homomorphism");
  Endo e{std::vector<std::size_t>(c.size())};
  std::map<std::size_t, std::size_t> first;  // image -> least element of its fiber
  for (std::size_t x = 0; x < c.size(); ++x) {
    first.emplace(h(x), x);
    e.map[x] = first.at(h(x));
  }
  return e;
}

Verdict verify_semialgebra(const CarrierTable& c, const std::vector<Endo>& mapping, bool require_central) {
  require_closed(c, "semialgebra check");
  auto refute = [&](std::string detail, std::vector<std::size_t> at) {
    Verdict v;
    v.kind = Verdict::Kind::refuted;
    v.detail = std::move(detail);
    for (std::size_t k : at) v.witness.push_back(c.elements[k]);
    return v;
  };
  if (mapping.size() != c.size()) return refute("mapping must cover every constant", {});
  std::vector<Endo> units;
  if (require_central) units = all_bijections(c.size());
  for (std::size_t k = 0; k < mapping.size(); ++k) {
    const Endo& f = mapping[k];
    if (!is_homomorphism(f, c)) return refute("image of a constant is not a homomorphism", {k});
    for (std::size_t j = 0; j < k; ++j)
      if (mapping[j] == f) return refute("mapping is not injective", {j, k});
    if (require_central)
      for (const Endo& u : units)
        if (!commutes(f, u)) return refute("image of a constant is not central", {k});
  }
  return Verdict{};
}

std::optional<std::vector<Endo>> find_semialgebra(const CarrierTable& c, bool require_central) {
  require_closed(c, "semialgebra search");
  std::vector<Endo> candidates;
  std::vector<Endo> units;
  if (require_central) units = all_bijections(c.size());
  for (Endo& f : enumerate_endos(c, 1'000'000)) {
    if (!is_homomorphism(f, c)) continue;
    if (require_central &&
        !std::all_of(units.begin(), units.end(), [&](const Endo& u) { return commutes(f, u); }))
      continue;
    candidates.push_back(std::move(f));
  }
  if (candidates.size() < c.size()) return std::nullopt;
  // Any injective assignment works since the conditions are per element.
  return std::vector<Endo>(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(c.size()));
}

std::optional<std::vector<std::size_t>> iso_check(const CarrierTable& a, const CarrierTable& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > 8) throw TooManyEndos("isomorphism search is limited to 8 elements");
  std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  auto image = [&](std::size_t v) { return v == npos ? npos : p[v]; };
  do {
    if (a.neutral != npos && image(a.neutral) != b.neutral) continue;
    bool ok = true;
    for (std::size_t x = 0; ok && x < n; ++x)
      for (std::size_t y = 0; ok && y < n; ++y)
        ok = image(a.plus(x, y)) == b.plus(p[x], p[y]);
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

std::string endo_label(const Endo& f, const CarrierTable& c) {
  std::string out = "[";
  for (std::size_t x = 0; x < f.map.size(); ++x) {
    if (x) out += ' ';
    out += c.names[f(x)];
  }
  return out + "]";
}

std::string format_carrier(const CarrierTable& c) {
  std::size_t w = 1;
  for (const std::string& s : c.names) w = std::max(w, s.size());
  auto pad = [w](const std::string& s) { return s + std::string(w - s.size() + 1, ' '); };
  std::ostringstream out;
  out << "carrier of " << render(c.space) << ": " << c.size() << " elements"
      << (c.closed ? "" : " (not closed)") << '\n';
  out << pad("+") << "| ";
  for (const std::string& s : c.names) out << pad(s);
  out << '\n';
  for (std::size_t x = 0; x < c.size(); ++x) {
    out << pad(c.names[x]) << "| ";
    for (std::size_t y = 0; y < c.size(); ++y) {
      std::size_t s = c.plus(x, y);
      out << pad(s == npos ? "?" : c.names[s]);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_tables(const SemiringReport& r, const std::vector<std::string>& endo_names) {
  std::size_t w = 3;
  for (const std::string& s : endo_names) w = std::max(w, s.size());
  auto pad = [w](const std::string& s) { return s + std::string(w - s.size() + 1, ' '); };
  auto name = [&](std::size_t i) { return i == npos ? std::string("?") : endo_names.at(i); };
  std::ostringstream out;
  auto table = [&](const char* op, const std::vector<std::vector<std::size_t>>& t) {
    out << pad(op) << "| ";
    for (std::size_t j = 0; j < t.size(); ++j) out << pad(name(j));
    out << '\n';
    for (std::size_t i = 0; i < t.size(); ++i) {
      out << pad(name(i)) << "| ";
      for (std::size_t j = 0; j < t.size(); ++j) out << pad(name(t[i][j]));
      out << '\n';
    }
  };
  table("f.g", r.product);
  out << '\n';
  table("f+g", r.sum);
  return out.str();
}

std::string format_report(const SemiringReport& r, const CarrierTable& c) {
  std::ostringstream out;
  out << format_carrier(c) << '\n';
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "endomorphisms:  " << r.endos.size() << '\n'
      << "constants:      " << r.count(&EndoFlags::constant) << '\n'
      << "homomorphisms:  " << r.count(&EndoFlags::homomorphism) << '\n'
      << "units:          " << r.count(&EndoFlags::unit) << '\n'
      << "central:        " << r.count(&EndoFlags::central) << '\n'
      << "idempotents:    " << r.count(&EndoFlags::idempotent) << '\n'
      << "subspaces:      " << r.count(&EndoFlags::subspace) << '\n'
      << "algebraic:      " << yn(r.space.algebraic) << '\n'
      << "neutral space:  " << yn(r.space.neutral_space) << '\n'
      << "semilattice:    " << yn(r.space.semilattice) << '\n'
      << "field:          " << (r.space.field ? yn(*r.space.field) : "unknown") << '\n'
      << "zero central:   " << yn(r.zero_central) << '\n';
  return out.str();
}

std::string tsv_report(const SemiringReport& r, const CarrierTable& c) {
  std::ostringstream out;
  out << "endo\tconstant\thomomorphism\tunit\tcentral\tidempotent\tsubspace\n";
  for (std::size_t i = 0; i < r.endos.size(); ++i) {
    const EndoFlags& f = r.flags[i];
    out << endo_label(r.endos[i], c) << '\t' << f.constant << '\t' << f.homomorphism << '\t' << f.unit
        << '\t' << f.central << '\t' << f.idempotent << '\t' << f.subspace << '\n';
  }
  return out.str();
}

}  // namespace coda
