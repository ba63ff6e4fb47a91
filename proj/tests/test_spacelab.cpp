#include <doctest.h>

#include <numeric>

#include "coda/atoms.hpp"
#include "coda/organic.hpp"
#include "coda/spacelab.hpp"
#include "test_support.hpp"

using namespace coda;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Idempotent self-maps of an n-set: choose the image (k points), map the rest into it.
std::size_t idempotent_maps(std::size_t n) {
  std::size_t total = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t ways = binomial(n, k);
    for (std::size_t i = 0; i < n - k; ++i) ways *= k;
    total += ways;
  }
  return total;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

CarrierTable bool_carrier() { return extract_carrier(words("bool"), ProbeSet::standard(), prelude()); }

}  // namespace

TEST_SUITE("spacelab") {
  TEST_CASE("bool carrier") {
    CarrierTable c = bool_carrier();
    REQUIRE(c.size() == 2);
    CHECK(c.closed);
    CHECK(c.names == std::vector<std::string>{"()", "(:)"});
    CHECK(c.neutral == 0);
    CHECK(c.plus(1, 0) == 1);
    CHECK(c.plus(1, 1) == 1);
  }

  TEST_CASE("rem(3,3) carrier from rewriting") {
    Data space = parse("prod (:while remove a a a) (:is a)");
    ProbeSet p = ProbeSet::standard(words("a"));
    CarrierTable c = extract_carrier(space, p, prelude());
    CHECK(c.names == std::vector<std::string>{"()", "a", "a a"});
    CHECK(iso_check(c, cyclic(3)).has_value());
  }

  TEST_CASE("carrier caps") {
    ProbeSet p = ProbeSet::standard(words("a"));
    CHECK_THROWS_AS(extract_carrier(words("is a"), p, prelude(), {.cap = 5}), CarrierOverflow);
    CarrierTable partial = extract_carrier(words("is a"), p, prelude(), {.cap = 5, .close = true, .strict = false});
    CHECK(partial.size() == 5);
    CHECK_FALSE(partial.closed);
    CHECK(partial.plus(0, 4) == 4);
    CHECK(partial.plus(2, 3) == npos);
    CHECK_THROWS_AS(classify(partial, {}), CarrierOverflow);
  }

  TEST_CASE("endomorphism counts agree with combinatorial formulas") {
    for (std::size_t n = 2; n <= 5; ++n) {
      CAPTURE(n);
      CarrierTable z = cyclic(n);
      std::vector<Endo> all = enumerate_endos(z);
      std::size_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= n;
      CHECK(all.size() == expected);
      SemiringReport r = classify(z, all);
      CHECK(r.count(&EndoFlags::constant) == n);
      CHECK(r.count(&EndoFlags::unit) == factorial(n));
      CHECK(r.count(&EndoFlags::idempotent) == idempotent_maps(n));
      // homomorphisms of Z_n are x -> kx
      CHECK(r.count(&EndoFlags::homomorphism) == n);
      CHECK(r.space.algebraic);
      CHECK(r.space.neutral_space);
    }
    CHECK_THROWS_AS(enumerate_endos(cyclic(6)), TooManyEndos);
  }

  TEST_CASE("enumeration order and composition") {
    CarrierTable c = cyclic(2);
    std::vector<Endo> all = enumerate_endos(c);
    REQUIRE(all.size() == 4);
    CHECK(all[0].map == std::vector<std::size_t>{0, 0});
    CHECK(all[1].map == std::vector<std::size_t>{0, 1});
    Endo swap{{1, 0}}, zero{{0, 0}};
    CHECK(compose(swap, zero).map == std::vector<std::size_t>{1, 1});
    CHECK(compose(zero, swap).map == std::vector<std::size_t>{0, 0});
    CHECK(oplus(swap, identity_endo(c), c).map == std::vector<std::size_t>{1, 1});
  }

  TEST_CASE("bool classification") {
    CarrierTable c = bool_carrier();
    SemiringReport r = classify(c, enumerate_endos(c));
    CHECK(r.endos.size() == 4);
    CHECK(r.count(&EndoFlags::homomorphism) == 3);
    CHECK(r.count(&EndoFlags::unit) == 2);
    CHECK(r.count(&EndoFlags::subspace) == 3);
    CHECK(r.space.semilattice);
    CHECK_FALSE(r.space.neutral_space);
    CHECK_FALSE(r.zero_central);
    REQUIRE(r.space.field.has_value());
    CHECK(*r.space.field);
  }

  TEST_CASE("table layout") {
    CarrierTable c = bool_carrier();
    std::vector<Endo> endos{Endo{{0, 1}}, Endo{{0, 0}}, Endo{{1, 1}}, Endo{{1, 0}}};
    SemiringReport r = classify(c, endos);
    std::string t = format_tables(r, {"ID", "TRUE", "FALSE", "NOT"});
    CHECK(t.find("f.g   | ID    TRUE  FALSE NOT") != std::string::npos);
    CHECK(t.find("NOT   | NOT   FALSE TRUE  ID") != std::string::npos);
    CHECK(t.find("NOT   | FALSE NOT   FALSE NOT") != std::string::npos);
    std::string tsv = tsv_report(r, c);
    CHECK(tsv.rfind("endo\tconstant", 0) == 0);
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 5);
  }

  TEST_CASE("field verdicts agree") {
    for (std::size_t n = 2; n <= 6; ++n) {
      FieldVerdict v = field_check(cyclic(n));
      bool prime = n == 2 || n == 3 || n == 5;
      CAPTURE(n);
      CHECK(v.agree());
      CHECK(v.direct == prime);
    }
    CHECK_FALSE(field_check(rem_carrier(1, 3)).direct);
  }

  TEST_CASE("quotient by a homomorphism") {
    CarrierTable z4 = cyclic(4);
    Endo twice{{0, 2, 0, 2}};
    REQUIRE(is_homomorphism(twice, z4));
    Endo e = quotient_of_hom(twice, z4);
    CHECK(e.map == std::vector<std::size_t>{0, 1, 0, 1});
    CHECK(is_subspace(e, z4));
    CHECK_THROWS_AS(quotient_of_hom(Endo{{1, 1, 1, 1}}, z4), NotAHomomorphism);
  }

  TEST_CASE("semialgebras") {
    CarrierTable c = bool_carrier();
    CHECK_FALSE(find_semialgebra(c, true).has_value());
    auto plain = find_semialgebra(c, false);
    REQUIRE(plain.has_value());
    CHECK(verify_semialgebra(c, *plain, false).holds());
    // TRUE -> ID, (:) -> NOT: NOT is no homomorphism
    Verdict v = verify_semialgebra(c, {Endo{{0, 1}}, Endo{{1, 0}}}, false);
    CHECK(v.refuted());
    CHECK(v.witness.size() == 1);
    CHECK(verify_semialgebra(c, {Endo{{0, 1}}, Endo{{0, 1}}}, false).refuted());
  }

  TEST_CASE("isomorphisms") {
    CHECK(iso_check(bool_carrier(), rem_carrier(1, 2)).has_value());
    CHECK_FALSE(iso_check(bool_carrier(), cyclic(2)).has_value());
    CHECK_FALSE(iso_check(cyclic(3), cyclic(4)).has_value());
    // Z3 with its elements listed in another order
    std::vector<Data> els{words("z"), words("y"), Data{}};
    auto value = [](const Data& d) { return d.empty() ? 0 : d[0].text() == "y" ? 1 : 2; };
    CarrierTable other = CarrierTable::from_operation(els, {"2", "1", "0"}, Data{}, [&](const Data& x, const Data& y) {
      int s = (value(x) + value(y)) % 3;
      return s == 0 ? Data{} : s == 1 ? words("y") : words("z");
    });
    CHECK(other.closed);
    CHECK(iso_check(other, cyclic(3)).has_value());
  }
}
