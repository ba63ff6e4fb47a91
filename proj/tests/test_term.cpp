#include <doctest.h>

#include <functional>
#include <set>
#include <string>

#include "coda/atoms.hpp"
#include "coda/term.hpp"

using namespace coda;

namespace {

// Independent enumerator: builds canonical strings recursively and counts
// distinct ones, sharing no code with the library's enumerator.
std::set<std::string> strings_within(std::size_t width, std::size_t depth) {
  if (depth == 0) return {""};
  std::set<std::string> inner = strings_within(width, depth - 1);
  std::vector<std::string> codas;
  for (const std::string& l : inner)
    for (const std::string& r : inner) codas.push_back("(" + l + ":" + r + ")");
  std::set<std::string> out{""};
  std::function<void(std::string, std::size_t)> grow = [&](std::string prefix, std::size_t left) {
    if (left == 0) return;
    for (const std::string& c : codas) {
      std::string next = prefix.empty() ? c : prefix + " " + c;
      out.insert(next);
      grow(next, left - 1);
    }
  };
  grow("", width);
  return out;
}

Coda unit() { return Coda{}; }
Data d(std::initializer_list<Coda> items) { return Data(items); }

}  // namespace

TEST_SUITE("term") {
  TEST_CASE("counts match the exact table cells") {
    CHECK(count_pure_data({0, 4}) == 1);
    CHECK(count_pure_data({1, 3}) == 26);
    CHECK(count_pure_data({1, 4}) == 677);
    CHECK(count_pure_data({2, 2}) == 91);
    CHECK(count_pure_data({3, 2}) == 4369);
    CHECK(count_pure_data({4, 2}) == 406901);
    CHECK(count_pure_data({4, 1}) == 5);
    // 91^2 = 8281 codas; 1 + 8281 + 8281^2
    CHECK(count_pure_data({2, 3}) == 68'583'243);
  }

  TEST_CASE("counts agree with an independent enumeration") {
    for (std::size_t w = 0; w <= 3; ++w)
      for (std::size_t dep = 0; dep <= 2; ++dep) {
        if (w == 3 && dep == 2) continue;  // 4369 strings: covered below
        CAPTURE(w);
        CAPTURE(dep);
        CHECK(count_pure_data({w, dep}) == strings_within(w, dep).size());
      }
    CHECK(strings_within(3, 2).size() == 4369);
  }

  TEST_CASE("enumeration is strictly increasing and matches canonical text") {
    std::vector<Data> all = enumerate_pure_data({2, 2});
    REQUIRE(all.size() == 91);
    std::set<std::string> texts;
    for (std::size_t i = 0; i < all.size(); ++i) {
      texts.insert(canonical_text(all[i]));
      if (i) CHECK(canonical_order(all[i - 1], all[i]) < 0);
      SizeBound m = measure(all[i]);
      CHECK(m.width <= 2);
      CHECK(m.depth <= 2);
    }
    CHECK(texts.size() == 91);
    CHECK(canonical_text(all.front()) == "()");
  }

  TEST_CASE("enumeration refuses oversize requests before building") {
    CHECK_THROWS_AS(PureDataEnumerator({2, 3}, 1'000'000), CapExceeded);
    CHECK_NOTHROW(PureDataEnumerator({2, 2}, 91));
  }

  TEST_CASE("canonical text") {
    CHECK(canonical_text(Data{}) == "()");
    CHECK(canonical_text(d({unit()})) == "(:)");
    CHECK(canonical_text(d({make_coda(d({unit()}), {})})) == "((:):)");
    CHECK(canonical_text(d({make_coda({}, d({unit()})), unit()})) == "(:(:)) (:)");
  }

  TEST_CASE("measure") {
    CHECK(measure(Data{}) == SizeBound{0, 0});
    CHECK(measure(d({unit()})) == SizeBound{1, 1});
    CHECK(measure(d({unit(), unit(), unit()})) == SizeBound{3, 1});
    Data nested = d({make_coda(d({unit(), unit()}), {})});
    CHECK(measure(nested) == SizeBound{2, 2});
  }

  TEST_CASE("structural equality and hashing") {
    Data x = d({make_coda(d({unit()}), d({unit(), unit()}))});
    Data y = d({make_coda(d({Coda{}}), d({Coda{}, Coda{}}))});
    CHECK(x == y);
    CHECK(x.hash() == y.hash());
    CHECK_FALSE(x == d({unit()}));
    CHECK(x.nodes() == 4);
  }

  TEST_CASE("canonical order puts shorter data first") {
    CHECK(canonical_order(Data{}, d({unit()})) < 0);
    CHECK(canonical_order(d({unit(), unit()}), d({make_coda(d({unit()}), {})})) > 0);
    // (:) < ((:):) since the left sides compare () < (:)
    CHECK(canonical_order(unit(), make_coda(d({unit()}), {})) < 0);
  }

  TEST_CASE("word encoding is structural") {
    // word "a" built by hand: (((:):(:)) : byte 0x61)
    Coda zero = make_coda(d({unit()}), {});
    Coda one = make_coda(d({unit()}), d({unit()}));
    std::vector<Coda> bits_of_a;
    for (int b = 7; b >= 0; --b) bits_of_a.push_back((0x61 >> b) & 1 ? one : zero);
    Coda byte = make_coda(d({zero}), Data(bits_of_a));
    Coda by_hand = make_coda(d({one}), d({byte}));
    CHECK(by_hand.is_word());
    CHECK(by_hand.text() == "a");
    CHECK(by_hand == word("a"));
    CHECK(byte.byte_value() == 0x61);
    CHECK(canonical_order(word("b"), word("ab")) < 0);
    CHECK(canonical_order(word("a"), word("b")) < 0);
  }
}
