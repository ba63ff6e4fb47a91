#include <doctest.h>

#include "coda/atoms.hpp"
#include "coda/lang.hpp"

using namespace coda;

TEST_SUITE("lang") {
  TEST_CASE("words and colons") {
    CHECK(parse("a b") == words("a b"));
    Data p = parse("pass : a b");
    REQUIRE(p.size() == 1);
    CHECK(p[0].left() == words("pass"));
    CHECK(p[0].right() == words("a b"));
    CHECK(parse("").empty());
  }

  TEST_CASE("only the first top-level colon splits") {
    Data p = parse("f : g : x");
    REQUIRE(p.size() == 1);
    CHECK(p[0].left() == words("f"));
    REQUIRE(p[0].right().size() == 1);
    CHECK(render(p[0].right()) == "(g:x)");
  }

  TEST_CASE("groups splice, braces make language atoms") {
    CHECK(parse("(a b) c") == words("a b c"));
    Data p = parse("{B B}");
    REQUIRE(p.size() == 1);
    CHECK(p[0].is_lang());
    CHECK(p[0].text() == "B B");
    CHECK(render(p) == "{B B}");
  }

  TEST_CASE("equality sugar") {
    CHECK(render(parse("a=b")) == "(= a:b)");
    CHECK(render(parse("=")) == "=");
  }

  TEST_CASE("every string parses") {
    CHECK_NOTHROW(parse(")))"));
    CHECK_NOTHROW(parse("((("));
    CHECK_NOTHROW(parse("{unclosed"));
    CHECK(render(parse("a)")) == "a)");
    CHECK(render(parse("(a")) == "a");
  }

  TEST_CASE("render round trips through parse") {
    for (const char* s : {"a b", "(f:x y)", "{A B}", "(:)", "(a:(b:c))", "x (:) y"})
      CHECK(render(parse(render(parse(s)))) == render(parse(s)));
    CHECK(render(Data{}) == "()");
    CHECK(render(Data{Coda{}}) == "(:)");
  }

  TEST_CASE("holes are substituted by eval_lang_atom") {
    CHECK(render(eval_lang_atom("B B", {}, words("1 2"))) == "1 2 1 2");
    CHECK(render(eval_lang_atom("A B", words("x"), words("y"))) == "x y");
    CHECK(render(eval_lang_atom("first 2 : B", {}, words("p q r"))) == "(first 2:p q r)");
  }
}
