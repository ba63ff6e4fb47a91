#pragma once

// The {} language: byte strings that denote data.
//
//   expr  := the whole input split at its first top-level ':'  ->  (left : right)
//          | otherwise at its first top-level '=' with both sides non-empty
//                                                            ->  (= left : right)
//          | otherwise whitespace separated terms, concatenated
//   term  := word | '(' expr ')' | '{' raw '}' | '='
//
// '{...}' yields a language atom holding the raw text. Unclosed '(' and '{'
// are closed at end of input; unmatched ')' and '}' are word characters.
// Every byte string parses.

#include <string>
#include <string_view>

#include "coda/term.hpp"

namespace coda {

// The words A and B are kept as ordinary words.
Data parse(std::string_view source);

// ({source} a : b): like parse, with the words A and B replaced by a and b.
Data eval_lang_atom(std::string_view source, const Data& a, const Data& b);

// Human-facing text. Words print as their text, language atoms as {src},
// other codas as (L:R); empty data prints as "()".
std::string render(const Data& d);
std::string render(const Coda& c);

}  // namespace coda
