#pragma once

// Byte-level encodings: bit, byte, word and language atoms.
//
//   bit 0  = ((:):)          bit 1 = ((:):(:))
//   byte   = (((:):) : b7 .. b0)      eight bits, most significant first
//   word   = (((:):(:)) : bytes)
//   lang   = ((:(:)) : bytes)         unparsed source of the {} language

#include <string_view>

#include "coda/term.hpp"

namespace coda {

const Coda& unit_atom();         // (:)
const Coda& bit_atom(bool one);  // also the byte and word markers
const Coda& byte_marker();       // ((:):)
const Coda& word_marker();       // ((:):(:))
const Coda& lang_marker();       // (:(:))
const Coda& byte_atom(unsigned char value);

Coda word(std::string_view text);
Data bits(std::string_view text);  // the byte atoms of `text`
Coda lang_atom(std::string_view source);

// Sequence of words: words("a b c") == word(a) word(b) word(c).
Data words(std::string_view spaced);
// a^n, the organic natural number n written with atom `a`.
Data repeat(const Coda& atom, std::size_t n);

}  // namespace coda
