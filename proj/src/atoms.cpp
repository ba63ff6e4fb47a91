#include "coda/atoms.hpp"

#include <array>
#include <sstream>
#include <string>

namespace coda {

const Coda& unit_atom() {
  static const Coda unit;
  return unit;
}

const Coda& bit_atom(bool one) {
  static const Coda zero(Data{unit_atom()}, Data{});
  static const Coda one_(Data{unit_atom()}, Data{unit_atom()});
  return one ? one_ : zero;
}

const Coda& byte_marker() { return bit_atom(false); }
const Coda& word_marker() { return bit_atom(true); }

const Coda& lang_marker() {
  static const Coda marker(Data{}, Data{unit_atom()});
  return marker;
}

const Coda& byte_atom(unsigned char value) {
  static const std::array<Coda, 256> table = [] {
    std::array<Coda, 256> out;
    for (int v = 0; v < 256; ++v) {
      std::vector<Coda> payload;
      for (int bit = 7; bit >= 0; --bit) payload.push_back(bit_atom((v >> bit) & 1));
      out[static_cast<std::size_t>(v)] = Coda(Data{byte_marker()}, Data(std::move(payload)));
    }
    return out;
  }();
  return table[value];
}

Data bits(std::string_view text) {
  std::vector<Coda> out;
  out.reserve(text.size());
  for (char ch : text) out.push_back(byte_atom(static_cast<unsigned char>(ch)));
  return Data(std::move(out));
}

Coda word(std::string_view text) { return Coda(Data{word_marker()}, bits(text)); }

Coda lang_atom(std::string_view source) { return Coda(Data{lang_marker()}, bits(source)); }

Data words(std::string_view spaced) {
  std::istringstream in{std::string(spaced)};
  Data out;
  for (std::string w; in >> w;) out.push_back(word(w));
  return out;
}

Data repeat(const Coda& atom, std::size_t n) { return Data(std::vector<Coda>(n, atom)); }

}  // namespace coda
