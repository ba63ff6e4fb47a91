#pragma once

// Pure data: a Data is a finite sequence of Codas, a Coda is a pair of Data.
// Both are immutable values; codas share their nodes, so copies are cheap.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coda/errors.hpp"

namespace coda {

namespace detail {
struct Node;
}

class Data;

class Coda {
 public:
  // Recognized encodings. Detection is structural: a coda built by hand with
  // the word layout is a word, whichever constructor produced it.
  enum class Kind : std::uint8_t { plain, bit, byte, word, lang };

  // (:)
  Coda();
  Coda(Data left, Data right);

  const Data& left() const;
  const Data& right() const;

  Kind kind() const;
  bool is_word() const { return kind() == Kind::word; }
  bool is_lang() const { return kind() == Kind::lang; }
  bool is_structural() const;  // empty left: (:X)
  // Word text or language source; empty for other kinds.
  std::string_view text() const;
  int byte_value() const;  // -1 unless kind() == byte

  std::size_t hash() const;
  std::size_t nodes() const;
  bool same_node(const Coda& other) const { return node_ == other.node_; }

 private:
  explicit Coda(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::Node> node_;
};

class Data {
 public:
  using const_iterator = std::vector<Coda>::const_iterator;

  Data() = default;
  Data(std::initializer_list<Coda> items) : items_(items) {}
  explicit Data(std::vector<Coda> items) : items_(std::move(items)) {}
  explicit Data(Coda single) : items_{std::move(single)} {}

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Coda& operator[](std::size_t i) const { return items_[i]; }
  const Coda& front() const { return items_.front(); }
  const Coda& back() const { return items_.back(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const std::vector<Coda>& items() const { return items_; }

  void push_back(Coda c) { items_.push_back(std::move(c)); }
  Data& append(const Data& other);
  // Items [from, to); `to` is clamped to size().
  Data slice(std::size_t from, std::size_t to = static_cast<std::size_t>(-1)) const;

  std::size_t hash() const;
  std::size_t nodes() const;

 private:
  std::vector<Coda> items_;
};

namespace detail {
struct Node {
  Data left;
  Data right;
  std::size_t hash = 0;
  std::size_t nodes = 1;
  Coda::Kind kind = Coda::Kind::plain;
  int byte = -1;
  std::string text;
};
}  // namespace detail

Coda make_coda(Data left, Data right);
Data concat(const Data& a, const Data& b);

bool structural_eq(const Data& a, const Data& b);
bool structural_eq(const Coda& a, const Coda& b);
inline bool operator==(const Data& a, const Data& b) { return structural_eq(a, b); }
inline bool operator==(const Coda& a, const Coda& b) { return structural_eq(a, b); }

// Total order: shorter sequence first, then pointwise; a coda compares by
// (left, right).
std::strong_ordering canonical_order(const Data& a, const Data& b);
std::strong_ordering canonical_order(const Coda& a, const Coda& b);

struct CanonicalLess {
  bool operator()(const Data& a, const Data& b) const { return canonical_order(a, b) < 0; }
  bool operator()(const Coda& a, const Coda& b) const { return canonical_order(a, b) < 0; }
};

struct DataHash {
  std::size_t operator()(const Data& d) const { return d.hash(); }
};

struct SizeBound {
  std::size_t width = 0;
  std::size_t depth = 0;
  friend bool operator==(const SizeBound&, const SizeBound&) = default;
};

SizeBound measure(const Data& d);

using BigInt = boost::multiprecision::cpp_int;

// D(w,0) = 1, D(w,d) = sum_{k=0..w} (D(w,d-1)^2)^k
BigInt count_pure_data(SizeBound bound);

// Streams every pure data within `bound` in strictly increasing canonical
// order. Throws CapExceeded when the predicted count exceeds `cap`.
class PureDataEnumerator {
 public:
  static constexpr std::size_t kDefaultCap = 10'000'000;

  explicit PureDataEnumerator(SizeBound bound, std::size_t cap = kDefaultCap);

  std::optional<Data> next();
  std::size_t predicted() const { return predicted_; }

 private:
  std::size_t width_;
  std::vector<Coda> codas_;        // depth-limited codas, canonical order
  std::vector<std::size_t> digits_;  // mixed-radix counter over codas_
  std::size_t length_ = 0;
  std::size_t predicted_ = 0;
  bool done_ = false;
};

std::vector<Data> enumerate_pure_data(SizeBound bound,
                                      std::size_t cap = PureDataEnumerator::kDefaultCap);

// Canonical text form: "()" for empty data, "(L:R)" with empty sides omitted,
// items joined by single spaces. Words and language atoms are shown in their
// structural form here; see lang.hpp for the human-facing renderer.
std::string canonical_text(const Data& d);

}  // namespace coda
