#include "coda/term.hpp"

#include <algorithm>
#include <functional>

namespace coda {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  // boost::hash_combine, 64-bit variant
  value *= 0x9e3779b97f4a7c15ULL;
  seed ^= value + 0x9e3779b9 + (seed << 6) + (seed >> 2);
  return seed;
}

constexpr std::size_t kLeftSalt = 0x51ed270b;
constexpr std::size_t kRightSalt = 0xa1ce5c3d;

bool is_unit_coda(const Coda& c) { return c.left().empty() && c.right().empty(); }

// (:(:)) marks language atoms.
bool is_lang_marker(const Coda& c) {
  return c.left().empty() && c.right().size() == 1 && is_unit_coda(c.right()[0]);
}

bool all_of_kind(const Data& d, Coda::Kind kind) {
  return std::all_of(d.begin(), d.end(), [kind](const Coda& c) { return c.kind() == kind; });
}

std::string bytes_text(const Data& bytes) {
  std::string text;
  text.reserve(bytes.size());
  for (const Coda& b : bytes) text.push_back(static_cast<char>(b.byte_value()));
  return text;
}

void classify(detail::Node& node) {
  const Data& l = node.left;
  const Data& r = node.right;
  if (l.size() != 1) return;
  const Coda& head = l[0];
  if (is_unit_coda(head)) {
    if (r.empty()) {
      node.kind = Coda::Kind::bit;
      node.byte = 0;
    } else if (r.size() == 1 && is_unit_coda(r[0])) {
      node.kind = Coda::Kind::bit;
      node.byte = 1;
    }
    return;
  }
  if (head.kind() == Coda::Kind::bit) {
    if (head.byte_value() == 0 && r.size() == 8 && all_of_kind(r, Coda::Kind::bit)) {
      int value = 0;
      for (const Coda& bit : r) value = (value << 1) | bit.byte_value();
      node.kind = Coda::Kind::byte;
      node.byte = value;
    } else if (head.byte_value() == 1 && all_of_kind(r, Coda::Kind::byte)) {
      node.kind = Coda::Kind::word;
      node.text = bytes_text(r);
    }
    return;
  }
  if (is_lang_marker(head) && all_of_kind(r, Coda::Kind::byte)) {
    node.kind = Coda::Kind::lang;
    node.text = bytes_text(r);
  }
}

std::shared_ptr<const detail::Node> build_node(Data left, Data right) {
  auto node = std::make_shared<detail::Node>();
  node->left = std::move(left);
  node->right = std::move(right);
  node->hash = mix(mix(0x7a3b, node->left.hash() ^ kLeftSalt), node->right.hash() ^ kRightSalt);
  node->nodes = 1 + node->left.nodes() + node->right.nodes();
  classify(*node);
  return node;
}

const std::shared_ptr<const detail::Node>& unit_node() {
  static const std::shared_ptr<const detail::Node> node = build_node(Data{}, Data{});
  return node;
}

}  // namespace

Coda::Coda() : node_(unit_node()) {}

Coda::Coda(Data left, Data right) : node_(build_node(std::move(left), std::move(right))) {}

const Data& Coda::left() const { return node_->left; }
const Data& Coda::right() const { return node_->right; }
Coda::Kind Coda::kind() const { return node_->kind; }
bool Coda::is_structural() const { return node_->left.empty(); }
std::string_view Coda::text() const { return node_->text; }
int Coda::byte_value() const { return node_->byte; }
std::size_t Coda::hash() const { return node_->hash; }
std::size_t Coda::nodes() const { return node_->nodes; }

Data& Data::append(const Data& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  return *this;
}

Data Data::slice(std::size_t from, std::size_t to) const {
  to = std::min(to, items_.size());
  if (from >= to) return Data{};
  return Data(std::vector<Coda>(items_.begin() + static_cast<std::ptrdiff_t>(from),
                                items_.begin() + static_cast<std::ptrdiff_t>(to)));
}

std::size_t Data::hash() const {
  std::size_t h = 0x2545f491 + items_.size();
  for (const Coda& c : items_) h = mix(h, c.hash());
  return h;
}

std::size_t Data::nodes() const {
  std::size_t n = 0;
  for (const Coda& c : items_) n += c.nodes();
  return n;
}

Coda make_coda(Data left, Data right) { return Coda(std::move(left), std::move(right)); }

Data concat(const Data& a, const Data& b) {
  Data out = a;
  out.append(b);
  return out;
}

bool structural_eq(const Coda& a, const Coda& b) {
  if (a.same_node(b)) return true;
  if (a.hash() != b.hash() || a.nodes() != b.nodes() || a.kind() != b.kind()) return false;
  if (a.kind() == Coda::Kind::word || a.kind() == Coda::Kind::lang) return a.text() == b.text();
  if (a.kind() == Coda::Kind::byte || a.kind() == Coda::Kind::bit)
    return a.byte_value() == b.byte_value();
  return structural_eq(a.left(), b.left()) && structural_eq(a.right(), b.right());
}

bool structural_eq(const Data& a, const Data& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!structural_eq(a[i], b[i])) return false;
  return true;
}

std::strong_ordering canonical_order(const Coda& a, const Coda& b) {
  if (a.same_node(b)) return std::strong_ordering::equal;
  // Same-kind byte encodings order exactly like their structure: shorter
  // byte sequence first, then bytes compared numerically (MSB-first bits).
  if (a.kind() == b.kind() && (a.is_word() || a.is_lang())) {
    if (a.text().size() != b.text().size()) return a.text().size() <=> b.text().size();
    for (std::size_t i = 0; i < a.text().size(); ++i) {
      auto x = static_cast<unsigned char>(a.text()[i]);
      auto y = static_cast<unsigned char>(b.text()[i]);
      if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
  }
  if (auto c = canonical_order(a.left(), b.left()); c != 0) return c;
  return canonical_order(a.right(), b.right());
}

std::strong_ordering canonical_order(const Data& a, const Data& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = canonical_order(a[i], b[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

SizeBound measure(const Data& d) {
  SizeBound out{d.size(), 0};
  for (const Coda& c : d) {
    SizeBound l = measure(c.left());
    SizeBound r = measure(c.right());
    out.width = std::max({out.width, l.width, r.width});
    out.depth = std::max(out.depth, 1 + std::max(l.depth, r.depth));
  }
  return out;
}

BigInt count_pure_data(SizeBound bound) {
  BigInt count = 1;
  for (std::size_t d = 0; d < bound.depth; ++d) {
    BigInt codas = count * count;
    BigInt term = 1;
    BigInt sum = 0;
    for (std::size_t k = 0; k <= bound.width; ++k) {
      sum += term;
      term *= codas;
    }
    count = sum;
  }
  return count;
}

PureDataEnumerator::PureDataEnumerator(SizeBound bound, std::size_t cap) : width_(bound.width) {
  BigInt predicted = count_pure_data(bound);
  if (predicted > cap)
    throw CapExceeded("enumeration of width " + std::to_string(bound.width) + " depth " +
                      std::to_string(bound.depth) + " predicts " + predicted.str() +
                      " items, cap is " + std::to_string(cap));
  predicted_ = static_cast<std::size_t>(predicted);
  if (bound.depth > 0) {
    std::vector<Data> shallower = enumerate_pure_data({bound.width, bound.depth - 1}, cap);
    codas_.reserve(shallower.size() * shallower.size());
    for (const Data& l : shallower)
      for (const Data& r : shallower) codas_.push_back(make_coda(l, r));
  }
}

std::optional<Data> PureDataEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<Coda> items;
  items.reserve(length_);
  for (std::size_t digit : digits_) items.push_back(codas_[digit]);
  Data current(std::move(items));

  // Advance the counter: last digit fastest, then grow the length.
  std::size_t i = length_;
  while (i > 0) {
    --i;
    if (++digits_[i] < codas_.size()) break;
    digits_[i] = 0;
    if (i == 0) {
      ++length_;
      digits_.assign(length_, 0);
      break;
    }
  }
  if (length_ == 0) {  // the empty data was just produced
    length_ = 1;
    digits_.assign(1, 0);
  }
  if (length_ > width_ || codas_.empty()) done_ = true;
  return current;
}

std::vector<Data> enumerate_pure_data(SizeBound bound, std::size_t cap) {
  PureDataEnumerator it(bound, cap);
  std::vector<Data> out;
  out.reserve(it.predicted());
  while (auto d = it.next()) out.push_back(std::move(*d));
  return out;
}

namespace {
void canonical_side(const Data& d, std::string& out);

void canonical_coda(const Coda& c, std::string& out) {
  out.push_back('(');
  canonical_side(c.left(), out);
  out.push_back(':');
  canonical_side(c.right(), out);
  out.push_back(')');
}

void canonical_side(const Data& d, std::string& out) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out.push_back(' ');
    canonical_coda(d[i], out);
  }
}
}  // namespace

std::string canonical_text(const Data& d) {
  if (d.empty()) return "()";
  std::string out;
  canonical_side(d, out);
  return out;
}

}  // namespace coda
