#include "coda/lang.hpp"

#include <cctype>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <variant>
#include <vector>

#include "coda/atoms.hpp"

namespace coda {

namespace {

// ---- tokens ---------------------------------------------------------------

struct Token {
  enum class Kind { word, space, colon, eq, group, brace };
  Kind kind;
  std::string text;             // word text or brace source
  std::vector<Token> children;  // group contents
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view src) : src_(src) {}

  std::vector<Token> run() { return sequence(false); }

 private:
  std::vector<Token> sequence(bool in_group) {
    std::vector<Token> out;
    std::string word;
    auto flush = [&] {
      if (!word.empty()) out.push_back({Token::Kind::word, std::move(word), {}});
      word.clear();
    };
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ')' && in_group) {
        ++pos_;
        flush();
        return out;
      }
      if (is_space(c)) {
        flush();
        while (pos_ < src_.size() && is_space(src_[pos_])) ++pos_;
        out.push_back({Token::Kind::space, {}, {}});
        continue;
      }
      ++pos_;
      switch (c) {
        case ':':
          flush();
          out.push_back({Token::Kind::colon, {}, {}});
          break;
        case '=':
          flush();
          out.push_back({Token::Kind::eq, {}, {}});
          break;
        case '(':
          flush();
          out.push_back({Token::Kind::group, {}, sequence(true)});
          break;
        case '{':
          flush();
          out.push_back({Token::Kind::brace, brace_source(), {}});
          break;
        default:
          word.push_back(c);
      }
    }
    flush();
    return out;
  }

  std::string brace_source() {
    std::string raw;
    int depth = 1;
    while (pos_ < src_.size()) {
      char c = src_[pos_++];
      if (c == '{') ++depth;
      if (c == '}' && --depth == 0) return raw;
      raw.push_back(c);
    }
    return raw;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// ---- expression tree --------------------------------------------------------

struct Expr;
using ExprList = std::vector<Expr>;

struct Expr {
  enum class Kind { word, lang, hole_a, hole_b, coda };
  Kind kind;
  std::string text;
  std::shared_ptr<ExprList> left, right;
};

using Span = std::pair<std::vector<Token>::const_iterator, std::vector<Token>::const_iterator>;

bool has_content(Span s) {
  for (auto it = s.first; it != s.second; ++it)
    if (it->kind != Token::Kind::space) return true;
  return false;
}

void build(Span s, ExprList& out);

ExprList build_list(Span s) {
  ExprList out;
  build(s, out);
  return out;
}

void push_coda(ExprList& out, Span l, Span r, const char* head = nullptr) {
  auto left = std::make_shared<ExprList>();
  if (head) left->push_back({Expr::Kind::word, head, nullptr, nullptr});
  build(l, *left);
  out.push_back({Expr::Kind::coda, {}, std::move(left), std::make_shared<ExprList>(build_list(r))});
}

void build(Span s, ExprList& out) {
  for (auto it = s.first; it != s.second; ++it) {
    if (it->kind == Token::Kind::colon) {
      push_coda(out, {s.first, it}, {it + 1, s.second});
      return;
    }
  }
  for (auto it = s.first; it != s.second; ++it) {
    if (it->kind == Token::Kind::eq && has_content({s.first, it}) &&
        has_content({it + 1, s.second})) {
      push_coda(out, {s.first, it}, {it + 1, s.second}, "=");
      return;
    }
  }
  for (auto it = s.first; it != s.second; ++it) {
    switch (it->kind) {
      case Token::Kind::space:
      case Token::Kind::colon:
        break;
      case Token::Kind::eq:
        out.push_back({Expr::Kind::word, "=", nullptr, nullptr});
        break;
      case Token::Kind::word:
        if (it->text == "A")
          out.push_back({Expr::Kind::hole_a, {}, nullptr, nullptr});
        else if (it->text == "B")
          out.push_back({Expr::Kind::hole_b, {}, nullptr, nullptr});
        else
          out.push_back({Expr::Kind::word, it->text, nullptr, nullptr});
        break;
      case Token::Kind::brace:
        out.push_back({Expr::Kind::lang, it->text, nullptr, nullptr});
        break;
      case Token::Kind::group:
        build({it->children.begin(), it->children.end()}, out);
        break;
    }
  }
}

std::shared_ptr<const ExprList> compile(std::string_view source) {
  static std::mutex mutex;
  static std::unordered_map<std::string, std::shared_ptr<const ExprList>> cache;
  std::string key(source);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<Token> tokens = Tokenizer(source).run();
  auto compiled = std::make_shared<const ExprList>(build_list({tokens.begin(), tokens.end()}));
  std::lock_guard lock(mutex);
  if (cache.size() > 4096) cache.clear();
  return cache.emplace(std::move(key), std::move(compiled)).first->second;
}

void instantiate(const ExprList& exprs, const Data& a, const Data& b, Data& out) {
  for (const Expr& e : exprs) {
    switch (e.kind) {
      case Expr::Kind::word:
        out.push_back(word(e.text));
        break;
      case Expr::Kind::lang:
        out.push_back(lang_atom(e.text));
        break;
      case Expr::Kind::hole_a:
        out.append(a);
        break;
      case Expr::Kind::hole_b:
        out.append(b);
        break;
      case Expr::Kind::coda: {
        Data l, r;
        instantiate(*e.left, a, b, l);
        instantiate(*e.right, a, b, r);
        out.push_back(make_coda(std::move(l), std::move(r)));
        break;
      }
    }
  }
}

// ---- rendering ----------------------------------------------------------------

void render_items(const Data& d, std::string& out);

void render_coda(const Coda& c, std::string& out) {
  if (c.is_word()) {
    out += c.text();
    return;
  }
  if (c.is_lang()) {
    out.push_back('{');
    out += c.text();
    out.push_back('}');
    return;
  }
  out.push_back('(');
  render_items(c.left(), out);
  out.push_back(':');
  render_items(c.right(), out);
  out.push_back(')');
}

void render_items(const Data& d, std::string& out) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out.push_back(' ');
    render_coda(d[i], out);
  }
}

}  // namespace

Data parse(std::string_view source) {
  static const Data hole_a{word("A")};
  static const Data hole_b{word("B")};
  Data out;
  instantiate(*compile(source), hole_a, hole_b, out);
  return out;
}

Data eval_lang_atom(std::string_view source, const Data& a, const Data& b) {
  Data out;
  instantiate(*compile(source), a, b, out);
  return out;
}

std::string render(const Data& d) {
  if (d.empty()) return "()";
  std::string out;
  render_items(d, out);
  return out;
}

std::string render(const Coda& c) {
  std::string out;
  render_coda(c, out);
  return out;
}

}  // namespace coda
