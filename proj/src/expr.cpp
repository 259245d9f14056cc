#include "eulerian/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

#include "eulerian/constructions.hpp"
#include "eulerian/errors.hpp"

namespace eulerian {

namespace {

const std::map<std::string, Expr::Kind, std::less<>>& constructors() {
  static const std::map<std::string, Expr::Kind, std::less<>> table{
      {"chain", Expr::Kind::Chain}, {"boolean", Expr::Kind::Boolean}, {"dual", Expr::Kind::Dual},
      {"double", Expr::Kind::Double}, {"dni", Expr::Kind::Dni},       {"join", Expr::Kind::Join},
      {"glue", Expr::Kind::Glue},   {"dp", Expr::Kind::Dp},           {"lemma2", Expr::Kind::Lemma2},
      {"lemma3", Expr::Kind::Lemma3}};
  return table;
}

std::string name_of(Expr::Kind kind) {
  for (const auto& [name, k] : constructors()) {
    if (k == kind) return name;
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("expected end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw SyntaxError(pos_, expected + ", found " + found);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool peek(char ch) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  struct Int {
    std::int64_t value;
    std::size_t offset;
  };

  Int integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("expected integer");
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) throw RangeError(start, "integer too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return {negative ? -v : v, start};
  }

  std::vector<Int> int_list() {
    std::vector<Int> out;
    expect('[');
    if (peek(']')) {
      ++pos_;
      return out;
    }
    do {
      out.push_back(integer());
    } while (consume(','));
    expect(']');
    return out;
  }

  bool consume(char ch) {
    if (!peek(ch)) return false;
    ++pos_;
    return true;
  }

  static std::int64_t at_least(const Int& v, std::int64_t lo, const std::string& what) {
    if (v.value < lo) {
      throw RangeError(v.offset, what + " must be at least " + std::to_string(lo) + ", got " + std::to_string(v.value));
    }
    return v.value;
  }

  static int small(const Int& v, const std::string& what) {
    if (v.value > 4096) throw RangeError(v.offset, what + " " + std::to_string(v.value) + " is too large");
    return static_cast<int>(v.value);
  }

  Expr expr() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto it = constructors().find(name);
    if (it == constructors().end()) {
      pos_ = start;
      fail("expected one of chain, boolean, dual, double, dni, join, glue, dp, lemma2, lemma3");
    }
    Expr e;
    e.kind = it->second;
    e.offset = start;
    expect('(');
    switch (e.kind) {
      case Expr::Kind::Chain:
      case Expr::Kind::Boolean: {
        const Int k = integer();
        e.rank = small(k, "rank");
        at_least(k, 1, "rank");
        e.ints = {k.value};
        break;
      }
      case Expr::Kind::Dual:
      case Expr::Kind::Double:
        e.children.push_back(expr());
        e.rank = e.children.front().rank;
        break;
      case Expr::Kind::Dni: {
        e.children.push_back(expr());
        e.rank = e.children.front().rank;
        expect(',');
        const Int lo = integer();
        expect(',');
        const Int hi = integer();
        expect(',');
        const Int copies = integer();
        if (lo.value < 1 || lo.value > e.rank - 1) {
          throw RangeError(lo.offset, "interval start " + std::to_string(lo.value) + " outside [1," + std::to_string(e.rank - 1) + "]");
        }
        if (hi.value < lo.value || hi.value > e.rank - 1) {
          throw RangeError(hi.offset, "interval end " + std::to_string(hi.value) + " outside [" + std::to_string(lo.value) + "," + std::to_string(e.rank - 1) + "]");
        }
        at_least(copies, 1, "N");
        e.ints = {lo.value, hi.value, copies.value};
        break;
      }
      case Expr::Kind::Join:
        e.children.push_back(expr());
        expect(',');
        e.children.push_back(expr());
        e.rank = e.children[0].rank + e.children[1].rank - 1;
        break;
      case Expr::Kind::Glue: {
        expect('[');
        do {
          e.children.push_back(expr());
        } while (consume(','));
        expect(']');
        expect(',');
        expect('[');
        std::vector<std::size_t> list_offsets;
        do {
          skip_ws();
          list_offsets.push_back(pos_);
          std::vector<std::int64_t> ranks;
          for (const Int& r : int_list()) ranks.push_back(r.value);
          e.lists.push_back(std::move(ranks));
        } while (consume(','));
        expect(']');
        e.rank = e.children.front().rank;
        for (const Expr& part : e.children) {
          if (part.rank != e.rank) throw RangeError(part.offset, "glue parts must share one rank");
        }
        if (e.lists.size() != e.children.size()) {
          throw RangeError(list_offsets.front(), "glue needs one rank set per part (" + std::to_string(e.children.size()) + " parts, " + std::to_string(e.lists.size()) + " sets)");
        }
        for (std::size_t k = 0; k < e.lists.size(); ++k) {
          const auto& ranks = e.lists[k];
          for (std::int64_t r : ranks) {
            if (r < 0 || r > e.rank) throw RangeError(list_offsets[k], "glue rank " + std::to_string(r) + " outside [0," + std::to_string(e.rank) + "]");
          }
          if (std::find(ranks.begin(), ranks.end(), 0) == ranks.end() ||
              std::find(ranks.begin(), ranks.end(), e.rank) == ranks.end()) {
            throw RangeError(list_offsets[k], "glue rank set must contain 0 and " + std::to_string(e.rank));
          }
        }
        break;
      }
      case Expr::Kind::Dp: {
        const Int n = integer();
        at_least(n, 1, "n");
        e.rank = small(n, "n") + 1;
        expect(',');
        expect('[');
        if (!peek(']')) {
          do {
            skip_ws();
            const std::size_t at = pos_;
            const auto pair = int_list();
            if (pair.size() != 2) throw RangeError(at, "intervals are written [i,j]");
            if (pair[0].value < 1 || pair[1].value > n.value || pair[0].value > pair[1].value) {
              throw RangeError(at, "interval outside [1," + std::to_string(n.value) + "]");
            }
            e.lists.push_back({pair[0].value, pair[1].value});
          } while (consume(','));
        }
        expect(']');
        expect(',');
        const Int copies = integer();
        at_least(copies, 1, "N");
        e.ints = {n.value, copies.value};
        break;
      }
      case Expr::Kind::Lemma2: {
        const Int n = integer();
        if (n.value < 7 || n.value % 2 == 0) throw RangeError(n.offset, "lemma2 needs odd n >= 7");
        e.rank = small(n, "n") + 1;
        expect(',');
        const Int copies = integer();
        at_least(copies, 1, "N");
        e.ints = {n.value, copies.value};
        break;
      }
      case Expr::Kind::Lemma3: {
        const Int copies = integer();
        at_least(copies, 1, "N");
        e.ints = {copies.value};
        e.rank = 7;
        break;
      }
    }
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string Expr::to_string() const {
  std::string out = name_of(kind) + "(";
  switch (kind) {
    case Kind::Chain:
    case Kind::Boolean:
    case Kind::Lemma2:
    case Kind::Lemma3:
      out += join_ints(ints);
      break;
    case Kind::Dual:
    case Kind::Double:
      out += children.front().to_string();
      break;
    case Kind::Dni:
      out += children.front().to_string() + "," + join_ints(ints);
      break;
    case Kind::Join:
      out += children[0].to_string() + "," + children[1].to_string();
      break;
    case Kind::Glue: {
      out += "[";
      for (std::size_t i = 0; i < children.size(); ++i) out += (i ? "," : "") + children[i].to_string();
      out += "],[";
      for (std::size_t i = 0; i < lists.size(); ++i) out += (i ? ",[" : "[") + join_ints(lists[i]) + "]";
      out += "]";
      break;
    }
    case Kind::Dp: {
      out += std::to_string(ints[0]) + ",[";
      for (std::size_t i = 0; i < lists.size(); ++i) out += (i ? ",[" : "[") + join_ints(lists[i]) + "]";
      out += "]," + std::to_string(ints[1]);
      break;
    }
  }
  return out + ")";
}

RankedPoset evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Chain: return chain(static_cast<int>(e.ints[0]));
    case Expr::Kind::Boolean: return boolean(static_cast<int>(e.ints[0]));
    case Expr::Kind::Dual: return dual(evaluate(e.children[0]));
    case Expr::Kind::Double: return horizontal_double(evaluate(e.children[0]));
    case Expr::Kind::Dni:
      return replicate_interval(evaluate(e.children[0]), static_cast<int>(e.ints[0]), static_cast<int>(e.ints[1]),
                                static_cast<std::uint64_t>(e.ints[2]));
    case Expr::Kind::Join: return join(evaluate(e.children[0]), evaluate(e.children[1]));
    case Expr::Kind::Glue: {
      std::vector<GluePart> parts;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        std::vector<int> ranks;
        for (std::int64_t r : e.lists[k]) ranks.push_back(static_cast<int>(r));
        parts.push_back(GluePart{evaluate(e.children[k]), std::move(ranks)});
      }
      return glue(parts);
    }
    case Expr::Kind::Dp: {
      IntervalSystem sys{static_cast<int>(e.ints[0]), {}};
      for (const auto& iv : e.lists) sys.intervals.push_back(RankInterval{static_cast<int>(iv[0]), static_cast<int>(iv[1])});
      return dp_poset(sys.n, sys, static_cast<std::uint64_t>(e.ints[1]));
    }
    case Expr::Kind::Lemma2:
      return lemma2_poset(static_cast<int>(e.ints[0]), static_cast<std::uint64_t>(e.ints[1]));
    case Expr::Kind::Lemma3: return lemma3_poset(static_cast<std::uint64_t>(e.ints[0]));
  }
  throw InternalError("unhandled expression kind");
}

}  // namespace eulerian
