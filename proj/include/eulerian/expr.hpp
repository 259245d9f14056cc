#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eulerian/poset.hpp"

namespace eulerian {

/// Construction expressions:
///
///   expr := chain(INT) | boolean(INT) | dual(expr) | double(expr)
///         | dni(expr, INT, INT, INT)           -- D^N_[i,j] as (P, i, j, N)
///         | join(expr, expr)
///         | glue([expr, ...], [[INT, ...], ...])
///         | dp(INT, [[INT, INT], ...], INT)    -- n, intervals, N
///         | lemma2(INT, INT) | lemma3(INT)
struct Expr {
  enum class Kind { Chain, Boolean, Dual, Double, Dni, Join, Glue, Dp, Lemma2, Lemma3 };

  Kind kind = Kind::Chain;
  std::size_t offset = 0;  // byte offset of the constructor name
  int rank = 0;            // rank of the poset the expression denotes
  std::vector<std::int64_t> ints;
  std::vector<Expr> children;
  std::vector<std::vector<std::int64_t>> lists;  // glue rank sets, dp intervals

  /// Canonical text, e.g. "dp(4,[[1,4]],3)".
  std::string to_string() const;
  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Whitespace-insensitive. Throws SyntaxError for malformed text and
/// RangeError for out-of-range arguments, both carrying byte offsets.
Expr parse_expression(std::string_view text);

RankedPoset evaluate(const Expr& expr);

}  // namespace eulerian
