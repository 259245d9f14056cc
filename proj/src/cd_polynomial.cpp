#include "eulerian/cd_polynomial.hpp"

#include <algorithm>

#include "eulerian/errors.hpp"

namespace eulerian {

// Dense ab-polynomials and flag tables are 2^n long.
constexpr int kMaxDenseDegree = 26;

CdWord::CdWord(std::string letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] != 'c' && letters_[i] != 'd') {
      throw InvalidArgument("cd-word '" + letters_ + "' has letter '" + std::string(1, letters_[i]) +
                            "' at offset " + std::to_string(i));
    }
  }
}

int CdWord::degree() const noexcept {
  return static_cast<int>(letters_.size()) + d_count();
}

int CdWord::d_count() const noexcept {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'd'));
}

RankSubset CdWord::support() const {
  std::uint64_t mask = 0;
  int pos = 1;
  for (char ch : letters_) {
    if (ch == 'd') {
      mask |= std::uint64_t{3} << (pos - 1);
      pos += 2;
    } else {
      pos += 1;
    }
  }
  return RankSubset(degree(), mask);
}

CdWord CdWord::reversed() const { return CdWord(std::string(letters_.rbegin(), letters_.rend()), Trusted{}); }

std::vector<CdWord> cd_words(int n) {
  if (n < 0) throw InvalidArgument("cd_words needs n >= 0");
  // words[k] lists degree-k words in lexicographic order.
  std::vector<std::vector<std::string>> words(static_cast<std::size_t>(n) + 1);
  words[0] = {""};
  for (int k = 1; k <= n; ++k) {
    auto& out = words[static_cast<std::size_t>(k)];
    for (const auto& w : words[static_cast<std::size_t>(k - 1)]) out.push_back("c" + w);
    if (k >= 2) {
      for (const auto& w : words[static_cast<std::size_t>(k - 2)]) out.push_back("d" + w);
    }
  }
  std::vector<CdWord> result;
  result.reserve(words.back().size());
  for (auto& w : words.back()) result.emplace_back(std::move(w));
  return result;
}

CdPolynomial CdPolynomial::monomial(const CdWord& w, BigInt coefficient) {
  CdPolynomial p(w.degree());
  p.add_term(w, coefficient);
  return p;
}

BigInt CdPolynomial::coefficient(const CdWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void CdPolynomial::add_term(const CdWord& w, const BigInt& coefficient) {
  if (w.degree() != degree_) {
    throw InvalidArgument("cd-word '" + w.letters() + "' has degree " + std::to_string(w.degree()) +
                          ", polynomial has degree " + std::to_string(degree_));
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

CdPolynomial CdPolynomial::operator+(const CdPolynomial& rhs) const {
  if (rhs.degree_ != degree_ && !rhs.is_zero() && !is_zero()) {
    throw InvalidArgument("adding cd-polynomials of different degrees");
  }
  CdPolynomial out = is_zero() ? CdPolynomial(rhs.degree_) : *this;
  for (const auto& [w, k] : rhs.terms_) out.add_term(w, k);
  return out;
}

CdPolynomial CdPolynomial::operator-(const CdPolynomial& rhs) const { return *this + rhs * BigInt(-1); }

CdPolynomial CdPolynomial::operator*(const BigInt& scalar) const {
  CdPolynomial out(degree_);
  for (const auto& [w, k] : terms_) out.add_term(w, k * scalar);
  return out;
}

CdPolynomial CdPolynomial::reversed() const {
  CdPolynomial out(degree_);
  for (const auto& [w, k] : terms_) out.add_term(w.reversed(), k);
  return out;
}

std::string CdPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, k] : terms_) {
    const bool negative = k < 0;
    const BigInt mag = negative ? BigInt(-k) : k;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string word = w.letters().empty() ? "1" : w.letters();
    if (mag != 1) {
      out += mag.str() + "*" + word;
    } else {
      out += word;
    }
  }
  return out;
}

CdPolynomial cd_product(const CdPolynomial& lhs, const CdPolynomial& rhs) {
  CdPolynomial out(lhs.degree() + rhs.degree());
  for (const auto& [u, a] : lhs.terms()) {
    for (const auto& [v, b] : rhs.terms()) out.add_term(u + v, a * b);
  }
  return out;
}

CdPolynomial cd_power(const CdPolynomial& base, int exponent) {
  if (exponent < 0) throw InvalidArgument("negative cd-polynomial exponent");
  CdPolynomial out = CdPolynomial::monomial(CdWord(""));
  for (int i = 0; i < exponent; ++i) out = cd_product(out, base);
  return out;
}

AbPolynomial::AbPolynomial(int n) : degree(n) {
  if (n < 0 || n > kMaxDenseDegree) {
    throw ResourceLimit("dense ab-polynomial of degree " + std::to_string(n) + " is too large");
  }
  coefficients.assign(std::size_t{1} << n, BigInt(0));
}

std::string AbPolynomial::word(int n, std::uint64_t s) {
  std::string out(static_cast<std::size_t>(n), 'a');
  for (int i = 0; i < n; ++i) {
    if ((s >> i) & 1U) out[static_cast<std::size_t>(i)] = 'b';
  }
  return out;
}

namespace {

// Adds k to every ab-word in the expansion of `letters[at..]`, with the
// already-chosen b positions in `mask` and the next position `pos`.
void expand_into(const std::string& letters, std::size_t at, int pos, std::uint64_t mask,
                 const BigInt& k, AbPolynomial& out) {
  if (at == letters.size()) {
    out.coefficients[mask] += k;
    return;
  }
  if (letters[at] == 'c') {
    expand_into(letters, at + 1, pos + 1, mask, k, out);
    expand_into(letters, at + 1, pos + 1, mask | (std::uint64_t{1} << pos), k, out);
  } else {
    expand_into(letters, at + 1, pos + 2, mask | (std::uint64_t{1} << (pos + 1)), k, out);  // ab
    expand_into(letters, at + 1, pos + 2, mask | (std::uint64_t{1} << pos), k, out);        // ba
  }
}

}  // namespace

AbPolynomial expand_cd_to_ab(const CdPolynomial& phi) {
  AbPolynomial out(phi.degree());
  for (const auto& [w, k] : phi.terms()) expand_into(w.letters(), 0, 0, 0, k, out);
  return out;
}

}  // namespace eulerian
