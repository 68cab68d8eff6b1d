#include "idealpow/monomial.hpp"

#include <limits>

namespace idealpow {

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t e) {
  Monomial m(nvars);
  m.exps_.at(i) = e;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (auto e : exps_)
    if (e != 0) return false;
  return true;
}

void Monomial::require_same_length(const Monomial& rhs) const {
  if (exps_.size() != rhs.exps_.size())
    throw MathError(Errc::LengthMismatch, "monomials live in different rings");
}

Monomial Monomial::times(const Monomial& rhs) const {
  require_same_length(rhs);
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(exps_[i]) + rhs.exps_[i];
    if (s > std::numeric_limits<std::uint32_t>::max())
      throw MathError(Errc::Overflow, "exponent overflow");
    r.exps_[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& rhs) const {
  require_same_length(rhs);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > rhs.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& rhs) const {
  require_same_length(rhs);
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (rhs.exps_[i] > exps_[i])
      throw MathError(Errc::DivisionByZero, "monomial division with remainder");
    r.exps_[i] -= rhs.exps_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  a.require_same_length(b);
  Monomial r(a);
  for (std::size_t i = 0; i < r.exps_.size(); ++i)
    if (b.exps_[i] > r.exps_[i]) r.exps_[i] = b.exps_[i];
  return r;
}

bool Monomial::coprime_with(const Monomial& rhs) const {
  require_same_length(rhs);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && rhs.exps_[i] != 0) return false;
  return true;
}

std::string MonomialOrder::to_string() const {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Elimination: return "elim(" + std::to_string(block) + ")";
  }
  return "?";
}

namespace {

std::strong_ordering lex_compare(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b, std::size_t lo,
                                 std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

// Degree first; ties broken by the *last* differing exponent, where the
// smaller exponent wins.
std::strong_ordering degrevlex_compare(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b, std::size_t lo,
                                       std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? std::strong_ordering::greater : std::strong_ordering::less;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& order) {
  if (a.nvars() != b.nvars())
    throw MathError(Errc::LengthMismatch, "comparing monomials from different rings");
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  switch (order.kind) {
    case OrderKind::Lex:
      return lex_compare(ea, eb, 0, ea.size());
    case OrderKind::DegRevLex:
      return degrevlex_compare(ea, eb, 0, ea.size());
    case OrderKind::Elimination: {
      std::size_t blk = order.block;
      if (blk > ea.size())
        throw MathError(Errc::LengthMismatch, "elimination block wider than the ring");
      auto head = degrevlex_compare(ea, eb, 0, blk);
      if (head != std::strong_ordering::equal) return head;
      return degrevlex_compare(ea, eb, blk, ea.size());
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace idealpow
