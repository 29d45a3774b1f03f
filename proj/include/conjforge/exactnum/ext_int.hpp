#ifndef CONJFORGE_EXACTNUM_EXT_INT_HPP
#define CONJFORGE_EXACTNUM_EXT_INT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace conjforge::exactnum {

/// Integer extended by the two sentinels -inf and +inf.
/// Valuations of the zero element land on these sentinels.
class ExtInt
{
public:
  enum class Kind : int8_t { NegInf = -1, Finite = 0, PosInf = 1 };

  constexpr ExtInt() = default;
  constexpr ExtInt(int64_t v) : kind_(Kind::Finite), value_(v) {}

  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }

  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr Kind kind() const { return kind_; }

  int64_t value() const
  {
    if (!is_finite())
      throw std::domain_error("ExtInt: value() of an infinite sentinel");
    return value_;
  }

  constexpr std::strong_ordering operator<=>(ExtInt const &o) const
  {
    if (kind_ != o.kind_)
      return static_cast<int>(kind_) <=> static_cast<int>(o.kind_);
    if (kind_ != Kind::Finite)
      return std::strong_ordering::equal;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(ExtInt const &o) const
  { return (*this <=> o) == std::strong_ordering::equal; }

private:
  constexpr explicit ExtInt(Kind k) : kind_(k), value_(0) {}

  Kind kind_ = Kind::Finite;
  int64_t value_ = 0;
};

inline ExtInt min(ExtInt a, ExtInt b) { return a < b ? a : b; }
inline ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

inline std::ostream &operator<<(std::ostream &os, ExtInt const &e)
{
  if (e.is_pos_inf())
    return os << "+inf";
  if (e.is_neg_inf())
    return os << "-inf";
  return os << e.value();
}

} // namespace conjforge::exactnum

#endif
