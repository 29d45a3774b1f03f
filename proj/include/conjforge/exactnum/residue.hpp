#ifndef CONJFORGE_EXACTNUM_RESIDUE_HPP
#define CONJFORGE_EXACTNUM_RESIDUE_HPP

#include <cstdint>
#include <stdexcept>

namespace conjforge::exactnum {

/// Element of Z_q, always stored reduced into [0, q).
class Residue
{
public:
  Residue(int64_t value, uint32_t modulus) : modulus_(modulus)
  {
    if (modulus < 2)
      throw std::invalid_argument("Residue: modulus must be >= 2");
    int64_t r = value % static_cast<int64_t>(modulus);
    if (r < 0)
      r += modulus;
    value_ = static_cast<uint32_t>(r);
  }

  uint32_t value() const { return value_; }
  uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Residue operator+(Residue const &o) const
  { check(o); return Residue(int64_t(value_) + o.value_, modulus_); }
  Residue operator-(Residue const &o) const
  { check(o); return Residue(int64_t(value_) - o.value_, modulus_); }
  Residue operator*(Residue const &o) const
  { check(o); return Residue(int64_t(value_) * o.value_, modulus_); }
  Residue operator-() const { return Residue(-int64_t(value_), modulus_); }

  bool operator==(Residue const &o) const = default;

private:
  void check(Residue const &o) const
  {
    if (o.modulus_ != modulus_)
      throw std::invalid_argument("Residue: mismatched moduli");
  }

  uint32_t value_ = 0;
  uint32_t modulus_ = 2;
};

} // namespace conjforge::exactnum

#endif
