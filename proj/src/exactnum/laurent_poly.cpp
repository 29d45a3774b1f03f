#include "conjforge/exactnum/laurent_poly.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace conjforge::exactnum {

namespace {

uint32_t reduce(int64_t c, uint32_t q)
{
  int64_t r = c % static_cast<int64_t>(q);
  if (r < 0)
    r += q;
  return static_cast<uint32_t>(r);
}

// Merge two sorted term lists: lhs + c * rhs(shifted by k).
std::vector<LaurentPoly::Term> merge(std::vector<LaurentPoly::Term> const &lhs,
                                     std::vector<LaurentPoly::Term> const &rhs,
                                     int64_t k, uint32_t c, uint32_t q)
{
  std::vector<LaurentPoly::Term> out;
  out.reserve(lhs.size() + rhs.size());

  auto i = lhs.begin();
  auto j = rhs.begin();
  while (i != lhs.end() || j != rhs.end()) {
    if (j == rhs.end() || (i != lhs.end() && i->first < j->first + k)) {
      out.push_back(*i++);
    } else if (i == lhs.end() || j->first + k < i->first) {
      uint32_t v = static_cast<uint32_t>((uint64_t(j->second) * c) % q);
      if (v)
        out.emplace_back(j->first + k, v);
      ++j;
    } else {
      uint32_t v = static_cast<uint32_t>((i->second + uint64_t(j->second) * c) % q);
      if (v)
        out.emplace_back(i->first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

[[noreturn]] void grammar_error(std::string_view text, std::string_view why)
{
  throw std::invalid_argument("LaurentPoly: cannot parse \"" + std::string(text) +
                              "\" (" + std::string(why) +
                              "); expected comma-separated coeff@exp terms, "
                              "e.g. \"1@0,1@2\", or \"\" for zero");
}

int64_t parse_int(std::string_view whole, std::string_view tok)
{
  while (!tok.empty() && tok.front() == ' ')
    tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ')
    tok.remove_suffix(1);
  if (!tok.empty() && tok.front() == '+')
    tok.remove_prefix(1);
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    grammar_error(whole, "bad integer '" + std::string(tok) + "'");
  return v;
}

} // namespace

LaurentPoly::LaurentPoly(uint32_t modulus) : q_(modulus)
{
  if (modulus < 2)
    throw std::invalid_argument("LaurentPoly: modulus must be >= 2");
}

LaurentPoly::LaurentPoly(uint32_t modulus,
                         std::vector<std::pair<int64_t, int64_t>> const &terms)
  : LaurentPoly(modulus)
{
  std::map<int64_t, uint64_t> acc;
  for (auto const &[e, c] : terms)
    acc[e] = (acc[e] + reduce(c, q_)) % q_;
  for (auto const &[e, c] : acc)
    if (c)
      terms_.emplace_back(e, static_cast<uint32_t>(c));
}

LaurentPoly LaurentPoly::monomial(uint32_t modulus, int64_t exponent, int64_t coeff)
{
  LaurentPoly p(modulus);
  if (uint32_t c = reduce(coeff, modulus))
    p.terms_.emplace_back(exponent, c);
  return p;
}

void LaurentPoly::check(LaurentPoly const &o) const
{
  if (o.q_ != q_)
    throw std::invalid_argument("LaurentPoly: mismatched moduli");
}

Residue LaurentPoly::coeff(int64_t exponent) const
{
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](Term const &t, int64_t e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent)
    return Residue(it->second, q_);
  return Residue(0, q_);
}

ExtInt LaurentPoly::v0() const
{ return terms_.empty() ? ExtInt::pos_inf() : ExtInt(terms_.front().first); }

ExtInt LaurentPoly::v0_minus() const
{ return terms_.empty() ? ExtInt::neg_inf() : ExtInt(terms_.back().first); }

LaurentPoly LaurentPoly::add_shifted(LaurentPoly const &o, int64_t k, int64_t c) const
{
  check(o);
  LaurentPoly r(q_);
  r.terms_ = merge(terms_, o.terms_, k, reduce(c, q_), q_);
  return r;
}

LaurentPoly LaurentPoly::operator+(LaurentPoly const &o) const
{ return add_shifted(o, 0, 1); }

LaurentPoly LaurentPoly::operator-(LaurentPoly const &o) const
{ return add_shifted(o, 0, -1); }

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(int64_t c) const
{
  LaurentPoly r(q_);
  uint32_t cc = reduce(c, q_);
  if (!cc)
    return r;
  r.terms_.reserve(terms_.size());
  for (auto const &[e, v] : terms_)
    if (uint32_t w = static_cast<uint32_t>((uint64_t(v) * cc) % q_))
      r.terms_.emplace_back(e, w);
  return r;
}

LaurentPoly LaurentPoly::operator*(LaurentPoly const &o) const
{
  check(o);
  LaurentPoly r(q_);
  for (auto const &[e, c] : terms_)
    r = r.add_shifted(o, e, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int64_t k) const
{
  LaurentPoly r(*this);
  for (auto &t : r.terms_)
    t.first += k;
  return r;
}

LaurentPoly LaurentPoly::below(int64_t bound) const
{
  LaurentPoly r(q_);
  for (auto const &t : terms_) {
    if (t.first >= bound)
      break;
    r.terms_.push_back(t);
  }
  return r;
}

LaurentPoly LaurentPoly::from(int64_t bound) const
{
  LaurentPoly r(q_);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), bound,
                             [](Term const &t, int64_t e) { return t.first < e; });
  r.terms_.assign(it, terms_.end());
  return r;
}

std::size_t LaurentPoly::hash() const
{
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ q_;
  for (auto const &[e, c] : terms_) {
    h ^= static_cast<uint64_t>(e) * 0xbf58476d1ce4e5b9ULL + c + (h << 6) + (h >> 2);
    h *= 0x94d049bb133111ebULL;
  }
  return static_cast<std::size_t>(h);
}

std::string LaurentPoly::to_string() const
{
  std::string s;
  for (auto const &[e, c] : terms_) {
    if (!s.empty())
      s += ',';
    s += std::to_string(c);
    s += '@';
    s += std::to_string(e);
  }
  return s;
}

LaurentPoly LaurentPoly::parse(std::string_view text, uint32_t modulus)
{
  std::vector<std::pair<int64_t, int64_t>> terms;
  std::string_view rest = text;
  bool all_blank = rest.find_first_not_of(' ') == std::string_view::npos;
  if (all_blank)
    return LaurentPoly(modulus);

  while (true) {
    auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    auto at = tok.find('@');
    if (at == std::string_view::npos)
      grammar_error(text, "term without '@'");
    terms.emplace_back(parse_int(text, tok.substr(at + 1)),
                       parse_int(text, tok.substr(0, at)));
    if (comma == std::string_view::npos)
      break;
    rest.remove_prefix(comma + 1);
  }
  return LaurentPoly(modulus, terms);
}

LaurentValuation valuation(LaurentPoly const &f)
{ return {f.v0(), f.v0_minus()}; }

} // namespace conjforge::exactnum
