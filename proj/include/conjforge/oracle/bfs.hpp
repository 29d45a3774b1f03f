#ifndef CONJFORGE_ORACLE_BFS_HPP
#define CONJFORGE_ORACLE_BFS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace conjforge::oracle {

/// Thrown when a search would exceed the memory budget.
class ResourceLimit : public std::runtime_error
{
public:
  ResourceLimit(std::string const &what, std::size_t partial)
    : std::runtime_error(what + " (" + std::to_string(partial) + " elements enumerated)"),
      partial_(partial)
  {}
  std::size_t partial() const { return partial_; }

private:
  std::size_t partial_;
};

/// Thrown when an element is not found within the searched radius.
class OutOfRadius : public std::out_of_range
{
public:
  explicit OutOfRadius(int64_t radius)
    : std::out_of_range("element not reached within radius " + std::to_string(radius))
  {}
};

inline constexpr std::size_t kDefaultMemLimit = std::size_t(2) << 30;

/// Budget in bytes; CONJ_FORGE_MEM_LIMIT (bytes, optional K/M/G suffix) overrides 2 GiB.
inline std::size_t memory_budget()
{
  char const *env = std::getenv("CONJ_FORGE_MEM_LIMIT");
  if (!env || !*env)
    return kDefaultMemLimit;
  char *end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env)
    return kDefaultMemLimit;
  switch (*end) {
  case 'k': case 'K': v <<= 10; break;
  case 'm': case 'M': v <<= 20; break;
  case 'g': case 'G': v <<= 30; break;
  default: break;
  }
  return static_cast<std::size_t>(v);
}

/// Symmetric generating set together with the group law it lives in.
template <class E>
struct GeneratingSet
{
  std::string family;
  std::vector<E> gens;
  E identity;
  std::function<E(E const &, E const &)> mul;
  std::function<E(E const &)> inv;
  /// Approximate heap bytes owned by an element, for the memory budget.
  std::function<std::size_t(E const &)> footprint = [](E const &) { return std::size_t(0); };
};

/// BFS ball: elements in BFS order with their word lengths.
template <class E>
struct Ball
{
  int64_t radius = 0;
  std::vector<E> elements;
  std::vector<int32_t> lengths;
  std::unordered_map<E, uint32_t> index;

  std::size_t size() const { return elements.size(); }

  std::optional<int32_t> length_of(E const &g) const
  {
    auto it = index.find(g);
    if (it == index.end())
      return std::nullopt;
    return lengths[it->second];
  }

  /// Number of elements of length <= r (elements are sorted by length).
  std::size_t count_within(int64_t r) const
  {
    return static_cast<std::size_t>(
        std::upper_bound(lengths.begin(), lengths.end(), r) - lengths.begin());
  }
};

/// Exact ball of the given radius by breadth-first search over right
/// multiplication by generators. Throws ResourceLimit past the budget.
template <class E>
Ball<E> enumerate_ball(GeneratingSet<E> const &gs, int64_t radius,
                       std::size_t budget = memory_budget())
{
  if (radius < 0)
    throw std::invalid_argument("enumerate_ball: negative radius");
  Ball<E> ball;
  ball.radius = radius;
  std::size_t bytes = 0;
  std::size_t const node_cost = 2 * sizeof(E) + sizeof(int32_t) + 64;

  auto admit = [&](E const &g, int32_t len) {
    bytes += node_cost + 2 * gs.footprint(g);
    if (bytes > budget)
      throw ResourceLimit("enumerate_ball: memory budget exceeded", ball.size());
    ball.index.emplace(g, static_cast<uint32_t>(ball.elements.size()));
    ball.elements.push_back(g);
    ball.lengths.push_back(len);
  };

  admit(gs.identity, 0);
  std::size_t frontier_begin = 0;
  for (int32_t len = 1; len <= radius; ++len) {
    std::size_t frontier_end = ball.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (auto const &s : gs.gens) {
        E h = gs.mul(ball.elements[i], s);
        if (!ball.index.count(h))
          admit(h, len);
      }
    }
    if (ball.size() == frontier_end)
      break;
    frontier_begin = frontier_end;
  }
  return ball;
}

/// Exact word length by BFS; throws OutOfRadius if g lies beyond `radius`.
template <class E>
int64_t bfs_word_length(GeneratingSet<E> const &gs, E const &g, int64_t radius,
                        std::size_t budget = memory_budget())
{
  if (g == gs.identity)
    return 0;
  Ball<E> ball = enumerate_ball(gs, radius, budget);
  if (auto len = ball.length_of(g))
    return *len;
  throw OutOfRadius(radius);
}

template <class E>
struct BruteResult
{
  std::optional<E> witness;
  int64_t witness_length = -1;
  int64_t radius = 0;
  uint64_t examined = 0;
};

/// First gamma in BFS order with u gamma = gamma v, over the given ball.
template <class E>
BruteResult<E> brute_conjugator(GeneratingSet<E> const &gs, Ball<E> const &ball,
                                E const &u, E const &v, int64_t radius)
{
  BruteResult<E> r;
  r.radius = radius;
  std::size_t limit = ball.count_within(radius);
  for (std::size_t i = 0; i < limit; ++i) {
    ++r.examined;
    E const &g = ball.elements[i];
    if (gs.mul(u, g) == gs.mul(g, v)) {
      r.witness = g;
      r.witness_length = ball.lengths[i];
      break;
    }
  }
  return r;
}

template <class E>
BruteResult<E> brute_conjugator(GeneratingSet<E> const &gs, E const &u, E const &v,
                                int64_t radius, std::size_t budget = memory_budget())
{
  Ball<E> ball = enumerate_ball(gs, radius, budget);
  return brute_conjugator(gs, ball, u, v, radius);
}

/**
 * Hashes of x^alpha = alpha^-1 x alpha (Left) or beta x beta^-1 (Right)
 * for every ball element, sorted by hash. Used by the split search.
 */
template <class E>
struct ConjugationTable
{
  struct Entry
  {
    std::size_t hash;
    int32_t length;
    uint32_t index;
    bool operator<(Entry const &o) const
    { return hash != o.hash ? hash < o.hash : index < o.index; }
  };
  std::vector<Entry> entries;
};

enum class Side { Left, Right };

template <class E>
ConjugationTable<E> conjugation_table(GeneratingSet<E> const &gs, Ball<E> const &ball,
                                      E const &x, Side side, int64_t radius)
{
  ConjugationTable<E> t;
  std::size_t limit = ball.count_within(radius);
  t.entries.reserve(limit);
  std::hash<E> h;
  for (std::size_t i = 0; i < limit; ++i) {
    E const &a = ball.elements[i];
    E c = side == Side::Left ? gs.mul(gs.inv(a), gs.mul(x, a))
                             : gs.mul(a, gs.mul(x, gs.inv(a)));
    t.entries.push_back({h(c), ball.lengths[i], static_cast<uint32_t>(i)});
  }
  std::sort(t.entries.begin(), t.entries.end());
  return t;
}

/**
 * Exhaustive search for gamma with |gamma| <= R and u gamma = gamma v by
 * meeting in the middle: every such gamma is alpha beta with
 * |alpha| <= ceil(R/2), |beta| <= floor(R/2), and then
 * alpha^-1 u alpha = beta v beta^-1. Candidates are matched by hash and
 * accepted only after the exact identity check.
 */
template <class E>
BruteResult<E> brute_conjugator_split(GeneratingSet<E> const &gs, Ball<E> const &ball,
                                      ConjugationTable<E> const &left_u,
                                      ConjugationTable<E> const &right_v,
                                      E const &u, E const &v, int64_t radius)
{
  BruteResult<E> r;
  r.radius = radius;
  int64_t ra = (radius + 1) / 2, rb = radius / 2;
  if (ball.radius < ra)
    throw std::invalid_argument("brute_conjugator_split: ball radius too small");

  auto const &A = left_u.entries;
  auto const &B = right_v.entries;
  std::size_t i = 0, j = 0;
  while (i < A.size() && j < B.size()) {
    if (A[i].hash < B[j].hash) {
      ++i;
      continue;
    }
    if (B[j].hash < A[i].hash) {
      ++j;
      continue;
    }
    std::size_t h = A[i].hash, i_end = i, j_end = j;
    while (i_end < A.size() && A[i_end].hash == h)
      ++i_end;
    while (j_end < B.size() && B[j_end].hash == h)
      ++j_end;
    for (std::size_t a = i; a < i_end; ++a) {
      if (A[a].length > ra)
        continue;
      for (std::size_t b = j; b < j_end; ++b) {
        if (B[b].length > rb)
          continue;
        ++r.examined;
        E g = gs.mul(ball.elements[A[a].index], ball.elements[B[b].index]);
        if (gs.mul(u, g) == gs.mul(g, v)) {
          r.witness = std::move(g);
          r.witness_length = A[a].length + B[b].length;
          return r;
        }
      }
    }
    i = i_end;
    j = j_end;
  }
  return r;
}

template <class E>
BruteResult<E> brute_conjugator_split(GeneratingSet<E> const &gs, E const &u, E const &v,
                                      int64_t radius, std::size_t budget = memory_budget())
{
  Ball<E> ball = enumerate_ball(gs, (radius + 1) / 2, budget);
  auto lu = conjugation_table(gs, ball, u, Side::Left, (radius + 1) / 2);
  auto rv = conjugation_table(gs, ball, v, Side::Right, radius / 2);
  return brute_conjugator_split(gs, ball, lu, rv, u, v, radius);
}

} // namespace conjforge::oracle

#endif
