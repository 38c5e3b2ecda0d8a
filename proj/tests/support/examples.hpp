#pragma once

#include <string>
#include <vector>

#include "markov/kernel.hpp"

namespace examples {

using markov::FinObject;
using markov::Kernel;
using markov::Kind;
using markov::Rational;

inline Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

inline Kernel stoch(const FinObject& dom, const FinObject& cod,
                    const std::vector<std::vector<Rational>>& rows) {
  return Kernel::from_rows(Kind::Stoch, dom, cod, rows);
}

inline FinObject numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return FinObject(labels);
}

// Strong, not static.
inline Kernel strong_e() {
  const auto x = numbered(2);
  return stoch(x, x, {{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}});
}

// Static, not strong.
inline Kernel static_e() {
  const auto x = numbered(3);
  return stoch(x, x, {{1, 0, q(1, 2)}, {0, 1, q(1, 2)}, {0, 0, 0}});
}

// Neither static nor strong.
inline Kernel balanced4_e() {
  const auto x = numbered(4);
  return stoch(x, x,
               {{q(1, 2), q(1, 2), 0, q(1, 4)},
                {q(1, 2), q(1, 2), 0, q(1, 4)},
                {0, 0, 1, q(1, 2)},
                {0, 0, 0, 0}});
}

inline Kernel balanced4_iota() {
  return stoch(FinObject{"t1", "t2"}, numbered(4),
               {{q(1, 2), 0}, {q(1, 2), 0}, {0, 1}, {0, 0}});
}

inline Kernel balanced4_pi() {
  return stoch(numbered(4), FinObject{"t1", "t2"}, {{1, 1, 0, q(1, 2)}, {0, 0, 1, q(1, 2)}});
}

// 0 ↦ {0,1}, 1 ↦ {1}.
inline Kernel multi_e() {
  const FinObject x{"0", "1"};
  return Kernel::from_images(x, x, {{"0", "1"}, {"1"}});
}

// x ↦ {y : y >= x} on a three-element chain.
inline Kernel multi_chain3() {
  const FinObject x{"0", "1", "2"};
  return Kernel::from_images(x, x, {{"0", "1", "2"}, {"1", "2"}, {"2"}});
}

inline Kernel signed_e() {
  const FinObject x{"a", "b", "c"};
  return Kernel::from_rows(Kind::Signed, x, x, {{1, 0, 0}, {1, 0, 0}, {-1, 1, 1}});
}

// A non-balanced signed idempotent on four elements that splits through
// three; the envelope copy formula is not coassociative on it.
inline Kernel signed4_e() {
  const auto x = numbered(4);
  return Kernel::from_rows(Kind::Signed, x, x,
                           {{0, -1, -1, 0}, {-1, 0, -1, 0}, {1, 1, 2, 0}, {1, 1, 1, 1}});
}

}  // namespace examples
