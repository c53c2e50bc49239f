// SPDX-License-Identifier: MIT
#include "reederkit/lietype.hpp"

#include <cctype>
#include <stdexcept>

namespace reederkit {

void validate(const LieType& t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n == 6 || n == 7 || n == 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid Lie type " + to_string(t));
}

LieType parse_lie_type(const std::string& family, int rank) {
  if (family.size() != 1)
    throw std::invalid_argument("invalid type family '" + family + "'");
  const char c = static_cast<char>(std::toupper(family[0]));
  if (c < 'A' || c > 'G')
    throw std::invalid_argument("invalid type family '" + family + "'");
  LieType t{static_cast<Family>(c), rank};
  validate(t);
  return t;
}

std::string to_string(const LieType& t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

int classical_tuple_length(const LieType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C:
    case Family::D: return t.rank;
    default:
      throw std::invalid_argument("no classical coordinates for " + to_string(t));
  }
}

}  // namespace reederkit
