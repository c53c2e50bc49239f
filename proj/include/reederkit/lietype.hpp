// SPDX-License-Identifier: MIT
//
// Cartan types of simple, simply connected algebraic groups.  Rank bounds are
// the usual ones for simple types (A_n n>=1, B_n n>=2, C_n n>=2, D_n n>=3,
// E_6/E_7/E_8, F_4, G_2); duplicate low-rank coincidences (B_2 = C_2, ...)
// are accepted as distinct labels.
#pragma once

#include <string>

namespace reederkit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family;
  int rank;

  friend bool operator==(const LieType&, const LieType&) = default;
  friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// Throws std::invalid_argument on out-of-range rank for the family.
void validate(const LieType& t);

/// Parses "A".."G" (case-insensitive single letter) plus rank.
LieType parse_lie_type(const std::string& family, int rank);

std::string to_string(const LieType& t);

inline bool is_classical(const LieType& t) {
  return t.family == Family::A || t.family == Family::B ||
         t.family == Family::C || t.family == Family::D;
}

inline bool is_exceptional(const LieType& t) { return !is_classical(t); }

/// Size of the "classical coordinate" tuple: A_n uses n+1 entries summing to
/// zero, B_n/C_n/D_n use n entries.  Exceptional types have no classical
/// coordinates.
int classical_tuple_length(const LieType& t);

}  // namespace reederkit
