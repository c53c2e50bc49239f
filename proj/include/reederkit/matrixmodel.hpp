// SPDX-License-Identifier: MIT
//
// Exact matrix models over the Laurent ring Q[t^-1]: group elements with
// constant term 1, the involution given by t -> -t followed by inversion, the
// t^-1-coefficient projection, and recovery of the dominant coweight of a
// double coset from block-Toeplitz ranks.  Nilpotent representatives of
// classical orbits (with an invariant bilinear form outside type A) feed the
// model constructions.
#pragma once

#include "reederkit/numeric.hpp"
#include "reederkit/orbits.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace reederkit {

/// A matrix polynomial in t^-1: coeffs[k] is the coefficient of t^-k.
/// Group elements additionally have coeffs[0] equal to the identity.
struct LaurentMatrix {
  int n = 0;
  std::vector<QMat> coeffs;
};

/// Nondegenerate symmetric (types B/D) or alternating (type C) form.
struct BilinearForm {
  QMat gram;
  bool alternating = false;
};

LaurentMatrix laurent_identity(int n);
LaurentMatrix laurent_from_parts(std::vector<QMat> parts);

/// Trims trailing zero coefficients; equality is equality of trimmed parts.
void laurent_trim(LaurentMatrix& g);
bool laurent_equal(const LaurentMatrix& a, const LaurentMatrix& b);

LaurentMatrix laurent_mul(const LaurentMatrix& a, const LaurentMatrix& b);

/// Inverse of an element with invertible constant term, computed degree by
/// degree.  The result must be supported within max_support powers of t^-1;
/// otherwise throws std::domain_error (never truncates silently).
LaurentMatrix laurent_inverse(const LaurentMatrix& g, int max_support);

/// t -> -t followed by inversion.  A truncation bound of 0 means the default
/// of four times the input support.
LaurentMatrix iota(const LaurentMatrix& g, int truncation = 0);

/// The coefficient of t^-1.  Requires constant term identity.
QMat pi_dagger(const LaurentMatrix& g);

/// exp(x t^-1) for nilpotent x: finitely many terms x^k / k! at t^-k.
LaurentMatrix exp_tinv(const QMat& x);

/// The dominant coweight (a_1 >= ... >= a_n, sum 0) of the double coset of g
/// over Q[[t^-1]], recovered from the most negative exponent and the rank
/// sequence of block-Toeplitz matrices.  Requires det g = 1 identically;
/// throws std::invalid_argument otherwise.  Returned in the classical basis
/// of type A_{n-1}.
Coweight coweight_of_element(const LaurentMatrix& g);

/// A nilpotent matrix of the requested Jordan type, conjugated by a seeded
/// random invertible matrix.  Outside type A the matrix is anti-self-adjoint
/// for the returned form and the conjugation preserves the form exactly.
struct NilpotentModel {
  QMat x;
  std::optional<BilinearForm> form;
};
NilpotentModel build_nilpotent(const LieType& lt, const OrbitLabel& label, unsigned seed);

/// Jordan type of a nilpotent matrix from the rank sequence of its powers;
/// throws std::invalid_argument when the input is not nilpotent.
IVec jordan_type(const QMat& x);

/// True when x is anti-self-adjoint for the form: (xu, v) + (u, xv) = 0.
bool is_anti_self_adjoint(const QMat& x, const BilinearForm& form);

/// True when g(t)^T * gram * g(t) == gram as an exact polynomial identity.
bool preserves_form(const LaurentMatrix& g, const BilinearForm& form);

/// For anti-self-adjoint x with x^3 = 0 and rank(x^2) = 2: splits x^2 into
/// two rank-one pieces along the two rational isotropic lines of the form
/// induced on the image of x^2.  The pieces are mutually adjoint and are
/// returned with the lexicographically smaller image line first.  Throws
/// std::invalid_argument when the preconditions fail and std::domain_error
/// when the induced form does not split over Q.
std::pair<QMat, QMat> x2_decomposition(const QMat& x, const BilinearForm& form);

/// The ambient special linear coweight of a classical coweight under the
/// standard embeddings: type C (a, -reverse(a)), type B (a, 0, -reverse(a)),
/// type D (a, -reverse(a)); the result is sorted into dominant order.
IVec ambient_coweight(const LieType& t, const IVec& classical);

}  // namespace reederkit
