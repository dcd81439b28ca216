#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tannakit/exactlin/matrix.hpp"

namespace tannakit::exactlin {

/// A linear subspace of K^ambient, stored canonically as the nonzero rows of
/// its reduced row-echelon basis. Two subspaces are equal iff their bases are
/// identical, so operator== is span equality.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace.
  explicit Subspace(std::size_t ambient, Field f = Field::rationals());

  /// Row space of `rows`.
  static Subspace span(const Matrix& rows);
  static Subspace full(std::size_t ambient, Field f = Field::rationals());

  /// Wraps a basis already known to be in reduced row-echelon form with no
  /// zero rows. Checked in debug builds only.
  static Subspace from_rref(Matrix basis, std::vector<std::size_t> pivots);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  Field field() const { return field_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::span<const Scalar> vector(std::size_t k) const { return basis_.row(k); }

  /// Coordinates of v in the canonical basis, or nullopt when v is not in
  /// the subspace. With an RREF basis the candidate coordinates are the
  /// entries of v at the pivot columns.
  std::optional<std::vector<Scalar>> coordinates(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }
  bool contains(const Subspace& other) const;

  /// { phi : phi(u) = 0 for all u } under the standard dual-basis pairing.
  Subspace annihilator() const;

  /// Image under the linear map with matrix m (columns indexed by ambient).
  Subspace image_under(const Matrix& m) const;

  /// Tensor product inside K^(a.ambient * b.ambient), index (i, j) -> i*b.ambient + j.
  /// The Kronecker product of two RREF bases is again RREF, so no reduction
  /// is needed.
  static Subspace tensor(const Subspace& a, const Subspace& b);

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  Field field_{};
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space { x : m x = 0 } inside K^cols(m).
Subspace kernel(const Matrix& m);

/// { x in u : m x = 0 }.
Subspace kernel_within(const Subspace& u, const Matrix& m);

/// Largest subspace contained in every input (kernel of the stacked
/// annihilators). Throws std::invalid_argument on mismatched ambients.
Subspace intersect_many(std::span<const Subspace> subs);
Subspace intersect(const Subspace& a, const Subspace& b);

std::size_t rank(const Matrix& m);

/// S with m * S = I. Requires full row rank (MathError otherwise); the rows
/// of S outside the pivot columns of m are zero.
Matrix right_inverse(const Matrix& m);

/// Two-sided inverse of a square matrix; MathError when singular.
Matrix inverse(const Matrix& m);

}  // namespace tannakit::exactlin
