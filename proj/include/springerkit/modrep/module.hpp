#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "springerkit/ffield/matrix.hpp"
#include "springerkit/grp/group.hpp"

namespace springerkit {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional associative unital algebra with basis b_0..b_{m-1} and
/// structure constants b_i b_j = sum_k c(i,j,k) b_k.
class Algebra {
 public:
  /// `constants[(i*m + j)*m + k]` is c(i,j,k). Checks associativity and finds
  /// the two-sided unit (NotAssociative, NoUnit).
  static AlgebraPtr make(FieldPtr field, std::size_t dim, std::vector<FieldElem> constants);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return m_; }
  FieldElem constant(std::size_t i, std::size_t j, std::size_t k) const noexcept { return c_[(i * m_ + j) * m_ + k]; }
  const std::vector<FieldElem>& unit() const noexcept { return unit_; }

  std::vector<FieldElem> multiply(std::span<const FieldElem> a, std::span<const FieldElem> b) const;
  /// Matrix of x -> b_i x on coordinate columns.
  Matrix left_multiplication(std::size_t i) const;

  bool same_as(const Algebra& other) const noexcept;

 private:
  Algebra() = default;

  FieldPtr field_;
  std::size_t m_ = 0;
  std::vector<FieldElem> c_;
  std::vector<FieldElem> unit_;
};

/// The group algebra kG with basis the group elements.
AlgebraPtr group_algebra(const GroupPtr& group, const FieldPtr& field);

/// Module over a finite group or over an Algebra. For a group, generators()
/// holds the images of group->generators(); for an algebra, the images of its
/// basis elements. Matrices act on column vectors.
class GModule {
 public:
  /// Empty placeholder; not a module over anything.
  GModule() = default;

  /// Validated group module: NotARepresentation, SingularMatrix, DimensionMismatch.
  static GModule make(GroupPtr group, FieldPtr field, std::vector<Matrix> generator_images);
  /// Validated algebra module: NotARepresentation, DimensionMismatch.
  static GModule make(AlgebraPtr algebra, std::vector<Matrix> basis_images);

  /// No validation; for constructions that are representations by design.
  static GModule trusted(GroupPtr group, FieldPtr field, std::size_t dim, std::vector<Matrix> generator_images);
  static GModule trusted(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> basis_images);

  static GModule trivial(GroupPtr group, FieldPtr field);
  static GModule regular(GroupPtr group, FieldPtr field);
  static GModule regular(AlgebraPtr algebra);

  bool over_group() const noexcept { return group_ != nullptr; }
  const GroupPtr& group() const noexcept { return group_; }
  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Matrix>& generators() const noexcept { return gens_; }

  /// Image of an arbitrary group element (group modules only).
  const Matrix& element(Elem g) const;
  const std::vector<Matrix>& element_images() const;

  /// Traces on conjugacy class representatives (group) or basis elements (algebra).
  std::vector<FieldElem> trace_vector() const;

  bool same_owner(const GModule& other) const noexcept;

  /// Action on an invariant subspace; `basis` rows span it.
  GModule submodule(const Matrix& basis) const;
  /// Action on the quotient by an invariant subspace, on the non-pivot coordinates.
  GModule quotient(const Matrix& basis) const;

 private:
  struct ImageCache;

  GroupPtr group_;
  AlgebraPtr algebra_;
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<Matrix> gens_;
  std::shared_ptr<ImageCache> cache_;
};

/// Throws OwnerMismatch or FieldMismatch unless both modules live over the
/// same group (or algebra) and field.
void require_compatible(const GModule& a, const GModule& b);

GModule direct_sum(const GModule& a, const GModule& b);

/// Basis of Hom(M, N): matrices X (dim N x dim M) with X a_M(g) = a_N(g) X.
std::vector<Matrix> hom_space(const GModule& m, const GModule& n);
std::size_t hom_dim(const GModule& m, const GModule& n);

/// Column span of the given maps, as an echelon basis of the target.
Matrix image_span(const std::vector<Matrix>& maps, const FieldPtr& field, std::size_t target_dim);

}  // namespace springerkit
