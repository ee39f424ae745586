#pragma once

#include <vector>

#include "normlab/errors.hpp"
#include "normlab/scalar.hpp"

namespace normlab {

// A vector of V in the working basis.
class Vector {
 public:
  Vector(std::vector<Scalar> coords, ScalarField field)
      : coords_(std::move(coords)), field_(field) {
    require(!coords_.empty(), ErrorCode::DimMismatch, "vector must have positive dimension");
    if (field_ == ScalarField::Real)
      for (const auto& c : coords_)
        require(is_real_value(c), ErrorCode::FieldMismatch, "real vector with nonzero imaginary part");
  }

  static Vector zero(int dim, ScalarField field) {
    return Vector(std::vector<Scalar>(static_cast<std::size_t>(dim), Scalar(0.0, 0.0)), field);
  }

  static Vector unit(int dim, int axis, ScalarField field) {
    Vector v = zero(dim, field);
    v.coords_[static_cast<std::size_t>(axis)] = Scalar(1.0, 0.0);
    return v;
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  ScalarField field() const { return field_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  Scalar coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }

  double max_abs_coord() const {
    double m = 0.0;
    for (const auto& c : coords_) m = std::max(m, std::abs(c));
    return m;
  }

  friend Vector operator+(const Vector& a, const Vector& b) {
    check_same_field(a.field_, b.field_, "vector addition");
    require(a.dim() == b.dim(), ErrorCode::DimMismatch, "vector addition");
    std::vector<Scalar> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return Vector(std::move(c), a.field_);
  }

  friend Vector operator-(const Vector& a, const Vector& b) {
    check_same_field(a.field_, b.field_, "vector subtraction");
    require(a.dim() == b.dim(), ErrorCode::DimMismatch, "vector subtraction");
    std::vector<Scalar> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
    return Vector(std::move(c), a.field_);
  }

  friend Vector operator*(const Scalar& alpha, const Vector& v) {
    std::vector<Scalar> c(v.coords_);
    for (auto& x : c) x *= alpha;
    ScalarField f = v.field_;
    if (f == ScalarField::Real && !is_real_value(alpha)) f = ScalarField::Complex;
    return Vector(std::move(c), f);
  }

  bool operator==(const Vector& other) const {
    return field_ == other.field_ && coords_ == other.coords_;
  }

 private:
  std::vector<Scalar> coords_;
  ScalarField field_;
};

}  // namespace normlab
