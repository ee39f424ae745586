#pragma once

#include <vector>

#include "normlab/errors.hpp"
#include "normlab/scalar.hpp"
#include "normlab/vector_space.hpp"

namespace normlab {

// A linear functional on V, stored by coordinates against the working basis.
// The action is the plain pairing lambda(v) = sum_i coeffs_i * v_i in both
// fields; complex norming functionals carry conjugated phases in their
// coefficients so that lambda(v) comes out real where required.
class Functional {
 public:
  Functional(std::vector<Scalar> coeffs, ScalarField field)
      : coeffs_(std::move(coeffs)), field_(field) {
    require(!coeffs_.empty(), ErrorCode::DimMismatch, "functional must have positive dimension");
    if (field_ == ScalarField::Real)
      for (const auto& c : coeffs_)
        require(is_real_value(c), ErrorCode::FieldMismatch,
                "real functional with nonzero imaginary part");
  }

  static Functional zero(int dim, ScalarField field) {
    return Functional(std::vector<Scalar>(static_cast<std::size_t>(dim), Scalar(0.0, 0.0)), field);
  }

  int dim() const { return static_cast<int>(coeffs_.size()); }
  ScalarField field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  Scalar operator()(const Vector& v) const {
    check_same_field(field_, v.field(), "functional application");
    require(dim() == v.dim(), ErrorCode::DimMismatch, "functional application");
    Scalar s(0.0, 0.0);
    for (int i = 0; i < dim(); ++i) s += coeffs_[static_cast<std::size_t>(i)] * v.coord(i);
    return s;
  }

  bool operator==(const Functional& other) const {
    return field_ == other.field_ && coeffs_ == other.coeffs_;
  }

 private:
  std::vector<Scalar> coeffs_;
  ScalarField field_;
};

}  // namespace normlab
