#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "normlab/errors.hpp"
#include "normlab/scalar.hpp"

namespace normlab {

// The finite index set E. Label order is fixed at construction and is the
// canonical order for serialization and tie-breaking.
class FiniteSet {
 public:
  explicit FiniteSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    require(!labels_.empty(), ErrorCode::MalformedInput, "finite set must be nonempty");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
      require(seen.insert(l).second, ErrorCode::DuplicateLabel, "duplicate label '" + l + "'");
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  int index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    require(it != labels_.end(), ErrorCode::LabelNotFound, "no label '" + label + "'");
    return static_cast<int>(it - labels_.begin());
  }

  bool operator==(const FiniteSet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
};

// A scalar-valued function on E, stored in label order.
class FnOnE {
 public:
  FnOnE(FiniteSet base, std::vector<Scalar> values, ScalarField field)
      : base_(std::move(base)), values_(std::move(values)), field_(field) {
    require(static_cast<int>(values_.size()) == base_.size(), ErrorCode::DimMismatch,
            "function needs one value per label");
    if (field_ == ScalarField::Real)
      for (const auto& v : values_)
        require(is_real_value(v), ErrorCode::FieldMismatch, "real function with nonzero imaginary part");
  }

  const FiniteSet& base() const { return base_; }
  const std::vector<Scalar>& values() const { return values_; }
  Scalar value(int i) const { return values_[static_cast<std::size_t>(i)]; }
  ScalarField field() const { return field_; }
  int size() const { return base_.size(); }

 private:
  FiniteSet base_;
  std::vector<Scalar> values_;
  ScalarField field_;
};

// Indicator of x: 1 at x, 0 elsewhere.
inline FnOnE delta(const FiniteSet& e, const std::string& x,
                   ScalarField field = ScalarField::Real) {
  int idx = e.index_of(x);
  std::vector<Scalar> values(static_cast<std::size_t>(e.size()), Scalar(0.0, 0.0));
  values[static_cast<std::size_t>(idx)] = Scalar(1.0, 0.0);
  return FnOnE(e, std::move(values), field);
}

inline double l1_norm(const FnOnE& f) {
  double s = 0.0;
  for (const auto& v : f.values()) s += std::abs(v);
  return s;
}

inline double linf_norm(const FnOnE& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace normlab
