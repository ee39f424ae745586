#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "normlab/errors.hpp"
#include "normlab/functional.hpp"
#include "normlab/linalg.hpp"
#include "normlab/linprog.hpp"
#include "normlab/scalar.hpp"
#include "normlab/vector_space.hpp"

namespace normlab {

// A norm on V in one of several exact representations. Polyhedral variants
// are real-only: complex absolutely-convex hulls would need phase
// discretization, an approximation the LP machinery should not hide.
class NormSpec {
 public:
  enum class Kind { L1, Linf, Lp, PolyVertex, PolyFacet, Ellipsoid };

  static NormSpec l1(int dim, ScalarField field = ScalarField::Real) {
    return NormSpec(Kind::L1, dim, field);
  }

  static NormSpec linf(int dim, ScalarField field = ScalarField::Real) {
    return NormSpec(Kind::Linf, dim, field);
  }

  static NormSpec lp(int dim, double p, ScalarField field = ScalarField::Real) {
    require(std::isfinite(p) && p >= 1.0, ErrorCode::InvalidNorm, "lp norm needs finite p >= 1");
    NormSpec s(Kind::Lp, dim, field);
    s.p_ = p;
    return s;
  }

  // Gauge of conv{+g, -g}: caller supplies one representative per antipodal
  // pair. Generators must span, which already puts 0 in the hull interior.
  static NormSpec poly_vertex(std::vector<Vector> generators);

  // max_i |lambda_i(v)|; the intersection of the slabs must be bounded,
  // checked by maximizing every coordinate direction over it.
  static NormSpec poly_facet(std::vector<Functional> functionals);

  static NormSpec ellipsoid(Eigen::MatrixXcd gram, ScalarField field = ScalarField::Real) {
    require(gram.rows() == gram.cols() && gram.rows() >= 1, ErrorCode::InvalidNorm,
            "gram matrix must be square");
    if (field == ScalarField::Real)
      require(gram.imag().cwiseAbs().maxCoeff() == 0.0, ErrorCode::FieldMismatch,
              "real ellipsoid with complex gram entries");
    require(hermitian_positive_definite(gram), ErrorCode::InvalidNorm,
            "gram matrix is not Hermitian positive definite");
    NormSpec s(Kind::Ellipsoid, static_cast<int>(gram.rows()), field);
    s.gram_ = std::move(gram);
    s.gram_llt_ = Eigen::LLT<Eigen::MatrixXcd>(s.gram_);
    return s;
  }

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  ScalarField field() const { return field_; }
  double p() const { return p_; }
  const std::vector<Vector>& generators() const { return generators_; }
  const std::vector<Functional>& facets() const { return facets_; }
  const Eigen::MatrixXcd& gram() const { return gram_; }
  const Eigen::LLT<Eigen::MatrixXcd>& gram_llt() const { return gram_llt_; }

  bool operator==(const NormSpec& other) const {
    if (kind_ != other.kind_ || dim_ != other.dim_ || field_ != other.field_) return false;
    switch (kind_) {
      case Kind::L1:
      case Kind::Linf: return true;
      case Kind::Lp: return p_ == other.p_;
      case Kind::PolyVertex: return generators_ == other.generators_;
      case Kind::PolyFacet: return facets_ == other.facets_;
      case Kind::Ellipsoid: return gram_ == other.gram_;
    }
    return false;
  }

 private:
  NormSpec(Kind kind, int dim, ScalarField field) : kind_(kind), dim_(dim), field_(field) {
    require(dim >= 1, ErrorCode::DimMismatch, "norm dimension must be positive");
  }

  Kind kind_;
  int dim_;
  ScalarField field_;
  double p_ = 2.0;
  std::vector<Vector> generators_;
  std::vector<Functional> facets_;
  Eigen::MatrixXcd gram_;
  Eigen::LLT<Eigen::MatrixXcd> gram_llt_;
};

inline const char* norm_kind_name(NormSpec::Kind k) {
  switch (k) {
    case NormSpec::Kind::L1:         return "l1";
    case NormSpec::Kind::Linf:       return "linf";
    case NormSpec::Kind::Lp:         return "lp";
    case NormSpec::Kind::PolyVertex: return "poly_vertex";
    case NormSpec::Kind::PolyFacet:  return "poly_facet";
    case NormSpec::Kind::Ellipsoid:  return "ellipsoid";
  }
  return "unknown";
}

namespace detail {

inline void check_spec_vector(const NormSpec& spec, const Vector& v, const char* what) {
  check_same_field(spec.field(), v.field(), what);
  require(spec.dim() == v.dim(), ErrorCode::DimMismatch, what);
}

// min sum t_k  s.t.  sum t_k h_k = v, t >= 0, over the symmetrized
// generator set {+g, -g}. The optimum is the gauge of v.
inline double gauge_lp(const std::vector<Vector>& gens, const Vector& v) {
  int n = v.dim();
  int m = static_cast<int>(gens.size());
  if (v.max_abs_coord() == 0.0) return 0.0;
  LinearProgram lp(2 * m);
  for (int k = 0; k < 2 * m; ++k) {
    lp.objective[static_cast<std::size_t>(k)] = -1.0;
    lp.lower[static_cast<std::size_t>(k)] = 0.0;
  }
  for (int i = 0; i < n; ++i) {
    std::vector<double> row(static_cast<std::size_t>(2 * m), 0.0);
    for (int k = 0; k < m; ++k) {
      double g = gens[static_cast<std::size_t>(k)].coord(i).real();
      row[static_cast<std::size_t>(k)] = g;
      row[static_cast<std::size_t>(m + k)] = -g;
    }
    lp.add_row(std::move(row), Relation::Equal, v.coord(i).real());
  }
  LpSolution sol = lp_solve(lp);
  require(sol.status == LpStatus::Optimal, ErrorCode::InvalidNorm,
          "gauge LP infeasible: generators do not span");
  return -sol.objective_value;
}

}  // namespace detail

inline NormSpec eval_norm_spec_unused();  // forward decl placeholder removed below

inline double eval_norm(const NormSpec& spec, const Vector& v) {
  detail::check_spec_vector(spec, v, "eval_norm");
  switch (spec.kind()) {
    case NormSpec::Kind::L1: {
      double s = 0.0;
      for (const auto& c : v.coords()) s += std::abs(c);
      return s;
    }
    case NormSpec::Kind::Linf: {
      double m = 0.0;
      for (const auto& c : v.coords()) m = std::max(m, std::abs(c));
      return m;
    }
    case NormSpec::Kind::Lp: {
      double p = spec.p();
      double s = 0.0;
      for (const auto& c : v.coords()) s += std::pow(std::abs(c), p);
      return std::pow(s, 1.0 / p);
    }
    case NormSpec::Kind::Ellipsoid:
      return ellipsoid_length(spec.gram(), to_eigen(v.coords()));
    case NormSpec::Kind::PolyVertex:
      return detail::gauge_lp(spec.generators(), v);
    case NormSpec::Kind::PolyFacet: {
      double m = 0.0;
      for (const auto& f : spec.facets()) m = std::max(m, std::abs(f(v)));
      return m;
    }
  }
  fail(ErrorCode::InvalidNorm, "unknown norm variant");
}

// First label-order index attaining max_i |lambda_i(v)| (PolyFacet) or
// max_i |v_i| (Linf). Deterministic tie-break: first index wins.
inline int first_max_index(const std::vector<double>& values) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i)
    if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(best)]) best = i;
  return best;
}

inline Vector normalize_to_sphere(const NormSpec& spec, const Vector& v) {
  double n = eval_norm(spec, v);
  require(n > 1e-12, ErrorCode::ZeroVector, "cannot normalize a (near-)zero vector");
  return Scalar(1.0 / n, 0.0) * v;
}

inline NormSpec NormSpec::poly_vertex(std::vector<Vector> generators) {
  require(!generators.empty(), ErrorCode::InvalidNorm, "poly_vertex needs generators");
  int dim = generators.front().dim();
  for (const auto& g : generators) {
    require(g.field() == ScalarField::Real, ErrorCode::Unsupported,
            "polyhedral norms are supported for the real field only");
    require(g.dim() == dim, ErrorCode::DimMismatch, "generators must share a dimension");
  }
  require(numeric_rank(columns_matrix([&] {
            std::vector<std::vector<Scalar>> cols;
            for (const auto& g : generators) cols.push_back(g.coords());
            return cols;
          }(), dim)) == dim,
          ErrorCode::InvalidNorm, "generators do not span the space");
  NormSpec s(Kind::PolyVertex, dim, ScalarField::Real);
  s.generators_ = std::move(generators);
  return s;
}

inline NormSpec NormSpec::poly_facet(std::vector<Functional> functionals) {
  require(!functionals.empty(), ErrorCode::InvalidNorm, "poly_facet needs functionals");
  int dim = functionals.front().dim();
  for (const auto& f : functionals) {
    require(f.field() == ScalarField::Real, ErrorCode::Unsupported,
            "polyhedral norms are supported for the real field only");
    require(f.dim() == dim, ErrorCode::DimMismatch, "functionals must share a dimension");
  }
  // Boundedness of {v : |lambda_i(v)| <= 1}: every +-coordinate LP must have
  // a finite optimum.
  for (int j = 0; j < dim; ++j) {
    for (double sign : {1.0, -1.0}) {
      LinearProgram lp(dim);
      lp.objective[static_cast<std::size_t>(j)] = sign;
      for (const auto& f : functionals) {
        std::vector<double> row(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) row[static_cast<std::size_t>(i)] = f.coeff(i).real();
        lp.add_row(row, Relation::LessEq, 1.0);
        for (auto& x : row) x = -x;
        lp.add_row(std::move(row), Relation::LessEq, 1.0);
      }
      LpSolution sol = lp_solve(lp);
      require(sol.status == LpStatus::Optimal, ErrorCode::InvalidNorm,
              "facet slab intersection is unbounded: functionals do not span the dual");
    }
  }
  NormSpec s(Kind::PolyFacet, dim, ScalarField::Real);
  s.facets_ = std::move(functionals);
  return s;
}

// A finite subset S of the unit ball with conv(S) equal to the ball, when
// one is available. Convex functions attain their ball maximum on S, and
// that maximum is also the maximum over the unit sphere.
inline std::optional<std::vector<Vector>> ball_generating_sample(const NormSpec& spec) {
  if (spec.field() != ScalarField::Real) return std::nullopt;
  int n = spec.dim();
  switch (spec.kind()) {
    case NormSpec::Kind::L1: {
      std::vector<Vector> pts;
      for (int i = 0; i < n; ++i) {
        pts.push_back(Vector::unit(n, i, ScalarField::Real));
        pts.push_back(Scalar(-1.0, 0.0) * Vector::unit(n, i, ScalarField::Real));
      }
      return pts;
    }
    case NormSpec::Kind::Linf: {
      if (n > 16) return std::nullopt;
      std::vector<Vector> pts;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Scalar> c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
          c[static_cast<std::size_t>(i)] = Scalar((mask >> i) & 1u ? 1.0 : -1.0, 0.0);
        pts.emplace_back(std::move(c), ScalarField::Real);
      }
      return pts;
    }
    case NormSpec::Kind::PolyVertex: {
      std::vector<Vector> pts;
      for (const auto& g : spec.generators()) {
        pts.push_back(g);
        pts.push_back(Scalar(-1.0, 0.0) * g);
      }
      return pts;
    }
    case NormSpec::Kind::PolyFacet: {
      // Vertex enumeration: active sets of dim facet rows with sign choices.
      int m = static_cast<int>(spec.facets().size());
      if (n > 4 || m > 14) return std::nullopt;
      std::vector<Vector> pts;
      Eigen::MatrixXd rows(m, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) rows(i, j) = spec.facets()[static_cast<std::size_t>(i)].coeff(j).real();
      std::vector<int> comb(static_cast<std::size_t>(n));
      std::function<void(int, int)> walk = [&](int start, int depth) {
        if (depth == n) {
          Eigen::MatrixXd a(n, n);
          for (int k = 0; k < n; ++k) a.row(k) = rows.row(comb[static_cast<std::size_t>(k)]);
          Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
          if (!lu.isInvertible()) return;
          // Fix the first active sign to +1; the mirror vertex is added too.
          for (unsigned smask = 0; smask < (1u << (n - 1)); ++smask) {
            Eigen::VectorXd b(n);
            b[0] = 1.0;
            for (int k = 1; k < n; ++k) b[k] = ((smask >> (k - 1)) & 1u) ? 1.0 : -1.0;
            Eigen::VectorXd v = lu.solve(b);
            bool feasible = true;
            for (int i = 0; i < m && feasible; ++i)
              if (std::abs(rows.row(i).dot(v)) > 1.0 + 1e-9) feasible = false;
            if (!feasible) continue;
            std::vector<Scalar> c(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = Scalar(v[i], 0.0);
            Vector vert(c, ScalarField::Real);
            bool dup = false;
            for (const auto& q : pts)
              if ((to_eigen(q.coords()) - to_eigen(vert.coords())).norm() < 1e-9) { dup = true; break; }
            if (!dup) {
              pts.push_back(vert);
              pts.push_back(Scalar(-1.0, 0.0) * vert);
            }
          }
          return;
        }
        for (int i = start; i < m; ++i) {
          comb[static_cast<std::size_t>(depth)] = i;
          walk(i + 1, depth + 1);
        }
      };
      walk(0, 0);
      if (pts.empty()) return std::nullopt;
      return pts;
    }
    default:
      return std::nullopt;
  }
}

// Extreme-point candidates that lie exactly on the unit sphere.
inline std::optional<std::vector<Vector>> ball_vertices(const NormSpec& spec) {
  auto sample = ball_generating_sample(spec);
  if (!sample) return std::nullopt;
  std::vector<Vector> on_sphere;
  for (const auto& v : *sample)
    if (std::abs(eval_norm(spec, v) - 1.0) <= 1e-9) on_sphere.push_back(v);
  if (on_sphere.empty()) return std::nullopt;
  return on_sphere;
}

}  // namespace normlab
