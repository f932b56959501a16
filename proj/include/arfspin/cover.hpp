#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace arfspin::cover {

// Extended precision: conjugating by long products loses digits to cancellation.
using Real = long double;
using Complex = std::complex<Real>;

inline constexpr double kDefaultTol = 1e-9;

/// A point of the boundary R u {inf} of the upper half-plane.
struct BoundaryPoint {
  bool infinite = false;
  Real x = 0;

  static BoundaryPoint at(Real v) { return {false, v}; }
  static BoundaryPoint inf() { return {true, 0.0}; }
};

struct Mat2 {
  Real a, b, c, d;
};

Mat2 operator*(const Mat2& p, const Mat2& q);

enum class Orientation : std::uint8_t { Preserving, Reversing };

/// Isometry of the upper half-plane: z -> (az+b)/(cz+d) when preserving,
/// z -> (a conj(z) + b)/(c conj(z) + d) when reversing. The matrix is stored
/// with |det| = 1 and its first nonzero entry positive; the orientation is the
/// sign of the determinant.
class Isometry {
 public:
  /// Throws DomainError for a (numerically) singular matrix.
  static Isometry from_matrix(const Mat2& m);
  static Isometry identity() { return from_matrix({1, 0, 0, 1}); }
  /// The reflection z -> -conj(z) in the imaginary axis.
  static Isometry reflection() { return from_matrix({1, 0, 0, -1}); }

  const Mat2& matrix() const { return m_; }
  Orientation orientation() const { return orientation_; }
  bool preserving() const { return orientation_ == Orientation::Preserving; }
  Real det() const { return preserving() ? 1.0 : -1.0; }

  Complex apply(Complex z) const;
  /// d/dz for preserving elements, d/d conj(z) for reversing ones.
  Complex derivative(Complex z) const;
  Real trace() const { return m_.a + m_.d; }

  /// this o inner.
  Isometry compose(const Isometry& inner) const;
  Isometry inverse() const;

 private:
  Isometry(const Mat2& m, Orientation o) : m_(m), orientation_(o) {}
  Mat2 m_;
  Orientation orientation_;
};

/// Frobenius distance up to global sign; +inf for different orientations.
double projective_distance(const Isometry& x, const Isometry& y);

enum class IsometryClass { Identity, Hyperbolic, Parabolic, Elliptic };

std::string_view to_string(IsometryClass c);

/// Classifies a preserving isometry; throws DomainError for a reversing one.
IsometryClass classify(const Isometry& g, double tol = kDefaultTol);

/// tau_{alpha,beta}(lambda): alpha repelling, beta attracting for lambda > 1.
/// Throws DomainError if alpha == beta or lambda <= 0.
Isometry make_hyperbolic(BoundaryPoint alpha, BoundaryPoint beta, Real lambda);

/// pi_alpha(lambda): z -> ((1 - lambda alpha) z + lambda alpha^2) / (-lambda z + 1 + lambda alpha).
Isometry make_parabolic(Real alpha, Real lambda);

/// An element of the m-fold cover: an isometry plus the value at i of a
/// branch function delta with delta^m equal to the derivative.
class CoverElement {
 public:
  /// Throws DomainError for m < 2 or branch 0, BranchError if
  /// |branch^m - derivative(i)| exceeds tol relative to |derivative(i)|.
  CoverElement(Isometry base, Complex branch, int m, double tol = kDefaultTol);

  const Isometry& base() const { return base_; }
  Complex branch() const { return branch_; }
  int m() const { return m_; }
  bool preserving() const { return base_.preserving(); }

  /// The branch function continued from i to w.
  Complex branch_at(Complex w) const;
  /// Relative deviation of branch^m from the derivative at i.
  double branch_residual() const;

 private:
  Isometry base_;
  Complex branch_;
  int m_;
};

CoverElement identity_element(int m);
/// U^k = (identity, exp(2 pi i k / m)).
CoverElement central(int k, int m);
/// J = (z -> -conj(z), exp(i pi (2r + 1) / m)) for branch_choice r in [0, m).
CoverElement make_J(int branch_choice, int m);
/// T_{0,inf}(lambda): z -> lambda z with the positive real branch lambda^(1/m).
CoverElement standard_hyperbolic_lift(Real lambda, int m);
/// P_0(mu): z -> z / (-mu z + 1) with branch (1 - i mu)^(-2/m).
CoverElement standard_parabolic_lift(Real mu, int m);

/// Product a b in G_m; throws DomainError if the moduli differ and
/// BranchError if the result fails the branch check.
CoverElement multiply(const CoverElement& a, const CoverElement& b, double tol = kDefaultTol);
CoverElement invert(const CoverElement& a, double tol = kDefaultTol);

/// Lift of g at the end of the one-parameter path from the identity, obtained
/// by conjugating g to standard position. Throws DomainError for reversing g
/// and OutOfScopeError for elliptic g.
CoverElement canonical_lift(const Isometry& g, int m, double tol = kDefaultTol);

struct LevelResult {
  int level;
  double residual;
};

/// k with a = canonical_lift(base) U^k, and the distance of the branch ratio
/// from the snapped root of unity. Throws DomainError for reversing a,
/// OutOfScopeError for elliptic bases, BranchError when the residual exceeds tol.
LevelResult level_with_residual(const CoverElement& a, double tol = kDefaultTol);
int level(const CoverElement& a, double tol = kDefaultTol);

/// level(F C F^-1) == -level(C) (mod m). F must be reversing, C preserving.
bool conjugation_sign_check(const CoverElement& f, const CoverElement& c,
                            double tol = kDefaultTol);

/// Reflection in the axis of c composed with the square root of c; its
/// square is c. Throws DomainError unless c is hyperbolic.
Isometry twist_companion(const Isometry& c, double tol = kDefaultTol);

/// max(projective distance, |branch difference|); +inf if m or orientation differ.
double element_distance(const CoverElement& x, const CoverElement& y);

}  // namespace arfspin::cover
