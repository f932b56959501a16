#include "arfspin/cover.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "arfspin/errors.hpp"

namespace arfspin::cover {

namespace {

constexpr Complex kI{0.0, 1.0};

Real max_abs(const Mat2& m) {
  return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

// Principal m-th root; used only where any root would do.
Complex principal_root(Complex z, int m) { return std::exp(std::log(z) / static_cast<Real>(m)); }

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", r);
  return buf;
}

void require_modulus(int m) {
  if (m < 2) throw DomainError("cover modulus must be at least 2, got " + std::to_string(m));
}

// g = h S h^-1 with S = z -> lambda z (lambda > 1) or S = P_0(mu).
struct StandardPosition {
  Isometry h;
  Real param;
};

Isometry conjugator(BoundaryPoint repelling, BoundaryPoint attracting) {
  // Sends 0 to repelling and inf to attracting.
  if (attracting.infinite) return Isometry::from_matrix({1, repelling.x, 0, 1});
  if (repelling.infinite) return Isometry::from_matrix({attracting.x, -1, 1, 0});
  if (attracting.x - repelling.x > 0) {
    return Isometry::from_matrix({attracting.x, repelling.x, 1, 1});
  }
  return Isometry::from_matrix({-attracting.x, repelling.x, -1, 1});
}

StandardPosition hyperbolic_position(const Isometry& g) {
  const Mat2& m = g.matrix();
  const Real tr = g.trace();
  const Real root = std::sqrt(std::max(tr * tr - 4, Real{0}));
  BoundaryPoint repelling, attracting;
  if (std::abs(m.c) <= 1e-14 * max_abs(m)) {
    const BoundaryPoint finite = BoundaryPoint::at(m.b / (m.d - m.a));
    // Multiplier at the finite fixed point is a^2 (since ad = 1).
    if (m.a * m.a > 1.0) {
      repelling = finite;
      attracting = BoundaryPoint::inf();
    } else {
      repelling = BoundaryPoint::inf();
      attracting = finite;
    }
  } else {
    // Multiplier at a fixed point z is 1/(cz+d)^2 with cz+d = (tr -/+ root)/2.
    const Real s = tr >= 0 ? 1 : -1;
    repelling = BoundaryPoint::at((m.a - m.d - s * root) / (2 * m.c));
    attracting = BoundaryPoint::at((m.a - m.d + s * root) / (2 * m.c));
  }
  const Real mu = (std::abs(tr) + root) / 2;
  return {conjugator(repelling, attracting), mu * mu};
}

StandardPosition parabolic_position(const Isometry& g) {
  const Mat2& m = g.matrix();
  const Isometry h = std::abs(m.c) <= 1e-14 * max_abs(m)
                         ? Isometry::from_matrix({0, -1, 1, 0})
                         : Isometry::from_matrix({1, (m.a - m.d) / (2 * m.c), 0, 1});
  const Isometry conj = h.inverse().compose(g).compose(h);
  const Mat2& s = conj.matrix();
  return {h, -s.c / s.a};
}

}  // namespace

Mat2 operator*(const Mat2& p, const Mat2& q) {
  return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c,
          p.c * q.b + p.d * q.d};
}

namespace {

// Flips the global sign so the first (numerically) nonzero entry is positive.
Mat2 sign_normalized(Mat2 m) {
  const Real cutoff = 1e-14L * max_abs(m);
  for (Real x : {m.a, m.b, m.c, m.d}) {
    if (std::abs(x) > cutoff) {
      if (x < 0) m = {-m.a, -m.b, -m.c, -m.d};
      break;
    }
  }
  return m;
}

}  // namespace

Isometry Isometry::from_matrix(const Mat2& raw) {
  const Real det = raw.a * raw.d - raw.b * raw.c;
  if (!std::isfinite(det) || std::abs(det) < 1e-300) {
    throw DomainError("isometry matrix is singular");
  }
  const Real s = 1 / std::sqrt(std::abs(det));
  return Isometry(sign_normalized({raw.a * s, raw.b * s, raw.c * s, raw.d * s}),
                  det > 0 ? Orientation::Preserving : Orientation::Reversing);
}

Complex Isometry::apply(Complex z) const {
  const Complex zs = preserving() ? z : std::conj(z);
  return (m_.a * zs + m_.b) / (m_.c * zs + m_.d);
}

Complex Isometry::derivative(Complex z) const {
  const Complex zs = preserving() ? z : std::conj(z);
  const Complex q = m_.c * zs + m_.d;
  return det() / (q * q);
}

// Products and inverses keep |det| = 1 exactly; recomputing ad - bc here would
// only add cancellation error for large entries.
Isometry Isometry::compose(const Isometry& inner) const {
  const bool same = orientation_ == inner.orientation_;
  return Isometry(sign_normalized(m_ * inner.m_),
                  same ? Orientation::Preserving : Orientation::Reversing);
}

Isometry Isometry::inverse() const {
  const Real s = det();
  return Isometry(sign_normalized({s * m_.d, -s * m_.b, -s * m_.c, s * m_.a}), orientation_);
}

double projective_distance(const Isometry& x, const Isometry& y) {
  if (x.orientation() != y.orientation()) return std::numeric_limits<double>::infinity();
  const Mat2& p = x.matrix();
  const Mat2& q = y.matrix();
  const Real minus = std::hypot(p.a - q.a, p.b - q.b, std::hypot(p.c - q.c, p.d - q.d));
  const Real plus = std::hypot(p.a + q.a, p.b + q.b, std::hypot(p.c + q.c, p.d + q.d));
  return static_cast<double>(std::min(minus, plus));
}

std::string_view to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::Identity: return "identity";
    case IsometryClass::Hyperbolic: return "hyperbolic";
    case IsometryClass::Parabolic: return "parabolic";
    case IsometryClass::Elliptic: return "elliptic";
  }
  return "?";
}

IsometryClass classify(const Isometry& g, double tol) {
  if (!g.preserving()) throw DomainError("only orientation-preserving isometries are classified");
  if (projective_distance(g, Isometry::identity()) <= tol) return IsometryClass::Identity;
  const Real t = std::abs(g.trace());
  if (t - 2.0 > tol) return IsometryClass::Hyperbolic;
  if (std::abs(t - 2.0) <= tol) return IsometryClass::Parabolic;
  return IsometryClass::Elliptic;
}

Isometry make_hyperbolic(BoundaryPoint alpha, BoundaryPoint beta, Real lambda) {
  if (!(lambda > 0) || !std::isfinite(lambda)) throw DomainError("multiplier must be positive");
  if (alpha.infinite == beta.infinite && (alpha.infinite || alpha.x == beta.x)) {
    throw DomainError("hyperbolic fixed points must differ");
  }
  if (beta.infinite) return Isometry::from_matrix({lambda, (1 - lambda) * alpha.x, 0, 1});
  if (alpha.infinite) return Isometry::from_matrix({1, -(1 - lambda) * beta.x, 0, lambda});
  const Real a = alpha.x;
  const Real b = beta.x;
  return Isometry::from_matrix({a - lambda * b, -(1 - lambda) * a * b, 1 - lambda, lambda * a - b});
}

Isometry make_parabolic(Real alpha, Real lambda) {
  return Isometry::from_matrix(
      {1 - lambda * alpha, lambda * alpha * alpha, -lambda, 1 + lambda * alpha});
}

CoverElement::CoverElement(Isometry base, Complex branch, int m, double tol)
    : base_(base), branch_(branch), m_(m) {
  require_modulus(m);
  if (branch == Complex{0.0, 0.0}) throw DomainError("branch value must be nonzero");
  if (const double r = branch_residual(); !(r <= tol)) {
    throw BranchError("branch value fails delta^m = derivative (residual " + format_residual(r) +
                      ")");
  }
}

Complex CoverElement::branch_at(Complex w) const {
  const Mat2& m = base_.matrix();
  const bool pres = base_.preserving();
  const Complex ws = pres ? w : std::conj(w);
  const Complex is = pres ? kI : std::conj(kI);
  // Both factors lie in the same open half-plane, so the principal log of the
  // ratio is the difference of continuous logs.
  const Complex ratio = (m.c * ws + m.d) / (m.c * is + m.d);
  return branch_ * std::exp((Real{-2} / m_) * std::log(ratio));
}

double CoverElement::branch_residual() const {
  const Complex deriv = base_.derivative(kI);
  return static_cast<double>(std::abs(std::pow(branch_, m_) - deriv) / std::abs(deriv));
}

CoverElement identity_element(int m) { return CoverElement(Isometry::identity(), 1.0, m); }

CoverElement central(int k, int m) {
  require_modulus(m);
  const int r = ((k % m) + m) % m;
  return CoverElement(Isometry::identity(), std::polar(Real{1}, 2 * std::numbers::pi_v<Real> * r / m), m);
}

CoverElement make_J(int branch_choice, int m) {
  require_modulus(m);
  const int r = ((branch_choice % m) + m) % m;
  return CoverElement(Isometry::reflection(),
                      std::polar(Real{1}, std::numbers::pi_v<Real> * (2 * r + 1) / m), m);
}

CoverElement standard_hyperbolic_lift(Real lambda, int m) {
  require_modulus(m);
  if (!(lambda > 0)) throw DomainError("multiplier must be positive");
  const Real s = std::sqrt(lambda);
  return CoverElement(Isometry::from_matrix({s, 0, 0, 1 / s}), std::pow(lambda, Real{1} / m), m);
}

CoverElement standard_parabolic_lift(Real mu, int m) {
  require_modulus(m);
  return CoverElement(Isometry::from_matrix({1, 0, -mu, 1}),
                      std::exp((Real{-2} / m) * std::log(Complex{1, -mu})), m);
}

CoverElement multiply(const CoverElement& a, const CoverElement& b, double tol) {
  if (a.m() != b.m()) throw DomainError("cannot multiply elements of different covers");
  const Isometry base = a.base().compose(b.base());
  const Complex inner = a.preserving() ? b.branch() : std::conj(b.branch());
  return CoverElement(base, a.branch_at(b.base().apply(kI)) * inner, a.m(), tol);
}

CoverElement invert(const CoverElement& a, double tol) {
  const Isometry inv = a.base().inverse();
  Complex branch = Real{1} / a.branch_at(inv.apply(kI));
  if (!a.preserving()) branch = std::conj(branch);
  return CoverElement(inv, branch, a.m(), tol);
}

CoverElement canonical_lift(const Isometry& g, int m, double tol) {
  require_modulus(m);
  const IsometryClass kind = classify(g, tol);
  if (kind == IsometryClass::Elliptic) {
    throw OutOfScopeError("levels of elliptic elements are not implemented");
  }
  if (kind == IsometryClass::Identity) {
    return CoverElement(g, principal_root(g.derivative(kI), m), m, tol);
  }
  const StandardPosition pos =
      kind == IsometryClass::Hyperbolic ? hyperbolic_position(g) : parabolic_position(g);
  const CoverElement standard = kind == IsometryClass::Hyperbolic
                                    ? standard_hyperbolic_lift(pos.param, m)
                                    : standard_parabolic_lift(pos.param, m);
  // Any lift of the conjugator works: its branch cancels.
  const CoverElement h(pos.h, principal_root(pos.h.derivative(kI), m), m, tol);
  const CoverElement lifted = multiply(multiply(h, standard, tol), invert(h, tol), tol);
  return CoverElement(g, lifted.branch(), m, tol);
}

LevelResult level_with_residual(const CoverElement& a, double tol) {
  if (!a.preserving()) throw DomainError("level is defined on orientation-preserving elements");
  const CoverElement canon = canonical_lift(a.base(), a.m(), tol);
  const Complex ratio = a.branch() / canon.branch();
  const int m = a.m();
  const long long k = std::llround(std::arg(ratio) * m / (2 * std::numbers::pi_v<Real>));
  const auto residual = static_cast<double>(
      std::abs(ratio - std::polar(Real{1}, 2 * std::numbers::pi_v<Real> * k / m)));
  if (!(residual <= tol)) {
    throw BranchError("branch ratio is not an m-th root of unity (residual " +
                      format_residual(residual) + ")");
  }
  return {static_cast<int>(((k % m) + m) % m), residual};
}

int level(const CoverElement& a, double tol) { return level_with_residual(a, tol).level; }

bool conjugation_sign_check(const CoverElement& f, const CoverElement& c, double tol) {
  if (f.preserving()) throw DomainError("conjugating element must reverse orientation");
  if (!c.preserving()) throw DomainError("conjugated element must preserve orientation");
  const CoverElement x = multiply(multiply(f, c, tol), invert(f, tol), tol);
  const int m = c.m();
  return level(x, tol) == (m - level(c, tol)) % m;
}

Isometry twist_companion(const Isometry& c, double tol) {
  if (!c.preserving() || classify(c, tol) != IsometryClass::Hyperbolic) {
    throw DomainError("twist companion needs a hyperbolic element");
  }
  const StandardPosition pos = hyperbolic_position(c);
  const Real q = std::pow(pos.param, Real{0.25});
  const Isometry root = Isometry::from_matrix({q, 0, 0, 1 / q});
  return pos.h.compose(Isometry::reflection()).compose(root).compose(pos.h.inverse());
}

double element_distance(const CoverElement& x, const CoverElement& y) {
  if (x.m() != y.m()) return std::numeric_limits<double>::infinity();
  return std::max(projective_distance(x.base(), y.base()),
                  static_cast<double>(std::abs(x.branch() - y.branch())));
}

}  // namespace arfspin::cover
