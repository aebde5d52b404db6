#pragma once

#include "lamecn/errors.hpp"

namespace lamecn::specfun {

inline constexpr double pi = 3.14159265358979323846264338327950288;

/// Modulus of the elliptic cosine appearing in the target equation, 1/sqrt(2).
inline constexpr double inv_sqrt2 = 0.70710678118654752440084436210484904;

/// sin(pi*x) with exact zeros at every integer x.
double sin_pi(double x);

/// cos(pi*x) with exact zeros at every half-integer x.
double cos_pi(double x);

/// Gamma function.
///
/// Lanczos rational approximation for x >= 0.5, reflection below. Relative
/// error stays under 1e-13 on [-170, 170] away from the poles.
/// Throws pole_error at 0, -1, -2, ...; returns +inf past the double
/// overflow edge x ~ 171.62.
double gamma(double x);

/// 1/Gamma(x). Entire: returns exactly 0 at nonpositive integers.
double reciprocal_gamma(double x);

/// Elliptic modulus k, restricted to [0, 1).
class EllipticModulus {
public:
    explicit EllipticModulus(double k);
    double k() const { return k_; }

private:
    double k_;
};

/// Complete elliptic integral of the first kind K(k), by AGM iteration.
/// Relative error <= 1e-14.
double complete_elliptic_k(EllipticModulus m);

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

/// Jacobi elliptic functions sn, cn, dn at argument u.
///
/// Descending Landen/AGM ladder terminated at relative scale 1e-15;
/// the argument is folded into one 4K period first so large |u| does
/// not lose accuracy. Absolute error <= 1e-12.
JacobiTriple jacobi_elliptic(double u, EllipticModulus m);

/// Gauss hypergeometric function F(a, b; c; y) on the real interval [0, 1].
///
/// Direct series for y <= 1/2; the y -> 1-y connection formula above
/// (requires c-a-b non-integer there, which holds for every parameter set
/// this library produces). Relative error <= 1e-11.
/// Throws std::domain_error for y outside [0, 1], c a nonpositive integer,
/// or a divergent y = 1 evaluation; convergence_error if the series fails
/// to settle within its iteration budget.
double hyp2f1(double a, double b, double c, double y);

}  // namespace lamecn::specfun
