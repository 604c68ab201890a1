#pragma once

// Second-order forward-mode dual numbers.
//
// A Dual3 carries {f, f', f''} of some quantity with respect to a single
// scalar seed. The third slot stores the second derivative itself, not the
// Taylor coefficient f''/2; see TaylorJet for the coefficient convention.
//
// Every elemental function is lifted through compose(), which is the only
// place the second-order chain rule is written down:
//
//   f(g) = {f(g0), f'(g0) g1, f''(g0) g1^2 + f'(g0) g2}

#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "dualnum/errors.hpp"

namespace dualnum {

template <typename Scalar>
class Dual3 {
 public:
  using scalar_type = Scalar;

  constexpr Dual3() = default;
  constexpr Dual3(Scalar value, Scalar first, Scalar second)
      : value_(value), first_(first), second_(second) {}

  /// The seed {x, 1, 0}: derivatives are taken with respect to x.
  static constexpr Dual3 variable(Scalar x) { return {x, Scalar(1), Scalar(0)}; }
  static constexpr Dual3 constant(Scalar c) { return {c, Scalar(0), Scalar(0)}; }

  constexpr Scalar value() const { return value_; }
  constexpr Scalar first() const { return first_; }
  constexpr Scalar second() const { return second_; }

  constexpr bool is_constant() const {
    return first_ == Scalar(0) && second_ == Scalar(0);
  }

  bool has_nan() const {
    return std::isnan(value_) || std::isnan(first_) || std::isnan(second_);
  }

  bool is_finite() const {
    return std::isfinite(value_) && std::isfinite(first_) && std::isfinite(second_);
  }

  friend constexpr bool operator==(const Dual3&, const Dual3&) = default;

 private:
  Scalar value_{0};
  Scalar first_{0};
  Scalar second_{0};
};

using Dual3d = Dual3<double>;

template <typename Scalar>
constexpr Dual3<Scalar> make_variable(Scalar x) {
  return Dual3<Scalar>::variable(x);
}

template <typename Scalar>
constexpr Dual3<Scalar> make_constant(Scalar c) {
  return Dual3<Scalar>::constant(c);
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Dual3<Scalar>& d) {
  return os << '{' << d.value() << ", " << d.first() << ", " << d.second() << '}';
}

namespace detail {

template <typename Scalar>
std::string describe(Scalar x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

template <typename Scalar>
void require_no_nan(const Dual3<Scalar>& d, std::string_view op) {
  if (d.has_nan()) {
    std::ostringstream os;
    os << "NaN component in input to " << op << ": " << d;
    throw NanError(os.str());
  }
}

}  // namespace detail

// Arithmetic. Scalars mix in as constants.

template <typename Scalar>
Dual3<Scalar> operator+(const Dual3<Scalar>& a, const Dual3<Scalar>& b) {
  detail::require_no_nan(a, "add");
  detail::require_no_nan(b, "add");
  return {a.value() + b.value(), a.first() + b.first(), a.second() + b.second()};
}

template <typename Scalar>
Dual3<Scalar> operator-(const Dual3<Scalar>& a, const Dual3<Scalar>& b) {
  detail::require_no_nan(a, "sub");
  detail::require_no_nan(b, "sub");
  return {a.value() - b.value(), a.first() - b.first(), a.second() - b.second()};
}

template <typename Scalar>
Dual3<Scalar> operator-(const Dual3<Scalar>& a) {
  detail::require_no_nan(a, "negate");
  return {-a.value(), -a.first(), -a.second()};
}

template <typename Scalar>
Dual3<Scalar> operator*(const Dual3<Scalar>& a, const Dual3<Scalar>& b) {
  detail::require_no_nan(a, "mul");
  detail::require_no_nan(b, "mul");
  return {a.value() * b.value(),
          a.first() * b.value() + a.value() * b.first(),
          a.second() * b.value() + Scalar(2) * a.first() * b.first() +
              a.value() * b.second()};
}

template <typename Scalar>
Dual3<Scalar> operator/(const Dual3<Scalar>& a, const Dual3<Scalar>& b) {
  detail::require_no_nan(a, "div");
  detail::require_no_nan(b, "div");
  if (b.value() == Scalar(0)) {
    throw DivisionByZeroError("division by a dual number with real part " +
                              detail::describe(b.value()));
  }
  const Scalar q0 = a.value() / b.value();
  const Scalar q1 = (a.first() - q0 * b.first()) / b.value();
  const Scalar q2 =
      (a.second() - Scalar(2) * q1 * b.first() - q0 * b.second()) / b.value();
  return {q0, q1, q2};
}

template <typename Scalar>
Dual3<Scalar> operator+(const Dual3<Scalar>& a, Scalar b) { return a + Dual3<Scalar>::constant(b); }
template <typename Scalar>
Dual3<Scalar> operator+(Scalar a, const Dual3<Scalar>& b) { return Dual3<Scalar>::constant(a) + b; }
template <typename Scalar>
Dual3<Scalar> operator-(const Dual3<Scalar>& a, Scalar b) { return a - Dual3<Scalar>::constant(b); }
template <typename Scalar>
Dual3<Scalar> operator-(Scalar a, const Dual3<Scalar>& b) { return Dual3<Scalar>::constant(a) - b; }
template <typename Scalar>
Dual3<Scalar> operator*(const Dual3<Scalar>& a, Scalar b) { return a * Dual3<Scalar>::constant(b); }
template <typename Scalar>
Dual3<Scalar> operator*(Scalar a, const Dual3<Scalar>& b) { return Dual3<Scalar>::constant(a) * b; }
template <typename Scalar>
Dual3<Scalar> operator/(const Dual3<Scalar>& a, Scalar b) { return a / Dual3<Scalar>::constant(b); }
template <typename Scalar>
Dual3<Scalar> operator/(Scalar a, const Dual3<Scalar>& b) { return Dual3<Scalar>::constant(a) / b; }

template <typename Scalar>
Dual3<Scalar>& operator+=(Dual3<Scalar>& a, const Dual3<Scalar>& b) { return a = a + b; }
template <typename Scalar>
Dual3<Scalar>& operator-=(Dual3<Scalar>& a, const Dual3<Scalar>& b) { return a = a - b; }
template <typename Scalar>
Dual3<Scalar>& operator*=(Dual3<Scalar>& a, const Dual3<Scalar>& b) { return a = a * b; }
template <typename Scalar>
Dual3<Scalar>& operator/=(Dual3<Scalar>& a, const Dual3<Scalar>& b) { return a = a / b; }

/// Chain rule. `outer` holds {f(g0), f'(g0), f''(g0)} evaluated by the
/// caller at g0 = g.value().
template <typename Scalar>
Dual3<Scalar> compose(const Dual3<Scalar>& outer, const Dual3<Scalar>& g) {
  detail::require_no_nan(outer, "compose");
  detail::require_no_nan(g, "compose");
  return {outer.value(), outer.first() * g.first(),
          outer.second() * g.first() * g.first() + outer.first() * g.second()};
}

enum class Elemental { sin, cos, tan, exp, log, sqrt, abs, negate };

inline constexpr Elemental kAllElementals[] = {
    Elemental::sin, Elemental::cos,  Elemental::tan, Elemental::exp,
    Elemental::log, Elemental::sqrt, Elemental::abs, Elemental::negate};

constexpr std::string_view elemental_name(Elemental e) {
  switch (e) {
    case Elemental::sin: return "sin";
    case Elemental::cos: return "cos";
    case Elemental::tan: return "tan";
    case Elemental::exp: return "exp";
    case Elemental::log: return "log";
    case Elemental::sqrt: return "sqrt";
    case Elemental::abs: return "abs";
    case Elemental::negate: return "negate";
  }
  return "?";
}

/// {f(x), f'(x), f''(x)} for an elemental at a real point.
template <typename Scalar>
Dual3<Scalar> elemental_jet(Elemental e, Scalar x) {
  using std::abs;
  auto domain_error = [&](std::string_view why) {
    return DomainError(std::string(elemental_name(e)) + " " + std::string(why) +
                       " (real part " + detail::describe(x) + ")");
  };
  if (std::isnan(x)) {
    throw NanError("NaN argument to " + std::string(elemental_name(e)));
  }
  switch (e) {
    case Elemental::sin: {
      const Scalar s = std::sin(x);
      return {s, std::cos(x), -s};
    }
    case Elemental::cos: {
      const Scalar c = std::cos(x);
      return {c, -std::sin(x), -c};
    }
    case Elemental::tan: {
      if (std::cos(x) == Scalar(0)) throw domain_error("undefined at a pole");
      const Scalar t = std::tan(x);
      const Scalar sec2 = Scalar(1) + t * t;
      return {t, sec2, Scalar(2) * t * sec2};
    }
    case Elemental::exp: {
      const Scalar v = std::exp(x);
      return {v, v, v};
    }
    case Elemental::log: {
      if (!(x > Scalar(0))) throw domain_error("requires a positive argument");
      return {std::log(x), Scalar(1) / x, Scalar(-1) / (x * x)};
    }
    case Elemental::sqrt: {
      if (!(x > Scalar(0))) throw domain_error("requires a positive argument");
      const Scalar r = std::sqrt(x);
      return {r, Scalar(1) / (Scalar(2) * r), Scalar(-1) / (Scalar(4) * r * x)};
    }
    case Elemental::abs: {
      if (x == Scalar(0)) {
        throw NonDifferentiableError("abs is not differentiable at 0");
      }
      return {abs(x), x > Scalar(0) ? Scalar(1) : Scalar(-1), Scalar(0)};
    }
    case Elemental::negate:
      return {-x, Scalar(-1), Scalar(0)};
  }
  throw DomainError("unknown elemental");
}

template <typename Scalar>
Dual3<Scalar> lift_elemental(Elemental e, const Dual3<Scalar>& g) {
  detail::require_no_nan(g, elemental_name(e));
  return compose(elemental_jet(e, g.value()), g);
}

template <typename Scalar>
Dual3<Scalar> sin(const Dual3<Scalar>& g) { return lift_elemental(Elemental::sin, g); }
template <typename Scalar>
Dual3<Scalar> cos(const Dual3<Scalar>& g) { return lift_elemental(Elemental::cos, g); }
template <typename Scalar>
Dual3<Scalar> tan(const Dual3<Scalar>& g) { return lift_elemental(Elemental::tan, g); }
template <typename Scalar>
Dual3<Scalar> exp(const Dual3<Scalar>& g) { return lift_elemental(Elemental::exp, g); }
template <typename Scalar>
Dual3<Scalar> log(const Dual3<Scalar>& g) { return lift_elemental(Elemental::log, g); }
template <typename Scalar>
Dual3<Scalar> sqrt(const Dual3<Scalar>& g) { return lift_elemental(Elemental::sqrt, g); }
template <typename Scalar>
Dual3<Scalar> abs(const Dual3<Scalar>& g) { return lift_elemental(Elemental::abs, g); }

/// u^p.
///
/// Constant exponent with u > 0 goes through the power-rule jet; a constant
/// integer exponent with u <= 0 uses repeated products; a non-constant
/// exponent needs u > 0 and is evaluated as exp(p log u).
template <typename Scalar>
Dual3<Scalar> pow(const Dual3<Scalar>& u, const Dual3<Scalar>& p) {
  detail::require_no_nan(u, "pow");
  detail::require_no_nan(p, "pow");
  const Scalar u0 = u.value();
  const Scalar p0 = p.value();

  if (p.is_constant()) {
    if (u0 > Scalar(0)) {
      const Scalar v = std::pow(u0, p0);
      const Scalar d1 = p0 * std::pow(u0, p0 - Scalar(1));
      const Scalar d2 = p0 * (p0 - Scalar(1)) * std::pow(u0, p0 - Scalar(2));
      return compose(Dual3<Scalar>{v, d1, d2}, u);
    }
    if (std::trunc(p0) == p0) {
      if (p0 == Scalar(0)) {
        if (u0 == Scalar(0)) throw DomainError("pow: 0^0 is undefined");
        return Dual3<Scalar>::constant(Scalar(1));
      }
      auto n = static_cast<std::uint64_t>(std::abs(p0));
      Dual3<Scalar> result = Dual3<Scalar>::constant(Scalar(1));
      Dual3<Scalar> base = u;
      while (n != 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n != 0) base = base * base;
      }
      if (p0 < Scalar(0)) {
        if (u0 == Scalar(0)) {
          throw DomainError("pow: zero base with negative exponent " +
                            detail::describe(p0));
        }
        return Dual3<Scalar>::constant(Scalar(1)) / result;
      }
      return result;
    }
    throw DomainError("pow: base " + detail::describe(u0) +
                      " with non-integer exponent " + detail::describe(p0));
  }

  if (!(u0 > Scalar(0))) {
    throw DomainError("pow: variable exponent requires a positive base, got " +
                      detail::describe(u0));
  }
  return exp(p * log(u));
}

template <typename Scalar>
Dual3<Scalar> pow(const Dual3<Scalar>& u, Scalar p) {
  return pow(u, Dual3<Scalar>::constant(p));
}

}  // namespace dualnum
