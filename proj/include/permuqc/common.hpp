#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace permuqc {

using Cx = std::complex<double>;

// Amplitudes smaller than this are dropped when states are (re)built.
inline constexpr double kPruneTol = 1e-12;
// Physical states are accepted as normalized within this bound.
inline constexpr double kNormTol = 1e-10;
// Matching threshold for mod-phase comparisons of gates and matrices.
inline constexpr double kMatchTol = 1e-9;

inline constexpr double kPi = std::numbers::pi;

// e^{2*pi*i*num/den}
inline Cx root_of_unity(long num, long den) {
  if (den <= 0) throw std::invalid_argument("root_of_unity: den must be positive");
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(num) / static_cast<double>(den));
}

// Fraction of a full turn, reduced to [0,1). Used to dedup roots of unity exactly.
struct TurnFraction {
  long num = 0;
  long den = 1;

  static TurnFraction make(long num, long den) {
    if (den <= 0) throw std::invalid_argument("TurnFraction: den must be positive");
    num %= den;
    if (num < 0) num += den;
    long g = std::gcd(num, den);
    if (g == 0) g = 1;
    return TurnFraction{num / g, den / g};
  }

  TurnFraction plus(const TurnFraction& o) const {
    long d = std::lcm(den, o.den);
    return make(num * (d / den) + o.num * (d / o.den), d);
  }

  Cx value() const { return root_of_unity(num, den); }
  auto operator<=>(const TurnFraction&) const = default;
};

inline bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol; }
inline bool approx(Cx a, Cx b, double tol) { return std::abs(a - b) <= tol; }

// Deterministic uniform double in [0,1) from the top 53 bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller, hand-rolled so results do not depend on the standard library's
// distribution internals.
inline double gaussian(std::mt19937_64& rng) {
  double u = 0.0;
  do { u = uniform01(rng); } while (u <= 0.0);
  double v = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * kPi * v);
}

inline Cx gaussian_complex(std::mt19937_64& rng) {
  double re = gaussian(rng);
  double im = gaussian(rng);
  return Cx(re, im);
}

}  // namespace permuqc
