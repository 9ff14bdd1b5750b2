#pragma once

#include <array>
#include <cmath>

#include "permuqc/common.hpp"

namespace permuqc {

struct Mat2 {
  std::array<std::array<Cx, 2>, 2> m{};

  static Mat2 zero() { return Mat2{}; }
  static Mat2 ident() {
    Mat2 a;
    a.m[0][0] = 1.0;
    a.m[1][1] = 1.0;
    return a;
  }
  static Mat2 diag(Cx d0, Cx d1) {
    Mat2 a;
    a.m[0][0] = d0;
    a.m[1][1] = d1;
    return a;
  }

  Cx& at(int r, int c) { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  Cx at(int r, int c) const { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
};

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
  return out;
}

inline Mat2 add(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
  return out;
}

inline Mat2 sub(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
  return out;
}

inline Mat2 scale(const Mat2& a, Cx f) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.at(r, c) = a.at(r, c) * f;
  return out;
}

inline Mat2 adjoint(const Mat2& a) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.at(r, c) = std::conj(a.at(c, r));
  return out;
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  double worst = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) worst = std::max(worst, std::abs(a.at(r, c) - b.at(r, c)));
  return worst;
}

// Rescales by a unit phase so the first entry (row-major) above the noise
// floor becomes real positive. The representative of the mod-phase class.
inline Mat2 canonical_form(const Mat2& a) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      Cx e = a.at(r, c);
      if (std::abs(e) > 1e-6) return scale(a, std::conj(e) / std::abs(e));
    }
  return a;
}

inline bool eq_mod_phase(const Mat2& a, const Mat2& b, double tol = kMatchTol) {
  return max_abs_diff(canonical_form(a), canonical_form(b)) <= tol;
}

// |tr(a^dagger b)| / 2; equals 1 exactly when two unitaries agree mod phase.
inline double unitary_fidelity_mod_phase(const Mat2& a, const Mat2& b) {
  Mat2 p = mul(adjoint(a), b);
  return std::abs(p.at(0, 0) + p.at(1, 1)) / 2.0;
}

}  // namespace permuqc
