// 3x3 orthogonal matrices, Rodrigues rotations and axis/angle extraction.

#ifndef O3CLIPS_ROTATION_HPP_
#define O3CLIPS_ROTATION_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace o3clips {

/// Element equality tolerance (max-norm on matrix entries).
inline constexpr double kEpsEqual = 1e-9;
/// Unit-length tolerance for rotation axes.
inline constexpr double kEpsUnit = 1e-12;

struct Vec3 {
  std::array<double, 3> v{};

  constexpr double operator[](int i) const { return v[i]; }
  constexpr double& operator[](int i) { return v[i]; }

  friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
  }
  friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {{a[0] - b[0], a[1] - b[1], a[2] - b[2]}};
  }
  friend constexpr Vec3 operator*(double s, const Vec3& a) {
    return {{s * a[0], s * a[1], s * a[2]}};
  }
  friend constexpr Vec3 operator-(const Vec3& a) { return -1.0 * a; }
};

constexpr Vec3 e1{{1.0, 0.0, 0.0}};
constexpr Vec3 e2{{0.0, 1.0, 0.0}};
constexpr Vec3 e3{{0.0, 0.0, 1.0}};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
           a[0] * b[1] - a[1] * b[0]}};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  return (1.0 / n) * a;
}

struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static constexpr Mat3 identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }

  constexpr double operator()(int i, int j) const { return m[i][j]; }
  constexpr double& operator()(int i, int j) { return m[i][j]; }

  friend constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] +
                    a.m[i][2] * b.m[2][j];
    return r;
  }
  friend constexpr Vec3 operator*(const Mat3& a, const Vec3& x) {
    return {{a.m[0][0] * x[0] + a.m[0][1] * x[1] + a.m[0][2] * x[2],
             a.m[1][0] * x[0] + a.m[1][1] * x[1] + a.m[1][2] * x[2],
             a.m[2][0] * x[0] + a.m[2][1] * x[1] + a.m[2][2] * x[2]}};
  }
  friend constexpr Mat3 operator*(double s, const Mat3& a) {
    Mat3 r = a;
    for (auto& row : r.m)
      for (auto& x : row) x *= s;
    return r;
  }
  friend constexpr Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
  }

  constexpr Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  constexpr double determinant() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  constexpr double trace() const { return m[0][0] + m[1][1] + m[2][2]; }
};

inline double max_distance(const Mat3& a, const Mat3& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(a.m[i][j] - b.m[i][j]));
  return d;
}

/// The antisymmetric matrix j(n) with j(n) x = n x x.
constexpr Mat3 skew(const Vec3& n) {
  Mat3 j;
  j.m = {{{0.0, -n[2], n[1]}, {n[2], 0.0, -n[0]}, {-n[1], n[0], 0.0}}};
  return j;
}

/// An element of O(3). Construction checks orthogonality to kEpsEqual.
class RotationElement {
public:
  RotationElement() : matrix_(Mat3::identity()) {}

  explicit RotationElement(const Mat3& matrix) : matrix_(matrix) {
    const double err = max_distance(matrix_.transposed() * matrix_, Mat3::identity());
    if (!(err <= kEpsEqual))
      throw std::invalid_argument("matrix is not orthogonal (|M^T M - Id| = " +
                                  std::to_string(err) + ")");
  }

  static RotationElement identity() { return RotationElement(); }
  static RotationElement minus_identity() {
    return RotationElement(-1.0 * Mat3::identity(), Unchecked{});
  }

  const Mat3& matrix() const { return matrix_; }
  int determinant() const { return matrix_.determinant() > 0.0 ? 1 : -1; }
  bool proper() const { return determinant() == 1; }

  RotationElement inverse() const { return {matrix_.transposed(), Unchecked{}}; }
  RotationElement negated() const { return {-1.0 * matrix_, Unchecked{}}; }

  /// g x g^{-1}.
  RotationElement conjugated_by(const RotationElement& g) const {
    return {g.matrix_ * matrix_ * g.matrix_.transposed(), Unchecked{}};
  }

  bool approx_equal(const RotationElement& other, double eps = kEpsEqual) const {
    return max_distance(matrix_, other.matrix_) <= eps;
  }

  friend RotationElement operator*(const RotationElement& a, const RotationElement& b) {
    return {a.matrix_ * b.matrix_, Unchecked{}};
  }
  friend RotationElement operator-(const RotationElement& a) { return a.negated(); }

private:
  struct Unchecked {};
  RotationElement(const Mat3& matrix, Unchecked) : matrix_(matrix) {}

  Mat3 matrix_;
};

/// R(axis, angle) = Id + sin(angle) j(axis) + (1 - cos(angle)) j(axis)^2.
/// Throws std::invalid_argument unless |axis| = 1 within kEpsUnit.
inline RotationElement rodrigues(const Vec3& axis, double angle) {
  if (std::abs(norm(axis) - 1.0) > kEpsUnit)
    throw std::invalid_argument("rodrigues: axis is not a unit vector");
  const Mat3 j = skew(axis);
  return RotationElement(Mat3::identity() + std::sin(angle) * j +
                         (1.0 - std::cos(angle)) * (j * j));
}

/// Rodrigues rotation about the direction of any non-zero vector.
inline RotationElement rotation_about(const Vec3& direction, double angle) {
  return rodrigues(normalized(direction), angle);
}

/// Axis/angle of the proper part of an element: for det -1 elements the
/// decomposition of -x is returned. The angle lies in [0, pi]; the axis is
/// meaningless when the angle is 0.
struct AxisAngle {
  Vec3 axis;
  double angle = 0.0;
  int determinant = 1;
};

inline AxisAngle axis_angle(const RotationElement& x) {
  const int det = x.determinant();
  const Mat3 r = det == 1 ? x.matrix() : -1.0 * x.matrix();
  const double c = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double theta = std::acos(c);
  AxisAngle out;
  out.angle = theta;
  out.determinant = det;
  if (theta < 1e-7) {
    out.axis = e3;
    return out;
  }
  if (std::numbers::pi - theta < 1e-4) {
    // R = 2 a a^T - Id (up to the small sine part): use the +1 eigenvector.
    const Mat3 s = 0.5 * (r + Mat3::identity());
    int best = 0;
    for (int i = 1; i < 3; ++i)
      if (s(i, i) > s(best, best)) best = i;
    Vec3 a{{s(0, best), s(1, best), s(2, best)}};
    a = normalized(a);
    // Fix the sign from the antisymmetric part when it is informative.
    const Vec3 w{{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)}};
    if (dot(w, a) < 0.0) a = -a;
    out.axis = a;
    return out;
  }
  const Vec3 w{{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)}};
  out.axis = normalized(w);
  return out;
}

/// Smallest q <= max_q with q * angle / (2 pi) an integer, i.e. the order of
/// a rotation by `angle`. Returns 0 if the angle is not such a fraction.
inline int rotation_order(double angle, int max_q = 256) {
  const double turns = angle / (2.0 * std::numbers::pi);
  for (int q = 1; q <= max_q; ++q) {
    const double x = turns * q;
    if (std::abs(x - std::round(x)) < 1e-7) return q;
  }
  return 0;
}

/// Sign-normalized representative of the line spanned by a unit vector:
/// the first coordinate that is not ~0 is made positive.
inline Vec3 line_representative(const Vec3& unit) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(unit[i]) > 1e-9) return unit[i] < 0.0 ? -unit : unit;
  }
  return unit;
}

inline bool same_line(const Vec3& a, const Vec3& b, double eps = 1e-7) {
  return std::abs(std::abs(dot(a, b)) - 1.0) < eps;
}

/// A rotation mapping unit vector `from` onto unit vector `to`.
inline RotationElement aligner(const Vec3& from, const Vec3& to) {
  const Vec3 axis = cross(from, to);
  const double s = norm(axis);
  const double c = std::clamp(dot(from, to), -1.0, 1.0);
  if (s < 1e-12) {
    if (c > 0.0) return RotationElement::identity();
    // Antiparallel: half turn about any vector orthogonal to `from`.
    Vec3 helper = std::abs(from[0]) < 0.9 ? e1 : e2;
    return rodrigues(normalized(cross(from, helper)), std::numbers::pi);
  }
  return rodrigues((1.0 / s) * axis, std::atan2(s, c));
}

/// The rotation taking the orthonormal frame built from (a, a') to the one
/// built from (b, b'). Requires a, a' (and b, b') non-collinear with equal
/// angles between them.
inline RotationElement frame_aligner(const Vec3& a, const Vec3& a2, const Vec3& b,
                                     const Vec3& b2) {
  auto frame = [](const Vec3& x, const Vec3& y) {
    const Vec3 f1 = normalized(x);
    const Vec3 f2 = normalized(y - dot(y, f1) * f1);
    const Vec3 f3 = cross(f1, f2);
    Mat3 f;
    for (int i = 0; i < 3; ++i) {
      f.m[i][0] = f1[i];
      f.m[i][1] = f2[i];
      f.m[i][2] = f3[i];
    }
    return f;
  };
  return RotationElement(frame(b, b2) * frame(a, a2).transposed());
}

}  // namespace o3clips

#endif  // O3CLIPS_ROTATION_HPP_
