#pragma once

#include <cmath>
#include <stdexcept>

namespace unlock {

struct Vec3 {
    double x{0.0}, y{0.0}, z{0.0};

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

inline bool finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Unit vector on the sphere. Construction checks |v| = 1 up to 1e-12;
/// use UnitVec3::of() to normalize an arbitrary nonzero vector.
class UnitVec3 {
  public:
    explicit UnitVec3(const Vec3& v) : v_(v) {
        if (!finite(v) || std::abs(norm(v) - 1.0) > 1e-12)
            throw std::invalid_argument("UnitVec3: vector is not unit length");
    }
    UnitVec3(double x, double y, double z) : UnitVec3(Vec3{x, y, z}) {}

    static UnitVec3 of(const Vec3& v) {
        const double n = norm(v);
        if (!(n > 1e-14)) throw std::invalid_argument("UnitVec3::of: zero-length vector");
        return UnitVec3(v / n, unchecked_tag{});
    }

    const Vec3& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    UnitVec3 operator-() const { return UnitVec3(-v_, unchecked_tag{}); }

  private:
    struct unchecked_tag {};
    UnitVec3(const Vec3& v, unchecked_tag) : v_(v) {}
    Vec3 v_;
};

inline double dot(const UnitVec3& a, const UnitVec3& b) { return dot(a.vec(), b.vec()); }
inline double dot(const UnitVec3& a, const Vec3& b) { return dot(a.vec(), b); }
inline double dot(const Vec3& a, const UnitVec3& b) { return dot(a, b.vec()); }

/// Proper rotation of R^3, stored as a 3x3 matrix (determinant +1).
class Rotation {
  public:
    Rotation() {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m_[i][j] = (i == j) ? 1.0 : 0.0;
    }

    /// Rodrigues rotation by `angle` radians about `axis`, counterclockwise
    /// as seen from the tip of the axis.
    Rotation(const UnitVec3& axis, double angle) {
        const Vec3 k = axis.vec();
        const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
        m_[0][0] = c + k.x * k.x * t;
        m_[0][1] = k.x * k.y * t - k.z * s;
        m_[0][2] = k.x * k.z * t + k.y * s;
        m_[1][0] = k.y * k.x * t + k.z * s;
        m_[1][1] = c + k.y * k.y * t;
        m_[1][2] = k.y * k.z * t - k.x * s;
        m_[2][0] = k.z * k.x * t - k.y * s;
        m_[2][1] = k.z * k.y * t + k.x * s;
        m_[2][2] = c + k.z * k.z * t;
    }

    Vec3 operator*(const Vec3& v) const {
        return {m_[0][0] * v.x + m_[0][1] * v.y + m_[0][2] * v.z,
                m_[1][0] * v.x + m_[1][1] * v.y + m_[1][2] * v.z,
                m_[2][0] * v.x + m_[2][1] * v.y + m_[2][2] * v.z};
    }

    UnitVec3 operator*(const UnitVec3& u) const { return UnitVec3::of(*this * u.vec()); }

    Rotation operator*(const Rotation& o) const {
        Rotation r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m_[i][k] * o.m_[k][j];
                r.m_[i][j] = s;
            }
        return r;
    }

    Rotation transposed() const {
        Rotation r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m_[i][j] = m_[j][i];
        return r;
    }

  private:
    double m_[3][3];
};

}  // namespace unlock
