#pragma once

#include <array>
#include <cmath>

namespace gaussint {

/// Cartesian 3-vector. All lengths are in bohr throughout the library.
struct Vec3 {
    std::array<double, 3> c{0.0, 0.0, 0.0};

    Vec3() = default;
    Vec3(double x, double y, double z) : c{x, y, z} {}

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    double x() const { return c[0]; }
    double y() const { return c[1]; }
    double z() const { return c[2]; }

    Vec3& operator+=(const Vec3& o) {
        c[0] += o.c[0];
        c[1] += o.c[1];
        c[2] += o.c[2];
        return *this;
    }
    Vec3& operator-=(const Vec3& o) {
        c[0] -= o.c[0];
        c[1] -= o.c[1];
        c[2] -= o.c[2];
        return *this;
    }
    Vec3& operator*=(double s) {
        c[0] *= s;
        c[1] *= s;
        c[2] *= s;
        return *this;
    }

    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator*(Vec3 a, double s) { return a *= s; }
    friend Vec3 operator*(double s, Vec3 a) { return a *= s; }
    friend Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }

    friend bool operator==(const Vec3& a, const Vec3& b) { return a.c == b.c; }

    double dot(const Vec3& o) const { return c[0] * o.c[0] + c[1] * o.c[1] + c[2] * o.c[2]; }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
};

}  // namespace gaussint
