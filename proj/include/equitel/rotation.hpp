#pragma once

#include <array>
#include <vector>

#include "equitel/common.hpp"

namespace equitel {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const;
    Vec3 normalized() const;
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline Vec3 x_axis() { return {1, 0, 0}; }
inline Vec3 y_axis() { return {0, 1, 0}; }
inline Vec3 z_axis() { return {0, 0, 1}; }

// Unit quaternion; scalar-first. Used internally for composition so that the
// double cover is explicit; every public operation returns canonical
// axis-angle form.
struct Quaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    Quaternion operator*(const Quaternion& o) const;
    Quaternion conjugate() const { return {w, -x, -y, -z}; }
    double dot(const Quaternion& o) const {
        return w * o.w + x * o.x + y * o.y + z * o.z;
    }
    void normalize();
};

// Element of SO(3) in canonical axis-angle form: unit axis, angle in [0, pi].
// angle 0 is stored with axis (0,0,1); angle pi is stored with the axis in
// the canonical hemisphere (first coordinate of magnitude > 1e-12 positive),
// which realises the antipodal boundary identification of the radius-pi ball.
class Rotation {
  public:
    Rotation() = default;

    static Rotation identity() { return Rotation(); }
    // Accepts any real angle and any nonzero axis; canonicalizes.
    static Rotation axis_angle(const Vec3& axis, double angle);
    static Rotation from_quaternion(Quaternion q);

    const Vec3& axis() const { return axis_; }
    double angle() const { return angle_; }
    bool is_identity(double tol = kTol) const { return angle_ < tol; }

    Quaternion quaternion() const;  // representative with w >= 0
    Rotation inverse() const;
    Vec3 apply(const Vec3& v) const;  // rotate a 3-vector
    std::array<std::array<double, 3>, 3> matrix() const;

    // Ball picture: the point angle * axis in the closed radius-pi ball.
    Vec3 ball_point() const { return axis_ * angle_; }

    bool approx_equal(const Rotation& o, double tol = kTol) const;

  private:
    Vec3 axis_{0, 0, 1};
    double angle_ = 0.0;
};

// r2 o r1 (apply r1 first, then r2), canonicalized.
Rotation compose(const Rotation& r1, const Rotation& r2);

// Conjugation g r g^{-1} = rotation of r's ball point by g.
Rotation conjugate(const Rotation& g, const Rotation& r);

// Angle of the composite r2^{-1} o r1 via the half-angle cosine formula
// c(t/2) = c(t1/2) c(t2/2) + s(t1/2) s(t2/2) n1.n2; agrees with compose().
double composite_angle(const Rotation& r1, const Rotation& r2);

// Two rotations are orthogonal when their composite r1^{-1} r2 is a rotation
// through pi. This is the Bloch-sphere shadow of trace orthogonality of
// qubit unitaries.
bool are_orthogonal(const Rotation& r1, const Rotation& r2, double tol = kTol);

// The unique rotation around +-axis(r) orthogonal to r (angle shifted by pi).
Rotation orthogonal_partner_on_axis(const Rotation& r);

// Point of the closed radius-pi ball with antipodal boundary identification.
struct BallPoint {
    Vec3 coords;

    static BallPoint from_rotation(const Rotation& r) { return {r.ball_point()}; }
    Rotation to_rotation() const;
    bool on_boundary(double tol = kTol) const;
};

// Distance respecting the antipodal identification on the boundary sphere.
double ball_distance(const BallPoint& a, const BallPoint& b);
double ball_distance(const Rotation& a, const Rotation& b);

BallPoint rotate_ballpoint(const Rotation& g, const BallPoint& p);

// Deterministic pseudo-random rotation (Haar-ish; uniform quaternion).
Rotation random_rotation(Rng& rng);
Vec3 random_unit_vector(Rng& rng);

}  // namespace equitel
