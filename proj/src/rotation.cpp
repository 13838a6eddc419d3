#include "equitel/rotation.hpp"

#include <cmath>
#include <numbers>

namespace equitel {

namespace {
constexpr double kPi = std::numbers::pi;

// Canonical hemisphere for boundary axes: first coordinate with magnitude
// above 1e-12 must be positive.
Vec3 canonical_hemisphere(Vec3 n) {
    const double c[3] = {n.x, n.y, n.z};
    for (double v : c) {
        if (std::abs(v) > kTightTol) {
            if (v < 0) return -n;
            return n;
        }
    }
    return n;
}
}  // namespace

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
    double n = norm();
    if (n < kTightTol) throw Error("cannot normalize zero vector");
    return {x / n, y / n, z / n};
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
}

void Quaternion::normalize() {
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (n < kTightTol) throw Error("degenerate quaternion");
    w /= n;
    x /= n;
    y /= n;
    z /= n;
}

Rotation Rotation::axis_angle(const Vec3& axis, double angle) {
    Vec3 n = axis.normalized();
    // reduce to (-pi, pi]
    double a = std::fmod(angle, 2 * kPi);
    if (a > kPi) a -= 2 * kPi;
    if (a <= -kPi) a += 2 * kPi;
    if (a < 0) {
        a = -a;
        n = -n;
    }
    Rotation r;
    if (a < kTightTol) {
        r.angle_ = 0.0;
        r.axis_ = {0, 0, 1};
        return r;
    }
    r.angle_ = a;
    r.axis_ = (std::abs(a - kPi) < kTightTol) ? canonical_hemisphere(n) : n;
    if (std::abs(a - kPi) < kTightTol) r.angle_ = kPi;
    return r;
}

Rotation Rotation::from_quaternion(Quaternion q) {
    q.normalize();
    if (q.w < 0) q = {-q.w, -q.x, -q.y, -q.z};
    double s = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (s < kTightTol) return Rotation();
    double angle = 2.0 * std::atan2(s, q.w);
    return axis_angle({q.x / s, q.y / s, q.z / s}, angle);
}

Quaternion Rotation::quaternion() const {
    double h = angle_ / 2.0;
    double s = std::sin(h);
    return {std::cos(h), axis_.x * s, axis_.y * s, axis_.z * s};
}

Rotation Rotation::inverse() const {
    if (angle_ < kTightTol) return Rotation();
    return axis_angle(-axis_, angle_);
}

Vec3 Rotation::apply(const Vec3& v) const {
    // Rodrigues' formula
    double c = std::cos(angle_), s = std::sin(angle_);
    Vec3 k = axis_;
    return v * c + k.cross(v) * s + k * (k.dot(v) * (1.0 - c));
}

std::array<std::array<double, 3>, 3> Rotation::matrix() const {
    std::array<std::array<double, 3>, 3> m{};
    Vec3 cols[3] = {apply(x_axis()), apply(y_axis()), apply(z_axis())};
    for (int j = 0; j < 3; ++j) {
        m[0][j] = cols[j].x;
        m[1][j] = cols[j].y;
        m[2][j] = cols[j].z;
    }
    return m;
}

bool Rotation::approx_equal(const Rotation& o, double tol) const {
    // Equal in SO(3) iff quaternions agree up to sign.
    double d = std::abs(quaternion().dot(o.quaternion()));
    return d > 1.0 - tol;
}

Rotation compose(const Rotation& r1, const Rotation& r2) {
    return Rotation::from_quaternion(r2.quaternion() * r1.quaternion());
}

Rotation conjugate(const Rotation& g, const Rotation& r) {
    if (r.is_identity(kTightTol)) return Rotation();
    return Rotation::axis_angle(g.apply(r.axis()), r.angle());
}

double composite_angle(const Rotation& r1, const Rotation& r2) {
    double h1 = r1.angle() / 2.0, h2 = r2.angle() / 2.0;
    double c = std::cos(h1) * std::cos(h2) +
               std::sin(h1) * std::sin(h2) * r1.axis().dot(r2.axis());
    c = std::clamp(std::abs(c), 0.0, 1.0);
    return 2.0 * std::acos(c);
}

bool are_orthogonal(const Rotation& r1, const Rotation& r2, double tol) {
    return std::abs(composite_angle(r1, r2) - kPi) < tol;
}

Rotation orthogonal_partner_on_axis(const Rotation& r) {
    // For angles t1, t2 around a common axis the composite angle is
    // |t1 - t2|; the unique partner in (-pi, pi] is t1 - pi.
    return Rotation::axis_angle(r.axis(), r.angle() - kPi);
}

Rotation BallPoint::to_rotation() const {
    double n = coords.norm();
    if (n < kTightTol) return Rotation();
    if (n > kPi + 1e-6) throw Error("ball point outside radius-pi ball");
    return Rotation::axis_angle(coords, std::min(n, kPi));
}

bool BallPoint::on_boundary(double tol) const {
    return std::abs(coords.norm() - kPi) < tol;
}

double ball_distance(const BallPoint& a, const BallPoint& b) {
    // Distance in the quotient: a point at radius r in direction n is the
    // same rotation as the point at radius 2pi - r in direction -n, which on
    // the boundary is the antipodal identification and near it supplies the
    // correct continuation.
    auto wrap = [](const Vec3& p) -> Vec3 {
        double n = p.norm();
        if (n < kTightTol) return {0, 0, 6.0};  // no nearby continuation
        return p * (-(2 * kPi - n) / n);
    };
    double d = (a.coords - b.coords).norm();
    d = std::min(d, (wrap(a.coords) - b.coords).norm());
    d = std::min(d, (a.coords - wrap(b.coords)).norm());
    return d;
}

double ball_distance(const Rotation& a, const Rotation& b) {
    return ball_distance(BallPoint::from_rotation(a), BallPoint::from_rotation(b));
}

BallPoint rotate_ballpoint(const Rotation& g, const BallPoint& p) {
    Vec3 q = g.apply(p.coords);
    BallPoint out{q};
    if (out.on_boundary()) {
        Vec3 n = canonical_hemisphere(q.normalized());
        out.coords = n * kPi;
    }
    return out;
}

Vec3 random_unit_vector(Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        if (v.norm() > 1e-6) return v.normalized();
    }
}

Rotation random_rotation(Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    q.normalize();
    return Rotation::from_quaternion(q);
}

}  // namespace equitel
