#include "toro/frenet.hpp"

#include <cmath>
#include <sstream>

namespace toro {

namespace {

void require_order(int have, int need, const char* who) {
    if (have < need) {
        std::ostringstream msg;
        msg << who << " needs jets of order >= " << need;
        throw InvalidArgument(msg.str());
    }
}

void check_regular(double speed, const Guards& guards, const CurveScale& scale) {
    if (!(speed > guards.eps_reg * scale.speed)) {
        std::ostringstream msg;
        msg << "non-regular point: speed " << speed;
        throw RegularityError(msg.str());
    }
}

void check_not_flat(double cross_norm, double speed, const Guards& guards,
                    const CurveScale& scale) {
    if (!(cross_norm > guards.eps_flat * speed * speed * speed * scale.extent)) {
        std::ostringstream msg;
        msg << "flat point: |g' x g''| = " << cross_norm << ", frame undefined";
        throw FlatnessError(msg.str());
    }
}

} // namespace

FrenetData frenet_general(const Jet3& jets, const Guards& guards, const CurveScale& scale) {
    require_order(jets.order(), 3, "frenet_general");
    const Vec3 d1{jets.x[1], jets.y[1], jets.z[1]};
    const Vec3 d2{jets.x[2], jets.y[2], jets.z[2]};
    const Vec3 d3{jets.x[3], jets.y[3], jets.z[3]};

    FrenetData out;
    out.speed = norm(d1);
    check_regular(out.speed, guards, scale);

    const Vec3 cr = cross(d1, d2);
    const double cr_norm = norm(cr);
    check_not_flat(cr_norm, out.speed, guards, scale);

    out.tangent = d1 / out.speed;
    out.binormal = cr / cr_norm;
    const Vec3 n_raw = cross(cr, d1);
    out.normal = n_raw / norm(n_raw);
    out.kappa = cr_norm / (out.speed * out.speed * out.speed);
    out.tau = triple(d1, d2, d3) / (cr_norm * cr_norm);
    return out;
}

Jet kappa_jet_general(const Jet3& jets) {
    require_order(jets.order(), 3, "kappa_jet_general");
    const int n = jets.order() - 2;
    Jet d1x = jets.x.derivative().truncated(n);
    Jet d1y = jets.y.derivative().truncated(n);
    Jet d1z = jets.z.derivative().truncated(n);
    Jet d2x = jets.x.derivative().derivative();
    Jet d2y = jets.y.derivative().derivative();
    Jet d2z = jets.z.derivative().derivative();

    Jet cx = d1y * d2z - d1z * d2y;
    Jet cy = d1z * d2x - d1x * d2z;
    Jet cz = d1x * d2y - d1y * d2x;
    Jet cross_norm = sqrt(cx * cx + cy * cy + cz * cz);
    Jet speed = sqrt(d1x * d1x + d1y * d1y + d1z * d1z);
    return cross_norm / (speed * speed * speed);
}

double kappa_cylindrical(const Jet2& base_jet, const Jet& f_jet, const Guards& guards,
                         const CurveScale& scale) {
    require_order(base_jet.order(), 2, "kappa_cylindrical");
    require_order(f_jet.order(), 2, "kappa_cylindrical");
    const Vec2 a1{base_jet.x[1], base_jet.y[1]};
    const Vec2 a2{base_jet.x[2], base_jet.y[2]};
    const double fd1 = f_jet[1];
    const double fd2 = f_jet[2];

    const double speed = std::sqrt(dot(a1, a1) + fd1 * fd1);
    check_regular(speed, guards, scale);

    const double turn = dot(a2, j_rotate(a1));
    const Vec2 w = fd2 * a1 - fd1 * a2;
    const double numerator = std::sqrt(turn * turn + dot(w, w));
    return numerator / (speed * speed * speed);
}

double tau_cylindrical(const Jet2& base_jet, const Jet& f_jet, const Guards& guards,
                       const CurveScale& scale) {
    require_order(base_jet.order(), 3, "tau_cylindrical");
    require_order(f_jet.order(), 3, "tau_cylindrical");
    const Vec2 a1{base_jet.x[1], base_jet.y[1]};
    const Vec2 a2{base_jet.x[2], base_jet.y[2]};
    const Vec2 a3{base_jet.x[3], base_jet.y[3]};
    const double fd1 = f_jet[1];
    const double fd2 = f_jet[2];
    const double fd3 = f_jet[3];

    const double speed = std::sqrt(dot(a1, a1) + fd1 * fd1);
    const double turn = dot(a2, j_rotate(a1));
    const Vec2 w = fd2 * a1 - fd1 * a2;
    const double denom = turn * turn + dot(w, w);
    check_not_flat(std::sqrt(denom), speed, guards, scale);

    const double numerator =
        fd3 * turn + fd2 * dot(-j_rotate(a1), a3) + fd1 * dot(j_rotate(a2), a3);
    return numerator / denom;
}

FrenetData frame_cylindrical(const Jet2& base_jet, const Jet& f_jet, double K, double s_dot,
                             const Guards& guards, const CurveScale& scale) {
    require_order(base_jet.order(), 3, "frame_cylindrical");
    require_order(f_jet.order(), 3, "frame_cylindrical");
    const Vec2 a1{base_jet.x[1], base_jet.y[1]};
    const Vec2 a2{base_jet.x[2], base_jet.y[2]};
    const double fd1 = f_jet[1];
    const double fd2 = f_jet[2];

    const double p = s_dot * s_dot + fd1 * fd1;  // s'^2 + f'^2
    const double root_p = std::sqrt(p);
    check_regular(root_p, guards, scale);

    const double turn = s_dot * s_dot * s_dot * K;  // s'^3 K = <a'', Ja'>
    const Vec2 w = fd2 * a1 - fd1 * a2;
    const double q = turn * turn + dot(w, w);  // |g' x g''|^2
    const double root_q = std::sqrt(q);
    check_not_flat(root_q, root_p, guards, scale);

    // d/dt(s'^2 + f'^2) and d/dt(s'^2 / 2)
    const double half_p_prime = dot(a2, a1) + fd1 * fd2;
    const double half_s2_prime = dot(a2, a1);

    FrenetData out;
    out.speed = root_p;
    out.tangent = embed(a1, fd1) / root_p;
    out.binormal = embed(-j_rotate(w), turn) / root_q;
    const Vec2 n_plane = p * a2 - half_p_prime * a1;
    const double n_height = fd2 * s_dot * s_dot - fd1 * half_s2_prime;
    out.normal = embed(n_plane, n_height) / (root_p * root_q);
    out.kappa = kappa_cylindrical(base_jet, f_jet, guards, scale);
    out.tau = tau_cylindrical(base_jet, f_jet, guards, scale);
    return out;
}

} // namespace toro
