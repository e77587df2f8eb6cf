#include "collatz/variational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace collatz {

namespace {

struct Point {
    double x, y;
};

void require_params(double a, double b) {
    if (!(a > 0.0 && a <= 1.0 && b > 0.0 && b <= 1.0))
        throw std::invalid_argument("parameters a, b must lie in (0, 1]");
}

double z_of(double x, double y, double a, double b) { return 1.0 - a * x - b * y; }

bool interior(double x, double y, double a, double b) {
    return x > 0.0 && y > 0.0 && z_of(x, y, a, b) > 0.0;
}

void require_interior(double x, double y, double a, double b) {
    if (!interior(x, y, a, b))
        throw std::domain_error("point is not strictly interior to the triangle");
}

}  // namespace

double phi(double x, double y, double a, double b) {
    require_params(a, b);
    require_interior(x, y, a, b);
    double z = z_of(x, y, a, b);
    double s = x + y + z;
    return s * std::log(s) - x * std::log(x) - y * std::log(y) - z * std::log(z);
}

std::pair<double, double> phi_grad(double x, double y, double a, double b) {
    require_params(a, b);
    require_interior(x, y, a, b);
    double z = z_of(x, y, a, b);
    double ls = std::log(x + y + z);
    double lz = std::log(z);
    return {(1.0 - a) * ls - std::log(x) + a * lz, (1.0 - b) * ls - std::log(y) + b * lz};
}

Hessian phi_hessian(double x, double y, double a, double b) {
    require_params(a, b);
    require_interior(x, y, a, b);
    double z = z_of(x, y, a, b);
    double s = x + y + z;
    Hessian h;
    h.dxx = (1.0 - a) * (1.0 - a) / s - 1.0 / x - a * a / z;
    h.dxy = (1.0 - a) * (1.0 - b) / s - a * b / z;
    h.dyy = (1.0 - b) * (1.0 - b) / s - 1.0 / y - b * b / z;
    return h;
}

namespace {

double residual_norm(std::pair<double, double> g) {
    return std::max(std::abs(g.first), std::abs(g.second));
}

StationaryPoint newton_solve(Point start, double a, double b, double tol, int max_iterations) {
    Point p = start;
    std::vector<Point> trace{p};
    auto g = phi_grad(p.x, p.y, a, b);
    double res = residual_norm(g);

    int it = 0;
    for (; it < max_iterations && res > tol; ++it) {
        Hessian h = phi_hessian(p.x, p.y, a, b);
        double det = h.dxx * h.dyy - h.dxy * h.dxy;
        if (det == 0.0) break;
        double dx = -(g.first * h.dyy - g.second * h.dxy) / det;
        double dy = -(h.dxx * g.second - h.dxy * g.first) / det;

        // keep the iterate strictly interior, then backtrack on the residual
        double lambda = 1.0;
        while (lambda > 1e-18 && !interior(p.x + lambda * dx, p.y + lambda * dy, a, b))
            lambda *= 0.5;
        bool accepted = false;
        for (int cut = 0; cut < 60 && lambda > 1e-18; ++cut, lambda *= 0.5) {
            Point cand{p.x + lambda * dx, p.y + lambda * dy};
            if (!interior(cand.x, cand.y, a, b)) continue;
            auto gc = phi_grad(cand.x, cand.y, a, b);
            double rc = residual_norm(gc);
            if (rc < res) {
                p = cand;
                g = gc;
                res = rc;
                trace.push_back(p);
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }

    if (res > tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "stationary solve did not converge: residual " << res << " after " << it
            << " iterations; trace:";
        for (const Point& q : trace) msg << " (" << q.x << ", " << q.y << ")";
        throw std::runtime_error(msg.str());
    }

    StationaryPoint sp;
    sp.x0 = p.x;
    sp.y0 = p.y;
    sp.z0 = z_of(p.x, p.y, a, b);
    sp.w0 = kBudgetSlope * phi(p.x, p.y, a, b);
    sp.residual = res;
    sp.a = a;
    sp.b = b;
    sp.iterations = it;
    return sp;
}

}  // namespace

StationaryPoint solve_stationary(double a, double b, double tol, int max_iterations) {
    require_params(a, b);
    // centroid of the triangle (0,0), (1/a,0), (0,1/b): z there is exactly 1/3
    return newton_solve({1.0 / (3.0 * a), 1.0 / (3.0 * b)}, a, b, tol, max_iterations);
}

StationaryPoint solve_stationary_from(double x_start, double y_start, double a, double b,
                                      double tol, int max_iterations) {
    require_params(a, b);
    require_interior(x_start, y_start, a, b);
    return newton_solve({x_start, y_start}, a, b, tol, max_iterations);
}

double counting_exponent(double a, double b) { return solve_stationary(a, b).w0; }

}  // namespace collatz
