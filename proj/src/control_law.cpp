#include "catgate/control_law.hpp"

#include <cmath>
#include <functional>

#include "catgate/cat_core.hpp"

namespace catgate {

namespace {

constexpr double kPi = 3.141592653589793238462643;

double wrap_2pi(double x) {
    double r = std::fmod(x, 2.0 * kPi);
    if (r > kPi) r -= 2.0 * kPi;
    if (r < -kPi) r += 2.0 * kPi;
    return r;
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        acc += 0.5 * (f[i] + f[i + 1]) * (t[i + 1] - t[i]);
    }
    return acc;
}

// adaptive Simpson with running error control
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

std::pair<double, double> ControlPath::cyclic_defect() const {
    return {std::abs(mu.back() - mu.front()), std::abs(wrap_2pi(eta.back() - eta.front()))};
}

DriveFields omega_from_path(const ControlPath& path) {
    const std::size_t n = path.size();
    DriveFields f;
    f.ox.resize(n);
    f.oy.resize(n);
    f.oz.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double mu = path.mu[i], eta = path.eta[i];
        const double dmu = path.dmu[i], deta = path.deta[i];
        const double s2m = std::sin(2.0 * mu);
        const double sm = std::sin(mu);
        f.ox[i] = 0.25 * (deta * std::sin(eta) * s2m - 2.0 * dmu * std::cos(eta));
        f.oy[i] = 0.25 * (deta * std::cos(eta) * s2m + 2.0 * dmu * std::sin(eta));
        f.oz[i] = -0.5 * deta * sm * sm;
    }
    return f;
}

void drive_from_omega(DriveFields& fields, const PhysicalParams& params) {
    const auto [np, nm] = normalization_constants(params.alpha);
    const double aa = std::abs(params.alpha);
    const double a2 = aa * aa;
    const double chi_fac = np * nm / (a2 * (np * np - nm * nm));
    const double eps_fac = std::sqrt(np * nm) / (4.0 * aa);
    const double asym = std::exp(2.0 * a2);
    const double cx = std::cos(params.xi), sx = std::sin(params.xi);
    const std::size_t n = fields.size();
    fields.chi.resize(n);
    fields.eps.resize(n);
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        fields.chi[i] = -2.0 * fields.oz[i] * chi_fac;
        const double re = eps_fac * (fields.ox[i] * cx - asym * fields.oy[i] * sx);
        const double im = eps_fac * (fields.ox[i] * sx + asym * fields.oy[i] * cx);
        fields.eps[i] = {re, im};
        peak = std::max({peak, std::abs(fields.chi[i]), std::abs(fields.eps[i])});
    }
    const double gap = 4.0 * params.K * a2;
    fields.gap_warning = peak > 0.1 * gap;
}

std::pair<double, double> dynamic_phase(const ControlPath& path, const DriveFields& fields) {
    const std::size_t n = path.size();
    std::vector<double> integrand(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double sm = std::sin(path.mu[i]);
        const double num = 0.5 * path.deta[i] * sm * sm + fields.oz[i];
        const double cm = std::cos(path.mu[i]);
        if (std::abs(cm) < 1e-6) {
            if (std::abs(num) > 1e-6) {
                throw SingularSecant("sec(mu) singular with nonvanishing integrand");
            }
            integrand[i] = 0.0;  // numerator vanishes faster than sec diverges
        } else {
            integrand[i] = num / cm;
        }
    }
    const double phi = trapezoid(path.t, integrand);
    return {-phi, phi};
}

double geometric_theta(const ControlPath& path) {
    const std::size_t n = path.size();
    std::vector<double> integrand(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = std::sin(0.5 * path.mu[i]);
        integrand[i] = path.deta[i] * s * s;
    }
    return trapezoid(path.t, integrand);
}

ControlPath trig_path(double mu0, double eta0, double Lambda, double L, int n) {
    if (n < 2) throw std::invalid_argument("trig_path: n < 2");
    ControlPath p;
    p.L = L;
    p.t.resize(n);
    p.mu.resize(n);
    p.eta.resize(n);
    p.dmu.resize(n);
    p.deta.resize(n);
    for (int i = 0; i < n; ++i) {
        const double t = L * double(i) / double(n - 1);
        const double w = kPi * t / L;
        const double s = std::sin(w);
        p.t[i] = t;
        p.mu[i] = mu0 + Lambda * s * s;
        p.eta[i] = eta0 + kPi * (1.0 - std::cos(w));
        p.dmu[i] = Lambda * (kPi / L) * std::sin(2.0 * w);
        p.deta[i] = (kPi * kPi / L) * s;
    }
    return p;
}

double fresnel_S(double x) {
    const double ax = std::abs(x);
    double r;
    if (ax <= 2.5) {
        // sum (-1)^k x^{4k+3} / ((2k+1)! (4k+3))
        const double x2 = ax * ax;
        const double x4 = x2 * x2;
        double term = ax * x2;   // x^3, k = 0 numerator power
        double fact = 1.0;       // (2k+1)!
        r = 0.0;
        for (int k = 0; k < 40; ++k) {
            const double c = term / (fact * double(4 * k + 3));
            r += (k % 2 == 0) ? c : -c;
            if (std::abs(c) < 1e-17) break;
            term *= x4;
            fact *= double(2 * k + 2) * double(2 * k + 3);
        }
    } else {
        r = fresnel_S(2.5) +
            integrate([](double t) { return std::sin(t * t); }, 2.5, ax, 1e-12);
    }
    return x < 0 ? -r : r;
}

double fresnel_C(double x) {
    const double ax = std::abs(x);
    double r;
    if (ax <= 2.5) {
        // sum (-1)^k x^{4k+1} / ((2k)! (4k+1))
        const double x2 = ax * ax;
        const double x4 = x2 * x2;
        double term = ax;
        double fact = 1.0;  // (2k)!
        r = 0.0;
        for (int k = 0; k < 40; ++k) {
            const double c = term / (fact * double(4 * k + 1));
            r += (k % 2 == 0) ? c : -c;
            if (std::abs(c) < 1e-17) break;
            term *= x4;
            fact *= double(2 * k + 1) * double(2 * k + 2);
        }
    } else {
        r = fresnel_C(2.5) +
            integrate([](double t) { return std::cos(t * t); }, 2.5, ax, 1e-12);
    }
    return x < 0 ? -r : r;
}

double theta_fresnel(double mu0, double Lambda) {
    if (Lambda < 0.0) throw std::domain_error("theta_fresnel: Lambda < 0");
    if (Lambda == 0.0) return kPi * (1.0 - std::cos(mu0));
    const double s = std::sqrt(Lambda);
    return kPi - kPi * (std::cos(mu0 + Lambda) * fresnel_C(s) +
                        std::sin(mu0 + Lambda) * fresnel_S(s)) / s;
}

std::array<std::vector<double>, 3> zeta_path(const ControlPath& path) {
    const std::size_t n = path.size();
    std::array<std::vector<double>, 3> z;
    for (auto& v : z) v.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double sm = std::sin(path.mu[i]);
        z[0][i] = std::sin(path.eta[i]) * sm;
        z[1][i] = std::cos(path.eta[i]) * sm;
        z[2][i] = std::cos(path.mu[i]);
    }
    return z;
}

BlochTrajectories bloch_trajectories(const ControlPath& path) {
    const auto z = zeta_path(path);
    BlochTrajectories b;
    b.rplus.resize(path.size());
    b.rminus.resize(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
        b.rplus[i] = {z[0][i], z[1][i], z[2][i]};
        b.rminus[i] = {-z[0][i], -z[1][i], -z[2][i]};
    }
    return b;
}

}  // namespace catgate
