#include "muskatlab/muskat.hpp"

#include <cmath>
#include <numbers>

#include "muskatlab/spectral.hpp"

namespace muskat {

namespace {
constexpr double kPi = std::numbers::pi;

void require_pair(const RealField& f, const RealField& g, const char* where) {
    require_same_grid(f, g, where);
    if (!f.is_finite() || !g.is_finite()) throw NonFiniteError(std::string(where) + ": non-finite input");
}
}  // namespace

double kernel_fraction(double a) { return a * a / (1.0 + a * a); }

double kernel_fraction_prime(double a) {
    double d = 1.0 + a * a;
    return 2.0 * a / (d * d);
}

RealField gamma_coefficient(const RealField& f) {
    RealField fx = derivative(f);
    for (double& v : fx.samples()) v = kernel_fraction(v);
    return fx;
}

RealField t_operator(const RealField& f, const RealField& g, const AlphaRule& rule) {
    require_pair(f, g, "t_operator");
    const RealField gx = derivative(g);
    RealField limit = second_derivative(g);
    {
        const RealField fx = derivative(f);
        for (int m = 0; m < limit.size(); ++m) limit[m] *= kernel_fraction(fx[m]);
    }
    RealField integral = alpha_integrate(
        [&](double a) {
            RealField tf = translate(f, a);
            RealField tg = translate(gx, a);
            RealField out = RealField::zeros(f.grid());
            const double inv = 1.0 / a;
            for (int m = 0; m < out.size(); ++m)
                out[m] = (gx[m] - tg[m]) * inv * kernel_fraction((f[m] - tf[m]) * inv);
            return out;
        },
        limit, rule);
    return integral * (-1.0 / kPi);
}

RealField quadrature_lambda(const RealField& g, const AlphaRule& rule) {
    const RealField gx = derivative(g);
    RealField integral = alpha_integrate(
        [&](double a) { return slope(gx, a); }, second_derivative(g), rule);
    return integral * (-1.0 / kPi);
}

RealField rhs_arctan(const RealField& f, const AlphaRule& rule) {
    if (!f.is_finite()) throw NonFiniteError("rhs_arctan: non-finite input");
    RealField limit = derivative(f);
    for (double& v : limit.samples()) v = std::atan(v);
    RealField integral = alpha_integrate(
        [&](double a) {
            RealField tf = translate(f, a);
            RealField out = RealField::zeros(f.grid());
            const double inv = 1.0 / a;
            for (int m = 0; m < out.size(); ++m) out[m] = std::atan((f[m] - tf[m]) * inv);
            return out;
        },
        limit, rule);
    return derivative(integral) * (1.0 / kPi);
}

SymmetrizedKernels kernels(const RealField& f, const AlphaRule& rule) {
    if (!f.is_finite()) throw NonFiniteError("kernels: non-finite input");
    SymmetrizedKernels out;
    out.nodes = rule.nodes;
    out.even_limit = gamma_coefficient(f);
    out.even_part.reserve(rule.nodes.size());
    out.odd_part.reserve(rule.nodes.size());
    out.defect.reserve(rule.nodes.size());
    for (double a : rule.nodes) {
        RealField tp = translate(f, a);   // f(x - a)
        RealField tm = translate(f, -a);  // f(x + a)
        RealField e = RealField::zeros(f.grid());
        RealField o = RealField::zeros(f.grid());
        RealField q = RealField::zeros(f.grid());
        const double inv = 1.0 / a;
        for (int m = 0; m < f.size(); ++m) {
            double fs = kernel_fraction((f[m] - tp[m]) * inv);
            double fb = kernel_fraction((f[m] - tm[m]) * inv);
            e[m] = 0.5 * (fs + fb);
            o[m] = 0.5 * (fs - fb);
            q[m] = e[m] - out.even_limit[m];
        }
        out.even_part.push_back(std::move(e));
        out.odd_part.push_back(std::move(o));
        out.defect.push_back(std::move(q));
    }
    return out;
}

RealField t_even(const RealField& f, const RealField& g, const AlphaRule& rule) {
    require_pair(f, g, "t_even");
    const RealField gx = derivative(g);
    RealField limit = second_derivative(g);
    {
        const RealField fx = derivative(f);
        for (int m = 0; m < limit.size(); ++m) limit[m] *= 2.0 * kernel_fraction(fx[m]);
    }
    RealField integral = alpha_integrate(
        [&](double a) {
            RealField tf = translate(f, a);
            RealField tfm = translate(f, -a);
            RealField tg = translate(gx, a);
            RealField tgm = translate(gx, -a);
            RealField out = RealField::zeros(f.grid());
            const double inv = 1.0 / a;
            for (int m = 0; m < out.size(); ++m) {
                double e = 0.5 * (kernel_fraction((f[m] - tf[m]) * inv) +
                                  kernel_fraction((f[m] - tfm[m]) * inv));
                out[m] = ((tgm[m] - tg[m]) * inv) * e;  // slope - slope_bar of g_x
            }
            return out;
        },
        limit, rule);
    return integral * (-0.5 / kPi);
}

RealField t_odd(const RealField& f, const RealField& g, const AlphaRule& rule) {
    require_pair(f, g, "t_odd");
    const RealField gx = derivative(g);
    RealField integral = alpha_integrate(
        [&](double a) {
            RealField tf = translate(f, a);
            RealField tfm = translate(f, -a);
            RealField tg = translate(gx, a);
            RealField out = RealField::zeros(f.grid());
            const double inv = 1.0 / a;
            for (int m = 0; m < out.size(); ++m) {
                double o = 0.5 * (kernel_fraction((f[m] - tf[m]) * inv) -
                                  kernel_fraction((f[m] - tfm[m]) * inv));
                out[m] = (gx[m] - tg[m]) * inv * o;
            }
            return out;
        },
        RealField::zeros(f.grid()), rule);
    return integral * (-1.0 / kPi);
}

RealField drift(const RealField& f, const AlphaRule& rule) {
    if (!f.is_finite()) throw NonFiniteError("drift: non-finite input");
    RealField limit = second_derivative(f);
    {
        const RealField fx = derivative(f);
        for (int m = 0; m < limit.size(); ++m) limit[m] *= -0.5 * kernel_fraction_prime(fx[m]);
    }
    RealField integral = alpha_integrate(
        [&](double a) {
            RealField tf = translate(f, a);
            RealField tfm = translate(f, -a);
            RealField out = RealField::zeros(f.grid());
            const double inv = 1.0 / a;
            for (int m = 0; m < out.size(); ++m) {
                double o = 0.5 * (kernel_fraction((f[m] - tf[m]) * inv) -
                                  kernel_fraction((f[m] - tfm[m]) * inv));
                out[m] = o * inv;
            }
            return out;
        },
        limit, rule);
    return integral * (-1.0 / kPi);
}

RealField remainder(const RealField& f, const RealField& g, const AlphaRule& rule, double eps) {
    if (!(eps > 0.0 && eps < 0.5)) throw EpsilonRangeError("remainder: eps must lie in (0, 1/2)");
    require_pair(f, g, "remainder");
    RealField r = t_operator(f, g, rule);
    r -= dealiased_product(gamma_coefficient(f), apply_lambda(g, 1.0));
    r -= dealiased_product(drift(f, rule), derivative(g));
    return r;
}

RealField commutator_lambda(const RealField& f, const RealField& g, double eps, const AlphaRule& rule) {
    if (!(eps > 0.0 && eps < 0.5)) throw EpsilonRangeError("commutator_lambda: eps must lie in (0, 1/2)");
    RealField a = apply_lambda(t_operator(f, g, rule), 1.0 + eps);
    RealField b = t_operator(f, apply_lambda(g, 1.0 + eps), rule);
    return a - b;
}

Paralinearization paralinearize(const RealField& f, double eps, const AlphaRule& rule) {
    if (!(eps > 0.0 && eps < 0.5)) throw EpsilonRangeError("paralinearize: eps must lie in (0, 1/2)");
    Paralinearization p{
        t_operator(f, f, rule),
        paraproduct(gamma_coefficient(f), apply_lambda(f, 1.0), eps),
        paraproduct(drift(f, rule), derivative(f), eps),
        RealField{},
    };
    p.para_remainder = p.rhs - p.para_gamma - p.para_drift;
    return p;
}

RealField paralinearized_rhs(const RealField& f, double eps, const AlphaRule& rule) {
    return paralinearize(f, eps, rule).rhs;
}

}  // namespace muskat
