#include "fpzeta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace fpzeta {

namespace {

struct GaussRule {
    std::vector<Real> nodes;    // on [-1, 1], ascending
    std::vector<Real> weights;
};

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(int n, const Real& x, Real& p, Real& dp) {
    const prec_t bits = x.prec();
    Real p0(1, bits), p1 = x;
    for (int k = 2; k <= n; ++k) {
        Real p2 = (Real(2 * k - 1, bits) * x * p1 - Real(k - 1, bits) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = Real(n, bits) * (x * p1 - p0) / (x * x - 1);
}

GaussRule build_rule(int order, prec_t bits) {
    GaussRule rule;
    rule.nodes.assign(order, Real(bits));
    rule.weights.assign(order, Real(bits));
    const Real eps = Real(1, bits) / pow_ui(Real(2, bits), bits - 6);
    for (int i = 0; i < (order + 1) / 2; ++i) {
        double seed = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        Real x(seed, bits);
        Real p(bits), dp(bits);
        for (int it = 0; it < 64; ++it) {
            legendre(order, x, p, dp);
            Real dx = p / dp;
            x -= dx;
            if (abs(dx) < eps) break;
        }
        legendre(order, x, p, dp);
        Real w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = -x;          // seeds give descending positives
        rule.weights[i] = w;
        rule.nodes[order - 1 - i] = x;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = Real(0, bits);
    return rule;
}

const GaussRule& gauss_rule(int order, prec_t bits) {
    static std::shared_mutex mu;
    static std::map<std::pair<int, prec_t>, GaussRule> cache;
    const auto key = std::make_pair(order, bits);
    {
        std::shared_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::unique_lock lock(mu);
    return cache.try_emplace(key, build_rule(order, bits)).first->second;
}

struct Panel {
    Real a, b;
    Real value, err;
    bool splittable = true;
};

Panel eval_panel(const Integrand& f, const Real& a, const Real& b, int order,
                 prec_t bits, long& evaluations) {
    const GaussRule& full = gauss_rule(order, bits);
    const GaussRule& half = gauss_rule(std::max(5, (order + 1) / 2), bits);
    Real mid = (a + b) / 2;
    Real rad = (b - a) / 2;
    Real v_full(bits), v_half(bits);
    for (size_t i = 0; i < full.nodes.size(); ++i)
        v_full += full.weights[i] * f(mid + rad * full.nodes[i]);
    for (size_t i = 0; i < half.nodes.size(); ++i)
        v_half += half.weights[i] * f(mid + rad * half.nodes[i]);
    evaluations += static_cast<long>(full.nodes.size() + half.nodes.size());
    Panel p;
    p.a = a;
    p.b = b;
    p.value = rad * v_full;
    p.err = abs(rad * (v_full - v_half));
    return p;
}

// Refine worst-first until the summed estimates fit the budget. Panels stay
// sorted by left endpoint so the final reduction order is fixed.
void refine(const Integrand& f, std::vector<Panel>& panels, const Real& budget,
            const QuadConfig& cfg, prec_t bits, long& evaluations) {
    int splits = 0;
    for (;;) {
        Real total(bits);
        for (const Panel& p : panels) total += p.err;
        if (total <= budget) return;

        size_t worst = panels.size();
        for (size_t i = 0; i < panels.size(); ++i) {
            if (!panels[i].splittable) continue;
            if (worst == panels.size() || panels[i].err > panels[worst].err) worst = i;
        }
        const bool exhausted = worst == panels.size() || splits >= cfg.max_subdivisions;
        if (exhausted) {
            QuadResult best;
            best.value = Real(bits);
            best.error_estimate = total;
            best.evaluations = evaluations;
            for (const Panel& p : panels) best.value += p.value;
            best.truncation_point = panels.back().b;
            throw ToleranceNotReached("quadrature: max_subdivisions exhausted", best);
        }

        Panel target = panels[worst];
        Real mid = (target.a + target.b) / 2;
        if (!(mid > target.a) || !(mid < target.b)) {
            panels[worst].splittable = false;
            continue;
        }
        Panel left = eval_panel(f, target.a, mid, cfg.panel_order, bits, evaluations);
        Panel right = eval_panel(f, mid, target.b, cfg.panel_order, bits, evaluations);
        panels[worst] = left;
        panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1, right);
        ++splits;
    }
}

// Panels graded toward 0 with ratio 1/4 covering (sliver, b0]. Stops once a
// panel's contribution falls below `thresh` twice in a row; the dropped
// sliver is bounded by the last contribution (the grading ratio keeps the
// remainder geometric with ratio < 1/2).
void grade_origin(const Integrand& f, const Real& b0, const Real& thresh,
                  const QuadConfig& cfg, prec_t bits, std::vector<Panel>& panels,
                  Real& sliver_bound, long& evaluations) {
    Real hi = b0;
    int small_in_a_row = 0;
    std::vector<Panel> graded;
    for (int j = 0; j < 2000; ++j) {
        Real lo = hi / 4;
        Panel p = eval_panel(f, lo, hi, cfg.panel_order, bits, evaluations);
        graded.push_back(p);
        Real size = abs(p.value) + p.err;
        small_in_a_row = size < thresh ? small_in_a_row + 1 : 0;
        if (j >= 3 && small_in_a_row >= 2) {
            sliver_bound = size;
            break;
        }
        hi = lo;
        if (!(hi > 0)) break;
    }
    panels.insert(panels.begin(), graded.rbegin(), graded.rend());
}

QuadResult assemble(std::vector<Panel>& panels, const Real& extra_err, prec_t bits,
                    int digits, long evaluations, const Real& truncation) {
    QuadResult r;
    r.value = Real(bits);
    r.error_estimate = extra_err;
    for (const Panel& p : panels) {
        r.value += p.value;
        r.error_estimate += p.err;
    }
    // rounding floor keeps the estimate honest when panels agree exactly
    r.error_estimate += abs(r.value) * Real::pow10(-digits, bits);
    r.evaluations = evaluations;
    r.truncation_point = truncation;
    return r;
}

void validate(const QuadConfig& cfg) {
    if (!(cfg.target_abs_tol > 0))
        throw std::invalid_argument("quadrature: target_abs_tol must be positive");
    if (cfg.panel_order < 5)
        throw std::invalid_argument("quadrature: panel_order must be >= 5");
}

}  // namespace

namespace detail {

double solve_truncation(const DecayHint& hint, double a, double tol) {
    const double target = tol / (10.0 * hint.scale);
    auto logw = [&](double t) { return hint.log_weight ? 1.0 + std::log(t) : 1.0; };
    if (hint.kind == DecayHint::Kind::exponential) {
        double t = std::max({a + 2.0, 15.0});
        for (int i = 0; i < 8; ++i) {
            t = -std::log(target) - hint.power * std::log(t) + std::log(logw(t));
            t = std::max({t, a + 2.0, 10.0});
        }
        return t;
    }
    const double q = hint.power;
    if (q <= 1.0)
        throw std::invalid_argument("quadrature: algebraic decay needs power > 1");
    double t = std::max(a + 2.0, 15.0);
    for (int i = 0; i < 8; ++i) {
        double l = hint.log_weight ? std::log(t) + 1.0 / (q - 1.0) : 1.0;
        t = std::pow(l / ((q - 1.0) * target), 1.0 / (q - 1.0));
        t = std::max({t, a + 2.0, 10.0});
    }
    return t;
}

}  // namespace detail

QuadResult integrate_finite(const Integrand& f, const Real& a, const Real& b,
                            const QuadConfig& cfg) {
    validate(cfg);
    if (!(a < b)) throw std::invalid_argument("integrate_finite: requires a < b");
    const prec_t bits = bits_for_digits(cfg.digits);
    long evaluations = 0;
    std::vector<Panel> panels;
    Real sliver(bits);
    Real tol = cfg.target_abs_tol.rounded_to(bits);

    if (cfg.log_graded_origin && a.is_zero()) {
        Real b0 = min(b, Real(1, bits));
        if (b0 < b) panels.push_back(eval_panel(f, b0, b, cfg.panel_order, bits, evaluations));
        grade_origin(f, b0, tol / 20, cfg, bits, panels, sliver, evaluations);
    } else {
        panels.push_back(eval_panel(f, a, b, cfg.panel_order, bits, evaluations));
    }
    refine(f, panels, tol * Real(0.75, bits), cfg, bits, evaluations);
    return assemble(panels, sliver, bits, cfg.digits, evaluations, b);
}

QuadResult integrate_semi_infinite(const Integrand& f, const Real& a,
                                   const QuadConfig& cfg) {
    validate(cfg);
    if (a < 0) throw std::domain_error("integrate_semi_infinite: requires a >= 0");
    const prec_t bits = bits_for_digits(cfg.digits);
    Real tol = cfg.target_abs_tol.rounded_to(bits);

    const double t_trunc = detail::solve_truncation(cfg.decay, a.to_double(),
                                                    cfg.target_abs_tol.to_double());
    Real T(t_trunc, bits);
    Real tail(bits);
    {
        // re-evaluate the tail bound at the chosen T
        const double lw = cfg.decay.log_weight ? 1.0 + std::log(t_trunc) : 1.0;
        double bound;
        if (cfg.decay.kind == DecayHint::Kind::exponential)
            bound = cfg.decay.scale * std::exp(-t_trunc) *
                    std::pow(t_trunc, -cfg.decay.power) * lw;
        else
            bound = cfg.decay.scale * std::pow(t_trunc, 1.0 - cfg.decay.power) /
                    (cfg.decay.power - 1.0) *
                    (cfg.decay.log_weight ? std::log(t_trunc) + 1.0 / (cfg.decay.power - 1.0)
                                          : 1.0);
        tail = Real(bound, bits);
    }

    long evaluations = 0;
    std::vector<Panel> panels;
    Real sliver(bits);

    Real lo = a.rounded_to(bits);
    if (cfg.log_graded_origin && a.is_zero()) {
        grade_origin(f, Real(1, bits), tol / 20, cfg, bits, panels, sliver, evaluations);
        lo = Real(1, bits);
    }
    Real width(1, bits);
    while (lo + width < T) {
        panels.push_back(eval_panel(f, lo, lo + width, cfg.panel_order, bits, evaluations));
        lo += width;
        width *= 2;
    }
    if (lo < T) panels.push_back(eval_panel(f, lo, T, cfg.panel_order, bits, evaluations));

    refine(f, panels, tol * Real(0.75, bits), cfg, bits, evaluations);
    return assemble(panels, sliver + tail, bits, cfg.digits, evaluations, T);
}

}  // namespace fpzeta
