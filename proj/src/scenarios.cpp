#include "dsq/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dsq {

DickeState initial_state(ScenarioKind kind, double state_alpha) {
    if (state_alpha < 0.0 || state_alpha > 1.0)
        throw DomainError("initial_state: alpha must lie in [0, 1]");
    CMatrix m(4);
    switch (kind) {
        case ScenarioKind::superposition:
            m(1, 1) = m(2, 2) = m(1, 2) = m(2, 1) = 0.5;
            break;
        case ScenarioKind::entangled: {
            const double a = state_alpha;
            m(0, 0) = a;
            m(3, 3) = 1.0 - a;
            m(0, 3) = m(3, 0) = std::sqrt(a * (1.0 - a));
            break;
        }
        case ScenarioKind::mixed:
            m(0, 0) = state_alpha / 3.0;
            m(1, 1) = 2.0 / 3.0;
            m(3, 3) = (1.0 - state_alpha) / 3.0;
            break;
    }
    return DickeState(DensityMatrix(m));
}

DickeState initial_state(const ScenarioConfig& cfg) { return initial_state(cfg.kind, cfg.state_alpha); }

namespace {

double xlog2x(double x) { return x > 1e-14 ? x * std::log2(x) : 0.0; }

// Binary entropy of {p, 1-p} in bits.
double h2(double p) { return -xlog2x(p) - xlog2x(1.0 - p); }

double clamp_tiny(double q) { return std::abs(q) < 1e-9 ? 0.0 : q; }

constexpr double kRankTol = 1e-7;  // mirrors extract_channel's fallback

void require_subcritical(const RateSet& r) {
    if (!(std::abs(r.big_gamma) < r.gamma))
        throw DomainError("closed-form correlations require |Gamma| < gamma");
}

}  // namespace

CaseAResult caseA_correlations(double t, const RateSet& r) {
    require_subcritical(r);
    if (t < 0.0) throw DomainError("caseA_correlations: t must be >= 0");
    const double g = r.gamma, G = r.big_gamma, eta = r.eta;
    const double eg = std::exp(-g * t);
    const double e2g = eg * eg;
    const double ch = std::cosh(G * t), sh = std::sinh(G * t);
    const double c2e = std::cos(2.0 * eta * t), s2e = std::sin(2.0 * eta * t);

    CaseAScalars s{};
    s.kappa_plus = ch + c2e;
    s.kappa_minus = ch - c2e;
    s.beta_plus = 0.5 * eg * s.kappa_plus;
    s.beta_minus = 0.5 * eg * s.kappa_minus;
    s.xi_plus = 1.0 - s.beta_minus;
    s.xi_minus = 1.0 - s.beta_plus;
    s.zeta = {0.0, 1.0 - eg * ch, eg * ch, 0.0};

    // rho_B = diag(beta_-, xi_+). The transverse channel block contributes
    // sinh^2 + sin^2 (its L block is a scaled rotation), the longitudinal
    // one kappa_-^2 kappa_+^2 / (2 e^{gt} - kappa_-)^2 times S2.
    const double denom = 2.0 / eg - s.kappa_minus;  // 2 e^{gt} - kappa_-
    double c2 = 0.0;
    if (std::min(s.beta_minus, s.xi_plus) >= kRankTol) {
        const double lam_xy = e2g * (sh * sh + s2e * s2e);
        const double lam_z = e2g * s.kappa_minus * s.kappa_plus * s.kappa_plus / denom;
        c2 = std::max(lam_xy, lam_z);
    }
    const double s_ab = -xlog2x(s.zeta[1]) - xlog2x(s.zeta[2]);
    const double q = h2(s.beta_plus) + h2(s.beta_minus) - s_ab - c2;
    return {c2, clamp_tiny(q), s};
}

AuxScalars derive_aux_scalars(const RateSet& r, double t) {
    require_subcritical(r);
    const double g = r.gamma, G = r.big_gamma;
    const double z = std::cosh(G * t) - std::exp(-g * t);
    const double delta = (g * g + G * G) * z - 2.0 * g * G * std::sinh(G * t);

    // Matching identities against the master-equation solution for
    // rho(0) = |e><e|:
    //   rho_ss - rho_aa = (2 e^{-gt}/(g^2-G^2)) (2 g G Z - (g^2+G^2) sinh(G t))
    //   rho_ss + rho_aa = (2 e^{-gt}/(g^2-G^2)) delta
    CMatrix e_state(4);
    e_state(0, 0) = 1.0;
    const DickeState evolved =
        evolve_closed_form(DickeState(DensityMatrix(e_state)), r, t);
    const double ss = evolved.rho().mat()(1, 1).real();
    const double aa = evolved.rho().mat()(2, 2).real();
    const double big_g2 = g * g - G * G;
    const double pref = 2.0 * std::exp(-g * t) / big_g2;
    const double lhs_diff = ss - aa;
    const double rhs_diff = pref * (2.0 * g * G * z - (g * g + G * G) * std::sinh(G * t));
    const double lhs_sum = ss + aa;
    const double rhs_sum = pref * delta;
    if (std::abs(lhs_diff - rhs_diff) > 1e-10 || std::abs(lhs_sum - rhs_sum) > 1e-10)
        throw NumericalError(
            "derive_aux_scalars: matching identities violated (residuals " +
            std::to_string(std::abs(lhs_diff - rhs_diff)) + ", " +
            std::to_string(std::abs(lhs_sum - rhs_sum)) + "); re-derive Z and delta");
    return {delta, z};
}

namespace {

struct DiagonalCaseInputs {
    double pop_e;    // rho_ee
    double pop_s;    // rho_ss
    double pop_a;    // rho_aa
    double coh_eg;   // rho_eg (real in both cases)
};

// C2 and Q for states that are diagonal in the Dicke basis except for a
// real e-g coherence. Both reduced states equal diag(P, 1-P) with
// P = rho_ee + (rho_ss + rho_aa)/2, and the channel's L matrix is diagonal
// with transverse entries (w +- c)/sqrt(P(1-P)) and longitudinal entry
// (rho_ee - P^2)/(P(1-P)), w = (rho_ss - rho_aa)/2, c = rho_eg.
CaseResult diagonal_case_correlations(const DiagonalCaseInputs& in) {
    const double e = in.pop_e;
    const double m = 0.5 * (in.pop_s + in.pop_a);
    const double w = 0.5 * (in.pop_s - in.pop_a);
    const double c = in.coh_eg;
    const double gg = 1.0 - e - in.pop_s - in.pop_a;
    const double p = e + m;

    double c2 = 0.0;
    if (std::min(p, 1.0 - p) >= kRankTol) {
        const double pq = p * (1.0 - p);
        const double l11 = (w + c) / std::sqrt(pq);
        const double l22 = (w - c) / std::sqrt(pq);
        const double l33 = (e - p * p) / pq;
        const double s2 = 4.0 * pq;
        c2 = s2 * std::max({l11 * l11, l22 * l22, l33 * l33});
    }

    // Eigenvalues: rho_ss, rho_aa, and the e-g block pair.
    const double disc = std::sqrt((e - gg) * (e - gg) + 4.0 * c * c);
    const std::array<double, 4> zeta = {0.5 * (e + gg + disc), 0.5 * (e + gg - disc), in.pop_s,
                                        in.pop_a};
    double s_ab = 0.0;
    for (double z : zeta) s_ab -= xlog2x(z);
    const double q = 2.0 * h2(p) - s_ab - c2;
    return {c2, clamp_tiny(q)};
}

}  // namespace

CaseResult caseB_correlations(double t, const RateSet& r, double state_alpha) {
    require_subcritical(r);
    if (t < 0.0) throw DomainError("caseB_correlations: t must be >= 0");
    if (state_alpha < 0.0 || state_alpha > 1.0)
        throw DomainError("caseB_correlations: alpha must lie in [0, 1]");
    const double g = r.gamma, G = r.big_gamma, a = state_alpha;
    const AuxScalars aux = derive_aux_scalars(r, t);
    const double big_g2 = g * g - G * G;
    const double eg = std::exp(-g * t);
    const double feed = eg / big_g2;
    const double rr = 2.0 * g * G * aux.z_aux - (g * g + G * G) * std::sinh(G * t);

    DiagonalCaseInputs in{};
    in.pop_e = a * eg * eg;
    in.pop_s = a * feed * (aux.delta_aux + rr);
    in.pop_a = a * feed * (aux.delta_aux - rr);
    in.coh_eg = std::sqrt(a * (1.0 - a)) * eg;
    return diagonal_case_correlations(in);
}

CaseResult caseC_correlations(double t, const RateSet& r, double state_alpha) {
    require_subcritical(r);
    if (t < 0.0) throw DomainError("caseC_correlations: t must be >= 0");
    if (state_alpha < 0.0 || state_alpha > 1.0)
        throw DomainError("caseC_correlations: alpha must lie in [0, 1]");
    const double g = r.gamma, G = r.big_gamma, a = state_alpha;
    const AuxScalars aux = derive_aux_scalars(r, t);
    const double big_g2 = g * g - G * G;
    const double eg = std::exp(-g * t);
    const double feed = eg / big_g2;
    const double rr = 2.0 * g * G * aux.z_aux - (g * g + G * G) * std::sinh(G * t);

    DiagonalCaseInputs in{};
    in.pop_e = (a / 3.0) * eg * eg;
    in.pop_s = (2.0 / 3.0) * std::exp(-(g + G) * t) + (a / 3.0) * feed * (aux.delta_aux + rr);
    in.pop_a = (a / 3.0) * feed * (aux.delta_aux - rr);
    in.coh_eg = 0.0;
    return diagonal_case_correlations(in);
}

namespace {

CaseResult closed_form_for(ScenarioKind kind, double t, const RateSet& r, double alpha) {
    switch (kind) {
        case ScenarioKind::superposition: {
            const CaseAResult res = caseA_correlations(t, r);
            return {res.c2, res.q};
        }
        case ScenarioKind::entangled:
            return caseB_correlations(t, r, alpha);
        case ScenarioKind::mixed:
            return caseC_correlations(t, r, alpha);
    }
    throw Error("closed_form_for: bad scenario kind");
}

}  // namespace

ScanResult sudden_death_scan(ScenarioKind kind, const RateSet& r,
                             const std::vector<double>& alpha_grid, double t_max, double dt,
                             double zero_threshold) {
    if (!(dt > 0.0) || !(t_max > 0.0)) throw DomainError("sudden_death_scan: bad time grid");
    const long n = static_cast<long>(std::floor(t_max / dt)) + 1;
    ScanResult result;
    for (double alpha : alpha_grid) {
        ScanRow row{alpha, {}};
        bool seen_alive = false;
        bool in_window = false;
        double window_start = 0.0;
        for (long i = 0; i <= n; ++i) {
            const double t = std::min(i * dt, t_max);
            const double q = closed_form_for(kind, t, r, alpha).q;
            const bool dead = q < zero_threshold;
            if (!dead) {
                if (in_window && seen_alive)
                    row.windows.push_back({window_start, t});
                in_window = false;
                seen_alive = true;
            } else if (!in_window) {
                in_window = true;
                window_start = t;
            }
            if (t >= t_max) break;
        }
        // A trailing below-threshold stretch has no revival and is not a
        // death-revival window.
        result.rows.push_back(std::move(row));
    }
    // Grids need not ascend; report the smallest qualifying alpha.
    for (const ScanRow& row : result.rows)
        if (!row.windows.empty() &&
            (!result.threshold_alpha || row.alpha < *result.threshold_alpha))
            result.threshold_alpha = row.alpha;
    return result;
}

std::vector<TimeSeriesRecord> time_series(const ScenarioConfig& cfg, bool with_vn) {
    if (cfg.t_grid.empty()) throw DomainError("time_series: empty time grid");
    const DickeState rho0 = initial_state(cfg);
    std::vector<TimeSeriesRecord> out;
    out.reserve(cfg.t_grid.size());
    for (double t : cfg.t_grid) {
        const DickeState ds = evolve_closed_form(rho0, cfg.rates, t);
        const ProductState ps = to_product(ds);
        TimeSeriesRecord rec{};
        rec.t = t;
        rec.rho_ee = ds.rho().mat()(0, 0).real();
        rec.rho_ss = ds.rho().mat()(1, 1).real();
        rec.rho_aa = ds.rho().mat()(2, 2).real();
        rec.rho_gg = ds.rho().mat()(3, 3).real();
        rec.concurrence = concurrence(ps);
        const CaseResult cf = closed_form_for(cfg.kind, t, cfg.rates, cfg.state_alpha);
        rec.c2_closed = cf.c2;
        rec.q_closed = cf.q;
        rec.c2_pipeline = classical_correlation_c2(ps);
        rec.q_pipeline = quantum_discord(ps);
        if (with_vn) rec.q_vn = vn_discord(ps);
        rec.flag = std::abs(rec.c2_closed - rec.c2_pipeline) > 1e-6 ||
                   std::abs(rec.q_closed - rec.q_pipeline) > 1e-6;
        out.push_back(rec);
    }
    return out;
}

FormulaResidual scenario_formula_residual(ScenarioKind kind, const RateSet& r, double state_alpha,
                                          const std::vector<double>& t_grid) {
    ScenarioConfig cfg{kind, state_alpha, r, t_grid};
    FormulaResidual res{0.0, 0.0};
    for (const TimeSeriesRecord& rec : time_series(cfg)) {
        res.max_c2 = std::max(res.max_c2, std::abs(rec.c2_closed - rec.c2_pipeline));
        res.max_q = std::max(res.max_q, std::abs(rec.q_closed - rec.q_pipeline));
    }
    return res;
}

}  // namespace dsq
