#include "qme/explore.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <thread>

#include <json.hpp>

namespace qme {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGoldenRatio = 0.6180339887498949;  // (sqrt(5)-1)/2
constexpr double kRefineWindow = 0.06;               // per-pass bracket half-width
constexpr double kRefineTol = 1e-6;

SweepRow make_row(const CycleRecord& rec, double alpha, double phi) {
    return {alpha,
            phi,
            -rec.w_net,
            rec.q_measure,
            rec.q_thermal,
            rec.efficiency,
            rec.sf[1].divergence,
            rec.sf[2].divergence,
            rec.sf[3].divergence,
            rec.sf[2].f_neq,
            rec.sf[3].f_neq,
            rec.ds_measure,
            rec.regime};
}

nlohmann::json method_json(const PropagatorChoice& m) {
    if (m.kind == PropagatorChoice::Kind::Exact) return {{"kind", "exact"}};
    return {{"kind", "sliced"}, {"slices", m.slices}};
}

nlohmann::json matrix_json(const QubitMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 2; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 2; ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(row);
    }
    return rows;
}

std::string method_string(const PropagatorChoice& m) {
    if (m.kind == PropagatorChoice::Kind::Exact) return "exact";
    return "sliced:" + std::to_string(m.slices);
}

}  // namespace

SweepGrid::SweepGrid(int alpha_steps_, int phi_steps_)
    : alpha_steps(alpha_steps_), phi_steps(phi_steps_) {
    if (alpha_steps < 2 || phi_steps < 2)
        throw std::invalid_argument("SweepGrid: both step counts must be >= 2");
}

double SweepGrid::alpha_at(int j) const {
    return static_cast<double>(j) * kPi / static_cast<double>(alpha_steps - 1);
}

double SweepGrid::phi_at(int k) const {
    return 2.0 * kPi * static_cast<double>(k) / static_cast<double>(phi_steps);
}

namespace {

// Evaluate rows[i] = f(i) for i in [0, n) across the requested worker count,
// writing into pre-indexed slots so output order is canonical.
template <typename F>
void parallel_fill(std::size_t n, unsigned workers, F&& fill_one) {
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fill_one(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(n, static_cast<std::size_t>(w) * chunk);
        const std::size_t end = std::min(n, begin + chunk);
        if (begin < end)
            pool.emplace_back([&fill_one, begin, end] {
                for (std::size_t i = begin; i < end; ++i) fill_one(i);
            });
    }
    for (auto& t : pool) t.join();
}

void finalize_optima(SweepResult& result) {
    result.best_work = find_optimum(result, Objective::WorkOutput);
    const bool any_engine =
        std::any_of(result.rows.begin(), result.rows.end(),
                    [](const SweepRow& r) { return r.regime == Regime::Engine; });
    if (any_engine) result.best_eta = find_optimum(result, Objective::Efficiency);
}

}  // namespace

SliceSpec::SliceSpec(Axis axis_, int steps_, double fixed_value_)
    : axis(axis_), steps(steps_), fixed_value(fixed_value_) {
    if (steps < 2) throw std::invalid_argument("SliceSpec: steps must be >= 2");
}

SweepResult sweep(double omega_tau, double beta_hw, const PropagatorChoice& method,
                  const SweepGrid& grid, unsigned workers) {
    const std::size_t n = static_cast<std::size_t>(grid.alpha_steps) *
                          static_cast<std::size_t>(grid.phi_steps);
    SweepResult result{omega_tau, beta_hw,     method,       grid,
                       std::nullopt, std::vector<SweepRow>(n), std::nullopt,
                       std::nullopt, std::nullopt};

    parallel_fill(n, workers, [&](std::size_t i) {
        const int j = static_cast<int>(i) / grid.phi_steps;
        const int k = static_cast<int>(i) % grid.phi_steps;
        const double alpha = grid.alpha_at(j);
        const double phi = grid.phi_at(k);
        const CycleParams params{omega_tau, beta_hw, MeasurementBasis{alpha, phi},
                                 method};
        result.rows[i] = make_row(run_cycle(params), alpha, phi);
    });

    finalize_optima(result);
    if (grid.phi_steps % 2 == 0) result.symmetry = symmetry_check(result);
    return result;
}

SweepResult slice(double omega_tau, double beta_hw, const PropagatorChoice& method,
                  const SliceSpec& spec, unsigned workers) {
    const std::size_t n = static_cast<std::size_t>(spec.steps);
    SweepResult result{omega_tau, beta_hw,     method,       std::nullopt,
                       spec,      std::vector<SweepRow>(n), std::nullopt,
                       std::nullopt, std::nullopt};

    parallel_fill(n, workers, [&](std::size_t i) {
        double alpha, phi;
        if (spec.axis == SliceSpec::Axis::Alpha) {
            alpha = static_cast<double>(i) * kPi / static_cast<double>(spec.steps - 1);
            phi = spec.fixed_value;
        } else {
            alpha = spec.fixed_value;
            phi = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(spec.steps);
        }
        const CycleParams params{omega_tau, beta_hw, MeasurementBasis{alpha, phi},
                                 method};
        result.rows[i] = make_row(run_cycle(params), alpha, phi);
    });

    finalize_optima(result);
    return result;
}

Optimum find_optimum(const SweepResult& result, Objective objective) {
    std::size_t best = result.rows.size();
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const SweepRow& row = result.rows[i];
        double value;
        if (objective == Objective::WorkOutput) {
            value = row.neg_w;
        } else {
            if (row.regime != Regime::Engine) continue;
            value = *row.eta;
        }
        if (value > best_value) {
            best_value = value;
            best = i;
        }
    }
    if (best == result.rows.size())
        throw NoEngineRegimeError("find_optimum: no engine-regime row for efficiency");
    return {result.rows[best].alpha, result.rows[best].phi, best_value, best};
}

namespace {

// Golden-section maximization on [lo, hi]; returns the interval midpoint
// once the bracket is below kRefineTol.
template <typename F>
double golden_max(F&& f, double lo, double hi) {
    double a = lo, b = hi;
    double x1 = b - kGoldenRatio * (b - a);
    double x2 = a + kGoldenRatio * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > kRefineTol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGoldenRatio * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGoldenRatio * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

Optimum refine(double omega_tau, double beta_hw, const PropagatorChoice& method,
               Objective objective, double alpha_seed, double phi_seed) {
    auto evaluate = [&](double alpha, double phi) -> double {
        const CycleParams params{omega_tau, beta_hw, MeasurementBasis{alpha, phi},
                                 method};
        const CycleRecord rec = run_cycle(params);
        if (objective == Objective::WorkOutput) return -rec.w_net;
        return rec.efficiency ? *rec.efficiency
                              : -std::numeric_limits<double>::infinity();
    };

    double alpha = alpha_seed;
    double phi = phi_seed;
    double value = evaluate(alpha, phi);
    if (!std::isfinite(value))
        throw NoEngineRegimeError("refine: seed is outside the engine regime");

    for (int pass = 0; pass < 100; ++pass) {
        const double a_lo = std::max(0.0, alpha - kRefineWindow);
        const double a_hi = std::min(kPi, alpha + kRefineWindow);
        const double next_alpha =
            golden_max([&](double a) { return evaluate(a, phi); }, a_lo, a_hi);
        const double next_phi = golden_max(
            [&](double p) { return evaluate(next_alpha, p); },
            phi - kRefineWindow, phi + kRefineWindow);
        const bool converged = std::abs(next_alpha - alpha) < kRefineTol &&
                               std::abs(next_phi - phi) < kRefineTol;
        alpha = next_alpha;
        phi = next_phi;
        if (converged) break;
    }
    value = std::max(value, evaluate(alpha, phi));
    return {alpha, std::fmod(phi + 2.0 * kPi, 2.0 * kPi), value, 0};
}

SymmetryDefects symmetry_check(const SweepResult& result) {
    if (!result.grid)
        throw GridNotClosedError("symmetry_check: result is not a full 2-D sweep");
    const SweepGrid& grid = *result.grid;
    if (grid.phi_steps % 2 != 0)
        throw GridNotClosedError(
            "symmetry_check: phi grid is not closed under phi -> phi + pi "
            "(phi_steps must be even)");
    SymmetryDefects defects{0.0, 0.0};
    for (int j = 0; j < grid.alpha_steps; ++j) {
        const int jp = grid.alpha_steps - 1 - j;
        for (int k = 0; k < grid.phi_steps; ++k) {
            const int kp = (k + grid.phi_steps / 2) % grid.phi_steps;
            const SweepRow& row = result.rows[static_cast<std::size_t>(j) * grid.phi_steps + k];
            const SweepRow& partner =
                result.rows[static_cast<std::size_t>(jp) * grid.phi_steps + kp];
            defects.work_defect =
                std::max(defects.work_defect, std::abs(row.neg_w - partner.neg_w));
            if (row.regime == Regime::Engine && partner.regime == Regime::Engine)
                defects.eta_defect =
                    std::max(defects.eta_defect, std::abs(*row.eta - *partner.eta));
        }
    }
    return defects;
}

SweepRow row_from_record(const CycleRecord& record) {
    return make_row(record, record.params.basis.alpha(), record.params.basis.phi());
}

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void write_csv(const SweepResult& result, std::ostream& out) {
    out << "# omega_tau=" << format_double(result.omega_tau) << '\n';
    out << "# beta_hw=" << format_double(result.beta_hw) << '\n';
    out << "# method=" << method_string(result.method) << '\n';
    if (result.grid) {
        out << "# grid=" << result.grid->alpha_steps << 'x' << result.grid->phi_steps
            << '\n';
    } else if (result.slice) {
        const bool over_alpha = result.slice->axis == SliceSpec::Axis::Alpha;
        out << "# slice=" << (over_alpha ? "alpha" : "phi") << " steps="
            << result.slice->steps << " fixed_" << (over_alpha ? "phi" : "alpha") << '='
            << format_double(result.slice->fixed_value) << '\n';
    }
    out << "# version=" << kToolVersion << '\n';
    out << "# energies in units of hbar*omega; entropies and divergences in nats\n";
    out << "alpha,phi,neg_W,Q_M,Q_T,eta,D2,D3,D4,F3,F4,dS_M,regime\n";
    for (const SweepRow& r : result.rows) {
        out << format_double(r.alpha) << ',' << format_double(r.phi) << ','
            << format_double(r.neg_w) << ',' << format_double(r.q_m) << ','
            << format_double(r.q_t) << ',';
        if (r.eta) out << format_double(*r.eta);
        out << ',' << format_double(r.d2) << ',' << format_double(r.d3) << ','
            << format_double(r.d4) << ',' << format_double(r.f3) << ','
            << format_double(r.f4) << ',' << format_double(r.ds_m) << ','
            << (r.regime == Regime::Engine ? "engine" : "non_engine") << '\n';
    }
}

std::string to_json(const SweepResult& result) {
    nlohmann::json j;
    j["omega_tau"] = result.omega_tau;
    j["beta_hw"] = result.beta_hw;
    j["method"] = method_json(result.method);
    if (result.grid) {
        j["grid"] = {{"alpha_steps", result.grid->alpha_steps},
                     {"phi_steps", result.grid->phi_steps}};
    } else if (result.slice) {
        j["slice"] = {
            {"axis", result.slice->axis == SliceSpec::Axis::Alpha ? "alpha" : "phi"},
            {"steps", result.slice->steps},
            {"fixed_value", result.slice->fixed_value}};
    }
    j["version"] = kToolVersion;
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& r : result.rows) {
        nlohmann::json row{{"alpha", r.alpha},
                           {"phi", r.phi},
                           {"neg_W", r.neg_w},
                           {"Q_M", r.q_m},
                           {"Q_T", r.q_t},
                           {"D2", r.d2},
                           {"D3", r.d3},
                           {"D4", r.d4},
                           {"F3", r.f3},
                           {"F4", r.f4},
                           {"dS_M", r.ds_m},
                           {"regime", r.regime == Regime::Engine ? "engine" : "non_engine"}};
        row["eta"] = r.eta ? nlohmann::json(*r.eta) : nlohmann::json(nullptr);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    auto optimum_json = [](const std::optional<Optimum>& o) -> nlohmann::json {
        if (!o) return nullptr;
        return {{"alpha", o->alpha}, {"phi", o->phi}, {"value", o->value}};
    };
    j["optima"] = {{"work_output", optimum_json(result.best_work)},
                   {"efficiency", optimum_json(result.best_eta)}};
    j["symmetry"] = result.symmetry
                        ? nlohmann::json{{"work_defect", result.symmetry->work_defect},
                                         {"eta_defect", result.symmetry->eta_defect}}
                        : nlohmann::json(nullptr);
    return j.dump(2) + "\n";
}

std::string to_json(const CycleRecord& record) {
    nlohmann::json j;
    j["params"] = {{"omega_tau", record.params.omega_tau},
                   {"beta_hw", record.params.beta_hw},
                   {"alpha", record.params.basis.alpha()},
                   {"phi", record.params.basis.phi()},
                   {"method", method_json(record.params.method)}};
    j["version"] = kToolVersion;
    nlohmann::json rho = nlohmann::json::array();
    for (const auto& m : record.rho) rho.push_back(matrix_json(m));
    j["rho"] = std::move(rho);
    nlohmann::json sf = nlohmann::json::array();
    for (const auto& s : record.sf)
        sf.push_back({{"energy", s.energy},
                      {"entropy", s.entropy},
                      {"f_eq", s.f_eq},
                      {"f_neq", s.f_neq},
                      {"divergence", s.divergence}});
    j["state_functions"] = std::move(sf);
    j["w_stroke_I"] = record.w_stroke_I;
    j["q_measure"] = record.q_measure;
    j["w_stroke_III"] = record.w_stroke_III;
    j["q_thermal"] = record.q_thermal;
    j["w_net"] = record.w_net;
    j["ds_measure"] = record.ds_measure;
    j["ds_thermal"] = record.ds_thermal;
    j["efficiency"] =
        record.efficiency ? nlohmann::json(*record.efficiency) : nlohmann::json(nullptr);
    j["regime"] = record.regime == Regime::Engine ? "engine" : "non_engine";
    return j.dump(2) + "\n";
}

}  // namespace qme
