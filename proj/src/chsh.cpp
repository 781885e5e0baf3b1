#include "eprsim/chsh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace eprsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr std::uint64_t kSphereStartSeed = 0x9e3779b97f4a7c15ULL;

double wrap_two_pi(double x) {
    double y = std::fmod(x, kTwoPi);
    if (y < 0.0) y += kTwoPi;
    if (y >= kTwoPi) y = 0.0;
    return y;
}

BoundClassification classify(double s) {
    if (s > kTsirelsonBound + 1e-9) return BoundClassification::exceeds_tsirelson;
    if (s > kClassicalBound) return BoundClassification::violates_classical;
    return BoundClassification::no_violation;
}

struct Vec3 {
    double x, y, z;
};

Vec3 from_plane_angle(double theta) { return {std::sin(theta), 0.0, std::cos(theta)}; }

Vec3 from_polar(double theta, double azimuth) {
    const double st = std::sin(theta);
    return {st * std::cos(azimuth), st * std::sin(azimuth), std::cos(theta)};
}

// a^T T b; identical to the operator expectation by bilinearity, so the
// search can avoid rebuilding 4x4 operators in its inner loop.
double bilinear_e(const Mat3 &t, const Vec3 &a, const Vec3 &b) {
    const double tx = t[0][0] * b.x + t[0][1] * b.y + t[0][2] * b.z;
    const double ty = t[1][0] * b.x + t[1][1] * b.y + t[1][2] * b.z;
    const double tz = t[2][0] * b.x + t[2][1] * b.y + t[2][2] * b.z;
    return a.x * tx + a.y * ty + a.z * tz;
}

double s_of(double e_ab, double e_abp, double e_apb, double e_apbp) {
    return std::abs(e_ab - e_abp) + std::abs(e_apb + e_apbp);
}

// Parameter vectors: 4 in-plane angles, or (theta, azimuth) per direction.
Vec3 param_direction(AngleMode mode, const std::vector<double> &p, int slot) {
    if (mode == AngleMode::in_plane) return from_plane_angle(p[static_cast<std::size_t>(slot)]);
    return from_polar(p[static_cast<std::size_t>(2 * slot)],
                      p[static_cast<std::size_t>(2 * slot + 1)]);
}

double objective(const Mat3 &t, AngleMode mode, const std::vector<double> &p) {
    const Vec3 a = param_direction(mode, p, 0);
    const Vec3 b = param_direction(mode, p, 1);
    const Vec3 ap = param_direction(mode, p, 2);
    const Vec3 bp = param_direction(mode, p, 3);
    return s_of(bilinear_e(t, a, b), bilinear_e(t, a, bp), bilinear_e(t, ap, b),
                bilinear_e(t, ap, bp));
}

struct Candidate {
    double value;
    std::vector<double> params;
};

// Keep the k best candidates; on ties the earlier insertion wins.
void offer(std::vector<Candidate> &top, std::size_t k, double value,
           const std::vector<double> &params) {
    if (top.size() < k) {
        top.push_back({value, params});
        std::push_heap(top.begin(), top.end(),
                       [](const Candidate &a, const Candidate &b) { return a.value > b.value; });
        return;
    }
    if (value > top.front().value) {
        std::pop_heap(top.begin(), top.end(),
                      [](const Candidate &a, const Candidate &b) { return a.value > b.value; });
        top.back() = {value, params};
        std::push_heap(top.begin(), top.end(),
                       [](const Candidate &a, const Candidate &b) { return a.value > b.value; });
    }
}

// Cyclic coordinate ascent with geometric step shrinking. Each cycle walks
// every coordinate in both directions as long as the objective strictly
// improves; a cycle without improvement shrinks the step.
double refine(const Mat3 &t, AngleMode mode, std::vector<double> &p,
              const OptimizerConfig &cfg) {
    double best = objective(t, mode, p);
    double step = cfg.initial_step;
    for (int iter = 0; iter < cfg.refinement_iterations; ++iter) {
        bool improved = false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (double sign : {1.0, -1.0}) {
                for (int walk = 0; walk < 64; ++walk) {
                    const double saved = p[i];
                    p[i] = saved + sign * step;
                    const double v = objective(t, mode, p);
                    if (v > best) {
                        best = v;
                        improved = true;
                    } else {
                        p[i] = saved;
                        break;
                    }
                }
            }
        }
        if (!improved) step *= cfg.shrink_factor;
    }
    return best;
}

// Near-uniform deterministic direction set for the sphere-mode coarse grid.
std::vector<std::array<double, 2>> fibonacci_sphere(int n) {
    const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
    std::vector<std::array<double, 2>> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double z = 1.0 - (2.0 * k + 1.0) / n;
        z = std::clamp(z, -1.0, 1.0);
        pts.push_back({std::acos(z), wrap_two_pi(golden_angle * k)});
    }
    return pts;
}

ChshAngles angles_from_params(AngleMode mode, const std::vector<double> &p) {
    if (mode == AngleMode::in_plane) {
        return ChshAngles::in_plane(p[0], p[1], p[2], p[3]);
    }
    return ChshAngles::directions(
        MeasurementDirection::from_polar(p[0], p[1]), MeasurementDirection::from_polar(p[2], p[3]),
        MeasurementDirection::from_polar(p[4], p[5]), MeasurementDirection::from_polar(p[6], p[7]));
}

}  // namespace

std::string_view classification_name(BoundClassification c) {
    switch (c) {
        case BoundClassification::no_violation: return "no_violation";
        case BoundClassification::violates_classical: return "violates_classical";
        default: return "exceeds_tsirelson";
    }
}

ChshAngles ChshAngles::in_plane(double alpha, double beta, double alpha_prime,
                                double beta_prime) {
    const std::array<double, 4> wrapped{wrap_two_pi(alpha), wrap_two_pi(beta),
                                        wrap_two_pi(alpha_prime), wrap_two_pi(beta_prime)};
    const std::array<MeasurementDirection, 4> dirs{
        MeasurementDirection::in_plane(wrapped[0]), MeasurementDirection::in_plane(wrapped[1]),
        MeasurementDirection::in_plane(wrapped[2]), MeasurementDirection::in_plane(wrapped[3])};
    return ChshAngles(dirs, wrapped);
}

ChshAngles ChshAngles::directions(const MeasurementDirection &a, const MeasurementDirection &b,
                                  const MeasurementDirection &a_prime,
                                  const MeasurementDirection &b_prime) {
    return ChshAngles({a, b, a_prime, b_prime}, std::nullopt);
}

const std::array<double, 4> &ChshAngles::plane_angles() const {
    if (!plane_) throw std::logic_error("ChshAngles: no in-plane angles in direction mode");
    return *plane_;
}

void validate_config(const OptimizerConfig &cfg) {
    if (cfg.coarse_grid_points_per_angle <= 0 || cfg.refinement_iterations <= 0 ||
        cfg.restarts <= 0 || !(cfg.initial_step > 0.0) ||
        !(cfg.shrink_factor > 0.0 && cfg.shrink_factor < 1.0)) {
        throw std::invalid_argument("OptimizerConfig: invalid field");
    }
}

ChshAngles canonical_angles() { return ChshAngles::in_plane(0.0, kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0); }

ChshResult s_value(const PureState2Q &psi, const ChshAngles &angles) {
    const double e_ab = joint_expectation(psi, angles.a(), angles.b()).value;
    const double e_abp = joint_expectation(psi, angles.a(), angles.b_prime()).value;
    const double e_apb = joint_expectation(psi, angles.a_prime(), angles.b()).value;
    const double e_apbp = joint_expectation(psi, angles.a_prime(), angles.b_prime()).value;
    const double s = s_of(e_ab, e_abp, e_apb, e_apbp);
    return {angles, e_ab, e_abp, e_apb, e_apbp, s, classify(s)};
}

double canonical_s(double phi) {
    const double r = std::sqrt(2.0);
    return r + r * std::abs(std::cos(phi));
}

Mat3 correlation_matrix(const PureState2Q &psi) {
    const std::array<const CMat2 *, 3> sigma{&pauli::x(), &pauli::y(), &pauli::z()};
    Mat3 t{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const CMat4 op = tensor_product(*sigma[static_cast<std::size_t>(i)],
                                            *sigma[static_cast<std::size_t>(j)]);
            const Complex raw = inner(psi.amplitudes(), op * psi.amplitudes());
            if (std::abs(raw.imag()) > 1e-10) {
                throw NonHermitianExpectation("correlation_matrix: imaginary residue above 1e-10");
            }
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = raw.real();
        }
    }
    return t;
}

ChshResult maximize_s(const PureState2Q &psi, AngleMode mode, const OptimizerConfig &cfg) {
    validate_config(cfg);
    const Mat3 t = correlation_matrix(psi);
    const int n = cfg.coarse_grid_points_per_angle;
    const std::size_t keep = static_cast<std::size_t>(cfg.restarts);

    // Coarse stage: every 4-tuple from a fixed per-slot point set, with the
    // pairwise expectations tabulated once.
    std::vector<std::vector<double>> point_params;
    std::vector<Vec3> point_dirs;
    if (mode == AngleMode::in_plane) {
        for (int k = 0; k < n; ++k) {
            const double theta = kTwoPi * k / n;
            point_params.push_back({theta});
            point_dirs.push_back(from_plane_angle(theta));
        }
    } else {
        for (const auto &tp : fibonacci_sphere(n)) {
            point_params.push_back({tp[0], tp[1]});
            point_dirs.push_back(from_polar(tp[0], tp[1]));
        }
    }

    const std::size_t m = point_dirs.size();
    std::vector<double> e_table(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            e_table[i * m + j] = bilinear_e(t, point_dirs[i], point_dirs[j]);

    std::vector<Candidate> top;
    for (std::size_t ia = 0; ia < m; ++ia)
        for (std::size_t ib = 0; ib < m; ++ib)
            for (std::size_t iap = 0; iap < m; ++iap)
                for (std::size_t ibp = 0; ibp < m; ++ibp) {
                    const double s = s_of(e_table[ia * m + ib], e_table[ia * m + ibp],
                                          e_table[iap * m + ib], e_table[iap * m + ibp]);
                    if (top.size() < keep || s > top.front().value) {
                        std::vector<double> params;
                        for (std::size_t idx : {ia, ib, iap, ibp})
                            params.insert(params.end(), point_params[idx].begin(),
                                          point_params[idx].end());
                        offer(top, keep, s, params);
                    }
                }

    // Supplementary deterministic random starts widen the sphere search.
    std::vector<Candidate> starts(top.begin(), top.end());
    std::sort(starts.begin(), starts.end(),
              [](const Candidate &a, const Candidate &b) { return a.value > b.value; });
    if (mode == AngleMode::full_sphere) {
        std::mt19937_64 rng(kSphereStartSeed);
        const auto uniform = [&rng](double lo, double hi) {
            return lo + (hi - lo) * ((rng() >> 11) * 0x1p-53);
        };
        for (int r = 0; r < cfg.restarts; ++r) {
            std::vector<double> p;
            for (int slot = 0; slot < 4; ++slot) {
                p.push_back(uniform(0.0, kPi));
                p.push_back(uniform(0.0, kTwoPi));
            }
            starts.push_back({objective(t, mode, p), p});
        }
    }

    double best_value = -1.0;
    std::vector<double> best_params;
    for (auto &cand : starts) {
        std::vector<double> p = cand.params;
        const double v = refine(t, mode, p, cfg);
        if (v > best_value) {
            best_value = v;
            best_params = p;
        }
    }
    if (best_params.empty()) {
        throw std::logic_error("maximize_s: empty candidate set");
    }

    const ChshResult result = s_value(psi, angles_from_params(mode, best_params));
    if (result.s > kTsirelsonBound + 1e-6) {
        throw std::logic_error("maximize_s: S above the Tsirelson bound, invalid state or bug");
    }
    return result;
}

}  // namespace eprsim
