#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radialis/errors.hpp"
#include "radialis/model_space.hpp"
#include "radialis/radial_function.hpp"
#include "radialis/radial_ops.hpp"

namespace radialis {

enum class ProfileQuantity { MeanCurvature, Density, Omega };

inline const char* quantity_id(ProfileQuantity q) {
    switch (q) {
        case ProfileQuantity::MeanCurvature: return "mean_curvature";
        case ProfileQuantity::Density: return "density";
        case ProfileQuantity::Omega: return "omega";
    }
    return "?";
}

inline std::optional<ProfileQuantity> quantity_from_id(std::string_view id) {
    if (id == "mean_curvature" || id == "H") return ProfileQuantity::MeanCurvature;
    if (id == "density" || id == "theta") return ProfileQuantity::Density;
    if (id == "omega") return ProfileQuantity::Omega;
    return std::nullopt;
}

struct ProfileSample {
    double r = 0.0;
    double value = 0.0;
};

/// A sampled radial profile of known dimension: mean curvature, density
/// Theta, or normal-coordinate density omega against the radius.
struct ObservedProfile {
    ProfileQuantity quantity = ProfileQuantity::MeanCurvature;
    std::vector<ProfileSample> samples;  // strictly increasing in r
    int dimension = 0;

    void validate() const {
        if (dimension < 2) {
            throw ValidationError("profile dimension must be >= 2");
        }
        if (samples.size() < 8) {
            throw ValidationError("profile needs at least 8 samples, got "
                                  + std::to_string(samples.size()));
        }
        const bool log_scale = quantity != ProfileQuantity::MeanCurvature;
        double prev = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto& s = samples[i];
            if (!(s.r > 0.0) || !std::isfinite(s.r) || !std::isfinite(s.value)) {
                throw ValidationError("sample " + std::to_string(i)
                                      + " has non-finite or non-positive radius/value");
            }
            if (i > 0 && !(s.r > prev)) {
                throw ValidationError("sample radii must be strictly increasing (sample "
                                      + std::to_string(i) + ")");
            }
            if (log_scale && !(s.value > 0.0)) {
                throw ValidationError("density/omega samples must be positive (sample "
                                      + std::to_string(i) + ")");
            }
            prev = s.r;
        }
    }
};

struct CandidateResidual {
    ModelSpace space;
    double residual = 0.0;
};

struct ClassificationResult {
    std::optional<ModelSpace> best;  // engaged iff min residual <= threshold
    double residual = 0.0;           // residual of the winning (or closest) candidate
    std::vector<CandidateResidual> table;
    double threshold = 0.0;
};

/// All model spaces of real dimension d: the three space forms always, CH^{d/2}
/// when d is even, QH^{d/4} when d is divisible by 4.
inline std::vector<ModelSpace> candidates_for_dimension(int d) {
    if (d < 2) {
        throw ValidationError("candidates_for_dimension requires d >= 2");
    }
    std::vector<ModelSpace> out;
    out.push_back(ModelSpace::make(SpaceFamily::Euclidean, d));
    out.push_back(ModelSpace::make(SpaceFamily::Sphere, d));
    out.push_back(ModelSpace::make(SpaceFamily::Hyperbolic, d));
    if (d % 2 == 0) out.push_back(ModelSpace::make(SpaceFamily::ComplexHyperbolic, d / 2));
    if (d % 4 == 0) out.push_back(ModelSpace::make(SpaceFamily::QuaternionicHyperbolic, d / 4));
    return out;
}

namespace detail {

inline double candidate_prediction(const ModelSpace& space, ProfileQuantity q, double r) {
    switch (q) {
        case ProfileQuantity::MeanCurvature: return mean_curvature(space, r);
        case ProfileQuantity::Density: return space.density(r).value;
        case ProfileQuantity::Omega: return space.omega(r).value;
    }
    throw ValidationError("unknown profile quantity");
}

}  // namespace detail

/// Scores the profile against every admissible candidate of its dimension.
/// The residual is the sup-norm of the pointwise deviation; densities are
/// compared on the logarithmic scale so overall growth does not drown the
/// shape. Candidates whose domain does not contain all sample radii (the
/// sphere, once any r >= pi) are dropped from the table. Ties break toward
/// the earlier catalog entry.
inline ClassificationResult classify_profile(const ObservedProfile& obs,
                                             double threshold = 1e-6) {
    obs.validate();
    const bool log_scale = obs.quantity != ProfileQuantity::MeanCurvature;
    const double r_last = obs.samples.back().r;

    ClassificationResult result;
    result.threshold = threshold;

    for (const ModelSpace& cand : candidates_for_dimension(obs.dimension)) {
        if (!(r_last < cand.r_max)) continue;  // out of the candidate's domain
        double residual = 0.0;
        for (const auto& s : obs.samples) {
            const double pred = detail::candidate_prediction(cand, obs.quantity, s.r);
            const double dev = log_scale ? std::log(s.value) - std::log(pred)
                                         : s.value - pred;
            residual = std::max(residual, std::abs(dev));
        }
        result.table.push_back({cand, residual});
    }
    if (result.table.empty()) {
        throw ValidationError("no admissible candidate for dimension "
                              + std::to_string(obs.dimension) + " covers the sample range");
    }

    const auto winner = std::min_element(
        result.table.begin(), result.table.end(),
        [](const CandidateResidual& a, const CandidateResidual& b) {
            return a.residual < b.residual;  // strict: first minimum wins ties
        });
    result.residual = winner->residual;
    if (winner->residual <= threshold) {
        result.best = winner->space;
    }
    return result;
}

/// The characterization route for eigenfunction claims: convert
/// Delta f = lambda f (+ constant) into the mean-curvature profile it forces,
/// then classify that profile.
inline ClassificationResult classify_eigenclaim(const RadialFunction& f, double lambda,
                                                int dimension, std::span<const double> grid,
                                                double threshold = 1e-6,
                                                double constant = 0.0) {
    ObservedProfile obs;
    obs.quantity = ProfileQuantity::MeanCurvature;
    obs.dimension = dimension;
    obs.samples.reserve(grid.size());
    for (double r : grid) {
        obs.samples.push_back({r, recover_mean_curvature(f, lambda, r, constant)});
    }
    return classify_profile(obs, threshold);
}

}  // namespace radialis
