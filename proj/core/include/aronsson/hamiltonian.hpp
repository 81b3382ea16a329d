#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aronsson/geometry.hpp"
#include "aronsson/tolerances.hpp"

namespace aronsson {

enum class HamiltonianKind { SegDistSq, LinearOrthogonal, Quadratic, Sum };

std::string_view to_string(HamiltonianKind kind);

/// A C^1 Hamiltonian H: R^n -> R with analytic gradient H_p.
class HamiltonianModel {
public:
    virtual ~HamiltonianModel() = default;

    virtual double value(const Vector& p) const = 0;
    virtual Vector gradient(const Vector& p) const = 0;
    virtual HamiltonianKind kind() const = 0;
    /// Dimension fixed by the parameters, if any.
    virtual std::optional<std::size_t> dimension() const = 0;
    virtual nlohmann::ordered_json describe() const = 0;
};

using Hamiltonian = std::shared_ptr<const HamiltonianModel>;

/// H(p) = scale * dist(p, [a,b])^2.
Hamiltonian make_seg_dist_sq(const Segment& seg, double scale = 1.0);

/// H(p) = w . p + offset with w nonzero and w . (b - a) = 0.
Hamiltonian make_linear_orthogonal(const Segment& seg, Vector w, double offset = 0.0);

/// H(p) = |p|^2 / 2. No level set contains a segment.
Hamiltonian make_quadratic();

/// Pointwise sum, evaluated in the order given.
Hamiltonian make_sum(std::vector<Hamiltonian> terms);

/// Gradient by central differences, step h (independent oracle for H_p).
Vector fd_gradient(const HamiltonianModel& H, const Vector& p, double h = 1e-5);

struct FlatnessCertificate {
    Segment segment;
    double level = 0.0;                   ///< c := H(midpoint)
    double max_value_residual = 0.0;      ///< max |H(q_t) - c|
    double max_derivative_residual = 0.0; ///< max |(b-a) . H_p(q_t)|
    double worst_t = 0.5;                 ///< sample with the largest combined residual
    std::size_t sample_count = 0;
    double endpoint_value_a = 0.0;        ///< informational, H(a) - c
    double endpoint_value_b = 0.0;        ///< informational, H(b) - c
    bool passed = false;
};

/// Samples q_t = t b + (1-t) a at t_i = i / (samples + 1), i = 1..samples.
/// Never throws on a flatness failure; see validate_flat_segment.
FlatnessCertificate measure_flatness(const HamiltonianModel& H, const Segment& seg,
                                     std::size_t samples, const Tolerances& tol);

/// As measure_flatness, but throws FlatnessViolation when the certificate fails.
FlatnessCertificate validate_flat_segment(const HamiltonianModel& H, const Segment& seg,
                                          std::size_t samples, const Tolerances& tol);

} // namespace aronsson
