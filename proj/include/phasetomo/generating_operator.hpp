#pragma once

#include <functional>
#include <string>
#include <vector>

#include "phasetomo/grid.hpp"
#include "phasetomo/hermite.hpp"
#include "phasetomo/measure.hpp"

namespace phasetomo {

/// How a probe wavefunction is known. Tagged kinds carry closed forms, so
/// overlaps, convolving measures and support statements stay exact instead of
/// grid-limited; `generic` falls back to the sampled values.
enum class ProbeKind { generic, hermite, indicator, indicator_ft };

/// One unit-norm wavefunction entering a rank mixture.
struct ProbeWavefunction {
    ProbeKind kind = ProbeKind::generic;
    GridFunction samples;

    // kind == hermite
    std::vector<complex> hermite_coeffs;
    // kind == indicator / indicator_ft: the generating interval [box_lo, box_hi]
    double box_lo = 0.0;
    double box_hi = 0.0;

    /// Wavefunction value at x. For indicators `cell` > 0 requests the
    /// cell-averaged sample (integral-preserving; value 1/2 at an aligned
    /// jump); cell == 0 is the pointwise value.
    complex position_eval(double x, double cell = 0.0) const;

    /// Value of the Fourier transform of the wavefunction at p.
    complex momentum_eval(double p, double cell = 0.0) const;

    /// L2 norm: exact for tagged kinds, grid quadrature for generic.
    double analytic_norm() const;
};

ProbeWavefunction hermite_probe(std::vector<complex> coeffs, const Grid& grid);
ProbeWavefunction indicator_probe(double lo, double hi, const Grid& grid);
ProbeWavefunction indicator_ft_probe(double lo, double hi, const Grid& grid);
ProbeWavefunction generic_probe(GridFunction samples);

/// <phi, W(q,p) phi> for a probe. Closed form for indicator kinds (the
/// indicator_ft case goes through F^{-1} W(q,p) F = W(-p,q)), grid path
/// (weyl_apply + quadrature) otherwise.
complex probe_weyl_overlap(const ProbeWavefunction& probe, double q, double p);

/// Positive unit-trace generating operator, in one of two forms:
///  - rank mixture sum_k t_k |phi_k><phi_k| (weights + probes), or
///  - a Weyl-transform field (q,p) -> tr[T W(q,p)] known only as a function
///    (e.g. smeared operators f*T0).
/// Mixtures support densities and margins; field form supports completeness
/// scans and margin transforms only.
struct GeneratingOperator {
    std::vector<double> weights;
    std::vector<ProbeWavefunction> probes;
    std::function<complex(double, double)> weyl_field;
    std::string label;

    bool is_mixture() const { return !probes.empty(); }

    /// Checks the structural invariants (convex weights, unit probe norms,
    /// field(0,0) = 1). Throws on violation.
    void validate() const;
};

GeneratingOperator mixture_operator(std::vector<double> weights,
                                    std::vector<ProbeWavefunction> probes,
                                    std::string label);
GeneratingOperator field_operator(std::function<complex(double, double)> field,
                                  std::string label);

/// tr[T W(q,p)].
complex weyl_transform(const GeneratingOperator& T, double q, double p);

enum class Axis { position, momentum };

/// Fourier transforms of the convolving measures, straight from the Weyl
/// transform: muhat(p) = tr[T W(0,p)]/sqrt(2 pi), nuhat(q) = tr[T W(-q,0)]/sqrt(2 pi).
complex ft_convolver(const GeneratingOperator& T, Axis axis, double p);

/// Densities of the convolving measures on a grid:
/// mu(x) = sum_k t_k |phi_k(-x)|^2, nu(p) = sum_k t_k |phihat_k(-p)|^2.
/// Mixture form only.
std::pair<Measure1D, Measure1D> convolving_measures(const GeneratingOperator& T,
                                                    const Grid& grid);

/// Convolving-measure density evaluated at one point (any real argument, not
/// just grid points); used to sample convolution kernels on extended offset
/// ranges. `cell` is the sampling cell width passed through to indicators.
double convolver_density_at(const GeneratingOperator& T, Axis axis, double x, double cell);

} // namespace phasetomo
