#pragma once

// Data and published values embedded in the binary so fixture runs and
// --check need no external files.

#include <vector>

#include "dualnum/result_record.hpp"
#include "dualnum/spline.hpp"

namespace dualnum::fixtures {

/// Samples of ln x on [1, 3], step 0.25, as tabulated (8 significant digits).
SplineData log_table();

/// Thickness of the photothermal sample, metres.
inline constexpr double kSampleThickness = 522e-6;
/// Diffusivity the synthetic amplitude curve is built to reproduce, m^2/s.
inline constexpr double kTargetDiffusivity = 6.00e-6;

/// Frequency whose diffusivity is kTargetDiffusivity at kSampleThickness.
double synthetic_peak_frequency();

/// Gaussian amplitude curve, sigma = 8 Hz, sampled on 1..20 Hz in 0.5 Hz
/// steps, peaked at synthetic_peak_frequency().
SplineData synthetic_amplitude();

std::vector<ReferenceCell> nr_example1_reference();
std::vector<ReferenceCell> mechanism_reference();
std::vector<ReferenceCell> spline_reference();
std::vector<ReferenceCell> diffusivity_reference();
std::vector<ReferenceCell> duffing_reference();

}  // namespace dualnum::fixtures
