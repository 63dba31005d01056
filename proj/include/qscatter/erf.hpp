#pragma once

#include "qscatter/types.hpp"

namespace qscatter {

/// Error function continued to complex argument. Relative accuracy is
/// ~1e-13 for |z| <= 10 (and degrades gracefully beyond).
Complex erf_complex(Complex z);

/// erfc(z) = 1 - erf(z), computed without the cancellation near erf ~ 1.
Complex erfc_complex(Complex z);

}  // namespace qscatter
