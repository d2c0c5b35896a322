#ifndef KPD_KPD_HPP
#define KPD_KPD_HPP

// Umbrella header: exact conversions between K-classes of projective space,
// Chern polynomial/rank pairs, and Hilbert polynomials.

#include "kpd/errors.hpp"
#include "kpd/hrr.hpp"
#include "kpd/ktheory.hpp"
#include "kpd/poly_expr.hpp"
#include "kpd/rational.hpp"
#include "kpd/resolutions.hpp"
#include "kpd/series.hpp"
#include "kpd/unipoly.hpp"

#endif // KPD_KPD_HPP
