#pragma once

#include "qzs/report.hpp"
#include "qzs/verdestar.hpp"
#include "qzs/zhedanov.hpp"

namespace qzs {

/// Both cubic relations with the closed-form constants on delta_0..delta_N, and
/// extract_coeffs(d, N) equal to the closed form.
Report relations_check(const VerdeStarData& d, long N);
/// Q delta_m = omega delta_m for m <= m_max; Q K1 = K1 Q and Q K2 = K2 Q on delta_0..delta_comm_max.
Report casimir_check(const VerdeStarData& d, long m_max, long comm_max);

}  // namespace qzs
