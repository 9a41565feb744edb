#pragma once

#include "qdiv/complex_matrix.hpp"

namespace qdiv {

// Matrix exponential, Pade(13) with scaling and squaring.
ComplexMatrix expm(const ComplexMatrix& a);

} // namespace qdiv
