#include "qdiv/expm.hpp"

#include <cmath>

#include "qdiv/lu.hpp"

namespace qdiv {

ComplexMatrix expm(const ComplexMatrix& a) {
    require(a.is_square(), ErrorKind::NotSquare, "expm: matrix not square");
    const int n = a.rows();

    static const double b[] = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
        129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
        1323241920.0,        40840800.0,          960960.0,           16380.0,
        182.0,               1.0};
    constexpr double theta13 = 5.371920351148152;

    const double nrm = a.norm_one();
    int squarings = 0;
    if (nrm > theta13) squarings = static_cast<int>(std::ceil(std::log2(nrm / theta13)));

    ComplexMatrix x = a;
    if (squarings > 0) x *= cplx(std::ldexp(1.0, -squarings));

    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix x2 = x * x;
    const ComplexMatrix x4 = x2 * x2;
    const ComplexMatrix x6 = x4 * x2;

    ComplexMatrix u = x6 * (cplx(b[13]) * x6 + cplx(b[11]) * x4 + cplx(b[9]) * x2) +
                      cplx(b[7]) * x6 + cplx(b[5]) * x4 + cplx(b[3]) * x2 + cplx(b[1]) * id;
    u = x * u;
    ComplexMatrix v = x6 * (cplx(b[12]) * x6 + cplx(b[10]) * x4 + cplx(b[8]) * x2) +
                      cplx(b[6]) * x6 + cplx(b[4]) * x4 + cplx(b[2]) * x2 + cplx(b[0]) * id;

    ComplexMatrix r = lu_solve(lu_factor(v - u), v + u);
    for (int s = 0; s < squarings; ++s) r = r * r;
    return r;
}

} // namespace qdiv
