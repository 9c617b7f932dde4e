#include "pcf/curve.hpp"

#include <string>

#include "pcf/errors.hpp"

namespace pcf {

Curve Curve::from_AR(Poly A, Poly R) {
    if (!A.is_monic()) throw MathError("curve needs monic A, got " + A.str());
    const int g = A.degree().value() - 1;
    if (g < 1) throw MathError("curve needs deg A >= 2, got " + A.str());
    if (R.is_zero()) throw MathError("curve needs R != 0 (D would be a perfect square)");
    if (R.degree() > g) throw MathError("curve needs deg R <= " + std::to_string(g) + ", got " + R.str());
    return Curve(std::move(A), std::move(R), g);
}

Curve Curve::from_D(const Poly& D) {
    auto [A, R, g] = sqrt_decompose(D);
    if (R.is_zero()) throw MathError("D = " + D.str() + " is a perfect square");
    return Curve(std::move(A), std::move(R), g);
}

}  // namespace pcf
