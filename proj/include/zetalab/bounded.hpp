#pragma once

#include "zetalab/real.hpp"

namespace zetalab {

// A computed value together with a rigorous absolute error bound:
// the true quantity lies within `bound` of `value`.
struct BoundedValue {
    Complex value;
    Real bound;

    BoundedValue(Complex v, Real b) : value(std::move(v)), bound(std::move(b)) {
        if (bound.sign() < 0) throw InternalError("negative error bound");
    }
};

} // namespace zetalab
