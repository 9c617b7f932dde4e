#include "pcf/sequence.hpp"

#include <algorithm>

#include "pcf/errors.hpp"

namespace pcf {

const Rational& Sequence::at(long h) const {
    if (!contains(h))
        throw MathError("index " + std::to_string(h) + " outside window [" + std::to_string(lo_) + ", " +
                        std::to_string(hi()) + "]");
    return values_[static_cast<std::size_t>(h - lo_)];
}

Sequence Sequence::slice(long lo, long hi) const {
    lo = std::max(lo, lo_);
    hi = std::min(hi, this->hi());
    if (hi < lo) return Sequence(lo, {}, provenance_);
    return Sequence(lo, std::vector<Rational>(values_.begin() + (lo - lo_), values_.begin() + (hi - lo_ + 1)), provenance_);
}

std::string Sequence::str() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i != 0) out += ',';
        out += values_[i].str();
    }
    return out;
}

}  // namespace pcf
