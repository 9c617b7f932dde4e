#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pcf/rational.hpp"

namespace pcf {

enum class Provenance { generated, supplied };

/// A finite two-sided window of exact values indexed lo..hi.
class Sequence {
public:
    Sequence() = default;
    Sequence(long lo, std::vector<Rational> values, Provenance provenance = Provenance::generated)
        : lo_(lo), values_(std::move(values)), provenance_(provenance) {}

    long lo() const noexcept { return lo_; }
    /// Last index; lo - 1 for an empty window.
    long hi() const noexcept { return lo_ + static_cast<long>(values_.size()) - 1; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    bool contains(long h) const noexcept { return h >= lo_ && h <= hi(); }
    Provenance provenance() const noexcept { return provenance_; }

    /// Throws MathError outside the window.
    const Rational& at(long h) const;
    const std::vector<Rational>& values() const noexcept { return values_; }

    /// Sub-window [lo, hi], clipped to the available range.
    Sequence slice(long lo, long hi) const;

    /// Comma-separated values.
    std::string str() const;

    friend bool operator==(const Sequence& lhs, const Sequence& rhs) {
        return lhs.lo_ == rhs.lo_ && lhs.values_ == rhs.values_;
    }

private:
    long lo_ = 0;
    std::vector<Rational> values_;
    Provenance provenance_ = Provenance::generated;
};

}  // namespace pcf
