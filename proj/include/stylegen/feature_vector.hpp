#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stylegen/errors.hpp"

namespace stylegen {

inline constexpr double kZeroVectorThreshold = 1e-12;
inline constexpr double kUnitNormTolerance = 1e-6;

// A point in feature space. When the unit_norm flag is set the vector lives
// on the unit hypersphere (|norm - 1| <= 1e-6, checked at construction).
// The dimension is fixed at construction.
class FeatureVector {
public:
    FeatureVector() = default;

    explicit FeatureVector(std::vector<double> values, bool unit_norm = false)
        : values_(std::move(values)), unit_norm_(unit_norm) {
        if (unit_norm_) {
            const double n = l2_norm_of(values_);
            if (std::abs(n - 1.0) > kUnitNormTolerance) {
                throw NotNormalizedError("unit_norm vector has norm " + std::to_string(n));
            }
        }
    }

    static FeatureVector zeros(std::size_t dim) { return FeatureVector(std::vector<double>(dim, 0.0)); }

    std::size_t dim() const noexcept { return values_.size(); }
    bool unit_norm() const noexcept { return unit_norm_; }
    const std::vector<double>& values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    bool operator==(const FeatureVector& other) const { return values_ == other.values_; }

private:
    static double l2_norm_of(const std::vector<double>& v) {
        double s = 0.0;
        for (const double x : v) {
            s += x * x;
        }
        return std::sqrt(s);
    }

    std::vector<double> values_;
    bool unit_norm_ = false;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

inline double l2_norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

inline double l2_norm(const FeatureVector& v) { return l2_norm(std::span<const double>(v.values())); }

inline FeatureVector l2_normalize(const FeatureVector& v) {
    const double n = l2_norm(v);
    if (n <= kZeroVectorThreshold) {
        throw ZeroVectorError("cannot normalize a (near-)zero vector");
    }
    std::vector<double> out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        out[i] = v[i] / n;
    }
    return FeatureVector(std::move(out), /*unit_norm=*/true);
}

// Cosine similarity, clamped to [-1, 1] against round-off.
inline double cosine(const FeatureVector& a, const FeatureVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatchError("cosine: dimensions " + std::to_string(a.dim()) + " vs " +
                                     std::to_string(b.dim()));
    }
    const double na = l2_norm(a);
    const double nb = l2_norm(b);
    if (na <= kZeroVectorThreshold || nb <= kZeroVectorThreshold) {
        throw ZeroVectorError("cosine of a (near-)zero vector");
    }
    const double c = dot(a.values(), b.values()) / (na * nb);
    return std::clamp(c, -1.0, 1.0);
}

inline void require_unit_norm(const FeatureVector& v, const char* what) {
    if (std::abs(l2_norm(v) - 1.0) > kUnitNormTolerance) {
        throw NotNormalizedError(std::string(what) + ": expected a unit-norm vector");
    }
}

}  // namespace stylegen
