#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace spectralwl {

// Maps reals to integers for exact hashing/equality: quantize(x) = round(x*scale),
// saturating at +-2^62 so runaway feature magnitudes stay well-defined.
class Quantizer {
public:
    explicit Quantizer(double scale = 1e8) : scale_(scale) {}

    double scale() const { return scale_; }

    std::int64_t quantize(double x) const {
        double scaled = x * scale_;
        constexpr double kSat = 4.611686018427387904e18;  // 2^62
        if (scaled >= kSat) return static_cast<std::int64_t>(kSat);
        if (scaled <= -kSat) return -static_cast<std::int64_t>(kSat);
        return std::llround(scaled);
    }

    void quantize_into(std::span<const double> xs, std::vector<std::int64_t>& out) const {
        out.clear();
        out.reserve(xs.size());
        for (double x : xs) out.push_back(quantize(x));
    }

    std::vector<std::int64_t> quantize(std::span<const double> xs) const {
        std::vector<std::int64_t> out;
        quantize_into(xs, out);
        return out;
    }

private:
    double scale_;
};

}  // namespace spectralwl
