#pragma once

#include <cstdint>

#include "ado/rational.hpp"

namespace ado {

/// Parameters for the subquadratic oracle: k' = floor(k/3) and a sampling
/// exponent i chosen per k mod 3 so the far estimate meets 6k'-1 <= 2k-1.
struct ParamsSmallK {
    std::uint32_t k = 3;
    std::uint32_t k_prime = 1;
    Rational i;

    std::uint64_t certificate() const { return 6ull * k_prime - 1; }
};

ParamsSmallK select_params_small_k(std::uint32_t k);

/// Constant behind the near-linear level-count rule, kept as the exact
/// radical integer + coeff * sqrt(radicand).
struct RadicalConstant {
    std::int64_t integer = 0;
    std::int64_t coeff = 0;
    std::int64_t radicand = 0;
};

enum class NearLinearMode : std::uint8_t {
    kPaperC = 0,  // c = 9 + 3*sqrt(13), kappa = floor(c*sqrt(k)/18)
    kLargeK = 1,  // kappa = ceil(sqrt(k/6)), i.e. c approaching 2*sqrt(6)
};

/// Parameters for the near-linear oracle: level count kappa, sampling
/// exponent i = k/kappa - 1, and the largest k' with
/// 2 + 3(2k'-1)(2kappa-1) <= 2k-1. `feasible` is false when i <= 0 or
/// k' < 1; the builder then falls back (recorded, never silent).
struct ParamsNearLinear {
    std::uint32_t k = 1;
    NearLinearMode mode = NearLinearMode::kPaperC;
    RadicalConstant c;
    std::uint32_t kappa = 1;
    Rational i;
    std::uint32_t k_prime = 0;
    bool feasible = false;

    std::uint64_t certificate() const {
        return 2 + 3ull * (2ull * k_prime - 1) * (2ull * kappa - 1);
    }
};

ParamsNearLinear select_params_near_linear(std::uint32_t k,
                                           NearLinearMode mode = NearLinearMode::kPaperC);

}  // namespace ado
