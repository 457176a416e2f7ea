#include "ado/params.hpp"

#include <stdexcept>

namespace ado {

ParamsSmallK select_params_small_k(std::uint32_t k) {
    if (k < 3)
        throw std::invalid_argument(
            "select_params_small_k: k must be >= 3 (use the warmup oracle or plain "
            "Thorup-Zwick for smaller stretch parameters)");
    ParamsSmallK p;
    p.k = k;
    p.k_prime = k / 3;
    const std::int64_t ks = k;
    switch (k % 3) {
        case 0:
            p.i = Rational(ks, 2) + 1;
            break;
        case 1:
            p.i = Rational(ks - 1, 2) + Rational(3 * ks, 2 * (ks - 1));
            break;
        default:
            p.i = Rational(ks - 2, 2) + Rational(2 * ks - 1, ks - 2);
            break;
    }
    if (!(p.i.positive() && p.i <= Rational(ks)))
        throw std::logic_error("select_params_small_k: exponent out of range");
    if (p.certificate() > 2ull * k - 1)
        throw std::logic_error("select_params_small_k: certificate violated");
    return p;
}

namespace {

// Largest t with 18*t <= (9 + 3*sqrt(13)) * sqrt(k), decided in exact integer
// arithmetic: t qualifies iff 6t - 3*sqrt(k) <= sqrt(13k), i.e. 4t^2 <= k, or
// after squaring twice (9t^2 - k)^2 <= 81 t^2 k.
bool kappa_fits_paper_c(std::uint64_t t, std::uint64_t k) {
    if (4 * t * t <= k) return true;
    if (9 * t * t <= k) return true;
    using u128 = unsigned __int128;
    u128 lhs = u128(9 * t * t - k) * u128(9 * t * t - k);
    u128 rhs = u128(81) * t * t * k;
    return lhs <= rhs;
}

}  // namespace

ParamsNearLinear select_params_near_linear(std::uint32_t k, NearLinearMode mode) {
    if (k < 1) throw std::invalid_argument("select_params_near_linear: k must be >= 1");
    ParamsNearLinear p;
    p.k = k;
    p.mode = mode;

    if (mode == NearLinearMode::kPaperC) {
        p.c = {9, 3, 13};
        std::uint64_t t = 1;
        while (kappa_fits_paper_c(t + 1, k)) ++t;
        p.kappa = static_cast<std::uint32_t>(t);
    } else {
        p.c = {0, 2, 6};
        std::uint64_t t = 1;
        while (6 * t * t < k) ++t;  // smallest t with t >= sqrt(k/6)
        p.kappa = static_cast<std::uint32_t>(t);
    }

    p.i = Rational(k, p.kappa) - 1;
    std::uint64_t numer = k + 3ull * (p.kappa - 1);
    std::uint64_t denom = 6ull * p.kappa - 3;
    p.k_prime = static_cast<std::uint32_t>(numer / denom);

    p.feasible = p.i.positive() && p.k_prime >= 1;
    if (p.feasible && p.certificate() > 2ull * k - 1)
        throw std::logic_error("select_params_near_linear: certificate violated");
    return p;
}

}  // namespace ado
