#pragma once

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace m0n {

/// Polynomial coefficients.  Arithmetic is checked: overflow throws rather
/// than wrapping, so every reported value is exact.
using Coeff = std::int64_t;

/// Unbounded integers for linear algebra (elimination, Smith form, determinants).
using BigInt = mpz_class;

inline Coeff checked_add(Coeff a, Coeff b)
{
    Coeff r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in coefficient addition");
    return r;
}

inline Coeff checked_mul(Coeff a, Coeff b)
{
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in coefficient multiplication");
    return r;
}

inline Coeff to_coeff(const BigInt& v)
{
    if (!v.fits_slong_p())
        throw std::overflow_error("integer does not fit a 64-bit coefficient");
    return v.get_si();
}

}  // namespace m0n
