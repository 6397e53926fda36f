#pragma once

#include "gjt/rational.hpp"

namespace gjt {

/// C(n, k) for arbitrary integers.
///
/// Out-of-range arguments vanish: C(n, k) = 0 when k < 0, when k > n, or when
/// n < 0. Values are memoized in a process-wide triangular table that is safe to
/// query from several threads at once.
BigInt binom(long n, long k);

/// Convenience: binom as an exact rational.
inline Rational binom_q(long n, long k) { return Rational(binom(n, k)); }

}  // namespace gjt
