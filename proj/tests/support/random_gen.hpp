#ifndef SEMREG_TESTS_RANDOM_GEN_HPP
#define SEMREG_TESTS_RANDOM_GEN_HPP

#include <random>

#include "semreg/slice_fn.hpp"

namespace semreg::testgen {

using Rng = std::mt19937_64;

inline Rat rand_rat(Rng& rng, int mag = 5) {
    std::uniform_int_distribution<int> num(-mag, mag);
    std::uniform_int_distribution<int> den(1, 3);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline QPoly rand_poly(Rng& rng, int max_deg, int mag = 5) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = rand_rat(rng, mag);
    return QPoly(std::move(c));
}

/// Mostly polynomial; an occasional simple denominator keeps gcds cheap.
inline RatFun rand_ratfun(Rng& rng, int max_deg) {
    QPoly num = rand_poly(rng, max_deg);
    std::uniform_int_distribution<int> pick(0, 3);
    if (pick(rng) == 0) {
        std::uniform_int_distribution<int> shift(1, 4);
        QPoly den = QPoly::x() + QPoly(shift(rng));
        return RatFun(num, den);
    }
    return RatFun(num);
}

inline ScalarElem rand_scalar(Rng& rng, DomainMode mode, int max_deg) {
    if (mode == DomainMode::Slice) return {rand_ratfun(rng, max_deg), mode};
    std::uniform_int_distribution<int> pick(0, 2);
    RatFun b = pick(rng) == 0 ? RatFun() : rand_ratfun(rng, max_deg);
    return {rand_ratfun(rng, max_deg), b, mode};
}

inline SliceFn rand_fn(Rng& rng, DomainMode mode, int max_deg) {
    return {rand_scalar(rng, mode, max_deg), rand_scalar(rng, mode, max_deg),
            rand_scalar(rng, mode, max_deg), rand_scalar(rng, mode, max_deg)};
}

inline SliceFn rand_nonzero(Rng& rng, DomainMode mode, int max_deg) {
    for (;;) {
        SliceFn f = rand_fn(rng, mode, max_deg);
        if (!f.is_zero()) return f;
    }
}

inline SliceFn rand_noncentral(Rng& rng, DomainMode mode, int max_deg) {
    for (;;) {
        SliceFn f = rand_fn(rng, mode, max_deg);
        if (!f.is_central()) return f;
    }
}

inline SliceFn rand_invertible(Rng& rng, DomainMode mode, int max_deg) {
    for (;;) {
        SliceFn f = rand_fn(rng, mode, max_deg);
        if (!f.is_zero() && !symmetrized(f).is_zero()) return f;
    }
}

}  // namespace semreg::testgen

#endif
