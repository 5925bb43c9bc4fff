#ifndef SEMREG_EQUIVALENCE_HPP
#define SEMREG_EQUIVALENCE_HPP

#include "semreg/slice_fn.hpp"

namespace semreg {

/// Witness for conjugation equivalence: h invertible with h^{-*} * f * h = g.
struct EquivalenceWitness {
    SliceFn h;
};

/// f ~ g under conjugation by invertible elements. For functions with
/// nonzero vector parts this is f0 = g0 and f_v^s = g_v^s; central functions
/// are fixed by conjugation, so there it degenerates to equality.
bool are_equivalent(const SliceFn& f, const SliceFn& g);

/// Constructs a verified witness; throws when f and g are not equivalent.
/// Central (equal) inputs get h = 1.
EquivalenceWitness conjugator(const SliceFn& f, const SliceFn& g);

/// Whether f is conjugate to an element f0 + gamma i with gamma central;
/// decided via the model field's square root of f_v^s. A negative answer
/// means no witness exists with rational-function coordinates.
std::pair<bool, std::optional<SliceFn>> equivalent_to_one_slice_preserving(const SliceFn& f);

/// Nonzero sigma with sigma^s = 0 and f * sigma = sigma * g, when one
/// exists; always nullopt in slice mode.
std::optional<SliceFn> intertwines_with_zero_divisor(const SliceFn& f, const SliceFn& g);

}  // namespace semreg

#endif
