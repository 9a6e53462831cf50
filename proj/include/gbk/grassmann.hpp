#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbk/decomp.hpp"
#include "gbk/galg.hpp"

namespace gbk {

// Exterior algebra on k anticommuting generators, without unit, truncated to
// a finite model. Basis elements are the nonempty subsets of {1..k} encoded
// as bitmasks, so the dimension is 2^k - 1. The Z2 grading is the parity of
// the subset size.
struct TruncatedGrassmann {
    long k;

    long dim() const { return (1L << k) - 1; }
    long parity(long mask) const;
    std::string label(long mask) const;
    // Product of two basis masks: zero on overlap, otherwise the union with
    // the sign of the interleaving permutation.
    std::pair<long, Cyclotomic> basis_product(long s, long t) const;
    // Explicit Z2-graded algebra on the subset basis; only truncations whose
    // dimension fits the algebra cap can be materialized.
    AlgPtr to_algebra() const;
};

TruncatedGrassmann truncated_grassmann(long k);

// Sign of merging two disjoint ascending generator words.
long grassmann_sign(long s, long t);

// The enveloping construction for an algebra graded by G x Z2 with the last
// factor carrying the parity: pairs an even basis vector with every even
// subset and an odd basis vector with every odd subset, multiplies with the
// Grassmann sign, and grades by the G part alone.
struct EnvelopeAlgebra {
    AlgPtr algebra;
    AlgPtr source;
    long k;
    // basis_pairs[t] = (source basis index, generator mask) for basis t.
    std::vector<std::pair<long, long>> basis_pairs;
};

EnvelopeAlgebra envelope(const AlgPtr& a, long k);

// Nilpotency comparison between a verified radical and its envelope at
// truncation k. The envelope power ladder runs mask by mask, so it never
// materializes the enveloping algebra and is not limited by the algebra cap.
struct NilpotencyReport {
    long k;
    long nd_radical;
    long nd_envelope;
    bool bound_holds;
};

NilpotencyReport check_radical_nilpotency(const SplitInput& split, long k);

// Sampled check of the product-of-triple-commutators identity
// [x1,x2,x3][x4,x5,x6]...[x_{n-2},x_{n-1},x_n] = 0 with coefficients drawn
// from {0, 1, -1, i, -i}. A nonzero evaluation is returned as a witness.
struct IdentityCheck {
    bool holds;
    long trials_run;
    std::optional<std::vector<Vec>> witness;
    std::optional<Vec> value;
};

IdentityCheck check_triple_commutator_identity(const AlgPtr& a, long n, long trials,
                                               uint64_t seed = 0x67626b6964656eULL);

} // namespace gbk
