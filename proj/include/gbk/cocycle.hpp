#pragma once

#include <vector>

#include "gbk/cyclotomic.hpp"
#include "gbk/group.hpp"

namespace gbk {

// 2-cocycle on a finite abelian group with values in the nonzero scalars.
// The value table is dense, indexed by x * |H| + y; the constructor rejects
// zero entries, but the cocycle identity itself is checked separately by
// validate_cocycle so that broken tables can be diagnosed with a witness.
class Cocycle {
public:
    Cocycle(AbelianGroup group, std::vector<Cyclotomic> table);
    static Cocycle trivial(const AbelianGroup& group);
    // sigma(x, y) = mu(x) mu(y) mu(xy)^{-1}; mu indexed by element index.
    static Cocycle coboundary(const AbelianGroup& group,
                              const std::vector<Cyclotomic>& mu);

    const AbelianGroup& group() const { return group_; }
    const Cyclotomic& value(long x, long y) const;
    Cocycle pointwise_product(const Cocycle& o) const;
    bool is_symmetric() const;

    bool operator==(const Cocycle& o) const {
        return group_ == o.group_ && table_ == o.table_;
    }

private:
    AbelianGroup group_;
    std::vector<Cyclotomic> table_;
};

struct CocycleCheck {
    bool ok;
    // First violating triple in ascending (x, y, z) scan order when not ok.
    long x = -1;
    long y = -1;
    long z = -1;
};

// Checks sigma(x,y) sigma(xy,z) = sigma(x,yz) sigma(y,z) over all triples.
CocycleCheck validate_cocycle(const Cocycle& c);

} // namespace gbk
