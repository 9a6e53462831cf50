#include "gbk/cocycle.hpp"

#include "gbk/errors.hpp"

namespace gbk {

Cocycle::Cocycle(AbelianGroup group, std::vector<Cyclotomic> table)
    : group_(std::move(group)), table_(std::move(table)) {
    long n = group_.order();
    if ((long)table_.size() != n * n)
        throw InputError("cocycle table must have one entry per ordered pair");
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            if (table_[x * n + y].is_zero())
                throw InputError("cocycle value at (" + group_.element_str(x) +
                                 ", " + group_.element_str(y) +
                                 ") is zero; values must be invertible");
}

Cocycle Cocycle::trivial(const AbelianGroup& group) {
    long n = group.order();
    return Cocycle(group, std::vector<Cyclotomic>(n * n, Cyclotomic(1)));
}

Cocycle Cocycle::coboundary(const AbelianGroup& group,
                            const std::vector<Cyclotomic>& mu) {
    long n = group.order();
    if ((long)mu.size() != n)
        throw InputError("coboundary needs one value per group element");
    for (const auto& v : mu)
        if (v.is_zero()) throw InputError("coboundary values must be nonzero");
    std::vector<Cyclotomic> table(n * n);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            table[x * n + y] = mu[x] * mu[y] * mu[group.op(x, y)].inv();
    return Cocycle(group, std::move(table));
}

const Cyclotomic& Cocycle::value(long x, long y) const {
    long n = group_.order();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw InputError("cocycle evaluated outside the group");
    return table_[x * n + y];
}

Cocycle Cocycle::pointwise_product(const Cocycle& o) const {
    if (group_ != o.group_)
        throw InputError("cocycle product needs matching groups");
    std::vector<Cyclotomic> table(table_.size());
    for (size_t i = 0; i < table_.size(); ++i) table[i] = table_[i] * o.table_[i];
    return Cocycle(group_, std::move(table));
}

bool Cocycle::is_symmetric() const {
    long n = group_.order();
    for (long x = 0; x < n; ++x)
        for (long y = x + 1; y < n; ++y)
            if (table_[x * n + y] != table_[y * n + x]) return false;
    return true;
}

CocycleCheck validate_cocycle(const Cocycle& c) {
    const AbelianGroup& h = c.group();
    long n = h.order();
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z) {
                Cyclotomic lhs = c.value(x, y) * c.value(h.op(x, y), z);
                Cyclotomic rhs = c.value(x, h.op(y, z)) * c.value(y, z);
                if (lhs != rhs) return {false, x, y, z};
            }
    return {true, -1, -1, -1};
}

} // namespace gbk
