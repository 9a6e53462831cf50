#pragma once

#include <string>
#include <vector>

namespace gbk {

// Finite abelian group Z_{k1} x ... x Z_{km}. Elements are addressed by a
// mixed-radix index with the last coordinate fastest, so in Z2xZ2 the element
// (a, b) has index 2a + b and the identity is always index 0.
class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<long> factors);
    static AbelianGroup trivial();
    // "Z2xZ2", "z4", ... (case-insensitive, "x" separated).
    static AbelianGroup parse(const std::string& literal);

    long order() const { return order_; }
    const std::vector<long>& factors() const { return factors_; }
    // lcm of the cyclic factor orders.
    long exponent() const;

    long identity() const { return 0; }
    std::vector<long> coords(long idx) const;
    long index(const std::vector<long>& coords) const;
    long op(long a, long b) const;
    long inverse(long a) const;
    long element_order(long a) const;
    std::vector<long> enumerate() const;

    std::string str() const;
    // "e" for the identity, otherwise dot-joined coordinates ("1.0").
    std::string element_str(long a) const;
    long parse_element(const std::string& s) const;

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

private:
    std::vector<long> factors_;
    long order_;

    void check_index(long a) const;
};

// Injective homomorphism from a subgroup into an ambient group, carried as a
// full index table so degrees can be computed in the ambient group. The
// constructor rejects tables that break identity, additivity, or injectivity.
class SubgroupEmbedding {
public:
    SubgroupEmbedding(AbelianGroup sub, AbelianGroup ambient, std::vector<long> table);
    static SubgroupEmbedding identity(const AbelianGroup& g);
    // images[i] is the ambient index assigned to the i-th standard generator
    // (0,...,1,...,0) of sub; the rest of the table follows by additivity.
    static SubgroupEmbedding from_generator_images(const AbelianGroup& sub,
                                                   const AbelianGroup& ambient,
                                                   const std::vector<long>& images);

    const AbelianGroup& sub() const { return sub_; }
    const AbelianGroup& ambient() const { return ambient_; }
    long map(long sub_idx) const;
    const std::vector<long>& table() const { return table_; }

    bool operator==(const SubgroupEmbedding& o) const {
        return sub_ == o.sub_ && ambient_ == o.ambient_ && table_ == o.table_;
    }

private:
    AbelianGroup sub_;
    AbelianGroup ambient_;
    std::vector<long> table_;
};

} // namespace gbk
