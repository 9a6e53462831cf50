#include "gbk/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "gbk/errors.hpp"

namespace gbk {

AbelianGroup::AbelianGroup(std::vector<long> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) factors_ = {1};
    order_ = 1;
    for (long k : factors_) {
        if (k < 1) throw InputError("cyclic factor orders must be positive");
        if (order_ > (1L << 40) / k) throw InputError("group order is unreasonably large");
        order_ *= k;
    }
}

AbelianGroup AbelianGroup::trivial() { return AbelianGroup({1}); }

AbelianGroup AbelianGroup::parse(const std::string& literal) {
    std::vector<long> factors;
    size_t i = 0;
    while (i < literal.size()) {
        char c = literal[i];
        if (c != 'z' && c != 'Z')
            throw InputError("bad group literal: " + literal);
        ++i;
        size_t start = i;
        while (i < literal.size() && literal[i] >= '0' && literal[i] <= '9') ++i;
        if (i == start) throw InputError("bad group literal: " + literal);
        factors.push_back(std::stol(literal.substr(start, i - start)));
        if (i < literal.size()) {
            if (literal[i] != 'x' && literal[i] != 'X')
                throw InputError("bad group literal: " + literal);
            ++i;
            if (i == literal.size())
                throw InputError("bad group literal: " + literal);
        }
    }
    if (factors.empty()) throw InputError("bad group literal: " + literal);
    return AbelianGroup(std::move(factors));
}

long AbelianGroup::exponent() const {
    long e = 1;
    for (long k : factors_) e = std::lcm(e, k);
    return e;
}

void AbelianGroup::check_index(long a) const {
    if (a < 0 || a >= order_)
        throw InputError("group element index " + std::to_string(a) +
                         " out of range for " + str());
}

std::vector<long> AbelianGroup::coords(long idx) const {
    check_index(idx);
    std::vector<long> c(factors_.size());
    for (long i = (long)factors_.size() - 1; i >= 0; --i) {
        c[i] = idx % factors_[i];
        idx /= factors_[i];
    }
    return c;
}

long AbelianGroup::index(const std::vector<long>& coords) const {
    if (coords.size() != factors_.size())
        throw InputError("element coordinate count does not match " + str());
    long idx = 0;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= factors_[i])
            throw InputError("element coordinate " + std::to_string(coords[i]) +
                             " out of range for " + str());
        idx = idx * factors_[i] + coords[i];
    }
    return idx;
}

long AbelianGroup::op(long a, long b) const {
    check_index(a);
    check_index(b);
    std::vector<long> ca = coords(a), cb = coords(b);
    for (size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % factors_[i];
    return index(ca);
}

long AbelianGroup::inverse(long a) const {
    check_index(a);
    std::vector<long> c = coords(a);
    for (size_t i = 0; i < c.size(); ++i) c[i] = (factors_[i] - c[i]) % factors_[i];
    return index(c);
}

long AbelianGroup::element_order(long a) const {
    check_index(a);
    std::vector<long> c = coords(a);
    long n = 1;
    for (size_t i = 0; i < c.size(); ++i)
        n = std::lcm(n, factors_[i] / std::gcd(factors_[i], c[i]));
    return n;
}

std::vector<long> AbelianGroup::enumerate() const {
    std::vector<long> all(order_);
    std::iota(all.begin(), all.end(), 0);
    return all;
}

std::string AbelianGroup::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << "x";
        os << "Z" << factors_[i];
    }
    return os.str();
}

std::string AbelianGroup::element_str(long a) const {
    check_index(a);
    if (a == 0) return "e";
    std::vector<long> c = coords(a);
    std::ostringstream os;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ".";
        os << c[i];
    }
    return os.str();
}

long AbelianGroup::parse_element(const std::string& s) const {
    if (s == "e") return 0;
    std::vector<long> c;
    size_t i = 0;
    while (i <= s.size()) {
        size_t dot = s.find('.', i);
        std::string part = s.substr(i, (dot == std::string::npos ? s.size() : dot) - i);
        if (part.empty()) throw InputError("bad element literal: " + s);
        for (char ch : part)
            if (ch < '0' || ch > '9') throw InputError("bad element literal: " + s);
        c.push_back(std::stol(part));
        if (dot == std::string::npos) break;
        i = dot + 1;
        if (i == s.size()) throw InputError("bad element literal: " + s);
    }
    return index(c);
}

SubgroupEmbedding::SubgroupEmbedding(AbelianGroup sub, AbelianGroup ambient,
                                     std::vector<long> table)
    : sub_(std::move(sub)), ambient_(std::move(ambient)), table_(std::move(table)) {
    if ((long)table_.size() != sub_.order())
        throw InputError("embedding table size does not match the subgroup order");
    for (long v : table_)
        if (v < 0 || v >= ambient_.order())
            throw InputError("embedding table entry out of range for " + ambient_.str());
    if (table_[sub_.identity()] != ambient_.identity())
        throw InputError("embedding does not send identity to identity");
    for (long x = 0; x < sub_.order(); ++x)
        for (long y = 0; y < sub_.order(); ++y)
            if (table_[sub_.op(x, y)] != ambient_.op(table_[x], table_[y]))
                throw InputError("embedding table is not a homomorphism at (" +
                                 sub_.element_str(x) + ", " + sub_.element_str(y) + ")");
    std::unordered_set<long> seen(table_.begin(), table_.end());
    if ((long)seen.size() != sub_.order())
        throw InputError("embedding table is not injective");
}

SubgroupEmbedding SubgroupEmbedding::identity(const AbelianGroup& g) {
    return SubgroupEmbedding(g, g, g.enumerate());
}

SubgroupEmbedding SubgroupEmbedding::from_generator_images(
    const AbelianGroup& sub, const AbelianGroup& ambient,
    const std::vector<long>& images) {
    if (images.size() != sub.factors().size())
        throw InputError("expected one generator image per cyclic factor");
    std::vector<long> table(sub.order());
    for (long x = 0; x < sub.order(); ++x) {
        std::vector<long> c = sub.coords(x);
        long acc = ambient.identity();
        for (size_t i = 0; i < c.size(); ++i)
            for (long rep = 0; rep < c[i]; ++rep) acc = ambient.op(acc, images[i]);
        table[x] = acc;
    }
    return SubgroupEmbedding(sub, ambient, std::move(table));
}

long SubgroupEmbedding::map(long sub_idx) const {
    if (sub_idx < 0 || sub_idx >= (long)table_.size())
        throw InputError("embedding applied to an out-of-range element index");
    return table_[sub_idx];
}

} // namespace gbk
