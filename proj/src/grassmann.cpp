#include "gbk/grassmann.hpp"

#include <map>

#include "gbk/errors.hpp"
#include "gbk/rng.hpp"

namespace gbk {

namespace {

int popcount(long mask) { return __builtin_popcountll((unsigned long long)mask); }

// The G part of a (G x Z2)-degree, as an index into the truncated group.
struct ParitySplit {
    AbelianGroup g;
    std::vector<long> gpart;
    std::vector<long> z2part;
};

ParitySplit split_parity(const AlgPtr& a) {
    const AbelianGroup& full = a->group();
    const std::vector<long>& f = full.factors();
    if (f.empty() || f.back() != 2)
        throw InputError("grading group must end in a parity factor of order 2");
    std::vector<long> head(f.begin(), f.end() - 1);
    AbelianGroup g = head.empty() ? AbelianGroup::trivial() : AbelianGroup(head);
    ParitySplit out{g, {}, {}};
    for (long i = 0; i < a->dim(); ++i) {
        std::vector<long> c = full.coords(a->degree(i));
        out.z2part.push_back(c.back());
        c.pop_back();
        if (c.empty()) c.push_back(0);
        out.gpart.push_back(out.g.index(c));
    }
    return out;
}

} // namespace

long TruncatedGrassmann::parity(long mask) const { return popcount(mask) & 1; }

std::string TruncatedGrassmann::label(long mask) const {
    std::string s;
    for (long i = 0; i < k; ++i)
        if (mask & (1L << i)) s += "e" + std::to_string(i + 1);
    return s;
}

std::pair<long, Cyclotomic> TruncatedGrassmann::basis_product(long s, long t) const {
    if (s & t) return {0, Cyclotomic(0)};
    return {s | t, Cyclotomic(grassmann_sign(s, t))};
}

AlgPtr TruncatedGrassmann::to_algebra() const {
    long d = dim();
    if (d > kMaxAlgebraDim)
        throw InputError("truncation too large for an explicit algebra");
    AbelianGroup z2 = AbelianGroup::parse("Z2");
    std::vector<std::vector<SVec>> mult(d, std::vector<SVec>(d));
    std::vector<std::string> labels;
    std::vector<long> degrees;
    for (long i = 0; i < d; ++i) {
        labels.push_back(label(i + 1));
        degrees.push_back(parity(i + 1));
        for (long j = 0; j < d; ++j) {
            auto [mask, coeff] = basis_product(i + 1, j + 1);
            if (!coeff.is_zero()) mult[i][j] = {{mask - 1, coeff}};
        }
    }
    return make_graded_algebra(z2, labels, mult, degrees);
}

TruncatedGrassmann truncated_grassmann(long k) {
    if (k < 1 || k > 12) throw InputError("generator count must be between 1 and 12");
    TruncatedGrassmann e{k};
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) {
            auto [mij, cij] = e.basis_product(1L << i, 1L << j);
            auto [mji, cji] = e.basis_product(1L << j, 1L << i);
            bool ok = i == j ? cij.is_zero()
                             : (mij == mji && cij == -cji && !cij.is_zero());
            if (!ok)
                throw VerificationError("generators fail to anticommute");
        }
    return e;
}

long grassmann_sign(long s, long t) {
    long inv = 0;
    for (long j = 0; j < 63; ++j)
        if (t & (1L << j)) inv += popcount(s >> (j + 1));
    return inv & 1 ? -1 : 1;
}

EnvelopeAlgebra envelope(const AlgPtr& a, long k) {
    if (!a) throw InputError("envelope needs an algebra");
    if (k < 1 || k > 12) throw InputError("generator count must be between 1 and 12");
    ParitySplit ps = split_parity(a);
    long nmask = (1L << k) - 1;
    std::vector<std::pair<long, long>> pairs;
    std::map<std::pair<long, long>, long> where;
    for (long b = 0; b < a->dim(); ++b)
        for (long mask = 1; mask <= nmask; ++mask)
            if ((popcount(mask) & 1) == ps.z2part[b]) {
                where[{b, mask}] = (long)pairs.size();
                pairs.push_back({b, mask});
            }
    long d = (long)pairs.size();
    if (d > kMaxAlgebraDim)
        throw InputError("envelope dimension exceeds the algebra cap");
    TruncatedGrassmann e{k};
    std::vector<std::vector<SVec>> mult(d, std::vector<SVec>(d));
    std::vector<std::string> labels;
    std::vector<long> degrees;
    for (long t = 0; t < d; ++t) {
        auto [b, mask] = pairs[t];
        labels.push_back(a->label(b) + "*" + e.label(mask));
        degrees.push_back(ps.gpart[b]);
    }
    for (long t1 = 0; t1 < d; ++t1)
        for (long t2 = 0; t2 < d; ++t2) {
            auto [b1, m1] = pairs[t1];
            auto [b2, m2] = pairs[t2];
            if (m1 & m2) continue;
            Cyclotomic sign(grassmann_sign(m1, m2));
            SVec out;
            for (const auto& [l, c] : a->basis_product(b1, b2))
                out.push_back({where.at({l, m1 | m2}), c * sign});
            svec_normalize(out);
            mult[t1][t2] = std::move(out);
        }
    AlgPtr alg = make_graded_algebra(ps.g, labels, mult, degrees);
    return {std::move(alg), a, k, std::move(pairs)};
}

NilpotencyReport check_radical_nilpotency(const SplitInput& split, long k) {
    if (k < 1 || k > 12) throw InputError("generator count must be between 1 and 12");
    RadicalReport rep = radical_report(split);
    const AlgPtr& a = split.ambient;
    const std::vector<long>& f = a->group().factors();
    if (f.empty() || f.back() != 2)
        throw InputError("grading group must end in a parity factor of order 2");
    const RowSpan& jspan = rep.radical.span;
    long dj = jspan.dim();
    long ndj = rep.nilpotency;
    // J in its own coordinates, with the parity of each basis row
    std::vector<std::vector<SVec>> jmul(dj, std::vector<SVec>(dj));
    std::vector<long> jparity;
    for (long i = 0; i < dj; ++i) {
        std::vector<long> c =
            a->group().coords(homogeneous_degree(jspan.rows()[i], a->degrees()));
        jparity.push_back(c.back());
        for (long j = 0; j < dj; ++j) {
            auto coords = rowspan_coords(
                jspan, a->mul(jspan.rows()[i], jspan.rows()[j]));
            if (!coords)
                throw VerificationError("radical is not closed under products");
            jmul[i][j] = svec_from_dense(*coords);
        }
    }
    auto mul_j = [&](const Vec& x, const Vec& y) {
        Vec out(dj);
        for (long i = 0; i < dj; ++i) {
            if (x[i].is_zero()) continue;
            for (long j = 0; j < dj; ++j) {
                if (y[j].is_zero()) continue;
                Cyclotomic c = x[i] * y[j];
                for (const auto& [l, v] : jmul[i][j]) out[l] += c * v;
            }
        }
        return out;
    };
    long nmask = (1L << k) - 1;
    std::vector<RowSpan> gen(nmask + 1, RowSpan(dj));
    for (long mask = 1; mask <= nmask; ++mask)
        for (long i = 0; i < dj; ++i)
            if ((popcount(mask) & 1) == jparity[i]) {
                Vec v(dj);
                v[i] = Cyclotomic(1);
                gen[mask].add(std::move(v));
            }
    auto all_zero = [&](const std::vector<RowSpan>& v) {
        for (long mask = 1; mask <= nmask; ++mask)
            if (v[mask].dim() > 0) return false;
        return true;
    };
    long nde;
    if (all_zero(gen)) {
        nde = 1;
    } else {
        std::vector<RowSpan> cur = gen;
        long m = 1;
        for (;;) {
            std::vector<RowSpan> next(nmask + 1, RowSpan(dj));
            for (long s = 1; s <= nmask; ++s) {
                if (cur[s].dim() == 0) continue;
                for (long t = 1; t <= nmask; ++t) {
                    if ((s & t) || gen[t].dim() == 0) continue;
                    for (const auto& x : cur[s].rows())
                        for (const auto& y : gen[t].rows())
                            next[s | t].add(mul_j(x, y));
                }
            }
            ++m;
            if (all_zero(next)) {
                nde = m;
                break;
            }
            if (m > k + 1)
                throw VerificationError("envelope power ladder failed to terminate");
            cur = std::move(next);
        }
    }
    if (nde > 2 * ndj)
        throw VerificationError("envelope nilpotency exceeds twice the radical index");
    return {k, ndj, nde, true};
}

IdentityCheck check_triple_commutator_identity(const AlgPtr& a, long n, long trials,
                                               uint64_t seed) {
    if (!a) throw InputError("identity check needs an algebra");
    if (n < 6 || n % 3 != 0)
        throw InputError("the variable count must be a multiple of 3, at least 6");
    if (trials < 1) throw InputError("at least one trial is required");
    long d = a->dim();
    if (d == 0) return {true, trials, std::nullopt, std::nullopt};
    Cyclotomic zeta = Cyclotomic::root_of_unity(4, 1);
    const Cyclotomic opts[5] = {Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1), zeta,
                                -zeta};
    Lcg rng(seed);
    auto bracket = [&](const Vec& x, const Vec& y) {
        return vec_sub(a->mul(x, y), a->mul(y, x));
    };
    for (long t = 0; t < trials; ++t) {
        std::vector<Vec> tuple;
        for (long i = 0; i < n; ++i) {
            Vec v(d);
            for (long c = 0; c < d; ++c) v[c] = opts[rng.below(5)];
            tuple.push_back(std::move(v));
        }
        std::optional<Vec> prod;
        for (long g = 0; g + 2 < n; g += 3) {
            Vec c = bracket(bracket(tuple[g], tuple[g + 1]), tuple[g + 2]);
            prod = prod ? a->mul(*prod, c) : std::move(c);
        }
        if (prod && !vec_is_zero(*prod))
            return {false, t + 1, std::move(tuple), std::move(prod)};
    }
    return {true, trials, std::nullopt, std::nullopt};
}

} // namespace gbk
