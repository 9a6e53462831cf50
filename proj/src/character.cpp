#include "gbk/character.hpp"

#include "gbk/errors.hpp"

namespace gbk {

const Cyclotomic& Character::value(long g) const {
    if (g < 0 || g >= (long)values.size())
        throw InputError("character evaluated outside the group");
    return values[g];
}

CharacterTable character_table(const AbelianGroup& g) {
    CharacterTable t{g, {}, g.enumerate()};
    const auto& factors = g.factors();
    long n = g.order();
    t.chars.reserve(n);
    for (long j = 0; j < n; ++j) {
        std::vector<long> jc = g.coords(j);
        Character chi{g, std::vector<Cyclotomic>(n)};
        for (long x = 0; x < n; ++x) {
            std::vector<long> xc = g.coords(x);
            Cyclotomic v(1);
            for (size_t i = 0; i < factors.size(); ++i)
                if (jc[i] * xc[i] % factors[i] != 0)
                    v *= Cyclotomic::root_of_unity(factors[i], jc[i] * xc[i]);
            chi.values[x] = v;
        }
        t.chars.push_back(std::move(chi));
    }
    return t;
}

OrthogonalityResult verify_orthogonality(const CharacterTable& t) {
    long n = t.group.order();
    for (long i = 0; i < (long)t.chars.size(); ++i)
        for (long j = 0; j < (long)t.chars.size(); ++j) {
            Cyclotomic sum;
            for (long g : t.elements)
                sum += t.chars[i].value(g) * t.chars[j].value(t.group.inverse(g));
            Cyclotomic want(i == j ? n : 0);
            if (sum != want) return {false, i, j};
        }
    return {true, -1, -1};
}

Mat character_matrix(const CharacterTable& t) {
    Mat m(t.chars.size(), Vec(t.elements.size()));
    for (size_t i = 0; i < t.chars.size(); ++i)
        for (size_t j = 0; j < t.elements.size(); ++j)
            m[i][j] = t.chars[i].value(t.elements[j]);
    return m;
}

Mat character_matrix_inverse(const CharacterTable& t) {
    long n = t.group.order();
    Cyclotomic scale{rat_of(1, n)};
    Mat inv(t.elements.size(), Vec(t.chars.size()));
    for (size_t i = 0; i < t.elements.size(); ++i)
        for (size_t j = 0; j < t.chars.size(); ++j)
            inv[i][j] = scale * t.chars[j].value(t.group.inverse(t.elements[i]));
    if (!mat_equal(mat_mul(character_matrix(t), inv), mat_identity(n)))
        throw VerificationError("character matrix inverse check failed for " +
                                t.group.str());
    return inv;
}

} // namespace gbk
