#pragma once

#include <vector>

#include "gbk/group.hpp"
#include "gbk/linalg.hpp"

namespace gbk {

// Degree-1 character of a finite abelian group, stored as an explicit value
// table indexed by element index.
struct Character {
    AbelianGroup group;
    std::vector<Cyclotomic> values;

    const Cyclotomic& value(long g) const;
    bool operator==(const Character& o) const {
        return group == o.group && values == o.values;
    }
};

// All |G| irreducible characters. Characters and elements share the group's
// mixed-radix enumeration order, which fixes the character matrix indexing.
struct CharacterTable {
    AbelianGroup group;
    std::vector<Character> chars;
    std::vector<long> elements;
};

CharacterTable character_table(const AbelianGroup& g);

struct OrthogonalityResult {
    bool ok;
    // First offending character pair when ok is false.
    long i = -1;
    long j = -1;
};

// Checks sum_g chi_i(g) chi_j(g^{-1}) = delta_ij |G| for all pairs.
OrthogonalityResult verify_orthogonality(const CharacterTable& t);

// Entry (i, j) is chi_i(g_j).
Mat character_matrix(const CharacterTable& t);

// Returns |G|^{-1} [chi_j(g_i^{-1})] and verifies that it really inverts
// character_matrix(t); throws VerificationError otherwise.
Mat character_matrix_inverse(const CharacterTable& t);

} // namespace gbk
