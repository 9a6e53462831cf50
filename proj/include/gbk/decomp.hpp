#pragma once

#include <optional>
#include <vector>

#include "gbk/character.hpp"
#include "gbk/gbimod.hpp"

namespace gbk {

// Four-block decomposition of a bimodule by the unit actions: M00 is killed
// on both sides, M11 is unitary on both, M10 and M01 are mixed.
struct PeirceBlocks {
    Vec left_unit;
    Vec right_unit;
    SubBimodule m00;
    SubBimodule m10;
    SubBimodule m01;
    SubBimodule m11;
};

PeirceBlocks peirce4(const BimodPtr& m);

// An ideal of an ambient algebra viewed as a bimodule over a unitary graded
// subalgebra, with its four Peirce blocks and the sixteen product
// containments verified inside the ambient algebra.
struct IdealPeirceResult {
    AlgPtr subalgebra;
    Mat subalgebra_rows;
    BimodPtr bimodule;
    Mat ideal_rows;
    PeirceBlocks blocks;
};

IdealPeirceResult ideal_peirce_products(const AlgPtr& ambient,
                                        const std::vector<Vec>& subalgebra_basis,
                                        const GradedIdeal& n);

// Corner normalization of a nonzero homogeneous seed in a unitary bimodule
// over a twisted-constructor algebra: transports the first nonzero corner
// (i0, j0) to the (1, 1) corner.
Vec normalize_seed(const BimodPtr& m, const Vec& seed);

// m_ij^g = sum over h of sigma(h, h^{-1}g)^{-1} (E_i1 eta_h) w0 (E_1j eta_{h^{-1}g}).
Vec build_m_ij(const BimodPtr& m, const Vec& w0, long g, long i, long j);

// A character-twisted generator candidate.
struct ChiElement {
    Vec vector;
    long character_index;
    Character character;
    Vec source;
    long degree;
};

// w_chi = sum over i, h of chi(h) sigma(h, h^{-1})^{-1} (E_i1 eta_h) w0 (E_1i eta_{h^{-1}}).
// When the result is nonzero the twisted commutation law
// b * w = chi(t)^{-1} * w * b is verified over the whole algebra basis.
ChiElement build_w_chi(const BimodPtr& m, const Vec& w0, const CharacterTable& table,
                       long chi_index);

// For an irreducible unitary bimodule over a twisted-constructor algebra:
// normalizes a basis seed, scans characters in table order, and returns the
// first nonzero candidate after checking that it generates the bimodule from
// either side.
ChiElement irreducible_generator(const BimodPtr& m);

struct FgDecomposition {
    std::vector<ChiElement> generators;
    std::vector<SubBimodule> summands;
};

// Greedy decomposition of a unitary bimodule over one twisted-constructor
// algebra into irreducible summands generated by character elements.
FgDecomposition decompose_fg(const BimodPtr& m);

// Grid decomposition of a unitary bimodule by central orthogonal idempotents
// on both sides.
struct SemisimplePeirce {
    std::vector<Vec> left_units;
    std::vector<Vec> right_units;
    std::vector<std::vector<SubBimodule>> grid;
    bool diagonal_only;
    bool units_centralize;
};

SemisimplePeirce semisimple_peirce(const BimodPtr& m,
                                   const std::vector<Vec>& left_units,
                                   const std::vector<Vec>& right_units);

// Pre-split presentation of an algebra: twisted-constructor blocks embedded
// into the ambient algebra plus a homogeneous basis of the claimed radical.
// Nothing is trusted; radical_report re-verifies every claim.
struct SplitInput {
    AlgPtr ambient;
    std::vector<AlgPtr> blocks;
    std::vector<Mat> block_embeddings;
    std::vector<Vec> radical_basis;
};

struct DiagonalCellReport {
    long block;
    std::vector<ChiElement> generators;
    // gamma[i][b] = chi_i(h_b)^{-1} for the b-th basis element of the block.
    std::vector<std::vector<Cyclotomic>> gamma;
};

struct FactorizationReport {
    std::vector<long> factor_dims;
    long j00_dim;
};

struct RadicalReport {
    AlgPtr subalgebra;
    Mat subalgebra_rows;
    GradedIdeal radical;
    IdealPeirceResult peirce;
    BimodPtr j11;
    SemisimplePeirce j11_grid;
    std::vector<DiagonalCellReport> diagonal;
    long nilpotency;
    std::optional<FactorizationReport> factorization;
};

RadicalReport radical_report(const SplitInput& split);

} // namespace gbk
