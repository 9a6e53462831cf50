#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gbk/galg.hpp"

namespace gbk {

class GradedBimodule;
using BimodPtr = std::shared_ptr<const GradedBimodule>;

// Finite-dimensional bimodule over a pair of graded algebras that share one
// grading group. Actions are stored as sparse tensors: left_act[a][m] is the
// expansion of e_a * e_m over the bimodule basis, right_act[m][b] likewise for
// e_m * e_b. The constructor checks the module laws (ab)m = a(bm),
// m(bc) = (mb)c, (am)b = a(mb) over all basis triples and checks that both
// actions respect the grading.
class GradedBimodule {
public:
    GradedBimodule(AlgPtr left, AlgPtr right,
                   std::vector<std::vector<SVec>> left_act,
                   std::vector<std::vector<SVec>> right_act,
                   std::vector<long> degrees);

    long dim() const { return dim_; }
    const AlgPtr& left_alg() const { return left_; }
    const AlgPtr& right_alg() const { return right_; }
    const AbelianGroup& group() const { return left_->group(); }
    long degree(long m) const { return degrees_.at(m); }
    const std::vector<long>& degrees() const { return degrees_; }
    const SVec& left_entry(long a, long m) const { return left_act_.at(a).at(m); }
    const SVec& right_entry(long m, long b) const { return right_act_.at(m).at(b); }

    Vec basis_vec(long m) const;
    Vec act_left(const Vec& a, const Vec& m) const;
    Vec act_right(const Vec& m, const Vec& b) const;
    Vec act_left_basis(long a, const Vec& m) const;
    Vec act_right_basis(const Vec& m, long b) const;

    Vec component(const Vec& m, long g) const;
    bool is_homogeneous(const Vec& m, long* deg_out = nullptr) const;

private:
    AlgPtr left_;
    AlgPtr right_;
    std::vector<std::vector<SVec>> left_act_;
    std::vector<std::vector<SVec>> right_act_;
    std::vector<long> degrees_;
    long dim_;

    void validate() const;
};

BimodPtr make_bimodule(AlgPtr left, AlgPtr right,
                       std::vector<std::vector<SVec>> left_act,
                       std::vector<std::vector<SVec>> right_act,
                       std::vector<long> degrees);

// A as a bimodule over itself with multiplication on both sides.
BimodPtr regular_bimodule(const AlgPtr& a);

// B^chi for a twisted-constructor algebra B graded-refined by H: same space
// and left action as the regular bimodule, right action scaled by chi(h) on
// the basis element E_ij eta_h. chi_index selects a row of character_table(H).
BimodPtr twisted_regular_bimodule(const AlgPtr& b, long chi_index);

// Block-diagonal sum; all parts must live over the same algebra pair.
BimodPtr bimodule_direct_sum(const std::vector<BimodPtr>& parts);

// Graded subbimodule: a row-reduced span of homogeneous vectors closed under
// both actions.
struct SubBimodule {
    BimodPtr parent;
    RowSpan span;
    std::vector<long> degrees;

    SubBimodule(BimodPtr p, RowSpan s, std::vector<long> d)
        : parent(std::move(p)), span(std::move(s)), degrees(std::move(d)) {}
};

// Wraps a span as a SubBimodule after verifying homogeneity of the rows and
// closure under both actions.
SubBimodule make_subbimodule(const BimodPtr& m, RowSpan span);

// Least subbimodule containing the given homogeneous vectors.
SubBimodule generated_subbimodule(const BimodPtr& m, const std::vector<Vec>& gens);

// The subbimodule as a bimodule in its own right, with the span rows as basis.
BimodPtr sub_as_bimodule(const SubBimodule& n);

// Degree-shifted homomorphism of bimodules over the same algebra pair: column
// j of the matrix is the image of source basis j. The constructor verifies
// compatibility with both actions and that images of degree-g vectors are
// homogeneous of degree g * shift.
struct HomogeneousHom {
    BimodPtr source;
    BimodPtr target;
    Mat matrix;
    long shift;

    HomogeneousHom(BimodPtr src, BimodPtr tgt, Mat mat, long shift);

    Vec apply(const Vec& x) const;
};

struct BimoduleQuotient {
    BimodPtr bimodule;
    HomogeneousHom projection;
};

// Quotient by a graded subbimodule, with the canonical degree-e projection.
BimoduleQuotient quotient_bimodule(const BimodPtr& m, const SubBimodule& n);

struct KernelImage {
    SubBimodule kernel;
    SubBimodule image;
};

// Kernel and image of a homogeneous hom as graded subbimodules; verifies the
// rank-nullity split and that the induced map source/kernel -> image is an
// isomorphism.
KernelImage hom_kernel_image(const HomogeneousHom& phi);

// Checks that phi (columns = images of a's basis) is a degree-preserving
// algebra isomorphism from a onto b; throws VerificationError otherwise.
void verify_algebra_isomorphism(const AlgPtr& a, const AlgPtr& b, const Mat& phi);

// Re-expresses a bimodule over both sides of a verified isomorphism a -> b,
// where m is a bimodule over (a, a).
BimodPtr transport_bimodule(const BimodPtr& m, const AlgPtr& b, const Mat& phi);

enum class IrredMode { exact, randomized };

struct IrredResult {
    Verdict3 verdict;
    std::optional<SubBimodule> witness;
    std::string reason;
};

// Graded irreducibility. The exact mode needs the two algebras to coincide,
// be of twisted-constructor form, and act unitarily; it counts the summands
// of the character decomposition. The randomized mode searches homogeneous
// basis vectors and seeded random homogeneous vectors for a proper generator.
IrredResult is_irreducible_graded(const BimodPtr& m, IrredMode mode,
                                  long trials = 32,
                                  uint64_t seed = 0x67626b6972726564ULL);

struct CompositionSeries {
    BimodPtr parent;
    std::vector<SubBimodule> chain;
    long length;
};

// Strictly increasing chain from zero to M with irreducible graded quotients,
// built bottom-up. The seed shuffles the generator search order; the length
// is a Jordan-Hoelder invariant of M.
CompositionSeries composition_series(const BimodPtr& m, long trials = 32,
                                     uint64_t seed = 0x67626b636f6d70ULL);

} // namespace gbk
