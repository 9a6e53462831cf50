#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gbk/cocycle.hpp"
#include "gbk/group.hpp"
#include "gbk/linalg.hpp"

namespace gbk {

inline constexpr long kMaxAlgebraDim = 128;

enum class AlgebraKind { raw, twisted_group, matrix_twisted };
enum class Verdict3 { yes, no, probably_yes };

class GradedAlgebra;
using AlgPtr = std::shared_ptr<const GradedAlgebra>;

// Construction payload kept on algebras built by the twisted constructors;
// the decomposition machinery needs n, H, sigma, and the defining tuple.
struct TwistedData {
    long n;
    SubgroupEmbedding emb;
    Cocycle sigma;
    std::vector<long> tuple;
};

// Finite-dimensional algebra over the cyclotomic field, graded by a finite
// abelian group. Structure constants are sparse per basis pair; every basis
// vector is homogeneous. The constructor checks associativity and the grading
// law over all basis triples and rejects dimensions above kMaxAlgebraDim.
class GradedAlgebra {
public:
    GradedAlgebra(AbelianGroup grading_group, std::vector<std::string> labels,
                  std::vector<std::vector<SVec>> mult, std::vector<long> degrees);

    long dim() const { return dim_; }
    const AbelianGroup& group() const { return group_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(long i) const { return labels_.at(i); }
    long degree(long i) const { return degrees_.at(i); }
    const std::vector<long>& degrees() const { return degrees_; }
    const SVec& basis_product(long i, long j) const { return mult_.at(i).at(j); }

    AlgebraKind kind() const { return kind_; }
    const std::optional<TwistedData>& twisted() const { return twisted_; }

    Vec basis_vec(long i) const;
    Vec mul(const Vec& a, const Vec& b) const;
    // e_i * x and x * e_i.
    Vec left_mul_basis(long i, const Vec& x) const;
    Vec right_mul_basis(long i, const Vec& x) const;
    // Matrix of y -> x * y.
    Mat left_mult_operator(const Vec& x) const;

    // Component of x in the homogeneous piece of degree g.
    Vec component(const Vec& x, long g) const;
    bool is_homogeneous(const Vec& x, long* deg_out = nullptr) const;

private:
    AbelianGroup group_;
    std::vector<std::string> labels_;
    std::vector<std::vector<SVec>> mult_;
    std::vector<long> degrees_;
    long dim_;
    AlgebraKind kind_ = AlgebraKind::raw;
    std::optional<TwistedData> twisted_;

    void validate() const;

    friend AlgPtr twisted_group_algebra(const AbelianGroup& h, const Cocycle& sigma);
    friend AlgPtr matrix_twisted(long n, const SubgroupEmbedding& emb,
                                 const Cocycle& sigma, const std::vector<long>& tuple);
};

AlgPtr make_graded_algebra(AbelianGroup grading_group,
                           std::vector<std::string> labels,
                           std::vector<std::vector<SVec>> mult,
                           std::vector<long> degrees);

// F^sigma[H] graded by H itself: eta_g eta_h = sigma(g,h) eta_{gh}.
AlgPtr twisted_group_algebra(const AbelianGroup& h, const Cocycle& sigma);

// M_n(F^sigma[H]) with the elementary grading from the tuple (g_1..g_n) of
// ambient elements: deg(E_ij eta_h) = g_i^{-1} emb(h) g_j. Basis order is
// (i*n + j)*|H| + h with 0-based i, j.
AlgPtr matrix_twisted(long n, const SubgroupEmbedding& emb, const Cocycle& sigma,
                      const std::vector<long>& tuple);

// Block-diagonal direct product; all blocks must share one grading group.
AlgPtr algebra_direct_product(const std::vector<AlgPtr>& blocks);

// Basis index of E_{i+1,j+1} eta_h in a twisted-constructor algebra.
long twisted_basis_index(const GradedAlgebra& a, long i, long j, long h);

// Unique two-sided unit if one exists.
std::optional<Vec> unit_of(const GradedAlgebra& a);

// Degree shared by every nonzero coordinate of v; the zero vector counts as
// degree of the identity. Throws VerificationError when v is not homogeneous.
long homogeneous_degree(const Vec& v, const std::vector<long>& coord_degrees);
bool try_homogeneous_degree(const Vec& v, const std::vector<long>& coord_degrees,
                            long* out);

// Graded two-sided ideal: row-reduced span whose rows are homogeneous.
struct GradedIdeal {
    AlgPtr parent;
    RowSpan span;
    std::vector<long> degrees;

    GradedIdeal(AlgPtr p, RowSpan s, std::vector<long> d)
        : parent(std::move(p)), span(std::move(s)), degrees(std::move(d)) {}
};

// Smallest two-sided ideal containing the given homogeneous vectors.
GradedIdeal ideal_closure(const AlgPtr& a, const std::vector<Vec>& generators);

// Kernel of the left-regular trace form, computed degree by degree; valid in
// characteristic zero. The result is re-verified to be a graded nilpotent
// two-sided ideal before it is returned.
GradedIdeal jacobson_radical(const AlgPtr& a);

AlgPtr quotient_algebra(const AlgPtr& a, const GradedIdeal& ideal);

// Smallest k with span^k = 0, or nullopt once powers stabilize nonzero.
// Requires the span to be closed under multiplication.
std::optional<long> nilpotency_index(const GradedAlgebra& a, const RowSpan& span);
std::optional<long> nilpotency_index(const AlgPtr& a);

struct SimplicityResult {
    Verdict3 verdict;
    std::optional<GradedIdeal> witness;
    std::string reason;
};

// Graded simplicity: exact "yes" only for the twisted constructions (which are
// graded simple by classification), exact "no" with a witness ideal when one
// is found, otherwise a seeded randomized "probably-yes".
SimplicityResult is_graded_simple(const AlgPtr& a, long trials = 32,
                                  uint64_t seed = 0x67626b73696d70ULL);

} // namespace gbk
