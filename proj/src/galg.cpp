#include "gbk/galg.hpp"

#include <algorithm>
#include <map>

#include "gbk/errors.hpp"
#include "gbk/rng.hpp"

namespace gbk {

namespace {

void axpy_svec(Vec& acc, const Cyclotomic& coeff, const SVec& s) {
    for (const auto& [idx, val] : s) acc[idx] += coeff * val;
}

} // namespace

GradedAlgebra::GradedAlgebra(AbelianGroup grading_group,
                             std::vector<std::string> labels,
                             std::vector<std::vector<SVec>> mult,
                             std::vector<long> degrees)
    : group_(std::move(grading_group)),
      labels_(std::move(labels)),
      mult_(std::move(mult)),
      degrees_(std::move(degrees)),
      dim_((long)degrees_.size()) {
    if (dim_ > kMaxAlgebraDim)
        throw InputError("algebra dimension " + std::to_string(dim_) +
                         " exceeds the hard cap " + std::to_string(kMaxAlgebraDim));
    if (labels_.empty() && dim_ > 0) {
        labels_.reserve(dim_);
        for (long i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
    }
    if ((long)labels_.size() != dim_)
        throw InputError("label count does not match the algebra dimension");
    if ((long)mult_.size() != dim_)
        throw InputError("structure constant tensor has the wrong row count");
    for (auto& row : mult_) {
        if ((long)row.size() != dim_)
            throw InputError("structure constant tensor has the wrong column count");
        for (auto& s : row) {
            svec_normalize(s);
            for (const auto& [idx, val] : s) {
                (void)val;
                if (idx < 0 || idx >= dim_)
                    throw InputError("structure constant index out of range");
            }
        }
    }
    for (long d : degrees_)
        if (d < 0 || d >= group_.order())
            throw InputError("basis degree out of range for " + group_.str());
    validate();
}

void GradedAlgebra::validate() const {
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j) {
            long want = group_.op(degrees_[i], degrees_[j]);
            for (const auto& [k, v] : mult_[i][j]) {
                (void)v;
                if (degrees_[k] != want)
                    throw VerificationError(
                        "grading violated: " + labels_[i] + " * " + labels_[j] +
                        " has a component on " + labels_[k] + " of degree " +
                        group_.element_str(degrees_[k]) + ", expected " +
                        group_.element_str(want));
            }
        }
    SVec lhs, rhs;
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j) {
            const SVec& pij = mult_[i][j];
            for (long k = 0; k < dim_; ++k) {
                const SVec& pjk = mult_[j][k];
                if (pij.empty() && pjk.empty()) continue;
                lhs.clear();
                rhs.clear();
                for (const auto& [l, v] : pij)
                    for (const auto& [m, w] : mult_[l][k]) lhs.emplace_back(m, v * w);
                for (const auto& [l, v] : pjk)
                    for (const auto& [m, w] : mult_[i][l]) rhs.emplace_back(m, v * w);
                svec_normalize(lhs);
                svec_normalize(rhs);
                if (lhs != rhs)
                    throw VerificationError("associativity fails at (" + labels_[i] +
                                            ", " + labels_[j] + ", " + labels_[k] + ")");
            }
        }
}

Vec GradedAlgebra::basis_vec(long i) const {
    if (i < 0 || i >= dim_) throw InputError("basis index out of range");
    Vec v(dim_);
    v[i] = Cyclotomic(1);
    return v;
}

Vec GradedAlgebra::mul(const Vec& a, const Vec& b) const {
    if ((long)a.size() != dim_ || (long)b.size() != dim_)
        throw InputError("vector length does not match the algebra dimension");
    Vec r(dim_);
    for (long i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            axpy_svec(r, a[i] * b[j], mult_[i][j]);
        }
    }
    return r;
}

Vec GradedAlgebra::left_mul_basis(long i, const Vec& x) const {
    Vec r(dim_);
    for (long j = 0; j < dim_; ++j)
        if (!x[j].is_zero()) axpy_svec(r, x[j], mult_[i][j]);
    return r;
}

Vec GradedAlgebra::right_mul_basis(long i, const Vec& x) const {
    Vec r(dim_);
    for (long j = 0; j < dim_; ++j)
        if (!x[j].is_zero()) axpy_svec(r, x[j], mult_[j][i]);
    return r;
}

Mat GradedAlgebra::left_mult_operator(const Vec& x) const {
    Mat m(dim_, Vec(dim_));
    for (long j = 0; j < dim_; ++j) {
        Vec col(dim_);
        for (long i = 0; i < dim_; ++i)
            if (!x[i].is_zero()) axpy_svec(col, x[i], mult_[i][j]);
        for (long k = 0; k < dim_; ++k)
            if (!col[k].is_zero()) m[k][j] = col[k];
    }
    return m;
}

Vec GradedAlgebra::component(const Vec& x, long g) const {
    Vec r(dim_);
    for (long i = 0; i < dim_; ++i)
        if (degrees_[i] == g) r[i] = x[i];
    return r;
}

bool GradedAlgebra::is_homogeneous(const Vec& x, long* deg_out) const {
    return try_homogeneous_degree(x, degrees_, deg_out);
}

AlgPtr make_graded_algebra(AbelianGroup grading_group,
                           std::vector<std::string> labels,
                           std::vector<std::vector<SVec>> mult,
                           std::vector<long> degrees) {
    return std::make_shared<GradedAlgebra>(std::move(grading_group), std::move(labels),
                                           std::move(mult), std::move(degrees));
}

AlgPtr twisted_group_algebra(const AbelianGroup& h, const Cocycle& sigma) {
    if (sigma.group() != h)
        throw InputError("cocycle group does not match the algebra group");
    auto check = validate_cocycle(sigma);
    if (!check.ok)
        throw InputError("cocycle identity fails at (" + h.element_str(check.x) +
                         ", " + h.element_str(check.y) + ", " +
                         h.element_str(check.z) + ")");
    long n = h.order();
    std::vector<std::string> labels;
    std::vector<long> degrees;
    std::vector<std::vector<SVec>> mult(n, std::vector<SVec>(n));
    for (long g = 0; g < n; ++g) {
        labels.push_back("eta_" + h.element_str(g));
        degrees.push_back(g);
        for (long k = 0; k < n; ++k)
            mult[g][k] = {{h.op(g, k), sigma.value(g, k)}};
    }
    auto a = std::make_shared<GradedAlgebra>(h, std::move(labels), std::move(mult),
                                             std::move(degrees));
    a->kind_ = AlgebraKind::twisted_group;
    a->twisted_ = TwistedData{1, SubgroupEmbedding::identity(h), sigma, {h.identity()}};
    return a;
}

AlgPtr matrix_twisted(long n, const SubgroupEmbedding& emb, const Cocycle& sigma,
                      const std::vector<long>& tuple) {
    if (n < 1) throw InputError("matrix size must be positive");
    const AbelianGroup& h = emb.sub();
    const AbelianGroup& g = emb.ambient();
    if (sigma.group() != h)
        throw InputError("cocycle group does not match the subgroup");
    auto check = validate_cocycle(sigma);
    if (!check.ok)
        throw InputError("cocycle identity fails at (" + h.element_str(check.x) +
                         ", " + h.element_str(check.y) + ", " +
                         h.element_str(check.z) + ")");
    if ((long)tuple.size() != n)
        throw InputError("grading tuple must have one entry per matrix row");
    long hn = h.order();
    long dim = n * n * hn;
    if (dim > kMaxAlgebraDim)
        throw InputError("matrix twisted algebra dimension " + std::to_string(dim) +
                         " exceeds the hard cap " + std::to_string(kMaxAlgebraDim));
    auto idx = [&](long i, long j, long t) { return (i * n + j) * hn + t; };
    std::vector<std::string> labels(dim);
    std::vector<long> degrees(dim);
    std::vector<std::vector<SVec>> mult(dim, std::vector<SVec>(dim));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long t = 0; t < hn; ++t) {
                long b = idx(i, j, t);
                labels[b] = "E_{" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + "}." + h.element_str(t);
                degrees[b] = g.op(g.inverse(tuple[i]), g.op(emb.map(t), tuple[j]));
            }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long t = 0; t < hn; ++t)
                for (long l = 0; l < n; ++l)
                    for (long u = 0; u < hn; ++u)
                        mult[idx(i, j, t)][idx(j, l, u)] = {
                            {idx(i, l, h.op(t, u)), sigma.value(t, u)}};
    auto a = std::make_shared<GradedAlgebra>(g, std::move(labels), std::move(mult),
                                             std::move(degrees));
    a->kind_ = AlgebraKind::matrix_twisted;
    a->twisted_ = TwistedData{n, emb, sigma, tuple};
    return a;
}

AlgPtr algebra_direct_product(const std::vector<AlgPtr>& blocks) {
    if (blocks.empty()) throw InputError("direct product needs at least one block");
    const AbelianGroup& g = blocks[0]->group();
    long dim = 0;
    for (const auto& b : blocks) {
        if (b->group() != g)
            throw InputError("direct product blocks must share one grading group");
        dim += b->dim();
    }
    std::vector<std::string> labels;
    std::vector<long> degrees;
    std::vector<std::vector<SVec>> mult(dim, std::vector<SVec>(dim));
    long off = 0;
    for (size_t s = 0; s < blocks.size(); ++s) {
        const GradedAlgebra& b = *blocks[s];
        for (long i = 0; i < b.dim(); ++i) {
            labels.push_back("p" + std::to_string(s) + "." + b.label(i));
            degrees.push_back(b.degree(i));
            for (long j = 0; j < b.dim(); ++j) {
                SVec prod = b.basis_product(i, j);
                for (auto& [k, v] : prod) { (void)v; k += off; }
                mult[off + i][off + j] = std::move(prod);
            }
        }
        off += b.dim();
    }
    return make_graded_algebra(g, std::move(labels), std::move(mult), std::move(degrees));
}

long twisted_basis_index(const GradedAlgebra& a, long i, long j, long h) {
    if (!a.twisted())
        throw InputError("basis index lookup needs a twisted-constructor algebra");
    long n = a.twisted()->n;
    long hn = a.twisted()->emb.sub().order();
    if (i < 0 || i >= n || j < 0 || j >= n || h < 0 || h >= hn)
        throw InputError("twisted basis index out of range");
    return (i * n + j) * hn + h;
}

std::optional<Vec> unit_of(const GradedAlgebra& a) {
    long n = a.dim();
    if (n == 0) return Vec{};
    RowSpan sys(n + 1);
    // One equation per (side, basis i, coordinate l): the unknown u satisfies
    // u * e_i = e_i and e_i * u = e_i.
    for (int side = 0; side < 2; ++side)
        for (long i = 0; i < n; ++i) {
            Mat rows(n, Vec(n + 1));
            for (long k = 0; k < n; ++k) {
                const SVec& prod =
                    side == 0 ? a.basis_product(k, i) : a.basis_product(i, k);
                for (const auto& [l, v] : prod) rows[l][k] = v;
            }
            rows[i][n] = Cyclotomic(1);
            for (long l = 0; l < n; ++l) {
                sys.add(std::move(rows[l]));
                // A pivot in the right-hand column means 0 = 1: no unit.
                if (!sys.pivots().empty() && sys.pivots().back() == n)
                    return std::nullopt;
            }
        }
    Vec u(n);
    for (long r = 0; r < sys.dim(); ++r) {
        long p = sys.pivots()[r];
        if (p == n) return std::nullopt;
        u[p] = sys.rows()[r][n];
    }
    for (long i = 0; i < n; ++i) {
        Vec e = a.basis_vec(i);
        if (a.mul(u, e) != e || a.mul(e, u) != e) return std::nullopt;
    }
    return u;
}

long homogeneous_degree(const Vec& v, const std::vector<long>& coord_degrees) {
    long d;
    if (!try_homogeneous_degree(v, coord_degrees, &d))
        throw VerificationError("vector is not homogeneous");
    return d;
}

bool try_homogeneous_degree(const Vec& v, const std::vector<long>& coord_degrees,
                            long* out) {
    long d = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (d == -1)
            d = coord_degrees[i];
        else if (coord_degrees[i] != d)
            return false;
    }
    if (out) *out = (d == -1 ? 0 : d);
    return true;
}

GradedIdeal ideal_closure(const AlgPtr& a, const std::vector<Vec>& generators) {
    long n = a->dim();
    RowSpan span(n);
    std::vector<Vec> queue;
    for (const auto& g : generators) {
        if (!a->is_homogeneous(g))
            throw InputError("ideal generators must be homogeneous");
        if (span.add(g)) queue.push_back(g);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Vec v = queue[qi];
        for (long i = 0; i < n; ++i) {
            Vec l = a->left_mul_basis(i, v);
            if (span.add(l)) queue.push_back(std::move(l));
            Vec r = a->right_mul_basis(i, v);
            if (span.add(r)) queue.push_back(std::move(r));
        }
    }
    std::vector<long> degrees;
    for (const auto& row : span.rows())
        degrees.push_back(homogeneous_degree(row, a->degrees()));
    return GradedIdeal(a, std::move(span), std::move(degrees));
}

GradedIdeal jacobson_radical(const AlgPtr& a) {
    long n = a->dim();
    // t[l] = trace of left multiplication by e_l.
    Vec t(n);
    for (long l = 0; l < n; ++l)
        for (long m = 0; m < n; ++m)
            for (const auto& [k, v] : a->basis_product(l, m))
                if (k == m) t[l] += v;
    Mat trace_form(n, Vec(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (const auto& [l, v] : a->basis_product(i, j))
                if (!t[l].is_zero()) trace_form[i][j] += v * t[l];
    // The form pairs degree g only against degree g^{-1}, so its kernel is
    // graded and can be assembled degree by degree.
    std::map<long, std::vector<long>> bucket;
    for (long i = 0; i < n; ++i) bucket[a->degree(i)].push_back(i);
    RowSpan span(n);
    std::vector<long> degrees;
    for (const auto& [g, vars] : bucket) {
        long ginv = a->group().inverse(g);
        std::vector<long> cons;
        auto it = bucket.find(ginv);
        if (it != bucket.end()) cons = it->second;
        std::vector<Vec> kernel;
        if (cons.empty()) {
            for (size_t c = 0; c < vars.size(); ++c) {
                Vec unit(vars.size());
                unit[c] = Cyclotomic(1);
                kernel.push_back(std::move(unit));
            }
        } else {
            Mat sys(cons.size(), Vec(vars.size()));
            for (size_t r = 0; r < cons.size(); ++r)
                for (size_t c = 0; c < vars.size(); ++c)
                    sys[r][c] = trace_form[vars[c]][cons[r]];
            kernel = kernel_basis(sys);
        }
        for (const auto& k : kernel) {
            Vec full(n);
            for (size_t c = 0; c < vars.size(); ++c) full[vars[c]] = k[c];
            if (span.add(std::move(full))) degrees.push_back(g);
        }
    }
    GradedIdeal j(a, std::move(span), std::move(degrees));
    for (const auto& row : j.span.rows()) {
        for (long i = 0; i < n; ++i)
            if (!j.span.contains(a->left_mul_basis(i, row)) ||
                !j.span.contains(a->right_mul_basis(i, row)))
                throw VerificationError("radical candidate is not a two-sided ideal");
        (void)homogeneous_degree(row, a->degrees());
    }
    if (!nilpotency_index(*a, j.span))
        throw VerificationError("radical candidate is not nilpotent");
    return j;
}

AlgPtr quotient_algebra(const AlgPtr& a, const GradedIdeal& ideal) {
    if (ideal.parent.get() != a.get())
        throw InputError("ideal belongs to a different algebra");
    long n = a->dim();
    for (const auto& row : ideal.span.rows())
        for (long i = 0; i < n; ++i)
            if (!ideal.span.contains(a->left_mul_basis(i, row)) ||
                !ideal.span.contains(a->right_mul_basis(i, row)))
                throw InputError("quotient needs a two-sided ideal");
    std::vector<long> np = ideal.span.non_pivots();
    long q = (long)np.size();
    std::vector<std::string> labels;
    std::vector<long> degrees;
    for (long c : np) {
        labels.push_back(a->label(c));
        degrees.push_back(a->degree(c));
    }
    std::vector<std::vector<SVec>> mult(q, std::vector<SVec>(q));
    for (long p = 0; p < q; ++p)
        for (long r = 0; r < q; ++r) {
            Vec w = ideal.span.reduce(a->mul(a->basis_vec(np[p]), a->basis_vec(np[r])));
            SVec s;
            for (long t = 0; t < q; ++t)
                if (!w[np[t]].is_zero()) s.emplace_back(t, w[np[t]]);
            mult[p][r] = std::move(s);
        }
    return make_graded_algebra(a->group(), std::move(labels), std::move(mult),
                               std::move(degrees));
}

std::optional<long> nilpotency_index(const GradedAlgebra& a, const RowSpan& span) {
    for (const auto& x : span.rows())
        for (const auto& y : span.rows())
            if (!span.contains(a.mul(x, y)))
                throw InputError("nilpotency index needs a multiplicatively closed span");
    if (span.dim() == 0) return 1;
    RowSpan power = span;
    for (long k = 1; k <= a.dim() + 1; ++k) {
        RowSpan next(span.ncols());
        for (const auto& x : power.rows())
            for (const auto& y : span.rows()) next.add(a.mul(x, y));
        if (next.dim() == 0) return k + 1;
        if (next.same_span(power)) return std::nullopt;
        power = std::move(next);
    }
    return std::nullopt;
}

std::optional<long> nilpotency_index(const AlgPtr& a) {
    RowSpan full(a->dim());
    for (long i = 0; i < a->dim(); ++i) full.add(a->basis_vec(i));
    return nilpotency_index(*a, full);
}

SimplicityResult is_graded_simple(const AlgPtr& a, long trials, uint64_t seed) {
    long n = a->dim();
    if (n == 0)
        return {Verdict3::no, std::nullopt, "the zero algebra is not graded simple"};
    bool square_zero = true;
    for (long i = 0; i < n && square_zero; ++i)
        for (long j = 0; j < n && square_zero; ++j)
            if (!a->basis_product(i, j).empty()) square_zero = false;
    if (square_zero) {
        if (n > 1) {
            GradedIdeal w = ideal_closure(a, {a->basis_vec(0)});
            return {Verdict3::no, std::move(w), "the square of the algebra is zero"};
        }
        return {Verdict3::no, std::nullopt, "the square of the algebra is zero"};
    }
    if (a->kind() != AlgebraKind::raw)
        return {Verdict3::yes, std::nullopt,
                "matrix algebra over a graded division algebra by construction"};
    GradedIdeal rad = jacobson_radical(a);
    if (rad.span.dim() == n) {
        // Nilpotent algebra with a nonzero square: that square is proper.
        std::vector<Vec> gens;
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                Vec p = a->mul(a->basis_vec(i), a->basis_vec(j));
                if (!vec_is_zero(p)) gens.push_back(std::move(p));
            }
        GradedIdeal w = ideal_closure(a, gens);
        return {Verdict3::no, std::move(w),
                "the square of the algebra is a proper nonzero graded ideal"};
    }
    if (rad.span.dim() > 0)
        return {Verdict3::no, std::move(rad),
                "the radical is a proper nonzero graded ideal"};
    for (long i = 0; i < n; ++i) {
        GradedIdeal w = ideal_closure(a, {a->basis_vec(i)});
        if (w.span.dim() > 0 && w.span.dim() < n)
            return {Verdict3::no, std::move(w),
                    "a homogeneous basis element generates a proper nonzero ideal"};
    }
    std::map<long, std::vector<long>> bucket;
    for (long i = 0; i < n; ++i) bucket[a->degree(i)].push_back(i);
    std::vector<const std::vector<long>*> buckets;
    for (const auto& [g, coords] : bucket) { (void)g; buckets.push_back(&coords); }
    Cyclotomic zeta = Cyclotomic::root_of_unity(4, 1);
    const Cyclotomic opts[5] = {Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1), zeta, -zeta};
    Lcg rng(seed);
    for (long trial = 0; trial < trials; ++trial) {
        const std::vector<long>& coords = *buckets[rng.below((long)buckets.size())];
        Vec v(n);
        bool nonzero = false;
        for (long c : coords) {
            const Cyclotomic& o = opts[rng.below(5)];
            if (!o.is_zero()) nonzero = true;
            v[c] = o;
        }
        if (!nonzero) continue;
        GradedIdeal w = ideal_closure(a, {v});
        if (w.span.dim() > 0 && w.span.dim() < n)
            return {Verdict3::no, std::move(w),
                    "a random homogeneous element generates a proper nonzero ideal"};
    }
    return {Verdict3::probably_yes, std::nullopt,
            "sampled homogeneous generators all generate the full algebra"};
}

} // namespace gbk
