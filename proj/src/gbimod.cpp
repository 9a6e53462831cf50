#include "gbk/gbimod.hpp"

#include <algorithm>
#include <map>

#include "gbk/character.hpp"
#include "gbk/errors.hpp"

namespace gbk {

namespace {

void axpy_svec(Vec& acc, const Cyclotomic& coeff, const SVec& s) {
    for (const auto& [idx, val] : s) acc[idx] += coeff * val;
}

std::string triple(long a, long b, long c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
           std::to_string(c) + ")";
}

} // namespace

GradedBimodule::GradedBimodule(AlgPtr left, AlgPtr right,
                               std::vector<std::vector<SVec>> left_act,
                               std::vector<std::vector<SVec>> right_act,
                               std::vector<long> degrees)
    : left_(std::move(left)),
      right_(std::move(right)),
      left_act_(std::move(left_act)),
      right_act_(std::move(right_act)),
      degrees_(std::move(degrees)),
      dim_((long)degrees_.size()) {
    if (!left_ || !right_) throw InputError("bimodule needs both algebras");
    if (left_->group() != right_->group())
        throw InputError("bimodule algebras must share one grading group");
    if (dim_ > kMaxAlgebraDim)
        throw InputError("bimodule dimension " + std::to_string(dim_) +
                         " exceeds the hard cap " + std::to_string(kMaxAlgebraDim));
    if ((long)left_act_.size() != left_->dim())
        throw InputError("left action tensor has the wrong algebra extent");
    if ((long)right_act_.size() != dim_)
        throw InputError("right action tensor has the wrong module extent");
    for (auto& row : left_act_) {
        if ((long)row.size() != dim_)
            throw InputError("left action tensor has the wrong module extent");
        for (auto& s : row) {
            svec_normalize(s);
            for (const auto& [idx, val] : s) {
                (void)val;
                if (idx < 0 || idx >= dim_)
                    throw InputError("left action index out of range");
            }
        }
    }
    for (auto& row : right_act_) {
        if ((long)row.size() != right_->dim())
            throw InputError("right action tensor has the wrong algebra extent");
        for (auto& s : row) {
            svec_normalize(s);
            for (const auto& [idx, val] : s) {
                (void)val;
                if (idx < 0 || idx >= dim_)
                    throw InputError("right action index out of range");
            }
        }
    }
    const AbelianGroup& g = left_->group();
    for (long d : degrees_)
        if (d < 0 || d >= g.order())
            throw InputError("bimodule degree out of range for " + g.str());
    validate();
}

void GradedBimodule::validate() const {
    const AbelianGroup& g = left_->group();
    long na = left_->dim(), nb = right_->dim();
    for (long a = 0; a < na; ++a)
        for (long m = 0; m < dim_; ++m) {
            long want = g.op(left_->degree(a), degrees_[m]);
            for (const auto& [k, v] : left_act_[a][m]) {
                (void)v;
                if (degrees_[k] != want)
                    throw VerificationError("left action breaks the grading at " +
                                            triple(a, m, k));
            }
        }
    for (long m = 0; m < dim_; ++m)
        for (long b = 0; b < nb; ++b) {
            long want = g.op(degrees_[m], right_->degree(b));
            for (const auto& [k, v] : right_act_[m][b]) {
                (void)v;
                if (degrees_[k] != want)
                    throw VerificationError("right action breaks the grading at " +
                                            triple(m, b, k));
            }
        }
    SVec lhs, rhs;
    auto check = [&](const char* what, long x, long y, long z) {
        svec_normalize(lhs);
        svec_normalize(rhs);
        if (lhs != rhs)
            throw VerificationError(std::string(what) + " fails at " + triple(x, y, z));
        lhs.clear();
        rhs.clear();
    };
    for (long a1 = 0; a1 < na; ++a1)
        for (long a2 = 0; a2 < na; ++a2) {
            const SVec& prod = left_->basis_product(a1, a2);
            for (long m = 0; m < dim_; ++m) {
                for (const auto& [l, v] : prod)
                    for (const auto& [k, w] : left_act_[l][m]) lhs.emplace_back(k, v * w);
                for (const auto& [k, v] : left_act_[a2][m])
                    for (const auto& [t, w] : left_act_[a1][k]) rhs.emplace_back(t, v * w);
                check("left module law", a1, a2, m);
            }
        }
    for (long b1 = 0; b1 < nb; ++b1)
        for (long b2 = 0; b2 < nb; ++b2) {
            const SVec& prod = right_->basis_product(b1, b2);
            for (long m = 0; m < dim_; ++m) {
                for (const auto& [l, v] : prod)
                    for (const auto& [k, w] : right_act_[m][l]) lhs.emplace_back(k, v * w);
                for (const auto& [k, v] : right_act_[m][b1])
                    for (const auto& [t, w] : right_act_[k][b2]) rhs.emplace_back(t, v * w);
                check("right module law", m, b1, b2);
            }
        }
    for (long a = 0; a < na; ++a)
        for (long m = 0; m < dim_; ++m)
            for (long b = 0; b < nb; ++b) {
                for (const auto& [k, v] : left_act_[a][m])
                    for (const auto& [t, w] : right_act_[k][b]) lhs.emplace_back(t, v * w);
                for (const auto& [k, v] : right_act_[m][b])
                    for (const auto& [t, w] : left_act_[a][k]) rhs.emplace_back(t, v * w);
                check("two-sided module law", a, m, b);
            }
}

Vec GradedBimodule::basis_vec(long m) const {
    if (m < 0 || m >= dim_) throw InputError("bimodule basis index out of range");
    Vec v(dim_);
    v[m] = Cyclotomic(1);
    return v;
}

Vec GradedBimodule::act_left(const Vec& a, const Vec& m) const {
    if ((long)a.size() != left_->dim() || (long)m.size() != dim_)
        throw InputError("act_left: operand lengths do not match");
    Vec r(dim_);
    for (long i = 0; i < left_->dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; j < dim_; ++j)
            if (!m[j].is_zero()) axpy_svec(r, a[i] * m[j], left_act_[i][j]);
    }
    return r;
}

Vec GradedBimodule::act_right(const Vec& m, const Vec& b) const {
    if ((long)b.size() != right_->dim() || (long)m.size() != dim_)
        throw InputError("act_right: operand lengths do not match");
    Vec r(dim_);
    for (long j = 0; j < dim_; ++j) {
        if (m[j].is_zero()) continue;
        for (long i = 0; i < right_->dim(); ++i)
            if (!b[i].is_zero()) axpy_svec(r, m[j] * b[i], right_act_[j][i]);
    }
    return r;
}

Vec GradedBimodule::act_left_basis(long a, const Vec& m) const {
    Vec r(dim_);
    for (long j = 0; j < dim_; ++j)
        if (!m[j].is_zero()) axpy_svec(r, m[j], left_act_[a][j]);
    return r;
}

Vec GradedBimodule::act_right_basis(const Vec& m, long b) const {
    Vec r(dim_);
    for (long j = 0; j < dim_; ++j)
        if (!m[j].is_zero()) axpy_svec(r, m[j], right_act_[j][b]);
    return r;
}

Vec GradedBimodule::component(const Vec& m, long g) const {
    Vec r(dim_);
    for (long i = 0; i < dim_; ++i)
        if (degrees_[i] == g) r[i] = m[i];
    return r;
}

bool GradedBimodule::is_homogeneous(const Vec& m, long* deg_out) const {
    return try_homogeneous_degree(m, degrees_, deg_out);
}

BimodPtr make_bimodule(AlgPtr left, AlgPtr right,
                       std::vector<std::vector<SVec>> left_act,
                       std::vector<std::vector<SVec>> right_act,
                       std::vector<long> degrees) {
    return std::make_shared<GradedBimodule>(std::move(left), std::move(right),
                                            std::move(left_act), std::move(right_act),
                                            std::move(degrees));
}

BimodPtr regular_bimodule(const AlgPtr& a) {
    if (!a) throw InputError("regular bimodule needs an algebra");
    long n = a->dim();
    std::vector<std::vector<SVec>> l(n, std::vector<SVec>(n));
    std::vector<std::vector<SVec>> r(n, std::vector<SVec>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            l[i][j] = a->basis_product(i, j);
            r[j][i] = a->basis_product(j, i);
        }
    return make_bimodule(a, a, std::move(l), std::move(r), a->degrees());
}

BimodPtr twisted_regular_bimodule(const AlgPtr& b, long chi_index) {
    if (!b) throw InputError("twisted regular bimodule needs an algebra");
    if (!b->twisted())
        throw InputError(
            "twisted regular bimodule needs a twisted-constructor algebra");
    const AbelianGroup& h = b->twisted()->emb.sub();
    long hn = h.order();
    if (chi_index < 0 || chi_index >= hn)
        throw InputError("character index out of range");
    CharacterTable table = character_table(h);
    const Character& chi = table.chars[chi_index];
    long n = b->dim();
    std::vector<std::vector<SVec>> l(n, std::vector<SVec>(n));
    std::vector<std::vector<SVec>> r(n, std::vector<SVec>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            l[i][j] = b->basis_product(i, j);
            SVec scaled = b->basis_product(j, i);
            const Cyclotomic& factor = chi.value(i % hn);
            for (auto& [k, v] : scaled) {
                (void)k;
                v = v * factor;
            }
            r[j][i] = std::move(scaled);
        }
    return make_bimodule(b, b, std::move(l), std::move(r), b->degrees());
}

BimodPtr bimodule_direct_sum(const std::vector<BimodPtr>& parts) {
    if (parts.empty()) throw InputError("direct sum needs at least one part");
    const AlgPtr& la = parts[0]->left_alg();
    const AlgPtr& ra = parts[0]->right_alg();
    long dim = 0;
    for (const auto& p : parts) {
        if (p->left_alg() != la || p->right_alg() != ra)
            throw InputError("direct sum parts must share the algebra pair");
        dim += p->dim();
    }
    std::vector<std::vector<SVec>> l(la->dim(), std::vector<SVec>(dim));
    std::vector<std::vector<SVec>> r(dim, std::vector<SVec>(ra->dim()));
    std::vector<long> degrees;
    long off = 0;
    for (const auto& p : parts) {
        for (long m = 0; m < p->dim(); ++m) {
            degrees.push_back(p->degree(m));
            for (long a = 0; a < la->dim(); ++a) {
                SVec s = p->left_entry(a, m);
                for (auto& [k, v] : s) { (void)v; k += off; }
                l[a][off + m] = std::move(s);
            }
            for (long b = 0; b < ra->dim(); ++b) {
                SVec s = p->right_entry(m, b);
                for (auto& [k, v] : s) { (void)v; k += off; }
                r[off + m][b] = std::move(s);
            }
        }
        off += p->dim();
    }
    return make_bimodule(la, ra, std::move(l), std::move(r), std::move(degrees));
}

SubBimodule make_subbimodule(const BimodPtr& m, RowSpan span) {
    std::vector<long> degrees;
    for (const auto& row : span.rows())
        degrees.push_back(homogeneous_degree(row, m->degrees()));
    for (const auto& row : span.rows()) {
        for (long a = 0; a < m->left_alg()->dim(); ++a)
            if (!span.contains(m->act_left_basis(a, row)))
                throw VerificationError("span is not closed under the left action");
        for (long b = 0; b < m->right_alg()->dim(); ++b)
            if (!span.contains(m->act_right_basis(row, b)))
                throw VerificationError("span is not closed under the right action");
    }
    return SubBimodule(m, std::move(span), std::move(degrees));
}

SubBimodule generated_subbimodule(const BimodPtr& m, const std::vector<Vec>& gens) {
    RowSpan span(m->dim());
    std::vector<Vec> queue;
    for (const auto& g : gens) {
        if (!m->is_homogeneous(g))
            throw InputError("subbimodule generators must be homogeneous");
        if (span.add(g)) queue.push_back(g);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Vec v = queue[qi];
        for (long a = 0; a < m->left_alg()->dim(); ++a) {
            Vec p = m->act_left_basis(a, v);
            if (span.add(p)) queue.push_back(std::move(p));
        }
        for (long b = 0; b < m->right_alg()->dim(); ++b) {
            Vec p = m->act_right_basis(v, b);
            if (span.add(p)) queue.push_back(std::move(p));
        }
    }
    return make_subbimodule(m, std::move(span));
}

BimodPtr sub_as_bimodule(const SubBimodule& n) {
    const BimodPtr& m = n.parent;
    long d = n.span.dim();
    std::vector<std::vector<SVec>> l(m->left_alg()->dim(), std::vector<SVec>(d));
    std::vector<std::vector<SVec>> r(d, std::vector<SVec>(m->right_alg()->dim()));
    for (long k = 0; k < d; ++k) {
        const Vec& row = n.span.rows()[k];
        for (long a = 0; a < m->left_alg()->dim(); ++a) {
            auto c = rowspan_coords(n.span, m->act_left_basis(a, row));
            if (!c)
                throw VerificationError("span is not closed under the left action");
            l[a][k] = svec_from_dense(*c);
        }
        for (long b = 0; b < m->right_alg()->dim(); ++b) {
            auto c = rowspan_coords(n.span, m->act_right_basis(row, b));
            if (!c)
                throw VerificationError("span is not closed under the right action");
            r[k][b] = svec_from_dense(*c);
        }
    }
    return make_bimodule(m->left_alg(), m->right_alg(), std::move(l), std::move(r),
                         n.degrees);
}

HomogeneousHom::HomogeneousHom(BimodPtr src, BimodPtr tgt, Mat mat, long shift_in)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(mat)),
      shift(shift_in) {
    if (!source || !target) throw InputError("homomorphism needs both bimodules");
    if (source->left_alg() != target->left_alg() ||
        source->right_alg() != target->right_alg())
        throw InputError("homomorphism needs one algebra pair on both sides");
    const AbelianGroup& g = source->group();
    if (shift < 0 || shift >= g.order())
        throw InputError("homomorphism shift out of range");
    if ((long)matrix.size() != target->dim())
        throw InputError("homomorphism matrix has the wrong row count");
    for (const auto& row : matrix)
        if ((long)row.size() != source->dim())
            throw InputError("homomorphism matrix has the wrong column count");
    long ds = source->dim(), dt = target->dim();
    Mat cols(ds, Vec(dt));
    for (long j = 0; j < ds; ++j)
        for (long i = 0; i < dt; ++i) cols[j][i] = matrix[i][j];
    for (long j = 0; j < ds; ++j) {
        if (vec_is_zero(cols[j])) continue;
        long d;
        if (!try_homogeneous_degree(cols[j], target->degrees(), &d) ||
            d != g.op(source->degree(j), shift))
            throw VerificationError("homomorphism does not shift degrees by " +
                                    g.element_str(shift));
    }
    for (long a = 0; a < source->left_alg()->dim(); ++a)
        for (long j = 0; j < ds; ++j) {
            Vec lhs(dt);
            for (const auto& [k, v] : source->left_entry(a, j))
                vec_axpy(lhs, v, cols[k]);
            if (lhs != target->act_left_basis(a, cols[j]))
                throw VerificationError("homomorphism is not a left module map at (" +
                                        std::to_string(a) + ", " + std::to_string(j) +
                                        ")");
        }
    for (long b = 0; b < source->right_alg()->dim(); ++b)
        for (long j = 0; j < ds; ++j) {
            Vec lhs(dt);
            for (const auto& [k, v] : source->right_entry(j, b))
                vec_axpy(lhs, v, cols[k]);
            if (lhs != target->act_right_basis(cols[j], b))
                throw VerificationError(
                    "homomorphism is not a right module map at (" + std::to_string(j) +
                    ", " + std::to_string(b) + ")");
        }
}

Vec HomogeneousHom::apply(const Vec& x) const {
    if ((long)x.size() != source->dim())
        throw InputError("homomorphism applied to a vector of the wrong length");
    return mat_apply(matrix, x);
}

BimoduleQuotient quotient_bimodule(const BimodPtr& m, const SubBimodule& n) {
    if (n.parent.get() != m.get())
        throw InputError("subbimodule belongs to a different bimodule");
    for (const auto& row : n.span.rows()) {
        (void)homogeneous_degree(row, m->degrees());
        for (long a = 0; a < m->left_alg()->dim(); ++a)
            if (!n.span.contains(m->act_left_basis(a, row)))
                throw InputError("quotient needs an action-closed span");
        for (long b = 0; b < m->right_alg()->dim(); ++b)
            if (!n.span.contains(m->act_right_basis(row, b)))
                throw InputError("quotient needs an action-closed span");
    }
    std::vector<long> np = n.span.non_pivots();
    long dq = (long)np.size();
    std::vector<long> degrees;
    for (long c : np) degrees.push_back(m->degree(c));
    auto project = [&](const Vec& v) {
        Vec w = n.span.reduce(v);
        Vec out(dq);
        for (long t = 0; t < dq; ++t) out[t] = w[np[t]];
        return out;
    };
    std::vector<std::vector<SVec>> l(m->left_alg()->dim(), std::vector<SVec>(dq));
    std::vector<std::vector<SVec>> r(dq, std::vector<SVec>(m->right_alg()->dim()));
    for (long t = 0; t < dq; ++t) {
        Vec base = m->basis_vec(np[t]);
        for (long a = 0; a < m->left_alg()->dim(); ++a)
            l[a][t] = svec_from_dense(project(m->act_left_basis(a, base)));
        for (long b = 0; b < m->right_alg()->dim(); ++b)
            r[t][b] = svec_from_dense(project(m->act_right_basis(base, b)));
    }
    BimodPtr q = make_bimodule(m->left_alg(), m->right_alg(), std::move(l),
                               std::move(r), std::move(degrees));
    Mat p(dq, Vec(m->dim()));
    for (long c = 0; c < m->dim(); ++c) {
        Vec img = project(m->basis_vec(c));
        for (long t = 0; t < dq; ++t) p[t][c] = img[t];
    }
    HomogeneousHom proj(m, q, std::move(p), m->group().identity());
    return {q, std::move(proj)};
}

KernelImage hom_kernel_image(const HomogeneousHom& phi) {
    const BimodPtr& src = phi.source;
    const BimodPtr& tgt = phi.target;
    const AbelianGroup& g = src->group();
    long ds = src->dim(), dt = tgt->dim();
    std::map<long, std::vector<long>> bucket;
    for (long j = 0; j < ds; ++j) bucket[src->degree(j)].push_back(j);
    RowSpan ker(ds);
    for (const auto& [deg, vars] : bucket) {
        long tdeg = g.op(deg, phi.shift);
        std::vector<long> rows;
        for (long i = 0; i < dt; ++i)
            if (tgt->degree(i) == tdeg) rows.push_back(i);
        std::vector<Vec> kernel;
        if (rows.empty()) {
            for (size_t c = 0; c < vars.size(); ++c) {
                Vec unit(vars.size());
                unit[c] = Cyclotomic(1);
                kernel.push_back(std::move(unit));
            }
        } else {
            Mat sys(rows.size(), Vec(vars.size()));
            for (size_t ri = 0; ri < rows.size(); ++ri)
                for (size_t c = 0; c < vars.size(); ++c)
                    sys[ri][c] = phi.matrix[rows[ri]][vars[c]];
            kernel = kernel_basis(sys);
        }
        for (const auto& k : kernel) {
            Vec full(ds);
            for (size_t c = 0; c < vars.size(); ++c) full[vars[c]] = k[c];
            ker.add(std::move(full));
        }
    }
    RowSpan img(dt);
    for (long j = 0; j < ds; ++j) {
        Vec col(dt);
        for (long i = 0; i < dt; ++i) col[i] = phi.matrix[i][j];
        img.add(std::move(col));
    }
    if (ker.dim() + img.dim() != ds)
        throw VerificationError("kernel and image dimensions do not add up");
    SubBimodule kernel_sub = make_subbimodule(src, std::move(ker));
    SubBimodule image_sub = make_subbimodule(tgt, std::move(img));
    // The induced map on the quotient by the kernel must be an isomorphism
    // onto the image.
    BimoduleQuotient q = quotient_bimodule(src, kernel_sub);
    std::vector<long> np = kernel_sub.span.non_pivots();
    long dq = (long)np.size();
    Mat induced(dt, Vec(dq));
    for (long t = 0; t < dq; ++t)
        for (long i = 0; i < dt; ++i) induced[i][t] = phi.matrix[i][np[t]];
    HomogeneousHom ind(q.bimodule, tgt, induced, phi.shift);
    if (mat_rank(induced) != dq)
        throw VerificationError("induced map on the quotient is not injective");
    RowSpan ind_img(dt);
    for (long t = 0; t < dq; ++t) {
        Vec col(dt);
        for (long i = 0; i < dt; ++i) col[i] = induced[i][t];
        ind_img.add(std::move(col));
    }
    if (!ind_img.same_span(image_sub.span))
        throw VerificationError("induced map does not reach the image");
    return {std::move(kernel_sub), std::move(image_sub)};
}

void verify_algebra_isomorphism(const AlgPtr& a, const AlgPtr& b, const Mat& phi) {
    if (!a || !b) throw InputError("isomorphism needs both algebras");
    if (a->group() != b->group())
        throw InputError("isomorphism needs one grading group on both sides");
    if ((long)phi.size() != b->dim())
        throw InputError("isomorphism matrix has the wrong row count");
    for (const auto& row : phi)
        if ((long)row.size() != a->dim())
            throw InputError("isomorphism matrix has the wrong column count");
    if (a->dim() != b->dim() || mat_rank(phi) != a->dim())
        throw VerificationError("isomorphism candidate is not bijective");
    long n = a->dim();
    Mat cols(n, Vec(n));
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < n; ++i) cols[j][i] = phi[i][j];
    for (long j = 0; j < n; ++j) {
        long d;
        if (!try_homogeneous_degree(cols[j], b->degrees(), &d) || d != a->degree(j))
            throw VerificationError("isomorphism candidate does not preserve degrees");
    }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Vec lhs(n);
            for (const auto& [k, v] : a->basis_product(i, j)) vec_axpy(lhs, v, cols[k]);
            if (lhs != b->mul(cols[i], cols[j]))
                throw VerificationError("isomorphism candidate is not multiplicative at (" +
                                        std::to_string(i) + ", " + std::to_string(j) +
                                        ")");
        }
}

BimodPtr transport_bimodule(const BimodPtr& m, const AlgPtr& b, const Mat& phi) {
    if (m->left_alg() != m->right_alg())
        throw InputError("transport needs a bimodule over one algebra on both sides");
    verify_algebra_isomorphism(m->left_alg(), b, phi);
    auto inv = mat_inverse(phi);
    if (!inv) throw VerificationError("isomorphism candidate is not invertible");
    long n = b->dim(), dm = m->dim();
    std::vector<std::vector<SVec>> l(n, std::vector<SVec>(dm));
    std::vector<std::vector<SVec>> r(dm, std::vector<SVec>(n));
    for (long bb = 0; bb < n; ++bb) {
        Vec pre(n);
        for (long i = 0; i < n; ++i) pre[i] = (*inv)[i][bb];
        for (long mm = 0; mm < dm; ++mm) {
            l[bb][mm] = svec_from_dense(m->act_left(pre, m->basis_vec(mm)));
            r[mm][bb] = svec_from_dense(m->act_right(m->basis_vec(mm), pre));
        }
    }
    return make_bimodule(b, b, std::move(l), std::move(r), m->degrees());
}

} // namespace gbk
