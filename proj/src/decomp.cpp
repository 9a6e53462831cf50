#include "gbk/decomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gbk/errors.hpp"
#include "gbk/rng.hpp"

namespace gbk {

namespace {

struct SquareSetup {
    AlgPtr alg;
    Vec unit;
};

// Common preconditions of the character machinery: one algebra on both sides,
// built by a twisted constructor, acting unitarily.
SquareSetup require_square_twisted_unitary(const BimodPtr& m, const std::string& who) {
    if (m->left_alg() != m->right_alg())
        throw InputError(who + " needs one algebra on both sides");
    const AlgPtr& b = m->left_alg();
    if (!b->twisted())
        throw InputError(who + " needs a twisted-constructor algebra");
    auto u = unit_of(*b);
    if (!u) throw InputError(who + " needs a unital algebra");
    for (long k = 0; k < m->dim(); ++k) {
        Vec e = m->basis_vec(k);
        if (m->act_left(*u, e) != e || m->act_right(e, *u) != e)
            throw InputError(who + " needs a unitary bimodule");
    }
    return {b, std::move(*u)};
}

bool square_twisted_unitary(const BimodPtr& m) {
    if (m->left_alg() != m->right_alg()) return false;
    const AlgPtr& b = m->left_alg();
    if (!b->twisted()) return false;
    auto u = unit_of(*b);
    if (!u) return false;
    for (long k = 0; k < m->dim(); ++k) {
        Vec e = m->basis_vec(k);
        if (m->act_left(*u, e) != e || m->act_right(e, *u) != e) return false;
    }
    return true;
}

bool left_action_faithful(const GradedBimodule& m, const std::vector<Vec>& alg_vecs,
                          const std::vector<Vec>& mod_vecs) {
    if (alg_vecs.empty() || mod_vecs.empty()) return alg_vecs.empty();
    long cols = (long)alg_vecs.size(), dm = m.dim();
    Mat sys(mod_vecs.size() * dm, Vec(cols));
    for (size_t x = 0; x < mod_vecs.size(); ++x)
        for (long v = 0; v < cols; ++v) {
            Vec img = m.act_left(alg_vecs[v], mod_vecs[x]);
            for (long t = 0; t < dm; ++t) sys[x * dm + t][v] = img[t];
        }
    return kernel_basis(sys).empty();
}

bool right_action_faithful(const GradedBimodule& m, const std::vector<Vec>& alg_vecs,
                           const std::vector<Vec>& mod_vecs) {
    if (alg_vecs.empty() || mod_vecs.empty()) return alg_vecs.empty();
    long cols = (long)alg_vecs.size(), dm = m.dim();
    Mat sys(mod_vecs.size() * dm, Vec(cols));
    for (size_t x = 0; x < mod_vecs.size(); ++x)
        for (long v = 0; v < cols; ++v) {
            Vec img = m.act_right(mod_vecs[x], alg_vecs[v]);
            for (long t = 0; t < dm; ++t) sys[x * dm + t][v] = img[t];
        }
    return kernel_basis(sys).empty();
}

// One-sided spans of a single element under the algebra action.
RowSpan left_orbit_span(const GradedBimodule& m, const Vec& w) {
    RowSpan s(m.dim());
    for (long b = 0; b < m.left_alg()->dim(); ++b) s.add(m.act_left_basis(b, w));
    return s;
}

RowSpan right_orbit_span(const GradedBimodule& m, const Vec& w) {
    RowSpan s(m.dim());
    for (long b = 0; b < m.right_alg()->dim(); ++b) s.add(m.act_right_basis(w, b));
    return s;
}

Vec random_homogeneous(const GradedBimodule& m, Lcg& rng,
                       const std::vector<const std::vector<long>*>& buckets,
                       const Cyclotomic* opts) {
    const std::vector<long>& coords = *buckets[rng.below((long)buckets.size())];
    Vec v(m.dim());
    for (long c : coords) v[c] = opts[rng.below(5)];
    return v;
}

} // namespace

PeirceBlocks peirce4(const BimodPtr& m) {
    auto ul = unit_of(*m->left_alg());
    if (!ul) throw InputError("left algebra has no unit");
    auto ur = unit_of(*m->right_alg());
    if (!ur) throw InputError("right algebra has no unit");
    const AbelianGroup& g = m->group();
    if (homogeneous_degree(*ul, m->left_alg()->degrees()) != g.identity() ||
        homogeneous_degree(*ur, m->right_alg()->degrees()) != g.identity())
        throw VerificationError("algebra unit is not homogeneous of trivial degree");
    long dm = m->dim();
    Mat opl(dm, Vec(dm)), opr(dm, Vec(dm));
    for (long j = 0; j < dm; ++j) {
        Vec lc = m->act_left(*ul, m->basis_vec(j));
        Vec rc = m->act_right(m->basis_vec(j), *ur);
        for (long i = 0; i < dm; ++i) {
            opl[i][j] = lc[i];
            opr[i][j] = rc[i];
        }
    }
    if (!mat_equal(mat_mul(opl, opl), opl) || !mat_equal(mat_mul(opr, opr), opr))
        throw VerificationError("unit action is not idempotent");
    if (!mat_equal(mat_mul(opl, opr), mat_mul(opr, opl)))
        throw VerificationError("unit actions do not commute");
    std::map<long, std::vector<long>> bucket;
    for (long i = 0; i < dm; ++i) bucket[m->degree(i)].push_back(i);
    std::vector<std::vector<RowSpan>> grid(2, std::vector<RowSpan>(2, RowSpan(dm)));
    for (const auto& [deg, coords] : bucket) {
        (void)deg;
        long bn = (long)coords.size();
        for (int el = 0; el < 2; ++el)
            for (int er = 0; er < 2; ++er) {
                Mat sys(2 * bn, Vec(bn));
                for (long ri = 0; ri < bn; ++ri)
                    for (long ci = 0; ci < bn; ++ci) {
                        sys[ri][ci] = opl[coords[ri]][coords[ci]];
                        sys[bn + ri][ci] = opr[coords[ri]][coords[ci]];
                        if (ri == ci) {
                            if (el) sys[ri][ci] -= Cyclotomic(1);
                            if (er) sys[bn + ri][ci] -= Cyclotomic(1);
                        }
                    }
                for (const auto& k : kernel_basis(sys)) {
                    Vec full(dm);
                    for (long ci = 0; ci < bn; ++ci) full[coords[ci]] = k[ci];
                    grid[el][er].add(std::move(full));
                }
            }
    }
    long total = grid[0][0].dim() + grid[1][0].dim() + grid[0][1].dim() +
                 grid[1][1].dim();
    if (total != dm)
        throw VerificationError("Peirce blocks do not fill the bimodule");
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (intersection_dim(grid[a / 2][a % 2], grid[b / 2][b % 2]) != 0)
                throw VerificationError("Peirce blocks overlap");
    Vec zero(dm);
    for (int el = 0; el < 2; ++el)
        for (int er = 0; er < 2; ++er)
            for (const auto& x : grid[el][er].rows()) {
                Vec lx = m->act_left(*ul, x);
                Vec rx = m->act_right(x, *ur);
                if (lx != (el ? x : zero) || rx != (er ? x : zero))
                    throw VerificationError("Peirce membership law fails");
                if (el && er && m->act_right(m->act_left(*ul, x), *ur) != x)
                    throw VerificationError("Peirce membership law fails");
            }
    if (m->left_alg()->kind() != AlgebraKind::raw) {
        std::vector<Vec> basis;
        for (long a = 0; a < m->left_alg()->dim(); ++a)
            basis.push_back(m->left_alg()->basis_vec(a));
        for (int er = 0; er < 2; ++er)
            if (grid[1][er].dim() > 0 &&
                !left_action_faithful(*m, basis, grid[1][er].rows()))
                throw VerificationError(
                    "left algebra does not act faithfully on a unitary block");
    }
    if (m->right_alg()->kind() != AlgebraKind::raw) {
        std::vector<Vec> basis;
        for (long a = 0; a < m->right_alg()->dim(); ++a)
            basis.push_back(m->right_alg()->basis_vec(a));
        for (int el = 0; el < 2; ++el)
            if (grid[el][1].dim() > 0 &&
                !right_action_faithful(*m, basis, grid[el][1].rows()))
                throw VerificationError(
                    "right algebra does not act faithfully on a unitary block");
    }
    return {std::move(*ul),
            std::move(*ur),
            make_subbimodule(m, std::move(grid[0][0])),
            make_subbimodule(m, std::move(grid[1][0])),
            make_subbimodule(m, std::move(grid[0][1])),
            make_subbimodule(m, std::move(grid[1][1]))};
}

IdealPeirceResult ideal_peirce_products(const AlgPtr& ambient,
                                        const std::vector<Vec>& subalgebra_basis,
                                        const GradedIdeal& n) {
    if (!ambient) throw InputError("ideal Peirce products need an ambient algebra");
    if (n.parent.get() != ambient.get())
        throw InputError("ideal belongs to a different algebra");
    long na = ambient->dim();
    long k = (long)subalgebra_basis.size();
    if (k == 0) throw InputError("subalgebra basis must be nonempty");
    RowSpan plain(na);
    RowSpan aug(na + k);
    std::vector<long> bdeg;
    for (long i = 0; i < k; ++i) {
        const Vec& v = subalgebra_basis[i];
        if ((long)v.size() != na)
            throw InputError("subalgebra basis vector has the wrong length");
        long d;
        if (!ambient->is_homogeneous(v, &d) || vec_is_zero(v))
            throw InputError("subalgebra basis must be homogeneous and nonzero");
        bdeg.push_back(d);
        plain.add(v);
        Vec ext(na + k);
        for (long t = 0; t < na; ++t) ext[t] = v[t];
        ext[na + i] = Cyclotomic(1);
        aug.add(std::move(ext));
    }
    if (plain.dim() != k)
        throw InputError("subalgebra basis is linearly dependent");
    auto coords_of = [&](const Vec& v) -> std::optional<Vec> {
        Vec ext(na + k);
        for (long t = 0; t < na; ++t) ext[t] = v[t];
        Vec red = aug.reduce(std::move(ext));
        for (long t = 0; t < na; ++t)
            if (!red[t].is_zero()) return std::nullopt;
        Vec c(k);
        for (long i = 0; i < k; ++i) c[i] = -red[na + i];
        return c;
    };
    std::vector<std::vector<SVec>> mult(k, std::vector<SVec>(k));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) {
            auto c = coords_of(ambient->mul(subalgebra_basis[i], subalgebra_basis[j]));
            if (!c) throw InputError("basis does not span a subalgebra");
            mult[i][j] = svec_from_dense(*c);
        }
    AlgPtr b = make_graded_algebra(ambient->group(), {}, std::move(mult), bdeg);
    if (!unit_of(*b)) throw InputError("subalgebra has no unit");
    long dn = n.span.dim();
    const std::vector<Vec>& nrows = n.span.rows();
    std::vector<long> ndeg;
    for (const auto& row : nrows)
        ndeg.push_back(homogeneous_degree(row, ambient->degrees()));
    std::vector<std::vector<SVec>> l(k, std::vector<SVec>(dn));
    std::vector<std::vector<SVec>> r(dn, std::vector<SVec>(k));
    for (long i = 0; i < k; ++i)
        for (long mrow = 0; mrow < dn; ++mrow) {
            auto cl = rowspan_coords(n.span, ambient->mul(subalgebra_basis[i], nrows[mrow]));
            auto cr = rowspan_coords(n.span, ambient->mul(nrows[mrow], subalgebra_basis[i]));
            if (!cl || !cr)
                throw InputError("span is not an ideal over the subalgebra");
            l[i][mrow] = svec_from_dense(*cl);
            r[mrow][i] = svec_from_dense(*cr);
        }
    BimodPtr bim = make_bimodule(b, b, std::move(l), std::move(r), std::move(ndeg));
    PeirceBlocks blocks = peirce4(bim);
    auto lift = [&](const Vec& c) {
        Vec v(na);
        for (long t = 0; t < dn; ++t)
            if (!c[t].is_zero()) vec_axpy(v, c[t], nrows[t]);
        return v;
    };
    const SubBimodule* blk[2][2] = {{&blocks.m00, &blocks.m01},
                                    {&blocks.m10, &blocks.m11}};
    std::vector<Vec> amb[2][2];
    std::vector<RowSpan> amb_span(4, RowSpan(na));
    for (int r0 = 0; r0 < 2; ++r0)
        for (int s0 = 0; s0 < 2; ++s0)
            for (const auto& row : blk[r0][s0]->span.rows()) {
                Vec v = lift(row);
                amb_span[r0 * 2 + s0].add(v);
                amb[r0][s0].push_back(std::move(v));
            }
    for (int rr = 0; rr < 2; ++rr)
        for (int pp = 0; pp < 2; ++pp)
            for (int qq = 0; qq < 2; ++qq)
                for (int ss = 0; ss < 2; ++ss)
                    for (const auto& x : amb[rr][pp])
                        for (const auto& y : amb[qq][ss]) {
                            Vec prod = ambient->mul(x, y);
                            std::string where =
                                "N_" + std::to_string(rr) + std::to_string(pp) +
                                " N_" + std::to_string(qq) + std::to_string(ss);
                            if (pp == qq) {
                                if (!amb_span[rr * 2 + ss].contains(prod))
                                    throw VerificationError(
                                        "Peirce containment fails at " + where);
                            } else if (!vec_is_zero(prod)) {
                                throw VerificationError(
                                    "Peirce product " + where + " is nonzero");
                            }
                        }
    Mat sub_rows(subalgebra_basis.begin(), subalgebra_basis.end());
    Mat ideal_rows(nrows.begin(), nrows.end());
    return {std::move(b), std::move(sub_rows), std::move(bim), std::move(ideal_rows),
            std::move(blocks)};
}

Vec normalize_seed(const BimodPtr& m, const Vec& seed) {
    auto setup = require_square_twisted_unitary(m, "seed normalization");
    if ((long)seed.size() != m->dim())
        throw InputError("seed has the wrong length");
    if (vec_is_zero(seed)) throw InputError("seed must be nonzero");
    if (!m->is_homogeneous(seed))
        throw InputError("seed must be homogeneous");
    const TwistedData& data = *setup.alg->twisted();
    long nn = data.n;
    const GradedAlgebra& b = *setup.alg;
    for (long i0 = 0; i0 < nn; ++i0)
        for (long j0 = 0; j0 < nn; ++j0) {
            Vec corner = m->act_left_basis(
                twisted_basis_index(b, i0, i0, 0),
                m->act_right_basis(seed, twisted_basis_index(b, j0, j0, 0)));
            if (vec_is_zero(corner)) continue;
            Vec w0 = m->act_left_basis(
                twisted_basis_index(b, 0, i0, 0),
                m->act_right_basis(seed, twisted_basis_index(b, j0, 0, 0)));
            Cyclotomic see = data.sigma.value(0, 0);
            Vec check = m->act_left_basis(
                twisted_basis_index(b, 0, 0, 0),
                m->act_right_basis(w0, twisted_basis_index(b, 0, 0, 0)));
            if (vec_is_zero(w0) || check != vec_scaled(w0, see * see))
                throw VerificationError("corner transport identity fails");
            return w0;
        }
    throw VerificationError("corner scan found no nonzero corner in a unitary bimodule");
}

Vec build_m_ij(const BimodPtr& m, const Vec& w0, long g, long i, long j) {
    auto setup = require_square_twisted_unitary(m, "m_ij construction");
    const TwistedData& data = *setup.alg->twisted();
    const AbelianGroup& h = data.emb.sub();
    long hn = h.order(), nn = data.n;
    if (i < 0 || i >= nn || j < 0 || j >= nn)
        throw InputError("matrix index out of range");
    if (g < 0 || g >= hn) throw InputError("group element out of range");
    const GradedAlgebra& b = *setup.alg;
    Vec acc(m->dim());
    for (long hh = 0; hh < hn; ++hh) {
        long tail = h.op(h.inverse(hh), g);
        Cyclotomic coeff = data.sigma.value(hh, tail).inv();
        Vec term = m->act_left_basis(
            twisted_basis_index(b, i, 0, hh),
            m->act_right_basis(w0, twisted_basis_index(b, 0, j, tail)));
        vec_axpy(acc, coeff, term);
    }
    return acc;
}

ChiElement build_w_chi(const BimodPtr& m, const Vec& w0, const CharacterTable& table,
                       long chi_index) {
    auto setup = require_square_twisted_unitary(m, "character element construction");
    const TwistedData& data = *setup.alg->twisted();
    const AbelianGroup& h = data.emb.sub();
    if (table.group != h)
        throw InputError("character table group does not match the algebra");
    if (chi_index < 0 || chi_index >= (long)table.chars.size())
        throw InputError("character index out of range");
    const Character& chi = table.chars[chi_index];
    long hn = h.order(), nn = data.n;
    const GradedAlgebra& b = *setup.alg;
    Vec acc(m->dim());
    for (long i = 0; i < nn; ++i)
        for (long hh = 0; hh < hn; ++hh) {
            long hinv = h.inverse(hh);
            Cyclotomic coeff = chi.value(hh) * data.sigma.value(hh, hinv).inv();
            Vec term = m->act_left_basis(
                twisted_basis_index(b, i, 0, hh),
                m->act_right_basis(w0, twisted_basis_index(b, 0, i, hinv)));
            vec_axpy(acc, coeff, term);
        }
    if (!vec_is_zero(acc)) {
        for (long p = 0; p < nn; ++p)
            for (long q = 0; q < nn; ++q)
                for (long t = 0; t < hn; ++t) {
                    long idx = twisted_basis_index(b, p, q, t);
                    Vec lhs = m->act_left_basis(idx, acc);
                    Vec rhs = vec_scaled(m->act_right_basis(acc, idx),
                                         chi.value(t).inv());
                    if (lhs != rhs)
                        throw VerificationError(
                            "character commutation fails on basis element " +
                            b.label(idx));
                }
    }
    long deg = homogeneous_degree(acc, m->degrees());
    return {std::move(acc), chi_index, chi, w0, deg};
}

ChiElement irreducible_generator(const BimodPtr& m) {
    auto setup = require_square_twisted_unitary(m, "irreducible generator extraction");
    if (m->dim() == 0)
        throw InputError("input not irreducible: the bimodule is zero");
    const AbelianGroup& h = setup.alg->twisted()->emb.sub();
    CharacterTable table = character_table(h);
    Vec w0 = normalize_seed(m, m->basis_vec(0));
    for (long c = 0; c < (long)table.chars.size(); ++c) {
        ChiElement ce = build_w_chi(m, w0, table, c);
        if (vec_is_zero(ce.vector)) continue;
        RowSpan left = left_orbit_span(*m, ce.vector);
        if (left.dim() != m->dim())
            throw InputError(
                "input not irreducible: a character element generates a proper "
                "subbimodule");
        RowSpan right = right_orbit_span(*m, ce.vector);
        if (!left.same_span(right))
            throw VerificationError("left and right generator spans differ");
        return ce;
    }
    throw InputError("input not irreducible: every character element vanishes");
}

FgDecomposition decompose_fg(const BimodPtr& m) {
    auto setup = require_square_twisted_unitary(m, "bimodule decomposition");
    const TwistedData& data = *setup.alg->twisted();
    const AbelianGroup& h = data.emb.sub();
    const GradedAlgebra& b = *setup.alg;
    long nn = data.n;
    CharacterTable table = character_table(h);
    long dm = m->dim();
    RowSpan acc(dm);
    FgDecomposition out;
    while (acc.dim() < dm) {
        long pick = -1;
        for (long k = 0; k < dm; ++k)
            if (!acc.contains(m->basis_vec(k))) {
                pick = k;
                break;
            }
        if (pick < 0)
            throw VerificationError("no basis vector escapes the accumulated span");
        Vec seed = m->basis_vec(pick);
        Vec w0;
        bool found = false;
        for (long i0 = 0; i0 < nn && !found; ++i0)
            for (long j0 = 0; j0 < nn && !found; ++j0) {
                Vec corner = m->act_left_basis(
                    twisted_basis_index(b, i0, i0, 0),
                    m->act_right_basis(seed, twisted_basis_index(b, j0, j0, 0)));
                if (acc.contains(corner)) continue;
                w0 = m->act_left_basis(
                    twisted_basis_index(b, 0, i0, 0),
                    m->act_right_basis(seed, twisted_basis_index(b, j0, 0, 0)));
                found = true;
            }
        if (!found || acc.contains(w0))
            throw VerificationError("corner scan failed in the quotient");
        std::optional<ChiElement> chosen;
        for (long c = 0; c < (long)table.chars.size() && !chosen; ++c) {
            ChiElement ce = build_w_chi(m, w0, table, c);
            if (!vec_is_zero(ce.vector) && !acc.contains(ce.vector))
                chosen = std::move(ce);
        }
        if (!chosen)
            throw VerificationError(
                "no character element leaves the accumulated span");
        RowSpan left = left_orbit_span(*m, chosen->vector);
        RowSpan right = right_orbit_span(*m, chosen->vector);
        if (!left.same_span(right))
            throw VerificationError("left and right generator spans differ");
        if (left.dim() == 0)
            throw VerificationError("generator span is zero");
        if (intersection_dim(left, acc) != 0)
            throw VerificationError("new summand meets the accumulated span");
        acc.add_all(left.rows());
        out.summands.push_back(make_subbimodule(m, std::move(left)));
        out.generators.push_back(std::move(*chosen));
    }
    long total = 0;
    for (const auto& s : out.summands) total += s.span.dim();
    if (total != dm)
        throw VerificationError("summand dimensions do not add up");
    for (size_t i = 0; i < out.summands.size(); ++i)
        for (size_t j = i + 1; j < out.summands.size(); ++j)
            if (intersection_dim(out.summands[i].span, out.summands[j].span) != 0)
                throw VerificationError("summands overlap");
    return out;
}

SemisimplePeirce semisimple_peirce(const BimodPtr& m,
                                   const std::vector<Vec>& left_units,
                                   const std::vector<Vec>& right_units) {
    const AlgPtr& a = m->left_alg();
    const AlgPtr& at = m->right_alg();
    if (left_units.empty() || right_units.empty())
        throw InputError("each side needs at least one block unit");
    auto ua = unit_of(*a);
    if (!ua) throw InputError("left algebra has no unit");
    auto ub = unit_of(*at);
    if (!ub) throw InputError("right algebra has no unit");
    auto check_units = [](const GradedAlgebra& alg, const std::vector<Vec>& units,
                          const Vec& one, const char* side) {
        Vec sum(alg.dim());
        for (size_t r = 0; r < units.size(); ++r) {
            if ((long)units[r].size() != alg.dim())
                throw InputError(std::string(side) + " unit " + std::to_string(r) +
                                 " has the wrong length");
            if (alg.mul(units[r], units[r]) != units[r])
                throw InputError(std::string(side) + " unit " + std::to_string(r) +
                                 " is not idempotent");
            for (size_t s = r + 1; s < units.size(); ++s)
                if (!vec_is_zero(alg.mul(units[r], units[s])) ||
                    !vec_is_zero(alg.mul(units[s], units[r])))
                    throw InputError(std::string(side) + " units " +
                                     std::to_string(r) + " and " + std::to_string(s) +
                                     " are not orthogonal");
            for (long i = 0; i < alg.dim(); ++i) {
                Vec e = alg.basis_vec(i);
                if (alg.mul(units[r], e) != alg.mul(e, units[r]))
                    throw InputError(std::string(side) + " unit " + std::to_string(r) +
                                     " is not central");
            }
            vec_axpy(sum, Cyclotomic(1), units[r]);
        }
        if (sum != one)
            throw InputError(std::string(side) + " units do not sum to the unit");
    };
    check_units(*a, left_units, *ua, "left");
    check_units(*at, right_units, *ub, "right");
    long dm = m->dim();
    for (long k = 0; k < dm; ++k) {
        Vec e = m->basis_vec(k);
        if (m->act_left(*ua, e) != e || m->act_right(e, *ub) != e)
            throw InputError("bimodule is not unitary");
    }
    SemisimplePeirce out;
    out.left_units = left_units;
    out.right_units = right_units;
    RowSpan together(dm);
    long total = 0;
    for (size_t r = 0; r < left_units.size(); ++r) {
        std::vector<SubBimodule> row;
        for (size_t s = 0; s < right_units.size(); ++s) {
            RowSpan cell(dm);
            for (long k = 0; k < dm; ++k)
                cell.add(m->act_left(left_units[r],
                                     m->act_right(m->basis_vec(k), right_units[s])));
            total += cell.dim();
            together.add_all(cell.rows());
            row.push_back(make_subbimodule(m, std::move(cell)));
        }
        out.grid.push_back(std::move(row));
    }
    if (total != dm || together.dim() != dm)
        throw VerificationError("Peirce grid does not reconstruct the bimodule");
    for (size_t r = 0; r < left_units.size(); ++r) {
        RowSpan lblock(a->dim());
        for (long i = 0; i < a->dim(); ++i)
            lblock.add(a->mul(left_units[r], a->basis_vec(i)));
        for (size_t s = 0; s < right_units.size(); ++s) {
            if (out.grid[r][s].span.dim() == 0) continue;
            if (!left_action_faithful(*m, lblock.rows(), out.grid[r][s].span.rows()))
                throw VerificationError(
                    "left block " + std::to_string(r) +
                    " does not act faithfully on cell (" + std::to_string(r) + ", " +
                    std::to_string(s) + ")");
        }
    }
    for (size_t s = 0; s < right_units.size(); ++s) {
        RowSpan rblock(at->dim());
        for (long i = 0; i < at->dim(); ++i)
            rblock.add(at->mul(at->basis_vec(i), right_units[s]));
        for (size_t r = 0; r < left_units.size(); ++r) {
            if (out.grid[r][s].span.dim() == 0) continue;
            if (!right_action_faithful(*m, rblock.rows(), out.grid[r][s].span.rows()))
                throw VerificationError(
                    "right block " + std::to_string(s) +
                    " does not act faithfully on cell (" + std::to_string(r) + ", " +
                    std::to_string(s) + ")");
        }
    }
    out.diagonal_only = left_units.size() == right_units.size();
    if (out.diagonal_only)
        for (size_t r = 0; r < left_units.size(); ++r)
            for (size_t s = 0; s < right_units.size(); ++s)
                if (r != s && out.grid[r][s].span.dim() > 0) out.diagonal_only = false;
    out.units_centralize = left_units.size() == right_units.size();
    if (out.units_centralize)
        for (size_t r = 0; r < left_units.size() && out.units_centralize; ++r)
            for (long k = 0; k < dm; ++k) {
                Vec e = m->basis_vec(k);
                if (m->act_left(left_units[r], e) != m->act_right(e, right_units[r])) {
                    out.units_centralize = false;
                    break;
                }
            }
    return out;
}

RadicalReport radical_report(const SplitInput& split) {
    const AlgPtr& a = split.ambient;
    if (!a) throw InputError("split needs an ambient algebra");
    if (split.blocks.empty()) throw InputError("split needs at least one block");
    if (split.blocks.size() != split.block_embeddings.size())
        throw InputError("each block needs an embedding");
    long na = a->dim();
    for (size_t r = 0; r < split.blocks.size(); ++r) {
        const AlgPtr& blk = split.blocks[r];
        if (!blk || !blk->twisted())
            throw InputError("blocks must come from the twisted constructors");
        if (blk->group() != a->group())
            throw InputError("block grading group does not match the ambient algebra");
        const Mat& emb = split.block_embeddings[r];
        if ((long)emb.size() != blk->dim())
            throw InputError("embedding row count does not match the block");
        RowSpan image(na);
        for (long i = 0; i < blk->dim(); ++i) {
            if ((long)emb[i].size() != na)
                throw InputError("embedding row has the wrong length");
            long d;
            if (!a->is_homogeneous(emb[i], &d) || vec_is_zero(emb[i]) ||
                d != blk->degree(i))
                throw VerificationError("embedding of block " + std::to_string(r) +
                                        " does not preserve degrees");
            image.add(emb[i]);
        }
        if (image.dim() != blk->dim())
            throw VerificationError("embedding of block " + std::to_string(r) +
                                    " is not injective");
        for (long i = 0; i < blk->dim(); ++i)
            for (long j = 0; j < blk->dim(); ++j) {
                Vec want(na);
                for (const auto& [t, v] : blk->basis_product(i, j))
                    vec_axpy(want, v, emb[t]);
                if (a->mul(emb[i], emb[j]) != want)
                    throw VerificationError("embedding of block " + std::to_string(r) +
                                            " is not multiplicative");
            }
    }
    for (size_t r = 0; r < split.blocks.size(); ++r)
        for (size_t s = 0; s < split.blocks.size(); ++s) {
            if (r == s) continue;
            for (const auto& x : split.block_embeddings[r])
                for (const auto& y : split.block_embeddings[s])
                    if (!vec_is_zero(a->mul(x, y)))
                        throw VerificationError("blocks " + std::to_string(r) +
                                                " and " + std::to_string(s) +
                                                " are not orthogonal");
        }
    AlgPtr b = algebra_direct_product(split.blocks);
    Mat b_rows;
    for (const auto& emb : split.block_embeddings)
        for (const auto& row : emb) b_rows.push_back(row);
    RowSpan jspan(na);
    for (const auto& v : split.radical_basis) {
        if ((long)v.size() != na)
            throw InputError("radical basis vector has the wrong length");
        if (!a->is_homogeneous(v))
            throw InputError("radical basis must be homogeneous");
        jspan.add(v);
    }
    if ((long)b_rows.size() + jspan.dim() != na)
        throw VerificationError("block and radical dimensions do not add up");
    RowSpan whole(na);
    for (const auto& row : b_rows) whole.add(row);
    whole.add_all(jspan.rows());
    if (whole.dim() != na)
        throw VerificationError("blocks and radical together do not span the algebra");
    for (const auto& row : jspan.rows())
        for (long i = 0; i < na; ++i)
            if (!jspan.contains(a->left_mul_basis(i, row)) ||
                !jspan.contains(a->right_mul_basis(i, row)))
                throw VerificationError("radical candidate is not an ideal");
    auto nd = nilpotency_index(*a, jspan);
    if (!nd) throw VerificationError("radical candidate is not nilpotent");
    GradedIdeal jrad = jacobson_radical(a);
    if (!jrad.span.same_span(jspan))
        throw VerificationError("radical candidate does not match the Jacobson radical");
    std::vector<long> jdeg;
    for (const auto& row : jspan.rows())
        jdeg.push_back(homogeneous_degree(row, a->degrees()));
    GradedIdeal jideal(a, jspan, jdeg);
    std::vector<Vec> b_rows_vec(b_rows.begin(), b_rows.end());
    IdealPeirceResult ipr = ideal_peirce_products(a, b_rows_vec, jideal);
    BimodPtr j11 = sub_as_bimodule(ipr.blocks.m11);
    std::vector<Vec> units;
    std::vector<long> offsets;
    long off = 0;
    for (const auto& blk : split.blocks) {
        Vec u(b->dim());
        auto ublk = unit_of(*blk);
        if (!ublk) throw InputError("block has no unit");
        for (long t = 0; t < blk->dim(); ++t) u[off + t] = (*ublk)[t];
        units.push_back(std::move(u));
        offsets.push_back(off);
        off += blk->dim();
    }
    // Lift the block units into the product algebra coordinate system used by
    // the ideal bimodule, then decompose each diagonal cell over its block.
    SemisimplePeirce grid = semisimple_peirce(j11, units, units);
    std::vector<DiagonalCellReport> diagonal;
    for (size_t s = 0; s < split.blocks.size(); ++s) {
        const SubBimodule& cell = grid.grid[s][s];
        const AlgPtr& blk = split.blocks[s];
        long dc = cell.span.dim();
        std::vector<std::vector<SVec>> l(blk->dim(), std::vector<SVec>(dc));
        std::vector<std::vector<SVec>> r(dc, std::vector<SVec>(blk->dim()));
        std::vector<long> cdeg = cell.degrees;
        for (long k = 0; k < dc; ++k) {
            const Vec& row = cell.span.rows()[k];
            for (long i = 0; i < blk->dim(); ++i) {
                auto cl = rowspan_coords(cell.span,
                                         j11->act_left_basis(offsets[s] + i, row));
                auto cr = rowspan_coords(cell.span,
                                         j11->act_right_basis(row, offsets[s] + i));
                if (!cl || !cr)
                    throw VerificationError("diagonal cell is not closed over its block");
                l[i][k] = svec_from_dense(*cl);
                r[k][i] = svec_from_dense(*cr);
            }
        }
        BimodPtr cell_bim = make_bimodule(blk, blk, std::move(l), std::move(r),
                                          std::move(cdeg));
        FgDecomposition fg = decompose_fg(cell_bim);
        DiagonalCellReport rep;
        rep.block = (long)s;
        const AbelianGroup& h = blk->twisted()->emb.sub();
        long hn = h.order();
        for (const auto& ce : fg.generators) {
            std::vector<Cyclotomic> grow;
            for (long bb = 0; bb < blk->dim(); ++bb) {
                Cyclotomic gamma = ce.character.value(bb % hn).inv();
                Vec lhs = cell_bim->act_left_basis(bb, ce.vector);
                Vec rhs = vec_scaled(cell_bim->act_right_basis(ce.vector, bb), gamma);
                if (lhs != rhs)
                    throw VerificationError("twisted commutation fails on a generator");
                if (vec_is_zero(lhs))
                    throw VerificationError(
                        "a block basis element annihilates a generator");
                grow.push_back(std::move(gamma));
            }
            rep.gamma.push_back(std::move(grow));
        }
        rep.generators = std::move(fg.generators);
        diagonal.push_back(std::move(rep));
    }
    // Factorization report when every block unit is central in the ambient
    // algebra.
    std::vector<Vec> units_amb;
    bool central = true;
    for (size_t s = 0; s < split.blocks.size(); ++s) {
        Vec u(na);
        auto ublk = unit_of(*split.blocks[s]);
        for (long t = 0; t < split.blocks[s]->dim(); ++t)
            vec_axpy(u, (*ublk)[t], split.block_embeddings[s][t]);
        for (long i = 0; i < na && central; ++i) {
            Vec e = a->basis_vec(i);
            if (a->mul(u, e) != a->mul(e, u)) central = false;
        }
        units_amb.push_back(std::move(u));
    }
    std::optional<FactorizationReport> fact;
    if (central) {
        if (ipr.blocks.m10.span.dim() != 0 || ipr.blocks.m01.span.dim() != 0)
            throw VerificationError(
                "off-diagonal Peirce blocks are nonzero despite central units");
        if (!grid.diagonal_only)
            throw VerificationError(
                "grid has off-diagonal cells despite central units");
        auto amb_of_n = [&](const Vec& c) {
            Vec v(na);
            for (size_t t = 0; t < c.size(); ++t)
                if (!c[t].is_zero()) vec_axpy(v, c[t], ipr.ideal_rows[t]);
            return v;
        };
        auto amb_of_j11 = [&](const Vec& c) {
            Vec v(ipr.bimodule->dim());
            for (size_t t = 0; t < c.size(); ++t)
                if (!c[t].is_zero())
                    vec_axpy(v, c[t], ipr.blocks.m11.span.rows()[t]);
            return amb_of_n(v);
        };
        std::vector<std::vector<Vec>> cell_amb(split.blocks.size());
        for (size_t s = 0; s < split.blocks.size(); ++s)
            for (const auto& row : grid.grid[s][s].span.rows())
                cell_amb[s].push_back(amb_of_j11(row));
        for (size_t r = 0; r < split.blocks.size(); ++r)
            for (size_t s = 0; s < split.blocks.size(); ++s) {
                if (r == s) continue;
                for (const auto& x : cell_amb[r])
                    for (const auto& y : cell_amb[s])
                        if (!vec_is_zero(a->mul(x, y)))
                            throw VerificationError(
                                "cross products between diagonal cells are nonzero");
            }
        for (const auto& row : ipr.blocks.m00.span.rows()) {
            Vec x = amb_of_n(row);
            for (const auto& u : units_amb)
                if (!vec_is_zero(a->mul(u, x)) || !vec_is_zero(a->mul(x, u)))
                    throw VerificationError("block units do not kill J00");
        }
        FactorizationReport f;
        long counted = ipr.blocks.m00.span.dim();
        for (size_t s = 0; s < split.blocks.size(); ++s) {
            long d = split.blocks[s]->dim() + grid.grid[s][s].span.dim();
            f.factor_dims.push_back(d);
            counted += d;
        }
        f.j00_dim = ipr.blocks.m00.span.dim();
        if (counted != na)
            throw VerificationError("factorization dimensions do not add up");
        fact = std::move(f);
    }
    return {std::move(b), std::move(b_rows), std::move(jideal), std::move(ipr),
            std::move(j11), std::move(grid), std::move(diagonal), *nd,
            std::move(fact)};
}

IrredResult is_irreducible_graded(const BimodPtr& m, IrredMode mode, long trials,
                                  uint64_t seed) {
    long dm = m->dim();
    if (dm == 0)
        return {Verdict3::no, std::nullopt, "the zero bimodule is not irreducible"};
    bool triple_zero = true;
    for (long a = 0; a < m->left_alg()->dim() && triple_zero; ++a)
        for (long k = 0; k < dm && triple_zero; ++k)
            for (long c = 0; c < m->right_alg()->dim() && triple_zero; ++c)
                if (!vec_is_zero(m->act_left_basis(
                        a, m->act_right_basis(m->basis_vec(k), c))))
                    triple_zero = false;
    if (triple_zero)
        return {Verdict3::no, std::nullopt,
                "the algebras act trivially through the bimodule"};
    if (mode == IrredMode::exact) {
        FgDecomposition d = decompose_fg(m);
        if (d.summands.size() == 1)
            return {Verdict3::yes, std::nullopt,
                    "the character decomposition has a single summand"};
        return {Verdict3::no, std::move(d.summands.front()),
                "the character decomposition splits"};
    }
    for (long k = 0; k < dm; ++k) {
        SubBimodule n = generated_subbimodule(m, {m->basis_vec(k)});
        if (n.span.dim() > 0 && n.span.dim() < dm)
            return {Verdict3::no, std::move(n),
                    "a homogeneous basis vector generates a proper subbimodule"};
    }
    std::map<long, std::vector<long>> bucket;
    for (long i = 0; i < dm; ++i) bucket[m->degree(i)].push_back(i);
    std::vector<const std::vector<long>*> buckets;
    for (const auto& [g, coords] : bucket) {
        (void)g;
        buckets.push_back(&coords);
    }
    Cyclotomic zeta = Cyclotomic::root_of_unity(4, 1);
    const Cyclotomic opts[5] = {Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1), zeta,
                                -zeta};
    Lcg rng(seed);
    for (long t = 0; t < trials; ++t) {
        Vec v = random_homogeneous(*m, rng, buckets, opts);
        if (vec_is_zero(v)) continue;
        SubBimodule n = generated_subbimodule(m, {v});
        if (n.span.dim() > 0 && n.span.dim() < dm)
            return {Verdict3::no, std::move(n),
                    "a random homogeneous vector generates a proper subbimodule"};
    }
    return {Verdict3::probably_yes, std::nullopt,
            "sampled homogeneous generators all generate the bimodule"};
}

CompositionSeries composition_series(const BimodPtr& m, long trials, uint64_t seed) {
    long dm = m->dim();
    std::vector<SubBimodule> chain;
    chain.push_back(make_subbimodule(m, RowSpan(dm)));
    Lcg rng(seed);
    while (chain.back().span.dim() < dm) {
        const SubBimodule& cur = chain.back();
        BimoduleQuotient q = quotient_bimodule(m, cur);
        std::vector<Vec> wrows;
        if (square_twisted_unitary(q.bimodule)) {
            FgDecomposition d = decompose_fg(q.bimodule);
            wrows = d.summands.front().span.rows();
        } else {
            long dq = q.bimodule->dim();
            std::vector<long> order(dq);
            std::iota(order.begin(), order.end(), 0);
            for (long i = dq - 1; i > 0; --i)
                std::swap(order[i], order[rng.below(i + 1)]);
            std::optional<SubBimodule> best;
            for (long k : order) {
                SubBimodule n = generated_subbimodule(q.bimodule, {q.bimodule->basis_vec(k)});
                if (n.span.dim() == 0) continue;
                if (!best || n.span.dim() < best->span.dim()) best = std::move(n);
                if (best->span.dim() == 1) break;
            }
            if (best && best->span.dim() > 1) {
                std::map<long, std::vector<long>> bucket;
                for (long i = 0; i < dq; ++i)
                    bucket[q.bimodule->degree(i)].push_back(i);
                std::vector<const std::vector<long>*> buckets;
                for (const auto& [g, coords] : bucket) {
                    (void)g;
                    buckets.push_back(&coords);
                }
                Cyclotomic zeta = Cyclotomic::root_of_unity(4, 1);
                const Cyclotomic opts[5] = {Cyclotomic(0), Cyclotomic(1),
                                            Cyclotomic(-1), zeta, -zeta};
                for (long t = 0; t < trials && best->span.dim() > 1; ++t) {
                    Vec v = random_homogeneous(*q.bimodule, rng, buckets, opts);
                    if (vec_is_zero(v)) continue;
                    SubBimodule n = generated_subbimodule(q.bimodule, {v});
                    if (n.span.dim() > 0 && n.span.dim() < best->span.dim())
                        best = std::move(n);
                }
            }
            if (!best)
                throw VerificationError("no generator found in a nonzero quotient");
            wrows = best->span.rows();
        }
        std::vector<long> np = cur.span.non_pivots();
        RowSpan grown = cur.span;
        for (const auto& row : wrows) {
            Vec lift(dm);
            for (size_t t = 0; t < np.size(); ++t) lift[np[t]] = row[t];
            grown.add(std::move(lift));
        }
        if (grown.dim() <= cur.span.dim())
            throw VerificationError("composition step did not grow the chain");
        chain.push_back(make_subbimodule(m, std::move(grown)));
    }
    long len = (long)chain.size() - 1;
    return {m, std::move(chain), len};
}

} // namespace gbk
