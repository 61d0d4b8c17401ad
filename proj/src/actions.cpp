#include "hopfkit/actions.hpp"

namespace hopfkit {

Matrix RightModule::act(const Matrix& m, const Matrix& a) const {
    Matrix out(over.field, dim, 1);
    for (int i = 0; i < dim; ++i) {
        const Scalar& mi = m(i, 0);
        if (mi.is_zero()) continue;
        action.for_nonzero_slice(i, [&](const std::vector<int>& idx, const Scalar& c) {
            const Scalar& aj = a(idx[1], 0);
            if (!aj.is_zero()) out(idx[2], 0) += c * mi * aj;
        });
    }
    return out;
}

Matrix LeftComodule::coact(const Matrix& m) const {
    Matrix out(over.field, over.dim * dim, 1);
    for (int i = 0; i < dim; ++i) {
        const Scalar& mi = m(i, 0);
        if (mi.is_zero()) continue;
        coaction.for_nonzero_slice(i, [&](const std::vector<int>& idx, const Scalar& c) {
            out(idx[1] * dim + idx[2], 0) += c * mi;
        });
    }
    return out;
}

Matrix LeftComodule::coaction_matrix() const {
    Matrix out(over.field, over.dim * dim, dim);
    coaction.for_nonzero([&](const std::vector<int>& idx, const Scalar& c) {
        out(idx[1] * dim + idx[2], idx[0]) += c;
    });
    return out;
}

LeftComodule LeftComoduleAlgebra::comodule() const {
    return LeftComodule{over.coa(), alg.dim, alg.basis, coaction};
}

Matrix RightModuleCoalgebra::act(const Matrix& c, const Matrix& h) const {
    Matrix out(coa.field, coa.dim, 1);
    for (int i = 0; i < coa.dim; ++i) {
        const Scalar& ci = c(i, 0);
        if (ci.is_zero()) continue;
        action.for_nonzero_slice(i, [&](const std::vector<int>& idx, const Scalar& s) {
            const Scalar& hj = h(idx[1], 0);
            if (!hj.is_zero()) out(idx[2], 0) += s * ci * hj;
        });
    }
    return out;
}

RightModule RightModuleCoalgebra::module() const {
    return RightModule{over.alg(), coa.dim, coa.basis, action};
}

Tensor BicomoduleAlgebra::bicoaction_of(int i) const {
    const int h = over.dim(), a = alg.dim;
    Tensor out(alg.field, {h, a, h});
    left_coaction.for_nonzero([&](const std::vector<int>& l, const Scalar& s) {
        if (l[0] != i) return;
        right_coaction.for_nonzero([&](const std::vector<int>& r, const Scalar& t) {
            if (r[0] == l[2]) out.at({l[1], r[1], r[2]}) += s * t;
        });
    });
    return out;
}

// ---------------------------------------------------------------------------

Report check_right_module(const RightModule& m) {
    Report rep;
    const Algebra& a = m.over;
    bool assoc_ok = true;
    for (int i = 0; i < m.dim && assoc_ok; ++i)
        for (int j = 0; j < a.dim && assoc_ok; ++j)
            for (int k = 0; k < a.dim; ++k) {
                Matrix lhs = m.act(m.act(m.basis_vec(i), a.basis_vec(j)), a.basis_vec(k));
                Matrix rhs = m.act(m.basis_vec(i), a.mul(a.basis_vec(j), a.basis_vec(k)));
                if (lhs != rhs) {
                    rep.add(Check::fail("module.assoc", "(m.a).b = m.(ab)", {i, j, k},
                                        "lhs = " + render_vector(lhs) + ", rhs = " + render_vector(rhs)));
                    assoc_ok = false;
                    break;
                }
            }
    if (assoc_ok) rep.add(Check::ok("module.assoc", "(m.a).b = m.(ab)"));

    bool unit_ok = true;
    for (int i = 0; i < m.dim && unit_ok; ++i) {
        Matrix got = m.act(m.basis_vec(i), a.unit);
        if (got != m.basis_vec(i)) {
            rep.add(Check::fail("module.unit", "m.1 = m", {i}, "m.1 = " + render_vector(got)));
            unit_ok = false;
        }
    }
    if (unit_ok) rep.add(Check::ok("module.unit", "m.1 = m"));
    return rep;
}

Report check_left_comodule(const LeftComodule& m) {
    Report rep;
    const Coalgebra& c = m.over;
    const int d = m.dim, h = c.dim;
    bool coassoc_ok = true;
    for (int i = 0; i < d && coassoc_ok; ++i) {
        // (Delta (x) Id) rho = (Id (x) rho) rho at e_i, in C (x) C (x) M
        Matrix lhs(c.field, h * h * d, 1), rhs(c.field, h * h * d, 1);
        m.coaction.for_nonzero([&](const std::vector<int>& co, const Scalar& s) {
            if (co[0] != i) return;
            c.comult.for_nonzero([&](const std::vector<int>& cm, const Scalar& t) {
                if (cm[0] == co[1]) lhs((cm[1] * h + cm[2]) * d + co[2], 0) += s * t;
            });
            m.coaction.for_nonzero([&](const std::vector<int>& co2, const Scalar& t) {
                if (co2[0] == co[2]) rhs((co[1] * h + co2[1]) * d + co2[2], 0) += s * t;
            });
        });
        if (lhs != rhs) {
            rep.add(Check::fail("comodule.coassoc", "(Delta⊗Id)rho = (Id⊗rho)rho", {i},
                                "lhs = " + render_vector(lhs) + ", rhs = " + render_vector(rhs)));
            coassoc_ok = false;
        }
    }
    if (coassoc_ok) rep.add(Check::ok("comodule.coassoc", "(Delta⊗Id)rho = (Id⊗rho)rho"));

    bool counit_ok = true;
    for (int i = 0; i < d && counit_ok; ++i) {
        Matrix got(c.field, d, 1);
        m.coaction.for_nonzero([&](const std::vector<int>& co, const Scalar& s) {
            if (co[0] == i) got(co[2], 0) += s * c.counit(0, co[1]);
        });
        if (got != m.basis_vec(i)) {
            rep.add(Check::fail("comodule.counit", "(eps⊗Id)rho = Id", {i},
                                "(eps⊗Id)rho = " + render_vector(got)));
            counit_ok = false;
        }
    }
    if (counit_ok) rep.add(Check::ok("comodule.counit", "(eps⊗Id)rho = Id"));
    return rep;
}

namespace {

// rho(x) for x a vector, coaction tensor (a, h, a) -> flattened H (x) A vector
Matrix coact_vec(const Tensor& co, const Matrix& x, int hdim, int adim, FieldSpec f) {
    Matrix out(f, hdim * adim, 1);
    co.for_nonzero([&](const std::vector<int>& idx, const Scalar& s) {
        const Scalar& xi = x(idx[0], 0);
        if (!xi.is_zero()) out(idx[1] * adim + idx[2], 0) += s * xi;
    });
    return out;
}

// product on H (x) A with H, A algebras (flattened)
Matrix mul_ha(const Algebra& h, const Algebra& a, const Matrix& x, const Matrix& y) {
    Matrix out(h.field, h.dim * a.dim, 1);
    for (int p = 0; p < x.rows(); ++p) {
        if (x(p, 0).is_zero()) continue;
        for (int q = 0; q < y.rows(); ++q) {
            if (y(q, 0).is_zero()) continue;
            Matrix hh = h.mul(h.basis_vec(p / a.dim), h.basis_vec(q / a.dim));
            Matrix aa = a.mul(a.basis_vec(p % a.dim), a.basis_vec(q % a.dim));
            Scalar w = x(p, 0) * y(q, 0);
            for (int s = 0; s < h.dim; ++s) {
                if (hh(s, 0).is_zero()) continue;
                for (int t = 0; t < a.dim; ++t)
                    if (!aa(t, 0).is_zero()) out(s * a.dim + t, 0) += w * hh(s, 0) * aa(t, 0);
            }
        }
    }
    return out;
}

Report check_left_comodule_algebra_axioms(const std::string& prefix, const HopfAlgebra& H,
                                          const Algebra& A, const Tensor& coaction) {
    LeftComodule cm{H.coa(), A.dim, A.basis, coaction};
    Report rep = check_left_comodule(cm);
    const int hd = H.dim(), ad = A.dim;

    bool mult_ok = true;
    for (int i = 0; i < ad && mult_ok; ++i)
        for (int j = 0; j < ad; ++j) {
            Matrix lhs = coact_vec(coaction, A.mul(A.basis_vec(i), A.basis_vec(j)), hd, ad, A.field);
            Matrix rhs = mul_ha(H.alg(), A, coact_vec(coaction, A.basis_vec(i), hd, ad, A.field),
                                coact_vec(coaction, A.basis_vec(j), hd, ad, A.field));
            if (lhs != rhs) {
                rep.add(Check::fail(prefix + ".mult", "rho(ab) = sum a(-1)b(-1) ⊗ a(0)b(0)", {i, j},
                                    "lhs = " + render_vector(lhs) + ", rhs = " + render_vector(rhs)));
                mult_ok = false;
                break;
            }
        }
    if (mult_ok) rep.add(Check::ok(prefix + ".mult", "rho(ab) = sum a(-1)b(-1) ⊗ a(0)b(0)"));

    Matrix r1 = coact_vec(coaction, A.unit, hd, ad, A.field);
    Matrix u2 = Matrix::kron(H.alg().unit, A.unit);
    rep.add(r1 == u2 ? Check::ok(prefix + ".unit", "rho(1) = 1⊗1")
                     : Check::fail(prefix + ".unit", "rho(1) = 1⊗1", {}, "rho(1) = " + render_vector(r1)));
    return rep;
}

}  // namespace

Report check_comodule_algebra(const LeftComoduleAlgebra& a) {
    Report rep = check_algebra(a.alg);
    rep.merge(check_left_comodule_algebra_axioms("comodule_algebra", a.over, a.alg, a.coaction));
    return rep;
}

Report check_module_coalgebra(const RightModuleCoalgebra& c) {
    Report rep = check_coalgebra(c.coa);
    rep.merge(check_right_module(c.module()));
    const HopfAlgebra& H = c.over;
    const int cd = c.coa.dim, hd = H.dim();

    bool comult_ok = true;
    for (int i = 0; i < cd && comult_ok; ++i)
        for (int j = 0; j < hd; ++j) {
            Matrix lhs = c.coa.comult_vec(c.act(c.coa.basis_vec(i), H.alg().basis_vec(j)));
            Matrix rhs(c.coa.field, cd * cd, 1);
            c.coa.comult.for_nonzero([&](const std::vector<int>& cm, const Scalar& s) {
                if (cm[0] != i) return;
                H.coa().comult.for_nonzero([&](const std::vector<int>& hm, const Scalar& t) {
                    if (hm[0] != j) return;
                    Matrix left = c.act(c.coa.basis_vec(cm[1]), H.alg().basis_vec(hm[1]));
                    Matrix right = c.act(c.coa.basis_vec(cm[2]), H.alg().basis_vec(hm[2]));
                    Scalar w = s * t;
                    for (int p = 0; p < cd; ++p) {
                        if (left(p, 0).is_zero()) continue;
                        for (int q = 0; q < cd; ++q)
                            if (!right(q, 0).is_zero()) rhs(p * cd + q, 0) += w * left(p, 0) * right(q, 0);
                    }
                });
            });
            if (lhs != rhs) {
                rep.add(Check::fail("module_coalgebra.comult", "Delta(c.h) = sum c1.h1 ⊗ c2.h2", {i, j},
                                    "lhs = " + render_vector(lhs) + ", rhs = " + render_vector(rhs)));
                comult_ok = false;
                break;
            }
        }
    if (comult_ok) rep.add(Check::ok("module_coalgebra.comult", "Delta(c.h) = sum c1.h1 ⊗ c2.h2"));

    bool counit_ok = true;
    for (int i = 0; i < cd && counit_ok; ++i)
        for (int j = 0; j < hd; ++j) {
            Scalar lhs = c.coa.counit_of(c.act(c.coa.basis_vec(i), H.alg().basis_vec(j)));
            Scalar rhs = c.coa.counit(0, i) * H.coa().counit(0, j);
            if (lhs != rhs) {
                rep.add(Check::fail("module_coalgebra.counit", "eps(c.h) = eps(c)eps(h)", {i, j},
                                    "lhs = " + lhs.str() + ", rhs = " + rhs.str()));
                counit_ok = false;
                break;
            }
        }
    if (counit_ok) rep.add(Check::ok("module_coalgebra.counit", "eps(c.h) = eps(c)eps(h)"));
    return rep;
}

Report check_bicomodule_algebra(const BicomoduleAlgebra& a) {
    Report rep = check_left_comodule_algebra_axioms("bicomodule.left", a.over, a.alg, a.left_coaction);

    // right coaction axioms, mirrored: store as (input, A-leg, H-leg)
    const int hd = a.over.dim(), ad = a.alg.dim;
    const FieldSpec f = a.alg.field;

    bool coassoc_ok = true;
    for (int i = 0; i < ad && coassoc_ok; ++i) {
        // (rho^r (x) Id)rho^r = (Id (x) Delta)rho^r in A (x) H (x) H
        Matrix lhs(f, ad * hd * hd, 1), rhs(f, ad * hd * hd, 1);
        a.right_coaction.for_nonzero([&](const std::vector<int>& co, const Scalar& s) {
            if (co[0] != i) return;
            a.right_coaction.for_nonzero([&](const std::vector<int>& co2, const Scalar& t) {
                if (co2[0] == co[1]) lhs((co2[1] * hd + co2[2]) * hd + co[2], 0) += s * t;
            });
            a.over.coa().comult.for_nonzero([&](const std::vector<int>& cm, const Scalar& t) {
                if (cm[0] == co[2]) rhs((co[1] * hd + cm[1]) * hd + cm[2], 0) += s * t;
            });
        });
        if (lhs != rhs) {
            rep.add(Check::fail("bicomodule.right.coassoc", "(rho_r⊗Id)rho_r = (Id⊗Delta)rho_r", {i},
                                "lhs = " + render_vector(lhs) + ", rhs = " + render_vector(rhs)));
            coassoc_ok = false;
        }
    }
    if (coassoc_ok) rep.add(Check::ok("bicomodule.right.coassoc", "(rho_r⊗Id)rho_r = (Id⊗Delta)rho_r"));

    bool counit_ok = true;
    for (int i = 0; i < ad && counit_ok; ++i) {
        Matrix got(f, ad, 1);
        a.right_coaction.for_nonzero([&](const std::vector<int>& co, const Scalar& s) {
            if (co[0] == i) got(co[1], 0) += s * a.over.coa().counit(0, co[2]);
        });
        if (got != Matrix::basis_vector(f, ad, i)) {
            rep.add(Check::fail("bicomodule.right.counit", "(Id⊗eps)rho_r = Id", {i},
                                "(Id⊗eps)rho_r = " + render_vector(got)));
            counit_ok = false;
        }
    }
    if (counit_ok) rep.add(Check::ok("bicomodule.right.counit", "(Id⊗eps)rho_r = Id"));

    bool alg_ok = true;
    for (int i = 0; i < ad && alg_ok; ++i)
        for (int j = 0; j < ad; ++j) {
            // rho^r(ab) = sum a(0)b(0) (x) a(1)b(1), computed in A (x) H
            Matrix prod = a.alg.mul(a.alg.basis_vec(i), a.alg.basis_vec(j));
            Matrix lhs(f, ad * hd, 1);
            a.right_coaction.for_nonzero([&](const std::vector<int>& co, const Scalar& s) {
                const Scalar& x = prod(co[0], 0);
                if (!x.is_zero()) lhs(co[1] * hd + co[2], 0) += s * x;
            });
            Matrix rhs(f, ad * hd, 1);
            a.right_coaction.for_nonzero([&](const std::vector<int>& ci, const Scalar& s) {
                if (ci[0] != i) return;
                a.right_coaction.for_nonzero([&](const std::vector<int>& cj, const Scalar& t) {
                    if (cj[0] != j) return;
                    Matrix aa = a.alg.mul(a.alg.basis_vec(ci[1]), a.alg.basis_vec(cj[1]));
                    Matrix hh = a.over.alg().mul(a.over.alg().basis_vec(ci[2]), a.over.alg().basis_vec(cj[2]));
                    Scalar w = s * t;
                    for (int p = 0; p < ad; ++p) {
                        if (aa(p, 0).is_zero()) continue;
                        for (int q = 0; q < hd; ++q)
                            if (!hh(q, 0).is_zero()) rhs(p * hd + q, 0) += w * aa(p, 0) * hh(q, 0);
                    }
                });
            });
            if (lhs != rhs) {
                rep.add(Check::fail("bicomodule.right.mult", "rho_r(ab) = sum a(0)b(0) ⊗ a(1)b(1)", {i, j},
                                    "lhs = " + render_vector(lhs) + ", rhs = " + render_vector(rhs)));
                alg_ok = false;
                break;
            }
        }
    if (alg_ok) rep.add(Check::ok("bicomodule.right.mult", "rho_r(ab) = sum a(0)b(0) ⊗ a(1)b(1)"));

    Matrix r1(f, ad * hd, 1);
    a.right_coaction.for_nonzero([&](const std::vector<int>& co, const Scalar& s) {
        const Scalar& x = a.alg.unit(co[0], 0);
        if (!x.is_zero()) r1(co[1] * hd + co[2], 0) += s * x;
    });
    Matrix u2 = Matrix::kron(a.alg.unit, a.over.alg().unit);
    rep.add(r1 == u2 ? Check::ok("bicomodule.right.unit", "rho_r(1) = 1⊗1")
                     : Check::fail("bicomodule.right.unit", "rho_r(1) = 1⊗1", {}, render_vector(r1)));

    // the two coactions commute: both composites equal sum a(-1) ⊗ a(0) ⊗ a(1)
    bool commute_ok = true;
    for (int i = 0; i < ad && commute_ok; ++i) {
        Matrix via_lr(f, hd * ad * hd, 1), via_rl(f, hd * ad * hd, 1);
        a.left_coaction.for_nonzero([&](const std::vector<int>& l, const Scalar& s) {
            if (l[0] != i) return;
            a.right_coaction.for_nonzero([&](const std::vector<int>& r, const Scalar& t) {
                if (r[0] == l[2]) via_lr((l[1] * ad + r[1]) * hd + r[2], 0) += s * t;
            });
        });
        a.right_coaction.for_nonzero([&](const std::vector<int>& r, const Scalar& t) {
            if (r[0] != i) return;
            a.left_coaction.for_nonzero([&](const std::vector<int>& l, const Scalar& s) {
                if (l[0] == r[1]) via_rl((l[1] * ad + l[2]) * hd + r[2], 0) += s * t;
            });
        });
        if (via_lr != via_rl) {
            rep.add(Check::fail("bicomodule.commute", "(Id⊗rho_r)rho_l = (rho_l⊗Id)rho_r", {i},
                                "lhs = " + render_vector(via_lr) + ", rhs = " + render_vector(via_rl)));
            commute_ok = false;
        }
    }
    if (commute_ok) rep.add(Check::ok("bicomodule.commute", "(Id⊗rho_r)rho_l = (rho_l⊗Id)rho_r"));
    return rep;
}

// ---------------------------------------------------------------------------

RightModule csstar_module(const LeftComodule& m) {
    // m . e_j^* = sum <e_j^*, m(-1)> m(0): the action tensor coincides with
    // the coaction tensor, read over C^*.
    return RightModule{dual_algebra(m.over), m.dim, m.basis, m.coaction};
}

Tensor trivial_left_coaction(const HopfAlgebra& h, int dim) {
    Tensor t(h.field(), {dim, h.dim(), dim});
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < h.dim(); ++j)
            if (!h.alg().unit(j, 0).is_zero()) t.at({i, j, i}) = h.alg().unit(j, 0);
    return t;
}

Tensor trivial_right_coaction(const HopfAlgebra& h, int dim) {
    Tensor t(h.field(), {dim, dim, h.dim()});
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < h.dim(); ++j)
            if (!h.alg().unit(j, 0).is_zero()) t.at({i, i, j}) = h.alg().unit(j, 0);
    return t;
}

Tensor trivial_action(const HopfAlgebra& h, int dim) {
    Tensor t(h.field(), {dim, h.dim(), dim});
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < h.dim(); ++j)
            if (!h.coa().counit(0, j).is_zero()) t.at({i, j, i}) = h.coa().counit(0, j);
    return t;
}

BicomoduleAlgebra make_bicomodule_algebra(HopfAlgebra h, Algebra a, Tensor left_co, Tensor right_co) {
    BicomoduleAlgebra b{std::move(h), std::move(a), std::move(left_co), std::move(right_co)};
    Report rep = check_algebra(b.alg);
    rep.merge(check_bicomodule_algebra(b));
    for (const auto& c : rep.checks)
        if (!c.pass)
            throw std::invalid_argument("make_bicomodule_algebra: " + c.id + " failed (" + c.detail + ")");
    return b;
}

}  // namespace hopfkit
