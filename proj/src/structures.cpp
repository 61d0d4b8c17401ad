#include "hopfkit/structures.hpp"

#include "hopfkit/linalg.hpp"

namespace hopfkit {

Matrix Algebra::mul(const Matrix& x, const Matrix& y) const {
    Matrix out(field, dim, 1);
    for (int i = 0; i < dim; ++i) {
        const Scalar& xi = x(i, 0);
        if (xi.is_zero()) continue;
        mult.for_nonzero_slice(i, [&](const std::vector<int>& idx, const Scalar& c) {
            const Scalar& yj = y(idx[1], 0);
            if (!yj.is_zero()) out(idx[2], 0) += c * xi * yj;
        });
    }
    return out;
}

Matrix Algebra::mult_matrix() const {
    Matrix m(field, dim, dim * dim);
    mult.for_nonzero([&](const std::vector<int>& idx, const Scalar& c) {
        m(idx[2], idx[0] * dim + idx[1]) += c;
    });
    return m;
}

Matrix Coalgebra::comult_vec(const Matrix& x) const {
    Matrix out(field, dim * dim, 1);
    for (int i = 0; i < dim; ++i) {
        const Scalar& xi = x(i, 0);
        if (xi.is_zero()) continue;
        comult.for_nonzero_slice(i, [&](const std::vector<int>& idx, const Scalar& c) {
            out(idx[1] * dim + idx[2], 0) += c * xi;
        });
    }
    return out;
}

Matrix Coalgebra::comult_matrix() const {
    Matrix m(field, dim * dim, dim);
    comult.for_nonzero([&](const std::vector<int>& idx, const Scalar& c) {
        m(idx[1] * dim + idx[2], idx[0]) += c;
    });
    return m;
}

Scalar Coalgebra::counit_of(const Matrix& x) const { return (counit * x)(0, 0); }

Matrix HopfAlgebra::s_inv(const Matrix& x) const {
    if (!antipode_inverse) throw std::logic_error("HopfAlgebra: antipode inverse not computed");
    return *antipode_inverse * x;
}

// ---------------------------------------------------------------------------

Report check_algebra(const Algebra& a) {
    Report rep;
    if ((int)a.mult.shape().size() != 3 || a.mult.shape() != std::vector<int>{a.dim, a.dim, a.dim}) {
        rep.add(Check::fail("algebra.shape", "mult is a (dim,dim,dim) tensor", {}, "bad tensor shape"));
        return rep;
    }
    bool assoc_done = false;
    for (int i = 0; i < a.dim && !assoc_done; ++i)
        for (int j = 0; j < a.dim && !assoc_done; ++j)
            for (int k = 0; k < a.dim; ++k) {
                Matrix ei = a.basis_vec(i), ej = a.basis_vec(j), ek = a.basis_vec(k);
                Matrix lhs = a.mul(a.mul(ei, ej), ek);
                Matrix rhs = a.mul(ei, a.mul(ej, ek));
                if (lhs != rhs) {
                    rep.add(Check::fail("algebra.assoc", "(ab)c = a(bc)", {i, j, k},
                                        "lhs = " + render_vector(lhs) + ", rhs = " + render_vector(rhs)));
                    assoc_done = true;
                    break;
                }
            }
    if (!assoc_done) rep.add(Check::ok("algebra.assoc", "(ab)c = a(bc)"));

    bool unit_ok = true;
    for (int i = 0; i < a.dim; ++i) {
        Matrix ei = a.basis_vec(i);
        Matrix l = a.mul(a.unit, ei), r = a.mul(ei, a.unit);
        if (l != ei || r != ei) {
            rep.add(Check::fail("algebra.unit", "1a = a = a1", {i},
                                "1*e = " + render_vector(l) + ", e*1 = " + render_vector(r)));
            unit_ok = false;
            break;
        }
    }
    if (unit_ok) rep.add(Check::ok("algebra.unit", "1a = a = a1"));
    return rep;
}

Report check_coalgebra(const Coalgebra& c) {
    Report rep;
    if ((int)c.comult.shape().size() != 3 || c.comult.shape() != std::vector<int>{c.dim, c.dim, c.dim}) {
        rep.add(Check::fail("coalgebra.shape", "comult is a (dim,dim,dim) tensor", {}, "bad tensor shape"));
        return rep;
    }
    const int d = c.dim;
    bool coassoc_ok = true;
    for (int i = 0; i < d && coassoc_ok; ++i) {
        // both sides of (Delta (x) Id)Delta = (Id (x) Delta)Delta at e_i, as d^3 vectors
        Matrix lhs(c.field, d * d * d, 1), rhs(c.field, d * d * d, 1);
        c.comult.for_nonzero([&](const std::vector<int>& uv, const Scalar& s) {
            if (uv[0] != i) return;
            int u = uv[1], v = uv[2];
            c.comult.for_nonzero([&](const std::vector<int>& pq, const Scalar& t) {
                if (pq[0] == u) lhs((pq[1] * d + pq[2]) * d + v, 0) += s * t;
                if (pq[0] == v) rhs((u * d + pq[1]) * d + pq[2], 0) += s * t;
            });
        });
        if (lhs != rhs) {
            rep.add(Check::fail("coalgebra.coassoc", "(Delta⊗Id)Delta = (Id⊗Delta)Delta", {i},
                                "lhs = " + render_vector(lhs) + ", rhs = " + render_vector(rhs)));
            coassoc_ok = false;
        }
    }
    if (coassoc_ok) rep.add(Check::ok("coalgebra.coassoc", "(Delta⊗Id)Delta = (Id⊗Delta)Delta"));

    bool counit_ok = true;
    for (int i = 0; i < d && counit_ok; ++i) {
        Matrix left(c.field, d, 1), right(c.field, d, 1);
        c.comult.for_nonzero([&](const std::vector<int>& idx, const Scalar& s) {
            if (idx[0] != i) return;
            left(idx[2], 0) += s * c.counit(0, idx[1]);
            right(idx[1], 0) += s * c.counit(0, idx[2]);
        });
        Matrix ei = c.basis_vec(i);
        if (left != ei || right != ei) {
            rep.add(Check::fail("coalgebra.counit", "(eps⊗Id)Delta = Id = (Id⊗eps)Delta", {i},
                                "(eps⊗Id)Delta = " + render_vector(left) +
                                    ", (Id⊗eps)Delta = " + render_vector(right)));
            counit_ok = false;
        }
    }
    if (counit_ok) rep.add(Check::ok("coalgebra.counit", "(eps⊗Id)Delta = Id = (Id⊗eps)Delta"));
    return rep;
}

namespace {

// product on the tensor square A (x) A, inputs and output flattened
Matrix mul2(const Algebra& a, const Matrix& x, const Matrix& y) {
    const int d = a.dim;
    Matrix out(a.field, d * d, 1);
    for (int p = 0; p < d * d; ++p) {
        if (x(p, 0).is_zero()) continue;
        for (int q = 0; q < d * d; ++q) {
            if (y(q, 0).is_zero()) continue;
            Matrix left = a.mul(a.basis_vec(p / d), a.basis_vec(q / d));
            Matrix right = a.mul(a.basis_vec(p % d), a.basis_vec(q % d));
            Scalar w = x(p, 0) * y(q, 0);
            for (int s = 0; s < d; ++s) {
                if (left(s, 0).is_zero()) continue;
                for (int t = 0; t < d; ++t)
                    if (!right(t, 0).is_zero()) out(s * d + t, 0) += w * left(s, 0) * right(t, 0);
            }
        }
    }
    return out;
}

}  // namespace

Report check_bialgebra(const Bialgebra& b) {
    Report rep = check_algebra(b.alg);
    rep.merge(check_coalgebra(b.coa));
    const int d = b.dim();

    bool mult_ok = true;
    for (int i = 0; i < d && mult_ok; ++i)
        for (int j = 0; j < d; ++j) {
            Matrix lhs = b.coa.comult_vec(b.alg.mul(b.alg.basis_vec(i), b.alg.basis_vec(j)));
            Matrix rhs = mul2(b.alg, b.coa.comult_vec(b.alg.basis_vec(i)),
                              b.coa.comult_vec(b.alg.basis_vec(j)));
            if (lhs != rhs) {
                rep.add(Check::fail("bialgebra.comult_mult", "Delta(ab) = Delta(a)Delta(b)", {i, j},
                                    "lhs = " + render_vector(lhs) + ", rhs = " + render_vector(rhs)));
                mult_ok = false;
                break;
            }
        }
    if (mult_ok) rep.add(Check::ok("bialgebra.comult_mult", "Delta(ab) = Delta(a)Delta(b)"));

    Matrix d1 = b.coa.comult_vec(b.alg.unit);
    Matrix u2 = Matrix::kron(b.alg.unit, b.alg.unit);
    if (d1 == u2)
        rep.add(Check::ok("bialgebra.comult_unit", "Delta(1) = 1⊗1"));
    else
        rep.add(Check::fail("bialgebra.comult_unit", "Delta(1) = 1⊗1", {},
                            "Delta(1) = " + render_vector(d1)));

    bool counit_ok = true;
    for (int i = 0; i < d && counit_ok; ++i)
        for (int j = 0; j < d; ++j) {
            Scalar lhs = b.coa.counit_of(b.alg.mul(b.alg.basis_vec(i), b.alg.basis_vec(j)));
            Scalar rhs = b.coa.counit(0, i) * b.coa.counit(0, j);
            if (lhs != rhs) {
                rep.add(Check::fail("bialgebra.counit_mult", "eps(ab) = eps(a)eps(b)", {i, j},
                                    "lhs = " + lhs.str() + ", rhs = " + rhs.str()));
                counit_ok = false;
                break;
            }
        }
    if (counit_ok) rep.add(Check::ok("bialgebra.counit_mult", "eps(ab) = eps(a)eps(b)"));

    Scalar e1 = b.coa.counit_of(b.alg.unit);
    if (e1.is_one())
        rep.add(Check::ok("bialgebra.counit_unit", "eps(1) = 1"));
    else
        rep.add(Check::fail("bialgebra.counit_unit", "eps(1) = 1", {}, "eps(1) = " + e1.str()));
    return rep;
}

Report check_hopf(const HopfAlgebra& h) {
    Report rep = check_bialgebra(h.bi);
    const int d = h.dim();
    const Algebra& a = h.alg();
    const Coalgebra& c = h.coa();

    bool left_ok = true, right_ok = true;
    std::optional<std::vector<int>> wl, wr;
    std::string dl, dr;
    for (int i = 0; i < d; ++i) {
        Matrix left(h.field(), d, 1), right(h.field(), d, 1);
        c.comult.for_nonzero([&](const std::vector<int>& idx, const Scalar& s) {
            if (idx[0] != i) return;
            left += a.mul(h.s(a.basis_vec(idx[1])), a.basis_vec(idx[2])) * s;
            right += a.mul(a.basis_vec(idx[1]), h.s(a.basis_vec(idx[2]))) * s;
        });
        Matrix target = a.unit * c.counit(0, i);
        if (left_ok && left != target) {
            left_ok = false;
            wl = {i};
            dl = "sum S(h1)h2 = " + render_vector(left) + ", eps(h)1 = " + render_vector(target);
        }
        if (right_ok && right != target) {
            right_ok = false;
            wr = {i};
            dr = "sum h1 S(h2) = " + render_vector(right) + ", eps(h)1 = " + render_vector(target);
        }
    }
    rep.add(left_ok ? Check::ok("hopf.antipode_left", "sum S(h1)h2 = eps(h)1")
                    : Check::fail("hopf.antipode_left", "sum S(h1)h2 = eps(h)1", *wl, dl));
    rep.add(right_ok ? Check::ok("hopf.antipode_right", "sum h1 S(h2) = eps(h)1")
                     : Check::fail("hopf.antipode_right", "sum h1 S(h2) = eps(h)1", *wr, dr));

    if (h.antipode_inverse) {
        Matrix id = Matrix::identity(h.field(), d);
        bool ok = (h.antipode * *h.antipode_inverse == id) && (*h.antipode_inverse * h.antipode == id);
        rep.add(ok ? Check::ok("hopf.antipode_inverse", "S S^{-1} = S^{-1} S = Id")
                   : Check::fail("hopf.antipode_inverse", "S S^{-1} = S^{-1} S = Id", {}, ""));
    }
    return rep;
}

// ---------------------------------------------------------------------------

namespace {
void throw_on_failure(const Report& rep, const std::string& what) {
    for (const auto& c : rep.checks)
        if (!c.pass) throw std::invalid_argument(what + ": " + c.id + " failed (" + c.detail + ")");
}
}  // namespace

Algebra make_algebra(FieldSpec field, std::vector<std::string> basis, Tensor mult, Matrix unit) {
    Algebra a{field, (int)basis.size(), std::move(basis), std::move(mult), std::move(unit)};
    throw_on_failure(check_algebra(a), "make_algebra");
    return a;
}

Coalgebra make_coalgebra(FieldSpec field, std::vector<std::string> basis, Tensor comult, Matrix counit) {
    Coalgebra c{field, (int)basis.size(), std::move(basis), std::move(comult), std::move(counit)};
    throw_on_failure(check_coalgebra(c), "make_coalgebra");
    return c;
}

Bialgebra make_bialgebra(Algebra a, Coalgebra c) {
    Bialgebra b{std::move(a), std::move(c)};
    throw_on_failure(check_bialgebra(b), "make_bialgebra");
    return b;
}

Bialgebra make_bialgebra_unchecked(Algebra a, Coalgebra c) { return Bialgebra{std::move(a), std::move(c)}; }

HopfAlgebra make_hopf(Bialgebra b, Matrix antipode) {
    HopfAlgebra h{std::move(b), std::move(antipode), std::nullopt};
    auto inv = inverse(h.antipode);
    if (!inv) throw std::invalid_argument("make_hopf: antipode matrix is singular");
    h.antipode_inverse = std::move(*inv);
    throw_on_failure(check_hopf(h), "make_hopf");
    return h;
}

HopfAlgebra make_hopf_unchecked(Bialgebra b, Matrix antipode) {
    HopfAlgebra h{std::move(b), std::move(antipode), std::nullopt};
    auto inv = inverse(h.antipode);
    if (inv) h.antipode_inverse = std::move(*inv);
    return h;
}

Algebra dual_algebra(const Coalgebra& c) {
    Tensor mult(c.field, {c.dim, c.dim, c.dim});
    c.comult.for_nonzero([&](const std::vector<int>& idx, const Scalar& s) {
        // <e_i^* e_j^*, e_k> = comult[k, i, j]
        mult.at({idx[1], idx[2], idx[0]}) += s;
    });
    std::vector<std::string> names;
    for (const auto& n : c.basis) names.push_back(n + "*");
    return Algebra{c.field, c.dim, std::move(names), std::move(mult), c.counit.transpose()};
}

std::optional<Matrix> solve_antipode(const Bialgebra& b) {
    const int d = b.dim();
    // unknowns S[r][u] at index r*d + u; equations for both antipode identities
    Matrix sys(b.field(), 2 * d * d, d * d);
    Matrix rhs(b.field(), 2 * d * d, 1);
    b.coa.comult.for_nonzero([&](const std::vector<int>& iuv, const Scalar& s) {
        int i = iuv[0], u = iuv[1], v = iuv[2];
        b.alg.mult.for_nonzero([&](const std::vector<int>& rvt, const Scalar& m) {
            // left identity: sum S(e_u) e_v; S(e_u) = sum_r S[r][u] e_r
            if (rvt[1] == v) sys(i * d + rvt[2], rvt[0] * d + u) += s * m;
            // right identity: sum e_u S(e_v)
            if (rvt[0] == u) sys(d * d + i * d + rvt[2], rvt[1] * d + v) += s * m;
        });
    });
    for (int i = 0; i < d; ++i)
        for (int t = 0; t < d; ++t) {
            Scalar target = b.coa.counit(0, i) * b.alg.unit(t, 0);
            rhs(i * d + t, 0) = target;
            rhs(d * d + i * d + t, 0) = target;
        }
    auto x = solve_linear(sys, rhs);
    if (!x) return std::nullopt;
    Matrix s(b.field(), d, d);
    for (int r = 0; r < d; ++r)
        for (int u = 0; u < d; ++u) s(r, u) = (*x)(r * d + u, 0);
    return s;
}

std::optional<Matrix> antipode_inverse(const HopfAlgebra& h) { return inverse(h.antipode); }

Matrix convolution(const Coalgebra& c, const Algebra& a, const Matrix& f, const Matrix& g) {
    if (f.cols() != c.dim || g.cols() != c.dim || f.rows() != a.dim || g.rows() != a.dim)
        throw std::logic_error("convolution: map shapes must be a_dim x c_dim");
    Matrix out(a.field, a.dim, c.dim);
    c.comult.for_nonzero([&](const std::vector<int>& idx, const Scalar& s) {
        out.set_col(idx[0], out.col(idx[0]) + a.mul(f.col(idx[1]), g.col(idx[2])) * s);
    });
    return out;
}

Matrix convolution_unit(const Coalgebra& c, const Algebra& a) { return a.unit * c.counit; }

Matrix harpoon_left(const Coalgebra& c, const Matrix& cstar, const Matrix& cvec) {
    Matrix out(c.field, c.dim, 1);
    c.comult.for_nonzero([&](const std::vector<int>& idx, const Scalar& s) {
        const Scalar& x = cvec(idx[0], 0);
        if (!x.is_zero()) out(idx[1], 0) += s * x * cstar(idx[2], 0);
    });
    return out;
}

Matrix harpoon_right(const Coalgebra& c, const Matrix& cvec, const Matrix& cstar) {
    Matrix out(c.field, c.dim, 1);
    c.comult.for_nonzero([&](const std::vector<int>& idx, const Scalar& s) {
        const Scalar& x = cvec(idx[0], 0);
        if (!x.is_zero()) out(idx[2], 0) += s * x * cstar(idx[1], 0);
    });
    return out;
}

}  // namespace hopfkit
