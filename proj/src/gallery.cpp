#include "hopfkit/gallery.hpp"

#include <algorithm>
#include <array>

#include "hopfkit/linalg.hpp"

namespace hopfkit {
namespace gallery {

int GroupTable::inv(int i) const {
    for (int j = 0; j < n; ++j)
        if (mul[i * n + j] == identity) return j;
    throw std::logic_error("GroupTable: no inverse for " + std::to_string(i));
}

GroupTable cyclic_group(int n) {
    GroupTable g;
    g.n = n;
    g.identity = 0;
    for (int i = 0; i < n; ++i) g.names.push_back(i == 0 ? "e" : "g" + std::string(i > 1 ? std::to_string(i) : ""));
    g.mul.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.mul[i * n + j] = (i + j) % n;
    return g;
}

GroupTable symmetric_group_3() {
    // permutations of {0,1,2} in one-line notation
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                             {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    std::vector<std::string> names = {"e", "r", "r2", "s", "sr", "sr2"};
    GroupTable g;
    g.n = 6;
    g.names = names;
    g.identity = 0;
    g.mul.resize(36);
    auto compose = [&](int a, int b) {
        std::array<int, 3> c;
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        for (int k = 0; k < 6; ++k)
            if (perms[k] == c) return k;
        throw std::logic_error("symmetric_group_3: closure failure");
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) g.mul[i * 6 + j] = compose(i, j);
    return g;
}

HopfAlgebra group_algebra(const GroupTable& g, FieldSpec f) {
    const int n = g.n;
    Tensor mult(f, {n, n, n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mult.at({i, j, g.mul[i * n + j]}) = Scalar::one(f);
    Matrix unit = Matrix::basis_vector(f, n, g.identity);
    Tensor comult(f, {n, n, n});
    Matrix counit(f, 1, n);
    for (int i = 0; i < n; ++i) {
        comult.at({i, i, i}) = Scalar::one(f);
        counit(0, i) = Scalar::one(f);
    }
    Matrix antipode(f, n, n);
    for (int i = 0; i < n; ++i) antipode(g.inv(i), i) = Scalar::one(f);
    return make_hopf(Bialgebra{Algebra{f, n, g.names, std::move(mult), std::move(unit)},
                               Coalgebra{f, n, g.names, std::move(comult), std::move(counit)}},
                     std::move(antipode));
}

HopfAlgebra dual_group_algebra(const GroupTable& g, FieldSpec f) {
    const int n = g.n;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("d_" + g.names[i]);
    Tensor mult(f, {n, n, n});
    for (int i = 0; i < n; ++i) mult.at({i, i, i}) = Scalar::one(f);
    Matrix unit(f, n, 1);
    for (int i = 0; i < n; ++i) unit(i, 0) = Scalar::one(f);
    Tensor comult(f, {n, n, n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) comult.at({g.mul[i * n + j], i, j}) = Scalar::one(f);
    Matrix counit(f, 1, n);
    counit(0, g.identity) = Scalar::one(f);
    Matrix antipode(f, n, n);
    for (int i = 0; i < n; ++i) antipode(g.inv(i), i) = Scalar::one(f);
    return make_hopf(Bialgebra{Algebra{f, n, names, std::move(mult), std::move(unit)},
                               Coalgebra{f, n, names, std::move(comult), std::move(counit)}},
                     std::move(antipode));
}

HopfAlgebra sweedler_h4(FieldSpec f) {
    if (f.characteristic() == 2) throw std::invalid_argument("sweedler_h4: needs characteristic != 2");
    std::vector<std::string> names = {"1", "g", "x", "gx"};
    const Scalar one = Scalar::one(f), neg = Scalar(f, -1);
    Tensor mult(f, {4, 4, 4});
    // 1 is the unit
    for (int i = 0; i < 4; ++i) {
        mult.at({0, i, i}) = one;
        if (i) mult.at({i, 0, i}) = one;
    }
    mult.at({1, 1, 0}) = one;   // g g = 1
    mult.at({1, 2, 3}) = one;   // g x = gx
    mult.at({1, 3, 2}) = one;   // g gx = x
    mult.at({2, 1, 3}) = neg;   // x g = -gx
    mult.at({3, 1, 2}) = neg;   // gx g = -x
    // x x = x gx = gx x = gx gx = 0
    Matrix unit = Matrix::basis_vector(f, 4, 0);

    Tensor comult(f, {4, 4, 4});
    comult.at({0, 0, 0}) = one;  // Delta(1) = 1 ⊗ 1
    comult.at({1, 1, 1}) = one;  // Delta(g) = g ⊗ g
    comult.at({2, 2, 0}) = one;  // Delta(x) = x ⊗ 1 + g ⊗ x
    comult.at({2, 1, 2}) = one;
    comult.at({3, 3, 1}) = one;  // Delta(gx) = gx ⊗ g + 1 ⊗ gx
    comult.at({3, 0, 3}) = one;
    Matrix counit(f, 1, 4);
    counit(0, 0) = one;
    counit(0, 1) = one;

    Matrix antipode(f, 4, 4);
    antipode(0, 0) = one;   // S(1) = 1
    antipode(1, 1) = one;   // S(g) = g
    antipode(3, 2) = neg;   // S(x) = -gx
    antipode(2, 3) = one;   // S(gx) = x
    return make_hopf(Bialgebra{Algebra{f, 4, names, std::move(mult), std::move(unit)},
                               Coalgebra{f, 4, names, std::move(comult), std::move(counit)}},
                     std::move(antipode));
}

HopfAlgebra trivial_hopf(FieldSpec f) { return group_algebra(cyclic_group(1), f); }

Coalgebra comatrix_coalgebra(int n, FieldSpec f) {
    const int d = n * n;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) names.push_back("c" + std::to_string(i + 1) + std::to_string(j + 1));
    Tensor comult(f, {d, d, d});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int u = 0; u < n; ++u)
                comult.at({i * n + j, i * n + u, u * n + j}) = Scalar::one(f);
    Matrix counit(f, 1, d);
    for (int i = 0; i < n; ++i) counit(0, i * n + i) = Scalar::one(f);
    return make_coalgebra(f, std::move(names), std::move(comult), std::move(counit));
}

Coalgebra grouplike_coalgebra(int n, FieldSpec f) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    Tensor comult(f, {n, n, n});
    Matrix counit(f, 1, n);
    for (int i = 0; i < n; ++i) {
        comult.at({i, i, i}) = Scalar::one(f);
        counit(0, i) = Scalar::one(f);
    }
    return make_coalgebra(f, std::move(names), std::move(comult), std::move(counit));
}

std::optional<Matrix> classical_integral(const HopfAlgebra& h, bool require_total) {
    const int d = h.dim();
    const FieldSpec f = h.field();
    // unknowns theta[k]; equations: sum h1 theta(h2) = theta(h) 1_H per basis h
    const int rows = d * d + (require_total ? 1 : 0);
    Matrix sys(f, rows, d), rhs(f, rows, 1);
    h.coa().comult.for_nonzero([&](const std::vector<int>& cm, const Scalar& s) {
        sys(cm[0] * d + cm[1], cm[2]) += s;
    });
    for (int i = 0; i < d; ++i)
        for (int p = 0; p < d; ++p) sys(i * d + p, i) -= h.alg().unit(p, 0);
    if (require_total)
        for (int k = 0; k < d; ++k) {
            sys(d * d, k) = h.alg().unit(k, 0);
            rhs(d * d, 0) = Scalar::one(f);
        }
    auto x = solve_linear(sys, rhs);
    if (!x) return std::nullopt;
    if (!require_total) {
        // prefer a nonzero integral when one exists: the kernel of the system
        Matrix k = kernel_basis(sys);
        if (k.cols() == 0) return std::nullopt;
        return k.col(0);
    }
    return *x;
}

Tensor comatrix_integral(int n, const Algebra& a, const Matrix& mu) {
    const int d = n * n;
    Tensor gamma(a.field, {d, d, a.dim});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    if (i != s) continue;
                    const Scalar& m = mu(r, j);
                    if (m.is_zero()) continue;
                    for (int t = 0; t < a.dim; ++t)
                        if (!a.unit(t, 0).is_zero()) gamma.at({i * n + j, r * n + s, t}) = m * a.unit(t, 0);
                }
    return gamma;
}

Tensor grouplike_integral(int n, const Algebra& a, const Matrix& mu_diag) {
    Tensor gamma(a.field, {n, n, a.dim});
    for (int x = 0; x < n; ++x) {
        const Scalar& m = mu_diag(x, 0);
        if (m.is_zero()) continue;
        for (int t = 0; t < a.dim; ++t)
            if (!a.unit(t, 0).is_zero()) gamma.at({x, x, t}) = m * a.unit(t, 0);
    }
    return gamma;
}

DKDatum regular_datum(const HopfAlgebra& h) {
    LeftComoduleAlgebra a{h, h.alg(), h.coa().comult};
    RightModuleCoalgebra c{h, h.coa(), h.alg().mult};
    return DKDatum{h, std::move(a), std::move(c)};
}

DKDatum trivial_datum(const Coalgebra& c) { return dk::trivial_datum(c); }

BicomoduleAlgebra bicomodule_regular(const HopfAlgebra& h) {
    return BicomoduleAlgebra{h, h.alg(), h.coa().comult, h.coa().comult};
}

BicomoduleAlgebra bicomodule_left_regular(const HopfAlgebra& h) {
    return BicomoduleAlgebra{h, h.alg(), h.coa().comult, trivial_right_coaction(h, h.dim())};
}

BicomoduleAlgebra bicomodule_trivial_h(const Algebra& a) {
    HopfAlgebra k = trivial_hopf(a.field);
    Tensor left = trivial_left_coaction(k, a.dim);
    Tensor right = trivial_right_coaction(k, a.dim);
    return BicomoduleAlgebra{std::move(k), a, std::move(left), std::move(right)};
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> es = {
        {"k", "hopf", "the base field as a Hopf algebra"},
        {"kC2", "hopf", "group algebra of the cyclic group of order 2"},
        {"kC3", "hopf", "group algebra of the cyclic group of order 3"},
        {"kS3", "hopf", "group algebra of the symmetric group on three letters"},
        {"dual_kC2", "hopf", "functions on the cyclic group of order 2"},
        {"dual_kC3", "hopf", "functions on the cyclic group of order 3"},
        {"H4", "hopf", "Sweedler's four-dimensional Hopf algebra"},
        {"M2", "coalgebra", "2x2 comatrix coalgebra"},
        {"M3", "coalgebra", "3x3 comatrix coalgebra"},
        {"M6", "coalgebra", "6x6 comatrix coalgebra (stress case)"},
        {"kX2", "coalgebra", "group-like coalgebra on two points"},
        {"kX3", "coalgebra", "group-like coalgebra on three points"},
        {"kX4", "coalgebra", "group-like coalgebra on four points"},
        {"kX5", "coalgebra", "group-like coalgebra on five points"},
        {"dual_kC2_coalgebra", "coalgebra", "underlying coalgebra of functions on C2"},
        {"comatrix2", "dk_datum", "(k, k, M2): comatrix coalgebra over the trivial pair"},
        {"comatrix3", "dk_datum", "(k, k, M3)"},
        {"grouplike2", "dk_datum", "(k, k, kX2)"},
        {"dk_kC2", "dk_datum", "(kC2, kC2, kC2) regular datum"},
        {"dk_H4", "dk_datum", "(H4, H4, H4) regular datum"},
        {"dk_dual_kC2", "dk_datum", "(k, k, dual_kC2_coalgebra)"},
        {"kc2_delta_delta", "bicomodule_algebra", "kC2 coacting on itself on both sides"},
        {"kc2_delta_trivial", "bicomodule_algebra", "kC2 with trivial right coaction"},
        {"h4_delta_delta", "bicomodule_algebra", "H4 coacting on itself on both sides"},
        {"h4_delta_trivial", "bicomodule_algebra", "H4 with trivial right coaction"},
        {"trivial_kc2", "bicomodule_algebra", "H = k over the algebra kC2"},
    };
    return es;
}

bool has_entry(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return true;
    return false;
}

HopfAlgebra build_hopf(const std::string& name, FieldSpec f) {
    if (name == "k") return trivial_hopf(f);
    if (name == "kC2") return group_algebra(cyclic_group(2), f);
    if (name == "kC3") return group_algebra(cyclic_group(3), f);
    if (name == "kS3") return group_algebra(symmetric_group_3(), f);
    if (name == "dual_kC2") return dual_group_algebra(cyclic_group(2), f);
    if (name == "dual_kC3") return dual_group_algebra(cyclic_group(3), f);
    if (name == "H4") return sweedler_h4(f);
    throw std::invalid_argument("gallery: unknown Hopf algebra '" + name + "'");
}

Coalgebra build_coalgebra(const std::string& name, FieldSpec f) {
    if (name == "M2") return comatrix_coalgebra(2, f);
    if (name == "M3") return comatrix_coalgebra(3, f);
    if (name == "M6") return comatrix_coalgebra(6, f);
    if (name.rfind("kX", 0) == 0) return grouplike_coalgebra(std::stoi(name.substr(2)), f);
    if (name == "dual_kC2_coalgebra") {
        HopfAlgebra h = dual_group_algebra(cyclic_group(2), f);
        return h.coa();
    }
    throw std::invalid_argument("gallery: unknown coalgebra '" + name + "'");
}

DKDatum build_datum(const std::string& name, FieldSpec f) {
    if (name == "comatrix2") return trivial_datum(comatrix_coalgebra(2, f));
    if (name == "comatrix3") return trivial_datum(comatrix_coalgebra(3, f));
    if (name == "grouplike2") return trivial_datum(grouplike_coalgebra(2, f));
    if (name == "dk_kC2") return regular_datum(group_algebra(cyclic_group(2), f));
    if (name == "dk_H4") return regular_datum(sweedler_h4(f));
    if (name == "dk_dual_kC2") return trivial_datum(build_coalgebra("dual_kC2_coalgebra", f));
    throw std::invalid_argument("gallery: unknown datum '" + name + "'");
}

BicomoduleAlgebra build_bicomodule(const std::string& name, FieldSpec f) {
    if (name == "kc2_delta_delta") return bicomodule_regular(group_algebra(cyclic_group(2), f));
    if (name == "kc2_delta_trivial") return bicomodule_left_regular(group_algebra(cyclic_group(2), f));
    if (name == "h4_delta_delta") return bicomodule_regular(sweedler_h4(f));
    if (name == "h4_delta_trivial") return bicomodule_left_regular(sweedler_h4(f));
    if (name == "trivial_kc2") {
        HopfAlgebra kc2 = group_algebra(cyclic_group(2), f);
        return bicomodule_trivial_h(kc2.alg());
    }
    throw std::invalid_argument("gallery: unknown bicomodule algebra '" + name + "'");
}

}  // namespace gallery
}  // namespace hopfkit
