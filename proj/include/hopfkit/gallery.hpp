#ifndef HOPFKIT_GALLERY_HPP
#define HOPFKIT_GALLERY_HPP

#include "hopfkit/yetter_drinfeld.hpp"

namespace hopfkit {
namespace gallery {

struct GroupTable {
    int n = 0;
    std::vector<std::string> names;
    std::vector<int> mul;  // row-major n x n, mul[i*n+j] = index of g_i g_j
    int identity = 0;
    int inv(int i) const;
};

GroupTable cyclic_group(int n);
GroupTable symmetric_group_3();

/// kG with Delta(g) = g⊗g, S(g) = g^{-1}.
HopfAlgebra group_algebra(const GroupTable& g, FieldSpec f);
/// Functions on G with pointwise product; Delta(d_g) = sum_{xy=g} d_x ⊗ d_y.
HopfAlgebra dual_group_algebra(const GroupTable& g, FieldSpec f);
/// Sweedler's 4-dimensional Hopf algebra (char != 2): basis 1, g, x, gx with
/// g^2 = 1, x^2 = 0, xg = -gx; S^2 != Id.
HopfAlgebra sweedler_h4(FieldSpec f);
/// The base field as a Hopf algebra.
HopfAlgebra trivial_hopf(FieldSpec f);

/// n x n comatrix coalgebra: Delta(c_ij) = sum_u c_iu ⊗ c_uj, eps(c_ij) = delta_ij.
Coalgebra comatrix_coalgebra(int n, FieldSpec f);
/// Group-like coalgebra on a set of size n: Delta(x) = x⊗x, eps(x) = 1.
Coalgebra grouplike_coalgebra(int n, FieldSpec f);

/// Left integral functional on H: sum h1 theta(h2) = theta(h) 1_H; the
/// normalization theta(1) = 1 is solved for when require_total.
std::optional<Matrix> classical_integral(const HopfAlgebra& h, bool require_total);

/// gamma_mu(c_ij)(c_rs) = delta_is mu_rj 1_A over the datum (k, k, M^n(k));
/// an integral for every mu, total iff Tr(mu) = 1.
Tensor comatrix_integral(int n, const Algebra& a, const Matrix& mu);
/// gamma_mu(x)(y) = delta_xy mu_x 1_A; total iff every mu_x = 1.
Tensor grouplike_integral(int n, const Algebra& a, const Matrix& mu_diag);

/// (H, H, H): A = H coacting by Delta, C = H acted on by multiplication.
DKDatum regular_datum(const HopfAlgebra& h);
/// (k, k, C) for a plain coalgebra.
DKDatum trivial_datum(const Coalgebra& c);

/// H coacting on itself on both sides by Delta.
BicomoduleAlgebra bicomodule_regular(const HopfAlgebra& h);
/// rho_l = Delta, trivial right coaction (the classical relative-Hopf case).
BicomoduleAlgebra bicomodule_left_regular(const HopfAlgebra& h);
/// H = k acting on an arbitrary algebra: everything degenerates.
BicomoduleAlgebra bicomodule_trivial_h(const Algebra& a);

/// A named, exportable gallery entry.
struct Entry {
    std::string name;
    std::string kind;  // hopf | coalgebra | dk_datum | bicomodule_algebra
    std::string description;
};
const std::vector<Entry>& entries();
bool has_entry(const std::string& name);

HopfAlgebra build_hopf(const std::string& name, FieldSpec f);
Coalgebra build_coalgebra(const std::string& name, FieldSpec f);
DKDatum build_datum(const std::string& name, FieldSpec f);
BicomoduleAlgebra build_bicomodule(const std::string& name, FieldSpec f);

}  // namespace gallery
}  // namespace hopfkit

#endif
