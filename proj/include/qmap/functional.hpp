#pragma once

#include <span>
#include <vector>

#include "qmap/poly.hpp"
#include "qmap/scalars.hpp"

namespace qmap {

/// Truncated moment functional: moments u_0..u_N are known, N is the effective order.
/// Every operation below returns a functional whose order reflects only the moments it
/// can determine from its inputs.
class MomentFunctional {
public:
    MomentFunctional() = default;
    explicit MomentFunctional(std::vector<CycScalar> moments) : moments_(std::move(moments)) {}

    int order() const noexcept { return static_cast<int>(moments_.size()) - 1; }
    std::span<const CycScalar> moments() const noexcept { return moments_; }
    /// u_n; throws TruncationError beyond the effective order.
    const CycScalar& operator[](int n) const;

    /// Same functional, truncated to order n (n ≤ order()).
    MomentFunctional truncated(int n) const;

    friend bool operator==(const MomentFunctional&, const MomentFunctional&) = default;

private:
    std::vector<CycScalar> moments_;
};

/// (Φ, Ψ) of the distributional equation H_q(Φu) = Ψu.
struct PearsonPair {
    Poly phi;
    Poly psi;

    friend bool operator==(const PearsonPair&, const PearsonPair&) = default;
};

/// ⟨u, f⟩. Throws TruncationError when deg f exceeds the order of u.
CycScalar act(const MomentFunctional& u, const Poly& f);

/// φu, with (φu)_n = ⟨u, φ x^n⟩; order drops by deg φ.
MomentFunctional left_mul(const Poly& phi, const MomentFunctional& u);

/// H_q u, with (H_q u)_n = −[n]_q u_{n−1}; order grows by one.
MomentFunctional hahn(const MomentFunctional& u, const QParam& q);

/// h_d u, with (h_d u)_n = d^n u_n.
MomentFunctional dilate(const MomentFunctional& u, const CycScalar& d);

/// σ*_{x^k} u, with moments u_{kn}; order becomes ⌊order/k⌋.
MomentFunctional sigma_star(const MomentFunctional& u, int k);

/// The polynomial (uf)(x) = ⟨u_y, (x f(x) − y f(y))/(x − y)⟩.
Poly u_poly(const MomentFunctional& u, const Poly& f);

/// Moments of a solution of H_q(Φu) = Ψu, generated one unknown moment per equation.
/// `seed` supplies the leading moments the equation leaves free (just u_0 for the
/// classical pairs). Throws RegularityError when the coefficient of the next unknown
/// moment vanishes, and InvalidArgument when seed is too short.
MomentFunctional pearson_moments(const PearsonPair& pair, std::span<const CycScalar> seed, int order,
                                 const QParam& q);
MomentFunctional pearson_moments(const PearsonPair& pair, const CycScalar& u0, int order,
                                 const QParam& q);

/// Number of leading moments a Pearson pair leaves undetermined.
int pearson_free_moments(const PearsonPair& pair);

/// Entry n is ⟨H_q(Φu) − Ψu, x^n⟩, for every n the truncation of u supports.
std::vector<CycScalar> pearson_residual(const MomentFunctional& u, const PearsonPair& pair,
                                        const QParam& q);

bool all_zero(std::span<const CycScalar> values);

}  // namespace qmap
