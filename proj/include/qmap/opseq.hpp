#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmap/functional.hpp"
#include "qmap/poly.hpp"

namespace qmap {

/// Coefficients of p_{n+1}(x) = (x − b_n) p_n(x) − a_n p_{n−1}(x), with p_{−1} = 0, p_0 = 1.
/// a_0 plays no role in the recurrence and is fixed to 1, so a_n is stored for n ≥ 1 only.
class Recurrence {
public:
    Recurrence() = default;
    /// `a` holds a_1, a_2, ...; every entry must be nonzero (RegularityError otherwise).
    Recurrence(std::vector<CycScalar> b, std::vector<CycScalar> a);

    const CycScalar& b(int n) const;
    /// a_n, with a_0 = 1.
    CycScalar a(int n) const;

    int b_count() const noexcept { return static_cast<int>(b_.size()); }
    /// Number of available a_n including a_0.
    int a_count() const noexcept { return static_cast<int>(a_.size()) + 1; }

    const std::vector<CycScalar>& b_values() const noexcept { return b_; }
    /// a_1, a_2, ...
    const std::vector<CycScalar>& a_values() const noexcept { return a_; }

    friend bool operator==(const Recurrence&, const Recurrence&) = default;

private:
    std::vector<CycScalar> b_;
    std::vector<CycScalar> a_;
};

/// Monic polynomials p_0, ..., p_N with deg p_n = n.
class OPSequence {
public:
    OPSequence() = default;
    explicit OPSequence(std::vector<Poly> polys);

    int size() const noexcept { return static_cast<int>(polys_.size()); }
    const Poly& operator[](int n) const;
    const std::vector<Poly>& polys() const noexcept { return polys_; }

private:
    std::vector<Poly> polys_;
};

/// Block reading of a recurrence: b_n^{(j)} = b_{nk+j}, a_n^{(j)} = a_{nk+j}.
/// Indices j ≥ k wrap into the next block.
class BlockView {
public:
    BlockView(Recurrence rec, int k);

    int k() const noexcept { return k_; }
    const Recurrence& recurrence() const noexcept { return rec_; }

    const CycScalar& b(int n, int j) const;
    CycScalar a(int n, int j) const;
    /// Number of complete blocks for which every b_n^{(j)} and a_n^{(j)} exists.
    int blocks() const;

private:
    int flat(int n, int j) const;
    Recurrence rec_;
    int k_;
};

/// p_0..p_N from the recurrence.
OPSequence ops_from_recurrence(const Recurrence& rec, int N);

struct MomentOps {
    Recurrence rec;
    OPSequence ops;
    /// ⟨u, p_n²⟩ for n = 0..N.
    std::vector<CycScalar> norms;
};

/// Monic OPS p_0..p_N of u and its recurrence b_0..b_{N−1}, a_1..a_N.
/// Requires 2N ≤ order(u); throws RegularityError naming the first level with ⟨u, p_n²⟩ = 0.
MomentOps recurrence_from_moments(const MomentFunctional& u, int N);

struct OrthogonalityReport {
    bool ok = true;
    int checked_pairs = 0;
    std::optional<std::pair<int, int>> failure;
    std::string message;
};

/// Checks ⟨u, p_n p_m⟩ = 0 for n ≠ m and ≠ 0 for n = m, over every pair the truncation supports
/// with n, m < limit (limit < 0 means all polynomials).
OrthogonalityReport orthogonality_check(const MomentFunctional& u, const OPSequence& ops,
                                        int limit = -1);

/// Tridiagonal determinant Δ_n(i, j; x) of the block recurrence.
Poly delta_det(const BlockView& view, int n, int i, int j);

}  // namespace qmap
