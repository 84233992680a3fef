#include "qmap/opseq.hpp"

#include <algorithm>

#include "qmap/error.hpp"

namespace qmap {

Recurrence::Recurrence(std::vector<CycScalar> b, std::vector<CycScalar> a)
    : b_(std::move(b)), a_(std::move(a)) {
    for (std::size_t n = 0; n < a_.size(); ++n) {
        if (a_[n].is_zero()) {
            throw RegularityError("recurrence coefficient a_" + std::to_string(n + 1) + " vanishes",
                                  static_cast<int>(n) + 1);
        }
    }
}

const CycScalar& Recurrence::b(int n) const {
    if (n < 0 || n >= b_count()) throw TruncationError("b_" + std::to_string(n) + " not available");
    return b_[static_cast<std::size_t>(n)];
}

CycScalar Recurrence::a(int n) const {
    if (n == 0) return 1;
    if (n < 0 || n >= a_count()) throw TruncationError("a_" + std::to_string(n) + " not available");
    return a_[static_cast<std::size_t>(n) - 1];
}

OPSequence::OPSequence(std::vector<Poly> polys) : polys_(std::move(polys)) {
    for (std::size_t n = 0; n < polys_.size(); ++n) {
        if (polys_[n].degree() != static_cast<int>(n) || !polys_[n].leading().is_one()) {
            throw InvalidArgument("p_" + std::to_string(n) + " is not monic of degree " + std::to_string(n));
        }
    }
}

const Poly& OPSequence::operator[](int n) const {
    if (n < 0 || n >= size()) throw TruncationError("p_" + std::to_string(n) + " not available");
    return polys_[static_cast<std::size_t>(n)];
}

BlockView::BlockView(Recurrence rec, int k) : rec_(std::move(rec)), k_(k) {
    if (k_ < 1) throw InvalidArgument("block size must be positive");
}

int BlockView::flat(int n, int j) const {
    const int idx = n * k_ + j;
    if (idx < 0) throw InvalidArgument("negative block index");
    return idx;
}

const CycScalar& BlockView::b(int n, int j) const { return rec_.b(flat(n, j)); }

CycScalar BlockView::a(int n, int j) const { return rec_.a(flat(n, j)); }

int BlockView::blocks() const { return std::min(rec_.b_count(), rec_.a_count()) / k_; }

OPSequence ops_from_recurrence(const Recurrence& rec, int N) {
    if (N < 0) return {};
    if (N > rec.b_count() || N > rec.a_count()) {
        throw TruncationError("recurrence too short for p_" + std::to_string(N));
    }
    std::vector<Poly> p;
    p.reserve(static_cast<std::size_t>(N) + 1);
    p.push_back(Poly::constant(1));
    for (int n = 0; n < N; ++n) {
        Poly next = (Poly::x() - Poly::constant(rec.b(n))) * p.back();
        if (n >= 1) next -= p[static_cast<std::size_t>(n) - 1] * rec.a(n);
        p.push_back(std::move(next));
    }
    return OPSequence(std::move(p));
}

MomentOps recurrence_from_moments(const MomentFunctional& u, int N) {
    if (N < 0) throw InvalidArgument("negative OPS length");
    if (2 * N > u.order()) {
        throw TruncationError("recovering p_" + std::to_string(N) + " needs order " + std::to_string(2 * N) +
                              " but u has order " + std::to_string(u.order()));
    }
    std::vector<CycScalar> b;
    std::vector<CycScalar> a;
    std::vector<CycScalar> norms;
    std::vector<Poly> p;
    p.push_back(Poly::constant(1));
    norms.push_back(u[0]);
    if (norms.back().is_zero()) throw RegularityError("u is not regular at level 0 (u_0 = 0)", 0);
    for (int n = 0; n < N; ++n) {
        const Poly& pn = p.back();
        const Poly sq = pn * pn;
        // ⟨u, x p_n²⟩ needs order 2n+1 ≤ 2N.
        const CycScalar xsq = act(u, shift_up(sq, 1));
        b.push_back(xsq / norms.back());
        Poly next = (Poly::x() - Poly::constant(b.back())) * pn;
        if (n >= 1) next -= p[static_cast<std::size_t>(n) - 1] * a.back();
        const CycScalar norm = act(u, next * next);
        if (norm.is_zero()) {
            throw RegularityError("u is not regular at level " + std::to_string(n + 1) +
                                      " (<u, p_" + std::to_string(n + 1) + "^2> = 0)",
                                  n + 1);
        }
        a.push_back(norm / norms.back());
        norms.push_back(norm);
        p.push_back(std::move(next));
    }
    return {Recurrence(std::move(b), std::move(a)), OPSequence(std::move(p)), std::move(norms)};
}

OrthogonalityReport orthogonality_check(const MomentFunctional& u, const OPSequence& ops, int limit) {
    OrthogonalityReport rep;
    const int count = limit < 0 ? ops.size() : std::min(limit + 1, ops.size());
    for (int n = 0; n < count; ++n) {
        for (int m = 0; m <= n; ++m) {
            if (n + m > u.order()) break;
            const CycScalar v = act(u, ops[n] * ops[m]);
            ++rep.checked_pairs;
            const bool bad = (n == m) ? v.is_zero() : !v.is_zero();
            if (bad) {
                rep.ok = false;
                rep.failure = std::make_pair(n, m);
                rep.message = n == m ? "<u, p_" + std::to_string(n) + "^2> = 0"
                                     : "<u, p_" + std::to_string(n) + " p_" + std::to_string(m) +
                                           "> = " + v.str();
                return rep;
            }
        }
    }
    rep.message = "orthogonal";
    return rep;
}

Poly delta_det(const BlockView& view, int n, int i, int j) {
    if (j < i - 2) return {};
    if (j == i - 2) return Poly::constant(1);
    if (i < 1) throw InvalidArgument("delta_det needs i >= 1 when j >= i - 1");
    const Poly x = Poly::x();
    Poly before = Poly::constant(1);                          // Δ(i, i−2)
    Poly current = x - Poly::constant(view.b(n, i - 1));      // Δ(i, i−1)
    for (int col = i; col <= j; ++col) {
        Poly next = (x - Poly::constant(view.b(n, col))) * current - before * view.a(n, col);
        before = std::move(current);
        current = std::move(next);
    }
    return current;
}

}  // namespace qmap
