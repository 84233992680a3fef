#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmap/classifier.hpp"
#include "qmap/functional.hpp"
#include "qmap/opseq.hpp"
#include "qmap/poly.hpp"
#include "qmap/report.hpp"
#include "qmap/stieltjes.hpp"

namespace qmap {

enum class Family { LittleLaguerre, LittleJacobi };

/// "little-q3-laguerre" or "little-q3-jacobi".
std::string family_name(Family f);

// Classical families at parameter Q (the cubic cases use Q = q³).

/// Φ = x, Ψ = (aQ(Q−1))^{−1}(x − 1 + aQ)
PearsonPair laguerre_pair(const CycScalar& a, const QParam& Q);
/// Φ = x(x − 1/(bQ)), Ψ = (abQ²(Q−1))^{−1}((abQ² − 1)x + 1 − aQ)
PearsonPair jacobi_pair(const CycScalar& a, const CycScalar& b, const QParam& Q);
/// A = x, C = Q/(a(Q−1))·(x − 1 + aQ) − Q, D = u0·Q/(a(Q−1))
ACDTriple laguerre_acd(const CycScalar& a, const QParam& Q, const CycScalar& u0);
/// A = x(x − 1/b), C = Q/(ab(Q−1))·((abQ² − 1)x + 1 − aQ) − Q²(Q^{−1} + 1)x + Q/b,
/// D = u0(Q/(ab(Q−1))·(abQ² − 1) − Q²)
ACDTriple jacobi_acd(const CycScalar& a, const CycScalar& b, const QParam& Q, const CycScalar& u0);
/// a ≠ 0 and a ≠ Q^{−n−1} for n = 0..N.
Report laguerre_regularity(const CycScalar& a, const QParam& Q, int N);
/// ab ≠ 0, ab ≠ Q^{−n}, a ≠ Q^{−n−1}, b ≠ Q^{−n−1} for n = 0..N.
Report jacobi_regularity(const CycScalar& a, const CycScalar& b, const QParam& Q, int N);

/// One row of the cubic catalog with concrete parameters (names "a", "b", "c", "tau").
struct CubicCase {
    int id = 0;
    Family family = Family::LittleLaguerre;
    std::map<std::string, CycScalar> params;
    int expected_class = 0;

    bool has(const std::string& name) const { return params.count(name) != 0; }
    /// Throws InvalidArgument when the parameter is missing.
    const CycScalar& param(const std::string& name) const;
};

/// Fills family and expected class from the case id (1..13).
CubicCase make_case(int id, std::map<std::string, CycScalar> params);

/// a_0^{(1)} of the row: −τ², −τ²[3]_q/(1+q)² (cases 6, 10, 11, 12) or −(c² + τc + τ²) (case 13).
CycScalar case_a01(const CubicCase& c, const QParam& q);
/// η = x² + τx + k_τ with k_τ = a_0^{(1)} + τ².
Poly case_eta(const CubicCase& c, const QParam& q);

/// Row constraints, required parameters, and classical-family regularity at q³ for n = 0..N.
Report validate_case(const CubicCase& c, const QParam& q, int N = 64);

/// Canonical (Φ, Ψ) of the row evaluated at the case parameters.
PearsonPair expected_pair(const CubicCase& c, const QParam& q);

struct CaseBundle {
    CubicCase spec;
    CycScalar q;
    CycScalar a01;
    Poly eta;
    PearsonPair pair_v;
    ACDTriple acd_v;
    MomentFunctional v;
    MomentFunctional u;
    MomentOps p;
    MomentOps qn;
    ACDTriple acd_u;
    ClassReport cls;
    /// Largest n with p_{3n} compared against q_n(x³).
    int mapped_levels = 0;
    /// First n with p_{3n} ≠ q_n(x³), if any.
    int mapping_mismatch = -1;
};

/// Runs the full pipeline for a case: v from the classical pair at q³ (v_0 = 1), u by the lift,
/// p_0..p_N from u and q_0..q_{⌊N/3⌋} from v, the mapped (A, C, D) and its ClassReport.
/// Throws CaseError naming the failing stage.
CaseBundle build_case(const CubicCase& c, const QParam& q, int N);

/// Compares a bundle against the catalog: p_{3n} = q_n(x³), class, (Φ, Ψ), Pearson residual of u,
/// Stieltjes residual, the series identity, and the class bounds with s̃ = 0.
Report case_report(const CaseBundle& b);

struct Case13Reconstruction {
    CycScalar r0;
    CycScalar b01;
    CycScalar b02;
    CycScalar a02;
    /// Reference closed forms for the same quantities.
    CycScalar r0_closed;
    CycScalar b01_closed;
    CycScalar b02_closed;
    CycScalar a02_closed;
    /// b_1, b_2, a_2 of the recurrence computed from the lifted moments.
    CycScalar b01_moments;
    CycScalar b02_moments;
    CycScalar a02_moments;
    Descent descent;
    PearsonPair v_pair_expected;
    Report checks;
};

/// Case-13 inverse problem: r_0 from ⟨u, Ψ⟩ = ⟨u, p_j⟩ = 0 (j = 1, 2, 3), then b_0^{(1)}, b_0^{(2)},
/// a_0^{(2)} from the block relations, the descended (f_0, g_0) and the identification of v.
/// Throws InvalidArgument when c³ = aq³.
Case13Reconstruction inverse_reconstruct_case13(const CycScalar& a, const CycScalar& c, const CycScalar& tau,
                                                const QParam& q);

struct FixtureEntry {
    std::string q;
    std::string tag;
    CubicCase c;
};

/// Reads a JSON list of {"q", "tag", "id", "params"} entries.
std::vector<FixtureEntry> load_fixtures(const std::string& path);
/// Cases with the given q string and tag, sorted by id.
std::vector<CubicCase> fixtures_for(const std::vector<FixtureEntry>& all, const std::string& q,
                                    const std::string& tag = "default");

}  // namespace qmap
