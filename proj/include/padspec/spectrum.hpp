#pragma once

#include "padspec/diffop.hpp"
#include "padspec/geometry.hpp"
#include "padspec/radii.hpp"

#include <vector>

namespace padspec {

/// A piece of the spectrum of a connection over (H(x_{0,r}), S d/dS):
/// either {z} + Z_p for a point descriptor z (the translate degenerates to
/// the single point z when the radius of z is >= 1), or a Z-train of closed
/// disks union_i D(base + i, p^{-disk_rho}) arising from the off-center
/// regular-singular formulas. Components are stored canonicalized: centers
/// reduced modulo Z_p and modulo the absorbing radius, train counts reduced
/// to the number of genuinely distinct disks.
struct SpectrumComponent {
    enum class Kind { ZpTranslate, DiskTrain };
    Kind kind;
    PointDescriptor z; // ZpTranslate
    Scalar base;       // DiskTrain
    Rational disk_rho; // DiskTrain
    Int count;         // DiskTrain: p^n distinct disks

    static SpectrumComponent zp_translate(const PointDescriptor& z);
    static SpectrumComponent disk_train(const Scalar& base, const Rational& disk_rho);

    bool operator==(const SpectrumComponent& o) const;
    std::string to_string() const;
};

bool component_less(const SpectrumComponent& a, const SpectrumComponent& b);

struct RadiiTableEntry {
    std::size_t component;
    Scalar a;   // probe shift
    Val delta;  // delta(T(z) - a)
    long l;     // max(0, floor(log delta / log |p|) + 1)
    Val R1;     // radius of (M_z, nabla_z - a), exact
};

struct SpectrumReport {
    Int p;
    Rational point_rho;
    std::vector<SpectrumComponent> components;
    std::vector<long> masses; // parallel: polygon mass per component
    std::vector<RadiiTableEntry> radii_table;
};

/// Probe set {0, 1, ..., p^L - 1} plus user-supplied scalars, deduplicated
/// and canonically ordered.
std::vector<Scalar> default_probes(const Int& p, unsigned level, const std::vector<Scalar>& extra);

struct SpectrumOptions {
    unsigned probe_level = 3;
    long precision = 20;
    unsigned l_max = 8;
    std::vector<Scalar> extra_probes;
};

/// Spectrum of the derivation S d/dS on H(x_{0,r}): Z_p for every r > 0.
SpectrumReport spectrum_SdS(const Int& p, const Rational& point_rho, const SpectrumOptions& opts = {});

/// Regular-singular module with the given constant eigenvalues. At x_{0,r}
/// the components are the eigenvalue classes modulo Z_p; off-center (a
/// center c with x inside D(c,|c|)^- read from the descriptor) they are
/// disk trains with radius omega/phi(r) and p^n disks per the logarithm
/// degree brackets.
SpectrumReport spectrum_regular_singular(const PointDescriptor& x, const std::vector<Scalar>& eigenvalues,
                                         const SpectrumOptions& opts = {});

struct ProjectedRoots {
    std::vector<std::pair<PointDescriptor, long>> groups;
    Val min_distance; // min over probes and roots of |z - a|
};

/// Projection of the commutative roots of P to point descriptors using the
/// probe set: per probe the twisted polygon yields the multiset {|z - a|};
/// roots are peeled into groups around the probe attaining the smallest
/// distance. InsufficientProbes when the removal step is inconsistent.
ProjectedRoots project_roots(const DiffOp& P, const Rational& point_rho, const std::vector<Scalar>& probes);

/// Spectral Young theorem (strong version) under the checkable proxy
/// min |z_i - a| > ||d|| over the probe set, which is strictly weaker than
/// the theorem's hypothesis on min r_k(pi(z_i)); HypothesisNotCertified
/// whenever the proxy fails or all roots are constants.
SpectrumReport spectrum_small(const DiffOp& P, const Rational& point_rho, const SpectrumOptions& opts = {});

/// Largest l <= l_max with every Laurent exponent of every coefficient
/// divisible by p^l.
unsigned descent_level(const DiffOp& P, unsigned l_max);

/// General algorithm over (H(x_{0,r}), S d/dS) for unmixed monic inputs:
/// rank-one constants exactly, small radii by the Young route, the rest by
/// syntactic Frobenius descent, with the eq-(70)-style radii table verified
/// against the twisted polygons (RadiiMismatch is fatal).
SpectrumReport spectrum_general(const DiffOp& P, const Rational& point_rho, const SpectrumOptions& opts = {});

/// Component-set union at a common working point with canonical dedup.
SpectrumReport spectrum_union(const SpectrumReport& a, const SpectrumReport& b);

/// Front-end used by the CLI: pre-splits inputs that mix certified-small
/// slopes with the rest via slope_factor, then unions the part spectra.
SpectrumReport spectrum_full(const DiffOp& P, const Rational& point_rho, const SpectrumOptions& opts = {});

} // namespace padspec
