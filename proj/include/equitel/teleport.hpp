#pragma once

#include "equitel/channel.hpp"
#include "equitel/ueb.hpp"

namespace equitel {

// Everything needed to run the frame-independent protocol: the system
// representation, the representations carried by the two halves of the
// resource state, the twist X, the equivariant basis and a compatible
// channel. The resource (1 (x) X)|eta> must be invariant up to a phase under
// alice_rep (x) bob_rep, and the channel action must invert the basis's
// conjugation action.
struct ProtocolSpec {
    std::shared_ptr<const FiniteGroup> group;
    Representation rho;        // on the teleported system
    Representation alice_rep;  // on Alice's half of the resource
    Representation bob_rep;    // on Bob's half of the resource
    ComplexMatrix twist;       // X
    EquivariantUEB eueb;
    UnspeakableChannel channel;
    std::vector<cxd> resource_phase;  // phase system of the resource state

    std::size_t dim() const { return rho.dim(); }
    void validate() const;
};

// theta1/theta2 choose the one-dimensional twists of the default half reps
// rho^* (x) theta1 and rho (x) theta2; alice_override replaces Alice's half
// rep wholesale (the worked example carries rho on both halves).
ProtocolSpec make_protocol_spec(std::shared_ptr<const FiniteGroup> group,
                                const Representation& rho, const EquivariantUEB& eueb,
                                const ComplexMatrix& twist, const UnspeakableChannel& channel,
                                const std::vector<cxd>* theta1 = nullptr,
                                const std::vector<cxd>* theta2 = nullptr,
                                const Representation* alice_override = nullptr);

// Alice's joint measurement basis |phi_i> = (1 (x) X^T U_i^T)|eta>,
// orthonormal and maximally entangled.
std::vector<PureState> measurement_basis(const UEB& ueb, const ComplexMatrix& twist);

struct Transcript {
    PureState input;
    int outcome = -1;          // Alice's measurement result
    double probability = 0.0;  // Born probability of that outcome
    Wire wire;                 // symbol on the classical channel
    int received = -1;         // Bob's reading
    int correction = -1;       // index of the correction he applies
    PureState output;
    int g = 0;                 // misalignment at transmission
    int g_receive = 0;         // misalignment at receipt (DR runs)
    double fidelity = 0.0;
};

// Aligned-frames protocol over a perfect classical channel. forced_outcome
// < 0 samples from the Born distribution.
Transcript conventional_teleport(const PureState& psi, const UEB& ueb, const ComplexMatrix& twist,
                                 int forced_outcome, std::uint64_t seed);

// Frame-independent run, simulated in Alice's frame: Bob reads the channel at
// misalignment g and applies his correction in his own frame.
Transcript rf_teleport(const ProtocolSpec& spec, const PureState& psi, int g, std::uint64_t seed,
                       int forced_outcome = -1);

// Frame change mid-flight: the reading and the correction happen at the
// receipt-time misalignment.
Transcript dynamical_robustness_run(const ProtocolSpec& spec, const PureState& psi, int g_send,
                                    int g_receive, std::uint64_t seed, int forced_outcome = -1);

// The same run re-described by a third observer whose frame differs from
// Alice's by h; returns the fidelity the observer reports.
double observer_frame_fidelity(const ProtocolSpec& spec, const PureState& psi, int g, int h,
                               std::uint64_t seed, int forced_outcome = -1);

struct MisalignedSummary {
    ComplexMatrix output_density;
    double average_fidelity = 0.0;
    double purity = 0.0;
};

// The aligned-frames protocol run under an unknown misalignment distribution:
// Bob's corrections are conjugated, the output decoheres.
MisalignedSummary misaligned_conventional(const PureState& psi, const UEB& ueb,
                                          const ComplexMatrix& twist, const Representation& rho,
                                          const std::vector<double>& g_weights);

struct LeakageReport {
    LeakageStats stats;
    std::vector<double> outcome_distribution;
};

// Wire statistics of protocol runs: outcomes sampled from the Born rule
// (negative control: a forced outcome).
LeakageReport no_leakage_experiment(const ProtocolSpec& spec, std::size_t samples,
                                    std::uint64_t seed, int forced_outcome = -1);

}  // namespace equitel
