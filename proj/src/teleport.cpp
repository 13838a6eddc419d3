#include "equitel/teleport.hpp"

#include <cmath>

namespace equitel {

namespace {

// Unnormalized Bob states per outcome: M_i = (<phi_i| (x) 1) |psi (x) R>.
// Each has squared norm exactly 1/n^2; the normalized state is U_i^dag psi
// up to a phase.
std::vector<PureState> outcome_components(const PureState& psi,
                                          const std::vector<PureState>& basis,
                                          const PureState& resource) {
    std::size_t n = psi.dim();
    std::vector<PureState> out;
    for (const auto& phi : basis) {
        PureState m;
        m.amps.assign(n, cxd(0.0));
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t a = 0; a < n; ++a) {
                cxd c = std::conj(phi.amps[s * n + a]) * psi.amps[s];
                if (c == cxd(0.0)) continue;
                for (std::size_t b = 0; b < n; ++b)
                    m.amps[b] += c * resource.amps[a * n + b];
            }
        out.push_back(std::move(m));
    }
    return out;
}

int sample_outcome(const std::vector<double>& probs, Rng& rng) {
    std::discrete_distribution<int> pick(probs.begin(), probs.end());
    return pick(rng);
}

}  // namespace

void ProtocolSpec::validate() const {
    std::size_t n = dim();
    if (eueb.ueb.dim != n || twist.rows() != n || alice_rep.dim() != n || bob_rep.dim() != n)
        throw VerificationError("protocol dimensions disagree");
    if (!twist.is_unitary(kTol)) throw VerificationError("resource twist must be unitary");
    // The basis must be conjugated by the system representation.
    for (std::size_t x = 0; x < group->order(); ++x)
        if (!eueb.rep.image(int(x)).approx_equal(rho.image(int(x)), kTol))
            throw VerificationError("basis equivariance uses a different representation");
    auto theta = invariance_phase_system(alice_rep, bob_rep, twist);
    if (!theta)
        throw VerificationError(
            "the resource state is not invariant up to a phase under the half representations");
    if (channel.sigma.group != group.get())
        throw VerificationError("channel lives over a different group");
    GSet wanted = eueb.tau.opposite();
    if (channel.sigma.act != wanted.act)
        throw VerificationError(
            "incompatible channel: its action is not the inverse of the conjugation action, "
            "so correct transmission is impossible for some misalignment");
}

ProtocolSpec make_protocol_spec(std::shared_ptr<const FiniteGroup> group,
                                const Representation& rho, const EquivariantUEB& eueb,
                                const ComplexMatrix& twist, const UnspeakableChannel& channel,
                                const std::vector<cxd>* theta1, const std::vector<cxd>* theta2,
                                const Representation* alice_override) {
    ProtocolSpec spec;
    spec.group = group;
    spec.rho = rho;
    spec.eueb = eueb;
    spec.twist = twist;
    spec.channel = channel;
    spec.alice_rep = alice_override ? *alice_override : dual_rep(rho);
    if (theta1) spec.alice_rep = twist_by_character(spec.alice_rep, *theta1);
    spec.bob_rep = rho;
    if (theta2) spec.bob_rep = twist_by_character(spec.bob_rep, *theta2);
    auto theta = invariance_phase_system(spec.alice_rep, spec.bob_rep, twist);
    if (!theta)
        throw VerificationError(
            "no invariant resource state for these half representations; pick different "
            "one-dimensional twists");
    spec.resource_phase = *theta;
    spec.validate();
    return spec;
}

std::vector<PureState> measurement_basis(const UEB& ueb, const ComplexMatrix& twist) {
    std::size_t n = ueb.dim;
    if (twist.rows() != n) throw VerificationError("twist dimension mismatch");
    PureState eta = bell_state(n);
    ComplexMatrix xt = twist.transpose();
    std::vector<PureState> basis;
    for (const auto& u : ueb.elements)
        basis.push_back(apply(tensor(ComplexMatrix::identity(n), xt * u.transpose()), eta));
    // Gram check: orthonormal and complete.
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            cxd ip = basis[i].inner(basis[j]);
            cxd want = (i == j) ? cxd(1.0) : cxd(0.0);
            if (std::abs(ip - want) > kTol)
                throw VerificationError("measurement basis is not orthonormal");
        }
    for (const auto& phi : basis) {
        ComplexMatrix red = reduced_density(phi, n, 0);
        if (!red.approx_equal(ComplexMatrix::identity(n) * cxd(1.0 / double(n)), kTol))
            throw VerificationError("measurement basis vector is not maximally entangled");
    }
    return basis;
}

Transcript conventional_teleport(const PureState& psi, const UEB& ueb,
                                 const ComplexMatrix& twist, int forced_outcome,
                                 std::uint64_t seed) {
    std::size_t n = ueb.dim;
    auto basis = measurement_basis(ueb, twist);
    auto components = outcome_components(psi.normalized(), basis, twisted_bell(twist));
    std::vector<double> probs;
    for (const auto& m : components) probs.push_back(m.norm() * m.norm());

    Transcript t;
    t.input = psi.normalized();
    Rng rng(seed);
    t.outcome = forced_outcome >= 0 ? forced_outcome : sample_outcome(probs, rng);
    t.probability = probs[t.outcome];
    if (std::abs(t.probability - 1.0 / double(n * n)) > kTol)
        throw VerificationError("outcome probabilities are not uniform");
    t.wire = {t.outcome};
    t.received = t.outcome;
    t.correction = t.outcome;
    t.output = apply(ueb.elements[t.outcome], components[t.outcome].normalized());
    t.fidelity = fidelity(t.input, t.output);
    return t;
}

namespace {

Transcript run_protocol(const ProtocolSpec& spec, const PureState& psi, int g_send, int g_receive,
                        std::uint64_t seed, int forced_outcome) {
    std::size_t n = spec.dim();
    auto basis = measurement_basis(spec.eueb.ueb, spec.twist);
    auto components = outcome_components(psi.normalized(), basis, twisted_bell(spec.twist));
    std::vector<double> probs;
    for (const auto& m : components) probs.push_back(m.norm() * m.norm());

    Transcript t;
    t.input = psi.normalized();
    t.g = g_send;
    t.g_receive = g_receive;
    Rng rng(seed);
    t.outcome = forced_outcome >= 0 ? forced_outcome : sample_outcome(probs, rng);
    t.probability = probs[t.outcome];
    if (std::abs(t.probability - 1.0 / double(n * n)) > kTol)
        throw VerificationError("outcome probabilities are not uniform");

    // The reading happens at the receipt-time misalignment.
    TransmitRecord rec = transmit(spec.channel, t.outcome, g_receive, seed ^ 0xabcdef12345678ull);
    t.wire = rec.wire;
    t.received = rec.received;
    t.correction = rec.received;

    // Bob applies U_received in his frame; in Alice's frame that operator is
    // conjugated by his half's representation at the receipt misalignment.
    const ComplexMatrix& u = spec.eueb.ueb.elements[t.correction];
    ComplexMatrix b = spec.bob_rep.image(g_receive);
    ComplexMatrix in_alice_frame = b.dagger() * u * b;
    t.output = apply(in_alice_frame, components[t.outcome].normalized());
    t.fidelity = fidelity(t.input, t.output);
    return t;
}

}  // namespace

Transcript rf_teleport(const ProtocolSpec& spec, const PureState& psi, int g, std::uint64_t seed,
                       int forced_outcome) {
    return run_protocol(spec, psi, g, g, seed, forced_outcome);
}

Transcript dynamical_robustness_run(const ProtocolSpec& spec, const PureState& psi, int g_send,
                                    int g_receive, std::uint64_t seed, int forced_outcome) {
    return run_protocol(spec, psi, g_send, g_receive, seed, forced_outcome);
}

double observer_frame_fidelity(const ProtocolSpec& spec, const PureState& psi, int g, int h,
                               std::uint64_t seed, int forced_outcome) {
    const FiniteGroup& grp = *spec.group;
    std::size_t n = spec.dim();

    // Everything re-described in the observer's frame (related to Alice's by
    // h): states pick up the corresponding representations, Bob's correction
    // is conjugated by the transformation from his frame to the observer's.
    PureState psi_o = apply(spec.rho.image(h), psi.normalized());
    PureState resource_o =
        apply(tensor(spec.alice_rep.image(h), spec.bob_rep.image(h)), twisted_bell(spec.twist));
    auto basis = measurement_basis(spec.eueb.ueb, spec.twist);
    std::vector<PureState> basis_o;
    for (const auto& phi : basis)
        basis_o.push_back(apply(tensor(spec.rho.image(h), spec.alice_rep.image(h)), phi));

    auto components = outcome_components(psi_o, basis_o, resource_o);
    std::vector<double> probs;
    for (const auto& m : components) probs.push_back(m.norm() * m.norm());
    Rng rng(seed);
    int outcome = forced_outcome >= 0 ? forced_outcome : sample_outcome(probs, rng);

    TransmitRecord rec = transmit(spec.channel, outcome, g, seed ^ 0xabcdef12345678ull);
    const ComplexMatrix& u = spec.eueb.ueb.elements[rec.received];
    int bob_to_obs = grp.mul(h, grp.inv(g));
    ComplexMatrix t = spec.bob_rep.image(bob_to_obs);
    PureState out = apply(t * u * t.dagger(), components[outcome].normalized());
    return fidelity(psi_o, out);
}

MisalignedSummary misaligned_conventional(const PureState& psi, const UEB& ueb,
                                          const ComplexMatrix& twist, const Representation& rho,
                                          const std::vector<double>& g_weights) {
    const FiniteGroup& grp = *rho.group;
    if (g_weights.size() != grp.order()) throw SchemaError("one weight per group element");
    double total = 0.0;
    for (double w : g_weights) total += w;

    std::size_t n = ueb.dim;
    auto basis = measurement_basis(ueb, twist);
    auto components = outcome_components(psi.normalized(), basis, twisted_bell(twist));

    MisalignedSummary s;
    s.output_density = ComplexMatrix(n, n);
    for (std::size_t x = 0; x < grp.order(); ++x) {
        if (g_weights[x] == 0.0) continue;
        double wg = g_weights[x] / total;
        ComplexMatrix b = rho.image(int(x));
        for (std::size_t i = 0; i < components.size(); ++i) {
            double pi = components[i].norm() * components[i].norm();
            ComplexMatrix correction = b.dagger() * ueb.elements[i] * b;
            PureState v = apply(correction, components[i].normalized());
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    s.output_density(r, c) += wg * pi * v.amps[r] * std::conj(v.amps[c]);
            s.average_fidelity += wg * pi * fidelity(psi, v);
        }
    }
    s.purity = (s.output_density * s.output_density).trace().real();
    return s;
}

LeakageReport no_leakage_experiment(const ProtocolSpec& spec, std::size_t samples,
                                    std::uint64_t seed, int forced_outcome) {
    std::size_t n = spec.dim();
    Rng rng(seed);
    PureState psi = random_state(n, rng);
    auto basis = measurement_basis(spec.eueb.ueb, spec.twist);
    auto components = outcome_components(psi, basis, twisted_bell(spec.twist));

    LeakageReport report;
    report.outcome_distribution.assign(n * n, 0.0);
    if (forced_outcome >= 0)
        report.outcome_distribution[forced_outcome] = 1.0;
    else
        for (std::size_t i = 0; i < components.size(); ++i)
            report.outcome_distribution[i] = components[i].norm() * components[i].norm();
    report.stats =
        leakage_stats(spec.channel, report.outcome_distribution, samples, seed ^ 0x5fc1ull);
    return report;
}

}  // namespace equitel
