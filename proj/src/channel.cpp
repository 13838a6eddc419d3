#include "equitel/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace equitel {

std::string to_string(ChannelKind k) {
    switch (k) {
        case ChannelKind::RfSystem: return "rf_system";
        case ChannelKind::Quotient: return "quotient";
        case ChannelKind::Composite: return "composite";
        case ChannelKind::DecoheredQuantum: return "decohered_quantum";
        case ChannelKind::Speakable: return "speakable";
    }
    return "?";
}

Wire UnspeakableChannel::transmit_with(Rng& rng, int message) const {
    switch (kind) {
        case ChannelKind::RfSystem:
        case ChannelKind::Speakable:
        case ChannelKind::DecoheredQuantum:
            return {message};
        case ChannelKind::Quotient: {
            const auto& block = block_members[message];
            std::uniform_int_distribution<std::size_t> pick(0, block.size() - 1);
            return base->transmit_with(rng, block[pick(rng)]);
        }
        case ChannelKind::Composite: {
            int p = part_of_message[message];
            const OrbitPart& part = parts[p];
            Wire w{p};
            if (part.sub) {
                std::size_t pos =
                    std::lower_bound(part.members.begin(), part.members.end(), message) -
                    part.members.begin();
                Wire inner = part.sub->transmit_with(rng, part.member_to_sub[pos]);
                w.insert(w.end(), inner.begin(), inner.end());
            }
            return w;
        }
    }
    throw Error("unreachable");
}

int UnspeakableChannel::receive(const Wire& wire, int g) const {
    switch (kind) {
        case ChannelKind::RfSystem:
        case ChannelKind::Speakable:
        case ChannelKind::DecoheredQuantum:
            return sigma.act[g][wire.at(0)];
        case ChannelKind::Quotient:
            return block_of_base[base->receive(wire, g)];
        case ChannelKind::Composite: {
            const OrbitPart& part = parts.at(wire.at(0));
            if (!part.sub) return part.members.front();
            Wire inner(wire.begin() + 1, wire.end());
            return part.sub_to_member[part.sub->receive(inner, g)];
        }
    }
    throw Error("unreachable");
}

Wire UnspeakableChannel::read_wire(const Wire& wire, int g) const {
    switch (kind) {
        case ChannelKind::RfSystem:
        case ChannelKind::DecoheredQuantum:
            return {sigma.act[g][wire.at(0)]};
        case ChannelKind::Speakable:
            return wire;
        case ChannelKind::Quotient:
            return base->read_wire(wire, g);
        case ChannelKind::Composite: {
            const OrbitPart& part = parts.at(wire.at(0));
            Wire w{wire.at(0)};
            if (part.sub) {
                Wire inner(wire.begin() + 1, wire.end());
                Wire moved = part.sub->read_wire(inner, g);
                w.insert(w.end(), moved.begin(), moved.end());
            }
            return w;
        }
    }
    throw Error("unreachable");
}

void UnspeakableChannel::validate() const {
    sigma.validate();
    if (sigma.side != GSet::Side::Left)
        throw VerificationError("channel action must be a left action");
    const FiniteGroup& g = group();
    // Round trip: randomness must quotient out for every seed.
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        Rng rng(seed);
        for (std::size_t m = 0; m < message_count(); ++m)
            for (std::size_t x = 0; x < g.order(); ++x) {
                Wire w = transmit_with(rng, int(m));
                if (receive(w, int(x)) != sigma.act[x][m])
                    throw VerificationError("transmit/receive round trip disagrees with sigma");
            }
    }
}

UnspeakableChannel rf_channel(std::shared_ptr<const FiniteGroup> g) {
    UnspeakableChannel ch;
    ch.kind = ChannelKind::RfSystem;
    ch.group_owner = g;
    ch.sigma = right_multiplication_gset(*g);
    return ch;
}

UnspeakableChannel speakable_channel(std::shared_ptr<const FiniteGroup> g, std::size_t messages) {
    UnspeakableChannel ch;
    ch.kind = ChannelKind::Speakable;
    ch.group_owner = g;
    ch.sigma = trivial_gset(*g, messages);
    return ch;
}

UnspeakableChannel quotient_channel(const UnspeakableChannel& base, const Subgroup& h_base,
                                    const Subgroup& k, std::uint64_t seed) {
    const FiniteGroup& g = base.group();
    if (!is_transitive(base.sigma))
        throw VerificationError("quotient construction needs a transitive base channel");
    if (!is_subgroup(g, k.members))
        throw VerificationError("coarse-graining subgroup is not a subgroup");
    if (!std::includes(k.members.begin(), k.members.end(), h_base.members.begin(),
                       h_base.members.end()))
        throw VerificationError("the base stabilizer must be contained in the quotient subgroup");

    CosetSpace hs = coset_gset(g, h_base);
    auto alpha = find_gset_isomorphism(base.sigma, hs.gset);
    if (!alpha)
        throw VerificationError(
            "the given subgroup is not a stabilizer representative of the base channel");
    CosetSpace ks = coset_gset(g, k);

    UnspeakableChannel ch;
    ch.kind = ChannelKind::Quotient;
    ch.group_owner = base.group_owner;
    ch.sigma = ks.gset;
    ch.seed_salt = seed;
    ch.base = std::make_shared<UnspeakableChannel>(base);
    ch.block_of_base.resize(base.message_count());
    ch.block_members.resize(ks.reps.size());
    for (std::size_t m = 0; m < base.message_count(); ++m) {
        int rep_elem = hs.reps[(*alpha)[m]];
        int block = ks.coset_of[rep_elem];
        ch.block_of_base[m] = block;
        ch.block_members[block].push_back(int(m));
    }
    ch.validate();
    return ch;
}

UnspeakableChannel compatible_channel_for(const GSet& tau,
                                          std::shared_ptr<const FiniteGroup> owner,
                                          const UnspeakableChannel* base_channel,
                                          std::uint64_t seed) {
    if (tau.side != GSet::Side::Right)
        throw VerificationError("expected the right conjugation action");
    if (owner.get() != tau.group)
        throw VerificationError("owner must hold the action's group");
    const FiniteGroup& g = *tau.group;
    GSet tau_inv = tau.opposite();

    UnspeakableChannel base = base_channel ? *base_channel : rf_channel(owner);
    if (base.sigma.group != tau.group)
        throw VerificationError("base channel lives over a different group");
    if (!is_transitive(base.sigma))
        throw VerificationError("base channel must be transitive");
    Subgroup h_base = stabilizer(base.sigma, 0);

    UnspeakableChannel ch;
    ch.kind = ChannelKind::Composite;
    ch.group_owner = owner;
    ch.sigma = tau_inv;
    ch.seed_salt = seed;
    ch.part_of_message.assign(tau.size(), -1);

    bool all_singletons = true;
    for (const auto& orbit : orbits(tau_inv)) {
        UnspeakableChannel::OrbitPart part;
        part.members = orbit;
        int p = int(ch.parts.size());
        for (int m : orbit) ch.part_of_message[m] = p;
        if (orbit.size() > 1) {
            all_singletons = false;
            // restriction of the action to this orbit
            GSet orbit_gs;
            orbit_gs.group = &g;
            orbit_gs.side = GSet::Side::Left;
            std::vector<int> pos(tau.size(), -1);
            for (std::size_t i = 0; i < orbit.size(); ++i) {
                pos[orbit[i]] = int(i);
                orbit_gs.points.push_back(std::to_string(orbit[i]));
            }
            orbit_gs.act.assign(g.order(), std::vector<int>(orbit.size()));
            for (std::size_t x = 0; x < g.order(); ++x)
                for (std::size_t i = 0; i < orbit.size(); ++i)
                    orbit_gs.act[x][i] = pos[tau_inv.act[x][orbit[i]]];

            Subgroup h = stabilizer(orbit_gs, 0);
            int mover = -1;
            for (std::size_t x = 0; x < g.order() && mover < 0; ++x) {
                Subgroup moved = conjugated_subgroup(g, h_base, int(x));
                if (std::includes(h.members.begin(), h.members.end(), moved.members.begin(),
                                  moved.members.end()))
                    mover = int(x);
            }
            if (mover < 0)
                throw VerificationError(
                    "base channel's stabilizer class does not refine the orbit's class; "
                    "no compatible quotient exists");
            Subgroup k = conjugated_subgroup(g, h, g.inv(mover));
            UnspeakableChannel sub =
                quotient_channel(base, h_base, k, seed ^ (0x9e3779b97f4a7c15ull * (p + 1)));
            auto iso = find_gset_isomorphism(sub.sigma, orbit_gs);
            if (!iso)
                throw VerificationError("quotient channel does not realise the orbit action");
            part.member_to_sub.assign(orbit.size(), -1);
            part.sub_to_member.assign(orbit.size(), -1);
            for (std::size_t q = 0; q < orbit.size(); ++q) {
                part.sub_to_member[q] = orbit[(*iso)[q]];
                part.member_to_sub[(*iso)[q]] = int(q);
            }
            part.sub = std::make_shared<UnspeakableChannel>(std::move(sub));
        }
        ch.parts.push_back(std::move(part));
    }
    if (all_singletons) ch.kind = ChannelKind::Speakable;
    ch.validate();
    // Tightness: the wire distinguishes exactly as many symbols as messages.
    std::size_t distinguishable = 0;
    for (const auto& part : ch.parts)
        distinguishable += part.sub ? part.sub->message_count() : 1;
    if (distinguishable != tau.size())
        throw VerificationError("composite channel is not tight");
    return ch;
}

UnspeakableChannel decohered_quantum_channel(const std::vector<PureState>& basis,
                                             const Representation& pair_rep,
                                             std::shared_ptr<const FiniteGroup> owner,
                                             const GSet* expected_sigma) {
    const FiniteGroup& g = *pair_rep.group;
    UnspeakableChannel ch;
    ch.kind = ChannelKind::DecoheredQuantum;
    ch.group_owner = owner;
    ch.sigma.group = &g;
    ch.sigma.side = GSet::Side::Left;
    for (std::size_t i = 0; i < basis.size(); ++i) ch.sigma.points.push_back(std::to_string(i));
    ch.sigma.act.assign(g.order(), std::vector<int>(basis.size(), -1));
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t i = 0; i < basis.size(); ++i) {
            PureState moved = apply(pair_rep.image(int(x)), basis[i]);
            int target = -1;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                double overlap = std::abs(basis[j].inner(moved));
                if (overlap > 1.0 - 1e-7) {
                    target = int(j);
                    break;
                }
            }
            if (target < 0)
                throw VerificationError(
                    "the representation does not permute the measurement rays");
            ch.sigma.act[x][i] = target;
        }
    ch.validate();
    if (expected_sigma && ch.sigma.act != expected_sigma->act)
        throw VerificationError(
            "decohered channel action differs from the declared index action");
    return ch;
}

TransmitRecord transmit(const UnspeakableChannel& ch, int message, int g, std::uint64_t seed) {
    if (message < 0 || message >= int(ch.message_count()))
        throw SchemaError("message index out of range");
    TransmitRecord rec;
    rec.sent = message;
    rec.g = g;
    rec.seed = seed;
    Rng rng(seed ^ ch.seed_salt);
    rec.wire = ch.transmit_with(rng, message);
    rec.wire_at_receipt = ch.read_wire(rec.wire, g);
    rec.received = ch.receive(rec.wire, g);
    return rec;
}

std::string wire_key(const Wire& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? ":" : "") << w[i];
    return out.str();
}

LeakageStats leakage_stats(const UnspeakableChannel& ch, const std::vector<double>& message_dist,
                           std::size_t samples, std::uint64_t seed) {
    if (message_dist.size() != ch.message_count())
        throw SchemaError("message distribution has wrong length");
    const FiniteGroup& g = ch.group();
    LeakageStats stats;
    stats.distributions.resize(g.order());
    Rng rng(seed ^ ch.seed_salt);
    std::discrete_distribution<int> pick(message_dist.begin(), message_dist.end());
    for (std::size_t s = 0; s < samples; ++s) {
        int m = pick(rng);
        Wire w = ch.transmit_with(rng, m);
        for (std::size_t x = 0; x < g.order(); ++x)
            stats.distributions[x][wire_key(ch.read_wire(w, int(x)))] += 1.0;
    }
    for (auto& d : stats.distributions)
        for (auto& [k, v] : d) v /= double(samples);
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = a + 1; b < g.order(); ++b) {
            double tv = 0.0;
            std::map<std::string, double> merged = stats.distributions[a];
            for (const auto& [k, v] : stats.distributions[b]) merged.try_emplace(k, 0.0);
            for (const auto& [k, unused] : merged) {
                auto ita = stats.distributions[a].find(k);
                auto itb = stats.distributions[b].find(k);
                double pa = ita == stats.distributions[a].end() ? 0.0 : ita->second;
                double pb = itb == stats.distributions[b].end() ? 0.0 : itb->second;
                tv += std::abs(pa - pb);
            }
            stats.max_pairwise_tv = std::max(stats.max_pairwise_tv, tv / 2.0);
        }
    return stats;
}

void FrameConfigSpace::validate() const {
    frames.validate();
    configurations.validate();
    if (!is_free(frames) || !is_transitive(frames))
        throw VerificationError("frame space must carry a free transitive action");
    if (!is_free(configurations) || !is_transitive(configurations))
        throw VerificationError("configuration space must carry a free transitive action");
    const FiniteGroup& g = *frames.group;
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t f = 0; f < frames.size(); ++f)
            if (epsilon[frames.act[x][f]] != configurations.act[x][epsilon[f]])
                throw VerificationError("choice map is not natural");
}

FrameConfigSpace regular_frame_space(std::shared_ptr<const FiniteGroup> g) {
    FrameConfigSpace fs;
    fs.frames.group = g.get();
    fs.frames.side = GSet::Side::Left;
    fs.configurations = fs.frames;
    for (std::size_t i = 0; i < g->order(); ++i) {
        fs.frames.points.push_back("f" + g->element_name(int(i)));
        fs.configurations.points.push_back("c" + g->element_name(int(i)));
    }
    fs.frames.act.assign(g->order(), std::vector<int>(g->order()));
    for (std::size_t x = 0; x < g->order(); ++x)
        for (std::size_t f = 0; f < g->order(); ++f)
            fs.frames.act[x][f] = g->mul(int(x), int(f));  // left translation
    fs.configurations.act = fs.frames.act;
    fs.epsilon.resize(g->order());
    for (std::size_t f = 0; f < g->order(); ++f) fs.epsilon[f] = int(f);
    fs.validate();
    return fs;
}

GSet derive_reading_action(const FrameConfigSpace& fs) {
    // Sender in frame f_A labels configurations by l_A(x) = the unique h with
    // x = h . eps(f_A); a receiver in frame f_B = g_AB . f_A reads the same
    // configuration through l_B. The induced action on labels is
    // h -> h g_AB^{-1}, independent of f_A.
    const FiniteGroup& g = *fs.frames.group;
    GSet out;
    out.group = &g;
    out.side = GSet::Side::Left;
    for (std::size_t i = 0; i < g.order(); ++i) out.points.push_back(g.element_name(int(i)));
    out.act.assign(g.order(), std::vector<int>(g.order(), -1));

    auto label = [&](int frame, int config) {
        // the unique h with config = h . eps(frame)
        for (std::size_t h = 0; h < g.order(); ++h)
            if (fs.configurations.act[h][fs.epsilon[frame]] == config) return int(h);
        throw VerificationError("configuration space is not transitive");
    };
    int f_a = 0;
    for (std::size_t gab = 0; gab < g.order(); ++gab) {
        int f_b = fs.frames.act[gab][f_a];
        for (std::size_t h = 0; h < g.order(); ++h) {
            // sender writes h: prepares config h . eps(f_A)
            int config = fs.configurations.act[h][fs.epsilon[f_a]];
            out.act[gab][h] = label(f_b, config);
        }
    }
    out.validate();
    return out;
}

}  // namespace equitel
