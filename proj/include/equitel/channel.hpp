#pragma once

#include <map>
#include <memory>

#include "equitel/gset.hpp"
#include "equitel/matrix.hpp"
#include "equitel/representation.hpp"

namespace equitel {

enum class ChannelKind { RfSystem, Quotient, Composite, DecoheredQuantum, Speakable };

std::string to_string(ChannelKind k);

// Wire-level symbol: a flat tuple of small integers (orbit labels, base
// messages). The channel is perfect; only its interpretation is frame
// dependent.
using Wire = std::vector<int>;

// A classical channel whose message set carries a left action sigma of the
// frame group. transmit produces the wire symbol written in the sender's
// frame; receive interprets a wire symbol at misalignment g. For every kind,
// receive(transmit(m), g) == sigma(g, m) for every seed.
struct UnspeakableChannel {
    ChannelKind kind = ChannelKind::Speakable;
    std::shared_ptr<const FiniteGroup> group_owner;
    GSet sigma;  // left action on message indices
    std::uint64_t seed_salt = 0;

    // quotient structure
    std::shared_ptr<const UnspeakableChannel> base;
    std::vector<std::vector<int>> block_members;  // quotient message -> base messages
    std::vector<int> block_of_base;               // base message -> quotient message

    // composite structure (one part per orbit, ordered by smallest index)
    struct OrbitPart {
        std::vector<int> members;                       // message indices, ascending
        std::shared_ptr<const UnspeakableChannel> sub;  // null for singletons
        std::vector<int> member_to_sub;                 // position in members -> sub message
        std::vector<int> sub_to_member;                 // sub message -> message index
    };
    std::vector<OrbitPart> parts;
    std::vector<int> part_of_message;

    const FiniteGroup& group() const { return *sigma.group; }
    std::size_t message_count() const { return sigma.size(); }

    Wire transmit_with(Rng& rng, int message) const;
    int receive(const Wire& wire, int g) const;
    // The wire symbol as an observer misaligned by g reads it (orbit labels
    // are frame independent; unspeakable components transform by sigma).
    Wire read_wire(const Wire& wire, int g) const;

    void validate() const;
};

UnspeakableChannel rf_channel(std::shared_ptr<const FiniteGroup> g);
UnspeakableChannel speakable_channel(std::shared_ptr<const FiniteGroup> g, std::size_t messages);

// Coarse-grain a transitive channel: messages become right cosets of k;
// sending a coset transmits a uniformly random base message in its block.
UnspeakableChannel quotient_channel(const UnspeakableChannel& base, const Subgroup& h_base,
                                    const Subgroup& k, std::uint64_t seed);

// A channel matched to an equivariant basis's index action: per-orbit
// quotient channels of the given transitive base (default: a fresh rf
// channel), plus a speakable orbit label. The end-to-end action equals the
// inverse of tau exactly.
UnspeakableChannel compatible_channel_for(const GSet& tau,
                                          std::shared_ptr<const FiniteGroup> owner,
                                          const UnspeakableChannel* base_channel = nullptr,
                                          std::uint64_t seed = 0);

// Channel obtained by handing over the decohered post-measurement system:
// messages are basis indices, the action is the permutation the pair
// representation induces on basis rays. If expected_sigma is given the
// derived action must match it.
UnspeakableChannel decohered_quantum_channel(const std::vector<PureState>& basis,
                                             const Representation& pair_rep,
                                             std::shared_ptr<const FiniteGroup> owner,
                                             const GSet* expected_sigma = nullptr);

struct TransmitRecord {
    int sent = 0;
    Wire wire;
    int g = 0;
    Wire wire_at_receipt;
    int received = 0;
    std::uint64_t seed = 0;
};

TransmitRecord transmit(const UnspeakableChannel& ch, int message, int g, std::uint64_t seed);

struct LeakageStats {
    // per group element: empirical distribution over read-wire symbols
    std::vector<std::map<std::string, double>> distributions;
    double max_pairwise_tv = 0.0;
};

LeakageStats leakage_stats(const UnspeakableChannel& ch, const std::vector<double>& message_dist,
                           std::size_t samples, std::uint64_t seed);

std::string wire_key(const Wire& w);

// Shared classical system whose configurations carry a free transitive
// action, with a natural choice map from frame configurations.
struct FrameConfigSpace {
    GSet frames;          // free transitive left action
    GSet configurations;  // free transitive left action
    std::vector<int> epsilon;  // frame -> configuration, equivariant

    void validate() const;
};

FrameConfigSpace regular_frame_space(std::shared_ptr<const FiniteGroup> g);

// The reading action derived from labellings: sender labels by her frame,
// receiver by his; the induced action on readings is x -> x g^{-1}.
GSet derive_reading_action(const FrameConfigSpace& fs);

}  // namespace equitel
