// equitel: construct, verify and classify equivariant unitary error bases,
// and simulate frame-independent teleportation over unspeakable channels.

#include <chrono>
#include <iostream>
#include <numbers>

#include "CLI11.hpp"
#include "equitel/fixtures.hpp"
#include "equitel/json_io.hpp"

using namespace equitel;

namespace {

constexpr double kPi = std::numbers::pi;

struct Emitter {
    std::string path;
    std::string format = "json";

    void finish(json j) const {
        j["tolerances"] = tolerances_json();
        std::string text;
        if (format == "md")
            text = to_markdown(j);
        else
            text = j.dump(2);
        if (path.empty())
            std::cout << text << "\n";
        else {
            std::ofstream out(path);
            out << text << "\n";
        }
    }

    static std::string to_markdown(const json& j) {
        // Minimal flat rendering: tables for arrays of uniform objects,
        // key/value lines otherwise.
        std::ostringstream out;
        for (auto& [key, value] : j.items()) {
            if (value.is_array() && !value.empty() && value.front().is_object()) {
                out << "## " << key << "\n\n";
                std::vector<std::string> cols;
                for (auto& [col, _] : value.front().items()) cols.push_back(col);
                out << "|";
                for (const auto& c : cols) out << " " << c << " |";
                out << "\n|";
                for (std::size_t i = 0; i < cols.size(); ++i) out << "---|";
                out << "\n";
                for (const auto& row : value) {
                    out << "|";
                    for (const auto& c : cols)
                        out << " " << (row.contains(c) ? row.at(c).dump() : "") << " |";
                    out << "\n";
                }
                out << "\n";
            } else {
                out << "- **" << key << "**: " << value.dump() << "\n";
            }
        }
        return out.str();
    }
};

ProtocolSpec fixture_protocol(const std::string& name,
                              std::vector<std::shared_ptr<const FiniteGroup>>& keepalive) {
    if (name == "z3-arrows") {
        CyclicArrowsExample ex = cyclic_arrows_example();
        keepalive.push_back(ex.group);
        UnspeakableChannel ch = compatible_channel_for(ex.eueb.tau, ex.group);
        return make_protocol_spec(ex.group, ex.rho, ex.eueb, ex.twist, ch, nullptr, nullptr,
                                  &ex.rho);
    }
    auto entries = catalog_uebs();
    for (const auto& entry : entries) {
        if (entry.label != name && entry.image_class != name) continue;
        keepalive.push_back(entry.group);
        UnspeakableChannel ch = compatible_channel_for(entry.eueb.tau, entry.group);
        auto witness = invariant_entangled_state(dual_rep(entry.rep), entry.rep);
        if (!witness)
            throw VerificationError("fixture has no invariant resource state");
        return make_protocol_spec(entry.group, entry.rep, entry.eueb, witness->v, ch);
    }
    throw SchemaError("unknown fixture '" + name +
                      "' (try z3-arrows, an image class like tetrahedral, or a catalog label)");
}

json oeb_summary(const EquivariantOEB& oeb) {
    json j;
    j["family"] = oeb.family_tag;
    json type = json::array();
    for (auto t : orbit_type(oeb.tau)) type.push_back(t);
    j["orbit_type"] = type;
    j["parameters"] = oeb.parameters;
    return j;
}

int cmd_table1(std::size_t samples, std::uint64_t seed, std::size_t trials, const Emitter& emit) {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    json rows = json::array();

    auto sample_family = [&](const std::string& image, const std::string& family,
                             auto&& construct) {
        json row;
        row["image_class"] = image;
        row["family"] = family;
        row["kind"] = "2-parameter family";
        row["samples_verified"] = samples;
        for (std::size_t i = 0; i < samples; ++i) {
            EquivariantOEB oeb = construct(rng);
            if (i == 0) {
                json type = json::array();
                for (auto t : orbit_type(oeb.tau)) type.push_back(t);
                row["orbit_type"] = type;
            }
        }
        rows.push_back(row);
    };

    {
        json row;
        row["image_class"] = "trivial";
        row["kind"] = "any basis";
        row["orbit_type"] = {1, 1, 1, 1};
        rows.push_back(row);
    }
    sample_family("Z2", "Z2-(1,1,1,1)",
                  [&](Rng& r) { return z2_oeb_1111(angle(r), angle(r)); });
    sample_family("Z2", "Z2-(2,1,1)", [&](Rng& r) {
        std::uniform_real_distribution<double> th(kPi / 2, 3 * kPi / 2);
        return z2_oeb_211(th(r), angle(r));
    });
    sample_family("Z2", "Z2-(2,2)", [&](Rng& r) {
        std::uniform_real_distribution<double> rr(kPi / 2, kPi);
        return z2_oeb_22(rr(r), angle(r));
    });
    sample_family("Z3", "Z3-(3,1)", [&](Rng& r) {
        double lo = std::asin(std::sqrt(2.0 / 3.0));
        std::uniform_real_distribution<double> ps(lo, kPi - lo);
        return z3_oeb_31(ps(r), angle(r));
    });
    sample_family("Z4", "Z4-(2,1,1)",
                  [&](Rng& r) { return z4_oeb_211(angle(r), angle(r)); });

    for (const std::string tag : {"D2", "D3", "D4", "tetrahedral", "octahedral"}) {
        auto cat = discrete_catalog(tag);
        json row;
        row["image_class"] = tag;
        row["kind"] = "isolated solutions";
        row["count"] = cat.size();
        std::map<std::string, int> per_type;
        for (const auto& oeb : cat) {
            std::string t = "(";
            auto type = orbit_type(oeb.tau);
            for (std::size_t i = 0; i < type.size(); ++i)
                t += (i ? "," : "") + std::to_string(type[i]);
            t += ")";
            per_type[t]++;
        }
        row["per_orbit_type"] = per_type;
        // pairwise distinctness as point sets
        bool distinct = true;
        for (std::size_t i = 0; i < cat.size(); ++i)
            for (std::size_t j = i + 1; j < cat.size(); ++j) {
                bool same = true;
                for (const auto& a : cat[i].elements) {
                    bool hit = false;
                    for (const auto& b : cat[j].elements) hit = hit || ball_distance(a, b) < 1e-7;
                    same = same && hit;
                }
                if (same) distinct = false;
            }
        row["distinct_sets"] = distinct;
        if (tag == "D3")
            row["note"] = "independent sweep confirms exactly these four distinct sets; the "
                          "classification table's count of six enumerates case labels";
        rows.push_back(row);
    }

    for (const std::string tag : {"Z5", "Z6", "Z7", "Z8", "D5", "D6", "D7", "D8", "icosahedral"}) {
        RefusalCertificate cert = nonexistence_certificate(tag, seed, trials);
        json row = refusal_to_json(cert);
        row["image_class"] = tag;
        row["kind"] = "no solutions";
        rows.push_back(row);
    }

    auto t1 = std::chrono::steady_clock::now();
    json out;
    out["rows"] = rows;
    out["seed"] = seed;
    out["samples_per_family"] = samples;
    out["search_trials"] = trials;
    out["runtime_seconds"] = std::chrono::duration<double>(t1 - t0).count();
    emit.finish(out);
    return 0;
}

int cmd_catalog(const std::string& group_tag, const std::string& family, double p1, double p2,
                bool mirror, const std::string& ball_csv, const Emitter& emit) {
    json out;
    std::vector<EquivariantOEB> entries;
    if (!family.empty()) {
        if (family == "z2-1111")
            entries.push_back(z2_oeb_1111(p1, p2));
        else if (family == "z2-211")
            entries.push_back(z2_oeb_211(p1, p2));
        else if (family == "z2-22")
            entries.push_back(z2_oeb_22(p1, p2, mirror));
        else if (family == "z3-31")
            entries.push_back(z3_oeb_31(p1, p2));
        else if (family == "z4-211")
            entries.push_back(z4_oeb_211(p1, p2));
        else
            throw SchemaError("unknown family " + family);
        out["family"] = family;
    } else {
        entries = discrete_catalog(group_tag);
        out["group"] = group_tag;
    }
    json list = json::array();
    for (const auto& oeb : entries) list.push_back(oeb_to_json(oeb));
    out["entries"] = list;
    out["count"] = entries.size();
    if (!ball_csv.empty()) {
        std::ofstream csv(ball_csv);
        csv << "entry,element,x,y,z\n";
        for (std::size_t e = 0; e < entries.size(); ++e)
            for (int i = 0; i < 4; ++i) {
                Vec3 p = entries[e].elements[i].ball_point();
                csv << e << "," << i << "," << p.x << "," << p.y << "," << p.z << "\n";
            }
    }
    emit.finish(out);
    return 0;
}

int cmd_verify(const std::string& ueb_path, const std::string& oeb_path, const Emitter& emit) {
    json out;
    if (!ueb_path.empty()) {
        LoadedUeb loaded = ueb_from_json(load_json_file(ueb_path));
        out["ueb"] = {{"verified", true},
                      {"dim", loaded.eueb.ueb.dim},
                      {"tau", gset_to_json(loaded.eueb.tau)}};
    }
    if (!oeb_path.empty()) {
        json j = load_json_file(oeb_path);
        auto group = group_from_json(j.at("group"));
        RotationGroup rg;
        rg.group = group;
        rg.rep.group = group.get();
        for (const auto& r : j.at("so3_images")) rg.rep.images.push_back(rotation_from_json(r));
        rg.rep.validate();
        std::array<Rotation, 4> els{};
        if (j.at("elements").size() != 4) throw SchemaError("an OEB carries four rotations");
        for (int i = 0; i < 4; ++i) els[i] = rotation_from_json(j.at("elements")[i]);
        EquivariantOEB oeb = verify_oeb(els, rg);
        out["oeb"] = {{"verified", true}, {"orbit_type", oeb_summary(oeb)["orbit_type"]}};
    }
    if (out.empty()) throw SchemaError("nothing to verify: pass --ueb and/or --oeb");
    emit.finish(out);
    return 0;
}

int cmd_lift(const std::string& family, double p1, double p2, const Emitter& emit) {
    EquivariantOEB oeb = [&] {
        if (family == "z2-1111") return z2_oeb_1111(p1, p2);
        if (family == "z2-211") return z2_oeb_211(p1, p2);
        if (family == "z2-22") return z2_oeb_22(p1, p2);
        if (family == "z3-31") return z3_oeb_31(p1, p2);
        if (family == "z4-211") return z4_oeb_211(p1, p2);
        throw SchemaError("lift supports the cyclic families (z2-*, z3-31, z4-211)");
    }();
    const FiniteGroup& g = *oeb.group.group;
    int n = 0;
    for (std::size_t x = 0; x < g.order(); ++x) n = std::max(n, g.element_order(int(x)));
    cxd root = std::exp(cxd(0, 2 * kPi / n));
    Representation rho = Representation::from_generator_images(
        g, {ComplexMatrix::diagonal({1.0, root})});
    EquivariantUEB eueb = lift_oeb(oeb, rho);
    json out;
    out["source"] = oeb_summary(oeb);
    out["ueb"] = ueb_to_json(eueb);
    emit.finish(out);
    return 0;
}

int cmd_hadamard(std::size_t n, const Emitter& emit) {
    ComplexMatrix h = commuting_hadamard(n);  // throws RefusalError for n >= 5
    FiniteGroup sn = FiniteGroup::preset("S" + std::to_string(n));
    Representation perm = Representation::permutation(sn);
    EquivariantUEB eueb = hadamard_ueb(perm, h);
    json out;
    out["n"] = n;
    out["hadamard"] = matrix_to_json(h);
    out["ueb"] = ueb_to_json(eueb);
    emit.finish(out);
    return 0;
}

int cmd_channel(const std::string& make, const std::string& group_name,
                const std::string& fixture, int message, std::uint64_t seed,
                const Emitter& emit) {
    std::vector<std::shared_ptr<const FiniteGroup>> keepalive;
    UnspeakableChannel ch;
    if (make == "rf") {
        auto g = group_from_json(json(group_name));
        keepalive.push_back(g);
        ch = rf_channel(g);
    } else if (make == "compatible") {
        ProtocolSpec spec = fixture_protocol(fixture.empty() ? "z3-arrows" : fixture, keepalive);
        ch = spec.channel;
    } else {
        throw SchemaError("--make must be rf or compatible");
    }
    json out;
    out["channel"] = channel_to_json(ch);
    out["seed"] = seed;
    if (message >= 0) {
        json lines = json::array();
        for (std::size_t g = 0; g < ch.group().order(); ++g) {
            TransmitRecord rec = transmit(ch, message, int(g), seed);
            lines.push_back({{"sent", rec.sent},
                             {"wire", rec.wire},
                             {"g", ch.group().element_name(int(g))},
                             {"received", rec.received},
                             {"seed", rec.seed}});
        }
        out["transcripts"] = lines;
    }
    emit.finish(out);
    return 0;
}

int cmd_teleport(const std::string& fixture, const std::string& g_name, const std::string& psi,
                 std::uint64_t seed, int forced, bool sweep, const Emitter& emit) {
    std::vector<std::shared_ptr<const FiniteGroup>> keepalive;
    ProtocolSpec spec = fixture_protocol(fixture, keepalive);
    const FiniteGroup& g = *spec.group;

    PureState input;
    if (psi == "random") {
        Rng rng(seed);
        input = random_state(spec.dim(), rng);
    } else {
        input.amps.assign(spec.dim(), cxd(0.0));
        std::size_t k = psi.empty() ? 0 : std::stoul(psi);
        input.amps.at(k) = 1.0;
    }

    json out;
    out["fixture"] = fixture;
    out["seed"] = seed;
    if (sweep) {
        json lines = json::array();
        double min_f = 1.0;
        for (std::size_t x = 0; x < g.order(); ++x)
            for (int outcome = 0; outcome < int(spec.dim() * spec.dim()); ++outcome) {
                Transcript t = rf_teleport(spec, input, int(x), seed, outcome);
                min_f = std::min(min_f, t.fidelity);
                lines.push_back(transcript_to_json(t, g));
            }
        out["transcripts"] = lines;
        out["min_fidelity"] = min_f;
        emit.finish(out);
        return min_f >= 1.0 - 1e-9 ? 0 : 2;
    }
    auto elem = g.element_by_name(g_name);
    if (!elem) throw SchemaError("unknown group element '" + g_name + "'");
    Transcript t = rf_teleport(spec, input, *elem, seed, forced);
    out["transcript"] = transcript_to_json(t, g);
    emit.finish(out);
    return t.fidelity >= 1.0 - 1e-9 ? 0 : 2;
}

int cmd_dr_test(const std::string& fixture, std::uint64_t seed, const Emitter& emit) {
    std::vector<std::shared_ptr<const FiniteGroup>> keepalive;
    ProtocolSpec spec = fixture_protocol(fixture, keepalive);
    const FiniteGroup& g = *spec.group;
    Rng rng(seed);
    PureState input = random_state(spec.dim(), rng);
    double min_f = 1.0;
    json table = json::array();
    for (std::size_t gs = 0; gs < g.order(); ++gs)
        for (std::size_t gr = 0; gr < g.order(); ++gr) {
            double worst = 1.0;
            for (int outcome = 0; outcome < int(spec.dim() * spec.dim()); ++outcome) {
                Transcript t =
                    dynamical_robustness_run(spec, input, int(gs), int(gr), seed, outcome);
                worst = std::min(worst, t.fidelity);
            }
            min_f = std::min(min_f, worst);
            table.push_back({{"g_send", g.element_name(int(gs))},
                             {"g_receive", g.element_name(int(gr))},
                             {"min_fidelity", worst}});
        }
    json out;
    out["fixture"] = fixture;
    out["seed"] = seed;
    out["pairs"] = table;
    out["min_fidelity"] = min_f;
    emit.finish(out);
    return min_f >= 1.0 - 1e-9 ? 0 : 2;
}

int cmd_leakage(const std::string& fixture, std::size_t samples, std::uint64_t seed, int forced,
                const Emitter& emit) {
    std::vector<std::shared_ptr<const FiniteGroup>> keepalive;
    ProtocolSpec spec = fixture_protocol(fixture, keepalive);
    LeakageReport report = no_leakage_experiment(spec, samples, seed, forced);
    json out;
    out["fixture"] = fixture;
    out["seed"] = seed;
    out["samples"] = samples;
    out["forced_outcome"] = forced;
    out["outcome_distribution"] = report.outcome_distribution;
    out["max_pairwise_tv"] = report.stats.max_pairwise_tv;
    json dists = json::array();
    for (std::size_t g = 0; g < report.stats.distributions.size(); ++g)
        dists.push_back({{"g", spec.group->element_name(int(g))},
                         {"wire_distribution", report.stats.distributions[g]}});
    out["per_frame"] = dists;
    emit.finish(out);
    return 0;
}

int cmd_monomial(const std::string& group_name, const std::string& rep_name,
                 const Emitter& emit) {
    auto g = group_from_json(json(group_name));
    ClassFunction chi;
    if (rep_name == "3d-irrep" || rep_name == "3d-irrep-b") {
        chi = alternating5_threedim_character(*g, rep_name == "3d-irrep-b");
    } else if (rep_name == "natural-perm") {
        chi = character_of_rep(Representation::permutation(*g));
    } else if (rep_name == "natural-2d") {
        // the standard character of the symmetric group on three letters
        chi = character_of_rep(Representation::permutation(*g));
        for (std::size_t c = 0; c < chi.values.size(); ++c) {
            chi.values[c] -= 1.0;
            if (chi.is_exact) chi.exact[c] = chi.exact[c] - QuadScalar(Rational(1));
        }
    } else {
        throw SchemaError("unknown representation name " + rep_name);
    }
    ClassFunction target = absolute_square(chi);
    auto candidates = monomial_characters(*g, (long long)target.degree());
    FeasibilityResult res = monomial_decomposition_feasible(target, candidates);
    json out;
    out["group"] = group_name;
    out["rep"] = rep_name;
    out["target"] = class_function_to_json(target);
    json cands = json::array();
    for (const auto& c : candidates) {
        json cj = class_function_to_json(c.chi);
        cj["source"] = c.source;
        cands.push_back(cj);
    }
    out["candidates"] = cands;
    out["feasible"] = res.feasible;
    if (res.feasible) {
        json w = json::array();
        for (const auto& [src, count] : res.witness)
            w.push_back({{"candidate", src}, {"multiplicity", count}});
        out["witness"] = w;
    } else {
        out["certificate"] = res.certificate;
    }
    emit.finish(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant error bases and frame-independent teleportation"};
    app.require_subcommand(1);
    app.fallthrough();

    Emitter emit;
    app.add_option("--emit", emit.path, "write the report to this file instead of stdout");
    app.add_option("--format", emit.format, "json or md")->check(CLI::IsMember({"json", "md"}));

    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed echoed into all outputs");

    auto* table1 = app.add_subcommand("table1", "reproduce the classification table");
    std::size_t samples = 50, trials = 100000;
    table1->add_option("--samples", samples, "samples per continuous family");
    table1->add_option("--trials", trials, "trials for the nonexistence sanity search");

    auto* catalog = app.add_subcommand("catalog", "isolated solutions or family members");
    std::string cat_group = "D2", family, ball_csv;
    double p1 = 0.0, p2 = 0.0;
    bool mirror = false;
    catalog->add_option("--group", cat_group, "D2, D3, D4, tetrahedral, octahedral");
    catalog->add_option("--family", family, "z2-1111, z2-211, z2-22, z3-31, z4-211");
    catalog->add_option("--p1", p1, "first family parameter (radians)");
    catalog->add_option("--p2", p2, "second family parameter (radians)");
    catalog->add_flag("--mirror", mirror, "mirrored branch where applicable");
    catalog->add_option("--emit-ball-csv", ball_csv, "dump ball coordinates for plotting");

    auto* verify = app.add_subcommand("verify", "verify basis files");
    std::string ueb_path, oeb_path;
    verify->add_option("--ueb", ueb_path, "equivariant unitary basis bundle");
    verify->add_option("--oeb", oeb_path, "equivariant rotation basis bundle");

    auto* lift = app.add_subcommand("lift", "lift a rotation family member to unitaries");
    std::string lift_family = "z3-31";
    double lp1 = 1.2, lp2 = 0.0;
    lift->add_option("--family", lift_family);
    lift->add_option("--p1", lp1);
    lift->add_option("--p2", lp2);

    auto* hadamard = app.add_subcommand("hadamard", "permutation-commuting Hadamard pipeline");
    std::size_t had_n = 4;
    hadamard->add_option("--n", had_n, "dimension");

    auto* channel = app.add_subcommand("channel", "build channels and send messages");
    std::string make = "rf", ch_group = "Z3", ch_fixture;
    int message = -1;
    channel->add_option("--make", make, "rf or compatible");
    channel->add_option("--group", ch_group);
    channel->add_option("--fixture", ch_fixture);
    channel->add_option("--message", message, "send this message across all misalignments");

    auto* teleport = app.add_subcommand("teleport", "run the protocol");
    std::string fixture = "z3-arrows", g_name = "e", psi = "random";
    int forced = -1;
    bool sweep = false;
    teleport->add_option("--fixture", fixture);
    teleport->add_option("--g", g_name, "misalignment element name");
    teleport->add_option("--psi", psi, "random or a basis index");
    teleport->add_option("--forced", forced, "force Alice's outcome");
    teleport->add_flag("--sweep", sweep, "all misalignments and outcomes");

    auto* drtest = app.add_subcommand("dr-test", "frame changes during transmission");
    std::string dr_fixture = "z3-arrows";
    drtest->add_option("--fixture", dr_fixture);

    auto* leakage = app.add_subcommand("leakage", "wire statistics per frame");
    std::string lk_fixture = "z3-arrows";
    std::size_t lk_samples = 100000;
    int lk_forced = -1;
    leakage->add_option("--fixture", lk_fixture);
    leakage->add_option("--samples", lk_samples);
    leakage->add_option("--forced", lk_forced, "negative control: force this outcome");

    auto* monomial = app.add_subcommand("monomial-check", "monomial decomposition feasibility");
    std::string mono_group = "A5", mono_rep = "3d-irrep";
    monomial->add_option("--group", mono_group);
    monomial->add_option("--rep", mono_rep, "3d-irrep, 3d-irrep-b, natural-perm, natural-2d");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*table1) return cmd_table1(samples, seed, trials, emit);
        if (*catalog) return cmd_catalog(cat_group, family, p1, p2, mirror, ball_csv, emit);
        if (*verify) return cmd_verify(ueb_path, oeb_path, emit);
        if (*lift) return cmd_lift(lift_family, lp1, lp2, emit);
        if (*hadamard) return cmd_hadamard(had_n, emit);
        if (*channel) return cmd_channel(make, ch_group, ch_fixture, message, seed, emit);
        if (*teleport) return cmd_teleport(fixture, g_name, psi, seed, forced, sweep, emit);
        if (*drtest) return cmd_dr_test(dr_fixture, seed, emit);
        if (*leakage) return cmd_leakage(lk_fixture, lk_samples, seed, lk_forced, emit);
        if (*monomial) return cmd_monomial(mono_group, mono_rep, emit);
    } catch (const RefusalError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 4;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 3;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
