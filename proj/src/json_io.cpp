#include "equitel/json_io.hpp"

#include <fstream>

namespace equitel {

namespace {

// nlohmann throws its own exceptions; translate to schema errors with a path
// hint so the CLI can map them to the schema exit code.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed ") + what + ": " + e.what());
    }
}

}  // namespace

json group_to_json(const FiniteGroup& g) {
    json j;
    j["name"] = g.name();
    j["elements"] = json::array();
    for (std::size_t i = 0; i < g.order(); ++i) j["elements"].push_back(g.element_name(int(i)));
    j["table"] = g.table();
    j["identity"] = g.identity();
    return j;
}

std::shared_ptr<const FiniteGroup> group_from_json(const json& j) {
    return guarded("group", [&] {
        if (j.is_string()) {
            return std::make_shared<const FiniteGroup>(
                FiniteGroup::preset(j.get<std::string>()));
        }
        std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        std::string name = j.value("name", "group");
        auto g = std::make_shared<const FiniteGroup>(
            FiniteGroup::from_table(name, std::move(names), std::move(table)));
        if (j.contains("identity") && j.at("identity").get<int>() != g->identity())
            throw SchemaError("declared identity disagrees with the table");
        return g;
    });
}

json gset_to_json(const GSet& x) {
    json j;
    j["points"] = x.points;
    j["side"] = (x.side == GSet::Side::Left) ? "left" : "right";
    json action = json::object();
    for (std::size_t g = 0; g < x.act.size(); ++g) action[std::to_string(g)] = x.act[g];
    j["action"] = action;
    return j;
}

GSet gset_from_json(const json& j, const FiniteGroup& g) {
    return guarded("gset", [&] {
        GSet x;
        x.group = &g;
        x.points = j.at("points").get<std::vector<std::string>>();
        std::string side = j.value("side", "left");
        x.side = (side == "right") ? GSet::Side::Right : GSet::Side::Left;
        x.act.assign(g.order(), {});
        for (const auto& [key, perm] : j.at("action").items())
            x.act.at(std::stoul(key)) = perm.get<std::vector<int>>();
        x.validate();
        return x;
    });
}

json rotation_to_json(const Rotation& r) {
    return json{{"axis", {r.axis().x, r.axis().y, r.axis().z}}, {"angle", r.angle()}};
}

Rotation rotation_from_json(const json& j) {
    return guarded("rotation", [&] {
        auto ax = j.at("axis").get<std::vector<double>>();
        if (ax.size() != 3) throw SchemaError("rotation axis needs three coordinates");
        return Rotation::axis_angle({ax[0], ax[1], ax[2]}, j.at("angle").get<double>());
    });
}

json matrix_to_json(const ComplexMatrix& m) {
    json re = json::array(), im = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json rr = json::array(), ri = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            rr.push_back(m(r, c).real());
            ri.push_back(m(r, c).imag());
        }
        re.push_back(rr);
        im.push_back(ri);
    }
    return json{{"dims", {m.rows(), m.cols()}}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json& j) {
    return guarded("matrix", [&] {
        auto dims = j.at("dims").get<std::vector<std::size_t>>();
        auto re = j.at("re").get<std::vector<std::vector<double>>>();
        auto im = j.at("im").get<std::vector<std::vector<double>>>();
        if (dims.size() != 2 || re.size() != dims[0] || im.size() != dims[0])
            throw SchemaError("matrix dims disagree with entries");
        ComplexMatrix m(dims[0], dims[1]);
        for (std::size_t r = 0; r < dims[0]; ++r) {
            if (re[r].size() != dims[1] || im[r].size() != dims[1])
                throw SchemaError("matrix row has wrong length");
            for (std::size_t c = 0; c < dims[1]; ++c) m(r, c) = cxd(re[r][c], im[r][c]);
        }
        return m;
    });
}

json state_to_json(const PureState& s) {
    json re = json::array(), im = json::array();
    for (const auto& a : s.amps) {
        re.push_back(a.real());
        im.push_back(a.imag());
    }
    return json{{"re", re}, {"im", im}};
}

PureState state_from_json(const json& j) {
    return guarded("state", [&] {
        auto re = j.at("re").get<std::vector<double>>();
        auto im = j.at("im").get<std::vector<double>>();
        if (re.size() != im.size()) throw SchemaError("state arrays disagree");
        PureState s;
        for (std::size_t i = 0; i < re.size(); ++i) s.amps.push_back(cxd(re[i], im[i]));
        return s;
    });
}

json rep_to_json(const Representation& rho) {
    json j;
    j["group"] = group_to_json(*rho.group);
    j["images"] = json::array();
    for (const auto& m : rho.images) j["images"].push_back(matrix_to_json(m));
    return j;
}

Representation rep_from_json(const json& j, const FiniteGroup& g) {
    return guarded("representation", [&] {
        Representation rho;
        rho.group = &g;
        for (const auto& m : j.at("images")) rho.images.push_back(matrix_from_json(m));
        rho.validate();
        return rho;
    });
}

json oeb_to_json(const EquivariantOEB& oeb) {
    json j;
    j["family"] = oeb.family_tag;
    j["parameters"] = oeb.parameters;
    j["group"] = group_to_json(*oeb.group.group);
    j["elements"] = json::array();
    for (const auto& r : oeb.elements) j["elements"].push_back(rotation_to_json(r));
    j["so3_images"] = json::array();
    for (const auto& r : oeb.group.rep.images) j["so3_images"].push_back(rotation_to_json(r));
    j["tau"] = gset_to_json(oeb.tau);
    json type = json::array();
    for (auto t : orbit_type(oeb.tau)) type.push_back(t);
    j["orbit_type"] = type;
    return j;
}

json ueb_to_json(const EquivariantUEB& eueb) {
    json j;
    j["dim"] = eueb.ueb.dim;
    j["elements"] = json::array();
    for (const auto& m : eueb.ueb.elements) j["elements"].push_back(matrix_to_json(m));
    j["rep"] = json::array();
    for (const auto& m : eueb.rep.images) j["rep"].push_back(matrix_to_json(m));
    j["group"] = group_to_json(*eueb.rep.group);
    j["tau"] = gset_to_json(eueb.tau);
    json xi = json::array();
    for (const auto& row : eueb.xi) {
        json r = json::array();
        for (const auto& v : row) r.push_back(json::array({v.real(), v.imag()}));
        xi.push_back(r);
    }
    j["xi"] = xi;
    json type = json::array();
    for (auto t : orbit_type(eueb.tau)) type.push_back(t);
    j["orbit_type"] = type;
    return j;
}

LoadedUeb ueb_from_json(const json& j) {
    return guarded("equivariant basis", [&] {
        LoadedUeb out;
        out.group = group_from_json(j.at("group"));
        out.rep.group = out.group.get();
        for (const auto& m : j.at("rep")) out.rep.images.push_back(matrix_from_json(m));
        out.rep.validate();
        std::vector<ComplexMatrix> elements;
        for (const auto& m : j.at("elements")) elements.push_back(matrix_from_json(m));
        out.eueb = verify_equivariant(verify_ueb(elements), out.rep);
        if (j.contains("tau")) {
            GSet declared = gset_from_json(j.at("tau"), *out.group);
            if (declared.act != out.eueb.tau.act)
                throw VerificationError("declared index action disagrees with conjugation");
        }
        return out;
    });
}

json channel_to_json(const UnspeakableChannel& ch) {
    json j;
    j["kind"] = to_string(ch.kind);
    j["group"] = group_to_json(ch.group());
    j["messages"] = ch.sigma.points;
    j["sigma"] = gset_to_json(ch.sigma);
    if (ch.kind == ChannelKind::Composite) {
        json parts = json::array();
        for (const auto& p : ch.parts) {
            json pj;
            pj["members"] = p.members;
            pj["speakable_only"] = (p.sub == nullptr);
            if (p.sub) pj["sub_messages"] = p.sub->sigma.points;
            parts.push_back(pj);
        }
        j["parts"] = parts;
    }
    return j;
}

json transcript_to_json(const Transcript& t, const FiniteGroup& g) {
    json j;
    j["input"] = state_to_json(t.input);
    j["outcome"] = t.outcome;
    j["probability"] = t.probability;
    j["wire"] = t.wire;
    j["received"] = t.received;
    j["correction"] = t.correction;
    j["output"] = state_to_json(t.output);
    j["g"] = g.element_name(t.g);
    j["g_receive"] = g.element_name(t.g_receive);
    j["fidelity"] = t.fidelity;
    return j;
}

json refusal_to_json(const RefusalCertificate& cert) {
    json j;
    j["tag"] = cert.tag;
    j["refused"] = true;
    j["reason"] = cert.reason;
    j["search"] = {{"seed", cert.seed},
                   {"trials", cert.trials},
                   {"candidates_tested", cert.candidates_tested},
                   {"passes", cert.passes}};
    return j;
}

json class_function_to_json(const ClassFunction& cf) {
    json j;
    j["classes"] = cf.classes.labels;
    j["class_sizes"] = cf.classes.sizes;
    json vals = json::array();
    for (std::size_t c = 0; c < cf.values.size(); ++c) {
        json v;
        v["re"] = cf.values[c].real();
        v["im"] = cf.values[c].imag();
        if (cf.is_exact) {
            v["exact"] = {{"a", {cf.exact[c].a.num, cf.exact[c].a.den}},
                          {"b", {cf.exact[c].b.num, cf.exact[c].b.den}}};
        }
        vals.push_back(v);
    }
    j["values"] = vals;
    j["exact"] = cf.is_exact;
    return j;
}

json tolerances_json() {
    return json{{"equality", kTol}, {"tight", kTightTol}, {"tau_discovery", kTauTol},
                {"root_residual", kRootResidual}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SchemaError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

}  // namespace equitel
