#include "lmss/serialize.hpp"

namespace lmss {

Json to_json(const Graph& g, VertexSet s) {
    return g.labels_of(s);
}

Json to_json(const Graph& g, const SetFamily& family) {
    Json out = Json::array();
    for (VertexSet s : family) out.push_back(to_json(g, s));
    return out;
}

Json to_json(const Graph& g, const Matching& m) {
    Json out = Json::array();
    for (auto [u, v] : m.edges()) out.push_back({g.label(u), g.label(v)});
    return out;
}

Json to_json(const Graph& g, const Chain& chain) {
    Json out = Json::array();
    for (VertexSet s : chain.steps) out.push_back(to_json(g, s));
    return out;
}

Json to_json(const Graph& g, const Witness& w) {
    struct Visitor {
        const Graph& g;
        Json operator()(std::monostate) const { return nullptr; }
        Json operator()(const Matching& m) const {
            return {{"kind", "matching"}, {"matching", to_json(g, m)}};
        }
        Json operator()(VertexSet s) const {
            return {{"kind", "psi_member"}, {"set", to_json(g, s)}};
        }
        Json operator()(const AxiomWitness& a) const {
            Json out{{"kind", "axiom"}, {"axiom", to_string(a.axiom)}, {"x", to_json(g, a.x)}};
            if (a.y) out["y"] = to_json(g, *a.y);
            return out;
        }
    };
    return std::visit(Visitor{g}, w);
}

Json to_json(const Graph& g, const Verdict& v) {
    Json out;
    out["is_greedoid"] = v.is_greedoid;
    out["branch"] = to_string(v.branch);
    out["cycle_length"] = v.cycle_length ? Json(*v.cycle_length) : Json(nullptr);
    out["witness"] = to_json(g, v.witness);
    out["psi_size"] = v.psi_size ? Json(*v.psi_size) : Json(nullptr);
    return out;
}

}  // namespace lmss
