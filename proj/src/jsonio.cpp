#include "svir/jsonio.hpp"

namespace svir {

std::string version_string() { return "svir 0.1.0"; }

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Phase& p) { return Json{{"exp", p.exponent().str()}}; }

Json to_json(const Scalar& s) {
    return Json{{"a", s.a.str()}, {"b", s.b.str()}, {"c", s.c.str()}, {"d", s.d.str()}};
}

Json to_json(const GeneratorId& g) {
    return Json{{"fam", family_tag(g.fam)}, {"idx", g.idx.str()}};
}

Json to_json(const AlgebraElement& x) {
    Json terms = Json::array();
    for (const auto& [g, s] : x.terms()) {
        Json term = to_json(g);
        term["coeff"] = to_json(s);
        terms.push_back(term);
    }
    return terms;
}

Json to_json(const CosetSector& x) {
    return Json{{"l", x.l}, {"m", x.m}, {"s", x.s}};
}

Json to_json(const NSFermiSector& x) { return Json{{"l", x.l}, {"m", x.m}}; }

Json to_json(const FusionVector& v) {
    Json out = Json::array();
    for (const auto& [sec, mult] : v) {
        Json item = to_json(sec);
        item["mult"] = mult;
        out.push_back(item);
    }
    return out;
}

Json to_json(const NSFusionVector& v) {
    Json out = Json::array();
    for (const auto& [sec, mult] : v) {
        Json item = to_json(sec);
        item["mult"] = mult;
        out.push_back(item);
    }
    return out;
}

Json to_json(const DiscreteLabel& lab) { return Json{{"l", lab.l}, {"m", lab.m}}; }

Json to_json(const SimpleCurrentGroup& g) {
    Json out;
    out["order"] = g.order();
    out["invariant_factors"] = g.invariant_factors;
    if (g.generator)
        out["generator"] = to_json(*g.generator);
    Json elems = Json::array();
    for (const auto& x : g.elements)
        elems.push_back(to_json(x));
    out["elements"] = elems;
    return out;
}

Json to_json(const Dim1Group& g) {
    Json out;
    out["n"] = g.n;
    out["order"] = g.order();
    out["invariant_factors"] = g.invariant_factors;
    out["sigma"] = to_json(g.sigma);
    if (g.tau)
        out["tau"] = to_json(*g.tau);
    Json elems = Json::array();
    for (const auto& x : g.elements)
        elems.push_back(to_json(x));
    out["elements"] = elems;
    return out;
}

Json to_json(const CasePrediction& pred) {
    Json out;
    out["case"] = case_tag_name(pred.case_tag);
    out["k"] = pred.k;
    if (pred.case_b_half_phase)
        out["half_generator_phase"] = pred.case_b_half_phase->str();
    Json groups = Json::array();
    for (const auto& g : pred.groups)
        groups.push_back(to_json(g));
    out["maximal_groups"] = groups;
    return out;
}

Json to_json(const ExtensionRecord& rec) {
    Json out;
    out["n"] = rec.n;
    out["kind"] = extension_kind_tag(rec.kind);
    if (rec.generator)
        out["generator"] = to_json(*rec.generator);
    Json secs = Json::array();
    for (const auto& x : rec.sectors)
        secs.push_back(to_json(x));
    out["sectors"] = secs;
    out["provenance"] = rec.provenance;
    return out;
}

Json to_json(const CheckResult& r) {
    Json out;
    out["id"] = r.id;
    out["description"] = r.description;
    out["pass"] = r.pass;
    if (!r.detail.empty())
        out["detail"] = r.detail;
    return out;
}

Json module_summary_json(const ModuleHandle& mod) {
    const auto& hw = mod.hw();
    Json out;
    out["c"] = hw.c.str();
    out["h"] = hw.h.str();
    out["q"] = hw.q.str();
    out["type"] = sector_tag(hw.type);
    out["cutoff"] = mod.cutoff().str();
    Json levels = Json::array();
    Rational step = hw.type == SectorType::NS ? Rational(1, 2) : Rational(1);
    for (Rational lv(0); lv <= mod.cutoff(); lv += step) {
        long dim_verma = 0;
        long dim_irred = 0;
        bool psd = true;
        for (const auto& [key, basis] : mod.blocks()) {
            if (key.level != lv)
                continue;
            dim_verma += static_cast<long>(basis.size());
            dim_irred += static_cast<long>(mat_rank(mod.gram(key)));
            psd = psd && mat_psd(mod.gram(key)).is_psd;
        }
        levels.push_back(Json{{"level", lv.str()},
                              {"dim_verma", dim_verma},
                              {"dim_irred", dim_irred},
                              {"psd", psd}});
    }
    out["levels"] = levels;
    return out;
}

Json envelope(const std::string& command, Json input, Json result) {
    Json out;
    out["command"] = command;
    out["input"] = std::move(input);
    out["result"] = std::move(result);
    out["version"] = version_string();
    return out;
}

} // namespace svir
