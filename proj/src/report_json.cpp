#include "springer/report_json.hpp"

namespace springer {

using nlohmann::json;

json to_json(const Partition& la) { return json(la.parts()); }

json to_json(const StandardTableau& t) {
    json rows = json::array();
    for (const auto& r : t.rows()) rows.push_back(r);
    return rows;
}

json to_json(const LinkPattern& pi) {
    json blocks = json::array();
    for (const auto& b : pi.blocks()) blocks.push_back(b);
    return json{{"n", pi.n()}, {"blocks", blocks}};
}

json to_json(const OrbitAnalysis& a) {
    return json{{"pattern", to_json(a.pattern)},
                {"stab_dim", a.stab_dim},
                {"orbit_dim", a.orbit_dim},
                {"springer_dim", a.springer_dim},
                {"dense", a.dense}};
}

json to_json(const SingularityReport& s) {
    json out{{"verdict", verdict_name(s.verdict)}, {"reason", s.reason}};
    if (s.witness)
        out["witness"] = json{{"pattern", s.witness->forbidden}, {"indices", s.witness->indices}};
    return out;
}

json to_json(const ComponentReport& r) {
    json out;
    out["tableau"] = to_json(r.tableau);
    out["shape"] = to_json(r.shape);
    out["dim"] = r.dim;
    json cls = json::array();
    if (r.bala_carter) cls.push_back("BC");
    if (r.richardson) cls.push_back("R");
    if (r.generalized_bc) cls.push_back("genBC");
    if (r.generalized_richardson) cls.push_back("genR");
    out["class"] = cls;
    if (r.bc_composition) out["bc_composition"] = r.bc_composition->parts();
    if (r.dense_pattern) out["gen_bc_pattern"] = to_json(*r.dense_pattern);
    out["singular"] = to_json(r.singular);
    if (r.bundle_base) out["bundle_base"] = *r.bundle_base;
    return out;
}

json to_json(const ShapeAtlas& atlas) {
    json reports = json::array();
    for (const auto& r : atlas.reports) reports.push_back(to_json(r));
    const auto& s = atlas.summary;
    return json{{"shape", to_json(atlas.shape)},
                {"n", atlas.shape.n()},
                {"reports", reports},
                {"summary",
                 json{{"components", s.components},
                      {"bala_carter", s.bala_carter},
                      {"richardson", s.richardson},
                      {"generalized_bc", s.generalized_bc},
                      {"generalized_richardson", s.generalized_richardson},
                      {"singular", s.singular},
                      {"smooth", s.smooth},
                      {"unknown", s.unknown},
                      {"exists_singular", s.exists_singular}}},
                {"tool_version", tool_version}};
}

} // namespace springer
