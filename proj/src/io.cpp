#include "hopfkit/io.hpp"

#include <json.hpp>

namespace hopfkit {
namespace io {

using nlohmann::ordered_json;

namespace {

Scalar parse_scalar(FieldSpec f, const nlohmann::json& j) {
    try {
        if (j.is_number_integer()) return Scalar(f, (long)j.get<long long>());
        return Scalar::parse(f, j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad coefficient: ") + e.what());
    }
}

Tensor parse_sparse3(FieldSpec f, const nlohmann::json& j, std::vector<int> shape,
                     const std::string& what) {
    Tensor t(f, std::move(shape));
    if (!j.is_array()) throw ParseError(what + ": expected an array of [i, j, k, coeff] entries");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4) throw ParseError(what + ": entries are [i, j, k, coeff]");
        int i = e[0].get<int>(), a = e[1].get<int>(), b = e[2].get<int>();
        try {
            t.at({i, a, b}) += parse_scalar(f, e[3]);
        } catch (const std::out_of_range&) {
            throw ParseError(what + ": index out of range in entry [" + std::to_string(i) + ", " +
                             std::to_string(a) + ", " + std::to_string(b) + "]");
        }
    }
    return t;
}

Matrix parse_vector(FieldSpec f, const nlohmann::json& j, int dim, const std::string& what,
                    bool row = false) {
    if (!j.is_array() || (int)j.size() != dim)
        throw ParseError(what + ": expected a vector of length " + std::to_string(dim));
    Matrix m(f, row ? 1 : dim, row ? dim : 1);
    for (int i = 0; i < dim; ++i) (row ? m(0, i) : m(i, 0)) = parse_scalar(f, j[i]);
    return m;
}

Matrix parse_matrix(FieldSpec f, const nlohmann::json& j, int rows, int cols, const std::string& what) {
    if (!j.is_array() || (int)j.size() != rows)
        throw ParseError(what + ": expected " + std::to_string(rows) + " rows");
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || (int)j[i].size() != cols)
            throw ParseError(what + ": row " + std::to_string(i) + " must have " + std::to_string(cols) +
                             " entries");
        for (int c = 0; c < cols; ++c) m(i, c) = parse_scalar(f, j[i][c]);
    }
    return m;
}

std::vector<std::string> parse_basis(const nlohmann::json& j, int dim) {
    std::vector<std::string> names;
    if (j.contains("basis")) {
        names = j.at("basis").get<std::vector<std::string>>();
        if ((int)names.size() != dim) throw ParseError("basis: expected " + std::to_string(dim) + " names");
    } else {
        for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
    }
    return names;
}

ordered_json sparse3_json(const Tensor& t) {
    ordered_json out = ordered_json::array();
    t.for_nonzero([&](const std::vector<int>& idx, const Scalar& s) {
        out.push_back({idx[0], idx[1], idx[2], s.str()});
    });
    return out;
}

ordered_json vector_json(const Matrix& v) {
    ordered_json out = ordered_json::array();
    for (int i = 0; i < v.rows() * v.cols(); ++i)
        out.push_back((v.rows() == 1 ? v(0, i) : v(i, 0)).str());
    return out;
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json out = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        out.push_back(row);
    }
    return out;
}

Algebra parse_algebra_fields(FieldSpec f, const nlohmann::json& j) {
    int dim = j.at("dim").get<int>();
    auto basis = parse_basis(j, dim);
    Tensor mult = parse_sparse3(f, j.at("mult"), {dim, dim, dim}, "mult");
    Matrix unit = parse_vector(f, j.at("unit"), dim, "unit");
    return Algebra{f, dim, std::move(basis), std::move(mult), std::move(unit)};
}

Coalgebra parse_coalgebra_fields(FieldSpec f, const nlohmann::json& j) {
    int dim = j.at("dim").get<int>();
    auto basis = parse_basis(j, dim);
    Tensor comult = parse_sparse3(f, j.at("comult"), {dim, dim, dim}, "comult");
    Matrix counit = parse_vector(f, j.at("counit"), dim, "counit", /*row=*/true);
    return Coalgebra{f, dim, std::move(basis), std::move(comult), std::move(counit)};
}

HopfAlgebra parse_hopf_fields(FieldSpec f, const nlohmann::json& j) {
    Algebra a = parse_algebra_fields(f, j);
    Coalgebra c = parse_coalgebra_fields(f, j);
    int dim = a.dim;
    Matrix antipode = parse_matrix(f, j.at("antipode"), dim, dim, "antipode");
    return make_hopf_unchecked(Bialgebra{std::move(a), std::move(c)}, std::move(antipode));
}

const HopfAlgebra& resolve_hopf(const Workspace& ws, const nlohmann::json& j, const std::string& key) {
    std::string name = j.at(key).get<std::string>();
    auto it = ws.hopfs.find(name);
    if (it == ws.hopfs.end()) throw ParseError("unknown reference '" + name + "' (expected a Hopf algebra)");
    return it->second;
}

}  // namespace

bool Workspace::has(const std::string& name) const {
    for (const auto& [n, k] : order)
        if (n == name) return true;
    return false;
}

std::string Workspace::unique_name(const std::string& kind, const std::string& name_or_empty) const {
    if (!name_or_empty.empty()) {
        for (const auto& [n, k] : order)
            if (n == name_or_empty && k == kind) return n;
        throw ParseError("no structure named '" + name_or_empty + "' of kind " + kind);
    }
    std::string found;
    for (const auto& [n, k] : order)
        if (k == kind) {
            if (!found.empty()) throw ParseError("several structures of kind " + kind + "; use --name");
            found = n;
        }
    if (found.empty()) throw ParseError("no structure of kind " + kind + " in the file");
    return found;
}

Workspace load_workspace(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("kind") && !doc.contains("structures")) {
        // single-structure document: wrap it
        nlohmann::json wrapped;
        wrapped["field"] = doc.value("field", "Q");
        wrapped["structures"] = nlohmann::json::array({doc});
        doc = wrapped;
    }
    Workspace ws;
    try {
        ws.field = FieldSpec::parse(doc.at("field").get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(std::string("field declaration: ") + e.what());
    }
    if (!doc.contains("structures") || !doc["structures"].is_array())
        throw ParseError("expected a top-level 'structures' array");

    const FieldSpec f = ws.field;
    for (const auto& j : doc["structures"]) {
        std::string name, kind;
        try {
            name = j.at("name").get<std::string>();
            kind = j.at("kind").get<std::string>();
        } catch (const std::exception&) {
            throw ParseError("every structure needs 'name' and 'kind'");
        }
        if (ws.has(name)) throw ParseError("duplicate structure name '" + name + "'");
        try {
            if (kind == "algebra") {
                ws.algebras.emplace(name, parse_algebra_fields(f, j));
            } else if (kind == "coalgebra") {
                ws.coalgebras.emplace(name, parse_coalgebra_fields(f, j));
            } else if (kind == "bialgebra") {
                ws.bialgebras.emplace(name,
                                      Bialgebra{parse_algebra_fields(f, j), parse_coalgebra_fields(f, j)});
            } else if (kind == "hopf_algebra") {
                ws.hopfs.emplace(name, parse_hopf_fields(f, j));
            } else if (kind == "comodule_algebra") {
                const HopfAlgebra& h = resolve_hopf(ws, j, "over");
                Algebra a = parse_algebra_fields(f, j);
                Tensor co = parse_sparse3(f, j.at("coaction"), {a.dim, h.dim(), a.dim}, "coaction");
                ws.comodule_algebras.emplace(name, LeftComoduleAlgebra{h, std::move(a), std::move(co)});
                ws.over_refs[name] = j.at("over").get<std::string>();
            } else if (kind == "module_coalgebra") {
                const HopfAlgebra& h = resolve_hopf(ws, j, "over");
                Coalgebra c = parse_coalgebra_fields(f, j);
                Tensor act = parse_sparse3(f, j.at("action"), {c.dim, h.dim(), c.dim}, "action");
                ws.module_coalgebras.emplace(name, RightModuleCoalgebra{h, std::move(c), std::move(act)});
                ws.over_refs[name] = j.at("over").get<std::string>();
            } else if (kind == "dk_datum") {
                const HopfAlgebra& h = resolve_hopf(ws, j, "hopf");
                std::string an = j.at("comodule_algebra").get<std::string>();
                std::string cn = j.at("module_coalgebra").get<std::string>();
                if (!ws.comodule_algebras.count(an)) throw ParseError("unknown reference '" + an + "'");
                if (!ws.module_coalgebras.count(cn)) throw ParseError("unknown reference '" + cn + "'");
                ws.data.emplace(name,
                                DKDatum{h, ws.comodule_algebras.at(an), ws.module_coalgebras.at(cn)});
                ws.datum_refs[name] = {j.at("hopf").get<std::string>(), an, cn};
            } else if (kind == "dk_module") {
                std::string dn = j.at("datum").get<std::string>();
                if (!ws.data.count(dn)) throw ParseError("unknown reference '" + dn + "'");
                const DKDatum& d = ws.data.at(dn);
                int dim = j.at("dim").get<int>();
                auto basis = parse_basis(j, dim);
                Tensor act = parse_sparse3(f, j.at("action"), {dim, d.adim(), dim}, "action");
                Tensor co = parse_sparse3(f, j.at("coaction"), {dim, d.cdim(), dim}, "coaction");
                DKModule m{RightModule{d.A.alg, dim, basis, std::move(act)},
                           LeftComodule{d.C.coa, dim, basis, std::move(co)}};
                ws.dk_modules.emplace(name, std::make_pair(dn, std::move(m)));
            } else if (kind == "bicomodule_algebra") {
                const HopfAlgebra& h = resolve_hopf(ws, j, "over");
                Algebra a = parse_algebra_fields(f, j);
                Tensor lco = parse_sparse3(f, j.at("left_coaction"), {a.dim, h.dim(), a.dim},
                                           "left_coaction");
                Tensor rco = parse_sparse3(f, j.at("right_coaction"), {a.dim, a.dim, h.dim()},
                                           "right_coaction");
                ws.bicomodules.emplace(
                    name, BicomoduleAlgebra{h, std::move(a), std::move(lco), std::move(rco)});
                ws.over_refs[name] = j.at("over").get<std::string>();
            } else if (kind == "yd_module") {
                std::string hn = j.at("over").get<std::string>();
                if (!ws.bicomodules.count(hn)) throw ParseError("unknown reference '" + hn + "'");
                const BicomoduleAlgebra& ha = ws.bicomodules.at(hn);
                int dim = j.at("dim").get<int>();
                auto basis = parse_basis(j, dim);
                Tensor act = parse_sparse3(f, j.at("action"), {dim, ha.alg.dim, dim}, "action");
                Tensor co = parse_sparse3(f, j.at("coaction"), {dim, ha.over.dim(), dim}, "coaction");
                YDModule m{RightModule{ha.alg, dim, basis, std::move(act)},
                           LeftComodule{ha.over.coa(), dim, basis, std::move(co)}};
                ws.yd_modules.emplace(name, std::make_pair(hn, std::move(m)));
            } else if (kind == "b_module") {
                std::string hn = j.at("over").get<std::string>();
                if (!ws.bicomodules.count(hn)) throw ParseError("unknown reference '" + hn + "'");
                BModuleSpec spec;
                spec.over = hn;
                spec.dim = j.at("dim").get<int>();
                spec.b_dim = j.at("b_dim").get<int>();
                spec.basis = parse_basis(j, spec.dim);
                spec.action = parse_sparse3(f, j.at("action"), {spec.dim, spec.b_dim, spec.dim}, "action");
                ws.b_modules.emplace(name, std::move(spec));
            } else {
                throw ParseError("unknown kind '" + kind + "'");
            }
        } catch (const ParseError& e) {
            throw ParseError("structure '" + name + "': " + e.what());
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("structure '" + name + "': " + e.what());
        }
        ws.order.emplace_back(name, kind);
    }
    return ws;
}

namespace {

ordered_json algebra_fields_json(const Algebra& a) {
    ordered_json j;
    j["dim"] = a.dim;
    j["basis"] = a.basis;
    j["mult"] = sparse3_json(a.mult);
    j["unit"] = vector_json(a.unit);
    return j;
}

void merge_into(ordered_json& dst, const ordered_json& src) {
    for (auto it = src.begin(); it != src.end(); ++it) dst[it.key()] = it.value();
}

ordered_json coalgebra_fields_json(const Coalgebra& c) {
    ordered_json j;
    j["dim"] = c.dim;
    j["basis"] = c.basis;
    j["comult"] = sparse3_json(c.comult);
    j["counit"] = vector_json(c.counit);
    return j;
}

ordered_json hopf_json(const std::string& name, const HopfAlgebra& h) {
    ordered_json j;
    j["name"] = name;
    j["kind"] = "hopf_algebra";
    merge_into(j, algebra_fields_json(h.alg()));
    merge_into(j, coalgebra_fields_json(h.coa()));
    j["antipode"] = matrix_json(h.antipode);
    return j;
}

}  // namespace

std::string save_workspace(const Workspace& ws) {
    ordered_json doc;
    doc["field"] = ws.field.str();
    doc["structures"] = ordered_json::array();
    for (const auto& [name, kind] : ws.order) {
        ordered_json j;
        j["name"] = name;
        j["kind"] = kind;
        if (kind == "algebra") {
            merge_into(j, algebra_fields_json(ws.algebras.at(name)));
        } else if (kind == "coalgebra") {
            merge_into(j, coalgebra_fields_json(ws.coalgebras.at(name)));
        } else if (kind == "bialgebra") {
            const Bialgebra& b = ws.bialgebras.at(name);
            merge_into(j, algebra_fields_json(b.alg));
            merge_into(j, coalgebra_fields_json(b.coa));
        } else if (kind == "hopf_algebra") {
            j = hopf_json(name, ws.hopfs.at(name));
        } else if (kind == "comodule_algebra") {
            const LeftComoduleAlgebra& a = ws.comodule_algebras.at(name);
            j["over"] = ws.over_refs.at(name);
            merge_into(j, algebra_fields_json(a.alg));
            j["coaction"] = sparse3_json(a.coaction);
        } else if (kind == "module_coalgebra") {
            const RightModuleCoalgebra& c = ws.module_coalgebras.at(name);
            j["over"] = ws.over_refs.at(name);
            merge_into(j, coalgebra_fields_json(c.coa));
            j["action"] = sparse3_json(c.action);
        } else if (kind == "dk_datum") {
            const auto& refs = ws.datum_refs.at(name);
            j["hopf"] = refs[0];
            j["comodule_algebra"] = refs[1];
            j["module_coalgebra"] = refs[2];
        } else if (kind == "dk_module") {
            const auto& [dn, m] = ws.dk_modules.at(name);
            j["datum"] = dn;
            j["dim"] = m.dim();
            j["basis"] = m.mod.basis;
            j["action"] = sparse3_json(m.mod.action);
            j["coaction"] = sparse3_json(m.comod.coaction);
        } else if (kind == "bicomodule_algebra") {
            const BicomoduleAlgebra& b = ws.bicomodules.at(name);
            j["over"] = ws.over_refs.at(name);
            merge_into(j, algebra_fields_json(b.alg));
            j["left_coaction"] = sparse3_json(b.left_coaction);
            j["right_coaction"] = sparse3_json(b.right_coaction);
        } else if (kind == "yd_module") {
            const auto& [hn, m] = ws.yd_modules.at(name);
            j["over"] = hn;
            j["dim"] = m.dim();
            j["basis"] = m.mod.basis;
            j["action"] = sparse3_json(m.mod.action);
            j["coaction"] = sparse3_json(m.comod.coaction);
        } else if (kind == "b_module") {
            const BModuleSpec& s = ws.b_modules.at(name);
            j["over"] = s.over;
            j["dim"] = s.dim;
            j["b_dim"] = s.b_dim;
            j["basis"] = s.basis;
            j["action"] = sparse3_json(s.action);
        }
        doc["structures"].push_back(j);
    }
    return doc.dump(2);
}

std::string export_gallery(const std::string& name, FieldSpec f) {
    Workspace ws;
    ws.field = f;
    std::string kind;
    for (const auto& e : gallery::entries())
        if (e.name == name) kind = e.kind;
    if (kind.empty()) throw ParseError("gallery: unknown entry '" + name + "'");

    if (kind == "hopf") {
        ws.hopfs.emplace(name, gallery::build_hopf(name, f));
        ws.order.emplace_back(name, "hopf_algebra");
    } else if (kind == "coalgebra") {
        ws.coalgebras.emplace(name, gallery::build_coalgebra(name, f));
        ws.order.emplace_back(name, "coalgebra");
    } else if (kind == "dk_datum") {
        DKDatum d = gallery::build_datum(name, f);
        ws.hopfs.emplace("H", d.H);
        ws.order.emplace_back("H", "hopf_algebra");
        ws.comodule_algebras.emplace("A", d.A);
        ws.order.emplace_back("A", "comodule_algebra");
        ws.module_coalgebras.emplace("C", d.C);
        ws.order.emplace_back("C", "module_coalgebra");
        ws.over_refs["A"] = "H";
        ws.over_refs["C"] = "H";
        ws.datum_refs[name] = {"H", "A", "C"};
        ws.data.emplace(name, std::move(d));
        ws.order.emplace_back(name, "dk_datum");
    } else if (kind == "bicomodule_algebra") {
        BicomoduleAlgebra b = gallery::build_bicomodule(name, f);
        ws.hopfs.emplace("H", b.over);
        ws.order.emplace_back("H", "hopf_algebra");
        ws.over_refs[name] = "H";
        ws.bicomodules.emplace(name, std::move(b));
        ws.order.emplace_back(name, "bicomodule_algebra");
    }
    return save_workspace(ws);
}

}  // namespace io
}  // namespace hopfkit
