#include "hopfkit/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfkit/io.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {
namespace cli {

namespace {

struct CliError {
    int code;
    std::string message;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw CliError{2, "cannot open '" + path + "'"};
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

io::Workspace load(const std::string& path, std::istream& in) {
    return io::load_workspace(read_input(path, in));
}

int finish(const Report& rep, const std::string& format, std::ostream& out) {
    out << rep.render(format);
    if (format == "json") out << "\n";
    return rep.ok() ? 0 : 1;
}

nlohmann::ordered_json gamma_json(const Tensor& gamma) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    gamma.for_nonzero([&](const std::vector<int>& idx, const Scalar& s) {
        entries.push_back({idx[0], idx[1], idx[2], s.str()});
    });
    return entries;
}

Report checks_for_workspace(const io::Workspace& ws, const std::string& only_kind,
                            const std::string& only_name) {
    Report rep;
    auto want = [&](const std::string& name, const std::string& kind) {
        if (!only_name.empty() && name != only_name) return false;
        if (!only_kind.empty() && kind != only_kind) return false;
        return true;
    };
    for (const auto& [name, kind] : ws.order) {
        if (!want(name, kind)) continue;
        Report r;
        if (kind == "algebra")
            r = check_algebra(ws.algebras.at(name));
        else if (kind == "coalgebra")
            r = check_coalgebra(ws.coalgebras.at(name));
        else if (kind == "bialgebra")
            r = check_bialgebra(ws.bialgebras.at(name));
        else if (kind == "hopf_algebra")
            r = check_hopf(ws.hopfs.at(name));
        else if (kind == "comodule_algebra")
            r = check_comodule_algebra(ws.comodule_algebras.at(name));
        else if (kind == "module_coalgebra")
            r = check_module_coalgebra(ws.module_coalgebras.at(name));
        else if (kind == "dk_datum")
            r = dk::check_datum(ws.data.at(name));
        else if (kind == "dk_module")
            r = dk::check_module(ws.data.at(ws.dk_modules.at(name).first),
                                 ws.dk_modules.at(name).second);
        else if (kind == "bicomodule_algebra")
            r = check_bicomodule_algebra(ws.bicomodules.at(name));
        else if (kind == "yd_module")
            r = yd::check_module(ws.bicomodules.at(ws.yd_modules.at(name).first),
                                 ws.yd_modules.at(name).second);
        else
            continue;
        for (auto& c : r.checks) c.id = name + ":" + c.id;
        rep.merge(r);
    }
    if (rep.checks.empty()) throw CliError{2, "nothing to verify (no matching structure)"};
    return rep;
}

const DKDatum& datum_of(const io::Workspace& ws, const std::string& name_flag) {
    return ws.data.at(ws.unique_name("dk_datum", name_flag));
}

const BicomoduleAlgebra& ha_of(const io::Workspace& ws, const std::string& name_flag) {
    return ws.bicomodules.at(ws.unique_name("bicomodule_algebra", name_flag));
}

// default affineness witnesses: the Verma module, H (x) A, B and B^2
void default_witnesses(const BicomoduleAlgebra& ha, const Coinvariants& b,
                       std::vector<std::pair<std::string, YDModule>>& mods,
                       std::vector<std::pair<std::string, RightModule>>& bmods) {
    mods.emplace_back("verma", yd::verma(ha));
    mods.emplace_back("h_tensor_a", yd::h_tensor_a(ha));
    RightModule breg{b.algebra, b.dim(), b.algebra.basis, b.algebra.mult};
    bmods.emplace_back("B", breg);
    const int n = 2 * b.dim();
    Tensor act2(b.algebra.field, {n, b.dim(), n});
    b.algebra.mult.for_nonzero([&](const std::vector<int>& idx, const Scalar& s) {
        act2.at({idx[0], idx[1], idx[2]}) += s;
        act2.at({b.dim() + idx[0], idx[1], b.dim() + idx[2]}) += s;
    });
    std::vector<std::string> names2;
    for (int i = 0; i < n; ++i) names2.push_back("n" + std::to_string(i));
    bmods.emplace_back("B^2", RightModule{b.algebra, n, names2, std::move(act2)});
}

int run_inner(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
              std::ostream& err) {
    CLI::App app{"exact verification of Hopf-algebraic integrals and Galois extensions"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "table";
    app.add_option("--format", format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));

    // ---- gallery ----
    auto* gal = app.add_subcommand("gallery", "built-in example structures");
    gal->require_subcommand(1);
    auto* gal_list = gal->add_subcommand("list", "list gallery entries");
    auto* gal_export = gal->add_subcommand("export", "write an entry in the file format");
    std::string gal_name, gal_field = "Q";
    gal_export->add_option("name", gal_name, "entry name")->required();
    gal_export->add_option("--field", gal_field, "Q or gf:<p>");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run axiom checkers on a file");
    std::string v_file, v_name;
    bool v_alg = false, v_coa = false, v_bi = false, v_hopf = false, v_coma = false, v_moco = false,
         v_bico = false;
    verify->add_option("file", v_file, "structure file or -")->required();
    verify->add_option("--name", v_name, "only this structure");
    verify->add_flag("--algebra", v_alg);
    verify->add_flag("--coalgebra", v_coa);
    verify->add_flag("--bialgebra", v_bi);
    verify->add_flag("--hopf", v_hopf);
    verify->add_flag("--comodule-algebra", v_coma);
    verify->add_flag("--module-coalgebra", v_moco);
    verify->add_flag("--bicomodule", v_bico);

    // ---- solve-antipode ----
    auto* sa = app.add_subcommand("solve-antipode", "convolution inverse of the identity");
    std::string sa_file, sa_name;
    sa->add_option("file", sa_file)->required();
    sa->add_option("--name", sa_name, "bialgebra name");

    // ---- dk ----
    auto* dkc = app.add_subcommand("dk", "Doi-Koppinen data");
    dkc->require_subcommand(1);
    std::string dk_file, dk_name, dk_module;
    bool dk_total = false;
    auto* dk_verify = dkc->add_subcommand("verify", "check a datum (and optionally a module)");
    dk_verify->add_option("--datum", dk_file, "datum file")->required();
    dk_verify->add_option("--name", dk_name);
    dk_verify->add_option("--module", dk_module, "also check this dk_module");
    auto* dk_solve = dkc->add_subcommand("solve-integral", "decide integral existence");
    dk_solve->add_option("--datum", dk_file)->required();
    dk_solve->add_option("--name", dk_name);
    dk_solve->add_flag("--total", dk_total, "require the normalization");
    auto* dk_lambda = dkc->add_subcommand("lambda", "splitting of rho_M from a total integral");
    dk_lambda->add_option("--datum", dk_file)->required();
    dk_lambda->add_option("--name", dk_name);
    dk_lambda->add_option("--module", dk_module, "dk_module name, or CA for C⊗A")->required();
    auto* dk_smash = dkc->add_subcommand("smash", "the smash product A # C*");
    dk_smash->add_option("--datum", dk_file)->required();
    dk_smash->add_option("--name", dk_name);

    // ---- yd ----
    auto* ydc = app.add_subcommand("yd", "quantum Yetter-Drinfel'd structures");
    ydc->require_subcommand(1);
    std::string yd_file, yd_name, yd_module, yd_witnesses;
    bool yd_total = false;
    auto* yd_verify = ydc->add_subcommand("verify", "check a bicomodule algebra (and a module)");
    yd_verify->add_option("--ha", yd_file, "bicomodule algebra file")->required();
    yd_verify->add_option("--name", yd_name);
    yd_verify->add_option("--module", yd_module, "also check this yd_module");
    auto* yd_verma = ydc->add_subcommand("verma", "the Verma structure and its checks");
    yd_verma->add_option("--ha", yd_file)->required();
    yd_verma->add_option("--name", yd_name);
    auto* yd_solve = ydc->add_subcommand("solve-quantum-integral", "decide quantum integral existence");
    yd_solve->add_option("--ha", yd_file)->required();
    yd_solve->add_option("--name", yd_name);
    yd_solve->add_flag("--total", yd_total);
    auto* yd_coinv = ydc->add_subcommand("coinvariants", "the subalgebra of quantum coinvariants");
    yd_coinv->add_option("--ha", yd_file)->required();
    yd_coinv->add_option("--name", yd_name);
    auto* yd_galois = ydc->add_subcommand("galois-check", "rank decision for the canonical map beta");
    yd_galois->add_option("--ha", yd_file)->required();
    yd_galois->add_option("--name", yd_name);
    auto* yd_aff = ydc->add_subcommand("affineness", "instance-level equivalence verification");
    yd_aff->add_option("--ha", yd_file)->required();
    yd_aff->add_option("--name", yd_name);
    yd_aff->add_option("--witnesses", yd_witnesses, "extra yd_module/b_module witnesses file");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (gal_list->parsed()) {
        for (const auto& e : gallery::entries())
            out << e.name << "  (" << e.kind << ")  " << e.description << "\n";
        return 0;
    }
    if (gal_export->parsed()) {
        FieldSpec f = FieldSpec::parse(gal_field);
        out << io::export_gallery(gal_name, f) << "\n";
        return 0;
    }
    if (verify->parsed()) {
        io::Workspace ws = load(v_file, in);
        std::string kind;
        if (v_alg) kind = "algebra";
        if (v_coa) kind = "coalgebra";
        if (v_bi) kind = "bialgebra";
        if (v_hopf) kind = "hopf_algebra";
        if (v_coma) kind = "comodule_algebra";
        if (v_moco) kind = "module_coalgebra";
        if (v_bico) kind = "bicomodule_algebra";
        return finish(checks_for_workspace(ws, kind, v_name), format, out);
    }
    if (sa->parsed()) {
        io::Workspace ws = load(sa_file, in);
        std::string name;
        Bialgebra b;
        try {
            name = ws.unique_name("bialgebra", sa_name);
            b = ws.bialgebras.at(name);
        } catch (const io::ParseError&) {
            name = ws.unique_name("hopf_algebra", sa_name);
            b = ws.hopfs.at(name).bi;
        }
        auto s = solve_antipode(b);
        if (!s) {
            out << "no antipode: the convolution-inverse system is infeasible\n";
            return 1;
        }
        nlohmann::ordered_json j;
        j["antipode"] = nlohmann::ordered_json::array();
        for (int i = 0; i < s->rows(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int c = 0; c < s->cols(); ++c) row.push_back((*s)(i, c).str());
            j["antipode"].push_back(row);
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    if (dk_verify->parsed()) {
        io::Workspace ws = load(dk_file, in);
        const DKDatum& d = datum_of(ws, dk_name);
        Report rep = dk::check_datum(d);
        if (!dk_module.empty()) {
            if (!ws.dk_modules.count(dk_module)) throw CliError{2, "unknown module '" + dk_module + "'"};
            rep.merge(dk::check_module(d, ws.dk_modules.at(dk_module).second));
        }
        return finish(rep, format, out);
    }
    if (dk_solve->parsed()) {
        io::Workspace ws = load(dk_file, in);
        const DKDatum& d = datum_of(ws, dk_name);
        auto sol = dk::solve_integral(d, dk_total);
        if (!sol) {
            out << "no " << (dk_total ? "total " : "") << "integral: the system is infeasible\n";
            return 1;
        }
        nlohmann::ordered_json j;
        j["gamma"] = gamma_json(sol->gamma);
        j["total"] = sol->total;
        j["solution_space_dim"] = sol->solution_space_dim;
        out << j.dump(2) << "\n";
        return 0;
    }
    if (dk_lambda->parsed()) {
        io::Workspace ws = load(dk_file, in);
        const DKDatum& d = datum_of(ws, dk_name);
        auto sol = dk::solve_integral(d, true);
        if (!sol) {
            out << "no total integral: cannot build the splitting\n";
            return 1;
        }
        DKModule m = dk_module == "CA" ? dk::canonical_ca(d) : [&] {
            if (!ws.dk_modules.count(dk_module)) throw CliError{2, "unknown module '" + dk_module + "'"};
            if (ws.dk_modules.at(dk_module).first != ws.unique_name("dk_datum", dk_name))
                throw CliError{2, "module '" + dk_module + "' belongs to a different datum"};
            return ws.dk_modules.at(dk_module).second;
        }();
        Matrix lambda = dk::splitting_lambda(d, m, sol->gamma);
        Report rep = dk::verify_splitting(d, m, lambda);
        out << "lambda =\n" << lambda.str() << "\n";
        return finish(rep, format, out);
    }
    if (dk_smash->parsed()) {
        io::Workspace ws = load(dk_file, in);
        const DKDatum& d = datum_of(ws, dk_name);
        Algebra s = dk::smash_product(d);
        io::Workspace wout;
        wout.field = ws.field;
        wout.algebras.emplace("smash", std::move(s));
        wout.order.emplace_back("smash", "algebra");
        out << io::save_workspace(wout) << "\n";
        return finish(check_algebra(wout.algebras.at("smash")), format, out);
    }
    if (yd_verify->parsed()) {
        io::Workspace ws = load(yd_file, in);
        const BicomoduleAlgebra& ha = ha_of(ws, yd_name);
        Report rep = check_bicomodule_algebra(ha);
        if (!yd_module.empty()) {
            if (!ws.yd_modules.count(yd_module)) throw CliError{2, "unknown module '" + yd_module + "'"};
            rep.merge(yd::check_module(ha, ws.yd_modules.at(yd_module).second));
        }
        return finish(rep, format, out);
    }
    if (yd_verma->parsed()) {
        io::Workspace ws = load(yd_file, in);
        const BicomoduleAlgebra& ha = ha_of(ws, yd_name);
        YDModule v = yd::verma(ha);
        nlohmann::ordered_json j;
        j["coaction"] = gamma_json(v.comod.coaction);
        out << j.dump(2) << "\n";
        return finish(yd::check_module(ha, v), format, out);
    }
    if (yd_solve->parsed()) {
        io::Workspace ws = load(yd_file, in);
        const BicomoduleAlgebra& ha = ha_of(ws, yd_name);
        auto sol = yd::solve_quantum_integral(ha, yd_total);
        if (!sol) {
            out << "no " << (yd_total ? "total " : "") << "quantum integral: the system is infeasible\n";
            return 1;
        }
        nlohmann::ordered_json j;
        j["gamma"] = gamma_json(sol->gamma);
        j["total"] = sol->total;
        j["solution_space_dim"] = sol->solution_space_dim;
        out << j.dump(2) << "\n";
        return 0;
    }
    if (yd_coinv->parsed()) {
        io::Workspace ws = load(yd_file, in);
        const BicomoduleAlgebra& ha = ha_of(ws, yd_name);
        Coinvariants b = yd::coinvariants(ha);
        nlohmann::ordered_json j;
        j["dim"] = b.dim();
        j["basis_columns"] = nlohmann::ordered_json::array();
        for (int c = 0; c < b.dim(); ++c) {
            nlohmann::ordered_json col = nlohmann::ordered_json::array();
            for (int r = 0; r < b.basis.rows(); ++r) col.push_back(b.basis(r, c).str());
            j["basis_columns"].push_back(col);
        }
        out << j.dump(2) << "\n";
        return finish(check_algebra(b.algebra), format, out);
    }
    if (yd_galois->parsed()) {
        io::Workspace ws = load(yd_file, in);
        const BicomoduleAlgebra& ha = ha_of(ws, yd_name);
        return finish(yd::is_quantum_galois(ha), format, out);
    }
    if (yd_aff->parsed()) {
        io::Workspace ws = load(yd_file, in);
        const BicomoduleAlgebra& ha = ha_of(ws, yd_name);
        auto sol = yd::solve_quantum_integral(ha, true);
        if (!sol) {
            out << "no total quantum integral: affineness hypotheses fail\n";
            return 1;
        }
        Coinvariants b = yd::coinvariants(ha);
        std::vector<std::pair<std::string, YDModule>> mods;
        std::vector<std::pair<std::string, RightModule>> bmods;
        default_witnesses(ha, b, mods, bmods);
        if (!yd_witnesses.empty()) {
            io::Workspace wws = load(yd_witnesses, in);
            for (const auto& [name, pair] : wws.yd_modules) mods.emplace_back(name, pair.second);
            for (const auto& [name, spec] : wws.b_modules) {
                if (spec.b_dim != b.dim())
                    throw CliError{2, "b_module '" + name + "': b_dim " + std::to_string(spec.b_dim) +
                                          " does not match computed dim " + std::to_string(b.dim())};
                bmods.emplace_back(name,
                                   RightModule{b.algebra, spec.dim, spec.basis, spec.action});
            }
        }
        return finish(yd::affineness_check(ha, *sol, mods, bmods), format, out);
    }
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        return run_inner(args, in, out, err);
    } catch (const CliError& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cli
}  // namespace hopfkit
