// Command-line interface: exact computations with the N=2 super-Virasoro
// discrete series, its coset fusion ring, the simple-current classification,
// spectral flow and the index pairing.
//
// Exit codes: 0 success, 1 domain error (invalid label or weight),
// 2 usage error.

#include "svir/checks.hpp"
#include "svir/chiral.hpp"
#include "svir/classification.hpp"
#include "svir/fusion.hpp"
#include "svir/jsonio.hpp"
#include "svir/module.hpp"
#include "svir/superalgebra.hpp"
#include "svir/unitarity.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

using svir::Json;
using svir::Rational;

struct Options {
    std::string format = "text";
};

void emit(const Options& opt, const std::string& command, const Json& input, const Json& result,
          const std::string& text) {
    if (opt.format == "json") {
        std::cout << svir::envelope(command, input, result).dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

svir::SectorType parse_type(const std::string& s) {
    if (s == "NS" || s == "ns")
        return svir::SectorType::NS;
    if (s == "R" || s == "r")
        return svir::SectorType::R;
    throw CLI::ValidationError("--type must be NS or R");
}

std::string sector_text(const svir::CosetSector& x) { return x.str(); }

std::string fusion_text(const svir::FusionVector& v) {
    if (v.empty())
        return "0";
    std::string out;
    for (const auto& [sec, mult] : v) {
        if (!out.empty())
            out += " + ";
        if (mult != 1)
            out += std::to_string(mult) + "*";
        out += sec.str();
    }
    return out;
}

std::string fusion_text(const svir::NSFusionVector& v) {
    if (v.empty())
        return "0";
    std::string out;
    for (const auto& [sec, mult] : v) {
        if (!out.empty())
            out += " + ";
        if (mult != 1)
            out += std::to_string(mult) + "*";
        out += sec.str();
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact N=2 super-Virasoro discrete-series toolkit"};
    app.require_subcommand(1);
    // keep -h free for the lowest-energy flag on subcommands
    app.set_help_flag("--help", "print help");
    Options opt;
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // --- algebra-check -----------------------------------------------------
    auto* alg = app.add_subcommand("algebra-check",
                                   "exhaustive Jacobi and spectral-flow checks");
    long window = 4;
    alg->add_option("--window", window, "mode-index window")->capture_default_str();
    alg->callback([&]() {
        std::vector<svir::Rational> ts = {Rational(0), Rational(1, 2)};
        long failures = 0, triples = 0;
        std::string first_bad;
        for (const auto& t : ts) {
            std::vector<svir::GeneratorId> pool;
            pool.push_back(svir::gen_central());
            for (long k = -window; k <= window; ++k) {
                pool.push_back(svir::gen_L(Rational(k)));
                pool.push_back(svir::gen_J(Rational(k)));
            }
            for (long twice = -2 * window; twice <= 2 * window; ++twice) {
                Rational r(twice, 2);
                if (svir::generator_valid(svir::gen_Gp(r), t))
                    pool.push_back(svir::gen_Gp(r));
                if (svir::generator_valid(svir::gen_Gm(r), t))
                    pool.push_back(svir::gen_Gm(r));
            }
            for (const auto& a : pool)
                for (const auto& b : pool)
                    for (const auto& c : pool) {
                        ++triples;
                        if (!svir::jacobi_defect(a, b, c, t).is_zero()) {
                            ++failures;
                            if (first_bad.empty())
                                first_bad = a.str() + "," + b.str() + "," + c.str();
                        }
                    }
        }
        Json result{{"triples", triples}, {"jacobi_failures", failures}};
        if (!first_bad.empty())
            result["first_failure"] = first_bad;
        emit(opt, "algebra-check", Json{{"window", window}}, result,
             "jacobi triples checked: " + std::to_string(triples) + ", failures: " +
                 std::to_string(failures) + "\n");
        if (failures > 0)
            throw std::domain_error("jacobi identity failed");
    });

    // --- module ------------------------------------------------------------
    auto* mod = app.add_subcommand("module", "build a truncated lowest-weight module");
    mod->set_help_flag("--help");
    std::string mc = "1", mh = "0", mq = "0", mtype = "NS", mcutoff = "2";
    mod->add_option("--c", mc, "central charge, rational p/q")->capture_default_str();
    mod->add_option("--h", mh, "lowest energy")->capture_default_str();
    mod->add_option("--q", mq, "lowest charge")->capture_default_str();
    mod->add_option("--type", mtype, "NS or R")->capture_default_str();
    mod->add_option("--cutoff", mcutoff, "maximum level")->capture_default_str();
    mod->callback([&]() {
        svir::HighestWeight hw{Rational::parse(mc), Rational::parse(mh), Rational::parse(mq),
                               parse_type(mtype)};
        svir::ModuleHandle handle(hw, Rational::parse(mcutoff));
        Json summary = svir::module_summary_json(handle);
        std::string text = "module c=" + hw.c.str() + " h=" + hw.h.str() + " q=" + hw.q.str() +
                           " type=" + svir::sector_tag(hw.type) + " cutoff=" +
                           handle.cutoff().str() + "\n";
        for (const auto& lv : summary["levels"])
            text += "  level " + lv["level"].get<std::string>() + ": dim_verma " +
                    std::to_string(lv["dim_verma"].get<long>()) + ", dim_irred " +
                    std::to_string(lv["dim_irred"].get<long>()) +
                    (lv["psd"].get<bool>() ? "" : ", NOT PSD") + "\n";
        Json input{{"c", mc}, {"h", mh}, {"q", mq}, {"type", mtype}, {"cutoff", mcutoff}};
        emit(opt, "module", input, summary, text);
    });

    // --- unitarity ---------------------------------------------------------
    auto* uni = app.add_subcommand("unitarity", "classify a weight (c,h,q) by region");
    uni->set_help_flag("--help");
    std::string uc = "1", uh = "0", uq = "0", utype = "NS";
    uni->add_option("--c", uc)->required();
    uni->add_option("--h", uh)->required();
    uni->add_option("--q", uq)->required();
    uni->add_option("--type", utype, "NS or R")->capture_default_str();
    uni->callback([&]() {
        auto res = svir::region_check(parse_type(utype), Rational::parse(uc), Rational::parse(uh),
                                      Rational::parse(uq));
        Json result;
        result["region"] = svir::region_tag(res.region);
        result["sufficient"] = res.sufficient;
        Json labels = Json::array();
        for (const auto& lab : res.labels)
            labels.push_back(svir::to_json(lab));
        result["labels"] = labels;
        std::string text = std::string("region: ") + svir::region_tag(res.region);
        if (!res.labels.empty()) {
            text += ", labels:";
            for (const auto& lab : res.labels)
                text += " " + lab.str();
        }
        if (res.region == svir::Region::NS2 || res.region == svir::Region::R2)
            text += " (necessary conditions at c>=3; sufficiency not asserted)";
        Json input{{"c", uc}, {"h", uh}, {"q", uq}, {"type", utype}};
        emit(opt, "unitarity", input, result, text + "\n");
    });

    // --- fuse --------------------------------------------------------------
    auto* fu = app.add_subcommand("fuse", "fuse coset or NS fermionic sectors");
    long fn = 1;
    std::string fa, fb;
    bool fns = false, ftable = false;
    fu->add_option("--n", fn, "level n")->required();
    fu->add_option("--a", fa, "first sector: l,m,s (or l,m with --ns)");
    fu->add_option("--b", fb, "second sector");
    fu->add_flag("--ns", fns, "use NS fermionic sectors (l,m)");
    fu->add_flag("--table", ftable, "print the full fusion table");
    fu->callback([&]() {
        Json input{{"n", fn}, {"ns", fns}};
        if (ftable) {
            Json rows = Json::array();
            std::string text;
            if (fns) {
                auto sectors = svir::all_ns_sectors(fn);
                for (const auto& a : sectors)
                    for (const auto& b : sectors) {
                        auto prod = svir::fuse_ns(a, b);
                        rows.push_back(Json{{"a", svir::to_json(a)},
                                            {"b", svir::to_json(b)},
                                            {"product", svir::to_json(prod)}});
                        text += a.str() + " x " + b.str() + " = " + fusion_text(prod) + "\n";
                    }
            } else {
                auto sectors = svir::all_sectors(fn);
                for (const auto& a : sectors)
                    for (const auto& b : sectors) {
                        auto prod = svir::fuse(a, b);
                        rows.push_back(Json{{"a", svir::to_json(a)},
                                            {"b", svir::to_json(b)},
                                            {"product", svir::to_json(prod)}});
                        text += a.str() + " x " + b.str() + " = " + fusion_text(prod) + "\n";
                    }
            }
            emit(opt, "fuse", input, rows, text);
            return;
        }
        if (fa.empty() || fb.empty())
            throw CLI::ValidationError("fuse needs --a and --b (or --table)");
        input["a"] = fa;
        input["b"] = fb;
        if (fns) {
            auto prod = svir::fuse_ns(svir::parse_ns_sector(fa, fn), svir::parse_ns_sector(fb, fn));
            emit(opt, "fuse", input, svir::to_json(prod), fusion_text(prod) + "\n");
        } else {
            auto a = svir::parse_sector(fa, fn);
            auto b = svir::parse_sector(fb, fn);
            auto prod = svir::fuse(a, b);
            Json result;
            result["product"] = svir::to_json(prod);
            result["phase_a"] = svir::to_json(svir::statistics_phase(a));
            result["dim1_a"] = svir::is_dim_one(a);
            emit(opt, "fuse", input, result, fusion_text(prod) + "\n");
        }
    });

    // --- classify ----------------------------------------------------------
    auto* cl = app.add_subcommand("classify", "classification for c = 3n/(n+2)");
    long cn = 0, cmax = 0;
    cl->add_option("--n", cn, "single level n");
    cl->add_option("--max-n", cmax, "classify every level 1..M");
    cl->callback([&]() {
        if (cn <= 0 && cmax <= 0)
            throw CLI::ValidationError("classify needs --n or --max-n");
        long lo = cn > 0 ? cn : 1;
        long hi = cmax > 0 ? cmax : cn;
        Json levels = Json::array();
        std::string text;
        for (long n = lo; n <= hi; ++n) {
            auto records = svir::classify(n);
            auto maximal = svir::phase_one_maximal_subgroups(n);
            Json level;
            level["n"] = n;
            level["c"] = svir::discrete_c(n).str();
            Json max_json = Json::array();
            for (const auto& g : maximal)
                max_json.push_back(svir::to_json(g));
            level["maximal_phase_one_subgroups"] = max_json;
            level["case_formula"] = svir::to_json(svir::case_formula_prediction(n));
            Json recs = Json::array();
            for (const auto& rec : records)
                recs.push_back(svir::to_json(rec));
            level["extensions"] = recs;
            levels.push_back(level);

            auto pred = svir::case_formula_prediction(n);
            text += "n=" + std::to_string(n) + " (c=" + svir::discrete_c(n).str() + "): case " +
                    svir::case_tag_name(pred.case_tag) + ", k=" + std::to_string(pred.k);
            if (pred.case_b_half_phase)
                text += ", phase((0,k/2,0))=" + pred.case_b_half_phase->str();
            text += ", " + std::to_string(records.size()) + " extensions\n";
            for (const auto& rec : records) {
                text += "  [" + std::string(svir::extension_kind_tag(rec.kind)) + "] {";
                for (std::size_t i = 0; i < rec.sectors.size(); ++i)
                    text += (i ? ", " : "") + rec.sectors[i].str();
                text += "}  " + rec.provenance + "\n";
            }
        }
        Json input{{"n", cn}, {"max_n", cmax}};
        emit(opt, "classify", input, levels, text);
    });

    // --- chiral-ring ---------------------------------------------------------
    auto* ch = app.add_subcommand("chiral-ring", "chiral labels and ring structure");
    long chn = 1;
    ch->add_option("--n", chn, "level n")->required();
    ch->callback([&]() {
        auto labels = svir::chiral_labels(chn);
        Json result;
        Json labs = Json::array();
        for (const auto& lab : labels)
            labs.push_back(svir::to_json(lab));
        result["chiral_labels"] = labs;
        Json products = Json::array();
        std::string text = "chiral labels (l,-l), l=0.." + std::to_string(chn) + "\n";
        for (long l1 = 0; l1 <= chn; ++l1)
            for (long l2 = l1; l2 <= chn; ++l2) {
                auto prod = svir::chiral_product({{l1, 1}}, {{l2, 1}}, chn);
                Json p{{"l1", l1}, {"l2", l2}};
                p["product"] = prod.empty() ? Json(nullptr) : Json(prod.begin()->first);
                products.push_back(p);
                text += "  (" + std::to_string(l1) + ",-" + std::to_string(l1) + ") * (" +
                        std::to_string(l2) + ",-" + std::to_string(l2) + ") = " +
                        (prod.empty() ? "0"
                                      : "(" + std::to_string(prod.begin()->first) + ",-" +
                                            std::to_string(prod.begin()->first) + ")") +
                        "\n";
            }
        result["products"] = products;
        result["isomorphic_to"] = "Z[x]/(x^" + std::to_string(chn + 1) + ")";
        emit(opt, "chiral-ring", Json{{"n", chn}}, result, text);
    });

    // --- flow ----------------------------------------------------------------
    auto* fl = app.add_subcommand("flow", "spectral flow of a discrete label");
    long fln = 1;
    std::string fllabel, flt = "-1/2", fltype = "NS";
    fl->add_option("--n", fln, "level n")->required();
    fl->add_option("--label", fllabel, "label l,m")->required();
    fl->add_option("--t", flt, "flow parameter: 1/2 or -1/2")->capture_default_str();
    fl->add_option("--type", fltype, "source sector: NS or R")->capture_default_str();
    fl->callback([&]() {
        auto type = parse_type(fltype);
        long l, m;
        if (std::sscanf(fllabel.c_str(), "%ld,%ld", &l, &m) != 2)
            throw CLI::ValidationError("--label must be l,m");
        svir::DiscreteLabel lab{fln, l, m};
        auto target = svir::flow_discrete_label(fln, lab, type, Rational::parse(flt));
        auto w = type == svir::SectorType::NS ? svir::hq_ns(lab) : svir::hq_r(lab);
        auto wt = type == svir::SectorType::NS ? svir::hq_r(target) : svir::hq_ns(target);
        Json result;
        result["source"] = svir::to_json(lab);
        result["source_type"] = svir::sector_tag(type);
        result["target"] = svir::to_json(target);
        result["target_type"] =
            svir::sector_tag(type == svir::SectorType::NS ? svir::SectorType::R
                                                          : svir::SectorType::NS);
        result["target_h"] = wt.h.str();
        result["target_q"] = wt.q.str();
        std::string text = svir::sector_tag(type) + std::string(" ") + lab.str() + " --t=" + flt +
                           "--> " + result["target_type"].get<std::string>() + " " +
                           target.str() + "  (h=" + wt.h.str() + ", q=" + wt.q.str() + ")\n";
        (void)w;
        Json input{{"n", fln}, {"label", fllabel}, {"t", flt}, {"type", fltype}};
        emit(opt, "flow", input, result, text);
    });

    // --- index -----------------------------------------------------------------
    auto* ix = app.add_subcommand("index", "index pairing matrix over the Ramond vacua");
    long ixn = 1;
    std::string ixcutoff = "2";
    ix->add_option("--n", ixn, "level n")->required();
    ix->add_option("--cutoff", ixcutoff, "module truncation level")->capture_default_str();
    ix->callback([&]() {
        auto rvac = svir::ramond_vacuum_sectors(ixn);
        auto matrix = svir::index_pairing_matrix(ixn, Rational::parse(ixcutoff));
        Json result;
        Json labs = Json::array();
        for (const auto& lab : rvac)
            labs.push_back(svir::to_json(lab));
        result["ramond_vacua"] = labs;
        result["pairing"] = matrix;
        std::string text = "Ramond vacua:";
        for (const auto& lab : rvac)
            text += " " + lab.str();
        text += "\npairing matrix:\n";
        for (const auto& row : matrix) {
            text += " ";
            for (long v : row)
                text += " " + std::to_string(v);
            text += "\n";
        }
        Json input{{"n", ixn}, {"cutoff", ixcutoff}};
        emit(opt, "index", input, result, text);
    });

    // --- verify-all --------------------------------------------------------------
    auto* va = app.add_subcommand("verify-all", "run the full invariant suite");
    long vmax = 0;
    va->add_option("--max-n", vmax, "override the classification sweep bound");
    va->callback([&]() {
        svir::CheckOptions copts;
        copts.max_n = vmax;
        auto results = svir::run_all_checks(copts);
        Json rows = Json::array();
        std::string text;
        int failures = 0;
        for (const auto& r : results) {
            rows.push_back(svir::to_json(r));
            char line[160];
            std::snprintf(line, sizeof(line), "%-4s %-4s %s\n", r.pass ? "PASS" : "FAIL",
                          r.id.c_str(), r.description.c_str());
            text += line;
            if (!r.detail.empty())
                text += "          " + r.detail + "\n";
            if (!r.pass)
                ++failures;
        }
        text += std::to_string(results.size() - failures) + "/" + std::to_string(results.size()) +
                " checks passed\n";
        emit(opt, "verify-all", Json{{"max_n", vmax}}, rows, text);
        if (failures > 0)
            throw std::domain_error(std::to_string(failures) + " checks failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        Json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        Json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err{{"error", std::string("internal: ") + e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
