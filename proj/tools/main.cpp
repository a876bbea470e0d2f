// Command-line front end: parse ideal files, dispatch computations, run
// randomized verification suites, and emit human-readable and JSON reports.
//
// Exit codes: 0 success (and checks hold), 1 a check failed, 2 usage or input
// error.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ginred/verify.hpp"

using namespace ginred;
using nlohmann::json;

#ifndef GINRED_DATA_DIR
#define GINRED_DATA_DIR "data"
#endif

namespace {

struct Options {
    std::string file;
    std::string order = "degrevlex";
    std::uint64_t seed = 1;
    int max_degree = 0;
    long long characteristic = 32003;
    std::string json_path;
    int trials = 2;
};

json g_report = json::object();

void emit_report(const Options& opt, int exit_code) {
    g_report["pass"] = exit_code == 0;
    if (!opt.json_path.empty()) {
        std::ofstream out(opt.json_path);
        out << g_report.dump(2) << "\n";
    }
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

template <class Fn>
int with_field(const ParsedIdeal& parsed, Fn&& fn) {
    if (parsed.characteristic == 0) {
        auto [ring, gens] = materialize(parsed, Rationals());
        return fn(ring, std::move(gens));
    }
    auto [ring, gens] = materialize(parsed, Fp(static_cast<std::uint64_t>(parsed.characteristic)));
    return fn(ring, std::move(gens));
}

template <FieldContext K>
MonomialIdeal require_monomial(const RingPtr<K>& ring, std::span<const Poly<K>> gens) {
    std::vector<Monomial> monos;
    for (const auto& g : gens) {
        if (g.nterms() != 1) throw Error("this command needs a monomial ideal");
        monos.push_back(g.terms().front().mono);
    }
    return MonomialIdeal::minimalize(ring->nvars, std::move(monos));
}

int default_degree_bound(int max_degree, int fallback) {
    return max_degree > 0 ? max_degree : fallback;
}

json verify_json(const VerifyResult& r) { return r.summary(); }

int finish_verify(const Options& opt, const VerifyResult& r) {
    g_report["results"] = verify_json(r);
    std::cout << r.name << ": " << (r.total - r.failures) << "/" << r.total << " checks passed";
    if (r.report_only) std::cout << " (report-only mode)";
    std::cout << "\n";
    for (const auto& f : r.failing_cases) std::cout << "  failed: " << f << "\n";
    return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for Groebner bases, generic initial ideals,\n"
                 "Hilbert functions, reduction numbers, and analytic spreads"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--order", opt.order,
                   "term order: lex | degrevlex | weight:w1,w2,... | perm:i1,i2,... | permrl:...");
    app.add_option("--seed", opt.seed, "seed for every randomized step");
    app.add_option("--max-degree", opt.max_degree, "degree bound for graded computations");
    app.add_option("--char", opt.characteristic, "field characteristic for generated corpora");
    app.add_option("--json", opt.json_path, "write a JSON run report to this path");
    app.add_option("--trials", opt.trials, "independent trials for generic initial ideals");

    std::string tau = "lex";
    int p_sections = 0;
    bool direct_route = false, gin_route = false;
    std::string vars_csv;
    int lemma = 14;
    int count = 0;
    std::string out_dir = "corpus";
    std::string which;
    std::string data_dir = GINRED_DATA_DIR;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.file, "ideal file")->required()->check(CLI::ExistingFile);
    };

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
    add_file(gb);
    auto* inideal = app.add_subcommand("inideal", "initial ideal (minimal monomial generators)");
    add_file(inideal);
    auto* inweight = app.add_subcommand("inweight", "weight-order initial forms (use --order weight:...)");
    add_file(inweight);
    auto* gin_cmd = app.add_subcommand("gin", "generic initial ideal");
    add_file(gin_cmd);
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of the quotient");
    add_file(hilbert_cmd);
    auto* dim_cmd = app.add_subcommand("dim", "Krull dimension of the quotient");
    add_file(dim_cmd);
    auto* rnum = app.add_subcommand("reduction-number", "reduction number of the quotient");
    add_file(rnum);
    auto* lexseg = app.add_subcommand("lex-segment", "lex-segment ideal with the same Hilbert function");
    add_file(lexseg);
    auto* pol = app.add_subcommand("polarize", "polarization of a monomial ideal");
    add_file(pol);
    pol->add_option("--vars", vars_csv, "comma-separated 1-based variables (default: all)");
    auto* gbd = app.add_subcommand("gens-by-degree", "minimal generator counts per degree");
    add_file(gbd);
    auto* shf = app.add_subcommand("section-hf", "Hilbert function after cutting by p generic linear forms");
    add_file(shf);
    shf->add_option("--p", p_sections, "number of generic linear forms")->required();
    shf->add_flag("--direct", direct_route, "direct route: Groebner basis of I plus random forms");
    shf->add_flag("--gin", gin_route, "generic-initial route (default)");
    auto* thm = app.add_subcommand("check-thm11", "dominance of section Hilbert functions");
    add_file(thm);
    thm->add_option("--tau", tau, "order for the initial ideal (or weight:...)");
    thm->add_option("--p", p_sections, "number of generic linear forms")->required();
    auto* vas = app.add_subcommand("vasconcelos", "reduction number vs the initial ideal's");
    add_file(vas);
    vas->add_option("--tau", tau, "order for the initial ideal");
    auto* lexchk = app.add_subcommand("lex-check", "reduction number vs the lex-segment ideal's");
    add_file(lexchk);
    auto* spread = app.add_subcommand("analytic-spread", "Krull dimension of the fiber ring");
    add_file(spread);
    auto* wedge = app.add_subcommand("wedge", "randomized wedge-power dominance suites");
    wedge->add_option("--lemma", lemma, "which suite: 13, 14, 15, or 16")
        ->check(CLI::IsMember({13, 14, 15, 16}));
    wedge->add_option("--count", count, "instances (default 200)");
    auto* corpus_cmd = app.add_subcommand("corpus", "write a corpus of seeded random ideals");
    corpus_cmd->add_option("--out", out_dir, "output directory");
    corpus_cmd->add_option("--count", count, "number of ideals (default 100)");
    int nv = 4, mg = 4, md = 3, mt = 4;
    corpus_cmd->add_option("--n-vars", nv, "maximal variable count");
    corpus_cmd->add_option("--max-gens", mg, "maximal generators per ideal");
    corpus_cmd->add_option("--max-deg", md, "maximal generator degree");
    corpus_cmd->add_option("--max-terms", mt, "maximal terms per generator");
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd
        ->add_option("which", which,
                     "thm11 | lemma12 | lemma13 | lemma14 | lemma15 | cor16 | prop21 | paper-examples")
        ->required();
    verify_cmd->add_option("--count", count, "corpus size / instance count");
    verify_cmd->add_option("--n-vars", nv, "maximal variable count");
    verify_cmd->add_option("--max-gens", mg, "maximal generators per ideal");
    verify_cmd->add_option("--max-deg", md, "maximal generator degree");
    verify_cmd->add_option("--max-terms", mt, "maximal terms per generator");
    verify_cmd->add_option("--data", data_dir, "directory with the shipped example files");

    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();
    CLI11_PARSE(app, argc, argv);

    g_report["command"] = argv[1] ? std::string(argv[1]) : "";
    g_report["seed"] = opt.seed;
    Timer timer;

    int code = 0;
    try {
        if (*gb || *inideal || *inweight || *gin_cmd || *hilbert_cmd || *dim_cmd || *rnum ||
            *lexseg || *pol || *gbd || *shf || *thm || *vas || *lexchk || *spread) {
            ParsedIdeal parsed = parse_ideal_file(opt.file);
            g_report["inputs"] = {{"file", opt.file}, {"characteristic", parsed.characteristic}};

            code = with_field(parsed, [&]<FieldContext K>(const RingPtr<K>& R,
                                                          std::vector<Poly<K>> gens) -> int {
                std::span<const Poly<K>> gspan(gens);
                TermOrder order = TermOrder::parse(opt.order);

                if (*gb) {
                    auto basis = buchberger(gspan, order, opt.max_degree);
                    json out = json::array();
                    for (const auto& g : basis.generators) {
                        std::cout << g.str() << "\n";
                        out.push_back(g.str());
                    }
                    g_report["results"] = {{"order", order.describe()}, {"basis", out}};
                    return 0;
                }
                if (*inideal) {
                    auto in = initial_ideal(R, gspan, order, opt.max_degree);
                    std::cout << to_string(in, R->names) << "\n";
                    g_report["results"] = {{"order", order.describe()},
                                           {"generators", to_string(in, R->names)}};
                    return 0;
                }
                if (*inweight) {
                    if (order.kind() != TermOrder::Kind::weighted)
                        throw Error("inweight needs --order weight:w1,w2,...");
                    auto forms = initial_ideal_weight(gspan, order.weights(), opt.max_degree);
                    json out = json::array();
                    for (const auto& f : forms) {
                        std::cout << f.str() << "\n";
                        out.push_back(f.str());
                    }
                    g_report["results"] = {{"weights", order.weights()}, {"forms", out}};
                    return 0;
                }
                if (*gin_cmd) {
                    GinResult res = gin(R, gspan, order, opt.trials, opt.seed, opt.max_degree);
                    std::cout << to_string(res.ideal, R->names) << "\n";
                    g_report["results"] = {{"order", order.describe()},
                                           {"generators", to_string(res.ideal, R->names)},
                                           {"seeds", res.seeds},
                                           {"stable", res.stable}};
                    return 0;
                }
                if (*hilbert_cmd) {
                    int D = default_degree_bound(opt.max_degree, 10);
                    auto hf = hilbert_function(initial_ideal(R, gspan, TermOrder::degrevlex(), D), D);
                    std::cout << hf.str() << "\n";
                    g_report["results"] = to_json(hf);
                    return 0;
                }
                if (*dim_cmd) {
                    int d = krull_dim(R, gspan);
                    std::cout << d << "\n";
                    g_report["results"] = {{"dimension", d}};
                    return 0;
                }
                if (*rnum) {
                    int r = reduction_number(R, gspan, opt.seed, opt.max_degree);
                    std::cout << r << "\n";
                    g_report["results"] = {{"reductionNumber", r}};
                    return 0;
                }
                if (*lexseg) {
                    const int n = R->nvars;
                    MonomialIdeal in_rl = initial_ideal(R, gspan, TermOrder::degrevlex());
                    int D = default_degree_bound(opt.max_degree, in_rl.max_generator_degree() + n);
                    auto hf = hilbert_function(in_rl, D);
                    std::vector<long long> dims;
                    for (int j = 0; j <= D; ++j) dims.push_back(count_monomials(n, j) - hf[j]);
                    MonomialIdeal L = lex_segment_ideal(n, dims);
                    bool stabilized = L.max_generator_degree() <= D - n;
                    std::cout << to_string(L, R->names) << "\n";
                    if (!stabilized)
                        std::cout << "note: new minimal generators near the bound " << D
                                  << "; rerun with a larger --max-degree\n";
                    g_report["results"] = {{"generators", to_string(L, R->names)},
                                           {"bound", D},
                                           {"stabilized", stabilized}};
                    return 0;
                }
                if (*pol) {
                    MonomialIdeal I = require_monomial(R, gspan);
                    std::vector<int> which_vars;
                    if (!vars_csv.empty()) {
                        std::stringstream ss(vars_csv);
                        std::string part;
                        while (std::getline(ss, part, ','))
                            which_vars.push_back(std::stoi(part) - 1);
                    }
                    Polarization P = polarize(I, R->names, which_vars);
                    std::cout << "ring";
                    for (size_t i = 0; i < P.names.size(); ++i)
                        std::cout << (i ? "," : " ") << P.names[i];
                    std::cout << "\n" << to_string(P.ideal, P.names) << "\n";
                    json origin = json::array();
                    for (size_t v = 0; v < P.origin.size(); ++v)
                        origin.push_back({{"variable", P.names[v]},
                                          {"source", R->names[static_cast<size_t>(P.origin[v].first)]},
                                          {"copy", P.origin[v].second}});
                    g_report["results"] = {{"generators", to_string(P.ideal, P.names)},
                                           {"origin", origin}};
                    return 0;
                }
                if (*gbd) {
                    int D = default_degree_bound(opt.max_degree, 6);
                    auto counts = minimal_generator_counts(gspan, D);
                    for (int j = 0; j <= D; ++j)
                        std::cout << j << ": " << counts[static_cast<size_t>(j)] << "\n";
                    g_report["results"] = {{"counts", counts}};
                    return 0;
                }
                if (*shf) {
                    int D = default_degree_bound(opt.max_degree, 10);
                    HilbertFunction hf =
                        direct_route
                            ? direct_section_hilbert(R, gspan, p_sections, opt.seed, D)
                            : generic_section_hilbert(R, gspan, p_sections, D, opt.seed, opt.trials);
                    std::cout << hf.str() << "\n";
                    g_report["results"] = to_json(hf);
                    g_report["results"]["route"] = direct_route ? "direct" : "gin";
                    return 0;
                }
                if (*thm) {
                    int D = default_degree_bound(opt.max_degree, 8);
                    TermOrder tau_order = TermOrder::lex();
                    DominanceReport rep;
                    if (tau.rfind("weight:", 0) == 0) {
                        tau_order = TermOrder::parse(tau);
                        rep = dominance_check_weight(R, gspan, tau_order.weights(), p_sections, D,
                                                     opt.seed);
                    } else {
                        tau_order = TermOrder::parse(tau);
                        rep = dominance_check(R, gspan, tau_order, p_sections, D, opt.seed);
                    }
                    std::cout << "holds=" << (rep.holds ? "true" : "false") << "\n";
                    std::cout << "lhs: " << rep.lhs.str() << "\nrhs: " << rep.rhs.str() << "\n";
                    g_report["results"] = to_json(rep);
                    g_report["results"]["tau"] = tau_order.describe();
                    return rep.holds ? 0 : 1;
                }
                if (*vas) {
                    auto c = vasconcelos_check(R, gspan, TermOrder::parse(tau), opt.seed);
                    std::cout << "r(R/I) = " << c.r_ideal << ", r(R/in(I)) = " << c.r_initial
                              << ", holds=" << (c.holds ? "true" : "false") << "\n";
                    g_report["results"] = to_json(c);
                    return c.holds ? 0 : 1;
                }
                if (*lexchk) {
                    auto c = lex_reduction_check(R, gspan, opt.seed);
                    std::cout << "r(R/I) = " << c.r_ideal << ", r(R/I^lex) = " << c.r_lex
                              << ", holds=" << (c.holds ? "true" : "false") << "\n";
                    g_report["results"] = to_json(c);
                    return c.holds ? 0 : 1;
                }
                if (*spread) {
                    int l = analytic_spread(R, gspan);
                    std::cout << l << "\n";
                    g_report["results"] = {{"analyticSpread", l}};
                    return 0;
                }
                return 2;
            });
        } else if (*wedge) {
            int instances = count > 0 ? count : 200;
            VerifyResult r;
            switch (lemma) {
                case 13: r = verify_lemma13(); break;
                case 14: r = verify_lemma14(instances, opt.seed); break;
                case 15: r = verify_lemma15(instances, opt.seed); break;
                default: r = verify_cor16(instances, opt.seed); break;
            }
            code = finish_verify(opt, r);
        } else if (*corpus_cmd) {
            CorpusSpec spec{count > 0 ? count : 100, opt.seed, nv, mg, md, mt, opt.characteristic};
            spec.validate();
            std::filesystem::create_directories(out_dir);
            json manifest = {{"spec",
                              {{"count", spec.count},
                               {"seed", spec.seed},
                               {"nVars", spec.n_vars},
                               {"maxGens", spec.max_gens},
                               {"maxDegree", spec.max_degree},
                               {"maxTerms", spec.max_terms},
                               {"characteristic", spec.characteristic}}},
                             {"files", json::array()}};
            for (int idx = 0; idx < spec.count; ++idx) {
                char name[32];
                std::snprintf(name, sizeof name, "ideal_%03d.ideal", idx);
                std::string text;
                std::uint64_t ideal_seed = 0;
                int ideal_nvars = 0;
                if (spec.characteristic == 0) {
                    auto ci = corpus_ideal(spec, idx, Rationals());
                    text = format_ideal<Rationals>(ci.ring, ci.gens);
                    ideal_seed = ci.seed;
                    ideal_nvars = ci.ring->nvars;
                } else {
                    auto ci = corpus_ideal(spec, idx,
                                           Fp(static_cast<std::uint64_t>(spec.characteristic)));
                    text = format_ideal<Fp>(ci.ring, ci.gens);
                    ideal_seed = ci.seed;
                    ideal_nvars = ci.ring->nvars;
                }
                std::ofstream(std::filesystem::path(out_dir) / name) << text;
                manifest["files"].push_back(
                    {{"name", name}, {"seed", ideal_seed}, {"nVars", ideal_nvars}});
            }
            std::ofstream(std::filesystem::path(out_dir) / "manifest.json")
                << manifest.dump(2) << "\n";
            std::cout << "wrote " << (count > 0 ? count : 100) << " ideals to " << out_dir << "\n";
            g_report["results"] = manifest;
        } else if (*verify_cmd) {
            CorpusSpec spec{count > 0 ? count : 25, opt.seed, nv, mg, md, mt, opt.characteristic};
            int D = default_degree_bound(opt.max_degree, 8);
            VerifyResult r;
            if (which == "thm11") {
                r = spec.characteristic == 0
                        ? verify_thm11(spec, D, Rationals())
                        : verify_thm11(spec, D, Fp(static_cast<std::uint64_t>(spec.characteristic)));
            } else if (which == "lemma12") {
                r = spec.characteristic == 0
                        ? verify_lemma12(spec, D, Rationals())
                        : verify_lemma12(spec, D,
                                         Fp(static_cast<std::uint64_t>(spec.characteristic)));
            } else if (which == "lemma13") {
                r = verify_lemma13();
            } else if (which == "lemma14") {
                r = verify_lemma14(count > 0 ? count : 200, opt.seed);
            } else if (which == "lemma15") {
                r = verify_lemma15(count > 0 ? count : 200, opt.seed);
            } else if (which == "cor16") {
                r = verify_cor16(count > 0 ? count : 200, opt.seed);
            } else if (which == "prop21") {
                r = spec.characteristic == 0
                        ? verify_prop21(spec, Rationals())
                        : verify_prop21(spec, Fp(static_cast<std::uint64_t>(spec.characteristic)));
            } else if (which == "paper-examples") {
                r = verify_paper_examples(data_dir);
            } else {
                throw Error("unknown suite '" + which + "'");
            }
            code = finish_verify(opt, r);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    }

    g_report["timings"] = {{"totalMs", timer.ms()}};
    emit_report(opt, code);
    return code;
}
