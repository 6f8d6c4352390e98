#include "pte/cli.hpp"

#include "pte/bounds.hpp"
#include "pte/constructions.hpp"
#include "pte/design_json.hpp"
#include "pte/designs.hpp"
#include "pte/error.hpp"
#include "pte/lifting.hpp"
#include "pte/oracle.hpp"
#include "pte/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace pte::cli {

namespace {

struct Globals {
    std::size_t threads = default_threads();
    std::string out;
};

BuildOptions build_options(const Globals& g) { return {true, g.threads}; }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

CommandResult ok(Json report) { return {Success, std::move(report), false, {}, {}, {}}; }

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
    std::string input;
    std::string checks;
    unsigned max_degree = 0;
};

CommandResult do_verify(const VerifyArgs& a, const Globals& g) {
    const auto inst = instance_from_json(read_json_file(a.input));
    const auto report = verify(inst, g.threads);
    Json out = to_json(report);
    bool pass = report.holds;
    std::string diag;
    if (!report.holds) diag = "verification failed: " + report.first_failure->describe() + "\n";
    Json checks = Json::object();
    for (const auto& name : split(a.checks, ',')) {
        if (name == "proper") {
            const auto ranks = class_ranks(inst);
            const bool holds = is_proper(inst);
            checks["proper"] = {{"holds", holds}, {"ranks", ranks}, {"dimension", inst.dimension()}};
            pass = pass && holds;
        } else if (name == "symmetric") {
            const bool holds = is_symmetric(inst);
            checks["symmetric"] = {{"holds", holds}};
            pass = pass && holds;
        } else if (name == "linear") {
            const auto lin = is_linear(inst, {true, 16});
            const char* status = lin.status == LinearityResult::Status::Linear      ? "linear"
                                 : lin.status == LinearityResult::Status::NotLinear ? "not-linear"
                                                                                    : "not-checked";
            Json j = {{"holds", lin.status == LinearityResult::Status::Linear}, {"status", status}};
            j["subset"] = lin.subset;
            checks["linear"] = std::move(j);
            pass = pass && lin.status == LinearityResult::Status::Linear;
        } else if (name == "ideal") {
            const bool holds = is_ideal(inst);
            checks["ideal"] = {{"holds", holds}, {"size", inst.class_size()}, {"degree", inst.degree()}};
            pass = pass && holds;
        } else if (name == "degree") {
            // The claimed degree is exact: it verifies and degree m + 1 does not.
            const unsigned k = max_verified_degree(inst, inst.degree() + 1, g.threads);
            checks["degree"] = {{"holds", k == inst.degree()}, {"claimed", inst.degree()}, {"maxVerified", k}};
            pass = pass && k == inst.degree();
        } else {
            throw InvalidInput("unknown check '" + name + "' (expected proper, symmetric, linear, ideal, degree)");
        }
    }
    if (!checks.empty()) out["checks"] = std::move(checks);
    if (a.max_degree > 0) out["maxVerifiedDegree"] = max_verified_degree(inst, a.max_degree, g.threads);
    CommandResult r = ok(std::move(out));
    r.exit_code = pass ? Success : Negative;
    r.diagnostics = diag;
    return r;
}

// ---- construct -----------------------------------------------------------

std::vector<LatPair> pairs_from_json(const Json& j) {
    const Json& arr = j.is_object() && j.contains("pairs") ? j["pairs"] : j;
    require(arr.is_array(), "pairs file must be an array of [phi, psi] pairs or {\"pairs\": [...]}");
    std::vector<LatPair> out;
    for (const auto& p : arr) {
        require(p.is_array() && p.size() == 2, "each LAT pair must have two entries");
        out.emplace_back(rational_from_json(p[0]), rational_from_json(p[1]));
    }
    return out;
}

// ---- lift ----------------------------------------------------------------

OrthogonalArray oa_from_json(const Json& j, const char* kind) {
    require(j.is_object() && j.value("kind", "") == kind, std::string("expected a design document of kind \"") + kind + "\"");
    OrthogonalArray oa;
    oa.rows = rows_from_json(j);
    require(!oa.rows.empty(), "array has no rows");
    const auto& params = j.value("params", Json::object());
    if (params.contains("strength")) {
        require(params["strength"].is_number_unsigned(), "params.strength must be a nonnegative integer");
        oa.strength = params["strength"].get<unsigned>();
    } else {
        oa.strength = static_cast<unsigned>(oa.rows.front().size());
    }
    oa.levels = symbols_of(oa.rows).size();
    return oa;
}

std::vector<Rational> rationals(const Json& j, const char* name) {
    require(j.contains(name) && j[name].is_array(), std::string("missing array \"") + name + "\"");
    std::vector<Rational> out;
    for (const auto& x : j[name]) out.push_back(rational_from_json(x));
    return out;
}

SignedBase base_from_json(const Json& j) {
    require(j.is_object(), "base document must be an object with arrays \"a\" and \"b\"");
    return {rationals(j, "a"), rationals(j, "b")};
}

Triple triple(const std::vector<Rational>& v, const char* name) {
    require(v.size() == 3, std::string("\"") + name + "\" must hold exactly three values");
    return {v[0], v[1], v[2]};
}

// ---- bound ---------------------------------------------------------------

DomainSpec parse_domain(const std::string& text, std::size_t r) {
    if (text == "hypercube") return DomainSpec::hypercube(r);
    if (text.rfind("sphere:", 0) == 0) {
        const std::string k = text.substr(7);
        require(!k.empty() && k.find_first_not_of("0123456789") == std::string::npos,
                "sphere weight must be a nonnegative integer: " + text);
        return DomainSpec::sphere(r, std::stoul(k));
    }
    if (text.rfind("explicit:", 0) == 0) {
        const Json j = read_json_file(text.substr(9));
        const Json& arr = j.is_object() && j.contains("points") ? j["points"] : j;
        require(arr.is_array(), "explicit domain file must be an array of points or {\"points\": [...]}");
        std::vector<Point> pts;
        for (const auto& p : arr) pts.push_back(point_from_json(p));
        return DomainSpec::explicit_points(std::move(pts));
    }
    throw InvalidInput("unknown domain '" + text + "' (expected hypercube, sphere:K or explicit:FILE)");
}

Json certificate_json(const BoundCertificate& c, const DomainSpec& d, unsigned t) {
    Json j;
    j["domain"] = d.describe();
    j["t"] = t;
    j["n"] = c.n;
    j["dim"] = c.dim;
    j["rankA"] = c.rank_a;
    j["rankB"] = c.rank_b;
    j["rankJoint"] = c.rank_joint;
    j["proper"] = c.proper;
    j["boundHolds"] = to_string(c.bound);
    j["tight"] = c.tight;
    return j;
}

// ---- design --------------------------------------------------------------

Json check_design(const Json& j, unsigned t_override) {
    require(j.is_object() && j.contains("kind") && j["kind"].is_string(), "design document needs a \"kind\"");
    const std::string kind = j["kind"];
    Json out;
    out["kind"] = kind;
    if (kind == "oa" || kind == "type1oa") {
        const auto oa = oa_from_json(j, kind.c_str());
        const unsigned t = t_override > 0 ? t_override : oa.strength;
        const auto c = kind == "oa" ? verify_oa(oa.rows, t) : verify_type1_oa(oa.rows, t);
        out["holds"] = c.holds;
        out["strength"] = t;
        out["levels"] = oa.levels;
        if (c.holds) {
            out["index"] = c.index;
        } else {
            Json w;
            w["columns"] = c.columns;
            w["tuple"] = to_json(Point(c.tuple));
            w["count"] = c.count;
            out["witness"] = std::move(w);
        }
    } else if (kind == "gdd") {
        const auto d = gdd_from_json(j);
        const auto c = verify_gdd(d);
        out["holds"] = c.holds;
        if (!c.holds) {
            out["reason"] = c.reason;
            out["witness"] = c.witness;
        }
    } else if (kind == "latin") {
        out["holds"] = verify_latin(grid_from_json(j));
    } else if (kind == "hadamard") {
        out["holds"] = is_hadamard(grid_from_json(j, "rows"));
    } else {
        throw InvalidInput("unknown design kind '" + kind + "'");
    }
    return out;
}

struct EmitArgs {
    std::string name;
    unsigned s = 0;
    std::size_t r = 0;
    unsigned long p = 0;
    std::size_t order = 0;
};

Json pair_json(const std::pair<Gdd, Gdd>& p) { return Json::array({to_json(p.first), to_json(p.second)}); }

Json emit_design(const EmitArgs& a) {
    const auto& n = a.name;
    if (n == "trivial-oa") {
        require(a.s > 0 && a.r > 0, "trivial-oa needs --s and --r");
        return to_json(trivial_oa(a.s, a.r));
    }
    if (n == "parity") {
        require(a.r > 0, "parity needs --r");
        const auto [e, o] = parity_split(a.r);
        return Json::array({to_json(e), to_json(o)});
    }
    if (n == "type1-perm" || n == "type1-cyclic") {
        OrthogonalArray oa;
        oa.rows = n == "type1-perm" ? type1_permutation_array() : type1_cyclic_array();
        oa.levels = 3;
        oa.strength = n == "type1-perm" ? 3 : 1;
        oa.index = 1;
        return to_json(oa, true);
    }
    if (n == "fano") return pair_json(fano_pair());
    if (n == "witt") return pair_json(witt_pair());
    if (n == "gddz8") return pair_json(gdd_z8_pair());
    if (n == "affine") return to_json(affine_plane_gdd());
    if (n == "paley") {
        require(a.p > 0, "paley needs --p");
        const auto d = paley(a.p);
        return Json::array({hadamard_to_json(d.hadamard), to_json(d.residues), to_json(d.nonresidues)});
    }
    if (n == "latin") {
        if (a.order == 2) return latin_to_json({{1, 2}, {2, 1}});
        if (a.order == 3) return latin_to_json({{1, 3, 2}, {2, 1, 3}, {3, 2, 1}});
        throw InvalidInput("latin needs --order 2 or 3");
    }
    throw InvalidInput("unknown design '" + n +
                       "' (expected trivial-oa, parity, type1-perm, type1-cyclic, fano, witt, gddz8, affine, paley, latin)");
}

} // namespace

CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"Exact Prouhet-Tarry-Escott constructions, verification and bounds", "pte"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--threads", g.threads, "worker threads for verification")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "write the report to FILE instead of stdout");

    std::function<CommandResult()> action;

    // verify
    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "verify an instance file");
    verify_cmd->add_option("--input", va.input, "instance JSON")->required();
    verify_cmd->add_option("--check", va.checks, "comma list of proper,symmetric,linear,ideal,degree");
    verify_cmd->add_option("--max-degree", va.max_degree, "also report the largest verified degree up to CAP");
    verify_cmd->callback([&] { action = [&] { return do_verify(va, g); }; });

    // construct
    auto* construct = app.add_subcommand("construct", "build a catalogued instance");
    construct->require_subcommand(1);
    const auto simple = [&](const char* name, const char* help, std::function<PteInstance(const BuildOptions&)> f) {
        construct->add_subcommand(name, help)->callback([&, f] { action = [&, f] { return ok(to_json(f(build_options(g)))); }; });
    };
    simple("halving", "parity halves of {0,1}^3", [](const BuildOptions& o) { return halving_instance(o); });
    simple("fano", "Fano plane orbit pair", [](const BuildOptions& o) { return fano_instance(o); });
    simple("witt", "Witt 4-(23,7,1) pair", [](const BuildOptions& o) { return witt_instance(o); });
    simple("gddz8", "GDD pair on Z_8", [](const BuildOptions& o) { return gdd_z8_instance(o); });
    simple("type1", "Type-I pair in the plane", [](const BuildOptions& o) { return type1_direct_instance(o); });

    std::size_t parity_r = 0;
    auto* parity = construct->add_subcommand("parity", "parity halves of {0,1}^r");
    parity->add_option("--r", parity_r)->required();
    parity->callback([&] { action = [&] { return ok(to_json(parity_instance(parity_r, build_options(g)))); }; });

    unsigned lat_k = 0;
    std::string lat_pairs;
    std::vector<std::string> lat_thetas;
    auto* lat = construct->add_subcommand("lat", "recursive doubling in the plane");
    lat->add_option("--k", lat_k)->required();
    lat->add_option("--pairs", lat_pairs, "JSON file of [phi, psi] pairs");
    lat->add_option("--thetas", lat_thetas, "theta_2,...,theta_k")->delimiter(',');
    lat->callback([&] {
        action = [&] {
            LatGenerator gen;
            gen.pairs = lat_pairs.empty() ? default_lat_pairs(std::max(2u, lat_k)) : pairs_from_json(read_json_file(lat_pairs));
            for (const auto& t : lat_thetas) gen.thetas.push_back(Rational::parse(t));
            const auto res = lat_construction(gen, lat_k, build_options(g));
            CommandResult r = ok(to_json(res.instance));
            std::string th;
            for (const auto& t : res.thetas) th += (th.empty() ? "" : ",") + t.str();
            r.diagnostics = "thetas: " + (th.empty() ? std::string("(none)") : th) + "\n";
            return r;
        };
    });

    unsigned long paley_p = 0;
    auto* paley_cmd = construct->add_subcommand("paley", "Paley design pair, tight on the sphere");
    paley_cmd->add_option("--p", paley_p)->required();
    paley_cmd->callback([&] {
        action = [&] {
            const auto c = paley_tight(paley_p, build_options(g));
            CommandResult r = ok(to_json(c.instance));
            r.diagnostics = "tight certificate: n = dim = rankJoint = " + std::to_string(c.certificate.dim) + "\n";
            return r;
        };
    });

    unsigned prouhet_alpha = 0, prouhet_m = 0;
    auto* prouhet = construct->add_subcommand("prouhet", "digit-sum partition of 0..alpha^(m+1)-1");
    prouhet->add_option("--alpha", prouhet_alpha)->required();
    prouhet->add_option("--m", prouhet_m)->required();
    prouhet->callback([&] {
        action = [&] { return ok(to_json(prouhet_partition(prouhet_alpha, prouhet_m, build_options(g)))); };
    });

    // lift
    auto* lift = app.add_subcommand("lift", "dimension lifting");
    lift->require_subcommand(1);
    std::string oa_file, base_file;
    unsigned lift_m = 0;
    auto* lift_oa = lift->add_subcommand("oa", "symbol substitution on a full-strength OA");
    lift_oa->add_option("--oa", oa_file, "OA design JSON")->required();
    lift_oa->add_option("--base", base_file, "{\"a\": [...], \"b\": [...]}")->required();
    lift_oa->add_option("--m", lift_m)->required();
    lift_oa->callback([&] {
        action = [&] {
            const auto oa = oa_from_json(read_json_file(oa_file), "oa");
            return ok(to_json(oa_lift(oa, base_from_json(read_json_file(base_file)), lift_m, build_options(g))));
        };
    });
    auto* lift_t1 = lift->add_subcommand("type1", "symbol substitution on a Type-I OA of strength s");
    lift_t1->add_option("--oa", oa_file, "type1oa design JSON")->required();
    lift_t1->add_option("--base", base_file)->required();
    lift_t1->add_option("--m", lift_m)->required();
    lift_t1->callback([&] {
        action = [&] {
            const auto oa = oa_from_json(read_json_file(oa_file), "type1oa");
            const auto res = type1_oa_lift(oa.rows, base_from_json(read_json_file(base_file)), lift_m, build_options(g));
            CommandResult r = ok(to_json(res.instance));
            r.diagnostics = "class ranks: " + Json(res.ranks).dump() + (res.proper ? " (proper)\n" : " (not proper)\n");
            return r;
        };
    });
    std::string s_file, t_file, latin_file;
    auto* lift_cp = lift->add_subcommand("cartesian", "Cartesian product over a Latin square");
    lift_cp->add_option("--s", s_file, "instance JSON with l classes")->required();
    lift_cp->add_option("--t", t_file, "instance JSON with l classes")->required();
    lift_cp->add_option("--latin", latin_file, "latin design JSON (symbols 1..l)")->required();
    lift_cp->callback([&] {
        action = [&] {
            const auto res = cartesian_lift(instance_from_json(read_json_file(s_file)),
                                            instance_from_json(read_json_file(t_file)),
                                            grid_from_json(read_json_file(latin_file)), build_options(g));
            CommandResult r = ok(to_json(res.instance));
            r.diagnostics = "class ranks: " + Json(res.ranks).dump() + "\n";
            return r;
        };
    });
    std::string jac_input;
    unsigned long jac_alpha = 0, jac_ns = 0;
    auto* lift_jac = lift->add_subcommand("jacroux", "reduce 2-D classes to integers");
    lift_jac->add_option("--input", jac_input)->required();
    lift_jac->add_option("--alpha", jac_alpha)->required();
    lift_jac->add_option("--ns", jac_ns, "n_S")->required();
    lift_jac->callback([&] {
        action = [&] {
            return ok(to_json(jacroux_reduce(instance_from_json(read_json_file(jac_input)), jac_alpha, jac_ns,
                                             build_options(g))));
        };
    });
    unsigned bw_dim = 1;
    std::string bw_a, bw_b, bw_triples;
    auto* lift_bw = lift->add_subcommand("borwein", "Borwein family in dimension 1, 2 or 3");
    lift_bw->add_option("--dim", bw_dim)->check(CLI::IsMember({1u, 2u, 3u}));
    lift_bw->add_option("--a", bw_a);
    lift_bw->add_option("--b", bw_b);
    lift_bw->add_option("--triples", bw_triples, "dim 3: {\"a\": [A1,A2,A3], \"b\": [B1,B2,B3]}");
    lift_bw->callback([&] {
        action = [&] {
            const auto opts = build_options(g);
            if (!bw_triples.empty()) {
                require(bw_dim == 3, "--triples needs --dim 3");
                require(bw_a.empty() && bw_b.empty(), "give either --triples or --a/--b");
                const auto j = read_json_file(bw_triples);
                require(j.is_object(), "triples document must be an object");
                return ok(to_json(borwein3d(triple(rationals(j, "a"), "a"), triple(rationals(j, "b"), "b"), opts)));
            }
            require(!bw_a.empty() && !bw_b.empty(), "borwein needs --a and --b (or --triples with --dim 3)");
            const auto a = Rational::parse(bw_a), b = Rational::parse(bw_b);
            if (bw_dim == 1) return ok(to_json(borwein1d(a, b, opts)));
            if (bw_dim == 2) return ok(to_json(borwein2d(a, b, opts)));
            const auto [ta, tb] = borwein_triples(a, b);
            return ok(to_json(borwein3d(ta, tb, opts)));
        };
    });

    // bound
    std::string bound_input, bound_domain;
    unsigned bound_t = 0;
    auto* bound = app.add_subcommand("bound", "rank certificate for the size bound");
    bound->add_option("--input", bound_input)->required();
    bound->add_option("--domain", bound_domain, "hypercube | sphere:K | explicit:FILE")->required();
    bound->add_option("--t", bound_t)->required();
    bound->callback([&] {
        action = [&] {
            const auto inst = instance_from_json(read_json_file(bound_input));
            const auto domain = parse_domain(bound_domain, inst.dimension());
            const auto c = check_bound(inst, domain, bound_t, g.threads);
            CommandResult r = ok(certificate_json(c, domain, bound_t));
            if (c.bound == BoundStatus::Violated) {
                r.exit_code = Negative;
                r.diagnostics = "bound violated: n < dim with full joint rank\n";
            }
            return r;
        };
    });

    // design
    auto* design = app.add_subcommand("design", "check or emit designs");
    design->require_subcommand(1);
    std::string design_input;
    unsigned design_t = 0;
    auto* dcheck = design->add_subcommand("check", "verify a design document");
    dcheck->add_option("--input", design_input)->required();
    dcheck->add_option("--t", design_t, "strength to check (default: params.strength)");
    dcheck->callback([&] {
        action = [&] {
            const auto j = read_json_file(design_input);
            CommandResult r = ok(check_design(j, design_t));
            if (!r.report["holds"].get<bool>()) r.exit_code = Negative;
            return r;
        };
    });
    EmitArgs ea;
    auto* demit = design->add_subcommand("emit", "print a catalogued design");
    demit->add_option("name", ea.name, "trivial-oa | parity | type1-perm | type1-cyclic | fano | witt | gddz8 | affine | paley | latin")
        ->required();
    demit->add_option("--s", ea.s);
    demit->add_option("--r", ea.r);
    demit->add_option("--p", ea.p);
    demit->add_option("--order", ea.order);
    demit->callback([&] { action = [&] { return ok(emit_design(ea)); }; });

    // search
    SearchSpec ss;
    std::size_t search_limit = 0;
    auto* search = app.add_subcommand("search", "exhaustive search, one instance per line");
    search->add_option("--dim", ss.dimension)->required();
    search->add_option("--degree", ss.degree)->required();
    search->add_option("--size", ss.size)->required();
    search->add_option("--classes", ss.classes);
    search->add_option("--min", ss.lo)->required();
    search->add_option("--max", ss.hi)->required();
    search->add_option("--limit", search_limit, "stop after L instances (0 = all)");
    search->add_flag("--translate", ss.translate, "r = 1: shift each solution to start at 0");
    search->callback([&] {
        action = [&] {
            ss.threads = g.threads;
            const auto found = brute_search(ss, search_limit);
            CommandResult r;
            r.report = Json::array();
            for (const auto& inst : found) r.report.push_back(to_json(inst));
            r.json_lines = true;
            r.exit_code = found.empty() ? Negative : Success;
            r.diagnostics = std::to_string(found.size()) + " instance(s)\n";
            return r;
        };
    });

    CommandResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (!action) throw InvalidInput("no command given");
        result = action();
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? Success : Invalid;
        result.text = out.str();
        result.diagnostics = err.str();
        if (code != 0) result.report = {{"error", e.what()}};
        return result;
    } catch (const InvalidInput& e) {
        result = {};
        result.exit_code = Invalid;
        result.report = {{"error", e.what()}};
        result.diagnostics = std::string("error: ") + e.what() + "\n";
    } catch (const VerificationFailure& e) {
        result = {};
        result.exit_code = Negative;
        result.report = {{"error", e.what()}};
        result.diagnostics = std::string("verification failure: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        result = {};
        result.exit_code = Invalid;
        result.report = {{"error", e.what()}};
        result.diagnostics = std::string("error: ") + e.what() + "\n";
    }
    result.out_path = g.out;
    return result;
}

std::string render(const CommandResult& result) {
    if (!result.text.empty()) return result.text;
    if (result.json_lines) {
        std::string s;
        for (const auto& x : result.report) s += x.dump() + "\n";
        return s;
    }
    return result.report.is_null() ? std::string() : dump(result.report);
}

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto result = run(args);
    const auto body = render(result);
    if (!result.out_path.empty() && result.text.empty()) {
        std::ofstream f(result.out_path, std::ios::binary);
        if (!(f << body)) {
            err << "error: cannot write " << result.out_path << "\n";
            return Invalid;
        }
    } else {
        out << body;
    }
    err << result.diagnostics;
    return result.exit_code;
}

} // namespace pte::cli
