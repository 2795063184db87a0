#include "lgk/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "lgk/format.hpp"
#include "lgk/galcoh.hpp"
#include "lgk/json_io.hpp"
#include "lgk/lgroup.hpp"
#include "lgk/param.hpp"

namespace lgk::cli {

namespace {

using io::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reported with exit code 1; the payload (if any) has already been printed.
class Failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DatumInput {
    std::vector<std::string> preset;
    std::string file;
    std::size_t restrict_degree = 0;
};

struct Output {
    std::string format = "json";
};

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    Options options;
};

std::string read_source(const std::string& file, std::istream& in) {
    if (file.empty() || file == "-") {
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(file);
    if (!f) throw UsageError("cannot read '" + file + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json read_json(const std::string& file, std::istream& in) {
    const std::string text = read_source(file, in);
    return io::parse(text, file.empty() || file == "-" ? "<stdin>" : file);
}

BasedRootDatum preset_from_words(const std::vector<std::string>& words) {
    if (words.empty()) throw UsageError("--preset needs a name");
    std::vector<long> params;
    for (std::size_t i = 1; i < words.size(); ++i) {
        try {
            std::size_t used = 0;
            params.push_back(std::stol(words[i], &used));
            if (used != words[i].size()) throw std::invalid_argument(words[i]);
        } catch (const std::exception&) {
            throw UsageError("preset parameter '" + words[i] + "' is not an integer");
        }
    }
    try {
        return presets::by_name(words[0], params);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

BasedRootDatum load_datum(const DatumInput& d, std::istream& in) {
    BasedRootDatum b = d.preset.empty() ? io::datum_from_json(read_json(d.file, in)) : preset_from_words(d.preset);
    if (d.restrict_degree > 0) {
        require_valid(b);
        b = weil_restriction(b, d.restrict_degree);
    }
    return b;
}

/// "SL2", "Sp4", "GL1", "NormOne" or a path to a datum file.
BasedRootDatum load_group(const std::string& spec, std::istream& in) {
    static const std::regex short_name("([A-Za-z]+)([0-9]*)");
    std::smatch m;
    if (std::regex_match(spec, m, short_name)) {
        std::vector<std::string> words{m[1].str()};
        if (m[2].length() > 0) words.push_back(m[2].str());
        return preset_from_words(words);
    }
    return io::datum_from_json(read_json(spec, in));
}

void add_datum_input(CLI::App* app, DatumInput& d) {
    app->add_option("file", d.file, "Datum JSON file ('-' or omitted: stdin)");
    app->add_option("--preset", d.preset, "Preset name and parameters, e.g. --preset SL 3")->expected(1, 8);
    app->add_option("--restrict", d.restrict_degree, "Weil restriction along a cyclic extension of this degree");
}

void add_format(CLI::App* app, Output& o) {
    app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
}

void emit(const Context& ctx, const Output& o, const json& j) {
    if (o.format == "table") ctx.out << io::format_table(j, ctx.options.color);
    else ctx.out << io::dump(j);
}

json report_json(const ValidationReport& r) { return json{{"ok", r.ok()}, {"violations", r.violations}}; }

RatVec parse_rationals(const std::string& text, const std::string& what) {
    RatVec v;
    std::string token;
    std::stringstream ss(text);
    while (ss >> token) {
        std::stringstream parts(token);
        std::string piece;
        while (std::getline(parts, piece, ',')) {
            if (piece.empty()) continue;
            Rat q;
            if (q.set_str(piece, 10) != 0 || q.get_den() == 0) throw UsageError(what + ": '" + piece + "' is not a rational number");
            q.canonicalize();
            v.push_back(q);
        }
    }
    return v;
}

// --- brd -----------------------------------------------------------------------

void setup_brd(CLI::App& app, Context& ctx, std::function<int()>& action) {
    auto* brd = app.add_subcommand("brd", "Based root data")->require_subcommand(1);

    auto* nw = brd->add_subcommand("new", "Emit a preset datum");
    auto d_new = std::make_shared<DatumInput>();
    nw->add_option("--preset", d_new->preset, "Preset name and parameters")->expected(1, 8)->required();
    nw->add_option("--restrict", d_new->restrict_degree, "Weil restriction along a cyclic extension of this degree");
    nw->callback([&ctx, &action, d_new] {
        action = [&ctx, d_new] {
            const auto b = load_datum(*d_new, ctx.in);
            require_valid(b);
            ctx.out << io::dump(io::datum_to_json(b));
            return 0;
        };
    });

    auto* show = brd->add_subcommand("show", "Re-emit a datum in canonical form");
    auto d_show = std::make_shared<DatumInput>();
    auto o_show = std::make_shared<Output>();
    add_datum_input(show, *d_show);
    add_format(show, *o_show);
    show->callback([&ctx, &action, d_show, o_show] {
        action = [&ctx, d_show, o_show] {
            emit(ctx, *o_show, io::datum_to_json(load_datum(*d_show, ctx.in)));
            return 0;
        };
    });

    auto* dual_cmd = brd->add_subcommand("dual", "Emit the dual datum");
    auto d_dual = std::make_shared<DatumInput>();
    auto o_dual = std::make_shared<Output>();
    add_datum_input(dual_cmd, *d_dual);
    add_format(dual_cmd, *o_dual);
    dual_cmd->callback([&ctx, &action, d_dual, o_dual] {
        action = [&ctx, d_dual, o_dual] {
            const auto b = load_datum(*d_dual, ctx.in);
            require_valid(b);
            emit(ctx, *o_dual, io::datum_to_json(dual(b)));
            return 0;
        };
    });

    auto* val = brd->add_subcommand("validate", "Check the axioms");
    auto d_val = std::make_shared<DatumInput>();
    auto o_val = std::make_shared<Output>();
    add_datum_input(val, *d_val);
    add_format(val, *o_val);
    val->callback([&ctx, &action, d_val, o_val] {
        action = [&ctx, d_val, o_val] {
            const auto r = validate(load_datum(*d_val, ctx.in));
            emit(ctx, *o_val, report_json(r));
            return r.ok() ? 0 : 1;
        };
    });

    auto* levi = brd->add_subcommand("levi", "Levi sub-datum for a subset of the simple roots");
    auto d_levi = std::make_shared<DatumInput>();
    auto o_levi = std::make_shared<Output>();
    auto subset = std::make_shared<std::vector<std::size_t>>();
    add_datum_input(levi, *d_levi);
    add_format(levi, *o_levi);
    levi->add_option("--subset", *subset, "Positions in the simple roots")->expected(0, -1);
    levi->callback([&ctx, &action, d_levi, o_levi, subset] {
        action = [&ctx, d_levi, o_levi, subset] {
            const auto b = load_datum(*d_levi, ctx.in);
            require_valid(b);
            const auto r = levi_subdatum(b, *subset);
            if (r.action_dropped) ctx.err << "note: subset is not Galois-stable; the Galois action was dropped\n";
            emit(ctx, *o_levi, io::datum_to_json(r.datum));
            return 0;
        };
    });

    auto* par = brd->add_subcommand("parabolics", "Galois-stable subsets of the simple roots");
    auto d_par = std::make_shared<DatumInput>();
    auto o_par = std::make_shared<Output>();
    add_datum_input(par, *d_par);
    add_format(par, *o_par);
    par->callback([&ctx, &action, d_par, o_par] {
        action = [&ctx, d_par, o_par] {
            const auto b = load_datum(*d_par, ctx.in);
            require_valid(b);
            json classes = json::array();
            for (const auto& c : parabolic_classes(b)) classes.push_back(c.subset);
            emit(ctx, *o_par, json{{"classes", classes}, {"count", classes.size()}});
            return 0;
        };
    });
}

// --- cohomology ------------------------------------------------------------------

struct CohomologyFlags {
    DatumInput datum;
    Output output;
    bool count = false;
    bool arch = false;
    bool nonarch = false;
    std::string norm = "plus";
    std::string sublattice;
};

json group_json(const FinAbGroup& g, const std::string& kind, const std::vector<std::string>& caveats, const std::string& norm) {
    return json{{"free_rank", g.free_rank()},
                {"invariant_factors", io::vec_to_json(g.invariant_factors())},
                {"kind", kind},
                {"caveats", caveats},
                {"normalization", norm}};
}

void add_count(json& j, const CohomologyFlags& f, const FinAbGroup& g) {
    if (!f.count) return;
    if (f.arch) throw Failure(std::string("class count refused at an Archimedean place: ") + kArchimedeanCaveat);
    if (!g.is_finite()) throw Failure("class count refused: the target " + g.to_string() + " is infinite");
    j["count"] = io::int_to_json(g.order());
}

void setup_cohomology(CLI::App& app, Context& ctx, std::function<int()>& action) {
    auto* coh = app.add_subcommand("cohomology", "Galois cohomology targets")->require_subcommand(1);
    const std::vector<std::pair<std::string, std::string>> subs = {
        {"h1-torus", "H^1 of a torus via Tate cohomology"},
        {"alpha", "Target of alpha_G"},
        {"iso", "Target of kappa_G on basic isocrystals"},
        {"rigid", "Rigid target for a finite central subgroup"},
        {"b-torus", "B(T) with Newton points"},
    };
    for (const auto& [name, help] : subs) {
        auto* sub = coh->add_subcommand(name, help);
        auto f = std::make_shared<CohomologyFlags>();
        add_datum_input(sub, f->datum);
        add_format(sub, f->output);
        sub->add_flag("--count", f->count, "Report the number of classes");
        auto* arch = sub->add_flag("--arch", f->arch, "Archimedean place");
        auto* nonarch = sub->add_flag("--nonarch", f->nonarch, "Non-Archimedean place (default)");
        arch->excludes(nonarch);
        sub->add_option("--norm", f->norm, "Sign normalization label")->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
        if (name == "rigid")
            sub->add_option("--sublattice", f->sublattice, "Sublattice JSON file, or 'full-center'")->required();
        const std::string kind = name;
        sub->callback([&ctx, &action, f, kind] {
            action = [&ctx, f, kind] {
                const auto b = load_datum(f->datum, ctx.in);
                require_valid(b);
                const Place place = f->arch ? Place::archimedean : Place::nonarchimedean;
                std::vector<std::string> caveats;
                if (place == Place::archimedean) caveats.push_back(kArchimedeanCaveat);
                json j;
                if (kind == "h1-torus" || kind == "b-torus") {
                    if (!b.is_torus()) throw Failure(kind + " needs a torus datum (no roots)");
                    const GammaModule cochar = b.lattice.dual();
                    if (kind == "h1-torus") {
                        const auto g = h1_torus(cochar);
                        j = group_json(g, kind, caveats, f->norm);
                        add_count(j, *f, g);
                    } else {
                        const auto bt = b_torus(cochar);
                        j = group_json(bt.group(), kind, caveats, f->norm);
                        json newton = json::array();
                        for (std::size_t k = 0; k < bt.classes.lift.cols(); ++k)
                            newton.push_back(io::rat_vec_to_json(bt.newton(bt.classes.lift.column(k))));
                        j["newton"] = newton;
                        add_count(j, *f, bt.group());
                    }
                } else {
                    CohomologyTarget t;
                    if (kind == "alpha") t = alpha_target(b, place);
                    else if (kind == "iso") t = iso_target(b, place);
                    else {
                        SublatticeSpec y = f->sublattice == "full-center" ? root_sublattice(b)
                                                                          : io::sublattice_from_json(read_json(f->sublattice, ctx.in), b.rank());
                        t = rigid_target(b, y, place);
                    }
                    j = io::target_to_json(t, f->norm);
                    add_count(j, *f, t.group);
                }
                emit(ctx, f->output, j);
                return 0;
            };
        });
    }
}

// --- param -----------------------------------------------------------------------

struct ParamFlags {
    std::string file;
    std::string group;
    Output output;
    std::string s;
    std::string radial;
    std::string twist = "trivial";
};

ParamDatum load_param(const ParamFlags& f, const BasedRootDatum& bd, std::istream& in) {
    ParamDatum p = io::param_from_json(read_json(f.file, in));
    if (p.sl2.empty()) p.sl2 = zero_rat_vector(bd.rank());
    return p;
}

void require_param(const ParamDatum& p, const BasedRootDatum& bd, const Context& ctx) {
    const auto r = validate_param(p, bd);
    if (r.ok()) return;
    for (const auto& v : r.violations) ctx.err << "violation: " << v << "\n";
    throw Failure("invalid parameter");
}

void setup_param(CLI::App& app, Context& ctx, std::function<int()>& action) {
    auto* par = app.add_subcommand("param", "Finite-level Langlands parameters")->require_subcommand(1);
    const std::vector<std::pair<std::string, std::string>> subs = {
        {"validate", "Check the homomorphism and shape constraints"},
        {"decompose", "Langlands decomposition phi = phi0 * chi"},
        {"minimal-levi", "Smallest standard Levi containing the image"},
        {"discrete", "Essential discreteness with certificate"},
        {"endoscopy", "Endoscopic datum for a semisimple element"},
    };
    for (const auto& [name, help] : subs) {
        auto* sub = par->add_subcommand(name, help);
        auto f = std::make_shared<ParamFlags>();
        add_format(sub, f->output);
        sub->add_option("--group", f->group, "Group G: preset shorthand (SL2, Sp4, ...) or datum JSON file")->required();
        if (name == "endoscopy") {
            sub->add_option("--s", f->s, "Circle part of s, comma separated rationals")->required();
            sub->add_option("--radial", f->radial, "Radial part of s, comma separated rationals");
            sub->add_option("--twist", f->twist, "trivial, frobenius-weyl, or a twist JSON file")->capture_default_str();
        } else {
            sub->add_option("file", f->file, "Parameter JSON file ('-' or omitted: stdin)");
        }
        const std::string kind = name;
        sub->callback([&ctx, &action, f, kind] {
            action = [&ctx, f, kind] {
                const BasedRootDatum g = load_group(f->group, ctx.in);
                require_valid(g);
                if (kind == "endoscopy") {
                    RatVec circle = parse_rationals(f->s, "--s");
                    RatVec radial = f->radial.empty() ? zero_rat_vector(circle.size()) : parse_rationals(f->radial, "--radial");
                    if (circle.size() != g.rank() || radial.size() != g.rank())
                        throw UsageError("s must have " + std::to_string(g.rank()) + " coordinates");
                    Twist twist = f->twist == "trivial"          ? Twist::trivial(g)
                                  : f->twist == "frobenius-weyl" ? Twist::longest_weyl(g)
                                                                 : io::twist_from_json(read_json(f->twist, ctx.in), g);
                    const auto e = endoscopic_datum(g, TorusElement(circle, radial), twist);
                    emit(ctx, f->output,
                         json{{"h", io::datum_to_json(e.h)}, {"s", io::torus_element_to_json(e.s)}, {"kernel_roots", e.kernel_roots}});
                    return 0;
                }
                const BasedRootDatum bd = dual(g);
                const ParamDatum p = load_param(*f, bd, ctx.in);
                if (kind == "validate") {
                    const auto r = validate_param(p, bd);
                    emit(ctx, f->output, report_json(r));
                    return r.ok() ? 0 : 1;
                }
                require_param(p, bd, ctx);
                if (kind == "decompose") {
                    const auto d = langlands_decompose(p, bd);
                    emit(ctx, f->output, json{{"levi", d.levi}, {"nu", io::rat_vec_to_json(d.nu)}, {"phi0", io::param_to_json(d.phi0)}});
                } else if (kind == "minimal-levi") {
                    emit(ctx, f->output, json{{"minimal_levi", minimal_levi(p, bd)}});
                } else {
                    const auto c = is_essentially_discrete(p, bd);
                    emit(ctx, f->output,
                         json{{"discrete", c.discrete},
                              {"minimal_levi", c.minimal_levi},
                              {"fixed_dimension", c.fixed_dimension},
                              {"central_dimension", c.central_dimension}});
                }
                return 0;
            };
        });
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err, const Options& options) {
    Context ctx{in, out, err, options};
    std::function<int()> action;
    CLI::App app{"Combinatorics of based root data, L-groups, Kottwitz targets and parameters", "lgk"};
    app.require_subcommand(1);
    setup_brd(app, ctx, action);
    setup_cohomology(app, ctx, action);
    setup_param(app, ctx, action);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    if (!action) return 2;
    try {
        return action();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const io::SchemaError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Failure& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lgk::cli
