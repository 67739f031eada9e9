#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordlim/catalog.hpp"
#include "ordlim/densities.hpp"
#include "ordlim/errors.hpp"
#include "ordlim/io.hpp"
#include "ordlim/measures.hpp"
#include "ordlim/recognition.hpp"
#include "ordlim/sampling.hpp"
#include "ordlim/semiorders.hpp"

namespace ordlim::cli {

namespace {

using nlohmann::json;

/// Built-in names (h, l, chain<k>, antichain<k>, q<k>-, q<k>+) or a poset file.
FinitePoset resolve_poset(const std::string& spec)
{
    std::smatch m;
    static const std::regex chain_re("chain([0-9]+)"), anti_re("antichain([0-9]+)"), star_re("q([0-9]+)([-+])");
    if (spec == "h" || spec == "H") return FinitePoset::two_plus_two();
    if (spec == "l" || spec == "L") return FinitePoset::three_plus_one();
    auto size_of = [&](const std::string& s) {
        const unsigned long v = std::stoul(s);
        if (v == 0 || v > 100000) throw InputError("named poset size out of range in '" + spec + "'");
        return static_cast<std::size_t>(v);
    };
    if (std::regex_match(spec, m, chain_re)) return FinitePoset::chain(size_of(m[1]));
    if (std::regex_match(spec, m, anti_re)) return FinitePoset::antichain(size_of(m[1]));
    if (std::regex_match(spec, m, star_re))
        return m[2] == "-" ? FinitePoset::star_minus(size_of(m[1])) : FinitePoset::star_plus(size_of(m[1]));
    if (!std::filesystem::exists(spec)) throw InputError("'" + spec + "' is neither a poset name nor a file");
    return parse_poset(read_file(spec));
}

DensityKind parse_kind(const std::string& s)
{
    if (s == "hom") return DensityKind::hom;
    if (s == "inj") return DensityKind::inj;
    if (s == "ind") return DensityKind::ind;
    throw InputError("--kind must be hom, inj or ind");
}

Sign parse_sign(const std::string& s)
{
    if (s == "minus") return Sign::minus;
    if (s == "plus") return Sign::plus;
    throw InputError("--sign must be minus or plus");
}

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text)
{
    if (path)
        write_file(*path, text);
    else
        out << text;
}

std::string csv_double(double v)
{
    std::ostringstream s;
    s << std::setprecision(10) << v;
    return s.str();
}

struct Common {
    std::string format = "json";
    std::uint64_t seed = 1;
    std::size_t threads = 0;
};

// Each subcommand has its own default format.
void add_format(CLI::App* sub, std::map<CLI::App*, std::string>& formats, const std::string& def)
{
    formats[sub] = def;
    sub->add_option("--format", formats[sub], "Output format")->check(CLI::IsMember({"csv", "json"}));
}

// Kernel given by --kernel and its parameter flags.
struct KernelArgs {
    std::string kernel;
    std::string c;
    std::string g;
    std::string rate;
    std::string measure;
};

void add_kernel_options(CLI::App* sub, KernelArgs& k, bool required)
{
    auto* opt = sub->add_option("--kernel", k.kernel, "gc | wg | rate | measure | identity | one");
    if (required) opt->required();
    opt->check(CLI::IsMember({"gc", "wg", "rate", "measure", "identity", "one"}));
    sub->add_option("--c", k.c, "Shift c for --kernel gc (rational)");
    sub->add_option("--g", k.g, "pwl file with g for --kernel wg");
    sub->add_option("--rate", k.rate, "rate file for --kernel rate");
    sub->add_option("--measure", k.measure, "measure file for --kernel measure");
}

KernelModel make_kernel(const KernelArgs& k)
{
    if (k.kernel == "gc") {
        if (k.c.empty()) throw InputError("--kernel gc needs --c");
        return KernelModel::wc(parse_rational(k.c));
    }
    if (k.kernel == "wg") {
        if (k.g.empty()) throw InputError("--kernel wg needs --g");
        return KernelModel::wg(parse_g(read_file(k.g)));
    }
    if (k.kernel == "rate") {
        if (k.rate.empty()) throw InputError("--kernel rate needs --rate");
        return KernelModel::wtilde_r(parse_rate(read_file(k.rate)));
    }
    if (k.kernel == "measure") {
        if (k.measure.empty()) throw InputError("--kernel measure needs --measure");
        return std::visit([](const auto& m) { return KernelModel::measure(m); }, parse_any_measure(read_file(k.measure)));
    }
    if (k.kernel == "identity") return KernelModel::wg(MonotoneRC::identity());
    return KernelModel::wg(MonotoneRC::constant_one());
}

StepKernelMeasure as_left_uniform(const AnyMeasure& m, std::ostream& err)
{
    if (const auto* s = std::get_if<StepKernelMeasure>(&m)) return *s;
    err << "note: measure does not have a uniform left marginal; spreading it to one first\n";
    if (const auto* a = std::get_if<AtomicMeasure>(&m)) return left_uniformize(*a);
    return left_uniformize(std::get<MixedMeasure>(m));
}

std::vector<std::size_t> parse_sizes(const std::string& list)
{
    std::vector<std::size_t> out;
    std::stringstream ss(list);
    for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used != tok.size() || v == 0) throw InputError("--ns expects a comma-separated list of sizes");
        out.push_back(v);
    }
    if (out.empty()) throw InputError("--ns is empty");
    return out;
}

// Output paths are checked before any work starts.
void check_out_path(const std::optional<std::string>& path, const std::string& flag)
{
    if (!path) return;
    const auto parent = std::filesystem::path(*path).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent))
        throw InputError(flag + ": directory '" + parent.string() + "' does not exist");
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Limits of interval orders and semiorders: exact densities, samplers, representations"};
    app.require_subcommand(1);
    Common common;
    std::map<CLI::App*, std::string> formats;
    app.add_option("--threads", common.threads, "Worker threads (default: ORDLIM_THREADS or all cores)");

    // sample
    auto* sample = app.add_subcommand("sample", "Draw P(n, W) from a kernel or measure");
    KernelArgs sample_kernel;
    std::size_t sample_n = 0;
    std::optional<std::string> sample_out;
    add_kernel_options(sample, sample_kernel, true);
    sample->add_option("--n", sample_n, "Number of points")->required()->check(CLI::PositiveNumber);
    sample->add_option("--seed", common.seed, "Base seed");
    sample->add_option("--out", sample_out, "Output poset file (default: stdout)");

    // density
    auto* dens = app.add_subcommand("density", "Exact t, t_inj or t_ind of Q in P, or of Q in a kernel");
    std::string dens_q, dens_p, dens_kind = "hom";
    KernelArgs dens_kernel;
    std::size_t dens_samples = 0;
    dens->add_option("--q", dens_q, "Pattern poset (name or file)")->required();
    dens->add_option("--p", dens_p, "Host poset (name or file)");
    dens->add_option("--kind", dens_kind, "hom | inj | ind");
    add_kernel_options(dens, dens_kernel, false);
    dens->add_option("--samples", dens_samples, "Monte Carlo samples for kernels (exact for atomic measures)");
    dens->add_option("--seed", common.seed, "Base seed");
    add_format(dens, formats, "csv");

    // recognize
    auto* recog = app.add_subcommand("recognize", "Interval order and semiorder tests");
    std::string recog_in;
    recog->add_option("--in", recog_in, "Poset (name or file)")->required();
    add_format(recog, formats, "json");

    // represent
    auto* repr = app.add_subcommand("represent", "Evenly spaced interval representation");
    std::string repr_in;
    std::optional<std::string> repr_measure;
    repr->add_option("--in", repr_in, "Poset (name or file)")->required();
    repr->add_option("--measure-out", repr_measure, "Also write the empirical measure (atoms format)");
    add_format(repr, formats, "csv");

    // project
    auto* proj = app.add_subcommand("project", "Canonical projection mu -> mu*");
    std::string proj_in;
    std::optional<std::string> proj_out;
    proj->add_option("--in", proj_in, "Measure file")->required();
    proj->add_option("--out", proj_out, "Output stepmeasure file (default: stdout)");

    // equiv
    auto* eq = app.add_subcommand("equiv", "Decide whether two measures define the same interval order limit");
    std::string eq_a, eq_b;
    bool eq_stat = false;
    std::size_t eq_n = 500, eq_trials = 100;
    eq->add_option("--a", eq_a, "First measure file")->required();
    eq->add_option("--b", eq_b, "Second measure file")->required();
    eq->add_flag("--statistical", eq_stat, "Also run the sampled-fingerprint test");
    eq->add_option("--n", eq_n, "Points per sampled poset");
    eq->add_option("--trials", eq_trials, "Sampled posets per side");
    eq->add_option("--seed", common.seed, "Base seed");
    add_format(eq, formats, "json");

    // nu
    auto* nu = app.add_subcommand("nu", "Empirical degree distribution");
    std::string nu_in, nu_sign = "minus";
    std::optional<std::string> nu_out, nu_target;
    nu->add_option("--in", nu_in, "Poset (name or file)")->required();
    nu->add_option("--sign", nu_sign, "minus | plus");
    nu->add_option("--out", nu_out, "Write the distribution function (pwl format)");
    nu->add_option("--target", nu_target, "g file; report the Kolmogorov distance to F_- or F_+ of g");
    add_format(nu, formats, "csv");

    // fingerprint
    auto* fp = app.add_subcommand("fingerprint", "Induced densities of all small catalog posets");
    std::string fp_in;
    std::size_t fp_max_q = 4, fp_mc = 0;
    fp->add_option("--in", fp_in, "Poset (name or file)")->required();
    fp->add_option("--max-q", fp_max_q, "Largest pattern size (<= 5)");
    fp->add_option("--mc", fp_mc, "Estimate from this many random tuples instead of exact counting");
    fp->add_option("--seed", common.seed, "Base seed for --mc");
    add_format(fp, formats, "csv");

    // rgo
    auto* rgo = app.add_subcommand("rgo", "Random graph order");
    std::size_t rgo_n = 0;
    std::optional<double> rgo_p, rgo_c;
    std::optional<std::string> rgo_out;
    rgo->add_option("--n", rgo_n, "Number of points")->required()->check(CLI::PositiveNumber);
    rgo->add_option("--p", rgo_p, "Edge probability");
    rgo->add_option("--c", rgo_c, "Target c parameter (chooses p)");
    rgo->add_option("--seed", common.seed, "Base seed");
    rgo->add_option("--out", rgo_out, "Output poset file");
    add_format(rgo, formats, "json");

    // converge
    auto* conv = app.add_subcommand("converge", "Degree-distribution convergence diagnostic");
    KernelArgs conv_kernel;
    std::string conv_ns = "250,500,1000,2000";
    std::vector<std::string> conv_in;
    std::optional<std::string> conv_target;
    double conv_threshold = 0.05;
    add_kernel_options(conv, conv_kernel, false);
    conv->add_option("--ns", conv_ns, "Sizes to sample when --kernel is given");
    conv->add_option("--in", conv_in, "Poset files, in order (instead of sampling)");
    conv->add_option("--target", conv_target, "g file (defaults to the sampling kernel's g when known)");
    conv->add_option("--threshold", conv_threshold, "Verdict threshold (heuristic)");
    conv->add_option("--seed", common.seed, "Base seed");
    add_format(conv, formats, "csv");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "ordlim: " << e.what() << "\n";
        return 2;
    }

    for (auto* sub : app.get_subcommands())
        if (formats.count(sub)) common.format = formats[sub];

    try {
        check_out_path(sample_out, "--out");
        check_out_path(repr_measure, "--measure-out");
        check_out_path(proj_out, "--out");
        check_out_path(nu_out, "--out");
        check_out_path(rgo_out, "--out");
        const SeededRng rng(common.seed);

        if (*sample) {
            const KernelModel k = make_kernel(sample_kernel);
            const FinitePoset p = sample_kernel_poset(k, sample_n, rng);
            emit(out, sample_out, format_poset(p));
            err << "sampled " << p.size() << " points with " << p.relation_count() << " relations from "
                << k.name() << " (seed " << common.seed << ")\n";
            return 0;
        }

        if (*dens) {
            const FinitePoset q = resolve_poset(dens_q);
            const DensityKind kind = parse_kind(dens_kind);
            if (!dens_p.empty()) {
                const Rational v = density(q, resolve_poset(dens_p), kind);
                if (common.format == "json")
                    out << json{{"kind", dens_kind}, {"value", to_string(v)}}.dump() << "\n";
                else
                    out << to_string(v) << "\n";
                return 0;
            }
            if (dens_kernel.kernel.empty()) throw InputError("density needs --p or --kernel");
            if (dens_kernel.kernel == "measure" && dens_samples == 0) {
                const AnyMeasure m = parse_any_measure(read_file(dens_kernel.measure));
                if (const auto* a = std::get_if<AtomicMeasure>(&m)) {
                    const Rational v = kernel_density_atomic(q, *a, kind);
                    if (common.format == "json")
                        out << json{{"kind", dens_kind}, {"value", to_string(v)}}.dump() << "\n";
                    else
                        out << to_string(v) << "\n";
                    return 0;
                }
            }
            if (kind == DensityKind::inj) throw InputError("kernel densities support --kind hom or ind");
            const std::size_t samples = dens_samples ? dens_samples : 100000;
            const McEstimate e = kernel_density_mc(q, make_kernel(dens_kernel), samples, common.seed, kind,
                                                   common.threads);
            if (common.format == "json")
                out << json{{"kind", dens_kind}, {"estimate", e.estimate}, {"half_width_95", e.half_width_95},
                            {"samples", samples}}
                           .dump()
                    << "\n";
            else
                out << "estimate,half_width_95\n" << csv_double(e.estimate) << "," << csv_double(e.half_width_95) << "\n";
            return 0;
        }

        if (*recog) {
            const FinitePoset p = resolve_poset(recog_in);
            const bool io = is_interval_order(p);
            const bool so = io && is_semiorder(p);
            if (common.format == "json")
                out << json{{"interval_order", io}, {"semiorder", so}}.dump() << "\n";
            else
                out << "interval_order,semiorder\n" << (io ? "true" : "false") << "," << (so ? "true" : "false") << "\n";
            return 0;
        }

        if (*repr) {
            const FinitePoset p = resolve_poset(repr_in);
            const IntervalRepresentation r = interval_representation(p);
            if (common.format == "json") {
                json rows = json::array();
                for (std::size_t i = 0; i < r.n; ++i)
                    rows.push_back({{"index", i + 1}, {"rank", r.rank[i]}, {"a", to_string(r.a[i])},
                                    {"b", to_string(r.b[i])}});
                out << rows.dump() << "\n";
            } else {
                out << format_representation_csv(r);
            }
            if (repr_measure) write_file(*repr_measure, format_atomic_measure(empirical_measure(r)));
            return 0;
        }

        if (*proj) {
            const StepKernelMeasure mu = as_left_uniform(parse_any_measure(read_file(proj_in)), err);
            const StepKernelMeasure star = project_star(mu);
            emit(out, proj_out, format_step_measure(star));
            err << "projection has " << star.cells().size() << " cells" << (star == mu ? " (input unchanged)" : "")
                << "\n";
            return 0;
        }

        if (*eq) {
            const AnyMeasure ma = parse_any_measure(read_file(eq_a));
            const AnyMeasure mb = parse_any_measure(read_file(eq_b));
            const StepKernelMeasure a = as_left_uniform(ma, err);
            const StepKernelMeasure b = as_left_uniform(mb, err);
            const bool exact = equivalent(a, b);
            const bool via_h = equivalent_via_h_minus(a, b);
            if (exact != via_h) throw InternalInvariantError("the two exact equivalence tests disagree");
            json j{{"equivalent", exact}};
            if (eq_stat) {
                auto model = [](const AnyMeasure& m) {
                    return std::visit([](const auto& x) { return KernelModel::measure(x); }, m);
                };
                EquivalenceOptions opt;
                opt.threads = common.threads;
                const auto rep = equivalence_test_statistical(model(ma), model(mb), eq_n, eq_trials, rng, opt);
                j["statistical_flags"] = rep.flags;
                json flagged = json::array();
                for (const auto& row : rep.rows)
                    if (row.flagged) flagged.push_back(standard_catalog()[row.id].code);
                j["flagged"] = flagged;
            }
            if (common.format == "json") {
                out << j.dump() << "\n";
            } else {
                out << "equivalent" << (eq_stat ? ",statistical_flags" : "") << "\n" << (exact ? "true" : "false");
                if (eq_stat) out << "," << j["statistical_flags"].get<std::size_t>();
                out << "\n";
            }
            return 0;
        }

        if (*nu) {
            const FinitePoset p = resolve_poset(nu_in);
            const Sign sign = parse_sign(nu_sign);
            const StepCDF f = nu_empirical(p, sign);
            if (nu_out) write_file(*nu_out, format_cdf(f));
            std::optional<Rational> ks;
            if (nu_target) {
                const MonotoneRC g = parse_g(read_file(*nu_target));
                ks = ks_distance(f, sign == Sign::minus ? f_minus(g) : f_plus(g));
            }
            if (common.format == "json") {
                json knots = json::array();
                for (const auto& k : f.knots()) knots.push_back({to_string(k.x), to_string(k.left), to_string(k.right)});
                json j{{"sign", nu_sign}, {"knots", knots}};
                if (ks) j["ks_to_target"] = to_string(*ks);
                out << j.dump() << "\n";
            } else {
                out << "x,left,right\n";
                for (const auto& k : f.knots())
                    out << to_string(k.x) << "," << to_string(k.left) << "," << to_string(k.right) << "\n";
            }
            if (ks) err << "Kolmogorov distance to target: " << to_string(*ks) << " (" << to_double(*ks) << ")\n";
            return 0;
        }

        if (*fp) {
            const FinitePoset p = resolve_poset(fp_in);
            const Fingerprint f = fp_mc ? fingerprint_mc(p, fp_max_q, fp_mc, rng) : fingerprint(p, fp_max_q);
            const auto& cat = standard_catalog();
            if (common.format == "json") {
                json rows = json::array();
                for (std::size_t r = 0; r < f.ids.size(); ++r) {
                    json row{{"id", f.ids[r]}, {"size", cat[f.ids[r]].poset.size()}, {"code", cat[f.ids[r]].code},
                             {"value", f.values[r]}, {"half_width", f.half_widths[r]}};
                    if (!f.exact.empty()) row["exact"] = to_string(f.exact[r]);
                    rows.push_back(row);
                }
                out << rows.dump() << "\n";
            } else {
                out << "id,size,relations,code,value,half_width,exact\n";
                for (std::size_t r = 0; r < f.ids.size(); ++r) {
                    const auto& e = cat[f.ids[r]];
                    out << e.id << "," << e.poset.size() << "," << e.poset.relation_count() << "," << e.code << ","
                        << csv_double(f.values[r]) << "," << csv_double(f.half_widths[r]) << ","
                        << (f.exact.empty() ? "" : to_string(f.exact[r])) << "\n";
                }
            }
            return 0;
        }

        if (*rgo) {
            if (rgo_p.has_value() == rgo_c.has_value()) throw InputError("rgo needs exactly one of --p and --c");
            const double p = rgo_p ? *rgo_p : p_for_c(rgo_n, *rgo_c);
            const FinitePoset q = random_graph_order(rgo_n, p, rng);
            if (rgo_out) write_file(*rgo_out, format_poset(q));
            const double c = c_parameter(rgo_n, p);
            if (common.format == "json")
                out << json{{"n", rgo_n}, {"p", p}, {"c_parameter", c}, {"relations", q.relation_count()}}.dump()
                    << "\n";
            else
                out << "n,p,c_parameter,relations\n"
                    << rgo_n << "," << csv_double(p) << "," << csv_double(c) << "," << q.relation_count() << "\n";
            if (!rgo_out) err << "no --out given; only the summary was written\n";
            return 0;
        }

        if (*conv) {
            std::vector<FinitePoset> posets;
            std::optional<MonotoneRC> target;
            if (conv_target) target = parse_g(read_file(*conv_target));
            if (!conv_in.empty()) {
                for (const auto& path : conv_in) posets.push_back(resolve_poset(path));
            } else {
                if (conv_kernel.kernel.empty()) throw InputError("converge needs --in files or --kernel");
                const KernelModel k = make_kernel(conv_kernel);
                const auto ns = parse_sizes(conv_ns);
                for (std::size_t i = 0; i < ns.size(); ++i) posets.push_back(sample_kernel_poset(k, ns[i], rng.trial(i)));
                if (!target) {
                    if (conv_kernel.kernel == "gc") target = MonotoneRC::shift(parse_rational(conv_kernel.c));
                    if (conv_kernel.kernel == "wg") target = parse_g(read_file(conv_kernel.g));
                    if (conv_kernel.kernel == "identity") target = MonotoneRC::identity();
                    if (conv_kernel.kernel == "one") target = MonotoneRC::constant_one();
                    if (conv_kernel.kernel == "rate") target = g_from_rate(parse_rate(read_file(conv_kernel.rate)));
                }
            }
            const ConvergeReport rep = converge_diagnostic(posets, target, conv_threshold);
            for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
            if (common.format == "json") {
                json rows = json::array();
                for (const auto& r : rep.rows)
                    rows.push_back({{"n", r.n}, {"semiorder", r.semiorder}, {"ks_previous", optional_json(r.ks_previous)},
                                    {"ks_minus_target", optional_json(r.ks_minus_target)},
                                    {"ks_plus_target", optional_json(r.ks_plus_target)}});
                out << json{{"rows", rows},
                            {"converging", rep.converging},
                            {"threshold", rep.threshold},
                            {"verdict_is_heuristic", true},
                            {"warnings", rep.warnings}}
                           .dump()
                    << "\n";
            } else {
                auto cell = [](const std::optional<double>& v) { return v ? csv_double(*v) : std::string(); };
                out << "n,semiorder,ks_previous,ks_minus_target,ks_plus_target\n";
                for (const auto& r : rep.rows)
                    out << r.n << "," << (r.semiorder ? "true" : "false") << "," << cell(r.ks_previous) << ","
                        << cell(r.ks_minus_target) << "," << cell(r.ks_plus_target) << "\n";
            }
            err << "verdict (heuristic: last distance <= " << rep.threshold << " and not above the first): "
                << (rep.converging ? "converging" : "not converging") << "\n";
            return 0;
        }
    } catch (const InputError& e) {
        err << "ordlim: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "ordlim: internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "ordlim: internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace ordlim::cli
