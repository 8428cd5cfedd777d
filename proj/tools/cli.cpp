#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "toroidal/chern.hpp"
#include "toroidal/report_json.hpp"

namespace toroidal::cli {

namespace {

using json = nlohmann::ordered_json;

OrderKind parse_order(const std::string& name) {
    const auto order = order_from_name(name);
    if (!order)
        throw std::domain_error("unknown order '" + name +
                                "' (expected rational, gaussian or eisenstein)");
    return *order;
}

SurfaceClass parse_surface_class(const std::string& name) {
    if (name == "abelian") return SurfaceClass::abelian();
    if (name == "bielliptic") return SurfaceClass::bielliptic();
    if (name == "k3") return SurfaceClass::k3();
    if (name == "enriques") return SurfaceClass::enriques();
    if (name == "p2") return SurfaceClass::projective_plane();
    if (name == "hirzebruch") return SurfaceClass::hirzebruch();
    const auto parse_param = [&](const std::string& prefix) -> std::optional<Int> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        const std::string tail = name.substr(prefix.size());
        try {
            std::size_t used = 0;
            const Int v = std::stoll(tail, &used);
            if (used != tail.size()) throw std::invalid_argument(tail);
            return v;
        } catch (const std::exception&) {
            throw std::domain_error("bad parameter in surface class '" + name + "'");
        }
    };
    if (const auto g = parse_param("ruled:")) return SurfaceClass::ruled_over_genus(*g);
    if (const auto d = parse_param("kodaira1:")) return SurfaceClass::minimal_kodaira_one(*d);
    throw std::domain_error("unknown surface class '" + name + "'");
}

std::vector<Int> parse_boundary_list(const std::string& text) {
    std::vector<Int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const Int v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::domain_error("bad boundary entry '" + item + "'");
        }
    }
    return out;
}

std::string render_point(const TorsionPoint& p) {
    return "(" + render(p[0]) + ", " + render(p[1]) + ")";
}

json point_json(const TorsionPoint& p) {
    return json::array({render(p[0]), render(p[1])});
}

std::vector<std::string> canonical_slope_names(const Configuration& cfg) {
    return {"inf", "0", "1", render(normal_form_tail(cfg))};
}

// ---- subcommand bodies; each returns the full output document ----

std::string do_rings(OrderKind order, const std::optional<std::string>& x_text,
                     const std::optional<std::string>& y_text, OutputFormat format) {
    std::ostringstream os;
    json doc;
    doc["order"] = order_name(order);
    if (!x_text) {
        json list = json::array();
        std::vector<std::string> names;
        for (const QuadInt& u : units(order)) {
            names.push_back(render(u));
            list.push_back(render(u));
        }
        doc["units"] = std::move(list);
        if (format == OutputFormat::Json) return doc.dump(2);
        os << "units:";
        for (const std::string& n : names) os << " " << n;
        os << "\n";
        return os.str();
    }

    const QuadInt x = parse_quadint(*x_text, order);
    doc["x"] = render(x);
    doc["conj_x"] = render(conj(x));
    doc["norm_x"] = norm(x);
    doc["trace_x"] = trace(x);
    os << "x        = " << render(x) << "\n";
    os << "conj(x)  = " << render(conj(x)) << "\n";
    os << "norm(x)  = " << norm(x) << "\n";
    os << "trace(x) = " << trace(x) << "\n";
    if (y_text) {
        const QuadInt y = parse_quadint(*y_text, order);
        const auto quotient = try_div_exact(x, y);
        doc["y"] = render(y);
        doc["sum"] = render(x + y);
        doc["difference"] = render(x - y);
        doc["product"] = render(x * y);
        doc["quotient"] = quotient ? json(render(*quotient)) : json(nullptr);
        os << "y        = " << render(y) << "\n";
        os << "x+y      = " << render(x + y) << "\n";
        os << "x-y      = " << render(x - y) << "\n";
        os << "x*y      = " << render(x * y) << "\n";
        os << "x/y      = " << (quotient ? render(*quotient) : "none") << "\n";
    }
    return format == OutputFormat::Json ? doc.dump(2) : os.str();
}

std::string do_torsion(OrderKind order, const std::string& gamma_text, OutputFormat format) {
    const QuadInt gamma = parse_quadint(gamma_text, order);
    const TorsionGroup group = quotient_reps(gamma);
    if (format == OutputFormat::Json) {
        json arr = json::array();
        for (const TorsionPoint& p : group.reps) arr.push_back(point_json(p));
        return arr.dump(2);
    }
    std::ostringstream os;
    os << "count = " << group.reps.size() << "\n";
    for (const TorsionPoint& p : group.reps) os << render_point(p) << "\n";
    return os.str();
}

std::string do_intersect(OrderKind order, const std::string& s1_text, const std::string& s2_text,
                         OutputFormat format) {
    const Slope s1 = parse_slope(s1_text, order);
    const Slope s2 = parse_slope(s2_text, order);
    const Int number = intersection_number(s1, s2);
    std::vector<SurfacePoint> points;
    if (s1 != s2) points = intersection_points(s1, s2);
    if (format == OutputFormat::Json) {
        json doc;
        doc["number"] = number;
        json arr = json::array();
        for (const SurfacePoint& p : points) {
            json q;
            q["w"] = point_json(p.w);
            q["z"] = point_json(p.z);
            arr.push_back(std::move(q));
        }
        doc["points"] = std::move(arr);
        return doc.dump(2);
    }
    std::ostringstream os;
    os << "number = " << number << "\n";
    for (const SurfacePoint& p : points)
        os << "w = " << render_point(p.w) << "  z = " << render_point(p.z) << "\n";
    return os.str();
}

std::string do_search(OrderKind order, OutputFormat format) {
    const std::vector<Configuration> classes = search_good_configurations(order);
    if (format == OutputFormat::Json) {
        json doc;
        doc["order"] = order_name(order);
        json arr = json::array();
        for (const Configuration& cfg : classes) arr.push_back(canonical_slope_names(cfg));
        doc["classes"] = std::move(arr);
        return doc.dump(2);
    }
    std::ostringstream os;
    os << "classes = " << classes.size() << "\n";
    for (const Configuration& cfg : classes) {
        const auto names = canonical_slope_names(cfg);
        os << "{" << names[0] << ", " << names[1] << ", " << names[2] << ", " << names[3] << "}\n";
    }
    return os.str();
}

std::string do_chern(const std::string& base_name, Int blowups, const std::string& boundary_text,
                     OutputFormat format) {
    const SurfaceClass base = parse_surface_class(base_name);
    const LogPair pair{base, blowups, parse_boundary_list(boundary_text)};
    const LogChern lc = log_chern_numbers(pair);
    const Int c1_sq = checked::sub(base.k_squared(), blowups);
    const Int c2 = blowup_c2(base.c2(), blowups);
    const bool noether = noether_filter(c1_sq, c2);
    const bool bmy = bmy_equality(lc.c1bar_sq, lc.c2bar);
    if (format == OutputFormat::Json) {
        json doc;
        doc["base"] = base.name();
        doc["blowups"] = blowups;
        doc["boundary_selfints"] = pair.boundary_selfints;
        doc["c1_sq"] = c1_sq;
        doc["c2"] = c2;
        doc["c1bar_sq"] = lc.c1bar_sq;
        doc["c2bar"] = lc.c2bar;
        doc["noether"] = noether;
        doc["bmy_equality"] = bmy;
        return doc.dump(2);
    }
    std::ostringstream os;
    os << "base     = " << base.name() << "\n";
    os << "blowups  = " << blowups << "\n";
    os << "boundary = {";
    for (std::size_t i = 0; i < pair.boundary_selfints.size(); ++i)
        os << (i ? ", " : "") << pair.boundary_selfints[i];
    os << "}\n";
    os << "c1^2     = " << c1_sq << "\n";
    os << "c2       = " << c2 << "\n";
    os << "c1bar^2  = " << lc.c1bar_sq << "\n";
    os << "c2bar    = " << lc.c2bar << "\n";
    os << "noether  = " << (noether ? "true" : "false") << "\n";
    os << "bmy      = " << (bmy ? "true" : "false") << "\n";
    return os.str();
}

std::string do_classify(const std::vector<std::string>& order_names, OutputFormat format) {
    std::vector<OrderKind> orders;
    for (const std::string& name : order_names) orders.push_back(parse_order(name));
    const ClassificationReport report = run_classification(orders);
    return emit_report(report, format);
}

void write_output(const std::string& document, const std::string& path, std::ostream& out) {
    std::string text = document;
    if (text.empty() || text.back() != '\n') text += '\n';
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::domain_error("cannot open '" + path + "' for writing");
    file << text;
    if (!file) throw std::domain_error("failed while writing '" + path + "'");
}

} // namespace

std::string emit_report(const ClassificationReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) return report_to_json_string(report, 2);

    std::ostringstream os;
    os << "toroidal compactifications with 3*c2bar = c1bar^2 and c2bar = 1, bi-elliptic branch "
          "excluded\n\n";
    os << "steps:\n";
    for (const EliminationStep& step : report.steps) {
        os << "  [" << std::left << std::setw(12) << verdict_name(step.verdict) << "] "
           << step.case_id << " (" << rule_name(step.rule) << ")\n";
        os << "      " << step.citation << "\n";
    }
    os << "\n";
    if (!report.survivor) {
        os << "survivor: none\n";
        return os.str();
    }
    const Survivor& s = *report.survivor;
    const auto names = canonical_slope_names(s.slopes);
    os << "survivor:\n";
    os << "  order    = " << order_name(s.order) << "\n";
    os << "  slopes   = {" << names[0] << ", " << names[1] << ", " << names[2] << ", " << names[3]
       << "}\n";
    os << "  boundary = {";
    for (std::size_t i = 0; i < s.boundary_selfints.size(); ++i)
        os << (i ? ", " : "") << s.boundary_selfints[i];
    os << "}\n";
    os << "  c1bar^2  = " << s.c1bar_sq << "\n";
    os << "  c2bar    = " << s.c2bar << "\n";
    os << "  3*c2bar == c1bar^2: " << (bmy_equality(s.c1bar_sq, s.c2bar) ? "true" : "false")
       << "\n";
    return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verifier for the smallest cusped complex-hyperbolic surfaces with smooth "
                 "toroidal compactification"};
    app.require_subcommand(1);

    struct SubArgs {
        bool json = false;
        std::string output_path;
        std::string order = "eisenstein";
        std::string x, y, gamma, s1, s2;
        std::string base = "abelian";
        Int blowups = 0;
        std::string boundary;
        std::vector<std::string> orders = {"rational", "gaussian", "eisenstein"};
    } a;

    const auto add_common = [&a](CLI::App* sub) {
        sub->add_flag("--json", a.json, "emit JSON instead of text");
        sub->add_option("-o,--output", a.output_path, "write the output to a file");
    };

    CLI::App* rings = app.add_subcommand(
        "rings", "arithmetic in the endomorphism order: conjugate, norm, trace, units and exact "
                 "division of elements a+b*g with g^2 = T*g - N");
    rings->add_option("order", a.order, "rational, gaussian or eisenstein")->required();
    rings->add_option("x", a.x, "element, e.g. 2-1t");
    rings->add_option("y", a.y, "second element");
    add_common(rings);

    CLI::App* torsion = app.add_subcommand(
        "torsion", "the norm(gamma) solutions of gamma*z = 0 mod Lambda in the lattice basis "
                   "(1, g), reduced to [0,1)^2");
    torsion->add_option("order", a.order, "rational, gaussian or eisenstein")->required();
    torsion->add_option("gamma", a.gamma, "nonzero element, e.g. 2-1t")->required();
    add_common(torsion);

    CLI::App* intersect = app.add_subcommand(
        "intersect", "intersection number and points of two elliptic curves w = alpha*z (slope "
                     "inf is the curve z = 0) through the origin of C x C");
    intersect->add_option("order", a.order, "rational, gaussian or eisenstein")->required();
    intersect->add_option("s1", a.s1, "slope: element or inf")->required();
    intersect->add_option("s2", a.s2, "slope: element or inf")->required();
    add_common(intersect);

    CLI::App* search = app.add_subcommand(
        "search", "all good configurations (four curves through one point meeting pairwise "
                  "once) up to isomorphism, by the normalized unit search");
    search->add_option("order", a.order, "rational, gaussian or eisenstein")->required();
    add_common(search);

    CLI::App* chern = app.add_subcommand(
        "chern", "logarithmic Chern numbers c1bar^2 = K_X^2 - sum D_i^2 and c2bar = c2 + k of a "
                 "blown-up pair, with the Noether mod-12 and 3*c2bar = c1bar^2 checks");
    chern->add_option("--base", a.base,
                      "abelian, bielliptic, k3, enriques, p2, hirzebruch, ruled:<g>, kodaira1:<d>")
        ->required();
    chern->add_option("--blowups", a.blowups, "number of blown-up points")->required();
    chern->add_option("--boundary", a.boundary, "comma list of boundary self-intersections");
    add_common(chern);

    CLI::App* classify = app.add_subcommand(
        "classify", "the machine-checked case tree for 3*c2bar = c1bar^2, c2bar = 1 with the "
                    "bi-elliptic branch excluded; the unique survivor is the blown-up product "
                    "of hexagonal elliptic curves with slopes {inf, 0, 1, t}");
    classify->add_option("--orders", a.orders, "comma list from rational,gaussian,eisenstein")
        ->delimiter(',');
    add_common(classify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const OutputFormat format = a.json ? OutputFormat::Json : OutputFormat::Text;
    try {
        std::string document;
        if (rings->parsed()) {
            std::optional<std::string> x, y;
            if (rings->count("x")) x = a.x;
            if (rings->count("y")) y = a.y;
            if (y && !x) throw std::domain_error("y given without x");
            document = do_rings(parse_order(a.order), x, y, format);
        } else if (torsion->parsed()) {
            document = do_torsion(parse_order(a.order), a.gamma, format);
        } else if (intersect->parsed()) {
            document = do_intersect(parse_order(a.order), a.s1, a.s2, format);
        } else if (search->parsed()) {
            document = do_search(parse_order(a.order), format);
        } else if (chern->parsed()) {
            document = do_chern(a.base, a.blowups, a.boundary, format);
        } else if (classify->parsed()) {
            document = do_classify(a.orders, format);
        }
        write_output(document, a.output_path, out);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace toroidal::cli
