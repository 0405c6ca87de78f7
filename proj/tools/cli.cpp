#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "json_writer.hpp"
#include "kinematica/ckgeom.hpp"
#include "kinematica/clifford.hpp"
#include "kinematica/conformal.hpp"
#include "kinematica/errors.hpp"
#include "kinematica/kinclass.hpp"
#include "kinematica/spin.hpp"

namespace kinematica::cli {
namespace {

Json triple_json(const BracketTriple& t) { return Json{{"k", t.k}, {"h", t.h}, {"p", t.p}}; }
Json gc_json(const GenComplex& z) { return Json{{"re", z.re}, {"im", z.im}, {"kappa", z.kappa}}; }
Json mat3_json(const Mat3& m) {
    Json rows = Json::array();
    for (const auto& r : m) rows.push_back(Json::array({r[0], r[1], r[2]}));
    return rows;
}
Json mat2c_json(const Mat2C& m) {
    return Json::array({Json::array({gc_json(m(0, 0)), gc_json(m(0, 1))}),
                        Json::array({gc_json(m(1, 0)), gc_json(m(1, 1))})});
}
Json mv_json(const Multivector& m) {
    Json c = Json::array();
    for (double v : m.c) c.push_back(v);
    return Json{{"kappa1", m.kp.kappa1}, {"kappa2", m.kp.kappa2}, {"coeffs", c}};
}
Json kappa_json(const KappaPair& kp) { return Json{{"kappa1", kp.kappa1}, {"kappa2", kp.kappa2}}; }

// Shared state filled by CLI11 callbacks.
struct Options {
    double kappa1 = 0.0, kappa2 = 0.0;
    std::string from, type, gen, format = "json", svg_path;
    std::vector<int> exponents;
    std::vector<double> point, w, w1, w2, axis, vector;
    double param = 0.0, angle = 0.0;
    bool diff_table = false;
};

void add_kappa(CLI::App* sub, Options& o) {
    sub->add_option("--kappa1", o.kappa1, "curvature label kappa1")->required();
    sub->add_option("--kappa2", o.kappa2, "conformal label kappa2")->required();
}

CLI::Option* add_pair(CLI::App* sub, const std::string& name, std::vector<double>& target, std::size_t n,
                      const std::string& help) {
    return sub->add_option(name, target, help)->delimiter(',')->expected(static_cast<int>(n))->required();
}

KappaPair kappa(const Options& o) { return {o.kappa1, o.kappa2}; }

Json do_classify() {
    Json rows = Json::array();
    int kin = 0;
    std::vector<BracketTriple> classes;
    for (const auto& t : enumerate_all()) {
        const bool k = is_kinematical(t);
        Json row{{"k", t.k}, {"h", t.h}, {"p", t.p}, {"kinematical", k}, {"name", name_tag(name_of(t))}};
        if (k) {
            ++kin;
            const BracketTriple c = canonicalize(t);
            row["canonical"] = Json::array({c.k, c.h, c.p});
            if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
        } else {
            const Signature s = killing_signature(t);
            row["killing_signature"] = Json::array({s.positive, s.negative, s.zero});
        }
        rows.push_back(row);
    }
    const int total = static_cast<int>(rows.size());
    return Json{{"counts",
                 {{"total", total},
                  {"kinematical", kin},
                  {"classes", static_cast<int>(classes.size())},
                  {"non_kinematical", total - kin}}},
                {"rows", rows}};
}

Json do_contract(const Options& o, bool have_type, bool have_exponents) {
    if (have_type == have_exponents) throw CLI::ValidationError("contract", "give exactly one of --type, --exponents");
    const KinematicsName from = parse_name(o.from);
    Exponents e;
    Json out{{"from", name_tag(from)}};
    if (have_type) {
        const ContractionType c = parse_contraction(o.type);
        e = exponents_of(c);
        out["type"] = contraction_tag(c);
    } else {
        e = {o.exponents[0], o.exponents[1], o.exponents[2]};
    }
    const BracketTriple in = triple_of(from), lim = contract(in, e);
    out["exponents"] = Json{{"K", e.eK}, {"H", e.eH}, {"P", e.eP}};
    out["input"] = triple_json(in);
    out["limit"] = triple_json(lim);
    out["to"] = name_tag(name_of(lim));
    return out;
}

void do_graph(const Options& o, std::ostream& out) {
    const auto edges = contraction_graph();
    if (o.format == "dot") {
        out << "digraph contractions {\n";
        for (auto n : kKinematicalNames) out << "  \"" << name_tag(n) << "\";\n";
        for (const auto& e : edges)
            out << "  \"" << name_tag(e.from) << "\" -> \"" << name_tag(e.to) << "\" [label=\"" << contraction_tag(e.type)
                << "\"];\n";
        out << "}\n";
        return;
    }
    Json nodes = Json::array(), js = Json::array();
    for (auto n : kKinematicalNames) nodes.push_back(Json{{"name", name_tag(n)}, {"triple", triple_json(triple_of(n))}});
    for (const auto& e : edges)
        js.push_back(Json{{"from", name_tag(e.from)}, {"to", name_tag(e.to)}, {"type", contraction_tag(e.type)}});
    write_json(out, Json{{"nodes", nodes}, {"edges", js}}, float_precision());
}

Json do_exp(const Options& o) {
    const KappaPair kp = kappa(o);
    const Generator g = parse_generator(o.gen);
    Json out = kappa_json(kp);
    out["generator"] = generator_tag(g);
    out["param"] = o.param;
    out["matrix"] = mat3_json(exp_generator(kp, g, o.param));
    return out;
}

Json do_project(const Options& o) {
    const KappaPair kp = kappa(o);
    const SigmaPoint s = make_sigma_point(kp, o.point[0], o.point[1], o.point[2]);
    const ProjectedPoint p = project_flagged(kp, s);
    Json out = kappa_json(kp);
    out["point"] = Json::array({s.z, s.t, s.x});
    out["w"] = gc_json(p.w);
    out["boundary"] = p.boundary;
    return out;
}

Json do_unproject(const Options& o) {
    const KappaPair kp = kappa(o);
    const SigmaPoint s = unproject(kp, {o.w[0], o.w[1], kp.kappa2});
    Json out = kappa_json(kp);
    out["w"] = Json::array({o.w[0], o.w[1]});
    out["point"] = Json::array({s.z, s.t, s.x});
    return out;
}

Json do_distance(const Options& o) {
    const KappaPair kp = kappa(o);
    const GenComplex a{o.w1[0], o.w1[1], kp.kappa2}, b{o.w2[0], o.w2[1], kp.kappa2};
    Json out = kappa_json(kp);
    out["w1"] = gc_json(a);
    out["w2"] = gc_json(b);
    out["distance"] = distance(kp, a, b);
    return out;
}

Json do_rotate(const Options& o) {
    const KappaPair kp = kappa(o);
    const UnitAxis n = UnitAxis::normalized(o.axis[0], o.axis[1], o.axis[2]);
    const Multivector r = rotor(kp, n, o.angle);
    const Multivector a = Multivector::vector(kp, o.vector[0], o.vector[1], o.vector[2]);
    const Multivector b = sandwich(r, a);
    Json out = kappa_json(kp);
    out["axis"] = Json::array({n.n1, n.n2, n.n3});
    out["angle"] = o.angle;
    out["rotor"] = mv_json(r);
    out["input"] = mv_json(a);
    out["output"] = mv_json(b);
    return out;
}

Json do_spin(const Options& o) {
    const KappaPair kp = kappa(o);
    const Generator g = parse_generator(o.gen);
    const SpinElement s = sl2_of_exp(kp, g, o.param);
    Json out = kappa_json(kp);
    out["generator"] = generator_tag(g);
    out["param"] = o.param;
    out["alpha"] = gc_json(s.alpha);
    out["beta"] = gc_json(s.beta);
    out["matrix"] = mat2c_json(s.matrix());
    out["so3"] = mat3_json(cover_to_so3(s));
    return out;
}

Json coeffs_json(const ConformalCoeffs& c) {
    Json j = Json::object();
    for (std::size_t i = 0; i < c.size(); ++i) j[std::string(conformal_tag_name(kConformalTags[i]))] = c[i];
    return j;
}

Json do_conformal_table(const Options& o) {
    const KappaPair kp = kappa(o);
    Json out = kappa_json(kp);
    Json brackets = Json::array();
    for (auto x : kConformalTags)
        for (auto y : kConformalTags) {
            if (static_cast<int>(y) <= static_cast<int>(x)) continue;
            const BracketResult r = conformal_bracket(kp, x, y);
            brackets.push_back(Json{{"x", conformal_tag_name(x)},
                                    {"y", conformal_tag_name(y)},
                                    {"coeffs", coeffs_json(r.coeffs)},
                                    {"text", format_combination(r.coeffs)},
                                    {"residual", r.residual}});
        }
    out["brackets"] = brackets;
    if (o.diff_table) {
        Json diff = Json::array();
        int counts[3] = {0, 0, 0};
        for (const auto& d : bracket_table_diff(kp)) {
            ++counts[static_cast<int>(d.status)];
            if (d.status == DiffStatus::Match) continue;
            diff.push_back(Json{{"row", conformal_tag_name(d.row)},
                                {"col", conformal_tag_name(d.col)},
                                {"printed", d.claimed},
                                {"computed", d.computed},
                                {"status", diff_status_name(d.status)}});
        }
        out["diff"] = diff;
        out["summary"] = Json{{"match", counts[0]}, {"mismatch", counts[1]}, {"undefined_symbol", counts[2]}};
    }
    return out;
}

void do_region(const Options& o, std::ostream& out) {
    const std::string svg = region_svg(kappa(o));
    if (o.svg_path.empty() || o.svg_path == "-") {
        out << svg;
        return;
    }
    std::ofstream f(o.svg_path, std::ios::binary);
    if (!f) throw Error(ErrorKind::DomainError, "cannot open '" + o.svg_path + "' for writing");
    f << svg;
    Json j = kappa_json(kappa(o));
    j["svg"] = o.svg_path;
    j["bytes"] = static_cast<int>(svg.size());
    write_json(out, j, float_precision());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cayley-Klein kinematics toolkit", "kinematica"};
    app.require_subcommand(1);
    Options o;

    auto* classify = app.add_subcommand("classify", "enumerate and classify the 27 bracket structures");
    auto* contract = app.add_subcommand("contract", "contract a named kinematical algebra");
    contract->add_option("--from", o.from, "source algebra tag")->required();
    auto* type_opt = contract->add_option("--type", o.type, "speed-space | speed-time | space-time");
    auto* exp_opt = contract->add_option("--exponents", o.exponents, "eK,eH,eP")->delimiter(',')->expected(3);
    auto* graph = app.add_subcommand("graph", "contraction graph of the named algebras");
    graph->add_option("--format", o.format, "json | dot")->check(CLI::IsMember({"json", "dot"}));

    auto* exp = app.add_subcommand("exp", "closed-form one-parameter subgroup in SO(3)");
    auto* spin = app.add_subcommand("spin", "spin element and its SO(3) image");
    for (auto* sub : {exp, spin}) {
        add_kappa(sub, o);
        sub->add_option("--gen", o.gen, "H | P | K")->required();
        sub->add_option("--param", o.param, "group parameter")->required();
    }
    auto* project = app.add_subcommand("project", "project a point of the quadric to the plane");
    add_kappa(project, o);
    add_pair(project, "--point", o.point, 3, "z,t,x");
    auto* unproject = app.add_subcommand("unproject", "lift a plane point back to the quadric");
    add_kappa(unproject, o);
    add_pair(unproject, "--w", o.w, 2, "re,im");
    auto* distance = app.add_subcommand("distance", "distance between two plane points");
    add_kappa(distance, o);
    add_pair(distance, "--w1", o.w1, 2, "re,im");
    add_pair(distance, "--w2", o.w2, 2, "re,im");
    auto* rotate = app.add_subcommand("rotate", "rotate a vector with a Clifford rotor");
    add_kappa(rotate, o);
    add_pair(rotate, "--axis", o.axis, 3, "n1,n2,n3 (normalized)");
    rotate->add_option("--angle", o.angle, "rotation parameter")->required();
    add_pair(rotate, "--vector", o.vector, 3, "a1,a2,a3");
    auto* ctable = app.add_subcommand("conformal-table", "structure constants of sl(2) over C_kappa2");
    add_kappa(ctable, o);
    ctable->add_flag("--diff-paper", o.diff_table, "compare against the published table");
    auto* region = app.add_subcommand("region", "SVG of the model region");
    add_kappa(region, o);
    region->add_option("--svg", o.svg_path, "output path, '-' for stdout");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    const int prec = float_precision();
    try {
        if (*classify) write_json(out, do_classify(), prec);
        else if (*contract) write_json(out, do_contract(o, type_opt->count() > 0, exp_opt->count() > 0), prec);
        else if (*graph) do_graph(o, out);
        else if (*exp) write_json(out, do_exp(o), prec);
        else if (*spin) write_json(out, do_spin(o), prec);
        else if (*project) write_json(out, do_project(o), prec);
        else if (*unproject) write_json(out, do_unproject(o), prec);
        else if (*distance) write_json(out, do_distance(o), prec);
        else if (*rotate) write_json(out, do_rotate(o), prec);
        else if (*ctable) write_json(out, do_conformal_table(o), prec);
        else if (*region) do_region(o, out);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << Json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace kinematica::cli
