#include "commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "germlab/detideal.hpp"
#include "germlab/geom.hpp"
#include "germlab/germfile.hpp"
#include "germlab/invariants.hpp"
#include "germlab/parse.hpp"
#include "germlab/tables.hpp"
#include "germlab/tangent.hpp"
#include "germlab/tjurina.hpp"

namespace germlab::cli {

using json = nlohmann::ordered_json;

namespace {

struct Settings {
    int max_order = 64;
    bool as_json = false;
    bool strict_units = false;
    ColengthOptions colength() const {
        ColengthOptions o;
        o.max_order = max_order;
        return o;
    }
    TauOptions tau() const {
        TauOptions t;
        t.colength = colength();
        t.strict_units = strict_units;
        return t;
    }
};

struct Report {
    json input = json::object();
    json results = json::object();
    std::vector<std::string> lines;
    bool certified = true;
    int code = Ok;
};

class BadInput : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw BadInput("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

MatrixGerm load_germ(const std::string& path) {
    try {
        return parse_germ_file(read_text(path));
    } catch (const GermFileError& e) {
        throw BadInput(path + ": " + e.what());
    }
}

json echo(const MatrixGerm& a) {
    json m = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json r = json::array();
        for (int j = 0; j < a.cols(); ++j) r.push_back(to_string(a.at(i, j), a.vars));
        m.push_back(r);
    }
    return {{"vars", a.vars.names()}, {"kind", kind_name(a.kind)}, {"matrix", m}};
}

std::string matrix_str(const PolyMatrix& m, const VariableSet& vars) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? " ; " : " ";
        for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + to_string(m[i][j], vars);
    }
    return s + " ]";
}

// "3  [tau_gl, certified at order 4]"
std::string value_line(const std::string& value, const std::string& what, const ColengthResult& r) {
    if (r.certified) return value + "  [" + what + ", certified at order " + std::to_string(r.certified_at) + "]";
    return ">= " + value + "  [" + what + ", NOT certified up to order " + std::to_string(r.certified_at) + "]";
}

json colength_json(const ColengthResult& r) {
    return {{"value", r.dim}, {"certified", r.certified}, {"certified_at", r.certified_at}};
}

void note_colength(Report& rep, const ColengthResult& r) { rep.certified = rep.certified && r.certified; }

Poly function_of(const MatrixGerm& a) {
    if (a.rows() == 1 && a.cols() == 1) return a.at(0, 0);
    if (a.rows() == a.cols()) return defining_equation(a);
    throw BadInput("command needs a function (1 x 1 matrix) or a square matrix");
}

std::string weights_str(const std::vector<long long>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

std::string cobasis_str(const CobasisEntry& c, const MatrixGerm& a) {
    return "e" + std::to_string(c.component + 1) + "*" + to_string(c.monomial, a.vars);
}

// ---------------------------------------------------------------- commands

void cmd_tau(Report& rep, const MatrixGerm& a, const std::string& group, const Settings& s) {
    Group g = parse_group(group);
    TauResult t = tau(a, g, s.tau());
    note_colength(rep, t.result);
    json cob = json::array();
    for (const auto& c : t.result.cobasis) cob.push_back(cobasis_str(c, t.matrix));
    rep.results = {{"group", group_name(g)},
                   {"tau", colength_json(t.result)},
                   {"unit_reductions", t.unit_reductions},
                   {"cobasis", cob}};
    rep.lines.push_back(value_line(std::to_string(t.result.dim), "tau_" + group_name(g), t.result));
    if (t.unit_reductions) rep.lines.push_back("unit reductions: " + std::to_string(t.unit_reductions));
}

void cmd_mu(Report& rep, const MatrixGerm& a, const Settings& s, bool tjurina) {
    Poly f = function_of(a);
    ColengthResult r = tjurina ? tjurina_number(f, s.colength()) : milnor(f, s.colength());
    note_colength(rep, r);
    std::string key = tjurina ? "tau" : "mu";
    rep.results = {{"function", to_string(f, a.vars)}, {key, colength_json(r)}};
    rep.lines.push_back(value_line(std::to_string(r.dim), key, r));
}

void cmd_mu_boundary(Report& rep, const MatrixGerm& a, const std::string& var, const Settings& s) {
    Poly f = function_of(a);
    int b = a.vars.index_of(var);
    if (b < 0) throw BadInput("unknown boundary variable '" + var + "'");
    BoundaryMilnorTriple t = boundary_milnor(f, b, s.colength());
    for (const auto* r : {&t.mu_f, &t.mu_restricted, &t.mu_boundary}) note_colength(rep, *r);
    rep.results = {{"boundary", var},
                   {"mu", colength_json(t.mu_f)},
                   {"mu_restricted", colength_json(t.mu_restricted)},
                   {"mu_boundary", colength_json(t.mu_boundary)},
                   {"sum_identity", t.mu_f.dim + t.mu_restricted.dim == t.mu_boundary.dim}};
    std::string v = "(" + std::to_string(t.mu_f.dim) + "," + std::to_string(t.mu_restricted.dim) + "," +
                    std::to_string(t.mu_boundary.dim) + ")";
    if (t.certified())
        rep.lines.push_back(v + "  [certified at orders " + std::to_string(t.mu_f.certified_at) + ", " +
                            std::to_string(t.mu_restricted.certified_at) + ", " +
                            std::to_string(t.mu_boundary.certified_at) + "]");
    else
        rep.lines.push_back(v + "  [NOT certified]");
}

void cmd_mu_icis(Report& rep, const MatrixGerm& a, const Settings& s) {
    std::vector<Poly> f;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) f.push_back(a.at(i, j));
    IcisMilnor im = milnor_icis(f, s.colength());
    rep.certified = im.certified;
    json used = json::array();
    for (const auto& g : im.used) used.push_back(to_string(g, a.vars));
    rep.results = {{"mu", im.mu}, {"certified", im.certified}, {"orders", im.orders}, {"generators", used}};
    std::string orders;
    for (int o : im.orders) orders += (orders.empty() ? "" : ", ") + std::to_string(o);
    rep.lines.push_back(std::string(im.certified ? "" : ">= ") + std::to_string(im.mu) + "  [mu, " +
                        (im.certified ? "certified at orders " : "NOT certified; orders ") + orders + "]");
}

void cmd_determinacy(Report& rep, const MatrixGerm& a, const std::string& group, const Settings& s) {
    Group g = parse_group(group);
    DeterminacyResult d = determinacy_bound(a, g, s.tau());
    rep.certified = d.certified;
    rep.results = {{"group", group_name(g)}, {"k", d.k}, {"certified", d.certified}, {"certified_at", d.certified_at}};
    if (d.certified)
        rep.lines.push_back(std::to_string(d.k) + "-determined  [" + group_name(g) + ", certified at order " +
                            std::to_string(d.certified_at) + "]");
    else
        rep.lines.push_back("no determinacy bound found up to order " + std::to_string(d.certified_at));
}

void cmd_unfold(Report& rep, const MatrixGerm& a, const std::string& group, const Settings& s) {
    Group g = parse_group(group);
    UnfoldingBasis u = miniversal_unfolding(a, g, s.tau());
    rep.certified = u.certified;
    json basis = json::array();
    MatrixGerm b = a.has_unit_entry() ? reduce_units(a).reduced : a;
    for (const auto& m : u.basis) basis.push_back(matrix_str(m, b.vars));
    rep.results = {{"group", group_name(g)},
                   {"tau", u.tau},
                   {"certified", u.certified},
                   {"certified_at", u.certified_at},
                   {"basis", basis}};
    ColengthResult r;
    r.dim = u.tau;
    r.certified = u.certified;
    r.certified_at = u.certified_at;
    rep.lines.push_back(value_line(std::to_string(u.tau), "tau_" + group_name(g), r));
    for (std::size_t i = 0; i < u.basis.size(); ++i)
        rep.lines.push_back("  t" + std::to_string(i + 1) + ": " + basis[i].get<std::string>());
}

std::string index_str(const MultiIndex& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
    return s + "}";
}

void cmd_minors(Report& rep, const MatrixGerm& a, int t) {
    json list = json::array();
    for (const auto& m : minors(a, t)) {
        std::string v = to_string(m.value, a.vars);
        list.push_back({{"rows", m.rows}, {"cols", m.cols}, {"value", v}});
        rep.lines.push_back("rows " + index_str(m.rows) + " cols " + index_str(m.cols) + ": " + v);
    }
    rep.results = {{"size", t}, {"minors", list}};
}

void cmd_pfaffians(Report& rep, const MatrixGerm& a, int s) {
    json list = json::array();
    for (const auto& p : pfaffians(a, s)) {
        std::string v = to_string(p.value, a.vars);
        list.push_back({{"indices", p.idx}, {"value", v}});
        rep.lines.push_back(index_str(p.idx) + ": " + v);
    }
    rep.results = {{"half_size", s}, {"pfaffians", list}};
}

json chart_json(const ChartInvariants& c) {
    json eqs = json::array();
    for (const auto& e : c.residual.equations) eqs.push_back(to_string(e, c.residual.vars));
    json elim = json::array();
    for (const auto& [name, phi] : c.reduced.eliminated) elim.push_back(name);
    json j = {{"chart", c.reduced.chart + 1},
              {"off_transform", c.off_transform},
              {"smooth", c.smooth},
              {"eliminated", elim},
              {"residual_vars", c.residual.vars.names()},
              {"residual", eqs}};
    if (!c.smooth && !c.off_transform) {
        j["mu"] = colength_json(c.mu);
        if (c.tau) j["tau"] = colength_json(*c.tau);
        if (c.label) j["label"] = c.label->str();
    }
    j["caveat"] = c.caveat;
    return j;
}

std::string chart_line(const ChartInvariants& c) {
    std::string s = "chart " + std::to_string(c.reduced.chart + 1) + ": ";
    if (c.off_transform) return s + "origin not on the transform";
    if (c.smooth) s += "smooth";
    else {
        s += c.label ? c.label->str() : "complete intersection";
        s += ", " + value_line(std::to_string(c.mu.dim), "mu", c.mu);
    }
    std::string eqs;
    for (const auto& e : c.residual.equations) eqs += (eqs.empty() ? "" : ", ") + to_string(e, c.residual.vars);
    if (!eqs.empty()) s += "; residual " + eqs;
    if (c.caveat) s += "; singular points off the chart origin";
    return s;
}

void cmd_transform(Report& rep, const MatrixGerm& a, const Settings& s) {
    json charts = json::array();
    for (const auto& ch : tjurina_charts(a)) {
        ChartInvariants c = chart_invariants(a, ch, s.colength());
        rep.certified = rep.certified && c.certified();
        charts.push_back(chart_json(c));
        rep.lines.push_back(chart_line(c));
    }
    rep.results = {{"charts", charts}};
}

void cmd_b3(Report& rep, const MatrixGerm& a, const Settings& s) {
    B3Result b = b3_threefold(a, s.colength());
    bool all = true;
    for (const auto& c : b.charts) all = all && c.certified();
    rep.certified = all;
    json charts = json::array();
    for (const auto& c : b.charts) charts.push_back(chart_json(c));
    rep.results = {{"b0", b.b0}, {"b1", b.b1}, {"b2", b.b2}, {"b3", b.b3},
                   {"certified", b.certified}, {"caveat", b.caveat}, {"charts", charts}};
    std::string v = "b0=" + std::to_string(b.b0) + " b1=" + std::to_string(b.b1) + " b2=" + std::to_string(b.b2) +
                    " b3=" + std::to_string(b.b3);
    if (b.caveat) v += "  [transform has singular points off the chart origins; b3 counts origins only]";
    else if (b.certified) v += "  [certified]";
    else v += "  [NOT certified]";
    rep.lines.push_back(v);
    for (const auto& c : b.charts) rep.lines.push_back("  " + chart_line(c));
}

void cmd_recognize(Report& rep, const MatrixGerm& a, const Settings& s) {
    Poly f = function_of(a);
    SingularityLabel l = ade_recognize(f, s.colength());
    ColengthResult mu = milnor(f, s.colength());
    note_colength(rep, mu);
    rep.results = {{"function", to_string(f, a.vars)}, {"label", l.str()}, {"mu", colength_json(mu)}};
    rep.lines.push_back(l.str() + "  (" + value_line(std::to_string(mu.dim), "mu", mu) + ")");
}

void cmd_qh(Report& rep, const MatrixGerm& a) {
    if (a.rows() == 1 && a.cols() == 1) {
        auto w = quasi_homogeneous(a.at(0, 0));
        rep.results = {{"quasi_homogeneous", w.has_value()}};
        if (w) {
            rep.results["weights"] = w->weights;
            rep.results["degree"] = w->degree;
            rep.lines.push_back("weights " + weights_str(w->weights) + ", degree " + std::to_string(w->degree));
        } else {
            rep.lines.push_back("not quasi-homogeneous");
        }
        return;
    }
    auto w = quasi_homogeneous_matrix(a);
    rep.results = {{"quasi_homogeneous", w.has_value()}};
    if (w) {
        rep.results["weights"] = w->weights;
        rep.results["row_degrees"] = w->row_degrees;
        rep.results["col_degrees"] = w->col_degrees;
        rep.lines.push_back("weights " + weights_str(w->weights) + ", row degrees " + weights_str(w->row_degrees) +
                            ", column degrees " + weights_str(w->col_degrees));
    } else {
        rep.lines.push_back("not quasi-homogeneous");
    }
}

// ---------------------------------------------------------------- geom

void geom_profile(Report& rep, const std::string& kind, int m, int n, int s, int p) {
    GenericProfile g = generic_profile(parse_kind(kind), m, n, s, p);
    rep.input = {{"kind", kind}, {"m", m}, {"n", n}, {"s", s}, {"p", p}};
    rep.results = {{"expected_codim", g.expected_codim}, {"ambient_dim", g.ambient_dim},
                   {"variety_dim", g.variety_dim},       {"isolated", g.isolated},
                   {"smoothable", g.smoothable}};
    rep.lines.push_back("expected codimension " + std::to_string(g.expected_codim) + ", dimension " +
                        std::to_string(g.variety_dim) + " in C^" + std::to_string(g.ambient_dim));
    rep.lines.push_back(std::string("isolated: ") + (g.isolated ? "yes" : "no") +
                        ", smoothable: " + (g.smoothable ? "yes" : "no"));
    if (g.link_reduced_euler) {
        rep.results["link_reduced_euler"] = *g.link_reduced_euler;
        rep.results["euler_obstruction"] = *g.euler_obstruction;
        rep.lines.push_back("reduced Euler characteristic of the complex link " +
                            std::to_string(*g.link_reduced_euler) + ", Euler obstruction " +
                            std::to_string(*g.euler_obstruction));
    }
}

void geom_link(Report& rep, int n, int p) {
    HomotopyDescriptor d = link_homotopy_2xn(n, p);
    rep.input = {{"n", n}, {"p", p}};
    rep.results = {{"homotopy_type", d.str()}, {"reduced_euler", d.reduced_euler()}};
    rep.lines.push_back(d.str());
}

std::pair<std::string, std::string> split_eq(const std::string& s) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw BadInput("expected KEY=VALUE, got '" + s + "'");
    return {s.substr(0, eq), s.substr(eq + 1)};
}

void geom_euler(Report& rep, const std::string& mode, int m, int n, int s, int p,
                const std::vector<std::string>& lambdas, const std::vector<std::string>& mults,
                std::optional<long long> link_euler) {
    EulerInputs in;
    for (const auto& l : lambdas) {
        auto [k, v] = split_eq(l);
        in.lambdas[std::stoi(k)] = std::stoll(v);
    }
    for (const auto& l : mults) {
        auto [k, v] = split_eq(l);
        auto comma = k.find(',');
        if (comma == std::string::npos) throw BadInput("multiplicity key must be r,i");
        in.multiplicities[{std::stoi(k.substr(0, comma)), std::stoi(k.substr(comma + 1))}] = std::stoll(v);
    }
    rep.input = {{"mode", mode}, {"m", m}, {"n", n}, {"s", s}, {"p", p}};
    if (mode == "bouquet") {
        long long le = 0;
        if (link_euler) le = *link_euler;
        else if (m == 2 && s == 2) le = link_homotopy_2xn(n, p).reduced_euler();
        else throw BadInput("--link-euler is required unless m = s = 2");
        long long chi = euler_characteristic(EulerMode::Bouquet, m, n, s, p, in, le);
        HomotopyDescriptor d = bouquet_descriptor(m, n, s, p, in.lambdas);
        rep.results = {{"reduced_euler", chi},
                       {"link_reduced_euler", le},
                       {"literal_sum", bouquet_sum_literal(m, n, s, p, in.lambdas, le)},
                       {"homotopy_type", d.str()}};
        rep.lines.push_back("reduced Euler characteristic " + std::to_string(chi));
        rep.lines.push_back("homotopy type " + d.str());
    } else if (mode == "polar") {
        long long chi = euler_characteristic(EulerMode::Polar, m, n, s, p, in);
        rep.results = {{"euler", chi}};
        rep.lines.push_back("Euler characteristic " + std::to_string(chi));
    } else {
        throw BadInput("mode must be bouquet or polar");
    }
}

void geom_fiber(Report& rep, const std::string& type, int m, int max_j) {
    MilnorFiberTopology t = milnor_fiber_topology(parse_matrix_type(type), m);
    rep.input = {{"type", type}, {"m", m}};
    json groups = json::array();
    std::string gl;
    for (int j = 0; j < std::min(max_j, t.stable_bound); ++j) {
        std::string g = stable_homotopy_group(t.type, j);
        groups.push_back(g);
        gl += (gl.empty() ? "" : ", ") + g;
    }
    rep.results = {{"generators", t.generators},
                   {"mod2_generators", t.mod2_generators},
                   {"stable_bound", t.stable_bound},
                   {"ambient_dim", t.ambient_dim},
                   {"link_sphere_dim", t.link_sphere_dim},
                   {"stable_groups", groups}};
    if (t.module_generator) rep.results["module_generator"] = *t.module_generator;
    std::string gens;
    for (int g : t.generators) gens += (gens.empty() ? "" : ", ") + ("e" + std::to_string(g));
    rep.lines.push_back("rational cohomology: exterior algebra on " + (gens.empty() ? std::string("nothing") : gens));
    if (t.module_generator) rep.lines.push_back("  plus module generator e" + std::to_string(*t.module_generator));
    if (!t.mod2_generators.empty()) {
        std::string m2;
        for (int g : t.mod2_generators) m2 += (m2.empty() ? "" : ", ") + ("s" + std::to_string(g));
        rep.lines.push_back("mod 2 cohomology: exterior algebra on " + m2);
    }
    rep.lines.push_back("pi_j stable for j < " + std::to_string(t.stable_bound) + ": " + gl);
    rep.lines.push_back("link of the origin: S^" + std::to_string(t.link_sphere_dim) + " in C^" +
                        std::to_string(t.ambient_dim));
}

// ---------------------------------------------------------------- verify

void cmd_verify(Report& rep, const std::string& path, int bound, int jobs, const Settings& s) {
    std::vector<TableRow> rows;
    try {
        rows = load_tables(path);
    } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
    }
    VerifyOptions opt;
    opt.param_bound = bound;
    opt.jobs = jobs;
    opt.colength = s.colength();
    VerificationReport r = verify(rows, opt);
    json list = json::array();
    bool uncertified = false;
    for (const auto& o : r.outcomes) {
        json e = {{"table", o.table}, {"row", o.row}, {"params", o.params}, {"check", o.check},
                  {"outcome", outcome_name(o.outcome)}};
        if (o.outcome != Outcome::Skipped) {
            e["expected"] = o.expected;
            e["got"] = o.got;
        }
        if (!o.reason.empty()) e["reason"] = o.reason;
        list.push_back(e);
        std::string line = outcome_name(o.outcome) + "  " + o.table + " " + o.row;
        if (!o.params.empty()) line += " (" + params_string(o.params) + ")";
        line += " " + o.check;
        if (o.outcome == Outcome::Pass) line += " = " + o.got;
        if (o.outcome == Outcome::Fail) line += ": expected " + o.expected + ", got " + o.got;
        if (!o.reason.empty()) line += "  (" + o.reason + ")";
        rep.lines.push_back(line);
        if (o.outcome == Outcome::Fail && o.got.rfind("uncertified", 0) == 0) uncertified = true;
    }
    bool mismatch = false;
    for (const auto& o : r.outcomes)
        if (o.outcome == Outcome::Fail && o.got.rfind("uncertified", 0) != 0) mismatch = true;
    rep.input = {{"file", path}, {"max_param", bound}};
    rep.results = {{"outcomes", list}, {"passed", r.passed}, {"failed", r.failed}, {"skipped", r.skipped}};
    rep.lines.push_back(std::to_string(r.passed) + " passed, " + std::to_string(r.failed) + " failed, " +
                        std::to_string(r.skipped) + " skipped");
    rep.certified = !uncertified;
    if (mismatch) rep.code = Mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"germlab: invariants of determinantal singularities"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_option("--max-order", s.max_order, "largest jet order used for certification")
        ->envname("GERMLAB_MAX_ORDER")
        ->check(CLI::Range(1, 1000));
    app.add_flag("--json", s.as_json, "structured output");
    app.add_flag("--strict-units", s.strict_units, "reject matrices with unit entries");

    std::string file, group = "gl", boundary, kind, mode = "bouquet", type;
    int t_size = 1, pf_size = 1, m = 0, n = 0, sz = 0, p = 0, max_param = 4, jobs = 1, max_j = 16;
    std::vector<std::string> lambdas, mults;
    std::optional<long long> link_euler;

    auto germ_cmd = [&](const std::string& name, const std::string& help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("file", file, "germ file ('-' for standard input)")->required();
        return c;
    };
    auto* c_tau = germ_cmd("tau", "Tjurina number of a matrix germ under a group");
    c_tau->add_option("--group", group, "gl, sl, sym, sym-sl, sk or sk-gl");
    auto* c_mu = germ_cmd("mu", "Milnor number of a function or of det/Pf of a square matrix");
    auto* c_tj = germ_cmd("tjurina", "Tjurina number of a function");
    auto* c_mb = germ_cmd("mu-boundary", "Milnor numbers of a boundary singularity");
    c_mb->add_option("--boundary", boundary, "variable cutting out the boundary")->required();
    auto* c_icis = germ_cmd("mu-icis", "Milnor number of the complete intersection given by the entries");
    auto* c_det = germ_cmd("determinacy", "finite determinacy degree");
    c_det->add_option("--group", group, "gl, sl, sym, sym-sl, sk or sk-gl");
    auto* c_unf = germ_cmd("unfold", "miniversal unfolding basis");
    c_unf->add_option("--group", group, "gl, sl, sym, sym-sl, sk or sk-gl");
    auto* c_min = germ_cmd("minors", "t x t minors");
    c_min->add_option("-t", t_size, "minor size")->required();
    auto* c_pf = germ_cmd("pfaffians", "Pfaffians of 2s x 2s principal submatrices");
    c_pf->add_option("-s", pf_size, "half size")->required();
    auto* c_tr = germ_cmd("tjurina-transform", "chart-by-chart analysis of the Tjurina transform");
    auto* c_b3 = germ_cmd("b3", "Betti numbers of the smoothing of a 3-fold in C^5");
    auto* c_rec = germ_cmd("recognize", "simple singularity type");
    auto* c_qh = germ_cmd("qh", "quasi-homogeneous weights");

    auto* c_geom = app.add_subcommand("geom", "closed-form geometry of generic determinantal varieties");
    c_geom->require_subcommand(1);
    auto* g_prof = c_geom->add_subcommand("profile", "codimension, isolatedness, link invariants");
    g_prof->add_option("kind", kind)->required();
    g_prof->add_option("m", m)->required();
    g_prof->add_option("n", n)->required();
    g_prof->add_option("s", sz)->required();
    g_prof->add_option("p", p)->required();
    auto* g_link = c_geom->add_subcommand("link2xn", "homotopy type of the link of 2 x n in C^p");
    g_link->add_option("n", n)->required();
    g_link->add_option("p", p)->required();
    auto* g_eul = c_geom->add_subcommand("euler", "Euler characteristic of an essential smoothing");
    g_eul->add_option("m", m)->required();
    g_eul->add_option("n", n)->required();
    g_eul->add_option("s", sz)->required();
    g_eul->add_option("p", p)->required();
    g_eul->add_option("--mode", mode, "bouquet or polar");
    g_eul->add_option("--lambda", lambdas, "r=value (repeatable)");
    g_eul->add_option("--mult", mults, "r,i=value (repeatable, polar mode)");
    g_eul->add_option("--link-euler", link_euler, "reduced Euler characteristic of the generic link");
    auto* g_fib = c_geom->add_subcommand("fiber", "topology of the Milnor fibre of det/Pf");
    g_fib->add_option("type", type, "square, symmetric or skew")->required();
    g_fib->add_option("m", m)->required();
    g_fib->add_option("--max-j", max_j, "list stable homotopy groups up to this index");

    auto* c_ver = app.add_subcommand("verify", "recompute the checkable columns of a table file");
    c_ver->add_option("file", file)->required();
    c_ver->add_option("--max-param", max_param, "largest parameter value");
    c_ver->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        app.exit(e, o, e2);
        err << o.str() << e2.str();
        return InputError;
    }

    Report rep;
    std::string command;
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto germ = [&]() {
            MatrixGerm a = load_germ(file);
            rep.input = echo(a);
            return a;
        };
        if (c_tau->parsed()) command = "tau", cmd_tau(rep, germ(), group, s);
        else if (c_mu->parsed()) command = "mu", cmd_mu(rep, germ(), s, false);
        else if (c_tj->parsed()) command = "tjurina", cmd_mu(rep, germ(), s, true);
        else if (c_mb->parsed()) command = "mu-boundary", cmd_mu_boundary(rep, germ(), boundary, s);
        else if (c_icis->parsed()) command = "mu-icis", cmd_mu_icis(rep, germ(), s);
        else if (c_det->parsed()) command = "determinacy", cmd_determinacy(rep, germ(), group, s);
        else if (c_unf->parsed()) command = "unfold", cmd_unfold(rep, germ(), group, s);
        else if (c_min->parsed()) command = "minors", cmd_minors(rep, germ(), t_size);
        else if (c_pf->parsed()) command = "pfaffians", cmd_pfaffians(rep, germ(), pf_size);
        else if (c_tr->parsed()) command = "tjurina-transform", cmd_transform(rep, germ(), s);
        else if (c_b3->parsed()) command = "b3", cmd_b3(rep, germ(), s);
        else if (c_rec->parsed()) command = "recognize", cmd_recognize(rep, germ(), s);
        else if (c_qh->parsed()) command = "qh", cmd_qh(rep, germ());
        else if (g_prof->parsed()) command = "geom profile", geom_profile(rep, kind, m, n, sz, p);
        else if (g_link->parsed()) command = "geom link2xn", geom_link(rep, n, p);
        else if (g_eul->parsed()) command = "geom euler", geom_euler(rep, mode, m, n, sz, p, lambdas, mults, link_euler);
        else if (g_fib->parsed()) command = "geom fiber", geom_fiber(rep, type, m, max_j);
        else if (c_ver->parsed()) command = "verify", cmd_verify(rep, file, max_param, jobs, s);
    } catch (const BadInput& e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    int code = rep.code;
    if (code == Ok && !rep.certified) code = Uncertified;
    if (s.as_json) {
        json j = {{"command", command},
                  {"max_order", s.max_order},
                  {"input", rep.input},
                  {"results", rep.results},
                  {"certified", rep.certified},
                  {"exit_code", code},
                  {"seconds", seconds}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& l : rep.lines) out << l << "\n";
    }
    return code;
}

}  // namespace germlab::cli
