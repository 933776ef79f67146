#include "germlab/tables.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "germlab/germfile.hpp"
#include "germlab/invariants.hpp"
#include "germlab/parse.hpp"
#include "germlab/tangent.hpp"
#include "germlab/tjurina.hpp"

namespace germlab {

const std::map<std::string, std::vector<std::string>>& check_columns() {
    static const std::map<std::string, std::vector<std::string>> cols = {
        {"mu", {"mu"}},
        {"tau", {"tau"}},
        {"label", {"label"}},
        {"mu_boundary", {"mu_f", "mu_restricted", "mu_boundary"}},
        {"mu_icis", {"mu"}},
        {"tau_icis", {"tau"}},
        {"tau_gl", {"tau_gl"}},
        {"tau_sl", {"tau_sl"}},
        {"tau_sym", {"tau_sym"}},
        {"tau_sk", {"tau_sk"}},
        {"tau_square_assoc", {"tau_square"}},
        {"det_label", {"hypersurface"}},
        {"b3", {"b3"}},
        {"transform", {"transform"}},
        {"tau_entries", {"tau_entries"}},
        {"gm_identity", {}},
    };
    return cols;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, sep)) out.push_back(trim(cur));
    return out;
}

std::pair<std::string, std::string> split_assignment(const std::string& s) {
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected 'column = value' in '" + s + "'");
    return {trim(s.substr(0, eq)), trim(s.substr(eq + 1))};
}

ParamRange parse_range(const std::string& s) {
    std::istringstream in(s);
    ParamRange r;
    std::string lo, hi, extra;
    if (!(in >> r.name >> lo >> hi) || (in >> extra)) throw std::invalid_argument("parameter must be 'name min max'");
    r.min = std::stoll(lo);
    if (hi != "inf") {
        r.max = std::stoll(hi);
        if (*r.max < r.min) throw std::invalid_argument("empty range for parameter " + r.name);
    }
    return r;
}

struct Comparison {
    std::string lhs, op, rhs;
};

Comparison parse_comparison(const std::string& s) {
    static const char* ops[] = {"<=", ">=", "!=", "==", "<", ">"};
    for (const char* op : ops) {
        std::size_t at = s.find(op);
        if (at != std::string::npos)
            return {trim(s.substr(0, at)), op, trim(s.substr(at + std::string(op).size()))};
    }
    throw std::invalid_argument("bad constraint '" + s + "'");
}

bool holds(const Comparison& c, const ParamValues& p) {
    long long a = eval_int_expr(c.lhs, p), b = eval_int_expr(c.rhs, p);
    if (c.op == "<=") return a <= b;
    if (c.op == ">=") return a >= b;
    if (c.op == "<") return a < b;
    if (c.op == ">") return a > b;
    if (c.op == "==") return a == b;
    return a != b;
}

ParamValues first_tuple(const TableRow& row) {
    ParamValues p;
    for (const auto& r : row.params) p[r.name] = r.min;
    return p;
}

void validate_row(const TableRow& row) {
    if (row.table.empty()) throw std::invalid_argument("missing 'table'");
    if (row.name.empty()) throw std::invalid_argument("missing 'name'");
    if (row.vars.empty()) throw std::invalid_argument("missing 'vars'");
    if (row.matrix.empty()) throw std::invalid_argument("missing 'matrix'");
    parse_kind(row.kind);
    const auto& known = check_columns();
    std::set<std::string> readable;
    for (const auto& c : row.checks) {
        auto it = known.find(c);
        if (it == known.end()) throw std::invalid_argument("unknown check '" + c + "'");
        for (const auto& col : it->second) {
            readable.insert(col);
            bool present = false;
            for (const auto& e : row.expected) present |= e.first == col;
            if (!present) throw std::invalid_argument("check '" + c + "' needs an expected '" + col + "'");
        }
    }
    for (const auto& e : row.expected)
        if (!readable.count(e.first)) throw std::invalid_argument("expected column '" + e.first + "' has no check");
    std::set<std::string> names;
    for (const auto& p : row.params)
        if (!names.insert(p.name).second) throw std::invalid_argument("duplicate parameter " + p.name);
    for (const auto& w : row.where) parse_comparison(w);
    // every template must evaluate at the smallest admissible tuple
    auto tuples = parameter_tuples(row, 64);
    if (tuples.empty()) throw std::invalid_argument("no admissible parameter values");
    instantiate(row, tuples.front());
    for (const auto& e : row.expected) substitute_braces(e.second, tuples.front());
}

}  // namespace

std::string substitute_braces(const std::string& templ, const ParamValues& params) {
    std::string out;
    std::size_t i = 0;
    while (i < templ.size()) {
        if (templ[i] == '{') {
            std::size_t close = templ.find('}', i);
            if (close == std::string::npos) throw std::invalid_argument("unclosed '{' in '" + templ + "'");
            out += std::to_string(eval_int_expr(templ.substr(i + 1, close - i - 1), params));
            i = close + 1;
        } else {
            out += templ[i++];
        }
    }
    return out;
}

std::vector<ParamValues> parameter_tuples(const TableRow& row, long long bound) {
    std::vector<ParamValues> out;
    std::vector<Comparison> where;
    for (const auto& w : row.where) where.push_back(parse_comparison(w));
    ParamValues cur = first_tuple(row);
    std::size_t n = row.params.size();
    auto hi = [&](std::size_t i) {
        long long h = bound;
        if (row.params[i].max) h = std::min(h, *row.params[i].max);
        return h;
    };
    for (std::size_t i = 0; i < n; ++i)
        if (hi(i) < row.params[i].min) return out;
    for (;;) {
        bool ok = true;
        for (const auto& c : where) ok = ok && holds(c, cur);
        if (ok) out.push_back(cur);
        // odometer, last parameter fastest
        std::size_t i = n;
        while (i > 0) {
            --i;
            const auto& name = row.params[i].name;
            if (cur[name] < hi(i)) {
                ++cur[name];
                for (std::size_t j = i + 1; j < n; ++j) cur[row.params[j].name] = row.params[j].min;
                break;
            }
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

MatrixGerm instantiate(const TableRow& row, const ParamValues& params) {
    VariableSet vars(row.vars);
    PolyMatrix m;
    for (const auto& line : row.matrix) {
        std::vector<Poly> r;
        for (const auto& e : split_matrix_row(substitute_braces(line, params))) r.push_back(parse_poly(e, vars));
        if (!m.empty() && r.size() != m[0].size()) throw std::invalid_argument("matrix rows have different lengths");
        m.push_back(std::move(r));
    }
    return MatrixGerm(vars, parse_kind(row.kind), m);
}

long long expected_int(const TableRow& row, const std::string& column, const ParamValues& params) {
    for (const auto& e : row.expected)
        if (e.first == column) return eval_int_expr(e.second, params);
    throw std::invalid_argument("row " + row.name + " has no expected '" + column + "'");
}

// ------------------------------------------------------------ text format

std::vector<TableRow> parse_tables(const std::string& text, const std::string& source) {
    std::vector<TableRow> rows;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    TableRow cur;
    bool open = false, in_matrix = false;
    int cur_line = 0;
    auto fail = [&](int line, const std::string& msg) {
        throw std::invalid_argument(source + ":" + std::to_string(line) + ": " + msg);
    };
    auto finish = [&]() {
        if (!open) return;
        try {
            validate_row(cur);
        } catch (const std::exception& e) {
            fail(cur.line, "row '" + cur.name + "': " + e.what());
        }
        rows.push_back(std::move(cur));
        cur = TableRow{};
        open = false;
        in_matrix = false;
    };
    while (std::getline(in, raw)) {
        ++lineno;
        std::string t = trim(raw);
        if (t.empty()) {
            finish();
            continue;
        }
        if (!open) {
            open = true;
            cur.line = lineno;
        }
        cur_line = lineno;
        if (t.front() == '[') {
            if (!in_matrix) fail(lineno, "matrix row outside a matrix block");
            cur.matrix.push_back(t);
            continue;
        }
        in_matrix = false;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos) fail(lineno, "expected 'key: value'");
        std::string key = trim(t.substr(0, colon));
        std::string value = trim(t.substr(colon + 1));
        try {
            if (key == "table") cur.table = value;
            else if (key == "name") cur.name = value;
            else if (key == "origin") cur.origin = value;
            else if (key == "vars") cur.vars = split_names(value);
            else if (key == "kind") cur.kind = value;
            else if (key == "matrix") {
                if (!value.empty()) fail(lineno, "matrix rows go on the following lines");
                in_matrix = true;
            } else if (key == "params") {
                for (const auto& p : split(value, ';')) cur.params.push_back(parse_range(p));
            } else if (key == "where") {
                for (const auto& w : split(value, ';')) cur.where.push_back(w);
            } else if (key == "expected") {
                for (const auto& e : split(value, ';')) cur.expected.push_back(split_assignment(e));
            } else if (key == "checks") {
                for (const auto& c : split(value, ',')) cur.checks.push_back(c);
            } else if (key == "recorded") {
                auto a = split_assignment(value);
                if (a.second.find('|') == std::string::npos) fail(lineno, "recorded column needs '| reason'");
                cur.recorded.push_back(a);
            } else if (key == "note") {
                cur.notes.push_back(value);
            } else {
                fail(lineno, "unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            std::string msg = e.what();
            if (msg.rfind(source + ":", 0) == 0) throw;
            fail(lineno, msg);
        }
    }
    (void)cur_line;
    finish();
    return rows;
}

std::vector<TableRow> load_tables(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_tables(ss.str(), path);
}

std::string format_tables(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const TableRow& row = rows[r];
        if (r) os << "\n";
        os << "table: " << row.table << "\n";
        os << "name: " << row.name << "\n";
        if (!row.origin.empty()) os << "origin: " << row.origin << "\n";
        os << "vars: ";
        for (std::size_t i = 0; i < row.vars.size(); ++i) os << (i ? ", " : "") << row.vars[i];
        os << "\nkind: " << row.kind << "\nmatrix:\n";
        for (const auto& m : row.matrix) os << "  " << m << "\n";
        if (!row.params.empty()) {
            os << "params: ";
            for (std::size_t i = 0; i < row.params.size(); ++i) {
                const auto& p = row.params[i];
                os << (i ? "; " : "") << p.name << " " << p.min << " " << (p.max ? std::to_string(*p.max) : "inf");
            }
            os << "\n";
        }
        if (!row.where.empty()) {
            os << "where: ";
            for (std::size_t i = 0; i < row.where.size(); ++i) os << (i ? "; " : "") << row.where[i];
            os << "\n";
        }
        if (!row.expected.empty()) {
            os << "expected: ";
            for (std::size_t i = 0; i < row.expected.size(); ++i)
                os << (i ? "; " : "") << row.expected[i].first << " = " << row.expected[i].second;
            os << "\n";
        }
        if (!row.checks.empty()) {
            os << "checks: ";
            for (std::size_t i = 0; i < row.checks.size(); ++i) os << (i ? ", " : "") << row.checks[i];
            os << "\n";
        }
        for (const auto& rc : row.recorded) os << "recorded: " << rc.first << " = " << rc.second << "\n";
        for (const auto& n : row.notes) os << "note: " << n << "\n";
    }
    return os.str();
}

void save_tables(const std::string& path, const std::vector<TableRow>& rows) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + path);
    f << format_tables(rows);
}

// ------------------------------------------------------------ checks

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        case Outcome::Skipped: return "skipped";
    }
    return "?";
}

std::string params_string(const ParamValues& p) {
    std::string s;
    for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + std::to_string(v);
    return s;
}

namespace {

std::string strip_label(std::string s) {
    std::string out;
    for (char c : s)
        if (c != '_' && c != ' ' && c != '{' && c != '}') out += c;
    // D_3 and A_3 are the same singularity
    if (out == "D3") out = "A3";
    return out;
}

std::vector<std::string> label_list(const std::string& s) {
    std::vector<std::string> out;
    if (trim(s) == "-") return out;
    for (const auto& part : split(s, ',')) out.push_back(strip_label(part));
    std::sort(out.begin(), out.end());
    return out;
}

std::string join(const std::vector<std::string>& v) {
    if (v.empty()) return "-";
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
}

struct Value {
    std::string text;
    bool certified = true;
    int order = 0;
};

Value from_colength(const ColengthResult& r) {
    return {std::to_string(r.dim), r.certified, r.certified_at};
}

const Poly& single_entry(const MatrixGerm& g) {
    if (g.rows() != 1 || g.cols() != 1) throw std::invalid_argument("check needs a 1 x 1 matrix (a function)");
    return g.at(0, 0);
}

std::vector<Poly> row_entries(const MatrixGerm& g) {
    std::vector<Poly> f;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) f.push_back(g.at(i, j));
    return f;
}

MatrixGerm as_general(const MatrixGerm& g) { return MatrixGerm(g.vars, Kind::General, g.entries); }

// symmetric 3 x 3 plus a generic skew matrix in three new variables
MatrixGerm with_skew_part(const MatrixGerm& g) {
    if (g.rows() != 3 || g.cols() != 3) throw std::invalid_argument("needs a 3 x 3 matrix");
    std::vector<std::string> extra;
    for (const char* base : {"s1", "s2", "s3"}) {
        std::string n = base;
        while (g.vars.index_of(n) >= 0) n += "_";
        extra.push_back(n);
    }
    VariableSet vars = g.vars.extended(extra);
    int nv = vars.size(), p = g.nvars();
    std::vector<int> map(p);
    for (int i = 0; i < p; ++i) map[i] = i;
    PolyMatrix e(3, std::vector<Poly>(3, Poly(nv)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e[i][j] = g.at(i, j).embed(nv, map);
    int k = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j, ++k) {
            e[i][j] += Poly::var(nv, p + k);
            e[j][i] -= Poly::var(nv, p + k);
        }
    return MatrixGerm(vars, Kind::General, e);
}

TauOptions tau_opt(const ColengthOptions& opt) {
    TauOptions t;
    t.colength = opt;
    return t;
}

Value compute(const std::string& check, const std::string& column, const MatrixGerm& g, const ColengthOptions& opt) {
    if (check == "mu") return from_colength(milnor(single_entry(g), opt));
    if (check == "tau") return from_colength(tjurina_number(single_entry(g), opt));
    if (check == "label") {
        SingularityLabel l = ade_recognize(single_entry(g), opt);
        return {l.str(), l.family != Family::NotIsolated, 0};
    }
    if (check == "mu_boundary") {
        BoundaryMilnorTriple t = boundary_milnor(single_entry(g), 0, opt);
        if (t.mu_f.dim + t.mu_restricted.dim != t.mu_boundary.dim)
            throw std::runtime_error("boundary sum identity violated");
        const ColengthResult& r =
            column == "mu_f" ? t.mu_f : (column == "mu_restricted" ? t.mu_restricted : t.mu_boundary);
        return from_colength(r);
    }
    if (check == "mu_icis") {
        IcisMilnor im = milnor_icis(row_entries(g), opt);
        int order = im.orders.empty() ? 0 : *std::max_element(im.orders.begin(), im.orders.end());
        return {std::to_string(im.mu), im.certified, order};
    }
    if (check == "tau_icis") return from_colength(tau_icis(g, tau_opt(opt)).result);
    if (check == "tau_gl") return from_colength(tau(as_general(g), Group::GL, tau_opt(opt)).result);
    if (check == "tau_sl") return from_colength(tau(as_general(g), Group::SL, tau_opt(opt)).result);
    if (check == "tau_sym") return from_colength(tau(g, Group::Sym, tau_opt(opt)).result);
    if (check == "tau_sk") return from_colength(tau(g, Group::Skew, tau_opt(opt)).result);
    if (check == "tau_square_assoc") return from_colength(tau(with_skew_part(g), Group::GL, tau_opt(opt)).result);
    if (check == "det_label") {
        SingularityLabel l = ade_recognize(defining_equation(g), opt);
        return {l.str(), l.family != Family::NotIsolated, 0};
    }
    if (check == "tau_entries") {
        MatrixGerm row(g.vars, Kind::General, PolyMatrix(1, row_entries(g)));
        return from_colength(tau_icis(row, tau_opt(opt)).result);
    }
    if (check == "b3" || check == "transform") {
        B3Result b = b3_threefold(g, opt);
        if (b.caveat) return {"caveat: singular points off the chart origins", false, 0};
        if (check == "b3") return {std::to_string(b.b3), b.certified, 0};
        std::vector<std::string> labels;
        for (const auto& c : b.charts)
            if (!c.smooth && c.label) labels.push_back(c.label->str());
        std::sort(labels.begin(), labels.end());
        return {join(labels), b.certified, 0};
    }
    throw std::invalid_argument("unknown check '" + check + "'");
}

// tau_SL against mu of the defining equation (minus the submaximal colength
// at the boundary dimension); nullopt when neither identity applies.
std::optional<std::pair<long long, long long>> gm_sides(const MatrixGerm& g, const ColengthOptions& opt,
                                                        bool& certified) {
    certified = true;
    if (g.rows() != g.cols()) return std::nullopt;
    int p = g.nvars();
    int smooth_p = g.kind == Kind::General ? 3 : (g.kind == Kind::Symmetric ? 2 : 5);
    int boundary_p = boundary_dimension(g.kind);
    if (g.kind == Kind::Skew && g.rows() % 2) return std::nullopt;
    Group grp = g.kind == Kind::General ? Group::SL : (g.kind == Kind::Symmetric ? Group::SymSL : Group::Skew);
    if (p == smooth_p) {
        ColengthResult t = tau(g, grp, tau_opt(opt)).result;
        ColengthResult mu = milnor(defining_equation(g), opt);
        certified = t.certified && mu.certified;
        return std::make_pair<long long, long long>(t.dim, mu.dim);
    }
    if (p == boundary_p) {
        ColengthResult t = tau(g, grp, tau_opt(opt)).result;
        SingularMilnor s = singular_milnor_hypersurface(g, opt);
        certified = t.certified && s.certified;
        return std::make_pair<long long, long long>(t.dim, s.mu_a);
    }
    return std::nullopt;
}

}  // namespace

CheckOutcome run_check(const TableRow& row, const ParamValues& params, const std::string& check,
                       const ColengthOptions& opt) {
    CheckOutcome o;
    o.table = row.table;
    o.row = row.name;
    o.params = params;
    o.check = check;
    auto t0 = std::chrono::steady_clock::now();
    try {
        MatrixGerm g = instantiate(row, params);
        if (check == "gm_identity") {
            bool cert = true;
            auto sides = gm_sides(g, opt, cert);
            if (!sides) {
                o.outcome = Outcome::Skipped;
                o.reason = "no tau = mu identity for this size and dimension";
            } else {
                o.expected = std::to_string(sides->second);
                o.got = cert ? std::to_string(sides->first) : "uncertified";
                o.outcome = cert && sides->first == sides->second ? Outcome::Pass : Outcome::Fail;
            }
        } else {
            const auto& cols = check_columns().at(check);
            o.outcome = Outcome::Pass;
            std::vector<std::string> exp_parts, got_parts;
            for (const auto& col : cols) {
                std::string templ;
                for (const auto& e : row.expected)
                    if (e.first == col) templ = e.second;
                Value v = compute(check, col, g, opt);
                std::string expected, got;
                bool match;
                if (check == "label" || check == "det_label") {
                    expected = strip_label(substitute_braces(templ, params));
                    got = strip_label(v.text);
                    match = expected == got;
                } else if (check == "transform") {
                    expected = join(label_list(substitute_braces(templ, params)));
                    got = join(label_list(v.text));
                    match = expected == got;
                } else {
                    expected = std::to_string(eval_int_expr(templ, params));
                    got = v.text;
                    match = expected == got;
                }
                if (!v.certified) {
                    got = "uncertified (" + v.text + ")";
                    match = false;
                }
                exp_parts.push_back(expected);
                got_parts.push_back(got);
                if (!match) o.outcome = Outcome::Fail;
            }
            auto cat = [](const std::vector<std::string>& v) {
                std::string s;
                for (const auto& x : v) s += (s.empty() ? "" : " / ") + x;
                return s;
            };
            o.expected = cat(exp_parts);
            o.got = cat(got_parts);
        }
    } catch (const std::exception& e) {
        o.outcome = Outcome::Fail;
        o.got = "error";
        o.reason = e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

VerificationReport verify(const std::vector<TableRow>& rows, const VerifyOptions& opt) {
    struct Task {
        const TableRow* row;
        ParamValues params;
        std::string check;
        std::string recorded_reason;  // non-empty: skipped without computing
    };
    std::vector<Task> tasks;
    for (const auto& row : rows)
        for (const auto& p : parameter_tuples(row, opt.param_bound)) {
            for (const auto& c : row.checks) tasks.push_back({&row, p, c, ""});
            for (const auto& rc : row.recorded) {
                std::size_t bar = rc.second.find('|');
                tasks.push_back({&row, p, rc.first, "recorded-only: " + trim(rc.second.substr(bar + 1))});
            }
        }
    VerificationReport rep;
    rep.outcomes.resize(tasks.size());
    auto t0 = std::chrono::steady_clock::now();
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next++;
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            if (!t.recorded_reason.empty()) {
                CheckOutcome o;
                o.table = t.row->table;
                o.row = t.row->name;
                o.params = t.params;
                o.check = t.check;
                o.outcome = Outcome::Skipped;
                o.reason = t.recorded_reason;
                rep.outcomes[i] = std::move(o);
            } else {
                rep.outcomes[i] = run_check(*t.row, t.params, t.check, opt.colength);
            }
        }
    };
    int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& o : rep.outcomes) {
        if (o.outcome == Outcome::Pass) ++rep.passed;
        else if (o.outcome == Outcome::Fail) ++rep.failed;
        else ++rep.skipped;
    }
    return rep;
}

}  // namespace germlab
