#include "germlab/germfile.hpp"

#include <cctype>
#include <sstream>

#include "germlab/parse.hpp"

namespace germlab {

namespace {

std::string strip(const std::string& s, std::size_t* lead = nullptr) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        if (lead) *lead = s.size();
        return "";
    }
    std::size_t b = s.find_last_not_of(" \t\r");
    if (lead) *lead = a;
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<std::string> split_names(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string n = strip(item);
        if (n.empty()) throw std::invalid_argument("empty variable name");
        for (char c : n)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw std::invalid_argument("bad variable name '" + n + "'");
        if (std::isdigit(static_cast<unsigned char>(n[0]))) throw std::invalid_argument("bad variable name '" + n + "'");
        out.push_back(n);
    }
    return out;
}

std::vector<std::string> split_matrix_row(const std::string& line, std::vector<std::size_t>* starts) {
    std::size_t lead = 0;
    std::string t = strip(line, &lead);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw std::invalid_argument("matrix row must look like [ e1, e2, ... ]");
    std::vector<std::string> out;
    std::size_t begin = 1;
    int depth = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        char c = t[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == ',' && depth == 0) || i == t.size() - 1) {
            std::string raw = t.substr(begin, i - begin);
            std::size_t off = 0;
            std::string e = strip(raw, &off);
            if (e.empty()) throw std::invalid_argument("empty matrix entry");
            out.push_back(e);
            if (starts) starts->push_back(lead + begin + off);
            begin = i + 1;
        }
    }
    return out;
}

MatrixGerm parse_germ_file(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_vars = false, have_kind = false, in_matrix = false;
    VariableSet vars;
    Kind kind = Kind::General;
    PolyMatrix rows;
    int matrix_line = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::size_t lead = 0;
        std::string t = strip(line, &lead);
        if (t.empty()) continue;
        int col = static_cast<int>(lead) + 1;
        if (t.front() == '[') {
            if (!in_matrix) throw GermFileError("matrix row before 'matrix:'", lineno, col);
            std::vector<std::size_t> starts;
            std::vector<std::string> entries;
            try {
                entries = split_matrix_row(line, &starts);
            } catch (const std::invalid_argument& e) {
                throw GermFileError(e.what(), lineno, col);
            }
            std::vector<Poly> row;
            for (std::size_t k = 0; k < entries.size(); ++k) {
                try {
                    row.push_back(parse_poly(entries[k], vars));
                } catch (const ParseError& e) {
                    throw GermFileError(e.what(), lineno, static_cast<int>(starts[k] + e.position()) + 1);
                }
            }
            if (!rows.empty() && row.size() != rows[0].size())
                throw GermFileError("matrix rows have different lengths", lineno, col);
            rows.push_back(std::move(row));
            continue;
        }
        std::size_t colon = t.find(':');
        if (colon == std::string::npos) throw GermFileError("expected 'key: value'", lineno, col);
        std::string key = strip(t.substr(0, colon));
        std::string value = strip(t.substr(colon + 1));
        int vcol = col + static_cast<int>(colon) + 1;
        if (key == "vars") {
            if (have_vars) throw GermFileError("duplicate 'vars'", lineno, col);
            try {
                vars = VariableSet(split_names(value));
            } catch (const std::invalid_argument& e) {
                throw GermFileError(e.what(), lineno, vcol);
            }
            have_vars = true;
        } else if (key == "kind") {
            if (have_kind) throw GermFileError("duplicate 'kind'", lineno, col);
            try {
                kind = parse_kind(value);
            } catch (const std::invalid_argument& e) {
                throw GermFileError(e.what(), lineno, vcol);
            }
            have_kind = true;
        } else if (key == "matrix") {
            if (!have_vars) throw GermFileError("'matrix:' before 'vars:'", lineno, col);
            if (in_matrix) throw GermFileError("duplicate 'matrix'", lineno, col);
            if (!value.empty()) throw GermFileError("matrix rows go on the following lines", lineno, vcol);
            in_matrix = true;
            matrix_line = lineno;
        } else {
            throw GermFileError("unknown key '" + key + "'", lineno, col);
        }
    }
    if (!have_vars) throw GermFileError("missing 'vars:'", lineno + 1, 1);
    if (!in_matrix || rows.empty()) throw GermFileError("missing matrix rows", lineno + 1, 1);
    try {
        return MatrixGerm(vars, kind, rows);
    } catch (const std::invalid_argument& e) {
        throw GermFileError(e.what(), matrix_line, 1);
    }
}

std::string format_germ_file(const MatrixGerm& a) {
    std::ostringstream os;
    os << "vars: ";
    for (int i = 0; i < a.nvars(); ++i) os << (i ? ", " : "") << a.vars.name(i);
    os << "\nkind: " << kind_name(a.kind) << "\nmatrix:\n";
    for (int i = 0; i < a.rows(); ++i) {
        os << "[ ";
        for (int j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << to_string(a.at(i, j), a.vars);
        os << " ]\n";
    }
    return os.str();
}

}  // namespace germlab
