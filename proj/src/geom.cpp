#include "germlab/geom.hpp"

#include <sstream>
#include <stdexcept>

namespace germlab {

long long binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

namespace {

long long sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

// codimension of the singular locus of the generic variety
int next_stratum_codim(Kind kind, int m, int n, int s) {
    return expected_codim(kind, m, n, s - 1);
}

}  // namespace

GenericProfile generic_profile(Kind kind, int m, int n, int s, int p) {
    if (p < 0) throw std::invalid_argument("ambient dimension must be nonnegative");
    if (kind == Kind::General && m > n) std::swap(m, n);
    if (m < 1 || n < 1) throw std::invalid_argument("matrix sizes must be positive");
    GenericProfile g;
    g.expected_codim = expected_codim(kind, m, n, s);
    g.ambient_dim = p;
    g.variety_dim = p >= g.expected_codim ? p - g.expected_codim : -1;
    if (s == 1) {
        g.isolated = true;
        g.smoothable = true;
    } else {
        int bound = next_stratum_codim(kind, m, n, s);
        g.isolated = p <= bound;
        g.smoothable = p < bound;
    }
    if (kind == Kind::General) {
        g.link_reduced_euler = sign_pow(s) * binomial(m - 1, s - 1);
        g.euler_obstruction = binomial(m, s - 1);
    }
    return g;
}

// ------------------------------------------------------------ descriptors

bool HomotopyDescriptor::resolved() const {
    for (const auto& s : summands)
        if (s.type == Summand::Type::LinkBlock) return false;
    return true;
}

long long HomotopyDescriptor::reduced_euler() const {
    long long chi = 0;
    for (const auto& s : summands) {
        switch (s.type) {
            case Summand::Type::Sphere: chi += sign_pow(s.dim) * s.multiplicity; break;
            case Summand::Type::Points: chi += static_cast<long long>(s.count - 1) * s.multiplicity; break;
            case Summand::Type::Contractible: break;
            case Summand::Type::Empty: chi -= s.multiplicity; break;
            case Summand::Type::LinkBlock: throw std::logic_error("descriptor has unresolved link blocks");
        }
    }
    return chi;
}

std::string HomotopyDescriptor::str() const {
    std::vector<std::string> parts;
    for (const auto& s : summands) {
        std::string one;
        switch (s.type) {
            case Summand::Type::Sphere: one = "S^" + std::to_string(s.dim); break;
            case Summand::Type::Points: one = "{" + std::to_string(s.count) + " points}"; break;
            case Summand::Type::Contractible: one = "pt"; break;
            case Summand::Type::Empty: one = "empty"; break;
            case Summand::Type::LinkBlock: {
                std::ostringstream os;
                os << "L^{" << s.s << "," << s.p << "}_{" << s.m << "," << s.n << "}";
                one = s.suspension ? "S^" + std::to_string(s.suspension) + "(" + os.str() + ")" : os.str();
                break;
            }
        }
        for (int i = 0; i < s.multiplicity; ++i) parts.push_back(one);
    }
    if (parts.empty()) return "pt";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " v " + parts[i];
    return out;
}

HomotopyDescriptor link_homotopy_2xn(int n, int p) {
    if (n < 2 || p < 1) throw std::invalid_argument("link_homotopy_2xn needs n >= 2 and p >= 1");
    HomotopyDescriptor d;
    Summand s;
    if (p >= 2 * n) {
        s.type = Summand::Type::Contractible;
    } else if (p > n) {
        s.type = Summand::Type::Sphere;
        s.dim = 2;
    } else if (p == n) {
        s.type = Summand::Type::Sphere;
        s.dim = 1;
        s.multiplicity = n - 1;
    } else if (p == n - 1) {
        s.type = Summand::Type::Points;
        s.count = n;
    } else {
        throw std::invalid_argument("no homotopy type known for p < n - 1");
    }
    d.summands.push_back(s);
    return d;
}

long long complex_link_reduced_euler(int m, int n, int s) {
    if (m > n) std::swap(m, n);
    if (s <= 1) return -1;
    return sign_pow(s) * binomial(m - 1, s - 1);
}

namespace {

// k-fold suspension of a resolved or symbolic block, as wedge summands
std::vector<Summand> suspended_block(int m, int n, int s, int p, int k) {
    if (k < 0) return {};
    if (m > n) std::swap(m, n);
    std::vector<Summand> base;
    bool empty = s <= 1;
    if (!empty) {
        if (m == 2 && s == 2 && p >= n - 1) {
            base = link_homotopy_2xn(n, p).summands;
        } else {
            Summand b;
            b.type = Summand::Type::LinkBlock;
            b.m = m;
            b.n = n;
            b.s = s;
            b.p = p;
            b.suspension = k;
            return {b};
        }
    }
    if (k == 0) {
        if (empty) return {};
        return base;
    }
    if (empty) {
        Summand sp;
        sp.type = Summand::Type::Sphere;
        sp.dim = k - 1;
        return {sp};
    }
    std::vector<Summand> out;
    for (auto b : base) {
        switch (b.type) {
            case Summand::Type::Sphere: b.dim += k; out.push_back(b); break;
            case Summand::Type::Points:
                if (b.count > 1) {
                    Summand sp;
                    sp.type = Summand::Type::Sphere;
                    sp.dim = k;
                    sp.multiplicity = (b.count - 1) * b.multiplicity;
                    out.push_back(sp);
                }
                break;
            default: break;
        }
    }
    return out;
}

void check_lambdas(int m, int n, int s, int p, const std::map<int, long long>& lambdas) {
    for (const auto& [r, l] : lambdas) {
        if (r < 0 || r >= s) throw std::invalid_argument("lambda index out of range");
        if (l < 0) throw std::invalid_argument("negative lambda");
        // a stratum of codimension > p misses a generic p-dimensional section
        if (l > 0 && (m - r) * (n - r) > p)
            throw std::invalid_argument("lambda(" + std::to_string(r) + ") must vanish: stratum codimension " +
                                        std::to_string((m - r) * (n - r)) + " exceeds p");
    }
}

}  // namespace

long long euler_characteristic(EulerMode mode, int m, int n, int s, int p, const EulerInputs& in,
                               long long link_euler) {
    if (m > n) std::swap(m, n);
    if (mode == EulerMode::Bouquet) {
        check_lambdas(m, n, s, p, in.lambdas);
        long long chi = link_euler;
        for (const auto& [r, l] : in.lambdas) {
            int k = p - (m - r) * (n - r) + 1;
            if (k < 0 || l == 0) continue;
            chi += l * sign_pow(k) * complex_link_reduced_euler(m - r, n - r, s - r - 1);
        }
        return chi;
    }
    long long chi = 0;
    for (int r = 0; r < s; ++r) {
        int d = p - (m - r) * (n - r);
        if (d < 0) continue;
        long long inner = 0;
        for (int i = 0; i <= d; ++i) {
            auto it = in.multiplicities.find({r, i});
            if (it == in.multiplicities.end())
                throw std::invalid_argument("missing polar multiplicity m_" + std::to_string(i) + " for r=" +
                                            std::to_string(r));
            inner += sign_pow(i) * it->second;
        }
        chi += inner * sign_pow(s - r - 1) * binomial(m - r, s - r - 1);
    }
    return chi;
}

long long bouquet_sum_literal(int m, int n, int s, int p, const std::map<int, long long>& lambdas,
                              long long link_euler) {
    if (m > n) std::swap(m, n);
    check_lambdas(m, n, s, p, lambdas);
    long long chi = link_euler;
    for (const auto& [r, l] : lambdas)
        chi += sign_pow(p + s - r - (m - r) * (n - r)) * binomial(m - r - 1, s - r - 2) * l;
    return chi;
}

HomotopyDescriptor bouquet_descriptor(int m, int n, int s, int p, const std::map<int, long long>& lambdas) {
    if (m > n) std::swap(m, n);
    check_lambdas(m, n, s, p, lambdas);
    HomotopyDescriptor d;
    d.summands = suspended_block(m, n, s, p, 0);
    for (const auto& [r, l] : lambdas) {
        if (l == 0) continue;
        int mm = m - r, nn = n - r;
        for (auto b : suspended_block(mm, nn, s - r - 1, mm * nn - 1, p - mm * nn + 1)) {
            b.multiplicity *= static_cast<int>(l);
            d.summands.push_back(b);
        }
    }
    return d;
}

// ------------------------------------------------------------ Milnor fibers

MatrixType parse_matrix_type(const std::string& s) {
    if (s == "sq") return MatrixType::Square;
    if (s == "sym") return MatrixType::Symmetric;
    if (s == "sk") return MatrixType::Skew;
    throw std::invalid_argument("unknown matrix type '" + s + "' (expected sq, sym or sk)");
}

std::string matrix_type_name(MatrixType t) {
    switch (t) {
        case MatrixType::Square: return "sq";
        case MatrixType::Symmetric: return "sym";
        case MatrixType::Skew: return "sk";
    }
    return "sq";
}

MilnorFiberTopology milnor_fiber_topology(MatrixType type, int m) {
    if (m < 2) throw std::invalid_argument("matrix size must be at least 2");
    MilnorFiberTopology t;
    t.type = type;
    t.m = m;
    switch (type) {
        case MatrixType::Square:
            for (int d = 3; d <= 2 * m - 1; d += 2) t.generators.push_back(d);
            t.stable_bound = 2 * m;
            t.ambient_dim = m * m;
            break;
        case MatrixType::Symmetric: {
            int top = m % 2 ? 2 * m - 1 : 2 * m - 3;
            for (int d = 5; d <= top; d += 4) t.generators.push_back(d);
            if (m % 2 == 0) t.module_generator = m;
            for (int d = 2; d <= m; ++d) t.mod2_generators.push_back(d);
            t.stable_bound = m - 1;
            t.ambient_dim = m * (m + 1) / 2;
            break;
        }
        case MatrixType::Skew:
            if (m % 2) throw std::invalid_argument("skew matrices need even size");
            for (int d = 5; d <= 2 * m - 3; d += 4) t.generators.push_back(d);
            t.stable_bound = 2 * m - 2;
            t.ambient_dim = m * (m - 1) / 2;
            break;
    }
    t.link_sphere_dim = t.ambient_dim - 2;
    return t;
}

std::string stable_homotopy_group(MatrixType type, int j) {
    if (j < 0) throw std::invalid_argument("negative homotopy degree");
    static const char* su[10] = {"0", "0", "0", "Z", "0", "Z", "0", "Z", "0", "Z"};
    static const char* suso[10] = {"0", "0", "Z2", "Z2", "0", "Z", "0", "0", "0", "Z"};
    static const char* susp[10] = {"0", "0", "0", "0", "0", "Z", "Z2", "Z2", "0", "Z"};
    int k = j < 10 ? j : 2 + (j - 2) % 8;
    switch (type) {
        case MatrixType::Square: return su[k];
        case MatrixType::Symmetric: return suso[k];
        case MatrixType::Skew: return susp[k];
    }
    return "0";
}

}  // namespace germlab
