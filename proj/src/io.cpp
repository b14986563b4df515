#include "gmet/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gmet/errors.hpp"

namespace gmet {

namespace {

// next non-comment, non-blank line
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

std::istringstream line_stream(std::istream& in, const char* what) {
    std::string line;
    if (!next_line(in, line)) throw FormatError(std::string("unexpected end of input reading ") + what);
    return std::istringstream(line);
}

}  // namespace

Digraph read_graph(std::istream& in) {
    auto head = line_stream(in, "graph header");
    int n, m;
    if (!(head >> n >> m) || n < 0 || m < 0) throw FormatError("graph header must be 'n m'");
    Digraph g(n);
    std::set<std::pair<int, int>> seen;
    for (int i = 0; i < m; ++i) {
        auto ls = line_stream(in, "edge");
        int u, v;
        if (!(ls >> u >> v)) throw FormatError("edge line must be 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n) throw FormatError("edge endpoint out of range");
        if (u == v) throw FormatError("self-loops are not allowed");
        if (!seen.emplace(u, v).second) throw FormatError("duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

void write_graph(std::ostream& out, const Digraph& g) {
    auto es = g.edges();
    out << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

LinearCode read_code(std::istream& in) {
    auto head = line_stream(in, "code header");
    int q, n, k;
    if (!(head >> q >> n >> k) || n < 0 || k < 0) throw FormatError("code header must be 'q n k'");
    if (!is_prime(q)) throw FormatError("q must be prime");
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < k; ++i) {
        auto ls = line_stream(in, "code row");
        std::vector<int> row(n);
        for (int j = 0; j < n; ++j) {
            if (!(ls >> row[j])) throw FormatError("code row too short");
            if (row[j] < 0 || row[j] >= q) throw FormatError("entry is not a residue mod q");
        }
        rows.push_back(std::move(row));
    }
    return rref(q, n, rows);
}

void write_code(std::ostream& out, const LinearCode& c) {
    out << c.q << ' ' << c.n << ' ' << c.k() << '\n';
    for (const auto& row : c.basis) {
        for (int j = 0; j < c.n; ++j) out << row[j] << (j + 1 == c.n ? '\n' : ' ');
        if (c.n == 0) out << '\n';
    }
}

std::string support_to_bitstring(std::uint64_t mask, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) s[n - 1 - i] = '1';  // rightmost character = vertex 0
    return s;
}

std::uint64_t bitstring_to_mask(const std::string& s) {
    std::uint64_t m = 0;
    const int n = static_cast<int>(s.size());
    for (int i = 0; i < n; ++i) {
        char c = s[n - 1 - i];
        if (c == '1')
            m |= std::uint64_t{1} << i;
        else if (c != '0')
            throw FormatError("bitmask must be a binary string");
    }
    return m;
}

WeightTable read_weight_table(std::istream& in) {
    WeightTable t;
    std::string line;
    bool first = true;
    while (next_line(in, line)) {
        std::istringstream ls(line);
        std::string bits;
        int w;
        if (!(ls >> bits >> w)) throw FormatError("weight table line must be 'bitmask weight'");
        if (first) {
            t.n = static_cast<int>(bits.size());
            first = false;
        } else if (static_cast<int>(bits.size()) != t.n) {
            throw FormatError("inconsistent bitmask lengths");
        }
        if (w < 0) throw FormatError("negative weight");
        std::uint64_t mask = bitstring_to_mask(bits);
        if (!t.weights.emplace(mask, w).second) throw FormatError("duplicate weight table entry");
    }
    if (first) throw FormatError("empty weight table");
    return t;
}

void write_weight_table(std::ostream& out, const WeightTable& t) {
    for (const auto& [mask, w] : t.weights) out << support_to_bitstring(mask, t.n) << ' ' << w << '\n';
}

ReducedForm read_reduced_form(std::istream& in) {
    auto head = line_stream(in, "reduced form header");
    int m, h;
    if (!(head >> m >> h) || m < 0) throw FormatError("reduced form header must be 'm h'");
    ReducedForm r;
    r.m = m;
    r.height = h;
    r.L.assign(m, 0);
    r.level.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        auto ls = line_stream(in, "reduced vertex");
        int v, lw, lev;
        if (!(ls >> v >> lw >> lev) || v < 0 || v >= m || lw < 1 || lev < 1)
            throw FormatError("reduced vertex line must be 'v L level'");
        r.L[v] = lw;
        r.level[v] = lev;
    }
    auto ec = line_stream(in, "edge count");
    int e;
    if (!(ec >> e) || e < 0) throw FormatError("bad edge count");
    r.hasse = Digraph(m);
    for (int i = 0; i < e; ++i) {
        auto ls = line_stream(in, "hasse edge");
        int u, v;
        if (!(ls >> u >> v)) throw FormatError("edge line must be 'u v'");
        r.hasse.add_edge(u, v);
    }
    int n = 0;
    for (int lw : r.L) n += lw;
    r.pi.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        auto ls = line_stream(in, "projection");
        int p;
        if (!(ls >> p) || p < 0 || p >= m) throw FormatError("bad projection entry");
        r.pi[i] = p;
    }
    return r;
}

void write_reduced_form(std::ostream& out, const ReducedForm& r) {
    out << r.m << ' ' << r.height << '\n';
    for (int v = 0; v < r.m; ++v) out << v << ' ' << r.L[v] << ' ' << r.level[v] << '\n';
    auto es = r.hasse.edges();
    out << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    for (int p : r.pi) out << p << '\n';
}

LinearMap read_linear_map(std::istream& in) {
    auto head = line_stream(in, "map header");
    int q, n;
    if (!(head >> q >> n) || n < 0) throw FormatError("map header must be 'q n'");
    if (!is_prime(q)) throw FormatError("q must be prime");
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        auto ls = line_stream(in, "map row");
        for (int j = 0; j < n; ++j) {
            if (!(ls >> rows[i][j])) throw FormatError("map row too short");
            if (rows[i][j] < 0 || rows[i][j] >= q) throw FormatError("entry is not a residue mod q");
        }
    }
    return LinearMap(q, std::move(rows));
}

void write_linear_map(std::ostream& out, const LinearMap& t) {
    out << t.q << ' ' << t.n() << '\n';
    for (const auto& row : t.matrix) {
        for (int j = 0; j < t.n(); ++j) out << row[j] << (j + 1 == t.n() ? '\n' : ' ');
        if (t.n() == 0) out << '\n';
    }
}

std::string enumerator_to_json(const WeightEnumerator& w, int q, int n) {
    nlohmann::json j;
    j["coeffs"] = w.coeffs;
    j["q"] = q;
    j["n"] = n;
    return j.dump();
}

WeightEnumerator enumerator_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    WeightEnumerator w;
    w.coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
    return w;
}

namespace {

template <class T>
T load_from(const std::string& path, T (*reader)(std::istream&), const char* what) {
    std::ifstream in(path);
    if (!in) throw FormatError(std::string("cannot open ") + what + " file: " + path);
    return reader(in);
}

}  // namespace

Digraph load_graph(const std::string& path) { return load_from(path, read_graph, "graph"); }
LinearCode load_code(const std::string& path) { return load_from(path, read_code, "code"); }
WeightTable load_weight_table(const std::string& path) { return load_from(path, read_weight_table, "weight table"); }
LinearMap load_linear_map(const std::string& path) { return load_from(path, read_linear_map, "linear map"); }

}  // namespace gmet
