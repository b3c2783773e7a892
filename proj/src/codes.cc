#include "ftlab/codes.hh"

#include <cassert>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ftlab {

namespace {

using Row = std::vector<uint8_t>;

Row to_row(const std::vector<int>& support, int n) {
    Row r(n, 0);
    for (int q : support) r[q] = 1;
    return r;
}

std::vector<int> to_support(const Row& r) {
    std::vector<int> s;
    for (int q = 0; q < (int)r.size(); q++)
        if (r[q]) s.push_back(q);
    return s;
}

void add_into(Row& a, const Row& b) {
    for (size_t i = 0; i < a.size(); i++) a[i] ^= b[i];
}

int dot(const Row& a, const Row& b) {
    int d = 0;
    for (size_t i = 0; i < a.size(); i++) d ^= a[i] & b[i];
    return d;
}

// in-place RREF; returns pivot column per row
std::vector<int> rref(std::vector<Row>& m) {
    std::vector<int> pivots;
    int n = m.empty() ? 0 : (int)m[0].size();
    size_t rank = 0;
    for (int col = 0; col < n && rank < m.size(); col++) {
        size_t sel = rank;
        while (sel < m.size() && !m[sel][col]) sel++;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        for (size_t i = 0; i < m.size(); i++)
            if (i != rank && m[i][col]) add_into(m[i], m[rank]);
        pivots.push_back(col);
        rank++;
    }
    m.resize(rank);
    return pivots;
}

// reduce v against an RREF basis
Row reduce(Row v, const std::vector<Row>& basis, const std::vector<int>& pivots) {
    for (size_t i = 0; i < basis.size(); i++)
        if (v[pivots[i]]) add_into(v, basis[i]);
    return v;
}

bool is_zero(const Row& v) {
    for (uint8_t b : v)
        if (b) return false;
    return true;
}

std::vector<Row> kernel(std::vector<Row> m, int n) {
    std::vector<int> pivots = rref(m);
    std::vector<uint8_t> is_pivot(n, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<Row> out;
    for (int free_col = 0; free_col < n; free_col++) {
        if (is_pivot[free_col]) continue;
        Row v(n, 0);
        v[free_col] = 1;
        for (size_t i = 0; i < m.size(); i++)
            if (m[i][free_col]) v[pivots[i]] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Row> stab_rows(const std::vector<std::vector<int>>& stabs, int n) {
    std::vector<Row> m;
    for (const auto& s : stabs) m.push_back(to_row(s, n));
    return m;
}

// coset representatives of ker(killer) / rowspan(stab): the logical operators
std::vector<Row> logical_reps(const std::vector<Row>& killer_kernel, std::vector<Row> stab,
                              int n, int k) {
    std::vector<int> sp = rref(stab);
    std::vector<Row> acc = stab;       // grows: stabilizers + chosen logicals
    std::vector<int> accp = sp;
    std::vector<Row> out;
    for (const Row& cand : killer_kernel) {
        Row red = reduce(cand, acc, accp);
        if (is_zero(red)) continue;
        out.push_back(red);
        // extend the accumulated RREF
        int piv = 0;
        while (!red[piv]) piv++;
        for (size_t i = 0; i < acc.size(); i++)
            if (acc[i][piv]) add_into(acc[i], red);
        acc.push_back(red);
        accp.push_back(piv);
        // keep (acc, accp) sorted by pivot so reduce() stays valid
        for (size_t i = acc.size() - 1; i > 0 && accp[i] < accp[i - 1]; i--) {
            std::swap(acc[i], acc[i - 1]);
            std::swap(accp[i], accp[i - 1]);
        }
        if ((int)out.size() == k) break;
    }
    return out;
}

std::vector<Row> gf2_invert(std::vector<Row> m) {
    int k = (int)m.size();
    std::vector<Row> inv(k, Row(k, 0));
    for (int i = 0; i < k; i++) inv[i][i] = 1;
    for (int col = 0; col < k; col++) {
        int sel = col;
        while (sel < k && !m[sel][col]) sel++;
        if (sel == k) throw std::runtime_error("singular pairing matrix");
        std::swap(m[col], m[sel]);
        std::swap(inv[col], inv[sel]);
        for (int i = 0; i < k; i++)
            if (i != col && m[i][col]) {
                add_into(m[i], m[col]);
                add_into(inv[i], inv[col]);
            }
    }
    return inv;
}

}  // namespace

void derive_logicals(CssCode& c) {
    auto hx = stab_rows(c.x_stabs, c.n);
    auto hz = stab_rows(c.z_stabs, c.n);
    std::vector<Row> lx = logical_reps(kernel(hz, c.n), hx, c.n, c.k);
    std::vector<Row> lz = logical_reps(kernel(hx, c.n), hz, c.n, c.k);
    assert((int)lx.size() == c.k && (int)lz.size() == c.k);
    // pair: want dot(lx[i], lz'[j]) = delta_ij
    std::vector<Row> pairing(c.k, Row(c.k, 0));
    for (int i = 0; i < c.k; i++)
        for (int j = 0; j < c.k; j++) pairing[i][j] = (uint8_t)dot(lx[i], lz[j]);
    std::vector<Row> ninv = gf2_invert(pairing);
    std::vector<Row> lz2(c.k, Row(c.n, 0));
    for (int j = 0; j < c.k; j++)
        for (int t = 0; t < c.k; t++)
            if (ninv[t][j]) add_into(lz2[j], lz[t]);
    c.logical_x.clear();
    c.logical_z.clear();
    for (int i = 0; i < c.k; i++) {
        c.logical_x.push_back(to_support(lx[i]));
        c.logical_z.push_back(to_support(lz2[i]));
    }
}

CssCode code_c4() {
    CssCode c;
    c.name = "c4";
    c.n = 4;
    c.k = 2;
    c.distance = 2;
    c.x_stabs = {{0, 1, 2, 3}};
    c.z_stabs = {{0, 1, 2, 3}};
    c.logical_x = {{0, 1}, {1, 3}};
    c.logical_z = {{0, 2}, {2, 3}};
    return c;
}

CssCode code_c6() {
    CssCode c;
    c.name = "c6";
    c.n = 6;
    c.k = 2;
    c.distance = 2;
    c.x_stabs = {{0, 2, 5}, {1, 2, 3, 4}};
    c.z_stabs = {{0, 1, 2}, {0, 3, 4, 5}};
    c.logical_x = {{1, 2}, {0, 2, 3}};
    c.logical_z = {{2, 3, 5}, {3, 4}};
    return c;
}

static std::vector<std::vector<int>> hamming_checks(int r) {
    int n = (1 << r) - 1;
    std::vector<std::vector<int>> out(r);
    for (int t = 0; t < r; t++)
        for (int j = 0; j < n; j++)
            if (((j + 1) >> t) & 1) out[t].push_back(j);
    return out;
}

CssCode code_steane() {
    CssCode c;
    c.name = "steane";
    c.n = 7;
    c.k = 1;
    c.distance = 3;
    c.x_stabs = hamming_checks(3);
    c.z_stabs = c.x_stabs;
    c.logical_x = {{0, 1, 2}};
    c.logical_z = {{0, 1, 2}};
    return c;
}

CssCode code_hamming(int r) {
    assert(r >= 3);
    CssCode c;
    c.name = "hamming" + std::to_string(r);
    c.n = (1 << r) - 1;
    c.k = c.n - 2 * r;
    c.distance = 3;
    c.x_stabs = hamming_checks(r);
    c.z_stabs = c.x_stabs;
    derive_logicals(c);
    return c;
}

Circuit encode_zero_circuit(const CssCode& c, int offset) {
    auto m = stab_rows(c.x_stabs, c.n);
    std::vector<int> pivots = rref(m);
    std::vector<uint8_t> is_pivot(c.n, 0);
    for (int p : pivots) is_pivot[p] = 1;
    Circuit out;
    for (int q = 0; q < c.n; q++)
        out.add(is_pivot[q] ? LocKind::PrepX : LocKind::PrepZ, offset + q);
    for (size_t i = 0; i < m.size(); i++)
        for (int q = 0; q < c.n; q++)
            if (m[i][q] && q != pivots[i]) out.add(LocKind::Cnot, offset + pivots[i], offset + q);
    return out;
}

Circuit encode_plus_circuit(const CssCode& c, int offset) {
    // dual of encode_zero: Z-stabilizer pivots in |0>, rest |+>, CNOTs reversed
    auto m = stab_rows(c.z_stabs, c.n);
    std::vector<int> pivots = rref(m);
    std::vector<uint8_t> is_pivot(c.n, 0);
    for (int p : pivots) is_pivot[p] = 1;
    Circuit out;
    for (int q = 0; q < c.n; q++)
        out.add(is_pivot[q] ? LocKind::PrepZ : LocKind::PrepX, offset + q);
    for (size_t i = 0; i < m.size(); i++)
        for (int q = 0; q < c.n; q++)
            if (m[i][q] && q != pivots[i]) out.add(LocKind::Cnot, offset + q, offset + pivots[i]);
    return out;
}

LatinRectangle load_latin(int r) {
    std::string path = std::string(FTLAB_DATA_DIR) + "/latin_r" + std::to_string(r) + ".txt";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing schedule file " + path);
    LatinRectangle lr;
    in >> lr.r >> lr.n;
    lr.rows.assign(lr.r, std::vector<int>(lr.n, 0));
    for (int i = 0; i < lr.r; i++)
        for (int j = 0; j < lr.n; j++) {
            in >> lr.rows[i][j];
            if (lr.rows[i][j] > lr.depth) lr.depth = lr.rows[i][j];
        }
    if (!in) throw std::runtime_error("truncated schedule file " + path);
    return lr;
}

Circuit latin_encode_circuit(const LatinRectangle& lr, char basis, int offset) {
    assert(basis == 'Z' || basis == 'X');
    Circuit out;
    std::vector<uint8_t> is_ctrl(lr.n, 0);
    for (int i = 0; i < lr.r; i++) is_ctrl[(1 << i) - 1] = 1;
    for (int q = 0; q < lr.n; q++) {
        bool plus = is_ctrl[q] == (basis == 'Z');
        out.add(plus ? LocKind::PrepX : LocKind::PrepZ, offset + q);
    }
    for (int d = 1; d <= lr.depth; d++)
        for (int i = 0; i < lr.r; i++)
            for (int j = 0; j < lr.n; j++)
                if (lr.rows[i][j] == d) {
                    int cq = offset + (1 << i) - 1, tq = offset + j;
                    if (basis == 'Z')
                        out.add(LocKind::Cnot, cq, tq);
                    else
                        out.add(LocKind::Cnot, tq, cq);
                }
    return out;
}

}  // namespace ftlab
