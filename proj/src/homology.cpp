#include "twist/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twist {

HomClass zero_class(int g) { return HomClass(2 * g, Int(0)); }

HomClass basis_a(int g, int i)
{
    HomClass v = zero_class(g);
    v.at(2 * (i - 1)) = 1;
    return v;
}

HomClass basis_b(int g, int i)
{
    HomClass v = zero_class(g);
    v.at(2 * (i - 1) + 1) = 1;
    return v;
}

HomClass negate(const HomClass& v)
{
    HomClass r(v.size());
    for (size_t k = 0; k < v.size(); ++k) r[k] = -v[k];
    return r;
}

HomClass add(const HomClass& u, const HomClass& v)
{
    if (u.size() != v.size()) throw std::invalid_argument("class length mismatch");
    HomClass r(u.size());
    for (size_t k = 0; k < u.size(); ++k) r[k] = u[k] + v[k];
    return r;
}

bool is_zero(const HomClass& v)
{
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool equal_up_to_sign(const HomClass& u, const HomClass& v)
{
    return u == v || u == negate(v);
}

Int pairing(const HomClass& u, const HomClass& v)
{
    if (u.size() != v.size() || u.size() % 2 != 0)
        throw std::invalid_argument("pairing: class length mismatch");
    Int s = 0;
    for (size_t k = 0; k < u.size(); k += 2) s += u[k] * v[k + 1] - u[k + 1] * v[k];
    return s;
}

std::uint64_t z2_bits(const HomClass& v)
{
    if (v.size() > 64) throw std::invalid_argument("z2_bits: genus too large");
    std::uint64_t bits = 0;
    for (size_t k = 0; k < v.size(); ++k)
        if (boost::multiprecision::bit_test(abs(v[k]), 0)) bits |= std::uint64_t(1) << k;
    return bits;
}

int z2_pairing(std::uint64_t u, std::uint64_t v, int g)
{
    int s = 0;
    for (int i = 0; i < g; ++i) {
        int ua = (u >> (2 * i)) & 1, ub = (u >> (2 * i + 1)) & 1;
        int va = (v >> (2 * i)) & 1, vb = (v >> (2 * i + 1)) & 1;
        s ^= (ua & vb) ^ (ub & va);
    }
    return s;
}

SpMatrix::SpMatrix(int dim) : n_(dim), a_(dim * dim, Int(0))
{
    for (int i = 0; i < dim; ++i) at(i, i) = 1;
}

namespace {

// x -> x + s*<x,c>c, i.e. I + s * c r^T with r the row vector of <., c>.
SpMatrix rank_one_update(const HomClass& c, int s)
{
    const int n = static_cast<int>(c.size());
    SpMatrix m(n);
    std::vector<Int> r(n);
    for (int k = 0; k < n; k += 2) {
        r[k] = c[k + 1];
        r[k + 1] = -c[k];
    }
    for (int i = 0; i < n; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (r[j] != 0) m.at(i, j) += s * c[i] * r[j];
    }
    return m;
}

}  // namespace

SpMatrix SpMatrix::transvection(const HomClass& c) { return rank_one_update(c, 1); }
SpMatrix SpMatrix::transvection_inverse(const HomClass& c) { return rank_one_update(c, -1); }

SpMatrix SpMatrix::operator*(const SpMatrix& o) const
{
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    SpMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Int s = 0;
            for (int k = 0; k < n_; ++k)
                if (at(i, k) != 0 && o.at(k, j) != 0) s += at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

HomClass SpMatrix::apply(const HomClass& v) const
{
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("apply: length mismatch");
    HomClass r(n_, Int(0));
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k)
            if (at(i, k) != 0 && v[k] != 0) r[i] += at(i, k) * v[k];
    return r;
}

bool SpMatrix::is_identity() const { return *this == SpMatrix(n_); }

bool SpMatrix::is_symplectic() const
{
    // <Mx, My> = <x, y> on basis vectors.
    const int g = n_ / 2;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            HomClass ei = zero_class(g), ej = zero_class(g);
            ei[i] = 1;
            ej[j] = 1;
            if (pairing(apply(ei), apply(ej)) != pairing(ei, ej)) return false;
        }
    return true;
}

SpMatrix SpMatrix::inverse() const
{
    // M^-1 = J^-1 M^T J with J the pairing matrix; entrywise that is
    // (M^-1)_{ij} = s_i s_j M_{j' i'} where ' swaps a_k <-> b_k and s = (+,-) per pair.
    SpMatrix r(n_);
    auto partner = [](int k) { return k ^ 1; };
    auto sgn = [](int k) { return (k % 2 == 0) ? 1 : -1; };
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = sgn(i) * sgn(j) * at(partner(j), partner(i));
    return r;
}

std::string SpMatrix::str() const
{
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j);
        os << '\n';
    }
    return os.str();
}

SpMatrix product_image(int g, const std::vector<SignedClass>& factors)
{
    SpMatrix m(2 * g);
    for (const auto& f : factors) {
        if (static_cast<int>(f.cls.size()) != 2 * g)
            throw std::invalid_argument("product_image: class length mismatch");
        if (is_zero(f.cls)) continue;
        m = m * (f.sign > 0 ? SpMatrix::transvection(f.cls) : SpMatrix::transvection_inverse(f.cls));
    }
    return m;
}

std::string AbelianGroup::str() const
{
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    for (const auto& t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    return os.str();
}

std::vector<Int> smith_diagonal(IntMatrix m)
{
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    std::vector<Int> diag;
    size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        size_t pr = rows, pc = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(m[t], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool dirty = false;
        for (size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            Int q = m[i][t] / m[t][t];
            for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) dirty = true;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            Int q = m[t][j] / m[t][t];
            for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) dirty = true;
        }
        if (dirty) continue;

        // Divisibility: fold an offending row into the pivot row and retry.
        bool folded = false;
        for (size_t i = t + 1; i < rows && !folded; ++i)
            for (size_t j = t + 1; j < cols; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                    folded = true;
                    break;
                }
        if (folded) continue;

        diag.push_back(abs(m[t][t]));
        ++t;
    }
    return diag;
}

AbelianGroup smith_invariants(const IntMatrix& m, int rows, int cols)
{
    if (static_cast<int>(m.size()) != rows)
        throw std::invalid_argument("smith_invariants: row count mismatch");
    for (const auto& r : m)
        if (static_cast<int>(r.size()) != cols)
            throw std::invalid_argument("smith_invariants: ragged matrix");
    AbelianGroup out;
    auto d = rows && cols ? smith_diagonal(m) : std::vector<Int>{};
    out.rank = rows - static_cast<int>(d.size());
    for (const auto& x : d)
        if (x > 1) out.torsion.push_back(x);
    return out;
}

AbelianGroup h1_cokernel(const std::vector<HomClass>& classes, int g)
{
    const int rows = 2 * g, cols = static_cast<int>(classes.size());
    IntMatrix m(rows, std::vector<Int>(cols, Int(0)));
    for (int j = 0; j < cols; ++j) {
        if (static_cast<int>(classes[j].size()) != rows)
            throw std::invalid_argument("h1_cokernel: class length mismatch");
        for (int i = 0; i < rows; ++i) m[i][j] = classes[j][i];
    }
    return smith_invariants(m, rows, cols);
}

}  // namespace twist
