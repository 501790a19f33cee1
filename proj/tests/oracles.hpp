#pragma once

// Independent reference computations. Nothing here calls into the library under test.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

inline long long det(Mat m)
{
    // Bareiss fraction-free elimination; exact for small integer matrices.
    const size_t n = m.size();
    if (n == 0) return 1;
    long long sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// d_k = gcd of all k x k minors; invariant factors are d_k / d_{k-1}.
inline std::vector<long long> invariant_factors(const Mat& m, int rows, int cols)
{
    std::vector<long long> out;
    long long prev = 1;
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<int>> rs, cs;
        std::vector<int> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        long long d = 0;
        for (auto& r : rs)
            for (auto& c : cs) {
                Mat sub(k, std::vector<long long>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
                d = std::gcd(d, std::llabs(det(sub)));
            }
        if (d == 0) break;
        out.push_back(d / prev);
        prev = d;
    }
    return out;
}

// x -> x + <x, c> c in the basis a1, b1, ..., ag, bg with <a_i, b_i> = 1.
inline long long pairing(const std::vector<long long>& u, const std::vector<long long>& v)
{
    long long s = 0;
    for (size_t i = 0; i + 1 < u.size(); i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
    return s;
}

inline std::vector<long long> twist(const std::vector<long long>& c, const std::vector<long long>& x, int sign)
{
    auto y = x;
    const long long p = pairing(x, c) * sign;
    for (size_t i = 0; i < y.size(); ++i) y[i] += p * c[i];
    return y;
}

// Chain classes c_{2i} = a_i, c_{2i-1} = b_{i-1} + b_i (b_0 = b_{g+1} = 0).
inline std::vector<long long> chain_class(int g, int j)
{
    std::vector<long long> v(2 * g, 0);
    if (j % 2 == 0) {
        v[2 * (j / 2 - 1)] = 1;
    } else {
        const int i = (j + 1) / 2;
        if (i - 1 >= 1) v[2 * (i - 2) + 1] = 1;
        if (i <= g) v[2 * (i - 1) + 1] = 1;
    }
    return v;
}

// Artin action of the braid group on the free group: faithful, so equal actions mean equal braids.
// Free words are signed generator indices 1..n; sigma_i sends x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
using Free = std::vector<int>;

inline Free reduce(const Free& w)
{
    Free out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

inline Free inv(const Free& w)
{
    Free out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

// Automorphism stored as the images of x_1..x_n.
struct Aut {
    std::vector<Free> img;

    static Aut identity(int n)
    {
        Aut a;
        for (int i = 1; i <= n; ++i) a.img.push_back({i});
        return a;
    }

    Free apply(const Free& w) const
    {
        Free out;
        for (int x : w) {
            const Free& im = img[std::abs(x) - 1];
            if (x > 0)
                out.insert(out.end(), im.begin(), im.end());
            else {
                Free r = inv(im);
                out.insert(out.end(), r.begin(), r.end());
            }
        }
        return reduce(out);
    }

    // (this after o)(x) = this(o(x))
    Aut after(const Aut& o) const
    {
        Aut r;
        for (auto& im : o.img) r.img.push_back(apply(im));
        return r;
    }

    bool operator==(const Aut&) const = default;
};

inline Aut sigma(int n, int i, int e)
{
    Aut a = Aut::identity(n);
    if (e > 0) {
        a.img[i - 1] = {i, i + 1, -i};
        a.img[i] = {i};
    } else {
        a.img[i - 1] = {i + 1};
        a.img[i] = {-(i + 1), i, i + 1};
    }
    return a;
}

// Product s_1 s_2 ... s_m acting functionally, as with mapping classes.
inline Aut braid(int n, const std::vector<std::pair<int, int>>& gens)
{
    Aut a = Aut::identity(n);
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) a = sigma(n, it->first, it->second).after(a);
    return a;
}

}  // namespace oracle
