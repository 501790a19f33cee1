#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace twist {

using Int = boost::multiprecision::cpp_int;

// Coordinates in the ordered basis a1, b1, ..., ag, bg.
using HomClass = std::vector<Int>;

HomClass zero_class(int g);
HomClass basis_a(int g, int i);  // 1-based
HomClass basis_b(int g, int i);
HomClass negate(const HomClass& v);
HomClass add(const HomClass& u, const HomClass& v);
bool is_zero(const HomClass& v);
bool equal_up_to_sign(const HomClass& u, const HomClass& v);

// <a_i, b_i> = +1
Int pairing(const HomClass& u, const HomClass& v);

// Mod-2 reduction packed into bits (bit k = coordinate k).
std::uint64_t z2_bits(const HomClass& v);
int z2_pairing(std::uint64_t u, std::uint64_t v, int g);

class SpMatrix {
public:
    SpMatrix() = default;
    explicit SpMatrix(int dim);  // identity
    static SpMatrix transvection(const HomClass& c);
    static SpMatrix transvection_inverse(const HomClass& c);

    int dim() const { return n_; }
    const Int& at(int r, int c) const { return a_[r * n_ + c]; }
    Int& at(int r, int c) { return a_[r * n_ + c]; }

    SpMatrix operator*(const SpMatrix& o) const;
    HomClass apply(const HomClass& v) const;
    bool operator==(const SpMatrix& o) const = default;

    bool is_identity() const;
    bool is_symplectic() const;
    SpMatrix inverse() const;  // J^-1 M^T J
    std::string str() const;

private:
    int n_ = 0;
    std::vector<Int> a_;
};

// One twist factor: class plus exponent sign (+1 twist, -1 inverse twist).
struct SignedClass {
    HomClass cls;
    int sign = 1;
};

// Functional composition: the image of t1 t2 ... tm is T1 T2 ... Tm.
SpMatrix product_image(int g, const std::vector<SignedClass>& factors);

struct AbelianGroup {
    int rank = 0;
    std::vector<Int> torsion;  // each > 1, each divides the next

    bool trivial() const { return rank == 0 && torsion.empty(); }
    std::string str() const;
    bool operator==(const AbelianGroup&) const = default;
};

using IntMatrix = std::vector<std::vector<Int>>;

// Invariant factors of M (nonzero diagonal of the Smith form, in divisibility order).
std::vector<Int> smith_diagonal(IntMatrix m);

// Cokernel of M viewed as a map into Z^rows.
AbelianGroup smith_invariants(const IntMatrix& m, int rows, int cols);

// Z^{2g} modulo the span of the classes.
AbelianGroup h1_cokernel(const std::vector<HomClass>& classes, int g);

}  // namespace twist
