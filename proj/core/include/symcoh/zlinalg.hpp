#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "symcoh/errors.hpp"

namespace symcoh {

/// Exact integer scalar. All lattice computations run over Z with no
/// modular shortcuts, so results are correct for torsion and free parts
/// alike.
using ZInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row major. Columns are the generating vectors
/// wherever a matrix stands for a subgroup of Z^N.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
    /// One column per nonzero d[i]: the vector d[i]*e_i. This is the
    /// generator matrix of the lattice ⊕ d_i Z inside Z^n.
    static IntMatrix diagonal_columns(const std::vector<ZInt>& d);
    static IntMatrix column(const std::vector<ZInt>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    ZInt& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const ZInt& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const IntMatrix& other) const = default;

    IntMatrix mul(const IntMatrix& other) const;
    std::vector<ZInt> apply(const std::vector<ZInt>& v) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix negated() const;

    std::vector<ZInt> col_vec(int j) const;
    void set_col(int j, const std::vector<ZInt>& v);

    static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix from_columns(int rows, const std::vector<std::vector<ZInt>>& cols);

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<ZInt> data_;
};

/// Smith normal form data: U * M * V = S with U, V unimodular and the
/// diagonal of S a divisibility chain d1 | d2 | ... , all entries >= 0.
/// Uinv is kept alongside so subquotient bases can be read off without a
/// separate inversion.
struct SNF {
    IntMatrix U;
    IntMatrix Uinv;
    IntMatrix V;
    IntMatrix S;
    std::vector<ZInt> diagonal() const;
    int rank() const;
};

SNF smith_normal_form(const IntMatrix& m);

/// Canonical column Hermite basis of the lattice spanned by the columns
/// of m. Zero columns are dropped; pivots are positive; entries left of a
/// pivot are reduced into [0, pivot). Two matrices span the same lattice
/// iff their Hermite bases are identical.
IntMatrix hermite_basis(const IntMatrix& m);

/// Columns generating { x in Z^a : M*x lies in the column span of R }.
/// Output is a canonical Hermite basis. R may be empty (plain kernel).
IntMatrix kernel_mod_relations(const IntMatrix& m, const IntMatrix& r);

/// Kernel of x -> M*x taken modulo the sublattice ⊕ rowMods[i]*Z of the
/// target: rowMods[i] == 0 demands exact vanishing in coordinate i.
IntMatrix kernel_mod_diag(const IntMatrix& m, const std::vector<ZInt>& row_mods);

/// Invariant-factor data of span(K) / span(B), with the lift maps needed
/// to expand any element of span(K) over the reported generators.
struct Subquotient {
    /// Invariant factors, 1s suppressed, finite factors first in their
    /// divisibility chain, then one 0 per free summand.
    std::vector<ZInt> factors;
    /// One column per reported factor, a lattice vector generating that
    /// summand of the quotient.
    IntMatrix generators;
    /// Hermite basis of span(K).
    IntMatrix basis;
    /// Change of basis: coordinates w.r.t. `basis` -> decomposition
    /// coordinates in which span(B) is ⊕ s_i Z.
    IntMatrix to_decomp;
    /// Inverse of to_decomp.
    IntMatrix from_decomp;
    /// Diagonal orders s_i >= 0 of every decomposition coordinate
    /// (including the suppressed 1s), aligned with decomposition rows.
    std::vector<ZInt> orders;
    /// Decomposition row carrying each reported factor.
    std::vector<int> factor_rows;
};

Subquotient subquotient_invariants(const IntMatrix& kgens, const IntMatrix& bgens);

/// Integer coefficients c with gens * c = v, or nullopt when v is outside
/// the column span.
std::optional<std::vector<ZInt>> membership_solve(const IntMatrix& gens, const std::vector<ZInt>& v);

/// Fast membership against a matrix already in canonical Hermite form.
bool in_hermite_span(const IntMatrix& hnf, const std::vector<ZInt>& v);
std::optional<std::vector<ZInt>> solve_hermite(const IntMatrix& hnf, const std::vector<ZInt>& v);

/// Canonical coset representative of v modulo the lattice spanned by a
/// Hermite basis: pivot coordinates are reduced into [0, pivot).
std::vector<ZInt> reduce_mod_lattice(const IntMatrix& hnf, std::vector<ZInt> v);

/// Hermite basis of span(a) ∩ span(b).
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

/// Hermite basis of span(a) + span(b).
IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b);

/// v ≡ 0 where mods[i] > 0 means modulo mods[i] and mods[i] == 0 means
/// exact equality.
bool vec_zero_mod(const std::vector<ZInt>& v, const std::vector<ZInt>& mods);

/// Every column of m vanishes under vec_zero_mod against row moduli.
bool matrix_zero_mod(const IntMatrix& m, const std::vector<ZInt>& row_mods);

}  // namespace symcoh
