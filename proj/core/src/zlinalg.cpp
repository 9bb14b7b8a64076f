#include "symcoh/zlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace symcoh {

namespace {

ZInt zabs(const ZInt& a) { return a < 0 ? ZInt(-a) : a; }

// quotient of truncated division nudged toward the nearest integer; the
// remainder after subtraction satisfies |r| <= |b|/2 + 1
ZInt rounded_div(const ZInt& a, const ZInt& b) {
    ZInt q = a / b;
    ZInt r = a - q * b;
    if (2 * zabs(r) > zabs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
}

ZInt floor_div(const ZInt& a, const ZInt& b) {
    ZInt q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<long long>> r;
    for (const auto& row : rows) r.emplace_back(row);
    return from_rows(r);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(nr, nc);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(rows[i].size()) != nc) throw DimensionMismatch("ragged row list");
        for (int j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::diagonal_columns(const std::vector<ZInt>& d) {
    int n = static_cast<int>(d.size());
    int nz = 0;
    for (const auto& v : d)
        if (v != 0) ++nz;
    IntMatrix m(n, nz);
    int j = 0;
    for (int i = 0; i < n; ++i)
        if (d[i] != 0) m.at(i, j++) = zabs(d[i]);
    return m;
}

IntMatrix IntMatrix::column(const std::vector<ZInt>& v) {
    IntMatrix m(static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = v[i];
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int l = 0; l < cols_; ++l) {
            const ZInt& a = at(i, l);
            if (a == 0) continue;  // bar-complex lifts are sparse; skip zero terms
            for (int j = 0; j < other.cols_; ++j) {
                const ZInt& b = other.at(l, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

std::vector<ZInt> IntMatrix::apply(const std::vector<ZInt>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<ZInt> out(rows_);
    for (int i = 0; i < rows_; ++i) {
        ZInt acc = 0;
        for (int j = 0; j < cols_; ++j) {
            const ZInt& a = at(i, j);
            if (a != 0 && v[j] != 0) acc += a * v[j];
        }
        out[i] = std::move(acc);
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
    return out;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

std::vector<ZInt> IntMatrix::col_vec(int j) const {
    std::vector<ZInt> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void IntMatrix::set_col(int j, const std::vector<ZInt>& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ == 0) return b;
    if (b.cols_ == 0) return a;
    if (a.rows_ != b.rows_) throw DimensionMismatch("hconcat row mismatch");
    IntMatrix out(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
    }
    return out;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ == 0) return b;
    if (b.rows_ == 0) return a;
    if (a.cols_ != b.cols_) throw DimensionMismatch("vconcat column mismatch");
    IntMatrix out(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out.at(a.rows_ + i, j) = b.at(i, j);
    return out;
}

IntMatrix IntMatrix::from_columns(int rows, const std::vector<std::vector<ZInt>>& cols) {
    IntMatrix out(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < out.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows) throw DimensionMismatch("column height mismatch");
        for (int i = 0; i < rows; ++i) out.at(i, j) = cols[j][i];
    }
    return out;
}

std::vector<ZInt> SNF::diagonal() const {
    int n = std::min(S.rows(), S.cols());
    std::vector<ZInt> d(n);
    for (int i = 0; i < n; ++i) d[i] = S.at(i, i);
    return d;
}

int SNF::rank() const {
    int r = 0;
    for (const auto& d : diagonal())
        if (d != 0) ++r;
    return r;
}

// ---------------------------------------------------------------------------
// Column echelon engine.
//
// Shared by hermite_basis, kernel computations and membership solving.
// Columns carry an optional companion vector that records how each column
// was combined from the original generators.

namespace {

struct EchelonCol {
    std::vector<ZInt> w;
    std::vector<ZInt> x;  // companion; may be empty (treated as zero)
};

void col_axpy(EchelonCol& dst, const ZInt& c, const EchelonCol& src, int from_row) {
    for (std::size_t r = from_row; r < src.w.size(); ++r)
        if (src.w[r] != 0) dst.w[r] += c * src.w[r];
    if (!src.x.empty()) {
        if (dst.x.empty()) dst.x.assign(src.x.size(), ZInt(0));
        for (std::size_t t = 0; t < src.x.size(); ++t)
            if (src.x[t] != 0) dst.x[t] += c * src.x[t];
    }
}

struct EchelonResult {
    // pivot columns in increasing pivot-row order
    std::vector<int> pivot_rows;
    std::vector<EchelonCol> pivots;
    // columns whose w-part vanished completely
    std::vector<EchelonCol> kernel;
};

// Reduces the column set to echelon form over rows [0, nrows). When
// row_injections[i] is nonzero an extra column d*e_i joins at row i; these
// model diagonal relation lattices without paying for them up front.
EchelonResult column_echelon(std::vector<EchelonCol> cols, int nrows,
                             const std::vector<ZInt>& row_injections, bool keep_pivots) {
    EchelonResult res;
    std::vector<int> active(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) active[j] = static_cast<int>(j);

    for (int i = 0; i < nrows; ++i) {
        if (!row_injections.empty() && row_injections[i] != 0) {
            EchelonCol rel;
            rel.w.assign(nrows, ZInt(0));
            rel.w[i] = zabs(row_injections[i]);
            cols.push_back(std::move(rel));
            active.push_back(static_cast<int>(cols.size()) - 1);
        }
        // Euclidean reduction of row i across the active columns
        for (;;) {
            int best = -1;
            int nonzero = 0;
            for (int idx : active) {
                if (cols[idx].w[i] == 0) continue;
                ++nonzero;
                if (best < 0 || zabs(cols[idx].w[i]) < zabs(cols[best].w[i])) best = idx;
            }
            if (nonzero <= 1) {
                if (nonzero == 1) {
                    if (keep_pivots) {
                        res.pivot_rows.push_back(i);
                        res.pivots.push_back(std::move(cols[best]));
                    }
                    active.erase(std::find(active.begin(), active.end(), best));
                }
                break;
            }
            for (int idx : active) {
                if (idx == best || cols[idx].w[i] == 0) continue;
                ZInt q = rounded_div(cols[idx].w[i], cols[best].w[i]);
                col_axpy(cols[idx], -q, cols[best], i);
            }
        }
    }
    for (int idx : active) res.kernel.push_back(std::move(cols[idx]));
    return res;
}

IntMatrix assemble_hermite(int nrows, std::vector<int>& pivot_rows, std::vector<EchelonCol>& pivots) {
    int r = static_cast<int>(pivots.size());
    // positive pivots
    for (int j = 0; j < r; ++j) {
        if (pivots[j].w[pivot_rows[j]] < 0)
            for (auto& v : pivots[j].w) v = -v;
    }
    // entries left of each pivot reduced into [0, pivot)
    for (int j = 0; j < r; ++j) {
        int p = pivot_rows[j];
        const ZInt& piv = pivots[j].w[p];
        for (int l = 0; l < j; ++l) {
            ZInt q = floor_div(pivots[l].w[p], piv);
            if (q != 0)
                for (int rr = p; rr < nrows; ++rr)
                    if (pivots[j].w[rr] != 0) pivots[l].w[rr] -= q * pivots[j].w[rr];
        }
    }
    IntMatrix out(nrows, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < nrows; ++i) out.at(i, j) = pivots[j].w[i];
    return out;
}

std::vector<EchelonCol> matrix_columns(const IntMatrix& m, bool with_companion) {
    std::vector<EchelonCol> cols;
    cols.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        EchelonCol c;
        c.w = m.col_vec(j);
        if (with_companion) {
            c.x.assign(m.cols(), ZInt(0));
            c.x[j] = 1;
        }
        cols.push_back(std::move(c));
    }
    return cols;
}

}  // namespace

IntMatrix hermite_basis(const IntMatrix& m) {
    auto res = column_echelon(matrix_columns(m, false), m.rows(), {}, true);
    return assemble_hermite(m.rows(), res.pivot_rows, res.pivots);
}

namespace {

IntMatrix kernel_engine(const IntMatrix& m, std::vector<ZInt> row_injections, const IntMatrix* extra) {
    auto cols = matrix_columns(m, true);
    if (extra != nullptr) {
        for (int j = 0; j < extra->cols(); ++j) {
            EchelonCol c;
            c.w = extra->col_vec(j);
            bool zero = true;
            for (const auto& v : c.w)
                if (v != 0) {
                    zero = false;
                    break;
                }
            if (!zero) cols.push_back(std::move(c));
        }
    }
    auto res = column_echelon(std::move(cols), m.rows(), row_injections, false);
    std::vector<std::vector<ZInt>> xs;
    for (auto& c : res.kernel) {
        if (c.x.empty()) continue;  // pure relation combination, projects to 0
        bool zero = true;
        for (const auto& v : c.x)
            if (v != 0) {
                zero = false;
                break;
            }
        if (!zero) xs.push_back(std::move(c.x));
    }
    return hermite_basis(IntMatrix::from_columns(m.cols(), xs));
}

}  // namespace

IntMatrix kernel_mod_relations(const IntMatrix& m, const IntMatrix& r) {
    if (r.cols() > 0 && r.rows() != m.rows()) throw DimensionMismatch("relation rows must match map rows");
    // singleton relation columns become lazy row injections
    std::vector<ZInt> inject(m.rows(), ZInt(0));
    IntMatrix general(m.rows(), 0);
    std::vector<std::vector<ZInt>> general_cols;
    for (int j = 0; j < r.cols(); ++j) {
        int nz = -1;
        bool singleton = true;
        for (int i = 0; i < r.rows(); ++i) {
            if (r.at(i, j) == 0) continue;
            if (nz >= 0) {
                singleton = false;
                break;
            }
            nz = i;
        }
        if (nz < 0) continue;
        if (singleton) {
            const ZInt v = zabs(r.at(nz, j));
            if (inject[nz] == 0)
                inject[nz] = v;
            else
                inject[nz] = gcd(inject[nz], v);
        } else {
            general_cols.push_back(r.col_vec(j));
        }
    }
    IntMatrix extra = IntMatrix::from_columns(m.rows(), general_cols);
    return kernel_engine(m, std::move(inject), extra.cols() > 0 ? &extra : nullptr);
}

IntMatrix kernel_mod_diag(const IntMatrix& m, const std::vector<ZInt>& row_mods) {
    if (static_cast<int>(row_mods.size()) != m.rows()) throw DimensionMismatch("row modulus count must match rows");
    std::vector<ZInt> inject(row_mods.size());
    for (std::size_t i = 0; i < row_mods.size(); ++i) inject[i] = zabs(row_mods[i]);
    return kernel_engine(m, std::move(inject), nullptr);
}

// ---------------------------------------------------------------------------
// Smith normal form

SNF smith_normal_form(const IntMatrix& m) {
    SNF f;
    f.S = m;
    f.U = IntMatrix::identity(m.rows());
    f.Uinv = IntMatrix::identity(m.rows());
    f.V = IntMatrix::identity(m.cols());
    IntMatrix& S = f.S;
    const int nr = m.rows();
    const int nc = m.cols();

    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < nc; ++j) std::swap(S.at(a, j), S.at(b, j));
        for (int j = 0; j < nr; ++j) std::swap(f.U.at(a, j), f.U.at(b, j));
        for (int i = 0; i < nr; ++i) std::swap(f.Uinv.at(i, a), f.Uinv.at(i, b));
    };
    auto row_axpy = [&](int dst, const ZInt& c, int src) {
        for (int j = 0; j < nc; ++j)
            if (S.at(src, j) != 0) S.at(dst, j) += c * S.at(src, j);
        for (int j = 0; j < nr; ++j)
            if (f.U.at(src, j) != 0) f.U.at(dst, j) += c * f.U.at(src, j);
        for (int i = 0; i < nr; ++i)
            if (f.Uinv.at(i, dst) != 0) f.Uinv.at(i, src) -= c * f.Uinv.at(i, dst);
    };
    auto row_negate = [&](int a) {
        for (int j = 0; j < nc; ++j) S.at(a, j) = -S.at(a, j);
        for (int j = 0; j < nr; ++j) f.U.at(a, j) = -f.U.at(a, j);
        for (int i = 0; i < nr; ++i) f.Uinv.at(i, a) = -f.Uinv.at(i, a);
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < nr; ++i) std::swap(S.at(i, a), S.at(i, b));
        for (int i = 0; i < nc; ++i) std::swap(f.V.at(i, a), f.V.at(i, b));
    };
    auto col_axpy = [&](int dst, const ZInt& c, int src) {
        for (int i = 0; i < nr; ++i)
            if (S.at(i, src) != 0) S.at(i, dst) += c * S.at(i, src);
        for (int i = 0; i < nc; ++i)
            if (f.V.at(i, src) != 0) f.V.at(i, dst) += c * f.V.at(i, src);
    };

    const int steps = std::min(nr, nc);
    for (int t = 0; t < steps; ++t) {
        // locate minimal nonzero entry in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < nr; ++i)
            for (int j = t; j < nc; ++j) {
                if (S.at(i, j) == 0) continue;
                if (pi < 0 || zabs(S.at(i, j)) < zabs(S.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < nr; ++i) {
                if (S.at(i, t) == 0) continue;
                ZInt q = rounded_div(S.at(i, t), S.at(t, t));
                if (q != 0) row_axpy(i, -q, t);
                if (S.at(i, t) != 0) {  // smaller remainder becomes the pivot
                    row_swap(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < nc; ++j) {
                if (S.at(t, j) == 0) continue;
                ZInt q = rounded_div(S.at(t, j), S.at(t, t));
                if (q != 0) col_axpy(j, -q, t);
                if (S.at(t, j) != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // divisibility: pivot must divide the whole trailing block
            bool fixed = false;
            for (int i = t + 1; i < nr && !fixed; ++i)
                for (int j = t + 1; j < nc && !fixed; ++j)
                    if (S.at(i, j) % S.at(t, t) != 0) {
                        row_axpy(t, 1, i);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (S.at(t, t) < 0) row_negate(t);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Solving and reduction against Hermite bases

namespace {

std::vector<int> hermite_pivot_rows(const IntMatrix& hnf) {
    std::vector<int> p(hnf.cols(), -1);
    for (int j = 0; j < hnf.cols(); ++j) {
        for (int i = 0; i < hnf.rows(); ++i)
            if (hnf.at(i, j) != 0) {
                p[j] = i;
                break;
            }
    }
    return p;
}

}  // namespace

std::optional<std::vector<ZInt>> solve_hermite(const IntMatrix& hnf, const std::vector<ZInt>& v) {
    if (static_cast<int>(v.size()) != hnf.rows()) throw DimensionMismatch("vector length must match lattice rank");
    auto pivots = hermite_pivot_rows(hnf);
    std::vector<ZInt> r = v;
    std::vector<ZInt> y(hnf.cols(), ZInt(0));
    for (int j = 0; j < hnf.cols(); ++j) {
        int p = pivots[j];
        if (p < 0) continue;
        if (r[p] == 0) continue;
        if (r[p] % hnf.at(p, j) != 0) return std::nullopt;
        ZInt q = r[p] / hnf.at(p, j);
        y[j] = q;
        for (int i = p; i < hnf.rows(); ++i)
            if (hnf.at(i, j) != 0) r[i] -= q * hnf.at(i, j);
    }
    for (const auto& rest : r)
        if (rest != 0) return std::nullopt;
    return y;
}

bool in_hermite_span(const IntMatrix& hnf, const std::vector<ZInt>& v) {
    return solve_hermite(hnf, v).has_value();
}

std::vector<ZInt> reduce_mod_lattice(const IntMatrix& hnf, std::vector<ZInt> v) {
    if (static_cast<int>(v.size()) != hnf.rows()) throw DimensionMismatch("vector length must match lattice rank");
    auto pivots = hermite_pivot_rows(hnf);
    for (int j = 0; j < hnf.cols(); ++j) {
        int p = pivots[j];
        if (p < 0) continue;
        ZInt q = floor_div(v[p], hnf.at(p, j));
        if (q == 0) continue;
        for (int i = p; i < hnf.rows(); ++i)
            if (hnf.at(i, j) != 0) v[i] -= q * hnf.at(i, j);
    }
    return v;
}

std::optional<std::vector<ZInt>> membership_solve(const IntMatrix& gens, const std::vector<ZInt>& v) {
    if (static_cast<int>(v.size()) != gens.rows()) throw DimensionMismatch("vector length must match generator rows");
    auto res = column_echelon(matrix_columns(gens, true), gens.rows(), {}, true);
    std::vector<ZInt> r = v;
    std::vector<ZInt> c(gens.cols(), ZInt(0));
    for (std::size_t j = 0; j < res.pivots.size(); ++j) {
        int p = res.pivot_rows[j];
        if (r[p] == 0) continue;
        const ZInt& piv = res.pivots[j].w[p];
        if (r[p] % piv != 0) return std::nullopt;
        ZInt q = r[p] / piv;
        for (int i = p; i < gens.rows(); ++i)
            if (res.pivots[j].w[i] != 0) r[i] -= q * res.pivots[j].w[i];
        for (int t = 0; t < gens.cols(); ++t)
            if (res.pivots[j].x[t] != 0) c[t] += q * res.pivots[j].x[t];
    }
    for (const auto& rest : r)
        if (rest != 0) return std::nullopt;
    return c;
}

// ---------------------------------------------------------------------------
// Subquotients

Subquotient subquotient_invariants(const IntMatrix& kgens, const IntMatrix& bgens) {
    if (bgens.cols() > 0 && kgens.rows() != bgens.rows()) throw DimensionMismatch("ambient ranks differ");
    Subquotient sq;
    sq.basis = hermite_basis(kgens);
    const int r = sq.basis.cols();

    // coordinates of every B generator in the K basis
    IntMatrix coords(r, bgens.cols());
    for (int j = 0; j < bgens.cols(); ++j) {
        auto y = solve_hermite(sq.basis, bgens.col_vec(j));
        if (!y) throw NotASubgroupOf("generator outside the enclosing lattice");
        coords.set_col(j, *y);
    }

    SNF snf = smith_normal_form(coords);
    sq.to_decomp = snf.U;
    sq.from_decomp = snf.Uinv;
    sq.orders.assign(r, ZInt(0));
    const int dn = std::min(r, coords.cols());
    for (int i = 0; i < dn; ++i) sq.orders[i] = snf.S.at(i, i);

    std::vector<std::vector<ZInt>> gens;
    for (int i = 0; i < r; ++i) {
        if (sq.orders[i] == 1) continue;
        sq.factors.push_back(sq.orders[i]);
        sq.factor_rows.push_back(i);
        gens.push_back(sq.basis.apply(sq.from_decomp.col_vec(i)));
    }
    sq.generators = IntMatrix::from_columns(kgens.rows(), gens);
    return sq;
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() == 0 || b.cols() == 0) return IntMatrix(a.rows(), 0);
    IntMatrix pre = kernel_mod_relations(a, b);  // {x : a*x in span(b)}
    return hermite_basis(a.mul(pre));
}

IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) { return hermite_basis(IntMatrix::hconcat(a, b)); }

bool vec_zero_mod(const std::vector<ZInt>& v, const std::vector<ZInt>& mods) {
    if (v.size() != mods.size()) throw DimensionMismatch("modulus count must match vector length");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (mods[i] == 0) {
            if (v[i] != 0) return false;
        } else if (v[i] % mods[i] != 0) {
            return false;
        }
    }
    return true;
}

bool matrix_zero_mod(const IntMatrix& m, const std::vector<ZInt>& row_mods) {
    if (static_cast<int>(row_mods.size()) != m.rows()) throw DimensionMismatch("modulus count must match rows");
    for (int i = 0; i < m.rows(); ++i) {
        if (row_mods[i] == 0) {
            for (int j = 0; j < m.cols(); ++j)
                if (m.at(i, j) != 0) return false;
        } else {
            for (int j = 0; j < m.cols(); ++j)
                if (m.at(i, j) % row_mods[i] != 0) return false;
        }
    }
    return true;
}

}  // namespace symcoh
