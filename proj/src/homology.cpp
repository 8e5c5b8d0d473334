#include "gaiakit/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gaiakit/elements.hpp"

namespace gaiakit::homology {

namespace {

bool is_lone(const IntMatrix& m, int t) {
    for (int i = t + 1; i < m.rows(); ++i)
        if (!m.at(i, t).is_zero()) return false;
    for (int j = t + 1; j < m.cols(); ++j)
        if (!m.at(t, j).is_zero()) return false;
    return true;
}

bool find_min_nonzero(const IntMatrix& m, int t, int& bi, int& bj) {
    bool found = false;
    BigInt best;
    for (int i = t; i < m.rows(); ++i)
        for (int j = t; j < m.cols(); ++j) {
            const BigInt& v = m.at(i, j);
            if (v.is_zero()) continue;
            BigInt a = v.abs();
            if (!found || a < best) {
                best = a;
                bi = i;
                bj = j;
                found = true;
            }
        }
    return found;
}

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void add_row(IntMatrix& m, int dst, int src, const BigInt& factor) {
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += factor * m.at(src, j);
}

void add_col(IntMatrix& m, int dst, int src, const BigInt& factor) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += factor * m.at(i, src);
}

} // namespace

std::vector<BigInt> smith_invariant_factors(IntMatrix m) {
    const int nmin = std::min(m.rows(), m.cols());
    std::vector<BigInt> diag;
    for (int t = 0; t < nmin; ++t) {
        int bi = t, bj = t;
        if (!find_min_nonzero(m, t, bi, bj)) break; // rest of matrix is zero
        swap_rows(m, t, bi);
        swap_cols(m, t, bj);

        while (!is_lone(m, t)) {
            // Clear column t below the pivot, then row t right of it; redo
            // with the smallest remaining entry until the pivot is alone.
            for (int i = t + 1; i < m.rows(); ++i)
                if (!m.at(i, t).is_zero()) add_row(m, i, t, -(m.at(i, t) / m.at(t, t)));
            for (int j = t + 1; j < m.cols(); ++j)
                if (!m.at(t, j).is_zero()) add_col(m, j, t, -(m.at(t, j) / m.at(t, t)));
            if (is_lone(m, t)) break;
            find_min_nonzero(m, t, bi, bj);
            swap_rows(m, t, bi);
            swap_cols(m, t, bj);
        }

        // Divisibility: the pivot must divide the remaining block.
        bool redo = false;
        for (int i = t + 1; i < m.rows() && !redo; ++i)
            for (int j = t + 1; j < m.cols() && !redo; ++j)
                if (!(m.at(i, j) % m.at(t, t)).is_zero()) {
                    add_row(m, t, i, BigInt(1));
                    redo = true;
                }
        if (redo) {
            --t; // re-run this pivot with the mixed row
            continue;
        }
        BigInt d = m.at(t, t).abs();
        if (d.is_zero()) break;
        diag.push_back(d);
    }
    return diag;
}

// ---------------------------------------------------------------------------

ChainComplex chain_complex(const simplicial::SimplicialSet& x) {
    ChainComplex cc;
    const int N = x.truncation;
    cc.bases.resize(N + 1);
    for (int n = 0; n <= N; ++n) cc.bases[n] = x.nondegenerate(n);

    cc.boundary.resize(N + 1);
    for (int n = 1; n <= N; ++n) {
        std::map<std::string, int> row_index;
        for (size_t r = 0; r < cc.bases[n - 1].size(); ++r) row_index[cc.bases[n - 1][r]] = (int)r;
        IntMatrix B((int)cc.bases[n - 1].size(), (int)cc.bases[n].size());
        for (size_t cidx = 0; cidx < cc.bases[n].size(); ++cidx) {
            const auto& sigma = cc.bases[n][cidx];
            for (int i = 0; i <= n; ++i) {
                const auto& f = x.d(n, i, sigma);
                if (x.is_degenerate(n - 1, f)) continue; // normalized complex
                BigInt sign(i % 2 == 0 ? 1 : -1);
                B.at(row_index.at(f), (int)cidx) += sign;
            }
        }
        cc.boundary[n] = std::move(B);
    }
    return cc;
}

bool ChainComplex::boundary_squares_to_zero() const {
    for (int n = 2; n <= top_dim(); ++n) {
        const IntMatrix& a = boundary[n - 1];
        const IntMatrix& b = boundary[n];
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) {
                BigInt sum;
                for (int k = 0; k < a.cols(); ++k) sum += a.at(i, k) * b.at(k, j);
                if (!sum.is_zero()) return false;
            }
    }
    return true;
}

long long HomologyResult::euler_characteristic() const {
    long long chi = 0;
    for (size_t n = 0; n < betti.size(); ++n) {
        long long contrib = betti[n];
        chi += (n % 2 == 0) ? contrib : -contrib;
    }
    return chi;
}

HomologyResult homology(const simplicial::SimplicialSet& x) {
    ChainComplex cc = chain_complex(x);
    if (!cc.boundary_squares_to_zero())
        throw DomainError("homology: boundary does not square to zero");

    const int N = cc.top_dim();
    std::vector<int> rank(N + 2, 0);
    std::vector<std::vector<BigInt>> factors(N + 2);
    for (int n = 1; n <= N; ++n) {
        factors[n] = smith_invariant_factors(cc.boundary[n]);
        rank[n] = static_cast<int>(factors[n].size());
    }

    HomologyResult out;
    out.betti.resize(N + 1);
    out.torsion.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        int dim_ker = static_cast<int>(cc.bases[n].size()) - rank[n];
        int im_next = (n < N) ? rank[n + 1] : 0;
        out.betti[n] = dim_ker - im_next;
        if (n < N)
            for (const auto& d : factors[n + 1])
                if (d > BigInt(1)) {
                    if (!d.fits_ll())
                        throw DomainError("homology: torsion coefficient exceeds 64 bits");
                    out.torsion[n].push_back(d.to_ll());
                }
    }

    // Dimensions above the last nonempty basis carry the zero group and the
    // zero boundary, so dropping them loses nothing; when they reach the
    // truncation the remaining window is exact rather than truncation-bound.
    int top = N;
    while (top > 0 && cc.bases[top].empty()) --top;
    out.betti.resize(top + 1);
    out.torsion.resize(top + 1);
    out.top_dim = top;
    out.top_truncated = (top == N) && !cc.bases[N].empty();
    return out;
}

HomologyResult classifying_space_homology(const fincat::FinCategory& c, int N) {
    return homology(simplicial::nerve(c, N));
}

HomologyResult hocolim_homology(const elements::SetInstance& inst, int N) {
    auto el = elements::category_of_elements(inst);
    if (el.category.objects.empty()) {
        // Empty instance: the nerve is empty in every dimension.
        HomologyResult out;
        out.top_dim = N;
        out.betti.assign(N + 1, 0);
        out.torsion.resize(N + 1);
        out.top_truncated = false;
        return out;
    }
    return homology(simplicial::nerve(el.category, N));
}

std::string boundary_triplets(const ChainComplex& cc, int n) {
    std::ostringstream os;
    if (n < 1 || n > cc.top_dim()) return "";
    const IntMatrix& B = cc.boundary[n];
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j)
            if (!B.at(i, j).is_zero())
                os << i << " " << j << " " << B.at(i, j).str() << "\n";
    return os.str();
}

} // namespace gaiakit::homology
