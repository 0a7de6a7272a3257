#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "tvrt/cyclotomic.hpp"
#include "tvrt/errors.hpp"

namespace tvrt {

// Root order r >= 3. Conventions used throughout:
//   A = zeta_{4r} = exp(i*pi/2r)   (bracket variable)
//   q = A^2 = exp(i*pi/r)
//   I = {0, ..., r-2}              (colors; twice the spin)
//   qdim(c)  = (-1)^c [c+1]
//   twist(c) = (-1)^c A^{c(c+2)}
struct Level {
    int r;
    explicit Level(int r_) : r(r_) {
        if (r < 3) throw DomainError("Level: r must be at least 3");
    }
    int root_order() const { return 4 * r; }
    int color_count() const { return r - 1; }
};

using Color = int;

// quantum integer [n] = (q^n - q^{-n}) / (q - q^{-1}), as a balanced sum of
// powers of A^2; satisfies [n] = [r-n] and [n+r] = -[n]
inline CycNumber quantum_integer(int n, const Level& level) {
    int ord = level.root_order();
    if (n == 0) return CycNumber::zero(ord);
    if (n < 0) return -quantum_integer(-n, level);
    CycNumber acc = CycNumber::zero(ord);
    for (int j = 0; j < n; ++j) acc += CycNumber::zeta_power(ord, 2 * (n - 1 - 2 * j));
    return acc;
}

class ModularData {
public:
    explicit ModularData(int r, bool build_sixj_table = true) : level_(r) {
        const int ord = level_.root_order();
        const int nc = level_.color_count();

        // [k] and [k]! for k up to r-1 ([r] = 0, never inverted)
        qint_.resize(level_.r + 1);
        for (int k = 0; k <= level_.r; ++k) qint_[k] = quantum_integer(k, level_);
        qfact_.resize(level_.r);
        inv_qfact_.resize(level_.r);
        qfact_[0] = CycNumber::from_int(ord, 1);
        for (int k = 1; k < level_.r; ++k) qfact_[k] = qfact_[k - 1] * qint_[k];
        for (int k = 0; k < level_.r; ++k) inv_qfact_[k] = qfact_[k].inverse();

        qdim_.resize(nc);
        twist_.resize(nc);
        for (Color c = 0; c < nc; ++c) {
            qdim_[c] = c % 2 ? -qint_[c + 1] : qint_[c + 1];
            CycNumber t = CycNumber::zeta_power(ord, static_cast<long long>(c) * (c + 2));
            twist_[c] = c % 2 ? -t : t;
        }

        global_dim_ = CycNumber::zero(ord);
        delta_L_ = CycNumber::zero(ord);
        for (Color c = 0; c < nc; ++c) {
            CycNumber d2 = qdim_[c] * qdim_[c];
            global_dim_ += d2;
            delta_L_ += twist_[c] * d2;
        }
        delta_R_ = delta_L_.conjugate();

        // theta nets for the admissible triples
        theta_.assign(static_cast<std::size_t>(nc) * nc * nc, -1);
        for (Color a = 0; a < nc; ++a)
            for (Color b = 0; b < nc; ++b)
                for (Color c = 0; c < nc; ++c) {
                    if (!admissible(a, b, c)) continue;
                    theta_[triple_index(a, b, c)] =
                        static_cast<std::int32_t>(theta_values_.size());
                    theta_values_.push_back(compute_theta(a, b, c));
                }

        if (build_sixj_table) build_sixj();
    }

    const Level& level() const { return level_; }
    int r() const { return level_.r; }
    int root_order() const { return level_.root_order(); }
    int color_count() const { return level_.color_count(); }

    const CycNumber& qint(int k) const { return qint_.at(static_cast<std::size_t>(k)); }
    const CycNumber& qdim(Color c) const { return qdim_.at(static_cast<std::size_t>(c)); }
    const CycNumber& twist(Color c) const { return twist_.at(static_cast<std::size_t>(c)); }
    const CycNumber& global_dim() const { return global_dim_; }  // omega^2
    const CycNumber& delta_L() const { return delta_L_; }
    const CycNumber& delta_R() const { return delta_R_; }

    bool admissible(Color a, Color b, Color c) const {
        const int top = level_.color_count() - 1;
        if (a < 0 || b < 0 || c < 0 || a > top || b > top || c > top) return false;
        if ((a + b + c) % 2 != 0) return false;
        if (c < std::abs(a - b) || c > a + b) return false;
        return a + b + c <= 2 * (level_.r - 2);
    }

    // theta net value of an admissible triple; exact zero otherwise
    CycNumber theta(Color a, Color b, Color c) const {
        if (!admissible(a, b, c)) return CycNumber::zero(root_order());
        return theta_values_[static_cast<std::size_t>(theta_[triple_index(a, b, c)])];
    }

    // Tetrahedral net. Arguments follow the edge layout where (a,b,e),
    // (c,d,e), (a,d,f), (b,c,f) are the four faces and (a,c), (b,d), (e,f)
    // the three pairs of opposite edges. Invariant under all 24 symmetries
    // of the tetrahedron; zero when any face is inadmissible.
    CycNumber tet_symbol(Color a, Color b, Color e, Color c, Color d, Color f) const {
        const int ord = root_order();
        if (!admissible(a, b, e) || !admissible(c, d, e) || !admissible(a, d, f) ||
            !admissible(b, c, f))
            return CycNumber::zero(ord);
        const std::array<int, 4> s{(a + b + e) / 2, (c + d + e) / 2, (a + d + f) / 2,
                                   (b + c + f) / 2};
        const std::array<int, 3> t{(a + c + e + f) / 2, (b + d + e + f) / 2,
                                   (a + b + c + d) / 2};
        int zlo = *std::max_element(s.begin(), s.end());
        int zhi = *std::min_element(t.begin(), t.end());
        CycNumber sum = CycNumber::zero(ord);
        for (int z = zlo; z <= zhi; ++z) {
            if (z + 1 >= level_.r) continue;  // [z+1]! = 0
            CycNumber term = qfact_[z + 1];
            for (int si : s) term *= inv_qfact_[z - si];
            for (int tj : t) term *= inv_qfact_[tj - z];
            sum += (z % 2) ? -term : term;
        }
        CycNumber pref = CycNumber::from_int(ord, 1);
        for (int tj : t)
            for (int si : s) pref *= qfact_[tj - si];
        for (Color x : {a, b, c, d, e, f}) pref *= inv_qfact_[x];
        return pref * sum;
    }

    // Normalized 6j symbol: tet net divided by the four face thetas. Fully
    // symmetric under the tetrahedral group and supported exactly on tuples
    // whose four faces are admissible.
    const CycNumber& six_j(Color a, Color b, Color e, Color c, Color d, Color f) const {
        if (sixj_.empty())
            throw Error("ModularData: 6j table was not built (construct with build_sixj_table)");
        const int top = color_count() - 1;
        for (Color x : {a, b, e, c, d, f})
            if (x < 0 || x > top) return zero_;
        std::int32_t idx = sixj_[sixj_index(a, b, e, c, d, f)];
        if (idx < 0) return zero_;
        return sixj_values_[static_cast<std::size_t>(idx)];
    }
    bool sixj_ready() const { return !sixj_.empty(); }

    // multiplicity matrix (N^a)_{bc} in {0,1}
    std::vector<std::vector<int>> fusion_matrix(Color a) const {
        const int nc = color_count();
        if (a < 0 || a >= nc) throw DomainError("fusion_matrix: color out of range");
        std::vector<std::vector<int>> m(nc, std::vector<int>(nc, 0));
        for (Color b = 0; b < nc; ++b)
            for (Color c = 0; c < nc; ++c) m[b][c] = admissible(a, b, c) ? 1 : 0;
        return m;
    }

    // dim of the genus-g state space: (tr (sum_a (N^a)^2)^{g-1})^2
    BigInt verlinde_dim(int g) const { return handlebody_dim(g) * handlebody_dim(g); }

    // unsquared count tr (sum_a (N^a)^2)^{g-1}; number of admissible
    // colorings of a trivalent spine of the genus-g handlebody
    BigInt handlebody_dim(int g) const {
        if (g < 1) throw DomainError("verlinde_dim: genus must be >= 1");
        const int nc = color_count();
        std::vector<std::vector<BigInt>> nbar(nc, std::vector<BigInt>(nc, BigInt(0)));
        for (Color a = 0; a < nc; ++a)
            for (Color b = 0; b < nc; ++b)
                for (Color c = 0; c < nc; ++c)
                    if (admissible(a, b, c)) nbar[b][c] += BigInt(1);
        // nbar is already sum_a N^a N^a since entries of N^a are 0/1:
        // (sum_a (N^a)^2)_{bc} = sum_{a,x} N^a_{bx} N^a_{xc}
        std::vector<std::vector<BigInt>> m(nc, std::vector<BigInt>(nc, BigInt(0)));
        for (Color b = 0; b < nc; ++b)
            for (Color x = 0; x < nc; ++x)
                for (Color c = 0; c < nc; ++c)
                    for (Color a = 0; a < nc; ++a)
                        if (admissible(a, b, x) && admissible(a, x, c)) m[b][c] += BigInt(1);
        std::vector<std::vector<BigInt>> acc(nc, std::vector<BigInt>(nc, BigInt(0)));
        for (int i = 0; i < nc; ++i) acc[i][i] = BigInt(1);
        for (int e = 0; e < g - 1; ++e) {
            std::vector<std::vector<BigInt>> next(nc, std::vector<BigInt>(nc, BigInt(0)));
            for (int i = 0; i < nc; ++i)
                for (int k = 0; k < nc; ++k)
                    for (int j = 0; j < nc; ++j) next[i][j] += acc[i][k] * m[k][j];
            acc = std::move(next);
        }
        BigInt tr(0);
        for (int i = 0; i < nc; ++i) tr += acc[i][i];
        return tr;
    }

    std::pair<CycNumber, CycNumber> anomaly_constants() const { return {delta_L_, delta_R_}; }

private:
    Level level_;
    std::vector<CycNumber> qint_, qfact_, inv_qfact_;
    std::vector<CycNumber> qdim_, twist_;
    CycNumber global_dim_, delta_L_, delta_R_;
    std::vector<std::int32_t> theta_;
    std::vector<CycNumber> theta_values_;
    std::vector<std::int32_t> sixj_;
    std::vector<CycNumber> sixj_values_;
    CycNumber zero_ = CycNumber();  // set in build

    std::size_t triple_index(Color a, Color b, Color c) const {
        const std::size_t nc = static_cast<std::size_t>(color_count());
        return (static_cast<std::size_t>(a) * nc + b) * nc + c;
    }
    std::size_t sixj_index(Color a, Color b, Color e, Color c, Color d, Color f) const {
        const std::size_t nc = static_cast<std::size_t>(color_count());
        return ((((static_cast<std::size_t>(a) * nc + b) * nc + e) * nc + c) * nc + d) * nc + f;
    }

    CycNumber compute_theta(Color a, Color b, Color c) const {
        const int m = (a + b - c) / 2, n = (b + c - a) / 2, p = (c + a - b) / 2;
        CycNumber v = qfact_[m + n + p + 1];
        v *= qfact_[m] * qfact_[n] * qfact_[p];
        v *= inv_qfact_[a] * inv_qfact_[b] * inv_qfact_[c];
        return ((m + n + p) % 2) ? -v : v;
    }

    void build_sixj() {
        const int nc = color_count();
        zero_ = CycNumber::zero(root_order());
        sixj_.assign(static_cast<std::size_t>(nc) * nc * nc * nc * nc * nc, -1);
        for (Color a = 0; a < nc; ++a)
            for (Color b = 0; b < nc; ++b)
                for (Color e = 0; e < nc; ++e) {
                    if (!admissible(a, b, e)) continue;
                    for (Color c = 0; c < nc; ++c)
                        for (Color d = 0; d < nc; ++d) {
                            if (!admissible(c, d, e)) continue;
                            for (Color f = 0; f < nc; ++f) {
                                if (!admissible(a, d, f) || !admissible(b, c, f)) continue;
                                CycNumber v = tet_symbol(a, b, e, c, d, f);
                                v *= theta(a, b, e).inverse() * theta(c, d, e).inverse() *
                                     theta(a, d, f).inverse() * theta(b, c, f).inverse();
                                sixj_[sixj_index(a, b, e, c, d, f)] =
                                    static_cast<std::int32_t>(sixj_values_.size());
                                sixj_values_.push_back(std::move(v));
                            }
                        }
                }
    }
};

}  // namespace tvrt
