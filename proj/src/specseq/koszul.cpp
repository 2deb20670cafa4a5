#include "ecom/specseq/koszul.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "ecom/error.hpp"

namespace ecom::specseq {

using Vector = KoszulAlgebra::Vector;

namespace {

std::uint32_t mod_p(const coinv::Integer& c, std::uint32_t p) {
    return static_cast<std::uint32_t>(mpz_fdiv_ui(c.get_mpz_t(), p));
}

void add_into(Vector& v, const KoszulMonomial& m, std::uint64_t c, std::uint32_t p) {
    c %= p;
    if (c == 0) return;
    auto [it, inserted] = v.emplace(m, static_cast<std::uint32_t>(c));
    if (!inserted) {
        it->second = static_cast<std::uint32_t>((it->second + c) % p);
        if (it->second == 0) v.erase(it);
    }
}

// Exponent vectors of length k summing to total.
void compositions(std::size_t k, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (cur.size() + 1 == k) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = total; a >= 0; --a) {
        cur.push_back(a);
        compositions(k, total - a, cur, out);
        cur.pop_back();
    }
}

std::string base_string_mod(const coinv::Polynomial<coinv::Integer>& poly, std::uint32_t p) {
    BasePolynomial reduced(poly.nvars());
    for (const auto& [m, c] : poly.terms()) reduced.add_term(m, coinv::Integer(mod_p(c, p)));
    return base_polynomial_string(reduced);
}

}  // namespace

KoszulAlgebra::KoszulAlgebra(const ChernVector& chern, std::size_t active, std::uint32_t p, int max_degree)
    : p_(p), n_(chern.classes.size()), k_(chern.base_rank), active_(active), max_degree_(max_degree) {
    if (n_ > 31) throw ShapeMismatch("too many exterior generators");
    if (active_ > n_) throw ShapeMismatch("more active transgressions than generators");
    transgressions_.resize(n_);
    for (std::size_t i = 0; i < active_; ++i)
        for (const auto& [m, c] : chern.classes[i].terms()) add_into(transgressions_[i], {0, m}, mod_p(c, p_), p_);

    basis_.resize(max_degree_ + 1);
    index_.resize(max_degree_ + 1);
    for (std::uint32_t mask = 0; mask < (1u << n_); ++mask) {
        int od = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (mask >> i & 1u) od += 2 * static_cast<int>(i) + 1;
        for (int d = od; d <= max_degree_; d += 2) {
            const int half = (d - od) / 2;
            std::vector<std::vector<int>> exps;
            std::vector<int> cur;
            if (k_ == 0) {
                if (half == 0) exps.push_back({});
            } else {
                compositions(k_, half, cur, exps);
            }
            for (auto& e : exps) basis_[d].push_back({mask, std::move(e)});
        }
    }
    for (int d = 0; d <= max_degree_; ++d) {
        std::stable_sort(basis_[d].begin(), basis_[d].end(), [](const auto& a, const auto& b) {
            if (a.odd != b.odd) return a.odd < b.odd;
            return a.base > b.base;
        });
        for (std::size_t i = 0; i < basis_[d].size(); ++i) index_[d][basis_[d][i]] = i;
    }
}

int KoszulAlgebra::degree(const KoszulMonomial& m) {
    int d = 0;
    for (int i = 0; i < 32; ++i)
        if (m.odd >> i & 1u) d += 2 * i + 1;
    for (int e : m.base) d += 2 * e;
    return d;
}

const std::vector<KoszulMonomial>& KoszulAlgebra::basis(int d) const {
    static const std::vector<KoszulMonomial> empty;
    if (d < 0 || d > max_degree_) return empty;
    return basis_[d];
}

std::size_t KoszulAlgebra::index_of(const KoszulMonomial& m) const {
    const int d = degree(m);
    if (d > max_degree_) throw ShapeMismatch("monomial beyond the truncation");
    return index_[d].at(m);
}

Vector KoszulAlgebra::differential(const KoszulMonomial& m) const {
    Vector out;
    int position = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (!(m.odd >> i & 1u)) continue;
        const std::uint64_t sign = (position % 2 == 0) ? 1 : p_ - 1;
        const std::uint32_t rest = m.odd & ~(1u << i);
        for (const auto& [t, c] : transgressions_[i]) {
            KoszulMonomial prod{rest, m.base};
            for (std::size_t j = 0; j < k_; ++j) prod.base[j] += t.base[j];
            add_into(out, prod, sign * c, p_);
        }
        ++position;
    }
    return out;
}

FpMatrix KoszulAlgebra::differential_matrix(int d) const {
    const auto& src = basis(d);
    const auto& dst = basis(d + 1);
    FpMatrix m(dst.size(), src.size(), p_);
    for (std::size_t j = 0; j < src.size(); ++j)
        for (const auto& [mono, c] : differential(src[j])) m.set(index_of(mono), j, c);
    return m;
}

Vector KoszulAlgebra::multiply(const Vector& a, const Vector& b) const {
    Vector out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            if (ma.odd & mb.odd) continue;
            int swaps = 0;
            for (std::size_t i = 0; i < n_; ++i)
                if (ma.odd >> i & 1u) swaps += std::popcount(mb.odd & ((1u << i) - 1u));
            KoszulMonomial prod{ma.odd | mb.odd, ma.base};
            for (std::size_t j = 0; j < k_; ++j) prod.base[j] += mb.base[j];
            if (degree(prod) > max_degree_) throw ShapeMismatch("product beyond the truncation");
            std::uint64_t c = std::uint64_t(ca) * cb % p_;
            if (swaps % 2) c = (p_ - c) % p_;
            add_into(out, prod, c, p_);
        }
    return out;
}

std::vector<std::uint32_t> KoszulAlgebra::coordinates(const Vector& v, int d) const {
    std::vector<std::uint32_t> c(basis(d).size(), 0);
    for (const auto& [m, x] : v) {
        if (degree(m) != d) throw ShapeMismatch("inhomogeneous element");
        c[index_of(m)] = x;
    }
    return c;
}

Vector KoszulAlgebra::from_coordinates(const std::vector<std::uint32_t>& c, int d) const {
    Vector v;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) v.emplace(basis(d)[i], c[i]);
    return v;
}

std::string KoszulAlgebra::to_string(const Vector& v) const {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v) {
        if (!first) os << "+";
        first = false;
        bool any = false;
        if (c != 1) {
            os << c;
            any = true;
        }
        for (std::size_t i = 0; i < n_; ++i)
            if (m.odd >> i & 1u) {
                os << "z" << (2 * i + 1);
                any = true;
            }
        for (std::size_t j = 0; j < k_; ++j)
            if (m.base[j]) {
                os << "β" << (j + 1);
                if (m.base[j] > 1) os << "^" << m.base[j];
                any = true;
            }
        if (!any) os << "1";
    }
    return os.str();
}

KoszulHomology::KoszulHomology(const KoszulAlgebra& a) : a_(a) {
    const int top = a.max_degree() - 1;
    const std::uint32_t p = a.prime();
    reps_.resize(top + 1);
    spans_.resize(top + 1);
    boundary_rank_.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        const std::size_t n = a.basis(d).size();
        const FpMatrix dout = a.differential_matrix(d);
        FpMatrix span = d > 0 ? a.differential_matrix(d - 1) : FpMatrix(n, 0, p);
        boundary_rank_[d] = span.rank();
        std::size_t rank = boundary_rank_[d];

        auto try_add = [&](const std::vector<std::uint32_t>& col) {
            FpMatrix ext(n, span.cols() + 1, p);
            ext.set_block(0, 0, span);
            for (std::size_t i = 0; i < n; ++i) ext.set(i, span.cols(), col[i]);
            if (ext.rank() == rank) return;
            span = std::move(ext);
            ++rank;
            reps_[d].push_back(a.from_coordinates(col, d));
        };
        // Prefer single monomials that are cycles, then fill from the kernel.
        for (std::size_t i = 0; i < n; ++i) {
            bool cycle = true;
            for (std::size_t r = 0; r < dout.rows(); ++r)
                if (dout(r, i)) cycle = false;
            if (!cycle) continue;
            std::vector<std::uint32_t> col(n, 0);
            col[i] = 1;
            try_add(col);
        }
        const FpMatrix ker = dout.kernel();
        for (std::size_t j = 0; j < ker.cols(); ++j) {
            std::vector<std::uint32_t> col(n);
            for (std::size_t i = 0; i < n; ++i) col[i] = ker(i, j);
            try_add(col);
        }
        spans_[d] = std::move(span);
    }
}

std::vector<std::uint32_t> KoszulHomology::class_of(const Vector& cycle, int d) const {
    const auto coords = a_.coordinates(cycle, d);
    FpMatrix b(coords.size(), 1, a_.prime());
    for (std::size_t i = 0; i < coords.size(); ++i) b.set(i, 0, coords[i]);
    const auto x = spans_.at(d).solve(b);
    if (!x) throw ShapeMismatch("element is not a cycle");
    const std::size_t nb = spans_[d].cols() - reps_[d].size();
    std::vector<std::uint32_t> out(reps_[d].size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*x)(nb + i, 0);
    return out;
}

bool KoszulHomology::is_boundary(const Vector& v, int d) const {
    const auto c = class_of(v, d);
    return std::all_of(c.begin(), c.end(), [](std::uint32_t x) { return x == 0; });
}

PoincareSeries KoszulHomology::series() const {
    std::vector<PoincareSeries::Coeff> c;
    for (const auto& r : reps_) c.push_back(r.size());
    return PoincareSeries(c);
}

std::string GradedRingPresentation::to_string() const {
    std::ostringstream os;
    os << "F" << prime << "[";
    for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i].name;
    os << "]";
    if (!relations.empty()) {
        os << "/(";
        for (std::size_t i = 0; i < relations.size(); ++i) os << (i ? ", " : "") << relations[i];
        os << ")";
    }
    return os.str();
}

namespace {

struct Gen {
    int degree;
    Vector rep;
};

// Algebra generators of the homology and a minimal set of relations among them.
GradedRingPresentation present(const KoszulHomology& h, int top) {
    const KoszulAlgebra& a = h.algebra();
    const std::uint32_t p = a.prime();
    GradedRingPresentation out;
    out.prime = p;
    out.poincare = h.series();

    std::vector<Gen> gens;
    for (int d = 1; d <= top; ++d) {
        const std::size_t dim = h.dim(d);
        if (dim == 0) continue;
        FpMatrix dec(dim, 0, p);
        for (int e = 1; e < d; ++e)
            for (const auto& x : h.representatives(e))
                for (const auto& y : h.representatives(d - e)) {
                    const auto c = h.class_of(a.multiply(x, y), d);
                    FpMatrix ext(dim, dec.cols() + 1, p);
                    ext.set_block(0, 0, dec);
                    for (std::size_t i = 0; i < dim; ++i) ext.set(i, dec.cols(), c[i]);
                    dec = std::move(ext);
                }
        std::size_t rank = dec.rank();
        for (std::size_t j = 0; j < dim; ++j) {
            FpMatrix ext(dim, dec.cols() + 1, p);
            ext.set_block(0, 0, dec);
            ext.set(j, dec.cols(), 1);
            if (ext.rank() == rank) continue;
            dec = std::move(ext);
            ++rank;
            gens.push_back({d, h.representatives(d)[j]});
        }
    }
    std::stable_sort(gens.begin(), gens.end(), [](const Gen& x, const Gen& y) {
        const bool xo = x.degree % 2, yo = y.degree % 2;
        if (xo != yo) return xo > yo;
        return x.degree < y.degree;
    });
    std::map<int, int> seen;
    for (const Gen& g : gens) {
        std::string name = g.degree % 2 ? "z" + std::to_string(g.degree)
                                        : (g.degree == 2 ? std::string("β") : "y" + std::to_string(g.degree));
        const int k = seen[g.degree]++;
        name += std::string(static_cast<std::size_t>(k), '\'');
        out.generators.push_back({name, g.degree, a.to_string(g.rep)});
    }

    // Monomials in the generators per degree, exponent vectors in descending order.
    const std::size_t ng = gens.size();
    std::vector<std::vector<std::vector<int>>> monos(top + 1);
    std::vector<int> cur(ng, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int deg) {
        if (i == ng) {
            monos[deg].push_back(cur);
            return;
        }
        for (int e = (top - deg) / gens[i].degree; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, deg + e * gens[i].degree);
        }
        cur[i] = 0;
    };
    rec(0, 0);

    auto evaluate = [&](const std::vector<int>& m) {
        Vector v;
        v.emplace(KoszulMonomial{0, std::vector<int>(a.base_rank(), 0)}, 1);
        for (std::size_t i = 0; i < ng; ++i)
            for (int e = 0; e < m[i]; ++e) v = a.multiply(v, gens[i].rep);
        return v;
    };
    auto mono_string = [&](const std::vector<int>& m) {
        std::string s;
        for (std::size_t i = 0; i < ng; ++i) {
            if (!m[i]) continue;
            if (!s.empty()) s += "·";
            s += out.generators[i].name;
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
        return s.empty() ? std::string("1") : s;
    };

    struct Rel {
        int degree;
        std::vector<std::uint32_t> coeffs;  // over monos[degree]
    };
    std::vector<Rel> rels;
    for (int d = 1; d <= top; ++d) {
        const auto& ms = monos[d];
        if (ms.empty()) continue;
        const std::size_t dim = h.dim(d);
        FpMatrix eval(dim, ms.size(), p);
        for (std::size_t j = 0; j < ms.size(); ++j) {
            const auto c = h.class_of(evaluate(ms[j]), d);
            for (std::size_t i = 0; i < dim; ++i) eval.set(i, j, c[i]);
        }
        const FpMatrix ker = eval.kernel();
        if (ker.cols() == 0) continue;

        std::vector<std::vector<std::uint32_t>> ideal;
        for (const Rel& r : rels) {
            const int e = d - r.degree;
            for (const auto& mult : monos[e]) {
                std::vector<std::uint32_t> v(ms.size(), 0);
                for (std::size_t t = 0; t < r.coeffs.size(); ++t) {
                    if (!r.coeffs[t]) continue;
                    std::vector<int> prod = monos[r.degree][t];
                    for (std::size_t i = 0; i < ng; ++i) prod[i] += mult[i];
                    const auto pos = std::find(ms.begin(), ms.end(), prod) - ms.begin();
                    v[pos] = (v[pos] + r.coeffs[t]) % p;
                }
                ideal.push_back(std::move(v));
            }
        }
        FpMatrix span(ms.size(), ideal.size(), p);
        for (std::size_t j = 0; j < ideal.size(); ++j)
            for (std::size_t i = 0; i < ms.size(); ++i) span.set(i, j, ideal[j][i]);
        std::size_t rank = span.rank();
        // Reduced echelon kernel vectors, taken from the latest monomials first.
        const FpMatrix kt = ker.transpose().rref();
        for (std::size_t row = kt.rows(); row-- > 0;) {
            std::vector<std::uint32_t> v(ms.size());
            bool nonzero = false;
            for (std::size_t i = 0; i < ms.size(); ++i) nonzero |= (v[i] = kt(row, i)) != 0;
            if (!nonzero) continue;
            FpMatrix ext(ms.size(), span.cols() + 1, p);
            ext.set_block(0, 0, span);
            for (std::size_t i = 0; i < ms.size(); ++i) ext.set(i, span.cols(), v[i]);
            if (ext.rank() == rank) continue;
            span = std::move(ext);
            ++rank;
            rels.push_back({d, v});
        }
    }

    std::vector<std::pair<std::pair<std::size_t, int>, std::string>> named;
    for (const Rel& r : rels) {
        std::string s;
        std::size_t lead = ng;
        for (std::size_t t = 0; t < r.coeffs.size(); ++t) {
            if (!r.coeffs[t]) continue;
            const auto& m = monos[r.degree][t];
            if (lead == ng)
                for (std::size_t i = 0; i < ng; ++i)
                    if (m[i]) {
                        lead = i;
                        break;
                    }
            if (!s.empty()) s += " + ";
            if (r.coeffs[t] != 1) s += std::to_string(r.coeffs[t]);
            s += mono_string(m);
        }
        named.push_back({{lead, r.degree}, s});
    }
    std::stable_sort(named.begin(), named.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [k, s] : named) out.relations.push_back(std::move(s));
    return out;
}

}  // namespace

HomogeneousSpaceResult homogeneous_space_cohomology(const std::vector<std::vector<long>>& weights, std::uint32_t p,
                                                    int truncation) {
    HomogeneousSpaceResult out;
    out.truncation = truncation;
    out.chern = whitney_chern(weights);
    const std::size_t n = out.chern.classes.size();
    for (std::size_t i = 0; i < n; ++i) {
        const KoszulAlgebra page(out.chern, i, p, truncation + 1);
        const KoszulHomology h(page);
        KoszulPageStep step;
        step.r = 2 * static_cast<int>(i + 1);
        step.generator = "z" + std::to_string(2 * i + 1);
        step.transgression = base_string_mod(out.chern.classes[i], p);
        Vector c;
        for (const auto& [m, x] : out.chern.classes[i].terms()) add_into(c, {0, m}, mod_p(x, p), p);
        step.vanishes_on_page = step.r <= truncation ? h.is_boundary(c, step.r) : true;
        step.page_series = h.series();
        out.pages.push_back(std::move(step));
    }
    const KoszulAlgebra final_page(out.chern, n, p, truncation + 1);
    const KoszulHomology h(final_page);
    out.ring = present(h, truncation);
    return out;
}

HomogeneousSpaceResult u3t2_cohomology(std::uint32_t p, int truncation) {
    return homogeneous_space_cohomology({{1, 0}, {1, 0}, {0, 1}}, p, truncation);
}

HomogeneousSpaceResult pu3_cohomology(std::uint32_t p, int truncation) {
    return homogeneous_space_cohomology({{1}, {1}, {1}}, p, truncation);
}

}  // namespace ecom::specseq
