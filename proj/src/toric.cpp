#include "canonfan/toric.hpp"

#include "int_linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace canonfan {

namespace {

using Mono = std::vector<int>;  // exponent vector over T, X1..Xs (index 0 = T)

// Block elimination order: T-degree first, then total X-degree, then lex on X1..Xs.
// Any monomial containing T beats every T-free one, so T-free members of a Gröbner
// basis generate the elimination ideal.
std::strong_ordering cmp_mono(const Mono& u, const Mono& v) {
    if (u[0] != v[0]) return u[0] <=> v[0];
    int du = 0, dv = 0;
    for (std::size_t i = 1; i < u.size(); ++i) du += u[i];
    for (std::size_t i = 1; i < v.size(); ++i) dv += v[i];
    if (du != dv) return du <=> dv;
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i] != v[i]) return u[i] <=> v[i];
    return std::strong_ordering::equal;
}

bool mono_divides(const Mono& d, const Mono& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

Mono mono_sub_add(const Mono& m, const Mono& sub, const Mono& add) {
    Mono out(m);
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = out[i] - sub[i] + add[i];
    return out;
}

struct Bino {
    Mono lead, tail;  // lead > tail under cmp_mono
};

std::optional<Bino> make_bino(Mono u, Mono v) {
    auto c = cmp_mono(u, v);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(u, v);
    return Bino{std::move(u), std::move(v)};
}

Mono normal_form(Mono m, const std::vector<Bino>& basis) {
    for (;;) {
        bool reduced = false;
        for (const Bino& b : basis)
            if (mono_divides(b.lead, m)) {
                m = mono_sub_add(m, b.lead, b.tail);
                reduced = true;
                break;
            }
        if (!reduced) return m;
    }
}

// Classic binomial Buchberger: S-binomials stay binomial, reductions rewrite each
// side monomial-wise, so no general polynomial arithmetic is needed.
std::vector<Bino> binomial_groebner(std::vector<Bino> basis) {
    struct PairKey {
        Mono lcm;
        std::size_t i, j;
        bool operator<(const PairKey& o) const {
            if (auto c = cmp_mono(lcm, o.lcm); c != 0) return c < 0;
            return std::tie(i, j) < std::tie(o.i, o.j);
        }
    };
    std::set<PairKey> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Mono lcm(basis[i].lead.size());
            bool coprime = true;
            for (std::size_t v = 0; v < lcm.size(); ++v) {
                lcm[v] = std::max(basis[i].lead[v], basis[j].lead[v]);
                if (basis[i].lead[v] > 0 && basis[j].lead[v] > 0) coprime = false;
            }
            if (!coprime) queue.insert(PairKey{std::move(lcm), i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        PairKey key = *queue.begin();
        queue.erase(queue.begin());
        const Bino &f = basis[key.i], &g = basis[key.j];
        Mono u = mono_sub_add(key.lcm, f.lead, f.tail);
        Mono v = mono_sub_add(key.lcm, g.lead, g.tail);
        u = normal_form(u, basis);
        v = normal_form(v, basis);
        if (auto s = make_bino(std::move(u), std::move(v))) {
            basis.push_back(std::move(*s));
            push_pairs(basis.size() - 1);
        }
    }

    // Minimalize: drop binomials whose lead another lead divides, then tail-reduce.
    std::sort(basis.begin(), basis.end(),
              [](const Bino& a, const Bino& b) { return cmp_mono(a.lead, b.lead) < 0; });
    std::vector<Bino> kept;
    for (const Bino& b : basis) {
        bool redundant = false;
        for (const Bino& k : kept)
            if (mono_divides(k.lead, b.lead)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(b);
    }
    for (Bino& b : kept) b.tail = normal_form(b.tail, kept);
    return kept;
}

int to_small_int(const Integer& x) {
    if (x > 1000000 || x < -1000000)
        throw std::runtime_error("toric kernel exponent out of range");
    return static_cast<int>(x);
}

}  // namespace

std::string BinomialRelation::to_string() const {
    auto side = [](const std::vector<int>& m) {
        std::ostringstream out;
        bool any = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (any) out << '*';
            out << 'X' << (i + 1);
            if (m[i] > 1) out << '^' << m[i];
            any = true;
        }
        return any ? out.str() : std::string("1");
    };
    return side(plus) + " - " + side(minus);
}

std::vector<BinomialRelation> toric_kernel(const std::vector<Exponent>& thetas) {
    if (thetas.empty()) throw std::invalid_argument("toric kernel needs at least one monomial");
    const int n = thetas.front().dim();
    for (const Exponent& t : thetas) require_same_dim(t.dim(), n, "toric kernel input");
    const std::size_t s = thetas.size();

    std::vector<detail::IntRow> rows(s, detail::IntRow(static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < s; ++i)
        for (int j = 0; j < n; ++j) rows[i][static_cast<std::size_t>(j)] = thetas[i][j];
    auto lattice = detail::kernel_lattice(rows);
    if (lattice.empty()) return {};

    // Lift the lattice basis to binomials and saturate with respect to X1···Xs by
    // adjoining T·X1···Xs − 1 and eliminating T.
    std::vector<Bino> basis;
    for (const auto& w : lattice) {
        Mono u(s + 1, 0), v(s + 1, 0);
        for (std::size_t i = 0; i < s; ++i) {
            int wi = to_small_int(w[i]);
            if (wi > 0) u[i + 1] = wi;
            if (wi < 0) v[i + 1] = -wi;
        }
        if (auto b = make_bino(std::move(u), std::move(v))) basis.push_back(std::move(*b));
    }
    Mono t_side(s + 1, 1), one(s + 1, 0);
    basis.push_back(*make_bino(std::move(t_side), std::move(one)));

    std::vector<BinomialRelation> relations;
    for (const Bino& b : binomial_groebner(std::move(basis))) {
        if (b.lead[0] != 0 || b.tail[0] != 0) continue;  // still involves T
        BinomialRelation rel;
        rel.plus.assign(b.lead.begin() + 1, b.lead.end());
        rel.minus.assign(b.tail.begin() + 1, b.tail.end());
        relations.push_back(std::move(rel));
    }
    std::sort(relations.begin(), relations.end(),
              [](const BinomialRelation& a, const BinomialRelation& b) {
                  int da = 0, db = 0;
                  for (int x : a.plus) da += x;
                  for (int x : b.plus) db += x;
                  if (da != db) return da < db;
                  return std::tie(a.plus, a.minus) < std::tie(b.plus, b.minus);
              });
    return relations;
}

Polynomial evaluate_relation(const BinomialRelation& rel, const std::vector<Polynomial>& gens) {
    if (rel.arity() != static_cast<int>(gens.size()))
        throw std::invalid_argument("relation arity does not match generator count");
    const int n = gens.empty() ? 1 : gens.front().dim();
    Polynomial pos = Polynomial::constant(n, 1), neg = Polynomial::constant(n, 1);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (rel.plus[i] > 0) pos = pos * gens[i].pow(rel.plus[i]);
        if (rel.minus[i] > 0) neg = neg * gens[i].pow(rel.minus[i]);
    }
    return pos - neg;
}

std::vector<int> relation_normal_form(std::vector<int> mono,
                                      const std::vector<BinomialRelation>& relations) {
    for (;;) {
        bool reduced = false;
        for (const BinomialRelation& rel : relations) {
            bool divides = true;
            for (std::size_t i = 0; i < mono.size(); ++i)
                if (rel.plus[i] > mono[i]) {
                    divides = false;
                    break;
                }
            if (!divides) continue;
            for (std::size_t i = 0; i < mono.size(); ++i)
                mono[i] = mono[i] - rel.plus[i] + rel.minus[i];
            reduced = true;
            break;
        }
        if (!reduced) return mono;
    }
}

}  // namespace canonfan
