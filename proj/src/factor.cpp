/*
   Copyright 2026 The lagcode authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lagc/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagc {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x1a6c0de5eedULL;

// Inverse Frobenius: a^(1/p) = a^(p^(m-1)) in GF(p^m).
Fe pth_root_elem(const Field& f, Fe a) {
    Fe r = a;
    for (unsigned i = 0; i + 1 < f.m(); ++i) r = f.pow(r, static_cast<std::int64_t>(f.p()));
    return r;
}

// f(u) = g(u^p) -> g, taking p-th roots of coefficients.
Poly pth_root_poly(const Poly& f) {
    const Field& fld = f.field();
    const auto p = static_cast<std::size_t>(fld.p());
    std::vector<Fe> out(f.deg() / p + 1, 0);
    for (std::size_t i = 0; i <= f.deg(); ++i) {
        Fe c = f.coeff(i);
        if (c == 0) continue;
        if (i % p != 0) throw std::logic_error("not a p-th power");
        out[i / p] = pth_root_elem(fld, c);
    }
    return Poly(fld, std::move(out));
}

// Monic squarefree decomposition: f = prod part^mult, parts squarefree and coprime.
std::vector<std::pair<Poly, unsigned>> squarefree_decompose(const Poly& f) {
    std::vector<std::pair<Poly, unsigned>> result;
    if (f.deg() == 0) return result;
    const Field& fld = f.field();
    const Poly one = Poly::constant(fld, 1);

    Poly d = f.derivative();
    if (d.is_zero()) {
        for (auto& [s, e] : squarefree_decompose(pth_root_poly(f)))
            result.emplace_back(s, e * static_cast<unsigned>(fld.p()));
        return result;
    }

    Poly c = gcd(f, d);
    Poly w = f / c;
    unsigned i = 1;
    while (!(w == one)) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!(z == one)) result.emplace_back(z.monic(), i);
        w = y;
        c = c / y;
        ++i;
    }
    if (!(c == one)) {
        for (auto& [s, e] : squarefree_decompose(pth_root_poly(c)))
            result.emplace_back(s, e * static_cast<unsigned>(fld.p()));
    }
    return result;
}

// Distinct-degree splitting of a monic squarefree polynomial:
// returns (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f) {
    std::vector<std::pair<Poly, unsigned>> res;
    const Field& fld = f.field();
    const Poly x = Poly::monomial(fld, 1, 1);
    Poly rest = f;
    Poly h = x % rest;
    unsigned d = 0;
    while (!rest.is_zero() && rest.deg() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, fld.q(), rest);
        Poly g = gcd(rest, h - x);
        if (!g.is_one()) {
            res.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (!rest.is_one()) res.emplace_back(rest, static_cast<unsigned>(rest.deg()));
    return res;
}

Poly random_poly_below(const Field& fld, std::size_t deg_bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, fld.q() - 1);
    std::vector<Fe> c(deg_bound);
    for (auto& v : c) v = dist(rng);
    return Poly(fld, std::move(c));
}

// Equal-degree splitting (Cantor-Zassenhaus): g is monic squarefree, a product of
// irreducibles all of degree d. Appends them to out.
void equal_degree(const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const Field& fld = g.field();
    if (g.deg() == d) {
        out.push_back(g);
        return;
    }
    while (true) {
        Poly h = random_poly_below(fld, g.deg(), rng);
        if (h.is_zero()) continue;
        Poly split = gcd(g, h);
        if (split.is_one()) {
            if (fld.p() == 2) {
                // additive trace to GF(2)
                Poly t = h % g;
                Poly acc = t;
                const unsigned bits = d * fld.m();
                for (unsigned i = 1; i < bits; ++i) {
                    t = powmod(t, 2, g);
                    acc = (acc + t) % g;
                }
                split = gcd(g, acc);
            } else {
                // h^((q^d-1)/2) = (h^(1+q+...+q^(d-1)))^((q-1)/2)
                Poly t = h % g;
                Poly norm = t;
                for (unsigned i = 1; i < d; ++i) {
                    t = powmod(t, fld.q(), g);
                    norm = (norm * t) % g;
                }
                Poly w = powmod(norm, (fld.q() - 1) / 2, g);
                split = gcd(g, w - Poly::constant(fld, 1));
            }
        }
        if (!split.is_one() && split.deg() < g.deg()) {
            equal_degree(split.monic(), d, rng, out);
            equal_degree((g / split).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, std::mt19937_64& rng) {
    if (f.is_zero()) throw std::domain_error("cannot factor zero polynomial");
    std::vector<std::pair<Poly, unsigned>> result;
    if (f.deg() == 0) return result;

    for (const auto& [part, mult] : squarefree_decompose(f.monic())) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<Poly> irr;
            equal_degree(prod.monic(), d, rng, irr);
            for (auto& p : irr) result.emplace_back(std::move(p), mult);
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        return Poly::compare(a.first, b.first) < 0;
    });
    return result;
}

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f) {
    std::mt19937_64 rng(kDefaultSeed);
    return factor(f, rng);
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.deg() == 0) return false;
    const Field& fld = f.field();
    const unsigned n = static_cast<unsigned>(f.deg());
    if (n == 1) return true;
    const Poly g = f.monic();
    const Poly x = Poly::monomial(fld, 1, 1);

    std::vector<Poly> frob;  // frob[i] = x^(q^(i+1)) mod g
    Poly h = x % g;
    for (unsigned i = 0; i < n; ++i) {
        h = powmod(h, fld.q(), g);
        frob.push_back(h);
    }
    if (!(frob[n - 1] == x % g)) return false;
    for (std::uint64_t t : prime_factors(n)) {
        const unsigned k = n / static_cast<unsigned>(t);
        if (!gcd(frob[k - 1] - x, g).is_one()) return false;
    }
    return true;
}

std::vector<Fe> roots(const Poly& f) {
    std::vector<Fe> out;
    for (const auto& [p, mult] : factor(f)) {
        if (p.deg() != 1) continue;
        const Fe root = f.field().neg(p.coeff(0));
        for (unsigned i = 0; i < mult; ++i) out.push_back(root);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Fe> rth_power_classes(const Field& f, unsigned r) {
    if (r == 0 || (f.q() - 1) % r != 0)
        throw std::invalid_argument("r must divide q-1");
    const std::uint32_t n = (f.q() - 1) / r;
    std::vector<Fe> out(n);
    for (std::uint32_t k = 0; k < n; ++k) out[k] = f.exp(static_cast<std::uint64_t>(k) * r);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lagc
