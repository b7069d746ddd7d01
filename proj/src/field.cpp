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

#include "lagc/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagc {

namespace {

constexpr std::uint32_t kMaxQ = 1u << 22;  // table memory cap

using Digits = std::vector<std::uint32_t>;  // dense coefficients over GF(p), c[i] of x^i

void dig_prune(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits dig_mul(const Digits& a, const Digits& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Digits c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    dig_prune(c);
    return c;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint64_t p) {
    // p prime, a != 0
    std::int64_t t = 0, newt = 1, r = static_cast<std::int64_t>(p), newr = a;
    while (newr != 0) {
        const std::int64_t qq = r / newr;
        std::int64_t tmp = t - qq * newt;
        t = newt;
        newt = tmp;
        tmp = r - qq * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo monic f, coefficients over GF(p).
Digits dig_mod(Digits a, const Digits& f, std::uint64_t p) {
    dig_prune(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            for (std::size_t i = 0; i <= df; ++i) {
                std::uint64_t sub = (std::uint64_t(lead) * f[i]) % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
        dig_prune(a);
    }
    return a;
}

Digits dig_mulmod(const Digits& a, const Digits& b, const Digits& f, std::uint64_t p) {
    return dig_mod(dig_mul(a, b, p), f, p);
}

Digits dig_powmod(Digits base, std::uint64_t e, const Digits& f, std::uint64_t p) {
    Digits result{1};
    base = dig_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) result = dig_mulmod(result, base, f, p);
        e >>= 1;
        if (e > 0) base = dig_mulmod(base, base, f, p);
    }
    return result;
}

Digits dig_gcd(Digits a, Digits b, std::uint64_t p) {
    dig_prune(a);
    dig_prune(b);
    while (!b.empty()) {
        // make b monic before reducing
        std::uint32_t lcinv = inv_mod_p(b.back(), p);
        for (auto& c : b) c = static_cast<std::uint32_t>((std::uint64_t(c) * lcinv) % p);
        a = dig_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        std::uint32_t lcinv = inv_mod_p(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>((std::uint64_t(c) * lcinv) % p);
    }
    return a;
}

// Rabin test: f (monic, degree m) is irreducible over GF(p) iff x^{p^m} = x mod f
// and gcd(x^{p^{m/d}} - x, f) = 1 for every prime d | m.
bool modulus_irreducible(const Digits& f, std::uint64_t p, unsigned m) {
    const Digits x{0, 1};
    auto qpow = [&](unsigned k) {
        // x^{p^k} mod f by repeated p-th powers
        Digits r = x;
        for (unsigned i = 0; i < k; ++i) r = dig_powmod(r, p, f, p);
        return r;
    };
    Digits top = qpow(m);
    if (top != dig_mod(x, f, p)) return false;
    for (std::uint64_t d : prime_factors(m)) {
        Digits h = qpow(static_cast<unsigned>(m / d));
        // h - x
        Digits diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        dig_prune(diff);
        Digits g = dig_gcd(diff, f, p);
        if (!(g.size() == 1 && g[0] == 1)) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Field Field::prime(std::uint64_t p) {
    return extension(p, 1, {});
}

Field Field::extension(std::uint64_t p, unsigned m, const std::vector<Fe>& modulus_digits) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");

    std::uint64_t q64 = 1;
    for (unsigned i = 0; i < m; ++i) {
        q64 *= p;
        if (q64 > kMaxQ) throw std::invalid_argument("field too large for table-based arithmetic");
    }
    const std::uint32_t q = static_cast<std::uint32_t>(q64);

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = q;

    Digits f;  // reduction modulus over GF(p)
    if (m == 1) {
        if (!modulus_digits.empty())
            throw std::invalid_argument("prime field takes no modulus");
        f = {0, 1};  // unused
    } else {
        if (modulus_digits.size() != m + 1)
            throw std::invalid_argument("modulus must have degree m");
        for (Fe c : modulus_digits)
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
        if (modulus_digits[m] != 1) throw std::invalid_argument("modulus must be monic");
        f.assign(modulus_digits.begin(), modulus_digits.end());
        if (!modulus_irreducible(f, p, m))
            throw std::invalid_argument("modulus is reducible over GF(p)");
        impl->modulus = modulus_digits;
    }

    auto encode = [&](const Digits& d) {
        Fe v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = static_cast<Fe>(v * p + d[i]);
        return v;
    };
    auto decode = [&](Fe v) {
        Digits d(m);
        for (unsigned i = 0; i < m; ++i) {
            d[i] = static_cast<std::uint32_t>(v % p);
            v = static_cast<Fe>(v / p);
        }
        dig_prune(d);
        return d;
    };

    // find a multiplicative generator
    const auto qm1_factors = prime_factors(q - 1);
    Fe gen = (q == 2) ? 1 : 0;
    for (Fe cand = 2; cand < q && gen == 0; ++cand) {
        Digits cd = decode(cand);
        bool ok = true;
        for (std::uint64_t d : qm1_factors) {
            Digits h = dig_powmod(cd, (q - 1) / d, f, p);
            if (h.size() == 1 && h[0] == 1) {
                ok = false;
                break;
            }
        }
        if (ok) gen = cand;
    }
    if (gen == 0) throw std::logic_error("no generator found");
    impl->gen = gen;

    impl->exp.resize(q - 1);
    impl->log.assign(q, 0);
    Digits acc{1};
    const Digits gd = decode(gen);
    for (std::uint32_t k = 0; k < q - 1; ++k) {
        Fe v = encode(acc);
        impl->exp[k] = v;
        impl->log[v] = k;
        acc = dig_mulmod(acc, gd, f, p);
    }
    if (!(acc.size() == 1 && acc[0] == 1)) throw std::logic_error("generator order mismatch");

    return Field(std::move(impl));
}

Fe Field::add(Fe a, Fe b) const {
    const std::uint64_t p = impl_->p;
    if (impl_->m == 1) return static_cast<Fe>((std::uint64_t(a) + b) % p);
    Fe r = 0, mult = 1;
    for (unsigned i = 0; i < impl_->m; ++i) {
        Fe da = static_cast<Fe>(a % p), db = static_cast<Fe>(b % p);
        r += static_cast<Fe>(((std::uint64_t(da) + db) % p) * mult);
        a = static_cast<Fe>(a / p);
        b = static_cast<Fe>(b / p);
        mult = static_cast<Fe>(mult * p);
    }
    return r;
}

Fe Field::neg(Fe a) const {
    const std::uint64_t p = impl_->p;
    if (impl_->m == 1) return static_cast<Fe>((p - a) % p);
    Fe r = 0, mult = 1;
    for (unsigned i = 0; i < impl_->m; ++i) {
        Fe da = static_cast<Fe>(a % p);
        r += static_cast<Fe>(((p - da) % p) * mult);
        a = static_cast<Fe>(a / p);
        mult = static_cast<Fe>(mult * p);
    }
    return r;
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t k = std::uint64_t(impl_->log[a]) + impl_->log[b];
    return impl_->exp[k % (impl_->q - 1)];
}

Fe Field::inv(Fe a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t k = impl_->log[a];
    return impl_->exp[(impl_->q - 1 - k) % (impl_->q - 1)];
}

Fe Field::pow(Fe a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const std::int64_t n = impl_->q - 1;
    std::int64_t k = (std::int64_t(impl_->log[a]) * (e % n)) % n;
    if (k < 0) k += n;
    return impl_->exp[k];
}

std::uint32_t Field::order(Fe a) const {
    if (a == 0) throw std::domain_error("order of zero");
    const std::uint32_t n = impl_->q - 1;
    std::uint32_t k = impl_->log[a];
    // order = n / gcd(n, k)
    std::uint32_t x = n, y = k;
    while (y != 0) {
        x %= y;
        std::swap(x, y);
    }
    return n / x;
}

std::uint32_t Field::log(Fe a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return impl_->log[a];
}

std::vector<Fe> Field::digits(Fe a) const {
    std::vector<Fe> d(impl_->m);
    for (unsigned i = 0; i < impl_->m; ++i) {
        d[i] = static_cast<Fe>(a % impl_->p);
        a = static_cast<Fe>(a / impl_->p);
    }
    return d;
}

Fe Field::from_digits(const std::vector<Fe>& d) const {
    if (d.size() > impl_->m) throw std::invalid_argument("too many digits");
    Fe v = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] >= impl_->p) throw std::invalid_argument("digit out of range");
        v = static_cast<Fe>(v * impl_->p + d[i]);
    }
    return v;
}

bool Field::operator==(const Field& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->p == other.impl_->p && impl_->m == other.impl_->m &&
           impl_->modulus == other.impl_->modulus;
}

std::string Field::to_string(Fe a) const {
    if (impl_->m == 1) return std::to_string(a);
    auto d = digits(a);
    std::string s;
    for (std::size_t i = d.size(); i-- > 0;) {
        s += std::to_string(d[i]);
        if (i > 0) s += '.';
    }
    return s;
}

}  // namespace lagc
