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

#include "lagc/serialize.hpp"

#include <fstream>
#include <sstream>

namespace lagc {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long long to_ll(const std::string& tok, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid integer for " + what + ": '" + tok + "'");
    }
}

std::uint64_t to_u64(const std::string& tok, const std::string& what) {
    long long v = to_ll(tok, what);
    if (v < 0) throw ParseError(what + " must be nonnegative");
    return static_cast<std::uint64_t>(v);
}

}  // namespace

std::string format_element(const Field& f, Fe v) { return f.to_string(v); }

Fe parse_element(const Field& f, const std::string& token) {
    std::vector<Fe> digits;  // most significant first in the token
    std::string cur;
    for (char ch : token + ".") {
        if (ch == '.') {
            if (cur.empty()) throw ParseError("malformed element token '" + token + "'");
            digits.push_back(static_cast<Fe>(to_u64(cur, "element digit")));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (digits.size() > f.m()) throw ParseError("too many digits in element '" + token + "'");
    for (Fe d : digits)
        if (d >= f.p()) throw ParseError("digit out of range in element '" + token + "'");
    std::vector<Fe> ascending(digits.rbegin(), digits.rend());
    return f.from_digits(ascending);
}

CodeConfig parse_config(std::istream& in) {
    // gather raw key/value pairs first; element parsing needs the field
    std::vector<std::tuple<int, std::string, std::vector<std::string>>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        // accept "key = v1 v2" and "key v1 v2"
        std::string key = toks[0];
        std::size_t start = 1;
        if (toks.size() > 1 && toks[1] == "=") start = 2;
        entries.emplace_back(lineno, key,
                             std::vector<std::string>(toks.begin() + start, toks.end()));
    }

    auto fail = [](int ln, const std::string& msg) {
        throw ParseError("config line " + std::to_string(ln) + ": " + msg);
    };

    CodeConfig cfg;
    std::vector<std::string> eval_raw, mod_raw, c_raw, zeta_raw;
    bool saw_p = false, saw_r = false, saw_c = false, saw_deg = false, saw_eval = false;
    for (const auto& [ln, key, vals] : entries) {
        auto one = [&]() -> const std::string& {
            if (vals.size() != 1) fail(ln, "key '" + key + "' takes exactly one value");
            return vals[0];
        };
        if (key == "p") {
            cfg.setup.p = to_u64(one(), "p");
            saw_p = true;
        } else if (key == "m") {
            cfg.setup.m = static_cast<unsigned>(to_u64(one(), "m"));
        } else if (key == "modulus") {
            mod_raw = vals;
        } else if (key == "r") {
            cfg.setup.r = static_cast<unsigned>(to_u64(one(), "r"));
            saw_r = true;
        } else if (key == "c") {
            c_raw = {one()};
            saw_c = true;
        } else if (key == "zeta") {
            zeta_raw = {one()};
        } else if (key == "eval_points") {
            if (vals.empty()) fail(ln, "eval_points needs at least one value");
            eval_raw = vals;
            saw_eval = true;
        } else if (key == "degA") {
            cfg.deg_a = to_ll(one(), "degA");
            saw_deg = true;
        } else if (key == "seed") {
            cfg.seed = to_u64(one(), "seed");
        } else if (key == "mode") {
            const std::string& v = one();
            if (v == "strict")
                cfg.mode = CodeMode::strict;
            else if (v == "relaxed")
                cfg.mode = CodeMode::relaxed;
            else
                fail(ln, "mode must be strict or relaxed");
        } else {
            fail(ln, "unknown key '" + key + "'");
        }
    }
    if (!saw_p) throw ParseError("config: missing key 'p'");
    if (!saw_r) throw ParseError("config: missing key 'r'");
    if (!saw_c) throw ParseError("config: missing key 'c'");
    if (!saw_deg) throw ParseError("config: missing key 'degA'");
    if (!saw_eval) throw ParseError("config: missing key 'eval_points'");
    if (cfg.setup.m > 1 && mod_raw.size() != cfg.setup.m + 1)
        throw ParseError("config: modulus needs m+1 coefficients");
    if (cfg.setup.m == 1 && !mod_raw.empty())
        throw ParseError("config: modulus given for a prime field");

    for (const std::string& t : mod_raw)
        cfg.setup.modulus.push_back(static_cast<Fe>(to_u64(t, "modulus coefficient")));

    // build the field to decode element tokens
    Field f = cfg.setup.m == 1 ? Field::prime(cfg.setup.p)
                               : Field::extension(cfg.setup.p, cfg.setup.m, cfg.setup.modulus);
    cfg.setup.c = parse_element(f, c_raw[0]);
    if (!zeta_raw.empty()) cfg.setup.zeta = parse_element(f, zeta_raw[0]);
    for (const std::string& t : eval_raw) cfg.setup.eval_points.push_back(parse_element(f, t));
    return cfg;
}

CodeConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file " + path);
    return parse_config(in);
}

std::string format_config(const CodeConfig& cfg) {
    Field f = cfg.setup.m == 1 ? Field::prime(cfg.setup.p)
                               : Field::extension(cfg.setup.p, cfg.setup.m, cfg.setup.modulus);
    std::ostringstream out;
    out << "p = " << cfg.setup.p << "\n";
    out << "m = " << cfg.setup.m << "\n";
    if (cfg.setup.m > 1) {
        out << "modulus =";
        for (Fe c : cfg.setup.modulus) out << " " << c;
        out << "\n";
    }
    out << "r = " << cfg.setup.r << "\n";
    out << "c = " << format_element(f, cfg.setup.c) << "\n";
    if (cfg.setup.zeta) out << "zeta = " << format_element(f, *cfg.setup.zeta) << "\n";
    out << "eval_points =";
    for (Fe a : cfg.setup.eval_points) out << " " << format_element(f, a);
    out << "\n";
    out << "degA = " << cfg.deg_a << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "mode = " << (cfg.mode == CodeMode::strict ? "strict" : "relaxed") << "\n";
    return out.str();
}

namespace {

void write_poly(std::ostream& out, const Poly& p) {
    out << p.coeffs().size();
    for (Fe c : p.coeffs()) out << " " << c;
}

Poly read_poly(std::istream& in, const Field& f) {
    std::size_t n = 0;
    if (!(in >> n)) throw ParseError("bundle: truncated polynomial");
    std::vector<Fe> c(n);
    for (auto& v : c)
        if (!(in >> v)) throw ParseError("bundle: truncated polynomial coefficients");
    return Poly(f, std::move(c));
}

void write_rat(std::ostream& out, const Rat& r) {
    out << r.numerator() << "/" << r.denominator();
}

Rat read_rat(std::istream& in) {
    std::string tok;
    if (!(in >> tok)) throw ParseError("bundle: truncated rational");
    const auto slash = tok.find('/');
    if (slash == std::string::npos) return Rat(to_ll(tok, "rational"));
    return Rat(to_ll(tok.substr(0, slash), "rational numerator"),
               to_ll(tok.substr(slash + 1), "rational denominator"));
}

void write_divisor(std::ostream& out, const DDivisor& d) {
    out << "divisor " << d.support_size() << "\n";
    for (const auto& [q, c] : d.support()) {
        if (q.is_infinity()) {
            out << "inf ";
        } else {
            out << "place ";
            write_poly(out, q.poly());
            out << " ";
        }
        write_rat(out, c);
        out << "\n";
    }
}

DDivisor read_divisor(std::istream& in, const Field& f) {
    std::string kw;
    std::size_t n = 0;
    if (!(in >> kw >> n) || kw != "divisor") throw ParseError("bundle: expected divisor block");
    DDivisor d;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(in >> kw)) throw ParseError("bundle: truncated divisor");
        if (kw == "inf") {
            d.set(Place::infinity(f), read_rat(in));
        } else if (kw == "place") {
            Poly p = read_poly(in, f);
            d.set(Place::finite(std::move(p)), read_rat(in));
        } else {
            throw ParseError("bundle: bad divisor entry '" + kw + "'");
        }
    }
    return d;
}

void write_skew(std::ostream& out, const SkewElement& e) {
    out << "element " << e.r() << "\n";
    for (unsigned j = 0; j < e.r(); ++j) {
        write_poly(out, e.coeff(j).num());
        out << " ";
        write_poly(out, e.coeff(j).den());
        out << "\n";
    }
}

SkewElement read_skew(std::istream& in, const Field& f, Orientation o) {
    std::string kw;
    unsigned r = 0;
    if (!(in >> kw >> r) || kw != "element") throw ParseError("bundle: expected skew element");
    std::vector<RatFunc> c;
    for (unsigned j = 0; j < r; ++j) {
        Poly num = read_poly(in, f);
        Poly den = read_poly(in, f);
        c.emplace_back(std::move(num), std::move(den));
    }
    return SkewElement(o, std::move(c));
}

}  // namespace

Bundle::Bundle(CodeConfig cfg, KummerSetup setup)
    : cfg_(std::move(cfg)), setup_(std::move(setup)), generator_(setup_.F, 0, 0) {}

Bundle::Bundle(const CodeConfig& cfg) : Bundle(cfg, setup_validate(cfg.setup)) {
    divisor_.set(setup_.infinity_place(), Rat(cfg.deg_a));
    CodeInstance code(setup_, divisor_, orientation_, cfg.mode);
    basis_ = code.space().basis();
    generator_ = code.generator();
    if (cfg.mode == CodeMode::strict) {
        DecoderContext ctx(code);
        a1_ = ctx.a1();
        rho_ = ctx.rho();
    }
}

long long Bundle::rho() const {
    if (!rho_) throw std::logic_error("relaxed bundle has no decoding radius");
    return *rho_;
}

const DDivisor& Bundle::a1() const {
    if (!a1_) throw std::logic_error("relaxed bundle has no auxiliary divisor");
    return *a1_;
}

CodeInstance Bundle::instantiate() const {
    return CodeInstance(setup_, divisor_, orientation_, cfg_.mode);
}

void write_bundle(std::ostream& out, const Bundle& b) {
    out << "lagcode-bundle 1\n";
    out << format_config(b.cfg_);
    out << "orientation " << sign_of(b.orientation_) << "\n";
    write_divisor(out, b.divisor_);
    out << "basis " << b.basis_.size() << "\n";
    for (const SkewElement& e : b.basis_) write_skew(out, e);
    out << "generator " << b.generator_.rows() << " " << b.generator_.cols() << "\n";
    for (std::size_t i = 0; i < b.generator_.rows(); ++i) {
        for (std::size_t j = 0; j < b.generator_.cols(); ++j) {
            if (j) out << " ";
            out << b.generator_(i, j);
        }
        out << "\n";
    }
    if (b.rho_) {
        out << "rho " << *b.rho_ << "\n";
        write_divisor(out, *b.a1_);
    }
    out << "end\n";
}

Bundle read_bundle(std::istream& in) {
    std::string kw;
    int version = 0;
    if (!(in >> kw >> version) || kw != "lagcode-bundle")
        throw ParseError("not a lagcode bundle");
    if (version != 1) throw ParseError("unsupported bundle version");

    // the config block is the next 8-10 lines; re-parse keys until 'orientation'
    std::ostringstream cfg_text;
    std::string line;
    std::getline(in, line);  // consume end of header line
    std::streampos after_cfg;
    while (true) {
        after_cfg = in.tellg();
        if (!std::getline(in, line)) throw ParseError("bundle: truncated config");
        if (split_ws(line).size() >= 2 && split_ws(line)[0] == "orientation") break;
        cfg_text << line << "\n";
    }
    std::istringstream cfg_in(cfg_text.str());
    CodeConfig cfg = parse_config(cfg_in);

    Bundle b(cfg, setup_validate(cfg.setup));
    const auto toks = split_ws(line);
    const long long osign = to_ll(toks[1], "orientation");
    if (osign != 1 && osign != -1) throw ParseError("bundle: bad orientation");
    b.orientation_ = osign == 1 ? Orientation::primal : Orientation::adjoint;

    const Field& f = b.setup_.F;
    b.divisor_ = read_divisor(in, f);

    std::size_t k = 0;
    if (!(in >> kw >> k) || kw != "basis") throw ParseError("bundle: expected basis block");
    for (std::size_t j = 0; j < k; ++j) b.basis_.push_back(read_skew(in, f, b.orientation_));

    std::size_t rows = 0, cols = 0;
    if (!(in >> kw >> rows >> cols) || kw != "generator")
        throw ParseError("bundle: expected generator block");
    FqMatrix g(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Fe v;
            if (!(in >> v)) throw ParseError("bundle: truncated generator matrix");
            if (v >= f.q()) throw ParseError("bundle: generator entry out of field range");
            g(i, j) = v;
        }
    b.generator_ = std::move(g);

    if (!(in >> kw)) throw ParseError("bundle: truncated trailer");
    if (kw == "rho") {
        long long rho;
        if (!(in >> rho)) throw ParseError("bundle: truncated rho");
        b.rho_ = rho;
        b.a1_ = read_divisor(in, f);
        if (!(in >> kw)) throw ParseError("bundle: truncated trailer");
    }
    if (kw != "end") throw ParseError("bundle: missing end marker");
    return b;
}

void write_bundle_file(const std::string& path, const Bundle& b) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_bundle(out, b);
}

Bundle read_bundle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open bundle file " + path);
    return read_bundle(in);
}

void write_word(std::ostream& out, const BlockWord& w) {
    const Field& f = w.field();
    out << f.q() << " " << w.r() << " " << w.num_blocks() << "\n";
    for (std::size_t i = 0; i < w.num_blocks(); ++i) {
        for (unsigned row = 0; row < w.r(); ++row) {
            for (unsigned col = 0; col < w.r(); ++col) {
                if (col) out << " ";
                out << format_element(f, w.block(i)(row, col));
            }
            out << "\n";
        }
    }
}

BlockWord read_word(std::istream& in, const Field& f) {
    std::uint64_t q = 0;
    unsigned r = 0;
    std::size_t s = 0;
    if (!(in >> q >> r >> s)) throw ParseError("word: missing header");
    if (q != f.q()) throw ParseError("word: field size mismatch");
    if (r == 0 || s == 0) throw ParseError("word: empty shape");
    BlockWord w(f, s, r);
    std::string tok;
    for (std::size_t i = 0; i < s; ++i)
        for (unsigned row = 0; row < r; ++row)
            for (unsigned col = 0; col < r; ++col) {
                if (!(in >> tok)) throw ParseError("word: truncated data");
                w.block(i)(row, col) = parse_element(f, tok);
            }
    return w;
}

}  // namespace lagc
