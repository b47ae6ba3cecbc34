#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "gzmom/rational.hpp"
#include "gzmom/real.hpp"

// Exact symbolic values: finite rational linear combinations over the
// constant basis {1, log(2pi), gamma, zeta(j), pi^{2m}}. A value is either
// in "zeta form" (no pi powers) or "pi form" (no even zeta symbols); the
// two forms are never mixed inside one value.

namespace gzmom {

enum class SymKind : int { unit = 0, log2pi = 1, gamma = 2, zeta = 3, pipow = 4 };

struct ConstSymbol {
    SymKind kind = SymKind::unit;
    int arg = 0;  // zeta: j >= 2; pipow: even exponent >= 2; otherwise 0

    static ConstSymbol Unit() { return {SymKind::unit, 0}; }
    static ConstSymbol Log2Pi() { return {SymKind::log2pi, 0}; }
    static ConstSymbol EulerGamma() { return {SymKind::gamma, 0}; }
    static ConstSymbol Zeta(int j) {
        if (j < 2) throw std::invalid_argument("ConstSymbol::Zeta: j < 2");
        return {SymKind::zeta, j};
    }
    static ConstSymbol PiPow(int e) {
        if (e < 2 || e % 2 != 0)
            throw std::invalid_argument("ConstSymbol::PiPow: exponent must be even and >= 2");
        return {SymKind::pipow, e};
    }

    friend bool operator==(const ConstSymbol&, const ConstSymbol&) = default;
    friend auto operator<=>(const ConstSymbol&, const ConstSymbol&) = default;

    std::string name() const {
        switch (kind) {
            case SymKind::unit: return "unit";
            case SymKind::log2pi: return "log2pi";
            case SymKind::gamma: return "gamma";
            case SymKind::zeta: return "zeta" + std::to_string(arg);
            case SymKind::pipow: return "pi" + std::to_string(arg);
        }
        return "?";
    }

    std::string display() const {
        switch (kind) {
            case SymKind::unit: return "1";
            case SymKind::log2pi: return "log(2π)";
            case SymKind::gamma: return "γ";
            case SymKind::zeta: return "ζ(" + std::to_string(arg) + ")";
            case SymKind::pipow: return "π^" + std::to_string(arg);
        }
        return "?";
    }
};

class SymVal {
public:
    SymVal() = default;
    /*implicit*/ SymVal(const Rat& r) { add_term(ConstSymbol::Unit(), r); }

    static SymVal symbol(ConstSymbol s, Rat coeff = Rat(1)) {
        SymVal v;
        v.add_term(s, coeff);
        return v;
    }

    Rat coeff(const ConstSymbol& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const ConstSymbol& s, const Rat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<ConstSymbol, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool has_pipow() const {
        return !terms_.empty() && terms_.rbegin()->first.kind == SymKind::pipow;
    }
    bool has_even_zeta() const {
        for (const auto& [s, c] : terms_)
            if (s.kind == SymKind::zeta && s.arg % 2 == 0) return true;
        return false;
    }
    bool has_odd_zeta() const {
        for (const auto& [s, c] : terms_)
            if (s.kind == SymKind::zeta && s.arg % 2 == 1) return true;
        return false;
    }

    SymVal& operator+=(const SymVal& o) {
        require_compatible(o);
        for (const auto& [s, c] : o.terms_) add_term(s, c);
        return *this;
    }
    SymVal& operator-=(const SymVal& o) {
        require_compatible(o);
        for (const auto& [s, c] : o.terms_) add_term(s, -c);
        return *this;
    }
    SymVal& operator*=(const Rat& r) {
        if (r.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [s, c] : terms_) c *= r;
        return *this;
    }

    friend SymVal operator+(SymVal a, const SymVal& b) { return a += b; }
    friend SymVal operator-(SymVal a, const SymVal& b) { return a -= b; }
    friend SymVal operator*(SymVal a, const Rat& r) { return a *= r; }
    friend SymVal operator*(const Rat& r, SymVal a) { return a *= r; }
    friend SymVal operator-(const SymVal& a) { return a * Rat(-1); }

    friend bool operator==(const SymVal& a, const SymVal& b) {
        return a.terms_ == b.terms_;
    }

private:
    void require_compatible(const SymVal& o) const {
        if ((has_pipow() && o.has_even_zeta()) || (has_even_zeta() && o.has_pipow()))
            throw std::invalid_argument("SymVal: mixing zeta form with pi form");
    }

    std::map<ConstSymbol, Rat> terms_;
};

/// C = (log(2pi) - gamma)/2 = 0.6303307...
inline SymVal constant_C() {
    SymVal v;
    v.add_term(ConstSymbol::Log2Pi(), Rat(1, 2));
    v.add_term(ConstSymbol::EulerGamma(), Rat(-1, 2));
    return v;
}

/// Replace each zeta(2m) with its exact rational multiple of pi^{2m}
/// (2 (2m)! zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m}). Rejects values that
/// still carry an odd zeta symbol.
inline SymVal reduce_zeta_even(const SymVal& v) {
    SymVal out;
    for (const auto& [s, c] : v.terms()) {
        if (s.kind != SymKind::zeta) {
            out.add_term(s, c);
            continue;
        }
        if (s.arg % 2 != 0)
            throw std::invalid_argument("reduce_zeta_even: odd zeta symbol present");
        const unsigned j = static_cast<unsigned>(s.arg);
        Rat r = bernoulli(j) * pow2_rat(static_cast<long>(j)) / Rat(2 * factorial(j));
        if ((j / 2) % 2 == 0) r = -r;  // (-1)^{m+1}, m = j/2
        out.add_term(ConstSymbol::PiPow(s.arg), c * r);
    }
    return out;
}

/// Throws if any odd zeta symbol carries a nonzero coefficient; the closed
/// forms produced by this project never contain one.
inline void assert_no_odd_zeta(const SymVal& v) {
    if (v.has_odd_zeta())
        throw std::logic_error("SymVal: unexpected odd zeta coefficient");
}

namespace detail {

inline Real symbol_value(const ConstSymbol& s) {
    switch (s.kind) {
        case SymKind::unit: return Real(1);
        case SymKind::log2pi: return real_log_2pi();
        case SymKind::gamma: return real_euler_gamma();
        case SymKind::zeta: return zeta_int_real(static_cast<unsigned>(s.arg));
        case SymKind::pipow: return pow(real_pi(), s.arg);
    }
    throw std::logic_error("symbol_value: bad kind");
}

}  // namespace detail

/// Numeric value, correct to the requested number of significant digits.
/// `digits` must not exceed the build's precision ceiling (kMaxEvalDigits).
inline Real eval_numeric(const SymVal& v, unsigned digits = 30) {
    if (digits == 0 || digits > kMaxEvalDigits)
        throw std::invalid_argument("eval_numeric: unsupported precision request");
    Real acc = 0;
    for (const auto& [s, c] : v.terms()) acc += to_real(c) * detail::symbol_value(s);
    return acc;
}

/// JSON wire form: object keyed by symbol name, values as exact "p/q" strings.
inline void to_json(nlohmann::json& j, const SymVal& v) {
    j = nlohmann::json::object();
    for (const auto& [s, c] : v.terms()) j[s.name()] = c.fraction_str();
}

inline ConstSymbol symbol_from_name(const std::string& name) {
    if (name == "unit") return ConstSymbol::Unit();
    if (name == "log2pi") return ConstSymbol::Log2Pi();
    if (name == "gamma") return ConstSymbol::EulerGamma();
    if (name.rfind("zeta", 0) == 0)
        return ConstSymbol::Zeta(std::stoi(name.substr(4)));
    if (name.rfind("pi", 0) == 0)
        return ConstSymbol::PiPow(std::stoi(name.substr(2)));
    throw std::invalid_argument("symbol_from_name: unknown symbol '" + name + "'");
}

inline void from_json(const nlohmann::json& j, SymVal& v) {
    v = SymVal();
    for (auto it = j.begin(); it != j.end(); ++it)
        v.add_term(symbol_from_name(it.key()), Rat::parse(it.value().get<std::string>()));
}

namespace detail {

inline void append_term(std::ostringstream& os, bool& first, const Rat& c,
                        const std::string& sym) {
    Rat a = abs(c);
    if (first) {
        if (c.sign() < 0) os << "-";
        first = false;
    } else {
        os << (c.sign() < 0 ? " - " : " + ");
    }
    if (sym.empty()) {
        os << a.str();
    } else if (a == Rat(1)) {
        os << sym;
    } else if (a.is_integer()) {
        os << a.str() << sym;
    } else {
        os << "(" << a.str() << ")" << sym;
    }
}

}  // namespace detail

/// Human-readable rendering in the display order log(2pi), gamma, rational
/// part, zeta terms, pi powers; e.g. "log(2pi) - gamma - 23/6 + (4/3)zeta(2)".
inline std::string to_display_string(const SymVal& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const ConstSymbol& s) {
        Rat c = v.coeff(s);
        if (!c.is_zero())
            detail::append_term(os, first, c,
                                s.kind == SymKind::unit ? "" : s.display());
    };
    emit(ConstSymbol::Log2Pi());
    emit(ConstSymbol::EulerGamma());
    emit(ConstSymbol::Unit());
    for (const auto& [s, c] : v.terms())
        if (s.kind == SymKind::zeta)
            detail::append_term(os, first, c, s.display());
    for (const auto& [s, c] : v.terms())
        if (s.kind == SymKind::pipow)
            detail::append_term(os, first, c, s.display());
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const SymVal& v) {
    return os << to_display_string(v);
}

/// Rendering with the combination a*C + rest, where C = (log(2pi)-gamma)/2.
/// Requires the log(2pi) and gamma coefficients to be exact opposites.
inline std::string to_c_basis_string(const SymVal& v) {
    Rat x = v.coeff(ConstSymbol::Log2Pi());
    Rat y = v.coeff(ConstSymbol::EulerGamma());
    if (y != -x)
        throw std::invalid_argument("to_c_basis_string: value is not of the form a*C + ...");
    Rat a = Rat(2) * x;
    SymVal rest = v;
    rest.add_term(ConstSymbol::Log2Pi(), -x);
    rest.add_term(ConstSymbol::EulerGamma(), -y);
    if (a.is_zero()) return to_display_string(rest);
    std::ostringstream os;
    bool first = true;
    detail::append_term(os, first, a, "C");
    for (const auto& [s, c] : rest.terms()) {
        if (s.kind == SymKind::unit)
            detail::append_term(os, first, c, "");
        else
            detail::append_term(os, first, c, s.display());
    }
    return os.str();
}

}  // namespace gzmom
