#include "tq/exactmath/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tq {

namespace {

unsigned degree_of(const Exponents& e) {
    unsigned d = 0;
    for (unsigned k : e)
        d += k;
    return d;
}

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> u = a;
    for (const auto& v : b)
        if (std::find(u.begin(), u.end(), v) == u.end())
            u.push_back(v);
    return u;
}

void add_term(MultiPoly::Terms& t, const Exponents& e, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = t.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            t.erase(it);
    }
}

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = degree_of(a), db = degree_of(b);
    if (da != db)
        return da < db;
    return a < b;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(std::vector<std::string> vars, Terms terms) : vars_(std::move(vars)) {
    for (auto& [e, c] : terms) {
        if (e.size() != vars_.size())
            throw std::invalid_argument("exponent vector length mismatch");
        if (c != 0)
            terms_.emplace(e, c);
    }
}

MultiPoly MultiPoly::constant(const Rational& c) {
    MultiPoly p;
    if (c != 0)
        p.terms_.emplace(Exponents{}, c);
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p({name});
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& u, const std::string& var) {
    MultiPoly p({var});
    const auto& c = u.coeffs();
    for (unsigned k = 0; k < c.size(); ++k)
        if (c[k] != 0)
            p.terms_.emplace(Exponents{k}, c[k]);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<unsigned> MultiPoly::total_degree() const {
    if (terms_.empty())
        return std::nullopt;
    return degree_of(terms_.rbegin()->first);
}

std::size_t MultiPoly::index_of(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    return it == vars_.end() ? std::string::npos : static_cast<std::size_t>(it - vars_.begin());
}

std::optional<unsigned> MultiPoly::degree_in(const std::string& var) const {
    if (terms_.empty())
        return std::nullopt;
    std::size_t i = index_of(var);
    if (i == std::string::npos)
        return 0u;
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[i]);
    return d;
}

bool MultiPoly::depends_on(const std::string& var) const {
    auto d = degree_in(var);
    return d && *d > 0;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    unsigned d = degree_of(terms_.begin()->first);
    return d == degree_of(terms_.rbegin()->first);
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& universe) const {
    if (universe == vars_)
        return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(universe.begin(), universe.end(), vars_[i]);
        if (it == universe.end())
            throw std::invalid_argument("variable universe does not contain " + vars_[i]);
        pos[i] = static_cast<std::size_t>(it - universe.begin());
    }
    MultiPoly r(universe);
    for (const auto& [e, c] : terms_) {
        Exponents f(universe.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            f[pos[i]] = e[i];
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

MultiPoly MultiPoly::compact() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                used[i] = true;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i])
            kept.push_back(vars_[i]);
    MultiPoly r(kept);
    for (const auto& [e, c] : terms_) {
        Exponents f;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i])
                f.push_back(e[i]);
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    auto u = union_vars(vars_, o.vars_);
    if (u != vars_)
        *this = with_vars(u);
    MultiPoly b = o.with_vars(u);
    for (const auto& [e, c] : b.terms_)
        add_term(terms_, e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    auto u = union_vars(vars_, o.vars_);
    if (u != vars_)
        *this = with_vars(u);
    MultiPoly b = o.with_vars(u);
    for (const auto& [e, c] : b.terms_)
        add_term(terms_, e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto u = union_vars(a.vars_, b.vars_);
    MultiPoly x = a.with_vars(u), y = b.with_vars(u);
    MultiPoly r(u);
    Exponents e(u.size());
    for (const auto& [ea, ca] : x.terms_)
        for (const auto& [eb, cb] : y.terms_) {
            for (std::size_t i = 0; i < u.size(); ++i)
                e[i] = ea[i] + eb[i];
            add_term(r.terms_, e, ca * cb);
        }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_)
        return a.terms_ == b.terms_;
    return (a - b).is_zero();
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    std::size_t i = index_of(var);
    MultiPoly r(vars_);
    if (i == std::string::npos)
        return r;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0)
            continue;
        Exponents f = e;
        --f[i];
        add_term(r.terms_, f, c * static_cast<unsigned long>(e[i]));
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
    // Variables left unbound keep their place; bound ones contribute cached powers.
    std::vector<const MultiPoly*> bound(vars_.size(), nullptr);
    std::vector<std::string> free_vars;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = bindings.find(vars_[i]);
        if (it != bindings.end())
            bound[i] = &it->second;
        else
            free_vars.push_back(vars_[i]);
    }
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    auto power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(constant(1));
        while (cache.size() <= k)
            cache.push_back(cache.back() * *bound[i]);
        return cache[k];
    };
    MultiPoly result(free_vars);
    for (const auto& [e, c] : terms_) {
        Exponents fe;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (!bound[i])
                fe.push_back(e[i]);
        MultiPoly term(free_vars);
        term.terms_.emplace(std::move(fe), c);
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (bound[i] && e[i] > 0)
                term = term * power(i, e[i]);
        result += term;
    }
    return result;
}

MultiPoly MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
    std::map<std::string, MultiPoly> b;
    for (const auto& [k, v] : values)
        b.emplace(k, constant(v));
    return substitute(b);
}

Rational MultiPoly::evaluate_all(const std::map<std::string, Rational>& values) const {
    std::vector<const Rational*> val(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = values.find(vars_[i]);
        if (it != values.end())
            val[i] = &it->second;
    }
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!val[i])
                throw std::invalid_argument("no value for variable " + vars_[i]);
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), val[i]->get_num_mpz_t(), e[i]);
            mpz_pow_ui(p.get_den_mpz_t(), val[i]->get_den_mpz_t(), e[i]);
            t *= p;
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::homogeneous_part(unsigned degree) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
        if (degree_of(e) == degree)
            r.terms_.emplace(e, c);
    return r;
}

MultiPoly MultiPoly::coefficient(const std::string& var, unsigned k) const {
    std::size_t i = index_of(var);
    if (i == std::string::npos)
        return k == 0 ? *this : MultiPoly(vars_);
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
        if (e[i] == k) {
            Exponents f = e;
            f[i] = 0;
            r.terms_.emplace(std::move(f), c);
        }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool unit = (c == 1 || c == -1) && degree_of(e) > 0;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (!unit)
            os << tq::to_string(Rational(abs(c)));
        bool need_star = !unit;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (need_star)
                os << "*";
            os << vars_[i];
            if (e[i] > 1)
                os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
    MultiPoly r = MultiPoly::constant(1), b = p;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& p, const MultiPoly& divisor) {
    if (divisor.is_zero())
        throw ZeroPolynomial("division by the zero polynomial");
    auto u = union_vars(p.vars(), divisor.vars());
    MultiPoly rem = p.with_vars(u), d = divisor.with_vars(u);
    MultiPoly quo(u), out(u);
    const auto& [lm, lc] = *d.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& [e, c] = *rem.terms().rbegin();
        bool divisible = true;
        Exponents q(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (e[i] < lm[i]) {
                divisible = false;
                break;
            }
            q[i] = e[i] - lm[i];
        }
        if (divisible) {
            MultiPoly t(u, {{q, c / lc}});
            quo += t;
            rem -= t * d;
        } else {
            MultiPoly t(u, {{e, c}});
            out += t;
            rem -= t;
        }
    }
    return {quo, out};
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& divisor) {
    auto [q, r] = divmod(p, divisor);
    if (!r.is_zero())
        throw std::logic_error("multivariate division is not exact");
    return q;
}

UniPoly to_unipoly(const MultiPoly& p, const std::string& var) {
    std::vector<Rational> c;
    const auto& vars = p.vars();
    for (const auto& [e, coef] : p.terms()) {
        unsigned k = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] == var)
                k = e[i];
            else if (e[i] != 0)
                throw std::invalid_argument("polynomial involves " + vars[i] + " besides " + var);
        }
        if (c.size() <= k)
            c.resize(k + 1);
        c[k] += coef;
    }
    return UniPoly(std::move(c));
}

ParamPoly to_param_poly(const MultiPoly& p, const std::string& main, const std::string& param) {
    std::vector<std::vector<Rational>> c;
    const auto& vars = p.vars();
    for (const auto& [e, coef] : p.terms()) {
        unsigned k = 0, j = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] == main)
                k = e[i];
            else if (vars[i] == param)
                j = e[i];
            else if (e[i] != 0)
                throw std::invalid_argument("polynomial involves " + vars[i] + " besides " + main + ", " + param);
        }
        if (c.size() <= k)
            c.resize(k + 1);
        if (c[k].size() <= j)
            c[k].resize(j + 1);
        c[k][j] += coef;
    }
    ParamPoly r;
    for (auto& v : c)
        r.emplace_back(std::move(v));
    return trim(std::move(r));
}

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }
MultiPoly cst(const Rational& c) { return MultiPoly::constant(c); }

}  // namespace tq
