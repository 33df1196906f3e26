#include "tq/lattice/lattice.hpp"

#include <cctype>
#include <sstream>

namespace tq {

GramLattice::GramLattice(std::string name, IntMatrix gram, std::vector<std::string> basis_names,
                         std::optional<IntVector> canonical_class)
    : name_(std::move(name)), gram_(std::move(gram)), basis_names_(std::move(basis_names)),
      canonical_(std::move(canonical_class)) {
    if (!gram_.is_symmetric())
        throw std::invalid_argument("Gram matrix must be symmetric");
    if (basis_names_.size() != gram_.rows())
        throw std::invalid_argument("one basis name per row");
    if (canonical_ && canonical_->size() != gram_.rows())
        throw std::invalid_argument("canonical class has the wrong length");
}

bool GramLattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram_(i, i) % 2 != 0)
            return false;
    return true;
}

Integer GramLattice::determinant() const { return tq::determinant(gram_); }

Inertia GramLattice::signature() const { return inertia(gram_); }

Integer GramLattice::pair(const IntVector& a, const IntVector& b) const {
    if (a.size() != rank() || b.size() != rank())
        throw LatticeMismatch("vector length differs from the lattice rank");
    Integer s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < rank(); ++j)
            s += a[i] * gram_(i, j) * b[j];
    }
    return s;
}

LatticeVector::LatticeVector(LatticePtr lattice, IntVector coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
    if (coords_.size() != lattice_->rank())
        throw LatticeMismatch("vector length differs from the lattice rank");
}

LatticeVector LatticeVector::zero(LatticePtr lattice) {
    std::size_t n = lattice->rank();
    return LatticeVector(std::move(lattice), IntVector(n));
}

LatticeVector LatticeVector::unit(LatticePtr lattice, std::size_t i) {
    IntVector v(lattice->rank());
    v.at(i) = 1;
    return LatticeVector(std::move(lattice), std::move(v));
}

bool LatticeVector::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0)
            return false;
    return true;
}

namespace {

void same_lattice(const LatticeVector& a, const LatticeVector& b) {
    if (a.lattice() != b.lattice())
        throw LatticeMismatch("vectors live on different lattices");
}

}  // namespace

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    same_lattice(a, b);
    IntVector c = a.coords_;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.coords_[i];
    return LatticeVector(a.lattice_, std::move(c));
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) { return a + (-b); }

LatticeVector operator-(const LatticeVector& a) { return Integer(-1) * a; }

LatticeVector operator*(const Integer& k, const LatticeVector& a) {
    IntVector c = a.coords_;
    for (auto& x : c)
        x *= k;
    return LatticeVector(a.lattice_, std::move(c));
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.lattice_ == b.lattice_ && a.coords_ == b.coords_;
}

std::string LatticeVector::to_string() const {
    std::ostringstream os;
    bool first = true;
    const auto& names = lattice_->basis_names();
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Integer& c = coords_[i];
        if (c == 0)
            continue;
        if (c < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        Integer a = abs(c);
        if (a != 1)
            os << a << "*";
        os << names[i];
        first = false;
    }
    return first ? "0" : os.str();
}

Integer intersect(const LatticeVector& a, const LatticeVector& b) {
    same_lattice(a, b);
    return a.lattice()->pair(a.coords(), b.coords());
}

ClassRegistry::ClassRegistry(LatticePtr lattice) : lattice_(std::move(lattice)) {}

void ClassRegistry::add(const std::string& name, const LatticeVector& v) {
    if (v.lattice() != lattice_)
        throw LatticeMismatch("class " + name + " lives on another lattice");
    if (!classes_.emplace(name, v).second)
        throw std::invalid_argument("class " + name + " registered twice");
    order_.push_back(name);
}

const LatticeVector& ClassRegistry::get(const std::string& name) const {
    auto it = classes_.find(name);
    if (it == classes_.end())
        throw UnknownName("unknown class " + name);
    return it->second;
}

LatticeVector ClassRegistry::combo(const std::vector<std::pair<std::string, long>>& terms) const {
    LatticeVector v = LatticeVector::zero(lattice_);
    for (const auto& [name, k] : terms)
        v = v + Integer(k) * get(name);
    return v;
}

LatticeVector ClassRegistry::eval(const std::string& expr) const {
    LatticeVector v = LatticeVector::zero(lattice_);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i])))
            ++i;
    };
    skip();
    while (i < expr.size()) {
        long sign = 1;
        if (expr[i] == '+' || expr[i] == '-') {
            sign = expr[i] == '-' ? -1 : 1;
            ++i;
            skip();
        }
        long k = 0;
        bool digits = false;
        while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) {
            k = 10 * k + (expr[i] - '0');
            ++i;
            digits = true;
        }
        if (!digits)
            k = 1;
        std::string best;
        for (const auto& name : order_)
            if (expr.compare(i, name.size(), name) == 0 && name.size() > best.size())
                best = name;
        if (best.empty())
            throw UnknownName("cannot parse class expression at: " + expr.substr(i));
        v = v + Integer(sign * k) * get(best);
        i += best.size();
        skip();
    }
    return v;
}

LatticePtr make_m_lattice() {
    IntMatrix g{
        {-2, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0},
        {0, -2, 0, 0, 0, 0, 1, 0, 1, 0, 0},
        {0, 0, -2, 0, 0, 0, 1, 0, 0, 1, 0},
        {0, 0, 0, -2, 0, 0, 0, 1, 1, 0, 1},
        {0, 0, 0, 0, -2, 0, 0, 1, 0, 1, 1},
        {0, 0, 0, 0, 0, -2, 0, 0, 1, 1, 1},
        {1, 1, 1, 0, 0, 0, -2, 0, 0, 0, 0},
        {1, 0, 0, 1, 1, 0, 0, -2, 0, 0, 0},
        {0, 1, 0, 1, 0, 1, 0, 0, -2, 0, 0},
        {0, 0, 1, 0, 1, 1, 0, 0, 0, -2, 0},
        {0, 0, 0, 1, 1, 1, 0, 0, 0, 0, -2},
    };
    return std::make_shared<const GramLattice>(
        "M", g, std::vector<std::string>{"l12", "l13", "l14", "l23", "l24", "l34", "e1", "e2", "e3", "e4", "r1"});
}

ClassRegistry make_m_registry() {
    ClassRegistry reg(make_m_lattice());
    const char* basis[] = {"L12", "L13", "L14", "L23", "L24", "L34", "E1", "E2", "E3", "E4", "R1"};
    for (std::size_t i = 0; i < 11; ++i)
        reg.add(basis[i], LatticeVector::unit(reg.lattice(), i));
    reg.add("R2", reg.eval("R1+E2-E1+L23+L24-L13-L14"));
    reg.add("R3", reg.eval("R1+E3-E1+L23+L34-L14-L12"));
    reg.add("R4", reg.eval("R1+E4-E1+L24+L34-L12-L13"));
    reg.add("H", reg.eval("L23+L24+L34+E2+E3+E4+R1"));
    reg.add("A", reg.eval("L12+L13+L14+L23+L24+L34+E1+E2+E3+E4+R1+R2+R3+R4"));
    reg.add("A0", reg.eval("3H-E1-E2-E3-E4"));
    reg.add("H'", reg.eval("A-L14-L23"));
    reg.add("C", reg.eval("A+L12"));
    reg.add("Hv", reg.eval("3H-2E1-2E2-2E3-2E4-L12-L13-L14-L23-L24-L34"));
    return reg;
}

LatticePtr make_del_pezzo_lattice() {
    IntMatrix g{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
    return std::make_shared<const GramLattice>("dP6", g, std::vector<std::string>{"h", "e1", "e2", "e3"},
                                               IntVector{-3, 1, 1, 1});
}

ClassRegistry make_del_pezzo_registry() {
    ClassRegistry reg(make_del_pezzo_lattice());
    const char* basis[] = {"h", "e1", "e2", "e3"};
    for (std::size_t i = 0; i < 4; ++i)
        reg.add(basis[i], LatticeVector::unit(reg.lattice(), i));
    reg.add("K", LatticeVector(reg.lattice(), *reg.lattice()->canonical_class()));
    reg.add("B", reg.eval("6h-2e1-2e2-2e3"));
    return reg;
}

std::vector<IdentityCheck> verify_class_identities(const ClassRegistry& reg) {
    static const std::pair<const char*, const char*> identities[] = {
        {"H", "L12+L24+L14+E1+E2+E4+R3"},
        {"H", "L24+L23+L34+E2+E3+E4+R1"},
        {"H", "L13+L14+L34+E1+E3+E4+R2"},
        {"H", "L12+L13+L23+E1+E2+E3+R4"},
        {"R2", "H-E1-E3-E4-L13-L14-L34"},
        {"R3", "H-E1-E2-E4-L12-L14-L24"},
        {"R4", "H-E1-E2-E3-L12-L13-L23"},
        {"E4", "H-E1-E2-R3-L14-L24-L12"},
        {"E4", "E3+R4-R3+L13+L23-L14-L24"},
        {"A0", "2E4+E1+E2+E3+R1+R2+R3+2L14+2L24+2L34+L12+L23+L13"},
        {"E1+E2+E3+E4+R1+R2+R3+R4", "2L23+2L24+2L34-2L12-2L13-2L14-2E1+2E2+2E3+2E4+4R1"},
        {"A", "H+A-H"},
    };
    std::vector<IdentityCheck> out;
    for (const auto& [lhs, rhs] : identities)
        out.push_back({std::string(lhs) + " = " + rhs, reg.eval(lhs) - reg.eval(rhs)});
    return out;
}

void require_identities(const std::vector<IdentityCheck>& checks) {
    for (const auto& c : checks)
        if (!c.holds())
            throw IdentityFailed(c.name, c.residual.to_string());
}

std::vector<std::vector<Integer>> intersection_table(const ClassRegistry& reg, const std::vector<std::string>& names) {
    std::vector<LatticeVector> v;
    for (const auto& n : names)
        v.push_back(reg.get(n));
    std::vector<std::vector<Integer>> t(v.size(), std::vector<Integer>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            t[i][j] = intersect(v[i], v[j]);
    return t;
}

RiemannRoch rr_genus(const LatticeVector& d) {
    Integer sq = intersect(d, d);
    if (sq % 2 != 0)
        throw OddSquare("class has odd square " + sq.get_str());
    if (sq < -2)
        throw std::domain_error("Riemann-Roch arithmetic needs d^2 >= -2");
    Integer half = sq / 2;
    return {1 + half, 2 + half, 1 + half};
}

Integer adjunction_genus(const LatticeVector& d) {
    const auto& k = d.lattice()->canonical_class();
    if (!k)
        throw NoCanonicalClass("lattice " + d.lattice()->name() + " has no canonical class");
    LatticeVector kv(d.lattice(), *k);
    Integer num = intersect(d, d) + intersect(d, kv);
    if (num % 2 != 0)
        throw std::logic_error("adjunction numerator is odd");
    return 1 + num / 2;
}

std::optional<LatticeVector> even_set_test(const std::vector<LatticeVector>& classes) {
    if (classes.empty())
        return std::nullopt;
    LatticeVector sum = LatticeVector::zero(classes[0].lattice());
    for (const auto& c : classes)
        sum = sum + c;
    IntVector half(sum.coords().size());
    for (std::size_t i = 0; i < half.size(); ++i) {
        if (sum.coords()[i] % 2 != 0)
            return std::nullopt;
        half[i] = sum.coords()[i] / 2;
    }
    return LatticeVector(sum.lattice(), std::move(half));
}

namespace {

nlohmann::json int_json(const Integer& z) { return z.get_str(); }

}  // namespace

nlohmann::json to_json(const GramLattice& lat) {
    nlohmann::json g = nlohmann::json::array();
    for (std::size_t i = 0; i < lat.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < lat.rank(); ++j)
            row.push_back(int_json(lat.gram()(i, j)));
        g.push_back(row);
    }
    nlohmann::json j{{"name", lat.name()}, {"rank", std::to_string(lat.rank())}, {"basis", lat.basis_names()},
                     {"gram", g}};
    if (lat.canonical_class()) {
        nlohmann::json k = nlohmann::json::array();
        for (const auto& c : *lat.canonical_class())
            k.push_back(int_json(c));
        j["canonical_class"] = k;
    }
    return j;
}

nlohmann::json to_json(const ClassRegistry& reg) {
    nlohmann::json classes = nlohmann::json::object();
    for (const auto& name : reg.names()) {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& x : reg.get(name).coords())
            c.push_back(int_json(x));
        classes[name] = c;
    }
    return {{"lattice", to_json(*reg.lattice())}, {"classes", classes}};
}

}  // namespace tq
