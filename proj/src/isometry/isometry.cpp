#include "tq/isometry/isometry.hpp"

#include "tq/discform/discform.hpp"

#include <cctype>
#include <map>
#include <numeric>

namespace tq {

IsometryCheckFailed::IsometryCheckFailed(std::size_t r, std::size_t c, Integer d)
    : std::runtime_error("isometry check fails at (" + std::to_string(r) + "," + std::to_string(c) +
                         "), defect " + tq::to_string(d)),
      row(r), col(c), defect(std::move(d)) {}

IntegerIsometry::IntegerIsometry(LatticePtr lattice, IntMatrix matrix) : lattice_(std::move(lattice)), m_(std::move(matrix)) {
    const auto& g = lattice_->gram();
    if (m_.rows() != g.rows() || m_.cols() != g.cols())
        throw LatticeMismatch("isometry matrix size differs from the lattice rank");
    IntMatrix defect = m_.transpose() * g * m_ - g;
    for (std::size_t i = 0; i < defect.rows(); ++i)
        for (std::size_t j = 0; j < defect.cols(); ++j)
            if (defect(i, j) != 0)
                throw IsometryCheckFailed(i, j, defect(i, j));
}

LatticeVector IntegerIsometry::apply(const LatticeVector& v) const {
    if (v.lattice() != lattice_)
        throw LatticeMismatch("vector lives on another lattice");
    return LatticeVector(lattice_, m_ * v.coords());
}

IntegerIsometry IntegerIsometry::compose(const IntegerIsometry& other) const {
    if (other.lattice_ != lattice_)
        throw LatticeMismatch("composing isometries of different lattices");
    return IntegerIsometry(lattice_, m_ * other.m_);
}

IntegerIsometry IntegerIsometry::inverse() const {
    // T^-1 = G^-1 T^T G, integral because T is an isometry
    RatMatrix gi = rational_inverse(lattice_->gram());
    IntMatrix tg = m_.transpose() * lattice_->gram();
    const std::size_t n = m_.rows();
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < n; ++k)
                s += gi[i][k] * Rational(tg(k, j));
            if (!is_integer(s))
                throw std::logic_error("inverse of an isometry is not integral");
            inv(i, j) = s.get_num();
        }
    return IntegerIsometry(lattice_, inv);
}

IntMatrix printed_alpha() {
    return {
        {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {-1, -1, 0, 0, 0, 0, 1, 0, 0, -1, 0},
        {1, 1, 0, 0, 0, 0, 0, 0, 0, 2, 1},
        {0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0},
        {1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0},
        {-1, -1, 1, 0, 0, 0, 0, 0, 0, -1, 0},
        {0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0},
        {1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0},
        {1, 1, 0, 1, 0, 0, 0, 0, 0, 2, 0},
    };
}

IntMatrix printed_beta() {
    return {
        {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {-1, 0, -1, 0, 0, 0, 1, 0, -1, 0, 0},
        {0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0},
        {1, 0, 1, 0, 0, 0, 0, 0, 2, 0, 1},
        {1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0},
        {-1, 1, -1, 0, 0, 0, 0, 0, -1, 0, 0},
        {0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0},
        {1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0},
        {1, 0, 1, 0, 1, 0, 0, 0, 2, 0, 0},
    };
}

IntMatrix printed_alpha_beta() {
    return {
        {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 1, 0, 0, 0, -1, 0, 1, 0, 0},
        {0, 1, 0, 0, 0, -1, -1, 0, -1, 0, 0},
        {1, 0, 0, 0, 1, 2, 1, 0, 3, 0, 0},
        {0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 1, 1, 0, 2, 0, 1},
        {1, 0, 0, 0, 0, 1, 0, 0, 2, 1, 0},
        {-1, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0},
        {0, 0, 0, 0, 0, 2, 1, 1, 2, 0, 0},
    };
}

namespace {

// (source, image) pairs for the involution from the node E4
const std::vector<std::pair<std::string, std::string>>& projection_images() {
    static const std::vector<std::pair<std::string, std::string>> images = {
        {"L12", "R3"},
        {"L23", "R1"},
        {"L13", "R2"},
        {"L14", "E1"},
        {"L24", "E2"},
        {"L34", "E3"},
        {"R3", "L12"},
        {"R1", "L23"},
        {"R2", "L13"},
        {"E2", "L24"},
        {"E3", "L34"},
        {"E1", "L14"},
        {"R4", "H-E4-R4"},
        {"H", "R1+R2+2R3-R4+E1+E2+L12+L34+2L14+2L24"},
        {"E4", "2R1-E1+E2+E3-E4+2L23+L24+L34-L14"},
    };
    return images;
}

}  // namespace

std::vector<ImageCheck> verify_projection_images(const IntMatrix& alpha, const ClassRegistry& reg,
                                                 MatrixConvention conv) {
    const IntMatrix act = conv == MatrixConvention::Column ? alpha : alpha.transpose();
    std::vector<ImageCheck> out;
    for (const auto& [src, dst] : projection_images()) {
        IntVector img = act * reg.get(src).coords();
        out.push_back({src + " -> " + dst, img == reg.eval(dst).coords()});
    }
    return out;
}

void require_projection_images(const std::vector<ImageCheck>& checks) {
    for (const auto& c : checks)
        if (!c.holds)
            throw ImageMismatch(c.name);
}

namespace {
bool all_hold(const std::vector<ImageCheck>& checks) {
    for (const auto& c : checks)
        if (!c.holds)
            return false;
    return true;
}
}  // namespace

std::optional<MatrixConvention> detect_convention(const IntMatrix& alpha, const ClassRegistry& reg) {
    if (all_hold(verify_projection_images(alpha, reg, MatrixConvention::Column)))
        return MatrixConvention::Column;
    if (all_hold(verify_projection_images(alpha, reg, MatrixConvention::Row)))
        return MatrixConvention::Row;
    return std::nullopt;
}

IntMatrix alpha_from_images(const ClassRegistry& reg) {
    const auto& names = reg.lattice()->basis_names();
    std::map<std::string, std::string> image;
    for (const auto& [src, dst] : projection_images())
        image[src] = dst;
    std::vector<IntVector> cols;
    for (const auto& n : names) {
        // basis names are lower case (l12, e1, r1); images are keyed by class name
        std::string key = n;
        key[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(key[0])));
        cols.push_back(reg.eval(image.at(key)).coords());
    }
    return IntMatrix::from_columns(cols);
}

PrintedIsometries load_printed_matrices(const ClassRegistry& reg) {
    const LatticePtr& lat = reg.lattice();
    auto conv = detect_convention(printed_alpha(), reg);
    if (conv) {
        auto orient = [&](const IntMatrix& m) { return *conv == MatrixConvention::Column ? m : m.transpose(); };
        try {
            IntegerIsometry a(lat, orient(printed_alpha()));
            IntegerIsometry b(lat, orient(printed_beta()));
            return {a, b, *conv, false};
        } catch (const IsometryCheckFailed&) {
        }
    }
    // fallback: rebuild alpha from the image list, beta by conjugating with (34)
    IntegerIsometry a(lat, alpha_from_images(reg));
    IntegerIsometry t = build_s4_action(transposition(3, 4), reg);
    IntegerIsometry b = t.compose(a).compose(t.inverse());
    return {a, b, MatrixConvention::Column, true};
}

Perm4 transposition(int i, int j) {
    Perm4 p{1, 2, 3, 4};
    std::swap(p[i - 1], p[j - 1]);
    return p;
}

namespace {

std::string edge_name(int i, int j) {
    if (i > j)
        std::swap(i, j);
    return "L" + std::to_string(i) + std::to_string(j);
}

IntegerIsometry from_basis_images(const ClassRegistry& reg, const std::vector<std::string>& images) {
    std::vector<IntVector> cols;
    for (const auto& name : images)
        cols.push_back(reg.get(name).coords());
    IntMatrix m = IntMatrix::from_columns(cols);
    try {
        return IntegerIsometry(reg.lattice(), m);
    } catch (const IsometryCheckFailed& e) {
        throw NotIsometry(e.what());
    }
}

const std::array<std::pair<int, int>, 6> kEdges = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

}  // namespace

IntegerIsometry build_s4_action(const Perm4& s, const ClassRegistry& reg) {
    std::vector<std::string> images;
    for (auto [i, j] : kEdges)
        images.push_back(edge_name(s[i - 1], s[j - 1]));
    for (int i = 1; i <= 4; ++i)
        images.push_back("E" + std::to_string(s[i - 1]));
    images.push_back("R" + std::to_string(s[0]));
    return from_basis_images(reg, images);
}

IntegerIsometry build_mirror(const ClassRegistry& reg) {
    std::vector<std::string> images;
    for (auto [i, j] : kEdges) {
        std::vector<int> rest;
        for (int k = 1; k <= 4; ++k)
            if (k != i && k != j)
                rest.push_back(k);
        images.push_back(edge_name(rest[0], rest[1]));
    }
    for (int i = 1; i <= 4; ++i)
        images.push_back("R" + std::to_string(i));
    images.push_back("E1");
    IntegerIsometry m = from_basis_images(reg, images);
    if (!(m.apply(reg.get("H")) == reg.get("Hv")))
        throw NotIsometry("mirror does not send H to Hv");
    return m;
}

UniPoly characteristic_polynomial(const IntMatrix& t) {
    const std::size_t n = t.rows();
    Matrix<UniPoly> m(n, std::vector<UniPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = UniPoly::constant(-Rational(t(i, j)));
            if (i == j)
                m[i][j] += UniPoly::x();
        }
    return bareiss_determinant(std::move(m));
}

UniPoly cyclotomic(unsigned n) {
    UniPoly p = UniPoly::monomial(1, n) - UniPoly::constant(1);
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            p = exact_div(p, cyclotomic(d));
    return p;
}

namespace {
unsigned euler_phi(unsigned n) {
    unsigned r = 0;
    for (unsigned k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1)
            ++r;
    return r;
}
}  // namespace

std::vector<unsigned> cyclotomic_indices(unsigned phi_bound) {
    // phi(n) >= sqrt(n/2), so n <= 2 * bound^2 covers every candidate
    std::vector<unsigned> out;
    for (unsigned n = 1; n <= 2 * phi_bound * phi_bound + 2; ++n)
        if (euler_phi(n) <= phi_bound)
            out.push_back(n);
    return out;
}

bool is_reciprocal(const UniPoly& p) {
    if (p.is_zero())
        return true;
    const auto& c = p.coeffs();
    const std::size_t d = c.size() - 1;
    bool plus = true, minus = true;
    for (std::size_t k = 0; k <= d; ++k) {
        plus = plus && c[k] == c[d - k];
        minus = minus && c[k] == -c[d - k];
    }
    return plus || minus;
}

OrderCertificate decide_order(const IntegerIsometry& iso) {
    OrderCertificate cert;
    const IntMatrix& a = iso.matrix();
    const std::size_t n = a.rows();
    cert.charpoly = characteristic_polynomial(a);

    UniPoly rest = cert.charpoly;
    for (unsigned k : cyclotomic_indices(static_cast<unsigned>(n))) {
        UniPoly phi = cyclotomic(k);
        unsigned mult = 0;
        while (rest.degree_or_zero() >= phi.degree_or_zero() && divides(phi, rest)) {
            rest = exact_div(rest, phi);
            ++mult;
        }
        if (mult > 0)
            cert.cyclotomic.emplace_back(k, mult);
    }
    cert.residual = rest;

    IntMatrix p = IntMatrix::identity(n);
    for (unsigned k = 1; k <= 20; ++k) {
        p = p * a;
        cert.traces.push_back(p.trace());
    }

    if (rest.degree_or_zero() > 0) {
        cert.finite = false;
        return cert;
    }
    unsigned l = 1;
    for (auto [k, m] : cert.cyclotomic)
        l = std::lcm(l, k);
    const IntMatrix id = IntMatrix::identity(n);
    if (!(pow(a, l) == id)) {
        // unipotent part survives: A^l = I + N with N nilpotent and nonzero
        cert.finite = false;
        cert.unipotent_power = l;
        const IntMatrix nil = pow(a, l) - id;
        IntMatrix q = nil;
        unsigned k = 1;
        while (!(q == IntMatrix(n, n)) && k <= n) {
            q = q * nil;
            ++k;
        }
        cert.nilpotency_index = k;
        return cert;
    }
    for (unsigned d = 1; d <= l; ++d)
        if (l % d == 0 && pow(a, d) == id) {
            cert.finite = true;
            cert.order = d;
            break;
        }
    return cert;
}

}  // namespace tq
