#include "weiljets/polynomial.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

#include "weiljets/error.hpp"

namespace weiljets {

MultiIndex::MultiIndex(std::vector<unsigned> exponents)
    : exps_(std::move(exponents)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

MultiIndex MultiIndex::zero(std::size_t variables) { return MultiIndex(std::vector<unsigned>(variables, 0)); }

MultiIndex MultiIndex::unit(std::size_t variables, std::size_t which) {
    std::vector<unsigned> e(variables, 0);
    e.at(which) = 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    ensure(size() == other.size(), "multi-index sizes agree");
    std::vector<unsigned> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return MultiIndex(std::move(e));
}

bool MultiIndex::divisible_by(const MultiIndex& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] < other.exps_[i]) return false;
    return true;
}

MultiIndex MultiIndex::lowered(std::size_t which) const {
    ensure(exps_.at(which) > 0, "lowered exponent is positive");
    std::vector<unsigned> e(exps_);
    --e[which];
    return MultiIndex(std::move(e));
}

bool GradedOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() > b.exponents();
}

namespace {

void enumerate_degree(std::size_t variables, unsigned degree, std::vector<unsigned>& prefix,
                      std::vector<MultiIndex>& out) {
    if (prefix.size() + 1 == variables) {
        prefix.push_back(degree);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned first = degree + 1; first-- > 0;) {
        prefix.push_back(first);
        enumerate_degree(variables, degree - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t variables, unsigned window) : variables_(variables), window_(window) {
    ensure(variables > 0, "monomial basis has at least one variable");
    for (unsigned d = 0; d <= window; ++d) {
        offsets_.push_back(monomials_.size());
        std::vector<unsigned> prefix;
        enumerate_degree(variables, d, prefix, monomials_);
    }
    offsets_.push_back(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i].exponents(), i);
}

std::size_t MonomialBasis::index_of(const MultiIndex& m) const {
    auto it = index_.find(m.exponents());
    ensure(it != index_.end(), "monomial lies in the basis window");
    return it->second;
}

std::size_t MonomialBasis::degree_offset(unsigned d) const {
    return d > window_ ? monomials_.size() : offsets_[d];
}

const MonomialBasis& monomial_basis(std::size_t variables, unsigned window) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, unsigned>, std::unique_ptr<MonomialBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{variables, window}];
    if (!slot) slot = std::make_unique<MonomialBasis>(variables, window);
    return *slot;
}

// ---------------------------------------------------------------------------

TruncatedPolynomial::TruncatedPolynomial(std::size_t variables, unsigned degree_bound)
    : variables_(variables), bound_(degree_bound) {
    if (variables == 0) fail(ErrorKind::VariableCountMismatch, "polynomials need at least one variable");
}

TruncatedPolynomial TruncatedPolynomial::constant(std::size_t variables, unsigned degree_bound, const Rational& c) {
    TruncatedPolynomial p(variables, degree_bound);
    p.add_term(MultiIndex::zero(variables), c);
    return p;
}

TruncatedPolynomial TruncatedPolynomial::variable(std::size_t variables, unsigned degree_bound, std::size_t which) {
    TruncatedPolynomial p(variables, degree_bound);
    p.add_term(MultiIndex::unit(variables, which), 1);
    return p;
}

TruncatedPolynomial TruncatedPolynomial::monomial(unsigned degree_bound, const MultiIndex& m, const Rational& c) {
    TruncatedPolynomial p(m.size(), degree_bound);
    p.add_term(m, c);
    return p;
}

Rational TruncatedPolynomial::coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedPolynomial::constant_term() const { return coefficient(MultiIndex::zero(variables_)); }

unsigned TruncatedPolynomial::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

unsigned TruncatedPolynomial::low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

void TruncatedPolynomial::add_term(const MultiIndex& m, const Rational& c) {
    if (m.size() != variables_) fail(ErrorKind::VariableCountMismatch, "monomial has the wrong number of variables");
    if (m.degree() > bound_ || weiljets::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (weiljets::is_zero(it->second)) terms_.erase(it);
    }
}

TruncatedPolynomial TruncatedPolynomial::truncated(unsigned bound) const { return with_bound(std::min(bound, bound_)); }

TruncatedPolynomial TruncatedPolynomial::with_bound(unsigned bound) const {
    TruncatedPolynomial p(variables_, bound);
    for (const auto& [m, c] : terms_) {
        if (m.degree() > bound) break;
        p.terms_.emplace_hint(p.terms_.end(), m, c);
    }
    return p;
}

TruncatedPolynomial TruncatedPolynomial::homogeneous_part(unsigned d) const {
    TruncatedPolynomial p(variables_, bound_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) p.terms_.emplace_hint(p.terms_.end(), m, c);
    return p;
}

TruncatedPolynomial TruncatedPolynomial::derivative(std::size_t which) const {
    if (which >= variables_) fail(ErrorKind::VariableCountMismatch, "derivative variable out of range");
    TruncatedPolynomial p(variables_, bound_ == 0 ? 0 : bound_ - 1);
    for (const auto& [m, c] : terms_)
        if (m[which] > 0) p.add_term(m.lowered(which), c * m[which]);
    return p;
}

TruncatedPolynomial TruncatedPolynomial::embedded(std::size_t total_variables, std::size_t offset) const {
    ensure(offset + variables_ <= total_variables, "embedding fits");
    TruncatedPolynomial p(total_variables, bound_);
    for (const auto& [m, c] : terms_) {
        std::vector<unsigned> e(total_variables, 0);
        for (std::size_t i = 0; i < variables_; ++i) e[offset + i] = m[i];
        p.terms_.emplace(MultiIndex(std::move(e)), c);
    }
    return p;
}

TruncatedPolynomial TruncatedPolynomial::operator-() const {
    TruncatedPolynomial p(*this);
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& other) {
    if (other.variables_ != variables_) fail(ErrorKind::VariableCountMismatch, "adding polynomials in different rings");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& other) {
    if (other.variables_ != variables_) fail(ErrorKind::VariableCountMismatch, "subtracting polynomials in different rings");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator*=(const Rational& c) {
    if (weiljets::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
}

Vector TruncatedPolynomial::to_dense(const MonomialBasis& basis) const {
    if (basis.variables() != variables_) fail(ErrorKind::VariableCountMismatch, "dense layout has a different variable count");
    Vector v(basis.size());
    for (const auto& [m, c] : terms_) {
        if (m.degree() > basis.window()) break;
        v[basis.index_of(m)] = c;
    }
    return v;
}

TruncatedPolynomial TruncatedPolynomial::from_dense(const Vector& coords, const MonomialBasis& basis) {
    if (coords.size() != basis.size()) fail(ErrorKind::DimensionMismatch, "dense vector does not match the monomial layout");
    TruncatedPolynomial p(basis.variables(), basis.window());
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!weiljets::is_zero(coords[i])) p.terms_.emplace_hint(p.terms_.end(), basis[i], coords[i]);
    return p;
}

// ---------------------------------------------------------------------------

TruncatedPolynomial truncated_product(const TruncatedPolynomial& f, const TruncatedPolynomial& g, unsigned L) {
    if (f.variables() != g.variables()) fail(ErrorKind::VariableCountMismatch, "product of polynomials in different rings");
    TruncatedPolynomial out(f.variables(), L);
    for (const auto& [mf, cf] : f.terms()) {
        if (mf.degree() > L) break;
        for (const auto& [mg, cg] : g.terms()) {
            if (mf.degree() + mg.degree() > L) break;
            out.add_term(mf + mg, cf * cg);
        }
    }
    return out;
}

TruncatedPolynomial exact_product(const TruncatedPolynomial& f, const TruncatedPolynomial& g) {
    return truncated_product(f, g, f.degree_bound() + g.degree_bound());
}

TruncatedPolynomial truncated_substitute(const TruncatedPolynomial& f, const std::vector<TruncatedPolynomial>& images,
                                         unsigned L, bool coordinate_change) {
    if (images.size() != f.variables())
        fail(ErrorKind::VariableCountMismatch, "substitution needs one image per variable");
    if (images.empty()) fail(ErrorKind::VariableCountMismatch, "empty substitution");
    const std::size_t target_vars = images.front().variables();
    for (const auto& img : images) {
        if (img.variables() != target_vars) fail(ErrorKind::VariableCountMismatch, "substitution images live in different rings");
        if (coordinate_change && !weiljets::is_zero(img.constant_term()))
            fail(ErrorKind::NotCoordinateChange, "coordinate change image has a nonzero constant term");
    }
    // powers[i][k] = images[i]^k truncated at L
    std::vector<std::vector<TruncatedPolynomial>> powers(images.size());
    unsigned max_exp = 0;
    for (const auto& [m, c] : f.terms())
        for (std::size_t i = 0; i < m.size(); ++i) max_exp = std::max(max_exp, m[i]);
    for (std::size_t i = 0; i < images.size(); ++i) {
        powers[i].push_back(TruncatedPolynomial::constant(target_vars, L, 1));
        for (unsigned k = 1; k <= max_exp; ++k) powers[i].push_back(truncated_product(powers[i].back(), images[i], L));
    }
    TruncatedPolynomial out(target_vars, L);
    for (const auto& [m, c] : f.terms()) {
        TruncatedPolynomial term = TruncatedPolynomial::constant(target_vars, L, c);
        for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i)
            if (m[i] > 0) term = truncated_product(term, powers[i][m[i]], L);
        out += term;
    }
    return out;
}

Substitution identity_substitution(std::size_t variables, unsigned degree_bound) {
    Substitution s;
    for (std::size_t i = 0; i < variables; ++i) s.push_back(TruncatedPolynomial::variable(variables, degree_bound, i));
    return s;
}

Substitution compose(const Substitution& outer, const Substitution& inner, unsigned L) {
    Substitution out;
    out.reserve(outer.size());
    for (const auto& f : outer) out.push_back(truncated_substitute(f, inner, L));
    return out;
}

std::vector<Vector> linear_part(const Substitution& sigma) {
    std::vector<Vector> m;
    for (const auto& s : sigma) {
        Vector row(s.variables());
        for (std::size_t j = 0; j < s.variables(); ++j) row[j] = s.coefficient(MultiIndex::unit(s.variables(), j));
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<Vector> invert_matrix(std::vector<Vector> m) {
    const std::size_t n = m.size();
    std::vector<Vector> inv(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) fail(ErrorKind::DimensionMismatch, "matrix is not square");
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && weiljets::is_zero(m[pivot][col])) ++pivot;
        if (pivot == n) fail(ErrorKind::NotCoordinateChange, "linear part is singular");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = 1 / m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || weiljets::is_zero(m[r][col])) continue;
            const Rational factor = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= factor * m[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

Substitution inverse_substitution(const Substitution& sigma, unsigned L) {
    const std::size_t n = sigma.size();
    if (n == 0) fail(ErrorKind::VariableCountMismatch, "empty substitution");
    for (const auto& s : sigma) {
        if (s.variables() != n) fail(ErrorKind::VariableCountMismatch, "coordinate change must be square");
        if (!weiljets::is_zero(s.constant_term())) fail(ErrorKind::NotCoordinateChange, "coordinate change image has a nonzero constant term");
    }
    const auto inv_lin = invert_matrix(linear_part(sigma));
    // sigma = T x + N(x); solve sigma(rho(z)) = z via rho = T^-1 (z - N(rho)).
    Substitution nonlinear;
    for (const auto& s : sigma) {
        TruncatedPolynomial tail = s.truncated(L);
        tail -= s.homogeneous_part(1);
        nonlinear.push_back(std::move(tail));
    }
    auto apply_inverse_linear = [&](const Substitution& v) {
        Substitution out;
        for (std::size_t i = 0; i < n; ++i) {
            TruncatedPolynomial acc(n, L);
            for (std::size_t j = 0; j < n; ++j)
                if (!weiljets::is_zero(inv_lin[i][j])) acc += v[j] * inv_lin[i][j];
            out.push_back(std::move(acc));
        }
        return out;
    };
    const Substitution z = identity_substitution(n, L);
    Substitution rho = apply_inverse_linear(z);
    for (unsigned iter = 1; iter < L; ++iter) {
        Substitution rhs;
        for (std::size_t i = 0; i < n; ++i) rhs.push_back(z[i] - truncated_substitute(nonlinear[i], rho, L));
        rho = apply_inverse_linear(rhs);
    }
    return rho;
}

}  // namespace weiljets
