#pragma once

#include "twistor/integer.hpp"
#include "twistor/lattice.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twistor {

/// One entry of a multiplication table: basis(d1,i1) * basis(d2,i2) = sum out[k] basis(d1+d2,k).
struct ProductEntry {
    int d1 = 0;
    std::size_t i1 = 0;
    int d2 = 0;
    std::size_t i2 = 0;
    IntVector out;
};

/**
 * A graded commutative ring over the integers, given by per-degree bases and
 * an explicit multiplication table on basis elements.
 *
 * Construction validates every invariant: degree 0 has rank 1 and its basis
 * element is a two-sided unit, the table is commutative, and the product is
 * associative on all basis triples. Missing in-range products are zero;
 * missing unit products are filled in.
 */
class GradedRing {
public:
    GradedRing(int top_degree, std::vector<std::vector<std::string>> labels,
               const std::vector<ProductEntry>& products,
               std::optional<IntVector> degree_functional = std::nullopt)
        : top_(top_degree), labels_(std::move(labels)), degree_functional_(std::move(degree_functional)) {
        if (top_ < 0)
            throw Error("GradedRing: negative top degree");
        if (labels_.size() != static_cast<std::size_t>(top_ + 1))
            throw Error("GradedRing: expected " + std::to_string(top_ + 1) + " degree blocks, got " +
                        std::to_string(labels_.size()));
        if (labels_[0].size() != 1)
            throw Error("GradedRing: degree 0 must have rank 1");
        offsets_.resize(labels_.size() + 1, 0);
        for (std::size_t d = 0; d < labels_.size(); ++d)
            offsets_[d + 1] = offsets_[d] + labels_[d].size();
        for (int d = 0; d <= top_; ++d)
            for (std::size_t i = 0; i < rank(d); ++i)
                for (int e = d; e <= top_; ++e)
                    for (std::size_t k = (e == d ? i + 1 : 0); k < rank(e); ++k)
                        if (labels_[d][i] == labels_[e][k])
                            throw Error("GradedRing: duplicate basis label '" + labels_[d][i] + "'");

        const std::size_t n = total_rank();
        table_.assign(n * n, IntVector{});
        std::vector<bool> given(n * n, false);
        for (int d1 = 0; d1 <= top_; ++d1)
            for (int d2 = 0; d1 + d2 <= top_; ++d2)
                for (std::size_t i1 = 0; i1 < rank(d1); ++i1)
                    for (std::size_t i2 = 0; i2 < rank(d2); ++i2)
                        table_[flat(d1, i1) * n + flat(d2, i2)] = IntVector(rank(d1 + d2));

        for (const auto& p : products) {
            check_index(p.d1, p.i1);
            check_index(p.d2, p.i2);
            const std::string where = "product " + labels_[p.d1][p.i1] + "*" + labels_[p.d2][p.i2];
            if (p.d1 + p.d2 > top_) {
                if (!is_zero(p.out))
                    throw Error("GradedRing: " + where + " lands above the top degree but is nonzero");
                continue;
            }
            if (p.out.size() != rank(p.d1 + p.d2))
                throw Error("GradedRing: " + where + " has " + std::to_string(p.out.size()) +
                            " coefficients, expected " + std::to_string(rank(p.d1 + p.d2)));
            const std::size_t a = flat(p.d1, p.i1), b = flat(p.d2, p.i2);
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                if (given[x * n + y] && table_[x * n + y] != p.out)
                    throw Error("GradedRing: " + where + " is not commutative or given twice inconsistently");
                table_[x * n + y] = p.out;
                given[x * n + y] = true;
            }
        }

        // Unit products.
        for (int d = 0; d <= top_; ++d)
            for (std::size_t i = 0; i < rank(d); ++i) {
                IntVector e(rank(d));
                e[i] = 1;
                const std::size_t x = flat(d, i);
                for (auto idx : {x, x * n}) {
                    if (given[idx] && table_[idx] != e)
                        throw Error("GradedRing: " + labels_[0][0] + " does not act as the unit on " +
                                    labels_[d][i]);
                    table_[idx] = e;
                }
            }

        if (degree_functional_ && degree_functional_->size() != rank(top_))
            throw Error("GradedRing: degree functional has length " +
                        std::to_string(degree_functional_->size()) + ", expected " + std::to_string(rank(top_)));

        if (auto defects = associativity_defects(); !defects.empty())
            throw Error("GradedRing: not associative: " + defects.front());
    }

    int top_degree() const { return top_; }
    std::size_t rank(int d) const {
        return (d < 0 || d > top_) ? 0 : labels_[static_cast<std::size_t>(d)].size();
    }
    std::size_t total_rank() const { return offsets_.back(); }
    const std::vector<std::string>& labels(int d) const { return labels_.at(static_cast<std::size_t>(d)); }
    const std::string& label(int d, std::size_t i) const { return labels(d).at(i); }
    const std::optional<IntVector>& degree_functional() const { return degree_functional_; }

    std::optional<std::pair<int, std::size_t>> find_label(std::string_view name) const {
        for (int d = 0; d <= top_; ++d)
            for (std::size_t i = 0; i < rank(d); ++i)
                if (labels_[d][i] == name)
                    return std::pair{d, i};
        return std::nullopt;
    }

    /// Coefficients of basis(d1,i1)*basis(d2,i2) in degree d1+d2; empty above the top degree.
    const IntVector& product(int d1, std::size_t i1, int d2, std::size_t i2) const {
        check_index(d1, i1);
        check_index(d2, i2);
        return table_[flat(d1, i1) * total_rank() + flat(d2, i2)];
    }

    bool is_commutative() const {
        for (int d1 = 0; d1 <= top_; ++d1)
            for (int d2 = 0; d2 <= top_; ++d2)
                for (std::size_t i1 = 0; i1 < rank(d1); ++i1)
                    for (std::size_t i2 = 0; i2 < rank(d2); ++i2)
                        if (product(d1, i1, d2, i2) != product(d2, i2, d1, i1))
                            return false;
        return true;
    }

    /// One message per basis triple (x,y,z) with (xy)z != x(yz).
    std::vector<std::string> associativity_defects() const {
        std::vector<std::string> defects;
        for (int d1 = 0; d1 <= top_; ++d1)
            for (int d2 = 0; d1 + d2 <= top_; ++d2)
                for (int d3 = 0; d1 + d2 + d3 <= top_; ++d3)
                    for (std::size_t i1 = 0; i1 < rank(d1); ++i1)
                        for (std::size_t i2 = 0; i2 < rank(d2); ++i2)
                            for (std::size_t i3 = 0; i3 < rank(d3); ++i3) {
                                IntVector left(rank(d1 + d2 + d3)), right(rank(d1 + d2 + d3));
                                const IntVector& xy = product(d1, i1, d2, i2);
                                for (std::size_t k = 0; k < xy.size(); ++k)
                                    if (xy[k] != 0)
                                        left = left + xy[k] * product(d1 + d2, k, d3, i3);
                                const IntVector& yz = product(d2, i2, d3, i3);
                                for (std::size_t k = 0; k < yz.size(); ++k)
                                    if (yz[k] != 0)
                                        right = right + yz[k] * product(d1, i1, d2 + d3, k);
                                if (left != right)
                                    defects.push_back("(" + labels_[d1][i1] + "*" + labels_[d2][i2] + ")*" +
                                                      labels_[d3][i3] + " != " + labels_[d1][i1] + "*(" +
                                                      labels_[d2][i2] + "*" + labels_[d3][i3] + ")");
                            }
        return defects;
    }

    friend bool operator==(const GradedRing& a, const GradedRing& b) {
        return a.top_ == b.top_ && a.labels_ == b.labels_ && a.table_ == b.table_ &&
               a.degree_functional_ == b.degree_functional_;
    }

private:
    std::size_t flat(int d, std::size_t i) const { return offsets_[static_cast<std::size_t>(d)] + i; }

    void check_index(int d, std::size_t i) const {
        if (d < 0 || d > top_ || i >= rank(d))
            throw Error("GradedRing: basis index (" + std::to_string(d) + "," + std::to_string(i) +
                        ") out of range");
    }

    int top_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::size_t> offsets_;
    std::vector<IntVector> table_;
    std::optional<IntVector> degree_functional_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

inline RingPtr make_ring(int top_degree, std::vector<std::vector<std::string>> labels,
                         const std::vector<ProductEntry>& products,
                         std::optional<IntVector> degree_functional = std::nullopt) {
    return std::make_shared<const GradedRing>(top_degree, std::move(labels), products,
                                              std::move(degree_functional));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

/// An element of a GradedRing: one coefficient vector per degree.
class RingElement {
public:
    explicit RingElement(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_)
            throw Error("RingElement: null ring");
        for (int d = 0; d <= ring_->top_degree(); ++d)
            coeffs_.emplace_back(ring_->rank(d));
    }

    RingElement(RingPtr ring, std::vector<IntVector> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        if (!ring_)
            throw Error("RingElement: null ring");
        if (coeffs_.size() != static_cast<std::size_t>(ring_->top_degree() + 1))
            throw Error("RingElement: wrong number of degree blocks");
        for (int d = 0; d <= ring_->top_degree(); ++d)
            if (coeffs_[d].size() != ring_->rank(d))
                throw Error("RingElement: degree " + std::to_string(d) + " block has length " +
                            std::to_string(coeffs_[d].size()) + ", expected " + std::to_string(ring_->rank(d)));
    }

    static RingElement homogeneous(RingPtr ring, int d, IntVector v) {
        RingElement x(std::move(ring));
        if (d < 0 || d > x.ring_->top_degree())
            throw Error("RingElement: degree " + std::to_string(d) + " out of range");
        if (v.size() != x.ring_->rank(d))
            throw Error("RingElement: degree " + std::to_string(d) + " vector has wrong length");
        x.coeffs_[d] = std::move(v);
        return x;
    }

    static RingElement basis(RingPtr ring, int d, std::size_t i) {
        IntVector v(ring->rank(d));
        if (i >= v.size())
            throw Error("RingElement: basis index out of range");
        v[i] = 1;
        return homogeneous(std::move(ring), d, std::move(v));
    }

    /// Basis element by label, e.g. "b" or "j_*b".
    static RingElement basis(RingPtr ring, std::string_view name) {
        auto at = ring->find_label(name);
        if (!at)
            throw Error("RingElement: no basis element labelled '" + std::string(name) + "'");
        return basis(std::move(ring), at->first, at->second);
    }

    static RingElement one(RingPtr ring) { return basis(std::move(ring), 0, 0); }

    const RingPtr& ring() const { return ring_; }
    const IntVector& coeffs(int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
    const std::vector<IntVector>& all_coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& v : coeffs_)
            if (!twistor::is_zero(v))
                return false;
        return true;
    }

    /// The single degree carrying nonzero coefficients; nullopt for zero or mixed elements.
    std::optional<int> degree() const {
        std::optional<int> found;
        for (int d = 0; d <= ring_->top_degree(); ++d)
            if (!twistor::is_zero(coeffs_[d])) {
                if (found)
                    return std::nullopt;
                found = d;
            }
        return found;
    }

    RingElement component(int d) const { return homogeneous(ring_, d, coeffs(d)); }

    RingElement& operator+=(const RingElement& o) {
        require_same(o, "addition");
        for (std::size_t d = 0; d < coeffs_.size(); ++d)
            coeffs_[d] = coeffs_[d] + o.coeffs_[d];
        return *this;
    }
    RingElement& operator-=(const RingElement& o) {
        require_same(o, "subtraction");
        for (std::size_t d = 0; d < coeffs_.size(); ++d)
            coeffs_[d] = coeffs_[d] - o.coeffs_[d];
        return *this;
    }
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator-(RingElement a) {
        for (auto& v : a.coeffs_)
            v = Integer(-1) * v;
        return a;
    }
    friend RingElement operator*(const Integer& s, RingElement a) {
        for (auto& v : a.coeffs_)
            v = s * v;
        return a;
    }
    friend RingElement operator*(long s, RingElement a) { return Integer(s) * std::move(a); }

    friend RingElement operator*(const RingElement& x, const RingElement& y) {
        x.require_same(y, "multiplication");
        const GradedRing& r = *x.ring_;
        RingElement out(x.ring_);
        for (int d1 = 0; d1 <= r.top_degree(); ++d1)
            for (int d2 = 0; d1 + d2 <= r.top_degree(); ++d2)
                for (std::size_t i1 = 0; i1 < r.rank(d1); ++i1) {
                    if (x.coeffs_[d1][i1] == 0)
                        continue;
                    for (std::size_t i2 = 0; i2 < r.rank(d2); ++i2) {
                        if (y.coeffs_[d2][i2] == 0)
                            continue;
                        Integer s = x.coeffs_[d1][i1] * y.coeffs_[d2][i2];
                        out.coeffs_[d1 + d2] = out.coeffs_[d1 + d2] + s * r.product(d1, i1, d2, i2);
                    }
                }
        return out;
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return same_ring(a.ring_, b.ring_) && a.coeffs_ == b.coeffs_;
    }

private:
    void require_same(const RingElement& o, const char* what) const {
        if (!same_ring(ring_, o.ring_))
            throw Error(std::string("RingElement: ring mismatch in ") + what);
    }

    RingPtr ring_;
    std::vector<IntVector> coeffs_;
};

inline RingElement pow(const RingElement& x, unsigned n) {
    RingElement out = RingElement::one(x.ring());
    for (unsigned k = 0; k < n; ++k)
        out = out * x;
    return out;
}

/// Degree of the top-degree part under the ring's degree functional.
inline Integer degree_of(const RingElement& x) {
    const auto& f = x.ring()->degree_functional();
    if (!f)
        throw Error("degree_of: ring has no degree functional");
    const IntVector& top = x.coeffs(x.ring()->top_degree());
    Integer s = 0;
    for (std::size_t i = 0; i < top.size(); ++i)
        s += (*f)[i] * top[i];
    return s;
}

/// Human-readable form such as "2*b - w".
inline std::string to_string(const RingElement& x) {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= x.ring()->top_degree(); ++d)
        for (std::size_t i = 0; i < x.ring()->rank(d); ++i) {
            Integer c = x.coeffs(d)[i];
            if (c == 0)
                continue;
            if (first) {
                if (c < 0)
                    os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            Integer m = abs(c);
            if (m != 1)
                os << m.get_str() << "*";
            os << x.ring()->label(d, i);
            first = false;
        }
    return first ? "0" : os.str();
}

/**
 * A degree-shifting additive map between graded rings. matrices[d] sends
 * degree d of the source to degree d+shift of the target; degrees that land
 * outside the target are sent to zero.
 */
class GradedMap {
public:
    GradedMap(RingPtr source, RingPtr target, int shift, std::vector<IntMatrix> matrices, bool ring_hom = false)
        : source_(std::move(source)), target_(std::move(target)), shift_(shift), matrices_(std::move(matrices)),
          ring_hom_(ring_hom) {
        if (!source_ || !target_)
            throw Error("GradedMap: null ring");
        if (matrices_.size() != static_cast<std::size_t>(source_->top_degree() + 1))
            throw Error("GradedMap: expected one matrix per source degree");
        for (int d = 0; d <= source_->top_degree(); ++d) {
            const IntMatrix& m = matrices_[d];
            if (m.cols() != source_->rank(d) || m.rows() != target_->rank(d + shift_))
                throw Error("GradedMap: matrix for degree " + std::to_string(d) + " is " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                            std::to_string(target_->rank(d + shift_)) + "x" + std::to_string(source_->rank(d)));
        }
        if (ring_hom_) {
            if (shift_ != 0)
                throw Error("GradedMap: a ring homomorphism must preserve degree");
            if (auto defects = ring_hom_defects(); !defects.empty())
                throw Error("GradedMap: not a ring homomorphism: " + defects.front());
        }
    }

    /// Builds the map from the image of every source basis element.
    static GradedMap from_images(RingPtr source, RingPtr target, int shift,
                                 const std::function<RingElement(int, std::size_t)>& image, bool ring_hom = false) {
        std::vector<IntMatrix> ms;
        for (int d = 0; d <= source->top_degree(); ++d) {
            IntMatrix m(target->rank(d + shift), source->rank(d));
            for (std::size_t i = 0; i < source->rank(d); ++i) {
                RingElement y = image(d, i);
                if (!same_ring(y.ring(), target))
                    throw Error("GradedMap::from_images: image lies in the wrong ring");
                for (int e = 0; e <= target->top_degree(); ++e)
                    if (e != d + shift && !is_zero(y.coeffs(e)))
                        throw Error("GradedMap::from_images: image of " + source->label(d, i) +
                                    " is not homogeneous of degree " + std::to_string(d + shift));
                for (std::size_t k = 0; k < m.rows(); ++k)
                    m(k, i) = y.coeffs(d + shift)[k];
            }
            ms.push_back(std::move(m));
        }
        return GradedMap(std::move(source), std::move(target), shift, std::move(ms), ring_hom);
    }

    static GradedMap identity(const RingPtr& ring) {
        return from_images(ring, ring, 0, [&](int d, std::size_t i) { return RingElement::basis(ring, d, i); }, true);
    }

    static GradedMap zero(const RingPtr& source, const RingPtr& target, int shift) {
        return from_images(source, target, shift, [&](int, std::size_t) { return RingElement(target); });
    }

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    int shift() const { return shift_; }
    bool is_ring_hom() const { return ring_hom_; }
    const IntMatrix& matrix(int d) const { return matrices_.at(static_cast<std::size_t>(d)); }

    RingElement operator()(const RingElement& x) const {
        if (!same_ring(x.ring(), source_))
            throw Error("GradedMap: argument is not in the source ring");
        RingElement out(target_);
        std::vector<IntVector> coeffs = out.all_coeffs();
        for (int d = 0; d <= source_->top_degree(); ++d) {
            int e = d + shift_;
            if (e < 0 || e > target_->top_degree())
                continue;
            coeffs[e] = coeffs[e] + matrices_[d] * x.coeffs(d);
        }
        return RingElement(target_, std::move(coeffs));
    }

    /// f(x*y) != f(x)*f(y) on basis pairs, and f(1) != 1.
    std::vector<std::string> ring_hom_defects() const {
        std::vector<std::string> defects;
        if ((*this)(RingElement::one(source_)) != RingElement::one(target_))
            defects.push_back("f(1) != 1");
        for (int d1 = 0; d1 <= source_->top_degree(); ++d1)
            for (int d2 = d1; d2 <= source_->top_degree(); ++d2)
                for (std::size_t i1 = 0; i1 < source_->rank(d1); ++i1)
                    for (std::size_t i2 = (d1 == d2 ? i1 : 0); i2 < source_->rank(d2); ++i2) {
                        RingElement x = RingElement::basis(source_, d1, i1);
                        RingElement y = RingElement::basis(source_, d2, i2);
                        if ((*this)(x * y) != (*this)(x) * (*this)(y))
                            defects.push_back("f(" + source_->label(d1, i1) + "*" + source_->label(d2, i2) +
                                              ") != f(" + source_->label(d1, i1) + ")*f(" +
                                              source_->label(d2, i2) + ")");
                    }
        return defects;
    }

private:
    RingPtr source_;
    RingPtr target_;
    int shift_;
    std::vector<IntMatrix> matrices_;
    bool ring_hom_;
};

/// g after f.
inline GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (!same_ring(f.target(), g.source()))
        throw Error("compose: target of the first map is not the source of the second");
    return GradedMap::from_images(
        f.source(), g.target(), f.shift() + g.shift(),
        [&](int d, std::size_t i) { return g(f(RingElement::basis(f.source(), d, i))); },
        f.is_ring_hom() && g.is_ring_hom());
}

/// Saturated integer kernel of f restricted to one source degree.
inline std::vector<IntVector> kernel_lattice(const GradedMap& f, int degree) {
    if (degree < 0 || degree > f.source()->top_degree())
        throw Error("kernel_lattice: degree " + std::to_string(degree) + " outside the source ring");
    const IntMatrix& m = f.matrix(degree);
    if (m.rows() == 0) {
        std::vector<IntVector> all;
        for (std::size_t i = 0; i < m.cols(); ++i) {
            IntVector e(m.cols());
            e[i] = 1;
            all.push_back(std::move(e));
        }
        return all;
    }
    return kernel_lattice(m);
}

}  // namespace twistor
