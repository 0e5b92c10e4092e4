#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qstretch/linalg.hpp"
#include "qstretch/quotient_algebra.hpp"

namespace qstretch {

class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// Default cap on the dimension of an enveloping algebra.
inline constexpr std::size_t kDefaultEnvelopeBudget = 4096;

/// A finite-dimensional algebra given by a basis and structure constants.
///
/// Three shapes are supported: the normal-word basis of a quotient KQ/I,
/// the opposite of another structured algebra, and the tensor product X ⊗ Y
/// with basis index x * dim(Y) + y.  Products of opposite and tensor algebras
/// are computed from their factors on demand, so nothing quadratic in the
/// dimension is stored.
///
/// Every basis element is either one of the primitive orthogonal idempotents
/// or lies in the radical, and every basis element b satisfies e b f = b for
/// exactly one pair of idempotents (e, f).
class StructuredAlgebra {
public:
    StructuredAlgebra() = default;

    static StructuredAlgebra from_quotient(std::shared_ptr<const QuotientAlgebra> algebra);
    static StructuredAlgebra from_quotient(const QuotientAlgebra& algebra);
    static StructuredAlgebra opposite(const StructuredAlgebra& a);
    static StructuredAlgebra tensor(const StructuredAlgebra& x, const StructuredAlgebra& y);
    /// opposite(a) ⊗ a; throws BudgetExceededError when dim(a)^2 > budget.
    static StructuredAlgebra enveloping(const StructuredAlgebra& a, std::size_t budget = kDefaultEnvelopeBudget);

    const Field& field() const;
    std::size_t dim() const;
    std::string label(std::size_t i) const;

    /// Basis indices of the idempotents, in a fixed order.
    const std::vector<std::size_t>& idempotents() const;
    std::size_t idempotent_count() const { return idempotents().size(); }
    std::string idempotent_label(std::size_t k) const { return label(idempotents().at(k)); }
    /// Position in idempotents() of the e with e b = b (resp. b e = b).
    std::size_t left_idempotent(std::size_t i) const;
    std::size_t right_idempotent(std::size_t i) const;
    bool is_idempotent(std::size_t i) const;
    std::size_t radical_dim() const { return dim() - idempotent_count(); }

    /// Elements g with rad = sum of A g.
    const std::vector<SparseVec>& radical_generators() const;

    /// Length grading when the algebra is graded (all factors graded quotients).
    bool graded() const;
    int degree(std::size_t i) const;

    SparseVec multiply_basis(std::size_t i, std::size_t j) const;
    SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
    SparseVec one() const;

    /// The wrapped quotient, when this algebra is one.
    std::shared_ptr<const QuotientAlgebra> quotient() const;

private:
    struct Node;
    explicit StructuredAlgebra(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    const Node& node() const;

    std::shared_ptr<const Node> node_;
};

}  // namespace qstretch
