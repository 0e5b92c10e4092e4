#include "qstretch/structured_algebra.hpp"

#include <stdexcept>

namespace qstretch {

struct StructuredAlgebra::Node {
    enum class Kind { Table, Opposite, Tensor };
    Kind kind = Kind::Table;
    Field field;
    std::size_t dim = 0;
    std::shared_ptr<const QuotientAlgebra> table;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;

    std::vector<std::size_t> idempotents;
    std::vector<std::int64_t> idempotent_pos;
    std::vector<std::size_t> left_idem;
    std::vector<std::size_t> right_idem;
    std::vector<int> degree;
    bool graded = false;
    std::vector<SparseVec> rad_gens;

    SparseVec multiply_basis(std::size_t i, std::size_t j) const {
        switch (kind) {
            case Kind::Table:
                return table->multiply_basis(i, j);
            case Kind::Opposite:
                return left->multiply_basis(j, i);
            case Kind::Tensor: {
                std::size_t dr = right->dim;
                SparseVec a = left->multiply_basis(i / dr, j / dr);
                if (a.empty()) return {};
                SparseVec b = right->multiply_basis(i % dr, j % dr);
                SparseVec out;
                out.reserve(a.size() * b.size());
                for (const auto& [x, c] : a) {
                    for (const auto& [y, d] : b) out.emplace_back(static_cast<std::uint32_t>(x * dr + y), c * d);
                }
                return out;
            }
        }
        return {};
    }

    std::string label(std::size_t i) const {
        switch (kind) {
            case Kind::Table:
                return table->basis_word(i).to_string(table->quiver());
            case Kind::Opposite:
                return left->label(i);
            case Kind::Tensor:
                return left->label(i / right->dim) + "|" + right->label(i % right->dim);
        }
        return {};
    }
};

StructuredAlgebra StructuredAlgebra::from_quotient(std::shared_ptr<const QuotientAlgebra> algebra) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Table;
    n->field = algebra->field();
    n->dim = algebra->dim();
    n->table = algebra;
    const Quiver& q = algebra->quiver();
    for (VertexId v = 0; v < q.vertex_count(); ++v) n->idempotents.push_back(algebra->vertex_index(v));
    n->left_idem.resize(n->dim);
    n->right_idem.resize(n->dim);
    n->degree.resize(n->dim);
    for (std::size_t i = 0; i < n->dim; ++i) {
        const Path& p = algebra->basis_word(i);
        n->left_idem[i] = p.source();
        n->right_idem[i] = p.target();
        n->degree[i] = static_cast<int>(p.length());
    }
    n->graded = algebra->is_graded();
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (auto k = algebra->index_of(Path::arrow(q, a))) {
            n->rad_gens.push_back(unit_vector(n->field, static_cast<std::uint32_t>(*k)));
        }
    }
    n->idempotent_pos.assign(n->dim, -1);
    for (std::size_t k = 0; k < n->idempotents.size(); ++k) n->idempotent_pos[n->idempotents[k]] = static_cast<std::int64_t>(k);
    return StructuredAlgebra(n);
}

StructuredAlgebra StructuredAlgebra::from_quotient(const QuotientAlgebra& algebra) {
    return from_quotient(std::make_shared<const QuotientAlgebra>(algebra));
}

StructuredAlgebra StructuredAlgebra::opposite(const StructuredAlgebra& a) {
    const Node& in = a.node();
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Opposite;
    n->field = in.field;
    n->dim = in.dim;
    n->left = a.node_;
    n->idempotents = in.idempotents;
    n->idempotent_pos = in.idempotent_pos;
    n->left_idem = in.right_idem;
    n->right_idem = in.left_idem;
    n->degree = in.degree;
    n->graded = in.graded;
    n->rad_gens = in.rad_gens;
    return StructuredAlgebra(n);
}

StructuredAlgebra StructuredAlgebra::tensor(const StructuredAlgebra& x, const StructuredAlgebra& y) {
    const Node& l = x.node();
    const Node& r = y.node();
    if (l.field != r.field) throw FieldMismatchError("tensor factors over different fields");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Tensor;
    n->field = l.field;
    n->dim = l.dim * r.dim;
    n->left = x.node_;
    n->right = y.node_;
    std::size_t rr = r.idempotents.size();
    for (std::size_t e : l.idempotents) {
        for (std::size_t f : r.idempotents) n->idempotents.push_back(e * r.dim + f);
    }
    n->idempotent_pos.assign(n->dim, -1);
    for (std::size_t k = 0; k < n->idempotents.size(); ++k) n->idempotent_pos[n->idempotents[k]] = static_cast<std::int64_t>(k);
    n->left_idem.resize(n->dim);
    n->right_idem.resize(n->dim);
    n->degree.resize(n->dim);
    for (std::size_t i = 0; i < l.dim; ++i) {
        for (std::size_t j = 0; j < r.dim; ++j) {
            std::size_t k = i * r.dim + j;
            n->left_idem[k] = l.left_idem[i] * rr + r.left_idem[j];
            n->right_idem[k] = l.right_idem[i] * rr + r.right_idem[j];
            n->degree[k] = l.degree[i] + r.degree[j];
        }
    }
    n->graded = l.graded && r.graded;
    for (const auto& g : l.rad_gens) {
        std::vector<std::pair<std::uint32_t, Scalar>> entries;
        for (const auto& [i, c] : g) {
            for (std::size_t f : r.idempotents) entries.emplace_back(static_cast<std::uint32_t>(i * r.dim + f), c);
        }
        n->rad_gens.push_back(canonicalize(std::move(entries)));
    }
    for (const auto& h : r.rad_gens) {
        std::vector<std::pair<std::uint32_t, Scalar>> entries;
        for (std::size_t e : l.idempotents) {
            for (const auto& [j, c] : h) entries.emplace_back(static_cast<std::uint32_t>(e * r.dim + j), c);
        }
        n->rad_gens.push_back(canonicalize(std::move(entries)));
    }
    return StructuredAlgebra(n);
}

StructuredAlgebra StructuredAlgebra::enveloping(const StructuredAlgebra& a, std::size_t budget) {
    if (a.dim() * a.dim() > budget) {
        throw BudgetExceededError("enveloping algebra of dimension " + std::to_string(a.dim() * a.dim()) +
                                  " exceeds the budget of " + std::to_string(budget));
    }
    return tensor(opposite(a), a);
}

const StructuredAlgebra::Node& StructuredAlgebra::node() const {
    if (!node_) throw std::logic_error("empty structured algebra");
    return *node_;
}

const Field& StructuredAlgebra::field() const { return node().field; }
std::size_t StructuredAlgebra::dim() const { return node_ ? node_->dim : 0; }
std::string StructuredAlgebra::label(std::size_t i) const { return node().label(i); }
const std::vector<std::size_t>& StructuredAlgebra::idempotents() const { return node().idempotents; }
std::size_t StructuredAlgebra::left_idempotent(std::size_t i) const { return node().left_idem.at(i); }
std::size_t StructuredAlgebra::right_idempotent(std::size_t i) const { return node().right_idem.at(i); }
bool StructuredAlgebra::is_idempotent(std::size_t i) const { return node().idempotent_pos.at(i) >= 0; }
const std::vector<SparseVec>& StructuredAlgebra::radical_generators() const { return node().rad_gens; }
bool StructuredAlgebra::graded() const { return node().graded; }
int StructuredAlgebra::degree(std::size_t i) const { return node().degree.at(i); }
SparseVec StructuredAlgebra::multiply_basis(std::size_t i, std::size_t j) const { return node().multiply_basis(i, j); }

SparseVec StructuredAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
    std::vector<std::pair<std::uint32_t, Scalar>> acc;
    for (const auto& [i, a] : x) {
        for (const auto& [j, b] : y) {
            Scalar ab = a * b;
            for (const auto& [k, c] : multiply_basis(i, j)) acc.emplace_back(k, ab * c);
        }
    }
    return canonicalize(std::move(acc));
}

SparseVec StructuredAlgebra::one() const {
    std::vector<std::pair<std::uint32_t, Scalar>> entries;
    for (std::size_t e : idempotents()) entries.emplace_back(static_cast<std::uint32_t>(e), Scalar::one(field()));
    return canonicalize(std::move(entries));
}

std::shared_ptr<const QuotientAlgebra> StructuredAlgebra::quotient() const {
    return node().kind == Node::Kind::Table ? node().table : nullptr;
}

}  // namespace qstretch
