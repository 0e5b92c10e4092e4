#include "qstretch/stretch.hpp"

#include <set>
#include <stdexcept>

namespace qstretch {

namespace {

std::string fresh_name(std::string base, std::set<std::string>& used) {
    while (used.contains(base)) base += '\'';
    used.insert(base);
    return base;
}

SparseVec unit(const QuotientAlgebra& a, std::size_t i) {
    return unit_vector(a.field(), static_cast<std::uint32_t>(i));
}

std::vector<std::size_t> words_where(const QuotientAlgebra& a, auto pred) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (pred(a.basis_word(i))) out.push_back(i);
    }
    return out;
}

// Inserts every product ab with t(a) = o(b) = v for the given vertices.
void insert_products_through(const QuotientAlgebra& a, const std::vector<VertexId>& vertices, Echelon& span) {
    for (VertexId v : vertices) {
        auto into = words_where(a, [&](const Path& p) { return p.target() == v; });
        auto from = words_where(a, [&](const Path& p) { return p.source() == v; });
        for (std::size_t i : into) {
            for (std::size_t j : from) {
                const SparseVec& prod = a.multiply_basis(i, j);
                if (!prod.empty()) span.insert(prod);
            }
        }
    }
}

std::vector<VertexId> original_vertices(const StretchMap& map) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < map.original.vertex_count(); ++v) out.push_back(v);
    return out;
}

Echelon ideal_span(const StretchedPresentation& sp) {
    Echelon span(sp.algebra.field(), sp.algebra.dim());
    insert_products_through(sp.algebra, original_vertices(sp.map), span);
    return span;
}

std::size_t rank_of_products(const QuotientAlgebra& a, const std::vector<SparseVec>& vectors) {
    Echelon e(a.field(), a.dim());
    for (const auto& v : vectors) {
        if (!v.empty()) e.insert(v);
    }
    return e.rank();
}

std::string vertex_label(const StretchMap& map, VertexId v) { return map.stretched.vertex_name(v); }

}  // namespace

std::optional<std::pair<ArrowId, std::size_t>> StretchMap::origin_of(VertexId v) const {
    if (is_original_vertex(v)) return std::nullopt;
    for (ArrowId a = 0; a < inner.size(); ++a) {
        for (std::size_t i = 0; i < inner[a].size(); ++i) {
            if (inner[a][i] == v) return std::make_pair(a, i + 1);
        }
    }
    throw std::out_of_range("vertex outside the stretched quiver");
}

StretchMap stretch_quiver(const Quiver& q, std::size_t A) {
    if (A < 1) throw std::invalid_argument("stretch factor must be at least 1");
    StretchMap map;
    map.factor = A;
    map.original = q;
    map.pieces.resize(q.arrow_count());
    map.inner.resize(q.arrow_count());
    if (A == 1) {
        map.stretched = q;
        for (ArrowId a = 0; a < q.arrow_count(); ++a) map.pieces[a] = {a};
        return map;
    }

    std::set<std::string> used(q.vertex_names().begin(), q.vertex_names().end());
    for (const auto& arr : q.arrows()) used.insert(arr.name);

    std::vector<std::string> vertices = q.vertex_names();
    std::vector<std::vector<std::string>> inner_names(q.arrow_count());
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        for (std::size_t i = 1; i < A; ++i) {
            std::string name = fresh_name("w(" + q.arrow(a).name + "," + std::to_string(i) + ")", used);
            map.inner[a].push_back(static_cast<VertexId>(vertices.size()));
            vertices.push_back(name);
            inner_names[a].push_back(name);
        }
    }
    std::vector<ArrowDecl> arrows;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const auto& arr = q.arrow(a);
        for (std::size_t i = 1; i <= A; ++i) {
            std::string src = i == 1 ? q.vertex_name(arr.source) : inner_names[a][i - 2];
            std::string tgt = i == A ? q.vertex_name(arr.target) : inner_names[a][i - 1];
            map.pieces[a].push_back(static_cast<ArrowId>(arrows.size()));
            arrows.push_back({fresh_name(arr.name + "#" + std::to_string(i), used), src, tgt});
        }
    }
    map.stretched = Quiver(std::move(vertices), arrows);
    return map;
}

Path theta_star(const StretchMap& map, const Path& p) {
    if (p.is_trivial()) return p;
    std::vector<ArrowId> word;
    word.reserve(p.length() * map.factor);
    for (ArrowId a : p.arrows()) word.insert(word.end(), map.pieces.at(a).begin(), map.pieces.at(a).end());
    return Path::from_arrows(map.stretched, std::move(word));
}

PathElement theta_star(const StretchMap& map, const PathElement& x) {
    PathElement r(x.field());
    for (const auto& [p, c] : x.terms()) r.add_term(theta_star(map, p), c);
    return r;
}

StretchedPresentation stretch_algebra(const QuotientAlgebra& lambda, std::size_t A,
                                      std::optional<std::size_t> degree_cap) {
    StretchMap map = stretch_quiver(lambda.quiver(), A);
    std::vector<PathElement> relations;
    Inheritance inh;
    inh.homogeneous = inh.stretched_homogeneous = true;
    inh.monomial = inh.stretched_monomial = true;
    for (const auto& g : lambda.relations()) {
        PathElement t = theta_star(map, g);
        if (!g.is_zero()) {
            auto c = classify(g);
            auto ct = classify(t);
            inh.homogeneous = inh.homogeneous && c.length_homogeneous;
            inh.stretched_homogeneous = inh.stretched_homogeneous && ct.length_homogeneous;
            inh.monomial = inh.monomial && c.monomial;
            inh.stretched_monomial = inh.stretched_monomial && ct.monomial;
            if (ct.min_length != A * c.min_length || ct.max_length != A * c.max_length) inh.degrees_scaled = false;
            if (!ct.uniform || !map.is_original_vertex(*ct.source) || !map.is_original_vertex(*ct.target)) {
                inh.endpoints_in_original = false;
            }
        }
        relations.push_back(std::move(t));
    }
    PathElement epsilon(lambda.field());
    for (VertexId v = 0; v < lambda.quiver().vertex_count(); ++v) {
        epsilon.add_term(Path::trivial(v), Scalar::one(lambda.field()));
    }
    QuotientAlgebra algebra = QuotientAlgebra::build(map.stretched, relations, lambda.field(), degree_cap);
    MinimalityVerdict minimality = check_minimal_uniform(lambda, lambda.relations());
    return StretchedPresentation{std::move(map), std::move(relations), std::move(algebra), std::move(epsilon), inh,
                                 std::move(minimality)};
}

std::vector<Connector> connector_paths(const StretchMap& map) {
    std::vector<Connector> out;
    if (map.factor < 2) return out;
    for (ArrowId a = 0; a < map.inner.size(); ++a) {
        const auto& pieces = map.pieces[a];
        for (std::size_t i = 1; i < map.factor; ++i) {
            Connector c;
            c.w = map.inner[a][i - 1];
            c.arrow = a;
            c.position = i;
            c.p = Path::from_arrows(map.stretched, {pieces.begin(), pieces.begin() + static_cast<std::ptrdiff_t>(i)});
            c.q = Path::from_arrows(map.stretched, {pieces.begin() + static_cast<std::ptrdiff_t>(i), pieces.end()});
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const Connector& x, const Connector& y) { return x.w < y.w; });
    return out;
}

CornerAlgebra corner_algebra(const StretchedPresentation& sp, const QuotientAlgebra& lambda) {
    const QuotientAlgebra& big = sp.algebra;
    CornerAlgebra c;
    c.basis = words_where(big, [&](const Path& p) {
        return sp.map.is_original_vertex(p.source()) && sp.map.is_original_vertex(p.target());
    });
    std::set<std::uint32_t> in_b(c.basis.begin(), c.basis.end());

    for (const auto& w : lambda.basis()) c.theta.push_back(big.coordinates(PathElement(lambda.field(), theta_star(sp.map, w))));

    bool inside = true;
    for (std::size_t i = 0; i < c.theta.size() && inside; ++i) {
        for (const auto& [k, v] : c.theta[i]) {
            if (!in_b.contains(k)) {
                inside = false;
                c.first_failure = "theta(" + lambda.basis_word(i).to_string(lambda.quiver()) + ") leaves the corner";
                break;
            }
        }
    }
    std::size_t rank = rank_of_products(big, c.theta);
    c.bijective = inside && rank == lambda.dim() && c.basis.size() == lambda.dim();
    if (!c.bijective && c.first_failure.empty()) c.first_failure = "theta images do not form a basis of the corner";

    c.multiplicative = c.bijective;
    for (std::size_t i = 0; i < lambda.dim() && c.multiplicative; ++i) {
        for (std::size_t j = 0; j < lambda.dim(); ++j) {
            SparseVec lhs;
            for (const auto& [k, coef] : lambda.multiply_basis(i, j)) lhs = axpy(lhs, coef, c.theta[k]);
            SparseVec rhs = big.multiply(c.theta[i], c.theta[j]);
            if (lhs != rhs) {
                c.multiplicative = false;
                c.first_failure = "theta(" + lambda.basis_word(i).to_string(lambda.quiver()) + " * " +
                                  lambda.basis_word(j).to_string(lambda.quiver()) + ") differs from the product of images";
                break;
            }
        }
    }

    c.records.push_back(compare("corner.dimension", lambda.dim(), c.basis.size()));
    c.records.push_back(compare("corner.bijection", "bijective", c.bijective ? "bijective" : "not bijective",
                                c.bijective ? "" : c.first_failure));
    std::size_t pairs = lambda.dim() * lambda.dim();
    c.records.push_back(compare("corner.multiplication", std::to_string(pairs) + " products agree",
                                c.multiplicative ? std::to_string(pairs) + " products agree" : "mismatch",
                                c.multiplicative ? "" : c.first_failure));
    return c;
}

std::vector<SparseVec> epsilon_spanning_set(const StretchedPresentation& sp) {
    return ideal_span(sp).reduced_basis();
}

std::size_t ideal_dimension(const StretchedPresentation& sp) { return ideal_span(sp).rank(); }

std::vector<std::size_t> x_alpha_dimensions(const StretchedPresentation& sp) {
    std::vector<std::size_t> out;
    if (sp.map.factor < 2) return out;
    Echelon eps = ideal_span(sp);
    for (ArrowId a = 0; a < sp.map.inner.size(); ++a) {
        Echelon with = eps;
        insert_products_through(sp.algebra, sp.map.inner[a], with);
        out.push_back(with.rank() - eps.rank());
    }
    return out;
}

std::vector<CheckRecord> dimension_report(const QuotientAlgebra& lambda, const StretchedPresentation& sp) {
    std::vector<CheckRecord> out;
    const QuotientAlgebra& big = sp.algebra;
    const std::size_t A = sp.map.factor;
    const std::size_t m0 = lambda.quiver().vertex_count();
    const std::size_t m1 = lambda.quiver().arrow_count();

    out.push_back(compare("counting.vertices", m0 + m1 * (A - 1), sp.map.stretched.vertex_count()));
    out.push_back(compare("counting.arrows", m1 * A, sp.map.stretched.arrow_count()));

    for (const auto& c : connector_paths(sp.map)) {
        const Arrow& arr = lambda.quiver().arrow(c.arrow);
        std::string w = vertex_label(sp.map, c.w);
        out.push_back(compare("dimension.left[" + w + "]", c.position + big.left_projective_dim(arr.source),
                              big.left_projective_dim(c.w)));
        out.push_back(compare("dimension.right[" + w + "]", (A - c.position) + big.right_projective_dim(arr.target),
                              big.right_projective_dim(c.w)));
    }

    auto xs = x_alpha_dimensions(sp);
    for (ArrowId a = 0; a < xs.size(); ++a) {
        out.push_back(compare("dimension.X[" + lambda.quiver().arrow(a).name + "]", A * (A - 1) / 2, xs[a]));
    }
    out.push_back(compare("dimension.quotient-eps", m1 * A * (A - 1) / 2, big.dim() - ideal_dimension(sp)));
    return out;
}

std::vector<CheckRecord> verify_stratifying(const StretchedPresentation& sp) {
    std::vector<CheckRecord> out;
    const QuotientAlgebra& big = sp.algebra;
    const StretchMap& map = sp.map;
    auto orig = [&](VertexId v) { return map.is_original_vertex(v); };

    std::size_t tensor = static_cast<std::size_t>(
        std::count_if(big.basis().begin(), big.basis().end(), [&](const Path& p) { return orig(p.source()); }));

    for (const auto& c : connector_paths(map)) {
        std::string w = vertex_label(map, c.w);
        VertexId v = c.p.source();
        VertexId vp = c.q.target();
        auto v_b = words_where(big, [&](const Path& p) { return p.source() == vp && orig(p.target()); });
        auto w_eps = words_where(big, [&](const Path& p) { return p.source() == c.w && orig(p.target()); });
        out.push_back(compare("stratifying.summand[" + w + "]", v_b.size(), w_eps.size()));

        SparseVec qw = big.coordinates(PathElement(big.field(), c.q));
        std::vector<SparseVec> images;
        for (std::size_t b : v_b) images.push_back(big.multiply(qw, unit(big, b)));
        out.push_back(compare("stratifying.isomorphism[" + w + "]", w_eps.size(), rank_of_products(big, images),
                              "rank of left multiplication by " + c.q.to_string(map.stretched)));

        SparseVec pw = big.coordinates(PathElement(big.field(), c.p));
        auto b_v = words_where(big, [&](const Path& p) { return orig(p.source()) && p.target() == v; });
        auto eps_w = words_where(big, [&](const Path& p) { return orig(p.source()) && p.target() == c.w; });
        std::vector<SparseVec> left;
        for (std::size_t b : b_v) left.push_back(big.multiply(unit(big, b), pw));
        out.push_back(compare("stratifying.connector[" + w + "]", eps_w.size(), rank_of_products(big, left),
                              "B*" + c.p.to_string(map.stretched) + " against eps L w"));

        tensor += big.right_projective_dim(vp);
    }
    out.push_back(compare("stratifying.tensor", tensor, ideal_dimension(sp),
                          "dim(L e (x)_B e L) from the projective decomposition against dim L e L"));
    return out;
}

std::vector<CheckRecord> injectivity_lemma_check(const StretchedPresentation& sp) {
    std::vector<CheckRecord> out;
    const QuotientAlgebra& big = sp.algebra;
    for (const auto& c : connector_paths(sp.map)) {
        std::string w = vertex_label(sp.map, c.w);
        VertexId v = c.p.source();
        VertexId vp = c.q.target();
        SparseVec pw = big.coordinates(PathElement(big.field(), c.p));
        SparseVec qw = big.coordinates(PathElement(big.field(), c.q));
        std::vector<SparseVec> right;
        std::size_t into_v = 0;
        for (std::size_t b = 0; b < big.dim(); ++b) {
            if (big.basis_word(b).target() != v) continue;
            ++into_v;
            right.push_back(big.multiply(unit(big, b), pw));
        }
        out.push_back(compare("injectivity.right[" + w + "]", into_v, rank_of_products(big, right)));
        std::vector<SparseVec> left;
        std::size_t from_vp = 0;
        for (std::size_t b = 0; b < big.dim(); ++b) {
            if (big.basis_word(b).source() != vp) continue;
            ++from_vp;
            left.push_back(big.multiply(qw, unit(big, b)));
        }
        out.push_back(compare("injectivity.left[" + w + "]", from_vp, rank_of_products(big, left)));
    }
    return out;
}

}  // namespace qstretch
