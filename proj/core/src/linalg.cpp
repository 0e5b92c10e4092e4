#include "qstretch/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qstretch {

SparseVec unit_vector(const Field& field, std::uint32_t index) { return {{index, Scalar::one(field)}}; }

SparseVec axpy(const SparseVec& y, const Scalar& c, const SparseVec& x) {
    if (c.is_zero() || x.empty()) return y;
    SparseVec out;
    out.reserve(y.size() + x.size());
    auto iy = y.begin();
    auto ix = x.begin();
    while (iy != y.end() || ix != x.end()) {
        if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
            out.push_back(*iy++);
        } else if (iy == y.end() || ix->first < iy->first) {
            out.emplace_back(ix->first, c * ix->second);
            ++ix;
        } else {
            Scalar s = iy->second + c * ix->second;
            if (!s.is_zero()) out.emplace_back(iy->first, std::move(s));
            ++iy;
            ++ix;
        }
    }
    return out;
}

SparseVec scaled(const SparseVec& x, const Scalar& c) {
    if (c.is_zero()) return {};
    SparseVec out;
    out.reserve(x.size());
    for (const auto& [i, v] : x) out.emplace_back(i, v * c);
    return out;
}

SparseVec add(const SparseVec& a, const SparseVec& b) {
    if (b.empty()) return a;
    return axpy(a, Scalar::one(b.front().second.field()), b);
}

SparseVec subtract(const SparseVec& a, const SparseVec& b) {
    if (b.empty()) return a;
    return axpy(a, -Scalar::one(b.front().second.field()), b);
}

SparseVec canonicalize(std::vector<std::pair<std::uint32_t, Scalar>> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    SparseVec out;
    out.reserve(entries.size());
    for (auto& e : entries) {
        if (!out.empty() && out.back().first == e.first) {
            out.back().second += e.second;
            if (out.back().second.is_zero()) out.pop_back();
        } else if (!e.second.is_zero()) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

Scalar coefficient(const SparseVec& x, std::uint32_t index, const Field& field) {
    auto it = std::lower_bound(x.begin(), x.end(), index, [](const auto& e, std::uint32_t i) { return e.first < i; });
    if (it != x.end() && it->first == index) return it->second;
    return Scalar::zero(field);
}

Echelon::Echelon(Field field, std::size_t ambient_dim) : field_(field), pivot_row_(ambient_dim, -1) {}

SparseVec Echelon::reduce(const SparseVec& v) const {
    if (rows_.empty() || v.empty()) return v;
    std::map<std::uint32_t, Scalar> work(v.begin(), v.end());
    SparseVec out;
    auto it = work.begin();
    while (it != work.end()) {
        const std::uint32_t index = it->first;
        if (index >= pivot_row_.size()) throw std::out_of_range("vector index exceeds ambient dimension");
        const auto row = pivot_row_[index];
        if (row < 0) {
            out.push_back(*it);
            ++it;
            continue;
        }
        const Scalar c = it->second;
        const auto& r = rows_[static_cast<std::size_t>(row)];
        // r starts at `index` with coefficient one.
        for (std::size_t k = 1; k < r.size(); ++k) {
            auto [pos, inserted] = work.try_emplace(r[k].first, Scalar::zero(field_));
            pos->second -= c * r[k].second;
            if (pos->second.is_zero()) work.erase(pos);
        }
        it = work.erase(it);
    }
    return out;
}

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    const Scalar lead_inv = r.front().second.inverse();
    if (!r.front().second.is_one()) r = scaled(r, lead_inv);
    pivot_row_[r.front().first] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

std::vector<std::uint32_t> Echelon::pivots() const {
    std::vector<std::uint32_t> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.front().first);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SparseVec> Echelon::reduced_basis() const {
    std::vector<SparseVec> sorted = rows_;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
    // Back substitution from the largest pivot down.
    for (std::size_t i = sorted.size(); i-- > 0;) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const auto pivot = sorted[j].front().first;
            Scalar c = coefficient(sorted[i], pivot, field_);
            if (!c.is_zero()) sorted[i] = axpy(sorted[i], -c, sorted[j]);
        }
    }
    return sorted;
}

KernelResult kernel(const Field& field, std::span<const SparseVec> columns, std::size_t target_dim) {
    // Row-reduce the images while tracking which source combination produced each row.
    struct Row {
        SparseVec value;
        SparseVec tag;
    };
    std::vector<Row> rows;
    std::vector<std::int64_t> pivot_row(target_dim, -1);
    Echelon null_space(field, columns.size());
    KernelResult result;
    for (std::uint32_t j = 0; j < columns.size(); ++j) {
        SparseVec value = columns[j];
        SparseVec tag = unit_vector(field, j);
        std::map<std::uint32_t, Scalar> work(value.begin(), value.end());
        SparseVec residue;
        auto it = work.begin();
        while (it != work.end()) {
            if (it->first >= target_dim) throw std::out_of_range("column index exceeds target dimension");
            const auto row = pivot_row[it->first];
            if (row < 0) {
                residue.push_back(*it);
                ++it;
                continue;
            }
            const Scalar c = it->second;
            const Row& r = rows[static_cast<std::size_t>(row)];
            for (std::size_t k = 1; k < r.value.size(); ++k) {
                auto [pos, inserted] = work.try_emplace(r.value[k].first, Scalar::zero(field));
                pos->second -= c * r.value[k].second;
                if (pos->second.is_zero()) work.erase(pos);
            }
            tag = axpy(tag, -c, r.tag);
            it = work.erase(it);
        }
        if (residue.empty()) {
            null_space.insert(tag);
            continue;
        }
        const Scalar inv = residue.front().second.inverse();
        if (!residue.front().second.is_one()) {
            residue = scaled(residue, inv);
            tag = scaled(tag, inv);
        }
        pivot_row[residue.front().first] = static_cast<std::int64_t>(rows.size());
        rows.push_back({std::move(residue), std::move(tag)});
    }
    result.rank = rows.size();
    result.kernel = null_space.reduced_basis();
    return result;
}

std::size_t rank_of(const Field& field, std::span<const SparseVec> vectors, std::size_t ambient_dim) {
    Echelon e(field, ambient_dim);
    for (const auto& v : vectors) e.insert(v);
    return e.rank();
}

}  // namespace qstretch
