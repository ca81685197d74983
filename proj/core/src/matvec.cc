// Copyright 2026 The paritybit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paritybit/matvec.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "paritybit/errors.h"

namespace paritybit {

namespace {

void require_same_dim(const DensityMatrix &a, const DensityMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        std::ostringstream msg;
        msg << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
        throw StructureError(msg.str());
    }
}

}  // namespace

DensityMatrix::DensityMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {
}

DensityMatrix DensityMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<std::vector<double>> copy;
    copy.reserve(rows.size());
    for (const auto &r : rows) {
        copy.emplace_back(r);
    }
    return from_rows(copy);
}

DensityMatrix DensityMatrix::from_rows(const std::vector<std::vector<double>> &rows) {
    DensityMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != rows.size()) {
            throw StructureError("DensityMatrix::from_rows: matrix is not square");
        }
        for (std::size_t j = 0; j < rows.size(); j++) {
            m.entries_[i * m.dim_ + j] = rows[i][j];
        }
    }
    for (std::size_t i = 0; i < m.dim_; i++) {
        for (std::size_t j = i + 1; j < m.dim_; j++) {
            if (m.at(i, j) != m.at(j, i)) {
                std::ostringstream msg;
                msg << "DensityMatrix::from_rows: not symmetric at (" << i << ", " << j << ")";
                throw StructureError(msg.str());
            }
        }
    }
    return m;
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> entries) {
    DensityMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); i++) {
        m.entries_[i * m.dim_ + i] = entries[i];
    }
    return m;
}

DensityMatrix DensityMatrix::identity(std::size_t dim) {
    std::vector<double> ones(dim, 1.0);
    return diagonal(ones);
}

void DensityMatrix::set(std::size_t i, std::size_t j, double value) {
    entries_[i * dim_ + j] = value;
    entries_[j * dim_ + i] = value;
}

DensityMatrix &DensityMatrix::operator+=(const DensityMatrix &other) {
    require_same_dim(*this, other, "operator+");
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

DensityMatrix &DensityMatrix::operator-=(const DensityMatrix &other) {
    require_same_dim(*this, other, "operator-");
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

DensityMatrix &DensityMatrix::operator*=(double factor) {
    for (double &e : entries_) {
        e *= factor;
    }
    return *this;
}

DensityMatrix operator+(DensityMatrix a, const DensityMatrix &b) {
    a += b;
    return a;
}

DensityMatrix operator-(DensityMatrix a, const DensityMatrix &b) {
    a -= b;
    return a;
}

DensityMatrix operator*(double factor, DensityMatrix m) {
    m *= factor;
    return m;
}

double trace(const DensityMatrix &m) {
    double t = 0;
    for (std::size_t i = 0; i < m.dim(); i++) {
        t += m.at(i, i);
    }
    return t;
}

double max_abs_difference(const DensityMatrix &a, const DensityMatrix &b) {
    require_same_dim(a, b, "max_abs_difference");
    double worst = 0;
    auto da = a.data();
    auto db = b.data();
    for (std::size_t k = 0; k < da.size(); k++) {
        worst = std::max(worst, std::abs(da[k] - db[k]));
    }
    return worst;
}

void check_trace(const DensityMatrix &m, TraceContract contract, double tolerance) {
    double expected = contract == TraceContract::kNormalized ? 1.0 : 0.0;
    double t = trace(m);
    if (!(std::abs(t - expected) <= tolerance)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "check_trace: trace " << t << " differs from " << expected << " by more than " << tolerance;
        throw StructureError(msg.str());
    }
}

double smallest_eigenvalue_2x2(const DensityMatrix &m) {
    if (m.dim() != 2) {
        throw StructureError("smallest_eigenvalue_2x2: matrix is not 2x2");
    }
    double a = m.at(0, 0);
    double b = m.at(0, 1);
    double d = m.at(1, 1);
    return 0.5 * (a + d - std::hypot(a - d, 2 * b));
}

bool is_psd_2x2(const DensityMatrix &m, double tolerance) {
    return smallest_eigenvalue_2x2(m) >= -tolerance;
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b, std::size_t max_dim) {
    std::size_t da = a.dim();
    std::size_t db = b.dim();
    if (da != 0 && db > max_dim / da) {
        std::ostringstream msg;
        msg << "tensor: result dimension " << da << " x " << db << " exceeds the cap " << max_dim;
        throw SizeError(msg.str());
    }
    DensityMatrix out(da * db);
    for (std::size_t i = 0; i < da; i++) {
        for (std::size_t j = i; j < da; j++) {
            double aij = a.at(i, j);
            for (std::size_t k = 0; k < db; k++) {
                for (std::size_t l = 0; l < db; l++) {
                    out.set(i * db + k, j * db + l, aij * b.at(k, l));
                }
            }
        }
    }
    return out;
}

BasisPermutation::BasisPermutation(int n, std::vector<std::size_t> map) : n_(n), map_(std::move(map)) {
    if (n < 0 || n >= 63 || map_.size() != (std::size_t{1} << n)) {
        throw StructureError("BasisPermutation: map size must be 2^n");
    }
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t v : map_) {
        if (v >= map_.size() || seen[v]) {
            throw StructureError("BasisPermutation: map is not a bijection");
        }
        seen[v] = true;
    }
}

BasisPermutation BasisPermutation::identity(int n) {
    std::vector<std::size_t> map(std::size_t{1} << n);
    for (std::size_t i = 0; i < map.size(); i++) {
        map[i] = i;
    }
    return {n, std::move(map)};
}

BasisPermutation BasisPermutation::complement_pairing(int n) {
    std::size_t dim = std::size_t{1} << n;
    std::vector<std::size_t> map(dim);
    for (std::size_t i = 0; i < dim; i++) {
        map[i] = i % 2 == 0 ? i / 2 : dim - (i + 1) / 2;
    }
    return {n, std::move(map)};
}

BasisPermutation BasisPermutation::inverse() const {
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); i++) {
        inv[map_[i]] = i;
    }
    return {n_, std::move(inv)};
}

DensityMatrix conjugate_by_permutation(const DensityMatrix &m, const BasisPermutation &p) {
    if (m.dim() != p.size()) {
        std::ostringstream msg;
        msg << "conjugate_by_permutation: matrix dimension " << m.dim() << " does not match permutation size "
            << p.size();
        throw StructureError(msg.str());
    }
    DensityMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); i++) {
        auto src = m.row(p.source(i));
        for (std::size_t j = i; j < m.dim(); j++) {
            out.set(i, j, src[p.source(j)]);
        }
    }
    return out;
}

Basis::Basis(std::size_t dim, std::vector<BasisVector> vectors) : dim_(dim), vectors_(std::move(vectors)) {
    // Gram entries can only be nonzero for vectors that share a coordinate.
    std::vector<std::vector<std::pair<std::size_t, double>>> by_coord(dim_);
    for (std::size_t v = 0; v < vectors_.size(); v++) {
        for (auto [idx, val] : vectors_[v].entries) {
            if (idx >= dim_) {
                throw StructureError("Basis: component index out of range");
            }
            by_coord[idx].emplace_back(v, val);
        }
    }
    std::unordered_map<std::uint64_t, double> gram;
    std::vector<double> norms(vectors_.size(), 0.0);
    for (const auto &touching : by_coord) {
        for (std::size_t x = 0; x < touching.size(); x++) {
            norms[touching[x].first] += touching[x].second * touching[x].second;
            for (std::size_t y = x + 1; y < touching.size(); y++) {
                auto lo = std::min(touching[x].first, touching[y].first);
                auto hi = std::max(touching[x].first, touching[y].first);
                if (lo == hi) {
                    continue;
                }
                gram[(static_cast<std::uint64_t>(lo) << 32) | hi] += touching[x].second * touching[y].second;
            }
        }
    }
    orthonormality_error_ = 0;
    for (double nrm : norms) {
        orthonormality_error_ = std::max(orthonormality_error_, std::abs(nrm - 1.0));
    }
    for (const auto &[key, dot] : gram) {
        orthonormality_error_ = std::max(orthonormality_error_, std::abs(dot));
    }
}

Basis Basis::from_dense(const std::vector<std::vector<double>> &vectors) {
    std::size_t dim = vectors.empty() ? 0 : vectors.front().size();
    std::vector<BasisVector> sparse(vectors.size());
    for (std::size_t v = 0; v < vectors.size(); v++) {
        if (vectors[v].size() != dim) {
            throw StructureError("Basis::from_dense: vectors have different lengths");
        }
        for (std::size_t i = 0; i < dim; i++) {
            if (vectors[v][i] != 0.0) {
                sparse[v].entries.emplace_back(i, vectors[v][i]);
            }
        }
    }
    return {dim, std::move(sparse)};
}

std::vector<double> Basis::dense(std::size_t i) const {
    std::vector<double> out(dim_, 0.0);
    for (auto [idx, val] : vectors_[i].entries) {
        out[idx] += val;
    }
    return out;
}

std::vector<double> projective_probabilities(const DensityMatrix &m, const Basis &basis) {
    if (basis.dim() != m.dim() || basis.size() != m.dim()) {
        std::ostringstream msg;
        msg << "projective_probabilities: need " << m.dim() << " basis vectors of length " << m.dim() << ", got "
            << basis.size() << " of length " << basis.dim();
        throw StructureError(msg.str());
    }
    if (!(basis.orthonormality_error() <= 1e-10)) {
        std::ostringstream msg;
        msg << "projective_probabilities: basis is not orthonormal (error " << basis.orthonormality_error() << ")";
        throw StructureError(msg.str());
    }
    std::vector<double> probs(basis.size());
    for (std::size_t v = 0; v < basis.size(); v++) {
        const auto &entries = basis[v].entries;
        double p = 0;
        for (auto [a, va] : entries) {
            auto row = m.row(a);
            for (auto [b, vb] : entries) {
                p += va * vb * row[b];
            }
        }
        if (p < -1e-12) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "projective_probabilities: outcome " << v << " has probability " << p
                << "; the measured matrix is not positive semidefinite";
            throw StructureError(msg.str());
        }
        probs[v] = std::max(p, 0.0);
    }
    return probs;
}

}  // namespace paritybit
