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

#ifndef PARITYBIT_MATVEC_H
#define PARITYBIT_MATVEC_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace paritybit {

/// Largest dimension `tensor` will build unless told otherwise.
inline constexpr std::size_t kDefaultMaxDim = std::size_t{1} << 20;

/// Which trace a matrix is expected to carry.
enum class TraceContract {
    kNormalized,  // a state: trace 1
    kDifference,  // a difference of two states: trace 0
};

/// Dense real symmetric matrix, stored row-major.
///
/// Entries can only be written in symmetric pairs, so `at(i, j) == at(j, i)`
/// holds bit-for-bit for every value this class ever holds. Positive
/// semidefiniteness is not tracked; the constructions in this library produce
/// PSD states analytically and `is_psd_2x2` spot-checks extracted blocks.
class DensityMatrix {
   public:
    DensityMatrix() = default;
    /// Zero matrix of the given dimension.
    explicit DensityMatrix(std::size_t dim);

    /// Builds from explicit rows. Throws StructureError unless square and exactly symmetric.
    static DensityMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static DensityMatrix from_rows(const std::vector<std::vector<double>> &rows);
    static DensityMatrix diagonal(std::span<const double> entries);
    static DensityMatrix identity(std::size_t dim);

    std::size_t dim() const {
        return dim_;
    }
    double at(std::size_t i, std::size_t j) const {
        return entries_[i * dim_ + j];
    }
    std::span<const double> row(std::size_t i) const {
        return {entries_.data() + i * dim_, dim_};
    }
    std::span<const double> data() const {
        return entries_;
    }

    /// Writes `value` at (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double value);

    DensityMatrix &operator+=(const DensityMatrix &other);
    DensityMatrix &operator-=(const DensityMatrix &other);
    DensityMatrix &operator*=(double factor);

    bool operator==(const DensityMatrix &other) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<double> entries_;
};

DensityMatrix operator+(DensityMatrix a, const DensityMatrix &b);
DensityMatrix operator-(DensityMatrix a, const DensityMatrix &b);
DensityMatrix operator*(double factor, DensityMatrix m);

double trace(const DensityMatrix &m);

/// Largest |a_ij - b_ij|. Throws StructureError on dimension mismatch.
double max_abs_difference(const DensityMatrix &a, const DensityMatrix &b);

/// Throws StructureError if the trace is further than `tolerance` from the contract value.
void check_trace(const DensityMatrix &m, TraceContract contract, double tolerance = 1e-12);

/// Smallest eigenvalue of a 2x2 symmetric matrix, in closed form.
double smallest_eigenvalue_2x2(const DensityMatrix &m);
bool is_psd_2x2(const DensityMatrix &m, double tolerance = 1e-12);

/// Kronecker product with `a` supplying the high-order index:
/// result(i*db + k, j*db + l) = a(i, j) * b(k, l).
/// Throws SizeError if a.dim() * b.dim() exceeds `max_dim`.
DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b, std::size_t max_dim = kDefaultMaxDim);

/// Reordering of the 2^n product basis. `source(i)` is the old index of new basis vector i.
class BasisPermutation {
   public:
    /// Throws StructureError unless `map` is a bijection on {0, ..., 2^n - 1}.
    BasisPermutation(int n, std::vector<std::size_t> map);

    static BasisPermutation identity(int n);
    /// Interleaves every basis vector with its bitwise complement:
    /// new 2j -> old j, new 2j+1 -> old 2^n - 1 - j.
    static BasisPermutation complement_pairing(int n);

    int n() const {
        return n_;
    }
    std::size_t size() const {
        return map_.size();
    }
    std::size_t source(std::size_t i) const {
        return map_[i];
    }
    BasisPermutation inverse() const;

   private:
    int n_;
    std::vector<std::size_t> map_;
};

/// result(i, j) = m(p.source(i), p.source(j)). Throws StructureError on dimension mismatch.
DensityMatrix conjugate_by_permutation(const DensityMatrix &m, const BasisPermutation &p);

/// One vector of a Basis, stored as its nonzero components (index, value).
struct BasisVector {
    std::vector<std::pair<std::size_t, double>> entries;
};

/// A complete set of real vectors in R^dim, kept sparse.
class Basis {
   public:
    /// Throws StructureError if any index is out of range.
    Basis(std::size_t dim, std::vector<BasisVector> vectors);
    static Basis from_dense(const std::vector<std::vector<double>> &vectors);

    std::size_t dim() const {
        return dim_;
    }
    std::size_t size() const {
        return vectors_.size();
    }
    const BasisVector &operator[](std::size_t i) const {
        return vectors_[i];
    }
    std::vector<double> dense(std::size_t i) const;

    /// max |<v_i, v_j> - delta_ij| over all pairs. Only pairs with overlapping
    /// support are visited, so sparse bases are checked in linear time.
    double orthonormality_error() const {
        return orthonormality_error_;
    }

   private:
    std::size_t dim_;
    std::vector<BasisVector> vectors_;
    double orthonormality_error_;
};

/// Outcome probabilities <v_i| m |v_i> of measuring `m` in `basis`.
///
/// Requires a complete basis orthonormal within 1e-10 (StructureError
/// otherwise). Probabilities in [-1e-12, 0) are clamped to zero; anything
/// more negative means `m` was not PSD and raises StructureError.
std::vector<double> projective_probabilities(const DensityMatrix &m, const Basis &basis);

}  // namespace paritybit

#endif
