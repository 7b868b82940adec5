// Copyright 2026 The Guesswork Authors
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

#include "guesswork/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "guesswork/error.hpp"

namespace guesswork {

Matrix3 Matrix3::identity() noexcept {
    Matrix3 m;
    for (int i = 0; i < 3; ++i) {
        m.a[i][i] = 1.0;
    }
    return m;
}

BlochVector Matrix3::apply(const BlochVector &v) const noexcept {
    return {a[0][0] * v.x + a[0][1] * v.y + a[0][2] * v.z,
            a[1][0] * v.x + a[1][1] * v.y + a[1][2] * v.z,
            a[2][0] * v.x + a[2][1] * v.y + a[2][2] * v.z};
}

Matrix3 Matrix3::transpose() const noexcept {
    Matrix3 t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t.a[i][j] = a[j][i];
        }
    }
    return t;
}

double Matrix3::determinant() const noexcept {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

double Matrix3::orthogonality_defect() const noexcept {
    return max_abs_diff(transpose() * *this, identity());
}

Matrix3 operator*(const Matrix3 &l, const Matrix3 &r) noexcept {
    Matrix3 p;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) {
                s += l.a[i][k] * r.a[k][j];
            }
            p.a[i][j] = s;
        }
    }
    return p;
}

double max_abs_diff(const Matrix3 &l, const Matrix3 &r) noexcept {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            d = std::max(d, std::abs(l.a[i][j] - r.a[i][j]));
        }
    }
    return d;
}

std::optional<std::size_t> SymmetryInfo::find(const std::vector<std::size_t> &perm) const {
    auto it = std::lower_bound(group.begin(), group.end(), perm,
                               [](const SymmetryElement &e, const std::vector<std::size_t> &p) {
                                   return e.perm < p;
                               });
    if (it == group.end() || it->perm != perm) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - group.begin());
}

std::optional<std::vector<std::size_t>> find_antipodes(const QubitCqChannel &channel,
                                                       double tolerance) {
    const auto &r = channel.bloch();
    const std::size_t n = r.size();
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> partner(n, kUnset);
    for (std::size_t m = 0; m < n; ++m) {
        if (partner[m] != kUnset) {
            continue;
        }
        for (std::size_t j = m + 1; j < n; ++j) {
            if (partner[j] == kUnset && max_abs_diff(r[j], -r[m]) <= tolerance) {
                partner[m] = j;
                partner[j] = m;
                break;
            }
        }
        if (partner[m] == kUnset) {
            return std::nullopt;
        }
    }
    return partner;
}

namespace {

// Orthonormal basis of span{r_m} built by Gram-Schmidt over the channel
// vectors in index order. coeffs[k] expresses the unnormalized k-th basis
// vector as r_{pivot[k]} minus a combination of earlier basis vectors, so the
// same recipe applied to permuted vectors yields the image basis.
struct SpanBasis {
    std::vector<std::size_t> pivot;
    std::vector<BlochVector> e;
    std::vector<std::vector<double>> coeffs;
    std::vector<double> length;
};

SpanBasis span_basis(const std::vector<BlochVector> &r) {
    SpanBasis b;
    for (std::size_t m = 0; m < r.size() && b.e.size() < 3; ++m) {
        BlochVector u = r[m];
        std::vector<double> c;
        for (const auto &ek : b.e) {
            const double proj = r[m].dot(ek);
            c.push_back(proj);
            u -= proj * ek;
        }
        const double len = u.norm();
        if (len > 1e-7) {
            b.pivot.push_back(m);
            b.e.push_back((1.0 / len) * u);
            b.coeffs.push_back(std::move(c));
            b.length.push_back(len);
        }
    }
    return b;
}

Matrix3 realization_for(const SpanBasis &basis, const std::vector<BlochVector> &r,
                        const std::vector<std::size_t> &perm) {
    std::vector<BlochVector> f;
    for (std::size_t k = 0; k < basis.e.size(); ++k) {
        BlochVector u = r[perm[basis.pivot[k]]];
        for (std::size_t j = 0; j < k; ++j) {
            u -= basis.coeffs[k][j] * f[j];
        }
        f.push_back((1.0 / basis.length[k]) * u);
    }
    Matrix3 m = Matrix3::identity();
    for (std::size_t k = 0; k < basis.e.size(); ++k) {
        const auto &e = basis.e[k];
        const std::array<double, 3> ev{e.x, e.y, e.z};
        const std::array<double, 3> fv{f[k].x, f[k].y, f[k].z};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                m.a[i][j] += fv[i] * ev[j] - ev[i] * ev[j];
            }
        }
    }
    return m;
}

class GramMatcher {
  public:
    GramMatcher(const std::vector<BlochVector> &r, const SymmetryOptions &options)
        : r_(r), n_(r.size()), tol_(options.tolerance), max_order_(options.max_order),
          basis_(span_basis(r)) {
        gram_.assign(n_ * n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                gram_[i * n_ + j] = r[i].dot(r[j]);
            }
        }
        std::vector<std::vector<double>> signature(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            signature[i].assign(gram_.begin() + static_cast<long>(i * n_),
                                gram_.begin() + static_cast<long>((i + 1) * n_));
            std::sort(signature[i].begin(), signature[i].end());
        }
        candidates_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (std::abs(gram(i, i) - gram(j, j)) > tol_) {
                    continue;
                }
                bool same = true;
                for (std::size_t k = 0; k < n_ && same; ++k) {
                    same = std::abs(signature[i][k] - signature[j][k]) <= tol_;
                }
                if (same) {
                    candidates_[i].push_back(j);
                }
            }
        }
        // Spanning labels first: once they are placed the rest is forced.
        order_ = basis_.pivot;
        for (std::size_t i = 0; i < n_; ++i) {
            if (std::find(order_.begin(), order_.end(), i) == order_.end()) {
                order_.push_back(i);
            }
        }
    }

    std::vector<SymmetryElement> run() {
        perm_.assign(n_, 0);
        used_.assign(n_, false);
        extend(0);
        std::sort(found_.begin(), found_.end(),
                  [](const SymmetryElement &a, const SymmetryElement &b) { return a.perm < b.perm; });
        return std::move(found_);
    }

  private:
    double gram(std::size_t i, std::size_t j) const { return gram_[i * n_ + j]; }

    void extend(std::size_t depth) {
        if (depth == n_) {
            accept();
            return;
        }
        const std::size_t i = order_[depth];
        for (std::size_t target : candidates_[i]) {
            if (used_[target]) {
                continue;
            }
            bool consistent = true;
            for (std::size_t d = 0; d < depth && consistent; ++d) {
                const std::size_t j = order_[d];
                consistent = std::abs(gram(i, j) - gram(target, perm_[j])) <= tol_;
            }
            if (!consistent) {
                continue;
            }
            perm_[i] = target;
            used_[target] = true;
            extend(depth + 1);
            used_[target] = false;
        }
    }

    void accept() {
        Matrix3 rg = realization_for(basis_, r_, perm_);
        if (rg.orthogonality_defect() > tol_) {
            return;
        }
        for (std::size_t m = 0; m < n_; ++m) {
            if (max_abs_diff(rg.apply(r_[m]), r_[perm_[m]]) > tol_) {
                return;
            }
        }
        if (found_.size() >= max_order_) {
            throw Error(ErrorCode::UnsupportedSize,
                        "symmetry group exceeds " + std::to_string(max_order_) + " elements");
        }
        found_.push_back({perm_, rg});
    }

    const std::vector<BlochVector> &r_;
    std::size_t n_;
    double tol_;
    std::size_t max_order_;
    SpanBasis basis_;
    std::vector<double> gram_;
    std::vector<std::vector<std::size_t>> candidates_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> perm_;
    std::vector<bool> used_;
    std::vector<SymmetryElement> found_;
};

// Closure under composition and inversion; quadratic in the group order, so
// only run for groups small enough to make that cheap.
void verify_closure(const SymmetryInfo &info, double tol) {
    constexpr std::size_t kMaxVerifiedOrder = 4096;
    if (info.order() > kMaxVerifiedOrder) {
        return;
    }
    const std::size_t n = info.group.front().perm.size();
    std::vector<std::size_t> composed(n);
    for (const auto &g : info.group) {
        std::vector<std::size_t> inverse(n);
        for (std::size_t m = 0; m < n; ++m) {
            inverse[g.perm[m]] = m;
        }
        if (!info.find(inverse)) {
            throw Error(ErrorCode::ValidationError, "symmetry group is not closed under inverse");
        }
        for (const auto &h : info.group) {
            for (std::size_t m = 0; m < n; ++m) {
                composed[m] = g.perm[h.perm[m]];
            }
            auto idx = info.find(composed);
            if (!idx || max_abs_diff(info.group[*idx].realization, g.realization * h.realization) >
                            tol) {
                throw Error(ErrorCode::ValidationError,
                            "symmetry group is not closed under composition");
            }
        }
    }
}

} // namespace

SymmetryInfo detect_symmetries(const QubitCqChannel &channel, const SymmetryOptions &options) {
    SymmetryInfo info;
    info.group = GramMatcher(channel.bloch(), options).run();
    verify_closure(info, options.tolerance);

    const std::size_t n = channel.size();
    std::vector<bool> reached(n, false);
    for (const auto &g : info.group) {
        reached[g.perm[0]] = true;
    }
    info.transitive = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });

    info.antipode = find_antipodes(channel, options.tolerance);
    info.centrally_symmetric = info.antipode.has_value();
    return info;
}

std::vector<std::pair<std::size_t, std::size_t>> antipodal_pairing(const SymmetryInfo &info,
                                                                   const QubitCqChannel &channel) {
    if (!info.centrally_symmetric || !info.antipode || info.antipode->size() != channel.size()) {
        throw Error(ErrorCode::NotCentrallySymmetric, "channel is not centrally symmetric");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t m = 0; m < channel.size(); ++m) {
        const std::size_t partner = (*info.antipode)[m];
        if (m < partner) {
            pairs.emplace_back(m, partner);
        }
    }
    return pairs;
}

} // namespace guesswork
