/*
 * Copyright 2026 the frobstruct authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <optional>
#include <utility>
#include <vector>

#include "frobstruct/errors.hpp"

namespace frobstruct {

enum class BuildMode { Verify, Closure };

/// A finite preorder on {0..n-1}: a reflexive, transitive relation.
class Preorder {
  public:
    static Preorder from_relation(int n, std::vector<char> rel) {
        if (n < 1) throw InvalidArgumentError("preorder needs at least one element");
        if (static_cast<int>(rel.size()) != n * n)
            throw InvalidArgumentError("relation matrix size mismatch");
        Preorder p;
        p.n_ = n;
        p.rel_ = std::move(rel);
        for (int x = 0; x < n; ++x)
            if (!p.rel_[std::size_t(x) * n + x])
                throw InvalidArgumentError("relation is not reflexive");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (p.at(x, y) && p.at(y, z) && !p.at(x, z))
                        throw NotTransitiveError(x, y, z);
        return p;
    }

    int n() const { return n_; }

    bool leq(int x, int y) const {
        check_index(x);
        check_index(y);
        return at(x, y);
    }

    /// Comparable pairs (x,y) with x <= y, lexicographically ordered.
    std::vector<std::pair<int, int>> comparable_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (at(x, y)) out.emplace_back(x, y);
        return out;
    }

    int comparable_count() const {
        int c = 0;
        for (char b : rel_) c += b ? 1 : 0;
        return c;
    }

    /// Least pair (x,y) with x <= y but not y <= x, if the relation is not symmetric.
    std::optional<std::pair<int, int>> first_one_sided_pair() const {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (at(x, y) && !at(y, x)) return std::make_pair(x, y);
        return std::nullopt;
    }

    Preorder transpose() const {
        Preorder t;
        t.n_ = n_;
        t.rel_.assign(rel_.size(), 0);
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) t.rel_[std::size_t(y) * n_ + x] = at(x, y);
        return t;
    }

    /// Relation as a bitmask (row-major, bit x*n+y); needs n <= 8.
    std::uint64_t mask_key() const {
        if (n_ > 8) throw BoundExceededError("mask key supports up to 8 elements");
        std::uint64_t k = 0;
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (at(x, y)) k |= std::uint64_t(1) << (x * n_ + y);
        return k;
    }

    bool operator==(const Preorder& other) const {
        return n_ == other.n_ && rel_ == other.rel_;
    }

  private:
    friend Preorder build_preorder(int, const std::vector<std::pair<int, int>>&, BuildMode);
    friend Preorder relabel(const Preorder&, const std::vector<int>&);

    bool at(int x, int y) const { return rel_[std::size_t(x) * n_ + y] != 0; }

    void check_index(int i) const {
        if (i < 0 || i >= n_)
            throw IndexOutOfRangeError("element index " + std::to_string(i) +
                                       " out of range [0," + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<char> rel_;
};

/// verify: the given pairs (diagonal implicit) must already be transitive.
/// closure: take the reflexive-transitive closure.
inline Preorder build_preorder(int n, const std::vector<std::pair<int, int>>& pairs,
                               BuildMode mode) {
    if (n < 1) throw InvalidArgumentError("preorder needs at least one element");
    std::vector<char> rel(std::size_t(n) * n, 0);
    for (int x = 0; x < n; ++x) rel[std::size_t(x) * n + x] = 1;
    for (const auto& [x, y] : pairs) {
        if (x < 0 || x >= n)
            throw IndexOutOfRangeError("pair index " + std::to_string(x) + " out of range [0," +
                                       std::to_string(n) + ")");
        if (y < 0 || y >= n)
            throw IndexOutOfRangeError("pair index " + std::to_string(y) + " out of range [0," +
                                       std::to_string(n) + ")");
        rel[std::size_t(x) * n + y] = 1;
    }
    if (mode == BuildMode::Closure) {
        for (int k = 0; k < n; ++k)
            for (int x = 0; x < n; ++x)
                if (rel[std::size_t(x) * n + k])
                    for (int y = 0; y < n; ++y)
                        if (rel[std::size_t(k) * n + y]) rel[std::size_t(x) * n + y] = 1;
    }
    return Preorder::from_relation(n, std::move(rel));
}

/// New preorder with new_leq(a,b) = leq(perm[a], perm[b]); perm maps new index to old.
inline Preorder relabel(const Preorder& p, const std::vector<int>& perm) {
    const int n = p.n();
    if (static_cast<int>(perm.size()) != n) throw InvalidArgumentError("permutation size mismatch");
    std::vector<char> seen(n, 0);
    for (int i : perm) {
        if (i < 0 || i >= n) throw IndexOutOfRangeError("permutation entry out of range");
        if (seen[i]) throw InvalidArgumentError("not a permutation");
        seen[i] = 1;
    }
    std::vector<char> rel(std::size_t(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) rel[std::size_t(a) * n + b] = p.leq(perm[a], perm[b]) ? 1 : 0;
    return Preorder::from_relation(n, std::move(rel));
}

/// Classes of mutual comparability, ordered by least member; representatives
/// are the least member of each class.
struct EquivClasses {
    std::vector<int> class_of;
    std::vector<std::vector<int>> classes;

    int representative(int cls) const { return classes[cls].front(); }
    int count() const { return static_cast<int>(classes.size()); }
};

inline EquivClasses equivalence_classes(const Preorder& p) {
    const int n = p.n();
    EquivClasses ec;
    ec.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (ec.class_of[x] >= 0) continue;
        const int cls = ec.count();
        ec.classes.emplace_back();
        for (int y = x; y < n; ++y)
            if (ec.class_of[y] < 0 && p.leq(x, y) && p.leq(y, x)) {
                ec.class_of[y] = cls;
                ec.classes[cls].push_back(y);
            }
    }
    return ec;
}

/// The condensation: classes ordered by the induced relation. Always a poset.
struct QuotientPoset {
    int m = 0;
    std::vector<char> leq_q;

    bool leq(int a, int b) const {
        if (a < 0 || a >= m)
            throw IndexOutOfRangeError("class index out of range");
        if (b < 0 || b >= m)
            throw IndexOutOfRangeError("class index out of range");
        return leq_q[std::size_t(a) * m + b] != 0;
    }

    int comparable_count() const {
        int c = 0;
        for (char b : leq_q) c += b ? 1 : 0;
        return c;
    }

    Preorder as_preorder() const { return Preorder::from_relation(m, leq_q); }
};

inline QuotientPoset quotient(const Preorder& p) {
    const EquivClasses ec = equivalence_classes(p);
    QuotientPoset q;
    q.m = ec.count();
    q.leq_q.assign(std::size_t(q.m) * q.m, 0);
    for (int a = 0; a < q.m; ++a)
        for (int b = 0; b < q.m; ++b)
            q.leq_q[std::size_t(a) * q.m + b] =
                p.leq(ec.representative(a), ec.representative(b)) ? 1 : 0;
    for (int a = 0; a < q.m; ++a)
        for (int b = 0; b < q.m; ++b)
            if (a != b && q.leq(a, b) && q.leq(b, a))
                throw std::logic_error("condensation produced a non-antisymmetric relation");
    return q;
}

/// {z : x <= z <= y}, ascending.
inline std::vector<int> interval(const Preorder& p, int x, int y) {
    if (!p.leq(x, y)) throw NotComparableError(x, y);
    std::vector<int> out;
    for (int z = 0; z < p.n(); ++z)
        if (p.leq(x, z) && p.leq(z, y)) out.push_back(z);
    return out;
}

/// Longest strict chain from x to y, where strict means one-sided comparability.
/// Equals the longest path between their classes in the condensation DAG.
inline int interval_length(const Preorder& p, int x, int y) {
    if (!p.leq(x, y)) throw NotComparableError(x, y);
    const EquivClasses ec = equivalence_classes(p);
    const QuotientPoset q = quotient(p);
    const int a = ec.class_of[x], b = ec.class_of[y];

    // Topological order by Kahn's algorithm on strict edges.
    std::vector<int> indeg(q.m, 0);
    for (int u = 0; u < q.m; ++u)
        for (int v = 0; v < q.m; ++v)
            if (u != v && q.leq(u, v)) ++indeg[v];
    std::vector<int> topo;
    std::vector<char> emitted(q.m, 0);
    while (static_cast<int>(topo.size()) < q.m) {
        for (int u = 0; u < q.m; ++u)
            if (!emitted[u] && indeg[u] == 0) {
                emitted[u] = 1;
                topo.push_back(u);
                for (int v = 0; v < q.m; ++v)
                    if (v != u && q.leq(u, v)) --indeg[v];
                break;
            }
    }

    std::vector<int> best(q.m, -1);
    best[a] = 0;
    for (int u : topo) {
        if (best[u] < 0) continue;
        for (int v = 0; v < q.m; ++v)
            if (v != u && q.leq(u, v) && best[u] + 1 > best[v]) best[v] = best[u] + 1;
    }
    return best[b];
}

/// Streams every preorder on n elements exactly once, ordered by the
/// off-diagonal row-major bit pattern (0 before 1). Depth-first search over
/// the off-diagonal cells, pruning a branch as soon as some transitivity
/// constraint has all three cells decided and fails.
class PreorderEnumerator {
  public:
    explicit PreorderEnumerator(int n) : n_(n) {
        if (n < 1) throw InvalidArgumentError("preorder needs at least one element");
        rel_.assign(std::size_t(n) * n, 0);
        pos_.assign(std::size_t(n) * n, -1);
        for (int x = 0; x < n; ++x) {
            rel_[std::size_t(x) * n + x] = 1;
            for (int y = 0; y < n; ++y)
                if (x != y) {
                    pos_[std::size_t(x) * n + y] = static_cast<int>(cells_.size());
                    cells_.emplace_back(x, y);
                }
        }
        m_ = static_cast<int>(cells_.size());
        val_.assign(m_, -1);
    }

    std::optional<Preorder> next() {
        if (done_) return std::nullopt;
        if (!started_) {
            started_ = true;
            if (fill_from(0)) return current();
            done_ = true;
            return std::nullopt;
        }
        int level = m_ - 1;
        while (level >= 0) {
            if (val_[level] == 0) {
                set(level, 1);
                if (consistent(level) && fill_from(level + 1)) return current();
            }
            unset(level);
            --level;
        }
        done_ = true;
        return std::nullopt;
    }

  private:
    void set(int level, int v) {
        val_[level] = static_cast<signed char>(v);
        const auto& [x, y] = cells_[level];
        rel_[std::size_t(x) * n_ + y] = static_cast<char>(v);
    }

    void unset(int level) {
        val_[level] = -1;
        const auto& [x, y] = cells_[level];
        rel_[std::size_t(x) * n_ + y] = 0;
    }

    bool rel(int u, int v) const { return rel_[std::size_t(u) * n_ + v] != 0; }

    bool decided(int u, int v, int level) const {
        return u == v || pos_[std::size_t(u) * n_ + v] <= level;
    }

    // Checks every transitivity constraint whose three cells are all decided
    // and which involves the cell assigned at this level.
    bool consistent(int level) const {
        const auto& [x, y] = cells_[level];
        if (rel(x, y)) {
            for (int c = 0; c < n_; ++c)
                if (decided(y, c, level) && decided(x, c, level) && rel(y, c) && !rel(x, c))
                    return false;
            for (int a = 0; a < n_; ++a)
                if (decided(a, x, level) && decided(a, y, level) && rel(a, x) && !rel(a, y))
                    return false;
        } else {
            for (int b = 0; b < n_; ++b)
                if (decided(x, b, level) && decided(b, y, level) && rel(x, b) && rel(b, y))
                    return false;
        }
        return true;
    }

    // Assigns cells from..m-1, smallest values first, backtracking within the
    // range; true when a full consistent assignment is reached.
    bool fill_from(int from) {
        int level = from;
        while (level < m_) {
            set(level, 0);
            if (consistent(level)) {
                ++level;
                continue;
            }
            set(level, 1);
            if (consistent(level)) {
                ++level;
                continue;
            }
            unset(level);
            while (true) {
                --level;
                if (level < from) return false;
                if (val_[level] == 0) {
                    set(level, 1);
                    if (consistent(level)) break;
                }
                unset(level);
            }
            ++level;
        }
        return true;
    }

    Preorder current() const { return Preorder::from_relation(n_, rel_); }

    int n_, m_ = 0;
    std::vector<std::pair<int, int>> cells_;
    std::vector<int> pos_;
    std::vector<char> rel_;
    std::vector<signed char> val_;
    bool started_ = false, done_ = false;
};

/// All preorders on n elements, guarded by an enumeration cap.
inline std::vector<Preorder> enumerate_preorders(int n, int bound = 4) {
    if (n > bound) throw BoundExceededError("enumeration bound exceeded (n=" + std::to_string(n) +
                                            ", bound=" + std::to_string(bound) + ")");
    PreorderEnumerator en(n);
    std::vector<Preorder> out;
    while (auto p = en.next()) out.push_back(std::move(*p));
    return out;
}

} // namespace frobstruct
