#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "surd.hpp"

namespace exb::tiling {

// Raw interval on the circle: start a, end b, with length b - a in [0, 1].
// Length 1 is the full circle; the start is taken mod 1 and the interval
// wraps around 0 when needed.
struct RawInterval {
    Surd a, b;
};

// Canonical finite union of half-open intervals in [0, 1): sorted, pairwise
// disjoint, non-adjacent, split at the wrap-around point 1.
class CircleIntervalSet {
public:
    CircleIntervalSet() = default;

    static CircleIntervalSet normalize(const std::vector<RawInterval>& raw) {
        std::vector<std::pair<Surd, Surd>> pieces;
        for (const RawInterval& iv : raw) {
            Surd len = iv.b - iv.a;
            if (len.sign() < 0 || len > Surd(1))
                throw Error("circle interval: length " + len.str() + " outside [0, 1]");
            if (len.sign() == 0) continue;
            if (len == Surd(1)) {
                pieces.push_back({Surd(0), Surd(1)});
                continue;
            }
            Surd start = iv.a.reduced_mod_1();
            Surd end = start + len;
            if (end <= Surd(1)) {
                pieces.push_back({start, end});
            } else {
                pieces.push_back({start, Surd(1)});
                pieces.push_back({Surd(0), end - Surd(1)});
            }
        }
        std::sort(pieces.begin(), pieces.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        CircleIntervalSet out;
        for (const auto& piece : pieces) {
            if (!out.ivs_.empty()) {
                auto& last = out.ivs_.back();
                if (piece.first < last.second)
                    throw Error("circle intervals overlap on [" + piece.first.str() + ", " +
                                (piece.second < last.second ? piece.second : last.second).str() + ")");
                if (piece.first == last.second) {  // adjacent: merge
                    last.second = piece.second;
                    continue;
                }
            }
            out.ivs_.push_back(piece);
        }
        return out;
    }

    static CircleIntervalSet interval(const Surd& a, const Surd& b) { return normalize({{a, b}}); }

    const std::vector<std::pair<Surd, Surd>>& intervals() const { return ivs_; }
    bool empty() const { return ivs_.empty(); }

    Surd measure() const {
        Surd total(0);
        for (const auto& [lo, hi] : ivs_) total = total + (hi - lo);
        return total;
    }

    bool contains(const Surd& x) const {
        Surd t = x.reduced_mod_1();
        for (const auto& [lo, hi] : ivs_)
            if (lo <= t && t < hi) return true;
        return false;
    }

    friend bool operator==(const CircleIntervalSet& a, const CircleIntervalSet& b) {
        if (a.ivs_.size() != b.ivs_.size()) return false;
        for (std::size_t i = 0; i < a.ivs_.size(); ++i)
            if (a.ivs_[i].first != b.ivs_[i].first || a.ivs_[i].second != b.ivs_[i].second)
                return false;
        return true;
    }

private:
    std::vector<std::pair<Surd, Surd>> ivs_;
};

// Translate every interval by delta modulo 1; measure is preserved exactly.
inline CircleIntervalSet shift_mod1(const CircleIntervalSet& set, const Surd& delta) {
    std::vector<RawInterval> raw;
    for (const auto& [lo, hi] : set.intervals()) raw.push_back({lo + delta, hi + delta});
    return CircleIntervalSet::normalize(raw);
}

struct PartitionCheck {
    bool ok = false;
    std::optional<std::pair<Surd, Surd>> overlap;    // a doubly covered interval
    std::optional<std::pair<Surd, Surd>> uncovered;  // a gap
};

// Do the sets partition the circle exactly (pairwise disjoint, union [0,1))?
inline PartitionCheck is_circle_partition(const std::vector<CircleIntervalSet>& sets) {
    std::vector<std::pair<Surd, Surd>> pieces;
    for (const CircleIntervalSet& s : sets)
        for (const auto& piece : s.intervals()) pieces.push_back(piece);
    std::sort(pieces.begin(), pieces.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    PartitionCheck out;
    Surd cursor(0);
    for (const auto& [lo, hi] : pieces) {
        if (lo < cursor) {
            out.overlap = {{lo, cursor < hi ? cursor : hi}};
            return out;
        }
        if (cursor < lo) {
            out.uncovered = {{cursor, lo}};
            return out;
        }
        cursor = hi;
    }
    if (cursor < Surd(1)) {
        out.uncovered = {{cursor, Surd(1)}};
        return out;
    }
    out.ok = true;
    return out;
}

// Fibered subset of Z x T: integer h -> circle interval set.
struct ColumnTile {
    std::map<int, CircleIntervalSet> fibers;

    void validate() const {
        if (fibers.empty()) throw Error("column tile: no fibers");
        for (const auto& [h, set] : fibers)
            if (set.empty()) throw Error("column tile: empty fiber at " + std::to_string(h));
    }
};

// Translate system parameters: residue r gets T_r = {(qk + r, beta_r + k alpha_r)}.
struct TilingSpec {
    int q = 1;
    std::vector<Surd> beta, alpha;

    void validate() const {
        if (q < 1) throw Error("tiling spec: q must be >= 1");
        if (int(beta.size()) != q || int(alpha.size()) != q)
            throw Error("tiling spec: need exactly q beta and alpha values");
    }
};

struct ResidueReport {
    int r = 0;
    PartitionCheck check;
};

struct SplitReport {
    bool ok = false;
    std::vector<ResidueReport> residues;
};

// The translate system tiles Z x T by the tile iff for every residue r the
// shifted fibers J_h - (h/q) alpha_r partition the circle.
inline SplitReport splitting_criterion(const ColumnTile& tile, const TilingSpec& spec) {
    tile.validate();
    spec.validate();
    for (const auto& [h, set] : tile.fibers)
        if (h % spec.q != 0)
            throw Error("splitting criterion: fiber at " + std::to_string(h) +
                        " is not a multiple of q=" + std::to_string(spec.q));
    SplitReport out;
    out.ok = true;
    for (int r = 0; r < spec.q; ++r) {
        std::vector<CircleIntervalSet> shifted;
        for (const auto& [h, set] : tile.fibers)
            shifted.push_back(shift_mod1(set, -(Surd(h / spec.q) * spec.alpha[r])));
        ResidueReport rep;
        rep.r = r;
        rep.check = is_circle_partition(shifted);
        out.ok = out.ok && rep.check.ok;
        out.residues.push_back(rep);
    }
    return out;
}

struct FiberReport {
    std::vector<std::pair<int, Surd>> measures;
    bool passes = false;
    long long k = 0;  // common measure is 1/k when passes
};

// Necessary condition for tiling a column by vertical translates: all fiber
// measures equal and of the form 1/k.
inline FiberReport column_tile_necessary_check(const ColumnTile& tile) {
    tile.validate();
    FiberReport out;
    for (const auto& [h, set] : tile.fibers) out.measures.push_back({h, set.measure()});
    const Surd& first = out.measures.front().second;
    bool all_equal = true;
    for (const auto& [h, mu] : out.measures) all_equal = all_equal && mu == first;
    if (all_equal && first.is_rational() && first.to_rational().num() == 1) {
        out.passes = true;
        out.k = first.to_rational().den().convert_to<long long>();
    }
    return out;
}

// The explicit non-column tile: fibers [eps, 2eps) at 0, [2eps, 1) at 2,
// [0, eps) at 4; translates with q = 2, beta = 0, alpha_0 = 0, alpha_1 = 1 - eps.
inline std::pair<ColumnTile, TilingSpec> build_alpha_construction(const Surd& eps) {
    if (eps.is_rational())
        throw Error("alpha construction: epsilon must be irrational, got " + eps.str());
    if (eps.sign() <= 0 || Surd(3) * eps >= Surd(1))
        throw Error("alpha construction: epsilon must satisfy 0 < epsilon < 1/3, got " + eps.str());
    ColumnTile tile;
    Surd two_eps = Surd(2) * eps;
    tile.fibers[0] = CircleIntervalSet::interval(eps, two_eps);
    tile.fibers[2] = CircleIntervalSet::interval(two_eps, Surd(1));
    tile.fibers[4] = CircleIntervalSet::interval(Surd(0), eps);
    TilingSpec spec;
    spec.q = 2;
    spec.beta = {Surd(0), Surd(0)};
    spec.alpha = {Surd(0), Surd(1) - eps};
    return {tile, spec};
}

// Exact point-coverage count: how many translates (qk + r, beta_r + k alpha_r)
// of the tile cover the point (j, theta)?
inline long long coverage_count(const ColumnTile& tile, const TilingSpec& spec, int j,
                                const Surd& theta) {
    tile.validate();
    spec.validate();
    int r = ((j % spec.q) + spec.q) % spec.q;
    long long count = 0;
    for (const auto& [h, set] : tile.fibers) {
        long long k = (long long)(j - r - h) / spec.q;  // h multiple of q, so exact
        if ((long long)r + (long long)spec.q * k + h != j) continue;
        Surd inner = theta - spec.beta[r] - Surd(k) * spec.alpha[r];
        if (set.contains(inner)) ++count;
    }
    return count;
}

}  // namespace exb::tiling
