#include "tropjac/hull.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>

namespace tropjac {

namespace detail {

void EpsPoly::add(int power, const Rat& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), power,
                               [](const auto& t, int p) { return t.first < p; });
    if (it != terms_.end() && it->first == power) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {power, c});
    }
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

EpsPoly EpsPoly::operator-(const EpsPoly& o) const {
    EpsPoly r = *this;
    r -= o;
    return r;
}

EpsPoly EpsPoly::operator*(const Rat& c) const {
    EpsPoly r;
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

EpsPoly EpsPoly::operator/(const Rat& c) const {
    require(!c.is_zero(), "InternalError", "EpsPoly division by zero");
    EpsPoly r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second /= c;
    return r;
}

namespace {

// sign(ga/la - gb/lb), valid when la*lb > 0.
int ratio_cmp(const EpsPoly& ga, const Rat& la, const EpsPoly& gb, const Rat& lb) {
    EpsPoly diff = ga * lb - gb * la;
    return diff.sign();
}

class Engine {
public:
    Engine(const std::vector<RatVector>& proj, const std::vector<Rat>& h, const HullOptions& opts)
        : pts_(proj), h_(h), opts_(opts), n_(static_cast<int>(proj.size())) {
        require(n_ > 0, "DegenerateLift", "no points");
        d_ = static_cast<int>(pts_[0].size());
        require(d_ >= 1 && d_ <= 4, "UnsupportedDimension",
                "hull supports projection dimension 1..4");
        check_not_vertical();
    }

    HullResult run() {
        std::vector<int> seed = initial_simplex();
        std::set<std::vector<int>> visited{seed};
        std::queue<std::vector<int>> work;
        work.push(seed);
        std::vector<std::vector<int>> accepted{seed};
        HullResult result;

        while (!work.empty()) {
            std::vector<int> simplex = work.front();
            work.pop();
            RatMatrix minv = simplex_matrix_inverse(simplex);
            for (int out = 0; out <= d_; ++out) {
                auto neighbor = pivot(simplex, minv, out);
                if (!neighbor) {
                    if (opts_.forbid_boundary) result.hit_boundary = true;
                    continue;
                }
                if (visited.insert(*neighbor).second) {
                    if (!opts_.simplex_filter || opts_.simplex_filter(*neighbor)) {
                        work.push(*neighbor);
                        accepted.push_back(*neighbor);
                    }
                }
            }
        }
        group_cells(accepted, result);
        return result;
    }

private:
    const std::vector<RatVector>& pts_;
    const std::vector<Rat>& h_;
    const HullOptions& opts_;
    int n_;
    int d_;

    EpsPoly lift(int i) const {
        EpsPoly p(h_[i]);
        p.add(i + 1, Rat(1));
        return p;
    }

    void check_not_vertical() const {
        RatMatrix m(n_, d_ + 1);
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < d_; ++j) m(i, j) = pts_[i](j);
            m(i, d_) = Rat(1);
        }
        require(rank(m) == d_ + 1, "DegenerateLift",
                "points lie on a common vertical hyperplane");
    }

    // Rows [x_t, 1] for t in the simplex; the inverse drives all functionals.
    RatMatrix simplex_matrix_inverse(const std::vector<int>& t) const {
        RatMatrix m(d_ + 1, d_ + 1);
        for (int r = 0; r <= d_; ++r) {
            for (int j = 0; j < d_; ++j) m(r, j) = pts_[t[r]](j);
            m(r, d_) = Rat(1);
        }
        return inverse(m);
    }

    // Perturbed height of q minus the perturbed facet functional at q.
    EpsPoly gap(const std::vector<int>& t, const RatMatrix& minv, int q) const {
        EpsPoly g = lift(q);
        for (int r = 0; r <= d_; ++r) {
            Rat u(0);
            for (int j = 0; j < d_; ++j) u += minv(j, r) * pts_[q](j);
            u += minv(d_, r);
            if (u.is_zero()) continue;
            g -= lift(t[r]) * u;
        }
        return g;
    }

    // Pivot across the ridge obtained by dropping t[out]; returns the sorted
    // neighbor simplex, or nullopt for a boundary ridge.
    std::optional<std::vector<int>> pivot(const std::vector<int>& t, const RatMatrix& minv,
                                          int out) const {
        int best = -1;
        EpsPoly best_gap;
        Rat best_lam;
        for (int q = 0; q < n_; ++q) {
            if (std::binary_search(t.begin(), t.end(), q)) continue;
            // lambda vanishes on the ridge, is 1 at t[out]: column `out` of minv.
            Rat lq(0);
            for (int j = 0; j < d_; ++j) lq += minv(j, out) * pts_[q](j);
            lq += minv(d_, out);
            if (lq.sign() >= 0) continue;
            EpsPoly gq = gap(t, minv, q);
            require(gq.sign() > 0, "InternalError", "point below supporting facet");
            if (best < 0) {
                best = q;
                best_gap = std::move(gq);
                best_lam = lq;
                continue;
            }
            int c = ratio_cmp(gq, lq, best_gap, best_lam);
            require(c != 0, "InternalError", "perturbation tie in ridge pivot");
            if (c > 0) {
                best = q;
                best_gap = std::move(gq);
                best_lam = lq;
            }
        }
        if (best < 0) return std::nullopt;
        std::vector<int> nb;
        nb.reserve(d_ + 1);
        for (int i = 0; i <= d_; ++i)
            if (i != out) nb.push_back(t[i]);
        nb.push_back(best);
        std::sort(nb.begin(), nb.end());
        return nb;
    }

    // Grows a supporting functional from the minimum-height point until its
    // tight set is a full simplex.
    std::vector<int> initial_simplex() const {
        // Perturbed minimum: ties in height resolved toward the larger index,
        // whose eps bump is smaller.
        int p0 = 0;
        for (int i = 1; i < n_; ++i)
            if (h_[i] <= h_[p0]) p0 = i;
        std::vector<int> tight{p0};
        std::vector<EpsPoly> alpha(d_ + 1); // functional coefficients (a, b)
        alpha[d_] = lift(p0);

        while (static_cast<int>(tight.size()) < d_ + 1) {
            RatVector mu = pencil_direction(tight);
            int best = -1;
            int best_side = 0;
            EpsPoly best_gap;
            Rat best_mu;
            for (int q = 0; q < n_; ++q) {
                if (std::binary_search(tight.begin(), tight.end(), q)) continue;
                Rat mq(0);
                for (int j = 0; j < d_; ++j) mq += mu(j) * pts_[q](j);
                mq += mu(d_);
                if (mq.is_zero()) continue;
                EpsPoly gq = lift(q);
                for (int j = 0; j < d_; ++j) gq -= alpha[j] * pts_[q](j);
                gq -= alpha[d_];
                require(gq.sign() > 0, "InternalError", "non-tight point below functional");
                int side = mq.sign();
                if (best < 0 || (side > 0 && best_side < 0)) {
                    best = q; best_side = side; best_gap = std::move(gq); best_mu = mq;
                    continue;
                }
                if (side != best_side) continue;
                int c = ratio_cmp(gq, mq, best_gap, best_mu);
                require(c != 0, "InternalError", "perturbation tie in init pivot");
                if ((side > 0 && c < 0) || (side < 0 && c > 0)) {
                    best = q; best_side = side; best_gap = std::move(gq); best_mu = mq;
                }
            }
            require(best >= 0, "InternalError", "no pivot candidate during hull init");
            EpsPoly step = best_gap / best_mu;
            for (int j = 0; j <= d_; ++j) alpha[j] += step * mu(j);
            tight.insert(std::lower_bound(tight.begin(), tight.end(), best), best);
        }
        return tight;
    }

    // A rational affine functional vanishing on the tight set's projections
    // but not on all points.
    RatVector pencil_direction(const std::vector<int>& tight) const {
        RatMatrix c(static_cast<Index>(tight.size()), d_ + 1);
        for (size_t r = 0; r < tight.size(); ++r) {
            for (int j = 0; j < d_; ++j) c(static_cast<Index>(r), j) = pts_[tight[r]](j);
            c(static_cast<Index>(r), d_) = Rat(1);
        }
        for (const RatVector& mu : nullspace(c)) {
            for (int q = 0; q < n_; ++q) {
                Rat mq(0);
                for (int j = 0; j < d_; ++j) mq += mu(j) * pts_[q](j);
                mq += mu(d_);
                if (!mq.is_zero()) return mu;
            }
        }
        fail("InternalError", "no usable pencil direction (degenerate input)");
    }

    void group_cells(const std::vector<std::vector<int>>& simplices, HullResult& out) const {
        std::map<std::vector<std::string>, size_t> index;
        for (const auto& s : simplices) {
            RatMatrix m(d_ + 1, d_ + 1);
            RatVector rhs(d_ + 1);
            for (int r = 0; r <= d_; ++r) {
                for (int j = 0; j < d_; ++j) m(r, j) = pts_[s[r]](j);
                m(r, d_) = Rat(1);
                rhs(r) = h_[s[r]];
            }
            auto sol = solve(m, rhs);
            require(sol.has_value(), "InternalError", "singular facet system");
            std::vector<std::string> key;
            key.reserve(d_ + 1);
            for (int j = 0; j <= d_; ++j) key.push_back((*sol)(j).str());
            auto [it, inserted] = index.try_emplace(key, out.cells.size());
            if (inserted) {
                HullCell cell;
                cell.a = sol->head(d_);
                cell.b = (*sol)(d_);
                out.cells.push_back(std::move(cell));
            }
            out.cells[it->second].simplices.push_back(s);
        }
        for (HullCell& cell : out.cells) {
            for (int q = 0; q < n_; ++q) {
                Rat val = cell.b;
                for (int j = 0; j < d_; ++j) val += cell.a(j) * pts_[q](j);
                require(h_[q] >= val, "InternalError", "cell functional not supporting");
                if (h_[q] == val) cell.tight.push_back(q);
            }
        }
        std::sort(out.cells.begin(), out.cells.end(),
                  [](const HullCell& x, const HullCell& y) { return x.tight < y.tight; });
    }
};

} // namespace

HullResult lower_hull_cells(const std::vector<RatVector>& projections,
                            const std::vector<Rat>& heights, const HullOptions& opts) {
    require(projections.size() == heights.size(), "InternalError", "hull input size mismatch");
    Engine engine(projections, heights, opts);
    return engine.run();
}

} // namespace detail

std::vector<LowerFacet> lower_hull(const std::vector<RatVector>& lifted_points) {
    require(!lifted_points.empty(), "DegenerateLift", "no points");
    Index dim = lifted_points[0].size();
    require(dim >= 2, "UnsupportedDimension", "need lift dimension >= 2");
    int d = static_cast<int>(dim) - 1;

    // Drop vertically dominated points (same projection, higher lift): they
    // are never tight, and the perturbation scheme needs distinct projections.
    std::vector<RatVector> proj;
    std::vector<Rat> h;
    std::map<std::vector<std::string>, size_t> seen;
    for (size_t i = 0; i < lifted_points.size(); ++i) {
        require(lifted_points[i].size() == dim, "InvalidInput", "inconsistent point dimensions");
        RatVector p = lifted_points[i].head(d);
        Rat height = lifted_points[i](d);
        std::vector<std::string> key;
        for (int j = 0; j < d; ++j) key.push_back(p(j).str());
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, proj.size());
            proj.push_back(p);
            h.push_back(height);
        } else if (height < h[it->second]) {
            h[it->second] = height;
        }
    }

    detail::HullResult res = detail::lower_hull_cells(proj, h, detail::HullOptions{});

    std::vector<LowerFacet> facets;
    facets.reserve(res.cells.size());
    for (const auto& cell : res.cells) {
        LowerFacet f;
        f.a = cell.a;
        f.b = cell.b;
        // Tight points among the full original input (covers duplicates).
        for (size_t i = 0; i < lifted_points.size(); ++i) {
            Rat val = cell.b;
            for (int j = 0; j < d; ++j) val += cell.a(j) * lifted_points[i](j);
            if (lifted_points[i](d) == val) f.points.push_back(static_cast<int>(i));
        }
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end(),
              [](const LowerFacet& x, const LowerFacet& y) { return x.points < y.points; });
    return facets;
}

} // namespace tropjac
