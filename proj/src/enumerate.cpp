#include "lozenge/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace lozenge {

namespace {

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, int i) { return (b[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u; }
void set_bit(Bits& b, int i) { b[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64); }
void clear_bit(Bits& b, int i) { b[static_cast<std::size_t>(i) / 64] &= ~(std::uint64_t{1} << (i % 64)); }

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::size_t h = 1469598103934665603ull;
        for (auto w : b) h = (h ^ static_cast<std::size_t>(w)) * 1099511628211ull;
        return h;
    }
};

struct Frontier {
    // last_up[d]: largest UP index adjacent to DOWN d, or -1.
    std::vector<int> last_up;
    // closing[i]: DOWN cells whose last adjacent UP is i.
    std::vector<std::vector<int>> closing;
};

Frontier frontier_of(const DualGraph& g) {
    Frontier f;
    f.last_up.assign(g.downs.size(), -1);
    for (std::size_t i = 0; i < g.ups.size(); ++i)
        for (const DualEdge& e : g.adj[i]) f.last_up[static_cast<std::size_t>(e.down)] = static_cast<int>(i);
    f.closing.assign(g.ups.size(), {});
    for (std::size_t d = 0; d < g.downs.size(); ++d)
        if (f.last_up[d] >= 0) f.closing[static_cast<std::size_t>(f.last_up[d])].push_back(static_cast<int>(d));
    return f;
}

bool trivially_empty(const DualGraph& g, const Frontier& f) {
    if (!g.balanced()) return true;
    for (std::size_t i = 0; i < g.ups.size(); ++i)
        if (g.adj[i].empty()) return true;
    return std::any_of(f.last_up.begin(), f.last_up.end(), [](int v) { return v < 0; });
}

class MatchingSum {
public:
    MatchingSum(const DualGraph& g, const Frontier& f) : g_(g), f_(f), memo_(g.ups.size()) {}

    LaurentPoly run() {
        Bits used((g_.downs.size() + 63) / 64 + 1, 0);
        return rec(0, used);
    }

private:
    LaurentPoly rec(std::size_t i, Bits& used) {
        if (i == g_.ups.size()) return 1;
        auto& table = memo_[i];
        auto it = table.find(used);
        if (it != table.end()) return it->second;
        LaurentPoly total;
        for (const DualEdge& e : g_.adj[i]) {
            if (test_bit(used, e.down)) continue;
            Bits next = used;
            set_bit(next, e.down);
            bool ok = true;
            for (int d : f_.closing[i]) {
                if (!test_bit(next, d)) {
                    ok = false;
                    break;
                }
                clear_bit(next, d);
            }
            if (!ok) continue;
            LaurentPoly sub = rec(i + 1, next);
            if (!sub.is_zero()) total += e.weight * sub;
        }
        table.emplace(used, total);
        return total;
    }

    const DualGraph& g_;
    const Frontier& f_;
    std::vector<std::unordered_map<Bits, LaurentPoly, BitsHash>> memo_;
};

}  // namespace

std::size_t DualGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& a : adj) n += a.size();
    return n;
}

DualGraph dual_graph(const Region& r) {
    DualGraph g;
    std::map<Cell, int> down_index;
    for (const Cell& c : r.cells) {
        if (c.is_up()) {
            g.ups.push_back(c);
        } else {
            down_index[c] = static_cast<int>(g.downs.size());
            g.downs.push_back(c);
        }
    }
    g.adj.resize(g.ups.size());
    for (std::size_t i = 0; i < g.ups.size(); ++i) {
        const Cell& u = g.ups[i];
        for (const Cell& d : {down_cell(u.row, u.h - 1), down_cell(u.row, u.h + 1), down_cell(u.row + 1, u.h)}) {
            auto it = down_index.find(d);
            if (it == down_index.end()) continue;
            Lozenge l = *lozenge_between(u, d);
            g.adj[i].push_back({it->second, l, r.scheme.weight(l)});
        }
    }
    return g;
}

void for_each_tiling(const Region& r, const std::function<bool(const Tiling&)>& visit) {
    DualGraph g = dual_graph(r);
    Frontier f = frontier_of(g);
    if (g.ups.empty() && g.downs.empty()) {
        visit({});
        return;
    }
    if (trivially_empty(g, f)) return;
    std::vector<char> used(g.downs.size(), 0);
    Tiling current;
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (stop) return;
        if (i == g.ups.size()) {
            if (!visit(current)) stop = true;
            return;
        }
        for (const DualEdge& e : g.adj[i]) {
            if (used[static_cast<std::size_t>(e.down)]) continue;
            used[static_cast<std::size_t>(e.down)] = 1;
            bool ok = std::all_of(f.closing[i].begin(), f.closing[i].end(),
                                  [&](int d) { return used[static_cast<std::size_t>(d)] != 0; });
            if (ok) {
                current.push_back(e.lozenge);
                rec(i + 1);
                current.pop_back();
            }
            used[static_cast<std::size_t>(e.down)] = 0;
            if (stop) return;
        }
    };
    rec(0);
}

std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t limit) {
    std::vector<Tiling> out;
    if (limit == 0) return out;
    for_each_tiling(r, [&](const Tiling& t) {
        out.push_back(t);
        return out.size() < limit;
    });
    return out;
}

bool has_tiling(const Region& r) { return !enumerate_tilings(r, 1).empty(); }

LaurentPoly tgf(const Region& r) {
    if (r.cells.empty()) return 1;
    DualGraph g = dual_graph(r);
    Frontier f = frontier_of(g);
    if (trivially_empty(g, f)) return {};
    return MatchingSum(g, f).run();
}

LaurentPoly tgf_symmetric(const Region& r) {
    if (!r.mirror_center) throw std::invalid_argument("region has no reflection axis");
    const int c = *r.mirror_center;
    auto mirror = [c](const Cell& x) { return Cell{x.row, 2 * c - x.h - 2, x.orient}; };
    for (const Cell& x : r.cells)
        if (!r.contains(mirror(x))) throw std::invalid_argument("region shape is not mirror symmetric");
    if (r.cells.empty()) return 1;

    std::vector<Cell> cells(r.cells.begin(), r.cells.end());
    std::map<Cell, int> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);
    std::vector<int> mirror_of(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) mirror_of[i] = index.at(mirror(cells[i]));

    struct Option {
        int down;
        Lozenge lozenge;
        LaurentPoly weight;
    };
    std::vector<std::vector<Option>> options(cells.size());
    // For each DOWN cell, the largest index of an adjacent UP cell.
    std::vector<int> last_up(cells.size(), -1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& u = cells[i];
        if (!u.is_up()) continue;
        for (const Cell& d : {down_cell(u.row, u.h - 1), down_cell(u.row, u.h + 1), down_cell(u.row + 1, u.h)}) {
            auto it = index.find(d);
            if (it == index.end()) continue;
            Lozenge l = *lozenge_between(u, d);
            options[i].push_back({it->second, l, r.scheme.weight(l).drop_xy()});
            last_up[static_cast<std::size_t>(it->second)] = static_cast<int>(i);
        }
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (!cells[i].is_up() && last_up[i] < 0) return {};

    std::unordered_map<Bits, LaurentPoly, BitsHash> memo;
    const std::size_t words = (cells.size() + 63) / 64 + 1;
    std::function<LaurentPoly(const Bits&)> rec = [&](const Bits& covered) -> LaurentPoly {
        std::size_t i = 0;
        while (i < cells.size() && (!cells[i].is_up() || test_bit(covered, static_cast<int>(i)))) ++i;
        if (i == cells.size()) {
            for (std::size_t d = 0; d < cells.size(); ++d)
                if (!test_bit(covered, static_cast<int>(d))) return {};
            return 1;
        }
        for (std::size_t d = 0; d < cells.size(); ++d) {
            if (!cells[d].is_up() && !test_bit(covered, static_cast<int>(d)) &&
                last_up[d] < static_cast<int>(i))
                return {};
        }
        auto it = memo.find(covered);
        if (it != memo.end()) return it->second;
        LaurentPoly total;
        const int ui = static_cast<int>(i);
        for (const Option& o : options[i]) {
            if (test_bit(covered, o.down)) continue;
            const int mu = mirror_of[i];
            const int md = mirror_of[static_cast<std::size_t>(o.down)];
            Bits next = covered;
            set_bit(next, ui);
            set_bit(next, o.down);
            LaurentPoly w = o.weight;
            if (!(mu == ui && md == o.down)) {
                if (mu == ui || md == o.down || mu == o.down || md == ui) continue;
                if (test_bit(next, mu) || test_bit(next, md)) continue;
                auto l = lozenge_between(cells[static_cast<std::size_t>(mu)], cells[static_cast<std::size_t>(md)]);
                if (!l) continue;
                set_bit(next, mu);
                set_bit(next, md);
                w *= r.scheme.weight(*l).drop_xy();
            }
            LaurentPoly sub = rec(next);
            if (!sub.is_zero()) total += w * sub;
        }
        memo.emplace(covered, total);
        return total;
    };
    return rec(Bits(words, 0));
}

LaurentPoly tgf_fast(const Region& r) {
    if (r.scheme.weighted == LozengeKind::Left)
        throw std::invalid_argument("fast engine needs left lozenges of weight 1");
    if (r.cells.empty()) return 1;
    std::vector<Cell> sources = path_sources(r);
    std::vector<Cell> sinks = path_sinks(r);
    if (sources.size() != sinks.size()) return {};
    const std::size_t k = sources.size();
    if (k > 20) throw std::invalid_argument("too many lozenge paths for the fast engine");

    std::vector<Cell> order(r.cells.begin(), r.cells.end());
    std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
        if (a.h != b.h) return a.h < b.h;
        if (a.orient != b.orient) return a.is_up();
        return a.row < b.row;
    });
    std::map<Cell, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

    struct Step {
        std::size_t to;
        LaurentPoly weight;
    };
    std::vector<std::vector<Step>> out(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Cell& c = order[i];
        if (c.is_up()) {
            for (const Cell& d : {down_cell(c.row + 1, c.h), down_cell(c.row, c.h + 1)}) {
                auto it = pos.find(d);
                if (it != pos.end()) out[i].push_back({it->second, r.scheme.weight(*lozenge_between(c, d))});
            }
        } else {
            auto it = pos.find(up_cell(c.row, c.h + 1));
            if (it != pos.end()) out[i].push_back({it->second, 1});
        }
    }

    std::vector<std::vector<LaurentPoly>> m(k, std::vector<LaurentPoly>(k));
    for (std::size_t s = 0; s < k; ++s) {
        std::vector<LaurentPoly> val(order.size());
        val[pos.at(sources[s])] = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (val[i].is_zero()) continue;
            for (const Step& st : out[i]) val[st.to] += val[i] * st.weight;
        }
        for (std::size_t t = 0; t < k; ++t) m[s][t] = val[pos.at(sinks[t])];
    }

    std::vector<LaurentPoly> dp(std::size_t{1} << k);
    dp[0] = 1;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask].is_zero()) continue;
        const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
        for (std::size_t j = 0; j < k; ++j) {
            if (mask & (std::size_t{1} << j)) continue;
            if (m[row][j].is_zero()) continue;
            const int larger = __builtin_popcountll(mask >> (j + 1));
            LaurentPoly term = dp[mask] * m[row][j];
            if (larger % 2) {
                dp[mask | (std::size_t{1} << j)] -= term;
            } else {
                dp[mask | (std::size_t{1} << j)] += term;
            }
        }
    }
    LaurentPoly det = dp.back();
    Rational at_one = det.eval(1, 1, 1);
    if (at_one < 0) return -det;
    if (at_one == 0 && !det.is_zero()) throw std::logic_error("path determinant vanishes at q = X = Y = 1 but not identically");
    return det;
}

LaurentPoly tgf_with(const Region& r, Engine e) { return e == Engine::Fast ? tgf_fast(r) : tgf(r); }

LaurentPoly pp_box_oracle(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("box sides must be non-negative");
    if (a == 0 || b == 0) return 1;
    // Each row is a weakly decreasing sequence bounded above by the previous row.
    std::map<std::pair<int, std::vector<int>>, LaurentPoly> memo;
    std::function<LaurentPoly(int, const std::vector<int>&)> rows = [&](int remaining, const std::vector<int>& above) {
        if (remaining == 0) return LaurentPoly(1);
        auto key = std::make_pair(remaining, above);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        LaurentPoly total;
        std::vector<int> row(static_cast<std::size_t>(b));
        std::function<void(int, int, int)> fill = [&](int j, int cap, int sum) {
            if (j == b) {
                total += LaurentPoly::q_pow(sum) * rows(remaining - 1, row);
                return;
            }
            int bound = std::min(cap, above[static_cast<std::size_t>(j)]);
            for (int v = 0; v <= bound; ++v) {
                row[static_cast<std::size_t>(j)] = v;
                fill(j + 1, v, sum + v);
            }
        };
        fill(0, c, 0);
        memo.emplace(key, total);
        return total;
    };
    return rows(a, std::vector<int>(static_cast<std::size_t>(b), c));
}

}  // namespace lozenge
