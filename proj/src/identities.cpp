#include "lozenge/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace lozenge {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skip: return "SKIP";
    }
    return "?";
}

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j = {{"name", name}, {"params", params}, {"lhs", lhs}, {"rhs", rhs}, {"verdict", verdict_name(verdict)}};
    if (!detail.empty()) j["detail"] = detail;
    return j;
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    os << verdict_name(verdict) << " " << name << " " << params.dump();
    if (!detail.empty()) os << " (" << detail << ")";
    os << "\n  lhs: " << lhs << "\n  rhs: " << rhs;
    return os.str();
}

LaurentPoly cached_tgf(const Region& r, Engine e) {
    static std::mutex mu;
    static std::map<std::string, LaurentPoly> cache;
    std::string key = r.scheme.to_json().dump();
    key += e == Engine::Fast ? "#fast#" : "#brute#";
    for (const Cell& c : r.cells) {
        key += std::to_string(c.row) + (c.is_up() ? "u" : "d") + std::to_string(c.h) + ";";
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    LaurentPoly value = tgf_with(r, e);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, value);
    return value;
}

namespace {

CheckReport make_report(std::string name, nlohmann::json params) {
    CheckReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    return r;
}

CheckReport skip(CheckReport r, std::string why) {
    r.verdict = Verdict::Skip;
    r.detail = std::move(why);
    return r;
}

void decide(CheckReport& r, bool ok) { r.verdict = ok ? Verdict::Pass : Verdict::Fail; }

// Fills lhs/rhs with value_x / value_y and the formula, and decides by cross-multiplication.
void decide_ratio(CheckReport& r, const LaurentPoly& mx, const LaurentPoly& my, const RationalFunction& f) {
    r.lhs = RationalFunction(mx, my.is_zero() ? LaurentPoly(1) : my).to_text();
    if (my.is_zero()) r.lhs = mx.to_text() + " / 0";
    r.rhs = f.to_text();
    decide(r, mx * f.den() == f.num() * my);
}

Dents without(const Dents& d, int v) {
    Dents out;
    for (int e : d)
        if (e != v) out.push_back(e);
    return out;
}

Dents with(const Dents& d, int v) {
    Dents out = d;
    out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

Dents shifted(const Dents& d, int by) {
    Dents out = d;
    for (int& e : out) e -= by;
    return out;
}

Dents slice(const Dents& d, int from, int to) {  // 1-indexed, inclusive
    Dents out;
    for (int i = from; i <= to; ++i) out.push_back(d[static_cast<std::size_t>(i - 1)]);
    return out;
}

bool valid_dents(const Dents& d, int max_pos) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 1 || d[i] > max_pos) return false;
        if (i > 0 && d[i] <= d[i - 1]) return false;
    }
    return true;
}

nlohmann::json two_sided_params(int x, const Dents& a, const Dents& b) { return {{"x", x}, {"left", a}, {"right", b}}; }

}  // namespace

const char* ratio_kind_name(RatioKind k) {
    switch (k) {
        case RatioKind::S: return "ratio-s";
        case RatioKind::Sprime: return "ratio-sprime";
        case RatioKind::Q: return "ratio-q";
        case RatioKind::Qprime: return "ratio-qprime";
        case RatioKind::Sym: return "ratio-sym";
    }
    return "?";
}

CheckReport check_ratio(RatioKind kind, int x, int y, const Dents& a, const Dents& b, const CheckOptions& opt) {
    nlohmann::json params = {{"x", x}, {"y", y}};
    if (kind == RatioKind::S || kind == RatioKind::Sprime) {
        params["left"] = a;
        params["right"] = b;
    } else {
        params["dents"] = a;
    }
    CheckReport r = make_report(ratio_kind_name(kind), params);
    const CalibrationTable& t = *opt.table;
    switch (kind) {
        case RatioKind::S:
        case RatioKind::Sprime: {
            const int rows = static_cast<int>(a.size() + b.size());
            if (!valid_dents(a, rows) || !valid_dents(b, rows)) throw std::invalid_argument("invalid dent sequences");
            if (!tileable_S(a, b)) return skip(r, "region is not tileable");
            bool prime = kind == RatioKind::Sprime;
            LaurentPoly mx = cached_tgf(prime ? build_Sprime(x, a, b, t) : build_S(x, a, b, t), opt.engine);
            LaurentPoly my = cached_tgf(prime ? build_Sprime(y, a, b, t) : build_S(y, a, b, t), opt.engine);
            decide_ratio(r, mx, my, prime ? ratio_Sprime(x, y, a, b) : ratio_S(x, y, a, b));
            if (prime) r.detail = "scheme " + t.rule(Variant::Sprime).to_json().dump();
            return r;
        }
        case RatioKind::Q:
        case RatioKind::Qprime: {
            if (!valid_dents(a, 2 * static_cast<int>(a.size()))) throw std::invalid_argument("invalid dent sequence");
            if (!tileable_Q(a)) return skip(r, "region is not tileable");
            bool prime = kind == RatioKind::Qprime;
            LaurentPoly mx = cached_tgf(prime ? build_Qprime(x, a, t) : build_Q(x, a, t), opt.engine);
            LaurentPoly my = cached_tgf(prime ? build_Qprime(y, a, t) : build_Q(y, a, t), opt.engine);
            decide_ratio(r, mx, my, prime ? ratio_Qprime(x, y, a) : ratio_Q(x, y, a));
            return r;
        }
        case RatioKind::Sym: {
            const int m = static_cast<int>(a.size());
            if (!valid_dents(a, 2 * m)) throw std::invalid_argument("invalid dent sequence");
            if (m == 0 || a.front() <= 1 || a.back() != 2 * m) return skip(r, "needs a_1 > 1 and a_m = 2m");
            Dents reduced = shifted(slice(a, 1, m - 1), 1);
            if (!tileable_Q(reduced)) return skip(r, "reduced quartered region is not tileable");
            LaurentPoly mx = tgf_symmetric(build_S(2 * x, a, a, t));
            LaurentPoly my = tgf_symmetric(build_S(2 * y, a, a, t));
            decide_ratio(r, mx, my, ratio_sym(x, y, a));
            RationalFunction squared = ratio_sym_squared_q(x, y, a);
            bool matches_square = mx * squared.den() == squared.num() * my;
            bool stated_is_square = ratio_sym(x, y, a) == squared;
            r.detail = std::string("symmetric ratio equals squared quartered ratio: ") + (matches_square ? "yes" : "no") +
                       "; stated formula equals squared quartered ratio: " + (stated_is_square ? "yes" : "no");
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

CheckReport check_symmetric_split(int x, const Dents& a, const CheckOptions& opt) {
    CheckReport r = make_report("symmetric-split", {{"x", x}, {"dents", a}});
    const int m = static_cast<int>(a.size());
    if (!valid_dents(a, 2 * m)) throw std::invalid_argument("invalid dent sequence");
    if (m == 0 || a.front() <= 1 || a.back() != 2 * m) return skip(r, "needs a_1 > 1 and a_m = 2m");
    Dents reduced = shifted(slice(a, 1, m - 1), 1);
    if (!tileable_Q(reduced)) return skip(r, "reduced quartered region is not tileable");
    LaurentPoly ms = tgf_symmetric(build_S(2 * x, a, a, *opt.table));
    LaurentPoly mq = cached_tgf(build_Q(x, reduced, *opt.table), opt.engine);
    LaurentPoly sq = mq * mq;
    r.lhs = ms.to_text();
    r.rhs = sq.to_text();
    decide(r, ms == sq);
    r.detail = "symmetric count " + ms.eval(1, 1, 1).get_str() + ", squared quartered count " + sq.eval(1, 1, 1).get_str();
    return r;
}

const char* lemma_kind_name(LemmaKind k) {
    switch (k) {
        case LemmaKind::Sbase: return "lemma-sbase";
        case LemmaKind::SprimeBase: return "lemma-sprimebase";
        case LemmaKind::P: return "lemma-p";
        case LemmaKind::Pprime: return "lemma-pprime";
        case LemmaKind::PCorrected: return "lemma-p-corrected";
        case LemmaKind::PprimeCorrected: return "lemma-pprime-corrected";
    }
    return "?";
}

CheckReport check_lemma_formula(LemmaKind kind, int p1, int p2, const Dents& s, const CheckOptions& opt) {
    const CalibrationTable& t = *opt.table;
    if (kind == LemmaKind::Sbase || kind == LemmaKind::SprimeBase) {
        CheckReport r = make_report(lemma_kind_name(kind), {{"a", p1}, {"b", p2}, {"dents", s}});
        bool prime = kind == LemmaKind::SprimeBase;
        Region region = prime ? build_Sprime_base(p1, p2, s, t) : build_S_base(p1, p2, s, t);
        LaurentPoly m = cached_tgf(region, opt.engine);
        RationalFunction f = prime ? tgf_Sprime_base_rational(p1, p2, s) : tgf_S_base_rational(p1, p2, s);
        r.lhs = m.to_text();
        auto expanded = f.expand();
        r.rhs = expanded ? expanded->to_text() : f.to_text();
        decide(r, m * f.den() == f.num());
        return r;
    }
    CheckReport r = make_report(lemma_kind_name(kind), {{"x", p1}, {"n", p2}});
    bool prime = kind == LemmaKind::Pprime || kind == LemmaKind::PprimeCorrected;
    LaurentPoly m = cached_tgf(prime ? build_Pprime(p1, p2, t) : build_P(p1, p2, t), opt.engine);
    LaurentPoly f;
    switch (kind) {
        case LemmaKind::P: f = tgf_P(p1, p2); break;
        case LemmaKind::Pprime: f = tgf_Pprime(p1, p2); break;
        case LemmaKind::PCorrected: f = tgf_P_corrected(p1, p2); break;
        default: f = tgf_Pprime_corrected(p1, p2); break;
    }
    r.lhs = m.to_text();
    r.rhs = f.to_text();
    decide(r, m == f);
    return r;
}

namespace {

CheckReport tileability_report(CheckReport r, const Region& region, bool predicate) {
    bool found = false;
    std::vector<Tiling> tilings;
    if (predicate) {
        tilings = enumerate_tilings(region);
        found = !tilings.empty();
    } else {
        found = has_tiling(region);
    }
    r.lhs = predicate ? "tileable" : "not tileable";
    r.rhs = found ? "tiling found" : "no tiling";
    bool ok = predicate == found;
    if (ok && predicate) {
        auto hook = canonical_tiling(region);
        if (!hook) {
            ok = false;
            r.detail = "hook tiling construction failed";
        } else {
            bool member = std::find(tilings.begin(), tilings.end(), *hook) != tilings.end();
            ok = member && is_valid_tiling(region, *hook);
            r.detail = std::string("hook tiling ") + (ok ? "valid" : "invalid") + ", " + std::to_string(tilings.size()) +
                       " tilings";
        }
    }
    decide(r, ok);
    return r;
}

}  // namespace

CheckReport check_tileability_S(int x, const Dents& a, const Dents& b) {
    CheckReport r = make_report("tileability-s", two_sided_params(x, a, b));
    Region region;
    try {
        region = build_S(x, a, b);
    } catch (const std::invalid_argument& e) {
        return skip(r, e.what());
    }
    return tileability_report(r, region, tileable_S(a, b));
}

CheckReport check_tileability_Q(int x, const Dents& a) {
    return tileability_report(make_report("tileability-q", {{"x", x}, {"dents", a}}), build_Q(x, a), tileable_Q(a));
}

const char* kuo_variant_name(KuoVariant v) {
    switch (v) {
        case KuoVariant::Balanced: return "balanced";
        case KuoVariant::Plus1: return "plus1";
        case KuoVariant::Plus2: return "plus2";
    }
    return "?";
}

namespace {

constexpr int kDirC[6] = {2, 1, -1, -2, -1, 1};
constexpr int kDirK[6] = {0, -1, -1, 0, 1, 1};

Cell sector_cell(int c, int k, int j) {
    switch (((j % 6) + 6) % 6) {
        case 0: return up_cell(k, c);
        case 1: return down_cell(k, c - 1);
        case 2: return up_cell(k, c - 2);
        case 3: return down_cell(k + 1, c - 2);
        case 4: return up_cell(k + 1, c - 1);
        default: return down_cell(k + 1, c);
    }
}

int mod6(int j) { return ((j % 6) + 6) % 6; }

nlohmann::json cell_json(const Cell& c) { return {{"row", c.row}, {"h", c.h}, {"orient", c.is_up() ? "UP" : "DOWN"}}; }

}  // namespace

std::vector<Cell> outer_face_cells(const Region& r) {
    std::vector<Cell> seq;
    if (r.cells.empty()) return seq;
    // Topmost, then leftmost vertex of any cell lies on the outer boundary.
    std::pair<int, int> best{0, 0};
    bool have = false;
    for (const Cell& cell : r.cells) {
        std::vector<std::pair<int, int>> verts;  // (k, c)
        if (cell.is_up()) {
            verts = {{cell.row, cell.h}, {cell.row, cell.h + 2}, {cell.row - 1, cell.h + 1}};
        } else {
            verts = {{cell.row - 1, cell.h}, {cell.row - 1, cell.h + 2}, {cell.row, cell.h + 1}};
        }
        for (auto v : verts) {
            if (!have || v < best) {
                best = v;
                have = true;
            }
        }
    }
    const int c0 = best.second;
    const int k0 = best.first;
    int start_dir = -1;
    for (int j = 0; j < 6; ++j) {
        if (r.contains(sector_cell(c0, k0, j)) && !r.contains(sector_cell(c0, k0, j - 1))) {
            start_dir = j;
            break;
        }
    }
    if (start_dir < 0) return seq;
    int c = c0, k = k0, t = start_dir;
    const std::size_t guard = 12 * r.cells.size() + 12;
    for (std::size_t step = 0; step < guard; ++step) {
        c += kDirC[t];
        k += kDirK[t];
        int j = t + 2;
        int taken = 0;
        while (r.contains(sector_cell(c, k, j)) && taken < 6) {
            seq.push_back(sector_cell(c, k, j));
            --j;
            ++taken;
        }
        t = mod6(j + 1);
        if (c == c0 && k == k0 && t == start_dir) break;
    }
    std::vector<Cell> dedup;
    for (const Cell& x : seq)
        if (dedup.empty() || dedup.back() != x) dedup.push_back(x);
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    return dedup;
}

std::string kuo_selection_problem(const Region& g, const KuoSelection& sel) {
    const Cell cs[4] = {sel.u, sel.v, sel.w, sel.s};
    for (int i = 0; i < 4; ++i) {
        if (!g.contains(cs[i])) return "selected cell " + cell_text(cs[i]) + " is not in the region";
        for (int j = 0; j < i; ++j)
            if (cs[i] == cs[j]) return "selected cells must be distinct";
    }
    const long diff = static_cast<long>(g.up_count()) - static_cast<long>(g.down_count());
    bool classes = false;
    switch (sel.variant) {
        case KuoVariant::Balanced:
            classes = sel.u.is_up() && !sel.v.is_up() && sel.w.is_up() && !sel.s.is_up() && diff == 0;
            break;
        case KuoVariant::Plus1:
            classes = sel.u.is_up() && sel.v.is_up() && sel.w.is_up() && !sel.s.is_up() && diff == 1;
            break;
        case KuoVariant::Plus2:
            classes = sel.u.is_up() && sel.v.is_up() && sel.w.is_up() && sel.s.is_up() && diff == 2;
            break;
    }
    if (!classes) return "cell classes or UP/DOWN balance do not match the variant";
    std::vector<Cell> face = outer_face_cells(g);
    std::vector<int> occurrences[4];
    for (int i = 0; i < 4; ++i) {
        for (std::size_t p = 0; p < face.size(); ++p)
            if (face[p] == cs[i]) occurrences[i].push_back(static_cast<int>(p));
        if (occurrences[i].empty()) return "cell " + cell_text(cs[i]) + " is not on the outer face";
    }
    auto cyclic = [](const int* pos, bool forward) {
        int descents = 0;
        for (int i = 0; i < 4; ++i) {
            int a = pos[i], b = pos[(i + 1) % 4];
            if (forward ? b < a : b > a) ++descents;
        }
        return descents == 1;
    };
    for (int p0 : occurrences[0])
        for (int p1 : occurrences[1])
            for (int p2 : occurrences[2])
                for (int p3 : occurrences[3]) {
                    const int pos[4] = {p0, p1, p2, p3};
                    if (cyclic(pos, true) || cyclic(pos, false)) return "";
                }
    return "cells are not in cyclic order on the outer face";
}

CheckReport check_kuo(const Region& g, const KuoSelection& sel) {
    CheckReport r = make_report("kuo-" + std::string(kuo_variant_name(sel.variant)),
                                {{"family", g.family},
                                 {"region_params", g.params},
                                 {"u", cell_json(sel.u)},
                                 {"v", cell_json(sel.v)},
                                 {"w", cell_json(sel.w)},
                                 {"s", cell_json(sel.s)}});
    std::string problem = kuo_selection_problem(g, sel);
    if (!problem.empty()) throw std::invalid_argument("invalid Kuo selection: " + problem);
    auto M = [&](std::vector<Cell> removed) { return cached_tgf(delete_cells(g, removed)); };
    const Cell &u = sel.u, &v = sel.v, &w = sel.w, &s = sel.s;
    LaurentPoly lhs, rhs;
    switch (sel.variant) {
        case KuoVariant::Balanced:
            lhs = M({}) * M({u, v, w, s});
            rhs = M({u, v}) * M({w, s}) + M({u, s}) * M({v, w});
            break;
        case KuoVariant::Plus1:
            lhs = M({v}) * M({u, w, s});
            rhs = M({u}) * M({v, w, s}) + M({w}) * M({u, v, s});
            break;
        case KuoVariant::Plus2: {
            lhs = M({u, w}) * M({v, s});
            rhs = M({u, v}) * M({w, s}) + M({u, s}) * M({v, w});
            LaurentPoly alt = M({v, w}) * M({v, s});
            r.detail = std::string("alternate left side M(G-{v,w})M(G-{v,s}): ") + (alt == rhs ? "PASS" : "FAIL");
            break;
        }
    }
    r.lhs = lhs.to_text();
    r.rhs = rhs.to_text();
    decide(r, lhs == rhs);
    return r;
}

std::optional<KuoSelection> random_kuo_selection(const Region& g, KuoVariant variant, std::mt19937_64& rng) {
    std::vector<Cell> face = outer_face_cells(g);
    std::vector<int> eligible;
    for (std::size_t i = 0; i < face.size(); ++i)
        if (std::count(face.begin(), face.end(), face[i]) == 1) eligible.push_back(static_cast<int>(i));
    if (eligible.size() < 4) return std::nullopt;
    const bool pattern[3][4] = {{true, false, true, false}, {true, true, true, false}, {true, true, true, true}};
    const bool* want = pattern[static_cast<int>(variant)];
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::vector<int> pick = eligible;
        std::shuffle(pick.begin(), pick.end(), rng);
        pick.resize(4);
        std::sort(pick.begin(), pick.end());
        for (int rot = 0; rot < 4; ++rot) {
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i) ok = face[static_cast<std::size_t>(pick[(rot + i) % 4])].is_up() == want[i];
            if (!ok) continue;
            KuoSelection sel;
            sel.variant = variant;
            sel.u = face[static_cast<std::size_t>(pick[rot % 4])];
            sel.v = face[static_cast<std::size_t>(pick[(rot + 1) % 4])];
            sel.w = face[static_cast<std::size_t>(pick[(rot + 2) % 4])];
            sel.s = face[static_cast<std::size_t>(pick[(rot + 3) % 4])];
            if (kuo_selection_problem(g, sel).empty()) return sel;
        }
    }
    return std::nullopt;
}

namespace {

struct SRecurrenceIndices {
    int l = 0;      // 1-indexed
    int alpha = 0;  // largest row without a right dent
};

std::optional<SRecurrenceIndices> s_recurrence_indices(const Dents& a, const Dents& b, std::string& why) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(b.size());
    const int rows = m + n;
    if (m == 0 || n == 0) {
        why = "needs left and right dents";
        return std::nullopt;
    }
    if (a.front() <= 1 || b.front() <= 1) {
        why = "needs a_1 > 1 and b_1 > 1";
        return std::nullopt;
    }
    SRecurrenceIndices idx;
    for (int i = m; i >= 1; --i) {
        if (std::find(a.begin(), a.end(), a[static_cast<std::size_t>(i - 1)] - 1) == a.end()) {
            idx.l = i;
            break;
        }
    }
    for (int row = rows; row >= 1; --row) {
        if (std::find(b.begin(), b.end(), row) == b.end()) {
            idx.alpha = row;
            break;
        }
    }
    if (idx.l == 0 || idx.alpha == 0) {
        why = "no admissible l or alpha";
        return std::nullopt;
    }
    if (idx.alpha < b.front()) {
        why = "right dents cluster at the lower corner";
        return std::nullopt;
    }
    return idx;
}

struct QRecurrenceIndices {
    int t = 0;
    int beta = 0;
};

std::optional<QRecurrenceIndices> q_recurrence_indices(const Dents& a, std::string& why) {
    const int m = static_cast<int>(a.size());
    QRecurrenceIndices idx;
    while (idx.t < m && a[static_cast<std::size_t>(m - 1 - idx.t)] == 2 * m - idx.t) ++idx.t;
    if (m < 3 || a.front() < 3 || idx.t < 2 || idx.t >= m) {
        why = "needs a_1 >= 3 and a lower cluster of size t with 2 <= t < m";
        return std::nullopt;
    }
    idx.beta = 2 * m - idx.t;
    return idx;
}

}  // namespace

std::optional<KuoInstance> proof_kuo_instance_S(int x, const Dents& a, const Dents& b, const CheckOptions& opt) {
    std::string why;
    auto idx = s_recurrence_indices(a, b, why);
    if (!idx) return std::nullopt;
    const int al = a[static_cast<std::size_t>(idx->l - 1)];
    Region s = build_S(x, a, b, *opt.table);
    Region g = fill_dent(fill_dent(s, Side::Left, al), Side::Right, b.front());
    KuoSelection sel;
    sel.variant = KuoVariant::Plus2;
    sel.u = up_cell(1, -1);
    sel.v = dent_cell(s, Side::Right, b.front());
    sel.w = up_cell(idx->alpha, 2 * x + idx->alpha - 2);
    sel.s = dent_cell(s, Side::Left, al);
    return KuoInstance{g, sel};
}

std::optional<KuoInstance> proof_kuo_instance_Q(int x, const Dents& a, const CheckOptions& opt) {
    std::string why;
    auto idx = q_recurrence_indices(a, why);
    if (!idx) return std::nullopt;
    const int m = static_cast<int>(a.size());
    Region q = build_Q(x, a, *opt.table);
    Region g = fill_dent(q, Side::Right, a.front());
    KuoSelection sel;
    sel.variant = KuoVariant::Plus1;
    sel.u = up_cell(1, -1);
    sel.v = dent_cell(q, Side::Right, a.front());
    sel.w = up_cell(idx->beta, 2 * x + idx->beta - 2);
    sel.s = down_cell(2 * m, -1);
    return KuoInstance{g, sel};
}

CheckReport check_recurrence_S(int x, const Dents& a, const Dents& b, const CheckOptions& opt) {
    CheckReport r = make_report("recurrence-s", two_sided_params(x, a, b));
    std::string why;
    auto idx = s_recurrence_indices(a, b, why);
    if (!idx) return skip(r, why);
    if (!tileable_S(a, b)) return skip(r, "region is not tileable");
    const int al = a[static_cast<std::size_t>(idx->l - 1)];
    const int b1 = b.front();
    const int alpha = idx->alpha;
    const CalibrationTable& t = *opt.table;
    auto M = [&](int xx, const Dents& aa, const Dents& bb) { return cached_tgf(build_S(xx, aa, bb, t), opt.engine); };
    LaurentPoly lhs = M(x + 1, shifted(without(a, al), 1), shifted(with(without(b, b1), alpha), 1)) * M(x, a, b);
    LaurentPoly rhs = M(x + 1, shifted(without(a, al), 1), shifted(b, 1)) * M(x, a, with(without(b, b1), alpha)) +
                      M(x + 1, shifted(a, 1), shifted(without(b, b1), 1)) * M(x, without(a, al), with(b, alpha));
    r.lhs = lhs.to_text();
    r.rhs = rhs.to_text();
    r.detail = "l=" + std::to_string(idx->l) + " alpha=" + std::to_string(alpha);
    decide(r, lhs == rhs);
    return r;
}

CheckReport check_prefactor_S(int x, int y, const Dents& a, const Dents& b) {
    CheckReport r = make_report("prefactor-s", {{"x", x}, {"y", y}, {"left", a}, {"right", b}});
    std::string why;
    auto idx = s_recurrence_indices(a, b, why);
    if (!idx) return skip(r, why);
    const int al = a[static_cast<std::size_t>(idx->l - 1)];
    const int b1 = b.front();
    const int alpha = idx->alpha;
    auto f = [](int xx, int yy, const Dents& aa, const Dents& bb) { return ratio_S_factored(xx, yy, aa, bb); };
    FactoredRatio A = f(x + 1, y + 1, shifted(without(a, al), 1), shifted(with(without(b, b1), alpha), 1));
    A.mul(f(x, y, a, b));
    FactoredRatio B = f(x + 1, y + 1, shifted(without(a, al), 1), shifted(b, 1));
    B.mul(f(x, y, a, with(without(b, b1), alpha)));
    FactoredRatio C = f(x + 1, y + 1, shifted(a, 1), shifted(without(b, b1), 1));
    C.mul(f(x, y, without(a, al), with(b, alpha)));
    RationalFunction ra = A.collapse(), rb = B.collapse(), rc = C.collapse();
    r.lhs = ra.to_text();
    r.rhs = rb.to_text();
    bool ab = ra == rb, bc = rb == rc;
    r.detail = std::string("A=B ") + (ab ? "yes" : "no") + ", B=C " + (bc ? "yes" : "no");
    decide(r, ab && bc);
    return r;
}

CheckReport check_recurrence_Q(int x, const Dents& a, const CheckOptions& opt) {
    CheckReport r = make_report("recurrence-q", {{"x", x}, {"dents", a}});
    std::string why;
    auto idx = q_recurrence_indices(a, why);
    if (!idx) return skip(r, why);
    if (!tileable_Q(a)) return skip(r, "region is not tileable");
    const int m = static_cast<int>(a.size());
    const int beta = idx->beta;
    const CalibrationTable& t = *opt.table;
    auto M = [&](int xx, const Dents& aa) { return cached_tgf(build_Q(xx, aa, t), opt.engine); };
    LaurentPoly lhs = M(x, a) * M(x + 1, shifted(with(slice(a, 2, m - 2), beta), 2));
    LaurentPoly rhs = M(x + 1, shifted(slice(a, 2, m), 2)) * M(x, with(slice(a, 1, m - 2), beta)) +
                      M(x, with(slice(a, 2, m), beta)) * M(x + 1, shifted(slice(a, 1, m - 2), 2));
    r.lhs = lhs.to_text();
    r.rhs = rhs.to_text();
    r.detail = "t=" + std::to_string(idx->t) + " beta=" + std::to_string(beta);
    decide(r, lhs == rhs);
    return r;
}

CheckReport check_prefactor_Q(int x, int y, const Dents& a) {
    CheckReport r = make_report("prefactor-q", {{"x", x}, {"y", y}, {"dents", a}});
    std::string why;
    auto idx = q_recurrence_indices(a, why);
    if (!idx) return skip(r, why);
    const int m = static_cast<int>(a.size());
    const int beta = idx->beta;
    auto g = [](int xx, int yy, const Dents& aa) { return ratio_Q_factored(2 * xx, 2 * yy, aa, 2); };
    FactoredRatio A = g(x, y, a);
    A.mul(g(x + 1, y + 1, shifted(with(slice(a, 2, m - 2), beta), 2)));
    FactoredRatio B = g(x + 1, y + 1, shifted(slice(a, 2, m), 2));
    B.mul(g(x, y, with(slice(a, 1, m - 2), beta)));
    FactoredRatio C = g(x, y, with(slice(a, 2, m), beta));
    C.mul(g(x + 1, y + 1, shifted(slice(a, 1, m - 2), 2)));
    RationalFunction ra = A.collapse(), rb = B.collapse(), rc = C.collapse();
    r.lhs = ra.to_text();
    r.rhs = rb.to_text();
    bool ab = ra == rb, bc = rb == rc;
    r.detail = std::string("A=B ") + (ab ? "yes" : "no") + ", B=C " + (bc ? "yes" : "no");
    decide(r, ab && bc);
    return r;
}

CheckReport check_recurrence_P(int x, int n, const CheckOptions& opt) {
    CheckReport r = make_report("recurrence-p", {{"x", x}, {"n", n}});
    if (x < 1 || n < 2) return skip(r, "needs x >= 1 and n >= 2");
    const CalibrationTable& t = *opt.table;
    auto M = [&](int xx, int nn) { return cached_tgf(build_P(xx, nn, t), opt.engine); };
    LaurentPoly rightmost = (LaurentPoly::q_pow(2 * x + n) + LaurentPoly::q_pow(-2 * x - n)) * Rational(1, 2);
    LaurentPoly lhs = M(x, n) * M(x, n - 2);
    LaurentPoly mid = M(x, n - 1);
    LaurentPoly rhs = rightmost * mid * mid + M(x + 1, n - 2) * M(x - 1, n);
    r.lhs = lhs.to_text();
    r.rhs = rhs.to_text();
    decide(r, lhs == rhs);
    return r;
}

CheckReport check_recurrence_S_base(int a, int b, const Dents& s, const CheckOptions& opt) {
    CheckReport r = make_report("recurrence-sbase", {{"a", a}, {"b", b}, {"dents", s}});
    if (a < 1 || b < 1 || static_cast<int>(s.size()) != b || s.front() != 1 || s.back() != a + b)
        return skip(r, "needs a, b >= 1, s_1 = 1 and s_b = a + b");
    int cluster = 1;
    while (cluster < b && s[static_cast<std::size_t>(b - 1 - cluster)] == s[static_cast<std::size_t>(b - cluster)] - 1)
        ++cluster;
    const int t = b - cluster;
    if (t <= 0) return skip(r, "all base dents form one cluster");
    int k = 0;
    while (k + 1 < b && s[static_cast<std::size_t>(k + 1)] == s[static_cast<std::size_t>(k)] + 1) ++k;
    const int alpha = s[static_cast<std::size_t>(k)];
    const int beta = s[static_cast<std::size_t>(b - cluster)] - 1;
    Dents head = slice(s, 1, b - 1);
    const CalibrationTable& tab = *opt.table;
    auto M = [&](int aa, int bb, const Dents& ss) { return cached_tgf(build_S_base(aa, bb, ss, tab), opt.engine); };
    LaurentPoly lhs = M(a, b, s) * M(a, b - 1, with(without(head, alpha), beta));
    LaurentPoly rhs = M(a + 1, b - 1, without(s, alpha)) * M(a - 1, b, with(head, beta)) +
                      M(a, b, with(without(s, alpha), beta)) * M(a, b - 1, head);
    r.lhs = lhs.to_text();
    r.rhs = rhs.to_text();
    r.detail = "alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta);
    decide(r, lhs == rhs);
    return r;
}

CheckReport check_region_splitting(const Region& region, int level) {
    CheckReport r = make_report("region-splitting", {{"family", region.family}, {"region_params", region.params}, {"level", level}});
    Region top = region, bottom = region;
    top.cells.clear();
    bottom.cells.clear();
    for (const Cell& c : region.cells) (c.row <= level ? top : bottom).cells.insert(c);
    bool uniform = true;
    bool any_up = false, any_down = false;
    for (const Cell& c : top.cells) {
        bool touches = false;
        for (const Cell& p : {down_cell(c.row + 1, c.h), up_cell(c.row + 1, c.h)}) {
            if (c.row == level && bottom.contains(p) && lozenge_between(c, p)) touches = true;
        }
        if (touches) (c.is_up() ? any_up : any_down) = true;
    }
    uniform = !(any_up && any_down);
    if (!uniform || !top.balanced()) return skip(r, "cut violates the splitting conditions");
    LaurentPoly whole = cached_tgf(region);
    LaurentPoly parts = cached_tgf(top) * cached_tgf(bottom);
    r.lhs = whole.to_text();
    r.rhs = parts.to_text();
    decide(r, whole == parts);
    return r;
}

CheckReport check_reciprocity(int x, int y, const Dents& a) {
    CheckReport r = make_report("reciprocity", {{"x", x}, {"y", y}, {"dents", a}});
    RationalFunction half = ratio_Q_half(2 * x - 1, 2 * y - 1, a);
    RationalFunction prime = ratio_Qprime(x, y, a);
    r.lhs = half.to_text();
    r.rhs = prime.to_text();
    decide(r, half == prime);
    return r;
}

CheckReport check_macmahon(int a, int b, int c) {
    CheckReport r = make_report("macmahon", {{"a", a}, {"b", b}, {"c", c}});
    RationalFunction f = pp_q(a, b, c);
    auto expanded = f.expand();
    LaurentPoly oracle = pp_box_oracle(a, b, c);
    r.lhs = expanded ? expanded->to_text() : f.to_text();
    r.rhs = oracle.to_text();
    decide(r, f.num() == oracle * f.den());
    return r;
}

CheckReport check_engines(const Region& region) {
    CheckReport r = make_report("engines", {{"family", region.family}, {"region_params", region.params}});
    LaurentPoly brute = cached_tgf(region, Engine::Brute);
    LaurentPoly fast = tgf_fast(region);
    r.lhs = brute.to_text();
    r.rhs = fast.to_text();
    decide(r, brute == fast);
    return r;
}

std::vector<Dents> increasing_sequences(int count, int max) {
    std::vector<Dents> out;
    if (count < 0 || count > max) return out;
    Dents cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == count) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= max; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace lozenge
