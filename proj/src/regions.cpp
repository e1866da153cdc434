#include "lozenge/regions.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lozenge {

Cell up_cell(int row, int h) { return {row, h, Orient::Up}; }
Cell down_cell(int row, int h) { return {row, h, Orient::Down}; }

std::string cell_text(const Cell& c) {
    return std::string(c.is_up() ? "UP(" : "DOWN(") + std::to_string(c.row) + "," + std::to_string(c.h) + ")";
}

std::optional<Lozenge> lozenge_between(const Cell& a, const Cell& b) {
    if (a.orient == b.orient) return std::nullopt;
    const Cell& up = a.is_up() ? a : b;
    const Cell& down = a.is_up() ? b : a;
    if (down.row == up.row && down.h == up.h - 1) return Lozenge{up, down, LozengeKind::Left};
    if (down.row == up.row && down.h == up.h + 1) return Lozenge{up, down, LozengeKind::Right};
    if (down.row == up.row + 1 && down.h == up.h) return Lozenge{up, down, LozengeKind::Vertical};
    return std::nullopt;
}

const char* kind_name(LozengeKind k) {
    switch (k) {
        case LozengeKind::Left: return "left";
        case LozengeKind::Vertical: return "vertical";
        case LozengeKind::Right: return "right";
    }
    return "?";
}

namespace {

LozengeKind parse_kind(const std::string& s) {
    if (s == "left") return LozengeKind::Left;
    if (s == "vertical") return LozengeKind::Vertical;
    if (s == "right") return LozengeKind::Right;
    throw std::invalid_argument("unknown lozenge kind: " + s);
}

const char* rule_name(AxisRule r) { return r == AxisRule::Half ? "HALF" : "NORMAL"; }

AxisRule parse_rule(const std::string& s) {
    if (s == "HALF") return AxisRule::Half;
    if (s == "NORMAL") return AxisRule::Normal;
    throw std::invalid_argument("unknown on-axis rule: " + s);
}

const char* anchor_name(Anchor a) {
    switch (a) {
        case Anchor::Zigzag: return "zigzag";
        case Anchor::Rows: return "rows";
        case Anchor::BaseLeft: return "base_left";
        case Anchor::BaseMid: return "base_mid";
        case Anchor::BaseRight: return "base_right";
    }
    return "?";
}

Anchor parse_anchor(const std::string& s) {
    if (s == "zigzag") return Anchor::Zigzag;
    if (s == "rows") return Anchor::Rows;
    if (s == "base_left") return Anchor::BaseLeft;
    if (s == "base_mid") return Anchor::BaseMid;
    if (s == "base_right") return Anchor::BaseRight;
    throw std::invalid_argument("unknown axis anchor: " + s);
}

bool uses_xy(Variant v) {
    return v == Variant::S || v == Variant::Sprime || v == Variant::Sbase || v == Variant::SprimeBase ||
           v == Variant::Custom;
}

int left_zigzag(int k) { return (k % 2 == 0) ? 0 : -1; }

}  // namespace

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::S: return "S";
        case Variant::Sprime: return "Sprime";
        case Variant::Q: return "Q";
        case Variant::Qprime: return "Qprime";
        case Variant::Sbase: return "Sbase";
        case Variant::SprimeBase: return "SprimeBase";
        case Variant::P: return "P";
        case Variant::Pprime: return "Pprime";
        case Variant::Custom: return "Custom";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    for (Variant v : {Variant::S, Variant::Sprime, Variant::Q, Variant::Qprime, Variant::Sbase, Variant::SprimeBase,
                      Variant::P, Variant::Pprime, Variant::Custom}) {
        if (s == variant_name(v)) return v;
    }
    throw std::invalid_argument("unknown family: " + s);
}

std::optional<int> WeightScheme::index(const Lozenge& l) const {
    if (l.kind != weighted) return std::nullopt;
    const int r = l.up.row;
    const int h = l.up.h;
    int label = 0;
    switch (l.kind) {
        case LozengeKind::Vertical: label = h + 1; break;
        case LozengeKind::Right: label = (h + 3 * r) / 2; break;
        case LozengeKind::Left: label = (3 * r - h) / 2; break;
    }
    return sign * (label - axis_h);
}

LaurentPoly WeightScheme::weight(const Lozenge& l) const {
    auto i = index(l);
    if (!i) return 1;
    if (on_axis_rule == AxisRule::Half && *i == 0) return LaurentPoly(Rational(1, 2));
    const Rational half(1, 2);
    LaurentPoly w;
    w.add_term({2 * *i, use_xy ? 1 : 0, 0}, half);
    w.add_term({-2 * *i, 0, use_xy ? 1 : 0}, half);
    return w;
}

nlohmann::json WeightScheme::to_json() const {
    return {{"variant", variant_name(variant)},
            {"weighted", kind_name(weighted)},
            {"axis_h", axis_h},
            {"sign", sign},
            {"on_axis_rule", rule_name(on_axis_rule)},
            {"variables", use_xy ? "qXY" : "q"}};
}

WeightScheme WeightScheme::from_json(const nlohmann::json& j) {
    WeightScheme s;
    s.variant = parse_variant(j.at("variant").get<std::string>());
    s.weighted = parse_kind(j.value("weighted", std::string("vertical")));
    s.axis_h = j.at("axis_h").get<int>();
    s.sign = j.value("sign", 1);
    s.on_axis_rule = parse_rule(j.value("on_axis_rule", std::string("NORMAL")));
    s.use_xy = j.value("variables", std::string("qXY")) == "qXY";
    return s;
}

nlohmann::json SchemeRule::to_json() const {
    return {{"weighted", kind_name(weighted)}, {"anchor", anchor_name(anchor)},
            {"offset", offset},                {"sign", sign},
            {"on_axis_rule", rule_name(on_axis_rule)}, {"status", status}};
}

SchemeRule SchemeRule::from_json(const nlohmann::json& j) {
    SchemeRule r;
    r.weighted = parse_kind(j.at("weighted").get<std::string>());
    r.anchor = parse_anchor(j.at("anchor").get<std::string>());
    r.offset = j.at("offset").get<int>();
    r.sign = j.value("sign", 1);
    if (r.sign != 1 && r.sign != -1) throw std::invalid_argument("scheme sign must be +1 or -1");
    r.on_axis_rule = parse_rule(j.value("on_axis_rule", std::string("NORMAL")));
    r.status = j.value("status", std::string("fixed"));
    return r;
}

const SchemeRule& CalibrationTable::rule(Variant v) const {
    auto it = rules.find(v);
    if (it == rules.end()) throw std::invalid_argument(std::string("calibration table has no entry for ") + variant_name(v));
    return it->second;
}

nlohmann::json CalibrationTable::to_json() const {
    nlohmann::json schemes = nlohmann::json::object();
    for (const auto& [v, r] : rules) schemes[variant_name(v)] = r.to_json();
    return {{"version", version}, {"schemes", schemes}};
}

CalibrationTable CalibrationTable::from_json(const nlohmann::json& j) {
    CalibrationTable t;
    t.version = j.at("version").get<int>();
    if (t.version != 1) throw std::invalid_argument("unsupported calibration table version");
    for (const auto& [name, rule] : j.at("schemes").items()) t.rules[parse_variant(name)] = SchemeRule::from_json(rule);
    return t;
}

CalibrationTable CalibrationTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open calibration table: " + path);
    return from_json(nlohmann::json::parse(in));
}

void CalibrationTable::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write calibration table: " + path);
    out << to_json().dump(2) << "\n";
}

const CalibrationTable& default_calibration() {
    static const CalibrationTable table = [] {
        CalibrationTable t;
        auto rule = [](LozengeKind k, Anchor a, int offset, int sign, AxisRule ar, const char* status) {
            SchemeRule r;
            r.weighted = k;
            r.anchor = a;
            r.offset = offset;
            r.sign = sign;
            r.on_axis_rule = ar;
            r.status = status;
            return r;
        };
        using K = LozengeKind;
        t.rules[Variant::S] = rule(K::Vertical, Anchor::BaseMid, 0, 1, AxisRule::Normal, "fixed");
        t.rules[Variant::Sprime] = rule(K::Right, Anchor::Rows, 0, 1, AxisRule::Normal, "provisional");
        t.rules[Variant::Q] = rule(K::Vertical, Anchor::Zigzag, -1, 1, AxisRule::Normal, "fixed");
        t.rules[Variant::Qprime] = rule(K::Vertical, Anchor::Zigzag, 0, 1, AxisRule::Half, "calibrated");
        t.rules[Variant::Sbase] = rule(K::Vertical, Anchor::BaseLeft, 1, 1, AxisRule::Normal, "fixed");
        t.rules[Variant::SprimeBase] = rule(K::Right, Anchor::Rows, 0, 1, AxisRule::Normal, "calibrated");
        t.rules[Variant::P] = rule(K::Vertical, Anchor::Zigzag, -1, 1, AxisRule::Normal, "fixed");
        t.rules[Variant::Pprime] = rule(K::Vertical, Anchor::Zigzag, 0, 1, AxisRule::Half, "calibrated");
        return t;
    }();
    return table;
}

std::size_t Region::up_count() const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.is_up(); }));
}

std::size_t Region::down_count() const { return cells.size() - up_count(); }

nlohmann::json Region::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const Cell& c : cells) cs.push_back({{"row", c.row}, {"h", c.h}, {"orient", c.is_up() ? "UP" : "DOWN"}});
    return {{"family", family}, {"params", params}, {"cells", cs}, {"scheme", scheme.to_json()}};
}

WeightScheme resolve_scheme(Variant v, const SchemeRule& rule, const AxisGeometry& g) {
    WeightScheme s;
    s.variant = v;
    s.weighted = rule.weighted;
    s.sign = rule.sign;
    s.on_axis_rule = rule.on_axis_rule;
    s.use_xy = uses_xy(v);
    int base = 0;
    switch (rule.anchor) {
        case Anchor::Zigzag: base = 0; break;
        case Anchor::Rows: base = g.rows; break;
        case Anchor::BaseLeft: base = g.base_left; break;
        case Anchor::BaseMid: base = (g.base_left + g.base_right) / 2; break;
        case Anchor::BaseRight: base = g.base_right; break;
    }
    s.axis_h = base + rule.offset;
    return s;
}

void validate_dents(const Dents& d, int max_pos, const char* what) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 1 || d[i] > max_pos)
            throw std::invalid_argument(std::string(what) + " positions must lie in [1, " + std::to_string(max_pos) + "]");
        if (i > 0 && d[i] <= d[i - 1]) throw std::invalid_argument(std::string(what) + " positions must be strictly increasing");
    }
}

namespace {

void add_trapezoid_rows(std::set<Cell>& cells, int x, int rows) {
    for (int r = 1; r <= rows; ++r) {
        for (int h = -r; h <= 2 * x + r - 2; h += 2) cells.insert(up_cell(r, h));
        for (int h = -r + 1; h <= 2 * x + r - 3; h += 2) cells.insert(down_cell(r, h));
    }
}

void remove_cell(std::set<Cell>& cells, const Cell& c) {
    if (!cells.erase(c)) throw std::logic_error("dent cell missing from shape: " + cell_text(c));
}

}  // namespace

Region build_two_sided(Variant v, int x, const Dents& a, const Dents& b, const SchemeRule& rule) {
    if (x < 0) throw std::invalid_argument("x must be non-negative");
    const int rows = static_cast<int>(a.size() + b.size());
    validate_dents(a, rows, "left dent");
    validate_dents(b, rows, "right dent");
    if (x == 0 && !a.empty() && !b.empty() && a.front() == 1 && b.front() == 1)
        throw std::invalid_argument("with x = 0 the left and right dents in row 1 coincide");
    Region r;
    r.family = variant_name(v);
    r.params = {{"x", x}, {"left", a}, {"right", b}};
    add_trapezoid_rows(r.cells, x, rows);
    for (int row : a) remove_cell(r.cells, up_cell(row, -row));
    for (int row : b) remove_cell(r.cells, up_cell(row, 2 * x + row - 2));
    r.scheme = resolve_scheme(v, rule, {rows, -rows, 2 * x + rows});
    r.mirror_center = x;
    return r;
}

Region build_quartered(Variant v, int x, const Dents& a, const SchemeRule& rule) {
    if (x < 0) throw std::invalid_argument("x must be non-negative");
    const int m = static_cast<int>(a.size());
    validate_dents(a, 2 * m, "dent");
    Region r;
    r.family = variant_name(v);
    r.params = {{"x", x}, {"dents", a}};
    for (int row = 1; row <= 2 * m; ++row) {
        for (int h = left_zigzag(row); h <= 2 * x + row - 2; h += 2) r.cells.insert(up_cell(row, h));
        for (int h = left_zigzag(row - 1); h <= 2 * x + row - 3; h += 2) r.cells.insert(down_cell(row, h));
    }
    for (int row : a) remove_cell(r.cells, up_cell(row, 2 * x + row - 2));
    r.scheme = resolve_scheme(v, rule, {2 * m, 0, 2 * x + 2 * m});
    return r;
}

Region build_base(Variant v, int a, int b, const Dents& s, const SchemeRule& rule) {
    if (a < 0 || b < 0) throw std::invalid_argument("side lengths must be non-negative");
    if (static_cast<int>(s.size()) != b) throw std::invalid_argument("the number of base dents must equal b");
    validate_dents(s, a + b, "base dent");
    Region r;
    r.family = variant_name(v);
    r.params = {{"a", a}, {"b", b}, {"dents", s}};
    add_trapezoid_rows(r.cells, a, b);
    for (int pos : s) remove_cell(r.cells, up_cell(b, -b + 2 * (pos - 1)));
    r.scheme = resolve_scheme(v, rule, {b, -b, 2 * a + b});
    r.mirror_center = a;
    return r;
}

Region build_halved(Variant v, int x, int n, const SchemeRule& rule) {
    if (x < 0 || n < 0) throw std::invalid_argument("x and n must be non-negative");
    Region r;
    r.family = variant_name(v);
    r.params = {{"x", x}, {"n", n}};
    auto right = [&](int k) { return 2 * x + std::min(k, 2 * n - k); };
    for (int row = 1; row <= 2 * n; ++row) {
        for (int h = left_zigzag(row); h <= right(row) - 2; h += 2) r.cells.insert(up_cell(row, h));
        for (int h = left_zigzag(row - 1); h <= right(row - 1) - 2; h += 2) r.cells.insert(down_cell(row, h));
    }
    r.scheme = resolve_scheme(v, rule, {2 * n, 0, 2 * x});
    return r;
}

Region build_S(int x, const Dents& a, const Dents& b, const CalibrationTable& t) {
    return build_two_sided(Variant::S, x, a, b, t.rule(Variant::S));
}
Region build_Sprime(int x, const Dents& a, const Dents& b, const CalibrationTable& t) {
    return build_two_sided(Variant::Sprime, x, a, b, t.rule(Variant::Sprime));
}
Region build_Q(int x, const Dents& a, const CalibrationTable& t) {
    return build_quartered(Variant::Q, x, a, t.rule(Variant::Q));
}
Region build_Qprime(int x, const Dents& a, const CalibrationTable& t) {
    return build_quartered(Variant::Qprime, x, a, t.rule(Variant::Qprime));
}
Region build_S_base(int a, int b, const Dents& s, const CalibrationTable& t) {
    return build_base(Variant::Sbase, a, b, s, t.rule(Variant::Sbase));
}
Region build_Sprime_base(int a, int b, const Dents& s, const CalibrationTable& t) {
    return build_base(Variant::SprimeBase, a, b, s, t.rule(Variant::SprimeBase));
}
Region build_P(int x, int n, const CalibrationTable& t) { return build_halved(Variant::P, x, n, t.rule(Variant::P)); }
Region build_Pprime(int x, int n, const CalibrationTable& t) {
    return build_halved(Variant::Pprime, x, n, t.rule(Variant::Pprime));
}

bool tileable_S(const Dents& a, const Dents& b) {
    const int rows = static_cast<int>(a.size() + b.size());
    for (int t = 1; t <= rows; ++t) {
        auto below = [t](const Dents& d) { return std::count_if(d.begin(), d.end(), [t](int v) { return v <= t; }); };
        if (below(a) + below(b) > t) return false;
    }
    return true;
}

bool tileable_Q(const Dents& a) {
    const int m = static_cast<int>(a.size());
    for (int t = 1; t <= m; ++t) {
        if (std::count_if(a.begin(), a.end(), [t](int v) { return v <= 2 * t; }) > t) return false;
    }
    return true;
}

bool is_valid_tiling(const Region& r, const Tiling& t) {
    std::set<Cell> covered;
    for (const Lozenge& l : t) {
        auto check = lozenge_between(l.up, l.down);
        if (!check || check->kind != l.kind) return false;
        if (!r.contains(l.up) || !r.contains(l.down)) return false;
        if (!covered.insert(l.up).second || !covered.insert(l.down).second) return false;
    }
    return covered.size() == r.cells.size();
}

LaurentPoly tiling_weight(const Region& r, const Tiling& t) {
    LaurentPoly w = 1;
    for (const Lozenge& l : t) w *= r.scheme.weight(l);
    return w;
}

std::vector<Cell> path_sources(const Region& r) {
    std::vector<Cell> out;
    for (const Cell& c : r.cells)
        if (c.is_up() && !r.contains(down_cell(c.row, c.h - 1))) out.push_back(c);
    return out;
}

std::vector<Cell> path_sinks(const Region& r) {
    std::vector<Cell> out;
    for (const Cell& c : r.cells)
        if (!c.is_up() && !r.contains(up_cell(c.row, c.h + 1))) out.push_back(c);
    return out;
}

std::optional<Tiling> canonical_tiling(const Region& r) {
    std::vector<Cell> sources = path_sources(r);
    std::vector<Cell> sinks = path_sinks(r);
    if (sources.size() != sinks.size()) return std::nullopt;
    Tiling tiling;
    std::set<Cell> used;
    auto place = [&](const Cell& up, const Cell& down) {
        auto l = lozenge_between(up, down);
        if (!l || !r.contains(up) || !r.contains(down)) return false;
        if (!used.insert(up).second || !used.insert(down).second) return false;
        tiling.push_back(*l);
        return true;
    };
    for (std::size_t k = 0; k < sources.size(); ++k) {
        Cell cur = sources[k];
        const Cell& sink = sinks[k];
        if (sink.row < cur.row) return std::nullopt;
        bool reached = false;
        while (cur.row < sink.row) {
            Cell below = down_cell(cur.row + 1, cur.h);
            if (!place(cur, below)) return std::nullopt;
            reached = below == sink;
            cur = up_cell(cur.row + 1, cur.h + 1);
        }
        while (!reached) {
            Cell right = down_cell(cur.row, cur.h + 1);
            if (!place(cur, right)) return std::nullopt;
            if (right == sink) break;
            if (right.h > sink.h) return std::nullopt;
            cur = up_cell(cur.row, cur.h + 2);
        }
    }
    for (const Cell& c : r.cells) {
        if (!c.is_up() || used.count(c)) continue;
        if (!place(c, down_cell(c.row, c.h - 1))) return std::nullopt;
    }
    std::sort(tiling.begin(), tiling.end());
    if (!is_valid_tiling(r, tiling)) return std::nullopt;
    return tiling;
}

namespace {

std::vector<Cell> partners(const Region& r, const Cell& c) {
    std::vector<Cell> cand;
    if (c.is_up()) {
        cand = {down_cell(c.row, c.h - 1), down_cell(c.row, c.h + 1), down_cell(c.row + 1, c.h)};
    } else {
        cand = {up_cell(c.row, c.h + 1), up_cell(c.row, c.h - 1), up_cell(c.row - 1, c.h)};
    }
    std::vector<Cell> out;
    for (const Cell& p : cand)
        if (r.contains(p)) out.push_back(p);
    return out;
}

}  // namespace

ForcedReduction reduce_forced(const Region& r) {
    ForcedReduction out;
    out.region = r;
    bool changed = true;
    while (changed && !out.dead) {
        changed = false;
        for (const Cell& c : out.region.cells) {
            auto ps = partners(out.region, c);
            if (ps.empty()) {
                out.dead = true;
                break;
            }
            if (ps.size() == 1) {
                Lozenge l = *lozenge_between(c, ps.front());
                out.factor *= out.region.scheme.weight(l);
                out.forced.push_back(l);
                out.region.cells.erase(l.up);
                out.region.cells.erase(l.down);
                changed = true;
                break;
            }
        }
    }
    out.region.params["reduced"] = true;
    return out;
}

Region delete_cells(const Region& r, const std::vector<Cell>& cells) {
    Region out = r;
    for (const Cell& c : cells) {
        if (!out.cells.erase(c)) throw std::invalid_argument("cell not in region: " + cell_text(c));
    }
    return out;
}

Region add_cells(const Region& r, const std::vector<Cell>& cells) {
    Region out = r;
    for (const Cell& c : cells) {
        if (!out.cells.insert(c).second) throw std::invalid_argument("cell already in region: " + cell_text(c));
    }
    return out;
}

Cell dent_cell(const Region& r, Side side, int row) {
    const Variant v = parse_variant(r.family);
    const int x = r.params.at("x").get<int>();
    if (v == Variant::S || v == Variant::Sprime) {
        return side == Side::Left ? up_cell(row, -row) : up_cell(row, 2 * x + row - 2);
    }
    if ((v == Variant::Q || v == Variant::Qprime) && side == Side::Right) return up_cell(row, 2 * x + row - 2);
    throw std::invalid_argument(std::string("no dent on that side for family ") + r.family);
}

Region fill_dent(const Region& r, Side side, int row) {
    const Variant v = parse_variant(r.family);
    const char* key = (v == Variant::S || v == Variant::Sprime) ? (side == Side::Left ? "left" : "right") : "dents";
    Dents d = r.params.at(key).get<Dents>();
    auto it = std::find(d.begin(), d.end(), row);
    if (it == d.end()) throw std::invalid_argument("no dent at row " + std::to_string(row));
    Region out = add_cells(r, {dent_cell(r, side, row)});
    d.erase(it);
    out.params[key] = d;
    nlohmann::json filled = out.params.value("filled", nlohmann::json::array());
    filled.push_back({{"side", side == Side::Left ? "left" : "right"}, {"row", row}});
    out.params["filled"] = filled;
    return out;
}

Region reflect(const Region& r) {
    if (!r.mirror_center) throw std::invalid_argument("family " + r.family + " has no reflection axis");
    const int c = *r.mirror_center;
    Region out = r;
    out.cells.clear();
    for (const Cell& cell : r.cells) out.cells.insert({cell.row, 2 * c - cell.h - 2, cell.orient});
    WeightScheme& s = out.scheme;
    switch (r.scheme.weighted) {
        case LozengeKind::Vertical: s.axis_h = 2 * c - r.scheme.axis_h; break;
        case LozengeKind::Right:
            s.weighted = LozengeKind::Left;
            s.sign = -r.scheme.sign;
            s.axis_h = r.scheme.axis_h + 1 - c;
            break;
        case LozengeKind::Left:
            s.weighted = LozengeKind::Right;
            s.sign = -r.scheme.sign;
            s.axis_h = r.scheme.axis_h + c - 1;
            break;
    }
    out.params["reflected"] = !r.params.value("reflected", false);
    return out;
}

namespace {

std::string render_grid(const Region& r, const std::map<Cell, char>& glyph) {
    if (r.cells.empty()) return "(empty region)\n";
    int hmin = r.cells.begin()->h, hmax = hmin, rmin = r.cells.begin()->row, rmax = rmin;
    for (const Cell& c : r.cells) {
        hmin = std::min(hmin, c.h);
        hmax = std::max(hmax, c.h);
        rmin = std::min(rmin, c.row);
        rmax = std::max(rmax, c.row);
    }
    std::ostringstream os;
    for (int row = rmin; row <= rmax; ++row) {
        std::string line(static_cast<std::size_t>(hmax - hmin + 1), ' ');
        for (int h = hmin; h <= hmax; ++h) {
            for (Orient o : {Orient::Up, Orient::Down}) {
                auto it = glyph.find({row, h, o});
                if (it != glyph.end()) line[static_cast<std::size_t>(h - hmin)] = it->second;
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        std::string label = std::to_string(row);
        os << std::string(label.size() < 3 ? 3 - label.size() : 0, ' ') << label << " | " << line << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_ascii(const Region& r) {
    std::map<Cell, char> glyph;
    for (const Cell& c : r.cells) glyph[c] = c.is_up() ? '^' : 'v';
    return render_grid(r, glyph);
}

std::string render_tiling_ascii(const Region& r, const Tiling& t) {
    std::map<Cell, char> glyph;
    for (const Cell& c : r.cells) glyph[c] = '?';
    for (const Lozenge& l : t) {
        char g = l.kind == LozengeKind::Vertical ? '|' : (l.kind == LozengeKind::Left ? 'L' : 'R');
        glyph[l.up] = g;
        glyph[l.down] = g;
    }
    return render_grid(r, glyph);
}

nlohmann::json tiling_to_json(const Tiling& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Lozenge& l : t) {
        arr.push_back({{"up", {{"row", l.up.row}, {"h", l.up.h}}},
                       {"down", {{"row", l.down.row}, {"h", l.down.h}}},
                       {"kind", kind_name(l.kind)}});
    }
    return arr;
}

}  // namespace lozenge
