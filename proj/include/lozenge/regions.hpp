#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "lozenge/exactalg.hpp"
#include "lozenge/qformulas.hpp"

namespace lozenge {

// Rows count from 1 at the top. Horizontal line k lies under row k.
// A lattice vertex (c, k) has column c with c = k (mod 2).
// UP(r, h) has vertices (h, r), (h+2, r), (h+1, r-1); h = r (mod 2).
// DOWN(r, h) has vertices (h, r-1), (h+2, r-1), (h+1, r); h = r+1 (mod 2).
enum class Orient { Up, Down };

struct Cell {
    int row = 0;
    int h = 0;
    Orient orient = Orient::Up;

    auto operator<=>(const Cell&) const = default;
    bool is_up() const { return orient == Orient::Up; }
};

Cell up_cell(int row, int h);
Cell down_cell(int row, int h);
std::string cell_text(const Cell& c);

// Lozenge orientation, named by the partner of UP(r, h):
// Vertical pairs with DOWN(r+1, h), Left with DOWN(r, h-1), Right with DOWN(r, h+1).
enum class LozengeKind { Left, Vertical, Right };

struct Lozenge {
    Cell up;
    Cell down;
    LozengeKind kind = LozengeKind::Vertical;

    auto operator<=>(const Lozenge&) const = default;
};

std::optional<Lozenge> lozenge_between(const Cell& a, const Cell& b);
const char* kind_name(LozengeKind k);

enum class Variant { S, Sprime, Q, Qprime, Sbase, SprimeBase, P, Pprime, Custom };
enum class AxisRule { Normal, Half };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& s);

// Lozenges of kind `weighted` get (X q^i + Y q^-i) / 2, or (q^i + q^-i) / 2 when
// use_xy is false, with i = sign * (label - axis_h). The label of a lozenge whose
// UP cell is (r, h) is h + 1 for Vertical, (h + 3r) / 2 for Right, (3r - h) / 2 for Left.
// Under AxisRule::Half an i = 0 lozenge weighs 1/2. Other lozenges weigh 1.
struct WeightScheme {
    Variant variant = Variant::Custom;
    LozengeKind weighted = LozengeKind::Vertical;
    int axis_h = 0;
    int sign = 1;
    AxisRule on_axis_rule = AxisRule::Normal;
    bool use_xy = true;

    std::optional<int> index(const Lozenge& l) const;
    LaurentPoly weight(const Lozenge& l) const;
    nlohmann::json to_json() const;
    static WeightScheme from_json(const nlohmann::json& j);
    bool operator==(const WeightScheme&) const = default;
};

// How a family's weighted axis is placed relative to its geometry.
enum class Anchor { Zigzag, Rows, BaseLeft, BaseMid, BaseRight };

struct SchemeRule {
    LozengeKind weighted = LozengeKind::Vertical;
    Anchor anchor = Anchor::BaseMid;
    int offset = 0;
    int sign = 1;
    AxisRule on_axis_rule = AxisRule::Normal;
    std::string status = "fixed";

    nlohmann::json to_json() const;
    static SchemeRule from_json(const nlohmann::json& j);
    bool operator==(const SchemeRule&) const = default;
};

struct CalibrationTable {
    int version = 1;
    std::map<Variant, SchemeRule> rules;

    const SchemeRule& rule(Variant v) const;
    nlohmann::json to_json() const;
    static CalibrationTable from_json(const nlohmann::json& j);
    static CalibrationTable load(const std::string& path);
    void save(const std::string& path) const;
};

const CalibrationTable& default_calibration();

struct Region {
    std::string family;
    nlohmann::json params = nlohmann::json::object();
    std::set<Cell> cells;
    WeightScheme scheme;
    // Reflection maps column h to 2 * mirror_center - h; present for symmetric families.
    std::optional<int> mirror_center;

    bool contains(const Cell& c) const { return cells.count(c) != 0; }
    std::size_t up_count() const;
    std::size_t down_count() const;
    bool balanced() const { return up_count() == down_count(); }
    nlohmann::json to_json() const;
};

struct AxisGeometry {
    int rows = 0;
    int base_left = 0;
    int base_right = 0;
};

WeightScheme resolve_scheme(Variant v, const SchemeRule& rule, const AxisGeometry& g);

void validate_dents(const Dents& d, int max_pos, const char* what);

Region build_S(int x, const Dents& a, const Dents& b, const CalibrationTable& t = default_calibration());
Region build_Sprime(int x, const Dents& a, const Dents& b, const CalibrationTable& t = default_calibration());
Region build_Q(int x, const Dents& a, const CalibrationTable& t = default_calibration());
Region build_Qprime(int x, const Dents& a, const CalibrationTable& t = default_calibration());
Region build_S_base(int a, int b, const Dents& s, const CalibrationTable& t = default_calibration());
Region build_Sprime_base(int a, int b, const Dents& s, const CalibrationTable& t = default_calibration());
Region build_P(int x, int n, const CalibrationTable& t = default_calibration());
Region build_Pprime(int x, int n, const CalibrationTable& t = default_calibration());

// Shape builders used by the calibration search with an explicit rule.
Region build_two_sided(Variant v, int x, const Dents& a, const Dents& b, const SchemeRule& rule);
Region build_quartered(Variant v, int x, const Dents& a, const SchemeRule& rule);
Region build_base(Variant v, int a, int b, const Dents& s, const SchemeRule& rule);
Region build_halved(Variant v, int x, int n, const SchemeRule& rule);

bool tileable_S(const Dents& a, const Dents& b);
bool tileable_Q(const Dents& a);

using Tiling = std::vector<Lozenge>;

bool is_valid_tiling(const Region& r, const Tiling& t);
LaurentPoly tiling_weight(const Region& r, const Tiling& t);

// Path sources and sinks of the lozenge-path encoding: an UP cell with no DOWN to its
// left starts a path, a DOWN cell with no UP to its right ends one.
std::vector<Cell> path_sources(const Region& r);
std::vector<Cell> path_sinks(const Region& r);

// Hook tiling: the k-th source (top to bottom) runs down by vertical lozenges to the
// row of the k-th sink, then right to it; everything else is covered by left lozenges.
std::optional<Tiling> canonical_tiling(const Region& r);

struct ForcedReduction {
    Region region;
    LaurentPoly factor = 1;
    std::vector<Lozenge> forced;
    bool dead = false;  // some cell lost every partner
};

ForcedReduction reduce_forced(const Region& r);

Region delete_cells(const Region& r, const std::vector<Cell>& cells);
Region add_cells(const Region& r, const std::vector<Cell>& cells);

enum class Side { Left, Right };

// The UP cell removed by a dent at `row` on the given side of an S or Q region.
Cell dent_cell(const Region& r, Side side, int row);
Region fill_dent(const Region& r, Side side, int row);
Region reflect(const Region& r);

std::string render_ascii(const Region& r);
std::string render_tiling_ascii(const Region& r, const Tiling& t);

nlohmann::json tiling_to_json(const Tiling& t);

}  // namespace lozenge
