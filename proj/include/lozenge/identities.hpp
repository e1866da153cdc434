#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "lozenge/enumerate.hpp"

namespace lozenge {

enum class Verdict { Pass, Fail, Skip };
const char* verdict_name(Verdict v);

struct CheckReport {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    std::string lhs;
    std::string rhs;
    Verdict verdict = Verdict::Skip;
    std::string detail;

    nlohmann::json to_json() const;
    std::string to_text() const;
    bool passed() const { return verdict == Verdict::Pass; }
};

struct CheckOptions {
    const CalibrationTable* table = &default_calibration();
    Engine engine = Engine::Brute;
};

// Memoized generating function keyed on the region's cells and scheme.
LaurentPoly cached_tgf(const Region& r, Engine e = Engine::Brute);

enum class RatioKind { S, Sprime, Q, Qprime, Sym };
const char* ratio_kind_name(RatioKind k);

// Checks M(x) * den == num * M(y) for the ratio formula num/den of the given kind.
// SYM uses the symmetric sum on S_{2x}(a; a) and the stated corollary ratio.
CheckReport check_ratio(RatioKind kind, int x, int y, const Dents& a, const Dents& b = {},
                        const CheckOptions& opt = {});

// Symmetric sum of S_{2x}(a; a) against the square of M(Q_x(a_1 - 1, ..., a_{m-1} - 1)).
CheckReport check_symmetric_split(int x, const Dents& a, const CheckOptions& opt = {});

enum class LemmaKind { Sbase, SprimeBase, P, Pprime, PCorrected, PprimeCorrected };
const char* lemma_kind_name(LemmaKind k);
// For Sbase/SprimeBase the parameters are (a, b, s); for the P kinds (x, n).
CheckReport check_lemma_formula(LemmaKind kind, int p1, int p2, const Dents& s = {}, const CheckOptions& opt = {});

CheckReport check_tileability_S(int x, const Dents& a, const Dents& b);
CheckReport check_tileability_Q(int x, const Dents& a);

enum class KuoVariant { Balanced, Plus1, Plus2 };
const char* kuo_variant_name(KuoVariant v);

struct KuoSelection {
    Cell u, v, w, s;
    KuoVariant variant = KuoVariant::Balanced;
};

// Cells on the outer face of the dual graph, in counterclockwise order, with
// consecutive repeats removed. A cell may appear more than once.
std::vector<Cell> outer_face_cells(const Region& r);

// Empty when the selection is valid, otherwise the reason. A cell met more than once on the
// outer face may use any of its occurrences for the cyclic order.
std::string kuo_selection_problem(const Region& g, const KuoSelection& sel);

CheckReport check_kuo(const Region& g, const KuoSelection& sel);

std::optional<KuoSelection> random_kuo_selection(const Region& g, KuoVariant v, std::mt19937_64& rng);

struct KuoInstance {
    Region graph;
    KuoSelection selection;
};

// The selections used in the inductive proofs for S (two dents filled) and Q (first dent filled).
std::optional<KuoInstance> proof_kuo_instance_S(int x, const Dents& a, const Dents& b, const CheckOptions& opt = {});
std::optional<KuoInstance> proof_kuo_instance_Q(int x, const Dents& a, const CheckOptions& opt = {});

// Six-term recurrence for S obtained from the PLUS2 condensation; SKIP outside its hypotheses.
CheckReport check_recurrence_S(int x, const Dents& a, const Dents& b, const CheckOptions& opt = {});
// Prefactor identity A = B = C of the S recurrence for the ratio formula.
CheckReport check_prefactor_S(int x, int y, const Dents& a, const Dents& b);

CheckReport check_recurrence_Q(int x, const Dents& a, const CheckOptions& opt = {});
CheckReport check_prefactor_Q(int x, int y, const Dents& a);

CheckReport check_recurrence_P(int x, int n, const CheckOptions& opt = {});
CheckReport check_recurrence_S_base(int a, int b, const Dents& s, const CheckOptions& opt = {});

// Cut along horizontal line `level`: M(R) = M(top) * M(bottom) when the top part is balanced.
CheckReport check_region_splitting(const Region& r, int level);

CheckReport check_reciprocity(int x, int y, const Dents& a);
CheckReport check_macmahon(int a, int b, int c);
CheckReport check_engines(const Region& r);

// All strictly increasing sequences of `count` values in [1, max].
std::vector<Dents> increasing_sequences(int count, int max);

}  // namespace lozenge
