#pragma once

#include "svir/exactla.hpp"
#include "svir/rational.hpp"
#include "svir/superalgebra.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace svir {

enum class SectorType { NS, R };

inline const char* sector_tag(SectorType t) { return t == SectorType::NS ? "NS" : "R"; }

struct HighestWeight {
    Rational c, h, q;
    SectorType type = SectorType::NS;

    // NS requires h >= 0; R requires h >= c/24.
    void validate() const;
    bool ramond_vacuum() const { return type == SectorType::R && h == c * Rational(1, 24); }
    // Two-dimensional lowest energy space iff R with h > c/24.
    bool two_dim_lowest() const { return type == SectorType::R && !ramond_vacuum(); }
};

// Lowest-space labels: Omega for NS and the Ramond vacuum case; OmegaMinus /
// OmegaPlus span the two-dimensional Ramond lowest space, with
// OmegaPlus = G^-_0 OmegaMinus kept unnormalized so all Gram data stays
// rational.
enum class LowestTag { Omega, OmegaMinus, OmegaPlus };

struct StateMonomial {
    LowestTag tag = LowestTag::Omega;
    // Creation modes (all indices negative), sorted ascending in the PBW
    // order Central < L < J < G+ < G-, index ascending; fermionic modes
    // appear at most once.
    std::vector<GeneratorId> ops;

    Rational level() const;
    long charge_offset() const; // #G+ - #G- - (tag == OmegaPlus)

    friend bool operator==(const StateMonomial& x, const StateMonomial& y) {
        return x.tag == y.tag && x.ops == y.ops;
    }
    friend std::strong_ordering operator<=>(const StateMonomial& x, const StateMonomial& y);

    std::string str() const;
};

// Formal linear combination of PBW monomials with rational coefficients.
using Combo = std::map<StateMonomial, Rational>;

Combo combo_add(const Combo& x, const Combo& y);
Combo combo_scale(const Rational& s, const Combo& x);

struct BlockKey {
    Rational level;
    Rational charge;
    friend bool operator==(const BlockKey& a, const BlockKey& b) {
        return a.level == b.level && a.charge == b.charge;
    }
    friend std::strong_ordering operator<=>(const BlockKey& a, const BlockKey& b) {
        if (auto c = a.level <=> b.level; c != 0)
            return c;
        return a.charge <=> b.charge;
    }
};

enum class ZeroMode { G0plus, G0minus, L0, J0 };

// Truncated lowest-weight module with exact Shapovalov data. Immutable after
// construction.
class ModuleHandle {
  public:
    ModuleHandle(HighestWeight hw, Rational cutoff);

    const HighestWeight& hw() const { return hw_; }
    const Rational& cutoff() const { return cutoff_; }
    Rational flow_param() const { return hw_.type == SectorType::NS ? Rational(0) : Rational(1, 2); }

    const std::map<BlockKey, std::vector<StateMonomial>>& blocks() const { return blocks_; }
    const std::vector<StateMonomial>& block_basis(const BlockKey& key) const;

    const Mat& gram(const BlockKey& key) const;
    std::size_t gram_rank(const Rational& level, const Rational& charge) const;
    bool gram_is_psd() const;
    // First non-PSD block in block order, if any.
    std::optional<BlockKey> first_non_psd_block() const;

    // Per level <= cutoff: (h + level, dimension of the irreducible quotient
    // at that level).
    std::vector<std::pair<Rational, long>> character_coeffs() const;

    int grading_sign(const StateMonomial& s) const;

    // Left action of one mode on a PBW monomial, straightened back into the
    // PBW basis. Valid for any mode of the module's algebra.
    const Combo& apply(const GeneratorId& g, const StateMonomial& m) const;
    Combo apply(const GeneratorId& g, const Combo& v) const;

    Rational inner(const StateMonomial& u, const Combo& v) const;
    Rational inner(const StateMonomial& u, const StateMonomial& v) const;

    // Matrix of a mode from the given block to its target block, rows indexed
    // by the target basis. Entries are exact only when both levels are within
    // the cutoff.
    Mat mode_matrix(const GeneratorId& g, const BlockKey& from) const;

    // Matrix of a zero mode on the whole level subspace (all charges, basis
    // concatenated in block order). G0+- require a Ramond module.
    Mat zero_mode_matrix(ZeroMode which, const Rational& level) const;

    // Basis of the level subspace in the order used by zero_mode_matrix.
    std::vector<StateMonomial> level_basis(const Rational& level) const;
    std::vector<Rational> level_charges(const Rational& level) const;

  private:
    void enumerate_basis();
    Combo apply_lowest(const GeneratorId& g, LowestTag tag) const;
    Rational lowest_inner(LowestTag a, LowestTag b) const;

    HighestWeight hw_;
    Rational cutoff_;
    std::map<BlockKey, std::vector<StateMonomial>> blocks_;
    std::map<BlockKey, Mat> gram_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<GeneratorId, StateMonomial>, Combo> apply_cache_;
};

ModuleHandle build_module(const HighestWeight& hw, const Rational& cutoff);

} // namespace svir
