#pragma once

#include "svir/fusion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace svir {

// Subgroup of the dimension-1 sector group, elements canonical and sorted.
struct SimpleCurrentGroup {
    long n = 1;
    std::vector<CosetSector> elements;
    std::optional<CosetSector> generator; // set when cyclic
    std::vector<long> invariant_factors;

    long order() const { return static_cast<long>(elements.size()); }
    bool contains(const CosetSector& x) const;
    friend bool operator==(const SimpleCurrentGroup& a, const SimpleCurrentGroup& b) {
        return a.n == b.n && a.elements == b.elements;
    }
};

// The abelian group of all 4n+8 dimension-1 sectors, phases ignored.
// Designated generators: sigma = (0,1,1); for even n also tau = (n,0,0)
// (n = 2 mod 4) or tau = (0,n+2,0) (n = 0 mod 4).
struct Dim1Group {
    long n = 1;
    std::vector<CosetSector> elements;
    CosetSector sigma;
    std::optional<CosetSector> tau;
    std::vector<long> invariant_factors;
    long order() const { return static_cast<long>(elements.size()); }
};

Dim1Group dim1_group(long n);

std::vector<CosetSector> phase_one_dim1_sectors(long n);

// Brute force: all subgroups of the dimension-1 group whose elements all have
// statistics phase 1, maximal under inclusion.
std::vector<SimpleCurrentGroup> phase_one_maximal_subgroups(long n);

enum class CaseTag { A, B, C, D };

const char* case_tag_name(CaseTag t);

struct CasePrediction {
    CaseTag case_tag = CaseTag::A;
    long k = 0; // minimal exponent of the relevant case
    // Case B resolves into one of two shapes depending on the phase of
    // (0,k/2,0); the observed value is recorded here.
    std::optional<Phase> case_b_half_phase;
    std::vector<SimpleCurrentGroup> groups;
};

// Closed-form maximal phase-1 subgroup(s) per the case split on n mod 16.
CasePrediction case_formula_prediction(long n);

enum class ExtensionKind { SimpleCurrent, ConformalEmbedding, Mirror, Combined };

const char* extension_kind_tag(ExtensionKind k);

struct ExtensionRecord {
    long n = 1;
    ExtensionKind kind = ExtensionKind::SimpleCurrent;
    // Dual canonical endomorphism: multiplicity-one sum of these sectors.
    std::vector<CosetSector> sectors;
    std::optional<CosetSector> generator; // for simple-current records
    std::string provenance;

    FusionVector dual_canonical_endomorphism() const;
};

// The hard-coded exceptional entries: three at n=10, one at n=28.
std::vector<ExtensionRecord> exceptional_catalog();

// Complete list for level n: one simple-current record per subgroup of each
// maximal phase-1 subgroup, plus the exceptional entries, deduplicated by
// sector set (an exceptional entry wins over a coinciding simple-current one).
std::vector<ExtensionRecord> classify(long n);

// Subgroup generated by a set of dimension-1 sectors.
SimpleCurrentGroup generated_subgroup(long n, const std::vector<CosetSector>& gens);

} // namespace svir
