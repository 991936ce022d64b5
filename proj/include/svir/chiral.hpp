#pragma once

#include "svir/exactla.hpp"
#include "svir/module.hpp"
#include "svir/unitarity.hpp"

#include <map>
#include <vector>

namespace svir {

// Element of the chiral ring Z Delta_chir: integer combination of the chiral
// labels (l,-l), keyed by l.
using ChiralRingElement = std::map<long, long>;

bool is_chiral(const Rational& c, const Rational& h, const Rational& q);
bool is_antichiral(const Rational& c, const Rational& h, const Rational& q);

// (l1,-l1) * (l2,-l2) = (l1+l2, -l1-l2) when l1+l2 <= n, else 0; extended
// bilinearly (the truncation of the fermionic fusion rules to chiral labels).
ChiralRingElement chiral_product(const ChiralRingElement& x, const ChiralRingElement& y, long n);

// NS labels with h = q/2: exactly (l,-l), l = 0..n.
std::vector<DiscreteLabel> chiral_labels(long n);

// R labels with h = c/24.
std::vector<DiscreteLabel> ramond_vacuum_sectors(long n);

// Energy and charge of the original lowest vector inside the flowed module
// (not necessarily that module's minimum):
// h' = h + t q + (c/6) t^2, q' = q + (c/3) t.
std::pair<Rational, Rational> flow_lowest_vector(const Rational& c, const Rational& h,
                                                 const Rational& q, const Rational& t);

// Flow of a discrete label across sectors, computed by the module oracle:
// build the source module, reinterpret the grading operators through the
// flow with parameter t, locate the minimal-energy eigenspace of the
// irreducible quotient and match its exact (h', q') against the discrete
// labels of the target sector. t must be +-1/2.
DiscreteLabel flow_discrete_label(long n, const DiscreteLabel& label, SectorType source,
                                  const Rational& t, const Rational& cutoff = Rational(2));

// Integer index pairing of two R labels: 0 for inequivalent labels; for a
// label paired with itself, the even minus odd dimension of
// ker(L_0 - c/24) in the truncated module.
long index_pairing(const DiscreteLabel& pi1, const DiscreteLabel& pi2, long n,
                   const Rational& cutoff = Rational(2));

// Full pairing matrix over the Ramond vacuum labels.
std::vector<std::vector<long>> index_pairing_matrix(long n, const Rational& cutoff = Rational(2));

// Graded kernel route to the same integer: sum over levels of
// dim ker(Q|even) - dim ker(Q|odd) for Q = G_0^+ + G_0^-.
long index_via_supercharge_kernels(const DiscreteLabel& label, long n,
                                   const Rational& cutoff = Rational(2));

} // namespace svir
