#pragma once

#include <functional>
#include <string>

#include "lrkit/symmetries.hpp"
#include "lrkit/tableaux.hpp"

namespace lrkit {

// All boundary triples (mu, nu, lam) with 01-words in binom([n], d).
std::vector<BoundaryTriple> all_boundary_triples(int n, int d);

// All LR tableaux of shape lam^v / mu and content nu, in generation order
// (letters tried increasingly along the row word).
std::vector<SkewTableau> enumerate_lr(const BoundaryTriple& b);

// All Yamanouchi words of content nu.
std::vector<Word> yamanouchi_words(const Partition& nu);

long long lr_coefficient(const BoundaryTriple& b);
// Independent second route: filter Yamanouchi words of content nu by
// whether they fill the shape semistandardly.
long long lr_coefficient_via_words(const BoundaryTriple& b);

struct SweepViolation {
    std::string what;
    std::string triple;
    std::string op;
};

struct SweepReport {
    int n = 0;
    int d = 0;
    long long triples = 0;
    long long tableaux = 0;
    std::vector<SweepViolation> violations;

    bool ok() const { return violations.empty(); }
};

using ApplyFn = std::function<SkewTableau(GroupElement, const SkewTableau&)>;

// For every triple and every group element: images valid, boundaries as
// dictated, map injective, counts preserved.  apply_fn is swappable so a
// corrupted map can be detected in tests.
SweepReport verify_symmetry_sweep(int n, int d, const ApplyFn& apply_fn = {});

std::string report_to_json(const SweepReport& r);
std::string report_to_table(const SweepReport& r);

// Worker cap from LRKIT_THREADS (defaults to hardware concurrency).
int thread_cap();

}  // namespace lrkit
