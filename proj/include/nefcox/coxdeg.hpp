#pragma once

#include "nefcox/cohomology.hpp"

namespace nefcox {

enum class NefType {
    Anticanonical,
    ConicBundle,
    TwistedCubic,
    F2Type,
    AnticanonicalPullback,
    Other
};
std::string nef_type_name(NefType t);

struct NefClassification {
    NefType type = NefType::Other;
    Int square = 0;  // N^2
    Int kdeg = 0;    // -K.N
    // pullback data (AnticanonicalPullback only)
    Int degree = 0;                   // N^2 = K^2 of the final model
    bool dp_flag = false;             // no (-2)-curve survives the contractions
    std::vector<DivisorClass> trace;  // contracted (-1)-classes, in X coordinates
    std::optional<DivisorClass> surviving_root;  // a surviving (-2), X coordinates
    std::string warning;
};

enum class Necessity { Necessary, NotNecessary, Undetermined };
std::string necessity_name(Necessity n);

struct NecessityVerdict {
    Necessity status = Necessity::Undetermined;
    std::string rule;
    std::vector<DivisorClass> witness;  // auxiliary classes for lemma witnesses
    std::string note;
};

struct CandidateRow {
    DivisorClass cls;
    std::string category;  // "negative-curve" | "nef" | "ample-extra"
    std::optional<NefClassification> classification;
    NecessityVerdict verdict;
};

struct ReportSummary {
    std::size_t necessary_total = 0;
    std::size_t negative = 0;
    std::size_t conic_bundles = 0;   // necessary conic bundles
    std::size_t twisted_cubics = 0;  // necessary twisted cubics
    std::size_t anticanonical = 0;   // 1 when -K is a necessary degree
    std::size_t other_necessary = 0;
    std::size_t undetermined = 0;
};

struct Report {
    std::string name;
    SurfaceKind kind = SurfaceKind::Elliptic;
    int index = 1;
    std::size_t rank = 0;
    std::vector<CandidateRow> rows;
    ReportSummary summary;
};

// Negative curves, the Hilbert basis of the nef cone, and (index m >= 3
// only) the ample classes -alpha*K + E with 2 <= alpha < m.
std::vector<DivisorClass> candidate_degrees(const Surface& s);

NefClassification classify_nef(const Surface& s, const DivisorClass& n);

// Decisive rules. nullopt: no rule applies, the Koszul stage decides.
std::optional<NecessityVerdict> theorem_verdict(const Surface& s, const DivisorClass& n,
                                                const NefClassification& cls);

struct KoszulOptions {
    int pool_depth = 2;  // max number of Hilbert-basis summands in pool classes
};

std::optional<NecessityVerdict> koszul_pair_test(const Surface& s, const DivisorClass& d);
std::optional<NecessityVerdict> koszul_triple_test(const Surface& s, const DivisorClass& d,
                                                   const KoszulOptions& opt = {});
std::optional<NecessityVerdict> section_transfer_test(const Surface& s,
                                                      const DivisorClass& d);

// Negative curves of the surface orthogonal to N, and the number of
// connected components of their intersection graph.
std::vector<DivisorClass> orthogonal_negatives(const Surface& s, const DivisorClass& n);
std::size_t orthogonal_component_count(const Surface& s, const DivisorClass& n);

Report analyze(const Surface& s, const KoszulOptions& opt = {});

// Re-derives the facts behind a verdict from scratch; used by the suites.
bool verify_verdict(const Surface& s, const CandidateRow& row, std::string* why = nullptr);

}  // namespace nefcox
