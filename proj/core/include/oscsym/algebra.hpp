#pragma once

// Commutator engine: exact structure constants, bracket-table verification,
// the 4x4/6x6 isomorphism check, and the exhaustive subalgebra search.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "oscsym/catalog.hpp"
#include "oscsym/exact.hpp"

namespace oscsym {

// An ordered, labelled list of same-dimension matrices.  Labels are the
// row/column identities of every table computed from the set.
struct BasisSet {
    std::vector<std::string> labels;
    std::vector<ExactMatrix> mats;

    size_t size() const { return labels.size(); }
};

// Ready-made bases, labels in catalog enum order.
BasisSet full_basis_4x4(Ordering ordering);  // all fifteen (Traditional via reorder)
BasisSet full_basis_6x6();
BasisSet sp4_basis(Ordering ordering);  // the ten symplectic members
BasisSet sp4_basis_6x6();

// xy - yx exactly.
ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y);

// Solve target = sum_k c_k basis[k] exactly.  nullopt when target is
// outside the span; throws when the basis is linearly dependent (the
// expansion would not be unique).
std::optional<std::vector<GaussRational>> expand_in_basis(
    const ExactMatrix& target, const std::vector<ExactMatrix>& basis);

// Structure constants of a bracket-closed basis, stored against the
// convention [X_i, X_j] = sum_k f_ijk X_k with f Gaussian-rational (any
// i factors are absorbed into f).  Only i < j is stored; (j, i) is the
// negation.
class StructureTable {
  public:
    explicit StructureTable(int size);

    int size() const { return size_; }
    // Coefficient vector of [X_i, X_j]; antisymmetry handled internally.
    std::vector<GaussRational> coeff(int i, int j) const;
    void set_coeff(int i, int j, std::vector<GaussRational> c);

    bool operator==(const StructureTable& o) const;
    bool operator!=(const StructureTable& o) const { return !(*this == o); }

    // Structural invariants: antisymmetry is built in; Jacobi is checked
    // explicitly over all index triples.
    bool jacobi_holds() const;

  private:
    int size_;
    std::vector<std::vector<GaussRational>> upper_;  // (i,j) with i<j
};

// Computes the full table; throws NotClosedError naming the first pair
// whose bracket leaves the span.
StructureTable structure_constants(const BasisSet& basis);

// Pair-by-pair comparison of the computed table against an expected one.
struct PairCheck {
    int i, j;
    bool ok;
};
struct VerifyReport {
    std::vector<PairCheck> pairs;
    int mismatches = 0;
    bool pass = false;
};
VerifyReport verify_table(const BasisSet& basis, const StructureTable& expected);

// The reference bracket tables, encoded rule-by-rule.
//   - ten-generator table over kSp4Members order;
//   - fifteen-generator table over kAllGenerators order, with the [G,G]
//     line filled in as [Gi,Gj] = -i eps_ijk Lk (see catalog_notes()).
StructureTable expected_sp4_table();
StructureTable expected_sl4_table();

// Targeted single-bracket identities for the single-mode triples and the
// coupling construction (the combined set is not bracket-closed on its
// own, so these are spot identities rather than a full table).
struct IdentityCheck {
    std::string description;
    bool ok;
};
std::vector<IdentityCheck> verify_mode_triple(int mode);  // mode 1 or 2
std::vector<IdentityCheck> verify_coupling_identities();

// Exact structure-constant comparison of two realizations under the
// label-identity map.  Labels must match in order.
struct IsoReport {
    bool ok = false;
    std::vector<std::pair<int, int>> mismatched;
};
IsoReport check_isomorphism(const BasisSet& b4, const BasisSet& b6);

// Exhaustive search over all C(15,10) = 3003 ten-element subsets of the
// fifteen generators for bracket-closed subalgebras.  Exactly six exist;
// each is identified by its pivot: the one rotation-family member that
// joins the opposite rotation triple.
struct Subgroup {
    GeneratorName pivot;
    std::array<GeneratorName, 10> members;  // catalog enum order
};
std::vector<Subgroup> enumerate_sp4_subgroups();

// True iff the basis is 15-dimensional (exact rank) and bracket-closed.
bool fifteen_dim_check(const BasisSet& basis);

// Serialization: CSV rows "i,j,k,re,im" (nonzero coefficients, i < j) and
// a JSON array of the same records.
std::string table_to_csv(const StructureTable& t);
nlohmann::json table_to_json(const StructureTable& t);

}  // namespace oscsym
