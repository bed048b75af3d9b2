#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vclab/exact_matrix.hpp"
#include "vclab/vc.hpp"

namespace vclab {

enum class PolyKind { f, y, h };

// Evaluation of the certificate polynomials at the 0/1 indicator vector of
// `point`:
//   f: prod_{j in B} x_j * prod_{j in F\B} (x_j - 1) - prod_{j in F} x_j
//   y: -prod_{j in Z} x_j
//   h: sum_{j notin H} x_j * prod_{j in H} x_j + (|H|-d-1) prod_{j in H} x_j
mpq_class eval_poly_f(const SubsetMask& F, const SubsetMask& B, const SubsetMask& point);
mpq_class eval_poly_y(const SubsetMask& Z, const SubsetMask& point);
mpq_class eval_poly_h(const SubsetMask& H, const SubsetMask& point, int d);

struct YZStep {
    std::size_t pool_before = 0;
    SubsetMask Y, Z;
    std::size_t removed_neighborhood = 0;  // step 3(c)
    std::size_t removed_matches = 0;       // step 3(d)
};

struct YZSelection {
    std::vector<std::pair<SubsetMask, SubsetMask>> pairs;  // (Y_i, Z_i), Z_i subset of Y_i
    std::vector<YZStep> trace;
    std::size_t pool_initial = 0;
    std::size_t pool_after_step2 = 0;
    std::size_t pool_final = 0;
};

struct YZConditionReport {
    bool ok = true;
    int violated_condition = 0;  // 1, 2 or 3 when !ok
    std::string detail;
};

// Checks conditions (1)-(3) against the witnessed family:
//   (1) Z_i != B_j for all i, j
//   (2) |Y_i n Y_j| <= d-1 for i != j
//   (3) for i < j, no k with F_k n Y_i = Z_i and F_k n Y_j = B_k
YZConditionReport verify_yz_conditions(const WitnessedFamily& w, const YZSelection& yz);

// The greedy Y/Z selection: pool starts at binom([n],d+1) \ F, prunes the
// neighborhoods N(F_i) of members with |B_i| <= d-3, then repeatedly picks
// the colex-first eligible (Y, Z) with Z in shadow_d(pool) \ (D u D') and
// updates the pool (steps 3(c)/3(d)).  Gamma is the D' multiplicity cutoff.
YZSelection greedy_select_yz(const WitnessedFamily& w, int gamma);

struct Certificate {
    int n = 0, d = 0, gamma = 0;
    std::string family_sha256;
    WitnessedFamily witnessed;
    std::vector<std::pair<SubsetMask, SubsetMask>> yz_pairs;
    std::uint64_t matrix_side = 0;
    std::uint64_t rank = 0;
    std::uint64_t bound = 0;  // binom(n,d) - s
    bool valid = false;
    std::uint64_t size_d_witness_count = 0;  // recorded alongside (count bound)
};

// Square evaluation matrix: rows are indicator points (Y sets, members,
// then binom([n],<=d-1) by size then colex), columns the matching y/f/h
// polynomials.  Side s + m + sum_{i<=d-1} binom(n,i); sides above 50000 are
// rejected.
ExactMatrix assemble_matrix(const WitnessedFamily& w, const YZSelection& yz);

// Runs selection, condition verification, assembly and exact rank; the
// certificate is valid iff the matrix has full rank, and then
// |F| <= binom(n,d) - s must hold (a violation aborts loudly: it would
// falsify the method).
Certificate certify(const WitnessedFamily& w, int gamma);

// Rank deficiency diagnostics: a nontrivial rational kernel vector of the
// column space, if one exists.
std::optional<std::vector<mpq_class>> exact_kernel_vector(const ExactMatrix& mx);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

struct VerifyOutcome {
    bool ok = false;
    std::string message;
};

// Re-derives matrix, rank and bound from the data embedded in the
// certificate and compares bit-exactly.
VerifyOutcome verify_certificate(const Certificate& cert);

int default_gamma(int d);  // 4 (d+1)

}  // namespace vclab
