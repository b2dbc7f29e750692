#pragma once

#include <string>
#include <vector>

#include "klab/budget.hpp"
#include "klab/homsolver.hpp"
#include "klab/manifest.hpp"
#include "klab/report.hpp"

namespace klab {

// Shift characterisation over every (n,k,s) with k in ks, s in ss and
// sk+1 <= n <= min((k+span)s, n_max). Cells run as an OpenMP loop.
std::vector<VerificationReport> run_shift_grid(const std::vector<int>& ks, const std::vector<int>& ss, int n_max,
                                               int span = 2);
// Vertex count and gap structure of KG(ks+1,k)_{s-stab}.
std::vector<VerificationReport> run_gap_count(const std::vector<int>& ks, const std::vector<int>& ss);
// The explicit circulant isomorphism plus an independent isomorphism search.
std::vector<VerificationReport> run_prop_iso(const std::vector<int>& ks, const std::vector<int>& ss);

std::vector<VerificationReport> check_chi(const std::string& spec, const SearchBudget& budget);
// chi of the dense part plus two clique vertices, and the dense/clique partition facts.
std::vector<VerificationReport> check_dense_part(int s, const SearchBudget& budget);
std::vector<VerificationReport> check_criticality(const std::string& spec, bool expect_critical,
                                                  const SearchBudget& budget);
std::vector<VerificationReport> check_core(const std::string& spec, CoreStatus expected, const SearchBudget& budget);

std::vector<VerificationReport> check_hom_idempotent(int k, int s);
// KG(n,k)_{2-stab} against Cay(D_2n, {r1, r(n-1)}).
std::vector<VerificationReport> check_schrijver_no_hom(int n, int k, const SearchBudget& budget);
// KG(2s+2,2)_{s-stab} against Cay(D_2n, S_G). A positive node limit in square_budget also
// attempts the optional direct search G x G -> G.
std::vector<VerificationReport> check_pair_no_hom(int s, const SearchBudget& budget,
                                                  const SearchBudget* square_budget = nullptr);

// Conjecture rows only; never part of `verify all`.
std::vector<VerificationReport> probe_conjectures(const std::vector<int>& ns, const std::vector<int>& ks,
                                                  const std::vector<int>& ss, const SearchBudget& budget);

// Suites named in the manifest: shift-grid, gap-count, prop-iso, chi, critical, core,
// hom-idempotence (and probe, which is excluded from "all").
std::vector<std::string> suite_ids();
std::vector<VerificationReport> run_suite(const SuiteManifest& manifest, const std::string& suite_id,
                                          const SearchBudget& budget);
std::vector<VerificationReport> run_all(const SuiteManifest& manifest, const SearchBudget& budget);

}  // namespace klab
