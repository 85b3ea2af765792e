#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "signedperm/permutation.hpp"

namespace signedperm {

struct VerifyOptions {
    int n = 4;
    /// Cell samples per matrix check.
    int samples = 20;
    std::uint64_t seed = 0;
    std::uint32_t modulus = 10007;
    /// Random (w, w') pairs drawn by theorem-a.
    int pairs = 200;
    /// Size of S_n for the type A half of rwy; 0 means n + 2.
    int sym_n = 0;
};

/// Outcome of one suite. Messages describe failures (capped); findings are
/// informational lines that are always emitted.
struct SuiteReport {
    explicit SuiteReport(std::string suite = {}) : name(std::move(suite)) {}

    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> messages;
    std::vector<std::string> findings;

    bool ok() const noexcept { return failures == 0; }
    void fail(std::string message);
    std::string str() const;
};

/// Which order of arguments makes r_u(., .) < k0 hold for the dissecting
/// element u of every essential triple.
struct ArgumentOrderReport {
    long triples = 0;
    long pq_valid = 0;
    long qp_valid = 0;
    long qp_undefined = 0;
};

std::vector<std::string> suite_names();
/// Runs one suite by name, or every suite for "all". Throws std::invalid_argument
/// for an unknown name.
std::vector<SuiteReport> run_suite(std::string_view name, const VerifyOptions& options);

/// Uniform element of W_n.
SignedPermutation random_signed(int n, std::mt19937_64& rng);

SuiteReport verify_ess_maximal(const std::vector<SignedPermutation>& elements);
SuiteReport verify_ess_maximal(int n);
SuiteReport verify_sup(int n);
SuiteReport verify_minimality(int n, ArgumentOrderReport* order = nullptr);
SuiteReport verify_base(int n);
SuiteReport verify_counts(int n);
SuiteReport verify_bigrassmannian(int n, std::vector<SignedPermutation>* non_basic = nullptr,
                                  long* bigrassmannian_count = nullptr);
SuiteReport verify_rwy(int n, int sym_n);
SuiteReport verify_lemma_compare(int n);
SuiteReport verify_matrix_rank(int n, int samples, std::uint64_t seed, std::uint32_t modulus);
SuiteReport verify_theorem_a(int n, int pairs, int samples, std::uint64_t seed, std::uint32_t modulus);
SuiteReport verify_type_c_match(int n, std::vector<SignedPermutation>* counterexamples = nullptr);

} // namespace signedperm
