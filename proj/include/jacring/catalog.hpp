#ifndef JACRING_CATALOG_HPP
#define JACRING_CATALOG_HPP

#include <set>
#include <string>
#include <vector>

#include "jacring/model.hpp"
#include "jacring/solver.hpp"

namespace jacring {

/// The section-6 case list for 3 <= g <= 8, in the paper's order, with the
/// printed dimensions as expected values.
std::vector<CaseDescriptor> catalog_cases(int g);

struct ResolvedCase {
  CaseDescriptor descriptor;
  Resolution resolution;
  int computed_dimension = 0;
};

/// Resolves every case of the genus and attaches the computed dimension.
/// Throws if a computed dimension disagrees with the stored expected value.
std::vector<ResolvedCase> enumerate_cases(int g);

/// dim R(C) for a trigonal curve: sum_{j=0..k} (g+1-3j) = (k+1)(g+1-3k/2),
/// always an integer. Requires 0 <= 3k <= g.
int trigonal_dimension(int g, int k);

/// The trigonal model itself: A = all-ones indexes of size <= k, basic
/// products lambda_I * lambda_J = lambda_{I united J} (zero outside A).
Model build_trigonal_model(int g, int k);

/// The two dimension counts for a curve with a g^1_4: the paper's printed
/// formula sum_h (g - 4h - 3 k_h) and the per-column basis count
/// sum_h sum_{k=0..k_h} (g - 4h - 3k + 1). They disagree in general; the
/// column count is the one consistent with the basis construction.
struct G14Dimensions {
  long paper_value = 0;
  long column_count = 0;
};

/// k_list = k_0 >= k_1 >= ... >= k_m; requires 4h + 3 k_h <= g for all h.
/// An empty list means the single stratum h = 0, k_0 = 0 (theta powers only).
G14Dimensions gonality4_dimension(int g, const std::vector<int>& k_list);

/// Fixed-width text rendering of the model in the layout of pictures 1-6:
/// one row per dimension (g down to 0), one column per admissible index in
/// the order (d, s); the empty column prints X, Theta^k/k!, Gamma^{*m}/m!,
/// {o} at the appropriate rows.
std::string render_picture(const Model& model);

/// Executes the verification suite. Valid scopes: dimensions,
/// forced-relations, oracles, omega, associativity, exchange; "all" selects
/// every scope.
struct VerifyReport {
  struct Item {
    std::string scope;
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;
  bool ok() const;
};

VerifyReport verify_paper(const std::set<std::string>& scopes);

}  // namespace jacring

#endif
