#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "jacring/catalog.hpp"
#include "jacring/json_io.hpp"

using namespace jacring;

namespace {

std::vector<int> dims(int g) {
  std::vector<int> out;
  for (const ResolvedCase& rc : enumerate_cases(g))
    out.push_back(rc.computed_dimension);
  return out;
}

}  // namespace

TEST_CASE("catalog case lists carry the printed labels in order") {
  CHECK(catalog_cases(3).size() == 2);
  CHECK(catalog_cases(4).size() == 2);
  CHECK(catalog_cases(5).size() == 3);
  CHECK(catalog_cases(6).size() == 5);
  CHECK(catalog_cases(7).size() == 6);
  CHECK(catalog_cases(8).size() == 9);
  CHECK(catalog_cases(8).back().label == "i");
  CHECK_THROWS(catalog_cases(2));
  CHECK_THROWS(catalog_cases(9));
}

TEST_CASE("per-genus dimension lists") {
  CHECK(dims(3) == std::vector<int>{4, 5});
  CHECK(dims(4) == std::vector<int>{5, 7});
  CHECK(dims(5) == std::vector<int>{6, 9, 11});
  CHECK(dims(6) == std::vector<int>{7, 11, 12, 14, 15});
  CHECK(dims(7) == std::vector<int>{8, 13, 15, 17, 19, 22});
  CHECK(dims(8) == std::vector<int>{9, 15, 18, 20, 23, 25, 27, 29, 30});
}

TEST_CASE("dimensions are strictly increasing within each genus") {
  for (int g = 3; g <= 8; ++g) {
    const std::vector<int> d = dims(g);
    for (size_t k = 1; k < d.size(); ++k) CHECK(d[k - 1] < d[k]);
  }
}

TEST_CASE("trigonal dimension formula") {
  CHECK(trigonal_dimension(6, 2) == 12);  // 7 + 4 + 1
  CHECK(trigonal_dimension(9, 3) == 22);  // 10 + 7 + 4 + 1
  for (int g = 3; g <= 15; ++g) CHECK(trigonal_dimension(g, 0) == g + 1);
  CHECK_THROWS(trigonal_dimension(6, 3));  // k > g/3
  CHECK_THROWS(trigonal_dimension(6, -1));
}

TEST_CASE("trigonal models match the closed form for 3 <= g <= 15") {
  for (int g = 3; g <= 15; ++g)
    for (int k = 0; 3 * k <= g; ++k) {
      const Model model = build_trigonal_model(g, k);
      CHECK(check_admissible(model.admissible).empty());
      CHECK(dimension(model) == trigonal_dimension(g, k));
      // (k+1)(g+1-3k/2), always an integer
      CHECK(Rational(2 * trigonal_dimension(g, k)) ==
            Rational((k + 1) * (2 * (g + 1) - 3 * k)));
    }
}

TEST_CASE("trigonal models are associative and Fourier-stable") {
  const Model model = build_trigonal_model(9, 3);
  CHECK(check_associativity(model).ok());
  for (const BasisKey& kx : model.basis_keys())
    for (const BasisKey& ky : model.basis_keys()) {
      const Cycle x = model.basis(kx.index, kx.m);
      const Cycle y = model.basis(ky.index, ky.m);
      CHECK(fourier(pontryagin(model, x, y)) ==
            intersect(model, fourier(x), fourier(y)));
    }
}

TEST_CASE("g14 dimensions report both formulas") {
  for (int g = 4; g <= 12; ++g) {
    const G14Dimensions d = gonality4_dimension(g, {});
    CHECK(d.column_count == g + 1);
    CHECK(d.paper_value == g);
  }
  const G14Dimensions d = gonality4_dimension(8, {2, 1});
  CHECK(d.paper_value == 3);      // (8-6) + (8-4-3)
  CHECK(d.column_count == 25);    // (9+6+3) + (5+2)
  // no "2" entries: the k-only stratum agrees with the trigonal count
  CHECK(gonality4_dimension(6, {2}).column_count == trigonal_dimension(6, 2));
  CHECK_THROWS(gonality4_dimension(8, {1, 2}));   // not non-increasing
  CHECK_THROWS(gonality4_dimension(8, {2, 2}));   // 4 + 6 > 8
  CHECK_THROWS(gonality4_dimension(8, {-1}));
}

TEST_CASE("picture of the smallest catalog case, cell for cell") {
  const Model m3a = resolve_model(catalog_cases(3).front()).model;
  CHECK(render_picture(m3a) ==
        "dim  {}\n"
        "3    X\n"
        "2    Theta\n"
        "1    Gamma\n"
        "0    {o}\n");
}

TEST_CASE("pictures list columns in the paper's order") {
  const Model m8 = resolve_model(catalog_cases(8).back()).model;
  const std::string picture = render_picture(m8);
  const std::string header = picture.substr(0, picture.find('\n'));
  CHECK(header.find("{1}") != std::string::npos);
  CHECK(header.find("{1}") < header.find("{2}"));
  CHECK(header.find("{2}") < header.find("{3}"));
  CHECK(header.find("{3}") < header.find("{1,1}"));
  CHECK(header.find("{1,1}") < header.find("{2,1}"));
  CHECK(header.find("{2,1}") < header.find("{3,1}"));
  CHECK(header.find("{2,2}") == std::string::npos);  // substituted away
  // one header line plus rows g down to 0
  CHECK(std::count(picture.begin(), picture.end(), '\n') == 8 + 2);

  // g=7 case (f) has no lambda_{2,1} column
  const Model m7f = resolve_model(catalog_cases(7).back()).model;
  CHECK(render_picture(m7f).find("{2,1}") == std::string::npos);
  CHECK(render_picture(m7f).find("{1,1}") != std::string::npos);
}

TEST_CASE("Fourier acts as the vertical symmetry of each column") {
  const Model m8 = resolve_model(catalog_cases(8).back()).model;
  for (const BasisKey& key : m8.basis_keys()) {
    const Cycle image = fourier(m8.basis(key.index, key.m));
    REQUIRE(image.terms().size() == 1);
    const BasisKey mirrored = image.terms().begin()->first;
    CHECK(mirrored.index == key.index);
    CHECK(mirrored.m == admissible_top(8, key.index) - key.m);
  }
}

TEST_CASE("verify_paper scopes") {
  CHECK(verify_paper({"dimensions"}).ok());
  const VerifyReport forced = verify_paper({"forced-relations"});
  CHECK(forced.ok());
  CHECK(forced.items.size() == 4);
  CHECK(verify_paper({"oracles"}).ok());
  CHECK(verify_paper({}).items.empty());
  const VerifyReport all = verify_paper({"all"});
  CHECK(all.ok());
  CHECK(all.items.size() > 100);
}
