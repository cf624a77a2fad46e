#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrkit/arrangement.hpp"

namespace arrkit {

using CatalogParams = std::map<std::string, std::string>;

struct CatalogParam {
  std::string name;
  std::string description;
  std::optional<std::string> default_value;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::vector<CatalogParam> params;
  std::function<Arrangement(const CatalogParams&)> build;
};

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);
/// Throws CatalogError on an unknown name, unknown parameter or bad value.
Arrangement catalog_build(const std::string& name, const CatalogParams& params = {});
/// Parses "k=v,k2=v2" (or repeated --param k=v collected by the caller).
CatalogParams parse_catalog_params(const std::vector<std::string>& items);

// Hesse family over Q(w), w a primitive cube root of unity.

/// The twelve conics f_1..f_12 at lambda (index 0 is f_1).
std::array<MultiPoly, 12> hesse_conics(const CycloNumber& lambda);
/// p_1..p_9.
std::array<ProjPoint, 9> hesse_points(const CycloNumber& lambda);
/// The twelve double points common to every member of the family.
std::array<ProjPoint, 12> hesse_sigma12();
/// s_j as the product of its three conics, j = 1..4.
MultiPoly hesse_sextic(int j, const CycloNumber& lambda);
/// Expanded forms of s_1 and s_2.
MultiPoly hesse_s1_expanded(const CycloNumber& lambda);
MultiPoly hesse_s2_expanded(const CycloNumber& lambda);
/// lambda (x^3 + y^3 + z^3) - (lambda^3 + 2) xyz.
MultiPoly hesse_cubic(const CycloNumber& lambda);
/// Generators of the group N x| S_3: n = diag(1, w, w^2), the swap x<->y and
/// the cycle (x, y, z) -> (y, z, x).
std::vector<Matrix3> hesse_group_generators();
/// 0, 1, w, w^2, -2, -2w, -2w^2.
std::vector<CycloNumber> hesse_special_lambdas();
bool is_hesse_special(const CycloNumber& lambda);
/// Suffix used in catalog names: "0", "1", "w", "w2", "m2", "m2w", "m2w2".
std::string hesse_special_suffix(const CycloNumber& lambda);

/// Which of the degenerate families to build at a special lambda.
enum class HesseDegeneration { C, A, B };
Arrangement hesse_degeneration(HesseDegeneration kind, const CycloNumber& lambda);

/// Dual Hesse arrangement of twelve lines, u v w ((u^3+v^3+w^3)^3 - 27 u^3 v^3 w^3).
Arrangement hesse_lines();
/// Pullback of the twelve lines under (u:v:w) -> (vw:uw:uv).
Arrangement cremona_pullback();

}  // namespace arrkit
