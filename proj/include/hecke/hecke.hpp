#ifndef HECKE_HECKE_HPP
#define HECKE_HECKE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hecke/expr.hpp"
#include "hecke/hprime.hpp"
#include "hecke/linalg.hpp"
#include "hecke/ring.hpp"

namespace hecke {

struct BraidLetter {
  int gen;  // 1-based generator index
  int exp;  // nonzero
  bool operator==(const BraidLetter& o) const {
    return gen == o.gen && exp == o.exp;
  }
};
using BraidWord = std::vector<BraidLetter>;

// Whitespace-separated tokens "s<k>^<e>"; "^1" may be omitted, negative
// exponents allowed, zero exponents rejected.
BraidWord parse_word(const std::string& text);
std::string word_to_text(const BraidWord& w);
// Letters reversed, exponents negated.
BraidWord inverse_word(const BraidWord& w);
BraidWord concat_words(BraidWord a, const BraidWord& b);

// Element of H as its coefficient vector over R in the canonical basis
// b_{e*k + m} = sigma0^{m-1} x_{k+1}.
using HeckeElement = PolyVec;

using HPrimeMatrix = std::vector<std::vector<HPrimeElement>>;

/*
 * Complete description of one group's Hecke algebra: parameters, the
 * coset-table matrices over H', coset words, class representatives and
 * optional reference center data. The rho matrices are data, not
 * computed; verify_relations certifies them.
 */
struct GroupSpec {
  struct Family {
    int order;
    std::vector<int> params;  // 0-based parameter indices
    HeckeRelation relation;
  };

  std::string name;
  int vars = 0;             // parameter count k
  int generator_count = 0;
  std::vector<Family> families;
  std::vector<int> generator_family;  // per generator, 0-based
  int sigma0 = 1;                     // distinguished generator, 1-based
  int e = 0;                          // order of sigma0
  int coset_count = 0;                // m = |W/W'|
  int group_order = 0;                // |W| = e * m
  int class_count = 0;
  std::vector<std::pair<BraidWord, BraidWord>> braid_relations;
  std::vector<HPrimeMatrix> rho;      // per generator, m x m over H'
  std::vector<HPrimeMatrix> rho_inv;  // computed and certified at load
  std::vector<BraidWord> coset_words;  // x_1 = empty word
  std::map<std::string, std::vector<int>> class_reps;  // 1-based indices
  BraidWord pi_word;
  std::vector<BraidWord> central_words;
  std::vector<HeckeElement> reference_center;
  std::vector<std::string> basis_labels;
  std::map<std::string, LaurentPoly> constants;

  const HeckeRelation& hrel() const {
    return families[generator_family[sigma0 - 1]].relation;
  }
  // Word of basis element b_{j+1} (0-based j = e*coset + power).
  BraidWord basis_word(int j) const;
};

GroupSpec load_group_json(const nlohmann::json& j);
GroupSpec load_group_file(const std::string& path);
// Shipped groups compiled into the library.
bool is_builtin_group(const std::string& name);
GroupSpec load_builtin_group(const std::string& name);
// Builtin name or a path to a spec file.
GroupSpec load_group(const std::string& name_or_path);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> passed;
  std::vector<std::string> failures;
};

// Certifies, by exact arithmetic on the flattened matrices: every braid
// relation, every generator's Hecke relation, invertibility of each
// rho(sigma), commutation of the central words, and that every basis
// word evaluates to its own unit vector.
ValidationReport verify_relations(const GroupSpec& spec);

// Replaces each H' entry by the e x e matrix of its left-regular action;
// an algebra homomorphism into (e*m) x (e*m) matrices over R.
PolyMatrix flatten(const GroupSpec& spec, const HPrimeMatrix& m);

std::vector<HPrimeElement> element_to_hprime(const GroupSpec& spec,
                                             const HeckeElement& h);
HeckeElement hprime_to_element(const GroupSpec& spec,
                               const std::vector<HPrimeElement>& v);
// Row vector acted on from the right by the word's matrices.
std::vector<HPrimeElement> apply_word(const GroupSpec& spec,
                                      std::vector<HPrimeElement> v,
                                      const BraidWord& w);

// Image of the word in the canonical basis, as the image of 1_H.
HeckeElement word_to_element(const GroupSpec& spec, const BraidWord& w);

enum class Side { left, right };

// |W| x |W| matrix of left (resp. right) multiplication by the word's
// image, built column-by-column from g*b_j (resp. b_j*g).
PolyMatrix mul_matrix(const GroupSpec& spec, const BraidWord& g, Side side);

// Product in H by bilinear extension over basis words.
HeckeElement multiply(const GroupSpec& spec, const HeckeElement& h1,
                      const HeckeElement& h2);

HeckeElement zero_element(const GroupSpec& spec);
HeckeElement basis_element(const GroupSpec& spec, int j);  // 0-based

std::string element_to_text(const GroupSpec& spec, const HeckeElement& h);
nlohmann::json element_to_json(const HeckeElement& h);

}  // namespace hecke

#endif
