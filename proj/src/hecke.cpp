#include "hecke/hecke.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hecke {

BraidWord parse_word(const std::string& text) {
  BraidWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || tok[0] != 's') {
      throw std::invalid_argument("bad word token '" + tok + "'");
    }
    size_t caret = tok.find('^');
    int gen, exp = 1;
    try {
      gen = std::stoi(tok.substr(1, caret == std::string::npos
                                        ? std::string::npos
                                        : caret - 1));
      if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad word token '" + tok + "'");
    }
    if (gen < 1) throw std::invalid_argument("bad generator in '" + tok + "'");
    if (exp == 0) throw std::invalid_argument("zero exponent in '" + tok + "'");
    w.push_back({gen, exp});
  }
  return w;
}

std::string word_to_text(const BraidWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 's' << w[i].gen;
    if (w[i].exp != 1) os << '^' << w[i].exp;
  }
  return os.str();
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    r.push_back({it->gen, -it->exp});
  }
  return r;
}

BraidWord concat_words(BraidWord a, const BraidWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

BraidWord GroupSpec::basis_word(int j) const {
  int coset = j / e, power = j % e;
  BraidWord w;
  if (power > 0) w.push_back({sigma0, power});
  return concat_words(std::move(w), coset_words[coset]);
}

namespace {

BraidWord word_from_json(const nlohmann::json& j) {
  BraidWord w;
  for (const auto& l : j) {
    int gen = l.at(0).get<int>(), exp = l.at(1).get<int>();
    if (gen < 1 || exp == 0) throw std::invalid_argument("bad word letter");
    w.push_back({gen, exp});
  }
  return w;
}

HPrimeMatrix compute_rho_inverse(const GroupSpec& spec, int gen0,
                                 const HPrimeMatrix& rho) {
  const int e = spec.e, m = spec.coset_count, k = spec.vars;
  PolyMatrix flat = flatten(spec, rho);
  auto inv = frac_inverse(to_frac(flat));
  if (!inv) {
    throw std::invalid_argument("rho(s" + std::to_string(gen0 + 1) +
                                ") is singular");
  }
  // H is defined over R: entries of the inverse must land in R.
  PolyMatrix inv_poly(e * m, e * m, LaurentPoly(k));
  for (int i = 0; i < e * m; ++i) {
    for (int j = 0; j < e * m; ++j) {
      auto p = inv->at(i, j).as_poly();
      if (!p) {
        throw std::invalid_argument(
            "rho(s" + std::to_string(gen0 + 1) + ")^-1 is not over R");
      }
      inv_poly.at(i, j) = std::move(*p);
    }
  }
  const HeckeRelation& rel = spec.hrel();
  HPrimeMatrix result(m, std::vector<HPrimeElement>(m, hp_zero(rel, k)));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      for (int i = 0; i < e; ++i) {
        result[r][c].coeffs[i] = inv_poly.at(r * e + i, c * e);
      }
    }
  }
  if (flatten(spec, result) != inv_poly) {
    throw std::invalid_argument("rho inverse does not unflatten over H'");
  }
  return result;
}

}  // namespace

GroupSpec load_group_json(const nlohmann::json& j) {
  GroupSpec s;
  s.name = j.at("name").get<std::string>();
  s.vars = j.at("parameter_count").get<int>();
  s.generator_count = j.at("generator_count").get<int>();
  for (const auto& f : j.at("families")) {
    GroupSpec::Family fam;
    fam.order = f.at("order").get<int>();
    for (int p : f.at("parameters")) fam.params.push_back(p - 1);
    if (static_cast<int>(fam.params.size()) != fam.order) {
      throw std::invalid_argument("family needs order-many parameters");
    }
    fam.relation = HeckeRelation::from_parameters(s.vars, fam.params);
    s.families.push_back(std::move(fam));
  }
  for (int f : j.at("generator_family")) s.generator_family.push_back(f - 1);
  if (static_cast<int>(s.generator_family.size()) != s.generator_count) {
    throw std::invalid_argument("generator_family size mismatch");
  }
  s.sigma0 = j.at("sigma0").get<int>();
  s.e = s.families[s.generator_family[s.sigma0 - 1]].order;
  s.coset_count = j.at("coset_count").get<int>();
  s.group_order = j.at("group_order").get<int>();
  s.class_count = j.at("class_count").get<int>();
  if (s.group_order != s.e * s.coset_count) {
    throw std::invalid_argument("group order != e * coset count");
  }

  // Named ring constants are generated from the Hecke relations, never
  // hand-typed: each is [family, power] into that relation.
  if (j.contains("constants")) {
    for (const auto& [name, ref] : j.at("constants").items()) {
      int fam = ref.at(0).get<int>() - 1, pw = ref.at(1).get<int>();
      s.constants[name] = s.families.at(fam).relation.rel.at(pw);
    }
  }

  for (const auto& r : j.at("braid_relations")) {
    s.braid_relations.emplace_back(word_from_json(r.at(0)),
                                   word_from_json(r.at(1)));
  }

  const HeckeRelation& rel = s.hrel();
  for (const auto& mat : j.at("rho")) {
    HPrimeMatrix m(s.coset_count,
                   std::vector<HPrimeElement>(s.coset_count,
                                              hp_zero(rel, s.vars)));
    if (static_cast<int>(mat.size()) != s.coset_count) {
      throw std::invalid_argument("rho matrix has wrong size");
    }
    for (int r = 0; r < s.coset_count; ++r) {
      if (static_cast<int>(mat[r].size()) != s.coset_count) {
        throw std::invalid_argument("rho matrix has wrong size");
      }
      for (int c = 0; c < s.coset_count; ++c) {
        m[r][c] = parse_hprime_expr(mat[r][c].get<std::string>(), s.vars,
                                    rel, s.constants);
      }
    }
    s.rho.push_back(std::move(m));
  }
  if (static_cast<int>(s.rho.size()) != s.generator_count) {
    throw std::invalid_argument("need one rho matrix per generator");
  }

  for (const auto& w : j.at("coset_words")) {
    s.coset_words.push_back(word_from_json(w));
  }
  if (static_cast<int>(s.coset_words.size()) != s.coset_count) {
    throw std::invalid_argument("need one coset word per coset");
  }
  if (!s.coset_words[0].empty()) {
    throw std::invalid_argument("x_1 must be the empty word");
  }

  for (const auto& [name, reps] : j.at("class_reps").items()) {
    std::vector<int> v = reps.get<std::vector<int>>();
    if (static_cast<int>(v.size()) != s.class_count) {
      throw std::invalid_argument("class representative count mismatch");
    }
    for (int idx : v) {
      if (idx < 1 || idx > s.group_order) {
        throw std::invalid_argument("class representative index out of range");
      }
    }
    s.class_reps[name] = std::move(v);
  }

  s.pi_word = word_from_json(j.at("pi_word"));
  if (j.contains("central_words")) {
    for (const auto& w : j.at("central_words")) {
      s.central_words.push_back(word_from_json(w));
    }
  }
  if (j.contains("basis_labels")) {
    s.basis_labels = j.at("basis_labels").get<std::vector<std::string>>();
  }
  if (j.contains("reference_center")) {
    for (const auto& vec : j.at("reference_center")) {
      HeckeElement h(s.group_order, LaurentPoly(s.vars));
      for (const auto& [key, expr] : vec.items()) {
        int idx = std::stoi(key);
        if (idx < 1 || idx > s.group_order) {
          throw std::invalid_argument("reference center index out of range");
        }
        h[idx - 1] = parse_scalar_expr(expr.get<std::string>(), s.vars, rel,
                                       s.constants);
      }
      s.reference_center.push_back(std::move(h));
    }
  }

  for (int g = 0; g < s.generator_count; ++g) {
    s.rho_inv.push_back(compute_rho_inverse(s, g, s.rho[g]));
  }
  return s;
}

GroupSpec load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  nlohmann::json j;
  in >> j;
  return load_group_json(j);
}

GroupSpec load_group(const std::string& name_or_path) {
  if (is_builtin_group(name_or_path)) return load_builtin_group(name_or_path);
  return load_group_file(name_or_path);
}

PolyMatrix flatten(const GroupSpec& spec, const HPrimeMatrix& m) {
  const int e = spec.e, n = static_cast<int>(m.size());
  const HeckeRelation& rel = spec.hrel();
  PolyMatrix flat(e * n, e * n, LaurentPoly(spec.vars));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (m[r][c].is_zero()) continue;
      PolyMatrix block = hp_regular_matrix(rel, m[r][c]);
      for (int i = 0; i < e; ++i) {
        for (int jj = 0; jj < e; ++jj) {
          flat.at(r * e + i, c * e + jj) = block.at(i, jj);
        }
      }
    }
  }
  return flat;
}

std::vector<HPrimeElement> element_to_hprime(const GroupSpec& spec,
                                             const HeckeElement& h) {
  if (static_cast<int>(h.size()) != spec.group_order) {
    throw std::invalid_argument("element has wrong length");
  }
  const HeckeRelation& rel = spec.hrel();
  std::vector<HPrimeElement> v(spec.coset_count, hp_zero(rel, spec.vars));
  for (int k = 0; k < spec.coset_count; ++k) {
    for (int i = 0; i < spec.e; ++i) {
      v[k].coeffs[i] = h[k * spec.e + i];
    }
  }
  return v;
}

HeckeElement hprime_to_element(const GroupSpec& spec,
                               const std::vector<HPrimeElement>& v) {
  HeckeElement h(spec.group_order, LaurentPoly(spec.vars));
  for (int k = 0; k < spec.coset_count; ++k) {
    for (int i = 0; i < spec.e; ++i) {
      h[k * spec.e + i] = v[k].coeffs[i];
    }
  }
  return h;
}

std::vector<HPrimeElement> apply_word(const GroupSpec& spec,
                                      std::vector<HPrimeElement> v,
                                      const BraidWord& w) {
  const HeckeRelation& rel = spec.hrel();
  const int m = spec.coset_count;
  for (const BraidLetter& l : w) {
    if (l.gen < 1 || l.gen > spec.generator_count) {
      throw std::invalid_argument("generator index out of range");
    }
    const HPrimeMatrix& mat =
        l.exp > 0 ? spec.rho[l.gen - 1] : spec.rho_inv[l.gen - 1];
    for (int rep = 0; rep < std::abs(l.exp); ++rep) {
      std::vector<HPrimeElement> next(m, hp_zero(rel, spec.vars));
      for (int k = 0; k < m; ++k) {
        if (v[k].is_zero()) continue;
        for (int c = 0; c < m; ++c) {
          if (mat[k][c].is_zero()) continue;
          next[c] = hp_add(next[c], hp_mul(rel, v[k], mat[k][c]));
        }
      }
      v = std::move(next);
    }
  }
  return v;
}

HeckeElement word_to_element(const GroupSpec& spec, const BraidWord& w) {
  const HeckeRelation& rel = spec.hrel();
  std::vector<HPrimeElement> v(spec.coset_count, hp_zero(rel, spec.vars));
  v[0] = hp_one(rel, spec.vars);
  return hprime_to_element(spec, apply_word(spec, std::move(v), w));
}

PolyMatrix mul_matrix(const GroupSpec& spec, const BraidWord& g, Side side) {
  const int n = spec.group_order;
  PolyMatrix m(n, n, LaurentPoly(spec.vars));
  for (int j = 0; j < n; ++j) {
    BraidWord w = side == Side::left
                      ? concat_words(g, spec.basis_word(j))
                      : concat_words(spec.basis_word(j), g);
    HeckeElement col = word_to_element(spec, w);
    for (int i = 0; i < n; ++i) m.at(i, j) = std::move(col[i]);
  }
  return m;
}

HeckeElement multiply(const GroupSpec& spec, const HeckeElement& h1,
                      const HeckeElement& h2) {
  if (static_cast<int>(h1.size()) != spec.group_order ||
      static_cast<int>(h2.size()) != spec.group_order) {
    throw std::invalid_argument("element has wrong length");
  }
  std::vector<HPrimeElement> v1 = element_to_hprime(spec, h1);
  HeckeElement out = zero_element(spec);
  for (int j = 0; j < spec.group_order; ++j) {
    if (h2[j].is_zero()) continue;
    HeckeElement part =
        hprime_to_element(spec, apply_word(spec, v1, spec.basis_word(j)));
    for (int i = 0; i < spec.group_order; ++i) {
      out[i] += part[i] * h2[j];
    }
  }
  return out;
}

HeckeElement zero_element(const GroupSpec& spec) {
  return HeckeElement(spec.group_order, LaurentPoly(spec.vars));
}

HeckeElement basis_element(const GroupSpec& spec, int j) {
  HeckeElement h = zero_element(spec);
  h[j] = LaurentPoly::constant(spec.vars, 1);
  return h;
}

ValidationReport verify_relations(const GroupSpec& spec) {
  ValidationReport report;
  auto check = [&](bool ok, const std::string& what) {
    if (ok) {
      report.passed.push_back(what);
    } else {
      report.ok = false;
      report.failures.push_back(what);
    }
  };

  std::vector<PolyMatrix> flat, flat_inv;
  for (int g = 0; g < spec.generator_count; ++g) {
    flat.push_back(flatten(spec, spec.rho[g]));
    flat_inv.push_back(flatten(spec, spec.rho_inv[g]));
  }
  const int n = spec.group_order;
  PolyMatrix id = poly_identity(n, spec.vars);

  auto word_matrix = [&](const BraidWord& w) {
    PolyMatrix m = id;
    for (const BraidLetter& l : w) {
      const PolyMatrix& f = l.exp > 0 ? flat[l.gen - 1] : flat_inv[l.gen - 1];
      for (int rep = 0; rep < std::abs(l.exp); ++rep) m = mat_mul(m, f);
    }
    return m;
  };

  for (size_t r = 0; r < spec.braid_relations.size(); ++r) {
    const auto& [lhs, rhs] = spec.braid_relations[r];
    check(word_matrix(lhs) == word_matrix(rhs),
          "braid relation " + word_to_text(lhs) + " = " + word_to_text(rhs));
  }

  for (int g = 0; g < spec.generator_count; ++g) {
    const auto& fam = spec.families[spec.generator_family[g]];
    PolyMatrix lhs = id;
    for (int i = 0; i < fam.order; ++i) lhs = mat_mul(lhs, flat[g]);
    PolyMatrix rhs(n, n, LaurentPoly(spec.vars));
    PolyMatrix pw = id;
    for (int j = 0; j < fam.order; ++j) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          rhs.at(a, b) += fam.relation.rel[j] * pw.at(a, b);
        }
      }
      pw = mat_mul(pw, flat[g]);
    }
    check(lhs == rhs,
          "Hecke relation for generator s" + std::to_string(g + 1));
    check(mat_mul(flat[g], flat_inv[g]) == id,
          "invertibility of rho(s" + std::to_string(g + 1) + ")");
  }

  for (const BraidWord& w : spec.central_words) {
    PolyMatrix pm = word_matrix(w);
    bool commutes = true;
    for (int g = 0; g < spec.generator_count; ++g) {
      if (mat_mul(pm, flat[g]) != mat_mul(flat[g], pm)) commutes = false;
    }
    check(commutes, "central word " + word_to_text(w) + " commutes");
  }

  bool basis_ok = true;
  for (int j = 0; j < n; ++j) {
    if (word_to_element(spec, spec.basis_word(j)) != basis_element(spec, j)) {
      basis_ok = false;
    }
  }
  check(basis_ok, "basis words evaluate to unit vectors");

  return report;
}

std::string element_to_text(const GroupSpec& spec, const HeckeElement& h) {
  std::ostringstream os;
  bool any = false;
  for (size_t j = 0; j < h.size(); ++j) {
    if (h[j].is_zero()) continue;
    if (any) os << " + ";
    any = true;
    os << "(" << h[j].to_text() << ")*b" << (j + 1);
    if (j < spec.basis_labels.size()) os << "[" << spec.basis_labels[j] << "]";
  }
  return any ? os.str() : "0";
}

nlohmann::json element_to_json(const HeckeElement& h) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : h) j.push_back(c.to_json());
  return j;
}

}  // namespace hecke
