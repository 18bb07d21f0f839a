#include "ainfp/dg_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ainfp {

namespace {
const SparseVec kEmpty;
}

const SparseVec& FilteredDgAlgebra::product(int j, int k) const {
  auto it = prod.find({j, k});
  return it == prod.end() ? kEmpty : it->second;
}

SparseVec FilteredDgAlgebra::mul_vec(const SparseVec& x, const SparseVec& y) const {
  SparseVec acc;
  for (auto& [j, a] : x)
    for (auto& [k, b] : y)
      acc = axpy(field, acc, field.mul(a, b), product(j, k));
  return acc;
}

SparseVec FilteredDgAlgebra::d_vec(const SparseVec& x) const {
  SparseVec acc;
  for (auto& [j, a] : x) acc = axpy(field, acc, a, d[j]);
  return acc;
}

SparseMatrix FilteredDgAlgebra::d_matrix() const {
  SparseMatrix M(dim(), dim());
  M.col = d;
  return M;
}

std::vector<double> FilteredDgAlgebra::critical_scale() const {
  std::set<double> vals;
  for (auto& b : basis) vals.insert(b.adams);
  return {vals.begin(), vals.end()};
}

std::string FilteredDgAlgebra::vec_str(const SparseVec& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [i, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << field.str(c) << "*" << basis[i].name;
  }
  return os.str();
}

std::optional<ValidationIssue> validate(const FilteredDgAlgebra& A) {
  const Field& F = A.field;
  int n = A.dim();
  if ((int)A.d.size() != n)
    return ValidationIssue{"shape", "differential table size != basis size"};
  auto name = [&](int i) { return A.basis[i].name; };
  // grading and filtration of d
  for (int j = 0; j < n; ++j)
    for (auto& [i, c] : A.d[j]) {
      if (A.basis[i].degree != A.basis[j].degree + 1)
        return ValidationIssue{"grading", "d(" + name(j) + ") has a degree " +
                                              std::to_string(A.basis[i].degree) + " term " + name(i)};
      if (A.basis[i].adams < A.basis[j].adams)
        return ValidationIssue{"filtration", "d(" + name(j) + ") leaves F^p: term " + name(i)};
    }
  // grading and multiplicativity of the product
  for (auto& [jk, v] : A.prod) {
    auto [j, k] = jk;
    for (auto& [i, c] : v) {
      if (A.basis[i].degree != A.basis[j].degree + A.basis[k].degree)
        return ValidationIssue{"grading", name(j) + "*" + name(k) + " has off-degree term " + name(i)};
      if (A.basis[i].adams < std::min(A.basis[j].adams, A.basis[k].adams))
        return ValidationIssue{"multiplicativity",
                               name(j) + "*" + name(k) + " leaves F^min: term " + name(i)};
    }
  }
  // d^2 = 0
  for (int j = 0; j < n; ++j)
    if (!A.d_vec(A.d[j]).empty())
      return ValidationIssue{"d^2=0", "d(d(" + name(j) + ")) = " + A.vec_str(A.d_vec(A.d[j]))};
  // Leibniz d(xy) = d(x)y + (-1)^|x| x d(y)
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      SparseVec lhs = A.d_vec(A.product(j, k));
      SparseVec rhs = A.mul_vec(A.d[j], unit_vec(F, k));
      Scalar sgn = (A.basis[j].degree % 2) ? F.neg(F.one()) : F.one();
      rhs = axpy(F, rhs, sgn, A.mul_vec(unit_vec(F, j), A.d[k]));
      if (lhs != rhs)
        return ValidationIssue{"Leibniz", "d(" + name(j) + "*" + name(k) + ") != d(" + name(j) +
                                              ")*" + name(k) + " +- " + name(j) + "*d(" + name(k) + ")"};
    }
  // associativity on basis triples
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      SparseVec ab = A.product(a, b);
      for (int c = 0; c < n; ++c) {
        SparseVec lhs = A.mul_vec(ab, unit_vec(F, c));
        SparseVec rhs = A.mul_vec(unit_vec(F, a), A.product(b, c));
        if (lhs != rhs)
          return ValidationIssue{"associativity",
                                 "(" + name(a) + "*" + name(b) + ")*" + name(c) + " != " +
                                     name(a) + "*(" + name(b) + "*" + name(c) + ")"};
      }
    }
  return std::nullopt;
}

FilteredDgAlgebra cochain_algebra(const Field& F, const FilteredSimplicialComplex& X) {
  FilteredDgAlgebra A;
  A.field = F;
  // basis: simplex duals ordered by (dimension, lex vertices)
  std::vector<std::pair<std::vector<int>, double>> simp(X.simplices.begin(), X.simplices.end());
  std::stable_sort(simp.begin(), simp.end(), [](auto& a, auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size()
                                            : a.first < b.first;
  });
  std::map<std::vector<int>, int> idx;
  for (auto& [verts, val] : simp) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < verts.size(); ++i) os << (i ? "," : "") << verts[i];
    os << "]";
    idx[verts] = A.dim();
    A.basis.push_back({os.str(), (int)verts.size() - 1, val});
  }
  // coboundary: d(s*) = sum over cofaces t = s u {v} of (-1)^{pos(v in t)} t*
  A.d.assign(A.dim(), {});
  for (auto& [verts, val] : simp) {
    if (verts.size() < 2) continue;
    int jt = idx[verts];
    for (size_t i = 0; i < verts.size(); ++i) {
      std::vector<int> face = verts;
      face.erase(face.begin() + i);
      int jf = idx[face];
      Scalar sgn = (i % 2) ? F.neg(F.one()) : F.one();
      A.d[jf] = axpy(F, A.d[jf], sgn, unit_vec(F, jt));
    }
  }
  // Alexander-Whitney cup: front face times back face of every simplex
  for (auto& [verts, val] : simp) {
    int jr = idx[verts];
    for (size_t k = 0; k < verts.size(); ++k) {
      std::vector<int> front(verts.begin(), verts.begin() + k + 1);
      std::vector<int> back(verts.begin() + k, verts.end());
      auto key = std::make_pair(idx[front], idx[back]);
      SparseVec& v = A.prod[key];
      v = axpy(F, v, F.one(), unit_vec(F, jr));
    }
  }
  return A;
}

int ReesAlgebra::slice_of_value(double p) const {
  for (size_t i = 0; i < slices.size(); ++i)
    if (slices[i] == p) return (int)i;
  return -1;
}

ReesAlgebra rees(const FilteredDgAlgebra& A) {
  if (auto issue = validate(A))
    throw std::runtime_error("invalid filtered dg algebra [" + issue->identity + "]: " + issue->witness);
  ReesAlgebra R;
  R.alg.field = A.field;
  R.slices = A.critical_scale();
  for (size_t s = 0; s < R.slices.size(); ++s)
    for (int j = 0; j < A.dim(); ++j)
      if (A.basis[j].adams >= R.slices[s]) {
        R.index[{(int)s, j}] = (int)R.origin.size();
        R.origin.push_back({(int)s, j});
        std::ostringstream os;
        os << A.basis[j].name << "@" << R.slices[s];
        R.alg.basis.push_back({os.str(), A.basis[j].degree, R.slices[s]});
      }
  auto shift = [&](int s, const SparseVec& v) {
    SparseVec out;
    for (auto& [j, c] : v) {
      auto it = R.index.find({s, j});
      if (it == R.index.end())
        throw std::runtime_error("filtration violation while building Rees algebra");
      out.emplace_back(it->second, c);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };
  R.alg.d.assign(R.origin.size(), {});
  for (size_t r = 0; r < R.origin.size(); ++r) {
    auto [s, j] = R.origin[r];
    R.alg.d[r] = shift(s, A.d[j]);
  }
  for (size_t r1 = 0; r1 < R.origin.size(); ++r1)
    for (size_t r2 = 0; r2 < R.origin.size(); ++r2) {
      auto [s1, j1] = R.origin[r1];
      auto [s2, j2] = R.origin[r2];
      const SparseVec& p = A.product(j1, j2);
      if (p.empty()) continue;
      R.alg.prod[{(int)r1, (int)r2}] = shift(std::min(s1, s2), p);
    }
  return R;
}

namespace {

Scalar parse_coeff(const Field& F, const nlohmann::json& j) {
  if (j.is_number_integer()) return F.from_long(j.get<long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    long num = std::stol(s.substr(0, slash));
    long den = slash == std::string::npos ? 1 : std::stol(s.substr(slash + 1));
    return F.div(F.from_long(num), F.from_long(den));
  }
  throw std::runtime_error("coefficient must be an integer or \"a/b\" string");
}

}  // namespace

FilteredDgAlgebra load_dg_algebra(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("bad JSON: ") + e.what());
  }
  FilteredDgAlgebra A;
  A.field = make_field(j.value("field", std::string("F2")), j.value("p", 0L));
  std::map<std::string, int> by_name;
  for (auto& b : j.value("basis", nlohmann::json::array())) {
    BasisElt e{b.at("name").get<std::string>(), b.at("degree").get<int>(),
               b.value("adams", 0.0)};
    if (by_name.count(e.name)) throw std::runtime_error("duplicate basis name: " + e.name);
    by_name[e.name] = A.dim();
    A.basis.push_back(e);
  }
  int n = A.dim();
  A.d.assign(n, {});
  auto dj = j.value("d", nlohmann::json::array());
  if (!dj.empty()) {
    if ((int)dj.size() != n) throw std::runtime_error("d must have one row per basis element");
    for (int c = 0; c < n; ++c) {
      if ((int)dj[c].size() != n) throw std::runtime_error("d row has wrong length");
      for (int r = 0; r < n; ++r) {
        Scalar v = parse_coeff(A.field, dj[c][r]);
        if (!A.field.is_zero(v)) A.d[c].emplace_back(r, v);
      }
    }
  }
  for (auto& pe : j.value("product", nlohmann::json::array())) {
    auto look = [&](const std::string& key) {
      std::string nm = pe.at(key).get<std::string>();
      auto it = by_name.find(nm);
      if (it == by_name.end()) throw std::runtime_error("unknown basis name: " + nm);
      return it->second;
    };
    int l = look("left"), r = look("right");
    SparseVec v;
    auto res = pe.at("result");
    if ((int)res.size() != n) throw std::runtime_error("product result has wrong length");
    for (int i = 0; i < n; ++i) {
      Scalar c = parse_coeff(A.field, res[i]);
      if (!A.field.is_zero(c)) v.emplace_back(i, c);
    }
    if (!v.empty()) A.prod[{l, r}] = v;
  }
  if (auto issue = validate(A))
    throw std::runtime_error("identity [" + issue->identity + "] fails: " + issue->witness);
  return A;
}

std::string dump_dg_algebra(const FilteredDgAlgebra& A) {
  nlohmann::json j;
  j["field"] = A.field.rational() ? "Q" : "F" + std::to_string(A.field.p);
  j["basis"] = nlohmann::json::array();
  for (auto& b : A.basis)
    j["basis"].push_back({{"name", b.name}, {"degree", b.degree}, {"adams", b.adams}});
  int n = A.dim();
  auto vec_json = [&](const SparseVec& v) {
    std::vector<std::string> out(n, "0");
    for (auto& [i, c] : v) out[i] = A.field.str(c);
    return out;
  };
  j["d"] = nlohmann::json::array();
  for (int c = 0; c < n; ++c) j["d"].push_back(vec_json(A.d[c]));
  j["product"] = nlohmann::json::array();
  for (auto& [lr, v] : A.prod)
    j["product"].push_back({{"left", A.basis[lr.first].name},
                            {"right", A.basis[lr.second].name},
                            {"result", vec_json(v)}});
  return j.dump(2);
}

}  // namespace ainfp
