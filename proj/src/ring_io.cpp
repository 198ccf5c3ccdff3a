#include "llv/ring_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace llv {

namespace {

using json = nlohmann::json;

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  // line of the first occurrence of "key" in the source, 0 when absent
  int line_of(const std::string& key) const {
    auto pos = text_.find("\"" + key + "\"");
    if (pos == std::string::npos) return 0;
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<long>(pos), '\n'));
  }

  int line_at_byte(std::size_t byte) const {
    byte = std::min(byte, text_.size());
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<long>(byte), '\n'));
  }

  [[noreturn]] void fail(const std::string& key, const std::string& field, const std::string& what) const {
    throw ParseError(field, line_of(key), what);
  }

  int integer(const json& v, const std::string& key, const std::string& field) const {
    if (!v.is_number_integer()) fail(key, field, "expected an integer");
    return v.get<int>();
  }

  template <typename F>
  F coeff(const json& v, const std::string& key, const std::string& field) const {
    Gaussian g;
    if (v.is_number_integer()) {
      g = Gaussian(Rational(v.get<long long>()));
    } else if (v.is_string()) {
      try {
        g = Gaussian::parse(v.get<std::string>());
      } catch (const ParseError& e) {
        fail(key, field, e.what());
      }
    } else if (v.is_number_float()) {
      fail(key, field, "floating-point coefficient; write an exact \"num/den\" string");
    } else {
      fail(key, field, "expected a coefficient string");
    }
    if constexpr (std::is_same_v<F, Rational>) {
      if (!g.is_real()) fail(key, field, "complex coefficient requires the gaussian field");
      return g.re();
    } else {
      return g;
    }
  }

  template <typename F>
  Vec<F> coeff_list(const json& v, const std::string& key) const {
    if (!v.is_array()) fail(key, key, "expected a list");
    Vec<F> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(coeff<F>(v[i], key, key + "[" + std::to_string(i) + "]"));
    return out;
  }

 private:
  const std::string& text_;
};

template <typename F>
std::string coeff_string(const F& x) {
  return x.to_string();
}

}  // namespace

template <typename F>
RingDescription<F> parse_ring(const std::string& text) {
  Reader rd(text);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", rd.line_at_byte(e.byte), "malformed document");
  }
  if (!doc.is_object()) throw ParseError("", 1, "top level must be an object");
  for (const char* key : {"top_degree", "dims", "basis", "products", "integration"})
    if (!doc.contains(key)) throw ParseError(key, 0, "required field missing");

  const int top = rd.integer(doc["top_degree"], "top_degree", "top_degree");
  if (top < 0) rd.fail("top_degree", "top_degree", "must be nonnegative");

  const json& jd = doc["dims"];
  if (!jd.is_array()) rd.fail("dims", "dims", "expected a list");
  std::vector<int> dims;
  for (std::size_t d = 0; d < jd.size(); ++d) {
    dims.push_back(rd.integer(jd[d], "dims", "dims[" + std::to_string(d) + "]"));
    if (dims.back() < 0) rd.fail("dims", "dims", "negative dimension");
  }
  if (static_cast<int>(dims.size()) != top + 1)
    throw DimensionError("dims has " + std::to_string(dims.size()) + " entries for top degree " + std::to_string(top));

  const json& jb = doc["basis"];
  if (!jb.is_array()) rd.fail("basis", "basis", "expected a list of label lists");
  if (jb.size() != dims.size()) throw DimensionError("basis lists " + std::to_string(jb.size()) + " degrees");
  std::vector<std::string> labels;
  for (std::size_t d = 0; d < jb.size(); ++d) {
    if (!jb[d].is_array()) rd.fail("basis", "basis[" + std::to_string(d) + "]", "expected a label list");
    if (static_cast<int>(jb[d].size()) != dims[d])
      throw DimensionError("degree " + std::to_string(d) + " has " + std::to_string(jb[d].size()) + " labels, dims says " +
                           std::to_string(dims[d]));
    for (const auto& l : jb[d]) {
      if (!l.is_string()) rd.fail("basis", "basis[" + std::to_string(d) + "]", "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  RingDescription<F> out;
  out.ring = GradedAlgebra<F>(top, dims, labels);
  auto& r = out.ring;
  const long n = static_cast<long>(r.size());

  const json& jp = doc["products"];
  if (!jp.is_array()) rd.fail("products", "products", "expected a list of records");
  for (std::size_t t = 0; t < jp.size(); ++t) {
    const std::string f = "products[" + std::to_string(t) + "]";
    const json& rec = jp[t];
    if (!rec.is_object()) rd.fail("products", f, "expected a record {i, j, k, coeff}");
    for (const char* key : {"i", "j", "k", "coeff"})
      if (!rec.contains(key)) rd.fail("products", f, std::string("missing '") + key + "'");
    const int i = rd.integer(rec["i"], "products", f + ".i");
    const int j = rd.integer(rec["j"], "products", f + ".j");
    const int k = rd.integer(rec["k"], "products", f + ".k");
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
      throw DimensionError(f + ": basis index out of range 0.." + std::to_string(n - 1));
    if (r.degree_of(k) != r.degree_of(i) + r.degree_of(j))
      throw ValidationError(f + ": product of " + r.label(i) + " and " + r.label(j) + " lands in degree " +
                            std::to_string(r.degree_of(k)));
    F c = rd.coeff<F>(rec["coeff"], "products", f + ".coeff");
    if (!c.is_zero()) r.add_product_term(i, j, k, c);
  }

  Vec<F> w = rd.coeff_list<F>(doc["integration"], "integration");
  if (static_cast<int>(w.size()) != dims[top])
    throw DimensionError("integration has " + std::to_string(w.size()) + " entries for a top degree of dimension " +
                         std::to_string(dims[top]));
  r.set_integration(std::move(w));

  if (doc.contains("bigrading")) {
    const json& jg = doc["bigrading"];
    if (!jg.is_array()) rd.fail("bigrading", "bigrading", "expected a list of [p, q] pairs");
    if (static_cast<long>(jg.size()) != n)
      throw DimensionError("bigrading has " + std::to_string(jg.size()) + " entries for " + std::to_string(n) +
                           " basis elements");
    std::vector<std::pair<int, int>> pq;
    for (std::size_t i = 0; i < jg.size(); ++i) {
      const std::string f = "bigrading[" + std::to_string(i) + "]";
      if (!jg[i].is_array() || jg[i].size() != 2) rd.fail("bigrading", f, "expected [p, q]");
      const int p = rd.integer(jg[i][0], "bigrading", f), q = rd.integer(jg[i][1], "bigrading", f);
      if (p < 0 || q < 0 || p + q != r.degree_of(i))
        rd.fail("bigrading", f,
                "bidegree (" + std::to_string(p) + "," + std::to_string(q) + ") of " + r.label(i) + " does not add up to degree " +
                    std::to_string(r.degree_of(i)));
      pq.emplace_back(p, q);
    }
    out.bigrading = std::move(pq);
  }

  if (doc.contains("quadratic_form")) {
    const json& jq = doc["quadratic_form"];
    const int m = r.dim(2);
    if (!jq.is_array()) rd.fail("quadratic_form", "quadratic_form", "expected a matrix");
    if (static_cast<int>(jq.size()) != m) throw DimensionError("quadratic_form size differs from dim H^2");
    Matrix<Rational> g(m, m);
    for (int a = 0; a < m; ++a) {
      Vec<Rational> row = rd.coeff_list<Rational>(jq[a], "quadratic_form");
      if (static_cast<int>(row.size()) != m) throw DimensionError("quadratic_form row length differs from dim H^2");
      for (int b = 0; b < m; ++b) g(a, b) = row[b];
    }
    if (!(g.transpose() == g)) throw ValidationError("quadratic_form is not symmetric");
    out.quadratic_form = QuadraticForm(g);
  }

  for (const char* key : {"sigma", "sigma_bar"}) {
    if (!doc.contains(key)) continue;
    Vec<F> v = rd.coeff_list<F>(doc[key], key);
    if (static_cast<long>(v.size()) != n) throw DimensionError(std::string(key) + " length differs from ring dimension");
    (std::string(key) == "sigma" ? out.sigma : out.sigma_bar) = std::move(v);
  }
  return out;
}

template <typename F>
RingDescription<F> load_ring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", 0, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ring<F>(ss.str());
}

template <typename F>
std::string dump_ring(const RingDescription<F>& d) {
  const auto& r = d.ring;
  json doc = json::object();
  doc["top_degree"] = r.top_degree();
  doc["dims"] = r.dims();
  json basis = json::array();
  for (int k = 0; k <= r.top_degree(); ++k) {
    json row = json::array();
    for (int a = 0; a < r.dim(k); ++a) row.push_back(r.label(r.offset(k) + a));
    basis.push_back(row);
  }
  doc["basis"] = basis;
  json prods = json::array();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      auto t = r.product(i, j);
      std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [k, x] : t)
        if (!x.is_zero()) prods.push_back({{"i", i}, {"j", j}, {"k", k}, {"coeff", coeff_string(x)}});
    }
  doc["products"] = prods;
  json w = json::array();
  for (const auto& x : r.integration()) w.push_back(coeff_string(x));
  doc["integration"] = w;
  if (d.bigrading) {
    json g = json::array();
    for (const auto& [p, q] : *d.bigrading) g.push_back({p, q});
    doc["bigrading"] = g;
  }
  if (d.quadratic_form) {
    json q = json::array();
    const auto& gm = d.quadratic_form->gram();
    for (std::size_t a = 0; a < gm.rows(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < gm.cols(); ++b) row.push_back(gm(a, b).to_string());
      q.push_back(row);
    }
    doc["quadratic_form"] = q;
  }
  auto vec = [](const Vec<F>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(coeff_string(x));
    return a;
  };
  if (d.sigma) doc["sigma"] = vec(*d.sigma);
  if (d.sigma_bar) doc["sigma_bar"] = vec(*d.sigma_bar);
  return doc.dump(1) + "\n";
}

template <typename F>
void save_ring(const RingDescription<F>& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << dump_ring(d);
}

template <typename F>
RingDescription<F> describe(const GradedAlgebra<F>& r, const std::optional<QuadraticForm>& q) {
  RingDescription<F> d;
  d.ring = r;
  d.quadratic_form = q;
  return d;
}

template <typename F>
RingDescription<F> describe(const BigradedAlgebra<F>& b, const std::optional<QuadraticForm>& q) {
  RingDescription<F> d = describe(b.ring, q);
  d.bigrading = b.pq;
  d.sigma = b.sigma;
  d.sigma_bar = b.sigma_bar;
  return d;
}

template <typename F>
BigradedAlgebra<F> bigraded(const RingDescription<F>& d) {
  if (!d.bigrading) throw ValidationError("ring has no bigrading");
  const auto& r = d.ring;
  if (r.top_degree() % 4 != 0) throw ValidationError("top degree is not divisible by 4");
  BigradedAlgebra<F> b;
  b.ring = r;
  b.pq = *d.bigrading;
  b.n = r.top_degree() / 4;
  auto unique_of_type = [&](int p, int q, const char* name) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < b.pq.size(); ++i)
      if (b.pq[i] == std::pair{p, q}) {
        if (hit) throw ValidationError(std::string("no ") + name + " given and type (" + std::to_string(p) + "," +
                                       std::to_string(q) + ") is not one-dimensional");
        hit = i;
      }
    if (!hit) throw ValidationError(std::string("no ") + name + " given and no basis element of its type");
    return r.basis_vector(*hit);
  };
  b.sigma = d.sigma ? *d.sigma : unique_of_type(2, 0, "sigma");
  b.sigma_bar = d.sigma_bar ? *d.sigma_bar : unique_of_type(0, 2, "sigma_bar");
  return b;
}

#define LLV_RING_IO(F)                                                                                     \
  template RingDescription<F> parse_ring<F>(const std::string&);                                           \
  template RingDescription<F> load_ring<F>(const std::string&);                                            \
  template std::string dump_ring<F>(const RingDescription<F>&);                                            \
  template void save_ring<F>(const RingDescription<F>&, const std::string&);                               \
  template RingDescription<F> describe<F>(const GradedAlgebra<F>&, const std::optional<QuadraticForm>&);   \
  template RingDescription<F> describe<F>(const BigradedAlgebra<F>&, const std::optional<QuadraticForm>&); \
  template BigradedAlgebra<F> bigraded<F>(const RingDescription<F>&);

LLV_RING_IO(Rational)
LLV_RING_IO(Gaussian)

}  // namespace llv
