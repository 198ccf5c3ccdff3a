#include "commands.hpp"

#include <random>
#include <sstream>

#include "llv/bbf.hpp"
#include "llv/clifford.hpp"
#include "llv/filtration.hpp"
#include "llv/fixtures.hpp"
#include "llv/lefschetz.hpp"
#include "llv/lie_algebra.hpp"
#include "llv/llv_ops.hpp"
#include "llv/ring_io.hpp"

namespace llv::cli {

namespace {

using Q = Rational;
using json = nlohmann::ordered_json;

const char* kRingAxioms = "graded Frobenius algebra axioms";
const char* kStructure = "LLV algebra is so of the Mukai completion";
const char* kHl = "HL classes are exactly the non-isotropic classes";
const char* kDual = "dual Lefschetz operators commute";
const char* kWeil = "Weil operator is a commutator of Lefschetz operators";
const char* kSo41 = "a positive three-space generates so(4,1)";
const char* kSo4 = "symplectic Lefschetz operators generate so(4)";
const char* kDeriv = "degree-zero part acts by derivations";
const char* kVerbitsky = "Verbitsky component is Sym H2 modulo isotropic powers";
const char* kFujiki = "Fujiki relation";
const char* kPw = "weak P = W for type III monodromy";
const char* kIndep = "perverse filtration does not depend on the isotropic class";
const char* kKuga = "Kuga-Satake Clifford construction";

struct Subject {
  std::string name;
  GradedAlgebra<Q> ring;
  std::optional<GradedAlgebra<Gaussian>> complex_ring;  // gaussian input with non-real constants
  std::optional<BigradedAlgebra<Gaussian>> complex_hodge;
  std::optional<QuadraticForm> q;
  std::optional<BigradedAlgebra<Q>> hodge;
  bool symplectic = true;
  std::string note;  // why q or the bigrading is missing
};

template <typename Fn>
void guarded(Report& rep, const std::string& name, const std::string& anchor, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    rep.add(name, anchor, Verdict::fail, e.what());
  }
}

json vec_json(const Vec<Q>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json dims_json(const std::map<int, int>& m) {
  json o = json::object();
  for (const auto& [k, v] : m) o[std::to_string(k)] = v;
  return o;
}

std::string signature_label(const Signature& s) {
  return "so(" + std::to_string(s.pos + 1) + "," + std::to_string(s.neg + 1) + ")";
}

QuadraticForm default_form(int m) {
  Vec<Q> d;
  for (int i = 0; i < m; ++i) d.push_back(Q(i < 3 ? 1 : -1));
  return QuadraticForm::diagonal(d);
}

QuadraticForm parse_form(const std::string& spec) {
  try {
    return QuadraticForm::parse(spec);
  } catch (const Error& e) {
    throw UsageError(std::string("--q: ") + e.what());
  }
}

// integer vectors with entries in [-2, 2] from a fixed mt19937 stream; raw engine output
// keeps the sequence identical across standard libraries
std::vector<Vec<Q>> sample_classes(std::size_t m, std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Vec<Q>> out;
  while (out.size() < count) {
    Vec<Q> v(m);
    for (auto& x : v) x = Q(static_cast<long>(rng() % 5) - 2);
    if (!is_zero_vec(v)) out.push_back(std::move(v));
  }
  return out;
}

// mutually orthogonal classes with q > 0, from a congruence diagonalization
std::vector<Vec<Q>> positive_frame(const QuadraticForm& q) {
  auto dz = congruence_diagonalize(q.gram());
  std::vector<Vec<Q>> out;
  for (std::size_t i = 0; i < dz.diag.size(); ++i)
    if (dz.diag[i].sign() > 0) out.push_back(dz.basis.row(i));
  return out;
}

void check_bounds(const RunConfig& c, int b2, int n, int g) {
  if (b2 < 3 || b2 > kMaxB2) throw UsageError("--b2 must lie in 3.." + std::to_string(kMaxB2));
  if (n < 1 || n > kMaxN) throw UsageError("--n must lie in 1.." + std::to_string(kMaxN));
  if (g < 1 || 2 * g > kMaxTorusRank) throw UsageError("--g must satisfy 1 <= g and 2g <= " + std::to_string(kMaxTorusRank));
  if (c.budget < 0) throw UsageError("--budget must be nonnegative");
}

Subject from_description(const RingDescription<Q>& d, const std::string& name) {
  Subject s;
  s.name = name;
  s.ring = d.ring;
  s.q = d.quadratic_form;
  s.symplectic = d.ring.top_degree() % 4 == 0 && d.ring.top_degree() > 0;
  if (d.bigrading) {
    try {
      s.hodge = bigraded(d);
    } catch (const ValidationError& e) {
      s.note = std::string("bigrading unusable: ") + e.what();
    }
  }
  if (!s.q) {
    try {
      if (s.hodge) s.q = bbf_form(*s.hodge);
      else if (s.ring.top_degree() == 4) s.q = bbf_form(s.ring);
    } catch (const Error& e) {
      s.note = std::string("no quadratic form: ") + e.what();
    }
  }
  if (s.q && static_cast<int>(s.q->dim()) != s.ring.dim(2))
    throw DimensionError("quadratic form size differs from the degree-2 dimension");
  return s;
}

Subject load_subject(const RunConfig& c) {
  if (!c.fixture.empty() && !c.input.empty()) throw UsageError("--fixture and --input are exclusive");
  if (c.fixture.empty() && c.input.empty()) throw UsageError("one of --fixture or --input is required");
  if (c.field != "rational" && c.field != "gaussian") throw UsageError("--field must be rational or gaussian");
  const int n = c.n > 0 ? c.n : 2;
  const int g = c.g > 0 ? c.g : 2;
  std::optional<QuadraticForm> form;
  if (!c.q.empty()) form = parse_form(c.q);
  int b2 = c.b2 > 0 ? c.b2 : (form ? static_cast<int>(form->dim()) : 5);
  if (form && static_cast<int>(form->dim()) != b2) throw UsageError("--q has dimension different from --b2");
  check_bounds(c, b2, n, g);

  Subject s;
  if (c.fixture == "k3") {
    s.q = form ? *form : k3_form();
    s.ring = k3_ring(*s.q);
    s.name = "k3";
    if (form) s.name += " q=" + c.q;
  } else if (c.fixture == "bogomolov") {
    QuadraticForm q = form ? *form : default_form(b2);
    const long target = sym_dim(b2, n + 1) - sym_dim(b2, n - 1);
    if (c.budget > 0 && c.budget < target)
      throw UsageError("--budget " + std::to_string(c.budget) + " is below the predicted ideal dimension " +
                       std::to_string(target));
    BogomolovOptions opt;
    opt.budget = c.budget;
    auto m = bogomolov_model(q, n, opt);
    s.ring = m.ring;
    s.q = m.q0;
    s.hodge = m.hodge;
    s.name = "bogomolov b2=" + std::to_string(b2) + " n=" + std::to_string(n) + (form ? " q=" + c.q : "");
  } else if (c.fixture == "torus") {
    s.ring = torus_ring(g);
    if (g % 2 == 0) s.hodge = torus_bigraded(g);
    s.symplectic = false;
    s.name = "torus g=" + std::to_string(g);
  } else if (!c.fixture.empty()) {
    throw UsageError("unknown fixture '" + c.fixture + "' (k3 | bogomolov | torus)");
  } else if (c.field == "gaussian") {
    auto d = load_ring<Gaussian>(c.input);
    bool real = true;
    for (std::size_t i = 0; i < d.ring.size() && real; ++i)
      for (std::size_t j = 0; j < d.ring.size() && real; ++j)
        for (const auto& [k, x] : d.ring.product(i, j)) real = real && x.is_real();
    for (const auto& x : d.ring.integration()) real = real && x.is_real();
    for (const auto* v : {&d.sigma, &d.sigma_bar})
      if (*v)
        for (const auto& x : **v) real = real && x.is_real();
    if (real) {
      s = from_description(parse_ring<Q>(dump_ring(d)), c.input);
    } else {
      s.name = c.input;
      s.complex_ring = d.ring;
      if (d.bigrading) {
        try {
          s.complex_hodge = bigraded(d);
        } catch (const ValidationError& e) {
          s.note = std::string("bigrading unusable: ") + e.what();
        }
      }
    }
  } else {
    s = from_description(load_ring<Q>(c.input), c.input);
  }
  if (c.field == "gaussian" && !s.complex_ring) {
    s.complex_ring = s.ring.cast<Gaussian>();
    if (s.hodge) s.complex_hodge = s.hodge->cast<Gaussian>();
  }
  return s;
}

void need_rational(const Subject& s, const std::string& cmd) {
  if (s.complex_ring && s.ring.size() == 0)
    throw UsageError(cmd + " needs rational structure constants; this ring has non-real ones");
}

void ring_axioms(Report& rep, const Subject& s) {
  ValidationReport v = s.complex_ring ? validate(*s.complex_ring) : validate(s.ring);
  const auto& dims = s.complex_ring ? s.complex_ring->dims() : s.ring.dims();
  json data;
  data["field"] = s.complex_ring ? "gaussian" : "rational";
  data["dims"] = dims;
  bool even = true;
  for (std::size_t d = 1; d < dims.size(); d += 2) even = even && dims[d] == 0;
  if (even) {
    std::vector<int> e;
    for (std::size_t d = 0; d < dims.size(); d += 2) e.push_back(dims[d]);
    data["even_dims"] = e;
  }
  if (!v.ok) {
    data["issues"] = v.issues;
    data["suppressed"] = v.suppressed;
    rep.add("ring axioms", kRingAxioms, Verdict::fail, v.issues.front(), data);
  } else {
    rep.add("ring axioms", kRingAxioms, Verdict::pass, {}, data);
  }
}

Report cmd_validate(const Subject& s) {
  Report rep;
  ring_axioms(rep, s);
  if (s.hodge || s.complex_hodge) {
    ValidationReport v = s.complex_hodge ? validate_bigrading(*s.complex_hodge) : validate_bigrading(*s.hodge);
    json data;
    if (!v.ok) data["issues"] = v.issues;
    rep.add("bigrading", kRingAxioms, v.ok ? Verdict::pass : Verdict::fail, v.ok ? "" : v.issues.front(), data);
  }
  if (!s.note.empty()) rep.add("ring extras", kRingAxioms, Verdict::skip, s.note);
  if (s.q) {
    auto sig = s.q->signature();
    json data{{"signature", {sig.pos, sig.neg, sig.null}}};
    rep.add("quadratic form", kRingAxioms, sig.null == 0 ? Verdict::pass : Verdict::fail,
            sig.null == 0 ? "" : "form is degenerate", data);
    if (s.symplectic && sig.null == 0 && !s.complex_ring)
      guarded(rep, "Fujiki relation", kFujiki, [&] {
        auto f = fujiki_check(s.ring, *s.q);
        rep.add("Fujiki relation", kFujiki, Verdict::pass, {},
                json{{"c", f.c.to_string()}, {"exponent", 2 * f.n}, {"classes", f.checked}});
      });
  }
  return rep;
}

Report cmd_llv(const Subject& s) {
  Report rep;
  ring_axioms(rep, s);
  if (rep.any_fail()) return rep;
  const auto& r = s.ring;
  LlvGenerators gens;
  MatrixLieAlgebra<Q> g;
  AdGrading<Q> gr;
  try {
    gens = llv_generators(r);
    g = lie_closure(gens.matrices);
    gr = ad_grading(g, gens.triples[0].H);
  } catch (const Error& e) {
    rep.add("LLV closure", kStructure, Verdict::fail, e.what());
    return rep;
  }
  json cd{{"classes", gens.classes.size()},
          {"dim", g.dim()},
          {"grading", {gr.g2.size(), gr.g0.size(), gr.gm2.size()}}};
  rep.add("LLV closure", kStructure, Verdict::pass, {}, cd);

  if (!s.symplectic) {
    rep.add("structure theorem", kStructure, Verdict::skip, "no structure statement for this ring; dimensions reported",
            json{{"dim", g.dim()}});
  } else if (!s.q) {
    rep.add("structure theorem", kStructure, Verdict::skip, "no quadratic form on degree 2");
  } else {
    guarded(rep, "structure theorem", kStructure, [&] {
      const auto sig = s.q->signature();
      auto so = so_identify(g, static_cast<int>(s.q->dim()), sig);
      json d{{"expected", signature_label(sig)},
             {"dim", so.dim},
             {"expected_dim", so.expected_dim},
             {"killing_signature", {so.compact, so.noncompact}},
             {"expected_signature", {so.expected_compact, so.expected_noncompact}},
             {"form", so.exact_killing ? "killing" : "trace"}};
      if (!so.exact_killing) {
        d["killing_over_trace"] = so.ratio.to_string();
        d["ratio_checks"] = so.ratio_checks;
      }
      rep.add("structure theorem", kStructure, so.pass ? Verdict::pass : Verdict::fail,
              so.pass ? "" : "closure differs from " + signature_label(sig), d);
    });
  }

  guarded(rep, "dual Lefschetz commute", kDual, [&] {
    int pairs = 0;
    std::optional<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i < gens.triples.size() && !bad; ++i)
      for (std::size_t j = i + 1; j < gens.triples.size() && !bad; ++j) {
        ++pairs;
        if (!commutator(gens.triples[i].Lam, gens.triples[j].Lam).is_zero()) bad = {i, j};
      }
    json d{{"pairs", pairs}};
    if (bad) d["witness"] = {bad->first, bad->second};
    rep.add("dual Lefschetz commute", kDual, bad ? Verdict::fail : Verdict::pass,
            bad ? "nonzero commutator of dual Lefschetz operators" : "", d);
  });

  guarded(rep, "derivations", kDeriv, [&] {
    const std::size_t k = std::min<std::size_t>(gr.g0.size(), 6);
    int checked = 0;
    std::string reason;
    for (std::size_t i = 0; i < k && reason.empty(); ++i)
      for (std::size_t j = i + 1; j < k && reason.empty(); ++j) {
        Matrix<Q> D = commutator(gr.g0[i], gr.g0[j]);
        ++checked;
        auto res = derivation_check(D, r);
        if (!res.ok) reason = res.reason;
      }
    rep.add("derivations", kDeriv, reason.empty() ? Verdict::pass : Verdict::fail, reason,
            json{{"brackets", checked}});
  });

  if (s.hodge) {
    guarded(rep, "Weil operator", kWeil, [&] {
      auto w = weil_operator(*s.hodge);
      rep.add("Weil operator", kWeil, w.ok ? Verdict::pass : Verdict::fail,
              w.ok ? "" : "commutator differs from i(H_sigma - H_sigma-bar)");
    });
    guarded(rep, "symplectic commutation", kDual, [&] {
      auto v = simultaneous_primitivity_check(*s.hodge);
      rep.add("symplectic commutation", kDual, v.ok ? Verdict::pass : Verdict::fail, v.ok ? "" : v.issues.front());
    });
    guarded(rep, "symplectic so(4)", kSo4, [&] {
      auto so4 = so4_symplectic(*s.hodge);
      const bool ok = so4.span_rank == 6 && so4.closure_dim == 6 && so4.triples_ok && so4.commuting;
      rep.add("symplectic so(4)", kSo4, ok ? Verdict::pass : Verdict::fail,
              ok ? "" : "six symplectic operators do not form two commuting sl2's",
              json{{"span_rank", so4.span_rank},
                   {"closure_dim", so4.closure_dim},
                   {"triples", so4.triples_ok},
                   {"commuting", so4.commuting},
                   {"weil_in_span", so4.weil_in_span}});
    });
  }

  if (s.q && s.symplectic) {
    guarded(rep, "so(4,1)", kSo41, [&] {
      auto frame = positive_frame(*s.q);
      if (frame.size() < 3) {
        rep.add("so(4,1)", kSo41, Verdict::skip, "form has fewer than three positive directions");
        return;
      }
      frame.resize(3);
      auto res = so41_subalgebra(r, *s.q, frame);
      if (!res.skipped.empty()) {
        rep.add("so(4,1)", kSo41, Verdict::skip, res.skipped, json{{"dim", res.dim}});
        return;
      }
      bool all = true;
      json rel = json::object();
      for (const auto& x : res.relations) {
        rel[x.name] = x.holds;
        all = all && x.holds;
      }
      const bool ok = all && res.dim == 10;
      rep.add("so(4,1)", kSo41, ok ? Verdict::pass : Verdict::fail, ok ? "" : "dimension or relations differ",
              json{{"dim", res.dim}, {"relations", rel}});
    });
  }
  return rep;
}

Report cmd_hl(const Subject& s) {
  Report rep;
  const auto& r = s.ring;
  if (!s.q) {
    rep.add("HL versus isotropy", kHl, Verdict::skip, s.note.empty() ? "no quadratic form on degree 2" : s.note);
    return rep;
  }
  guarded(rep, "HL versus isotropy", kHl, [&] {
    auto classes = sample_classes(s.q->dim(), 40, 7);
    for (auto& a : isotropic_classes(*s.q, 20)) classes.push_back(std::move(a));
    int hl = 0, iso = 0;
    json mismatches = json::array();
    for (const auto& a : classes) {
      const bool h = hl_test(r, r.embed(2, a));
      const bool z = (*s.q)(a).is_zero();
      hl += h;
      iso += z;
      if (h == z && mismatches.size() < 5) mismatches.push_back(vec_json(a));
    }
    json d{{"classes", classes.size()}, {"hl", hl}, {"isotropic", iso}};
    if (!mismatches.empty()) d["mismatches"] = mismatches;
    if (!s.symplectic)
      rep.add("HL versus isotropy", kHl, Verdict::skip, "statement is about symplectic rings; counts reported", d);
    else
      rep.add("HL versus isotropy", kHl, mismatches.empty() ? Verdict::pass : Verdict::fail,
              mismatches.empty() ? "" : "HL test disagrees with isotropy", d);
  });
  guarded(rep, "HL spanning set", kHl, [&] {
    auto cls = hl_spanning_classes(r);
    for (auto& a : cls) a = r.component(a, 2);
    const auto rank = Subspace<Q>::span(cls, static_cast<std::size_t>(r.dim(2))).dim();
    const bool ok = static_cast<int>(rank) == r.dim(2);
    json d{{"classes", cls.size()}, {"rank", rank}};
    rep.add("HL spanning set", kHl, ok ? Verdict::pass : Verdict::fail, ok ? "" : "HL classes do not span degree 2", d);
  });
  return rep;
}

Report cmd_verbitsky(const Subject& s) {
  Report rep;
  const auto& r = s.ring;
  guarded(rep, "Verbitsky component", kVerbitsky, [&] {
    auto cls = hl_spanning_classes(r);
    auto v = verbitsky_component(r, cls);
    json d{{"dims", v.dims}};
    if (!v.expected.empty()) d["expected"] = v.expected;
    if (!s.symplectic || v.expected.empty())
      rep.add("Verbitsky dimensions", kVerbitsky, Verdict::skip, "no prediction for this ring; dimensions reported", d);
    else
      rep.add("Verbitsky dimensions", kVerbitsky, v.dims_match ? Verdict::pass : Verdict::fail,
              v.dims_match ? "" : "dimensions differ from Sym^k H2", d);
    rep.add("Lambda stability", kVerbitsky, v.lambda_stable ? Verdict::pass : Verdict::fail,
            v.lambda_stable ? "" : "component not stable under dual Lefschetz operators");
    rep.add("commutator identity", kVerbitsky, v.identity_holds ? Verdict::pass : Verdict::fail,
            v.identity_holds ? "" : "Lam_a(x y) differs from L_x Lam_a y - [L_x, Lam_a] y");
  });
  if (!s.q || !s.symplectic || r.top_degree() % 4 != 0) {
    rep.add("isotropic powers vanish", kVerbitsky, Verdict::skip, "needs a symplectic ring with a quadratic form");
    return rep;
  }
  guarded(rep, "isotropic powers vanish", kVerbitsky, [&] {
    const int n = r.top_degree() / 4;
    auto cls = isotropic_classes(*s.q, 100);
    json bad = json::array();
    for (const auto& a : cls)
      if (!is_zero_vec(r.power(r.embed(2, a), n + 1)) && bad.size() < 5) bad.push_back(vec_json(a));
    json d{{"classes", cls.size()}, {"power", n + 1}};
    if (!bad.empty()) d["witnesses"] = bad;
    if (cls.empty())
      rep.add("isotropic powers vanish", kVerbitsky, Verdict::skip, "no isotropic classes found", d);
    else
      rep.add("isotropic powers vanish", kVerbitsky, bad.empty() ? Verdict::pass : Verdict::fail,
              bad.empty() ? "" : "alpha^(n+1) is nonzero", d);
  });
  return rep;
}

Vec<Q> parse_beta(const std::string& text, int m) {
  Vec<Q> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(Rational::parse(item));
    } catch (const ParseError&) {
      throw UsageError("--beta: malformed coefficient '" + item + "'");
    }
  }
  if (static_cast<int>(v.size()) != m)
    throw UsageError("--beta has " + std::to_string(v.size()) + " coordinates; degree 2 has dimension " + std::to_string(m));
  return v;
}

Report cmd_pw(const Subject& s, const RunConfig& c) {
  Report rep;
  const auto& r = s.ring;
  if (!s.q || !s.symplectic || r.top_degree() % 4 != 0) {
    if (!c.beta.empty()) throw UsageError("--beta needs a symplectic ring with a quadratic form");
    rep.add("P = W", kPw, Verdict::skip, "needs a symplectic ring with a quadratic form");
    return rep;
  }
  const QuadraticForm& q = *s.q;
  LagrangianTriple t;
  if (!c.beta.empty()) {
    t = lagrangian_triple_for(q, parse_beta(c.beta, r.dim(2)));
  } else {
    try {
      t = find_lagrangian_triple(q);
    } catch (const MathError& e) {
      rep.add("Lagrangian triple", kPw, Verdict::skip, e.what());
      return rep;
    }
  }
  rep.add("Lagrangian triple", kPw, Verdict::pass, {},
          json{{"beta", vec_json(t.beta)}, {"rho", vec_json(t.rho)}, {"eta", vec_json(t.eta)}});
  guarded(rep, "monodromy type", kPw, [&] {
    auto N = lagrangian_monodromy(r, t, q);
    const int i2 = nilpotent_index(degree_block(r, N, 2));
    const int all = nilpotent_index(N);
    rep.add("monodromy type", kPw, i2 == 3 ? Verdict::pass : Verdict::fail,
            i2 == 3 ? "" : "index on degree 2 is " + std::to_string(i2) + ", not 3",
            json{{"index_degree2", i2}, {"index", all}, {"type", i2 == 3 ? "III" : i2 == 2 ? "II" : "I"}});
  });
  guarded(rep, "P = W", kPw, [&] {
    auto res = pw_check(r, t, q);
    json rows = json::array();
    for (const auto& d : res.degrees)
      rows.push_back({{"degree", d.degree},
                      {"match", d.cmp.match},
                      {"P", dims_json(d.P.graded_dims())},
                      {"W", dims_json(d.W.graded_dims())}});
    json data{{"window", {res.window_lo, res.window_hi}}, {"degrees", rows}};
    if (res.shift) data["shift"] = *res.shift;
    rep.add("P = W", kPw, res.shift ? Verdict::pass : Verdict::fail,
            res.shift ? "" : "no uniform shift in the window makes P and W agree", data);
  });
  guarded(rep, "isotropic independence", kIndep, [&] {
    auto cls = isotropic_classes(q, 10);
    cls.insert(cls.begin(), t.beta);
    json bad = json::array();
    for (int k = 0; k <= r.top_degree(); k += 2) {
      auto ref = perverse_filtration(r, cls[0], k, q).graded_dims();
      for (const auto& b : cls)
        if (perverse_filtration(r, b, k, q).graded_dims() != ref && bad.size() < 5)
          bad.push_back({{"degree", k}, {"class", vec_json(b)}});
    }
    rep.add("isotropic independence", kIndep, bad.empty() ? Verdict::pass : Verdict::fail,
            bad.empty() ? "" : "graded dimensions depend on the class",
            json{{"classes", cls.size()}, {"witnesses", bad}});
  });
  return rep;
}

CliffordElement sample_element(const CliffordAlgebra& c, std::mt19937& rng) {
  CliffordElement x = c.zero();
  for (auto& v : x.coeffs)
    if (rng() % 3 == 0) v = Q(static_cast<long>(rng() % 7) - 3);
  return x;
}

Report cmd_kuga(const QuadraticForm& q) {
  Report rep;
  const int m = static_cast<int>(q.dim());
  auto c = clifford(q);
  rep.add("Clifford dimension", kKuga, c->dim() == (std::size_t{1} << m) ? Verdict::pass : Verdict::fail,
          c->dim() == (std::size_t{1} << m) ? "" : "dimension is not 2^m", json{{"generators", m}, {"dim", c->dim()}});

  guarded(rep, "defining relation", kKuga, [&] {
    auto vs = sample_classes(q.dim(), 100, 3);
    for (int i = 0; i < m; ++i) vs.push_back(unit_vec<Q>(q.dim(), i));
    int bad = 0;
    for (const auto& v : vs) {
      auto cv = c->vector(v);
      bad += !(cl_multiply(cv, cv) == c->blade(0, q(v)));
    }
    rep.add("defining relation", kKuga, bad == 0 ? Verdict::pass : Verdict::fail,
            bad == 0 ? "" : "v v differs from q(v) for " + std::to_string(bad) + " vectors",
            json{{"vectors", vs.size()}});
  });

  guarded(rep, "trace symmetry", kKuga, [&] {
    std::mt19937 rng(5);
    int bad = 0;
    for (int k = 0; k < 100; ++k) {
      auto x = sample_element(*c, rng), y = sample_element(*c, rng);
      bad += !(cl_trace(cl_multiply(x, y)) == cl_trace(cl_multiply(y, x)));
    }
    rep.add("trace symmetry", kKuga, bad == 0 ? Verdict::pass : Verdict::fail,
            bad == 0 ? "" : "Tr(x y) differs from Tr(y x)", json{{"pairs", 100}});
  });

  auto dz = congruence_diagonalize(q.gram());
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < dz.diag.size(); ++i)
    if (dz.diag[i].sign() > 0) pos.push_back(i);
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  for (std::size_t a = 0; a < pos.size() && !pair; ++a)
    for (std::size_t b = a + 1; b < pos.size() && !pair; ++b)
      if ((dz.diag[pos[a]] * dz.diag[pos[b]]).sqrt_exact()) pair = {pos[a], pos[b]};
  if (!pair) {
    const std::string why = pos.size() < 2 ? "fewer than two positive directions"
                                           : "inadmissible pair: no positive orthogonal pair with q(g) q(g') a square";
    rep.add("complex structure", kKuga, Verdict::skip, why);
    rep.add("polarization sign", kKuga, Verdict::skip, why);
    return rep;
  }
  const Vec<Q> gamma = dz.basis.row(pair->first), gamma_p = dz.basis.row(pair->second);
  guarded(rep, "complex structure", kKuga, [&] {
    auto mu = complex_structure(*c, gamma, gamma_p);
    const bool sq = cl_multiply(mu, mu) == c->blade(0, Q(-1));
    rep.add("complex structure", kKuga, sq ? Verdict::pass : Verdict::fail, sq ? "" : "mu^2 differs from -1",
            json{{"gamma", vec_json(gamma)}, {"gamma_prime", vec_json(gamma_p)}, {"mu_squared", sq ? "-1" : "other"}});
  });

  // the probe runs on the orthogonal complement of a third positive direction when there is one
  guarded(rep, "polarization sign", kKuga, [&] {
    const int p = static_cast<int>(pos.size());
    if (p != 2 && p != 3) {
      rep.add("polarization sign", kKuga, Verdict::skip, "probe needs signature (2,k) or (3,k)");
      return;
    }
    std::optional<std::size_t> h;
    if (p == 3)
      for (auto i : pos)
        if (i != pair->first && i != pair->second) h = i;
    Vec<Q> d;
    std::size_t ga = 0, gb = 0;
    for (std::size_t i = 0; i < dz.diag.size(); ++i) {
      if (h && i == *h) continue;
      if (i == pair->first) ga = d.size();
      if (i == pair->second) gb = d.size();
      d.push_back(dz.diag[i]);
    }
    if (d.size() > static_cast<std::size_t>(kMaxCliffordGenerators)) {
      rep.add("polarization sign", kKuga, Verdict::skip, "complement has more than 10 generators");
      return;
    }
    auto sub = clifford(QuadraticForm::diagonal(d));
    auto a = cl_multiply(sub->blade(1u << ga), sub->blade(1u << gb));
    auto pr = polarization_form(*sub, a);
    const bool one = pr.plus_passes != pr.minus_passes;
    json data{{"space", h ? "complement of a positive class" : "whole space"},
              {"generators", d.size()},
              {"antisymmetric", pr.antisymmetric},
              {"probe_signature", {pr.probe_signature.pos, pr.probe_signature.neg, pr.probe_signature.null}}};
    if (one) data["sign"] = pr.plus_passes ? "+" : "-";
    rep.add("polarization sign", kKuga, one ? Verdict::pass : Verdict::fail,
            one ? "" : "positivity probe does not single out one sign", data);
  });
  return rep;
}

}  // namespace

Report run(const RunConfig& c) {
  static const std::vector<std::string> commands{"validate", "llv", "pw", "kuga", "hl", "verbitsky"};
  if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
    throw UsageError("unknown command '" + c.command + "'");
  if (!c.beta.empty() && c.command != "pw") throw UsageError("--beta applies to pw only");
  if (c.dim != 0 && c.command != "kuga") throw UsageError("--dim applies to kuga only");

  Report rep;
  if (c.command == "kuga") {
    std::optional<QuadraticForm> q;
    std::string subject;
    if (!c.q.empty()) {
      q = parse_form(c.q);
      subject = "q=" + c.q;
      if (c.dim != 0 && c.dim != static_cast<int>(q->dim())) throw UsageError("--dim differs from the size of --q");
    } else if (c.dim != 0) {
      if (c.dim < 1) throw UsageError("--dim must be positive");
      q = default_form(c.dim);
      subject = "dim=" + std::to_string(c.dim);
    } else if (!c.fixture.empty() || !c.input.empty()) {
      Subject s = load_subject(c);
      if (!s.q) throw UsageError("ring has no quadratic form on degree 2");
      q = s.q;
      subject = s.name;
    } else {
      throw UsageError("kuga needs --q, --dim, --fixture or --input");
    }
    if (static_cast<int>(q->dim()) > kMaxCliffordGenerators)
      throw UsageError("refused: the Clifford algebra on " + std::to_string(q->dim()) + " generators has 2^" +
                       std::to_string(q->dim()) + " dimensions; the bound is " +
                       std::to_string(kMaxCliffordGenerators) + " generators");
    if (!q->nondegenerate()) throw ValidationError("kuga needs a nondegenerate form");
    rep = cmd_kuga(*q);
    rep.subject = subject;
  } else {
    Subject s = load_subject(c);
    if (c.command != "validate") need_rational(s, c.command);
    if (c.command == "validate") rep = cmd_validate(s);
    else if (c.command == "llv") rep = cmd_llv(s);
    else if (c.command == "pw") rep = cmd_pw(s, c);
    else if (c.command == "hl") rep = cmd_hl(s);
    else rep = cmd_verbitsky(s);
    rep.subject = s.name;
  }
  rep.command = c.command;
  return rep;
}

}  // namespace llv::cli
