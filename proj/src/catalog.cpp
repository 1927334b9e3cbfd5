#include "dialg/catalog.hpp"

#include <random>
#include <sstream>

namespace dialg {

namespace {

struct TokenLine {
  std::size_t no;
  std::vector<std::string> tokens;
};

std::vector<TokenLine> tokenize(const std::string& text) {
  std::vector<TokenLine> out;
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    TokenLine tl{no, {}};
    std::string tok;
    while (ls >> tok) tl.tokens.push_back(tok);
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
  }
  return out;
}

std::size_t parse_nat(const TokenLine& l, const std::string& tok) {
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(l.no, "expected a nonnegative integer, got '" + tok + "'");
  }
}

std::size_t parse_index(const TokenLine& l, const std::string& tok, std::size_t bound,
                        const char* what) {
  std::size_t v = parse_nat(l, tok);
  if (v < 1 || v > bound)
    throw ParseError(l.no, std::string(what) + " index " + tok + " out of range [1, " +
                               std::to_string(bound) + "]");
  return v - 1;
}

struct Parsed {
  Algebra alg;
  bool has_kernel = false;
  std::size_t kernel = 0;
  CochainPair cocycle;
};

Parsed parse_impl(const std::string& text, bool extension) {
  auto lines = tokenize(text);
  if (lines.size() < 3) throw ParseError(lines.empty() ? 1 : lines.back().no, "truncated header");

  if (lines[0].tokens.size() != 2 || lines[0].tokens[0] != "dialg")
    throw ParseError(lines[0].no, "expected 'dialg <version>'");
  if (lines[0].tokens[1] != "1")
    throw ParseError(lines[0].no, "unsupported format version '" + lines[0].tokens[1] + "'");

  if (lines[1].tokens.size() != 2 || lines[1].tokens[0] != "field")
    throw ParseError(lines[1].no, "expected 'field Q' or 'field p=<prime>'");
  Field F;
  const std::string& fs = lines[1].tokens[1];
  if (fs == "Q") {
    F = Field::rationals();
  } else if (fs.rfind("p=", 0) == 0) {
    std::size_t p = parse_nat(lines[1], fs.substr(2));
    try {
      F = Field::prime(static_cast<std::uint32_t>(p));
    } catch (const Error& e) {
      throw ParseError(lines[1].no, e.what());
    }
  } else {
    throw ParseError(lines[1].no, "unknown field '" + fs + "'");
  }

  if (lines[2].tokens.size() != 2 || lines[2].tokens[0] != "dim")
    throw ParseError(lines[2].no, "expected 'dim <n>'");
  std::size_t n = parse_nat(lines[2], lines[2].tokens[1]);

  Parsed out{Algebra::zero(F, n), false, 0, CochainPair{}};
  std::vector<bool> seen(2 * n * n * n, false);
  std::vector<bool> seen_cocycle;

  enum class Phase { Body, Cocycle } phase = Phase::Body;
  for (std::size_t li = 3; li < lines.size(); ++li) {
    const TokenLine& l = lines[li];
    const std::string& kw = l.tokens[0];

    if (kw == "kernel") {
      if (!extension) throw ParseError(l.no, "'kernel' is not allowed in an algebra file");
      if (out.has_kernel) throw ParseError(l.no, "duplicate 'kernel' line");
      if (l.tokens.size() != 2) throw ParseError(l.no, "expected 'kernel <k>'");
      out.has_kernel = true;
      out.kernel = parse_nat(l, l.tokens[1]);
      out.cocycle = CochainPair(n, out.kernel);
      seen_cocycle.assign(2 * n * n * out.kernel, false);
      phase = Phase::Cocycle;
      continue;
    }

    if (phase == Phase::Body) {
      if (kw != "left" && kw != "right")
        throw ParseError(l.no, "expected 'left', 'right'" + std::string(extension ? " or 'kernel'" : ""));
      if (l.tokens.size() != 5) throw ParseError(l.no, "expected '" + kw + " <i> <j> <k> <value>'");
      Prod p = kw == "left" ? Prod::Left : Prod::Right;
      std::size_t i = parse_index(l, l.tokens[1], n, "basis");
      std::size_t j = parse_index(l, l.tokens[2], n, "basis");
      std::size_t k = parse_index(l, l.tokens[3], n, "basis");
      std::size_t key = (((p == Prod::Left ? 0 : 1) * n + i) * n + j) * n + k;
      if (seen[key]) throw ParseError(l.no, "duplicate structure constant " + kw + " " +
                                                l.tokens[1] + " " + l.tokens[2] + " " + l.tokens[3]);
      seen[key] = true;
      try {
        out.alg.tensor(p).at(i, j, k) = F.parse(l.tokens[4]);
      } catch (const Error& e) {
        throw ParseError(l.no, e.what());
      }
      continue;
    }

    // cocycle phase
    if (kw != "cocycle") throw ParseError(l.no, "expected 'cocycle' after the kernel line");
    if (l.tokens.size() != 6)
      throw ParseError(l.no, "expected 'cocycle left|right <i> <j> <c> <value>'");
    if (l.tokens[1] != "left" && l.tokens[1] != "right")
      throw ParseError(l.no, "expected 'left' or 'right' after 'cocycle'");
    Prod p = l.tokens[1] == "left" ? Prod::Left : Prod::Right;
    std::size_t i = parse_index(l, l.tokens[2], n, "basis");
    std::size_t j = parse_index(l, l.tokens[3], n, "basis");
    std::size_t c = parse_index(l, l.tokens[4], out.kernel, "coefficient");
    std::size_t key = out.cocycle.index(p, i, j, c);
    if (seen_cocycle[key]) throw ParseError(l.no, "duplicate cocycle entry");
    seen_cocycle[key] = true;
    try {
      out.cocycle.at(p, i, j, c) = F.parse(l.tokens[5]);
    } catch (const Error& e) {
      throw ParseError(l.no, e.what());
    }
  }

  if (extension && !out.has_kernel)
    throw ParseError(lines.back().no, "extension file is missing the 'kernel' line");
  return out;
}

}  // namespace

Algebra parse_algebra(const std::string& text) { return parse_impl(text, false).alg; }

CentralExtension parse_extension(const std::string& text) {
  Parsed p = parse_impl(text, true);
  return from_cocycle(p.alg, p.cocycle);
}

std::string write_algebra(const Algebra& a) {
  std::ostringstream os;
  os << "dialg 1\n" << "field " << a.field.name() << "\n" << "dim " << a.dim << "\n";
  for (Prod p : {Prod::Left, Prod::Right})
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t k = 0; k < a.dim; ++k) {
          const Scalar& v = a.tensor(p).at(i, j, k);
          if (a.field.is_zero(v)) continue;
          os << prod_name(p) << " " << i + 1 << " " << j + 1 << " " << k + 1 << " "
             << a.field.str(v) << "\n";
        }
  return os.str();
}

std::string write_extension(const CentralExtension& e) {
  std::ostringstream os;
  os << write_algebra(e.base);
  os << "kernel " << e.kernel_dim << "\n";
  for (Prod p : {Prod::Left, Prod::Right})
    for (std::size_t i = 0; i < e.base.dim; ++i)
      for (std::size_t j = 0; j < e.base.dim; ++j)
        for (std::size_t c = 0; c < e.kernel_dim; ++c) {
          const Scalar& v = e.cocycle.at(p, i, j, c);
          if (e.base.field.is_zero(v)) continue;
          os << "cocycle " << prod_name(p) << " " << i + 1 << " " << j + 1 << " " << c + 1 << " "
             << e.base.field.str(v) << "\n";
        }
  return os.str();
}

Algebra convert_algebra(const Algebra& a, const Field& target) {
  Algebra r = Algebra::zero(target, a.dim);
  for (Prod p : {Prod::Left, Prod::Right})
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t k = 0; k < a.dim; ++k) {
          const Scalar& v = a.tensor(p).at(i, j, k);
          if (!a.field.is_zero(v)) r.tensor(p).at(i, j, k) = target.from_ratio(v.get_num(), v.get_den());
        }
  return r;
}

Algebra gen_abelian(const Field& F, std::size_t n) { return Algebra::zero(F, n); }

Algebra gen_double_assoc(const Field& F, const Tensor3& assoc_table) {
  Algebra a{F, assoc_table.n(), assoc_table, assoc_table};
  AxiomReport rep = check_axioms(a);
  if (!rep.ok) throw Error("gen_double_assoc: table is not associative");
  return a;
}

Algebra gen_matrix_double(const Field& F, std::size_t m) {
  if (m == 0) throw Error("gen_matrix_double: m must be positive");
  Tensor3 t(m * m);
  // E_{ab} E_{cd} = [b == c] E_{ad}, with E_{ab} at index a*m + b
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t d = 0; d < m; ++d) t.at(a * m + b, b * m + d, a * m + d) = Scalar(1);
  return gen_double_assoc(F, t);
}

Algebra gen_truncated_poly(const Field& F, std::size_t n) {
  if (n == 0) throw Error("gen_truncated_poly: n must be positive");
  Tensor3 t(n);
  // basis t^1 .. t^n at indices 0 .. n-1
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a + b + 2 <= n) t.at(a, b, a + b + 1) = Scalar(1);
  return gen_double_assoc(F, t);
}

Algebra gen_random(const Field& F, std::size_t n, std::uint64_t seed) {
  if (n == 0) return gen_abelian(F, 0);
  std::mt19937_64 rng(seed);
  if (n == 1) return gen_abelian(F, 1);  // no upward-graded slot exists

  for (int attempt = 0; attempt < 20000; ++attempt) {
    Algebra a = Algebra::zero(F, n);
    // sparse upward-graded entries keep the sampler inside nilpotent
    // territory, where the identities have a workable acceptance rate
    for (std::size_t e = 0; e < n; ++e) {
      Prod p = rng() % 2 == 0 ? Prod::Left : Prod::Right;
      std::size_t i = rng() % (n - 1);
      std::size_t j = rng() % (n - 1);
      std::size_t lo = std::max(i, j) + 1;
      std::size_t k = lo + rng() % (n - lo);
      a.tensor(p).at(i, j, k) = F.sample_nonzero(rng);
    }
    if (check_axioms(a).ok) return a;
  }
  throw Error("gen_random: no axiom-satisfying sample found for this seed");
}

namespace {

Algebra build_d1(const Field& F) { return gen_abelian(F, 1); }
Algebra build_a2(const Field& F) { return gen_abelian(F, 2); }
Algebra build_k1(const Field& F) { return gen_matrix_double(F, 1); }
Algebra build_n2(const Field& F) {
  Algebra a = Algebra::zero(F, 2);
  a.left.at(0, 0, 1) = Scalar(1);  // e1 ⊣ e1 = e2, right product zero
  return a;
}
Algebra build_t2(const Field& F) { return gen_truncated_poly(F, 2); }
Algebra build_t3(const Field& F) { return gen_truncated_poly(F, 3); }
Algebra build_m2d(const Field& F) { return gen_matrix_double(F, 2); }
Algebra build_m3d(const Field& F) { return gen_matrix_double(F, 3); }

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"d1", "1-dim abelian", build_d1, 0, 1, false, 2},
      {"a2", "2-dim abelian", build_a2, 0, 2, false, 8},
      {"k1", "1-dim idempotent, both products e*e = e", build_k1, 1, 0, true, 0},
      {"n2", "2-dim nilpotent, only e1 ⊣ e1 = e2", build_n2, 1, 1, false, 1},
      {"t2", "truncated polynomials of degree 2", build_t2, 1, 1, false, 2},
      {"t3", "truncated polynomials of degree 3", build_t3, 2, 1, false, std::nullopt},
      {"m2d", "doubled 2x2 matrix algebra", build_m2d, 4, 0, true, 0},
      {"m3d", "doubled 3x3 matrix algebra", build_m3d, 9, 0, true, 0},
  };
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

Algebra catalog_algebra(const std::string& name, const Field& F) {
  const CatalogEntry* e = catalog_find(name);
  if (!e) {
    std::string names;
    for (const CatalogEntry& c : catalog()) names += (names.empty() ? "" : ", ") + c.name;
    throw Error("unknown catalog algebra '" + name + "' (have: " + names + ")");
  }
  return e->build(F);
}

}  // namespace dialg
