// Command-line surface: every library operation on the text formats, plus the
// theorem-verification suite. Exit codes: 0 = all checks passed, 1 = a
// mathematical check failed, 2 = usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dialg/theorems.hpp"

namespace {

using namespace dialg;

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

Field parse_field_flag(const std::string& flag) {
  if (flag == "Q") return Field::rationals();
  if (flag.rfind("p=", 0) == 0) {
    try {
      return Field::prime(static_cast<std::uint32_t>(std::stoul(flag.substr(2))));
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --field value: ") + e.what());
    }
  }
  throw UsageError("bad --field value '" + flag + "' (expected Q or p=<prime>)");
}

CentralExtension convert_extension(const CentralExtension& e, const Field& target) {
  Algebra base = convert_algebra(e.base, target);
  CochainPair f(e.base.dim, e.kernel_dim);
  for (std::size_t t = 0; t < f.data.size(); ++t)
    f.data[t] = target.from_ratio(e.cocycle.data[t].get_num(), e.cocycle.data[t].get_den());
  return from_cocycle(base, f);
}

Algebra load_algebra(const std::string& path, const std::string& field_flag) {
  Algebra a = parse_algebra(read_file(path));
  if (!field_flag.empty()) a = convert_algebra(a, parse_field_flag(field_flag));
  return a;
}

CentralExtension load_extension(const std::string& path, const std::string& field_flag) {
  CentralExtension e = parse_extension(read_file(path));
  if (!field_flag.empty()) e = convert_extension(e, parse_field_flag(field_flag));
  return e;
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw UsageError("mixed-field inputs (" + a.name() + " vs " + b.name() + ")");
}

std::string vec_str(const Field& F, const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + F.str(v[i]);
  return s + "]";
}

int cmd_check(const Algebra& a, bool verbose) {
  AxiomReport rep = check_axioms(a);
  std::cout << "dim=" << a.dim << " field=" << a.field.name() << "\n";
  if (verbose) std::cout << write_algebra(a);
  std::cout << "axioms=" << (rep.ok ? "pass" : "fail") << "\n";
  for (const AxiomViolation& v : rep.violations)
    std::cout << "violation " << axiom_name(v.id) << " at (" << v.i + 1 << "," << v.j + 1 << ","
              << v.k + 1 << ") lhs=" << vec_str(a.field, v.lhs) << " rhs=" << vec_str(a.field, v.rhs)
              << "\n";
  return rep.ok ? 0 : 1;
}

int cmd_invariants(const Algebra& a) {
  std::cout << "dim=" << a.dim << " derived=" << derived(a).dim() << " center=" << center(a).dim()
            << " perfect=" << (is_perfect(a) ? "yes" : "no") << " homfield=" << hom_to_field_dim(a)
            << "\n";
  return 0;
}

void print_representatives(const Field& F, const CohomologyResult& r) {
  for (std::size_t t = 0; t < r.representatives.size(); ++t) {
    const CochainPair& f = r.representatives[t];
    std::cout << "representative " << t + 1 << ":\n";
    for (Prod p : {Prod::Left, Prod::Right})
      for (std::size_t i = 0; i < f.base_dim; ++i)
        for (std::size_t j = 0; j < f.base_dim; ++j)
          for (std::size_t c = 0; c < f.coeff_dim; ++c)
            if (!F.is_zero(f.at(p, i, j, c)))
              std::cout << "cocycle " << prod_name(p) << " " << i + 1 << " " << j + 1 << " "
                        << c + 1 << " " << F.str(f.at(p, i, j, c)) << "\n";
  }
}

int cmd_multiplier(const Algebra& a, bool verbose) {
  CohomologyResult r = multiplier(a);
  std::cout << "z2_dim=" << r.z2_dim << "\n" << "b2_dim=" << r.b2_dim << "\n"
            << "multiplier_dim=" << r.h2_dim << "\n";
  std::cout << "dim M(L) = " << r.h2_dim << "\n";
  if (verbose) print_representatives(a.field, r);
  return 0;
}

int cmd_h2(const Algebra& a, std::size_t k, bool verbose) {
  CohomologyResult r = h2(a, k);
  std::cout << "k=" << k << "\n" << "z2_dim=" << r.z2_dim << "\n" << "b2_dim=" << r.b2_dim << "\n"
            << "h2_dim=" << r.h2_dim << "\n";
  std::cout << "dim H^2(L, F^" << k << ") = " << r.h2_dim << "\n";
  if (verbose) print_representatives(a.field, r);
  return 0;
}

int cmd_cover(const Algebra& a, const std::string& out) {
  CentralExtension e = universal_central_extension(a);
  std::cout << "kernel_dim=" << e.kernel_dim << "\n" << "total_dim=" << e.total.dim << "\n";
  std::cout << certify_universal(e).describe() << "\n";
  write_output(out, write_extension(e));
  return 0;
}

int cmd_split(const CentralExtension& e) {
  ensure_valid(e);
  auto beta = splits(e);
  std::cout << "split=" << (beta ? "yes" : "no") << "\n";
  if (beta) {
    std::cout << "section:\n";
    for (std::size_t i = 0; i < beta->target_dim; ++i) {
      std::cout << " ";
      for (std::size_t j = 0; j < beta->source_dim; ++j)
        std::cout << " " << e.base.field.str(beta->matrix(i, j));
      std::cout << "\n";
    }
  }
  return beta ? 0 : 1;
}

int cmd_covers(const CentralExtension& ea, const CentralExtension& eb) {
  require_same_field(ea.base.field, eb.base.field);
  CoveringResult r = find_covering(ea, eb);
  std::cout << "covers=" << (r.witness ? "yes" : "no") << "\n";
  if (r.witness) std::cout << "solution_space_dim=" << r.solution_space_dim << "\n";
  return r.witness ? 0 : 1;
}

int cmd_certify(const CentralExtension& e) {
  ensure_valid(e);
  UniversalityCertificate c = certify_universal(e);
  std::cout << "central=" << (c.central ? "yes" : "no") << "\n"
            << "total_perfect=" << (c.total_perfect ? "yes" : "no") << "\n"
            << "total_multiplier_dim=" << c.total_multiplier_dim << "\n"
            << "universal=" << (c.universal ? "yes" : "no") << "\n";
  std::cout << c.describe() << "\n";
  return c.universal ? 0 : 1;
}

int cmd_compose(const CentralExtension& e1, const CentralExtension& e2, const std::string& out) {
  require_same_field(e1.base.field, e2.base.field);
  CentralExtension e3 = compose(e1, e2);
  std::cout << "base_dim=" << e3.base.dim << "\n" << "kernel_dim=" << e3.kernel_dim << "\n"
            << "central=" << (is_central(e3) ? "yes" : "no") << "\n";
  write_output(out, write_extension(e3));
  return 0;
}

int cmd_verify(const Algebra& a, std::uint64_t seed) {
  std::vector<TheoremCheck> rows = run_theorem_suite(a, seed);
  std::size_t failed = 0, skipped = 0;
  for (const TheoremCheck& r : rows) {
    const char* tag = !r.applicable ? "SKIP" : r.passed ? "PASS" : "FAIL";
    if (!r.applicable) ++skipped;
    else if (!r.passed) ++failed;
    std::cout << tag << "  " << r.key;
    for (std::size_t pad = r.key.size(); pad < 32; ++pad) std::cout << ' ';
    std::cout << " " << r.detail << "\n";
  }
  std::cout << "result=" << (failed == 0 ? "pass" : "fail") << " rows=" << rows.size()
            << " failed=" << failed << " skipped=" << skipped << "\n";
  return failed == 0 ? 0 : 1;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& field_flag, std::uint64_t seed, const std::string& out) {
  Field F = field_flag.empty() ? Field::rationals() : parse_field_flag(field_flag);
  auto nat_param = [&](std::size_t idx) -> std::size_t {
    if (idx >= params.size()) throw UsageError("gen " + family + ": missing parameter");
    try {
      return std::stoul(params[idx]);
    } catch (const std::exception&) {
      throw UsageError("gen " + family + ": bad parameter '" + params[idx] + "'");
    }
  };

  Algebra a;
  if (family == "abelian") a = gen_abelian(F, nat_param(0));
  else if (family == "matrix") a = gen_matrix_double(F, nat_param(0));
  else if (family == "truncpoly") a = gen_truncated_poly(F, nat_param(0));
  else if (family == "random") a = gen_random(F, nat_param(0), seed);
  else if (family == "catalog") {
    if (params.empty()) throw UsageError("gen catalog: missing name");
    a = catalog_algebra(params[0], F);
  } else {
    throw UsageError("unknown family '" + family + "' (abelian, matrix, truncpoly, random, catalog)");
  }
  write_output(out, write_algebra(a));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with diassociative algebras: multipliers, covers,"
               " and universal central extensions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string in1, in2, out, field_flag, family;
  std::vector<std::string> params;
  std::size_t kdim = 1;
  std::uint64_t seed = 1;
  bool serial = false;
  bool verbose = false;

  app.add_flag("--serial", serial, "run the serial reference kernels instead of OpenMP");
  app.add_flag("-v,--verbose", verbose, "echo canonical forms and cohomology representatives");

  auto add_field = [&](CLI::App* c) { c->add_option("--field", field_flag, "Q or p=<prime>"); };

  auto* c_check = app.add_subcommand("check", "verify the five defining identities");
  c_check->add_option("algebra", in1)->required();
  add_field(c_check);

  auto* c_inv = app.add_subcommand("invariants", "derived ideal, center, perfectness");
  c_inv->add_option("algebra", in1)->required();
  add_field(c_inv);

  auto* c_mult = app.add_subcommand("multiplier", "dim M(L) = dim H^2(L, F)");
  c_mult->add_option("algebra", in1)->required();
  add_field(c_mult);

  auto* c_h2 = app.add_subcommand("h2", "second cohomology with k central coefficients");
  c_h2->add_option("algebra", in1)->required();
  c_h2->add_option("-k", kdim, "coefficient dimension")->default_val(1);
  add_field(c_h2);

  auto* c_cover = app.add_subcommand("cover", "universal central extension of a perfect algebra");
  c_cover->add_option("algebra", in1)->required();
  c_cover->add_option("-o,--output", out, "extension file to write");
  add_field(c_cover);

  auto* c_split = app.add_subcommand("split", "homomorphic section, if one exists");
  c_split->add_option("extension", in1)->required();
  add_field(c_split);

  auto* c_covers = app.add_subcommand("covers", "covering morphism between two extensions");
  c_covers->add_option("extensionA", in1)->required();
  c_covers->add_option("extensionB", in2)->required();
  add_field(c_covers);

  auto* c_cert = app.add_subcommand("certify-universal", "universality certificate");
  c_cert->add_option("extension", in1)->required();
  add_field(c_cert);

  auto* c_comp = app.add_subcommand("compose", "composite of a two-step central tower");
  c_comp->add_option("extension1", in1)->required();
  c_comp->add_option("extension2", in2)->required();
  c_comp->add_option("-o,--output", out, "extension file to write");
  add_field(c_comp);

  auto* c_verify = app.add_subcommand("verify-theorems", "machine-check the structural statements");
  c_verify->add_option("algebra", in1)->required();
  c_verify->add_option("--seed", seed)->default_val(1);
  add_field(c_verify);

  auto* c_gen = app.add_subcommand("gen", "generate a catalog or family algebra");
  c_gen->add_option("family", family, "abelian|matrix|truncpoly|random|catalog")->required();
  c_gen->add_option("params", params, "family parameters");
  c_gen->add_option("-o,--output", out, "file to write");
  c_gen->add_option("--seed", seed)->default_val(1);
  add_field(c_gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (serial) dialg::set_default_exec(dialg::Exec::Serial);

  try {
    if (c_check->parsed()) return cmd_check(load_algebra(in1, field_flag), verbose);
    if (c_inv->parsed()) return cmd_invariants(load_algebra(in1, field_flag));
    if (c_mult->parsed()) return cmd_multiplier(load_algebra(in1, field_flag), verbose);
    if (c_h2->parsed()) return cmd_h2(load_algebra(in1, field_flag), kdim, verbose);
    if (c_cover->parsed()) return cmd_cover(load_algebra(in1, field_flag), out);
    if (c_split->parsed()) return cmd_split(load_extension(in1, field_flag));
    if (c_covers->parsed())
      return cmd_covers(load_extension(in1, field_flag), load_extension(in2, field_flag));
    if (c_cert->parsed()) return cmd_certify(load_extension(in1, field_flag));
    if (c_comp->parsed())
      return cmd_compose(load_extension(in1, field_flag), load_extension(in2, field_flag), out);
    if (c_verify->parsed()) return cmd_verify(load_algebra(in1, field_flag), seed);
    if (c_gen->parsed()) return cmd_gen(family, params, field_flag, seed, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
