// hilbloc: Chern numbers, genera and Euler characteristics of Hilbert schemes
// of points on surfaces, by exact Bott residue sums on toric models.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hilbloc/error.hpp"
#include "hilbloc/genera.hpp"
#include "hilbloc/json_io.hpp"
#include "hilbloc/localization.hpp"
#include "hilbloc/universal.hpp"
#include "hilbloc/verify.hpp"

using namespace hilbloc;

namespace {

constexpr int kMaxStandardN = 5;
constexpr int kMaxLongN = 7;
constexpr int kPublishedTwistOrder = 5;

struct Config {
  std::string surface = "p2";
  int n = 2;
  int order = 5;
  int k = 0;
  int r = 0;
  std::string bundle;
  std::string taut;
  bool csv = false;
  bool long_mode = false;
  std::string ps;
  std::string genus = "todd";
  std::string chern_class;
  std::string kind = "f";
  std::string y = "1";
  int a = 0;
  std::string profile = "standard";
};

struct UsageError : Error {
  using Error::Error;
};

void require_n(const Config& c, int n, const char* what) {
  if (n < 0) throw UsageError(std::string(what) + " must be non-negative");
  if (n > kMaxLongN) throw UsageError(std::string(what) + " above " + std::to_string(kMaxLongN) + " is not supported");
  if (n > kMaxStandardN && !c.long_mode)
    throw UsageError(std::string(what) + " above " + std::to_string(kMaxStandardN) + " requires --long");
}

IntegrationOptions options(const Config& c) {
  IntegrationOptions o;
  if (!c.ps.empty()) {
    const auto comma = c.ps.find(',');
    if (comma == std::string::npos) throw UsageError("--ps expects a,b");
    try {
      o.specialization = OneParam{std::stoll(c.ps.substr(0, comma)), std::stoll(c.ps.substr(comma + 1))};
    } catch (const std::exception&) {
      throw UsageError("--ps expects two integers a,b");
    }
  }
  return o;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_chern_csv(const ChernVector& v) {
  std::cout << "partition,value\n";
  for (const auto& [lambda, c] : v.numbers()) std::cout << "\"" << lambda.key() << "\"," << to_string(c) << "\n";
}

int cmd_chern(const Config& c) {
  require_n(c, c.n, "--n");
  const auto s = ToricSurface::parse(c.surface);
  const auto v = chern_numbers_hilb(s, c.n, options(c));
  if (c.csv) {
    print_chern_csv(v);
    return 0;
  }
  Json j = envelope("chern");
  j["surface"] = s.name();
  j["n"] = c.n;
  j["fixed_points"] = enumerate_fixed_points(s, c.n).size();
  j["chern_numbers"] = to_json(v);
  emit(j);
  return 0;
}

int cmd_universal(const Config& c) {
  require_n(c, c.n, "--n");
  const auto h1 = hilb_series_localized(ToricSurface::p2(), c.n, options(c));
  const auto h2 = hilb_series_localized(ToricSurface::p1xp1(), c.n, options(c));
  const auto table = universal_chern_polys(c.n, h1, h2)[c.n];
  if (c.csv) {
    std::cout << "partition,polynomial\n";
    for (const auto& [lambda, p] : table.polys) std::cout << "\"" << lambda.key() << "\"," << to_string(p) << "\n";
    return 0;
  }
  Json j = envelope("universal");
  j["n"] = c.n;
  j["variables"] = {"c1sq", "c2"};
  j["polynomials"] = to_json(table);
  emit(j);
  return 0;
}

ModelKind model_kind(const std::string& spec) {
  if (spec == "p2") return ModelKind::P2;
  if (spec == "p1xp1") return ModelKind::P1xP1;
  throw UsageError("betti supports --surface p2 or p1xp1");
}

int cmd_betti(const Config& c) {
  require_n(c, c.n, "--n");
  const auto b = betti_hilb_model(model_kind(c.surface), c.n);
  if (c.csv) {
    std::cout << "degree,betti\n";
    for (std::size_t p = 0; p < b.size(); ++p) std::cout << 2 * p << "," << b[p] << "\n";
    return 0;
  }
  Json j = envelope("betti");
  j["surface"] = c.surface;
  j["n"] = c.n;
  j["even_betti"] = b;
  emit(j);
  return 0;
}

int cmd_chi(const Config& c) {
  require_n(c, c.n, "--n");
  const auto s = ToricSurface::parse(c.surface);
  Json j = envelope("chi");
  j["surface"] = s.name();
  j["n"] = c.n;
  if (!c.taut.empty()) {
    const auto l = parse_bundle(s, c.taut);
    KClass x{{{l, 1}}, 0};
    const Rational v = chi_tautological(s, c.n, x, options(c));
    const auto inv = invariants(s, l);
    j["bundle"] = c.taut;
    j["chi_taut"] = to_string(v);
    j["closed_form"] = c.n >= 1 ? to_string(chi_taut_closed(inv.chi_l, inv.chi_o, c.n)) : "1";
  } else {
    const std::string spec = c.bundle.empty() ? std::to_string(c.k) : c.bundle;
    const auto l = parse_bundle(s, spec);
    const Rational v = chi_line_bundle(s, c.n, l, c.r, options(c));
    j["bundle"] = spec;
    j["r"] = c.r;
    j["chi"] = to_string(v);
  }
  if (c.csv) {
    std::cout << "key,value\n";
    for (const auto& [key, value] : j.items())
      if (key != "schema" && key != "command") std::cout << key << "," << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    return 0;
  }
  emit(j);
  return 0;
}

int cmd_twist(const Config& c) {
  if (c.order < 1) throw UsageError("--order must be at least 1");
  if (c.order > 8) throw UsageError("--order above 8 is not supported");
  if (c.order > kPublishedTwistOrder && !c.long_mode) throw UsageError("--order above 5 requires --long");
  const auto ab = fit_ab(c.r, c.order, {0, 1, 2}, options(c));
  if (c.csv) {
    std::cout << "order,logA,A,logB,B\n";
    for (int m = 0; m <= c.order; ++m)
      std::cout << m << "," << to_string(ab.log_a[m]) << "," << to_string(ab.a[m]) << "," << to_string(ab.log_b[m])
                << "," << to_string(ab.b[m]) << "\n";
    return 0;
  }
  Json j = envelope("twist-series");
  j["r"] = c.r;
  j["order"] = c.order;
  j["logA"] = to_json(ab.log_a);
  j["A"] = to_json(ab.a);
  j["logB"] = to_json(ab.log_b);
  j["B"] = to_json(ab.b);
  if (c.order > kPublishedTwistOrder) {
    Json orders = Json::array();
    for (int m = kPublishedTwistOrder + 1; m <= c.order; ++m) orders.push_back(m);
    j["unverified_orders"] = orders;
    j["marker"] = "derived, unverified against published values";
  }
  emit(j);
  return 0;
}

/// (c1^2, c2) from --class, else from the toric surface.
std::pair<Rational, Rational> surface_numbers(const Config& c, std::string& label) {
  if (!c.chern_class.empty()) {
    const auto comma = c.chern_class.find(',');
    if (comma == std::string::npos) throw UsageError("--class expects c1sq,c2");
    label = "class(" + c.chern_class + ")";
    return {parse_rational(c.chern_class.substr(0, comma)), parse_rational(c.chern_class.substr(comma + 1))};
  }
  const auto s = ToricSurface::parse(c.surface);
  label = s.name();
  return {Rational(s.c1_squared()), Rational(s.c2())};
}

int cmd_genus(const Config& c) {
  require_n(c, c.order, "--order");
  std::string label;
  const auto [c1sq, c2] = surface_numbers(c, label);
  const auto h1 = hilb_series_localized(ToricSurface::p2(), c.order, options(c));
  const auto h2 = hilb_series_localized(ToricSurface::p1xp1(), c.order, options(c));
  const auto [a, b] = surface_class_coordinates(c1sq, c2);
  const auto h = hilb_series(a, b, c.order, h1, h2);
  const int degree = 2 * c.order;

  Json j = envelope("genus");
  j["surface"] = label;
  j["genus"] = c.genus;
  Json values = Json::array();
  if (c.genus == "chi_y") {
    const auto s = genus_series(chi_minus_y_genus(degree), h);
    for (int n = 0; n <= c.order; ++n) values.push_back(Json{{"n", n}, {"value", to_json(s[n])}});
  } else {
    GenusSpec<Rational> q = todd_genus(degree);
    if (c.genus == "signature") {
      q = signature_genus(degree);
    } else if (c.genus == "euler") {
      q = euler_genus(degree);
    } else if (c.genus.rfind("phi:", 0) == 0) {
      int level = 0, k = 0;
      char sep = 0;
      std::istringstream in(c.genus.substr(4));
      if (!(in >> level >> sep >> k) || sep != ':') throw UsageError("--genus phi:N:k");
      q = phi_genus(level, k, degree);
    } else if (c.genus != "todd") {
      throw UsageError("unknown genus '" + c.genus + "' (todd | signature | euler | chi_y | phi:N:k)");
    }
    const auto s = genus_series(q, h);
    for (int n = 0; n <= c.order; ++n) values.push_back(Json{{"n", n}, {"value", to_string(s[n])}});
  }
  if (c.csv) {
    std::cout << "n,value\n";
    for (const auto& v : values)
      std::cout << v["n"].get<int>() << "," << (v["value"].is_string() ? v["value"].get<std::string>() : v["value"].dump())
                << "\n";
    return 0;
  }
  j["values"] = values;
  emit(j);
  return 0;
}

int cmd_series_id(const Config& c) {
  if (c.order < 0 || c.order > 200) throw UsageError("--order must be in 0..200");
  Series s("z", c.order);
  Json j = envelope("series-id");
  j["kind"] = c.kind;
  j["a"] = c.a;
  if (c.kind == "v") {
    s = solve_v(c.a, c.order);
    j["agrees_with_iteration"] = s == solve_v_iterative(c.a, c.order);
  } else if (c.kind == "f" || c.kind == "g") {
    const Rational y = parse_rational(c.y);
    s = fg_series(c.kind == "f" ? FGKind::F : FGKind::G, y, c.a, c.order);
    j["y"] = to_string(y);
    if (c.kind == "g" && c.order >= 1) {
      const Series shifted = fg_series(FGKind::F, y - 2 * c.a - 1, c.a, c.order);
      const Series g1 = fg_series(FGKind::G, 1, c.a, c.order);
      j["derivative_identity"] = s.derivative() == (shifted * y).truncated(c.order - 1);
      j["power_identity"] = s == pow_series(g1, y);
    }
  } else {
    throw UsageError("--kind must be f, g or v");
  }
  if (c.csv) {
    std::cout << "n,coefficient\n";
    for (int i = 0; i <= c.order; ++i) std::cout << i << "," << to_string(s[i]) << "\n";
    return 0;
  }
  j["series"] = to_json(s);
  emit(j);
  return 0;
}

int cmd_verify(const Config& c) {
  const Profile p = parse_profile(c.profile);
  std::cout << "hilbloc acceptance (" << to_string(p) << ")\n";
  bool ok = true;
  run_acceptance(p, [&](const CheckResult& r) {
    std::cout << format_line(r) << std::endl;
    ok = ok && r.status != Status::Fail;
  });
  std::cout << (ok ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact localization on Hilbert schemes of points"};
  app.require_subcommand(1);
  Config c;

  auto add_surface = [&](CLI::App* sub) {
    sub->add_option("--surface", c.surface, "p2 | p1xp1 | blowup:<surface>:<chart>");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--csv", c.csv, "CSV instead of JSON");
    sub->add_flag("--long", c.long_mode, "allow n = 6, 7 and twist orders 6-8");
    sub->add_option("--ps", c.ps, "one-parameter subgroup a,b overriding the primary ladder");
  };

  auto* chern = app.add_subcommand("chern", "Chern numbers of Hilb^n(S)");
  add_surface(chern);
  chern->add_option("--n", c.n, "number of points")->required();
  add_common(chern);

  auto* universal = app.add_subcommand("universal", "universal polynomials P_lambda(c1sq, c2)");
  universal->add_option("--n", c.n, "number of points")->required();
  add_common(universal);

  auto* betti = app.add_subcommand("betti", "even Betti numbers of Hilb^n of p2 or p1xp1");
  add_surface(betti);
  betti->add_option("--n", c.n, "number of points")->required();
  add_common(betti);

  auto* chi = app.add_subcommand("chi", "chi(L_n (x) E^r), or chi(F^[n]) with --taut");
  add_surface(chi);
  chi->add_option("--n", c.n, "number of points")->required();
  chi->add_option("--k", c.k, "L = O(k) on p2");
  chi->add_option("--bundle", c.bundle, "line bundle: k (p2), k1,k2 (p1xp1) or one coefficient per ray");
  chi->add_option("--r", c.r, "power of E");
  chi->add_option("--taut", c.taut, "line bundle F; computes chi(F^[n]) instead");
  add_common(chi);

  auto* twist = app.add_subcommand("twist-series", "A_r, B_r fitted from P2");
  twist->add_option("--r", c.r, "twist r")->required();
  twist->add_option("--order", c.order, "order in z (<= 5, or <= 8 with --long)");
  add_common(twist);

  auto* genus = app.add_subcommand("genus", "genus of H(S) term by term");
  add_surface(genus);
  genus->add_option("--class", c.chern_class, "surface class given as c1sq,c2 instead of --surface");
  genus->add_option("--genus", c.genus, "todd | signature | euler | chi_y | phi:N:k");
  genus->add_option("--order", c.order, "highest n");
  add_common(genus);

  auto* series = app.add_subcommand("series-id", "f, g and v series");
  series->add_option("--kind", c.kind, "f | g | v");
  series->add_option("--y", c.y, "y (rational)");
  series->add_option("--a", c.a, "a");
  series->add_option("--order", c.order, "truncation order");
  add_common(series);

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--profile", c.profile, "quick | standard | long");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*chern) return cmd_chern(c);
    if (*universal) return cmd_universal(c);
    if (*betti) return cmd_betti(c);
    if (*chi) return cmd_chi(c);
    if (*twist) return cmd_twist(c);
    if (*genus) return cmd_genus(c);
    if (*series) return cmd_series_id(c);
    if (*verify) return cmd_verify(c);
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help() << "\n";
    return 2;
  }
  return 2;
}
