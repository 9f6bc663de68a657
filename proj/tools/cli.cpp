#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "verify.hpp"

namespace kltan::cli {

namespace {

using io::json;

struct Common {
  std::string type;
  bool json = false;
};

std::vector<int> parse_nodes(const std::string& text) {
  std::vector<int> nodes;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }), token.end());
    if (token.empty()) continue;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(ErrorKind::InvalidArgument, "bad node index '" + token + "' in parabolic set");
    }
    nodes.push_back(v);
  }
  return nodes;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string weight_list(const RootSystem& rs, const std::vector<Root>& ws) {
  if (ws.empty()) return "(none)";
  std::string out;
  for (const auto& w : ws) out += (out.empty() ? "" : ", ") + rs.format(w);
  return out;
}

std::string paren(const Word& w) { return "(" + w.to_string() + ")"; }

void print_report(const RootSystem& rs, const TangentReport& r, std::ostream& out) {
  out << "type " << rs.cartan_type().to_string() << "  x = " << paren(r.x_word)
      << "  w = " << paren(canonical_reduced_word(rs, r.w)) << "\n";
  if (r.parabolic) {
    std::string p;
    for (int i : *r.parabolic) p += (p.empty() ? "" : ",") + std::to_string(i);
    out << "parabolic {" << p << "}\n";
  }
  out << std::left << std::setw(4) << "j" << std::setw(20) << "gamma" << std::setw(14) << "verdict" << std::setw(8)
      << "indec" << std::setw(10) << "demazure" << std::setw(10) << "ordinary" << std::setw(10) << "explicit"
      << "cone\n";
  for (std::size_t k = 0; k < r.statuses.size(); ++k) {
    const auto& st = r.statuses[k];
    const auto& ev = st.evidence;
    std::string verdict(to_string(st.verdict));
    if (ev.oracle_applied) verdict += "*";
    out << std::setw(4) << k + 1 << std::setw(20) << rs.format(r.gamma.gammas[k]) << std::setw(14) << verdict
        << std::setw(8) << yes_no(ev.indecomposable) << std::setw(10) << yes_no(ev.demazure_ok) << std::setw(10)
        << yes_no(ev.ordinary_product_ok) << std::setw(10) << yes_no(ev.explicit_factor)
        << (ev.cone_coefficient ? ev.cone_coefficient->str() : "-") << "\n";
  }
  out << "kl tangent weights: " << weight_list(rs, r.kl_tangent_weights) << "\n";
  out << "schubert extra weights: " << weight_list(rs, r.schubert_extra_weights) << "\n";
  out << "complete: " << yes_no(r.complete) << "\n";
  if (std::any_of(r.statuses.begin(), r.statuses.end(), [](const auto& s) { return s.evidence.oracle_applied; })) {
    out << "* decided by the type A ordinary-product criterion\n";
  }
}

int cmd_tangent(const Common& c, const std::string& x_text, const std::string& w_text,
                const std::optional<std::string>& parabolic, bool oracle, std::ostream& out) {
  const RootSystem rs(CartanType::parse(c.type));
  const auto x = word_to_element(rs, Word::parse(x_text));
  const auto w = word_to_element(rs, Word::parse(w_text));
  const TangentOptions opts{.type_a_oracle = oracle, .cone_coefficients = true};
  const TangentReport r = parabolic ? gp_tangent_report(rs, w, x, parse_nodes(*parabolic), opts)
                                    : kl_tangent_report(rs, w, x, opts);
  if (c.json) {
    out << io::dump(io::report_json(rs, r));
  } else {
    print_report(rs, r, out);
  }
  return kExitOk;
}

int cmd_kclass(const Common& c, const std::string& x_text, const std::string& w_text, std::ostream& out) {
  const RootSystem rs(CartanType::parse(c.type));
  const auto x = word_to_element(rs, Word::parse(x_text));
  const auto w = word_to_element(rs, Word::parse(w_text));
  const Word s = canonical_reduced_word(rs, x);
  const auto p = graham_willems_class(rs, w, s);
  if (c.json) {
    json j = io::envelope("kclass");
    j["type"] = rs.cartan_type().to_string();
    j["x_word"] = io::word_json(s);
    j["w"] = io::element_json(rs, w);
    json gammas = json::array();
    for (const auto& g : gamma_sequence(rs, s).gammas) gammas.push_back(io::weight_json(rs, g));
    j["gamma"] = gammas;
    j["class"] = io::poly_json(p);
    j["class_string"] = p.to_string(rs);
    out << io::dump(j);
  } else {
    out << "P_{w,s} with s = " << paren(s) << ", w = " << paren(canonical_reduced_word(rs, w)) << ":\n"
        << p.to_string(rs) << "\n";
  }
  return kExitOk;
}

int cmd_demazure(const Common& c, const std::string& word, std::ostream& out) {
  const RootSystem rs(CartanType::parse(c.type));
  out << io::dump(io::demazure_json(rs, demazure_product(rs, Word::parse(word))));
  return kExitOk;
}

int cmd_complex(const Common& c, const std::string& word, const std::string& target, std::ostream& out) {
  const RootSystem rs(CartanType::parse(c.type));
  const auto w = word_to_element(rs, Word::parse(target));
  const auto cx = build_complex(rs, w, Word::parse(word));
  out << io::dump(io::complex_json(rs, cx, euler_characteristics(cx)));
  return kExitOk;
}

int cmd_cominuscule(const Common& c, const std::string& x_text, std::ostream& out) {
  const RootSystem rs(CartanType::parse(c.type));
  const auto x = word_to_element(rs, Word::parse(x_text));
  const bool comin = is_cominuscule_element(rs, x);
  const auto inv = inversion_set_of_inverse(rs, x);
  const bool all_indec =
      std::all_of(inv.begin(), inv.end(), [&](const Root& a) { return is_integrally_indecomposable(a, inv); });
  const bool type_a = rs.cartan_type().family == Family::A;
  if (c.json) {
    json j = io::envelope("cominuscule");
    j["type"] = rs.cartan_type().to_string();
    j["x"] = io::element_json(rs, x);
    j["cominuscule"] = comin;
    json ws = json::array();
    for (const auto& a : inv) ws.push_back(io::weight_json(rs, a));
    j["inversion_set"] = ws;
    j["all_indecomposable"] = all_indec;
    if (type_a) {
      const auto perm = to_permutation(rs, x);
      j["permutation"] = perm;
      j["avoids_321"] = type_a_cominuscule_oracle(rs, perm);
    }
    out << io::dump(j);
  } else {
    out << "x = " << paren(canonical_reduced_word(rs, x)) << "\n";
    out << "inversion set I(x^-1): " << weight_list(rs, inv) << "\n";
    out << "all integrally indecomposable: " << yes_no(all_indec) << "\n";
    out << "cominuscule: " << yes_no(comin) << "\n";
    if (type_a) {
      const auto perm = to_permutation(rs, x);
      std::string p;
      for (int v : perm) p += (p.empty() ? "" : " ") + std::to_string(v);
      out << "permutation: " << p << "  321-avoiding: " << yes_no(type_a_cominuscule_oracle(rs, perm)) << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const Common& c, int guard, std::ostream& out, std::ostream& err) {
  const RootSystem rs(CartanType::parse(c.type));
  if (rs.rank() > guard) {
    fail(ErrorKind::GroupTooLarge, "rank " + std::to_string(rs.rank()) + " exceeds --max-rank-guard " +
                                       std::to_string(guard));
  }
  const auto outcomes = verify::run_battery(rs);
  bool all_ok = true;
  for (const auto& o : outcomes) {
    all_ok = all_ok && o.ok();
    err << "verify " << rs.cartan_type().to_string() << " " << o.suite << ": " << std::fixed << std::setprecision(3)
        << o.seconds << " s\n";
  }
  if (c.json) {
    json j = io::envelope("verify");
    j["type"] = rs.cartan_type().to_string();
    json suites = json::array();
    for (const auto& o : outcomes) {
      json failures = json::array();
      for (const auto& f : o.failures) failures.push_back(json{{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
      suites.push_back(json{{"suite", o.suite}, {"cases", o.cases}, {"passed", o.ok()}, {"failures", failures}});
    }
    j["suites"] = suites;
    j["passed"] = all_ok;
    out << io::dump(j);
  } else {
    for (const auto& o : outcomes) {
      out << (o.ok() ? "PASS " : "FAIL ") << o.suite << " (" << o.cases << " cases";
      if (!o.ok()) out << ", " << o.failures.size() << " failures shown";
      out << ")\n";
      for (const auto& f : o.failures) out << "  " << f.inputs << ": expected " << f.expected << ", got " << f.got << "\n";
    }
  }
  return all_ok ? kExitOk : kExitDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tangent spaces of Schubert and Kazhdan-Lusztig varieties", "kltan"};
  app.require_subcommand(1);

  Common common;
  std::string x_text, w_text, word, target;
  std::optional<std::string> parabolic;
  bool oracle = false;
  int guard = 7;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("type", common.type, "Cartan type, e.g. A3, D4, G2")->required();
    sub->add_flag("--json", common.json, "Machine-readable output");
  };

  auto* tangent = app.add_subcommand("tangent", "Tangent weights of Y_x^w and X^w at x");
  add_common(tangent);
  tangent->add_option("--x", x_text, "Word for x")->required();
  tangent->add_option("--w", w_text, "Word for w")->required();
  tangent->add_option("--parabolic", parabolic, "Comma-separated nodes of P");
  tangent->add_flag("--type-a-oracle", oracle, "Decide decomposable weights in type A by the ordinary-product criterion");

  auto* kclass = app.add_subcommand("kclass", "Graham-Willems class P_{w,s}");
  add_common(kclass);
  kclass->add_option("--x", x_text, "Word for x")->required();
  kclass->add_option("--w", w_text, "Word for w")->required();

  auto* demazure = app.add_subcommand("demazure", "Demazure product and excess of a word (JSON)");
  add_common(demazure);
  demazure->add_option("word", word, "Word")->required();

  auto* complex = app.add_subcommand("subword-complex", "Faces, boundary and Euler characteristics of Delta(s,w) (JSON)");
  add_common(complex);
  complex->add_option("word", word, "The word s")->required();
  complex->add_option("target-word", target, "A word for w")->required();

  auto* comin = app.add_subcommand("cominuscule", "Cominuscule test for x");
  add_common(comin);
  comin->add_option("--x", x_text, "Word for x")->required();

  auto* verify = app.add_subcommand("verify", "Run the invariant battery for one root system");
  add_common(verify);
  verify->add_option("--max-rank-guard", guard, "Refuse root systems of larger rank")->check(CLI::Range(1, kMaxRank));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "run 'kltan --help' for usage\n";
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    if (sub == tangent) return cmd_tangent(common, x_text, w_text, parabolic, oracle, out);
    if (sub == kclass) return cmd_kclass(common, x_text, w_text, out);
    if (sub == demazure) return cmd_demazure(common, word, out);
    if (sub == complex) return cmd_complex(common, word, target, out);
    if (sub == comin) return cmd_cominuscule(common, x_text, out);
    return cmd_verify(common, guard, out, err);
  } catch (const Error& e) {
    if (common.json) {
      out << io::dump(io::error_json(name, e.kind(), e.what()));
    } else {
      err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    }
    return kExitDomainError;
  }
}

}  // namespace kltan::cli
