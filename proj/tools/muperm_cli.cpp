// Command-line front end. Talks to the library only through muperm.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "muperm/muperm.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitError = 2;

struct Output {
  bool table = false;
  std::string path;
};

class CString {
 public:
  CString() = default;
  ~CString() { muperm_string_free(p_); }
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
  char** out() { return &p_; }
  std::string str() const { return p_ ? std::string(p_) : std::string(); }

 private:
  char* p_ = nullptr;
};

struct PolyHandle {
  muperm_poly* p = nullptr;
  ~PolyHandle() { muperm_poly_free(p); }
};

[[noreturn]] void fail(muperm_status st) {
  std::cerr << "error (" << muperm_status_name(st) << "): " << muperm_last_error() << '\n';
  std::exit(kExitError);
}

void check(muperm_status st) {
  if (st != MUPERM_OK) fail(st);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << '\n';
    std::exit(kExitError);
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void load_poly(const std::string& path, PolyHandle& h) { check(muperm_poly_parse(read_file(path).c_str(), &h.p)); }

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_table(std::ostream& os, const std::vector<Json>& rows) {
  if (rows.empty()) return;
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
    }
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].size();
    for (const auto& row : rows) {
      if (row.contains(cols[c])) width[c] = std::max(width[c], cell(row[cols[c]]).size());
    }
  }
  auto line = [&](auto get) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::string s = get(c);
      os << s << std::string(width[c] - s.size() + (c + 1 < cols.size() ? 2 : 0), ' ');
    }
    os << '\n';
  };
  line([&](std::size_t c) { return cols[c]; });
  for (const auto& row : rows) {
    line([&](std::size_t c) { return row.contains(cols[c]) ? cell(row[cols[c]]) : std::string("-"); });
  }
}

// Writes JSON lines (or a table) to --out or stdout.
void write_records(const Output& out, const std::string& jsonl) {
  std::ofstream file;
  if (!out.path.empty()) {
    file.open(out.path);
    if (!file) {
      std::cerr << "error: cannot write " << out.path << '\n';
      std::exit(kExitError);
    }
  }
  std::ostream& os = out.path.empty() ? std::cout : file;
  if (!out.table) {
    os << jsonl;
    return;
  }
  std::vector<Json> rows;
  std::istringstream in(jsonl);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty()) rows.push_back(Json::parse(l));
  }
  print_table(os, rows);
}

int run_sweep(const Output& out, const Json& config) {
  CString detail, report;
  unsigned long long failures = 0;
  check(muperm_sweep(config.dump().c_str(), detail.out(), report.out(), &failures));
  write_records(out, detail.str());
  if (out.path.empty() && !out.table) {
    std::cout << Json{{"report", Json::parse(report.str())}}.dump() << '\n';
  } else {
    std::cerr << report.str() << '\n';
  }
  return failures == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation polynomials over F_{q^2} via the unit circle"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--table", out.table, "Human-readable table instead of JSON lines");
  app.add_option("--out", out.path, "Write records to this file");

  int k = 2;
  long long ell = 1, m = 2, u = 0, s = 1, t = 2, r = 1, n = 1, anchor = -1;
  std::string k_range = "2..4", ell_range, m_range, checks = "thm1", poly_a, poly_b, which;
  long long u_max = -2;
  bool omega_alt = false;
  unsigned long long seed = 0;

  auto* gen_thm1 = app.add_subcommand("gen-thm1", "Generate one trinomial X^d1 + X^d2 + X^d3");
  gen_thm1->add_option("--k", k)->required();
  gen_thm1->add_option("--ell", ell)->required();
  gen_thm1->add_option("--m", m)->required();
  gen_thm1->add_option("--u", u)->required();

  auto* gen_wydm = app.add_subcommand("gen-wydm", "Generate X^r (X^{(S+T)(q-1)} + X^{T(q-1)} + 1)");
  gen_wydm->add_option("--k", k)->required();
  gen_wydm->add_option("--s", s)->required();
  gen_wydm->add_option("--t", t)->required();
  gen_wydm->add_option("--r", r)->required();

  auto* gen_lh = app.add_subcommand("gen-lh", "Generate X + X^{1+r(q-1)} + X^{1+s(q-1)}");
  gen_lh->add_option("--k", k)->required();
  gen_lh->add_option("--n", n)->required();

  auto* verify = app.add_subcommand("verify", "Unit-circle criterion vs brute force for a polynomial file");
  verify->add_option("poly", poly_a)->required();

  auto* reduce = app.add_subcommand("reduce", "Rewrite X^r A(X^{q-1}) as X^s A^(q)(1/X)/A(X)");
  reduce->add_option("poly", poly_a)->required();
  reduce->add_option("--anchor", anchor, "Exponent of f to use as r");

  auto* equiv = app.add_subcommand("equiv", "Search a witness f = alpha g(beta X^n)");
  equiv->add_option("f", poly_a)->required();
  equiv->add_option("g", poly_b)->required();

  auto* lemma = app.add_subcommand("lemma-check", "Check the rho bijectivity (lemma3) or conjugation identity (lemma4)");
  lemma->add_option("which", which)->required()->check(CLI::IsMember({"lemma3", "lemma4"}));
  lemma->add_option("--k", k_range, "k or a..b");
  lemma->add_option("--ell", ell_range);
  lemma->add_option("--m", m_range);
  lemma->add_flag("--omega-alt", omega_alt, "Use w^2 in place of the canonical order-3 element");

  auto* survey = app.add_subcommand("survey-sec3", "Match every accepted trinomial against both comparison families");
  survey->add_option("--k", k_range, "k or a..b");
  survey->add_option("--ell", ell_range);
  survey->add_option("--m", m_range);
  survey->add_option("--u-max", u_max);

  auto* sweep = app.add_subcommand("sweep", "Deterministic parameter sweep");
  sweep->add_option("--k", k_range, "k or a..b");
  sweep->add_option("--ell", ell_range, "ell or a..b (default 1..2k+1)");
  sweep->add_option("--m", m_range, "m or a..b (default 1..2k+1)");
  sweep->add_option("--u-max", u_max, "Largest u (default q)");
  sweep->add_option("--checks", checks, "Comma list: thm1,proof,lemma3,lemma4,sec3-lh,sec3-wydm,props");
  sweep->add_flag("--omega-alt", omega_alt, "Use w^2 in place of the canonical order-3 element");
  sweep->add_option("--seed", seed, "Accepted for interface symmetry; sweeps are deterministic");

  CLI11_PARSE(app, argc, argv);

  auto base_config = [&] {
    Json cfg{{"k", k_range}, {"omega_alt", omega_alt}};
    if (!ell_range.empty()) cfg["ell"] = ell_range;
    if (!m_range.empty()) cfg["m"] = m_range;
    if (u_max >= -1) cfg["u_max"] = u_max;
    return cfg;
  };

  if (*gen_thm1 || *gen_wydm || *gen_lh) {
    CString rec;
    if (*gen_thm1) check(muperm_gen_thm1(k, ell, m, u, rec.out()));
    if (*gen_wydm) check(muperm_gen_wydm(k, s, t, r, rec.out()));
    if (*gen_lh) check(muperm_gen_lh(k, n, rec.out()));
    write_records(out, rec.str() + "\n");
    return 0;
  }
  if (*verify) {
    PolyHandle p;
    load_poly(poly_a, p);
    CString rep;
    check(muperm_verify(p.p, rep.out()));
    write_records(out, rep.str() + "\n");
    const Json j = Json::parse(rep.str());
    return j["agree"].is_boolean() && !j["agree"].get<bool>() ? kExitFailure : 0;
  }
  if (*reduce) {
    PolyHandle p;
    load_poly(poly_a, p);
    CString rep;
    check(muperm_rewrite(p.p, anchor, rep.out()));
    write_records(out, rep.str() + "\n");
    return 0;
  }
  if (*equiv) {
    PolyHandle f, g;
    load_poly(poly_a, f);
    load_poly(poly_b, g);
    CString w;
    check(muperm_equiv(f.p, g.p, w.out()));
    write_records(out, Json{{"witness", Json::parse(w.str())}}.dump() + "\n");
    return 0;
  }
  if (*lemma) {
    Json cfg = base_config();
    cfg["checks"] = Json::array({which});
    return run_sweep(out, cfg);
  }
  if (*survey) {
    Json cfg = base_config();
    cfg["checks"] = Json::array({"sec3-lh", "sec3-wydm"});
    return run_sweep(out, cfg);
  }
  if (*sweep) {
    Json cfg = base_config();
    Json list = Json::array();
    std::stringstream ss(checks);
    for (std::string c; std::getline(ss, c, ',');) {
      if (!c.empty()) list.push_back(c);
    }
    cfg["checks"] = list;
    return run_sweep(out, cfg);
  }
  return 0;
}
