#include "paracyc/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace paracyc {
namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

const json& need(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(ctx + ": missing \"" + key + "\"");
  return *it;
}

std::string need_str(const json& j, const char* key, const std::string& ctx) {
  const json& v = need(j, key, ctx);
  if (!v.is_string()) throw ParseError(ctx + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

void expect_format(const json& j, const std::string& tag, const std::string& ctx) {
  if (need_str(j, "format", ctx) != tag)
    throw ParseError(ctx + ": expected format \"" + tag + "\"");
}

std::string field_str(Field f) {
  return f.rational() ? "rational" : "gf " + std::to_string(f.p);
}

Field field_parse(const std::string& s) {
  if (s == "rational") return QQ;
  if (s.rfind("gf ", 0) == 0) {
    const std::string rest = s.substr(3);
    if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string::npos) {
      unsigned long p = std::stoul(rest);
      if (p >= 2 && p <= 0x7fffffff) return gf(static_cast<uint32_t>(p));
    }
  }
  throw ParseError("unrecognized field \"" + s + "\" (want \"rational\" or \"gf p\")");
}

// Strict literal grammar: -? digits ( / digits )? with a nonzero denominator.
// Scalar's own normalization then reduces to lowest terms / a residue.
Scalar scalar_parse(Field f, const std::string& s, const std::string& ctx) {
  auto bad = [&] { return ParseError(ctx + ": bad scalar literal \"" + s + "\""); };
  std::string::size_type i = s.empty() ? 0 : (s[0] == '-' ? 1 : 0);
  auto digits = [&](std::string::size_type from, std::string::size_type to) {
    if (from >= to) return false;
    for (auto k = from; k < to; ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits(i, s.size())) throw bad();
  } else {
    if (!digits(i, slash) || !digits(slash + 1, s.size())) throw bad();
    if (s.find_first_not_of('0', slash + 1) == std::string::npos)
      throw ParseError(ctx + ": zero denominator in \"" + s + "\"");
  }
  return Scalar::parse(f, s);
}

// --- fixture files ---------------------------------------------------------

struct SpaceTable {
  std::map<std::string, FinSpace> spaces;

  FinSpace one(const std::string& ref, const std::string& ctx) const {
    auto arrow = ref.find("->");
    if (arrow != std::string::npos)
      return hom_space(one(ref.substr(0, arrow), ctx), one(ref.substr(arrow + 2), ctx));
    auto it = spaces.find(ref);
    if (it == spaces.end()) throw ParseError(ctx + ": unknown space \"" + ref + "\"");
    return it->second;
  }

  FinSpace resolve(const std::vector<std::string>& refs, const std::string& ctx) const {
    if (refs.empty()) return FinSpace::line();
    FinSpace out = one(refs[0], ctx);
    for (size_t i = 1; i < refs.size(); ++i) out = tensor_space(out, one(refs[i], ctx));
    return out;
  }
};

json entries_of(const LinMap& m, const FinSpace& dom, const FinSpace& cod) {
  json es = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i))
      es.push_back(json::array({cod.labels[i], dom.labels[j], v.str()}));
  return es;
}

// dom/cod shapes of coefficient structure maps, with X the coefficient's
// declared space name.
std::pair<std::vector<std::string>, std::vector<std::string>> role_shape(
    const std::string& role, const std::string& X) {
  using V = std::vector<std::string>;
  if (role == "lact") return {V{"L", X}, V{X}};
  if (role == "ract") return {V{X, "L"}, V{X}};
  if (role == "blact") return {V{"B", X}, V{X}};
  if (role == "bract") return {V{X, "B"}, V{X}};
  if (role == "blcoact") return {V{X}, V{"B", X}};
  if (role == "brcoact") return {V{X}, V{X, "B"}};
  if (role == "bctr") return {V{"B->" + X}, V{X}};
  if (role == "mult") return {V{X, X}, V{X}};
  if (role == "unit") return {V{}, V{X}};
  if (role == "comult") return {V{X}, V{X, X}};
  if (role == "counit") return {V{X}, V{"L"}};
  throw ParseError("no declared shape for coefficient map \"" + role + "\"");
}

std::vector<std::string> str_list(const json& v, const std::string& ctx) {
  if (!v.is_array()) throw ParseError(ctx + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw ParseError(ctx + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::unordered_map<std::string, int> label_index(const FinSpace& s, const std::string& ctx) {
  std::unordered_map<std::string, int> ix;
  for (int i = 0; i < s.dim(); ++i)
    if (!ix.emplace(s.labels[i], i).second)
      throw ParseError(ctx + ": ambiguous basis label \"" + s.labels[i] + "\"");
  return ix;
}

LinMap map_from_json(Field f, const json& jm, const SpaceTable& tab, const std::string& ctx) {
  FinSpace dom = tab.resolve(str_list(need(jm, "dom", ctx), ctx + ".dom"), ctx);
  FinSpace cod = tab.resolve(str_list(need(jm, "cod", ctx), ctx + ".cod"), ctx);
  auto rix = label_index(cod, ctx);
  auto cix = label_index(dom, ctx);
  const json& es = need(jm, "entries", ctx);
  if (!es.is_array()) throw ParseError(ctx + ": \"entries\" must be an array");
  std::vector<std::tuple<int, int, Scalar>> triples;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
        !e[2].is_string())
      throw ParseError(ctx + ": each entry is [row-label, col-label, scalar]");
    auto ri = rix.find(e[0].get<std::string>());
    if (ri == rix.end())
      throw ParseError(ctx + ": unknown row label \"" + e[0].get<std::string>() + "\"");
    auto ci = cix.find(e[1].get<std::string>());
    if (ci == cix.end())
      throw ParseError(ctx + ": unknown column label \"" + e[1].get<std::string>() + "\"");
    triples.emplace_back(ri->second, ci->second,
                         scalar_parse(f, e[2].get<std::string>(), ctx));
  }
  return LinMap::from_entries(f, dom, cod, triples);
}

// Bind a parsed map to a structural role, insisting on the declared shape.
LinMap bind_role(const std::map<std::string, LinMap>& maps, const std::string& mname,
            const SpaceTable& tab, const std::vector<std::string>& dom,
            const std::vector<std::string>& cod, const std::string& ctx) {
  auto it = maps.find(mname);
  if (it == maps.end()) throw ParseError(ctx + ": unknown map \"" + mname + "\"");
  FinSpace ds = tab.resolve(dom, ctx), cs = tab.resolve(cod, ctx);
  if (it->second.cols() != ds.dim() || it->second.rows() != cs.dim())
    throw ParseError(ctx + ": map \"" + mname + "\" has shape " +
                     std::to_string(it->second.rows()) + "x" +
                     std::to_string(it->second.cols()) + ", expected " +
                     std::to_string(cs.dim()) + "x" + std::to_string(ds.dim()));
  return it->second.with_spaces(ds, cs);
}

// --- complex dumps ----------------------------------------------------------

json ientries_of(const LinMap& m) {
  json es = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) es.push_back(json::array({i, j, v.str()}));
  return es;
}

LinMap ientries_parse(Field f, const json& es, const FinSpace& dom, const FinSpace& cod,
                      const std::string& ctx) {
  if (!es.is_array()) throw ParseError(ctx + ": expected an entry array");
  std::vector<std::tuple<int, int, Scalar>> triples;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_string())
      throw ParseError(ctx + ": each entry is [row, col, scalar]");
    int i = e[0].get<int>(), j = e[1].get<int>();
    if (i < 0 || i >= cod.dim() || j < 0 || j >= dom.dim())
      throw ParseError(ctx + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range");
    triples.emplace_back(i, j, scalar_parse(f, e[2].get<std::string>(), ctx));
  }
  return LinMap::from_entries(f, dom, cod, triples);
}

}  // namespace

std::string fixture_to_json(const FixtureSet& fs) {
  const Bialgebroid& B = fs.B;
  SpaceTable tab{{{"B", B.carrier}, {"L", B.base.carrier}}};
  json spaces, maps;
  spaces["B"] = B.carrier.labels;
  spaces["L"] = B.base.carrier.labels;
  auto put = [&](const std::string& name, const LinMap& m, std::vector<std::string> dom,
                 std::vector<std::string> cod) {
    FinSpace ds = tab.resolve(dom, name), cs = tab.resolve(cod, name);
    if (ds.dim() != m.cols() || cs.dim() != m.rows())
      throw Error("fixture_to_json: declared shape of " + name + " does not match");
    json jm;
    jm["dom"] = dom;
    jm["cod"] = cod;
    jm["entries"] = entries_of(m, ds, cs);
    maps[name] = std::move(jm);
  };
  put("base.mult", B.base.mult, {"L", "L"}, {"L"});
  put("base.unit", B.base.unit, {}, {"L"});
  put("B.mult", B.mult, {"B", "B"}, {"B"});
  put("B.unit", B.unit, {}, {"B"});
  put("B.source", B.src, {"L"}, {"B"});
  put("B.target", B.tgt, {"L"}, {"B"});
  put("B.comult", B.comult, {"B"}, {"B", "B"});
  put("B.counit", B.counit, {"B"}, {"L"});
  json roles;
  roles["mult"] = "B.mult";
  roles["unit"] = "B.unit";
  roles["source"] = "B.source";
  roles["target"] = "B.target";
  roles["comult"] = "B.comult";
  roles["counit"] = "B.counit";
  if (B.antipode) {
    put("B.antipode", *B.antipode, {"B"}, {"B"});
    roles["antipode"] = "B.antipode";
  }
  if (B.antipode_inv) {
    put("B.antipode_inv", *B.antipode_inv, {"B"}, {"B"});
    roles["antipode_inv"] = "B.antipode_inv";
  }
  json coeffs = json::array();
  for (const auto& [name, c] : fs.coeffs) {
    if (name == "B" || name == "L" || spaces.contains(name))
      throw Error("fixture_to_json: coefficient name collides with a space: " + name);
    spaces[name] = c.obj.space().labels;
    tab.spaces[name] = c.obj.space();
    json jc, cr;
    jc["name"] = c.name;
    jc["kind"] = c.kind;
    jc["space"] = name;
    for (const auto& [role, m] : c.obj.maps) {
      auto shape = role_shape(role, name);
      std::string mname = name + "." + role;
      put(mname, m, shape.first, shape.second);
      cr[role] = mname;
    }
    jc["roles"] = std::move(cr);
    coeffs.push_back(std::move(jc));
  }
  json base;
  base["carrier"] = "L";
  base["mult"] = "base.mult";
  base["unit"] = "base.unit";
  json bj;
  bj["carrier"] = "B";
  bj["roles"] = std::move(roles);
  json j;
  j["format"] = "paracyc-fixture";
  j["name"] = fs.name;
  j["field"] = field_str(B.fld);
  j["left_sided"] = B.left_sided;
  j["spaces"] = std::move(spaces);
  j["base"] = std::move(base);
  j["bialgebroid"] = std::move(bj);
  j["coefficients"] = std::move(coeffs);
  j["maps"] = std::move(maps);
  return j.dump(2) + "\n";
}

FixtureSet fixture_from_json(const std::string& text) {
  json j = parse_text(text);
  const std::string ctx = "fixture";
  expect_format(j, "paracyc-fixture", ctx);
  Field f = field_parse(need_str(j, "field", ctx));

  SpaceTable tab;
  const json& jsp = need(j, "spaces", ctx);
  if (!jsp.is_object()) throw ParseError(ctx + ": \"spaces\" must be an object");
  for (const auto& [name, labels] : jsp.items()) {
    FinSpace s = FinSpace::of(str_list(labels, ctx + ".spaces." + name));
    label_index(s, ctx + ".spaces." + name);  // labels must be distinct
    tab.spaces[name] = std::move(s);
  }

  std::map<std::string, LinMap> maps;
  const json& jm = need(j, "maps", ctx);
  if (!jm.is_object()) throw ParseError(ctx + ": \"maps\" must be an object");
  for (const auto& [name, m] : jm.items())
    maps.emplace(name, map_from_json(f, m, tab, "map \"" + name + "\""));

  FixtureSet fs;
  fs.name = need_str(j, "name", ctx);
  Bialgebroid& B = fs.B;
  B.name = fs.name;
  B.fld = f;
  B.left_sided = j.value("left_sided", true);

  const json& jb = need(j, "base", ctx);
  std::string Lref = need_str(jb, "carrier", "base");
  B.base.fld = f;
  B.base.carrier = tab.one(Lref, "base");
  B.base.mult = bind_role(maps, need_str(jb, "mult", "base"), tab, {Lref, Lref}, {Lref}, "base");
  B.base.unit = bind_role(maps, need_str(jb, "unit", "base"), tab, {}, {Lref}, "base");

  const json& jB = need(j, "bialgebroid", ctx);
  std::string Bref = need_str(jB, "carrier", "bialgebroid");
  B.carrier = tab.one(Bref, "bialgebroid");
  const json& br = need(jB, "roles", "bialgebroid");
  auto role = [&](const char* r, std::vector<std::string> dom, std::vector<std::string> cod) {
    return bind_role(maps, need_str(br, r, "bialgebroid"), tab, dom, cod,
                std::string("role ") + r);
  };
  B.mult = role("mult", {Bref, Bref}, {Bref});
  B.unit = role("unit", {}, {Bref});
  B.src = role("source", {Lref}, {Bref});
  B.tgt = role("target", {Lref}, {Bref});
  B.comult = role("comult", {Bref}, {Bref, Bref});
  B.counit = role("counit", {Bref}, {Lref});
  if (br.contains("antipode")) B.antipode = role("antipode", {Bref}, {Bref});
  if (br.contains("antipode_inv")) B.antipode_inv = role("antipode_inv", {Bref}, {Bref});

  const json& jc = need(j, "coefficients", ctx);
  if (!jc.is_array()) throw ParseError(ctx + ": \"coefficients\" must be an array");
  for (const auto& c : jc) {
    std::string cname = need_str(c, "name", "coefficient");
    std::string cctx = "coefficient \"" + cname + "\"";
    std::string X = need_str(c, "space", cctx);
    Coefficient coeff;
    coeff.name = cname;
    coeff.kind = need_str(c, "kind", cctx);
    coeff.obj = Realized{Pres::plain(f, tab.one(X, cctx)), {}};
    const json& cr = need(c, "roles", cctx);
    if (!cr.is_object()) throw ParseError(cctx + ": \"roles\" must be an object");
    for (const auto& [r, mname] : cr.items()) {
      if (!mname.is_string()) throw ParseError(cctx + ": role \"" + r + "\" must name a map");
      auto shape = role_shape(r, X);
      coeff.obj.maps[r] =
          bind_role(maps, mname.get<std::string>(), tab, shape.first, shape.second, cctx);
    }
    if (!fs.coeffs.emplace(cname, std::move(coeff)).second)
      throw ParseError(ctx + ": duplicate coefficient \"" + cname + "\"");
  }
  return fs;
}

std::string complex_to_json(const ParaComplex& c) {
  json jsp = json::array(), jd = json::array(), js = json::array(), jt = json::array();
  for (const FinSpace& z : c.Z) jsp.push_back(z.labels);
  for (const auto& dn : c.d) {
    json row = json::array();
    for (const LinMap& m : dn) row.push_back(ientries_of(m));
    jd.push_back(std::move(row));
  }
  for (const auto& sn : c.s) {
    json row = json::array();
    for (const LinMap& m : sn) row.push_back(ientries_of(m));
    js.push_back(std::move(row));
  }
  for (const LinMap& m : c.t) jt.push_back(ientries_of(m));
  json j;
  j["format"] = "paracyc-complex";
  j["name"] = c.name;
  j["field"] = field_str(c.fld);
  j["cochain"] = c.cochain;
  j["spaces"] = std::move(jsp);
  j["d"] = std::move(jd);
  j["s"] = std::move(js);
  j["t"] = std::move(jt);
  return j.dump(2) + "\n";
}

ParaComplex complex_from_json(const std::string& text) {
  json j = parse_text(text);
  const std::string ctx = "complex";
  expect_format(j, "paracyc-complex", ctx);
  ParaComplex c;
  c.name = need_str(j, "name", ctx);
  c.fld = field_parse(need_str(j, "field", ctx));
  const json& jc = need(j, "cochain", ctx);
  if (!jc.is_boolean()) throw ParseError(ctx + ": \"cochain\" must be a boolean");
  c.cochain = jc.get<bool>();

  const json& jsp = need(j, "spaces", ctx);
  if (!jsp.is_array() || jsp.empty())
    throw ParseError(ctx + ": \"spaces\" must be a nonempty array");
  for (size_t n = 0; n < jsp.size(); ++n)
    c.Z.push_back(FinSpace::of(str_list(jsp[n], ctx + ".spaces[" + std::to_string(n) + "]")));
  int top = static_cast<int>(c.Z.size()) - 1;

  const json& jd = need(j, "d", ctx);
  const json& js = need(j, "s", ctx);
  const json& jt = need(j, "t", ctx);
  if (!jd.is_array() || static_cast<int>(jd.size()) != top + 1 || !jd[0].empty())
    throw ParseError(ctx + ": \"d\" must list degrees 1.." + std::to_string(top) +
                     " with an empty degree 0");
  if (!js.is_array() || static_cast<int>(js.size()) != top)
    throw ParseError(ctx + ": \"s\" must list degrees 0.." + std::to_string(top - 1));
  if (!jt.is_array() || static_cast<int>(jt.size()) != top + 1)
    throw ParseError(ctx + ": \"t\" must list degrees 0.." + std::to_string(top));

  c.d.resize(top + 1);
  for (int n = 1; n <= top; ++n) {
    const json& row = jd[n];
    std::string dctx = ctx + ".d[" + std::to_string(n) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != n + 1)
      throw ParseError(dctx + ": expected " + std::to_string(n + 1) + " maps");
    const FinSpace& dom = c.cochain ? c.Z[n - 1] : c.Z[n];
    const FinSpace& cod = c.cochain ? c.Z[n] : c.Z[n - 1];
    for (int k = 0; k <= n; ++k)
      c.d[n].push_back(ientries_parse(c.fld, row[k], dom, cod,
                                      dctx + "[" + std::to_string(k) + "]"));
  }
  if (top > 0) c.s.resize(top);
  for (int n = 0; n < top; ++n) {
    const json& row = js[n];
    std::string sctx = ctx + ".s[" + std::to_string(n) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != n + 1)
      throw ParseError(sctx + ": expected " + std::to_string(n + 1) + " maps");
    const FinSpace& dom = c.cochain ? c.Z[n + 1] : c.Z[n];
    const FinSpace& cod = c.cochain ? c.Z[n] : c.Z[n + 1];
    for (int k = 0; k <= n; ++k)
      c.s[n].push_back(ientries_parse(c.fld, row[k], dom, cod,
                                      sctx + "[" + std::to_string(k) + "]"));
  }
  for (int n = 0; n <= top; ++n)
    c.t.push_back(ientries_parse(c.fld, jt[n], c.Z[n], c.Z[n],
                                 ctx + ".t[" + std::to_string(n) + "]"));
  return c;
}

std::string report_to_json(const Report& r, const std::string& command) {
  json checks = json::array();
  int passed = 0;
  for (const CheckResult& c : r.checks) {
    json rec;
    rec["category"] = c.category;
    rec["name"] = c.name;
    auto at = c.name.find(" n=");
    if (at != std::string::npos) {
      int deg = 0;
      auto p = at + 3;
      bool any = false;
      while (p < c.name.size() && std::isdigit(static_cast<unsigned char>(c.name[p]))) {
        deg = deg * 10 + (c.name[p++] - '0');
        any = true;
      }
      rec["degree"] = any ? json(deg) : json(nullptr);
    } else {
      rec["degree"] = nullptr;
    }
    rec["ok"] = c.ok;
    rec["witness"] = c.witness;
    checks.push_back(std::move(rec));
    if (c.ok) ++passed;
  }
  json summary;
  summary["total"] = r.checks.size();
  summary["passed"] = passed;
  summary["failed"] = r.checks.size() - passed;
  json j;
  j["format"] = "paracyc-report";
  j["command"] = command;
  j["checks"] = std::move(checks);
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  out.flush();
  if (!out) throw ParseError("short write to " + path);
}

}  // namespace paracyc
