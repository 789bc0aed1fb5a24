#include <disres/cli/parse.hpp>
#include <disres/cli/run.hpp>
#include <disres/dispersion.hpp>
#include <disres/galois.hpp>
#include <disres/hermite.hpp>
#include <disres/reduce.hpp>
#include <disres/residues.hpp>
#include <disres/telescope.hpp>

#include <nlohmann/json.hpp>

#include <sstream>

namespace disres::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Context {
  const CommandRequest& req;
  std::ostringstream text;
  Json json = Json::object();

  std::string fmt(const RatFun& f) const { return f.to_string(req.var); }
  std::string fmt(const Poly& p) const { return p.to_string(req.var); }
};

Json poly_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rat_fraction_string(c));
  return arr;
}

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json lattice_json(const IntLattice& L) {
  Json rows = Json::array();
  for (const auto& row : L.basis) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(int_json(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string vector_text(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

std::string vector_text(const std::vector<Rat>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

void lattice_text(std::ostringstream& os, const std::string& label, const IntLattice& L) {
  os << label << ":";
  if (L.empty()) os << " {}";
  for (const auto& row : L.basis) os << " " << vector_text(row);
  os << "\n";
}

std::vector<RatFun> parse_all(const CommandRequest& req) {
  std::vector<RatFun> fs;
  for (const auto& s : req.inputs) fs.push_back(parse_ratfun(s, req.var));
  return fs;
}

// Splits off polynomial parts; records the nonzero ones.
std::vector<RatFun> proper_parts(Context& ctx, const std::vector<RatFun>& fs) {
  std::vector<RatFun> out;
  std::vector<Poly> parts;
  bool any = false;
  for (const auto& f : fs) {
    auto split = proper_split(f);
    any = any || !split.polynomial_part.is_zero();
    parts.push_back(std::move(split.polynomial_part));
    out.push_back(std::move(split.proper));
  }
  if (!any) return out;
  if (fs.size() == 1) {
    ctx.json["polynomial_part"] = poly_json(parts[0]);
    ctx.text << "polynomial part (stripped): " << ctx.fmt(parts[0]) << "\n";
  } else {
    Json arr = Json::array();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      arr.push_back(poly_json(parts[i]));
      if (!parts[i].is_zero()) ctx.text << "polynomial part of input " << i + 1 << " (stripped): " << ctx.fmt(parts[i]) << "\n";
    }
    ctx.json["polynomial_part"] = std::move(arr);
  }
  return out;
}

void require_single(const CommandRequest& req) {
  if (req.inputs.size() != 1) throw SyntaxError("'" + req.command + "' takes exactly one expression", 0);
}

void cmd_hermite(Context& ctx) {
  require_single(ctx.req);
  const RatFun f = proper_parts(ctx, parse_all(ctx.req))[0];
  const HermiteList list = hermite_list(f);
  Json comps = Json::array();
  for (std::size_t k = 0; k < list.order(); ++k) {
    comps.push_back(ctx.fmt(list.components[k]));
    ctx.text << "f_" << k + 1 << " = " << ctx.fmt(list.components[k]) << "\n";
  }
  ctx.json["components"] = std::move(comps);
}

void cmd_shiftset(Context& ctx) {
  require_single(ctx.req);
  const RatFun b = parse_all(ctx.req)[0];
  if (!b.is_polynomial()) throw Error(ErrorCode::NotPolynomial, "shiftset needs a polynomial");
  const ShiftSet s = shift_set(squarefree_part(b.num()));
  Json shifts = Json::array();
  std::string t = "{";
  for (std::size_t i = 0; i < s.shifts.size(); ++i) {
    shifts.push_back(s.shifts[i]);
    t += (i ? ", " : "") + std::to_string(s.shifts[i]);
  }
  ctx.text << t << "}\n";
  ctx.json["shifts"] = std::move(shifts);
  ctx.json["dispersion"] = s.dispersion();
}

void cmd_reduce(Context& ctx) {
  const auto fs = proper_parts(ctx, parse_all(ctx.req));
  const JointReducedForms r = simple_reduction_plus(fs);
  Json items = Json::array();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    items.push_back({{"reduced", ctx.fmt(r.reduced[i])}, {"certificate", ctx.fmt(r.certificates[i])}});
    const std::string tag = fs.size() == 1 ? "" : "_" + std::to_string(i + 1);
    ctx.text << "reduced" << tag << " = " << ctx.fmt(r.reduced[i]) << "\n";
    ctx.text << "certificate" << tag << " = " << ctx.fmt(r.certificates[i]) << "\n";
  }
  if (fs.size() == 1) {
    ctx.json["reduced"] = items[0]["reduced"];
    ctx.json["certificate"] = items[0]["certificate"];
  } else {
    ctx.json["results"] = std::move(items);
  }
}

void cmd_dres(Context& ctx) {
  require_single(ctx.req);
  const RatFun f = proper_parts(ctx, parse_all(ctx.req))[0];
  const ResidueSystem sys = discrete_residues(f);
  Json pairs = Json::array();
  for (std::size_t k = 0; k < sys.order(); ++k) {
    const auto& p = sys.pairs[k];
    pairs.push_back({{"k", k + 1}, {"B", poly_json(p.B)}, {"D", poly_json(p.D)}});
    ctx.text << "k=" << k + 1 << ": B = " << ctx.fmt(p.B) << ", D = " << ctx.fmt(p.D) << "\n";
  }
  ctx.json["residues"] = std::move(pairs);
}

void cmd_dresplus(Context& ctx) {
  const auto fs = proper_parts(ctx, parse_all(ctx.req));
  const SharedResidueSystem sys = discrete_residues_plus(fs);
  ctx.json["B"] = poly_json(sys.B);
  ctx.text << "B = " << ctx.fmt(sys.B) << "\n";
  Json systems = Json::array();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    Json pairs = Json::array();
    for (std::size_t k = 0; k < sys.order(); ++k) {
      pairs.push_back({{"k", k + 1}, {"B", poly_json(sys.B)}, {"D", poly_json(sys.D[i][k])}});
      ctx.text << "f_" << i + 1 << ", k=" << k + 1 << ": D = " << ctx.fmt(sys.D[i][k]) << "\n";
    }
    systems.push_back(std::move(pairs));
  }
  ctx.json["residues"] = std::move(systems);
}

void cmd_summable(Context& ctx) {
  require_single(ctx.req);
  const RatFun f = proper_parts(ctx, parse_all(ctx.req))[0];
  const SummabilityVerdict v = is_summable(f);
  Json out = Json::object();
  out["summable"] = v.summable;
  if (v.certificate) out["certificate"] = ctx.fmt(*v.certificate);
  if (ctx.json.contains("polynomial_part")) out["polynomial_part"] = ctx.json["polynomial_part"];
  ctx.json = std::move(out);
  ctx.text << (v.summable ? "summable" : "not summable") << "\n";
  if (v.certificate) ctx.text << "certificate = " << ctx.fmt(*v.certificate) << "\n";
}

void cmd_vspace(Context& ctx) {
  const auto fs = proper_parts(ctx, parse_all(ctx.req));
  const RatMatrix basis = vspace_basis(fs);
  Json rows = Json::array();
  Json eqs = Json::array();
  ctx.text << "V basis:";
  if (basis.empty()) ctx.text << " {}";
  for (const auto& v : basis) ctx.text << " " << vector_text(v);
  ctx.text << "\n";
  ctx.text << "Galois group defining equations (eta in Q^" << fs.size() << "):\n";
  if (basis.empty()) ctx.text << "  none\n";
  for (const auto& v : basis) {
    Json r = Json::array();
    std::string eq;
    for (std::size_t i = 0; i < v.size(); ++i) {
      r.push_back(rat_fraction_string(v[i]));
      if (v[i] == 0) continue;
      const Rat mag = abs(v[i]);
      std::string term = (mag == 1 ? "" : mag.get_str() + "*") + "eta_" + std::to_string(i + 1);
      if (eq.empty()) {
        eq = v[i] < 0 ? "-" + term : term;
      } else {
        eq += (v[i] < 0 ? " - " : " + ") + term;
      }
    }
    rows.push_back(r);
    eqs.push_back(eq + " = 0");
    ctx.text << "  " << eq << " = 0\n";
  }
  ctx.json["basis"] = std::move(rows);
  ctx.json["galois_defining_equations"] = std::move(eqs);
}

void cmd_telescope(Context& ctx) {
  const auto fs = proper_parts(ctx, parse_all(ctx.req));
  std::vector<OperatorTuple> ops;
  if (ctx.req.beta) {
    ops = wspace_bounded(fs, *ctx.req.beta);
    ctx.json["beta"] = *ctx.req.beta;
    ctx.text << "W^" << *ctx.req.beta << " basis:";
  } else {
    ops = wspace_generators(fs);
    ctx.text << "W generators:";
  }
  if (ops.empty()) ctx.text << " {}";
  ctx.text << "\n";
  Json arr = Json::array();
  for (const auto& t : ops) {
    Json tuple = Json::array();
    std::string line = "(";
    for (std::size_t i = 0; i < t.ops.size(); ++i) {
      Json coeffs = Json::array();
      for (const auto& c : t.ops[i].coeffs()) coeffs.push_back(rat_fraction_string(c));
      tuple.push_back(std::move(coeffs));
      line += (i ? ", " : "") + t.ops[i].to_string();
    }
    arr.push_back(std::move(tuple));
    ctx.text << "  " << line << ")\n";
  }
  ctx.json["operators"] = std::move(arr);
}

void cmd_galois_diag(Context& ctx) {
  DiagonalSystem sys{parse_all(ctx.req)};
  const MultRelationData data = diagonal_relations(sys);
  std::vector<Rat> eps;
  for (const auto& w : data.witnesses) eps.push_back(w.eps);
  const IntLattice rel = multiplicative_relations(eps, ctx.req.trial_division_bound);
  const IntLattice group = compose_relations(data.lattice, rel);

  ctx.json["lattice"] = lattice_json(data.lattice);
  Json ws = Json::array();
  for (const auto& w : data.witnesses) ws.push_back({{"p", ctx.fmt(w.p)}, {"eps", rat_fraction_string(w.eps)}});
  ctx.json["witnesses"] = std::move(ws);
  ctx.json["relations"] = lattice_json(rel);
  ctx.json["group"] = lattice_json(group);

  lattice_text(ctx.text, "lattice", data.lattice);
  for (std::size_t j = 0; j < data.witnesses.size(); ++j) {
    ctx.text << "  e_" << j + 1 << " " << vector_text(data.lattice.basis[j]) << ": p = " << ctx.fmt(data.witnesses[j].p)
             << ", eps = " << data.witnesses[j].eps.get_str() << "\n";
  }
  lattice_text(ctx.text, "relations among eps", rel);
  lattice_text(ctx.text, "group lattice", group);
}

using Handler = void (*)(Context&);

struct Entry {
  const char* name;
  Handler fn;
};

constexpr Entry kCommands[] = {
    {"hermite", cmd_hermite},   {"shiftset", cmd_shiftset},   {"reduce", cmd_reduce},
    {"dres", cmd_dres},         {"dresplus", cmd_dresplus},   {"summable", cmd_summable},
    {"vspace", cmd_vspace},     {"telescope", cmd_telescope}, {"galois-diag", cmd_galois_diag},
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Domain: return 3;
    case ErrorKind::Internal: return 4;
  }
  return 4;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kCommands) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

CommandResult run(const CommandRequest& request) {
  CommandResult result;
  Handler handler = nullptr;
  for (const auto& e : kCommands) {
    if (request.command == e.name) handler = e.fn;
  }
  auto report = [&](int code, const std::string& name, const std::string& detail, const Json& extra) {
    result.exit_code = code;
    if (request.json) {
      Json j = {{"error", name}, {"detail", detail}};
      j.update(extra);
      result.err = j.dump() + "\n";
    } else {
      result.err = "error: " + name + ": " + detail + "\n";
    }
  };
  if (handler == nullptr) {
    report(2, "UnknownCommand", "unknown command '" + request.command + "'", Json::object());
    return result;
  }
  if (request.inputs.empty()) {
    report(2, "SyntaxError", "no input expressions", Json::object());
    return result;
  }
  try {
    Context ctx{request, {}, Json::object()};
    handler(ctx);
    result.out = request.json ? ctx.json.dump() + "\n" : ctx.text.str();
  } catch (const SyntaxError& e) {
    report(2, "SyntaxError", e.what(), {{"offset", e.offset()}});
  } catch (const IndexedError& e) {
    report(exit_code_for(e.kind()), std::string(error_name(e.code())), e.what(), {{"index", e.index()}});
  } catch (const Error& e) {
    report(exit_code_for(e.kind()), std::string(error_name(e.code())), e.what(), Json::object());
  }
  return result;
}

}  // namespace disres::cli
