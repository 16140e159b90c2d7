#include "gefstab/io.hpp"

#include <fstream>
#include <sstream>

#include "gefstab/error.hpp"
#include "json.hpp"

namespace gefstab {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

std::string get_string(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) throw InputError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::size_t get_count(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) throw InputError(std::string("field \"") + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

ZMode parse_zmode(const json& ring) {
  if (!ring.contains("z_mode")) return ZMode::ZeroConstantTerm;
  std::string s = get_string(ring, "z_mode");
  if (s == "zero_constant_term") return ZMode::ZeroConstantTerm;
  if (s == "zero_ideal") return ZMode::ZeroIdeal;
  throw InputError("unknown z_mode \"" + s + "\"");
}

RingModel parse_ring(const json& ring) {
  std::string kind = get_string(ring, "kind");
  ZMode mode = parse_zmode(ring);
  if (kind == "monomial_subalgebra") {
    std::string z = get_string(ring, "variable");
    const json& g = field(ring, "generators");
    if (!g.is_array()) throw InputError("generators must be an array");
    std::vector<std::uint32_t> gens;
    for (const auto& e : g) {
      if (!e.is_number_integer() || e.get<long long>() < 1) throw InputError("generators must be positive integers");
      gens.push_back(e.get<std::uint32_t>());
    }
    return RingModel::monomial_subalgebra(z, gens, mode);
  }
  if (kind == "polynomial") {
    const json& v = field(ring, "variables");
    if (!v.is_array()) throw InputError("variables must be an array");
    std::vector<std::string> vars;
    for (const auto& e : v) {
      if (!e.is_string()) throw InputError("variables must be strings");
      vars.push_back(e.get<std::string>());
    }
    return RingModel::polynomial_ring(vars, mode);
  }
  throw InputError("unknown ring kind \"" + kind + "\"");
}

FracMat parse_entries(const json& entries, std::size_t rows, std::size_t cols, const VarList& vars) {
  if (!entries.is_array() || entries.size() != rows) throw InputError("entries must have " + std::to_string(rows) + " rows");
  std::vector<Fraction> data;
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != cols) throw InputError("entries row " + std::to_string(i + 1) + " must have " + std::to_string(cols) + " columns");
    for (const auto& e : row) {
      if (!e.is_string()) throw InputError("entries must be expression strings");
      auto pf = parse_fraction(e.get<std::string>(), vars);
      data.emplace_back(pf.num, pf.den);
    }
  }
  return FracMat::from(rows, cols, std::move(data));
}

json strings(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(format_canonical(p));
  return a;
}

json matrix_json(const std::vector<std::vector<std::string>>& m) { return json(m); }

json index_json(const IndexSet& I) { return json(I); }

json gef_json(const GefResult& g) {
  json a = json::array();
  for (const auto& e : g.entries) {
    json o;
    o["I"] = index_json(e.I);
    o["delta"] = format_canonical(e.delta);
    o["singular"] = e.singular;
    o["generators"] = strings(e.generators);
    a.push_back(std::move(o));
  }
  return a;
}

json plant_json(const PlantFraction& pf) {
  json o;
  o["ring"] = pf.ring.describe();
  o["inputs"] = pf.m;
  o["outputs"] = pf.n;
  o["d"] = format_canonical(pf.d);
  o["N"] = matrix_json(format_matrix(pf.N));
  return o;
}

json controller_object(const FracMat& C) {
  json o;
  o["rows"] = C.rows();
  o["cols"] = C.cols();
  o["entries"] = matrix_json(format_matrix(C));
  return o;
}

std::string text_matrix(const std::vector<std::vector<std::string>>& m, const std::string& indent) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) os << indent << "(" << i + 1 << "," << j + 1 << ") " << m[i][j] << "\n";
  return os.str();
}

std::string gef_text(const GefResult& g) {
  std::ostringstream os;
  for (const auto& e : g.entries) {
    os << "I = " << format_index_set(e.I) << "  delta = " << format_canonical(e.delta) << "\n";
    if (e.generators.empty()) os << "  <0>\n";
    for (const auto& p : e.generators) os << "  " << format_canonical(p) << "\n";
  }
  return os.str();
}

}  // namespace

PlantSpec parse_plant(const std::string& text) {
  json j = parse_json(text);
  RingModel ring = parse_ring(field(j, "ring"));
  std::size_t m = get_count(j, "inputs"), n = get_count(j, "outputs");
  return PlantSpec{ring, parse_entries(field(j, "entries"), n, m, ring.vars())};
}

PlantSpec load_plant(const std::string& path) { return parse_plant(read_file(path)); }

FracMat parse_controller(const std::string& text, const PlantSpec& plant) {
  json j = parse_json(text);
  const json& c = j.contains("controller") ? j.at("controller") : j;
  const std::size_t m = plant.P.cols(), n = plant.P.rows();
  if (get_count(c, "rows") != m || get_count(c, "cols") != n) {
    throw InputError("controller must be " + std::to_string(m) + " x " + std::to_string(n));
  }
  return parse_entries(field(c, "entries"), m, n, plant.ring.vars());
}

FracMat load_controller(const std::string& path, const PlantSpec& plant) {
  return parse_controller(read_file(path), plant);
}

std::string controller_json(const FracMat& C) { return controller_object(C).dump(2) + "\n"; }

InputTrace load_input_csv(const std::string& path, std::size_t n, std::size_t m) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty input file");
  std::vector<std::string> header;
  {
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) header.push_back(cell);
  }
  std::vector<int> u1_col(n, -1), u2_col(m, -1);
  for (std::size_t c = 0; c < header.size(); ++c) {
    for (std::size_t i = 0; i < n; ++i)
      if (header[c] == "u1_" + std::to_string(i + 1)) u1_col[i] = static_cast<int>(c);
    for (std::size_t i = 0; i < m; ++i)
      if (header[c] == "u2_" + std::to_string(i + 1)) u2_col[i] = static_cast<int>(c);
  }
  InputTrace tr;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    auto value = [&](int col) -> Rational {
      if (col < 0) return Rational(0);
      if (static_cast<std::size_t>(col) >= cells.size()) throw InputError("short row in input file");
      return rational_from_string(cells[col]);
    };
    std::vector<Rational> a, b;
    for (auto c : u1_col) a.push_back(value(c));
    for (auto c : u2_col) b.push_back(value(c));
    tr.u1.push_back(std::move(a));
    tr.u2.push_back(std::move(b));
  }
  return tr;
}

std::string gef_report(const PlantFraction& pf, const GefResult& g, ReportFormat fmt) {
  if (fmt == ReportFormat::Text) {
    std::ostringstream os;
    os << "ring: " << pf.ring.describe() << "\n" << "d = " << format_canonical(pf.d) << "\n" << gef_text(g);
    return os.str();
  }
  json o;
  o["plant"] = plant_json(pf);
  o["gef"] = gef_json(g);
  return o.dump(2) + "\n";
}

std::string synth_report(const PlantFraction& pf, const StabilizabilityResult& st, const ControllerResult* ctrl,
                         const ReportExtras& extras, ReportFormat fmt) {
  json o;
  o["plant"] = plant_json(pf);
  o["verdict"] = st.stabilizable ? "stabilizable" : "not_stabilizable";
  o["gef"] = gef_json(st.gef);
  if (!st.stabilizable) o["evidence"] = strings(st.evidence);
  if (ctrl) {
    const auto& c = ctrl->certificate;
    json cert;
    cert["sharp"] = json::array();
    for (const auto& I : c.sharp) cert["sharp"].push_back(index_json(I));
    cert["lambda"] = strings(c.lambda);
    cert["omega"] = c.omega;
    cert["a"] = strings(c.a);
    o["certificate"] = std::move(cert);
    json con = controller_object(ctrl->C);
    con["den"] = matrix_json(format_matrix(ctrl->Den));
    con["num"] = matrix_json(format_matrix(ctrl->Num));
    o["controller"] = std::move(con);
    json rep;
    rep["applied"] = ctrl->repair_applied;
    if (ctrl->repair_applied && ctrl->repair) {
      rep["I0"] = index_json(ctrl->I0);
      rep["R"] = matrix_json(format_matrix(ctrl->repair->R));
      rep["minor"] = format_canonical(ctrl->repair->minor);
    }
    o["repair"] = std::move(rep);
    o["H"] = matrix_json(format_matrix(ctrl->H));
    json ver;
    ver["well_posed"] = ctrl->verification.well_posed;
    ver["det_E_PC"] = format_fraction(ctrl->verification.det_E_PC);
    ver["stabilizing"] = ctrl->verification.stabilizing;
    if (extras.causality) {
      ver["den_z_nonsingular"] = extras.causality->den_z_nonsingular;
      ver["controller_causal"] = extras.causality->entries_causal;
      ver["plant_strictly_causal"] = extras.causality->plant_strictly_causal;
    }
    if (extras.transpose_duality) ver["transpose_duality"] = *extras.transpose_duality;
    o["verification"] = std::move(ver);
  } else if (st.certificate) {
    json cert;
    cert["sharp"] = json::array();
    for (const auto& I : st.certificate->sharp) cert["sharp"].push_back(index_json(I));
    cert["lambda"] = strings(st.certificate->lambda);
    o["certificate"] = std::move(cert);
  }
  if (extras.elapsed_ms) o["timing_ms"] = *extras.elapsed_ms;
  if (fmt == ReportFormat::Json) return o.dump(2) + "\n";

  std::ostringstream os;
  os << "ring: " << pf.ring.describe() << "\n";
  os << "verdict: " << (st.stabilizable ? "stabilizable" : "not stabilizable") << "\n";
  os << "d = " << format_canonical(pf.d) << "\n" << gef_text(st.gef);
  if (!st.stabilizable) {
    os << "sum of factors is proper; reduced basis:\n";
    for (const auto& p : st.evidence) os << "  " << format_canonical(p) << "\n";
  }
  if (ctrl) {
    const auto& c = ctrl->certificate;
    os << "omega = " << c.omega << "\n";
    for (std::size_t k = 0; k < c.sharp.size(); ++k) {
      os << "lambda" << format_index_set(c.sharp[k]) << " = " << format_canonical(c.lambda[k]) << "\n";
      os << "a" << format_index_set(c.sharp[k]) << " = " << format_canonical(c.a[k]) << "\n";
    }
    if (ctrl->repair_applied) os << "repair at I0 = " << format_index_set(ctrl->I0) << "\n";
    os << "controller:\n" << text_matrix(format_matrix(ctrl->C), "  ");
    os << "H(P,C):\n" << text_matrix(format_matrix(ctrl->H), "  ");
    os << "stabilizing: " << (ctrl->verification.stabilizing ? "yes" : "no") << "\n";
    if (extras.transpose_duality) os << "transpose duality: " << (*extras.transpose_duality ? "holds" : "fails") << "\n";
    if (extras.causality) os << "controller causal: " << (extras.causality->ok ? "yes" : "no") << "\n";
  }
  if (extras.elapsed_ms) os << "time: " << *extras.elapsed_ms << " ms\n";
  return os.str();
}

std::string verify_report(const VerificationReport& v, ReportFormat fmt) {
  std::vector<std::vector<std::string>> H = format_matrix(v.H);
  if (fmt == ReportFormat::Text) {
    std::ostringstream os;
    os << "det(E+PC) = " << format_fraction(v.det_E_PC) << "\n";
    for (std::size_t i = 0; i < v.H.rows(); ++i)
      for (std::size_t j = 0; j < v.H.cols(); ++j)
        os << "  (" << i + 1 << "," << j + 1 << ") " << (v.in_A[i * v.H.cols() + j] ? "in A    " : "NOT in A") << "  "
           << H[i][j] << "\n";
    os << "stabilizing: " << (v.stabilizing ? "yes" : "no") << "\n";
    return os.str();
  }
  json o;
  o["well_posed"] = v.well_posed;
  o["det_E_PC"] = format_fraction(v.det_E_PC);
  o["H"] = matrix_json(H);
  json in = json::array();
  for (std::size_t i = 0; i < v.H.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < v.H.cols(); ++j) row.push_back(static_cast<bool>(v.in_A[i * v.H.cols() + j]));
    in.push_back(std::move(row));
  }
  o["H_in_A"] = std::move(in);
  o["stabilizing"] = v.stabilizing;
  return o.dump(2) + "\n";
}

}  // namespace gefstab
