#include "sympow/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>

#include "sympow/acceptance.hpp"
#include "sympow/errors.hpp"
#include "sympow/variety_io.hpp"

namespace sympow::cli {

namespace {

using reports::Json;

std::vector<counting::AffineVarietySpec> varieties(const RunConfig& c, std::size_t default_count) {
  if (c.input_path) return io::parse_varieties(io::read_file(*c.input_path));
  std::vector<counting::AffineVarietySpec> out;
  for (std::size_t i = 0; i < default_count; ++i) out.push_back(counting::AffineVarietySpec::affine_space(c.q.value_or(2), 1));
  return out;
}

std::vector<std::pair<counting::AffineVarietySpec, counting::AffineVarietySpec>> pairs(const RunConfig& c) {
  const auto all = varieties(c, 2);
  if (all.size() % 2 != 0) throw InvalidInput("expected stanzas in pairs X, Y");
  std::vector<std::pair<counting::AffineVarietySpec, counting::AffineVarietySpec>> out;
  for (std::size_t i = 0; i < all.size(); i += 2) {
    if (all[i].q != all[i + 1].q) throw InvalidInput("paired varieties must share q");
    out.emplace_back(all[i], all[i + 1]);
  }
  return out;
}

etale::ExtensionSpec extension(const RunConfig& c) {
  if (c.input_path) return io::parse_extension(io::read_file(*c.input_path));
  return etale::ExtensionSpec::make(c.q.value_or(2), c.r.value_or(2));
}

Json sym_count(const RunConfig& c) {
  const std::size_t n = c.n.value_or(2);
  Json out = Json::array();
  for (const auto& x : varieties(c, 1)) {
    const auto inv = counting::closed_points(x, std::max<std::size_t>(n, 1), c.caps);
    const auto gf = counting::sym_count(inv, n);
    std::optional<counting::SymCountReport> oracle;
    try {
      oracle = counting::sym_count_oracle(x, n, c.caps);
    } catch (const CapExceeded&) {
    }
    out.push_back(reports::to_json(gf, oracle ? &*oracle : nullptr, counting::sym_series(inv, n)));
  }
  return out;
}

Json kunneth(const RunConfig& c) {
  Json out = Json::array();
  for (const auto& [x, y] : pairs(c)) out.push_back(reports::to_json(counting::kunneth_verify(x, y, c.n.value_or(2), c.caps)));
  return out;
}

Json tower(const RunConfig& c) {
  const std::size_t n = c.n.value_or(2);
  Json out = Json::array();
  if (c.input_path) {
    for (const auto& [x, y] : pairs(c)) out.push_back(reports::to_json(counting::tower_counts(x, y, n, c.caps)));
    return out;
  }
  const towers::Coprojection f{towers::PointedSet::generated(c.x.value_or(1), "a"),
                               towers::PointedSet::generated(c.z.value_or(1), "b")};
  out.push_back(reports::to_json(towers::theta_ladder(f, n, c.caps)));
  return out;
}

Json etale_dim(const RunConfig& c) {
  const auto l = extension(c);
  const std::size_t n = c.n.value_or(2);
  const auto rep = etale::dimension_check(l, n, c.caps);
  const auto decomposition = etale::decompose_etale(etale::build_invariants(l, n, c.caps).as_algebra(), c.caps);
  Json j = reports::to_json(rep, &decomposition);
  j["modulus"] = l.modulus_str();
  return Json::array({j});
}

Json theta_galois(const RunConfig& c) {
  const auto l = extension(c);
  Json j = reports::to_json(etale::theta_bijection_check(l, c.n.value_or(2), c.caps));
  j["modulus"] = l.modulus_str();
  return Json::array({j});
}

Json transfer_cmd(const RunConfig& c) {
  const std::size_t d = c.d.value_or(2);
  const std::size_t n = c.n.value_or(2);
  return Json::array({reports::transfer_report(d, n, c.caps), reports::to_json(transfer::lemma84_check(d, n, c.caps))});
}

Json prop81(const RunConfig& c) { return Json::array({reports::linearization_inverse_report(c.d.value_or(2), c.n.value_or(2), c.caps)}); }

Json lambda_audit(const RunConfig& c) {
  Json out = Json::array();
  if (c.x || c.z || c.n) {
    const std::size_t x = c.x.value_or(1) + 1;
    const std::size_t z = c.z.value_or(1) + 1;
    const std::size_t n = c.n.value_or(2);
    out.push_back(reports::to_json(towers::lambda_audit(x, z, n, c.seed, c.caps)));
    out.push_back(reports::to_json(towers::theta_ladder(
        {towers::PointedSet::generated(x - 1, "a"), towers::PointedSet::generated(z - 1, "b")}, n, c.caps)));
    return out;
  }
  for (const auto& s : acceptance::split_sequences(c.seed)) {
    out.push_back(reports::to_json(towers::lambda_audit(s.x, s.z, s.n, s.morphism_seed, c.caps)));
    out.push_back(reports::to_json(towers::theta_ladder(
        {towers::PointedSet::generated(s.x - 1, "a"), towers::PointedSet::generated(s.z - 1, "b")}, s.n, c.caps)));
  }
  return out;
}

Json invariant_ring(const RunConfig& c) {
  const std::vector<std::uint64_t> qs = c.q ? std::vector<std::uint64_t>{*c.q} : std::vector<std::uint64_t>{2, 3, 5};
  return Json::array({reports::invariant_ring_report(qs, c.caps)});
}

Json suite(const RunConfig& c) {
  Json out = Json::array();
  for (const auto& r : acceptance::run_all(c.seed, c.caps)) {
    Json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["anchor"] = r.anchor;
    j["cases"] = r.cases;
    j["failures"] = r.failures;
    j["detail"] = r.detail;
    j["within_time_limit"] = r.within_limit();
    j["ok"] = r.passed();
    out.push_back(j);
  }
  return out;
}

const std::map<std::string, std::function<Json(const RunConfig&)>>& table() {
  static const std::map<std::string, std::function<Json(const RunConfig&)>> t = {
      {"sym-count", sym_count},        {"kunneth", kunneth},       {"tower", tower},
      {"etale-dim", etale_dim},        {"theta-galois", theta_galois}, {"transfer", transfer_cmd},
      {"prop81", prop81},              {"lambda-audit", lambda_audit}, {"invariant-ring", invariant_ring},
      {"suite", suite},
  };
  return t;
}

void emit(const RunConfig& config, const Json& payload, std::ostream& out) {
  const std::string text = payload.dump(2) + "\n";
  if (!config.output_path) {
    out << text;
    return;
  }
  std::ofstream file(*config.output_path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write '" + *config.output_path + "'");
  file << text;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : table()) v.push_back(name);
    return v;
  }();
  return names;
}

Caps parse_caps(std::string_view spec) {
  Caps caps;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    const auto item = spec.substr(start, end - start);
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw InvalidInput("caps entries are name=value, got '" + std::string(item) + "'");
      const auto value_text = item.substr(eq + 1);
      std::uint64_t value = 0;
      const auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
      if (value_text.empty() || ec != std::errc() || ptr != value_text.data() + value_text.size())
        throw InvalidInput("bad cap value in '" + std::string(item) + "'");
      if (!caps.set(item.substr(0, eq), value)) throw InvalidInput("unknown cap '" + std::string(item.substr(0, eq)) + "'");
    }
    if (end == spec.size()) break;
    start = end + 1;
  }
  return caps;
}

Json execute(const RunConfig& config) {
  const auto it = table().find(config.command);
  if (it == table().end()) throw InvalidInput("unknown command '" + config.command + "'");
  Json reports = it->second(config);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.at("ok").get<bool>();
  Json out;
  out["command"] = config.command;
  out["reports"] = std::move(reports);
  out["ok"] = ok;
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Json payload;
  int status = 0;
  try {
    payload = execute(config);
    status = payload["ok"].get<bool>() ? 0 : 1;
  } catch (const Error& e) {
    Json error;
    error["kind"] = e.kind();
    error["message"] = e.what();
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
      error["line"] = pe->line();
      error["column"] = pe->column();
    }
    payload = Json{{"command", config.command}, {"error", error}, {"ok", false}};
    err << "sympow: " << e.what() << "\n";
    status = 2;
  }
  try {
    emit(config, payload, out);
  } catch (const Error& e) {
    err << "sympow: " << e.what() << "\n";
    return 2;
  }
  return status;
}

}  // namespace sympow::cli
