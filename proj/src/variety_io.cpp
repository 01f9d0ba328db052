#include "sympow/variety_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "sympow/errors.hpp"
#include "sympow/finite_field.hpp"

namespace sympow::io {

namespace {

struct Pos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Text with the original position of every character; newlines become spaces.
struct Located {
  std::string text;
  std::vector<Pos> pos;
  Pos end;

  Pos at(std::size_t offset) const { return offset < pos.size() ? pos[offset] : end; }
  [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
    const Pos p = at(offset);
    throw ParseError(msg, p.line, p.column);
  }
};

/// A field inside a stanza: [begin, end) offsets, trimmed.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string_view view(const Located& s) const { return std::string_view(s.text).substr(begin, end - begin); }
  bool empty() const { return begin == end; }
};

Span trim(const Located& s, std::size_t begin, std::size_t end) {
  while (begin < end && std::isspace(static_cast<unsigned char>(s.text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s.text[end - 1]))) --end;
  return {begin, end};
}

std::vector<Span> split(const Located& s, Span span, std::string_view seps) {
  std::vector<Span> out;
  std::size_t start = span.begin;
  for (std::size_t i = span.begin; i <= span.end; ++i) {
    if (i == span.end || seps.find(s.text[i]) != std::string_view::npos) {
      out.push_back(trim(s, start, i));
      start = i + 1;
    }
  }
  return out;
}

std::vector<Located> stanzas(std::string_view text) {
  std::vector<Located> out;
  Located cur;
  std::size_t line = 1;
  std::size_t begin = 0;
  auto flush = [&] {
    if (!cur.text.empty()) out.push_back(std::move(cur));
    cur = Located{};
  };
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(begin, end - begin);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    bool blank = true;
    for (char ch : raw) {
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    }
    if (blank) {
      flush();
    } else {
      if (!cur.text.empty()) {
        cur.text.push_back('\n');
        cur.pos.push_back({line - 1, cur.end.column});
      }
      for (std::size_t c = 0; c < raw.size(); ++c) {
        cur.text.push_back(raw[c] == '\t' ? ' ' : raw[c]);
        cur.pos.push_back({line, c + 1});
      }
      cur.end = {line, raw.size() + 1};
    }
    if (end == text.size()) break;
    begin = end + 1;
    ++line;
  }
  flush();
  return out;
}

std::uint64_t parse_uint(const Located& s, Span v, const char* what) {
  std::uint64_t value = 0;
  const auto sv = v.view(s);
  const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
  if (sv.empty() || ec != std::errc() || ptr != sv.data() + sv.size())
    s.fail(std::string("expected a non-negative integer for ") + what, v.begin);
  return value;
}

/// key=value pairs of a header separated by `;` or line breaks.
std::vector<std::pair<std::string, Span>> key_values(const Located& s, Span header) {
  std::vector<std::pair<std::string, Span>> out;
  for (const Span& item : split(s, header, ";\n")) {
    if (item.empty()) continue;
    const auto sv = item.view(s);
    const auto eq = sv.find('=');
    if (eq == std::string_view::npos) s.fail("expected key=value", item.begin);
    const Span key = trim(s, item.begin, item.begin + eq);
    const Span value = trim(s, item.begin + eq + 1, item.end);
    const std::string name(key.view(s));
    for (const auto& [k, v] : out) {
      if (k == name) s.fail("duplicate key '" + name + "'", key.begin);
    }
    out.emplace_back(name, value);
  }
  return out;
}

const Span* lookup(const std::vector<std::pair<std::string, Span>>& kv, std::string_view key) {
  for (const auto& [k, v] : kv) {
    if (k == key) return &v;
  }
  return nullptr;
}

void reject_unknown(const Located& s, const std::vector<std::pair<std::string, Span>>& kv,
                    std::initializer_list<std::string_view> known) {
  for (const auto& [k, v] : kv) {
    bool ok = false;
    for (auto name : known) ok = ok || k == name;
    if (!ok) s.fail("unknown key '" + k + "'", v.begin > k.size() ? v.begin - k.size() - 1 : v.begin);
  }
}

std::uint64_t parse_q(const Located& s, const Span& v) {
  const std::uint64_t q = parse_uint(s, v, "q");
  if (!prime_power(q)) s.fail("q must be a prime power", v.begin);
  return q;
}

poly::Polynomial parse_at(const Located& s, Span v, const poly::RingPtr& ring) {
  try {
    return poly::parse_poly(v.view(s), ring);
  } catch (const ParseError& e) {
    s.fail(e.what(), v.begin + e.column() - 1);
  } catch (const InvalidInput& e) {
    s.fail(e.what(), v.begin);
  }
}

counting::AffineVarietySpec parse_stanza(const Located& s) {
  const std::size_t marker = s.text.find("eqs:");
  if (marker == std::string::npos) s.fail("missing 'eqs:'", s.text.size());
  const auto kv = key_values(s, {0, marker});
  reject_unknown(s, kv, {"label", "q", "vars"});
  const Span* label = lookup(kv, "label");
  const Span* q = lookup(kv, "q");
  const Span* vars = lookup(kv, "vars");
  if (!label) s.fail("missing 'label='", 0);
  if (!q) s.fail("missing 'q='", 0);
  if (!vars) s.fail("missing 'vars='", 0);

  std::vector<std::string> names;
  if (!vars->empty()) {
    for (const Span& v : split(s, *vars, ",")) {
      if (v.empty()) s.fail("empty variable name", v.begin);
      names.emplace_back(v.view(s));
    }
  }
  counting::AffineVarietySpec x;
  try {
    x = counting::AffineVarietySpec::make(std::string(label->view(s)), parse_q(s, *q), names, {});
  } catch (const InvalidInput& e) {
    s.fail(e.what(), vars->begin);
  }
  for (const Span& eq : split(s, {marker + 4, s.text.size()}, ";")) {
    if (eq.empty()) continue;
    auto f = parse_at(s, eq, x.ring);
    if (!f.is_zero()) x.equations.push_back(std::move(f));
  }
  return x;
}

}  // namespace

std::vector<counting::AffineVarietySpec> parse_varieties(std::string_view text) {
  std::vector<counting::AffineVarietySpec> out;
  for (const Located& s : stanzas(text)) out.push_back(parse_stanza(s));
  if (out.empty()) throw ParseError("no variety stanza found", 1, 1);
  return out;
}

etale::ExtensionSpec parse_extension(std::string_view text) {
  const auto all = stanzas(text);
  if (all.empty()) throw ParseError("no extension found", 1, 1);
  if (all.size() > 1) all[1].fail("expected a single extension", 0);
  const Located& s = all.front();
  const auto kv = key_values(s, {0, s.text.size()});
  reject_unknown(s, kv, {"q", "r", "modulus"});
  const Span* q_span = lookup(kv, "q");
  const Span* r_span = lookup(kv, "r");
  if (!q_span) s.fail("missing 'q='", 0);
  if (!r_span) s.fail("missing 'r='", 0);
  const std::uint64_t q = parse_q(s, *q_span);
  const std::uint64_t r = parse_uint(s, *r_span, "r");
  if (r == 0 || r > 64) s.fail("r must be between 1 and 64", r_span->begin);

  const Span* m = lookup(kv, "modulus");
  if (!m) {
    try {
      return etale::ExtensionSpec::make(q, static_cast<std::uint32_t>(r));
    } catch (const InvalidInput& e) {
      s.fail(e.what(), r_span->begin);
    }
  }

  const auto [p, e] = *prime_power(q);
  const bool prime = e == 1;
  const auto ring = poly::make_ring({"t"}, prime ? Field::prime(p) : Field::rationals());
  const poly::Polynomial f = parse_at(s, *m, ring);
  if (f.is_zero() || static_cast<std::uint64_t>(f.total_degree()) != r)
    s.fail("modulus must have degree r", m->begin);
  etale::FieldPoly coeffs(r + 1, 0);
  for (const auto& term : f.terms()) {
    etale::Elem c = 0;
    if (prime) {
      c = term.coeff.residue();
    } else {
      const mpq_class& v = term.coeff.rational();
      if (v.get_den() != 1 || v < 0 || v >= mpq_class(static_cast<unsigned long>(q)))
        s.fail("coefficients must be field codes in [0, q)", m->begin);
      c = static_cast<etale::Elem>(v.get_num().get_ui());
    }
    coeffs[term.exponents[0]] = c;
  }
  try {
    return etale::ExtensionSpec::with_modulus(q, std::move(coeffs));
  } catch (const InvalidInput& err) {
    s.fail(err.what(), m->begin);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace sympow::io
