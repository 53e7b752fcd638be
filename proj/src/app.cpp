#include "bcspline/app.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bcspline/text.hpp"

namespace bcspline {

using nlohmann::json;

OutputFormat parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  if (text == "tsv") return OutputFormat::tsv;
  throw InvalidInput("format must be text, json or tsv");
}

Level parse_level(std::string_view text) {
  if (text == "formula") return Level::formula;
  if (text == "full") return Level::full;
  throw InvalidInput("level must be formula or full");
}

json class_function_json(const ClassFunction& f) {
  json classes = json::array();
  const auto cls = conjugacy_classes(f.rank());
  for (std::size_t c = 0; c < cls.size(); ++c)
    classes.push_back({{"class", format_cycle_type(cls[c].type)}, {"value", f[c].get_str()}});
  return classes;
}

json expression_json(const CharacterExpression& e) {
  return {{"expr", format_expression(e)},
          {"coeffs",
           {{"a", e.a}, {"I", e.I}, {"b", e.b}, {"c", e.c}, {"d", e.d}, {"chi", e.chi}, {"one_offset", e.one_offset}}},
          {"dim", expression_dim(e)}};
}

namespace {

std::vector<LieType> types_of(const RunConfig& cfg) {
  if (cfg.type) return {*cfg.type};
  return {LieType::B, LieType::C};
}

std::string join_types(const std::vector<LieType>& types) {
  std::string out;
  for (LieType t : types) out += to_string(t);
  return out;
}

void require_rank(const RunConfig& cfg, int max_formula) {
  if (cfg.n < 2) throw InvalidInput("n must be at least 2");
  if (cfg.level == Level::full && cfg.n > kMaxFullRank)
    throw InvalidInput("the full level supports n <= " + std::to_string(kMaxFullRank));
  if (cfg.n > max_formula) throw InvalidInput("this command supports n <= " + std::to_string(max_formula));
}

TSet parse_tset_input(std::string_view text, int n) {
  try {
    return parse_tset(text, n);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

// Size first, then indices lexicographically.
bool tset_order(const TSet& a, const TSet& b) {
  const auto ia = a.indices(), ib = b.indices();
  if (ia.size() != ib.size()) return ia.size() < ib.size();
  return ia < ib;
}

std::string space_label(const HessenbergSpace& h) { return to_string(h.type()) + std::to_string(h.rank()) + " " + format_ideal(h); }

std::string yes_no(std::optional<bool> v) { return !v ? "-" : *v ? "yes" : "no"; }

// Space-separated columns padded to the widest entry.
std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

std::string render_tsv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) out += (c ? "\t" : "") + r[c];
    out += '\n';
  }
  return out;
}

struct SpaceCheck {
  bool left_ok = true;
  bool right_ok = true;
  std::string left_dim, right_dim;
};

SpaceCheck check_space(const HessenbergSpace& h) {
  const auto space = solve_spline_space(h);
  const TSet t = t_set(h);
  SpaceCheck c;
  const auto left = computed_char(space, Side::left);
  const auto right = computed_char(space, Side::right);
  c.left_ok = left == evaluate(formula_char(t, Side::left));
  c.right_ok = right == evaluate(formula_char(t, Side::right));
  c.left_dim = left.dim().get_str();
  c.right_dim = right.dim().get_str();
  return c;
}

std::string mismatch_note(const HessenbergSpace& h, const SpaceCheck& c) {
  std::string note = space_label(h) + ":";
  if (!c.left_ok) note += " left differs (computed dim " + c.left_dim + ")";
  if (!c.right_ok) note += " right differs (computed dim " + c.right_dim + ")";
  return note;
}

struct TableRow {
  TSet t;
  std::vector<LieType> types;
  std::string ideal;  // by-ideal rows only
  CharacterExpression left, right;
  std::optional<bool> verified;
  std::vector<std::string> notes;
};

}  // namespace

CommandResult cmd_table(const RunConfig& cfg) {
  require_rank(cfg, cfg.by_ideal ? 8 : 16);
  const int n = cfg.n;
  const auto types = types_of(cfg);
  const bool full = cfg.level == Level::full;
  std::vector<TableRow> rows;
  std::vector<HessenbergSpace> spaces;
  std::vector<int> space_row;

  if (cfg.by_ideal) {
    for (LieType type : types)
      for (const auto& h : enumerate_hessenberg(type, n)) {
        const TSet t = t_set(h);
        rows.push_back({t, {type}, format_ideal(h), formula_char(t, Side::left), formula_char(t, Side::right), {}, {}});
        if (full) {
          spaces.push_back(h);
          space_row.push_back(static_cast<int>(rows.size()) - 1);
        }
      }
  } else {
    std::vector<TSet> tsets;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) tsets.emplace_back(n, bits);
    std::sort(tsets.begin(), tsets.end(), tset_order);
    std::map<std::uint32_t, int> row_of;
    for (const auto& t : tsets) {
      std::vector<LieType> realizing;
      for (LieType type : types)
        if (tset_realizable(type, t)) realizing.push_back(type);
      if (realizing.empty()) continue;
      row_of[t.bits()] = static_cast<int>(rows.size());
      rows.push_back({t, realizing, "", formula_char(t, Side::left), formula_char(t, Side::right), {}, {}});
    }
    if (full)
      for (LieType type : types)
        for (const auto& h : enumerate_hessenberg(type, n)) {
          spaces.push_back(h);
          space_row.push_back(row_of.at(t_set(h).bits()));
        }
  }

  bool all_ok = true;
  if (full) {
    std::vector<SpaceCheck> checks(spaces.size());
    parallel_for(static_cast<int>(spaces.size()), cfg.jobs, [&](int j) { checks[j] = check_space(spaces[j]); });
    for (auto& r : rows) r.verified = true;
    for (std::size_t j = 0; j < spaces.size(); ++j) {
      auto& r = rows[space_row[j]];
      if (checks[j].left_ok && checks[j].right_ok) continue;
      r.verified = false;
      r.notes.push_back(mismatch_note(spaces[j], checks[j]));
      all_ok = false;
    }
  }

  CommandResult res;
  res.exit_code = all_ok ? 0 : 2;
  if (cfg.format == OutputFormat::json) {
    json out = {{"command", "table"}, {"n", n}, {"types", json::array()}, {"level", full ? "full" : "formula"}};
    for (LieType t : types) out["types"].push_back(to_string(t));
    json jrows = json::array();
    for (const auto& r : rows) {
      json jr = {{"tset", format_tset(r.t)},
                 {"left", expression_json(r.left)},
                 {"right", expression_json(r.right)},
                 {"dim", expression_dim(r.left)}};
      json jt = json::array();
      for (LieType t : r.types) jt.push_back(to_string(t));
      jr["types"] = jt;
      if (cfg.by_ideal) jr["ideal"] = r.ideal;
      if (r.verified) {
        jr["verified"] = *r.verified;
        jr["mismatches"] = r.notes;
      }
      jrows.push_back(jr);
    }
    out["rows"] = jrows;
    res.output = out.dump(2) + "\n";
    return res;
  }

  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header;
  if (cfg.by_ideal) header = {"type", "ideal"};
  for (const char* h : {"tset", "left_char", "right_char", "dim", "verified"}) header.emplace_back(h);
  grid.push_back(header);
  for (const auto& r : rows) {
    std::vector<std::string> line;
    if (cfg.by_ideal) line = {join_types(r.types), r.ideal};
    for (auto& s : {format_tset(r.t), format_expression(r.left), format_expression(r.right),
                    std::to_string(expression_dim(r.left)), yes_no(r.verified)})
      line.push_back(s);
    grid.push_back(line);
  }
  if (cfg.format == OutputFormat::tsv) {
    res.output = render_tsv(grid);
    return res;
  }
  res.output = render_columns(grid);
  for (const auto& r : rows)
    for (const auto& note : r.notes) res.output += "mismatch " + format_tset(r.t) + ": " + note + "\n";
  return res;
}

namespace {

struct CharSide {
  Side side;
  CharacterExpression formula;
  ClassFunction formula_values;
  std::optional<ClassFunction> computed;
  BCSymFunc frob_h, frob_s;
  PositivityReport positivity;

  std::optional<bool> matches() const {
    if (!computed) return std::nullopt;
    return *computed == formula_values;
  }
};

CharSide describe_side(const TSet& t, Side side, const std::optional<HessenbergSpace>& h, bool full) {
  CharSide s{side, formula_char(t, side), {}, {}, {}, {}, {}};
  s.formula_values = evaluate(s.formula);
  if (full) s.computed = computed_char(*h, side);
  s.frob_h = p_to_h(frobenius_bc(s.computed ? *s.computed : s.formula_values));
  s.frob_s = h_to_s(s.frob_h);
  s.positivity = h_positivity(s.frob_h);
  return s;
}

}  // namespace

CommandResult cmd_char(const RunConfig& cfg) {
  require_rank(cfg, 8);
  const int n = cfg.n;
  const bool full = cfg.level == Level::full;
  std::optional<HessenbergSpace> h;
  TSet t;
  LieType type;
  if (cfg.ideal) {
    if (!cfg.type) throw InvalidInput("--ideal needs --type");
    type = *cfg.type;
    try {
      h = parse_ideal(*cfg.ideal, type, n);
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(e.what());
    }
    t = t_set(*h);
    if (cfg.tset && parse_tset_input(*cfg.tset, n) != t)
      throw InvalidInput("--tset disagrees with the t-set " + format_tset(t) + " of the ideal");
  } else if (cfg.tset) {
    t = parse_tset_input(*cfg.tset, n);
    std::vector<LieType> candidates = cfg.type ? std::vector<LieType>{*cfg.type} : std::vector<LieType>{LieType::C, LieType::B};
    auto it = std::find_if(candidates.begin(), candidates.end(), [&](LieType c) { return tset_realizable(c, t); });
    if (it == candidates.end())
      throw InvalidInput("no Hessenberg space of type " + join_types(candidates) + " has t-set " + format_tset(t));
    type = *it;
    h = HessenbergSpace::from_tset(type, t);
  } else {
    throw InvalidInput("give --tset or --ideal");
  }

  const CharSide sides[2] = {describe_side(t, Side::left, h, full), describe_side(t, Side::right, h, full)};
  CommandResult res;
  for (const auto& s : sides)
    if (s.matches() == false) res.exit_code = 2;

  if (cfg.format == OutputFormat::json) {
    json out = {{"command", "char"}, {"type", to_string(type)}, {"n", n}, {"tset", format_tset(t)}, {"ideal", format_ideal(*h)}};
    for (const auto& s : sides) {
      json js = {{"formula", expression_json(s.formula)}};
      js["formula"]["classes"] = class_function_json(s.formula_values);
      if (s.computed) {
        js["computed"] = {{"dim", s.computed->dim().get_str()}, {"classes", class_function_json(*s.computed)}};
        js["matches"] = *s.matches();
      }
      js["frobenius"] = {{"source", s.computed ? "computed" : "formula"}, {"H", to_json(s.frob_h)}, {"S", to_json(s.frob_s)}};
      js["h_positive"] = s.positivity.positive;
      json neg = json::array();
      for (const auto& [k, c] : s.positivity.negative) neg.push_back({{"key", format_key(k)}, {"coeff", c.get_str()}});
      js["negative_terms"] = neg;
      out[to_string(s.side)] = js;
    }
    res.output = out.dump(2) + "\n";
    return res;
  }
  if (cfg.format == OutputFormat::tsv) {
    std::optional<bool> verified;
    if (full) verified = sides[0].matches().value() && sides[1].matches().value();
    res.output = render_tsv({{"tset", "left_char", "right_char", "dim", "verified"},
                             {format_tset(t), format_expression(sides[0].formula), format_expression(sides[1].formula),
                              std::to_string(expression_dim(sides[0].formula)), yes_no(verified)}});
    return res;
  }
  std::ostringstream out;
  out << "type " << to_string(type) << ", n = " << n << ", t-set " << format_tset(t) << "\n";
  out << "ideal " << format_ideal(*h) << "\n";
  for (const auto& s : sides) {
    const std::string name = to_string(s.side);
    out << name << ": " << format_expression(s.formula) << "  (dim " << expression_dim(s.formula) << ")\n";
    if (s.computed) {
      if (*s.matches())
        out << "  computed character matches\n";
      else
        out << "  computed character differs (dim " << s.computed->dim().get_str() << ")\n";
    }
    out << "  Frobenius (" << (s.computed ? "computed" : "closed form") << "), h basis: " << format_symfunc(s.frob_h) << "\n";
    out << "  Frobenius (" << (s.computed ? "computed" : "closed form") << "), s basis: " << format_symfunc(s.frob_s) << "\n";
    out << "  h-positive: " << (s.positivity.positive ? "yes" : "no");
    if (!s.positivity.negative.empty()) {
      BCSymFunc neg(n, SymBasis::H);
      for (const auto& [k, c] : s.positivity.negative) neg.add(k, c);
      out << ", negative part " << format_symfunc(neg);
    }
    out << "\n";
  }
  res.output = out.str();
  return res;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  require_rank(cfg, kMaxTableRank);
  const int n = cfg.n;
  const auto types = types_of(cfg);
  std::optional<TSet> only;
  if (cfg.tset) only = parse_tset_input(*cfg.tset, n);
  std::vector<std::pair<std::string, SuiteResult>> results;  // (type label, result)
  if (cfg.level == Level::full) {
    results.emplace_back("", suite_group_laws(n));
    results.emplace_back("", suite_lengths(n));
    results.emplace_back("", suite_relations(n));
    results.emplace_back("", suite_dot_action(n));
    results.emplace_back("", suite_frobenius(n));
    for (LieType type : types) {
      const std::string label = to_string(type);
      results.emplace_back(label, suite_roots(type, n));
      results.emplace_back(label, suite_descents(type, n, cfg.jobs));
      results.emplace_back(label, suite_dimension(type, n, cfg.jobs));
      results.emplace_back(label, suite_families(type, n, cfg.jobs));
      results.emplace_back(label, suite_characters(type, n, cfg.jobs));
      results.emplace_back(label, suite_positivity(type, n, cfg.jobs));
    }
  } else {
    results.emplace_back("", suite_frobenius(n));
    for (LieType type : types) {
      const std::string label = to_string(type);
      results.emplace_back(label, suite_formula_consistency(type, n));
      std::vector<TSet> samples;
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        const TSet t(n, bits);
        if ((!only || *only == t) && tset_realizable(type, t)) samples.push_back(t);
      }
      std::sort(samples.begin(), samples.end(), tset_order);
      std::vector<SuiteResult> parts(samples.size());
      parallel_for(static_cast<int>(samples.size()), cfg.jobs, [&](int j) { parts[j] = suite_descent_sample(type, samples[j]); });
      for (auto& p : parts) results.emplace_back(label, std::move(p));
    }
  }

  CommandResult res;
  for (const auto& [label, r] : results)
    if (!r.passed()) res.exit_code = 2;
  if (cfg.format == OutputFormat::json) {
    json suites = json::array();
    for (const auto& [label, r] : results)
      suites.push_back({{"name", r.name}, {"type", label}, {"checked", r.checked}, {"failed", r.failed}, {"failures", r.failures}});
    res.output = json{{"command", "verify"}, {"n", n}, {"suites", suites}, {"passed", res.exit_code == 0}}.dump(2) + "\n";
    return res;
  }
  if (cfg.format == OutputFormat::tsv) {
    std::vector<std::vector<std::string>> grid{{"suite", "type", "checked", "failed", "status"}};
    for (const auto& [label, r] : results)
      grid.push_back({r.name, label.empty() ? "-" : label, std::to_string(r.checked), std::to_string(r.failed), r.passed() ? "pass" : "fail"});
    res.output = render_tsv(grid);
    return res;
  }
  std::ostringstream out;
  int failed_suites = 0;
  for (const auto& [label, r] : results) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << (label.empty() ? "" : " [" + label + "]") << "  " << r.checked
        << " checks";
    if (!r.passed()) {
      ++failed_suites;
      out << ", " << r.failed << " failed";
    }
    out << "\n";
    for (const auto& f : r.failures) out << "    " << f << "\n";
  }
  out << (failed_suites ? std::to_string(failed_suites) + " of " + std::to_string(results.size()) + " suites failed"
                        : "all " + std::to_string(results.size()) + " suites passed")
      << "\n";
  res.output = out.str();
  return res;
}

CommandResult cmd_dump(const RunConfig& cfg) {
  const int n = cfg.n;
  if (n < 1 || n > kMaxTableRank) throw InvalidInput("dump supports 1 <= n <= " + std::to_string(kMaxTableRank));
  Spline rho;
  std::string name;
  try {
    const std::string& f = cfg.family;
    if (f == "t" || f == "r" || f == "g") {
      if (cfg.i == 0 || std::abs(cfg.i) > n || (f != "g" && cfg.i < 0)) throw InvalidInput("--i out of range for " + f);
      rho = f == "t" ? t_spline(cfg.i, n) : f == "r" ? r_spline(cfg.i, n) : g_spline(cfg.i, n);
      name = f + std::to_string(cfg.i);
    } else if (f == "f") {
      const auto a = parse_int_list(cfg.set);
      if (cfg.i < 1 || cfg.i > n) throw InvalidInput("--i out of range for f");
      const auto sets = unbalanced_sets(cfg.i, n);
      auto sorted = a;
      std::sort(sorted.begin(), sorted.end());
      if (std::find(sets.begin(), sets.end(), sorted) == sets.end())
        throw InvalidInput("--set must be an unbalanced subset of [±n] of size i");
      rho = f_spline(cfg.i, a, n);
      name = "f" + std::to_string(cfg.i) + "{" + join_ints(sorted, ",") + "}";
    } else if (f == "y") {
      rho = y_spline(cfg.i, cfg.k, n);
      name = "y" + std::to_string(cfg.i) + "," + std::to_string(cfg.k);
    } else if (f == "h") {
      rho = h_spline(n);
      name = "h";
    } else {
      throw InvalidInput("family must be one of t, r, f, y, g, h");
    }
    if (cfg.act) {
      const SignedPerm w(parse_int_list(*cfg.act));
      if (w.rank() != n) throw InvalidInput("--act needs a window of length n");
      rho = dot_action(w, rho);
      name = format_window(w) + " . " + name;
    }
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }

  std::vector<std::pair<std::string, mpq_class>> coeffs;
  std::string basis_name;
  if (cfg.expand) {
    HessenbergSpace h = HessenbergSpace::delta(LieType::C, n);
    if (cfg.ideal) {
      if (!cfg.type) throw InvalidInput("--ideal needs --type");
      try {
        h = parse_ideal(*cfg.ideal, *cfg.type, n);
      } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
      }
    } else if (cfg.tset) {
      const TSet t = parse_tset_input(*cfg.tset, n);
      const LieType type = cfg.type.value_or(tset_realizable(LieType::C, t) ? LieType::C : LieType::B);
      if (!tset_realizable(type, t)) throw InvalidInput("type " + to_string(type) + " cannot realize " + format_tset(t));
      h = HessenbergSpace::from_tset(type, t);
    } else if (cfg.type) {
      h = HessenbergSpace::delta(*cfg.type, n);
    }
    if (const auto v = find_violation(rho, h)) {
      const auto& g = group_table(n);
      throw InvalidInput(name + " is not a spline for " + space_label(h) + ": fails at " + format_window(g.element(v->element)) +
                         " along " + format_root(h.system().root(v->root)));
    }
    const bool delta = t_set(h).empty();
    BasisBundle basis = delta ? permutohedral_basis(n) : left_basis(h);
    basis_name = to_string(basis.role);
    std::vector<mpq_class> c;
    try {
      c = expand(rho, basis);
    } catch (const std::invalid_argument&) {
      const auto space = solve_spline_space(h);
      basis = space.basis;
      basis_name = "direct";
      c = space.coordinates(rho);
      basis.tags.clear();
      for (int coord : space.free_coords)
        basis.tags.push_back(format_window(group_table(n).element(coord / n)) + ":x" + std::to_string(coord % n + 1));
    }
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) coeffs.emplace_back(basis.tags[j], c[j]);
  }

  CommandResult res;
  const auto& g = group_table(n);
  if (cfg.format == OutputFormat::json) {
    json values = json::array();
    for (int idx = 0; idx < g.size(); ++idx)
      values.push_back({{"window", format_window(g.element(idx))}, {"value", format_poly(rho.at(idx))}});
    json out = {{"command", "dump"}, {"n", n}, {"spline", name}, {"values", values}};
    if (cfg.expand) {
      json jc = json::array();
      for (const auto& [tag, c] : coeffs) jc.push_back({{"tag", tag}, {"coeff", c.get_str()}});
      out["basis"] = basis_name;
      out["coefficients"] = jc;
    }
    res.output = out.dump(2) + "\n";
    return res;
  }
  std::string body = dump_spline(rho);
  if (cfg.format == OutputFormat::tsv) {
    res.output = "window\tvalue\n" + body;
    return res;
  }
  res.output = "# " + name + "\n" + body;
  if (cfg.expand) {
    res.output += "# coefficients in the " + basis_name + " basis\n";
    for (const auto& [tag, c] : coeffs) res.output += tag + "\t" + c.get_str() + "\n";
  }
  return res;
}

CommandResult run(const RunConfig& cfg) {
  if (cfg.jobs < 1) throw InvalidInput("--jobs must be positive");
  if (cfg.command == "table") return cmd_table(cfg);
  if (cfg.command == "char") return cmd_char(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "dump") return cmd_dump(cfg);
  throw InvalidInput("unknown command: " + cfg.command);
}

}  // namespace bcspline
