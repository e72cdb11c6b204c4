#include "fondplus/bench.hpp"

#include <algorithm>
#include <array>

#include "fondplus/translate.hpp"

namespace fondplus {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::qnp1, "qnp1"},
    {Family::qnp2, "qnp2"},
    {Family::f01_qnp1, "f01_qnp1"},
    {Family::f01_qnp2, "f01_qnp2"},
    {Family::f11_qnp1, "f11_qnp1"},
    {Family::f11_qnp2, "f11_qnp2"},
    {Family::figure1, "figure1"},
    {Family::clear, "clear"},
}};

void require_size(int n) {
  if (n < 2) throw ModelError("family size must be at least 2, got " + std::to_string(n));
}

Qnp qnp_family(int n, bool nested) {
  require_size(n);
  Qnp q;
  q.atoms = {"p"};
  for (int i = 1; i <= n; ++i) q.variables.push_back("x" + std::to_string(i));
  const auto last = static_cast<std::uint32_t>(n - 1);
  for (std::uint32_t v = 0; v <= last; ++v) q.init_numeric.push_back(NumericCondition{v, false});
  q.goal_numeric = {NumericCondition{last, true}};

  q.actions.push_back(QnpAction{"b", {Literal{0, false}}, {}, {Literal{0, true}}, {}, {}});
  for (std::uint32_t i = 0; i <= last; ++i) {
    QnpAction a;
    a.name = "a" + std::to_string(i + 1);
    a.pre = {Literal{0, true}};
    if (i > 0) a.numeric_pre.push_back(NumericCondition{i - 1, true});
    a.numeric_pre.push_back(NumericCondition{i, false});
    a.effects = {Literal{0, false}};
    if (nested && i > 0) a.inc = {i - 1};
    a.dec = {i};
    q.actions.push_back(std::move(a));
  }
  validate_qnp(q);
  return q;
}

Qnp base_qnp(Family base, int n) {
  if (base == Family::qnp1) return gen_qnp1(n);
  if (base == Family::qnp2) return gen_qnp2(n);
  throw ModelError("f01/f11 families are built on qnp1 or qnp2");
}

std::uint32_t atom_index(const CompactFond& f, std::string_view name) {
  return static_cast<std::uint32_t>(std::find(f.atoms.begin(), f.atoms.end(), name) - f.atoms.begin());
}

}  // namespace

const char* to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames)
    if (f == family) return name.data();
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames)
    if (n == name) return f;
  return std::nullopt;
}

Qnp gen_qnp1(int n) { return qnp_family(n, false); }
Qnp gen_qnp2(int n) { return qnp_family(n, true); }

CompactDocument gen_f01_compact(Family base, int n) {
  const Qnp q = base_qnp(base, n);
  DirectTranslation direct = t_direct(q);
  CompactDocument doc;
  doc.fond = std::move(direct.fond);

  const std::uint32_t p = atom_index(doc.fond, "p");
  auto& b = doc.fond.actions.front();
  b.name = "bprime";
  b.effects = {{Literal{p, true}}, {Literal{p, false}}};

  for (std::size_t v = 0; v < q.variables.size(); ++v) {
    if (direct.annotation.dec_actions[v].empty()) continue;
    NamedConstraint c;
    for (ActionId a : direct.annotation.dec_actions[v]) c.a_set.push_back(doc.fond.actions[a.index()].name);
    for (ActionId a : direct.annotation.inc_actions[v]) c.b_set.push_back(doc.fond.actions[a.index()].name);
    doc.constraints.push_back(std::move(c));
  }
  return doc;
}

CompactDocument gen_f11_compact(Family base, int n) {
  CompactDocument doc = gen_f01_compact(base, n);
  CompactFond& f = doc.fond;
  const auto q = static_cast<std::uint32_t>(f.atoms.size());
  const auto r = q + 1;
  f.atoms.push_back("q");
  f.atoms.push_back("r");

  for (auto& act : f.actions) {
    if (act.name == "bprime") continue;
    act.pre.push_back(Literal{q, true});
    std::sort(act.pre.begin(), act.pre.end());
    for (auto& alt : act.effects) {
      alt.push_back(Literal{q, false});
      std::sort(alt.begin(), alt.end());
    }
  }
  f.actions.push_back(CompactAction{"c", {Literal{q, false}}, {{Literal{q, true}, Literal{r, true}}, {Literal{q, false}, Literal{r, true}}}});
  f.actions.push_back(CompactAction{"d", {Literal{r, true}}, {{Literal{q, true}, Literal{r, false}}}});
  doc.constraints.push_back(NamedConstraint{{"bprime"}, {}});
  validate_compact(f);
  return doc;
}

FondPlusProblem gen_f01(Family base, int n) {
  const CompactDocument doc = gen_f01_compact(base, n);
  return ground(doc.fond, doc.constraints).problem;
}

FondPlusProblem gen_f11(Family base, int n) {
  const CompactDocument doc = gen_f11_compact(base, n);
  return ground(doc.fond, doc.constraints).problem;
}

FondPlusProblem figure1(int variant) {
  if (variant < 1 || variant > 8) throw ModelError("figure1 variant must be 1..8, got " + std::to_string(variant));
  const StateId s0(0), s1(1), s2(2), g(3);
  const ActionId a(0), b(1);
  ModelData d{{"s0", "s1", "s2", "g"},
              {"a", "b"},
              s0,
              {g},
              {{s0, a, s1}, {s0, a, s2}, {s1, b, s0}, {s1, b, g}, {s2, b, s0}, {s2, b, g}}};

  using C = FairnessAssumption;
  std::vector<C> cs;
  switch (variant) {
    case 1: break;
    case 2: cs = {C{{a}, {}}, C{{b}, {}}}; break;
    case 3: cs = {C{{a}, {}}}; break;
    case 4: cs = {C{{b}, {}}}; break;
    case 5: cs = {C{{a}, {b}}}; break;
    case 6: cs = {C{{a}, {}}, C{{b}, {a}}}; break;
    case 7: cs = {C{{b}, {}}, C{{a}, {b}}}; break;
    case 8: cs = {C{{a}, {b}}, C{{b}, {a}}}; break;
  }
  return FondPlusProblem(FondModel(std::move(d)), std::move(cs));
}

Qnp clear_qnp() {
  Qnp q;
  q.atoms = {"p"};
  q.variables = {"n"};
  q.init_numeric = {NumericCondition{0, false}};
  q.goal_numeric = {NumericCondition{0, true}};
  q.actions.push_back(QnpAction{"a", {Literal{0, true}}, {NumericCondition{0, false}}, {Literal{0, false}}, {}, {0}});
  q.actions.push_back(QnpAction{"b", {Literal{0, false}}, {}, {Literal{0, true}}, {}, {}});
  validate_qnp(q);
  return q;
}

std::string generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::qnp1:
      return serialize_qnp(gen_qnp1(spec.n));
    case Family::qnp2:
      return serialize_qnp(gen_qnp2(spec.n));
    case Family::f01_qnp1:
      return serialize_compact(gen_f01_compact(Family::qnp1, spec.n));
    case Family::f01_qnp2:
      return serialize_compact(gen_f01_compact(Family::qnp2, spec.n));
    case Family::f11_qnp1:
      return serialize_compact(gen_f11_compact(Family::qnp1, spec.n));
    case Family::f11_qnp2:
      return serialize_compact(gen_f11_compact(Family::qnp2, spec.n));
    case Family::figure1:
      return serialize_explicit(figure1(spec.n));
    case Family::clear:
      return serialize_qnp(clear_qnp());
  }
  throw ModelError("unknown family");
}

}  // namespace fondplus
