#include "qv/presets.hpp"

#include <map>

#include "qv/dsl.hpp"

namespace qv {

namespace {

const char* kM2 = R"(
GENERATORS: n

RELATIONS:
m1: n^2
m2: n n^* + n^* n - 1
)";

const char* kQmapM2 = R"(
GENERATORS: alpha beta gamma delta

RELATIONS:
n1: alpha^* alpha + gamma^* gamma + alpha alpha^* + beta beta^* - 1
n2: alpha^2 + beta gamma
n3: alpha^* beta + gamma^* delta + alpha gamma^* + beta delta^*
n4: alpha beta + beta delta
n5: beta^* beta + delta^* delta + gamma gamma^* + delta delta^* - 1
n6: gamma alpha + delta gamma
n7: gamma beta + delta^2

COMULT:
alpha: alpha alpha^* (x) alpha + beta beta^* (x) alpha + alpha (x) beta + alpha^* (x) gamma + alpha^* alpha (x) delta + gamma^* gamma (x) delta
beta: alpha gamma^* (x) alpha + beta delta^* (x) alpha + beta (x) beta + gamma^* (x) gamma + alpha^* beta (x) delta + gamma^* delta (x) delta
gamma: gamma alpha^* (x) alpha + delta beta^* (x) alpha + gamma (x) beta + beta^* (x) gamma + beta^* alpha (x) delta + delta^* gamma (x) delta
delta: gamma gamma^* (x) alpha + delta delta^* (x) alpha + delta (x) beta + delta^* (x) gamma + beta^* beta (x) delta + delta^* delta (x) delta

COUNIT:
alpha: 0
beta: 1
gamma: 0
delta: 0

COACTION:
n11: alpha
n12: beta
n21: gamma
n22: delta
)";

const char* kQmapPowers = R"(
GENERATORS: beta gamma delta

RELATIONS:
a1: q^4 delta^* delta + gamma^* gamma + q^4 delta delta^* + beta beta^* - 1
a2: beta gamma + q^4 delta^2
a3: beta^* beta + delta^* delta + gamma gamma^* + delta delta^* - 1
a4: gamma beta + delta^2
a5: gamma^* delta - q^2 delta^* beta + beta delta^* - q^2 delta gamma^*
a5s: delta^* gamma - q^2 beta^* delta + delta beta^* - q^2 gamma delta^*
a6: beta delta - q^2 delta beta
a7: delta gamma - q^2 gamma delta
b1: q^4 delta delta^* + beta beta^* + q^2 gamma gamma^* + q^2 delta delta^* - 1
b2: q^4 delta^* delta + gamma^* gamma + q^2 beta^* beta + q^2 delta^* delta - q^2

COMULT:
beta: q^4 delta gamma^* (x) delta - q^2 beta delta^* (x) delta + beta (x) beta + gamma^* (x) gamma - q^2 delta^* beta (x) delta + gamma^* delta (x) delta
gamma: q^4 gamma delta^* (x) delta - q^2 delta beta^* (x) delta + gamma (x) beta + beta^* (x) gamma - q^2 beta^* delta (x) delta + delta^* gamma (x) delta
delta: - q^2 gamma^* gamma (x) delta - q^2 delta delta^* (x) delta + delta (x) beta + delta^* (x) gamma + beta^* beta (x) delta + delta^* delta (x) delta

COUNIT:
beta: 1
gamma: 0
delta: 0

COACTION:
n11: - q^2 delta
n12: beta
n21: gamma
n22: delta
)";

const char* kQmapTrace = R"(
GENERATORS: beta gamma delta

RELATIONS:
t1: delta^* delta + gamma^* gamma + delta delta^* + beta beta^* - 1
t2: beta gamma + delta^2
t3: beta^* beta + delta^* delta + gamma gamma^* + delta delta^* - 1
t4: gamma beta + delta^2
t5: delta^* delta + gamma^* gamma + beta^* beta + delta^* delta - 1
t6: beta delta - delta beta
t7: delta delta^* + beta beta^* + gamma gamma^* + delta delta^* - 1
t8: delta gamma - gamma delta
t9: gamma^* delta - delta^* beta + beta delta^* - delta gamma^*

COMULT:
beta: delta gamma^* (x) delta - beta delta^* (x) delta + beta (x) beta + gamma^* (x) gamma - delta^* beta (x) delta + gamma^* delta (x) delta
gamma: gamma delta^* (x) delta - delta beta^* (x) delta + gamma (x) beta + beta^* (x) gamma - beta^* delta (x) delta + delta^* gamma (x) delta
delta: - gamma^* gamma (x) delta - delta delta^* (x) delta + delta (x) beta + delta^* (x) gamma + beta^* beta (x) delta + delta^* delta (x) delta

COUNIT:
beta: 1
gamma: 0
delta: 0

COACTION:
n11: - delta
n12: beta
n21: gamma
n22: delta
)";

const char* kQmapOmega0 = R"(
GENERATORS: beta delta

RELATIONS:
z1: beta beta^* - 1
z2: delta^2
z3: beta delta
z4: beta delta^*
z5: beta^* beta + delta^* delta + delta delta^* - 1

COMULT:
beta: beta (x) beta
delta: delta (x) beta + beta^* beta (x) delta + delta^* delta (x) delta

COUNIT:
beta: 1
delta: 0

COACTION:
n11: 0
n12: beta
n21: 0
n22: delta
)";

// Relations of Podles quantum SO(3).  Generator order fixes the term order:
// first listed is largest, so products of the form L G orient leftward.
const char* kSqo3Relations = R"(
GENERATORS: L A C G K

RELATIONS:
p01: L^* L - (1 - K)(1 - q^-2 K)
p02: L L^* - (1 - q^2 K)(1 - q^4 K)
p03: G^* G - G G^*
p04: K^2 - G^* G
p05: A^* A - K + K^2
p06: A A^* - q^2 K + q^4 K^2
p07: C^* C - K + K^2
p08: C C^* - q^2 K + q^4 K^2
p09: L K - q^4 K L
p10: G K - K G
p11: A K - q^2 K A
p12: C K - q^2 K C
p13: L G - q^4 G L
p14: L A - q^2 A L
p15: A G - q^2 G A
p16: A C - C A
p17: L G^* - q^4 G^* L
p18: A^2 - q^-1 L G
p19: A^* L - q^-1 (1 - K) C
p20: K^* - K
)";

const char* kSqo3Tail = R"(
COMULT:
A: (1 - q^2 K) (x) A + A (x) L - q A^* (x) G - K (x) A
C: - q^2 C (x) K + L (x) C - q G^* (x) C^* + C (x) (1 - K)
G: C^* (x) A + G (x) L %LG% + q^-2 C^* (x) A
K: K (x) (1 - q^2 K) + q^-1 A (x) C + q^-1 A^* (x) C^* + (1 - K) (x) K
L: - q C (x) A + L (x) L + q^2 G^* (x) G - q^-1 C (x) A

COUNIT:
L: 1
A: 0
C: 0
G: 0
K: 0

COACTION:
n11: - q A
n12: L
n21: - q G
n22: q^-1 A
)";

const char* kSo3Classical = R"(
GENERATORS: S T R

RELATIONS:
c01: S T + R^2
c02: S T - T S
c03: S R - R S
c04: T R - R T
c05: S S^* - S^* S
c06: T T^* - T^* T
c07: R R^* - R^* R
c08: S T^* - T^* S
c09: S R^* - R^* S
c10: T R^* - R^* T

COMULT:
S: 2 R T^* (x) R - 2 S R^* (x) R + S (x) S + T^* (x) T
T: 2 T R^* (x) R - 2 R S^* (x) R + T (x) S + S^* (x) T
R: S^* S (x) R - T^* T (x) R + R (x) S + R^* (x) T

COUNIT:
S: 1
T: 0
R: 0

COACTION:
n11: - R
n12: S
n21: T
n22: R
)";

const char* kCircle = R"(
GENERATORS: u

RELATIONS:
u1: u u^* - 1
u2: u^* u - 1

COMULT:
u: u (x) u

COUNIT:
u: 1

COACTION:
n11: 0
n12: u
n21: 0
n22: 0
)";

std::string sqo3_source(bool verbatim) {
  std::string tail = kSqo3Tail;
  const std::string marker = "%LG%";
  size_t at = tail.find(marker);
  tail.replace(at, marker.size(),
               verbatim ? "- q^-1 L^* (x) G" : "+ L^* (x) G");
  return std::string(kSqo3Relations) + tail;
}

std::map<std::string, Presentation> build_all() {
  std::map<std::string, Presentation> out;
  auto load = [&](const std::string& name, const std::string& src) {
    ParsedSpec spec = parse_algebra_spec(src);
    spec.pres.name = name;
    out.emplace(name, std::move(spec.pres));
  };
  load("m2", kM2);
  load("qmap-m2", kQmapM2);
  load("qmap-powers", kQmapPowers);
  load("qmap-trace", kQmapTrace);
  load("qmap-omega0", kQmapOmega0);
  load("sqo3", sqo3_source(false));
  load("sqo3-verbatim", sqo3_source(true));
  load("so3-classical", kSo3Classical);
  load("circle", kCircle);
  return out;
}

const std::map<std::string, Presentation>& all_presets() {
  static const std::map<std::string, Presentation> presets = build_all();
  return presets;
}

GensMap make_map(const char* src, const char* tgt,
                 std::initializer_list<const char*> images) {
  GensMap m;
  m.source = &builtin_presentation(src);
  m.target = &builtin_presentation(tgt);
  for (const char* e : images) m.images.push_back(parse_expression(e, *m.target));
  return m;
}

}  // namespace

const Presentation& builtin_presentation(const std::string& name) {
  const auto& ps = all_presets();
  auto it = ps.find(name);
  if (it == ps.end()) throw UnknownPreset(name);
  return it->second;
}

std::vector<std::string> builtin_preset_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : all_presets()) out.push_back(k);
  return out;
}

GensMap map_lambda_q() {
  return make_map("qmap-powers", "sqo3", {"L", "- q G", "q^-1 A"});
}

GensMap map_quotient_pi() {
  return make_map("qmap-m2", "qmap-powers",
                  {"- q^2 delta", "beta", "gamma", "delta"});
}

GensMap map_qmapm2_to_sqo3() {
  return make_map("qmap-m2", "sqo3", {"- q A", "L", "- q G", "q^-1 A"});
}

GensMap map_trace_to_so3() {
  return make_map("qmap-trace", "so3-classical", {"S", "T", "R"});
}

GensMap map_omega0_to_circle() {
  return make_map("qmap-omega0", "circle", {"u", "0"});
}

}  // namespace qv
