#include "pg/named_groups.hpp"

namespace pg::named {

const std::string_view kOrder72First = R"(# SmallGroup(72,35)
gens: a b x y
rel: a^3 = b^3 = x^2 = y^2 = 1
rel: (xa)^2 = (xb)^2 = 1
rel: ab = ba, ay = ya, by = yb
rel: (xy)^4 = 1
)";

const std::string_view kOrder72Second = R"(# SmallGroup(72,40); z = (xy)^2 is kept as a generator
gens: a b x y z
rel: a^3 = b^3 = x^2 = y^2 = z^2 = 1
rel: (xy)^2 = z
rel: ab = ba
rel: xax = a^-1, xbx = b, yay = b, yby = a, zaz = a^-1, zbz = b^-1
)";

const std::string_view kOrder72FirstCorrupted = R"(gens: a b x y
rel: a^3 = b^3 = x^2 = y^2 = 1
rel: (xa)^2 = (xb)^2 = 1
rel: ab = ba, ay = ya, by = yb
rel: (xy)^3 = 1
)";

const std::string_view kD8CentralC4 = R"(# D8 o C4, c central with c^2 = a^2
gens: a b c
rel: a^4, b^2, (ab)^2
rel: c^2 = a^2
rel: ac = ca, bc = cb
)";

namespace {

RealizedGroup build(std::string_view text, const char* label) {
  RealizedGroup r = realize(parse_presentation(text));
  r.group = r.group.with_label(label);
  return r;
}

}  // namespace

RealizedGroup order72_first() { return build(kOrder72First, "SmallGroup(72,35)"); }
RealizedGroup order72_second() { return build(kOrder72Second, "SmallGroup(72,40)"); }
Group d8_central_c4() { return build(kD8CentralC4, "D8oC4").group; }

}  // namespace pg::named
